"""
Words in the free group F2 = <x, y>.

Letters use the ASCII alphabet 'x', 'y', 'X', 'Y' where the upper case letter
is the inverse of the lower case one. A Word is an immutable string of such
letters; most operations return freely reduced words.
"""
from dataclasses import dataclass
from itertools import product

ALPHABET = 'xyXY'
LETTER_ORDER = {letter: index for index, letter in enumerate(ALPHABET)}


class WordError(ValueError):
    """Base error for everything computed on words, axes and configurations"""


class WordParseError(WordError):
    def __init__(self, text, index):
        self.text = text
        self.index = index
        super().__init__(f"Invalid letter {text[index]!r} at index {index} (allowed: {ALPHABET})")


def inverse_letter(letter):
    return letter.swapcase()


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters, possibly unreduced."""
    letters: str = ''

    def __post_init__(self):
        for index, letter in enumerate(self.letters):
            if letter not in LETTER_ORDER:
                raise WordParseError(self.letters, index)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f"Word({self.letters!r})"

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other):
        return concat(self, other)

    def __invert__(self):
        return invert(self)

    def __pow__(self, n):
        if n < 0:
            return invert(self) ** -n
        return free_reduce(Word(self.letters * n))

    @property
    def length(self):
        return len(self.letters)

    @property
    def is_reduced(self):
        return all(
            self.letters[i + 1] != inverse_letter(self.letters[i])
            for i in range(len(self.letters) - 1)
        )

    @property
    def is_cyclically_reduced(self):
        if not self.is_reduced:
            return False
        return len(self.letters) < 2 or self.letters[-1] != inverse_letter(self.letters[0])

    def to_json(self):
        return self.letters


EMPTY = Word()


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word with a designated starting rotation."""
    core: Word

    def __post_init__(self):
        if not self.core.is_cyclically_reduced:
            raise WordError(f"{self.core.letters!r} is not cyclically reduced")

    @classmethod
    def parse(cls, text):
        return cls(parse_word(text))

    def __len__(self):
        return len(self.core)

    def __str__(self):
        return self.core.letters

    @property
    def letters(self):
        return self.core.letters

    def rotate(self, offset):
        if not self.core:
            return self
        offset %= len(self.core)
        return CyclicWord(Word(self.letters[offset:] + self.letters[:offset]))

    def letter_at(self, index):
        """Letter of the bi-infinite periodization at any integer index"""
        return self.letters[index % len(self.letters)]

    def periodic(self, lo, hi):
        """Read the bi-infinite periodization over [lo, hi)"""
        if hi <= lo:
            return EMPTY
        n = len(self.letters)
        return Word(''.join(self.letters[i % n] for i in range(lo, hi)))

    def inverse(self):
        return CyclicWord(invert(self.core))

    def to_json(self):
        return self.letters


@dataclass(frozen=True)
class CyclicDecomposition:
    """w = conjugator . core . conjugator^-1, reduced as written"""
    conjugator: Word
    core: CyclicWord

    def expand(self):
        return Word(self.conjugator.letters + self.core.letters + invert(self.conjugator).letters)

    def to_json(self):
        return {'conjugator': self.conjugator.letters, 'core': self.core.letters}


def parse_word(text):
    return Word(text)


def free_reduce(word):
    stack = []
    for letter in word.letters:
        if stack and stack[-1] == inverse_letter(letter):
            stack.pop()
        else:
            stack.append(letter)
    return Word(''.join(stack))


def cyclic_reduce(word):
    letters = word.letters
    if not word.is_reduced:
        raise WordError(f"{letters!r} must be freely reduced before cyclic reduction")
    start, end = 0, len(letters)
    while end - start >= 2 and letters[end - 1] == inverse_letter(letters[start]):
        start += 1
        end -= 1
    return CyclicDecomposition(conjugator=Word(letters[:start]), core=CyclicWord(Word(letters[start:end])))


def invert(word):
    return Word(''.join(inverse_letter(letter) for letter in reversed(word.letters)))


def concat(u, v):
    return free_reduce(Word(u.letters + v.letters))


def conjugate(g, w):
    return free_reduce(Word(g.letters + w.letters + invert(g).letters))


def commutator(u, v):
    return free_reduce(Word(u.letters + v.letters + invert(u).letters + invert(v).letters))


def is_initial_subword(prefix, word):
    return word.letters.startswith(prefix.letters)


def is_terminal_subword(suffix, word):
    return word.letters.endswith(suffix.letters)


def rotations(cyclic_word):
    return [cyclic_word.rotate(offset) for offset in range(max(len(cyclic_word), 1))]


def enumerate_reduced(length):
    """All reduced words of exactly the given length, in x < y < X < Y order"""
    if length == 0:
        yield EMPTY
        return

    def extend(prefix):
        if len(prefix) == length:
            yield Word(prefix)
            return
        for letter in ALPHABET:
            if prefix and letter == inverse_letter(prefix[-1]):
                continue
            yield from extend(prefix + letter)

    yield from extend('')


def enumerate_reduced_up_to(max_length):
    for length in range(max_length + 1):
        yield from enumerate_reduced(length)


def enumerate_all(length, alphabet=ALPHABET):
    """Every word of the given length over ``alphabet``, reduced or not"""
    for letters in product(alphabet, repeat=length):
        yield Word(''.join(letters))
