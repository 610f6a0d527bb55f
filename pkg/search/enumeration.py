"""
Cyclically reduced words of a fixed length, optionally one per symmetry orbit.

The symmetries are rotation, inversion and the eight signed permutations of
the generators; the representative of an orbit is its smallest member in the
x < y < X < Y order.
"""
from itertools import product

from words.words import ALPHABET, CyclicWord, Word, WordError, inverse_letter

SORT_KEYS = str.maketrans(ALPHABET, '0123')


def _automorphisms():
    maps = []
    for first, second in (('x', 'y'), ('y', 'x')):
        for image_x, image_y in product((first, first.upper()), (second, second.upper())):
            table = {'x': image_x, 'y': image_y, 'X': inverse_letter(image_x), 'Y': inverse_letter(image_y)}
            maps.append(str.maketrans(table))
    return maps


AUTOMORPHISMS = _automorphisms()


def sort_key(letters):
    return letters.translate(SORT_KEYS)


def orbit(letters):
    inverse = ''.join(inverse_letter(letter) for letter in reversed(letters))
    for table in AUTOMORPHISMS:
        for base in (letters, inverse):
            image = base.translate(table)
            for offset in range(len(image)):
                yield image[offset:] + image[:offset]


def canonical(letters):
    return min(orbit(letters), key=sort_key)


def reduced_with_prefix(prefix, length):
    """Reduced words of the given length extending ``prefix``, in x < y < X < Y order"""
    if len(prefix) == length:
        yield prefix
        return
    for letter in ALPHABET:
        if prefix and letter == inverse_letter(prefix[-1]):
            continue
        yield from reduced_with_prefix(prefix + letter, length)


def prefixes(length, depth=3):
    """The reduced prefixes the word space of ``length`` is split into"""
    return list(reduced_with_prefix('', min(length, depth)))


def cyclically_reduced_with_prefix(prefix, length, modulo_symmetry):
    for letters in reduced_with_prefix(prefix, length):
        if letters[-1] == inverse_letter(letters[0]):
            continue
        if modulo_symmetry and canonical(letters) != letters:
            continue
        yield CyclicWord(Word(letters))


def enumerate_cyclically_reduced(n, modulo_symmetry):
    if n < 1:
        raise WordError(f"Length must be at least 1, got {n}")
    for prefix in prefixes(n):
        yield from cyclically_reduced_with_prefix(prefix, n, modulo_symmetry)
