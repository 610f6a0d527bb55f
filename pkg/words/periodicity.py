"""
Periodicity decompositions U = B C^k and primitive roots.
"""
from dataclasses import dataclass

from .words import Word, WordError, is_terminal_subword


class PeriodicityError(WordError):
    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


@dataclass(frozen=True)
class Periodicity:
    B: Word
    C: Word
    k: int

    def expand(self):
        return Word(self.B.letters + self.C.letters * self.k)

    def union(self):
        """The overlap union B C^(k+1) of u with its copy shifted by L(C)"""
        return Word(self.B.letters + self.C.letters * (self.k + 1))

    def to_json(self):
        return {'B': self.B.letters, 'C': self.C.letters, 'k': self.k}


def first_period_mismatch(letters, shift):
    for i in range(len(letters) - shift):
        if letters[i] != letters[i + shift]:
            return i
    return None


def periodicity_decompose(u, shift):
    letters = u.letters
    if not 0 < shift < len(letters):
        raise PeriodicityError(f"Shift {shift} must satisfy 0 < shift < {len(letters)}")
    mismatch = first_period_mismatch(letters, shift)
    if mismatch is not None:
        raise PeriodicityError(
            f"{letters!r} is not {shift}-periodic: letters at {mismatch} and {mismatch + shift} differ",
            index=mismatch,
        )
    k = len(letters) // shift
    head = len(letters) - k * shift
    result = Periodicity(B=Word(letters[:head]), C=Word(letters[-shift:]), k=k)
    assert is_terminal_subword(result.B, result.C)
    return result


def periodic_union(u, shift):
    return periodicity_decompose(u, shift).union()


def smallest_period(word):
    letters = word.letters
    for period in range(1, len(letters) + 1):
        if first_period_mismatch(letters, period) is None:
            return period
    return 0


def primitive_root(c, cyclically_closed=False):
    if not c:
        raise WordError("The empty word has no primitive root")
    if cyclically_closed and not c.is_cyclically_reduced:
        raise WordError(f"{c.letters!r} is not cyclically reduced")
    letters = c.letters
    # the first nontrivial self-occurrence in cc is the root length, and it always divides L(c)
    root = (letters + letters).find(letters, 1)
    return Word(letters[:root]), len(letters) // root


