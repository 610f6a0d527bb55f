"""
Maximal agreements of the periodization of W with its own shifts, and the
covering configurations they combine into.
"""
from dataclasses import dataclass

from overlaps.tripods import Meet
from words.words import CyclicWord, Word


@dataclass(frozen=True)
class MatchRun:
    """W~[i] == W~[i + shift] for lo <= i < hi, and for neither neighbour"""
    shift: int
    lo: int
    hi: int
    label: Word

    @property
    def interval(self):
        return (self.lo, self.hi)

    def __len__(self):
        return self.hi - self.lo

    def to_json(self):
        return {'shift': self.shift, 'interval': [self.lo, self.hi], 'label': self.label.letters}


@dataclass(frozen=True)
class SearchConfig:
    """
    Two runs covering the copy of W that starts at ``rotation``, meeting at
    a point. Intervals are relative to that copy.
    """
    W: CyclicWord
    rotation: int
    run_u: MatchRun
    run_v: MatchRun

    covers = True
    uv_meet = Meet(Meet.POINT)

    @property
    def shift_u(self):
        return self.run_u.shift

    @property
    def shift_v(self):
        return self.run_v.shift

    @property
    def u_interval(self):
        return (0, len(self.run_u))

    @property
    def v_interval(self):
        return (len(self.run_u), len(self.run_u) + len(self.run_v))

    @property
    def excess(self):
        return len(self.run_u) + len(self.run_v) - len(self.W)

    @property
    def copy(self):
        return self.W.rotate(self.rotation)

    def to_json(self):
        return {
            'rotation': self.rotation,
            'U': self.run_u.to_json(),
            'V': self.run_v.to_json(),
            'u_interval': list(self.u_interval),
            'v_interval': list(self.v_interval),
            'covers': self.covers,
            'excess': self.excess,
            'meet': self.uv_meet.to_json(),
        }


def agreement(letters, shift):
    n = len(letters)
    return [letters[i] == letters[(i + shift) % n] for i in range(n)]


def coinciding_shifts(W):
    """Shifts that map the periodization onto itself, i.e. W is a proper power"""
    return [t for t in range(1, len(W)) if all(agreement(W.letters, t))]


def match_runs(W):
    letters = W.letters
    n = len(letters)
    runs = []
    for shift in range(1, n):
        agree = agreement(letters, shift)
        if all(agree):
            continue
        # start scanning right after a mismatch so no run wraps the scan
        start = agree.index(False) + 1
        i = 0
        while i < n:
            if not agree[(start + i) % n]:
                i += 1
                continue
            j = i
            while agree[(start + j) % n]:
                j += 1
            lo = (start + i) % n
            runs.append(MatchRun(shift, lo, lo + j - i, W.periodic(lo, lo + j - i)))
            i = j
    return sorted(runs, key=lambda run: (run.shift, run.lo))


def configs_for(W):
    """Ordered pairs of runs placed end to end that cover a whole copy of W"""
    n = len(W)
    runs = match_runs(W)
    configs = []
    for run_u in runs:
        for run_v in runs:
            if run_v.lo != run_u.hi % n or len(run_u) + len(run_v) < n:
                continue
            placed_v = MatchRun(run_v.shift, run_u.hi, run_u.hi + len(run_v), run_v.label)
            configs.append(SearchConfig(W=W, rotation=run_u.lo, run_u=run_u, run_v=placed_v))
    return configs
