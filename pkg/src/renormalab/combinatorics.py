"""Real combinatorics: copy labels, words, and kneading-sequence machinery.

Conventions (quadratic frame x -> x^2 + c, critical point 0 a minimum):

* itinerary symbols are the signs of the critical orbit, -1 (left of 0),
  +1 (right), 0 (hits the critical point);
* the kneading sequence of a parameter is the sign sequence of f^k(0),
  k = 1, 2, ...;
* the signed order compares two sequences at their first difference with
  base order -1 < 0 < +1, reversed when the common prefix contains an odd
  number of -1 symbols (each passage through the left branch reverses
  orientation).  With these conventions the kneading sequence is monotone
  increasing in c on [-2, 1/4].

Tuned (star-product) sequences: if a copy with period p, signature
(a_1 .. a_{p-1}) and rescaling orientation s = prod a_j is tuned by an inner
sequence (b_1, b_2, ...), the composite sequence has a_r at positions
q p + r (r = 1..p-1) and s * b_q at positions q p.  Eventually periodic
sequences are closed under this product, which covers every target the
package bisects against (centers: pure cycles; window tips: tuned images of
the kneading of c = -2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .errors import NotAdmissible

L, C, R = -1, 0, 1


@dataclass(frozen=True)
class CopyLabel:
    """A real Mandelbrot copy: period and critical-orbit signature."""

    period: int
    signs: Tuple[int, ...]

    def __post_init__(self):
        if self.period < 2:
            raise NotAdmissible(f"copy period must be >= 2, got {self.period}")
        if len(self.signs) != self.period - 1:
            raise NotAdmissible(
                f"signature length {len(self.signs)} != period - 1 = {self.period - 1}")
        if any(s not in (-1, 1) for s in self.signs):
            raise NotAdmissible("signature entries must be +1 or -1")
        if self.signs[0] != -1:
            # the critical value c of a superattracting real parameter with
            # period >= 2 is negative
            raise NotAdmissible("first signature entry must be -1")

    @property
    def orientation(self) -> int:
        """Sign of the rescaling factor of the p-iterate: prod of signs."""
        s = 1
        for a in self.signs:
            s *= a
        return s

    @property
    def name(self) -> str:
        if self == DOUBLING:
            return "doubling"
        return f"period-{self.period}" + (
            "" if self in (PERIOD3,) else "#" + "".join("L" if a < 0 else "R" for a in self.signs))

    def to_json(self) -> dict:
        return {"period": self.period, "signature": list(self.signs)}

    @classmethod
    def from_json(cls, doc: dict) -> "CopyLabel":
        return cls(int(doc["period"]), tuple(int(s) for s in doc["signature"]))


DOUBLING = CopyLabel(2, (-1,))
PERIOD3 = CopyLabel(3, (-1, 1))
PERIOD4_PRIMITIVE = CopyLabel(4, (-1, 1, 1))

_BY_PERIOD = {2: DOUBLING, 3: PERIOD3, 4: PERIOD4_PRIMITIVE}


def label_of(spec) -> CopyLabel:
    """Coerce CLI/config shorthand to a label: 2 and 3 (and 4, meaning the
    primitive real copy) or an explicit (period, signs) pair."""
    if isinstance(spec, CopyLabel):
        return spec
    if isinstance(spec, int):
        try:
            return _BY_PERIOD[spec]
        except KeyError:
            raise NotAdmissible(
                f"no canonical label for period {spec}; give an explicit signature")
    period, signs = spec
    return CopyLabel(int(period), tuple(int(s) for s in signs))


class Word(tuple):
    """A finite sequence of copy labels (the combinatorics of an orbit)."""

    def __new__(cls, labels: Iterable):
        w = super().__new__(cls, (label_of(x) for x in labels))
        if not w:
            raise NotAdmissible("empty word")
        return w

    @property
    def period(self) -> int:
        p = 1
        for lab in self:
            p *= lab.period
        return p

    def to_json(self) -> list:
        return [lab.to_json() for lab in self]

    @classmethod
    def from_json(cls, doc: list) -> "Word":
        return cls(CopyLabel.from_json(d) for d in doc)

    def rotated(self, k: int) -> "Word":
        k %= len(self)
        return Word(self[k:] + self[:k])


# -- eventually periodic sign sequences -------------------------------------------


@dataclass(frozen=True)
class SignTarget:
    """Eventually periodic sign sequence: head then repeating cycle."""

    head: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def at(self, k: int) -> int:
        """1-indexed symbol."""
        if k <= len(self.head):
            return self.head[k - 1]
        return self.cycle[(k - len(self.head) - 1) % len(self.cycle)]

    def prefix(self, depth: int) -> Tuple[int, ...]:
        return tuple(self.at(k) for k in range(1, depth + 1))


# kneading sequence of c = -2 (window tips are tuned images of it)
ULAM_TARGET = SignTarget(head=(-1,), cycle=(1,))


def star(label: CopyLabel, inner: SignTarget) -> SignTarget:
    """Tuning on sign sequences (see module docstring)."""
    p = label.period
    s = label.orientation

    def expand(block: Sequence[int]) -> Tuple[int, ...]:
        out = []
        for b in block:
            out.extend(label.signs)
            out.append(s * b)
        return tuple(out)

    return SignTarget(head=expand(inner.head), cycle=expand(inner.cycle))


def center_target(word: Word) -> SignTarget:
    """Sign sequence of the superattracting parameter with the word's
    combinatorics (periodic of period = word.period)."""
    last = word[-1]
    t = SignTarget(head=(), cycle=last.signs + (0,))
    for lab in reversed(word[:-1]):
        t = star(lab, t)
    return t


def tip_target(word: Word) -> SignTarget:
    """Sign sequence of the tuned image of c = -2 (the window tip)."""
    t = ULAM_TARGET
    for lab in reversed(word):
        t = star(lab, t)
    return t


# -- signed order ------------------------------------------------------------------


def compare_signs(a: Sequence[int], b: Sequence[int]) -> int:
    """Signed-itinerary order on two equal-depth sign sequences: -1, 0, +1."""
    parity = 1
    for sa, sb in zip(a, b):
        if sa != sb:
            return parity if sa > sb else -parity
        if sa == -1:
            parity = -parity
    return 0


def compare_to_target(signs: Sequence[int], target: SignTarget, depth: int) -> int:
    parity = 1
    for k in range(depth):
        sa = signs[k]
        sb = target.at(k + 1)
        if sa != sb:
            return parity if sa > sb else -parity
        if sa == -1:
            parity = -parity
    return 0
