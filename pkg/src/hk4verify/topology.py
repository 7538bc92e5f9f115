"""Betti tables of compact 8-real-dimensional spaces and hyperkahler 4-fold
Chern arithmetic.

A :class:`BettiTable` always carries all nine entries b0..b8; spaces of lower
real dimension (surfaces, exceptional fibers) are represented with zeros in
the missing top degrees, so Euler characteristics and degree-shifting
transport act on total data.  The ``strict_hk`` flag opts into the invariants
of a compact hyperkahler 4-fold; it is a flag rather than unconditional so
that quotient spaces, which are not manifolds, fit in the same type.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class InadmissiblePairError(ValueError):
    """A (b2, b3) pair that no compact hyperkahler 4-fold can carry."""


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers b0..b8; shorter input sequences are zero-padded."""

    b: tuple[int, ...]
    strict_hk: bool = False

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.b)
        if len(entries) > 9:
            raise ValueError(f"at most 9 Betti numbers expected, got {len(entries)}")
        entries = entries + (0,) * (9 - len(entries))
        if any(x < 0 for x in entries):
            raise ValueError(f"negative Betti number in {entries}")
        object.__setattr__(self, "b", entries)
        if self.strict_hk:
            self._check_strict()

    def _check_strict(self) -> None:
        b = self.b
        if b[0] != 1 or b[8] != 1 or b[1] != 0 or b[7] != 0:
            raise ValueError(f"not a hyperkahler 4-fold table: {b}")
        if any(b[j] != b[8 - j] for j in range(9)):
            raise ValueError(f"Poincare duality fails: {b}")
        if b[3] % 2 != 0:
            raise ValueError(f"odd b3 = {b[3]} is impossible on a hyperkahler 4-fold")

    def __getitem__(self, j: int) -> int:
        return self.b[j]


class SurfaceKind(Enum):
    K3 = "K3"
    TORUS2 = "Torus2"


_SURFACE_TRIPLES = {
    SurfaceKind.K3: (1, 0, 22),
    SurfaceKind.TORUS2: (1, 4, 6),
}


@dataclass(frozen=True)
class SurfaceProfile:
    """A fixed-locus surface component: a K3 surface or a 2-dimensional
    complex torus, with its Betti triple (b0, b1, b2)."""

    kind: SurfaceKind
    betti: tuple[int, int, int]

    def __post_init__(self) -> None:
        expected = _SURFACE_TRIPLES[self.kind]
        triple = tuple(int(x) for x in self.betti)
        if triple != expected:
            raise ValueError(
                f"{self.kind.value} surface must have Betti triple {expected}, "
                f"got {triple}"
            )
        object.__setattr__(self, "betti", triple)

    @classmethod
    def of(cls, kind: SurfaceKind) -> "SurfaceProfile":
        return cls(kind, _SURFACE_TRIPLES[kind])

    def full_betti(self) -> tuple[int, int, int, int, int]:
        """All five Betti numbers b0..b4, completing the triple by duality."""
        b0, b1, b2 = self.betti
        return (b0, b1, b2, b1, b0)

    def euler_characteristic(self) -> int:
        b0, b1, b2 = self.betti
        return 2 * b0 - 2 * b1 + b2


K3_SURFACE = SurfaceProfile.of(SurfaceKind.K3)
TORUS_SURFACE = SurfaceProfile.of(SurfaceKind.TORUS2)


@dataclass(frozen=True)
class ChernData:
    """The Chern numbers (integral of c2^2, integral of c4) of a 4-fold."""

    c2sq: int
    c4: int

    def hk_identity_defect(self) -> int:
        """3*c2sq - c4 - 2160; zero for every compact hyperkahler 4-fold."""
        return 3 * self.c2sq - self.c4 - 2160


def chern_from_betti(b2: int, b3: int) -> ChernData:
    """Chern numbers of a hyperkahler 4-fold from its second and third Betti
    numbers:

        c4    = 48 + 12*b2 - 3*b3
        c2sq  = 736 +  4*b2 -   b3

    Total on nonnegative pairs even when the result is geometrically
    unrealizable (c4 may come out negative), so candidate sweeps never crash
    on junk rows.
    """
    if b2 < 0 or b3 < 0:
        raise ValueError(f"Betti numbers must be nonnegative, got ({b2}, {b3})")
    return ChernData(c2sq=736 + 4 * b2 - b3, c4=48 + 12 * b2 - 3 * b3)


def betti_from_pair(b2: int, b3: int) -> BettiTable:
    """Complete (b2, b3) to the full table of a hyperkahler 4-fold.

    b4 is forced by the Salamon relation b4 + b3 - 10*b2 = 46, and the
    remaining degrees follow from Poincare duality, simple connectedness and
    b1 = 0.  Raises InadmissiblePairError when b3 is odd or b4 would be
    negative.
    """
    if b2 < 0 or b3 < 0:
        raise InadmissiblePairError(
            f"Betti numbers must be nonnegative, got ({b2}, {b3})"
        )
    if b3 % 2 != 0:
        raise InadmissiblePairError(f"b3 must be even, got {b3}")
    b4 = 46 + 10 * b2 - b3
    if b4 < 0:
        raise InadmissiblePairError(
            f"Salamon relation forces b4 = 46 + 10*{b2} - {b3} = {b4} < 0"
        )
    return BettiTable((1, 0, b2, b3, b4, b3, b2, 0, 1), strict_hk=True)


def salamon_defect(bt: BettiTable) -> int:
    """b4 + b3 - 10*b2 - 46; zero exactly when the Salamon relation holds."""
    return bt[4] + bt[3] - 10 * bt[2] - 46


def euler_characteristic(bt: BettiTable) -> int:
    """Topological Euler characteristic: the alternating sum of all entries."""
    return sum(b if j % 2 == 0 else -b for j, b in enumerate(bt.b))
