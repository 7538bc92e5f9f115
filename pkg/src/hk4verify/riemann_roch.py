"""Riemann-Roch in the characteristic value, its discriminant, and the
rational-square filter on Betti candidates.

For a line bundle L on a compact hyperkahler 4-fold W, the holomorphic Euler
characteristic is a quadratic polynomial in the characteristic value
lambda(L) = 48 * int(exp L) / int(c2 exp L):

    chi(W, L) = chi(W, O) + (7/2 c2sq - 2 c4) lambda / 720
                          + (7/8 c2sq - c4/2) lambda^2 / 720

On such a W, chi(W, O) = 3 and 3*c2sq - c4 = 2160, which collapses the
polynomial to a function of c4 alone (rr_chi_hk).  Existence of a rational
lambda with chi = 0 then forces the discriminant to be a rational square,
which very few values of c4 survive; filter_candidates applies that test to
(b2, b3) candidates via their Chern numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import rational_sqrt_exact, solve_rational_quadratic
from .topology import ChernData, chern_from_betti

#: chi(W, O) of a compact hyperkahler 4-fold, equal to 2160/720.
CHI_TRIVIAL_BUNDLE = Fraction(3)


@dataclass(frozen=True)
class RRPolynomial:
    """chi as a polynomial constant + linear*x + quadratic*x^2 in the
    characteristic value, specialized to a hyperkahler 4-fold."""

    constant: Fraction
    linear: Fraction
    quadratic: Fraction

    def __post_init__(self) -> None:
        if self.constant != CHI_TRIVIAL_BUNDLE:
            raise ValueError(
                f"constant term must be {CHI_TRIVIAL_BUNDLE} on a hyperkahler "
                f"4-fold, got {self.constant}"
            )

    @classmethod
    def for_c4(cls, c4: int) -> "RRPolynomial":
        return cls(
            constant=CHI_TRIVIAL_BUNDLE,
            linear=Fraction(7, 2) - Fraction(c4, 864),
            quadratic=Fraction(7, 8) - Fraction(c4, 3456),
        )

    def evaluate(self, x: Fraction) -> Fraction:
        return self.constant + self.linear * x + self.quadratic * x * x

    def discriminant(self) -> Fraction:
        """linear^2 - 4 * quadratic * constant, the usual quadratic
        discriminant (constant = 3, hence the factor 12)."""
        return self.linear * self.linear - 12 * self.quadratic

    def rational_roots(self) -> set[Fraction]:
        return solve_rational_quadratic(self.quadratic, self.linear, self.constant)


@dataclass(frozen=True)
class CandidateRecord:
    """Outcome of the rational-square filter on one (b2, b3) candidate."""

    b2: int
    b3: int
    chern: ChernData
    delta: Fraction
    delta_sqrt: Fraction | None
    lambda_roots: frozenset[Fraction]
    accepted: bool

    def __post_init__(self) -> None:
        if self.accepted != bool(self.lambda_roots):
            raise ValueError("accepted must mirror root-set nonemptiness")
        if self.delta_sqrt is not None and self.delta_sqrt**2 != self.delta:
            raise ValueError("delta_sqrt does not square to delta")


def characteristic_value(exp_integral: Fraction, c2_exp_integral: Fraction) -> Fraction:
    """48 * int(exp L) / int(c2 exp L), or 0 when the ratio is undefined."""
    if c2_exp_integral == 0:
        return Fraction(0)
    return 48 * exp_integral / c2_exp_integral


def rr_chi_full(c2sq: int, c4: int, chi_o: Fraction, lam: Fraction) -> Fraction:
    """chi(W, L) from both Chern numbers, chi(W, O) and the characteristic
    value, with no hyperkahler constraint assumed."""
    linear = (Fraction(7, 2) * c2sq - 2 * c4) / 720
    quadratic = (Fraction(7, 8) * c2sq - Fraction(1, 2) * c4) / 720
    return chi_o + linear * lam + quadratic * lam * lam


def rr_chi_hk(c4: int, lam: Fraction) -> Fraction:
    """chi(W, L) on a hyperkahler 4-fold:

        3 + (7/2 - c4/864) lambda + (7/8 - c4/3456) lambda^2

    Agrees with rr_chi_full whenever 3*c2sq - c4 = 2160 and chi(W, O) = 3.
    """
    return RRPolynomial.for_c4(c4).evaluate(lam)


def delta(c4: int) -> Fraction:
    """Discriminant of rr_chi_hk as a quadratic in lambda:

        (7/2 - c4/864)^2 - 12 (7/8 - c4/3456)

    chi = 0 has a rational solution only if this is a rational square.
    """
    return RRPolynomial.for_c4(c4).discriminant()


def admits_zero_chi(c4: int) -> set[Fraction]:
    """All rational lambda with rr_chi_hk(c4, lambda) == 0.

    Empty when delta(c4) is not a rational square, and also at the degenerate
    c4 = 3024 where both non-constant coefficients vanish and chi is the
    constant 3.
    """
    return RRPolynomial.for_c4(c4).rational_roots()


def evaluate_candidate(b2: int, b3: int) -> CandidateRecord:
    """Run the full filter on one nonnegative (b2, b3) pair."""
    chern = chern_from_betti(b2, b3)
    d = delta(chern.c4)
    roots = admits_zero_chi(chern.c4)
    return CandidateRecord(
        b2=b2,
        b3=b3,
        chern=chern,
        delta=d,
        delta_sqrt=rational_sqrt_exact(d),
        lambda_roots=frozenset(roots),
        accepted=bool(roots),
    )


def filter_candidates(pairs: list[tuple[int, int]]) -> list[CandidateRecord]:
    """Filter each (b2, b3) pair, preserving input order.

    A candidate is accepted iff chi = 0 actually has a rational solution for
    its c4, which is strictly stronger than delta-squareness at the single
    degenerate value c4 = 3024.
    """
    return [evaluate_candidate(b2, b3) for b2, b3 in pairs]
