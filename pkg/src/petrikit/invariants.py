"""Minimal-support P- and T-semiflows by integer Farkas elimination.

The elimination works on the table [M | E]: for every matrix column,
rows with opposite signs are combined in positive integer multiples so
the column cancels, each new row is divided by the gcd of its entries,
and rows still touching the column are dropped.  What survives spans the
nonnegative integer nullspace; a final filter keeps minimal supports
only.  All arithmetic is exact (Python ints), so coefficient growth
cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .net import Marking, PetriNet, incidence


@dataclass(frozen=True)
class Semiflow:
    """Nonnegative integer vector annulled by the incidence matrix.

    kind "P": coeffs over places, transposed-incidence nullspace member
    (token-weighted sums are invariant under firing).  kind "T": coeffs
    over transitions, incidence nullspace member (a firing count vector
    that reproduces the marking).  Coefficients are normalized to gcd 1.
    """

    kind: str
    coeffs: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)


@dataclass(frozen=True)
class InvariantEquation:
    """Conservation law: sum of coeffs[p] * M(p) equals `constant` in every
    marking reachable from the initial one."""

    coeffs: tuple[int, ...]
    constant: int
    places: tuple[str, ...]

    def text(self) -> str:
        terms = " + ".join(
            (f"M({p})" if c == 1 else f"{c}*M({p})")
            for p, c in zip(self.places, self.coeffs)
            if c
        )
        return f"{terms} = {self.constant}"

    def value_at(self, marking: Marking) -> int:
        return sum(c * m for c, m in zip(self.coeffs, marking))


@dataclass(frozen=True)
class CoverageReport:
    """Structural boundedness evidence from P-semiflow coverage."""

    covered: bool
    uncovered_places: tuple[str, ...]
    # Positive on every place when covered: the net is conservative with
    # respect to this weight vector, hence structurally bounded.
    weight_vector: tuple[int, ...] | None

    @property
    def structurally_bounded(self) -> bool:
        return self.covered

    @property
    def verdict(self) -> str:
        if self.covered:
            return "covered by positive P-invariants: structurally bounded and conservative"
        return "not covered: no structural bound for " + ", ".join(self.uncovered_places)


def _normalize(row: list[int]) -> tuple[int, ...]:
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    return tuple(x // g for x in row) if g > 1 else tuple(row)


def _farkas(matrix: list[list[int]], nvars: int, ncols: int) -> list[tuple[int, ...]]:
    """Minimal-support nonnegative integer nullspace of an nvars x ncols matrix."""
    # Rows of [matrix | identity].
    table = {
        _normalize(list(matrix[i]) + [1 if j == i else 0 for j in range(nvars)])
        for i in range(nvars)
    }
    for col in range(ncols):
        positive = [r for r in table if r[col] > 0]
        negative = [r for r in table if r[col] < 0]
        kept = {r for r in table if r[col] == 0}
        for rp in positive:
            for rn in negative:
                scale = lcm(rp[col], -rn[col])
                fp, fn = scale // rp[col], scale // -rn[col]
                kept.add(_normalize([fp * a + fn * b for a, b in zip(rp, rn)]))
        table = kept

    candidates = {r[ncols:] for r in table}
    supports = {
        coeffs: sum(1 << i for i, c in enumerate(coeffs) if c) for coeffs in candidates
    }
    minimal = [
        coeffs
        for coeffs, mask in supports.items()
        if mask
        and not any(
            other & mask == other and other != mask for other in supports.values()
        )
    ]
    # Canonical order: support bit-vector over indices, then coefficients.
    minimal.sort(key=lambda v: (tuple(1 if c else 0 for c in v), v))
    return minimal


def p_invariants(net: PetriNet) -> list[Semiflow]:
    """All minimal-support P-semiflows, gcd-normalized, in canonical order."""
    inc = incidence(net).combined
    n, m = len(net.places), len(net.transitions)
    # Solve y . I = 0: variables are places, one balance column per transition.
    matrix = [[inc[p][t] for t in range(m)] for p in range(n)]
    return [Semiflow("P", coeffs) for coeffs in _farkas(matrix, n, m)]


def t_invariants(net: PetriNet) -> list[Semiflow]:
    """All minimal-support T-semiflows (I . x = 0), same normal form."""
    inc = incidence(net).combined
    n, m = len(net.places), len(net.transitions)
    matrix = [[inc[p][t] for p in range(n)] for t in range(m)]
    return [Semiflow("T", coeffs) for coeffs in _farkas(matrix, m, n)]


def invariant_equations(net: PetriNet) -> list[InvariantEquation]:
    """One conservation equation per minimal P-semiflow, with the constant
    evaluated against the net's initial marking."""
    return [
        InvariantEquation(
            coeffs=flow.coeffs,
            constant=sum(c * m for c, m in zip(flow.coeffs, net.initial)),
            places=net.places,
        )
        for flow in p_invariants(net)
    ]


def coverage(net: PetriNet) -> CoverageReport:
    """Check whether every place carries weight in some P-semiflow."""
    flows = p_invariants(net)
    totals = [0] * len(net.places)
    for flow in flows:
        for i, c in enumerate(flow.coeffs):
            totals[i] += c
    uncovered = tuple(p for p, w in zip(net.places, totals) if w == 0)
    covered = not uncovered
    return CoverageReport(
        covered=covered,
        uncovered_places=uncovered,
        weight_vector=tuple(totals) if covered else None,
    )
