"""Molien series, Reynolds-operator invariant bases, and smallest
(semi-)invariant degrees for fully enumerable matrix groups.

The degree-k coefficient of the Molien series (1/|G|) sum_g 1/det(I - t g)
is the dimension of the space of degree-k invariants.  Each summand is
expanded by the linear recurrence coming from the characteristic
polynomial, so everything stays in exact cyclotomic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cyclo import Cyc, QQ
from .groups import GeneratedGroup, derived_subgroup, exact_elements
from .matrix import CycloMatrix
from .poly import HomogPoly, act_by_inverse_of

__all__ = [
    "MolienPrefix",
    "NoInvariantBelowCap",
    "molien_prefix",
    "invariant_dimension",
    "reynolds_basis",
    "smallest_invariant_degree",
    "smallest_semiinvariant_degree",
]

DEFAULT_DEGREE_CAP = 24


class NoInvariantBelowCap(RuntimeError):
    """No nonzero invariant exists up to the requested degree cap."""


@dataclass(frozen=True)
class MolienPrefix:
    group_order: int
    coefficients: tuple[int, ...]  # index k = dim of degree-k invariants

    def dimension(self, k: int) -> int:
        return self.coefficients[k]


def _det_one_minus_tg(mat: CycloMatrix) -> tuple:
    """Ascending coefficients of det(I - t*mat), derived from charpoly."""
    cp = mat.charpoly()  # det(tI - M), ascending, monic
    n = mat.n
    return tuple(cp[n - k] for k in range(n + 1))


def _series_inverse(denom, max_degree: int, m: int) -> list[Cyc]:
    """Power series 1/denom(t) modulo t^(max_degree+1)."""
    out = [Cyc.one(m)]
    for k in range(1, max_degree + 1):
        acc = Cyc.zero(m)
        for j in range(1, min(k, len(denom) - 1) + 1):
            acc = acc - denom[j] * out[k - j]
        out.append(acc)
    return out


def molien_prefix(group: GeneratedGroup, max_degree: int = DEFAULT_DEGREE_CAP,
                  elements: list[CycloMatrix] | None = None) -> MolienPrefix:
    """Exact Molien coefficients for degrees 0..max_degree."""
    elems = elements if elements is not None else exact_elements(group)
    order = len(elems)
    m = group.conductor
    # distinct denominators only: conjugate elements share det(I - tg)
    buckets: dict[tuple, list] = {}
    for e in elems:
        denom = _det_one_minus_tg(e)
        key = tuple(c.c for c in denom)
        entry = buckets.get(key)
        if entry is None:
            buckets[key] = [denom, 1]
        else:
            entry[1] += 1
    totals = [Cyc.zero(m) for _ in range(max_degree + 1)]
    for denom, mult in buckets.values():
        series = _series_inverse(denom, max_degree, m)
        for k in range(max_degree + 1):
            totals[k] = totals[k] + series[k] * mult
    coeffs = []
    inv_order = QQ(1, order)
    for k, total in enumerate(totals):
        avg = total * inv_order
        if not avg.is_rational():
            raise ArithmeticError(f"Molien coefficient {k} is not rational: closure is wrong")
        q = avg.rational_value()
        if q.denominator != 1 or q < 0:
            raise ArithmeticError(f"Molien coefficient {k} = {q} is not a non-negative integer")
        coeffs.append(int(q))
    if coeffs[0] != 1:
        raise ArithmeticError("Molien series must start with 1")
    return MolienPrefix(group_order=order, coefficients=tuple(coeffs))


def invariant_dimension(group: GeneratedGroup, k: int,
                        elements: list[CycloMatrix] | None = None) -> int:
    """Dimension of the degree-k invariant space."""
    return molien_prefix(group, k, elements=elements).coefficients[k]


def _monomials_of_degree(nvars: int, k: int):
    """Exponent tuples of total degree k, graded-lex descending."""
    out = []
    for bars in combinations(range(k + nvars - 1), nvars - 1):
        prev = -1
        expo = []
        for b in bars:
            expo.append(b - prev - 1)
            prev = b
        expo.append(k + nvars - 1 - prev - 1)
        out.append(tuple(expo))
    return sorted(out, reverse=True)


def reynolds_basis(group: GeneratedGroup, k: int, exhaustive: bool = False,
                   elements: list[CycloMatrix] | None = None) -> list[HomogPoly]:
    """Basis of the degree-k invariants by averaging monomials over the group.

    The Reynolds operator projects onto the invariant space, so once
    invariant_dimension(G, k) independent averages are found the space is
    spanned; pass exhaustive=True to keep averaging every monomial anyway
    (used by the Molien-vs-Reynolds consistency checks).
    """
    elems = elements if elements is not None else exact_elements(group)
    dim = invariant_dimension(group, k, elements=elems)
    n = group.dimension
    m = group.conductor
    inv_order = QQ(1, len(elems))
    basis: list[tuple[dict, HomogPoly]] = []

    def reduce_terms(terms: dict) -> dict:
        for pivots, _poly in basis:
            lead = max(pivots)
            if lead in terms:
                f = terms[lead] * pivots[lead].inverse()
                terms = {
                    e: c
                    for e in set(terms) | set(pivots)
                    if not (c := terms.get(e, Cyc.zero(m)) - f * pivots.get(e, Cyc.zero(m))).is_zero()
                }
        return terms

    for expo in _monomials_of_degree(n, k):
        if not exhaustive and len(basis) == dim:
            break
        mono = HomogPoly(n, k, {expo: Cyc.one(m)})
        acc: dict[tuple, Cyc] = {}
        for e in elems:
            # summing f(g x) over the group equals summing f(g^-1 x)
            image = act_by_inverse_of(e, mono)
            for expo2, c in image.terms.items():
                prev = acc.get(expo2)
                acc[expo2] = c if prev is None else prev + c
        acc = {e: c * inv_order for e, c in acc.items() if not (c * inv_order).is_zero()}
        if not acc:
            continue
        reduced = reduce_terms(acc)
        if reduced:
            basis.append((reduced, HomogPoly(n, k, acc)))
    polys = [p for _, p in basis]
    if len(polys) != dim:
        raise ArithmeticError(
            f"Reynolds basis size {len(polys)} disagrees with Molien dimension {dim}"
        )
    return polys


def smallest_invariant_degree(group: GeneratedGroup, cap: int = DEFAULT_DEGREE_CAP,
                              elements: list[CycloMatrix] | None = None) -> int:
    prefix = molien_prefix(group, cap, elements=elements)
    for k in range(1, cap + 1):
        if prefix.coefficients[k]:
            return k
    raise NoInvariantBelowCap(f"no invariant of positive degree <= {cap}")


def smallest_semiinvariant_degree(group: GeneratedGroup, cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Minimum positive degree of a semi-invariant of the group.

    A polynomial scaled by a linear character is exactly an invariant of
    the derived subgroup, and conversely any invariant of the derived
    subgroup spans, inside its finite orbit span, an eigenvector for the
    abelian quotient; so the answer is the smallest positive degree with a
    derived-subgroup invariant.
    """
    return smallest_invariant_degree(derived_subgroup(group), cap)
