"""Folding SW polynomials of 3-manifolds into SW polynomials of 4-manifolds.

A free circle action on a 4-manifold X with orbit space M is classified
by its Euler class chi; when chi is nontorsion and b_+(X) = b_1(M) - 1
is at least 2, the SW coefficient of X at a pulled-back class equals the
sum of the SW coefficients of M over the corresponding coset of the
integer span of chi.  This module implements that coset fold, a
brute-force oracle for it, the injectivity (no-collision) test, and the
two circle-bundle-over-a-surface specializations.

Folded results are terminal values: their exponents are canonical coset
representatives (pivot coordinate reduced into [0, chi_pivot)), on which
ring operations would be meaningless, so :class:`FoldedSW` deliberately
defines none.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import DomainError, HypothesisError, ParseError, StructuralError
from .laurent import Basis, LaurentPoly, from_text, to_text
from .manifolds import CIRCLE_BASIS, ThreeManifold, surface_times_circle, fold_applicable


def euler_vector_from_text(text: str, basis: Basis) -> tuple[int, ...]:
    """Parse an integer combination of basis variables, e.g. ``"-m1 + 2*m2"``.

    Uses the polynomial grammar restricted to degree-one terms.  The zero
    vector (text ``"0"``) is allowed here; constructing an
    :class:`EulerClass` from it is not.
    """
    poly = from_text(text, basis)
    vector = [0] * basis.rank
    for exp, coeff in poly.terms():
        hits = [(i, e) for i, e in enumerate(exp) if e != 0]
        if len(hits) != 1 or hits[0][1] != 1:
            raise ParseError(
                f"Euler class must be a linear combination of basis variables, "
                f"got term with exponents {exp}"
            )
        vector[hits[0][0]] += coeff
    return tuple(vector)


@dataclass(frozen=True)
class EulerClass:
    """Nonzero integer vector in the exponent lattice: the fold direction."""

    basis: Basis
    chi: tuple[int, ...]

    def __post_init__(self):
        chi = tuple(self.chi)
        object.__setattr__(self, "chi", chi)
        if len(chi) != self.basis.rank:
            raise StructuralError(
                f"Euler vector has length {len(chi)}, basis rank is {self.basis.rank}"
            )
        for e in chi:
            if not isinstance(e, int):
                raise StructuralError(f"Euler vector entries must be integers, got {e!r}")
        if not any(chi):
            raise DomainError("Euler class is zero (torsion); no quotient to fold over")

    @classmethod
    def from_text(cls, text: str, basis: Basis) -> EulerClass:
        return cls(basis, euler_vector_from_text(text, basis))

    @property
    def text(self) -> str:
        """Canonical rendering, e.g. ``"4*m1"`` or ``"-m1 + 2*m2"``."""
        terms = {}
        for name, c in zip(self.basis.names, self.chi):
            if c:
                terms[self.basis.unit(name)] = c
        return to_text(LaurentPoly(self.basis, terms))

    def __neg__(self) -> EulerClass:
        return EulerClass(self.basis, tuple(-c for c in self.chi))


@dataclass(frozen=True)
class QuotientLattice:
    """Lattice quotient by the span of chi, with a pivot for canonical reduction.

    chi is normalized so its first nonzero entry (the pivot) is positive;
    chi and -chi therefore induce the same quotient.
    """

    euler: EulerClass
    pivot: int = field(init=False)

    def __post_init__(self):
        chi = self.euler.chi
        pivot = next(i for i, c in enumerate(chi) if c != 0)
        if chi[pivot] < 0:
            object.__setattr__(self, "euler", -self.euler)
        object.__setattr__(self, "pivot", pivot)

    @property
    def chi(self) -> tuple[int, ...]:
        return self.euler.chi

    @property
    def modulus(self) -> int:
        """The positive pivot entry; representatives live in [0, modulus)."""
        return self.euler.chi[self.pivot]


def canonical_rep(quotient: QuotientLattice, exp: Sequence[int]) -> tuple[int, ...]:
    """Unique member of exp + Z*chi whose pivot coordinate lies in [0, chi_pivot)."""
    exp = tuple(exp)
    chi = quotient.chi
    if len(exp) != len(chi):
        raise StructuralError(f"exponent length {len(exp)} != Euler vector length {len(chi)}")
    k = exp[quotient.pivot] // quotient.modulus
    if k == 0:
        return exp
    return tuple(e - k * c for e, c in zip(exp, chi))


@dataclass(frozen=True)
class FoldedSW:
    """Terminal fold result: polynomial over canonical coset representatives.

    ``product_case`` marks a zero Euler class, where the 4-manifold is a
    product with the circle and the polynomial is the unfolded one.
    No ring operations are defined on this type.
    """

    quotient: QuotientLattice | None
    poly: LaurentPoly
    source: str
    product_case: bool = False

    def __post_init__(self):
        if (self.quotient is None) != self.product_case:
            raise StructuralError("product_case exactly when there is no quotient")
        if self.quotient is not None:
            pivot, modulus = self.quotient.pivot, self.quotient.modulus
            for exp in self.poly.support():
                if not 0 <= exp[pivot] < modulus:
                    raise StructuralError(
                        f"exponent {exp} is not a canonical representative "
                        f"(pivot {pivot}, modulus {modulus})"
                    )

    @property
    def chi_text(self) -> str:
        return "0" if self.product_case else self.quotient.euler.text


def _as_vector(basis: Basis, chi) -> tuple[int, ...]:
    if isinstance(chi, EulerClass):
        if chi.basis != basis:
            raise StructuralError("Euler class basis differs from the manifold basis")
        return chi.chi
    if isinstance(chi, str):
        return euler_vector_from_text(chi, basis)
    vector = tuple(chi)
    if len(vector) != basis.rank:
        raise StructuralError(
            f"Euler vector has length {len(vector)}, basis rank is {basis.rank}"
        )
    return vector


def _check_hypotheses(manifold: ThreeManifold, vector) -> None:
    check = fold_applicable(manifold, vector)
    if not check.b_plus_ok:
        raise HypothesisError(
            f"b_+ = b_1 - 1 = {check.b_plus} < 2 for {manifold.name}: fold hypotheses fail"
        )


def fold_poly(poly: LaurentPoly, quotient: QuotientLattice) -> LaurentPoly:
    """Coset-fold a bare polynomial: sum coefficients at canonical representatives."""
    acc: dict[tuple[int, ...], int] = {}
    for exp, coeff in poly.terms():
        rep = canonical_rep(quotient, exp)
        total = acc.get(rep, 0) + coeff
        if total:
            acc[rep] = total
        else:
            acc.pop(rep, None)
    return LaurentPoly(poly.basis, acc)


def fold_poly_bruteforce(poly: LaurentPoly, quotient: QuotientLattice) -> LaurentPoly:
    """Oracle twin of :func:`fold_poly`: merge by exhaustive shift search.

    Two support exponents merge when their difference equals k * chi for
    some k found by enumeration (|k| bounded by support width over the
    smallest nonzero chi entry); each merged class is then labeled by
    scanning shifts for the one representative with pivot coordinate in
    range.  No floor-division arithmetic is shared with the fast path.
    """
    chi_vec = quotient.chi
    support = list(poly.support())
    if not support:
        return LaurentPoly.zero(poly.basis)

    width = max(
        max(e[i] for e in support) - min(e[i] for e in support)
        for i in range(poly.basis.rank)
    )
    min_chi = min(abs(c) for c in chi_vec if c)
    k_bound = width // min_chi + 1

    parent = list(range(len(support)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(support)):
        for j in range(i + 1, len(support)):
            diff = tuple(a - b for a, b in zip(support[i], support[j]))
            for k in range(-k_bound, k_bound + 1):
                if k != 0 and diff == tuple(k * c for c in chi_vec):
                    parent[find(i)] = find(j)
                    break

    pivot, modulus = quotient.pivot, quotient.modulus
    acc: dict[tuple[int, ...], int] = {}
    labels: dict[int, tuple[int, ...]] = {}
    for idx, exp in enumerate(support):
        root = find(idx)
        if root not in labels:
            scan = abs(exp[pivot]) // modulus + 1
            candidates = [
                tuple(e - k * c for e, c in zip(exp, chi_vec))
                for k in range(-scan, scan + 1)
            ]
            in_range = [c for c in candidates if 0 <= c[pivot] < modulus]
            assert len(in_range) == 1, "exactly one shift lands the pivot in range"
            labels[root] = in_range[0]
        rep = labels[root]
        total = acc.get(rep, 0) + poly.coeff(exp)
        if total:
            acc[rep] = total
        else:
            acc.pop(rep, None)
    return LaurentPoly(poly.basis, acc)


def fold(manifold: ThreeManifold, chi) -> FoldedSW:
    """Sum the SW coefficients of ``manifold`` over cosets of the span of chi.

    ``chi`` may be an :class:`EulerClass`, a text form like ``"4*m1"``,
    or a raw integer vector.  A zero chi returns the labeled product
    case (the invariants of M x S^1 equal those of M) instead of
    raising.  The total coefficient sum is conserved.
    """
    vector = _as_vector(manifold.basis, chi)
    if not any(vector):
        return FoldedSW(quotient=None, poly=manifold.sw3, source=manifold.name, product_case=True)
    _check_hypotheses(manifold, vector)
    quotient = QuotientLattice(EulerClass(manifold.basis, vector))
    return FoldedSW(quotient=quotient, poly=fold_poly(manifold.sw3, quotient), source=manifold.name)


def fold_bruteforce(manifold: ThreeManifold, chi) -> FoldedSW:
    """Independent oracle for :func:`fold` (see :func:`fold_poly_bruteforce`)."""
    vector = _as_vector(manifold.basis, chi)
    if not any(vector):
        return FoldedSW(quotient=None, poly=manifold.sw3, source=manifold.name, product_case=True)
    _check_hypotheses(manifold, vector)
    quotient = QuotientLattice(EulerClass(manifold.basis, vector))
    return FoldedSW(
        quotient=quotient,
        poly=fold_poly_bruteforce(manifold.sw3, quotient),
        source=manifold.name,
    )


def _injective_on_support(support, quotient: QuotientLattice) -> bool:
    reps = {canonical_rep(quotient, exp) for exp in support}
    return len(reps) == len(support)


def is_injective_fold(manifold: ThreeManifold, chi) -> bool:
    """True when no two support exponents of sw3 fall in the same coset.

    An injective fold permutes the coefficient multiset, so the folded
    polynomial inherits every coefficient-level property of the
    unfolded one.
    """
    vector = _as_vector(manifold.basis, chi)
    if not any(vector):
        raise DomainError("injectivity is about a nonzero Euler class")
    quotient = QuotientLattice(EulerClass(manifold.basis, vector))
    return _injective_on_support(manifold.sw3.support(), quotient)


def circle_bundle_sw_direct(genus: int, euler_number: int) -> FoldedSW:
    """SW polynomial of a circle bundle over a genus-g surface, by folding.

    Folds (t - 1/t)^(2g-2) over the span of the Euler number; exponents
    in the result are residues in [0, |n|).  A zero Euler number returns
    the labeled product case.
    """
    manifold = surface_times_circle(genus)
    if not isinstance(euler_number, int):
        raise DomainError(f"Euler number must be an integer, got {euler_number!r}")
    return fold(manifold, (euler_number,))


def circle_bundle_sw_closed_form(genus: int, euler_number: int) -> FoldedSW:
    """Same bundle polynomial via the alternating-binomial double sum.

    For even n = 2l != 0 the residue-2i coefficient is
    sign(n) * sum_k (-1)^j * C(2g-2, j) with j = (g-1) + i + k|l|,
    k ranging over -(2g-2)..(2g-2) and out-of-range binomials zero.
    For odd n the block length |l| becomes |n|, and the i-th term is the
    class of exponent 2i: since 2 is invertible mod odd n this is a
    bijective relabeling, landed here on the canonical residue
    (2i mod |n|) so the result is exponent-for-exponent comparable with
    :func:`circle_bundle_sw_direct` (up to one overall sign).
    """
    if not isinstance(genus, int) or genus < 1:
        raise DomainError(f"genus must be an integer >= 1, got {genus!r}")
    if not isinstance(euler_number, int) or euler_number == 0:
        raise DomainError("Euler number must be a nonzero integer for the closed form")
    degree = 2 * genus - 2
    sign = 1 if euler_number > 0 else -1
    block = abs(euler_number) // 2 if euler_number % 2 == 0 else abs(euler_number)
    terms: dict[tuple[int, ...], int] = {}
    for i in range(block):
        total = 0
        for k in range(-degree, degree + 1):
            j = (genus - 1) + i + k * block
            if 0 <= j <= degree:
                total += (-1) ** j * comb(degree, j)
        if total:
            terms[(2 * i % abs(euler_number),)] = sign * total
    quotient = QuotientLattice(EulerClass(CIRCLE_BASIS, (euler_number,)))
    return FoldedSW(
        quotient=quotient,
        poly=LaurentPoly(CIRCLE_BASIS, terms),
        source=f"S{genus}xS1",
    )


def equal_up_to_sign(a: FoldedSW, b: FoldedSW) -> bool:
    """Compare two fold results as coset-class polynomials, up to one global sign."""
    if a.quotient != b.quotient:
        raise StructuralError("fold results over different quotients are not comparable")
    return a.poly == b.poly or a.poly == -b.poly
