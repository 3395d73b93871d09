"""Three-manifold records and their Seiberg-Witten polynomials.

Constructions covered: the three-torus, products of a genus-g surface
with the circle, and fiber sums of those with knot complements along a
meridian direction.  Each record carries the variable basis (generators
of H_1 modulo torsion), the first Betti number, an exact SW polynomial
over that basis, and a fiberedness flag.

Fiber-summing a knot complement along a meridian multiplies the SW
polynomial by the knot's Alexander polynomial evaluated at the square of
the meridian variable; the basis and b_1 are unchanged because the knot
complement's first homology is generated by the glued meridian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import KnotRecord
from .errors import DomainError, StructuralError
from .laurent import Basis, LaurentPoly

#: Basis shared by the three-torus family: the three circle directions.
T3_BASIS = Basis(("m1", "m2", "m3"))

#: Basis used by surface-times-circle records (the SW-support direction).
CIRCLE_BASIS = Basis(("t",))


@dataclass(frozen=True)
class ThreeManifold:
    name: str
    basis: Basis
    b1: int
    sw3: LaurentPoly
    fibered: bool
    provenance: tuple[str, ...]

    def __post_init__(self):
        if self.sw3.basis != self.basis:
            raise StructuralError("sw3 polynomial basis differs from the manifold basis")
        if self.b1 < self.basis.rank:
            raise StructuralError(
                f"b1 = {self.b1} smaller than the tracked basis rank {self.basis.rank}"
            )
        conj = self.sw3.conjugate()
        if conj != self.sw3 and conj != -self.sw3:
            raise StructuralError("sw3 must be symmetric up to sign under inverting all variables")


def three_torus() -> ThreeManifold:
    """The three-torus: trivial SW polynomial, b_1 = 3, fibered."""
    return ThreeManifold(
        name="T3",
        basis=T3_BASIS,
        b1=3,
        sw3=LaurentPoly.one(T3_BASIS),
        fibered=True,
        provenance=("t3",),
    )


def surface_times_circle(genus: int) -> ThreeManifold:
    """Product of a genus-g surface with the circle: SW = (t - 1/t)^(2g-2).

    The polynomial basis tracks only the circle-fiber direction, where
    all the SW support lives; b_1 records the full rank 2g + 1.
    """
    if not isinstance(genus, int) or genus < 1:
        raise DomainError(f"genus must be an integer >= 1, got {genus!r}")
    t = LaurentPoly(CIRCLE_BASIS, {(1,): 1, (-1,): -1})
    return ThreeManifold(
        name=f"S{genus}xS1",
        basis=CIRCLE_BASIS,
        b1=2 * genus + 1,
        sw3=t ** (2 * genus - 2),
        fibered=True,
        provenance=(f"surface_x_s1(genus={genus})",),
    )


def fiber_sum_with_knot(manifold: ThreeManifold, knot: KnotRecord, meridian: str) -> ThreeManifold:
    """Fiber-sum a knot complement along a meridian direction.

    Multiplies the SW polynomial by the knot polynomial reindexed through
    t -> meridian^2; basis and b_1 are unchanged; the result is fibered
    only if both pieces are.
    """
    direction = [2 * e for e in manifold.basis.unit(meridian)]
    factor = knot.alexander.reindex(manifold.basis, {"t": direction})
    return ThreeManifold(
        name=f"{manifold.name}+{knot.name}@{meridian}",
        basis=manifold.basis,
        b1=manifold.b1,
        sw3=manifold.sw3 * factor,
        fibered=manifold.fibered and knot.fibered,
        provenance=manifold.provenance + (f"fiber_sum(knot={knot.name}, meridian={meridian})",),
    )


@dataclass(frozen=True)
class FoldChecklist:
    """Hypothesis report for folding by an Euler class (report-style, never raises)."""

    chi_nonzero: bool
    b_plus: int

    @property
    def b_plus_ok(self) -> bool:
        return self.b_plus >= 2

    @property
    def applicable(self) -> bool:
        return self.chi_nonzero and self.b_plus_ok


def fold_applicable(manifold: ThreeManifold, chi) -> FoldChecklist:
    """Check the two hypotheses for folding: nontorsion chi, b_+ = b_1 - 1 >= 2.

    ``chi`` may be an EulerClass or a raw integer vector over the
    manifold basis.
    """
    vector = tuple(getattr(chi, "chi", chi))
    if len(vector) != manifold.basis.rank:
        raise StructuralError(
            f"Euler vector has length {len(vector)}, basis rank is {manifold.basis.rank}"
        )
    return FoldChecklist(
        chi_nonzero=any(vector),
        b_plus=manifold.b1 - 1,
    )
