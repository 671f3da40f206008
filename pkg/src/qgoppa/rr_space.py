"""Function spaces L(s * P_inf) on the odd-degree model, with explicit bases.

On y^2 = f(x), deg f = 2g+1, the infinite place has v(x) = -2 and
v(y) = -(2g+1), so the functions with poles only at infinity of order
at most s are spanned by

    x^i        with 2i <= s,
    x^i * y    with 2i + 2g + 1 <= s.

Distinct pole orders (even for the x-powers, odd for the y-terms) make
the spanning set a basis, and counting it recovers dim = s + 1 - g for
s >= 2g - 1 as Riemann-Roch requires; below that the odd gaps at
1, 3, ..., 2g-1 appear.  Negative s gives the zero space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveSpec, Place
from .errors import EvaluationAtSupport
from .galois import FieldElement


@dataclass(frozen=True)
class RRBasis:
    """Monomial basis of L(s * P_inf): pairs (i, uses_y) meaning x^i or x^i*y."""

    s: int
    genus: int
    monomials: tuple[tuple[int, bool], ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def monomial_strings(self) -> list[str]:
        out = []
        for i, uses_y in self.monomials:
            if i == 0:
                out.append("y" if uses_y else "1")
            else:
                xs = "x" if i == 1 else f"x^{i}"
                out.append(f"{xs}*y" if uses_y else xs)
        return out


def rr_basis(curve: CurveSpec, s: int) -> RRBasis:
    """The monomial basis of L(s * P_inf); empty for s < 0."""
    g = curve.genus
    monos: list[tuple[int, bool]] = []
    if s >= 0:
        monos.extend((i, False) for i in range(s // 2 + 1))
        if s >= 2 * g + 1:
            monos.extend((i, True) for i in range((s - 2 * g - 1) // 2 + 1))
    return RRBasis(s=s, genus=g, monomials=tuple(monos))


def rr_eval(basis: RRBasis, place: Place) -> list[FieldElement]:
    """Evaluate every basis monomial at an affine place."""
    if place.is_infinity:
        raise EvaluationAtSupport(
            "basis functions have their pole at infinity; cannot evaluate there"
        )
    alpha, beta = place.x, place.y
    out = []
    for i, uses_y in basis.monomials:
        v = alpha ** i
        if uses_y:
            v = v * beta
        out.append(v)
    return out
