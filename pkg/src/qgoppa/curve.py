"""The hyperelliptic function field K(x, y) with y^2 = f(x).

Only odd-degree models are accepted: the pole of x is then totally
ramified, giving a unique place at infinity with v(x) = -2 and
v(y) = -(2g+1).  Even characteristic is rejected.

A non-square-free f defines a singular model; with ``normalize=True``
the square part is factored out (f = u^2 * s) and the smooth model
y^2 = s(x) is used instead.  The genus always refers to the model
actually in force, so a normalized curve may have smaller genus than
the naive (deg-1)/2 of its input.

Rational points are listed in a fixed canonical order: the infinite
place first, then the split places in conjugate-adjacent pairs sorted
by the field's enumeration key of the x-coordinate, then the ramified
places.  Computer-algebra systems order the two members of a split pair
by internal heuristics that differ from run to run, so reproductions of
a specific session pass the explicit place sequence instead of relying
on the default order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    DegreeTooSmall,
    EvenCharacteristic,
    EvenDegreeModel,
    NotEnoughSplitPairs,
    NotSquareFree,
)
from .galois import FieldElement, FieldSpec, is_square, sqrt
from .polynomial import Poly, is_square_free, square_part


@dataclass(frozen=True)
class Place:
    """A degree-one place: an affine point (x, y) or the place at infinity."""

    x: Optional[FieldElement] = None
    y: Optional[FieldElement] = None

    @classmethod
    def infinity(cls) -> "Place":
        return cls(None, None)

    @classmethod
    def affine(cls, x: FieldElement, y: FieldElement) -> "Place":
        return cls(x, y)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_ramified(self) -> bool:
        return self.x is not None and self.y.is_zero()

    def __str__(self) -> str:
        if self.is_infinity:
            return "(inf)"
        return f"({self.x} : {self.y})"

    def to_json_dict(self) -> dict:
        if self.is_infinity:
            return {"inf": True}
        return {"x": list(self.x.coeffs), "y": list(self.y.coeffs)}


class PlaceClass(Enum):
    SPLIT = "split"
    RAMIFIED = "ramified"
    INERT = "inert"


@dataclass(frozen=True)
class CurveSpec:
    """A validated odd-degree hyperelliptic model and its genus."""

    field: FieldSpec
    f: Poly                 # the square-free model in force
    genus: int
    input_f: Poly           # polynomial as supplied
    square_factor: Poly     # u with input_f = u^2 * f
    normalized: bool

    def __repr__(self) -> str:
        return f"Curve[y^2 = {self.f} over {self.field!r}, genus {self.genus}]"


def curve_new(field: FieldSpec, f: Poly, *, normalize: bool = False) -> CurveSpec:
    """Validate y^2 = f(x) and compute the genus.

    ``f`` must have odd degree >= 5 and be square-free; with
    ``normalize=True`` a non-square-free f is replaced by its square-free
    part (degree >= 3, odd), which is the curve the function field
    actually lives on.
    """
    if field.p == 2:
        raise EvenCharacteristic("curves require odd characteristic")
    if f.degree < 5:
        raise DegreeTooSmall("the model polynomial must have degree >= 5")

    if is_square_free(f):
        model, u = f, Poly.one(field)
    elif not normalize:
        raise NotSquareFree(
            "f has a repeated factor; pass normalize=True to build the "
            "smooth model y^2 = f/(square part)^2"
        )
    else:
        u, model = square_part(f)
        if model.degree < 3:
            raise DegreeTooSmall(
                f"normalized model has degree {model.degree}; need >= 3"
            )

    if model.degree % 2 == 0:
        raise EvenDegreeModel(
            "even-degree models (split infinity) are not supported"
        )
    genus = (model.degree - 1) // 2
    return CurveSpec(
        field=field,
        f=model,
        genus=genus,
        input_f=f,
        square_factor=u,
        normalized=not u.is_constant(),
    )


def classify(curve: CurveSpec, alpha: FieldElement) -> PlaceClass:
    """Behaviour of the place x = alpha under the degree-2 extension."""
    v = curve.f(alpha)
    if v.is_zero():
        return PlaceClass.RAMIFIED
    return PlaceClass.SPLIT if is_square(v) else PlaceClass.INERT


def conjugate(place: Place) -> Place:
    """The hyperelliptic involution (x, y) -> (x, -y); fixes infinity."""
    if place.is_infinity:
        return place
    return Place.affine(place.x, -place.y)


def split_pairs(curve: CurveSpec) -> list[tuple[Place, Place]]:
    """All split pairs (P, sigma P) in canonical order.

    The pair representative P carries the root with the smaller
    enumeration key; pairs are sorted by the key of the x-coordinate.
    """
    field = curve.field
    pairs = []
    for alpha in sorted(field.elements(), key=field.enumeration_key):
        v = curve.f(alpha)
        if v.is_zero() or not is_square(v):
            continue
        r1, r2 = sqrt(v)
        if field.enumeration_key(r1) > field.enumeration_key(r2):
            r1, r2 = r2, r1
        pairs.append((Place.affine(alpha, r1), Place.affine(alpha, r2)))
    return pairs


def ramified_places(curve: CurveSpec) -> list[Place]:
    field = curve.field
    zero = field.zero
    return [
        Place.affine(alpha, zero)
        for alpha in sorted(field.elements(), key=field.enumeration_key)
        if curve.f(alpha).is_zero()
    ]


def rational_places(curve: CurveSpec) -> list[Place]:
    """All degree-one places: infinity, split pairs (adjacent), ramified."""
    out = [Place.infinity()]
    for P, sP in split_pairs(curve):
        out.append(P)
        out.append(sP)
    out.extend(ramified_places(curve))
    return out


def select_pairs(
    curve: CurveSpec, n: int
) -> tuple[tuple[Place, ...], tuple[Place, ...]]:
    """The first n split pairs, as the block (P_1..P_n, sigma P_1..sigma P_n)."""
    pairs = split_pairs(curve)
    if n > len(pairs):
        raise NotEnoughSplitPairs(
            f"requested {n} pairs but only {len(pairs)} exist"
        )
    chosen = pairs[:n]
    return tuple(P for P, _ in chosen), tuple(sP for _, sP in chosen)


def validate_on_curve(curve: CurveSpec, place: Place) -> None:
    """Assert that an affine place satisfies y^2 = f(x) on the model."""
    if place.is_infinity:
        return
    if place.y * place.y != curve.f(place.x):
        raise ValueError(f"{place} does not lie on {curve!r}")


def pairs_from_data(
    curve: CurveSpec, data: Sequence[tuple[Sequence[int] | int, Sequence[int] | int]]
) -> list[Place]:
    """Build and validate the representatives P_1..P_n from (x, y) raw data.

    Used to replay an externally recorded place sequence.
    """
    field = curve.field
    out = []
    for xs, ys in data:
        P = Place.affine(field.element(xs), field.element(ys))
        validate_on_curve(curve, P)
        out.append(P)
    return out
