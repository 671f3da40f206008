"""Goppa codes from conjugate place pairs, and their residue weights.

The two-point construction evaluates L((n+g-1-r) * P_inf) at n split
pairs (P_1, .., P_n, sigma P_1, .., sigma P_n).  The differential

    eta = dx / (y * prod_i (x - alpha_i))

has simple poles exactly at the 2n chosen places, with

    res_{P_i}(eta)       =  a_i = 1 / (beta_i * prod_{j != i} (alpha_i - alpha_j)),
    res_{sigma P_i}(eta) = -a_i,

and these residues are the weights under which the code is
self-orthogonal (classically with weights (a_i, -a_i), symplectically
with weights a_i after splitting the two blocks into X and Z halves).

Two generator matrices are kept for each code.  Computer-algebra systems
list the evaluation places pair-interleaved (P_1, sigma P_1, P_2, ...)
and print the reduced echelon form of that layout, so the interleaved
RREF is retained for verbatim comparison; the block layout (all P_i,
then all sigma P_i) feeds the quantum constructions.  The two are column
permutations of one another, which row reduction does not commute with,
hence both are stored.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence, Union

from .curve import CurveSpec, Place, conjugate, select_pairs
from .errors import (
    DimensionMismatch,
    DuplicateAlpha,
    EvenExtensionDegree,
    ParameterRangeWarning,
    RamifiedPlaceInPairs,
)
from .galois import FieldElement, discrete_log, is_square, sqrt
from .linear_code import LinearCode, MatrixGF, sum_elems
from .polynomial import Poly
from .rr_space import RRBasis, rr_basis, rr_eval


@dataclass(frozen=True)
class GoppaCode:
    """A constructed code plus the residue weights that make it self-orthogonal.

    ``construction`` is "paired" for the two-point layout (length 2n,
    block order) or "flat" for a single evaluation block (length n).
    For a paired code ``gen`` is the block-order matrix and
    ``gen_interleaved`` the session-comparable RREF; for a flat code the
    two coincide.
    """

    curve: CurveSpec
    construction: str
    r: int
    deg_g: int
    places: tuple[Place, ...]           # evaluation order of gen's columns
    weights: tuple[FieldElement, ...]   # a_i per pair ("paired") or per place ("flat")
    basis: RRBasis
    gen: MatrixGF
    gen_interleaved: MatrixGF

    @property
    def field(self):
        return self.curve.field

    @property
    def length(self) -> int:
        return len(self.places)

    @property
    def n_pairs(self) -> int:
        if self.construction != "paired":
            raise ValueError("only paired codes have a pair count")
        return len(self.places) // 2

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def designed_distance(self) -> int:
        return self.length - self.deg_g

    def classical(self) -> LinearCode:
        return LinearCode(self.gen)

    def to_json_dict(self) -> dict:
        return {
            "n": self.length,
            "k": self.k,
            "degG": self.deg_g,
            "r": self.r,
            "construction": self.construction,
            "gen": [[list(e.coeffs) for e in row] for row in self.gen.rows],
            "weights": [list(a.coeffs) for a in self.weights],
            "pairs": [P.to_json_dict() for P in self.places],
        }


# -- residues of eta ----------------------------------------------------------

def _check_pairs(pairs: Sequence[Place]) -> None:
    seen = set()
    for P in pairs:
        if P.is_infinity or P.is_ramified:
            raise RamifiedPlaceInPairs(f"{P} has no conjugate partner")
        if P.x.idx in seen:
            raise DuplicateAlpha(f"x-coordinate {P.x} appears twice")
        seen.add(P.x.idx)


def residues(curve: CurveSpec, pairs: Sequence[Place]) -> list[FieldElement]:
    """Closed-form residues a_i of eta at the pair representatives P_i."""
    _check_pairs(pairs)
    out = []
    for i, P in enumerate(pairs):
        prod = curve.field.one
        for j, Q in enumerate(pairs):
            if j != i:
                prod = prod * (P.x - Q.x)
        out.append((P.y * prod).inverse())
    return out


def residue_oracle(
    curve: CurveSpec, place: Place, pairs: Sequence[Place], terms: int = 5
) -> FieldElement:
    """Residue of eta at ``place`` by local power-series expansion.

    Independent of the closed form: y is lifted to a series in the
    uniformizer t = x - alpha by solving y(t)^2 = f(alpha + t) term by
    term from y(0) = beta (Hensel), the denominator y * prod(x - alpha_j)
    is multiplied out as a series, inverted, and the residue is read off
    the coefficient of 1/t.  Any truncation length >= 1 suffices for a
    simple pole; a few extra terms exercise the series consistency.
    """
    _check_pairs(pairs)
    field = curve.field
    alpha, beta = place.x, place.y

    # f(alpha + t) as a truncated series in t
    shifted = _shift_series(curve.f, alpha, terms)

    # y(t) = beta + c1 t + ...   with  y(t)^2 = shifted
    y = [beta] + [field.zero] * (terms - 1)
    two_beta_inv = (beta + beta).inverse()
    for k in range(1, terms):
        conv = sum_elems(field, (y[i] * y[k - i] for i in range(1, k)))
        y[k] = (shifted[k] - conv) * two_beta_inv

    # unit part u(t) = y(t) * prod_{j != i} (t + alpha - alpha_j); the
    # remaining factor of the denominator is t itself (the simple pole)
    unit = y
    for Q in pairs:
        if Q.x == alpha:
            continue
        unit = _series_mul(field, unit, [alpha - Q.x, field.one], terms)

    inv_unit = _series_inverse(field, unit, terms)
    return inv_unit[0]  # coefficient of t^0 in 1/u = coefficient of 1/t in eta


def _shift_series(f: Poly, alpha: FieldElement, terms: int) -> list[FieldElement]:
    """Coefficients of f(alpha + t) in t, truncated."""
    field = f.field
    out = [field.zero] * terms
    # Horner in (alpha + t): process coefficients from the top
    for c in reversed(f.coeffs):
        shifted = [field.zero] * terms
        for k in range(terms - 1):
            shifted[k + 1] = out[k]
        for k in range(terms):
            shifted[k] = shifted[k] + out[k] * alpha
        shifted[0] = shifted[0] + c
        out = shifted
    return out


def _series_mul(field, a: list[FieldElement], b: Sequence[FieldElement], terms: int) -> list[FieldElement]:
    out = [field.zero] * terms
    for i, ai in enumerate(a[:terms]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j >= terms:
                break
            out[i + j] = out[i + j] + ai * bj
    return out


def _series_inverse(field, a: list[FieldElement], terms: int) -> list[FieldElement]:
    inv0 = a[0].inverse()
    out = [inv0] + [field.zero] * (terms - 1)
    for k in range(1, terms):
        acc = field.zero
        for i in range(1, k + 1):
            acc = acc + a[i] * out[k - i]
        out[k] = -acc * inv0
    return out


# -- code construction ---------------------------------------------------------

def _resolve_pairs(curve: CurveSpec, pairs: Union[int, Sequence[Place]]) -> list[Place]:
    if isinstance(pairs, int):
        ps, _ = select_pairs(curve, pairs)
        return list(ps)
    return list(pairs)


def _warn_r_range(r: int, n: int, g: int) -> None:
    if not 0 <= r <= n - g:
        warnings.warn(
            f"r={r} outside [0, {n - g}]; the dimension/distance bounds "
            "k >= r and d >= (n-g+1-r)/2 are not guaranteed",
            ParameterRangeWarning,
            stacklevel=3,
        )


def build_goppa(
    curve: CurveSpec, pairs: Union[int, Sequence[Place]], r: int
) -> GoppaCode:
    """Two-point code: evaluate L((n+g-1-r) * P_inf) at n conjugate pairs.

    ``pairs`` is a pair count (canonical order) or an explicit sequence of
    pair representatives P_i; the conjugates are derived.  The RREF is
    computed on the interleaved layout and column-permuted into the block
    layout, matching how algebra-system output is post-processed.
    """
    ps = _resolve_pairs(curve, pairs)
    _check_pairs(ps)
    n = len(ps)
    g = curve.genus
    _warn_r_range(r, n, g)
    deg_g = n + g - 1 - r
    if deg_g >= 2 * n:
        warnings.warn(
            "deg G is at least the code length; the designed distance is <= 0",
            ParameterRangeWarning,
            stacklevel=2,
        )
    basis = rr_basis(curve, deg_g)
    sigma_ps = [conjugate(P) for P in ps]

    interleaved_places = []
    for P, sP in zip(ps, sigma_ps):
        interleaved_places.append(P)
        interleaved_places.append(sP)
    eval_matrix = MatrixGF(
        curve.field,
        [[rr_eval(basis, P)[i] for P in interleaved_places] for i in range(basis.dim)],
        ncols=2 * n,
    )
    gen_interleaved = eval_matrix.rref()
    block_perm = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    gen_block = gen_interleaved.permute_columns(block_perm)

    return GoppaCode(
        curve=curve,
        construction="paired",
        r=r,
        deg_g=deg_g,
        places=tuple(ps) + tuple(sigma_ps),
        weights=tuple(residues(curve, ps)),
        basis=basis,
        gen=gen_block,
        gen_interleaved=gen_interleaved,
    )


def build_goppa_css_side(
    curve: CurveSpec, places: Union[int, Sequence[Place]], r: int
) -> GoppaCode:
    """Single-block code over a flat place list, with per-place weights.

    ``places`` is a pair count (both members of each canonical pair are
    used, interleaved) or an explicit flat list.  The divisor degree is
    floor(n/2) + g - 1 - r for n evaluation places, and the weight at a
    place (alpha, beta) is 1/(beta * prod(alpha - alpha')) over the other
    distinct x-coordinates; conjugate places get opposite weights.  With
    all pairs complete the code is self-orthogonal under that weighting.
    """
    if isinstance(places, int):
        ps, sps = select_pairs(curve, places)
        flat: list[Place] = []
        for P, sP in zip(ps, sps):
            flat.append(P)
            flat.append(sP)
    else:
        flat = list(places)
    if len(set(flat)) != len(flat):
        raise DuplicateAlpha("places must be distinct")
    for P in flat:
        if P.is_infinity or P.is_ramified:
            raise RamifiedPlaceInPairs(f"{P} cannot carry a weight")

    n = len(flat)
    g = curve.genus
    _warn_r_range(r, n, g)
    deg_g = n // 2 + g - 1 - r
    basis = rr_basis(curve, deg_g)

    distinct_x: list[FieldElement] = []
    for P in flat:
        if all(P.x != a for a in distinct_x):
            distinct_x.append(P.x)
    weights = []
    for P in flat:
        prod = curve.field.one
        for a in distinct_x:
            if a != P.x:
                prod = prod * (P.x - a)
        weights.append((P.y * prod).inverse())

    eval_matrix = MatrixGF(
        curve.field,
        [[rr_eval(basis, P)[i] for P in flat] for i in range(basis.dim)],
        ncols=n,
    )
    gen = eval_matrix.rref()
    return GoppaCode(
        curve=curve,
        construction="flat",
        r=r,
        deg_g=deg_g,
        places=tuple(flat),
        weights=tuple(weights),
        basis=basis,
        gen=gen,
        gen_interleaved=gen,
    )


# -- weighted inner product -----------------------------------------------------

def weighted_ip(
    weights: Sequence[FieldElement],
    x: Sequence[FieldElement],
    y: Sequence[FieldElement],
) -> FieldElement:
    """sum_i a_i x_i y_i; bilinear and symmetric."""
    if not (len(weights) == len(x) == len(y)):
        raise DimensionMismatch("weights and vectors must share one length")
    field = weights[0].field
    return sum_elems(field, (a * u * v for a, u, v in zip(weights, x, y)))


# -- pushing weights into the prime field ------------------------------------------

def normalize_weights_to_base(code: GoppaCode) -> GoppaCode:
    """Rescale columns so every weight lies in the prime field.

    A square weight a_i = b_i^2 becomes 1 after scaling the coordinate by
    b_i (the substitution G -> G - (u) with u(P_i) = b_i).  A non-square
    weight w^{r_i} requires odd extension degree: with s = (q-1)/(p-1)
    odd, k_i = (r_i - s)/2 is integral and scaling by w^{k_i} moves the
    weight to w^s, a nonzero element of the prime field.  Weighted
    self-orthogonality is preserved because each product a_i x_i y_i is
    rewritten as (a_i / b_i^2)(b_i x_i)(b_i y_i); for a paired code both
    members of pair i are scaled by the same b_i, which divides the
    symplectic weight by b_i^2 as well.
    """
    field = code.field
    p, m, q = field.p, field.m, field.q
    s = (q - 1) // (p - 1)
    scalars = []
    new_weights = []
    for a in code.weights:
        if a.in_prime_subfield():
            scalars.append(field.one)
            new_weights.append(a)
        elif is_square(a):
            b = sqrt(a)[0]
            scalars.append(b)
            new_weights.append(field.one)
        else:
            if m % 2 == 0:
                raise EvenExtensionDegree(
                    "non-square weights cannot reach the prime field when m is even"
                )
            r_i = discrete_log(a)
            k_i = (r_i - s) // 2   # r_i odd, s odd, so the difference is even
            b = field.generator ** k_i
            scalars.append(b)
            new_weights.append(a * (b * b).inverse())
    assert all(w.in_prime_subfield() and not w.is_zero() for w in new_weights)

    if code.construction == "paired":
        n = code.n_pairs
        col_scalars = list(scalars) + list(scalars)   # P block, then sigma block
        inter_scalars = [field.one] * (2 * n)
        for i, b in enumerate(scalars):
            inter_scalars[2 * i] = b
            inter_scalars[2 * i + 1] = b
        gen_inter = code.gen_interleaved.scale_columns(inter_scalars)
    else:
        col_scalars = list(scalars)
        gen_inter = None
    gen = code.gen.scale_columns(col_scalars)
    if gen_inter is None:
        gen_inter = gen
    return GoppaCode(
        curve=code.curve,
        construction=code.construction,
        r=code.r,
        deg_g=code.deg_g,
        places=code.places,
        weights=tuple(new_weights),
        basis=code.basis,
        gen=gen,
        gen_interleaved=gen_inter,
    )
