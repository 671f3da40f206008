"""Symplectic machinery and stabilizer-code assembly.

A stabilizer code on n qudits over GF(q) is an l x 2n matrix in (X|Z)
block form whose rows commute, i.e. are pairwise orthogonal under the
standard symplectic product

    <x, y>_s = sum_i  x_i y_{n+i} - x_{n+i} y_i .

Codes coming from the curve constructions are first self-orthogonal only
under a weighted variant (nonzero weights a_i on the i-th term);
multiplying X-block column i by a_i converts weighted orthogonality into
standard orthogonality without touching rank or coordinate supports, so
the code parameters carry over.

Phases are not modelled: everything here is the phase-free vector
formalism, which is exactly what commutation and distance depend on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from math import ceil
from typing import Optional, Sequence, Union

from .curve import CurveSpec, Place
from .errors import (
    DimensionMismatch,
    EmptyNormalizerComplement,
    EnumerationBoundExceeded,
    LengthMismatch,
    NoSelfDualBasis,
    NotDualContained,
    ZeroWeight,
)
from .galois import FieldElement, FieldSpec, self_dual_basis, trace
from .goppa import GoppaCode, build_goppa
from .linear_code import ENUMERATION_BOUND, LinearCode, MatrixGF, dot, sum_elems


@dataclass(frozen=True)
class SymplecticForm:
    """Standard (weights None) or weighted symplectic form on GF(q)^{2n}."""

    n: int
    weights: Optional[tuple[FieldElement, ...]] = None

    def __post_init__(self):
        if self.weights is not None:
            if len(self.weights) != self.n:
                raise DimensionMismatch("one weight per coordinate pair")
            if any(a.is_zero() for a in self.weights):
                raise ZeroWeight("symplectic weights must be nonzero")


def symplectic_ip(
    form: SymplecticForm,
    x: Sequence[FieldElement],
    y: Sequence[FieldElement],
) -> FieldElement:
    """The (weighted) symplectic product of two length-2n vectors."""
    n = form.n
    if len(x) != 2 * n or len(y) != 2 * n:
        raise DimensionMismatch(f"vectors must have length {2 * n}")
    field = x[0].field
    acc = field.zero
    if form.weights is None:
        for i in range(n):
            acc = acc + (x[i] * y[n + i] - x[n + i] * y[i])
    else:
        for i, a in enumerate(form.weights):
            acc = acc + a * (x[i] * y[n + i] - x[n + i] * y[i])
    return acc


def symplectic_weight(v: Sequence[FieldElement], n: int) -> int:
    """Number of coordinates i with (v_i, v_{n+i}) != (0, 0)."""
    return sum(
        1 for i in range(n) if not (v[i].is_zero() and v[n + i].is_zero())
    )


def absorb_weights(gen: MatrixGF, weights: Sequence[FieldElement]) -> MatrixGF:
    """Multiply X-block column i by a_i: gen . diag(a_1..a_n, 1..1).

    Turns rows that are pairwise orthogonal under the weighted form into
    rows orthogonal under the standard form; rank and row supports are
    unchanged because the scaling matrix is invertible and diagonal.
    """
    n2 = gen.ncols
    n = n2 // 2
    if len(weights) != n:
        raise DimensionMismatch("need one weight per X column")
    if any(a.is_zero() for a in weights):
        raise ZeroWeight("weights must be nonzero")
    field = gen.field
    return gen.scale_columns(list(weights) + [field.one] * n)


@dataclass(frozen=True)
class StabilizerCode:
    """l x 2n generator matrix in (X|Z) form with derived parameters.

    ``d_lower`` is a proven bound from the construction; ``d_exact`` is
    only set after exhaustive enumeration.  k = 0 codes (stabilizer
    states) are legal.
    """

    field: FieldSpec
    n: int
    gen: MatrixGF
    d_lower: Optional[int] = None
    d_exact: Optional[int] = None
    meta: dict = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if self.gen.ncols != 2 * self.n:
            raise DimensionMismatch("generator must have 2n columns")
        if self.gen.rank() != self.gen.nrows:
            raise DimensionMismatch("generator rows are dependent")
        form = SymplecticForm(self.n)
        for r1, r2 in itertools.combinations(self.gen.rows, 2):
            if not symplectic_ip(form, r1, r2).is_zero():
                raise NotDualContained(
                    "generator rows do not commute under the standard form"
                )

    @property
    def l(self) -> int:
        return self.gen.nrows

    @property
    def k(self) -> int:
        return self.n - self.l

    def params(self) -> tuple[int, int, Optional[int]]:
        return (self.n, self.k, self.d_exact if self.d_exact is not None else self.d_lower)

    def describe(self) -> str:
        n, k, _ = self.params()
        if self.d_exact is not None:
            return f"[[{n},{k},{self.d_exact}]]"
        if self.d_lower is not None:
            return f"[[{n},{k},>={self.d_lower}]]"
        return f"[[{n},{k},?]]"

    def with_distance(self, d: int) -> "StabilizerCode":
        return StabilizerCode(self.field, self.n, self.gen, self.d_lower, d, dict(self.meta))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
            "d_exact": self.d_exact,
            "gen_xz": [[list(e.coeffs) for e in row] for row in self.gen.rows],
        }


def css(
    c1: LinearCode,
    c2: LinearCode,
    weights: Optional[Sequence[FieldElement]] = None,
) -> StabilizerCode:
    """CSS construction from classical codes with C1 contained in dual(C2).

    The stabilizer generator is diag-blocked: G1 in the X block, G2 in
    the Z block, giving an [[n, n-(k1+k2)]] code whose claimed distance
    bound is min(d1, d2) (recorded by the caller when the classical
    distances are known).

    With ``weights`` the containment is checked under the weighted inner
    product sum a_i x_i y_i and the X block is pre-multiplied by the
    weights, which lands the result on the standard symplectic form.
    """
    if c1.field != c2.field:
        raise LengthMismatch("codes over different fields")
    if c1.n != c2.n:
        raise LengthMismatch("codes of different lengths")
    f = c1.field
    n = c1.n
    for u in c1.gen.rows:
        for v in c2.gen.rows:
            if weights is None:
                val = dot(f, u, v)
            else:
                val = sum_elems(f, (a * x * y for a, x, y in zip(weights, u, v)))
            if not val.is_zero():
                raise NotDualContained(
                    "C1 is not contained in the dual of C2"
                )
    zero_row = [f.zero] * n
    rows = []
    for u in c1.gen.rows:
        xu = list(u) if weights is None else [a * x for a, x in zip(weights, u)]
        rows.append(xu + zero_row)
    for v in c2.gen.rows:
        rows.append(zero_row + list(v))
    return StabilizerCode(
        field=f,
        n=n,
        gen=MatrixGF(f, rows, ncols=2 * n),
        meta={"method": "css"},
    )


def css_distance_bound(c1: LinearCode, c2: LinearCode, bound: int = ENUMERATION_BOUND) -> int:
    """min(d1, d2), the distance claim attached to a CSS pair."""
    return min(c1.min_distance(bound), c2.min_distance(bound))


def direct_construct(
    curve: CurveSpec,
    pairs: Union[int, Sequence[Place]],
    r: int,
) -> StabilizerCode:
    """Stabilizer code straight from a two-point Goppa code.

    The block generator of the classical code is weight-absorbed; for
    0 <= r <= n - g the construction guarantees k >= r and
    d >= ceil((n-g+1-r)/2), otherwise only the trivial bound is recorded.
    """
    goppa = build_goppa(curve, pairs, r)
    return _stabilizer_from_goppa(goppa)


def _stabilizer_from_goppa(goppa: GoppaCode) -> StabilizerCode:
    n = goppa.n_pairs
    g = goppa.curve.genus
    r = goppa.r
    absorbed = absorb_weights(goppa.gen, goppa.weights)
    d_lower = ceil((n - g + 1 - r) / 2) if 0 <= r <= n - g else 1
    return StabilizerCode(
        field=goppa.field,
        n=n,
        gen=absorbed,
        d_lower=d_lower,
        meta={
            "method": "direct",
            "r": r,
            "degG": goppa.deg_g,
            "weights": goppa.weights,
        },
    )


def stabilizer_from_classical(goppa: GoppaCode) -> StabilizerCode:
    """Public wrapper used when the Goppa code was built separately."""
    return _stabilizer_from_goppa(goppa)


def _gram_matrix(field: FieldSpec, form: SymplecticForm) -> MatrixGF:
    n = form.n
    rows = [[field.zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        a = field.one if form.weights is None else form.weights[i]
        rows[i][n + i] = a
        rows[n + i][i] = -a
    return MatrixGF(field, rows)


def symplectic_dual(
    gen: MatrixGF, form: Optional[SymplecticForm] = None
) -> MatrixGF:
    """Canonical basis of {y : <x, y>_s = 0 for all rows x}.

    Computed as the nullspace of gen . J with J the (weighted) symplectic
    Gram matrix; the dimension is 2n - l.
    """
    n = gen.ncols // 2
    if form is None:
        form = SymplecticForm(n)
    J = _gram_matrix(gen.field, form)
    return (gen * J).nullspace()


def quantum_distance(code: StabilizerCode, bound: int = ENUMERATION_BOUND) -> int:
    """Exact distance: minimum symplectic weight over dual(S) \\ rowspace(S).

    Enumerates the full symplectic dual (q^{n+k} vectors), skipping
    elements of the stabilizer row space.  Errors for k = 0, where the
    normalizer equals the stabilizer and the minimum is over an empty set.
    """
    f = code.field
    n = code.n
    dual = symplectic_dual(code.gen)
    dual_size = f.q ** dual.nrows
    if dual_size > bound:
        raise EnumerationBoundExceeded(
            f"{dual_size} dual vectors exceed the bound {bound}"
        )
    if dual.nrows == code.gen.nrows:
        raise EmptyNormalizerComplement(
            "k = 0: every normalizer element is in the stabilizer"
        )

    row_space = set()
    for coeffs in itertools.product(f.elements(), repeat=code.gen.nrows):
        v = [f.zero] * (2 * n)
        for c, row in zip(coeffs, code.gen.rows):
            if c.is_zero():
                continue
            v = [a + c * b for a, b in zip(v, row)]
        row_space.add(tuple(e.idx for e in v))

    best: Optional[int] = None
    zero = [f.zero] * (2 * n)
    for coeffs in itertools.product(f.elements(), repeat=dual.nrows):
        v = list(zero)
        for c, row in zip(coeffs, dual.rows):
            if c.is_zero():
                continue
            v = [a + c * b for a, b in zip(v, row)]
        key = tuple(e.idx for e in v)
        if key in row_space:
            continue
        wt = symplectic_weight(v, n)
        if best is None or wt < best:
            best = wt
            if best == 1:
                break
    if best is None:  # pragma: no cover
        raise EmptyNormalizerComplement("no normalizer element outside the stabilizer")
    return best


def project_to_base(
    code: StabilizerCode,
    basis: Optional[Sequence[FieldElement]] = None,
) -> StabilizerCode:
    """Expand a GF(p^m) code into a length-nm code over GF(p).

    Every coordinate is replaced by its m coordinates with respect to a
    self-dual basis, X block first then Z block in matching column order.
    Because trace(u v) is the coordinate-wise dot product in a self-dual
    basis, the trace of a vanishing symplectic product vanishes
    coordinate-wise, so standard self-orthogonality survives projection.
    The F_p-row space needs l*m generators (each original generator times
    each basis element), reduced afterwards.
    """
    f = code.field
    if f.m == 1:
        return code
    if basis is None:
        basis = self_dual_basis(f)
        if basis is None:
            raise NoSelfDualBasis(
                f"no self-dual basis for GF({f.p}^{f.m}); m must be odd"
            )
    base = f.prime_subfield()
    m = f.m

    def project_vector(v: Sequence[FieldElement]) -> list[FieldElement]:
        out = []
        for half in (v[: code.n], v[code.n:]):
            for e in half:
                out.extend(trace(e * b) for b in basis)
        # reorder so both halves stay contiguous: X coords then Z coords
        return out

    rows = []
    for g_row in code.gen.rows:
        for mult in basis:
            scaled = [mult * e for e in g_row]
            rows.append(project_vector(scaled))
    gen = MatrixGF(base, rows, ncols=2 * code.n * m).rref()
    return StabilizerCode(
        field=base,
        n=code.n * m,
        gen=gen,
        meta={"method": "projection", "from": f"GF({f.p}^{f.m})", **code.meta},
    )
