"""Classical linear codes over GF(q).

Matrices are exact (lists of field elements).  Generator matrices are
kept exactly as supplied, since worked examples encode against a specific
non-canonical generator; the reduced row echelon form is available as a
cached canonical form for comparisons, and duals are always returned in
canonical form.

This is the one layer that admits characteristic 2, so binary block
codes (Hamming, the stabilizer matrices of qubit codes) can be handled;
the curve layers reject it.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    EnumerationBoundExceeded,
    TableBoundExceeded,
    ZeroInput,
)
from .galois import FieldElement, FieldSpec

#: Default ceiling on exhaustive codeword enumeration.
ENUMERATION_BOUND = 10 ** 7

#: Default ceiling on coset-leader table size.
TABLE_BOUND = 10 ** 6


Vector = tuple[FieldElement, ...]


def vector(field: FieldSpec, ints: Iterable[int]) -> Vector:
    return tuple(field.element(c) for c in ints)


def vector_ints(v: Sequence[FieldElement]) -> tuple[int, ...]:
    """Integer rendering of a prime-field vector (element indices otherwise)."""
    return tuple(e.idx for e in v)


def hamming_weight(v: Sequence[FieldElement]) -> int:
    return sum(1 for e in v if not e.is_zero())


class MatrixGF:
    """Dense matrix over a fixed finite field.

    ``ncols`` only needs to be passed for a matrix with no rows, where the
    column count cannot be inferred.
    """

    __slots__ = ("field", "rows", "_ncols", "_rref")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence[FieldElement]], ncols: Optional[int] = None):
        self.field = field
        self.rows: tuple[Vector, ...] = tuple(tuple(r) for r in rows)
        if self.rows:
            self._ncols = len(self.rows[0])
            if any(len(r) != self._ncols for r in self.rows):
                raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != self._ncols:
                raise DimensionMismatch("ncols does not match the rows")
        else:
            self._ncols = ncols if ncols is not None else 0
        self._rref: Optional["MatrixGF"] = None

    @classmethod
    def from_ints(cls, field: FieldSpec, rows: Iterable[Iterable[int]], ncols: Optional[int] = None) -> "MatrixGF":
        return cls(field, [[field.element(c) for c in r] for r in rows], ncols=ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    def to_ints(self) -> list[list[int]]:
        return [list(vector_ints(r)) for r in self.rows]

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, list(zip(*self.rows)) if self.rows else [])

    def __mul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        f = self.field
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            out.append(
                [sum_elems(f, (a * b for a, b in zip(r, c))) for c in cols]
            )
        return MatrixGF(f, out)

    def scale_columns(self, scalars: Sequence[FieldElement]) -> "MatrixGF":
        if len(scalars) != self.ncols:
            raise DimensionMismatch("one scalar per column required")
        return MatrixGF(
            self.field, [[a * s for a, s in zip(r, scalars)] for r in self.rows]
        )

    def permute_columns(self, perm: Sequence[int]) -> "MatrixGF":
        return MatrixGF(self.field, [[r[j] for j in perm] for r in self.rows])

    def rref(self) -> "MatrixGF":
        """Reduced row echelon form; deterministic leftmost/topmost pivoting.

        Zero rows are dropped, so the result doubles as a row-space basis.
        """
        if self._rref is not None:
            return self._rref
        f = self.field
        M = [list(r) for r in self.rows]
        nr = len(M)
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, nr) if not M[i][c].is_zero()), None)
            if piv is None:
                continue
            M[r], M[piv] = M[piv], M[r]
            inv = M[r][c].inverse()
            M[r] = [x * inv for x in M[r]]
            for i in range(nr):
                if i != r and not M[i][c].is_zero():
                    factor = M[i][c]
                    M[i] = [x - factor * y for x, y in zip(M[i], M[r])]
            r += 1
            if r == nr:
                break
        out = MatrixGF(
            f,
            [row for row in M if any(not x.is_zero() for x in row)],
            ncols=self.ncols,
        )
        out._rref = out
        self._rref = out
        return out

    def rank(self) -> int:
        return self.rref().nrows

    def pivot_columns(self) -> list[int]:
        piv = []
        for row in self.rref().rows:
            for j, x in enumerate(row):
                if not x.is_zero():
                    piv.append(j)
                    break
        return piv

    def nullspace(self) -> "MatrixGF":
        """Canonical (RREF) basis of the right kernel {v : M v^T = 0}."""
        f = self.field
        R = self.rref()
        piv = R.pivot_columns()
        free = [j for j in range(self.ncols) if j not in piv]
        basis = []
        for fj in free:
            v = [f.zero] * self.ncols
            v[fj] = f.one
            for ri, pj in enumerate(piv):
                v[pj] = -R.rows[ri][fj]
            basis.append(v)
        return MatrixGF(f, basis, ncols=self.ncols).rref()

    def row_space_contains(self, v: Sequence[FieldElement]) -> bool:
        R = self.rref()
        resid = list(v)
        for row, pj in zip(R.rows, R.pivot_columns()):
            c = resid[pj]
            if not c.is_zero():
                resid = [x - c * y for x, y in zip(resid, row)]
        return all(x.is_zero() for x in resid)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __str__(self) -> str:
        return "\n".join(
            "[" + " ".join(f"{str(e):>3}" for e in row) + "]" for row in self.rows
        )


def sum_elems(field: FieldSpec, elems: Iterable[FieldElement]) -> FieldElement:
    acc = field.zero
    for e in elems:
        acc = acc + e
    return acc


def dot(field: FieldSpec, x: Sequence[FieldElement], y: Sequence[FieldElement]) -> FieldElement:
    if len(x) != len(y):
        raise DimensionMismatch("vectors of different lengths")
    return sum_elems(field, (a * b for a, b in zip(x, y)))


def rref(M: MatrixGF) -> MatrixGF:
    return M.rref()


class LinearCode:
    """An [n, k] code given by a full-rank generator matrix.

    ``gen`` is stored exactly as supplied; ``canonical_gen`` is the unique
    RREF generator used for comparisons.
    """

    def __init__(self, gen: MatrixGF):
        self.field = gen.field
        self.gen = gen
        self.n = gen.ncols
        self.k = gen.nrows
        if gen.rank() != self.k:
            raise DimensionMismatch("generator matrix rows are dependent")
        self._dual: Optional["LinearCode"] = None
        self._leader_table: Optional[dict] = None

    @classmethod
    def from_ints(cls, field: FieldSpec, rows: Iterable[Iterable[int]]) -> "LinearCode":
        return cls(MatrixGF.from_ints(field, rows))

    @property
    def canonical_gen(self) -> MatrixGF:
        return self.gen.rref()

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}] over {self.field!r}"

    # -- encoding ---------------------------------------------------------

    def encode(self, msg: Sequence[FieldElement]) -> Vector:
        if len(msg) != self.k:
            raise DimensionMismatch(f"message length must be {self.k}")
        f = self.field
        out = [f.zero] * self.n
        for m, row in zip(msg, self.gen.rows):
            if m.is_zero():
                continue
            out = [o + m * r for o, r in zip(out, row)]
        return tuple(out)

    def unencode(self, codeword: Sequence[FieldElement]) -> Vector:
        """The message encoding to ``codeword`` (with respect to ``gen``)."""
        f = self.field
        aug = MatrixGF(
            f,
            [list(row) + [f.one if i == j else f.zero for j in range(self.k)]
             for i, row in enumerate(self.gen.rows)],
        ).rref()
        resid = list(codeword)
        msg = [f.zero] * self.k
        piv = []
        for row in aug.rows:
            for j, x in enumerate(row[: self.n]):
                if not x.is_zero():
                    piv.append(j)
                    break
        for row, pj in zip(aug.rows, piv):
            c = resid[pj]
            if not c.is_zero():
                resid = [x - c * y for x, y in zip(resid, row[: self.n])]
                msg = [m + c * y for m, y in zip(msg, row[self.n:])]
        if any(not x.is_zero() for x in resid):
            raise ValueError("not a codeword")
        return tuple(msg)

    def contains(self, word: Sequence[FieldElement]) -> bool:
        return self.gen.row_space_contains(word)

    def iter_codewords(self, bound: int = ENUMERATION_BOUND):
        if self.field.q ** self.k > bound:
            raise EnumerationBoundExceeded(
                f"{self.field.q}^{self.k} codewords exceed the bound {bound}"
            )
        for msg in itertools.product(self.field.elements(), repeat=self.k):
            yield self.encode(msg)

    # -- duality -------------------------------------------------------------

    def dual(self) -> "LinearCode":
        """The dual code under the canonical inner product, in canonical form.

        The dual of the full space is the zero code (k = 0), which is a
        legal LinearCode here.
        """
        if self._dual is None:
            self._dual = LinearCode(self.gen.nullspace())
        return self._dual

    @property
    def parity_check(self) -> MatrixGF:
        return self.dual().gen

    # -- decoding ---------------------------------------------------------------

    def syndrome(self, word: Sequence[FieldElement]) -> Vector:
        if len(word) != self.n:
            raise DimensionMismatch(f"word length must be {self.n}")
        f = self.field
        return tuple(dot(f, word, h) for h in self.parity_check.rows)

    def _build_leader_table(self, bound: int) -> dict:
        f = self.field
        n_syndromes = f.q ** (self.n - self.k)
        if n_syndromes > bound:
            raise TableBoundExceeded(
                f"{n_syndromes} cosets exceed the table bound {bound}"
            )
        table: dict[tuple, tuple] = {}
        nonzero = list(f.nonzero_elements())
        for weight in range(self.n + 1):
            # ties (same weight, same syndrome) resolved to the
            # lexicographically least leader
            for support in itertools.combinations(range(self.n), weight):
                for values in itertools.product(nonzero, repeat=weight):
                    v = [f.zero] * self.n
                    for pos, val in zip(support, values):
                        v[pos] = val
                    s = self.syndrome(v)
                    key = vector_ints(s)
                    cand = tuple(v)
                    if key not in table:
                        table[key] = cand
                    elif hamming_weight(table[key]) == weight and vector_ints(cand) < vector_ints(table[key]):
                        table[key] = cand
            if len(table) == n_syndromes:
                break
        return table

    def syndrome_decode(self, word: Sequence[FieldElement], bound: int = TABLE_BOUND) -> Vector:
        """Coset-leader decoding: subtract the leader of the word's coset."""
        if self._leader_table is None:
            self._leader_table = self._build_leader_table(bound)
        s = vector_ints(self.syndrome(word))
        leader = self._leader_table[s]
        return tuple(x - l for x, l in zip(word, leader))

    # -- distance ----------------------------------------------------------------

    def min_distance(self, bound: int = ENUMERATION_BOUND) -> int:
        """Exact minimum distance by exhaustive codeword enumeration."""
        if self.k == 0:
            raise ZeroInput("the zero code has no minimum distance")
        best = self.n + 1
        zero = (self.field.zero,) * self.n
        for cw in self.iter_codewords(bound):
            if cw == zero:
                continue
            best = min(best, hamming_weight(cw))
        return best

    # -- export -----------------------------------------------------------------

    def to_json_dict(self, with_distance: Optional[int] = None) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "gen": [[list(e.coeffs) for e in row] for row in self.gen.rows],
        }
        if with_distance is not None:
            out["d"] = with_distance
        return out
