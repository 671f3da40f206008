"""Independent brute-force verifiers.

These checks deliberately avoid the construction-time linear algebra:
containment and orthogonality are tested by direct products against the
definitions, ranks are recounted by a separate forward-elimination pass,
and dimensions are compared against the closed-form count.  A check that
would exceed its enumeration bound is reported as skipped, never as a
silent pass.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence, Union

from .curve import CurveSpec
from .galois import FieldElement
from .linear_code import ENUMERATION_BOUND, LinearCode, MatrixGF, dot
from .quantum import (
    StabilizerCode,
    SymplecticForm,
    symplectic_dual,
    symplectic_ip,
)
from .rr_space import rr_basis


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str                      # "pass" | "fail" | "skipped"
    witness: Optional[object] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class VerificationReport:
    checks: list[CheckResult] = dataclass_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        out = VerificationReport(list(self.checks) + list(other.checks))
        out.elapsed = self.elapsed + other.elapsed
        return out

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[c.status]
            line = f"[{mark:>4}] {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            if c.status == "fail" and c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'} "
            f"({len(self.checks)} checks, {self.elapsed:.3f}s)"
        )
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "elapsed": self.elapsed,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "detail": c.detail,
                    "witness": repr(c.witness) if c.witness is not None else None,
                }
                for c in self.checks
            ],
        }


def _timed(fn):
    def wrapper(*args, **kwargs) -> VerificationReport:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report
    return wrapper


# -- independent elimination (kept apart from MatrixGF.rref) -------------------

def _row_echelon_rank(rows: Sequence[Sequence[FieldElement]]) -> int:
    """Rank by plain forward elimination without back-substitution."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(work):
        piv = None
        for i in range(rank, len(work)):
            if not work[i][col].is_zero():
                piv = i
                break
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col].inverse()
        for i in range(rank + 1, len(work)):
            if not work[i][col].is_zero():
                c = work[i][col] * inv
                work[i] = [a - c * b for a, b in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


# -- checks ---------------------------------------------------------------------

@_timed
def check_dual_containment(c1: LinearCode, c2: LinearCode) -> VerificationReport:
    """Is C1 contained in the dual of C2?  Tested row against row.

    On success the witness expresses each generator of C1 in the canonical
    dual basis of C2; on failure it is the offending row pair.
    """
    report = VerificationReport()
    f = c1.field
    if c1.n != c2.n or c1.field != c2.field:
        report.add(CheckResult("dual-containment", "fail", detail="incompatible codes"))
        return report
    for u in c1.gen.rows:
        for v in c2.gen.rows:
            if not dot(f, u, v).is_zero():
                report.add(
                    CheckResult(
                        "dual-containment",
                        "fail",
                        witness=(tuple(str(e) for e in u), tuple(str(e) for e in v)),
                        detail="nonzero inner product",
                    )
                )
                return report
    decomposition = []
    dual_basis = c2.dual().gen
    for u in c1.gen.rows:
        coords = _coordinates_in(dual_basis, u)
        decomposition.append(coords)
    report.add(
        CheckResult(
            "dual-containment",
            "pass",
            witness=decomposition,
            detail=f"{c1.k} generators lie in the {c2.dual().k}-dim dual",
        )
    )
    return report


def _coordinates_in(basis: MatrixGF, v: Sequence[FieldElement]) -> tuple[str, ...]:
    """Coordinates of v in an RREF basis (for pass witnesses)."""
    resid = list(v)
    coords = []
    for row, pj in zip(basis.rows, basis.pivot_columns()):
        c = resid[pj]
        coords.append(str(c))
        if not c.is_zero():
            resid = [a - c * b for a, b in zip(resid, row)]
    return tuple(coords)


@_timed
def check_self_orthogonal(
    gen: MatrixGF, form: Union[SymplecticForm, Sequence[FieldElement], None] = None
) -> VerificationReport:
    """All generator row pairs orthogonal under the given symplectic form.

    ``form`` may be a SymplecticForm, a weight vector (weighted form), or
    None (standard form).  Bilinearity makes generator pairs sufficient.
    """
    report = VerificationReport()
    n = gen.ncols // 2
    if form is None:
        form = SymplecticForm(n)
    elif not isinstance(form, SymplecticForm):
        form = SymplecticForm(n, tuple(form))
    for i, j in itertools.combinations_with_replacement(range(gen.nrows), 2):
        val = symplectic_ip(form, gen.rows[i], gen.rows[j])
        if not val.is_zero():
            report.add(
                CheckResult(
                    "self-orthogonality",
                    "fail",
                    witness=(i, j, str(val)),
                    detail=f"rows {i} and {j} do not commute",
                )
            )
            return report
    report.add(
        CheckResult(
            "self-orthogonality",
            "pass",
            detail=f"{gen.nrows} generators pairwise orthogonal",
        )
    )
    return report


@_timed
def check_rr_dims(curve: CurveSpec, s_max: int) -> VerificationReport:
    """Dimension audit of L(s * P_inf) for s = -1 .. s_max.

    For s >= 2g - 1 the count must equal s + 1 - g; below that the
    dimension must be nondecreasing with unit steps and start at 1.
    """
    report = VerificationReport()
    g = curve.genus
    prev = 0
    for s in range(-1, s_max + 1):
        dim = rr_basis(curve, s).dim
        if s < 0:
            ok = dim == 0
        elif s >= 2 * g - 1:
            ok = dim == s + 1 - g
        else:
            ok = dim in (prev, prev + 1) and dim >= 1
        if not ok:
            report.add(
                CheckResult(
                    "riemann-roch-dims",
                    "fail",
                    witness=(s, dim),
                    detail=f"dimension {dim} inconsistent at s={s} (genus {g})",
                )
            )
            return report
        prev = dim
    report.add(
        CheckResult(
            "riemann-roch-dims",
            "pass",
            detail=f"s up to {s_max} against genus {g}",
        )
    )
    return report


@_timed
def full_verify(
    code: StabilizerCode, bound: int = ENUMERATION_BOUND
) -> VerificationReport:
    """Aggregate audit of a stabilizer code.

    Self-orthogonality, independently recounted rank against n - k, the
    distance bound by exhaustive enumeration when within the bound
    (skipped otherwise), and involution of the symplectic dual.
    """
    report = VerificationReport()
    q = code.field.q
    n = code.n

    sub = check_self_orthogonal(code.gen)
    report.checks.extend(sub.checks)

    rank = _row_echelon_rank(code.gen.rows)
    if rank == code.l and code.k == n - rank:
        report.add(
            CheckResult("rank-consistency", "pass", detail=f"l={rank}, k={code.k}")
        )
    else:
        report.add(
            CheckResult(
                "rank-consistency", "fail", witness=(rank, code.l, code.k)
            )
        )

    dual = symplectic_dual(code.gen)
    if dual.nrows != n + code.k:
        report.add(
            CheckResult("dual-dimension", "fail", witness=dual.nrows,
                        detail=f"expected {n + code.k}")
        )
    else:
        report.add(CheckResult("dual-dimension", "pass", detail=f"dim {dual.nrows}"))
        contained = all(dual.row_space_contains(row) for row in code.gen.rows)
        report.add(
            CheckResult(
                "stabilizer-in-normalizer",
                "pass" if contained else "fail",
                detail="C is contained in its symplectic dual" if contained else "",
            )
        )

    dd = symplectic_dual(dual)
    same = dd.nrows == code.l and all(
        dd.row_space_contains(row) for row in code.gen.rows
    )
    report.add(
        CheckResult(
            "dual-involution",
            "pass" if same else "fail",
            detail="dual of dual has the original row space" if same else "",
        )
    )

    if code.k == 0:
        report.add(
            CheckResult(
                "distance-bound", "skipped", detail="k = 0: distance undefined"
            )
        )
    elif code.d_lower is None:
        report.add(CheckResult("distance-bound", "skipped", detail="no claimed bound"))
    elif q ** dual.nrows > bound:
        report.add(
            CheckResult(
                "distance-bound",
                "skipped",
                detail=f"{q}^{dual.nrows} dual vectors exceed the bound",
            )
        )
    else:
        from .quantum import quantum_distance

        d = quantum_distance(code, bound)
        if d >= code.d_lower:
            report.add(
                CheckResult(
                    "distance-bound", "pass", detail=f"d = {d} >= {code.d_lower}"
                )
            )
        else:
            report.add(
                CheckResult("distance-bound", "fail", witness=d,
                            detail=f"claimed >= {code.d_lower}")
            )
    return report
