"""Command-line front end.

Subcommands
-----------
places              list and classify the rational points of a curve
construct-classical build a Goppa code and its residue weights
construct-quantum   direct or CSS stabilizer construction
verify              run the brute-force verifier on an exported code
tower-bounds        closed-form parameter bounds for the tower family
examples            re-run a named worked example against frozen data

Exit codes: 0 success, 1 a verification or comparison failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import reference
from .curve import CurveSpec, classify, curve_new, pairs_from_data, rational_places, split_pairs
from .errors import QGoppaError
from .galois import FieldSpec, field_new
from .linear_code import LinearCode, MatrixGF, vector, vector_ints
from .goppa import GoppaCode, build_goppa, build_goppa_css_side, normalize_weights_to_base, residues
from .oracle import check_dual_containment, check_self_orthogonal, full_verify
from .polynomial import parse_poly
from .quantum import (
    StabilizerCode,
    absorb_weights,
    css,
    direct_construct,
    project_to_base,
    quantum_distance,
    stabilizer_from_classical,
)
from .tower import matsumoto_bounds, rate_bound, stepanov_params, tower_params, tower_sweep


def parse_field(text: str) -> FieldSpec:
    """Parse ``p``, ``p^m`` or ``p^m,modulus=c0,c1,...`` into a field."""
    mod = None
    if "," in text:
        text, _, modpart = text.partition(",")
        key, _, vals = modpart.partition("=")
        if key.strip() != "modulus":
            raise ValueError(f"unknown field option {key!r}")
        mod = [int(v) for v in vals.split(",")]
    if "^" in text:
        p_str, _, m_str = text.partition("^")
        p, m = int(p_str), int(m_str)
    else:
        p, m = int(text), 1
    return field_new(p, m, mod)


def _build_curve(args) -> CurveSpec:
    field = parse_field(args.field)
    f = parse_poly(field, args.curve)
    return curve_new(field, f, normalize=getattr(args, "normalize", False))


def _matrix_text(M: MatrixGF, split_at: Optional[int] = None) -> str:
    lines = []
    for row in M.rows:
        cells = [f"{str(e):>4}" for e in row]
        if split_at is not None:
            cells.insert(split_at, " |")
        lines.append("[" + " ".join(cells) + "]")
    return "\n".join(lines)


# -- places ---------------------------------------------------------------------


def cmd_places(args) -> int:
    curve = _build_curve(args)
    places = rational_places(curve)
    n_pairs = len(split_pairs(curve))
    n_ram = sum(1 for P in places if P.is_ramified)
    if args.format == "json":
        print(json.dumps({
            "curve": str(curve.f),
            "genus": curve.genus,
            "count": len(places),
            "split_pairs": n_pairs,
            "ramified": n_ram,
            "places": [P.to_json_dict() for P in places],
        }, indent=2))
        return 0
    print(f"curve y^2 = {curve.f} over {curve.field!r}, genus {curve.genus}")
    print(f"{len(places)} rational places: 1 infinite, "
          f"{n_pairs} split pairs, {n_ram} ramified")
    if n_pairs == 0:
        print("warning: no split pairs; no code can be constructed")
    for P in places:
        if P.is_infinity:
            kind = "infinite"
        elif P.is_ramified:
            kind = "ramified"
        else:
            kind = "split"
        print(f"  {str(P):>14}  {kind}")
    return 0


# -- construct -------------------------------------------------------------------


def _resolve_code(args, curve: CurveSpec) -> GoppaCode:
    if getattr(args, "css_side", False):
        return build_goppa_css_side(curve, 2 * args.pairs, args.r)
    return build_goppa(curve, args.pairs, args.r)


def cmd_construct_classical(args) -> int:
    curve = _build_curve(args)
    code = _resolve_code(args, curve)
    payload = code.to_json_dict()
    if args.output:
        _write(args.output + ".classical.json", json.dumps(payload, indent=2))
        print(f"wrote {args.output}.classical.json")
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"[{code.length}, {code.k}] code over {curve.field!r} "
              f"(deg G = {code.deg_g}, r = {code.r})")
        print(_matrix_text(code.gen_interleaved))
        print("weights:", " ".join(str(a) for a in code.weights))
    return 0


def cmd_construct_quantum(args) -> int:
    curve = _build_curve(args)
    if args.method == "direct":
        code = build_goppa(curve, args.pairs, args.r)
        stab = stabilizer_from_classical(code)
    else:
        classical = build_goppa_css_side(curve, 2 * args.pairs, args.r)
        normalized = normalize_weights_to_base(classical)
        lin = LinearCode(normalized.gen)
        stab = css(lin, lin, weights=normalized.weights)
    if args.project_base:
        stab = project_to_base(stab)

    report = None
    if args.verify:
        report = full_verify(stab)

    payload = stab.to_json_dict()
    payload["field"] = _field_json(stab.field)
    if args.output:
        _write(args.output + ".quantum.json", json.dumps(payload, indent=2))
        if args.method == "direct":
            _write(args.output + ".classical.json", json.dumps(code.to_json_dict(), indent=2))
        if report is not None:
            _write(args.output + ".report.txt", report.summary())
        print(f"wrote {args.output}.quantum.json")
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"stabilizer code {stab.describe()} over {stab.field!r}")
        print(_matrix_text(stab.gen, split_at=stab.n))
    if report is not None:
        print(report.summary())
        return 0 if report.passed else 1
    return 0


def _field_json(field: FieldSpec) -> dict:
    return {"p": field.p, "m": field.m, "modulus": list(field.modulus)}


def _write(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content + "\n")


# -- verify ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        payload = json.load(fh)
    fdesc = payload["field"]
    field = field_new(
        fdesc["p"], fdesc["m"],
        fdesc.get("modulus") if fdesc["m"] > 1 else None,
        allow_even_characteristic=fdesc["p"] == 2,
    )
    gen = MatrixGF(
        field,
        [[field.element(c) for c in row] for row in payload["gen_xz"]],
        ncols=2 * payload["n"],
    )
    stab = StabilizerCode(
        field=field, n=payload["n"], gen=gen,
        d_lower=payload.get("d_lower"), d_exact=payload.get("d_exact"),
    )
    bound = 10 ** 7 if args.exhaustive else 10 ** 5
    report = full_verify(stab, bound=bound)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.summary())
    return 0 if report.passed else 1


# -- tower bounds ---------------------------------------------------------------------


def cmd_tower_bounds(args) -> int:
    if args.sweep:
        rows = tower_sweep(args.m, args.i)
        if args.format == "csv":
            print("j,k_lower,d_lower,binary_n,binary_k_lower,binary_d_lower,delta,valid")
            for b in rows:
                print(f"{b.j},{b.k_lower},{b.d_lower},{b.binary_n},"
                      f"{b.binary_k_lower},{b.binary_d_lower},"
                      f"{b.delta_estimate},{b.delta_valid}")
        else:
            for b in rows:
                flag = "" if b.delta_valid else "   (delta < 0: not a valid rate)"
                print(f"j={b.j:>3}  k>={b.k_lower:>3}  d>={b.d_lower:>3}  "
                      f"binary {b.describe_binary()}{flag}")
        return 0
    tp = tower_params(args.m, args.i)
    print(f"level {args.i} over GF(2^{args.m})^2: n = {tp.n_i}, genus = {tp.g_i}")
    if args.j is not None:
        b = matsumoto_bounds(args.m, args.i, args.j)
        print(f"j = {args.j}: k >= {b.k_lower}, d >= {b.d_lower} "
              f"(exact bound {b.d_lower_exact})")
        print(f"binary image: {b.describe_binary()}")
        print(f"asymptotic delta estimate: {b.delta_estimate}"
              + ("" if b.delta_valid else "  (negative: not a valid parameter)"))
        return 0 if b.delta_valid else 1
    print(f"rate bound at delta = 0: {rate_bound(args.m, 0)}")
    return 0


# -- worked examples -------------------------------------------------------------------


def _example_gf19(r: int) -> bool:
    field = field_new(19)
    curve = curve_new(field, parse_poly(field, reference.GF19_CURVE))
    pairs = pairs_from_data(curve, reference.GF19_PAIR_SEQUENCE)
    code = build_goppa(curve, pairs, r)
    want_inter = reference.GF19_M14_6 if r == 1 else reference.GF19_M14_5
    want_block = reference.GF19_G1 if r == 1 else reference.GF19_G2
    want_abs = reference.GF19_G1_ABSORBED if r == 1 else reference.GF19_G2_ABSORBED
    ok = code.gen_interleaved.to_ints() == want_inter
    ok &= [a.idx for a in code.weights] == reference.GF19_RESIDUES
    ok &= code.gen.to_ints() == want_block
    stab = stabilizer_from_classical(code)
    ok &= stab.gen.to_ints() == want_abs
    ok &= check_self_orthogonal(stab.gen).passed
    return ok


def _example_gf9() -> bool:
    field = field_new(3, 2)
    curve = curve_new(field, parse_poly(field, reference.GF9_CURVE), normalize=True)
    pairs = pairs_from_data(curve, reference.GF9_PAIR_SEQUENCE)
    code = build_goppa(curve, pairs, 1)
    got = [[str(e) for e in row] for row in code.gen_interleaved.rows]
    ok = got == reference.GF9_M8_3
    want_res = [field.generator ** k for k in reference.GF9_RESIDUES_WPOW]
    ok &= list(code.weights) == want_res
    ok &= [[str(e) for e in row] for row in code.gen.rows] == reference.GF9_G3
    stab = stabilizer_from_classical(code)
    ok &= [[str(e) for e in row] for row in stab.gen.rows] == reference.GF9_G3_ABSORBED
    ok &= code.classical().min_distance() == reference.GF9_MIN_DISTANCE
    return ok


def _example_gf3() -> bool:
    import warnings

    field = field_new(3)
    curve = curve_new(field, parse_poly(field, reference.GF3_CURVE))
    pairs = pairs_from_data(curve, reference.GF3_PAIR_SEQUENCE)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        code = build_goppa(curve, pairs, 1)
    ok = code.gen.to_ints() == reference.GF3_M4_2
    ok &= [a.idx for a in code.weights] == reference.GF3_RESIDUES
    ok &= code.classical().min_distance() == reference.GF3_MIN_DISTANCE
    stab = stabilizer_from_classical(code)
    ok &= stab.k == 0
    ok &= check_self_orthogonal(stab.gen).passed
    return ok


def _example_hamming() -> bool:
    field = field_new(2, allow_even_characteristic=True)
    code = LinearCode.from_ints(field, reference.HAMMING_GEN)
    enc = code.encode(vector(field, reference.HAMMING_MESSAGE))
    ok = list(vector_ints(enc)) == reference.HAMMING_CODEWORD
    received = vector(field, reference.HAMMING_RECEIVED)
    ok &= list(vector_ints(code.syndrome(received))) == reference.HAMMING_SYNDROME
    corrected = code.syndrome_decode(received)
    ok &= list(vector_ints(corrected)) == reference.HAMMING_CODEWORD
    ok &= list(vector_ints(code.unencode(corrected))) == reference.HAMMING_MESSAGE
    ok &= code.min_distance() == 3
    ok &= code.dual().gen.to_ints() == reference.HAMMING_CHECK
    return ok


def _example_css_f7() -> bool:
    field = field_new(7)
    c1 = LinearCode.from_ints(field, reference.F7_C1)
    c2 = LinearCode.from_ints(field, reference.F7_C2)
    rep = check_dual_containment(c1, c2)
    ok = rep.passed
    stab = css(c1, c2)
    stab = stab.with_distance(quantum_distance(stab))
    ok &= stab.params() == reference.F7_PARAMS
    return ok


def _example_sympl_f5() -> bool:
    field = field_new(5)
    gen = MatrixGF.from_ints(field, reference.F5_GEN)
    weights = vector(field, reference.F5_WEIGHTS)
    ok = check_self_orthogonal(gen, weights).passed
    absorbed = absorb_weights(gen, weights)
    ok &= absorbed.to_ints() == reference.F5_GEN_ABSORBED
    ok &= check_self_orthogonal(absorbed).passed
    return ok


def _example_tower() -> bool:
    tp = tower_params(2, 2)
    ok = (tp.n_i, tp.g_i) == (reference.TOWER_M2_I2["n"], reference.TOWER_M2_I2["genus"])
    b = matsumoto_bounds(2, 2, reference.TOWER_BINARY_120["j"])
    ok &= b.binary_n == reference.TOWER_BINARY_120["n"]
    ok &= b.binary_k_lower == reference.TOWER_BINARY_120["k_lower"]
    ok &= b.binary_d_lower == reference.TOWER_BINARY_120["d_lower"]
    ok &= rate_bound(2, 0) == Fraction(*reference.RATE_THRESHOLD_M2)
    ok &= not matsumoto_bounds(2, 2, reference.TOWER_INVALID_J).delta_valid
    return ok


def _example_ninequbit() -> bool:
    field = field_new(2, allow_even_characteristic=True)
    gen = MatrixGF.from_ints(field, reference.NINE_QUBIT_GEN)
    ok = check_self_orthogonal(gen).passed
    ok &= gen.rank() == 8
    return ok


EXAMPLES = {
    "hamming": _example_hamming,
    "gf19-r1": lambda: _example_gf19(1),
    "gf19-r2": lambda: _example_gf19(2),
    "gf9": _example_gf9,
    "gf3": _example_gf3,
    "css-f7": _example_css_f7,
    "sympl-f5": _example_sympl_f5,
    "tower-120": _example_tower,
    "ninequbit": _example_ninequbit,
}


def cmd_examples(args) -> int:
    names = list(EXAMPLES) if args.name == "all" else [args.name]
    if any(n not in EXAMPLES for n in names):
        print(f"unknown example {args.name!r}; choose from: "
              + ", ".join(EXAMPLES) + ", all", file=sys.stderr)
        return 2
    failures = 0
    for name in names:
        ok = EXAMPLES[name]()
        print(f"{name:>10}: {'pass' if ok else 'FAIL'}")
        failures += 0 if ok else 1
    if args.name == "all":
        print(f"{len(names) - failures}/{len(names)} examples pass")
    return 0 if failures == 0 else 1


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgoppa",
        description="Quantum Goppa codes from hyperelliptic curves "
                    "over odd-characteristic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_curve_opts(p):
        p.add_argument("--field", required=True,
                       help="p, p^m, or p^m,modulus=c0,c1,...")
        p.add_argument("--curve", required=True,
                       help="polynomial f(x), e.g. \"(x-1)*(x-2)*(x-3)*(x-4)*(x-5)\"")
        p.add_argument("--normalize", action="store_true",
                       help="factor out square parts of f before building")

    p = sub.add_parser("places", help="list rational places of a curve")
    add_curve_opts(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_places)

    p = sub.add_parser("construct-classical", help="build a Goppa code")
    add_curve_opts(p)
    p.add_argument("--pairs", type=int, required=True, help="number of split pairs")
    p.add_argument("--r", type=int, default=1, help="dimension parameter")
    p.add_argument("--css-side", action="store_true",
                   help="single-block layout with per-place weights")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="stem for .classical.json output")
    p.set_defaults(func=cmd_construct_classical)

    p = sub.add_parser("construct-quantum", help="build a stabilizer code")
    add_curve_opts(p)
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--method", choices=("direct", "css"), default="direct")
    p.add_argument("--project-base", action="store_true",
                   help="project onto the prime field via a self-dual basis")
    p.add_argument("--verify", action="store_true",
                   help="run the brute-force verifier on the result")
    p.add_argument("--seed", type=int, default=0,
                   help="accepted for compatibility; the basis search is deterministic")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="stem for .quantum.json/.report.txt output")
    p.set_defaults(func=cmd_construct_quantum)

    p = sub.add_parser("verify", help="verify an exported stabilizer code")
    p.add_argument("--input", required=True, help="path to a .quantum.json file")
    p.add_argument("--exhaustive", action="store_true",
                   help="raise the enumeration bound for the distance check")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tower-bounds", help="closed-form tower parameters")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--sweep", action="store_true", help="tabulate all valid j")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_tower_bounds)

    p = sub.add_parser("examples", help="re-run a frozen worked example")
    p.add_argument("name", help="example name or 'all'")
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QGoppaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
