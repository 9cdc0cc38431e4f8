"""Command-line front end.

    unimodular solve 12 4 2 3
    unimodular present 12 4 2 3 --m-strategy all
    unimodular structure 12 4 2 3 --i 1 --format json
    unimodular verify --count 100 --max-n 5 --seed 7
    unimodular verify --replay report.json
    unimodular example

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
JSON output serializes every integer as a decimal string.
"""

import argparse
import json
import logging
import sys
from math import gcd
from importlib import resources
from pathlib import Path

from .basis import build_basis, verify_basis
from .checks import run_checks, summarize
from .corpus import corpus
from .errors import UnimodularError
from .matrix import IntMatrix, snf, solve_upper_triangular
from .oracle import ModuleSpan, oracle_basis
from .presentation import build_presentation, check_diagonal_minors, relation_residuals
from .quotients import (
    S_mod_Si_smith,
    S_mod_Ui_smith,
    W_mod_S_smith,
    check_C_divisibility,
    compute_C,
    d_chain,
    quotient_S_mod_Si,
    quotient_S_mod_Ui,
    quotient_W_mod_S,
)
from .ring import gcd_prefixes
from .solution import Coefficients, choose_M, from_w_coords, spanning_set, u_vector, v_vector

log = logging.getLogger("unimodular")


def _s(x):
    """Recursively turn ints into decimal strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, IntMatrix):
        return _s(x.tolist())
    if isinstance(x, dict):
        return {str(k): _s(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_s(v) for v in x]
    return x


def _structure(q):
    return {
        "free_rank": q.free_rank,
        "invariant_factors": list(q.invariant_factors),
        "elementary_divisors": {p: list(v) for p, v in q.elementary_divisors.items()},
        "text": str(q),
    }


def _check(name, ref, ok, detail=""):
    return {"name": name, "paper_ref": ref, "pass": bool(ok), "detail": detail}


def _read_coefficients(args) -> Coefficients:
    values = list(args.coefficients or [])
    if getattr(args, "file", None):
        for line in Path(args.file).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                values.append(line)
    try:
        ints = [int(v) for v in values]
    except ValueError as exc:
        raise UnimodularError(f"malformed coefficient: {exc}") from exc
    return Coefficients(tuple(ints))


def build_report(c: Coefficients, pivot=None, strategy="greedy-minimal", i=1) -> dict:
    """The full JSON-ready document for one coefficient vector."""
    n = c.n
    bm = build_basis(c, strategy=strategy, pivot=pivot)
    cert = verify_basis(c, bm.basis, bm.pivot)
    checks = [
        _check("basis_certified", "basis construction + determinant certificate", True,
               f"|det| = {abs(cert.det)}"),
        _check("basis_matches_oracle", "basis construction vs gcd-transform basis",
               ModuleSpan(bm.basis, n) == ModuleSpan(oracle_basis(c), n)),
    ]

    pres = build_presentation(c, bm.M)
    pres_doc = {"M": list(pres.M), "d": pres.d, "e": pres.e,
                "D_pairs": [list(p) for p in pres.D_pairs],
                "E_triples": [list(t) for t in pres.E_triples],
                "relation_matrix": pres.rel, "snf_diagonal": [], "rank": 0}
    if pres.e:
        res = snf(pres.rel)
        pres_doc["snf_diagonal"] = list(res.invariant_factors)
        pres_doc["rank"] = res.rank
        want = pres.d - (n - 1)
        checks.append(_check("presentation_relations", "three-term relations annihilate generators",
                             all(not any(r) for r in relation_residuals(pres))))
        checks.append(_check("presentation_smith",
                             "relation matrix Smith form diag(1..1,0..0), rank d-(n-1)",
                             res.rank == want and all(f == 1 for f in res.invariant_factors),
                             f"rank {res.rank}, expected {want}"))
        checks.append(_check("presentation_diagonal_minors", "diagonal a_i-minors of the relation matrix",
                             check_diagonal_minors(pres)))

    # W/S is taken relative to the requested pivot, else a_i, else the basis pivot
    wp = pivot if pivot is not None else (i if c[i] else bm.pivot)
    s_si = quotient_S_mod_Si(c, i, check=False)
    s_ui = quotient_S_mod_Ui(c, i, check=False)
    w_s = quotient_W_mod_S(c, wp, check=False)
    checks.append(_check("W_mod_S", "W/S cyclic of order |a_1|", w_s == W_mod_S_smith(c, wp, bm)))
    checks.append(_check("S_mod_Si", "S/S_i = (Z/a_i)^(n-2)", s_si == S_mod_Si_smith(c, i, bm)))
    checks.append(_check("S_mod_Ui", "S/U_i from d-chain p-parts", s_ui == S_mod_Ui_smith(c, i, bm)))

    rotated = c.permuted((i,) + tuple(k for k in range(1, n + 1) if k != i))
    chain = C = None
    if n > 2 and c[i]:
        chain = list(d_chain(rotated))
        C = compute_C(rotated)
        checks.append(_check("C_matrix", "C = A^-1 D integral, diagonal (1,d_2..), gcd divisibility",
                             check_C_divisibility(C)))

    return {
        "coefficients": list(c.a),
        "pivot": bm.pivot,
        "w_pivot": wp,
        "M": list(bm.M),
        "order": list(bm.order),
        "basis": [list(z) for z in bm.basis],
        "w_coordinate_matrix": bm.A,
        "det": cert.det,
        "index": i,
        "quotients": {"S_mod_Si": _structure(s_si), "S_mod_Ui": _structure(s_ui),
                      "W_mod_S": _structure(w_s)},
        "d_chain": chain,
        "C": C,
        "presentation": pres_doc,
        "checks": checks,
    }


def _emit(args, doc, text_lines):
    if args.format == "json":
        print(json.dumps(_s(doc), indent=2))
    else:
        print("\n".join(text_lines))
    return 0 if all(ch["pass"] for ch in doc.get("checks", [])) else 1


def _check_lines(checks):
    return [f"  [{'pass' if ch['pass'] else 'FAIL'}] {ch['name']}: {ch['paper_ref']}"
            + (f" ({ch['detail']})" if ch.get("detail") else "") for ch in checks]


def _mat_lines(M, indent="    "):
    return [indent + line for line in str(M).splitlines()]


def cmd_solve(args):
    c = _read_coefficients(args)
    doc = build_report(c, args.pivot, args.m_strategy)
    doc["command"] = "solve"
    lines = [f"equation: {' + '.join(f'{a}*X{k}' for k, a in enumerate(c.a, 1))} = 0",
             f"M = {doc['M']}, pivot = {doc['pivot']}, coordinate order = {doc['order']}",
             "basis of S:"]
    lines += [f"  z_{k} = {z}" for k, z in enumerate(doc["basis"], 2)]
    lines += ["w-coordinate matrix:"] + _mat_lines(doc["w_coordinate_matrix"])
    lines += [f"det = {doc['det']} (|a_pivot| = {abs(c[doc['pivot']])})", "checks:"]
    lines += _check_lines(doc["checks"])
    return _emit(args, doc, lines)


def cmd_present(args):
    c = _read_coefficients(args)
    doc = build_report(c, args.pivot, args.m_strategy)
    doc["command"] = "present"
    pr = doc["presentation"]
    lines = [f"M = {pr['M']}, d = {pr['d']}, e = {pr['e']}",
             "generators x(i,j) -> v(i,j):"]
    lines += [f"  x{tuple(pq)} -> {v_vector(c, *pq)}" for pq in pr["D_pairs"]]
    lines += ["relations y(i,j,k) = a_k x(i,j) - a_j x(i,k) + a_i x(j,k):"]
    lines += [f"  y{tuple(t)}" for t in pr["E_triples"]] or ["  (none)"]
    if pr["e"]:
        lines += ["relation matrix:"] + _mat_lines(pr["relation_matrix"])
        lines += [f"Smith diagonal {pr['snf_diagonal']}, rank {pr['rank']} "
                  f"(expected {pr['d'] - (c.n - 1)})"]
    lines += ["checks:"] + _check_lines(doc["checks"])
    return _emit(args, doc, lines)


def cmd_structure(args):
    c = _read_coefficients(args)
    i = args.i
    doc = build_report(c, args.pivot, args.m_strategy, i=i)
    doc["command"] = "structure"
    q = doc["quotients"]
    lines = [f"W/S   = {q['W_mod_S']['text']}   (pivot {doc['w_pivot']})",
             f"S/S_{i} = {q['S_mod_Si']['text']}",
             f"S/U_{i} = {q['S_mod_Ui']['text']}   elementary divisors "
             f"{q['S_mod_Ui']['elementary_divisors']}"]
    if doc["d_chain"] is not None:
        lines += [f"d-chain (a_{i} first) = {doc['d_chain']}", "C = A^-1 D:"] + _mat_lines(doc["C"])
    lines += ["checks:"] + _check_lines(doc["checks"])
    return _emit(args, doc, lines)


def _instance_doc(c, checks):
    return {"coefficients": list(c.a),
            "checks": [_check(ch.name, ch.ref, ch.passed, ch.detail) for ch in checks]}


def cmd_verify(args):
    if args.replay:
        return _replay(args)
    if args.coefficients or args.file:
        cases = [_read_coefficients(args)]
    else:
        cases = corpus(args.seed, args.count, 2, args.max_n, args.max_coeff)
    results = []
    for c in cases:
        results.append(run_checks(c, bound=args.bound))
    doc = {"command": "verify", "seed": args.seed, "bound": args.bound,
           "instances": [_instance_doc(c, r) for c, r in zip(cases, results)]}
    summary = summarize(results)
    doc["summary"] = {k: dict(v) for k, v in summary.items()}
    failed = sum(v["failed"] for v in summary.values())
    lines = [f"seed {args.seed}, {len(cases)} coefficient vector(s), box bound {args.bound}"]
    for name, cnt in summary.items():
        lines.append(f"  [{'pass' if not cnt['failed'] else 'FAIL'}] {name}: "
                     f"{cnt['passed']} passed, {cnt['failed']} failed")
    if failed:
        for c, r in zip(cases, results):
            for ch in r:
                if not ch.passed:
                    lines.append(f"  failure {c.a}: {ch.name} ({ch.ref}) {ch.detail}")
    if args.format == "json":
        print(json.dumps(_s(doc), indent=2))
    else:
        print("\n".join(lines))
    return 1 if failed else 0


def _replay(args):
    doc = json.loads(Path(args.replay).read_text())
    bound = int(doc.get("bound", args.bound))
    instances = doc.get("instances") or [doc]
    mismatches = []
    for inst in instances:
        c = Coefficients(tuple(int(a) for a in inst["coefficients"]))
        stored = {ch["name"]: ch["pass"] for ch in inst["checks"]}
        fresh = {ch.name: ch.passed for ch in run_checks(c, bound=bound)}
        for name, ok in stored.items():
            if name in fresh and fresh[name] != ok:
                mismatches.append((c.a, name, ok, fresh[name]))
    for a, name, old, new in mismatches:
        print(f"mismatch {a}: {name} stored {old}, recomputed {new}")
    print(f"replayed {len(instances)} instance(s) from seed {doc.get('seed')}: "
          f"{'identical' if not mismatches else f'{len(mismatches)} mismatches'}")
    return 1 if mismatches else 0


def example_items():
    """Recompute the 12 X1 + 4 X2 + 2 X3 + 3 X4 = 0 walkthrough and pair each
    value with its stored golden."""
    golden = json.loads(resources.files("unimodular").joinpath("data/example_12_4_2_3.json").read_text())
    c = Coefficients(tuple(golden["coefficients"]))
    A = IntMatrix(golden["listed_basis_matrix"])
    listed_basis = [from_w_coords(c, col, 1) for col in A.columns()]
    cert = verify_basis(c, listed_basis, 1)
    vw = IntMatrix.from_columns([v_vector(c, 1, j)[1:] for j in range(2, 5)])
    v_coords = solve_upper_triangular(A, vw)
    u_coords = compute_C(c, A)
    M = choose_M(c, "greedy-minimal")
    pres = build_presentation(c, M)
    rel_snf = snf(pres.rel)
    got = {
        "coefficients": list(c.a),
        "prefix_gcds": list(gcd_prefixes(c.a)),
        "pair_gcds_with_a1": [gcd(c[1], c[j]) for j in range(2, 5)],
        "x_diagonal": list(build_basis(c, M=(1, 2, 3, 4)).X.diagonal()),
        "listed_basis_matrix": A.tolist(),
        "listed_basis": [list(z) for z in listed_basis],
        "basis_det": abs(cert.det),
        "W_mod_S": list(quotient_W_mod_S(c, 1).invariant_factors),
        "v_coordinates": v_coords.tolist(),
        "v_coordinates_smith": list(snf(v_coords).invariant_factors),
        "S_mod_S1": list(quotient_S_mod_Si(c, 1).invariant_factors),
        "u_vectors": [list(u_vector(c, 1, j)) for j in range(2, 5)],
        "u_coordinates": u_coords.tolist(),
        "u_coordinates_smith": list(snf(u_coords).invariant_factors),
        "d_chain": list(d_chain(c)),
        "S_mod_U1_elementary_divisors": {str(p): list(v) for p, v in
                                         quotient_S_mod_Ui(c, 1).elementary_divisors.items()},
        "M": list(M),
        "spanning_set": [list(v) for v in spanning_set(c, M)],
        "n_m_d_e_rank": [c.n, len(M), pres.d, pres.e, rel_snf.rank],
        "relation_matrix": pres.rel.tolist(),
        "relation_smith": list(rel_snf.invariant_factors),
    }
    items = [(k, golden[k], got[k]) for k in golden]
    same_module = ModuleSpan(listed_basis, 4) == ModuleSpan(build_basis(c).basis, 4)
    items.append(("built_basis_spans_listed_module", True, same_module))
    return items


def cmd_example(args):
    items = example_items()
    ok = all(exp == got for _, exp, got in items)
    if args.format == "json":
        print(json.dumps(_s({"command": "example", "pass": ok, "items": [
            {"name": k, "expected": e, "got": g, "pass": e == g} for k, e, g in items]}), indent=2))
    else:
        print("12 X1 + 4 X2 + 2 X3 + 3 X4 = 0")
        for k, e, g in items:
            print(f"  [{'ok' if e == g else 'MISMATCH'}] {k}: {g}"
                  + ("" if e == g else f" (expected {e})"))
    return 0 if ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    coeffs = argparse.ArgumentParser(add_help=False)
    coeffs.add_argument("coefficients", nargs="*", help="integer coefficients a_1 ... a_n")
    coeffs.add_argument("--file", help="read coefficients from a file, one per line, # comments")
    coeffs.add_argument("--pivot", type=int, default=None, help="1-based pivot index (a_pivot != 0)")
    coeffs.add_argument("--m-strategy", choices=("all", "greedy-minimal"), default="greedy-minimal")

    ap = argparse.ArgumentParser(prog="unimodular", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, coeffs], help="certified basis of S")
    p.set_defaults(func=cmd_solve)
    p = sub.add_parser("present", parents=[common, coeffs], help="generators and relations")
    p.set_defaults(func=cmd_present)
    p = sub.add_parser("structure", parents=[common, coeffs], help="W/S, S/S_i, S/U_i")
    p.add_argument("--i", type=int, default=1, help="1-based index i for S/S_i and S/U_i")
    p.set_defaults(func=cmd_structure)
    p = sub.add_parser("verify", parents=[common, coeffs], help="cross-oracle check suite")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-coeff", type=int, default=10 ** 6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=2, help="box bound for enumeration checks")
    p.add_argument("--replay", help="re-run the checks of a saved JSON report and compare")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("example", parents=[common], help="replay the 12,4,2,3 walkthrough")
    p.set_defaults(func=cmd_example)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UnimodularError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
