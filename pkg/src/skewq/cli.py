"""Command-line front end: ``skewq {analyze,quiver,hochschild,classify,verify-mf}``."""
from __future__ import annotations

import argparse
import json
import sys

from .clifford import verify_decomposition
from .errors import InputError, InvariantViolation, SkewqError
from .graphcalc import (
    canonical_graph,
    canonicalize,
    classification_json,
    delta_and_invariants,
    graph_from_sign_matrix,
    nullity,
)
from .hochschild import golden_matrix_check, hh_dims
from .quiver import (
    MatrixFactorizationInput,
    build_lambda,
    build_lambda_all_minus,
    builtin_case,
    load_quiver_json,
    realize_algebra,
)
from .skewpoly import SignMatrix, hilbert_dims, verify_matrix_factorization


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def load_epsilon(path: str) -> SignMatrix:
    data = _read_json(path)
    try:
        n = int(data["n"])
        upper = data.get("upper", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: expected {{\"n\": ..., \"upper\": [...]}}") from exc
    return SignMatrix.from_upper(n, upper)


def analyze(eps: SignMatrix) -> dict:
    inv = delta_and_invariants(eps)
    g = graph_from_sign_matrix(eps)
    report = {
        "n": eps.n,
        "invariants": inv.as_dict(),
        "hilbert": hilbert_dims(eps, 8),
        "graph": g.to_text(),
    }
    if eps.n == 1:
        report["note"] = "qgr trivial: A_eps is finite-dimensional"
        report["canonical_graph"] = g.to_text()
        report["clifford"] = None
        return report
    res = canonicalize(g)
    if nullity(res.graph) != inv.r:
        raise InvariantViolation("canonical form changed the nullity")
    report["canonical_graph"] = canonical_graph(res.graph).to_text()
    report["canonical_ops"] = res.ops_text()
    cliff = verify_decomposition(eps)
    if not cliff["pass"]:
        raise InvariantViolation(cliff.get("mismatch", "Clifford decomposition failed"))
    report["clifford"] = cliff
    return report


def quiver_report(pres, dot: bool) -> str:
    if dot:
        return pres.to_dot()
    out = pres.to_json()
    out["name"] = pres.name
    return dumps(out) + "\n"


def verify_mf(data: dict) -> dict:
    mf = MatrixFactorizationInput.from_json(data)
    inv = delta_and_invariants(mf.eps)
    results = []
    for M, Mp in mf.pairs:
        ok = verify_matrix_factorization(M, Mp, mf.eps)
        results.append({"size": M.rows, "pass": ok})
    return {
        "n": mf.eps.n,
        "alpha": inv.alpha,
        "beta": inv.beta,
        "pairs": results,
        "pass": bool(results) and all(r["pass"] for r in results),
    }


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewq", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    a = sub.add_parser("analyze", help="invariants, Hilbert dims, canonical graph, Clifford check")
    a.add_argument("file")

    q = sub.add_parser("quiver", help="quiver presentation of the tilting endomorphism algebra")
    src = q.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?")
    src.add_argument("--case", choices=["QS1", "QS2", "QS3"])
    src.add_argument("--all-minus", type=int, metavar="N")
    q.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")

    h = sub.add_parser("hochschild", help="dimensions of HH^0, HH^1, HH^2")
    hsrc = h.add_mutually_exclusive_group(required=True)
    hsrc.add_argument("file", nargs="?")
    hsrc.add_argument("--case", choices=["QS1", "QS2", "QS3"])
    h.add_argument("--golden", action="store_true", help="compare against the printed matrix")

    c = sub.add_parser("classify", help="mutation classes of graphs on n vertices")
    c.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify-mf", help="check matrix factorizations of f_eps")
    v.add_argument("file")
    return p


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    if args.cmd == "analyze":
        out.write(dumps(analyze(load_epsilon(args.file))) + "\n")
    elif args.cmd == "quiver":
        if args.case:
            pres = builtin_case(args.case)
        elif args.all_minus is not None:
            pres = build_lambda_all_minus(args.all_minus)
        else:
            mf = MatrixFactorizationInput.from_json(_read_json(args.file))
            pres = build_lambda(mf, name=args.file)
        out.write(quiver_report(pres, args.dot))
    elif args.cmd == "hochschild":
        if args.golden:
            if not args.case:
                raise InputError("--golden needs --case")
            out.write(dumps(golden_matrix_check(args.case)) + "\n")
        else:
            if args.case:
                pres = builtin_case(args.case)
            else:
                with open(args.file, encoding="utf-8") as fh:
                    pres = load_quiver_json(fh.read())
            out.write(dumps(hh_dims(realize_algebra(pres)).as_dict()) + "\n")
    elif args.cmd == "classify":
        out.write(dumps(classification_json(args.n)) + "\n")
    elif args.cmd == "verify-mf":
        report = verify_mf(_read_json(args.file))
        out.write(dumps(report) + "\n")
        if not report["pass"]:
            return InvariantViolation.exit_code
    return 0


def main(argv=None) -> int:
    try:
        return run(argv)
    except SkewqError as exc:
        print(f"skewq: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"skewq: {exc}", file=sys.stderr)
        return InputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
