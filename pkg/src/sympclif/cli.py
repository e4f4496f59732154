"""Command line entry point: ``sympclif <subcommand> ...``; everything is printed as JSON."""
from __future__ import annotations

import argparse
import json
import sys

from .spinor import Spinor, apply


def _load_spinor(text: str) -> Spinor:
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    return Spinor.from_json(json.loads(text))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_verify(args) -> int:
    from .suites import failures, run_suite, to_json_lines

    params = {"hmax": args.hmax, "kmax": args.kmax, "degree": args.degree,
              "max_j": args.max_j, "max_k": args.max_k, "order": args.order}
    params = {k: v for k, v in params.items() if v is not None}
    if args.n is not None:
        params["n"] = [args.n]
    results = run_suite(args.suite, params)
    print(to_json_lines(results))
    return 1 if failures(results) else 0


def cmd_basis(args) -> int:
    from . import bases

    if args.float:
        if args.family == "sE":
            terms = bases.basis_sE_float(args.h, args.k)
        elif args.family == "complex":
            terms = bases.basis_complex_float(args.parity, args.h, args.k)
        else:
            raise SystemExit("--float applies to the complex and sE families")
        _emit({"terms": [{"exponents": list(k), "re": v.real, "im": v.imag} for k, v in sorted(terms.items())]})
        return 0
    if args.family == "real":
        _emit({"spinor": bases.basis_real(args.parity, args.h, args.k).to_json()})
        return 0
    if args.family == "complex":
        s, f = bases.basis_complex_rescaled(args.parity, args.h, args.k)
    else:
        s, f = bases.basis_sE(args.h, args.k)
    _emit({"spinor": s.to_json(), "rescale": f.to_json()})
    return 0


def cmd_pair(args) -> int:
    from .pairing import fischer, fischer1

    a, b = _load_spinor(args.left), _load_spinor(args.right)
    if args.form == "fischer":
        val = fischer(a, b, conjugate=not args.bilinear)
    else:
        val = fischer1(a, b)
    _emit(val.to_json())
    return 0


def cmd_kernel(args) -> int:
    from .pairing import kernel_K, kernel_Z

    ker = kernel_K(args.k) if args.type == "K" else kernel_Z(args.k)
    _emit(ker.to_json())
    return 0


def cmd_apply(args) -> int:
    from .parser import evaluate

    op = evaluate(args.op, args.n)
    if args.spinor is None:
        _emit({"operator": op.to_json(), "text": str(op)})
        return 0
    s = _load_spinor(args.spinor)
    _emit({"spinor": apply(op, s).to_json()})
    return 0


def cmd_spectral(args) -> int:
    from . import spectral
    from .suites import monogenic_corpus

    if args.action == "exp-lemma":
        ok = spectral.exp_identity_truncated(args.order)
        _emit({"check": "exp_lemma", "order": args.order, "status": "pass" if ok else "fail"})
        return 0 if ok else 1
    corpus = monogenic_corpus(args.n, args.k)
    ok = all(spectral.verify_conjugated_eigen(args.j, args.k, args.n, m) for m in corpus)
    _emit({
        "check": "conjugated_eigen", "j": args.j, "k": args.k, "n": args.n,
        "monogenics": len(corpus), "eigenvalue": str(spectral.eigenvalue(args.j, args.k, args.n)),
        "laguerre": spectral.laguerre_coeffs(args.j, args.k, args.n).to_json(),
        "status": "pass" if ok else "fail",
    })
    return 0 if ok else 1


def cmd_symmetry(args) -> int:
    from .symmetry import solve_symmetries

    _emit(solve_symmetries(args.degree).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sympclif", description="Exact operator calculus for D_s.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["commutators", "bases", "pairing", "spectral", "symmetry", "all"])
    v.add_argument("--n", type=int)
    v.add_argument("--degree", type=int)
    v.add_argument("--max-j", type=int)
    v.add_argument("--max-k", type=int)
    v.add_argument("--order", type=int)
    v.add_argument("--hmax", type=int)
    v.add_argument("--kmax", type=int)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("basis", help="emit a monogenic basis element")
    b.add_argument("--family", choices=["real", "complex", "sE"], default="complex")
    b.add_argument("--parity", choices=["odd", "even"], default="odd")
    b.add_argument("--h", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--float", action="store_true", help="normalized element in floating point")
    b.set_defaults(func=cmd_basis)

    pr = sub.add_parser("pair", help="pair two spinors given as JSON (or @file)")
    pr.add_argument("--form", choices=["fischer", "fischer1"], default="fischer")
    pr.add_argument("--left", required=True)
    pr.add_argument("--right", required=True)
    pr.add_argument("--bilinear", action="store_true", help="no conjugation in the fischer form")
    pr.set_defaults(func=cmd_pair)

    k = sub.add_parser("kernel", help="emit a two-point kernel")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--type", choices=["K", "Z"], default="Z")
    k.set_defaults(func=cmd_kernel)

    a = sub.add_parser("apply", help="evaluate an operator expression, optionally on a spinor")
    a.add_argument("--op", required=True)
    a.add_argument("--n", type=int, default=1)
    a.add_argument("--spinor")
    a.set_defaults(func=cmd_apply)

    s = sub.add_parser("spectral", help="eigenfunction identities")
    s.add_argument("action", choices=["verify", "exp-lemma"])
    s.add_argument("--j", type=int, default=1)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--order", type=int, default=8)
    s.set_defaults(func=cmd_spectral)

    y = sub.add_parser("symmetry", help="first-order symmetries")
    y.add_argument("action", choices=["solve"])
    y.add_argument("--degree", type=int, default=3)
    y.set_defaults(func=cmd_symmetry)
    return p


def main(argv=None) -> int:
    from .parser import ParseError

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, KeyError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
