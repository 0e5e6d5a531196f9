"""Command-line front end: ``catkit check|analyze|imll|render|gen``."""
import argparse
import json
import sys

from . import config, io
from .errors import CatkitError, InputError, StructuralError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(args, report, title):
    if args.json:
        print(json.dumps({"title": title, **report.to_dict()}, sort_keys=True))
    else:
        print(report.format_text(title), end="")
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_check(args):
    from .category import check_category
    from .functor import check_functor, check_nat_trans
    from .monoidal import check_monoidal, check_smcc

    status = EXIT_OK
    for path in args.files:
        if args.target == "category":
            report = check_category(io.load_category(path))
        elif args.target == "functor":
            report = check_functor(io.load_functor(path))
        elif args.target == "nattrans":
            report = check_nat_trans(io.load_nattrans(path))
        elif args.target == "monoidal":
            report = check_monoidal(io.load_monoidal(path))
        else:
            report = check_smcc(io.load_smcc(path))
        status = max(status, _emit(args, report, f"{args.target} {path}"))
    return status


def _yes(flag):
    return "true" if flag else "false"


def cmd_analyze(args):
    from .category import check_category
    from .constructions import SubobjectClassifierWitness, analyze_structure, monos_are_equalizers

    cat = io.load_category(args.file)
    base = check_category(cat)
    if not base.verdict:
        return _emit(args, base, f"category {args.file}")
    ladder_wanted = args.ladder or not args.monos_equalizers
    out = {}
    lines = []
    status = EXIT_OK
    classifier = None
    if ladder_wanted or args.monos_equalizers:
        report = analyze_structure(cat)
        lad = report.info["ladder"]
        classifier = report.info["classifier"]
        out["ladder"] = lad
        if ladder_wanted:
            t = f" (object {lad['terminal']})" if lad["has_terminal"] else ""
            lines.append(f"terminal: {_yes(lad['has_terminal'])}{t}")
            fp = lad["failing_pair"]
            lines.append(f"binary_products: {_yes(lad['has_binary_products'])}"
                         + (f" (failing pair ({fp[0]},{fp[1]}))" if fp else ""))
            lines.append(f"cartesian: {_yes(lad['cartesian'])}")
            if lad["has_binary_products"]:
                fe = lad["failing_exponential"]
                lines.append(f"exponentials: {_yes(lad['has_exponentials'])}"
                             + (f" (failing pair ({fe[0]},{fe[1]}))" if fe else ""))
            else:
                lines.append("exponentials: false (needs binary products)")
            lines.append(f"cartesian_closed: {_yes(lad['cartesian_closed'])}")
            o = f" (Ω = object {lad['omega']})" if lad["has_subobject_classifier"] else ""
            lines.append(f"subobject_classifier: {_yes(lad['has_subobject_classifier'])}{o}")
            lines.append(f"is_topos: {_yes(lad['is_topos'])}")
    if args.monos_equalizers:
        r = monos_are_equalizers(cat, classifier)
        n, k = r.stats["monos"], r.stats["equalizers"]
        out["monos_equalizers"] = r.to_dict()
        if n == k:
            lines.append(f"all {n} monos are equalizers")
        else:
            lines.append(f"{k} of {n} monos are equalizers")
            status = EXIT_FAIL
        for m, (f, g) in sorted(r.info["certificates"].items()):
            lines.append(f"  mono {m}: equalizer of ({f}, {g})")
        for v in r.violations:
            lines.append(f"  {v}")
    if args.json:
        print(json.dumps(io_plain(out), sort_keys=True))
    else:
        print("\n".join(lines))
    return status


def io_plain(obj):
    from .report import _plain
    return _plain(obj)


def cmd_imll(args):
    from .imll import (check_proof, compile_proof, dom_cod_check, evaluate_term, parse_proof,
                       sexpr, typing)

    try:
        with open(args.proof, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {args.proof}: {e.strerror}") from None
    tree = parse_proof(text)
    seq = check_proof(tree)
    term = compile_proof(tree)
    src, dst = typing(term)
    out = {"sequent": str(seq), "term": sexpr(term), "dom": str(src), "cod": str(dst)}
    lines = [f"sequent: {seq}", f"term: {sexpr(term)}", f"dom: {src}", f"cod: {dst}"]
    status = EXIT_OK
    if args.action == "eval":
        if not (args.model and args.env):
            raise InputError("imll eval needs --model and --env")
        model = io.load_smcc(args.model)
        env = io.load_environment(args.env).validate(model)
        value = evaluate_term(term, env, model)
        report = dom_cod_check(term, seq, env, model)
        out["value"] = value
        out["dom_cod_check"] = report.to_dict()
        lines.append(f"value: {value}")
        lines.append("dom_cod_check: " + ("OK" if report.verdict else "FAIL"))
        lines.extend(f"  {v}" for v in report.violations)
        if not report.verdict:
            status = EXIT_FAIL
        if args.expect is not None:
            C = model.base
            if not 0 <= args.expect < C.size:
                raise InputError(f"--expect {args.expect} is out of range")
            ok = value == args.expect and C.E(value)
            out["expect"] = ok
            lines.append(f"expect {args.expect}: " + ("match" if ok else "mismatch"))
            if not ok:
                status = EXIT_FAIL
    elif args.expect is not None:
        raise InputError("--expect only applies to imll eval")
    if args.json:
        print(json.dumps(io_plain(out), sort_keys=True))
    else:
        print("\n".join(lines))
    return status


def cmd_render(args):
    from .render import render_witness

    kind, fields, cat = io.witness_from_dict(io.read_json(args.witness))
    if args.kind and args.kind != kind:
        raise InputError(f"witness file holds a {kind}, not a {args.kind}")
    sys.stdout.write(render_witness(kind, fields, cat))
    return EXIT_OK


def cmd_gen(args):
    from . import models

    if args.model == "finset":
        obj = io.category_to_dict(models.skeletal_finset(args.max))
    elif args.model == "poset":
        if args.divisors is not None:
            spec = models.LatticeSpec.divisors(args.divisors)
        else:
            spec = models.LatticeSpec.boolean(args.bool)
        obj = io.category_to_dict(models.poset_category(spec))
    elif args.model == "heyting":
        spec = (models.LatticeSpec.divisors(args.divisors) if args.divisors is not None
                else models.LatticeSpec.boolean(args.bool))
        obj = io.smcc_to_dict(models.heyting_smcc(spec))
    else:
        obj = io.smcc_to_dict(models.group_smcc(args.n))
    text = io.write_json(obj, args.output)
    if args.output is None:
        print(text)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="catkit", description="Finite category and SMCC checker.")
    p.add_argument("--max-size", type=int, default=None, help="size guard for brute-force work")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check axioms of a structure")
    c.add_argument("target", choices=["category", "functor", "nattrans", "monoidal", "smcc"])
    c.add_argument("files", nargs="+")
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("analyze", help="structure ladder up to topos")
    a.add_argument("file")
    a.add_argument("--ladder", action="store_true")
    a.add_argument("--monos-equalizers", action="store_true")
    a.set_defaults(func=cmd_analyze)

    i = sub.add_parser("imll", help="compile or evaluate an IMLL proof")
    i.add_argument("action", choices=["compile", "eval"])
    i.add_argument("proof")
    i.add_argument("--env")
    i.add_argument("--model")
    i.add_argument("--expect", type=int)
    i.set_defaults(func=cmd_imll)

    r = sub.add_parser("render", help="ASCII diagram of a witness")
    r.add_argument("witness")
    r.add_argument("--kind", choices=["pullback", "product"])
    r.set_defaults(func=cmd_render)

    g = sub.add_parser("gen", help="emit a model as JSON")
    g.add_argument("model", choices=["finset", "poset", "heyting", "group"])
    g.add_argument("--max", type=int, default=4)
    g.add_argument("--divisors", type=int)
    g.add_argument("--bool", type=int, default=2)
    g.add_argument("--n", type=int, default=3)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.max_size is not None:
        if args.max_size < 1:
            print("error: --max-size must be positive", file=sys.stderr)
            return EXIT_INPUT
        config.set_max_size(args.max_size)
    try:
        return args.func(args)
    except CatkitError as e:
        if isinstance(e, StructuralError):
            print(f"structural error: {e}", file=sys.stderr)
            return EXIT_FAIL
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if args.max_size is not None:
            config.set_max_size(None)


if __name__ == "__main__":
    sys.exit(main())
