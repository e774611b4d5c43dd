"""Command-line client for the toolkit.

Every subcommand builds the same request models the HTTP service accepts and
dispatches in-process through the service handlers; `serve` starts the HTTP
server itself.  `--json` selects canonical machine output (sorted keys,
canonical polynomial strings).  Exit codes: 0 success, 2 contract errors,
1 internal assertion failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import acceptance
from .errors import ContractError, MultresError
from .ring import parse_ring
from .service import handlers
from .service import schemas as S


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _ring_model(spec: str) -> S.RingModel:
    return S.RingModel.from_core(parse_ring(spec))


def _split_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _algebra_model(args) -> S.ReesModel:
    if getattr(args, "algebra", None):
        with open(args.algebra, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return S.ReesModel.model_validate(data)
    if not args.ring or not args.gen:
        raise ContractError("need --algebra FILE or both --ring and --gen")
    ring = _ring_model(args.ring)
    gens = []
    for item in args.gen:
        if "@" not in item:
            raise ContractError(f"generator {item!r} must look like 'expr @ weight'")
        expr, weight = item.rsplit("@", 1)
        gens.append(S.GeneratorModel(poly=expr.strip(), weight=int(weight)))
    return S.ReesModel(ring=ring, generators=gens)


def _center_model(args) -> S.CenterModel:
    if not args.center:
        raise ContractError("need --center VAR[,VAR...]")
    shift = _split_list(args.shift) if getattr(args, "shift", None) else None
    return S.CenterModel(vars=_split_list(args.center), shift=shift)


def _presentation_model(args) -> S.PresentationModel:
    if getattr(args, "presentation", None):
        with open(args.presentation, "r", encoding="utf-8") as fh:
            return S.PresentationModel.model_validate(json.load(fh))
    if not args.base or not args.entry:
        raise ContractError("need --presentation FILE or both --base and --entry")
    entries = []
    for item in args.entry:
        if "=" not in item:
            raise ContractError(f"entry {item!r} must look like 'X1 = X1^2 - x'")
        var, expr = item.split("=", 1)
        entries.append(S.PresentationEntryModel(var=var.strip(), poly=expr.strip()))
    return S.PresentationModel(base=_ring_model(args.base), entries=entries)


# -- subcommand implementations -----------------------------------------


def cmd_order(args) -> int:
    resp = handlers.handle_order(
        S.OrderRequest(ring=_ring_model(args.ring), poly=args.poly, at=_split_list(args.at))
    )
    print(_dump(resp.model_dump()) if args.json else resp.order)
    return 0


def cmd_sing(args) -> int:
    resp = handlers.handle_sing(S.SingRequest(algebra=_algebra_model(args)))
    if args.json:
        print(_dump(resp.model_dump()))
    else:
        for g in resp.generators:
            print(g)
        if resp.empty_certified:
            print("# a generator is a nonzero constant: Sing is empty")
    return 0


def cmd_ord(args) -> int:
    resp = handlers.handle_ord(
        S.OrdRequest(algebra=_algebra_model(args), at=_split_list(args.at))
    )
    print(_dump(resp.model_dump()) if args.json else resp.ord)
    return 0


def cmd_permissible(args) -> int:
    resp = handlers.handle_permissible(
        S.PermissibleRequest(algebra=_algebra_model(args), center=_center_model(args))
    )
    print(_dump(resp.model_dump()) if args.json else str(resp.permissible).lower())
    return 0


def cmd_transform(args) -> int:
    resp = handlers.handle_transform(
        S.TransformRequest(algebra=_algebra_model(args), center=_center_model(args))
    )
    if args.json:
        print(_dump(resp.model_dump()))
    else:
        for chart in resp.charts:
            gens = ", ".join(f"({g.poly})W^{g.weight}" for g in chart.algebra.generators)
            extra = " (trivial chart)" if chart.trivial else ""
            print(f"chart {chart.pivot}{extra}: [{gens}]")
    return 0


def cmd_elim(args) -> int:
    resp = handlers.handle_elim(
        S.ElimRequest(ring=_ring_model(args.ring), monic=args.monic, var=args.var)
    )
    if args.json:
        print(_dump(resp.model_dump()))
    else:
        print(f"shift: {resp.shift}")
        for g in resp.generators:
            print(f"({g.poly})W^{g.weight}")
    return 0


def cmd_image_nfold(args) -> int:
    resp = handlers.handle_image_nfold(
        S.ElimRequest(ring=_ring_model(args.ring), monic=args.monic, var=args.var)
    )
    if args.json:
        print(_dump(resp.model_dump()))
    elif resp.whole_space:
        print("# the n-fold image is the whole base")
    else:
        for g in resp.generators:
            print(g)
    return 0


def cmd_presentation(args) -> int:
    model = _presentation_model(args)
    if args.action == "attach":
        resp = handlers.handle_presentation_attach(
            S.PresentationAttachRequest(presentation=model)
        )
        if args.json:
            print(_dump(resp.model_dump()))
        else:
            gens = ", ".join(
                f"({g.poly})W^{g.weight}" for g in resp.algebra.generators
            )
            print(f"ambient: {','.join(resp.ambient.variables)}")
            print(f"algebra: [{gens}]")
            print(f"generic rank (complete-intersection model): {resp.generic_rank}")
        return 0
    if args.action == "test":
        if not args.at:
            raise ContractError("presentation test needs --at POINT")
        resp = handlers.handle_presentation_test(
            S.PresentationTestRequest(presentation=model, at=_split_list(args.at))
        )
        if args.json:
            print(_dump(resp.model_dump()))
        else:
            print("n-fold" if resp.nfold else "not n-fold")
            for f in resp.factors:
                print(
                    f"  {f.var}: degree {f.degree}, witness {f.witness}, "
                    f"orders {f.orders}, {'ok' if f.nfold else 'fails'}"
                )
        return 0
    if args.action == "transform":
        resp = handlers.handle_presentation_transform(
            S.PresentationTransformRequest(presentation=model, center=_center_model(args))
        )
        if args.json:
            print(_dump(resp.model_dump()))
        else:
            for chart in resp.charts:
                entries = "; ".join(e.poly for e in chart.presentation.entries)
                print(f"chart {chart.pivot}: {entries}")
        return 0
    raise ContractError(f"unknown presentation action {args.action!r}")


def cmd_zariski(args) -> int:
    resp = handlers.handle_zariski(
        S.ZariskiRequest(
            ring=_ring_model(args.ring), monic=args.monic, var=args.var, at=_split_list(args.at)
        )
    )
    if args.json:
        print(_dump(resp.model_dump()))
    else:
        roots = " + ".join(f"{r.multiplicity}" for r in resp.roots) or "0"
        detail = ", ".join(f"{r.root}^{r.multiplicity}" for r in resp.roots)
        print(f"{resp.lhs} = {roots} ({resp.verdict}) roots: {detail}")
    return 0


def _load_script(args) -> S.RunRequest:
    if args.script:
        with open(args.script, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        names = {}
    elif args.session and args.name:
        with open(args.session, "r", encoding="utf-8") as fh:
            session = json.load(fh)
        if session.get("format") != 1:
            raise ContractError("session file must declare \"format\": 1")
        names = session
        scripts = session.get("scripts", {})
        if args.name not in scripts:
            raise ContractError(f"script {args.name!r} not in session")
        data = scripts[args.name]
    else:
        raise ContractError("need --script FILE or --session FILE with --name NAME")
    obj = data["object"]
    if "presentation" in obj and isinstance(obj["presentation"], str):
        ref = obj["presentation"]
        table = names.get("presentations", {})
        if ref not in table:
            raise ContractError(f"presentation {ref!r} not in session")
        obj = {"kind": "presentation", "presentation": table[ref]}
    elif "algebra" in obj and isinstance(obj["algebra"], str):
        ref = obj["algebra"]
        table = names.get("algebras", {})
        if ref not in table:
            raise ContractError(f"algebra {ref!r} not in session")
        obj = {"kind": "rees", "algebra": table[ref]}
    elif "kind" not in obj:
        if "entries" in obj:
            obj = {"kind": "presentation", "presentation": obj}
        elif "generators" in obj:
            obj = {"kind": "rees", "algebra": obj}
        else:
            raise ContractError("cannot determine the script object kind")
    steps = [
        {
            "chart": step.get("chart", []),
            "center": {
                "vars": step["center"]["vars"],
                "shift": [str(v) for v in step["center"]["shift"]]
                if step["center"].get("shift")
                else None,
            },
        }
        for step in data.get("steps", [])
    ]
    return S.RunRequest.model_validate({"object": obj, "steps": steps})


def cmd_run(args) -> int:
    resp = handlers.handle_run(_load_script(args))
    if args.json:
        print(_dump(resp.report))
    else:
        rep = resp.report
        print(f"indicators: {rep['indicators']}")
        print(f"non-increasing: {rep['non_increasing']}")
        print(_dump(rep["tree"]))
    return 0


def cmd_resolve_curve(args) -> int:
    resp = handlers.handle_resolve_curve(
        S.ResolveCurveRequest(
            ring=_ring_model(args.ring), poly=args.poly, max_steps=args.max_steps
        )
    )
    rep = resp.report
    if args.json:
        print(_dump(rep))
    else:
        print(f"verdict: {rep['verdict']}")
        print(f"multiplicity sequence: {rep['multiplicity_sequence']}")
        print(f"blow-ups: {rep['blowups']}")
        for leaf in rep["leaves"]:
            status = "smooth" if leaf["smooth"] else "SINGULAR"
            exc = ",".join(leaf["exceptional"]) or "-"
            print(f"  leaf {'/'.join(leaf['path']) or '<root>'}: {leaf['poly']} "
                  f"[{status}; E = {exc}]")
    return 0


def cmd_selftest(args) -> int:
    seed = args.seed
    if os.environ.get("MULTRES_SEED"):
        seed = int(os.environ["MULTRES_SEED"])
    resp = handlers.handle_selftest(S.SelftestRequest(seed=seed, catalog=args.catalog))
    if args.json:
        print(_dump(resp.report))
    else:
        print(acceptance.format_report(resp.report))
    return 0 if resp.report["all_passed"] else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# -- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multres",
        description="Exact multiplicity-locus toolkit: orders, Rees algebras, "
        "elimination, presentations, blow-up scripts, curve resolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="canonical JSON output")

    def add_algebra(p):
        p.add_argument("--ring", help='ring spec, e.g. "Q[x,y,z]" or "F5[x,y]"')
        p.add_argument(
            "--gen",
            action="append",
            help="weighted generator 'expr @ weight' (repeatable)",
        )
        p.add_argument("--algebra", help="path to a Rees algebra JSON file")

    p = sub.add_parser("order", help="order of vanishing of a polynomial at a point")
    p.add_argument("--ring", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--at", required=True, help="comma-separated rational coordinates")
    add_json(p)
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("sing", help="derivative generators of the singular locus")
    add_algebra(p)
    add_json(p)
    p.set_defaults(fn=cmd_sing)

    p = sub.add_parser("ord", help="Rees order at a point of the singular locus")
    add_algebra(p)
    p.add_argument("--at", required=True)
    add_json(p)
    p.set_defaults(fn=cmd_ord)

    p = sub.add_parser("permissible", help="is a center permissible for an algebra")
    add_algebra(p)
    p.add_argument("--center", required=True, help="comma-separated variables")
    p.add_argument("--shift", help="comma-separated rational shift, aligned with --center")
    add_json(p)
    p.set_defaults(fn=cmd_permissible)

    p = sub.add_parser("transform", help="weighted transform in every chart of a blow-up")
    add_algebra(p)
    p.add_argument("--center", required=True)
    p.add_argument("--shift")
    add_json(p)
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("elim", help="Tschirnhaus shift and elimination generators")
    p.add_argument("--ring", required=True, help="the base ring S")
    p.add_argument("--monic", required=True, help="monic polynomial over S in --var")
    p.add_argument("--var", default="Z")
    add_json(p)
    p.set_defaults(fn=cmd_elim)

    p = sub.add_parser("image-nfold", help="generators of the image of the n-fold locus")
    p.add_argument("--ring", required=True)
    p.add_argument("--monic", required=True)
    p.add_argument("--var", default="Z")
    add_json(p)
    p.set_defaults(fn=cmd_image_nfold)

    p = sub.add_parser("presentation", help="attach / test / transform a presentation")
    p.add_argument("action", choices=["attach", "test", "transform"])
    p.add_argument("--base", help='base ring spec, e.g. "Q[x,y]"')
    p.add_argument(
        "--entry",
        action="append",
        help="entry 'X1 = X1^2 - x^2*y' (repeatable)",
    )
    p.add_argument("--presentation", help="path to a presentation JSON file")
    p.add_argument("--at", help="point of the base (for test)")
    p.add_argument("--center", help="center variables (for transform)")
    p.add_argument("--shift", help="center shift (for transform)")
    add_json(p)
    p.set_defaults(fn=cmd_presentation)

    p = sub.add_parser("zariski", help="multiplicity formula cross-check at a point")
    p.add_argument("--ring", required=True)
    p.add_argument("--monic", required=True)
    p.add_argument("--var", default="Z")
    p.add_argument("--at", required=True)
    add_json(p)
    p.set_defaults(fn=cmd_zariski)

    p = sub.add_parser("run", help="execute a blow-up script")
    p.add_argument("--script", help="path to a script JSON file")
    p.add_argument("--session", help="path to a session JSON file")
    p.add_argument("--name", help="script name inside the session")
    add_json(p)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("resolve-curve", help="resolve a plane curve over Q")
    p.add_argument("--poly", required=True)
    p.add_argument("--ring", default="Q[x,y]")
    p.add_argument("--max-steps", type=int, default=64)
    add_json(p)
    p.set_defaults(fn=cmd_resolve_curve)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--catalog", help="override the packaged fixture catalog")
    add_json(p)
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MultresError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pydantic validation and anything unexpected
        name = type(exc).__name__
        if "ValidationError" in name:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"internal error: {name}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
