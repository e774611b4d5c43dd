"""Core-to-wire dispatch: one handler per operation, shared by app and CLI.

Handlers take a request model and return a response model.  They raise the
package's ContractError subclasses on bad input; the HTTP layer maps those to
400 and the CLI to exit code 2.
"""

from __future__ import annotations

from .. import acceptance
from ..blowup import make_charts
from ..driver import BlowupScript, ScriptStep, resolve_plane_curve, run_script
from ..elimination import MonicPoly, elim_generators, tschirnhaus
from ..errors import ContractError
from ..parser import parse
from ..poly import order_at_point
from ..presentation import (
    attach_algebra,
    transversality_test,
    zariski_check,
)
from ..presentation import transform as presentation_transform
from ..rees import is_permissible, ord_at, sing_generators
from ..rees import transform as rees_transform
from ..ring import parse_scalar
from . import schemas as S


def handle_order(req: S.OrderRequest) -> S.OrderResponse:
    ring = req.ring.to_core()
    f = parse(req.poly, ring)
    point = tuple(parse_scalar(s) for s in req.at)
    return S.OrderResponse(order=S.order_str(order_at_point(f, point)))


def handle_sing(req: S.SingRequest) -> S.SingResponse:
    ideal = sing_generators(req.algebra.to_core())
    return S.SingResponse(
        generators=[str(g) for g in ideal.generators],
        empty_certified=ideal.has_unit(),
    )


def handle_ord(req: S.OrdRequest) -> S.OrdResponse:
    G = req.algebra.to_core()
    point = tuple(parse_scalar(s) for s in req.at)
    return S.OrdResponse(ord=str(ord_at(G, point)))


def handle_permissible(req: S.PermissibleRequest) -> S.PermissibleResponse:
    G = req.algebra.to_core()
    center = req.center.to_core()
    return S.PermissibleResponse(
        permissible=is_permissible(G, center.vars, center.shift)
    )


def handle_transform(req: S.TransformRequest) -> S.TransformResponse:
    G = req.algebra.to_core()
    center = req.center.to_core()
    if not is_permissible(G, center.vars, center.shift):
        raise ContractError("center is not permissible for the algebra")
    charts = []
    for chart in make_charts(G.ring, center):
        charts.append(
            S.ChartTransformModel(
                pivot=chart.pivot,
                trivial=chart.trivial,
                algebra=S.ReesModel.from_core(rees_transform(G, chart)),
            )
        )
    return S.TransformResponse(charts=charts)


def _monic(req_ring: S.RingModel, text: str, var: str) -> MonicPoly:
    base = req_ring.to_core()
    full = base.extend((var,))
    return MonicPoly.from_polynomial(parse(text, full), var)


def handle_elim(req: S.ElimRequest) -> S.ElimResponse:
    f = _monic(req.ring, req.monic, req.var)
    lam, _ = tschirnhaus(f)
    gens = elim_generators(f)
    return S.ElimResponse(
        shift=str(lam),
        generators=[S.GeneratorModel(poly=str(b), weight=j) for b, j in gens],
    )


def handle_image_nfold(req: S.ElimRequest) -> S.ImageNfoldResponse:
    from ..elimination import image_nfold

    f = _monic(req.ring, req.monic, req.var)
    ideal = image_nfold(f)
    return S.ImageNfoldResponse(
        generators=[str(g) for g in ideal.generators],
        whole_space=not ideal.generators,
    )


def handle_presentation_attach(
    req: S.PresentationAttachRequest,
) -> S.PresentationAttachResponse:
    P = req.presentation.to_core()
    attached = attach_algebra(P)
    return S.PresentationAttachResponse(
        ambient=S.RingModel.from_core(attached.ambient),
        algebra=S.ReesModel.from_core(attached.algebra),
        generic_rank=P.generic_rank,
    )


def handle_presentation_test(req: S.PresentationTestRequest) -> S.PresentationTestResponse:
    P = req.presentation.to_core()
    point = tuple(parse_scalar(s) for s in req.at)
    result = transversality_test(P, point)
    return S.PresentationTestResponse(
        nfold=result.ok,
        witnesses=[str(w) for w in result.witnesses],
        factors=[
            S.FactorModel(
                var=fct.var,
                degree=fct.degree,
                witness=str(fct.witness),
                orders=[S.order_str(o) for o in fct.orders],
                nfold=fct.nfold,
            )
            for fct in result.factors
        ],
    )


def handle_presentation_transform(
    req: S.PresentationTransformRequest,
) -> S.PresentationTransformResponse:
    P = req.presentation.to_core()
    center = req.center.to_core()
    charts = []
    for chart in make_charts(P.base, center):
        charts.append(
            S.ChartPresentationModel(
                pivot=chart.pivot,
                trivial=chart.trivial,
                presentation=S.PresentationModel.from_core(
                    presentation_transform(P, center, chart)
                ),
            )
        )
    return S.PresentationTransformResponse(charts=charts)


def handle_zariski(req: S.ZariskiRequest) -> S.ZariskiResponse:
    f = _monic(req.ring, req.monic, req.var)
    point = tuple(parse_scalar(s) for s in req.at)
    report = zariski_check(f, point)
    return S.ZariskiResponse(
        degree=report.degree,
        residual=report.residual,
        roots=[
            S.ZariskiRootModel(root=str(r), multiplicity=m) for r, m in report.roots
        ],
        lhs=report.lhs,
        rhs=report.rhs,
        verdict=report.verdict,
    )


def handle_run(req: S.RunRequest) -> S.RunResponse:
    if req.object.kind == "presentation":
        if req.object.presentation is None:
            raise ContractError("object kind is 'presentation' but no presentation given")
        obj = req.object.presentation.to_core()
    elif req.object.kind == "rees":
        if req.object.algebra is None:
            raise ContractError("object kind is 'rees' but no algebra given")
        obj = req.object.algebra.to_core()
    else:
        raise ContractError(f"unknown script object kind {req.object.kind!r}")
    steps = tuple(
        ScriptStep(path=tuple(s.chart), center=s.center.to_core()) for s in req.steps
    )
    return S.RunResponse(report=run_script(BlowupScript(obj, steps)))


def handle_resolve_curve(req: S.ResolveCurveRequest) -> S.ResolveCurveResponse:
    ring = req.ring.to_core()
    f = parse(req.poly, ring)
    return S.ResolveCurveResponse(report=resolve_plane_curve(f, max_steps=req.max_steps))


def handle_selftest(req: S.SelftestRequest) -> S.SelftestResponse:
    seed = req.seed if req.seed is not None else acceptance.DEFAULT_SEED
    return S.SelftestResponse(report=acceptance.run_all(seed=seed, catalog_path=req.catalog))
