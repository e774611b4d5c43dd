"""Pydantic request/response models for the service and the CLI client.

Rational scalars travel as strings ("1/2", "-3"); polynomials travel in the
canonical grammar, so every response can be fed back in as a request.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field

from ..blowup import Center
from ..elimination import MonicPoly
from ..parser import parse
from ..poly import INFINITY
from ..presentation import Presentation
from ..rees import ReesAlgebra
from ..ring import RingCtx, parse_scalar


class RingModel(BaseModel):
    variables: list[str]
    characteristic: int = 0

    def to_core(self) -> RingCtx:
        return RingCtx(tuple(self.variables), self.characteristic)

    @classmethod
    def from_core(cls, ring: RingCtx) -> "RingModel":
        return cls(variables=list(ring.variables), characteristic=ring.characteristic)


class GeneratorModel(BaseModel):
    poly: str
    weight: int


class ReesModel(BaseModel):
    ring: RingModel
    generators: list[GeneratorModel]

    def to_core(self) -> ReesAlgebra:
        ring = self.ring.to_core()
        return ReesAlgebra(
            ring,
            tuple((parse(g.poly, ring), g.weight) for g in self.generators),
        )

    @classmethod
    def from_core(cls, G: ReesAlgebra) -> "ReesModel":
        return cls(
            ring=RingModel.from_core(G.ring),
            generators=[GeneratorModel(poly=str(f), weight=n) for f, n in G.generators],
        )


class CenterModel(BaseModel):
    vars: list[str]
    shift: Optional[list[str]] = None

    def to_core(self) -> Center:
        shift = tuple(parse_scalar(s) for s in self.shift) if self.shift else None
        return Center(vars=tuple(self.vars), shift=shift)


class PresentationEntryModel(BaseModel):
    var: str
    poly: str


class PresentationModel(BaseModel):
    base: RingModel
    entries: list[PresentationEntryModel]

    def to_core(self) -> Presentation:
        base = self.base.to_core()
        parsed = []
        for entry in self.entries:
            ring = base.extend((entry.var,))
            parsed.append(MonicPoly.from_polynomial(parse(entry.poly, ring), entry.var))
        return Presentation(base, tuple(parsed))

    @classmethod
    def from_core(cls, P: Presentation) -> "PresentationModel":
        return cls(
            base=RingModel.from_core(P.base),
            entries=[
                PresentationEntryModel(var=e.var, poly=str(e.to_polynomial()))
                for e in P.entries
            ],
        )


def order_str(value) -> str | int:
    return "inf" if value is INFINITY else int(value)


# -- poly_core ---------------------------------------------------------


class OrderRequest(BaseModel):
    ring: RingModel
    poly: str
    at: list[str]


class OrderResponse(BaseModel):
    order: int | str


# -- rees --------------------------------------------------------------


class SingRequest(BaseModel):
    algebra: ReesModel


class SingResponse(BaseModel):
    generators: list[str]
    empty_certified: bool = Field(
        description="True when a generator is a nonzero constant, certifying Sing = empty"
    )


class OrdRequest(BaseModel):
    algebra: ReesModel
    at: list[str]


class OrdResponse(BaseModel):
    ord: str


class PermissibleRequest(BaseModel):
    algebra: ReesModel
    center: CenterModel


class PermissibleResponse(BaseModel):
    permissible: bool


class TransformRequest(BaseModel):
    algebra: ReesModel
    center: CenterModel


class ChartTransformModel(BaseModel):
    pivot: str
    trivial: bool
    algebra: ReesModel


class TransformResponse(BaseModel):
    charts: list[ChartTransformModel]


# -- elimination ---------------------------------------------------------


class ElimRequest(BaseModel):
    ring: RingModel
    monic: str
    var: str = "Z"


class ElimResponse(BaseModel):
    shift: str
    generators: list[GeneratorModel]


class ImageNfoldResponse(BaseModel):
    generators: list[str]
    whole_space: bool


# -- presentation --------------------------------------------------------


class PresentationAttachRequest(BaseModel):
    presentation: PresentationModel


class PresentationAttachResponse(BaseModel):
    ambient: RingModel
    algebra: ReesModel
    generic_rank: int


class PresentationTestRequest(BaseModel):
    presentation: PresentationModel
    at: list[str]


class FactorModel(BaseModel):
    var: str
    degree: int
    witness: str
    orders: list[int | str]
    nfold: bool


class PresentationTestResponse(BaseModel):
    nfold: bool
    witnesses: list[str]
    factors: list[FactorModel]


class PresentationTransformRequest(BaseModel):
    presentation: PresentationModel
    center: CenterModel


class ChartPresentationModel(BaseModel):
    pivot: str
    trivial: bool
    presentation: PresentationModel


class PresentationTransformResponse(BaseModel):
    charts: list[ChartPresentationModel]


class ZariskiRequest(BaseModel):
    ring: RingModel
    monic: str
    var: str = "Z"
    at: list[str]


class ZariskiRootModel(BaseModel):
    root: str
    multiplicity: int


class ZariskiResponse(BaseModel):
    degree: int
    residual: str
    roots: list[ZariskiRootModel]
    lhs: int
    rhs: int
    verdict: str


# -- driver ----------------------------------------------------------------


class ScriptStepModel(BaseModel):
    chart: list[str] = Field(default_factory=list)
    center: CenterModel


class ScriptObjectModel(BaseModel):
    kind: str  # "presentation" or "rees"
    presentation: Optional[PresentationModel] = None
    algebra: Optional[ReesModel] = None


class RunRequest(BaseModel):
    object: ScriptObjectModel
    steps: list[ScriptStepModel]


class RunResponse(BaseModel):
    report: dict[str, Any]


class ResolveCurveRequest(BaseModel):
    ring: RingModel = Field(
        default_factory=lambda: RingModel(variables=["x", "y"], characteristic=0)
    )
    poly: str
    max_steps: int = 64


class ResolveCurveResponse(BaseModel):
    report: dict[str, Any]


class SelftestRequest(BaseModel):
    seed: Optional[int] = None
    catalog: Optional[str] = None


class SelftestResponse(BaseModel):
    report: dict[str, Any]
