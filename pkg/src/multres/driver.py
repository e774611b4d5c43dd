"""Executes blow-up scripts, tracks multiplicity across chart trees, and
resolves plane curves by iterated point blow-ups.

Reports are plain dict trees with canonical ordering (children sorted by pivot
name), so identical scripts produce byte-identical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blowup import Center, make_charts
from .curves import is_squarefree, singular_points
from .errors import ContractError, MultresError, PermissibilityError
from .poly import Polynomial, div_exact, order_at_point, substitute
from .presentation import Presentation, center_is_permissible, transversality_test
from .presentation import transform as presentation_transform
from .rees import BoxGrid, ReesAlgebra, contains_point, is_permissible
from .rees import transform as rees_transform
from .ring import RingCtx


@dataclass(frozen=True)
class ScriptStep:
    path: tuple[str, ...]  # pivot names from the root to the chart to blow up
    center: Center


@dataclass(frozen=True)
class BlowupScript:
    obj: object  # Presentation or ReesAlgebra
    steps: tuple[ScriptStep, ...]

    def __post_init__(self):
        if not isinstance(self.obj, (Presentation, ReesAlgebra)):
            raise ContractError("script object must be a presentation or a Rees algebra")


class MonotonicityViolation(MultresError):
    """The max-multiplicity indicator increased; carries the counterexample."""

    def __init__(self, step: int, detail: str):
        super().__init__(f"max-multiplicity indicator increased at step {step}: {detail}")
        self.step = step
        self.detail = detail


@dataclass
class _Node:
    path: tuple[str, ...]
    obj: object
    exceptional: tuple[str, ...] = ()
    pivot: str | None = None
    substitution: dict = field(default_factory=dict)
    children: dict = field(default_factory=dict)

    def is_leaf(self) -> bool:
        return not self.children


def _object_ring(obj) -> RingCtx:
    return obj.base if isinstance(obj, Presentation) else obj.ring


def _object_json(obj) -> dict:
    if isinstance(obj, Presentation):
        return {
            "kind": "presentation",
            "base": {
                "variables": list(obj.base.variables),
                "characteristic": obj.base.characteristic,
            },
            "entries": [{"var": e.var, "poly": str(e.to_polynomial())} for e in obj.entries],
        }
    from .rees import rees_to_json

    return {"kind": "rees", **rees_to_json(obj)}


def _nfold_present(obj, grid: BoxGrid) -> bool:
    """Max-multiplicity indicator on one chart: does any grid point carry the
    top condition (full transversality / Sing membership)."""
    ring = _object_ring(obj)
    if isinstance(obj, Presentation):
        return any(transversality_test(obj, pt).ok for pt in grid.points(ring))
    return any(contains_point(obj, pt) for pt in grid.points(ring))


def _check_permissible(obj, center: Center):
    if isinstance(obj, Presentation):
        ok, detail = center_is_permissible(obj, center)
        if not ok:
            raise PermissibilityError(f"center not permissible: {detail}")
    else:
        if not is_permissible(obj, center.vars, center.shift):
            raise PermissibilityError(
                "center not permissible: some generator has too small an order along it"
            )


def _transform_obj(obj, center: Center, chart):
    if isinstance(obj, Presentation):
        return presentation_transform(obj, center, chart)
    return rees_transform(obj, chart)


def run_script(script: BlowupScript, grid: BoxGrid = BoxGrid()) -> dict:
    """Execute a script and return the canonical run report.

    Every center is validated for permissibility before its blow-up; the
    per-step max-multiplicity indicator over all leaves must never increase
    from absent to present (a violation aborts with the counterexample).
    """
    root = _Node(path=(), obj=script.obj)
    leaves = {(): root}

    def indicator() -> bool:
        return any(_nfold_present(node.obj, grid) for node in leaves.values())

    indicators = [indicator()]
    for step_index, step in enumerate(script.steps):
        node = leaves.get(tuple(step.path))
        if node is None:
            raise ContractError(
                f"unknown chart path {list(step.path)!r} (not a leaf of the current tree)"
            )
        _check_permissible(node.obj, step.center)
        ring = _object_ring(node.obj)
        for chart in make_charts(
            ring,
            step.center,
            step=step_index,
            prior_exceptional=node.exceptional,
        ):
            child = _Node(
                path=node.path + (chart.pivot,),
                obj=_transform_obj(node.obj, step.center, chart),
                exceptional=chart.exceptional,
                pivot=chart.pivot,
                substitution=chart.substitution,
            )
            node.children[chart.pivot] = child
            leaves[child.path] = child
        del leaves[node.path]
        now = indicator()
        if now and not indicators[-1]:
            raise MonotonicityViolation(
                step_index,
                "indicator went absent -> present, which Dade-Orbanz forbids",
            )
        indicators.append(now)

    def node_json(node: _Node) -> dict:
        out = {
            "pivot": node.pivot,
            "substitution": {k: str(v) for k, v in sorted(node.substitution.items())},
            "exceptional": list(node.exceptional),
            "object": _object_json(node.obj),
            "children": [
                node_json(node.children[k]) for k in sorted(node.children)
            ],
        }
        if node.is_leaf():
            out["normal_crossings"] = _normal_crossings_ok(node)
        return out

    report = {
        "format": 1,
        "indicators": indicators,
        "non_increasing": all(
            not (b and not a) for a, b in zip(indicators, indicators[1:])
        ),
        "steps": [
            {
                "path": list(s.path),
                "center": {
                    "vars": list(s.center.vars),
                    "shift": [str(v) for v in s.center.shift] if s.center.shift else None,
                },
            }
            for s in script.steps
        ],
        "tree": node_json(root),
    }
    return report


def _normal_crossings_ok(node: _Node) -> bool:
    """Structural check: exceptional entries are distinct single variables."""
    ring = _object_ring(node.obj)
    return len(set(node.exceptional)) == len(node.exceptional) and all(
        v in ring.variables for v in node.exceptional
    )


# -- automatic plane-curve resolution ----------------------------------


@dataclass
class _CurveLeaf:
    path: tuple[str, ...]
    poly: Polynomial
    exceptional: tuple[str, ...]
    blowups: int  # blow-ups along this branch


def resolve_plane_curve(
    f: Polynomial, max_steps: int = 64, require_squarefree: bool = True
) -> dict:
    """Resolve a squarefree plane curve by blowing up rational singular points.

    Each step blows up the lexicographically smallest point of maximal
    multiplicity among all leaves, taking strict transforms in both charts.
    Terminates when every leaf is certified smooth by the exact resultant
    solve; non-rational singular points end the run with an
    "unresolvable over Q" verdict instead of an error.
    """
    if not f:
        raise ContractError("cannot resolve the zero polynomial")
    ring = f.ring
    if ring.nvars != 2 or ring.characteristic != 0:
        raise ContractError("plane-curve resolution works over Q[x,y]")
    if require_squarefree and not is_squarefree(f):
        raise ContractError("input curve is not squarefree (gcd with derivatives)")

    x, y = ring.variables
    leaves: dict[tuple[str, ...], _CurveLeaf] = {
        (): _CurveLeaf(path=(), poly=f, exceptional=(), blowups=0)
    }
    steps: list[dict] = []
    sequence: list[int] = []

    for step_index in range(max_steps + 1):
        # Gather singular points across leaves; any certification failure
        # downgrades the verdict.
        worklist = []
        for leaf in leaves.values():
            result = singular_points(leaf.poly)
            if result.irrational or not result.certified:
                return _curve_report(
                    f,
                    leaves,
                    steps,
                    sequence,
                    verdict="unresolvable over Q",
                    detail=(
                        "irrational singular point detected"
                        if result.irrational
                        else "singular candidates not certified rational"
                    ),
                )
            for pt in result.points:
                mult = order_at_point(leaf.poly, pt)
                worklist.append((mult, pt, leaf.path))
        if not worklist:
            verdict = "resolved" if steps else "already smooth"
            sequence.append(1)
            return _curve_report(f, leaves, steps, sequence, verdict=verdict, detail="")
        if step_index == max_steps:
            raise ContractError(f"step budget of {max_steps} blow-ups exceeded")

        max_mult = max(w[0] for w in worklist)
        mult, point, path = min(
            (w for w in worklist if w[0] == max_mult), key=lambda w: (w[1], w[2])
        )
        if sequence and max_mult > sequence[-1]:
            raise MonotonicityViolation(
                step_index, f"multiplicity rose from {sequence[-1]} to {max_mult}"
            )
        sequence.append(max_mult)

        leaf = leaves.pop(path)
        center = Center(vars=(x, y), shift=point)
        for chart in make_charts(
            ring, center, step=step_index, prior_exceptional=leaf.exceptional
        ):
            total = substitute(leaf.poly, chart.substitution, chart.ring)
            pivot = Polynomial.variable(chart.ring, chart.pivot)
            strict = div_exact(total, pivot**mult)
            child = _CurveLeaf(
                path=leaf.path + (chart.pivot,),
                poly=strict,
                exceptional=chart.exceptional,
                blowups=leaf.blowups + 1,
            )
            leaves[child.path] = child
        steps.append(
            {
                "path": list(path),
                "point": [str(point[0]), str(point[1])],
                "multiplicity": mult,
            }
        )
    raise ContractError(f"step budget of {max_steps} blow-ups exceeded")


def _curve_report(f, leaves, steps, sequence, verdict, detail) -> dict:
    leaf_reports = []
    for path in sorted(leaves):
        leaf = leaves[path]
        result = singular_points(leaf.poly)
        smooth = not result.points and result.certified and not result.irrational
        leaf_reports.append(
            {
                "path": list(path),
                "poly": str(leaf.poly),
                "smooth": smooth,
                "smooth_certified": result.certified,
                "singular_points": [[str(a), str(b)] for a, b in result.points],
                "exceptional": list(leaf.exceptional),
                "normal_crossings": len(set(leaf.exceptional)) == len(leaf.exceptional),
                "branch_blowups": leaf.blowups,
            }
        )
    return {
        "format": 1,
        "curve": str(f),
        "verdict": verdict,
        "detail": detail,
        "multiplicity_sequence": sequence,
        "blowups": len(steps),
        "steps": steps,
        "leaves": leaf_reports,
    }
