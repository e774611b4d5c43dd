"""The acceptance suite: ten structural criteria run with exact arithmetic.

Each criterion returns (passed, details); run_all executes all of them with a
fixed seed and the packaged fixture catalog, producing one pass/fail line per
criterion.  Criteria trap their own exceptions, so a corrupted catalog fails
the criteria that consume it by name instead of aborting the run.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources

from .blowup import Center, make_charts, strict_transform_monic
from .driver import BlowupScript, ScriptStep, resolve_plane_curve, run_script
from .elimination import (
    MonicPoly,
    check_commutation,
    check_translation_invariance,
    scaling_law_holds,
)
from .parser import parse
from .poly import Polynomial, div_exact, embed, substitute
from .presentation import (
    Presentation,
    attach_algebra,
    generic_membership,
    lifted_point,
    transversality_test,
    zariski_check,
)
from .rees import BoxGrid, contains_point, rees_from_json, sing_generators
from .ring import RingCtx, parse_ring, parse_scalar

DEFAULT_SEED = 1729
GRID = BoxGrid(-2, 2)


def load_catalog(path: str | None = None) -> dict:
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    text = resources.files("multres").joinpath("catalog.json").read_text("utf-8")
    return json.loads(text)


def _presentation_from_catalog(catalog: dict, name: str) -> Presentation:
    spec = catalog["presentations"][name]
    base = parse_ring(spec["base"])
    entries = []
    for entry in spec["entries"]:
        ring = base.extend((entry["var"],))
        entries.append(MonicPoly.from_polynomial(parse(entry["poly"], ring), entry["var"]))
    return Presentation(base, tuple(entries))


def _monic_from(ring_spec: str, var: str, text: str) -> MonicPoly:
    base = parse_ring(ring_spec)
    return MonicPoly.from_polynomial(parse(text, base.extend((var,))), var)


# -- random samplers ----------------------------------------------------


def _random_poly(rng: random.Random, ring: RingCtx, max_degree: int) -> Polynomial:
    """Random polynomial of total degree <= max_degree, small integer coefficients."""
    out = Polynomial.zero(ring)
    for _ in range(rng.randint(1, 3)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        budget = rng.randint(0, max_degree)
        expo = [0] * ring.nvars
        for _ in range(budget):
            expo[rng.randrange(ring.nvars)] += 1
        out = out + Polynomial.monomial(ring, expo, coeff)
    return out


def _random_coefficient_with_order(
    rng: random.Random, ring: RingCtx, center_vars: tuple[str, ...], min_order: int
) -> Polynomial:
    """Random coefficient of degree <= 3 vanishing to order >= min_order along the center."""
    if min_order > 3:
        return Polynomial.zero(ring)
    idx = [ring.index(v) for v in center_vars]
    rest = [i for i in range(ring.nvars) if i not in idx]
    out = Polynomial.zero(ring)
    for _ in range(rng.randint(1, 2)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        center_deg = rng.randint(min_order, 3)
        expo = [0] * ring.nvars
        for _ in range(center_deg):
            expo[rng.choice(idx)] += 1
        for _ in range(rng.randint(0, 3 - center_deg)):
            if rest:
                expo[rng.choice(rest)] += 1
        out = out + Polynomial.monomial(ring, expo, coeff)
    return out


# -- criteria -----------------------------------------------------------


def criterion_transform_law(seed: int, catalog: dict):
    """1: strict_transform_monic equals the substitute-and-divide oracle, 100/100."""
    rng = random.Random(seed)
    base = parse_ring("Q[x,y]")
    z = "Z"
    big = base.extend((z,))
    passed = 0
    for case in range(100):
        n = rng.randint(2, 4)
        center = Center(vars=rng.choice([("x",), ("y",), ("x", "y")]))
        coeffs = tuple(
            _random_coefficient_with_order(rng, base, center.vars, j)
            for j in range(1, n + 1)
        )
        f = MonicPoly(base, z, coeffs).to_polynomial()
        ok = True
        for chart in make_charts(base, center):
            result = strict_transform_monic(f, z, center, chart)
            # Oracle: substitute the chart map with Z -> pivot*Z, then divide
            # the whole polynomial by pivot^n once.
            sub = {name: embed(chart.substitution[name], big) for name in base.variables}
            pivot = Polynomial.variable(big, chart.pivot)
            sub[z] = pivot * Polynomial.variable(big, z)
            total = substitute(f, sub, big)
            oracle = div_exact(total, pivot**n)
            ok = ok and result == oracle
        if ok:
            passed += 1
    return passed == 100, f"{passed}/100 random monic transforms match the oracle"


def criterion_translation_invariance(seed: int, catalog: dict):
    """2: elimination generators are invariant under Z -> Z - lambda, 100/100."""
    rng = random.Random(seed + 1)
    base = parse_ring("Q[x,y]")
    passed = 0
    for case in range(100):
        n = rng.randint(2, 4)
        coeffs = tuple(
            _random_poly(rng, base, 3) if rng.random() > 0.2 else Polynomial.zero(base)
            for _ in range(n)
        )
        if all(not c for c in coeffs):
            coeffs = (coeffs[0] + Polynomial.variable(base, "x"),) + coeffs[1:]
        f = MonicPoly(base, "Z", coeffs)
        lam = _random_poly(rng, base, 3) if rng.random() > 0.15 else Polynomial.zero(base)
        if check_translation_invariance(f, lam):
            passed += 1
    return passed == 100, f"{passed}/100 random (f, lambda) give identical generators"


def criterion_scaling_law(seed: int, catalog: dict):
    """3: b_j(u a_1, ..., u^n a_n) = u^j b_j symbolically for n = 2, 3, 4."""
    results = {n: scaling_law_holds(n) for n in (2, 3, 4)}
    return all(results.values()), f"symbolic scaling law for n=2,3,4: {results}"


def criterion_commutation(seed: int, catalog: dict):
    """4: elimination-then-transform equals transform-then-elimination on the catalog."""
    details = []
    ok = True
    for case in catalog["commutation"]:
        P = _presentation_from_catalog(catalog, case["presentation"])
        center = Center(
            vars=tuple(case["center"]["vars"]),
            shift=tuple(parse_scalar(s) for s in case["center"].get("shift") or ()) or None,
        )
        good = check_commutation(P, center)
        ok = ok and good
        details.append(f"{case['presentation']}@{','.join(center.vars)}: {good}")
    return ok, "; ".join(details)


def criterion_presentation_equality(seed: int, catalog: dict):
    """5: transversality agrees with Sing membership of the attached algebra on the grid."""
    checked = 0
    for name in ("whitney", "cusp_pair", "smooth_control"):
        P = _presentation_from_catalog(catalog, name)
        algebra = attach_algebra(P).algebra
        for pt in GRID.points(P.base):
            left = transversality_test(P, pt).ok
            right = contains_point(algebra, lifted_point(P, pt))
            if left != right:
                return False, f"{name} disagrees at {pt}: test={left}, Sing={right}"
            checked += 1
    return True, f"{checked} grid points agree across three catalog presentations"


def criterion_monotonicity(seed: int, catalog: dict):
    """6: max-multiplicity indicators never increase; catalog sequences match."""
    details = []
    for case in catalog["monotonicity_scripts"]:
        obj_spec = case["object"]
        if "presentation" in obj_spec:
            obj = _presentation_from_catalog(catalog, obj_spec["presentation"])
            label = obj_spec["presentation"]
        else:
            ring = parse_ring(obj_spec["algebra"]["ring"])
            obj = rees_from_json(
                {
                    "ring": {
                        "variables": list(ring.variables),
                        "characteristic": ring.characteristic,
                    },
                    "generators": obj_spec["algebra"]["generators"],
                }
            )
            label = f"algebra over {ring}"
        steps = tuple(
            ScriptStep(
                path=tuple(s["chart"]),
                center=Center(
                    vars=tuple(s["center"]["vars"]),
                    shift=tuple(parse_scalar(v) for v in s["center"].get("shift") or ())
                    or None,
                ),
            )
            for s in case["steps"]
        )
        report = run_script(BlowupScript(obj, steps))
        if report["indicators"] != case["indicators"] or not report["non_increasing"]:
            return False, f"{label}: indicators {report['indicators']} != {case['indicators']}"
        details.append(f"{label}: {report['indicators']}")
    for curve in catalog["curves"]:
        if curve["name"] not in ("cusp", "tacnode"):
            continue
        rep = resolve_plane_curve(parse(curve["poly"], parse_ring(curve["ring"])))
        seq = rep["multiplicity_sequence"]
        if seq != curve["sequence"] or any(b > a for a, b in zip(seq, seq[1:])):
            return False, f"{curve['name']}: sequence {seq} != {curve['sequence']}"
        details.append(f"{curve['name']}: {seq}")
    return True, "; ".join(details)


def criterion_semicontinuity(seed: int, catalog: dict):
    """7: generic n-fold membership implies membership at special points, 20/20."""
    pairs = catalog["semicontinuity_pairs"]
    passed = 0
    for pair in pairs:
        P = _presentation_from_catalog(catalog, pair["presentation"])
        shift = tuple(parse_scalar(s) for s in pair["shift"])
        special = tuple(parse_scalar(s) for s in pair["special"])
        if generic_membership(P, tuple(pair["vars"]), shift):
            if transversality_test(P, special).ok:
                passed += 1
        else:
            passed += 1  # implication is vacuous
    return passed == len(pairs) == 20, f"{passed}/{len(pairs)} specialization pairs"


def criterion_zariski(seed: int, catalog: dict):
    """8: deg f = sum of residue root multiplicities on 20 split examples."""
    examples = catalog["zariski_examples"]
    passed = 0
    for ex in examples:
        f = _monic_from(ex["ring"], ex["var"], ex["poly"])
        point = tuple(parse_scalar(s) for s in ex["point"])
        report = zariski_check(f, point)
        expected = sorted((parse_scalar(r), int(m)) for r, m in ex["roots"])
        if (
            report.verdict == "equal"
            and report.lhs == report.rhs
            and sorted(report.roots) == expected
        ):
            passed += 1
    return passed == len(examples) == 20, f"{passed}/{len(examples)} split examples verified"


def criterion_differential_sing(seed: int, catalog: dict):
    """9: order-based Sing membership equals vanishing of the derivative generators."""
    checked = 0
    for spec in catalog["algebras"]:
        ring = parse_ring(spec["ring"])
        G = rees_from_json(
            {
                "ring": {
                    "variables": list(ring.variables),
                    "characteristic": ring.characteristic,
                },
                "generators": spec["generators"],
            }
        )
        sing = sing_generators(G)
        for pt in GRID.points(G.ring):
            if contains_point(G, pt) != sing.vanishes_at(pt):
                return False, f"disagreement for {G} at {pt}"
            checked += 1
    return True, f"{checked} (algebra, point) pairs agree"


def criterion_curve_resolver(seed: int, catalog: dict):
    """10: the resolver terminates with certified-smooth leaves and oracle sequences."""
    details = []
    for curve in catalog["curves"]:
        rep = resolve_plane_curve(parse(curve["poly"], parse_ring(curve["ring"])))
        if rep["verdict"] not in ("resolved", "already smooth"):
            return False, f"{curve['name']}: verdict {rep['verdict']}"
        if rep["multiplicity_sequence"] != curve["sequence"]:
            return False, (
                f"{curve['name']}: sequence {rep['multiplicity_sequence']} "
                f"!= {curve['sequence']}"
            )
        if rep["blowups"] != curve["blowups"]:
            return False, f"{curve['name']}: {rep['blowups']} blow-ups != {curve['blowups']}"
        if not all(leaf["smooth"] and leaf["smooth_certified"] for leaf in rep["leaves"]):
            return False, f"{curve['name']}: some leaf is not certified smooth"
        details.append(f"{curve['name']}: {rep['multiplicity_sequence']}")
    return True, "; ".join(details)


CRITERIA = (
    (1, "transform-law-identity", criterion_transform_law),
    (2, "translation-invariance", criterion_translation_invariance),
    (3, "scaling-law", criterion_scaling_law),
    (4, "elimination-commutes-with-blowup", criterion_commutation),
    (5, "local-presentation-equality", criterion_presentation_equality),
    (6, "dade-orbanz-monotonicity", criterion_monotonicity),
    (7, "semicontinuity-instances", criterion_semicontinuity),
    (8, "zariski-formula", criterion_zariski),
    (9, "differential-sing-criterion", criterion_differential_sing),
    (10, "curve-resolver", criterion_curve_resolver),
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: str


def run_criterion(number: int, seed: int = DEFAULT_SEED, catalog: dict | None = None) -> CriterionResult:
    catalog = catalog if catalog is not None else load_catalog()
    for num, name, fn in CRITERIA:
        if num == number:
            try:
                passed, details = fn(seed, catalog)
            except Exception as exc:  # a broken fixture fails the criterion, named
                passed, details = False, f"{type(exc).__name__}: {exc}"
            return CriterionResult(num, name, passed, details)
    raise ValueError(f"no criterion {number}")


def run_all(seed: int = DEFAULT_SEED, catalog_path: str | None = None) -> dict:
    try:
        catalog = load_catalog(catalog_path)
    except Exception:
        catalog = None
    results = []
    for num, name, fn in CRITERIA:
        if catalog is None:
            results.append(
                CriterionResult(num, name, False, "catalog unavailable or corrupted")
            )
            continue
        try:
            passed, details = fn(seed, catalog)
        except Exception as exc:
            passed, details = False, f"{type(exc).__name__}: {exc}"
        results.append(CriterionResult(num, name, passed, details))
    return {
        "format": 1,
        "seed": seed,
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "details": r.details,
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }


def format_report(report: dict) -> str:
    lines = [f"selftest seed={report['seed']}"]
    for c in report["criteria"]:
        status = "PASS" if c["passed"] else "FAIL"
        lines.append(f"  [{status}] {c['number']:2d} {c['name']}: {c['details']}")
    lines.append("all criteria passed" if report["all_passed"] else "SOME CRITERIA FAILED")
    return "\n".join(lines)
