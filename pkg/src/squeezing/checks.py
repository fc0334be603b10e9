"""Bundled invariant suites behind the ``check`` CLI subcommand.

Each suite re-verifies the library's mathematical invariants at desk scale
and reports one result per invariant; the CLI turns failures into a nonzero
exit code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hyperbolic, rouche, search
from .hyperbolic import (
    bounded_metric,
    euclidean_radius,
    hyperbolic_radius,
    kobayashi_distance,
    mobius_map,
    poincare_distance,
)
from .planar import (
    Annulus,
    Excision,
    ExcisedDomain,
    PuncturedBall,
    annulus_conjectured_value,
    annulus_lower_bound,
    annulus_minimum_value,
    boundary_distance,
    caratheodory_lower_estimate,
    completeness_criterion,
    excised_domain_lower_bound,
    excision_constant,
    lipschitz_check,
    mobius_circle_image,
    punctured_domain_upper_bound,
)
from .rouche import (
    SampledMap,
    injectivity_certificate,
    laurent_map,
    polynomial_map,
    rouche_dominates,
    unit_annulus_contours,
    zero_count,
    zero_count_detailed,
)
from .symmetric import (
    ClassicalDomain,
    contains,
    kubota_constant,
    product_constant,
    punctured_ball_squeezing,
    sandwich_check_type_i,
    uniform_ball_points,
)

TOL = hyperbolic.TOLERANCE

SUITE_NAMES = ("metrics", "rouche", "symmetric", "planar", "search", "all")


@dataclass(frozen=True)
class CheckResult:
    module: str
    invariant: str
    passed: bool
    witness: str = ""


def _result(module, invariant, passed, witness=""):
    return CheckResult(module, invariant, bool(passed), witness)


def _disc_points(rng, count, cap=0.95):
    return uniform_ball_points(rng, 1, count, cap)[:, 0]


# --------------------------------------------------------------------------
# metrics


def suite_metrics(samples: int | None = None):
    rng = np.random.default_rng(7)
    results = []

    r = np.linspace(0.0, 0.999999, 4096)
    sigma = hyperbolic_radius(r)
    results.append(_result("hyperbolic", "sigma-strictly-increasing", np.all(np.diff(sigma) > 0)))

    grid = np.linspace(0.0, hyperbolic.MAX_RADIUS, 4096)
    err = np.abs(euclidean_radius(hyperbolic_radius(grid)) - grid).max()
    results.append(_result("hyperbolic", "roundtrip-euclidean", err <= TOL, f"max err {err:.2e}"))

    w = np.linspace(0.0, 8.0, 4096)
    err = np.abs(hyperbolic_radius(euclidean_radius(w)) - w).max()
    results.append(_result("hyperbolic", "roundtrip-hyperbolic", err <= TOL, f"max err {err:.2e}"))

    u = 10.0 * rng.random(1000)
    v = 10.0 * rng.random(1000)
    gap = euclidean_radius(u + v) - (euclidean_radius(u) + euclidean_radius(v))
    results.append(_result("hyperbolic", "tanh-subadditivity", np.all(gap <= TOL), f"max gap {gap.max():.2e}"))

    ok = True
    witness = ""
    for _ in range(1000):
        a, b, c = _disc_points(rng, 3)
        tab = bounded_metric(poincare_distance(a, b))
        tba = bounded_metric(poincare_distance(b, a))
        tac = bounded_metric(poincare_distance(a, c))
        tbc = bounded_metric(poincare_distance(b, c))
        if abs(tab - tba) > TOL or bounded_metric(poincare_distance(a, a)) != 0.0:
            ok, witness = False, f"symmetry/identity at {a}, {b}"
            break
        if tac > tab + tbc + TOL:
            ok, witness = False, f"triangle at {a}, {b}, {c}"
            break
    results.append(_result("hyperbolic", "compressed-metric-axioms", ok, witness))

    ok = True
    for _ in range(1000):
        a, b, c = _disc_points(rng, 3)
        moved = abs(poincare_distance(mobius_map(c, a), mobius_map(c, b)) - poincare_distance(a, b))
        if moved > TOL:
            ok = False
            break
    results.append(_result("hyperbolic", "mobius-invariance", ok))

    ok = True
    for _ in range(1000):
        a, b = _disc_points(rng, 2)
        if abs(kobayashi_distance([a], [b]) - poincare_distance(a, b)) > TOL:
            ok = False
            break
    results.append(_result("hyperbolic", "ball-matches-disc-dim1", ok))
    return results


# --------------------------------------------------------------------------
# rouche


def _monomial(k):
    return SampledMap(lambda z, k=k: z ** k, lambda z, k=k: k * z ** (k - 1.0))


def injective_corpus(r=0.5):
    """Maps known to be injective on the annulus {r < |z| < 1}."""
    a = 0.3 + 0.2j
    automorphism = SampledMap(
        lambda z: (z - a) / (1.0 - np.conj(a) * z),
        lambda z: (1.0 - abs(a) ** 2) / (1.0 - np.conj(a) * z) ** 2,
    )
    return [
        ("identity", laurent_map([0, 0, 1])),
        ("reflection", laurent_map([r, 0, 0])),
        ("automorphism", automorphism),
    ]


def noninjective_corpus():
    """Maps known to be non-injective on the annulus {0.5 < |z| < 1}.

    z^2 folds antipodes together; the Laurent maps have a critical point
    inside the annulus (z - lambda/z with lambda in (r^2, 1) identifies the
    pairs z1 z2 = lambda).
    """
    return [
        ("square", laurent_map([0, 0, 0, 0, 1])),
        ("joukowski-interior", laurent_map([0.4 / 1.5, 0 + 0j, 1.0 / 1.5])),
        ("cubic-laurent", laurent_map([0.5 / 3, 0, 0, 0, 1.0 / 3])),
    ]


def suite_rouche(samples: int | None = None):
    results = []
    contour_samples = samples or 64

    ok = True
    worst = 0.0
    for k in range(1, 9):
        for n in (64, 256, 4096):
            detail = zero_count_detailed(_monomial(k), rouche.CircleContour(samples=n))
            worst = max(worst, detail.residual)
            if detail.count != k or detail.residual > 1e-8:
                ok = False
    results.append(_result("rouche", "monomial-counts", ok, f"max residual {worst:.2e}"))

    cubic = polynomial_map([0, 0.5, 0, 1])
    roots = np.roots([1, 0, 0.5, 0])
    inside = int(np.sum(np.abs(roots) < 1.0))
    counted = zero_count(cubic, rouche.CircleContour(samples=contour_samples))
    results.append(_result("rouche", "cubic-count-matches-roots", counted == 3 == inside, f"count {counted}"))

    contour = rouche.CircleContour(samples=contour_samples)
    f3 = _monomial(3)
    g = polynomial_map([0, 0.5])
    dominated = rouche_dominates(f3, g, contour)
    combined = polynomial_map([0, 0.5, 0, 1])
    consistent = dominated and zero_count(f3, contour) == zero_count(combined, contour)
    results.append(_result("rouche", "dominance-consistency", consistent))
    results.append(
        _result("rouche", "dominance-rejects", not rouche_dominates(_monomial(1), polynomial_map([0, 2]), contour))
    )
    results.append(
        _result("rouche", "zero-perturbation-dominated", rouche_dominates(_monomial(2), polynomial_map([0]), contour))
    )

    annulus_count = zero_count(_monomial(1), unit_annulus_contours(0.5, contour_samples))
    results.append(_result("rouche", "annulus-excludes-origin", annulus_count == 0))

    ok = True
    witness = ""
    for name, candidate in injective_corpus():
        status = injectivity_certificate(candidate, 0.5, target_grid=16, samples=2048).status
        if status != "certified":
            ok, witness = False, f"{name}: {status}"
            break
    results.append(_result("rouche", "injective-corpus-certified", ok, witness))

    ok = True
    witness = ""
    for name, candidate in noninjective_corpus():
        status = injectivity_certificate(candidate, 0.5, target_grid=16, samples=1024).status
        if status == "certified":
            ok, witness = False, f"{name} wrongly certified"
            break
    results.append(_result("rouche", "noninjective-never-certified", ok, witness))

    ok = True
    for name, candidate in injective_corpus():
        for grid in (8, 16, 32):
            status = injectivity_certificate(candidate, 0.5, target_grid=grid, samples=1024).status
            if status == "refuted":
                ok = False
    results.append(_result("rouche", "grid-refinement-stable", ok))
    return results


# --------------------------------------------------------------------------
# symmetric


def suite_symmetric(samples: int | None = None):
    rng = np.random.default_rng(11)
    results = []
    domains = [
        ClassicalDomain.type_i(1, 1),
        ClassicalDomain.type_i(2, 3),
        ClassicalDomain.type_ii(3),
        ClassicalDomain.type_iii(4),
        ClassicalDomain.type_iv(3),
    ]

    def origin(domain):
        if domain.kind == "I":
            return np.zeros(domain.params, dtype=complex)
        if domain.kind == "IV":
            return np.zeros(domain.params[0], dtype=complex)
        order = domain.params[0]
        return np.zeros((order, order), dtype=complex)

    results.append(_result("symmetric", "origin-membership", all(contains(d, origin(d)) for d in domains)))

    def random_point(domain):
        if domain.kind == "I":
            shape = domain.params
            z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        elif domain.kind == "II":
            p = domain.params[0]
            g = rng.standard_normal((p, p)) + 1j * rng.standard_normal((p, p))
            z = g + g.T
        elif domain.kind == "III":
            q = domain.params[0]
            g = rng.standard_normal((q, q)) + 1j * rng.standard_normal((q, q))
            z = g - g.T
        else:
            n = domain.params[0]
            z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        while not contains(domain, z):
            z = 0.9 * z
        return z

    ok = True
    for domain in domains:
        for _ in range(20):
            z = random_point(domain)
            if not all(contains(domain, t * z) for t in np.linspace(0.05, 0.95, 10)):
                ok = False
    results.append(_result("symmetric", "scaling-monotonicity", ok))

    ok = all(product_constant([d]).value == kubota_constant(d).value for d in domains)
    results.append(_result("symmetric", "product-of-single-factor", ok))

    pairs = [(domains[1], domains[2]), (domains[3], domains[4])]
    ok = all(
        product_constant([a, b]).value < min(kubota_constant(a).value, kubota_constant(b).value)
        for a, b in pairs
    )
    results.append(_result("symmetric", "product-strictly-below-min", ok))

    values = [kubota_constant(d).value for d in domains]
    ok = all(0.0 < v <= 1.0 for v in values) and values[0] == 1.0 and all(v < 1.0 for v in values[1:])
    results.append(_result("symmetric", "constants-in-range", ok))

    ok = (
        sandwich_check_type_i(1, 1, samples=200, seed=1)
        and sandwich_check_type_i(2, 2, samples=300, seed=2)
        and sandwich_check_type_i(2, 3, samples=1000, seed=3)
    )
    results.append(_result("symmetric", "ball-domain-ball-sandwich", ok))
    return results


# --------------------------------------------------------------------------
# planar


def two_hole_domain():
    """Excised-disc fixture: holes of radius 1/4 centred at +-1/2."""
    return ExcisedDomain(
        u=0.2,
        v=0.3,
        w=0.45,
        excisions=(Excision(0.5 + 0j, 0.25), Excision(-0.5 + 0j, 0.25)),
    )


def suite_planar(samples: int | None = None):
    rng = np.random.default_rng(23)
    results = []
    annulus = Annulus(0.25)

    ok = True
    for _ in range(200):
        rho = annulus.r + (1.0 - annulus.r) * rng.random()
        direct = annulus_lower_bound(annulus, rho).value
        mirrored = annulus_lower_bound(annulus, annulus.r / rho).value
        if abs(direct - mirrored) > TOL:
            ok = False
    results.append(_result("planar", "reflection-symmetry", ok))

    ok = True
    for r in (0.1, 0.25, 0.5, 0.81):
        a = Annulus(r)
        if abs(annulus_conjectured_value(a, math.sqrt(r)).value - annulus_minimum_value(a)) > TOL:
            ok = False
    results.append(_result("planar", "closed-form-minimum", ok))

    ok = True
    for _ in range(200):
        rho = annulus.r + (1.0 - annulus.r) * rng.random()
        folded = annulus.fold(rho)
        if abs(annulus_conjectured_value(annulus, folded).value - annulus_lower_bound(annulus, rho).value) > TOL:
            ok = False
    results.append(_result("planar", "fold-coincidence", ok))

    rho = np.linspace(math.sqrt(annulus.r), 0.999999, 2048)
    values = np.array([annulus_conjectured_value(annulus, x).value for x in rho])
    results.append(_result("planar", "conjecture-strictly-increasing", np.all(np.diff(values) > 0)))

    boundary_values = [annulus_lower_bound(annulus, 1.0 - 10.0 ** -k).value for k in range(1, 11)]
    ok = all(b > a for a, b in zip(boundary_values, boundary_values[1:])) and boundary_values[-1] > 0.999
    results.append(_result("planar", "boundary-limit-one", ok, f"last {boundary_values[-1]:.6f}"))

    c_ref = excision_constant(0.2, 0.3, 0.6)
    ws = np.linspace(0.35, 0.9, 12)
    cs = [excision_constant(0.2, 0.3, w) for w in ws]
    # grid assertion on the implementation, not a theorem: c grows with w
    ok = c_ref > 0 and all(b > a for a, b in zip(cs, cs[1:]))
    results.append(_result("planar", "excision-constant-positive-monotone", ok, f"c = {c_ref:.6f}"))

    center, radius = mobius_circle_image(0.5, 0.25)
    theta = np.exp(2j * np.pi * np.arange(1000) / 1000)
    image = mobius_map(0.5, 0.25 * theta)
    deviation = np.abs(np.abs(image - center) - radius).max()
    results.append(_result("planar", "mobius-circle-image-oracle", deviation <= 1e-10 and radius < 1.0, f"dev {deviation:.2e}"))

    domain = two_hole_domain()
    at_origin = excised_domain_lower_bound(domain, 0j)
    hole_center, hole_radius = domain.excisions[0].circle_image(0.25)
    near_point = hole_center + (hole_radius + 1e-3)
    near = excised_domain_lower_bound(domain, near_point)
    floor = min(domain.near_constant, domain.far_constant)
    ok = at_origin.witness["region"] == "far" and near.witness["region"] == "near"
    count = 0
    for _ in range(10000):
        z = _disc_points(rng, 1, cap=0.999)[0]
        if domain.contains(z):
            count += 1
            if excised_domain_lower_bound(domain, z).value < floor:
                ok = False
    results.append(_result("planar", "excised-domain-two-case", ok, f"{count} interior samples"))

    ball = PuncturedBall(2, (np.zeros(2),))
    ok = True
    for _ in range(200):
        z = uniform_ball_points(rng, 2, 1)[0]
        upper = punctured_domain_upper_bound(ball, z).value
        exact = punctured_ball_squeezing(z).value
        if abs(upper - exact) > TOL or abs(exact - np.linalg.norm(z)) > TOL:
            ok = False
    results.append(_result("planar", "puncture-upper-meets-exact", ok))

    ok = abs(caratheodory_lower_estimate(0j, 1.0) - 0.25) == 0.0
    ok = ok and abs(caratheodory_lower_estimate(0.5, 2.0 / 7.0, annulus) - 2.0 / 7.0) <= TOL
    results.append(_result("planar", "koebe-quarter-estimate", ok))

    points = [annulus.r + (1.0 - annulus.r) * t for t in rng.random(1000)]
    report = completeness_criterion(
        lambda z: annulus_lower_bound(annulus, z).value,
        lambda z: boundary_distance(z, annulus),
        0.1,
        points,
    )
    ok = bool(report)
    small = [10.0 ** -k for k in range(2, 8)]
    failing = completeness_criterion(lambda z: abs(z), lambda z: min(abs(z), 1 - abs(z)), 0.1, small)
    ok = ok and not bool(failing)
    results.append(_result("planar", "completeness-criterion", ok, f"worst margin {report.worst_margin:.4f}"))

    pairs = [(uniform_ball_points(rng, 2, 1)[0], uniform_ball_points(rng, 2, 1)[0]) for _ in range(1000)]
    pairs = [(x, y) for x, y in pairs if np.linalg.norm(x) > 0 and np.linalg.norm(y) > 0]
    ok = lipschitz_check(lambda z: float(np.linalg.norm(z)), kobayashi_distance, pairs)
    results.append(_result("planar", "lipschitz-two-T", ok))
    return results


# --------------------------------------------------------------------------
# search


def suite_search(samples: int | None = None):
    resolution = samples or search.DEFAULT_SAMPLES
    results = []
    annulus = Annulus(0.25)

    rho = math.sqrt(annulus.r) + (1.0 - math.sqrt(annulus.r)) * np.arange(64) / 64
    worst = max(
        abs(search.tier_a_bound(annulus, x, resolution).best_value - annulus_lower_bound(annulus, x).value)
        for x in rho
    )
    results.append(_result("search", "tier-a-reproduces-closed-form", worst <= 1e-9, f"worst {worst:.2e}"))

    collapsed = search.tier_b_search(annulus, 0.5, degree=0, budget=10, seed=0, samples=resolution)
    tier_a = search.tier_a_bound(annulus, 0.5, 2 * resolution)
    results.append(
        _result("search", "degree-zero-collapse", collapsed.best_value == tier_a.best_value)
    )

    found = search.tier_b_search(annulus, 0.5, degree=1, budget=60, seed=1, samples=resolution)
    ok = found.tier_a_value - 1e-9 <= found.best_value < 1.0
    results.append(_result("search", "family-containment", ok, f"best {found.best_value:.12f}"))

    again = search.tier_b_search(annulus, 0.5, degree=1, budget=60, seed=1, samples=resolution)
    ok = (
        again.best_value == found.best_value
        and again.evaluations == found.evaluations
        and np.array_equal(again.best_candidate.coefficients, found.best_candidate.coefficients)
    )
    results.append(_result("search", "determinism", ok))

    report = search.monotonicity_scan(annulus, grid=32, tier="A", samples=resolution)
    results.append(_result("search", "tier-a-monotone", report.inversions == 0, f"{report.inversions} inversions"))
    return results


_SUITES = {
    "metrics": suite_metrics,
    "rouche": suite_rouche,
    "symmetric": suite_symmetric,
    "planar": suite_planar,
    "search": suite_search,
}


def run_suite(name: str, samples: int | None = None):
    """Run one named suite (or all of them); unknown names raise KeyError."""
    if name == "all":
        results = []
        for suite in _SUITES.values():
            results.extend(suite(samples))
        return results
    return _SUITES[name](samples)
