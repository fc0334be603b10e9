"""Lower bounds for annulus squeezing values by search over embeddings.

Any univalent map f of the annulus into the unit disc yields the lower bound
euclidean_radius(P(f(p), complement of image)): the hyperbolic disc around
f(p) avoiding the image boundary can be recentred to a round disc.  The
objective below approximates that distance by the minimum Poincare distance
from f(p) to dense samples of the two boundary-circle images, so it is a
valid bound up to the quoted sampling resolution.

Tier A evaluates the two Mobius embeddings (the inclusion recentred at the
query point, and the reflection across the annulus); they reproduce the
closed-form annulus lower bound.  Tier B perturbs Laurent coefficients
around those seeds with a deterministic multi-start Nelder-Mead simplex
search (the min-over-samples objective is nonsmooth, so derivative-free
search is the right tool).  Search evaluations are advisory; a candidate is
adopted only after its injectivity certificate passes, and only adopted
candidates are ever reported.  Post-composition with a disc automorphism is
value-neutral (the objective is Mobius invariant), so candidates are stored
unnormalised and implicitly recentred at f(p).

The conjectured closed form for the true squeezing value is reported next
to every search result; its gap to the best found bound is recorded but
never asserted to have a sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DomainValidationError,
    ImageEscapesDisc,
    NotCertified,
    PointOutsideAnnulus,
)
from .hyperbolic import MAX_RADIUS, euclidean_radius, hyperbolic_radius
from .planar import Annulus
from .rouche import InjectivityCertificate, injectivity_certificate, laurent_map

#: Default boundary samples per circle for objective evaluation; the final
#: reported value is re-evaluated at twice this resolution.
DEFAULT_SAMPLES = 2048

#: Candidates must beat the certified incumbent by this much before the
#: (expensive) injectivity certificate is attempted.
CERTIFY_MARGIN = 1e-6

_ESCAPE_SLACK = 1e-12
_DEGREE_CAP = 4


@dataclass(frozen=True, eq=False)
class EmbeddingCandidate:
    """A candidate embedding: a Laurent map c_{-m} z^{-m} + ... + c_m z^m.

    The two Mobius families are the exact Laurent maps z and r/z (injective
    by construction, hence auto-certified); free Laurent candidates carry the
    certificate produced for them.
    """

    family: str  # mobius-inclusion | mobius-reflection | laurent
    degree: int
    coefficients: np.ndarray
    status: str  # certified | refuted | inconclusive
    certificate: InjectivityCertificate | None = None

    @classmethod
    def mobius_inclusion(cls) -> "EmbeddingCandidate":
        return cls("mobius-inclusion", 1, np.array([0, 0, 1], dtype=complex), "certified")

    @classmethod
    def mobius_reflection(cls, r: float) -> "EmbeddingCandidate":
        return cls("mobius-reflection", 1, np.array([r, 0, 0], dtype=complex), "certified")

    @classmethod
    def laurent(cls, coefficients, certificate: InjectivityCertificate) -> "EmbeddingCandidate":
        c = np.asarray(coefficients, dtype=complex)
        return cls("laurent", len(c) // 2, c, certificate.status, certificate)


@dataclass(frozen=True, eq=False)
class SearchResult:
    best_value: float
    best_candidate: EmbeddingCandidate
    tier_a_value: float
    conjecture_value: float
    evaluations: int
    seed: int
    budget_exhausted: bool = False

    @property
    def conjecture_gap(self) -> float:
        return self.best_value - self.conjecture_value


def _check_point(annulus: Annulus, p) -> complex:
    point = complex(p)
    if not annulus.r < abs(point) < 1.0:
        raise PointOutsideAnnulus(f"|p| = {abs(point)} is not in ({annulus.r}, 1)")
    return point


def _laurent_values(coefficients: np.ndarray, z: np.ndarray) -> np.ndarray:
    m = len(coefficients) // 2
    powers = np.arange(-m, m + 1)
    return (coefficients * z[:, None] ** powers).sum(axis=1)


def _objective_value(
    coefficients: np.ndarray,
    annulus: Annulus,
    p: complex,
    samples: int,
    strict: bool,
) -> float:
    """Sampled objective; with strict=False an escaping image yields a
    negative penalty instead of an exception (used inside the search)."""
    theta = 2.0 * np.pi * np.arange(samples) / samples
    ring = np.exp(1j * theta)
    boundary = np.concatenate([ring, annulus.r * ring])
    w = _laurent_values(coefficients, boundary)
    wp = _laurent_values(coefficients, np.array([p], dtype=complex))[0]
    moduli = np.abs(w)
    escape = max(moduli.max() - 1.0, abs(wp) - (1.0 - 1e-15))
    if escape >= _ESCAPE_SLACK:
        if strict:
            raise ImageEscapesDisc(f"boundary image modulus exceeds 1 by {escape:.3e}")
        return -1.0 - escape
    # boundary samples at modulus 1 (automorphism images) are clamped just
    # inside the disc; their distances are effectively infinite and never win
    # the minimum.
    hot = moduli > MAX_RADIUS
    if np.any(hot):
        w = np.where(hot, w * (MAX_RADIUS / np.where(hot, moduli, 1.0)), w)
    pseudo = np.abs((wp - w) / (1.0 - np.conj(w) * wp))
    pseudo = np.minimum(pseudo, MAX_RADIUS)
    return float(euclidean_radius(hyperbolic_radius(pseudo).min()))


def _normalized(coefficients: np.ndarray, annulus: Annulus) -> np.ndarray | None:
    """Rescale a coefficient vector so the boundary image provably stays
    inside the unit disc.

    Scalar multiples preserve univalence, so the search works on normalised
    representatives and feasibility walls disappear.  The boundary curves are
    trigonometric polynomials of the Laurent degree m, so the true maximum
    modulus exceeds the sampled maximum by at most the Bernstein-type factor
    1/sqrt(1 - (m h)^2 / 2) at angular step h; dividing by that inflated peak
    keeps the rescaled image strictly inside the disc at every resolution.
    Degenerate (near-zero) vectors yield None.
    """
    scan = 8192
    degree = len(coefficients) // 2
    theta = 2.0 * np.pi * np.arange(scan) / scan
    ring = np.exp(1j * theta)
    boundary = np.concatenate([ring, annulus.r * ring])
    peak = np.abs(_laurent_values(coefficients, boundary)).max()
    if peak < 1e-12:
        return None
    step = 2.0 * np.pi / scan
    inflation = 1.0 / math.sqrt(1.0 - 0.5 * (degree * step) ** 2)
    return coefficients * ((1.0 - 1e-12) / (peak * inflation))


def objective(candidate: EmbeddingCandidate, annulus: Annulus, p, samples: int = DEFAULT_SAMPLES) -> float:
    """Lower bound realised by a certified candidate at p.

    euclidean_radius of the minimum Poincare distance from f(p) to the
    sampled images of both boundary circles.  Raises NotCertified for
    candidates without a passing certificate and ImageEscapesDisc when the
    boundary image leaves the closed unit disc beyond tolerance.
    """
    if candidate.status != "certified":
        raise NotCertified(f"candidate status is {candidate.status!r}")
    point = _check_point(annulus, p)
    return _objective_value(candidate.coefficients, annulus, point, samples, strict=True)


def _conjecture_at(annulus: Annulus, rho: float) -> float:
    folded = annulus.fold(rho)
    return float(euclidean_radius(hyperbolic_radius(folded) - hyperbolic_radius(annulus.r)))


def tier_a_bound(annulus: Annulus, p, samples: int = DEFAULT_SAMPLES) -> SearchResult:
    """Best of the two Mobius embeddings; reproduces the closed-form bound."""
    point = _check_point(annulus, p)
    inclusion = EmbeddingCandidate.mobius_inclusion()
    reflection = EmbeddingCandidate.mobius_reflection(annulus.r)
    value_inc = _objective_value(inclusion.coefficients, annulus, point, samples, strict=True)
    value_ref = _objective_value(reflection.coefficients, annulus, point, samples, strict=True)
    if value_inc >= value_ref:
        best, value = inclusion, value_inc
    else:
        best, value = reflection, value_ref
    return SearchResult(
        best_value=value,
        best_candidate=best,
        tier_a_value=value,
        conjecture_value=_conjecture_at(annulus, abs(point)),
        evaluations=2,
        seed=0,
    )


class _BudgetExhausted(Exception):
    pass


class _StartExhausted(Exception):
    pass


def _run_start(raw, start, allowance):
    """Run one simplex start with a per-start evaluation allowance."""
    used = 0

    def limited(x):
        nonlocal used
        if used >= allowance:
            raise _StartExhausted
        used += 1
        return raw(x)

    try:
        _simplex_maximize(limited, start, step=0.02)
    except _StartExhausted:
        pass


def _simplex_maximize(fn: Callable, x0: np.ndarray, step: float = 0.05, iterations: int = 200):
    """Deterministic Nelder-Mead ascent; fn may abort via _BudgetExhausted."""
    dim = len(x0)
    points = [np.array(x0, dtype=float)]
    for i in range(dim):
        shifted = np.array(x0, dtype=float)
        shifted[i] += step
        points.append(shifted)
    values = [fn(x) for x in points]

    for _ in range(iterations):
        order = sorted(range(dim + 1), key=lambda i: -values[i])
        points = [points[i] for i in order]
        values = [values[i] for i in order]
        spread = max(np.max(np.abs(p - points[0])) for p in points[1:])
        if values[0] - values[-1] < 1e-11 and spread < 1e-11:
            break
        centroid = np.mean(points[:-1], axis=0)
        reflected = centroid + (centroid - points[-1])
        f_reflected = fn(reflected)
        if f_reflected > values[0]:
            expanded = centroid + 2.0 * (centroid - points[-1])
            f_expanded = fn(expanded)
            if f_expanded > f_reflected:
                points[-1], values[-1] = expanded, f_expanded
            else:
                points[-1], values[-1] = reflected, f_reflected
        elif f_reflected > values[-2]:
            points[-1], values[-1] = reflected, f_reflected
        else:
            contracted = centroid + 0.5 * (points[-1] - centroid)
            f_contracted = fn(contracted)
            if f_contracted > values[-1]:
                points[-1], values[-1] = contracted, f_contracted
            else:
                points = [points[0]] + [points[0] + 0.5 * (p - points[0]) for p in points[1:]]
                values = [values[0]] + [fn(p) for p in points[1:]]


def _encode(coefficients: np.ndarray) -> np.ndarray:
    return np.concatenate([coefficients.real, coefficients.imag])


def _decode(x: np.ndarray) -> np.ndarray:
    half = len(x) // 2
    return x[:half] + 1j * x[half:]


def tier_b_search(
    annulus: Annulus,
    p,
    degree: int = 2,
    budget: int = 500,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    target_grid: int = 16,
) -> SearchResult:
    """Multi-start simplex search over certified Laurent embeddings.

    Starts from the Laurent representations of the two Mobius embeddings
    (c_1 = 1 and c_{-1} = r) plus seeded random perturbations.  Raw
    evaluations are advisory; a candidate must improve the certified
    incumbent by CERTIFY_MARGIN and then pass the injectivity certificate
    before it may be reported.  Degree 0 has no usable free family and
    collapses to Tier A.  Exhausting the budget returns the best certified
    result so far; identical inputs reproduce identical outputs.
    """
    point = _check_point(annulus, p)
    if not isinstance(degree, int) or not 0 <= degree <= _DEGREE_CAP:
        raise DomainValidationError(f"degree must be an integer in [0, {_DEGREE_CAP}]")
    if budget < 1:
        raise DomainValidationError("budget must be at least 1")

    inclusion = EmbeddingCandidate.mobius_inclusion()
    reflection = EmbeddingCandidate.mobius_reflection(annulus.r)
    final_samples = 2 * samples
    tier_a_final = {
        inclusion: _objective_value(inclusion.coefficients, annulus, point, final_samples, True),
        reflection: _objective_value(reflection.coefficients, annulus, point, final_samples, True),
    }
    best_mobius = max(tier_a_final, key=tier_a_final.get)
    tier_a_value = tier_a_final[best_mobius]
    conjecture = _conjecture_at(annulus, abs(point))

    if degree == 0:
        return SearchResult(
            best_value=tier_a_value,
            best_candidate=best_mobius,
            tier_a_value=tier_a_value,
            conjecture_value=conjecture,
            evaluations=2,
            seed=seed,
        )

    size = 2 * degree + 1
    seed_inclusion = np.zeros(size, dtype=complex)
    seed_inclusion[degree + 1] = 1.0
    seed_reflection = np.zeros(size, dtype=complex)
    seed_reflection[degree - 1] = annulus.r

    incumbent_value = max(
        _objective_value(seed_inclusion, annulus, point, samples, False),
        _objective_value(seed_reflection, annulus, point, samples, False),
    )
    incumbent = None  # (coefficients, raw value, certificate); None -> Mobius fallback
    rejected_above = -np.inf

    rng = np.random.default_rng(seed)
    starts = [
        _encode(seed_inclusion),
        _encode(seed_reflection),
        _encode(seed_inclusion) + 0.02 * rng.standard_normal(2 * size),
        _encode(seed_reflection) + 0.02 * rng.standard_normal(2 * size),
    ]

    evaluations = 0
    exhausted = False

    def raw(x: np.ndarray) -> float:
        nonlocal evaluations, incumbent, incumbent_value, rejected_above
        if evaluations >= budget:
            raise _BudgetExhausted
        evaluations += 1
        coefficients = _normalized(_decode(x), annulus)
        if coefficients is None:
            return -1.0
        value = _objective_value(coefficients, annulus, point, samples, strict=False)
        if value > max(incumbent_value, rejected_above) + CERTIFY_MARGIN:
            certificate = injectivity_certificate(
                laurent_map(coefficients), annulus, target_grid=target_grid, samples=samples
            )
            if certificate.status == "certified":
                incumbent = (coefficients.copy(), value, certificate)
                incumbent_value = value
            else:
                rejected_above = value
        return value

    per_start = max(budget // len(starts), 2 * size + 2)
    for start in starts:
        allowance = min(per_start, budget - evaluations)
        if allowance <= 0:
            exhausted = True
            break
        try:
            _run_start(raw, start, allowance)
        except _BudgetExhausted:
            exhausted = True
            break

    best_value = tier_a_value
    best_candidate = best_mobius
    if incumbent is not None:
        coefficients, raw_value, certificate = incumbent
        try:
            final_value = _objective_value(coefficients, annulus, point, final_samples, strict=True)
        except ImageEscapesDisc:
            final_value = None
        # resolution disagreement invalidates the candidate
        if (
            final_value is not None
            and abs(final_value - raw_value) <= CERTIFY_MARGIN
            and final_value > best_value
        ):
            best_value = final_value
            best_candidate = EmbeddingCandidate.laurent(coefficients, certificate)

    return SearchResult(
        best_value=best_value,
        best_candidate=best_candidate,
        tier_a_value=tier_a_value,
        conjecture_value=conjecture,
        evaluations=evaluations,
        seed=seed,
        budget_exhausted=exhausted,
    )


@dataclass(frozen=True, eq=False)
class MonotonicityReport:
    tier: str
    rho: np.ndarray
    values: np.ndarray
    inversions: int


def monotonicity_scan(
    annulus: Annulus,
    grid: int = 256,
    tier: str = "A",
    degree: int = 2,
    budget: int = 120,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> MonotonicityReport:
    """Evaluate the chosen tier's bound on a radial grid over [sqrt(r), 1)
    and count adjacent decreases.

    Tier A tracks the closed-form bound, which is strictly increasing, so its
    inversion count must be 0.  Tier B counts are reported, not asserted:
    budget-limited searches are noisy.
    """
    if grid < 8:
        raise DomainValidationError("grid must be at least 8")
    if tier not in ("A", "B"):
        raise DomainValidationError("tier must be 'A' or 'B'")
    root = math.sqrt(annulus.r)
    rho = root + (1.0 - root) * np.arange(grid) / grid
    if tier == "A":
        values = np.array([tier_a_bound(annulus, x, samples).best_value for x in rho])
    else:
        values = np.array(
            [
                tier_b_search(annulus, x, degree=degree, budget=budget, seed=seed, samples=samples).best_value
                for x in rho
            ]
        )
    inversions = int(np.sum(values[1:] < values[:-1]))
    return MonotonicityReport(tier, rho, values, inversions)
