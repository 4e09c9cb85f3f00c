import logging
from typing import Tuple

import numpy as np

from .model import FluxConvexity, HypothesisReport, ModelSpec

logger = logging.getLogger(__name__)

ORIGIN_TOL = 1e-12
CURVATURE_TOL = 1e-8


def central_difference(func, q: np.ndarray, h: float) -> np.ndarray:
    return (func(q + h) - func(q - h)) / (2.0 * h)


def classify_convexity(curvature: np.ndarray) -> FluxConvexity:
    scale = max(1.0, float(np.max(np.abs(curvature))))
    if np.all(curvature > CURVATURE_TOL * scale):
        return FluxConvexity.CONVEX
    if np.all(curvature < -CURVATURE_TOL * scale):
        return FluxConvexity.CONCAVE
    return FluxConvexity.INDEFINITE


def check_hypotheses(model: ModelSpec, q_range: Tuple[float, float], n_samples: int = 401) -> HypothesisReport:
    """
    Sample the flux and source of `model` over q_range and report on the
    assumptions behind the convergence theory of the scaling iteration:
    s(0) = 0, local Lipschitz continuity of s, convexity of f and
    f(0) = f'(0) = 0. The report is advisory; a violation is only logged.
    """
    q_min, q_max = float(q_range[0]), float(q_range[1])
    if not q_max > q_min:
        raise ValueError(f'degenerate sampling range [{q_min}, {q_max}]')
    if n_samples < 3:
        raise ValueError(f'at least 3 samples are required, got {n_samples}')

    q = np.linspace(q_min, q_max, n_samples)
    h = 1e-5 * max(1.0, q_max - q_min)

    curvature = central_difference(model.wave_speed, q, h)
    convexity = classify_convexity(curvature)
    lipschitz = float(np.max(np.abs(central_difference(model.source, q, h))))

    zero = np.zeros(1)
    source_vanishes = bool(abs(model.source(zero)[0]) <= ORIGIN_TOL)
    origin_conditions = bool(abs(model.flux(zero)[0]) <= ORIGIN_TOL and abs(model.wave_speed(zero)[0]) <= ORIGIN_TOL)

    report = HypothesisReport(
        source_vanishes_at_zero=source_vanishes,
        lipschitz_estimate=lipschitz,
        flux_convexity=convexity,
        flux_origin_conditions=origin_conditions,
    )
    if not source_vanishes:
        logger.warning("%s: source does not vanish at q = 0", model.name)
    if convexity is not FluxConvexity.CONVEX:
        logger.warning("%s: flux is %s on [%g, %g], not strictly convex", model.name, convexity.value, q_min, q_max)
    logger.debug("%s: %s", model.name, report)
    return report
