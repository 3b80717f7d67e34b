"""
Growth Asymptotics - Characteristic polynomial and dominant root of a transfer matrix.

Typed counts grow like A * B^k. When counts vanish on alternating layer
counts the system has period 2; B is then the growth over two layers and A the
matching prefactor on the nonzero residue class.
"""

import logging
import math
from functools import reduce
from typing import List, Sequence, Tuple

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import BadParametersError, NoRealDominantRootError
from ..models import GrowthConstants
from .system import build_transfer_system, typed_counts
from .tiles import MAX_TILE_WIDTH

logger = logging.getLogger(__name__)

DEFAULT_SAMPLE_K = 120
ROOT_EPS = sympy.Rational(1, 10**12)
MATCH_TOLERANCE = 1e-6


def characteristic_polynomial(matrix: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Integer coefficients of det(xI - M), leading term first (fraction-free)."""
    size = len(matrix)
    dm = DomainMatrix([[ZZ(x) for x in row] for row in matrix], (size, size), ZZ)
    return tuple(int(coeff) for coeff in dm.charpoly())


def real_roots(char_poly: Sequence[int]) -> List[float]:
    """Real roots, isolated and refined to within 1e-12."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(char_poly), x)
    return [float((lo + hi) / 2) for (lo, hi), _ in poly.intervals(eps=ROOT_EPS)]


def _nonzero_layers(counts: Sequence[int], start: int) -> List[int]:
    return [k for k in range(start, len(counts)) if counts[k]]


def growth_constants(
    w: int, c: int, sample_k: int = DEFAULT_SAMPLE_K, max_width: int = MAX_TILE_WIDTH
) -> GrowthConstants:
    """Characteristic polynomial, dominant root and prefactor of the Type-2c count.

    Raises:
        BadParametersError: the typed count vanishes for every large k.
        NoRealDominantRootError: no real root matches the observed growth.
    """
    system = build_transfer_system(w, c, reduced=True, max_width=max_width)
    char_poly = characteristic_polynomial(system.matrix)
    counts = typed_counts(system, sample_k)

    nonzero = _nonzero_layers(counts, sample_k // 2)
    if len(nonzero) < 2:
        raise BadParametersError(f"N({w},k) has no Type-{2 * c} Hamilton cycles for large k")
    period = reduce(math.gcd, (k - nonzero[0] for k in nonzero[1:]), 0)
    k_hi = nonzero[-1]
    k_prev = nonzero[-2]
    ratio = (counts[k_hi] / counts[k_prev]) ** (period / (k_hi - k_prev))

    best = None
    for root in real_roots(char_poly):
        growth = root**period
        if growth <= 0:
            continue
        error = abs(growth - ratio) / ratio
        if best is None or error < best[0]:
            best = (error, growth)
    if best is None or best[0] > MATCH_TOLERANCE:
        modulus = float(np.max(np.abs(np.roots(np.array(char_poly, dtype=float)))))
        raise NoRealDominantRootError(modulus ** period)

    dominant = best[1]
    prefactor = math.exp(math.log(counts[k_hi]) - (k_hi // period) * math.log(dominant))
    logger.info(
        f"📈 Growth of N({w},k) Type-{2 * c}: B={dominant:.9f} A={prefactor:.9f} period={period}"
    )
    return GrowthConstants(
        width=w,
        pairs=c,
        char_poly=char_poly,
        dominant_root=dominant,
        prefactor_estimate=prefactor,
        period=period,
        sample_k=k_hi,
    )


def per_vertex_growth(w: int, c: int, sample_k: int = DEFAULT_SAMPLE_K) -> float:
    """Growth of the Type-2c count per added vertex (each layer adds 2w vertices)."""
    constants = growth_constants(w, c, sample_k=sample_k)
    return float(constants.dominant_root ** (1.0 / (2 * w * constants.period)))
