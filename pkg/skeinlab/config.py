"""Configuration settings for the application."""
import logging
import os

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        # Don't crash on import - fall back so the health check still works
        logger.error(f"{name} must be an integer, got {raw!r}; using {default}")
        return default


class Config:
    """Application configuration."""

    # Worker processes for splitting a state sum. Affects speed only, never output.
    WORKERS = max(1, _int_setting('SKEINLAB_WORKERS', 1))

    # Diagrams below this many crossings are always expanded in-process
    PARALLEL_MIN_CROSSINGS = _int_setting('SKEINLAB_PARALLEL_MIN_CROSSINGS', 12)

    # State-space limits: 2^crossings states per evaluation
    MAX_STATES = _int_setting('SKEINLAB_MAX_STATES', 2 ** 22)
    HARD_MAX_STATES = 2 ** 30

    LOG_LEVEL = os.getenv('SKEINLAB_LOG_LEVEL', 'INFO').upper()
    DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

    # Standard twice-punctured disk
    DISK_RADIUS = 4
    DISK_PUNCTURES = ((-2, 0), (2, 0))

    # Verification suites and their default caps
    SUITES = {
        'centrality': {
            'name': 'Centrality at roots of unity',
            'description': 'p(z) commutes with the arc e iff p lies in C[T_N], N = ord(xi^2)',
            'n_max': 24,
        },
        'skew': {
            'name': 'Skew transparency',
            'description': 'T_N . e = -e . T_N exactly when xi^(2N) = -1',
            'n_max': 24,
            'N_max': 6,
        },
        'tl': {
            'name': 'Temperley-Lieb encircling',
            'description': 'an encircled identity of TL_k is lambda_k times itself modulo fewer through strands',
            'k_max': 6,
        },
        'annulus': {
            'name': 'Annulus arcs',
            'description': 'closed forms and recursions of u_k, v_k and the hook-arc map',
            'k_max': 15,
        },
        'framing': {
            'name': 'Framing and unknot values',
            'description': 'S_k on the unknot and on a one-curl unknot',
            'k_max': 4,
        },
        'degrees': {
            'name': 'Degree bounds',
            'description': 'arc-intersection bounds on degrees and membership in V_N',
            'N_max': 4,
        },
        'roots': {
            'name': 'Root-of-unity arithmetic',
            'description': 'lambda_k coincidences and the sign xi^(2N^2+2N) = (-1)^(N+1)',
            'n_max': 48,
        },
        'extremal': {
            'name': 'Extremal coefficients',
            'description': 'the y^N and x1^N x2^N coefficients of T_N on the figure-eight curve',
            'N_max': 4,
        },
        'eight': {
            'name': 'Threaded figure-eight curve',
            'description': 'T_N of the figure-eight curve and its mirror in terms of T_N(y), T_N(x1), T_N(x2)',
            'n_max': 16,
            'N_max': 4,
        },
        'eigen': {
            'name': 'Loop operator eigen-relations',
            'description': 'boundary loops act on T_N-threaded elements by scalars',
            'n_max': 16,
            'N_max': 3,
        },
        'chebhom': {
            'name': 'Chebyshev homomorphism relations',
            'description': 'T_N respects the skein relations with t replaced by epsilon = xi^(N^2)',
            'n_max': 16,
            'N_max': 3,
        },
        'loops': {
            'name': 'Loop expansions',
            'description': 'the middle loop on x1 x2, filtration tops, transparency and the hook loop on x2 powers',
            'n_max': 16,
            'N_max': 3,
            'k_max': 4,
        },
        'engine': {
            'name': 'Engine sanity',
            'description': 'Reidemeister moves, curl factor, multiplicativity, rotation and worker determinism',
            'N_max': 3,
        },
    }

    # Alternative names accepted wherever a suite is named
    SUITE_ALIASES = {
        'theorem1': 'centrality',
        'lemma62': 'roots',
        'lemma68': 'extremal',
        'prop61': 'eight',
        'prop63': 'eigen',
        'phi0': 'loops',
    }
