"""Hypocoercivity certificates for finite-dimensional accretive operators.

Thin Python layer over the native core. Matrices are accepted as anything
numpy can turn into a complex square array.
"""

import json

import numpy as np

from ._hypocert import (
    HypocertError,
    epsilon_curve,
    kappa3,
    lemma1_envelope,
    lorentz_generator,
)
from . import _hypocert as _core

__all__ = [
    "HypocertError",
    "certify",
    "envelope",
    "epsilon_curve",
    "expm",
    "hc_index",
    "kappa3",
    "lemma1_envelope",
    "lorentz",
    "lorentz_generator",
    "lyapunov_P",
    "propagator_norm",
    "staircase",
]


def _matrix(C):
    return np.ascontiguousarray(np.asarray(C, dtype=np.complex128))


def expm(A):
    """Matrix exponential (Pade 13, scaling and squaring)."""
    return _core.expm(_matrix(A))


def propagator_norm(C, t):
    """Spectral norm of exp(-t C)."""
    return _core.propagator_norm(_matrix(C), float(t))


def hc_index(C, max_m=4):
    """Hypocoercivity index under both conditions, with kappa values."""
    return json.loads(_core.index_json(_matrix(C), int(max_m)))


def lyapunov_P(C, m):
    """Returns (P, ||P||, rate_C, rate_S) for P = sum_{j<=m} (C*)^j C^j."""
    return _core.lyapunov_P(_matrix(C), int(m))


def staircase(C):
    """Staircase form of the split of C, as a dictionary."""
    return json.loads(_core.staircase_json(_matrix(C)))


def certify(C):
    """Long- and short-time certificates for C_eta = R - eta J."""
    return json.loads(_core.certify_json(_matrix(C)))


def envelope(C, etas=(1.0, 2.0, 4.0, 8.0, 16.0), points=200, c_scale=1.0,
             tol=1e-9):
    """Checks measured propagator norms against the certified envelopes."""
    return json.loads(_core.envelope_json(_matrix(C), [float(e) for e in etas],
                                          int(points), float(c_scale),
                                          float(tol)))


def lorentz(sigma=1.0, nmax=8.0, K=32):
    """Mode-by-mode certificate check for the Lorentz kinetic model."""
    return json.loads(_core.lorentz_json(float(sigma), float(nmax), int(K)))
