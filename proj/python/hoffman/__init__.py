"""Exact error-bound, stability and Hoffman-constant analysis of A x <= b.

Inputs may be ints, Fractions or rational strings such as "-3/4".
Exact outputs come back as fractions.Fraction.
"""

from . import _core

__all__ = [
    "check_error_bound",
    "check_stability",
    "hoffman_exact",
    "enumerate_sets",
    "verify_certificate",
    "perturb",
    "perturbation_ratio",
    "estimate_sigma",
    "sample_minmax",
    "minmax_value_sq",
]


def _vec(xs):
    return [str(x) for x in xs]


def _rows(rows):
    return [_vec(r) for r in rows]


def check_error_bound(A, b, full=False):
    return _core.check_error_bound(_rows(A), _vec(b), full)


def check_stability(A, b):
    return _core.check_stability(_rows(A), _vec(b))


def hoffman_exact(A, b):
    return _core.hoffman_exact(_rows(A), _vec(b))


def enumerate_sets(A, b, level="pos"):
    """Realizable active sets, 1-based, at level "pos" or "zero"."""
    return _core.enumerate(_rows(A), _vec(b), level)


def verify_certificate(A, b, certificate):
    return _core.verify_certificate(
        _rows(A),
        _vec(b),
        _vec(certificate["point"]),
        list(certificate["active"]),
        _vec(certificate["hull_multipliers"]),
    )


def perturb(A, b, eps, u, x_bar):
    return _core.perturb(_rows(A), _vec(b), str(eps), _vec(u), _vec(x_bar))


def perturbation_ratio(A, b, x):
    return _core.perturbation_ratio(_rows(A), _vec(b), _vec(x))


def estimate_sigma(A, b, samples=100000, seed=1, box=10.0):
    return _core.estimate_sigma(_rows(A), _vec(b), samples, seed, box)


def sample_minmax(points, samples=100000, seed=1):
    return _core.sample_minmax(_rows(points), samples, seed)


def minmax_value_sq(points):
    return _core.minmax_value_sq(_rows(points))
