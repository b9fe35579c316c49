"""Exact Brauer group computations for Kummer surfaces of diagonal cubics."""

import json

from . import _core
from ._core import DomainError, verify_a2_invariants


def _s(n):
    return str(n)


def normalize_triple(a, b, c):
    return tuple(int(x) for x in _core.normalize_triple(_s(a), _s(b), _s(c)))


def is_cube(n):
    return _core.is_cube(_s(n))


def cube_class(n):
    return _core.cube_class(_s(n))


def choose_lambda(a, b, c):
    return _core.choose_lambda(_s(a), _s(b), _s(c))


def eisenstein_norm(x, y):
    return int(_core.eisenstein_norm(_s(x), _s(y)))


def primary_associate(x, y):
    return tuple(int(v) for v in _core.primary_associate(_s(x), _s(y)))


def residue_symbol(x, y, p, degree=3):
    """Exponent k with (x + y w / pi)_degree = (-w)^k."""
    return _core.residue_symbol(_s(x), _s(y), p, degree)


def jacobian_D(a, b, c):
    return int(_core.jacobian_D(_s(a), _s(b), _s(c)))


def find_m3_witness(D, lambda_="1", bound=100000):
    return _core.find_m3_witness(_s(D), _s(lambda_), bound)


def brauer_of_ExE(D):
    return _core.brauer_of_ExE(_s(D))


def brauer_of_Y(a, b, c):
    return _core.brauer_of_Y(_s(a), _s(b), _s(c))


def full_report(a, b, c, assume_y_soluble=False):
    return json.loads(_core.full_report_json(_s(a), _s(b), _s(c), assume_y_soluble))


def cyclic_h1(cm=None):
    return _core.cyclic_h1(cm)


def torsion_surjectivity_det():
    return int(_core.torsion_surjectivity_det())


def hilbert_symbol(a, b, place):
    return _core.hilbert_symbol(_s(a), _s(b), _s(place))


def diagonal_cubic_soluble(a, b, c, place):
    return _core.diagonal_cubic_soluble(_s(a), _s(b), _s(c), _s(place))


def evaluation_image(precision=8):
    return _core.evaluation_image(precision)


__all__ = [
    "DomainError",
    "brauer_of_ExE",
    "brauer_of_Y",
    "choose_lambda",
    "cube_class",
    "cyclic_h1",
    "diagonal_cubic_soluble",
    "eisenstein_norm",
    "evaluation_image",
    "find_m3_witness",
    "full_report",
    "hilbert_symbol",
    "is_cube",
    "jacobian_D",
    "normalize_triple",
    "primary_associate",
    "residue_symbol",
    "torsion_surjectivity_det",
    "verify_a2_invariants",
]
