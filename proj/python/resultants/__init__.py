"""Exact resultants and discriminants of homogeneous polynomial systems.

A form is a mapping from exponent tuples to coefficients (int, str or
Fraction); its degree is read off the exponents. Exact results come back
as Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import (
    DegenerateError,
    Error,
    ParseError,
    ShapeError,
    discriminant_degree,
    invariant_tags,
    root_series_coefficient,
    ward_residual_terms,
)

__all__ = [
    "DegenerateError", "Error", "ParseError", "ShapeError",
    "resultant", "applicable_methods", "resolve_method", "discriminant",
    "discriminant_degree", "invariant", "invariant_tags", "poly_from_json",
    "poly_to_json", "system_from_json", "area_series", "root_series",
    "root_series_coefficient", "ward_residual_terms", "j24", "volume_4d",
    "crosscheck",
]


def _terms(form):
    if not form:
        raise ValueError("form has no terms; pass (n, degree, terms) via the _core module")
    out = {tuple(int(a) for a in e): str(Fraction(c)) for e, c in form.items()}
    degrees = {sum(e) for e in out}
    nvars = {len(e) for e in out}
    if len(degrees) != 1 or len(nvars) != 1:
        raise ValueError("form is not homogeneous")
    return nvars.pop(), degrees.pop(), out


def _system(forms):
    parsed = [_terms(f) for f in forms]
    return len(parsed), [(r, t) for _, r, t in parsed]


def _fractions(strings):
    return [Fraction(s) for s in strings]


def resultant(forms, method="auto", variant="a"):
    n, polys = _system(forms)
    return Fraction(_core.resultant(n, polys, method, variant))


def applicable_methods(forms):
    return _core.applicable_methods(*_system(forms))


def resolve_method(forms, method="auto"):
    return _core.resolve_method(*_system(forms), method)


def discriminant(form, method="auto", via="gradient"):
    return Fraction(_core.discriminant(*_terms(form), method, via))


def invariant(form, tag):
    return Fraction(_core.invariant(*_terms(form), tag))


def poly_to_json(form):
    return _core.poly_to_json(*_terms(form))


def poly_from_json(text):
    _, _, terms = _core.poly_from_json(text)
    return {e: Fraction(c) for e, c in terms.items()}


def system_from_json(text):
    _, polys = _core.system_from_json(text)
    return [{e: Fraction(c) for e, c in t.items()} for _, t in polys]


def area_series(order):
    return _fractions(_core.area_series(order))


def root_series(r, terms):
    return _fractions(_core.root_series(r, terms))


def j24(eps, digits=30):
    return {k: float(v) for k, v in _core.j24(str(Fraction(eps)), digits).items()}


def volume_4d(a, b, c, hbar=1, digits=30):
    value, closed = _core.volume_4d(*(str(Fraction(x)) for x in (a, b, c, hbar)), digits)
    return float(value), closed


def crosscheck(degrees, count, seed=1, methods=()):
    return _core.crosscheck(list(degrees), count, seed, list(methods))
