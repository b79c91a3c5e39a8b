"""
JSON-ready dictionaries for forms, regions and algebra data.

Rationals are written as "p/q" strings so that exact samples survive a
round trip through a report or a scenario file.
"""

from fractions import Fraction
from typing import Any, Dict, List

from cswzw.models.arithmetic import format_rational, parse_rational
from cswzw.models.coefficients import CoeffField, make_term
from cswzw.models.form import Form
from cswzw.models.fourier import FourierPoly
from cswzw.models.geometry import Geometry
from cswzw.models.piecewise import PiecewisePoly
from cswzw.models.spaces import SpaceKind
from cswzw.utils import errors


def _scalar_out(value) -> str:
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    return repr(float(value))


def factor_to_dict(factor) -> Dict[str, Any]:
    if isinstance(factor, FourierPoly):
        return {'type': 'fourier', 'modes': {str(k): _scalar_out(c) for k, c in factor.modes}}
    return {
        'type': 'piecewise',
        'knots': [_scalar_out(k) for k in factor.knots],
        'polys': [[_scalar_out(c) for c in poly] for poly in factor.polys],
    }


def factor_from_dict(data: Dict[str, Any]):
    kind = data.get('type')
    if kind == 'fourier':
        return FourierPoly.make({int(k): parse_rational(c) for k, c in data.get('modes', {}).items()})
    if kind == 'piecewise':
        knots = [parse_rational(k) for k in data.get('knots', [])]
        polys = [[parse_rational(c) for c in poly] for poly in data.get('polys', [[]])]
        return PiecewisePoly.make(knots, polys)
    raise ValueError(errors.INVALID_VALUE.format(value=kind))


def field_to_dict(field: CoeffField) -> List[Dict[str, Any]]:
    return [{'coef': _scalar_out(t.coef), 'pi_power': t.pi_power,
             'factors': [factor_to_dict(f) for f in t.factors]} for t in field.terms]


def field_from_dict(arity: int, terms: List[Dict[str, Any]]) -> CoeffField:
    parsed = []
    for term in terms:
        factors = tuple(factor_from_dict(f) for f in term['factors'])
        if len(factors) != arity:
            raise ValueError(f"term has {len(factors)} factors, expected {arity}")
        parsed.append(make_term(parse_rational(term['coef']), int(term.get('pi_power', 0)), factors))
    return CoeffField.build(arity, parsed)


def form_to_dict(form: Form) -> Dict[str, Any]:
    return {
        'space': form.space.kind.value,
        'degree': form.degree,
        'shift': form.shift,
        'components': [{'index': list(index), 'terms': field_to_dict(field)} for index, field in form.components],
    }


def form_from_dict(geometry: Geometry, data: Dict[str, Any]) -> Form:
    """Rebuild a form on the named space of ``geometry``."""
    space = geometry.space(SpaceKind(data['space']))
    components = [(tuple(c['index']), field_from_dict(space.dim, c['terms'])) for c in data.get('components', [])]
    return Form.build(space, int(data['degree']), int(data.get('shift', 0)), components)


def generator_set_to_dict(generators) -> Dict[str, Any]:
    data = generators.to_dict()
    data['forms'] = [form_to_dict(f) for f in generators.forms]
    return data
