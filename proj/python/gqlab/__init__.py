"""Generalized quadrangle verification toolkit."""

import json
from fractions import Fraction

from . import _core
from ._core import (  # noqa: F401
    FiniteGroup,
    GqlabError,
    KantorFamily,
    character_degrees,
    class_count,
    classical_wq_family,
    cyclic_group,
    derived_counts,
    elementary_abelian,
    heisenberg_group,
    lambda3,
    scan_names,
    suite_names,
    t2_oval_family,
)


def _frac(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def verify_kantor_axioms(family):
    return json.loads(_core.verify_kantor_axioms(family))


def verify_fourdim_algebra(family):
    return json.loads(_core.verify_fourdim_algebra(family))


def chi_multiplicities(family, which="S"):
    return [_frac(p) for p in _core.chi_multiplicities(family, which)]


def ott_gap_inner_product(s, u, gprime_order, m1_order):
    return _frac(_core.ott_gap_inner_product(s, u, gprime_order, m1_order))


def evaluate_expression(expr):
    return _frac(_core.evaluate_expression(expr))


def run_suite(name, family, seed=12345, jobs=1):
    return json.loads(_core.run_suite(name, family, seed, jobs))


def run_scan(name, max_e=None, max_q1=None):
    """Certificate text (canonical form) for a named scan."""
    return _core.run_scan(name, max_e, max_q1)


def verify_certificate(text):
    return _core.verify_certificate(text)


def family_from_json(text):
    return _core.family_from_json(text)
