"""Superclasses and supercharacters of normal pattern subgroups of U_n(F_p)."""

import json

from ._patternsc import (
    NotAPoset,
    NotNormal,
    Poset,
    branch_poset,
    catalan,
    commutator_poset,
    count_representative_search,
    dyck_index_poset,
    empty_poset,
    enumerate_normal,
    from_covers,
    full_poset,
    t_family,
)
from . import _patternsc

__all__ = [
    "NotAPoset",
    "NotNormal",
    "Poset",
    "branch_poset",
    "catalan",
    "character_table",
    "commutator_poset",
    "count_representative_search",
    "dyck_index_poset",
    "empty_poset",
    "enumerate_normal",
    "from_covers",
    "full_poset",
    "superclasses",
    "supercharacters",
    "t_family",
    "verify",
]


def superclasses(poset, p, jobs=1):
    """Superclass indices of U_P as dicts (lambda, x, representative, size)."""
    return json.loads(_patternsc._superclasses_json(poset, p, jobs))


def supercharacters(poset, p, jobs=1):
    """Supercharacter indices of U_P with degree, norm and representative poset."""
    return json.loads(_patternsc._supercharacters_json(poset, p, jobs))


def character_table(poset, p, cap=1 << 20):
    """Exact supercharacter table from brute-force orbits; cells are strings in z = exp(2 pi i / p)."""
    return json.loads(_patternsc._character_table_json(poset, p, cap))


def verify(poset, p, axioms=True):
    return json.loads(_patternsc._verify_json(poset, p, axioms))
