"""Python front end for the pgca library.

Data goes in and out as plain dicts and lists in the same JSON shapes the
command line tool reads and writes. Scalars are strings such as "1/2+3*i".
"""

import json

from . import _pgca
from ._pgca import PgcaError, Scalar, bracket

__all__ = [
    "PgcaError",
    "Scalar",
    "bracket",
    "commands",
    "psi14_witness",
    "run_campaign",
    "singular_vector_search",
    "solve_twist",
    "straighten",
    "whittaker_act",
]


def commands():
    return list(_pgca.commands())


def run_campaign(command, config=None, seed=None):
    """Returns (passed, report, lines)."""
    passed, report, lines = _pgca.run_campaign(command, json.dumps(config or {}), seed)
    return passed, json.loads(report), list(lines)


def straighten(word):
    return json.loads(_pgca.straighten(word))


def whittaker_act(datum, generator, vector):
    return json.loads(_pgca.whittaker_act(json.dumps(datum), generator, json.dumps(vector)))


def singular_vector_search(datum, weight_bound):
    return json.loads(_pgca.singular_vector_search(json.dumps(datum), weight_bound))


def solve_twist(datum):
    return json.loads(_pgca.solve_twist(json.dumps(datum)))


def psi14_witness(alpha="1", beta="1"):
    return json.loads(_pgca.psi14_witness(str(alpha), str(beta)))
