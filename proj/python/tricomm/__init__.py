"""Extended coroot diagrams, center quotients and moduli of commuting triples.

Thin wrapper over the compiled core: each function returns plain Python
data decoded from the same JSON documents the command-line tool writes.
"""

import json

from . import _core

__all__ = [
    "SpecError",
    "schema_version",
    "datum",
    "quotient",
    "components",
    "rank_zero",
    "render",
    "paper_tables",
    "check_all",
]

SpecError = _core.SpecError
schema_version = _core.schema_version


def datum(group):
    return json.loads(_core.datum(group))


def quotient(group, center="trivial"):
    return json.loads(_core.quotient(group, center))


def components(group, center="trivial"):
    return json.loads(_core.components(group, center))


def rank_zero(k, central=False, max_rank=12):
    return [tuple(e) for e in json.loads(_core.rank_zero(k, central, max_rank))]


def render(group, center="trivial"):
    return _core.render(group, center)


def paper_tables(max_rank=12):
    return json.loads(_core.paper_tables(max_rank))


def check_all(max_rank=12):
    return json.loads(_core.check_all(max_rank))
