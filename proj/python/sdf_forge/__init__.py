"""Square-difference-free sets: construction, verification, search and colorings."""

import json

from . import _core
from ._core import (
    CapacityError,
    bertrand_prime,
    check_sdf,
    check_sdf_mod,
    cover_size_bound,
    exponent,
    is_squarefree,
    lift,
    paper_base,
    rank_moduli,
    squares_mod,
)

__all__ = [
    "CapacityError",
    "bertrand_prime",
    "bertrand_set",
    "check_sdf",
    "check_sdf_mod",
    "cover_size_bound",
    "exact_mis",
    "exponent",
    "fc_bound",
    "greedy_cover",
    "is_squarefree",
    "iterate",
    "lift",
    "paper_base",
    "rank_moduli",
    "recheck",
    "squares_mod",
]


def bertrand_set(n):
    return json.loads(_core.bertrand_set(n))


def iterate(m, base, k, threads=1):
    return json.loads(_core.iterate(m, list(base), k, threads))


def recheck(certificate, threads=1):
    """Re-verify a certificate dict; returns the violating pair or None."""
    return _core.recheck(json.dumps(certificate, separators=(",", ":")), threads)


def exact_mis(m, budget=10_000_000):
    return json.loads(_core.exact_mis(m, budget))


def greedy_cover(n, elements):
    return json.loads(_core.greedy_cover(n, list(elements)))


def fc_bound(c, threads=1):
    return json.loads(_core.fc_bound(c, threads))
