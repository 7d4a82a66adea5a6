"""Enumeration budget plumbing.

Brute-force counters refuse candidate spaces larger than their budget; the
VINBUN_BUDGET environment variable overrides the per-module defaults.
"""

import os

POINT_COUNT_BUDGET = 10**9  # candidate assignments for local-model fibers
HOM_ENUM_BUDGET = 10**8  # q^dim for bundle Hom-space sweeps


class BudgetExceededError(RuntimeError):
    """Candidate space larger than the enumeration budget."""


def effective_budget(default):
    env = os.environ.get("VINBUN_BUDGET")
    return int(env) if env else default


def check_budget(space, default, what):
    limit = effective_budget(default)
    if space > limit:
        raise BudgetExceededError(
            f"{what}: {space} candidates exceed the budget {limit}"
        )
