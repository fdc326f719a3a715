"""Enumeration budgets.

Every exhaustive loop in the package (vectors of a module, subspaces of an
ambient space) is guarded by an explicit budget.  Exceeding the budget raises
:class:`~modcode.errors.EnumerationBudgetError`; nothing is ever silently
truncated.  The environment variable ``MODCODE_BUDGET`` overrides both
defaults with a single integer.
"""

from __future__ import annotations

import os

from .errors import EnumerationBudgetError

DEFAULT_SUBSPACE_BUDGET = 10**6
DEFAULT_VECTOR_BUDGET = 10**7


def _env_override() -> int | None:
    raw = os.environ.get("MODCODE_BUDGET")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise EnumerationBudgetError(f"MODCODE_BUDGET is not an integer: {raw!r}") from exc
    if value <= 0:
        raise EnumerationBudgetError(f"MODCODE_BUDGET must be positive: {value}")
    return value


def subspace_budget() -> int:
    return _env_override() or DEFAULT_SUBSPACE_BUDGET


def vector_budget() -> int:
    return _env_override() or DEFAULT_VECTOR_BUDGET


def check_subspaces(count: int, what: str = "subspace enumeration") -> None:
    limit = subspace_budget()
    if count > limit:
        raise EnumerationBudgetError(f"{what} needs {count} subspaces, budget is {limit}")


def check_vectors(count: int, what: str = "vector enumeration") -> None:
    limit = vector_budget()
    if count > limit:
        raise EnumerationBudgetError(f"{what} needs {count} vectors, budget is {limit}")
