import os

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    pass


def budget() -> int:
    """Cap on partial states / elements an enumeration may visit.

    ``CSP_LAB_BUDGET`` overrides the default.
    """
    raw = os.environ.get("CSP_LAB_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        val = int(float(raw))
    except ValueError:
        raise ValueError(f"CSP_LAB_BUDGET must be a number, got {raw!r}") from None
    if val <= 0:
        raise ValueError("CSP_LAB_BUDGET must be positive")
    return val
