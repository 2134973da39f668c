from enum import Enum
from fractions import Fraction


class Strategy(str, Enum):
    RANDOM = "random"
    WEIGHTED = "weighted"


def weight(event, prev, rel, fired, alpha, beta):
    """
    (alpha*x + beta*(1-x)) / (N_e + 1), x = 1 when `event` depends on the
    previously selected event. Exact when alpha and beta are Fractions.
    """
    x = 1 if prev is not None and rel.depends(prev, event) else 0
    return (alpha * x + beta * (1 - x)) / Fraction(fired[event] + 1)


def select_event(strategy, available, prev, rel, fired, alpha, beta, rng):
    """GetEvent: uniform over the available events, or over the heaviest ones."""
    candidates = sorted(available)
    if not candidates:
        raise ValueError("no available event to select")
    if Strategy(strategy) is Strategy.WEIGHTED:
        weights = {e: weight(e, prev, rel, fired, alpha, beta) for e in candidates}
        best = max(weights.values())
        candidates = [e for e in candidates if weights[e] == best]
    return candidates[int(rng.integers(len(candidates)))]
