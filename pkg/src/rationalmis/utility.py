"""Local payoff evaluation over committed outputs.

The payoff cases are evaluated in priority order; exactly one fires:

1. the node or some neighbor aborted (bot)            -> 0
2. the node output 0 and some neighbor output 1       -> 0
3. the node output 1 and no neighbor output 1 or bot  -> v_i
4. anything else (locally invalid)                    -> negative infinity

Negative infinity is a distinct symbolic value, never a float: statistics
must count it explicitly, never average it.
"""

from __future__ import annotations

from .engine_types import ONE, ZERO, BOT


class _NegativeInfinity:
    """Singleton sentinel strictly below every finite utility."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "NEG_INF"

    def __reduce__(self):
        return (_NegativeInfinity, ())


NEG_INF = _NegativeInfinity()


def is_neg_inf(u) -> bool:
    return u is NEG_INF


class ContractViolation(RuntimeError):
    """A terminated run presented a missing output to the evaluator."""


def evaluate_node(out_i, neighbor_outs, v_i: float):
    """Payoff for one node given its own and its neighbors' final outputs."""
    if out_i is None or any(o is None for o in neighbor_outs):
        raise ContractViolation("missing output on a terminated run")
    if out_i == BOT or BOT in neighbor_outs:
        return 0.0
    if out_i == ZERO and ONE in neighbor_outs:
        return 0.0
    if out_i == ONE and ONE not in neighbor_outs:
        # BOT among neighbors was excluded by the first case
        return v_i
    return NEG_INF


def evaluate_all(g, outputs: dict, v: dict) -> dict:
    """Pointwise payoff over all nodes of a terminated run."""
    return {
        i: evaluate_node(outputs.get(i), [outputs.get(j) for j in g.adjacency[i]], v[i])
        for i in range(g.n)
    }
