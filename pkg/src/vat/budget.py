"""Node/time caps for the backtracking searches."""

import time
from contextlib import contextmanager

from .errors import BudgetExceeded

DEFAULT_NODE_BUDGET = 10**8

_defaults = {"max_nodes": DEFAULT_NODE_BUDGET, "deadline": None}


class Budget:
    """Counts search nodes and raises BudgetExceeded once a cap is passed.

    A single Budget may be shared by several searches so that a whole
    command runs under one cap.
    """

    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, max_nodes=None, seconds=None, deadline=None):
        self.max_nodes = _defaults["max_nodes"] if max_nodes is None else max_nodes
        if seconds is not None:
            deadline = time.monotonic() + seconds
        self.deadline = _defaults["deadline"] if deadline is None else deadline
        self.nodes = 0

    def tick(self, k=1):
        self.nodes += k
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exhausted")
        if self.deadline is not None and (self.nodes & 0x3FFF) == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time budget exhausted")


def configure(max_nodes=DEFAULT_NODE_BUDGET, seconds=None):
    """Set the caps used by searches that are not handed an explicit Budget."""
    _defaults["max_nodes"] = max_nodes
    _defaults["deadline"] = None if seconds is None else time.monotonic() + seconds


@contextmanager
def configured(max_nodes=DEFAULT_NODE_BUDGET, seconds=None):
    """Apply ``configure`` for the duration of a block, then restore the previous caps."""
    saved = dict(_defaults)
    configure(max_nodes, seconds)
    try:
        yield
    finally:
        _defaults.update(saved)


def ensure(budget):
    return Budget() if budget is None else budget
