"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed serialized input.  ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class GraphError(ValueError):
    """Input describes something that is not a simple graph (loops, parallel edges, bad labels)."""


class BudgetExceeded(RuntimeError):
    """An exact search ran past its budget.  Never raised in place of a wrong answer."""

    def __init__(self, message, used=None, best=None):
        super().__init__(message)
        self.used = used
        self.best = best


class HypothesisViolation(ValueError):
    """A configuration handed to a lemma checker fails one of the lemma's hypotheses."""

    def __init__(self, bullet, message):
        super().__init__(f"hypothesis {bullet} violated: {message}")
        self.bullet = bullet
