class HyperError(ValueError):
    """Base class for every error raised by this package."""


class ZeroOrder(HyperError):
    def __init__(self):
        super().__init__("order must be at least 1")


class EmptyCell(HyperError):
    def __init__(self, x, y):
        self.x, self.y = x, y
        super().__init__(f"EmptyCell({x},{y}): cell {x} o {y} is empty")


class OutOfRange(HyperError):
    def __init__(self, x, y, e):
        self.x, self.y, self.e = x, y, e
        where = f"cell {x} o {y}" if x is not None else "operand"
        super().__init__(f"OutOfRange({x},{y},{e}): element {e!r} in {where} is out of range")


class EmptyOperand(HyperError):
    def __init__(self):
        super().__init__("operands of the subset product must be nonempty")


class NotAssociative(HyperError):
    def __init__(self):
        super().__init__("this operation is only defined on hypersemigroups")


class LengthMismatch(HyperError):
    def __init__(self, got, want):
        super().__init__(f"fuzzy subset has {got} grades, structure has order {want}")


class InternalInconsistency(HyperError):
    pass


class OrderTooLarge(HyperError):
    def __init__(self, order, limit):
        super().__init__(f"order {order} exceeds the limit {limit} for this mode")


class OrderMismatch(HyperError):
    def __init__(self, a, b):
        super().__init__(f"orders differ: {a} != {b}")


class UnknownTheorem(HyperError):
    def __init__(self, name):
        super().__init__(f"unknown theorem id {name!r}")


class UnknownPredicate(HyperError):
    def __init__(self, name):
        super().__init__(f"unknown predicate {name!r}")


class ParseError(HyperError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
