"""Exception hierarchy shared by all dichroma modules."""


class DichromaError(Exception):
    """Base class for every error raised by this package."""


class GraphError(DichromaError, ValueError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class DuplicateArcError(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate arc ({u}, {v})")
        self.arc = (u, v)


class VertexOutOfRangeError(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} outside 1..{n}")
        self.vertex = v


class PartialColoringError(DichromaError, ValueError):
    pass


class FormatError(DichromaError, ValueError):
    """Malformed .dg / .col / solution file."""


class ExprSyntaxError(DichromaError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EqualLabelsError(DichromaError, ValueError):
    def __init__(self, op, a):
        super().__init__(f"{op} requires two distinct labels, got ({a}, {a})")


class DuplicateVertexNameError(DichromaError, ValueError):
    def __init__(self, name):
        super().__init__(f"vertex name {name!r} used more than once")
        self.name = name


class LabelOutOfRangeError(DichromaError, ValueError):
    def __init__(self, label, k):
        super().__init__(f"label {label} outside 1..{k}")


class DUnionArcDirectionError(DichromaError, ValueError):
    def __init__(self, u, v):
        super().__init__(f"dunion arc {u}>{v} must go from the left operand to the right one")


class SignatureCapExceeded(DichromaError, RuntimeError):
    def __init__(self, size, cap):
        super().__init__(f"signature set grew to {size} entries, cap is {cap}")
        self.size = size
        self.cap = cap


class NotACactusError(DichromaError, ValueError):
    pass


class ExceededError(DichromaError, RuntimeError):
    """No acyclic coloring with at most ``max_r`` colors exists."""


class CycleCountCapExceeded(DichromaError, RuntimeError):
    pass


class InfeasibleOrPartialSolution(DichromaError, ValueError):
    pass


class InvalidColoringError(DichromaError, ValueError):
    pass
