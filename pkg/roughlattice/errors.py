"""Exception hierarchy shared by the library and the command line."""


class RoughLatticeError(Exception):
    """Base class for every error raised by roughlattice."""


class ConfigurationError(RoughLatticeError):
    pass


class UniverseMismatchError(RoughLatticeError, ValueError):
    def __init__(self, expected: int, got: int, what: str = "operand"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what} is sized for a universe of {got} elements, expected {expected}")


class NotAQuasiorderError(RoughLatticeError):
    def __init__(self, pair, reason: str):
        self.pair = pair
        self.reason = reason
        super().__init__(f"not a quasiorder: {reason} (pair {pair[0]},{pair[1]})")


class NotAnEquivalenceError(RoughLatticeError):
    pass


class NotAPartialOrderError(RoughLatticeError):
    pass


class EnumerationCapError(RoughLatticeError):
    def __init__(self, size: int, cap: int, what: str = "universe"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the enumeration cap {cap}")


class CofinalSplitError(RoughLatticeError):
    def __init__(self, element: int, reason: str):
        self.element = element
        super().__init__(f"cannot split at element {element}: {reason}")


class WitnessConstructionError(RoughLatticeError):
    """An internal invariant of a witness construction failed."""


class ComponentError(RoughLatticeError):
    pass


class TopologyKindError(RoughLatticeError):
    pass


class RelationParseError(RoughLatticeError):
    def __init__(self, message: str, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class UsageError(RoughLatticeError):
    """Command line options that do not fit together."""
