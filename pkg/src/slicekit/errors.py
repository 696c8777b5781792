"""Exception hierarchy shared by every slicekit module."""


class SlicekitError(Exception):
    """Base class for all errors raised by slicekit."""


class InvalidInput(SlicekitError, ValueError):
    """Malformed descriptor, literal, or argument."""


class UnknownGroup(InvalidInput):
    pass


class NotDominant(InvalidInput):
    pass


class NotInDominanceOrder(InvalidInput):
    pass


def _fmt(v):
    return "(" + ",".join(map(str, v)) + ")" if isinstance(v, (tuple, list)) else str(v)


class MuConditionFailed(SlicekitError):
    """Some positive root pairs with mu to a value <= -2."""

    def __init__(self, mu, root, value):
        self.mu, self.root, self.value = mu, root, value
        super().__init__(
            f"mu={_fmt(mu)} fails the mu-condition: root {_fmt(root)} pairs to {value}"
        )


class NotMinuscule(SlicekitError):
    pass


class MuNotInOrbit(SlicekitError):
    pass


class TupleNotFixedPoint(SlicekitError):
    pass


class MalformedSubset(InvalidInput):
    pass


class ZeroWeightTerm(SlicekitError):
    """A tangent direction has weight zero for the chosen cocharacter."""

    def __init__(self, hbar, weight):
        self.hbar, self.weight = hbar, weight
        super().__init__(
            f"term hbar^{hbar} e^{weight} has zero weight; fixed point not isolated"
        )
