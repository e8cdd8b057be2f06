from ..errors import OutOfRangeError
from ..utils import check_int


class ChainSpec:
    """A chain of g elliptic curves, generic except on the special
    components, where P - Q is torsion of the given order.

    Parameters:
        g (int): The number of elliptic components.
        special (dict): Map from component index (1..g) to torsion order (>= 2).
    """

    def __init__(self, g, special=None):
        self._g = check_int(g, "g", 0)
        orders = {}
        for component, order in dict(special or {}).items():
            component = check_int(component, "component")
            order = check_int(order, "torsion order")
            if not 1 <= component <= self._g:
                raise OutOfRangeError(
                    f"Special component {component} is not in 1..{self._g}."
                )
            if order < 2:
                raise OutOfRangeError(
                    f"Torsion order of component {component} must be >= 2, got {order}."
                )
            orders[component] = order
        self._special = dict(sorted(orders.items()))

    def __repr__(self):
        return f"ChainSpec(g={self._g}, special={self._special})"

    def __eq__(self, other):
        if not isinstance(other, ChainSpec):
            return NotImplemented
        return self._g == other._g and self._special == other._special

    def __hash__(self):
        return hash((self._g, tuple(self._special.items())))

    @property
    def g(self):
        """The number of components."""
        return self._g

    @property
    def special(self):
        """A copy of the map from special component to torsion order."""
        return dict(self._special)

    def torsion(self, component):
        """The torsion order at the given component, or None if generic."""
        return self._special.get(component, None)
