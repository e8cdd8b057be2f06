from dataclasses import dataclass

from ..core import BnParams
from ..errors import OutOfRangeError
from ..tableau import ChainSpec
from ..utils import check_int, readonly_int_array


GENERIC = "generic"
SPECIAL = "special"


@dataclass(frozen=True)
class LineBundleDescriptor:
    """The line bundle of a limit series on one elliptic component.

    A generic bundle is a general point of the Picard variety of the given
    degree. A special bundle is O(aP + bQ) with a + b equal to the degree.
    Use ``LineBundleDescriptor.generic()`` and ``.special()`` to create one.
    """

    kind: str
    degree: int
    a: int = None
    b: int = None

    def __post_init__(self):
        check_int(self.degree, "degree", 0)
        if self.kind == GENERIC:
            if self.a is not None or self.b is not None:
                raise ValueError("A generic bundle has no (a, b) data.")
        elif self.kind == SPECIAL:
            a = check_int(self.a, "a", 0)
            b = check_int(self.b, "b", 0)
            if a + b != self.degree:
                raise OutOfRangeError(
                    f"Special bundle O({a}P + {b}Q) must have a + b = {self.degree}."
                )
        else:
            raise ValueError(f"Bundle kind must be '{GENERIC}' or '{SPECIAL}'.")

    @classmethod
    def generic(cls, degree):
        return cls(GENERIC, degree)

    @classmethod
    def special(cls, a, b):
        return cls(SPECIAL, a + b, a, b)

    @property
    def is_special(self):
        return self.kind == SPECIAL

    def equivalent(self, a, b, torsion=None):
        """Whether this bundle is O(aP + bQ) on a component where P - Q has
        the given torsion order (None for a generic component).
        """
        if not self.is_special or a + b != self.degree:
            return False
        if a == self.a:
            return True
        return torsion is not None and (a - self.a) % torsion == 0

    def __str__(self):
        if self.is_special:
            return f"O({self.a}P+{self.b}Q)"
        return f"generic({self.degree})"


class LimitSeriesTable:
    """The vanishing data of a refined limit g^r_d on a chain of g
    elliptic curves.

    Row i-1 of ``u`` holds the vanishing orders of the r+1 sections at
    the left node P_i of component i, and row i-1 of ``v`` those at the
    right node Q_i. Slot j of a row corresponds to column j+1 of a
    filling. Only the shapes are checked here; see ``validate_series()``.

    Parameters:
        p (BnParams): The parameters of the series.
        chain (ChainSpec): The chain the series lives on.
        u (array-like): A g x (r+1) table of vanishing orders at the P_i.
        v (array-like): A g x (r+1) table of vanishing orders at the Q_i.
        bundles (sequence): g LineBundleDescriptor objects.
    """

    def __init__(self, p, chain, u, v, bundles):
        if not isinstance(p, BnParams):
            raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
        if not isinstance(chain, ChainSpec):
            raise TypeError(f"Expected ChainSpec, got {type(chain).__name__}.")
        if chain.g != p.g:
            raise ValueError(f"Chain has {chain.g} components, expected {p.g}.")
        self._p = p
        self._chain = chain
        self._u = readonly_int_array(u, 2)
        self._v = readonly_int_array(v, 2)
        for name, table in (("u", self._u), ("v", self._v)):
            if table.shape != (p.g, p.r + 1):
                raise ValueError(
                    f"Table {name} must have shape {(p.g, p.r + 1)}, got {table.shape}."
                )
        self._bundles = tuple(bundles)
        if len(self._bundles) != p.g:
            raise ValueError(f"Expected {p.g} bundles, got {len(self._bundles)}.")
        for bundle in self._bundles:
            if not isinstance(bundle, LineBundleDescriptor):
                raise TypeError(
                    f"Expected LineBundleDescriptor, got {type(bundle).__name__}."
                )

    def __repr__(self):
        return f"<LimitSeriesTable g={self._p.g} r={self._p.r} d={self._p.d}>"

    def __eq__(self, other):
        if not isinstance(other, LimitSeriesTable):
            return NotImplemented
        return (
            self._p == other._p
            and self._chain == other._chain
            and (self._u == other._u).all()
            and (self._v == other._v).all()
            and self._bundles == other._bundles
        )

    @property
    def p(self):
        return self._p

    @property
    def chain(self):
        return self._chain

    @property
    def u(self):
        """The read-only g x (r+1) table of vanishing orders at the P_i."""
        return self._u

    @property
    def v(self):
        """The read-only g x (r+1) table of vanishing orders at the Q_i."""
        return self._v

    @property
    def bundles(self):
        return self._bundles

    def vanishing(self, component):
        """The (u, v) rows of the given component (1-based) as tuples."""
        if not 1 <= component <= self._p.g:
            raise IndexError(f"Component {component} is not in 1..{self._p.g}.")
        i = component - 1
        return (
            tuple(int(x) for x in self._u[i]),
            tuple(int(x) for x in self._v[i]),
        )

    def bundle(self, component):
        """The LineBundleDescriptor of the given component (1-based)."""
        if not 1 <= component <= self._p.g:
            raise IndexError(f"Component {component} is not in 1..{self._p.g}.")
        return self._bundles[component - 1]
