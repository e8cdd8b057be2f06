from dataclasses import dataclass

from ..errors import OutOfRangeError
from ..utils import check_int


@dataclass(frozen=True)
class Rectangle:
    """The shape of a filling: alpha columns, beta rows, indices 1..g.

    Parameters:
        alpha (int): The number of columns (at least 1).
        beta (int): The number of rows (may be 0 for an empty strip).
        g (int): The size of the index universe.
    """

    alpha: int
    beta: int
    g: int

    def __post_init__(self):
        check_int(self.alpha, "alpha", 1)
        check_int(self.beta, "beta", 0)
        check_int(self.g, "g", 0)

    @property
    def cells(self):
        """The number of boxes in the rectangle."""
        return self.alpha * self.beta


class BnParams:
    """Brill-Noether parameters of a g^r_d on a curve of genus g.

    The rectangle associated with the parameters has alpha = r+1 columns
    and beta = g-d+r rows. Use ``BnParams.normalized()`` to get the
    orientation with alpha <= beta, which is the one the constructions
    and certificates work with.

    Parameters:
        g (int): The genus, at least 2.
        r (int): The dimension of the series, at least 1.
        d (int): The degree, at least 1.
        dualized (bool): Whether these parameters were obtained by replacing
            the given ones with their Serre dual. Not part of the identity
            of the object.
    """

    def __init__(self, g, r, d, *, dualized=False):
        self._g = check_int(g, "g", 2)
        self._r = check_int(r, "r", 1)
        self._d = check_int(d, "d", 1)
        self._dualized = bool(dualized)
        if self.beta < 1:
            raise OutOfRangeError(
                f"g-d+r must be at least 1, got {self.beta} for {self.triple}."
            )

    @classmethod
    def normalized(cls, g, r, d):
        """Get parameters in the orientation alpha <= beta, replacing
        the given triple by its Serre dual when needed.
        """
        p = cls(g, r, d)
        if p.alpha > p.beta:
            q = serre_dual(p)
            return cls(q.g, q.r, q.d, dualized=True)
        return p

    def __repr__(self):
        flag = ", dualized=True" if self._dualized else ""
        return f"BnParams(g={self._g}, r={self._r}, d={self._d}{flag})"

    def __eq__(self, other):
        if not isinstance(other, BnParams):
            return NotImplemented
        return self.triple == other.triple

    def __hash__(self):
        return hash(self.triple)

    @property
    def g(self):
        """The genus."""
        return self._g

    @property
    def r(self):
        """The dimension of the linear series."""
        return self._r

    @property
    def d(self):
        """The degree of the linear series."""
        return self._d

    @property
    def dualized(self):
        """Whether these params replaced their Serre dual at construction."""
        return self._dualized

    @property
    def triple(self):
        """The tuple (g, r, d)."""
        return (self._g, self._r, self._d)

    @property
    def alpha(self):
        """The number of columns of the rectangle, r+1."""
        return self._r + 1

    @property
    def beta(self):
        """The number of rows of the rectangle, g-d+r."""
        return self._g - self._d + self._r

    @property
    def e(self):
        """The expected codimension -rho, or 0 when rho >= 0."""
        return max(0, -rho(self))

    @property
    def is_canonical(self):
        """Whether alpha <= beta."""
        return self.alpha <= self.beta

    def rectangle(self):
        """Get the Rectangle that fillings for these parameters live in."""
        return Rectangle(self.alpha, self.beta, self._g)


def rho(p):
    """The Brill-Noether number g - (r+1)(g-d+r)."""
    if not isinstance(p, BnParams):
        raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    return p.g - p.alpha * p.beta


def serre_dual(p):
    """The Serre dual parameters (g, g-d+r-1, 2g-2-d).

    This is an involution that preserves rho. The result is not
    re-oriented, so ``serre_dual(serre_dual(p)) == p`` holds literally.
    """
    if not isinstance(p, BnParams):
        raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    r2 = p.g - p.d + p.r - 1
    d2 = 2 * p.g - 2 - p.d
    if r2 < 1:
        raise OutOfRangeError(
            f"Serre dual of {p.triple} has dimension g-d+r-1 = {r2} < 1."
        )
    if d2 < 1:
        raise OutOfRangeError(f"Serre dual of {p.triple} has degree 2g-2-d = {d2} < 1.")
    return BnParams(p.g, r2, d2)
