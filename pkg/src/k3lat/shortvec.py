"""Short-vector enumeration in positive definite lattices.

Branch and bound over an exact L D L^T decomposition of the Gram matrix,
recursing on the last coordinate outermost. The recursion runs in scaled
integer arithmetic: after multiplying through by a common denominator D,
the norm inequality becomes sum(dn_i * Z_i^2) <= bound * D^5 with every
quantity an integer, and coordinate intervals fall out of math.isqrt
exactly. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm

from . import intlinalg as la
from .errors import IndefiniteLatticeError, NotPositiveDefiniteError


def rational_cholesky(gram) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact G = L diag(d) L^T with L unit lower triangular.

    Returns (L, pivots). Raises NotPositiveDefiniteError as soon as a pivot
    fails to be positive, which doubles as the definiteness test.
    """
    if not la.is_symmetric(gram):
        raise ValueError("Gram matrix must be symmetric")
    n = len(gram)
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots: list[Fraction] = []
    for j in range(n):
        d = Fraction(gram[j][j]) - sum(lower[j][k] ** 2 * pivots[k] for k in range(j))
        if d <= 0:
            raise NotPositiveDefiniteError(f"pivot {j} is {d}, not positive")
        pivots.append(d)
        for i in range(j + 1, n):
            s = Fraction(gram[i][j]) - sum(
                lower[i][k] * lower[j][k] * pivots[k] for k in range(j))
            lower[i][j] = s / d
    return lower, pivots


@dataclass(frozen=True)
class EnumQuery:
    """What to enumerate: lattice points x with norm(x + offset) within bound.

    ``exclusive`` switches the bound comparison from <= to <; ``collect``
    additionally returns the vectors (count-only mode allocates none).
    """

    gram: tuple[tuple[int, ...], ...]
    bound: Fraction
    offset: tuple[Fraction, ...] | None = None
    exclusive: bool = False
    collect: bool = False


@dataclass
class NormHistogram:
    """Exact counts of enumerated vectors, keyed by rational norm."""

    counts: dict[Fraction, int] = field(default_factory=dict)
    vectors: list[tuple[int, ...]] | None = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def short_vectors(query: EnumQuery) -> NormHistogram:
    """Enumerate all x in Z^r with norm(x + offset) within the bound."""
    gram = [list(row) for row in query.gram]
    r = len(gram)
    bound = Fraction(query.bound)
    offset = [Fraction(c) for c in (query.offset or [0] * r)]
    if len(offset) != r:
        raise ValueError("offset length does not match the rank")
    hist = NormHistogram(vectors=[] if query.collect else None)
    if r == 0:
        if (bound > 0) or (bound == 0 and not query.exclusive):
            hist.counts[Fraction(0)] = 1
            if query.collect:
                hist.vectors.append(())
        return hist
    lower, pivots = rational_cholesky(gram)
    if bound < 0 or (query.exclusive and bound == 0):
        return hist

    # Common denominator for every rational in play.
    dens = [p.denominator for p in pivots] + [bound.denominator]
    dens += [c.denominator for c in offset]
    dens += [lower[j][i].denominator for i in range(r) for j in range(i + 1, r)]
    big_d = lcm(*dens)
    d2 = big_d * big_d
    dn = [int(p * big_d) for p in pivots]
    cn = [int(c * big_d) for c in offset]
    # ucol[i][k] scales the coefficient of y_i inside z_k, for k < i.
    ucol = [[int(lower[i][k] * big_d) for k in range(i)] for i in range(r)]
    bb = int(bound * big_d) * d2 * d2
    exclusive = query.exclusive
    collect = query.collect
    counts = hist.counts
    vectors = hist.vectors
    denom5 = big_d ** 5

    partial = [0] * r  # partial[k] = D^2 * sum_{j>k fixed} u_kj y_j
    x = [0] * r

    def descend(level: int, remaining: int, used: int):
        dni = dn[level]
        a = cn[level] * big_d + partial[level]
        w = isqrt(remaining * dni)
        step = dni * d2
        x_hi = (w - dni * a) // step
        x_lo = -((w + dni * a) // step)
        col = ucol[level]
        for xi in range(x_lo, x_hi + 1):
            zn = xi * d2 + a
            spent = dni * zn * zn
            yn = xi * big_d + cn[level]
            if level == 0:
                total_used = used + spent
                if exclusive and total_used == bb:
                    continue
                x[0] = xi
                key = Fraction(total_used, denom5)
                counts[key] = counts.get(key, 0) + 1
                if collect:
                    vectors.append(tuple(x))
            else:
                for k in range(level):
                    partial[k] += col[k] * yn
                x[level] = xi
                descend(level - 1, remaining - spent, used + spent)
                for k in range(level):
                    partial[k] -= col[k] * yn

    descend(r - 1, bb, 0)
    if collect:
        vectors.sort()
    return hist


def vector_count(gram, bound, offset=None, exclusive=False) -> int:
    """Total number of vectors within the bound (count-only convenience)."""
    q = EnumQuery(gram=tuple(tuple(row) for row in gram), bound=Fraction(bound),
                  offset=None if offset is None else tuple(Fraction(c) for c in offset),
                  exclusive=exclusive)
    return short_vectors(q).total


def root_count(lat) -> int:
    """Number of vectors of squared length 2 in a definite lattice.

    Negative definite input is flipped to the internal positive convention
    first, so this is the count of norm -2 vectors in the negative convention.
    """
    from . import lattice as lt

    pos, neg = lt.signature(lat)  # raises DegenerateLatticeError on det 0
    if neg == 0:
        gram = lat.gram
    elif pos == 0:
        gram = tuple(tuple(-x for x in row) for row in lat.gram)
    else:
        raise IndefiniteLatticeError(f"lattice of signature {(pos, neg)} is not definite")
    hist = short_vectors(EnumQuery(gram=gram, bound=Fraction(2)))
    return hist.counts.get(Fraction(2), 0)
