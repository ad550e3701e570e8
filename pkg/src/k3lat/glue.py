"""Dual-coset counting, embedding feasibility, divisor multiplicities.

The central object is the table row of an orbit of a norm-2n vector v in
E8: for each pairing label k = (x, v) between 0 and n, the counts of
vectors a in the dual of U = v-perp whose class corresponds to k and whose
squared length (internal positive convention) lies in [0, 2). Every such a
is the projection a = x - ((x,v)/2n) v of a unique x in E8 with (x, v) = k,
so the row is computed by one short-vector enumeration in E8 bucketed by
(x, v); a rank-7 enumeration of the dual cosets of U serves as the
independent cross-check (`dual_coset_counts`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlinalg as la
from .e8 import OrbitClass
from .errors import IndefiniteLatticeError, NormOutOfRangeError, WrongSignatureError
from .lattice import E8, Lattice, determinant, discriminant_group, signature
from .shortvec import EnumQuery, root_count, short_vectors


@dataclass(frozen=True)
class EmbeddingReport:
    """Outcome of the primitive-embedding sufficiency test into II_{p,q}."""

    embeddable: bool
    rank: int
    min_generators: int
    signature: tuple[int, int]
    target_dim: int

    def __bool__(self) -> bool:
        return self.embeddable


def nikulin_embeddable(t: Lattice, target_dim: int = 28) -> EmbeddingReport:
    """Sufficient condition for a primitive embedding into II_{2,26}.

    True iff the signature is (2, q) with q <= target_dim - 2 and the
    minimum number of generators of T'/T plus rank(T) is less than
    target_dim. Raises WrongSignatureError unless the positive index is 2.
    """
    sig = signature(t)
    if sig[0] != 2:
        raise WrongSignatureError(f"expected signature (2, q), got {sig}")
    ell = discriminant_group(t).min_generators
    ok = sig[1] <= target_dim - 2 and t.rank + ell < target_dim
    return EmbeddingReport(ok, t.rank, ell, sig, target_dim)


@dataclass(frozen=True)
class CosetCountTable:
    """Counts of short dual-coset vectors for one orbit row.

    ``counts[k][nu]`` is the number of vectors a in the dual of U with
    label k and internal norm nu (0 <= nu < 2); ``column_totals[k]`` sums a
    column. Labels run over 0..n; other labels follow from the symmetry
    k -> -k -> 2n - k.
    """

    two_n: int
    orbit: OrbitClass
    root_count: int
    counts: dict[int, dict[Fraction, int]]
    column_totals: dict[int, int]


def coset_count_row(orbit: OrbitClass) -> CosetCountTable:
    """Build the table row of an orbit by bucketed E8 enumeration."""
    two_n = orbit.two_n
    n = two_n // 2
    v = list(orbit.representative)
    bound = Fraction(n, 2) + 2  # the k = n column needs (x,x) < n/2 + 2
    hist = short_vectors(EnumQuery(gram=E8.gram, bound=bound, exclusive=True,
                                   collect=True))
    counts: dict[int, dict[Fraction, int]] = {k: {} for k in range(n + 1)}
    for x in hist.vectors:
        k = E8.pairing(x, v)
        if not 0 <= k <= n:
            continue
        nu = Fraction(E8.norm(x)) - Fraction(k * k, two_n)
        if nu >= 2:
            continue
        assert nu >= 0
        bucket = counts[k]
        bucket[nu] = bucket.get(nu, 0) + 1
    totals = {k: sum(c.values()) for k, c in counts.items()}
    return CosetCountTable(two_n=two_n, orbit=orbit, root_count=orbit.root_count_u,
                           counts=counts, column_totals=totals)


def dual_coset_counts(orbit: OrbitClass, k: int) -> dict[Fraction, int]:
    """Independent rank-7 oracle for one column of a table row.

    Solves (x0, v) = k in E8, projects x0 into the span of U, and
    enumerates the coset a0 + U below internal norm 2. Returns the empty
    histogram when no E8 vector pairs to k (non-primitive v, odd k).
    """
    two_n = orbit.two_n
    v = list(orbit.representative)
    w = la.vec_mat(v, [list(r) for r in E8.gram])
    g = 0
    coeff = [0] * 8
    for i, wi in enumerate(w):
        g, a, b = la.xgcd(g, wi)
        coeff = [a * c for c in coeff]
        coeff[i] = b
    if k % g:
        return {}
    x0 = [(k // g) * c for c in coeff]
    a0 = [Fraction(xc) - Fraction(k, two_n) * vc for xc, vc in zip(x0, v)]
    u = orbit.complement
    basis = [list(row) for row in u.basis]
    rhs = la.vec_mat(la.vec_mat(a0, [list(r) for r in E8.gram]), la.transpose(basis))
    gu_inv = la.fraction_inverse([list(r) for r in u.gram])
    offset = la.vec_mat(rhs, gu_inv)
    hist = short_vectors(EnumQuery(gram=u.gram, bound=Fraction(2),
                                   offset=tuple(offset), exclusive=True))
    return dict(hist.counts)


def restricted_weight(u: Lattice) -> int:
    """Weight of the restricted form: 12 plus half the root count of U."""
    if u.rank > 26:
        raise ValueError("complement lattice cannot have rank above 26")
    roots = root_count(u)  # raises IndefiniteLatticeError when not definite
    assert roots % 2 == 0
    return 12 + roots // 2


@dataclass(frozen=True)
class DivisorCell:
    """One (k, norm) cell in the divisor range, negative sign convention."""

    k: int
    norm: Fraction  # in (-2, 0)
    count: int
    vanishing: bool


def divisor_classes(row: CosetCountTable) -> list[DivisorCell]:
    """All cells with norm strictly between -2 and 0 (negative convention).

    For each label k there is at most one admissible cell, since dual
    norms are even integers minus k^2/2n. Zero-count cells are reported
    with vanishing=False.
    """
    out = []
    for k in range(row.two_n // 2 + 1):
        shift = Fraction(k * k, row.two_n)
        lift = 2 * (shift // 2) + 2  # smallest even integer > shift, if any
        nu = lift - shift
        if nu >= 2:
            continue  # shift is an even integer: no cell in the open range
        count = row.counts.get(k, {}).get(nu, 0)
        out.append(DivisorCell(k=k, norm=-nu, count=count, vanishing=count > 0))
    return out


@dataclass(frozen=True)
class ScaleContribution:
    scale: int
    norm: Fraction  # norm of scale * t0, negative convention
    label: int
    count: int


@dataclass(frozen=True)
class DivisorReport:
    """Total vanishing order along the hyperplane of a primitive dual line.

    The line is given by its class data: label k0 and negative-convention
    norm nu0 of the primitive dual vector t0. Each integer scale c with
    c^2 nu0 >= -2 contributes the table count at (c*k0 reduced, 2 + c^2 nu0);
    the scale whose vector lands on an actual norm -2 lattice vector
    contributes via the label-0 zero-norm cell.
    """

    k0: int
    nu0: Fraction
    contributions: tuple[ScaleContribution, ...]
    total_multiplicity: int


def hyperplane_multiplicity(row: CosetCountTable, k0: int, nu0) -> DivisorReport:
    nu0 = Fraction(nu0)
    if nu0 >= 0:
        raise NormOutOfRangeError("the dual direction must have negative norm")
    if nu0 < -2:
        raise NormOutOfRangeError(
            "no divisor arises from a dual vector of norm below -2")
    two_n = row.two_n
    n = two_n // 2
    contribs = []
    total = 0
    c = 1
    while c * c * nu0 >= -2:
        scaled = c * c * nu0
        label = (c * k0) % two_n
        if label > n:
            label = two_n - label
        count = row.counts.get(label, {}).get(2 + scaled, 0)
        contribs.append(ScaleContribution(scale=c, norm=scaled, label=label,
                                          count=count))
        total += count
        c += 1
    return DivisorReport(k0=k0, nu0=nu0, contributions=tuple(contribs),
                         total_multiplicity=total)


def nikulin_minus2_property(s: Lattice) -> bool:
    """Even Lorentzian lattices whose dual short vectors all lie in the lattice.

    True for the even unimodular Lorentzian lattices inside II_{3,19}
    (signatures (1,1), (1,9), (1,17)) and for even lattices of determinant
    +-2 with rank congruent to 1 mod 8 (rank small enough to fit).
    """
    sig = signature(s)
    if sig[0] != 1:
        raise WrongSignatureError(f"expected Lorentzian signature (1, m), got {sig}")
    if not s.even:
        return False
    d = abs(determinant(s))
    if d == 1:
        return sig[1] in (1, 9, 17)
    if d == 2:
        return s.rank % 8 == 1 and s.rank <= 20
    return False
