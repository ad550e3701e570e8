"""Rank-one extension tests for Picard lattices of polarized K3 surfaces.

A witness extension borders the Gram matrix of a Lorentzian lattice S by
one extra class D (its pairings with the S-basis and its self-intersection)
and asks whether the extension keeps signature (1, m+1) with determinant at
most twice that of S. The polarized variants work with the projected norm
d - k^2/2n alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import intlinalg as la
from .errors import DegenerateExtensionError, DegenerateLatticeError, GramFileError
from .lattice import Lattice, determinant, from_gram, signature


@dataclass(frozen=True)
class ExtensionWitness:
    """S plus one bordering class: pairings with the S-basis and a self-norm."""

    s: Lattice
    pairings: tuple[int, ...]
    d_norm: int

    def __post_init__(self):
        if len(self.pairings) != self.s.rank:
            raise ValueError("need one pairing per basis vector of S")

    @property
    def extended_gram(self) -> list[list[int]]:
        g = [list(row) + [p] for row, p in zip(self.s.gram, self.pairings)]
        g.append(list(self.pairings) + [self.d_norm])
        return g

    @property
    def det_s(self) -> int:
        return determinant(self.s)

    @property
    def det_s1(self) -> int:
        return la.bareiss_determinant(self.extended_gram)


def is_sbad_extension(w: ExtensionWitness) -> bool:
    """True iff the bordered lattice S1 has signature (1, rank S) and
    |det S1| <= 2 |det S|.

    A degenerate S1 (det 0) is reported via DegenerateExtensionError rather
    than as False: an isotropic bordering is not a lattice extension.
    """
    det_s = w.det_s
    if det_s == 0:
        raise DegenerateLatticeError("S must be nondegenerate")
    det_s1 = w.det_s1
    if det_s1 == 0:
        raise DegenerateExtensionError("bordered lattice is degenerate")
    if abs(det_s1) > 2 * abs(det_s):
        return False
    return signature(from_gram(w.extended_gram)) == (1, w.s.rank)


def search_sbad_extensions(s: Lattice, max_pairing: int, d_norms) -> list[ExtensionWitness]:
    """Bounded witness scan: all pairing vectors with entries in
    [-max_pairing, max_pairing] and self-norms from d_norms.

    Degenerate borderings are skipped. The unbounded existence question is
    not decided here.
    """
    found = []
    span = range(-max_pairing, max_pairing + 1)
    for d in d_norms:
        for pairings in product(span, repeat=s.rank):
            w = ExtensionWitness(s=s, pairings=tuple(pairings), d_norm=int(d))
            try:
                if is_sbad_extension(w):
                    found.append(w)
            except DegenerateExtensionError:
                continue
    return found


def polarized_bad(n: int, d_norm: int, k: int) -> bool:
    """Degree-k class test for a degree-2n polarization:
    -2 <= d_norm - k^2/2n < 0, compared exactly."""
    if n <= 0:
        raise ValueError("polarization degree must be positive")
    projected = Fraction(d_norm) - Fraction(k * k, 2 * n)
    return -2 <= projected < 0


def normalize_degree(n: int, k: int) -> int:
    """Reduce a degree k to the fundamental range [0, n].

    k is first reduced mod 2n into (-n, n], then the sign is dropped.
    Adding multiples of the polarization to the class shifts k by 2n and
    d_norm by 2*k*m + 2n*m^2, leaving d_norm - k^2/2n unchanged, so the
    polarized test only depends on this normalized value.
    """
    if n <= 0:
        raise ValueError("polarization degree must be positive")
    r = k % (2 * n)
    if r > n:
        r -= 2 * n
    return abs(r)


def possible_extension_norms(two_n: int, k: int) -> list[int]:
    """Even self-norms d with -2 <= d - k^2/two_n < 0.

    A half-open window of length 2 contains exactly one even integer, so
    the result is always a singleton list.
    """
    if two_n <= 0 or two_n % 2:
        raise ValueError("two_n must be a positive even integer")
    upper = Fraction(k * k, two_n)
    d = -2 * ((2 - upper) // 2)  # smallest even integer >= upper - 2
    assert upper - 2 <= d < upper
    return [int(d)]


def read_witness_file(path) -> ExtensionWitness:
    """Witness file: Gram-file format for S plus one bordering row of
    rank+1 integers (pairings with the basis, then the self-norm)."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if not lines:
        raise GramFileError(f"{path}: empty witness file")
    try:
        rank = int(lines[0].split()[0])
    except ValueError:
        raise GramFileError(f"{path}: first line must be the rank of S") from None
    if len(lines) != rank + 2:
        raise GramFileError(
            f"{path}: expected rank line, {rank} Gram rows and one bordering row")
    rows = []
    for ln in lines[1:]:
        try:
            rows.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise GramFileError(f"{path}: non-integer entry") from None
    if any(len(r) != rank for r in rows[:-1]):
        raise GramFileError(f"{path}: Gram rows must have {rank} entries")
    if len(rows[-1]) != rank + 1:
        raise GramFileError(f"{path}: bordering row must have {rank + 1} entries")
    if not la.is_symmetric(rows[:-1]):
        raise GramFileError(f"{path}: Gram matrix of S is not symmetric")
    return ExtensionWitness(s=from_gram(rows[:-1]),
                            pairings=tuple(rows[-1][:-1]), d_norm=rows[-1][-1])
