import random
from fractions import Fraction

import pytest

from k3lat import intlinalg as la
from k3lat import lattice as lt
from k3lat import sbad
from k3lat.e8 import orbits_of_norm
from k3lat.errors import DegenerateExtensionError, DegenerateLatticeError, GramFileError
from k3lat.glue import coset_count_row


def test_witness_examples():
    kummer = sbad.ExtensionWitness(s=lt.rank1(8), pairings=(4,), d_norm=0)
    assert kummer.det_s1 == -16
    assert sbad.is_sbad_extension(kummer)  # 16 <= 2 * 8

    ortho_root = sbad.ExtensionWitness(s=lt.rank1(8), pairings=(0,), d_norm=-2)
    assert abs(ortho_root.det_s1) == 2 * abs(ortho_root.det_s)
    assert sbad.is_sbad_extension(ortho_root)

    too_big = sbad.ExtensionWitness(s=lt.rank1(2), pairings=(0,), d_norm=-6)
    assert too_big.det_s1 == -12
    assert not sbad.is_sbad_extension(too_big)


def test_witness_error_paths():
    with pytest.raises(DegenerateLatticeError):
        sbad.is_sbad_extension(
            sbad.ExtensionWitness(s=lt.from_gram([[0]]), pairings=(1,), d_norm=0))
    with pytest.raises(DegenerateExtensionError):
        sbad.is_sbad_extension(
            sbad.ExtensionWitness(s=lt.rank1(2), pairings=(0,), d_norm=0))
    wrong_sig = sbad.ExtensionWitness(s=lt.rank1(8), pairings=(0,), d_norm=2)
    assert not sbad.is_sbad_extension(wrong_sig)  # S1 is (2, 0), not Lorentzian


def test_bordered_determinant_identity():
    rng = random.Random(13)
    built = 0
    while built < 12:
        rank = rng.randint(1, 4)
        g = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            for j in range(i + 1):
                g[i][j] = g[j][i] = rng.randint(-4, 4)
        lat = lt.from_gram(g)
        det = lt.determinant(lat)
        if det == 0:
            continue
        d_norm = rng.choice([-6, -4, -2, 2, 4])
        w = sbad.ExtensionWitness(s=lat, pairings=(0,) * rank, d_norm=d_norm)
        assert w.det_s1 == det * d_norm
        built += 1


def test_witness_invariant_under_basis_change():
    rng = random.Random(17)
    s = lt.from_gram([[8, 4], [4, 0]])
    pairings = (4, 2)
    d_norm = 0
    w = sbad.ExtensionWitness(s=s, pairings=pairings, d_norm=d_norm)
    try:
        base = sbad.is_sbad_extension(w)
    except DegenerateExtensionError:
        base = "degenerate"
    for _ in range(10):
        u = la.identity(2)
        for _ in range(4):
            i, j = rng.sample(range(2), 2)
            c = rng.randint(-2, 2)
            for col in range(2):
                u[i][col] += c * u[j][col]
        new_gram = la.mat_mul(la.mat_mul(u, [list(r) for r in s.gram]),
                              la.transpose(u))
        new_pairings = tuple(la.vec_mat(list(pairings), la.transpose(u)))
        w2 = sbad.ExtensionWitness(s=lt.from_gram(new_gram),
                                   pairings=new_pairings, d_norm=d_norm)
        try:
            got = sbad.is_sbad_extension(w2)
        except DegenerateExtensionError:
            got = "degenerate"
        assert got == base


def test_polarized_bad_examples():
    assert sbad.polarized_bad(1, -2, 0)
    assert sbad.polarized_bad(4, 0, 4)
    assert not sbad.polarized_bad(2, 2, 1)


def test_polarized_shift_invariance():
    for n in (1, 2, 3, 5, 7):
        for k in range(-5, 6):
            for d in range(-8, 9, 2):
                base = sbad.polarized_bad(n, d, k)
                for m in range(-3, 4):
                    shifted = sbad.polarized_bad(n, d + 2 * k * m + 2 * n * m * m,
                                                 k + 2 * n * m)
                    assert shifted == base


def test_normalize_degree():
    assert sbad.normalize_degree(3, 7) == 1
    assert sbad.normalize_degree(3, -1) == 1
    assert sbad.normalize_degree(5, 5) == 5
    assert sbad.normalize_degree(4, 8) == 0
    for n in (1, 2, 3, 5):
        for k in range(-3 * n, 3 * n + 1):
            r = sbad.normalize_degree(n, k)
            assert 0 <= r <= n
            assert (k - r) % (2 * n) == 0 or (k + r) % (2 * n) == 0


def test_possible_extension_norms_examples():
    assert sbad.possible_extension_norms(4, 1) == [0]
    assert sbad.possible_extension_norms(2, 0) == [-2]
    assert sbad.possible_extension_norms(12, 5) == [2]
    assert sbad.possible_extension_norms(8, 4) == [0]


def test_possible_extension_norms_match_table_cells():
    # every nonzero cell's divisor norm nu_int - 2 must equal d - k^2/2n
    for two_n in range(2, 16, 2):
        for orbit in orbits_of_norm(two_n):
            row = coset_count_row(orbit)
            for k, cells in row.counts.items():
                for nu_int, count in cells.items():
                    if count == 0 or nu_int == 0:
                        continue
                    (d,) = sbad.possible_extension_norms(two_n, k)
                    assert Fraction(d) - Fraction(k * k, two_n) == nu_int - 2


def test_bounded_search_finds_the_orthogonal_root():
    found = sbad.search_sbad_extensions(lt.rank1(2), 1, [-2, 0])
    assert any(w.pairings == (0,) and w.d_norm == -2 for w in found)
    for w in found:
        assert sbad.is_sbad_extension(w)


def test_witness_file(tmp_path):
    path = tmp_path / "w.gram"
    path.write_text("1\n8\n4 0\n")
    w = sbad.read_witness_file(path)
    assert w.s.gram == ((8,),)
    assert w.pairings == (4,) and w.d_norm == 0
    assert sbad.is_sbad_extension(w)

    bad = tmp_path / "bad.gram"
    bad.write_text("1\n8\n4\n")
    with pytest.raises(GramFileError):
        sbad.read_witness_file(bad)
