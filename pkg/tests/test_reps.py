import itertools
import random

import numpy as np
import pytest

from lkrep.braids import BraidWord, Permutation, full_twist, include, parse_braid, random_word
from lkrep.laurent import ONE, Q, T, ZERO, LaurentPoly2
from lkrep.reps import (
    PairBasis,
    RepMatrix,
    alt_square,
    burau_gen,
    charpoly,
    exact_det,
    exact_identity,
    exact_inverse,
    lk_gen,
    lk_vs_sym2_burau,
    mu_factor,
    normalize_su,
    perm_rep,
    rep_of_word,
    rep_of_word_numeric,
    sym_square,
)

RNG_POINT = (complex(np.exp(0.31j)), complex(np.exp(1.7j)))


def word(n, *letters):
    return BraidWord(n, tuple((abs(l), 1 if l > 0 else -1) for l in letters))


def test_pair_basis_order_and_prefix():
    b = PairBasis(4)
    assert b.pairs == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
    for k in range(2, 5):
        prefix = b.pairs[: PairBasis.prefix_size(k)]
        assert all(j <= k for _, j in prefix)
    assert b.index(2, 4) == 4


def test_smallest_generators():
    assert burau_gen(2, 1).entries == ((-Q,),)
    assert lk_gen(2, 1).entries == ((-(T * Q * Q),),)


def test_burau_determinant_exact():
    for n in range(2, 7):
        for i in range(1, n):
            assert exact_det(burau_gen(n, i)) == -Q


def test_lk_determinant_exact():
    for n in (3, 4, 5):
        expected = -(T * ((-Q) ** n))
        for i in range(1, n):
            assert exact_det(lk_gen(n, i)) == expected


def test_generator_inverse_exact():
    for n in (2, 3, 4):
        for i in range(1, n):
            for gen in (lk_gen(n, i), burau_gen(n, i)):
                inv = exact_inverse(gen)
                assert (gen @ inv).entries == exact_identity(gen.dim, gen.basis).entries


def test_word_inverse_cancels():
    w = parse_braid("1 -1", 3)
    assert rep_of_word("lk", w) == exact_identity(3, PairBasis(3))


def test_yang_baxter_word_equality():
    assert rep_of_word("lk", word(3, 1, 2, 1)) == rep_of_word("lk", word(3, 2, 1, 2))


def test_identity_word():
    assert rep_of_word("lk", BraidWord(3)).entries == exact_identity(3, PairBasis(3)).entries


def test_numeric_matches_exact_evaluation():
    rng = random.Random(8)
    q, t = RNG_POINT
    for n in (3, 4):
        w = random_word(n, 7, rng)
        exact = rep_of_word("lk", w).evaluate(q, t).entries
        fast = rep_of_word_numeric("lk", w, q, t)
        assert np.max(np.abs(exact - fast)) < 1e-12


def test_sym_square_identity_and_diag():
    d = 3
    ident = exact_identity(d, "standard")
    assert sym_square(ident).entries == exact_identity(6, "sym2").entries
    diag = RepMatrix(
        tuple(
            tuple(LaurentPoly2.const(2 if i == 0 else 3) if i == j else ZERO for j in range(2))
            for i in range(2)
        ),
        "standard",
    )
    s = sym_square(diag)
    assert [s.entries[i][i] for i in range(3)] == [
        LaurentPoly2.const(4),
        LaurentPoly2.const(6),
        LaurentPoly2.const(9),
    ]


def test_sym_square_functorial():
    rng = random.Random(4)
    for _ in range(4):
        a = tuple(
            tuple(LaurentPoly2.const(rng.randint(-3, 3)) for _ in range(3)) for _ in range(3)
        )
        b = tuple(
            tuple(LaurentPoly2.const(rng.randint(-3, 3)) for _ in range(3)) for _ in range(3)
        )
        ma, mb = RepMatrix(a, "standard"), RepMatrix(b, "standard")
        assert sym_square(ma @ mb).entries == (sym_square(ma) @ sym_square(mb)).entries
        assert alt_square(ma @ mb).entries == (alt_square(ma) @ alt_square(mb)).entries


def test_alt_square_of_1x1_is_empty():
    m = alt_square(lk_gen(2, 1))
    assert m.dim == 0
    assert charpoly(m) == (ONE,)


def test_perm_rep_identity_and_trace_character():
    assert perm_rep(BraidWord(3)).entries == exact_identity(2, "standard").entries
    # brute force over S_3 and S_4: trace equals fixed points - 1
    for n in (3, 4):
        for images in itertools.permutations(range(1, n + 1)):
            p = Permutation(tuple(images))
            wrd = _word_for_permutation(p, n)
            mat = perm_rep(wrd)
            tr = sum((mat.entries[i][i].evaluate(1, 1) for i in range(n - 1)), 0j)
            assert abs(tr - (p.fixed_points() - 1)) < 1e-12


def _word_for_permutation(p: Permutation, n: int) -> BraidWord:
    # bubble-sort decomposition into adjacent transpositions
    images = list(p.images)
    letters = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                letters.append((i + 1, 1))
                changed = True
    letters.reverse()
    w = BraidWord(n, tuple(letters))
    assert permutation_of(w).images == p.images
    return w


from lkrep.braids import permutation_of  # noqa: E402  (used by the helper above)


def test_perm_rep_is_burau_at_q_one():
    # equal characteristic polynomials once q is specialized to 1
    rng = random.Random(11)
    for n in (3, 4, 5):
        for _ in range(3):
            w = random_word(n, 6, rng)
            cp_b = [c.evaluate(1, 1) for c in charpoly(rep_of_word("burau", w))]
            cp_p = [c.evaluate(1, 1) for c in charpoly(perm_rep(w))]
            assert np.allclose(cp_b, cp_p)


def test_block_structure_and_t_freeness():
    rng = random.Random(9)
    for n, k in ((4, 2), (4, 3), (5, 3)):
        w = random_word(k, 6, rng)
        big = rep_of_word("lk", include(w, n))
        pk = PairBasis.prefix_size(k)
        small = rep_of_word("lk", w)
        # top-left block equals the k-strand representation
        assert big.block(range(pk), range(pk)) == small.entries
        # lower-left block vanishes and the complement block is t-free
        for i in range(pk, big.dim):
            for j in range(pk):
                assert big.entries[i][j].is_zero
        for i in range(pk, big.dim):
            for j in range(pk, big.dim):
                assert big.entries[i][j].is_t_free


def test_burau_prefix_block():
    rng = random.Random(10)
    for n, k in ((4, 2), (5, 3)):
        w = random_word(k, 6, rng)
        big = rep_of_word("burau", include(w, n))
        small = rep_of_word("burau", w)
        assert big.block(range(k - 1), range(k - 1)) == small.entries
        for i in range(k - 1):
            for j in range(k - 1, n - 1):
                assert big.entries[i][j].is_zero


def test_full_twist_scalar_exact():
    for k in range(2, 7):
        tw = rep_of_word("lk", full_twist(k, k))
        scalar = tw.entries[0][0]
        assert scalar == (T * T) * (Q ** (2 * k))
        for i in range(tw.dim):
            for j in range(tw.dim):
                if i == j:
                    assert tw.entries[i][j] == scalar
                else:
                    assert tw.entries[i][j].is_zero


def test_normalize_su():
    q, t = RNG_POINT
    n = 4
    ident = np.eye(6, dtype=complex)
    assert np.allclose(normalize_su(ident, 0, n, q, t), ident)
    m = rep_of_word_numeric("lk", word(4, 1), q, t)
    normalized = normalize_su(m, 1, n, q, t)
    assert abs(np.linalg.det(normalized) - 1) < 1e-10
    mu = mu_factor(n, q, t)
    assert abs(mu ** (n * (n - 1) / 2) * (-t * (-q) ** n) - 1) < 1e-12


def test_lk_vs_sym2_burau():
    rng = random.Random(13)
    r2 = lk_vs_sym2_burau(2, word(2, 1))
    assert r2.charpoly_equal and r2.on_the_nose
    r3 = lk_vs_sym2_burau(3, word(3, 1))
    assert r3.charpoly_equal
    for n in (3, 4):
        w = random_word(n, 8, rng)
        rep = lk_vs_sym2_burau(n, w)
        assert rep.charpoly_equal
        # the two sides are only spectrally identified beyond n = 2
        if not rep.on_the_nose and rep.diagonal_rescaling is not None:
            d = rep.diagonal_rescaling
            assert len(d) == w.strands * (w.strands - 1) // 2


def test_rep_of_word_start_extension():
    a, b = word(4, 1, 2), word(4, 3, -1)
    whole = rep_of_word("lk", BraidWord(4, a.letters + b.letters))
    extended = rep_of_word("lk", b, start=rep_of_word("lk", a))
    assert whole == extended
