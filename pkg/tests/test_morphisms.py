from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from indecomp import CapacityError, PreconditionError
from indecomp.core import delete, dual, induced, is_indecomposable, members, relabel
from indecomp.families import c3, corpus, d4, f_n, gen, order, paley7, t4, t_odd, u_odd, w_odd
from indecomp.morphisms import (
    MAX_CANONICAL_ORDER,
    _masks_of_size,
    are_isomorphic,
    canonical_form,
    canonical_tournament,
    copies,
    embeds,
    is_isomorphism,
)

from conftest import random_tournament, tournaments
from oracles import brute_canonical, brute_embeds, brute_isomorphic, triangle


def _piecewise(removed, pieces):
    """Map ``k`` to ``k - shift`` for the first piece ``(lo, hi, shift)`` containing it."""
    f = {}
    for lo, hi, shift in pieces:
        for k in range(lo, hi + 1):
            if k not in removed:
                f[k] = k - shift
    return f


def _is_iso_of_deletion(big, removed, small, f):
    keep = [v for v in range(big.n) if v not in removed]
    assert sorted(f) == keep and sorted(f.values()) == list(range(small.n))
    return all(big.beats(a, b) == small.beats(f[a], f[b]) for a in keep for b in keep if a != b)


class TestCanonical:
    def test_c3_self_dual(self):
        assert canonical_form(c3()) == canonical_form(dual(c3()))

    def test_four_vertex_classes_distinct(self):
        codes = {canonical_form(T).code for T in (order(4), t4(), d4(), dual(d4()))}
        assert len(codes) == 4

    def test_u5_relabel_invariant(self):
        U = u_odd(2)
        code = canonical_form(U).code
        rng = random.Random(5)
        for _ in range(30):
            perm = list(range(5))
            rng.shuffle(perm)
            assert canonical_form(relabel(U, perm)).code == code

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_permutation_oracle(self, n):
        rng = random.Random(100 + n)
        for _ in range(12 if n <= 6 else 3):
            T = random_tournament(n, rng)
            assert canonical_form(T).code == brute_canonical(T)

    def test_canonical_tournament_spells_its_code(self):
        rng = random.Random(7)
        for n in range(2, 11):
            T = random_tournament(n, rng)
            C = canonical_tournament(T)
            assert triangle(C) == canonical_form(T).code
            assert are_isomorphic(T, C) is not None

    def test_capacity(self):
        canonical_form(f_n(MAX_CANONICAL_ORDER))
        with pytest.raises(CapacityError):
            canonical_form(f_n(MAX_CANONICAL_ORDER + 1))

    @given(tournaments(max_n=8), tournaments(max_n=8))
    def test_iso_iff_equal_codes(self, A, B):
        same = canonical_form(A) == canonical_form(B)
        assert (are_isomorphic(A, B) is not None) == same

    @given(tournaments(max_n=8), st.data())
    def test_relabeled_copies_share_code(self, T, data):
        perm = data.draw(st.permutations(range(T.n)))
        R = relabel(T, perm)
        assert canonical_form(R).code == canonical_form(T).code
        f = are_isomorphic(T, R)
        assert f is not None and is_isomorphism(T, R, f)


class TestIsomorphism:
    def test_oracle_agreement(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 6)
            A, B = random_tournament(n, rng), random_tournament(n, rng)
            assert (are_isomorphic(A, B) is not None) == brute_isomorphic(A, B)

    def test_order_mismatch(self):
        assert are_isomorphic(c3(), order(4)) is None

    @pytest.mark.parametrize("n", range(2, 6))
    def test_rotation_is_automorphism_of_t(self, n):
        T = t_odd(n)
        m = 2 * n + 1
        rotation = [(i + 1) % m for i in range(m)]
        assert is_isomorphism(T, T, rotation)
        assert relabel(T, rotation) == T

    def test_w7_deletion_map(self):
        # X = {4, 5}: k stays below 4 and drops by two above 5.
        f = _piecewise({4, 5}, [(0, 3, 0), (6, 6, 2)])
        assert _is_iso_of_deletion(w_odd(3), {4, 5}, w_odd(2), f)

    def test_u7_deletion_map(self):
        # X = {i, n+i} with n = 3, i = 1.
        f = _piecewise({1, 4}, [(0, 0, 0), (2, 3, 1), (5, 6, 2)])
        assert _is_iso_of_deletion(u_odd(3), {1, 4}, u_odd(2), f)

    @pytest.mark.parametrize("n", range(3, 6))
    def test_all_deletion_maps(self, n):
        top = 2 * n
        for i in range(top - 1):
            f = _piecewise({i, i + 1}, [(0, i - 1, 0), (i + 2, top, 2)])
            assert _is_iso_of_deletion(w_odd(n), {i, i + 1}, w_odd(n - 1), f)
        f = _piecewise({0, n + 1}, [(1, n, 1), (n + 2, top, 2)])
        assert _is_iso_of_deletion(t_odd(n), {0, n + 1}, t_odd(n - 1), f)
        for i in range(1, n + 1):
            f = _piecewise({i, n + i}, [(0, i - 1, 0), (i + 1, i + n - 1, 1), (i + n + 1, top, 2)])
            assert _is_iso_of_deletion(u_odd(n), {i, n + i}, u_odd(n - 1), f)
            f = _piecewise({i - 1, n + i}, [(0, i - 2, 0), (i, i + n - 1, 1), (i + n + 1, top, 2)])
            assert _is_iso_of_deletion(u_odd(n), {i - 1, n + i}, u_odd(n - 1), f)

    def test_is_isomorphism_rejects(self):
        assert not is_isomorphism(c3(), c3(), [0, 0, 1])
        assert not is_isomorphism(order(3), order(3), [2, 1, 0])


class TestEmbeds:
    def test_w5_not_in_t9(self):
        assert embeds(w_odd(2), t_odd(4)) is None

    def test_d4_not_in_t7(self):
        assert embeds(d4(), t_odd(3)) is None

    def test_paley_omits_t5_but_holds_u5(self):
        assert embeds(t_odd(2), paley7()) is None
        assert not brute_embeds(t_odd(2), paley7())
        f = embeds(u_odd(2), paley7())
        assert f is not None
        assert is_isomorphism(u_odd(2), induced(paley7(), sorted(f.values())), [sorted(f.values()).index(f[i]) for i in range(5)])

    def test_least_witness(self):
        f = embeds(order(3), order(6))
        assert f == {0: 0, 1: 1, 2: 2}

    def test_too_big(self):
        with pytest.raises(PreconditionError):
            embeds(order(5), order(4))

    def test_copies(self):
        assert list(copies(c3(), order(5))) == []
        assert len(list(copies(order(2), order(4)))) == 6

    def test_masks_of_size(self):
        for n in range(0, 8):
            for k in range(0, n + 1):
                got = list(_masks_of_size(n, k))
                assert got == sorted(sum(1 << v for v in c) for c in combinations(range(n), k))

    @given(tournaments(max_n=4), tournaments(min_n=4, max_n=6))
    def test_matches_oracle(self, H, T):
        f = embeds(H, T)
        assert (f is not None) == brute_embeds(H, T)
        if f is not None:
            assert all(H.beats(i, j) == T.beats(f[i], f[j]) for i in range(H.n) for j in range(H.n) if i != j)

    @given(tournaments(max_n=5), tournaments(min_n=5, max_n=7))
    def test_dual_invariance(self, H, T):
        assert (embeds(H, T) is None) == (embeds(dual(H), dual(T)) is None)

    def test_reflexive_and_transitive_on_corpus(self):
        kinds = corpus(11, 3)
        members_ = [gen(k) for k in kinds]
        inside = {
            (a, b): embeds(A, B) is not None
            for a, A in enumerate(members_)
            for b, B in enumerate(members_)
            if A.n <= B.n
        }
        for a in range(len(members_)):
            assert inside[a, a]
        for (a, b), ab in inside.items():
            if not ab:
                continue
            for c in range(len(members_)):
                if inside.get((b, c)):
                    assert inside[a, c]


@pytest.mark.parametrize("n", range(3, 6))
@pytest.mark.parametrize("build", [t_odd, u_odd, w_odd], ids=["T", "U", "W"])
def test_indecomposable_subtournaments_keep_type(build, n):
    D = build(n)
    for size in range(5, D.n + 1):
        for mask in _masks_of_size(D.n, size):
            sub = induced(D, mask)
            if not is_indecomposable(sub):
                continue
            assert size % 2 == 1, members(mask)
            assert are_isomorphic(sub, build((size - 1) // 2)) is not None
