from __future__ import annotations

import itertools

import pytest

from origami_codes.codes import code_left, code_left_matrix
from origami_codes.errors import DisconnectedSurface
from origami_codes.farey import ROT, eval_word, farey_pairs, positive_word
from origami_codes.orbit import act_matrix, orbit_bfs_oracle, s_plus, stabilizes, veech_index
from origami_codes.perm import canonical_pair
from origami_codes.surface import Surface, eierlegende_wollmilchsau, enumerate_surfaces

from conftest import random_perm, random_surface

X3 = Surface.parse("(1,2);(1,3)")
X4 = Surface.parse("(2,3);(1,2,4)")
TORUS = Surface.parse("id;id")
E = eierlegende_wollmilchsau()


def _classes(states):
    return {st.surface_class for st in states}


def test_examples():
    assert len(s_plus(TORUS)) == 1 and veech_index(TORUS) == 1
    assert len(s_plus(E)) == 1 and len(orbit_bfs_oracle(E)) == 1 and veech_index(E) == 1
    assert orbit_bfs_oracle(TORUS) == {TORUS.canonical()}


def test_three_square_surface():
    a, b = s_plus(X3), orbit_bfs_oracle(X3)
    assert _classes(a) == b
    # regression: both enumerations agreed before this was recorded
    assert veech_index(X3) == 3


def test_disconnected_refused():
    Y = Surface.parse("(1,2);(1,2)", n=3)
    for f in (s_plus, orbit_bfs_oracle, veech_index):
        with pytest.raises(DisconnectedSurface):
            f(Y)


def test_dual_enumeration_small_degrees():
    for n in range(1, 6):
        for X in enumerate_surfaces(n):
            assert _classes(s_plus(X)) == orbit_bfs_oracle(X)


def test_dual_enumeration_sampled_large(rng):
    for n in (7, 8):
        for _ in range(4):
            X = random_surface(rng, n)
            assert _classes(s_plus(X)) == orbit_bfs_oracle(X)


def test_states_carry_their_matrix():
    for X in (X3, X4, E):
        for st in s_plus(X):
            A = st.representative_matrix
            assert A.is_positive()
            assert canonical_pair(*code_left_matrix(X, A)) == st.surface_class


def test_bfs_order_shortest_word_first():
    lengths = [len(positive_word(st.representative_matrix)) for st in s_plus(X4)]
    assert lengths == sorted(lengths)


def test_stratum_constant_on_orbit(rng):
    for X in [X3, X4] + [random_surface(rng, 6) for _ in range(6)]:
        for st in s_plus(X):
            assert st.surface().stratum() == X.stratum()


def test_orbit_invariant_under_relabeling(rng):
    for _ in range(10):
        X = random_surface(rng, 6)
        w = random_perm(rng, 6)
        assert _classes(s_plus(X)) == _classes(s_plus(X.relabel(w)))


def test_farey_pair_reading_gives_same_set(rng):
    """Surfaces built from left codes of Farey pairs give exactly S+."""
    for X in [X3, X4, E] + [random_surface(rng, 5) for _ in range(4)]:
        states = s_plus(X)
        bound = max(
            max(A.a11 + A.a12, A.a21 + A.a22) for A in (st.representative_matrix for st in states)
        )
        via_pairs = {
            canonical_pair(code_left(X, r1), code_left(X, r2)) for r1, r2 in farey_pairs(max(bound, 2))
        }
        assert via_pairs == _classes(states)


def test_action_is_a_group_action(rng):
    words = [w for k in range(4) for w in itertools.product("LRlr", repeat=k)]
    for _ in range(5):
        X = random_surface(rng, 5)
        for w1 in words[:12]:
            for w2 in words[-12:]:
                A, B = eval_word(list(w1)), eval_word(list(w2))
                lhs = act_matrix(A * B, X)
                rhs = act_matrix(A, act_matrix(B, X))
                assert lhs.canonical() == rhs.canonical()


def test_quarter_turn_is_rotation():
    for X in (X3, X4, E):
        for k in range(4):
            assert act_matrix(ROT**k, X).canonical() == X.rotate(k).canonical()


def test_stabilizer_sanity():
    # weak check: with index 1 every word fixes X; otherwise some but not all do
    words = [eval_word(list(w)) for k in range(7) for w in itertools.product("LR", repeat=k)]
    for X in (X3, X4, E):
        idx = veech_index(X)
        fixed = sum(stabilizes(X, A) for A in words)
        assert fixed >= 1
        assert (fixed == len(words)) == (idx == 1)
