import pytest

from distspec import graph as gr
from distspec.exact import inertia
from distspec.graph6 import encode_graph6
from distspec.paley import (
    NotPaleyError,
    is_irreducible,
    is_square,
    make_field,
    paley,
    paley_graph,
    prime_power,
)
from distspec.srg import conference_params, detect_srg

PALEY_ORDERS = [5, 9, 13, 17, 25, 29, 37, 41, 49]


def test_prime_field():
    f = make_field(13, 1)
    assert f.q == 13 and f.modulus == (0, 1)
    assert f.mul(5, 8) == 40 % 13
    assert all(f.mul(a, f.inverse(a)) == 1 for a in range(1, 13))


def test_f9_modulus():
    f = make_field(3, 2)
    assert f.modulus == (1, 0, 1)  # x^2 + 1
    assert all((x * x + 1) % 3 for x in range(3))


def test_f4_modulus():
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        make_field(9, 1)
    with pytest.raises(ValueError):
        make_field(3, 2, modulus=(2, 0, 1))  # x^2 + 2 = (x-1)(x+1)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (3, 3), (5, 2), (7, 2), (2, 4)])
def test_field_axioms(p, k):
    f = make_field(p, k)
    q = f.q
    els = range(q)
    for a in els:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inverse(a)) == 1
    # distributivity and associativity on a sample
    for a in range(0, q, max(1, q // 7)):
        for b in range(0, q, max(1, q // 5)):
            for c in range(0, q, max(1, q // 3)):
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    # multiplicative group is cyclic of order q - 1
    orders = []
    for g in range(1, q):
        x, e = g, 1
        while x != 1:
            x, e = f.mul(x, g), e + 1
        orders.append(e)
    assert max(orders) == q - 1


def test_irreducibility():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)  # (x+1)^2
    assert is_irreducible((1, 1, 0, 1), 2)
    assert not is_irreducible((1, 0, 0, 0, 1), 2)


def test_squares_mod_13():
    f = make_field(13)
    assert {a for a in range(1, 13) if is_square(f, a)} == {1, 3, 4, 9, 10, 12}
    assert not is_square(f, 2)
    with pytest.raises(ValueError):
        is_square(f, 0)


def test_minus_one_square_in_f9():
    f = make_field(3, 2)
    assert is_square(f, f.neg(1))


@pytest.mark.parametrize("p,k", [(3, 2), (5, 1), (7, 2), (13, 1), (5, 2)])
def test_euler_matches_squaring(p, k):
    f = make_field(p, k)
    squares = {f.mul(a, a) for a in range(1, f.q)}
    assert {a for a in range(1, f.q) if f.is_square(a)} == squares
    assert len(squares) == (f.q - 1) // 2


def test_even_field_has_no_paley_structure():
    with pytest.raises(NotPaleyError):
        make_field(2, 2).is_square(1)
    with pytest.raises(NotPaleyError):
        paley(8)
    with pytest.raises(NotPaleyError):
        paley(7)
    with pytest.raises(NotPaleyError):
        paley(15)


def test_paley5_is_c5():
    assert paley(5) == gr.cycle(5)


def test_paley9():
    g = paley(9)
    assert detect_srg(g).as_tuple() == (9, 4, 1, 2)
    assert gr.is_self_complementary(g)


def test_paley13_optimistic():
    g = paley(13)
    assert detect_srg(g).as_tuple() == (13, 6, 2, 3)
    assert inertia(gr.distance_matrix(g)).as_tuple() == (7, 0, 6)


@pytest.mark.parametrize("q", PALEY_ORDERS)
def test_paley_conference_parameters(q):
    assert detect_srg(paley(q)) == conference_params(q)


@pytest.mark.parametrize("q", [q for q in PALEY_ORDERS if q <= 29])
def test_paley_symmetric_structure(q):
    g = paley(q)
    assert gr.is_self_complementary(g)
    assert gr.is_vertex_transitive(g)


def test_paley_independent_of_modulus():
    a = paley_graph(make_field(3, 2))
    others = [paley_graph(make_field(3, 2, modulus=m)) for m in [(2, 1, 1), (2, 2, 1)]]
    for b in others:
        assert gr.are_isomorphic(a, b) is not None


def test_paley_output_is_reproducible():
    assert encode_graph6(paley(25)) == encode_graph6(paley(25))
    assert prime_power(49) == (7, 2)
