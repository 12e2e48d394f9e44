import random

import pytest

from rmgb.division import remainder
from rmgb.groebner import (
    buchberger_complete,
    check_basis,
    ideal_member,
    is_groebner,
    is_reduced,
    reduce_basis,
    s_polynomial,
)
from rmgb.polyring import GRLEX, LEX, Poly, parse_poly
from rmgb.rmcode import CodeParams, groebner_basis, product_generator, square_relations


def G32():
    return list(groebner_basis(CodeParams(3, 2)))


def test_s_polynomial_of_generator_pair():
    g12, g13, _ = G32()
    s = s_polynomial(g12, g13, GRLEX)
    assert s == parse_poly("x1*x2 + x1*x3 + x2 + x3", 3)
    # against a Groebner basis the S-remainder must vanish
    assert not remainder(s, G32(), GRLEX)


def test_s_polynomial_self_is_zero():
    g = parse_poly("x1*x2 + x1 + 1", 2)
    assert not s_polynomial(g, g)


def test_s_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        s_polynomial(Poly.zero(2), parse_poly("x1", 2))


def test_generator_family_is_reduced_groebner():
    report = check_basis(G32(), GRLEX)
    assert report.is_groebner
    assert report.is_reduced
    assert report.failing_pair is None


def test_square_relations_are_groebner():
    for m in (1, 2, 3):
        report = check_basis(square_relations(m), GRLEX)
        assert report.is_groebner and report.is_reduced


def test_union_basis_is_groebner():
    combined = G32() + list(square_relations(3))
    report = check_basis(combined, GRLEX)
    assert report.is_groebner
    assert report.is_reduced


def test_non_groebner_pair_reported():
    basis = [parse_poly("x1", 2), parse_poly("x1 + x2", 2)]
    report = check_basis(basis, GRLEX)
    assert not report.is_groebner
    assert not report.is_reduced
    i, j, rem = report.failing_pair
    assert (i, j) == (0, 1)
    assert rem == parse_poly("x2", 2)


def test_is_reduced_negative():
    assert not is_reduced([parse_poly("x1", 2), parse_poly("x1*x2", 2)])
    assert is_reduced([parse_poly("x1", 2), parse_poly("x2", 2)])


def test_buchberger_completion_frozen():
    f1 = parse_poly("x1*x2 + x2", 2)
    f2 = parse_poly("x2^2 + 1", 2)
    completed = buchberger_complete([f1, f2], GRLEX)
    assert completed == (f1, f2, parse_poly("x1 + 1", 2))
    assert is_groebner(completed, GRLEX)
    # idempotence: completing a Groebner basis adds nothing
    assert buchberger_complete(completed, GRLEX) == completed
    assert buchberger_complete(G32(), GRLEX) == tuple(G32())


def test_reduce_basis_of_completion():
    completed = buchberger_complete(
        [parse_poly("x1*x2 + x2", 2), parse_poly("x2^2 + 1", 2)], GRLEX
    )
    reduced = reduce_basis(completed, GRLEX)
    assert reduced == (parse_poly("x2^2 + 1", 2), parse_poly("x1 + 1", 2))
    assert is_reduced(reduced, GRLEX)


def test_reduce_basis_drops_redundant_generator():
    g12, g13, g23 = G32()
    padded = [g12 + g13, g12, g13, g23]
    assert is_groebner(padded, GRLEX)
    assert reduce_basis(padded, GRLEX) == tuple(G32())


def test_ideal_membership():
    basis = G32()
    assert ideal_member(Poly.zero(3), basis)
    assert ideal_member(basis[0] * parse_poly("x3 + 1", 3), basis)
    # the full product of the three (x_i + 1) lies in every lower radical power
    assert ideal_member(product_generator(3, {1, 2, 3}), basis)
    assert not ideal_member(parse_poly("x3", 3), basis)
    assert not ideal_member(Poly.one(3), basis)


@pytest.mark.parametrize("order", [LEX, GRLEX])
def test_remainder_permutation_invariance(order):
    rng = random.Random(55)
    basis = G32()
    for _ in range(100):
        f = Poly(3, [tuple(rng.randint(0, 1) for _ in range(3))
                     for _ in range(rng.randint(0, 6))])
        shuffled = basis[:]
        rng.shuffle(shuffled)
        assert remainder(f, shuffled, order) == remainder(f, basis, order)


def test_generator_family_is_groebner_under_lex_too():
    for m, l in [(2, 1), (2, 2), (3, 2), (3, 3)]:
        basis = groebner_basis(CodeParams(m, l))
        report = check_basis(basis, LEX)
        assert report.is_groebner and report.is_reduced


def test_completion_divergence_guard():
    with pytest.raises(RuntimeError):
        buchberger_complete(
            [parse_poly("x1*x2 + x2", 2), parse_poly("x2^2 + 1", 2)],
            GRLEX,
            max_additions=0,
        )
