import itertools
import random

import pytest

from yangian2.current import (ClassicalElement, CurrentAlgebra, classical_suite,
                              cpack, invariants_dimension, s_adjoint,
                              s_multiply_words, s_supermonomials_of_degree)
from yangian2.linalg import BitEchelon


@pytest.fixture(scope="module")
def cl():
    return CurrentAlgebra(1, 1, 3)


@pytest.fixture(scope="module")
def cl21():
    return CurrentAlgebra(2, 1, 3)


def test_bracket_examples(cl):
    x = cl.bracket(cl.gen(1, 2, 1), cl.gen(2, 1, 1))
    assert x == cl.gen(1, 1, 2) + cl.gen(2, 2, 2)
    assert not cl.bracket(cl.gen(1, 1, 0), cl.gen(2, 2, 0))
    # t-degree overflow truncates to zero
    assert not cl.bracket(cl.gen(1, 2, 2), cl.gen(2, 1, 1))


def test_bracket_bilinear(cl):
    a, b, c = cl.gen(1, 2, 0), cl.gen(2, 1, 1), cl.gen(1, 1, 0)
    assert cl.bracket(a + b, c) == cl.bracket(a, c) + cl.bracket(b, c)


def test_jacobi_and_alternating_exhaustive(cl):
    gens = [ClassicalElement(cl, frozenset({(g,)})) for g in cl.generators()]
    for x in gens:
        assert not cl.bracket(x, x)
    for a, b, c in itertools.product(gens, repeat=3):
        total = (cl.bracket(cl.bracket(a, b), c)
                 + cl.bracket(cl.bracket(b, c), a)
                 + cl.bracket(cl.bracket(c, a), b))
        assert not total


def test_p_map_examples(cl):
    assert not cl.p_map(cl.gen(1, 2, 1))
    assert cl.p_map(cl.gen(1, 1, 1)) == cl.gen(1, 1, 2)
    mixed = cl.gen(1, 2, 1) + cl.gen(2, 1, 1)
    assert cl.p_map(mixed) == cl.bracket(cl.gen(1, 2, 1), cl.gen(2, 1, 1))


def test_p_map_truncates(cl):
    assert not cl.p_map(cl.gen(1, 1, 2))  # exponent 4 leaves the truncation


def test_p_map_polarisation(cl):
    rng = random.Random(1)
    gens = cl.generators()
    for _ in range(50):
        x = cl.normal_form([(g,) for g in gens if rng.random() < 0.4])
        y = cl.normal_form([(g,) for g in gens if rng.random() < 0.4])
        lhs = cl.p_map(x + y) + cl.p_map(x) + cl.p_map(y)
        assert lhs == cl.bracket(x, y)


def test_quadratic_q(cl):
    assert not cl.quadratic_q(cl.gen(1, 2, 1))
    with pytest.raises(ValueError):
        cl.quadratic_q(cl.gen(1, 1, 0))
    rng = random.Random(2)
    odd = [g for g in cl.generators() if cl.gen_parity(g)]
    for _ in range(50):
        y1 = cl.normal_form([(g,) for g in odd if rng.random() < 0.5])
        y2 = cl.normal_form([(g,) for g in odd if rng.random() < 0.5])
        assert (cl.quadratic_q(y1 + y2) + cl.quadratic_q(y1)
                + cl.quadratic_q(y2)) == cl.bracket(y1, y2)
        x = cl.normal_form([(g,) for g in cl.generators() if rng.random() < 0.5])
        assert cl.bracket(cl.quadratic_q(y1), x) == \
            cl.bracket(y1, cl.bracket(y1, x))


def test_normal_form_examples(cl):
    got = cl.multiply(cl.gen(2, 2, 0), cl.gen(1, 1, 0))
    assert got == cl.normal_form([((1, 1, 0), (2, 2, 0))])
    # odd square vanishes in the super enveloping algebra
    assert not cl.multiply(cl.gen(1, 2, 1), cl.gen(1, 2, 1))
    got2 = cl.multiply(cl.gen(2, 1, 0), cl.gen(1, 2, 0))
    expected = cl.normal_form([((1, 2, 0), (2, 1, 0))]) \
        + cl.gen(1, 1, 0) + cl.gen(2, 2, 0)
    assert got2 == expected


def test_normal_form_strategy_and_idempotence(cl):
    words = [((2, 1, 0), (1, 2, 0), (1, 1, 0)),
             ((2, 2, 1), (1, 2, 0), (2, 1, 1))]
    x = cl.normal_form(words)
    assert cl.normal_form(list(x.words)) == x


def test_z_elements(cl):
    z0 = cl.z_element(0)
    assert z0 == cl.gen(1, 1, 0) + cl.gen(2, 2, 0)
    gens = [ClassicalElement(cl, frozenset({(g,)})) for g in cl.generators()]
    for r in range(cl.trunc):
        z = cl.z_element(r)
        for g in gens:
            assert not cl.commutator(z, g)
    with pytest.raises(ValueError):
        cl.z_element(3)


def test_classical_p_center(cl):
    entries = cl.classical_p_center()
    labels = {(p["i"], p["j"], p["r"]) for p, _ in entries}
    # only even-parity positions appear, with doubled exponent in range
    assert (1, 2, 0) not in labels
    assert (1, 1, 0) in labels and (2, 2, 1) in labels
    gens = [ClassicalElement(cl, frozenset({(g,)})) for g in cl.generators()]
    for params, xi in entries:
        for g in gens:
            assert not cl.commutator(xi, g)


def test_xi_diagonal_value(cl):
    xi = cl.xi(1, 1, 1)
    g = cl.gen(1, 1, 1)
    assert xi == cl.multiply(g, g) + cl.gen(1, 1, 2)


def test_supermonomial_count_matches_oracle(cl):
    # degree-graded count over 12 generators: evens free, odds exponent <= 1
    monos = cl.supermonomials(3)
    by_len = {}
    for w in monos:
        by_len[len(w)] = by_len.get(len(w), 0) + 1
    # independent count: multisets of generators with odd multiplicity <= 1
    import math
    evens = sum(1 for g in cl.generators() if not cl.gen_parity(g))
    odds = len(cl.generators()) - evens
    def count(length):
        total = 0
        for k_odd in range(min(length, odds) + 1):
            total += math.comb(odds, k_odd) * math.comb(
                evens + (length - k_odd) - 1, length - k_odd)
        return total
    for length in range(4):
        assert by_len[length] == count(length)


def test_pbw_rank_exhaustive(cl):
    """Every word of length <= 3 reduces into the supermonomial span."""
    gens = cl.generators()
    supers = cl.supermonomials(3)
    index = {w: k for k, w in enumerate(supers)}
    ech = BitEchelon()
    words = [()]
    for length in range(1, 4):
        words.extend(itertools.product(gens, repeat=length))
    for w in words:
        vec = 0
        for nf_word in cl._nf_word(tuple(w)):
            vec |= 1 << index[nf_word]
        ech.add(vec)
    assert ech.rank == len(supers)


def test_s_layer(cl):
    odd = next(g for g in cl.generators() if cl.gen_parity(g))
    even = next(g for g in cl.generators() if not cl.gen_parity(g))
    assert s_multiply_words(cl, (odd,), (odd,)) is None
    assert s_multiply_words(cl, (even,), (even,)) == (even, even)
    mono = tuple(sorted((even, odd)))
    image = s_adjoint(cl, cpack(1, 2, 0), mono)
    assert isinstance(image, frozenset)


def test_invariants_dimension_degree0_and_1(cl):
    rep0 = invariants_dimension(cl, 0)
    dims0 = next(c for c in rep0.checks if c.check_id == "dimensions")
    assert dims0.params["invariant_dim"] == 1
    assert dims0.params["generated_dim"] == 1
    rep1 = invariants_dimension(cl, 1)
    dims1 = next(c for c in rep1.checks if c.check_id == "dimensions")
    assert dims1.params["invariant_dim"] == cl.trunc
    assert dims1.params["generated_dim"] == cl.trunc
    assert dims1.params["equal"]


def test_invariants_dimension_reports_both_sides():
    cl2 = CurrentAlgebra(1, 1, 2)
    rep = invariants_dimension(cl2, 2)
    assert rep.ok
    dims = next(c for c in rep.checks if c.check_id == "dimensions")
    assert dims.params["generated_dim"] <= dims.params["invariant_dim"]


def test_s_supermonomials_enumeration(cl):
    d2 = s_supermonomials_of_degree(cl, 2)
    assert all(len(w) == 2 for w in d2)
    assert len(set(d2)) == len(d2)
    # odd letters never repeat inside one S-supermonomial
    for w in d2:
        if w[0] == w[1]:
            assert not cl.gen_parity(w[0])


def test_classical_suite_11(cl):
    report = classical_suite(cl, seed=3, samples=10, pbw_degree=2,
                             invariants_degree=1)
    assert report.ok


def test_classical_suite_21(cl21):
    report = classical_suite(cl21, seed=4, samples=5, pbw_degree=1,
                             invariants_degree=1)
    assert report.ok


def test_gen_validation(cl):
    with pytest.raises(ValueError):
        cl.gen(0, 1, 0)
    with pytest.raises(ValueError):
        cl.gen(1, 1, 3)
