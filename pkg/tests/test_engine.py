import random

from bichroma.graphs import RED, BLUE, FLEX, MixedGraph, SimpleGraph, shadow
from bichroma.engine import (audit_coefficients, canonical_mixed_key,
                             chromatic_number, classical_chromatic,
                             coeff_formula_second, coeff_formula_third,
                             count_colourings, poly_interpolated,
                             poly_partition, poly_recursive)
from bichroma.engine import _count_backtracking, _count_vectorized
from bichroma.enumeration import all_labelled_mixed, random_mixed_graph
from bichroma.polynomial import IntPolynomial, evaluate_int, falling_factorial

ENGINES = (poly_interpolated, poly_recursive, poly_partition)


def two_k2():
    return MixedGraph(4, [(0, 1, RED), (2, 3, BLUE)])


def test_two_k2_golden():
    want = IntPolynomial((0, 2, -1, -2, 1))  # x^4 - 2x^3 - x^2 + 2x
    for engine in ENGINES:
        assert engine(two_k2()) == want


def test_count_matches_polynomial():
    M = two_k2()
    p = poly_recursive(M)
    for k in range(6):
        assert count_colourings(M, k) == evaluate_int(p, k)


def test_vectorized_equals_backtracking():
    rng = random.Random(3)
    for _ in range(30):
        M = random_mixed_graph(4, rng)
        for k in range(5):
            assert _count_vectorized(M, k) == _count_backtracking(M, k)


def test_empty_graph():
    M = MixedGraph(3, [])
    for engine in ENGINES:
        assert engine(M) == IntPolynomial((0, 0, 0, 1))
    assert poly_recursive(MixedGraph(0, [])) == IntPolynomial.one()


def test_all_flexible_reduces_to_classical():
    # flexible-only mixed graphs have the plain chromatic polynomial
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    M = MixedGraph(4, [(u, v, FLEX) for u, v in edges])
    g = SimpleGraph.from_edges(4, edges)
    assert poly_recursive(M) == classical_chromatic(g)


def test_monochromatic_reduces_to_classical():
    rng = random.Random(9)
    for colour in (RED, BLUE):
        for _ in range(20):
            edges = [(u, v) for u in range(5) for v in range(u + 1, 5)
                     if rng.random() < 0.5]
            M = MixedGraph(5, [(u, v, colour) for u, v in edges])
            assert poly_partition(M) == classical_chromatic(
                SimpleGraph.from_edges(5, edges))


def test_engines_agree_exhaustively_n3():
    for M in all_labelled_mixed(3):
        p = poly_interpolated(M)
        assert poly_recursive(M) == p
        assert poly_partition(M) == p


def test_engines_agree_random_n6():
    rng = random.Random(41)
    for _ in range(40):
        M = random_mixed_graph(6, rng)
        p = poly_interpolated(M)
        assert poly_recursive(M) == p
        assert poly_partition(M) == p


def test_classical_c4():
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert classical_chromatic(g) == IntPolynomial((0, -3, 6, -4, 1))


def test_chromatic_number():
    # two colours would force the same pair onto both the red and blue edge
    assert chromatic_number(two_k2()) == 3
    M = MixedGraph(3, [(0, 1, RED), (1, 2, BLUE)])
    assert chromatic_number(M) == 3
    assert chromatic_number(MixedGraph(2, [(0, 1, FLEX)])) == 2


def test_second_coefficient_formula():
    for M in all_labelled_mixed(3):
        assert coeff_formula_second(M) == poly_partition(M).coefficient(2)


def test_third_coefficient_known_disagreements():
    audit = audit_coefficients(two_k2())
    assert audit.formula_third == 0
    assert audit.true_third == -1
    assert not audit.agrees_third
    square = MixedGraph(4, [(0, 1, RED), (0, 2, RED), (1, 3, BLUE), (2, 3, BLUE)])
    audit = audit_coefficients(square)
    assert audit.formula_third == 9
    assert audit.true_third == 8


def test_third_coefficient_agrees_on_p4():
    M = MixedGraph(4, [(0, 1, RED), (1, 2, FLEX), (2, 3, BLUE)])
    audit = audit_coefficients(M)
    assert audit.agrees_third
    assert audit.formula_third == 2


def test_coeff_formula_third_is_callable_everywhere():
    for M in all_labelled_mixed(2):
        coeff_formula_third(M)


def test_canonical_mixed_key_isomorphism():
    a = MixedGraph(4, [(0, 1, RED), (2, 3, BLUE)])
    b = MixedGraph(4, [(0, 3, RED), (1, 2, BLUE)])
    c = MixedGraph(4, [(0, 1, RED), (2, 3, RED)])
    assert canonical_mixed_key(a) == canonical_mixed_key(b)
    assert canonical_mixed_key(a) != canonical_mixed_key(c)


def test_recursive_cache_consistency():
    rng = random.Random(77)
    cache = {}
    for _ in range(10):
        M = random_mixed_graph(5, rng)
        assert poly_recursive(M, cache=cache) == poly_recursive(M)
