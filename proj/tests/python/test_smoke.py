"""Smoke tests for the python bindings."""

from fractions import Fraction

import copex


def test_construct_and_codegree():
    k43 = copex.construct("K43")
    assert k43.n == 4 and len(k43.edges) == 4
    assert copex.codegree(k43, [0, 1]) == 2
    assert copex.min_pos_codegree(k43) == 2
    assert copex.min_pos_codegree(copex.construct("K43-")) == 1


def test_isomorphism_and_link():
    t3 = copex.construct("Tr:3")
    assert copex.is_isomorphic(t3, copex.construct("K43-"))
    link = copex.link_graph(copex.construct("K43"), 3)
    assert link.r == 2 and link.n == 3 and len(link.edges) == 3
    susp = copex.suspension(link)
    assert susp.r == 3


def test_homomorphism_fixtures():
    f1 = copex.construct("F1")
    assert copex.exists_homomorphism(f1, copex.construct("K43")) is not None
    assert copex.exists_homomorphism(f1, copex.construct("K43-")) is None
    assert copex.classify_gamma_region(copex.construct("F5")) == "1/r"
    assert copex.classify_gamma_region(copex.construct("Cminus:6")) == "zero"


def test_density_is_exact():
    d = copex.induced_density(copex.construct("Edge:3"), copex.construct("F32"))
    assert d == Fraction(2, 5)


def test_enumeration_counts():
    assert len(copex.enumerate_graphs(4)) == 5
    assert len(copex.enumerate_graphs(4, forbid=[copex.construct("K43")])) == 4
    assert len(copex.induced_family_of_blowup(copex.construct("FanoComplement"), 6)) == 13


def test_optimize_weights():
    value, weights, face_dim = copex.optimize_blowup_weights(
        copex.construct("FanoComplement")
    )
    assert value == Fraction(4, 7)
    assert weights == [Fraction(1, 7)] * 7
    assert face_dim == 0


def test_blowup_and_coplusex():
    fano14 = copex.instantiate_blowup(copex.construct("FanoComplement"), [2] * 7)
    assert copex.min_pos_codegree(fano14) == 8
    res = copex.co_plus_ex(4, forbid=[copex.construct("K43")])
    assert res["value"] == 1
    naive = copex.co_plus_ex(4, forbid=[copex.construct("K43")], naive=True)
    assert naive["value"] == 1 and naive["witness_classes"] == res["witness_classes"]


def test_pattern_embeddings():
    k43 = copex.construct("K43")
    maps = copex.pattern_embeddings(k43, 3, [[0, 1, 2]])
    assert len(maps) == 24
    assert copex.per_pair_codegree_value(k43, 0, 1, 4, 7) == Fraction(1) * (7 - 4)
