"""Abelianization: Smith normal form, first homology of the shipped
presentations, and invariance under presentation reshuffling."""

import random

from nmcg.abelianized import exponent_sums, h1, relation_matrix, smith_diagonal
from nmcg.presentations import (
    Presentation,
    Relator,
    nonorientable_mcg_presentation,
)
from nmcg.words import gen, parse


def _toy(relator_texts, gens="a1 a2"):
    gens = tuple(gen(t[0], int(t[1:])) for t in gens.split())
    rels = tuple(
        Relator(f"r{i}", (), parse(t), ()) for i, t in enumerate(relator_texts)
    )
    return Presentation(genus=0, boundary=0, generators=gens, relators=rels)


def test_smith_diagonal_known_matrices():
    assert tuple(smith_diagonal([[2, 4], [6, 8]], 2)) == (2, 4)
    assert tuple(smith_diagonal([[1, 0], [0, 1]], 2)) == (1, 1)
    assert tuple(smith_diagonal([[0, 0], [0, 0]], 2)) == (), (
        "zero rows contribute no invariant factors"
    )
    assert tuple(smith_diagonal([[6]], 1)) == (6,)
    assert tuple(smith_diagonal([[2, 0], [0, 3]], 2)) == (1, 6), (
        "diagonal must be put in divisibility order"
    )


def test_h1_toy_groups():
    assert h1(_toy(["a1^5"], "a1")).torsion == (5,)
    assert h1(_toy(["a1^5"], "a1")).free_rank == 0
    free2 = h1(_toy([], "a1 a2"))
    assert free2.free_rank == 2 and free2.torsion == ()
    # commutator relators do not move the abelianization
    comm = h1(_toy(["a1*a2*a1^-1*a2^-1"], "a1 a2"))
    assert comm.free_rank == 2 and comm.torsion == ()
    klein = h1(_toy(["a1*a1", "a2*a2", "a1*a2*a1^-1*a2^-1"], "a1 a2"))
    assert klein.free_rank == 0 and klein.torsion == (2, 2)


def test_h1_labels():
    assert h1(_toy([], "a1")).label() == "Z"
    assert h1(_toy(["a1*a1"], "a1")).label() == "Z/2"
    assert h1(_toy([], "a1 a2")).label() == "Z^2"
    assert h1(_toy(["a1"], "a1")).label() == "1"


def test_relation_matrix_shape():
    pres = nonorientable_mcg_presentation(4, 1)
    m = relation_matrix(pres)
    assert len(m) == len(pres.relators)
    assert all(len(row) == len(pres.generators) for row in m)
    order = list(pres.generators)
    for row, r in zip(m, pres.relators):
        assert row == exponent_sums(r.word, order)


def test_h1_invariant_under_relator_shuffle():
    base = nonorientable_mcg_presentation(5, 1)
    expected = h1(base)
    rng = random.Random(11)
    for _ in range(5):
        rels = list(base.relators)
        rng.shuffle(rels)
        shuffled = Presentation(
            genus=base.genus,
            boundary=base.boundary,
            generators=base.generators,
            relators=tuple(rels),
        )
        assert h1(shuffled) == expected


def test_h1_invariant_under_relator_inversion_and_conjugation():
    from nmcg.words import concat, inverse

    base = nonorientable_mcg_presentation(4, 1)
    expected = h1(base)
    conj = parse("a1*u2")
    rels = tuple(
        Relator(r.tag, r.params, concat(conj, concat(r.lhs, inverse(conj))), r.rhs)
        for r in base.relators
    )
    tweaked = Presentation(
        genus=base.genus,
        boundary=base.boundary,
        generators=base.generators,
        relators=rels,
    )
    assert h1(tweaked) == expected, "conjugated relators changed the abelianization"


def test_h1_of_shipped_presentations():
    # one-boundary groups, genus 3..8
    expected = {
        3: (2, 2),
        4: (2, 2, 2),
        5: (2, 2),
        6: (2, 2),
        7: (2,),
        8: (2,),
    }
    for g, torsion in expected.items():
        res = h1(nonorientable_mcg_presentation(g, 1))
        assert res.free_rank == 0 and res.torsion == torsion, (
            f"H1 at ({g},1) is {res.label()}"
        )
