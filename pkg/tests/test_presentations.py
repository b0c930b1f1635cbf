"""Presentation builders: relator inventories, abbreviation expansion,
Tietze elimination, and the serialization surface."""

import json

import pytest

from nmcg.abelianized import h1
from nmcg.cosets import group_order
from nmcg.presentations import (
    Presentation,
    Relator,
    braid_presentation,
    expansion_env,
    nonorientable_mcg_presentation,
    slide_presentation,
    tietze_eliminate,
)
from nmcg.words import free_reduce, gen, named, parse, substitute


def test_generator_inventory_grows_with_genus():
    for g in range(3, 9):
        pres = nonorientable_mcg_presentation(g, 1)
        labels = [x.label() for x in pres.generators]
        assert labels[: g - 1] == [f"a{i}" for i in range(1, g)]
        assert f"u{g - 1}" in labels
        if g >= 4:
            assert "b1" in labels
        for j in range(2, (g - 2) // 2 + 1):
            assert f"b{j}" in labels, f"missing chain twist b{j} at genus {g}"


def test_relator_counts_are_stable():
    counts = {
        (g, n): len(nonorientable_mcg_presentation(g, n).relators)
        for g in range(3, 9)
        for n in (1, 0)
    }
    # closing the boundary adds the three boundary-word relators (g >= 4);
    # genus 3 has its own shorter closed presentation
    for g in range(4, 9):
        assert counts[(g, 0)] == counts[(g, 1)] + 3, (
            f"genus {g}: closed form should add exactly three relators, got {counts}"
        )
    assert [counts[(g, 1)] for g in range(3, 9)] == [7, 18, 30, 45, 59, 77]
    assert counts[(3, 0)] == 5


def test_relator_sides_parse_and_reduce():
    for g in (3, 5, 6):
        pres = nonorientable_mcg_presentation(g, 1)
        tags = set()
        for r in pres.relators:
            tags.add(r.tag)
            assert r.word == free_reduce(r.word), f"{r.tag}: unreduced relator word"
            assert r.word, f"{r.tag}: empty relator"
            assert ":" in r.text() and "=" in r.text()
        assert "A7" in tags


def test_smallgenus_presentations_exist():
    p31 = slide_presentation(3, 1)
    assert [r.params[-1] for r in p31.relators if r.tag == "smallgenus"] == [
        "i", "ii", "iii", "iv", "v", "vi", "vii",
    ]
    p40 = slide_presentation(4, 0)
    assert [r.params[-1] for r in p40.relators if r.tag == "smallgenus"] == [
        "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix",
    ]


def test_expansion_env_covers_abbreviations():
    env6 = expansion_env(6, 1)
    for label in ("y1", "y2", "c", "v", "r6"):
        assert named(label) in env6, f"missing abbreviation {label} at (6,1)"
    assert gen("b", 0) in env6 and gen("b", 2) in env6
    assert named("d") in expansion_env(3, 1), "slide abbreviation missing at (3,1)"
    for k, image in env6.items():
        assert image, f"{k.label()} expands to the empty word"


def test_env_b2_matches_its_defining_relator():
    # env stores a normal form for b2, not the literal defining word, so the
    # agreement is as automorphisms rather than letter-for-letter
    from nmcg.pi1_action import evaluate

    for g in (6, 8):
        pres = nonorientable_mcg_presentation(g, 1)
        env = expansion_env(g, 1)
        for r in pres.relators:
            if r.tag != "A8":
                continue
            assert free_reduce(substitute(r.lhs, env)) != free_reduce(
                substitute(r.rhs, env)
            ), "normal form unexpectedly literal; tighten this test"
            assert evaluate(r.lhs, g, env) == evaluate(r.rhs, g, env), (
                f"A8({r.params}): evaluator expansion disagrees with the "
                "defining relator"
            )


def test_tietze_eliminate_toy():
    p, q = gen("a", 1), gen("a", 2)
    pres = Presentation(
        genus=0,
        boundary=0,
        generators=(p, q),
        relators=(
            Relator("def", (), parse("a2"), parse("a1*a1")),
            Relator("ord", (), parse("a2*a2*a2"), ()),
        ),
    )
    out = tietze_eliminate(pres, q)
    assert [x.label() for x in out.generators] == ["a1"]
    assert len(out.relators) == 1
    assert free_reduce(out.relators[0].word) == parse("a1*a1*a1*a1*a1*a1"), (
        "substituted relator should become a1^6"
    )
    assert h1(out).torsion == (6,) == h1(pres).torsion


def test_tietze_eliminate_removes_generator_everywhere():
    pres = nonorientable_mcg_presentation(6, 1)
    out = tietze_eliminate(pres, gen("b", 2))
    assert gen("b", 2) not in out.generators
    for r in out.relators:
        assert all(x != gen("b", 2) for x, _ in r.word), f"{r.tag} still uses b2"
    assert len(out.generators) == len(pres.generators) - 1
    assert len(out.relators) == len(pres.relators) - 1


def test_braid_presentation_shapes():
    pres = braid_presentation(4)
    assert len(pres.generators) == 3
    assert h1(pres).free_rank == 1 and h1(pres).torsion == (), (
        "braid abelianization must be infinite cyclic"
    )
    sph = braid_presentation(3, spherical=True)
    assert len(sph.relators) == len(braid_presentation(3).relators) + 2, (
        "spherical quotient adds the sphere relation and the involution"
    )
    assert group_order(sph) == 6


def test_to_json_is_deterministic_and_loadable():
    pres = nonorientable_mcg_presentation(4, 0)
    blob = pres.to_json()
    assert blob == nonorientable_mcg_presentation(4, 0).to_json()
    doc = json.loads(blob)
    assert doc["genus"] == 4 and doc["boundary"] == 0
    assert len(doc["relators"]) == len(pres.relators)
    assert all("tag" in r and "word" in r for r in doc["relators"])


def test_closed_presentation_adds_boundary_relators():
    open_tags = [r.tag for r in nonorientable_mcg_presentation(5, 1).relators]
    closed_tags = [r.tag for r in nonorientable_mcg_presentation(5, 0).relators]
    extra = sorted(t for t in closed_tags if closed_tags.count(t) > open_tags.count(t))
    assert extra == ["B3", "B4", "D"], f"unexpected closing relators {extra}"
