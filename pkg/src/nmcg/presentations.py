"""Finite presentations of mapping class groups of nonorientable
surfaces (genus g, 0 or 1 boundary components), plus the braid-type and
orientable-surface presentations that feed into them.

Generators: a_i (twists about two-sided curves through crosscaps i,
i+1), u_i (crosscap transpositions), b_j (twists about curves enclosing
the first 4j+4 crosscaps; b_0 = a_1, b_1 written b). Small-genus groups
get their classical ad-hoc presentations. Relators are stored as
equations (lhs, rhs); the single-word form is lhs * rhs^-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .words import (
    Gen,
    Word,
    concat,
    fmt,
    free_reduce,
    gen,
    gen_sort_key,
    inverse,
    lit,
    named,
    parse,
    power,
    substitute,
)


def a(i: int) -> Word:
    return lit(gen("a", i))


def u(i: int) -> Word:
    return lit(gen("u", i))


def b(j: int) -> Word:
    return lit(gen("b", j))


def x(i: int) -> Word:
    return lit(gen("x", i))


def arun(i: int, j: int) -> Word:
    """a_i a_{i+1} ... a_j; empty when j < i."""
    return tuple((gen("a", k), 1) for k in range(i, j + 1))


def urun(i: int, j: int) -> Word:
    return tuple((gen("u", k), 1) for k in range(i, j + 1))


def arun_down(i: int, j: int) -> Word:
    """a_i a_{i-1} ... a_j; empty when j > i."""
    return tuple((gen("a", k), 1) for k in range(i, j - 1, -1))


def urun_down(i: int, j: int) -> Word:
    return tuple((gen("u", k), 1) for k in range(i, j - 1, -1))


def delta_word(k: int) -> Word:
    """Half-twist word: empty for k = 1, else (u_1..u_{k-1}) * previous."""
    w = ()
    for m in range(k, 1, -1):
        w = concat(w, urun(1, m - 1))
    return w


def r_word(g: int) -> Word:
    return concat(arun(1, g - 1), urun_down(g - 1, 1))


def y_word(i: int) -> Word:
    return concat(a(i), u(i))


def v_word() -> Word:
    return concat(arun_down(3, 1), urun(1, 3))


def c_word() -> Word:
    s = power(arun(1, 5), 2)
    return concat(s, b(1), inverse(s))


def a8_word(i: int) -> Word:
    """Right side of the b_{i+1} recursion."""
    head = concat(b(i - 1), arun(2 * i, 2 * i + 3))
    return concat(power(concat(head, b(i)), 5), power(head, -6))


def chain_word(i: int, which: int) -> Word:
    assert which in (1, 2)
    if which == 2:
        return power(concat(b(i - 1), arun(2 * i, 2 * i + 3), b(i)), 5)
    w = ()
    for top in range(2 * i + 3, 2 * i - 1, -1):
        w = concat(w, b(i - 1), arun(2 * i, top) if top >= 2 * i else ())
    return concat(w, b(i - 1))


def g3_slide_word() -> Word:
    return parse("a1^-1 u2 a1^-1 u2^-1 a1")


def g4_slide_word() -> Word:
    return parse("a2^-1 u3 a2^-1 u3^-1 a2")


def lantern_d_word() -> Word:
    s = parse("a4 a3 a5 a4")
    return concat(inverse(s), b(1), s)


def expansion_env(g: int, n: int) -> dict:
    """Defining words for the non-primitive generators at (g, n)."""
    env = {gen("b", 0): a(1)}
    j = 2
    while 2 * j <= g - 2:
        env[gen("b", j)] = a8_word(j - 1)
        j += 1
    if g >= 2:
        env[named("y1")] = y_word(1)
    if g >= 3:
        env[named("y2")] = y_word(2)
    if g >= 4:
        env[named("v")] = v_word()
        env[named(f"r{g}")] = r_word(g)
    if g >= 6:
        env[named("c")] = c_word()
    if (g, n) == (3, 1):
        env[named("d")] = g3_slide_word()
    if (g, n) == (4, 0):
        env[named("d")] = g4_slide_word()
    return env


@dataclass(frozen=True)
class Relator:
    tag: str
    params: tuple
    lhs: Word
    rhs: Word = ()

    @property
    def word(self) -> Word:
        return concat(self.lhs, inverse(self.rhs))

    def text(self) -> str:
        head = self.tag + ("(%s)" % ",".join(map(str, self.params)) if self.params else "")
        return f"{head}: {fmt(self.lhs)} = {fmt(self.rhs)}"


@dataclass(frozen=True)
class Presentation:
    genus: int
    boundary: int
    generators: tuple
    relators: tuple

    def generator_labels(self):
        return [g.label() for g in self.generators]

    def to_text(self) -> str:
        lines = [f"genus {self.genus}, boundary {self.boundary}"]
        lines.append("generators: " + " ".join(self.generator_labels()))
        lines.extend(r.text() for r in self.relators)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "genus": self.genus,
            "boundary": self.boundary,
            "generators": self.generator_labels(),
            "relators": [
                {"tag": r.tag, "params": list(r.params), "word": fmt(r.word)}
                for r in self.relators
            ],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_cas(self) -> str:
        labels = self.generator_labels()
        quoted = ", ".join(f'"{s}"' for s in labels)
        rels = ",\n  ".join(fmt(r.word).replace("*", " * ") or "One(F)" for r in self.relators)
        return (
            f"F := FreeGroup({quoted});;\n"
            "AssignGeneratorVariables(F);;\n"
            f"rels := [\n  {rels}\n];;\n"
            "G := F / rels;;\n"
        )


def from_json(text) -> Presentation:
    doc = json.loads(text)
    gens = tuple(parse(s)[0][0] for s in doc["generators"])
    rels = tuple(
        Relator(r["tag"], tuple(r["params"]), parse(r["word"])) for r in doc["relators"]
    )
    return Presentation(doc["genus"], doc["boundary"], gens, rels)


def _rel(tag, params, lhs, rhs=()):
    return Relator(tag, tuple(params), free_reduce(lhs), free_reduce(rhs))


def _twist_relators(g: int) -> list:
    """A-family: relations among a_1..a_{g-1} and the b_j."""
    rels = []
    for i in range(1, g - 1):
        for j in range(i + 2, g):
            rels.append(_rel("A1", (i, j), concat(a(i), a(j)), concat(a(j), a(i))))
    for i in range(1, g - 1):
        rels.append(
            _rel("A2", (i,), concat(a(i), a(i + 1), a(i)), concat(a(i + 1), a(i), a(i + 1)))
        )
    if g >= 4:
        for i in range(1, g):
            if i != 4:
                rels.append(_rel("A3", (i,), concat(a(i), b(1)), concat(b(1), a(i))))
    if g >= 5:
        rels.append(
            _rel("A4", (), concat(b(1), a(4), b(1)), concat(a(4), b(1), a(4)))
        )
        rels.append(
            _rel(
                "A5",
                (),
                power(concat(arun(2, 4), b(1)), 10),
                power(concat(arun(1, 4), b(1)), 6),
            )
        )
    if g >= 7:
        rels.append(
            _rel(
                "A6",
                (),
                power(concat(arun(2, 6), b(1)), 12),
                power(concat(arun(1, 6), b(1)), 9),
            )
        )
    rels.append(_rel("A7", (), b(0), a(1)))
    i = 1
    while 2 * i <= g - 4:
        rels.append(_rel("A8", (i,), b(i + 1), a8_word(i)))
        i += 1
    if g >= 8 and g % 2 == 0:
        rho = (g - 2) // 2
        rels.append(
            _rel(
                "A9a",
                (rho,),
                concat(b(rho), a(2 * rho - 3)),
                concat(a(2 * rho - 3), b(rho)),
            )
        )
    if g == 6:
        rels.append(_rel("A9b", (), concat(b(2), b(1)), concat(b(1), b(2))))
    return rels


def _braid_relators(g: int, spherical: bool) -> list:
    rels = []
    for i in range(1, g - 1):
        for j in range(i + 2, g):
            rels.append(_rel("B1", (i, j), concat(u(i), u(j)), concat(u(j), u(i))))
    for i in range(1, g - 1):
        rels.append(
            _rel("B2", (i,), concat(u(i), u(i + 1), u(i)), concat(u(i + 1), u(i), u(i + 1)))
        )
    if spherical:
        rels.append(_rel("B3", (), power(urun(1, g - 1), g)))
        rels.append(_rel("B4", (), power(urun(1, g - 2), g - 1)))
    return rels


def _crosscap_relators(g: int) -> list:
    rels = []
    for i in range(3, g):
        rels.append(_rel("C1", (i,), concat(a(1), u(i)), concat(u(i), a(1))))
    for i in range(1, g - 1):
        rels.append(
            _rel(
                "C2",
                (i,),
                concat(a(i), u(i + 1), u(i)),
                concat(u(i + 1), u(i), a(i + 1)),
            )
        )
        rels.append(
            _rel(
                "C3",
                (i,),
                concat(a(i + 1), u(i), u(i + 1)),
                concat(u(i), u(i + 1), a(i)),
            )
        )
    rels.append(_rel("C4", (), concat(a(1), u(1), a(1)), u(1)))
    rels.append(_rel("C5", (), concat(u(2), a(1), a(2), u(1)), concat(a(1), a(2))))
    if g >= 4:
        rels.append(
            _rel(
                "C6",
                (),
                power(concat(u(3), b(1)), 2),
                concat(power(arun(1, 3), 2), power(urun(1, 3), 2)),
            )
        )
    if g >= 6:
        rels.append(_rel("C7", (), concat(u(5), b(1)), concat(b(1), u(5))))
    if g >= 5:
        mid = concat(arun_down(4, 1), urun(1, 4))
        rels.append(
            _rel(
                "C8",
                (),
                concat(a(4), u(4), mid, b(1)),
                concat(b(1), a(4), u(4)),
            )
        )
    return rels


def braid_presentation(g: int, spherical: bool = False) -> Presentation:
    """Braid-type presentation on u_1..u_{g-1} (B3, B4 when spherical)."""
    gens = tuple(gen("u", i) for i in range(1, g))
    return Presentation(g, 1, gens, tuple(_braid_relators(g, spherical)))


def orientable_mcg_presentation(rho: int, r: int) -> Presentation:
    """Twist presentation for the orientable surface of genus rho with r
    boundary components (r = 1 or 2), on a_1..a_{g-1} and b_j where
    g = 2 rho + r."""
    assert r in (1, 2)
    g = 2 * rho + r
    gens = [gen("a", i) for i in range(1, g)]
    gens += [gen("b", j) for j in range(0, (g - 2) // 2 + 1)]
    gens.sort(key=gen_sort_key)
    return Presentation(g, r, tuple(gens), tuple(_twist_relators(g)))


def _small_genus(g: int, n: int) -> Presentation:
    sg = lambda k, lhs, rhs=(): _rel("smallgenus", (f"{g},{n}", k), lhs, rhs)
    if g == 1:
        return Presentation(g, n, (), ())
    y1, y2 = named("y1"), named("y2")
    if (g, n) == (2, 0):
        rels = (
            sg("1", power(a(1), 2)),
            sg("2", power(lit(y1), 2)),
            sg("3", power(concat(a(1), lit(y1)), 2)),
        )
        return Presentation(2, 0, (gen("a", 1), y1), rels)
    if (g, n) == (2, 1):
        rels = (sg("1", concat(a(1), lit(y1), a(1)), lit(y1)),)
        return Presentation(2, 1, (gen("a", 1), y1), rels)
    if (g, n) == (3, 0):
        rels = (
            sg("1", concat(a(1), a(2), a(1)), concat(a(2), a(1), a(2))),
            sg("2", power(lit(y2), 2)),
            sg("3", power(concat(a(1), lit(y2)), 2)),
            sg("4", power(concat(a(2), lit(y2)), 2)),
            sg("5", power(concat(a(1), a(2)), 6)),
        )
        return Presentation(3, 0, (gen("a", 1), gen("a", 2), y2), rels)
    raise ValueError(f"no small-genus presentation for ({g},{n})")


def nonorientable_mcg_presentation(
    g: int, n: int, use_da: bool = False, use_b4a: bool = False
) -> Presentation:
    """Presentation of the mapping class group of the nonorientable
    surface of genus g with n boundary components (n in {0, 1})."""
    assert n in (0, 1), "only 0 or 1 boundary components"
    assert g >= 1
    if g <= 2 or (g, n) == (3, 0):
        return _small_genus(g, n)
    gens = [gen("a", i) for i in range(1, g)]
    gens += [gen("u", i) for i in range(1, g)]
    gens += [gen("b", j) for j in range(0, (g - 2) // 2 + 1)]
    gens.sort(key=gen_sort_key)
    rels = _twist_relators(g) + _braid_relators(g, False) + _crosscap_relators(g)
    if n == 0:
        rels.append(_rel("B3", (), power(urun(1, g - 1), g)))
        if use_b4a:
            rels.append(_rel("B4a", (), concat(urun_down(g - 1, 1), urun(1, g - 1))))
        else:
            rels.append(_rel("B4", (), power(urun(1, g - 2), g - 1)))
        if use_da:
            mid = concat(urun_down(g - 2, 1), arun(1, g - 2))
            rels.append(_rel("Da", (), concat(a(g - 1), mid, a(g - 1)), mid))
        else:
            mid = concat(arun(2, g - 1), urun_down(g - 1, 2))
            rels.append(_rel("D", (), concat(a(1), mid, a(1)), mid))
    order = {
        t: k
        for k, t in enumerate(
            "A1 A2 A3 A4 A5 A6 A7 A8 A9a A9b B1 B2 B3 B4 B4a C1 C2 C3 C4 C5 C6 C7 C8 D Da".split()
        )
    }
    rels.sort(key=lambda r: (order[r.tag], r.params))
    return Presentation(g, n, tuple(gens), tuple(rels))


def slide_presentation(g: int, n: int) -> Presentation:
    """Alternative presentations carrying the crosscap slide d as a
    generator: (3,1) and (4,0)."""
    d = named("d")
    sg = lambda k, lhs, rhs=(): _rel("smallgenus", (f"g{g}n{n}", k), lhs, rhs)
    if (g, n) == (3, 1):
        gens = (gen("a", 1), gen("a", 2), gen("u", 2), d)
        rels = (
            sg("i", concat(a(2), lit(d)), concat(lit(d), a(2))),
            sg("ii", concat(a(2), a(1), a(2)), concat(a(1), a(2), a(1))),
            sg("iii", concat(lit(d), a(1), lit(d)), concat(a(1), lit(d), a(1))),
            sg("iv", concat(u(2), a(2), inverse(u(2))), inverse(a(2))),
            sg("v", concat(u(2), a(1), inverse(u(2))), concat(a(1), inverse(lit(d)), inverse(a(1)))),
            sg("vi", power(concat(lit(d), u(2)), 2), power(concat(u(2), lit(d)), 2)),
            sg("vii", power(concat(lit(d), u(2)), 2), power(concat(a(2), lit(d), lit(d), a(1)), 3)),
        )
        return Presentation(3, 1, gens, rels)
    if (g, n) == (4, 0):
        r4 = named("r4")
        gens = tuple(
            sorted(
                [gen("a", i) for i in (1, 2, 3)]
                + [gen("u", i) for i in (1, 2, 3)]
                + [gen("b", 1), r4, d],
                key=gen_sort_key,
            )
        )
        rels = [
            _rel("A1", (1, 3), concat(a(1), a(3)), concat(a(3), a(1))),
            _rel("A2", (1,), concat(a(1), a(2), a(1)), concat(a(2), a(1), a(2))),
            _rel("A2", (2,), concat(a(2), a(3), a(2)), concat(a(3), a(2), a(3))),
            _rel("A3", (1,), concat(a(1), b(1)), concat(b(1), a(1))),
            _rel("A3", (2,), concat(a(2), b(1)), concat(b(1), a(2))),
            _rel("A3", (3,), concat(a(3), b(1)), concat(b(1), a(3))),
            _rel("B1", (1, 3), concat(u(1), u(3)), concat(u(3), u(1))),
            _rel("C1", (3,), concat(a(1), u(3)), concat(u(3), a(1))),
            _rel("C4", (), concat(a(1), u(1), a(1)), u(1)),
            _rel("starstar", (1,), concat(u(2), a(1), a(2), u(1)), concat(a(1), a(2))),
            _rel("starstar", (2,), concat(u(3), a(2), a(3), u(2)), concat(a(2), a(3))),
            _rel("E2a", (), power(lit(r4), 2)),
            _rel("E3a", (1,), concat(lit(r4), a(1)), concat(a(1), lit(r4))),
            _rel("E3a", (2,), concat(lit(r4), a(2)), concat(a(2), lit(r4))),
            _rel("E3a", (3,), concat(lit(r4), a(3)), concat(a(3), lit(r4))),
            _rel("E4", (2,), concat(u(2), lit(r4), u(2)), lit(r4)),
            _rel("E4", (3,), concat(u(3), lit(r4), u(3)), lit(r4)),
            _rel("E6", (), power(arun(1, 3), 4)),
            _rel("G3a", (), power(concat(b(1), lit(r4)), 2)),
            sg("i", lit(r4), concat(arun(1, 3), urun_down(3, 1))),
            sg("ii", concat(u(3), a(2), inverse(u(3))), concat(a(2), inverse(lit(d)), inverse(a(2)))),
            sg("iii", power(u(1), 2), power(u(3), 2)),
            sg("iv", power(concat(u(3), b(1)), 2)),
            sg("v", power(concat(u(3), lit(d)), 2)),
            sg("vi", concat(lit(d), a(3)), concat(a(3), lit(d))),
            sg("vii", concat(lit(d), a(2), lit(d)), concat(a(2), lit(d), a(2))),
            sg("viii", power(concat(lit(d), a(2), a(3)), 4)),
            sg("ix", concat(u(3), lit(d), inverse(u(3))), concat(u(1), lit(d), inverse(u(1)))),
        ]
        return Presentation(4, 0, gens, tuple(rels))
    raise ValueError(f"no slide presentation for ({g},{n})")


def extension_presentation(kernel: Presentation, quotient: Presentation, relator_lifts, conjugations) -> Presentation:
    """Presentation of a group extension 1 -> K -> G -> H -> 1.

    relator_lifts[i] is the kernel word w_r equal in G to the lift of
    quotient relator i; conjugations[(h, k)] is the kernel word equal to
    h k h^-1 for each quotient generator h and kernel generator k.
    Generator name clashes are the caller's problem.
    """
    gens = tuple(kernel.generators) + tuple(quotient.generators)
    assert len(set(gens)) == len(gens), "kernel/quotient generator names clash"
    rels = list(kernel.relators)
    for i, r in enumerate(quotient.relators):
        w = relator_lifts.get(i, ())
        rels.append(_rel("ext-lift", (r.tag,) + r.params, r.word, w))
    for h in quotient.generators:
        for k in kernel.generators:
            w = conjugations[(h, k)]
            rels.append(
                _rel("ext-conj", (h.label(), k.label()), concat(lit(h), lit(k), inverse(lit(h))), w)
            )
    count = len(kernel.relators) + len(quotient.relators) + len(quotient.generators) * len(kernel.generators)
    assert len(rels) == count
    return Presentation(quotient.genus, quotient.boundary, gens, tuple(rels))


def tietze_eliminate(pres: Presentation, victim: Gen, relator_index=None) -> Presentation:
    """Remove a generator using a relator in which it occurs exactly once."""
    if relator_index is None:
        for i, r in enumerate(pres.relators):
            if sum(1 for gn, _ in r.word if gn == victim) == 1:
                relator_index = i
                break
        else:
            raise ValueError(f"no defining relator for {victim.label()}")
    rel = pres.relators[relator_index]
    w = rel.word
    pos = next(i for i, (gn, _) in enumerate(w) if gn == victim)
    # w = p * victim^s * q = 1  =>  victim^s = p^-1 q^-1
    p, (_, s), q = w[:pos], w[pos], w[pos + 1 :]
    img = concat(inverse(p), inverse(q))
    if s == -1:
        img = inverse(img)
    sub = {victim: img}
    gens = tuple(gn for gn in pres.generators if gn != victim)
    rels = tuple(
        Relator(r.tag, r.params, substitute(r.lhs, sub), substitute(r.rhs, sub))
        for i, r in enumerate(pres.relators)
        if i != relator_index
    )
    return Presentation(pres.genus, pres.boundary, gens, rels)
