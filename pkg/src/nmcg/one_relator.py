"""Word problem and bounded conjugacy in the one-relator quotient
G_g = < x_1..x_g | x_1^2 x_2^2 ... x_g^2 >, the fundamental group of the
closed nonorientable surface.

For g >= 4 the relator satisfies C'(1/6) (pieces are single letters, and
1 < 2g/6), so Dehn's algorithm decides the word problem: any nonempty
freely reduced word equal to 1 contains more than half of a cyclic
shift of the relator or its inverse; replacing it by the shorter
complement strictly shrinks the word.

A relation of the closed mapping class group, evaluated in the punctured
representation, must act as an inner automorphism of G_g (the filling
point-push). verify_word() finds and validates the conjugator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .pi1_action import XWord, boundary_word, xinv, xmul, xreduce

VERIFIED = "Verified"
REFUTED = "Refuted"
INCONCLUSIVE = "Inconclusive"


@lru_cache(maxsize=None)
def _tables(g: int):
    assert g >= 4, "Dehn's algorithm needs C'(1/6), i.e. genus >= 4"
    w = boundary_word(g)
    by_len = {L: {} for L in range(g + 1, 2 * g + 1)}
    for base in (w, xinv(w)):
        for r in range(2 * g):
            rot = base[r:] + base[:r]
            for L in range(g + 1, 2 * g + 1):
                key = rot[:L]
                repl = xinv(rot[L:])
                assert xreduce(key + xinv(repl)) == rot
                by_len[L].setdefault(key, repl)
    return by_len


def dehn_reduce(word, g: int) -> XWord:
    """Shortest Dehn-normal form: empty iff the word is trivial in G_g."""
    tables = _tables(g)
    w = xreduce(word)
    changed = True
    while changed:
        changed = False
        for L in range(min(len(w), 2 * g), g, -1):
            tab = tables[L]
            for pos in range(len(w) - L + 1):
                repl = tab.get(w[pos : pos + L])
                if repl is not None:
                    w = xreduce(w[:pos] + repl + w[pos + L :])
                    changed = True
                    break
            if changed:
                break
    return w


def equal_in_quotient(lhs, rhs, g: int) -> bool:
    return dehn_reduce(xmul(lhs, xinv(rhs)), g) == ()


def _conjugates_to(conj, img, i, g) -> bool:
    return equal_in_quotient(xmul(conj, (i,), xinv(conj)), img, g)


def _candidate_conjugators(images, g: int):
    """Guesses for u with u x_i u^-1 = images[i-1], cheap ones first."""
    seen = set()

    def emit(w):
        w = dehn_reduce(w, g)
        if w not in seen:
            seen.add(w)
            yield w

    v = dehn_reduce(images[0], g)
    for pos in range(len(v)):
        if abs(v[pos]) == 1:
            prefix = v[:pos]
            for j in range(-2, 3):
                yield from emit(xmul(prefix, (1,) * j if j > 0 else (-1,) * (-j)))
    # powers of single squared letters (crosscap boundary pieces)
    for i in range(1, g + 1):
        for k in (1, -1, 2, -2):
            yield from emit(((i if k > 0 else -i),) * (2 * abs(k)))
    w = boundary_word(g)
    for k in (1, -1, 2, -2):
        yield from emit(w * k if k > 0 else xinv(w) * (-k))
    # partial boundary products x_1^2..x_m^2 and their inverses
    for m in range(1, g):
        part = tuple(c for i in range(1, m + 1) for c in (i, i))
        yield from emit(part)
        yield from emit(xinv(part))


def _beam_search(images, g: int, radius: int, width: int = 48):
    """Greedy conjugator search; sound (only returns validated words)."""

    def score(c):
        ci = xinv(c)
        return sum(
            len(dehn_reduce(xmul(c, (i,), ci, xinv(images[i - 1])), g))
            for i in range(1, g + 1)
        )

    letters = [i for i in range(1, g + 1)] + [-i for i in range(1, g + 1)]
    beam = [((), score(()))]
    seen = {()}
    for _ in range(radius):
        nxt = []
        for c, _s in beam:
            for l in letters:
                cand = dehn_reduce(c + (l,), g)
                if cand in seen:
                    continue
                seen.add(cand)
                s = score(cand)
                if s == 0:
                    return cand
                nxt.append((cand, s))
        if not nxt:
            return None
        nxt.sort(key=lambda t: (t[1], len(t[0]), t[0]))
        beam = nxt[:width]
    return None


@dataclass
class ConjugacyResult:
    status: str
    conjugator: XWord | None = None


def find_inner_conjugator(table, g: int, radius=None, hint=None) -> ConjugacyResult:
    """Decide whether the automorphism given by table is conjugation by
    some u in G_g, i.e. table(x_i) = u x_i u^-1 in the quotient for all
    i. Returns Verified with the conjugator, or Inconclusive (bounded
    search; never falsely refutes)."""
    images = [dehn_reduce(table[i - 1], g) for i in range(1, g + 1)]

    def valid(c):
        return all(_conjugates_to(c, images[i - 1], i, g) for i in range(1, g + 1))

    if hint is not None:
        if valid(hint):
            return ConjugacyResult(VERIFIED, hint)
        return ConjugacyResult(INCONCLUSIVE)
    for cand in _candidate_conjugators(images, g):
        if valid(cand):
            return ConjugacyResult(VERIFIED, cand)
    if radius is None:
        radius = 2 * max((len(im) for im in images), default=1)
    found = _beam_search(images, g, radius)
    if found is not None and valid(found):
        return ConjugacyResult(VERIFIED, found)
    return ConjugacyResult(INCONCLUSIVE)
