"""Step-by-step replay of recorded relation derivations.

A script is a JSON fixture holding a start word, an end word, and a
list of rewrite steps. The replayer executes the steps on a raw
(unreduced) letter sequence and checks three things:

* each applied rewrite matches the current word letter-for-letter at
  the stated position;
* each rewrite is licensed by a relation of the group: the freely
  reduced word match * replace^-1 must be conjugate in the free group
  to a cyclic rotation of the relation's relator (or its inverse);
* the final sequence equals the declared end word exactly, and the
  endpoint equation holds in the free-group-automorphism
  representation at the script's declared tier.

Scripts may depend on other scripts ("uses"); a dependency is replayed
first and its conclusion becomes available as the relation
("script:<name>", ()).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .words import Word, parse_raw, fmt, free_reduce, inverse, concat, cyclic_reduce
from .catalogue import relation_index, KMAX
from .presentations import expansion_env
from . import pi1_action

SCRIPT_DIR = Path(__file__).parent / "fixtures" / "scripts"


class StepMismatch(Exception):
    def __init__(self, script: str, step: int, message: str):
        super().__init__(f"script {script!r} step {step}: {message}")
        self.script = script
        self.step = step


@dataclass(frozen=True)
class ReplayReport:
    name: str
    genus: int
    boundary: int
    steps: int
    tier: int
    w_power: int  # conjugation exponent certified at tier 2, else 0


def _raw_inverse(seq):
    return [(gen, -sign) for gen, sign in reversed(seq)]


def _rotations(w: Word):
    return {w[i:] + w[:i] for i in range(max(len(w), 1))}


def _licensed(match: Word, replace: Word, lhs: Word, rhs: Word) -> bool:
    """match -> replace is a consequence of the single relation lhs = rhs."""
    s = cyclic_reduce(free_reduce(concat(match, inverse(replace))))[0]
    r = cyclic_reduce(free_reduce(concat(lhs, inverse(rhs))))[0]
    if not s:
        return True  # freely trivial rewrite
    return s in _rotations(r) or s in _rotations(inverse(r))


def load_script(name: str) -> dict:
    path = SCRIPT_DIR / f"{name}.json"
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def available_scripts() -> list:
    return sorted(p.stem for p in SCRIPT_DIR.glob("*.json"))


def _apply_step(name, i, word, step, index):
    op = step["op"]
    if op == "cancel":
        return list(free_reduce(tuple(word)))
    if op == "invert":
        return _raw_inverse(word)
    if op == "conjugate":
        aux = list(parse_raw(step["aux"]))
        return aux + word + _raw_inverse(aux)
    if op == "insert":
        at = step["at"]
        aux = list(parse_raw(step["aux"]))
        if not 0 <= at <= len(word):
            raise StepMismatch(name, i, f"insert position {at} out of range")
        return word[:at] + aux + _raw_inverse(aux) + word[at:]
    if op == "apply":
        key = (step["rel"], tuple(step.get("params", ())))
        if key not in index:
            raise StepMismatch(name, i, f"unknown relation {key}")
        lhs, rhs = index[key]
        if "dir" in step:
            match, replace = (lhs, rhs) if step["dir"] == "LtoR" else (rhs, lhs)
        else:
            match, replace = parse_raw(step["match"]), parse_raw(step["replace"])
            if not _licensed(match, replace, lhs, rhs):
                raise StepMismatch(
                    name, i,
                    f"rewrite {fmt(match)} -> {fmt(replace)} is not a"
                    f" consequence of {key}",
                )
        at = step["at"]
        got = tuple(word[at : at + len(match)])
        if got != match:
            raise StepMismatch(
                name, i,
                f"at position {at} expected {fmt(match)}, found {fmt(got)}",
            )
        return word[:at] + list(replace) + word[at + len(match):]
    raise StepMismatch(name, i, f"unknown op {op!r}")


def replay_script(name: str, _memo=None, _stack=None) -> ReplayReport:
    memo = {} if _memo is None else _memo
    stack = set() if _stack is None else _stack
    if name in memo:
        return memo[name]
    if name in stack:
        raise StepMismatch(name, -1, "dependency cycle")
    stack.add(name)
    data = load_script(name)
    g, n = data["genus"], data["boundary"]
    index = dict(relation_index(g, n))
    for dep in data.get("uses", ()):
        replay_script(dep, memo, stack)
        dd = load_script(dep)
        index[(f"script:{dep}", ())] = (parse_raw(dd["start"]), parse_raw(dd["end"]))
    word = list(parse_raw(data["start"]))
    for i, step in enumerate(data["steps"]):
        word = _apply_step(name, i, word, step, index)
    end = list(parse_raw(data["end"]))
    if word != end:
        raise StepMismatch(
            name, len(data["steps"]),
            f"final word {fmt(tuple(word))} != declared end {fmt(tuple(end))}",
        )

    tier = data["tier"]
    eq = concat(parse_raw(data["start"]), inverse(parse_raw(data["end"])))
    table = pi1_action.evaluate(eq, g, expansion_env(g, n))
    if tier == 1:
        assert table == pi1_action.identity_table(g), (
            f"script {name}: endpoint fails tier-1 table equality"
        )
        k = 0
    else:
        assert tier == 2, f"script {name}: unsupported tier {tier}"
        k = pi1_action.conjugation_exponent(table, g, KMAX)
        assert k is not None, f"script {name}: endpoint not inner up to W^k"
        pinned = data.get("w_power")
        assert pinned is None or pinned == k, (
            f"script {name}: exponent {k} != pinned {pinned}"
        )
    report = ReplayReport(name, g, n, len(data["steps"]), tier, k)
    memo[name] = report
    stack.discard(name)
    return report


def replay_all() -> list:
    memo = {}
    return [replay_script(name, memo) for name in available_scripts()]
