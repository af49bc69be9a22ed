"""Acceptance criteria, all at exact rational equality."""

import random
from itertools import product

import pytest

from symplie.checks import PASS, check_parts, multiplicity_ledger, run_check
from symplie.dsl import evaluate, format_value
from symplie.freelie import LieElement, lie_bracket, lyndon_basis, mobius, witt_dimension
from symplie.sprep import YoungDiagram, decompose, format_decomposition, freudenthal, pad_weights, weyl_dim
from symplie.spaces import decompose_space, h2_weights
from symplie.trees import derivation_bracket, eta, from_rooted, is_in_h, weld_bracket


def _status(ids, genera):
    bad = []
    for g in genera:
        for i in ids:
            r = run_check(i, g)
            if r.status != PASS:
                bad.append(f"{i}@g={g}: {r.status} {r.notes}")
    return bad


def test_c01_sample_session(criterion):
    xsi1 = evaluate("4brac[Ht[a1,a2,a1,a2],Ht[a3,b3,a3,b3]]", 4)
    out = format_value(evaluate("p[(1,2)(3,4)](C[1,2](C[1,2](X)))", 4, {"X": xsi1}))
    ok = out == "-576 (a1∧a2)⊗(a1∧a2)" and not _status(["sample-session"], [4])
    assert criterion(1, ok, f"sample session composite = {out}")


def test_c02_detector_table(criterion):
    bad = _status(["detector-table"], [3, 4, 5])
    assert criterion(2, not bad, "six detector values at g=3,4,5" + ("" if not bad else f" {bad}"))


def test_c03_projection(criterion):
    bad = _status(["closed-projection"], [3, 4, 5])
    assert criterion(3, not bad, "both detectors vanish on the [2^2]-projection at g=3,4,5" + ("" if not bad else f" {bad}"))


def test_c04_twist_value(criterion):
    bad = _status(["twist-value-h1", "twist-value-h2"], [4])
    assert criterion(4, not bad, "bounding twist value for h=1,2 at g=4" + ("" if not bad else f" {bad}"))


BRACKETS = ["bracket-[42]", "bracket-[31^3]", "bracket-[2^3]", "bracket-[31]", "bracket-[2]", "bracket-[21^2]"]
CYCLES = [
    "cycle-source",
    "cycle-[431]",
    "cycle-[32^21]",
    "cycle-[321]",
    "cycle-[21^2]",
    "cycle-[3^2]",
    "cycle-[2^21^2]",
    "cycle-[2^2]",
    "cycle-[1^2]",
]


def test_c05_bracket_cases(criterion):
    bad = _status(BRACKETS, [4, 5])
    assert criterion(5, not bad, "bracket images with detector outputs and table ranks at g=4,5" + ("" if not bad else f" {bad}"))


def test_c06_cycle_cases(criterion):
    bad = _status(CYCLES, [4])
    assert criterion(6, not bad, "eight abelian cycle cases at g=4" + ("" if not bad else f" {bad}"))


def test_c07_chi_table(criterion):
    bad = _status(["closed-chi-table"], [4, 5])
    assert criterion(7, not bad, "3x3 chi table, memberships, rank 3 at g=4,5" + ("" if not bad else f" {bad}"))


def test_c08_first_two_reductions():
    assert not _status(["closed-[21^2]-first", "closed-[21^2]-second"], [4])


@pytest.mark.xfail(
    strict=True,
    reason="the third reduction is not zero: the operator word sends the product of gluing-map terms "
    "to 72(g+2)/(g+1)^2 (a1∧a2∧a3)⊗a1; the full projected vector still gives a nonzero value",
)
def test_c08_reductions(criterion):
    first = run_check("closed-[21^2]-first", 4)
    second = run_check("closed-[21^2]-second", 4)
    third = run_check("closed-[21^2]-third", 4)
    survives = run_check("closed-[21^2]-survives", 4)
    ok = all(r.status == PASS for r in (first, second, third))
    criterion(
        8,
        ok,
        f"reductions at g=4: first {first.status}, second {second.status}, third {third.status}"
        + (
            ""
            if ok
            else f"; third reduction computes {_part(third, 'detector after the full word')} instead of 0, "
            f"while the complete projected wedge gives {_part(survives, 'detector on the projected wedge')} "
            f"(closed-[21^2]-survives: {survives.status})"
        ),
    )
    assert ok


def _part(result, label):
    for item in result.computed.split("; "):
        if item.startswith(label + ": "):
            return item[len(label) + 2:]
    return "?"


def test_c09_tables(criterion):
    bad = _status(["decomposition-table", "h2-decomposition"], [2, 3, 4])
    dec = decompose_space("wedge2-h2", 4)
    total = sum(m * weyl_dim(lam, 4) for lam, m in dec.items())
    n = sum(h2_weights(4).values())
    ok = not bad and n == 336 and total == n * (n - 1) // 2 == 56280
    assert criterion(9, ok, f"tables at g=2,3,4; dim h(2)={n}; sum of weyl dimensions {total}" + ("" if not bad else f" {bad}"))


CLAIMS = {
    ("boundary", 4): "[42]+[31^3]+[2^3]+2[31]+[21^2]+2[2]",
    ("point", 4): "[42]+[31^3]+[2^3]+2[31]+[21^2]+2[2]",
    ("closed", 4): "[42]+[31^3]+[2^3]+[31]+[2]",
    ("boundary", 3): "[42]+[2^3]+2[31]+[21^2]+2[2]",
    ("point", 3): "[42]+[2^3]+2[31]+[21^2]+2[2]",
    ("closed", 3): "[42]+[2^3]+[31]+[2]",
    ("boundary", 2): "[42]+[31]+2[2]",
    ("point", 2): "[42]+[31]+2[2]",
    ("closed", 2): "[42]+[2]",
}


def test_c10_ledger(criterion):
    bad = []
    for (scope, g), claim in CLAIMS.items():
        led = multiplicity_ledger(g, scope)
        if format_decomposition(led.kernel) != claim or not led.closes:
            bad.append(f"{scope}@g={g}: {led.diff()}")
    assert criterion(10, not bad, "kernel columns and closure for three scopes at g=2,3,4" + ("" if not bad else f" {bad}"))


def _random_rooted(rng, g, leaves):
    if leaves == 1:
        return rng.randrange(2 * g)
    k = rng.randint(1, leaves - 1)
    return (_random_rooted(rng, g, k), _random_rooted(rng, g, leaves - k))


def _random_tree(rng, g, k):
    return from_rooted(rng.randrange(2 * g), _random_rooted(rng, g, k + 1))


def test_c11_property_suites(criterion):
    rng = random.Random(20240611)
    fails = []
    for n in range(100):
        g, k = 2 + n % 3, 1 + n % 4
        if not is_in_h(eta(_random_tree(rng, g, k))):
            fails.append("eta membership")
    for _ in range(20):
        g = rng.choice([2, 3])
        s, t = _random_tree(rng, g, rng.randint(1, 2)), _random_tree(rng, g, rng.randint(1, 2))
        if eta(weld_bracket(s, t)) != derivation_bracket(eta(s), eta(t), g):
            fails.append("weld vs derivation")
    for _ in range(30):
        g = rng.choice([2, 3])
        r = rng.randrange(2 * g)
        x, y, z = (_random_rooted(rng, g, rng.randint(1, 2)) for _ in range(3))
        if eta(from_rooted(r, (x, y))) + eta(from_rooted(r, (y, x))):
            fails.append("AS")
        if eta(from_rooted(r, ((x, y), z))) + eta(from_rooted(r, ((y, z), x))) + eta(from_rooted(r, ((z, x), y))):
            fails.append("IHX")
    for _ in range(30):
        g = rng.choice([1, 2, 3])
        x, y, z = (LieElement.letter(rng.randrange(2 * g)) for _ in range(3))
        y = lie_bracket(y, LieElement({rng.choice(lyndon_basis(2, g)): rng.randint(1, 5)}, 2))
        if lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y)):
            fails.append("Jacobi")
    for k, g in product(range(1, 6), range(1, 5)):
        n = 2 * g
        necklace = sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0) // k
        if not witt_dimension(k, g) == len(lyndon_basis(k, g)) == necklace:
            fails.append(f"Witt k={k} g={g}")
    for g in range(1, 5):
        for size in range(1, 5):
            for rows in _partitions(size):
                if len(rows) > g:
                    continue
                lam = YoungDiagram(rows)
                table = pad_weights(freudenthal(lam, g), g)
                if sum(table.values()) != weyl_dim(lam, g) or decompose(table, g) != {lam: 1}:
                    fails.append(f"Freudenthal {lam} g={g}")
    assert criterion(11, not fails, "eta membership, weld/derivation, AS, IHX, Jacobi, Witt, Freudenthal round trip" + ("" if not fails else f" {sorted(set(fails))}"))


def _partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def test_c12_highest_weight_vectors(criterion):
    ids = ["highest-weights-degree2"] + BRACKETS + CYCLES[1:] + ["closed-chi-table", "closed-[21^2]-survives"]
    certified, bad = 0, []
    for i in ids:
        for p in check_parts(i, 4):
            if "highest weight vector of" in p.label:
                certified += 1
                if not p.ok:
                    bad.append(f"{i}: {p.label}")
    ok = not bad and certified >= 20
    assert criterion(12, ok, f"{certified} highest weight certifications at g=4" + ("" if not bad else f" {bad}"))
