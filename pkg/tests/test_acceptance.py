"""The eleven acceptance criteria, each printed as one PASS/FAIL line.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.  All comparisons are exact.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time

import pytest

from cli_cases import CASES, FIXTURES, golden_path, run_cli
from conftest import corpus, record_acceptance
from oracles import as_matrix_rows, group_convolution, group_maps, is_reflexive_inverse
from regobs import instances
from regobs.algebra import (
    check_almost_hopf,
    check_regular_comodule,
    check_regular_module,
    convolution,
    coordinate_algebra,
    dual_comodule,
    dualize_algebra,
    dualize_coalgebra,
    group_algebra,
    group_inversion,
)
from regobs.chains import build_default_chain, check_star_chain, higher_projector, reduce_4_to_2
from regobs.cocycle import lift_construct, lift_star_chain, obstruction_degree, obstruction_relations, verify_cocycle
from regobs.errors import OddChainLength, TheoremContradiction
from regobs.generators import random_lift_chain_data, random_lift_data
from regobs.geninverse import generalized_inverse, lemma3_report, projector_identities
from regobs.linalg import Matrix, Subspace
from regobs.monoidal import dual_cocycle, pairing_check, tensor_cocycles
from regobs.tqft import EMPTY, Boundary, Generator, Signature, TqftAssignment, check_n_regular_tqft, evaluate, glue


def criterion_1():
    mats = corpus()
    start = time.perf_counter()
    bad = 0
    for f in mats:
        g = generalized_inverse(f)
        bad += not (f @ g @ f == f and g @ f @ g == g)
    elapsed = time.perf_counter() - start
    shapes_ok = all(1 <= d <= 6 for f in mats for d in f.shape)
    ok = bad == 0 and len(mats) >= 200 and shapes_ok and elapsed < 10
    return ok, f"{len(mats)} matrices, {bad} failures, {elapsed:.2f}s"


def criterion_2():
    bad = 0
    mats = corpus()
    for f in mats:
        g = generalized_inverse(f)
        rep = lemma3_report(f, g)
        ok = all(projector_identities(f, g).values()) and rep.all_hold
        ok &= rep.im_g.dim + rep.ker_f.dim == f.ncols
        bad += not ok
    return bad == 0, f"{len(mats)} matrices, {bad} failures"


def criterion_3():
    f = Matrix([[1], [0]])
    m = Subspace.full(1)
    n1, n2 = Subspace.span([[0, 1]], 2), Subspace.span([[1, 1]], 2)
    runs = {repr(generalized_inverse(f, m, n1)) for _ in range(5)}
    code = "from regobs import *; print(repr(generalized_inverse(Matrix([[1],[0]]), n=Subspace.span([[1,1]], 2))))"
    outs = {subprocess.run([sys.executable, "-c", code], capture_output=True).stdout for _ in range(2)}
    g1, g2 = generalized_inverse(f, m, n1), generalized_inverse(f, m, n2)
    ok = len(runs) == 1 and len(outs) == 1 and g1 != g2
    ok &= is_reflexive_inverse(f, g1) and is_reflexive_inverse(f, g2)
    ok &= g1 == Matrix([[1, 0]]) and g2 == Matrix([[1, -1]])
    return ok, f"N=span(0,1) gives {g1!r}, N=span(1,1) gives {g2!r}"


def criterion_4():
    bad = 0
    mats = corpus()
    for f in mats:
        for n in (2, 4, 6):
            chain = build_default_chain(f, n)
            p = higher_projector(chain) if check_star_chain(chain) else None
            bad += p is None or not (p @ p == p and p @ f == f)
    rejected = 0
    for n in (1, 3, 5):
        try:
            build_default_chain(mats[0], n)
        except OddChainLength:
            rejected += 1
    return bad == 0 and rejected == 3, f"{3 * len(mats)} chains, {bad} failures, {rejected}/3 odd lengths rejected"


def criterion_5():
    contradictions = declined = 0
    chains = [build_default_chain(f, 4) for f in corpus()]
    rng = random.Random(2024)
    chains += [lift_star_chain(random_lift_chain_data(rng)) for _ in range(100)]
    for chain in chains:
        try:
            declined += reduce_4_to_2(chain) is not True
        except TheoremContradiction:
            contradictions += 1
    return contradictions == 0 and declined == 0, (
        f"{len(chains)} chains, {contradictions} contradictions, {declined} declined")


def criterion_6():
    rng = random.Random(77)
    bad = 0
    for _ in range(100):
        data = random_lift_data(rng, rng.randint(1, 5), max_big=5, max_small=3)
        _, c, ob = lift_construct(data)
        ok = bool(verify_cocycle(c))
        ok &= all(ob[i].rank() == data.small_dims[i] for i in range(c.n))
        ok &= all(all(r) for r in obstruction_relations(c, ob))
        bad += not ok
    return bad == 0, f"100 lift instances, {bad} failures"


def criterion_7():
    cat = instances.mixed_category()
    got = (
        obstruction_degree([instances.invertible_pair()], "X1"),
        obstruction_degree([instances.idempotent_pair()], "X1"),
        obstruction_degree([cat.cocycle("a", "a_inv"), cat.cocycle("p1", "p2", "p3")], "X1"),
    )
    return got == ("trivial", 2, 3), f"degrees {got}"


def _cocycle_corpus():
    rng = random.Random(31)
    cs = [instances.invertible_pair(), instances.idempotent_pair(), instances.idempotent_loop()]
    cs += instances.brandt_cocycles()
    cs += [lift_construct(random_lift_data(rng, rng.randint(1, 4), max_big=3, max_small=2))[1] for _ in range(15)]
    return cs


def criterion_8():
    cs = _cocycle_corpus()
    pairs = bad = 0
    for c1 in cs:
        for c2 in cs:
            if c1.n != c2.n:
                continue
            pairs += 1
            t = verify_cocycle(tensor_cocycles(c1, c2))
            o1, o2 = verify_cocycle(c1).obstruction, verify_cocycle(c2).obstruction
            bad += not (t and all(t.obstruction[i] == o1[i].kron(o2[i]) for i in range(c1.n)))
    for c in cs:
        d = dual_cocycle(c)
        bad += not (verify_cocycle(d) and dual_cocycle(d).same_data(c) and pairing_check(c))
    return bad == 0, f"{pairs} tensor pairs and {len(cs)} duals, {bad} failures"


def criterion_9():
    ok = True
    for n in (2, 3):
        b, s = group_algebra(n), group_inversion(n)
        ok &= check_almost_hopf(b, s)
        ident, inv = group_maps(n)
        for (x, xd), (y, yd) in [((Matrix.identity(n), ident), (s, inv)), ((s, inv), (Matrix.identity(n), ident))]:
            ok &= convolution(b, x, y) == Matrix(as_matrix_rows(n, group_convolution(n, xd, yd)))
    a = coordinate_algebra(3, Matrix.diag(1, 0, 1))
    ok &= dualize_coalgebra(dualize_algebra(a)) == a
    modules = [
        (coordinate_algebra(2), 1, Matrix([[1, 0]]), Matrix([[1]])),
        (coordinate_algebra(2, Matrix.diag(1, 0)), 2, coordinate_algebra(2).mult, Matrix.diag(1, 0)),
    ]
    for alg, d, rho, e in modules:
        ok &= check_regular_module(alg, d, rho, e)
        ok &= check_regular_comodule(*_comodule_args(alg, d, rho, e))
    return ok, "Z2 and Z3 almost Hopf, convolutions match enumeration, duals round-trip"


def _comodule_args(alg, d, rho, e):
    c, delta, e_c = dual_comodule(alg, rho, e)
    return c, d, delta, e_c


def criterion_10():
    a, b = Boundary.of("a"), Boundary.of("b")
    sig = Signature(["a", "b"], [
        Generator("M1", a, b, "M2"), Generator("M2", b, a, "M1"),
        Generator("R", a, b, "Rop"), Generator("Rop", b, a, "R"),
        Generator("cyl", a, a, cylinder=True),
    ])
    A = Matrix([[1, 2], [1, 3]])
    P = Matrix.diag(1, 0)
    F = TqftAssignment(sig, {"a": 2, "b": 2}, {"M1": P, "M2": P, "R": A, "Rop": A.inverse()})
    pieces = [sig.interaction([t]) for t in ("M1", "M2", "R", "Rop", "cyl")]
    ok = True
    for m1 in pieces:
        for m2 in pieces:
            if m1.outgoing == m2.incoming:
                ok &= evaluate(F, glue(m1, m2)) == evaluate(F, m2) @ evaluate(F, m1)
    for m in pieces:
        ok &= evaluate(F, glue(sig.cylinder(m.incoming), m)) == evaluate(F, m)
        ok &= evaluate(F, glue(m, sig.cylinder(m.outgoing))) == evaluate(F, m)
    ok &= F.boundary_dim(EMPTY) == 1
    m1, m2 = pieces[0], pieces[1]
    ok &= evaluate(F, glue(glue(m1, m2), m1)) == evaluate(F, m1)
    ok &= evaluate(F, glue(glue(m2, m1), m2)) == evaluate(F, m2)
    pattern = check_n_regular_tqft(F, [m1, m2])
    ok &= pattern.regular and not pattern.trivial and list(pattern.obstruction.endomaps) == [P, P]
    reversible = check_n_regular_tqft(F, [pieces[2], pieces[3]])
    ok &= reversible.regular and reversible.trivial
    return ok, "functoriality, cylinders, F(∅), 2-regular pattern, reversible pair"


def criterion_11():
    mismatched = []
    for command, fixture, expected in CASES:
        for report in ("text", "json"):
            code, out, err = run_cli(command, fixture, report)
            golden = golden_path(command, fixture, report).read_text(encoding="utf-8")
            if code != expected or f"exit {code}\n{out}{err}" != golden:
                mismatched.append(f"{command}/{fixture}/{report}")
    args = [sys.executable, "-m", "regobs", "tqft-check", str(FIXTURES / "tqft_cup_cap.json")]
    runs = {subprocess.run(args, capture_output=True).stdout for _ in range(2)}
    commands = {c for c, _, _ in CASES}
    ok = not mismatched and len(runs) == 1 and len(commands) == 14
    return ok, f"{2 * len(CASES)} golden reports over {len(commands)} commands, {len(mismatched)} mismatches"


CRITERIA = [
    (1, "generalized-inverse laws on the corpus", criterion_1),
    (2, "projector and image/kernel identities", criterion_2),
    (3, "determinism and dependence on N", criterion_3),
    (4, "star chains n = 2, 4, 6 and odd rejection", criterion_4),
    (5, "4-to-2 reduction without contradiction", criterion_5),
    (6, "lift construction", criterion_6),
    (7, "obstruction degree fixtures", criterion_7),
    (8, "tensor, dual and pairing", criterion_8),
    (9, "almost Hopf and duality", criterion_9),
    (10, "TQFT toy", criterion_10),
    (11, "CLI golden files and exit codes", criterion_11),
]


def _line(number, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} ({detail})"


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    ok, detail = fn()
    line = _line(number, title, ok, detail)
    print(line)
    record_acceptance(line)
    assert ok, line


if __name__ == "__main__":
    results = [(n, t, *fn()) for n, t, fn in CRITERIA]
    for n, t, ok, detail in results:
        print(_line(n, t, ok, detail))
    sys.exit(0 if all(r[2] for r in results) else 1)
