"""Command-line verification tool.

    regobs <command> <scenario.json> [--report text|json] [--stop-on-first-failure]

Each command reads one scenario, runs a fixed sequence of checks and prints
the outputs it computed together with a pass/fail line per check.  Exit
status is 0 when every check passes, 1 when some check fails (the report
shows a witness) and 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .algebra import (
    AlmostBialgebra,
    ObstructedAlgebra,
    ObstructedCoalgebra,
    check_regular_algebra,
    check_regular_coalgebra,
    convolution,
    dual_comodule,
    dualize_algebra,
    dualize_bialgebra,
    dualize_coalgebra,
    pairing_identities,
)
from .chains import StarChain, build_default_chain, reduce_4_to_2
from .cocycle import (
    Cocycle,
    CocycleReport,
    LiftData,
    RepresentedCategory,
    category_from_cycle,
    cocycle_morphism_check,
    MorphismKind,
    obstruction_degree,
    obstruction_relations,
    verify_cocycle,
)
from .errors import InternalConsistencyError, RegObsError, SchemaError
from .geninverse import generalized_inverse, inverse_report, lemma3_report, projector_identities, reflexive_from_inner
from .linalg import Matrix, Subspace, complement, format_fraction, image, kernel, witness_vector
from .monoidal import (
    FunctorData,
    dual_cocycle,
    functor_report,
    natural_transformation_check,
    pairing_report,
    tensor_cocycles,
)
from .scenario import Scenario, load_scenario
from .tqft import Boundary, Generator, Signature, TqftAssignment, check_n_regular_tqft, evaluate, glue


@dataclass(frozen=True)
class Check:
    law: str
    anchor: str
    passed: bool
    witness: Matrix | None = None
    detail: str | None = None


@dataclass(frozen=True)
class Output:
    name: str
    value: object


@dataclass(frozen=True)
class Verdict:
    command: str
    kind: str
    checks: tuple[Check, ...]
    outputs: tuple[Output, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


Step = Iterator["Check | Output"]


def _vec(m: Matrix) -> str:
    return "(" + ", ".join(format_fraction(x) for x in m.col_at(0)) + ")"


def _equal(law: str, anchor: str, lhs: Matrix, rhs: Matrix) -> Check:
    """Compare two maps; on failure attach the first basis vector on which
    they differ and both images of it."""
    if lhs == rhs:
        return Check(law, anchor, True)
    w = witness_vector(lhs, rhs)
    if w is None:
        return Check(law, anchor, False, detail=f"shapes {lhs.shape} and {rhs.shape} differ")
    j = next(k for k in range(w.nrows) if w[k, 0])
    detail = f"on e_{j + 1}: left side gives {_vec(lhs @ w)}, right side gives {_vec(rhs @ w)}"
    return Check(law, anchor, False, w, detail)


def _flag(law: str, anchor: str, ok: bool, detail: str = "the two sides differ") -> Check:
    return Check(law, anchor, ok, detail=None if ok else detail)


# -- scenario builders -------------------------------------------------------------


def _category(p: dict) -> RepresentedCategory:
    arrows = [(name, a["source"], a["target"], a["matrix"]) for name, a in p["arrows"].items()]
    return RepresentedCategory(p["objects"], arrows)


def _cocycles(s: Scenario) -> list[Cocycle]:
    p = s.payload
    if s.kind == "cocycle":
        return [category_from_cycle(p["maps"], p.get("objects"), p.get("arrows"))[1]]
    cat = _category(p)
    return [cat.cocycle(*names) for names in p["cocycles"]]


def _regular(c: Cocycle, label: str) -> Iterator[Check]:
    report = verify_cocycle(c)
    arrows = ", ".join(c.arrows)
    if report:
        yield Check(f"{label} ({arrows}) is regular", "f_i∘f_{i-1}∘…∘f_{i+1}∘f_i = f_i for every i", True)
    else:
        k = report.failing_index
        f = c.maps[k - 1]
        lhs = f @ c.loop_at(k - 1)
        chk = _equal(f"{label} ({arrows}) is regular", "f_i∘f_{i-1}∘…∘f_{i+1}∘f_i = f_i for every i", lhs, f)
        yield Check(chk.law, chk.anchor, False, chk.witness, f"at {c.arrows[k - 1]} {chk.detail}")
    return report


def _obstruction_outputs(report: CocycleReport, label: str) -> Step:
    ob = report.obstruction
    for obj, e in zip(ob.objects, ob.endomaps):
        yield Output(f"{label} obstruction at {obj}", e)
    rel = obstruction_relations(report.cocycle, ob)
    yield _flag(f"{label} absorbs its obstruction", "f_i∘e_{X_i} = f_i", all(r[0] for r in rel))
    yield _flag(f"{label} absorbs its obstruction", "e_{X_{i+1}}∘f_i = f_i", all(r[1] for r in rel))
    yield _flag(f"{label} obstruction is idempotent", "e_{X_i}∘e_{X_i} = e_{X_i}", all(r[2] for r in rel))


def _need(s: Scenario, key: str, count: int = 1) -> None:
    cs = s.payload.get(key)
    if cs is None or len(cs) < count:
        raise SchemaError(f"this command needs at least {count} entries", key)


# -- commands ----------------------------------------------------------------------


def cmd_ginverse(s: Scenario) -> Step:
    p = s.payload
    f = p["matrix"]
    m = Subspace.span(p["m"], f.ncols) if "m" in p else complement(kernel(f))
    n = Subspace.span(p["n"], f.nrows) if "n" in p else complement(image(f))
    g = generalized_inverse(f, m, n)
    yield Output("f", f)
    yield Output("g", g)
    yield Output("M", str(m))
    yield Output("N", str(n))
    yield _equal("inner inverse", "f∘g∘f = f", f @ g @ f, f)
    yield _equal("outer inverse", "g∘f∘g = g", g @ f @ g, g)
    yield _flag("image prescribed", "Im g = M", image(g) == m)
    yield _flag("kernel prescribed", "Ker g = N", kernel(g) == n)
    for anchor, ok in projector_identities(f, g).items():
        yield _flag("range projector", anchor, ok)
    rep = lemma3_report(f, g)
    yield Output("Im f", str(rep.im_f))
    yield Output("Ker f", str(rep.ker_f))
    yield Output("Im g", str(rep.im_g))
    yield Output("Ker g", str(rep.ker_g))
    for anchor, ok in rep.checks.items():
        yield _flag("image and kernel", anchor, ok)
    yield _flag("dimension count", "dim Im g + dim Ker f = dim X", rep.im_g.dim + rep.ker_f.dim == f.ncols)
    if "inner" in p:
        h = p["inner"]
        yield _equal("supplied inner inverse", "f∘h∘f = f", f @ h @ f, f)
        if inverse_report(f, h).is_inner:
            r = reflexive_from_inner(f, h)
            yield Output("h∘f∘h", r)
            yield _equal("reflexive from inner", "f∘(h∘f∘h)∘f = f", f @ r @ f, f)
            yield _equal("reflexive from inner", "(h∘f∘h)∘f∘(h∘f∘h) = h∘f∘h", r @ f @ r, r)


def cmd_check_chain(s: Scenario) -> Step:
    p = s.payload
    chain = StarChain(p["maps"]) if "maps" in p else build_default_chain(p["matrix"], p["length"])
    for i, m in enumerate(chain.maps):
        yield Output(f"m{i}", m)
    ok = True
    for i, m in enumerate(chain.maps):
        c = _equal(f"cyclic identity at m{i}", "m_i∘m_{i+1}∘…∘m_{i+n-1}∘m_i = m_i", chain.cycle_product(i) @ m, m)
        ok &= c.passed
        yield c
    if not ok:
        return
    proj = chain.cycle_product(0)
    yield Output("P", proj)
    yield _equal("higher projector", "P∘P = P", proj @ proj, proj)
    yield _equal("higher projector", "P∘f = f", proj @ chain.f, chain.f)
    if chain.n == 4:
        applies = reduce_4_to_2(chain)
        yield Output("4-to-2 hypotheses", "hold" if applies else "do not hold")
        if applies:
            f, f1, f2, _ = chain.maps
            yield _equal("4-to-2 reduction", "f∘f*∘f = f", f @ f1 @ f, f)
            yield _equal("4-to-2 reduction", "f*∘f**∘f* = f*", f1 @ f2 @ f1, f1)


def cmd_verify_cocycle(s: Scenario) -> Step:
    cocycles = _cocycles(s)
    reports = []
    for k, c in enumerate(cocycles, 1):
        report = yield from _regular(c, f"cocycle {k}")
        reports.append(report)
        if report:
            yield from _obstruction_outputs(report, f"cocycle {k}")
            yield Output(f"cocycle {k} obstruction", "trivial" if report.trivial else "nontrivial")
    if all(reports):
        obj = s.payload.get("object", cocycles[0].objects[0])
        yield Output(f"degree at {obj}", obstruction_degree([c for c in cocycles if obj in c.objects], obj))


def cmd_obstruction_degree(s: Scenario) -> Step:
    cocycles = _cocycles(s)
    obj = s.payload.get("object", cocycles[0].objects[0])
    ok = True
    for k, c in enumerate(cocycles, 1):
        report = yield from _regular(c, f"cocycle {k}")
        ok &= bool(report)
    if ok:
        yield Output("object", obj)
        yield Output("cocycles considered", len(cocycles))
        yield Output("degree", obstruction_degree(cocycles, obj))


def cmd_lift(s: Scenario) -> Step:
    p = s.payload
    data = LiftData(p["inclusions"], p["projections"], p["small_maps"])
    n = data.n
    ok = True
    for i in range(n):
        pi, iota = data.projections[i], data.inclusions[i]
        c = _equal(f"retraction {i + 1}", "π_i∘ι_i = id_{Y_i}", pi @ iota, Matrix.identity(iota.ncols))
        ok &= c.passed
        yield c
    for i in range(n):
        loop = Matrix.identity(data.small_dims[i])
        for k in range(n):
            loop = data.small_maps[(i + k) % n] @ loop
        c = _equal(f"small cycle from Y_{i + 1}", "a_{i-1}∘…∘a_{i+1}∘a_i = id_{Y_i}", loop, Matrix.identity(data.small_dims[i]))
        ok &= c.passed
        yield c
    if not ok:
        return
    maps = [data.inclusions[(i + 1) % n] @ data.small_maps[i] @ data.projections[i] for i in range(n)]
    _, c = category_from_cycle(maps)
    for i, f in enumerate(maps):
        yield Output(f"f{i + 1}", f)
    report = yield from _regular(c, "lifted cocycle")
    if not report:
        return
    yield from _obstruction_outputs(report, "lifted cocycle")
    for i in range(n):
        e = report.obstruction[i]
        yield _equal(f"obstruction at X{i + 1}", "e_{X_i} = ι_i∘π_i", e, data.inclusions[i] @ data.projections[i])
        yield _flag(f"obstruction rank at X{i + 1}", "rank e_{X_i} = dim Y_i", e.rank() == data.small_dims[i],
                    f"rank {e.rank()}, dim Y = {data.small_dims[i]}")


def cmd_cocycle_morphism(s: Scenario) -> Step:
    if s.kind != "category":
        raise SchemaError("cocycle-morphism needs a category scenario", "kind")
    _need(s, "cocycles", 2)
    _need(s, "alphas", 1)
    c1, c2 = _cocycles(s)[:2]
    alphas = s.payload["alphas"]
    r1 = yield from _regular(c1, "source cocycle")
    r2 = yield from _regular(c2, "target cocycle")
    if not (r1 and r2):
        return
    kind = cocycle_morphism_check(c1, c2, alphas)
    n = c1.n
    for i in range(n):
        yield _equal(f"square {i + 1}", "α_{i+1}∘f_i = g_i∘α_i", alphas[(i + 1) % n] @ c1.maps[i], c2.maps[i] @ alphas[i])
    yield Output("classification", kind.value)
    if kind is MorphismKind.EQUIVALENCE:
        back = cocycle_morphism_check(c2, c1, [a.inverse() for a in alphas])
        yield _flag("inverse ladder", "α_{i+1}^-1∘g_i = f_i∘α_i^-1", back is not MorphismKind.NOT_A_MORPHISM)


def cmd_tensor(s: Scenario) -> Step:
    if s.kind != "category":
        raise SchemaError("tensor needs a category scenario", "kind")
    _need(s, "cocycles", 2)
    c1, c2 = _cocycles(s)[:2]
    r1 = yield from _regular(c1, "first factor")
    r2 = yield from _regular(c2, "second factor")
    if not (r1 and r2):
        return
    t = tensor_cocycles(c1, c2)
    for name, f in zip(t.arrows, t.maps):
        yield Output(name, f)
    rt = yield from _regular(t, "tensor product")
    for i, obj in enumerate(t.objects):
        yield _equal(f"obstruction at {obj}", "e_{X⊗Y} = e_X ⊗ e_Y", rt.obstruction[i],
                     r1.obstruction[i].kron(r2.obstruction[i]))


def cmd_dual(s: Scenario) -> Step:
    for k, c in enumerate(_cocycles(s), 1):
        report = yield from _regular(c, f"cocycle {k}")
        if not report:
            continue
        d = dual_cocycle(c)
        for name, f in zip(d.arrows, d.maps):
            yield Output(f"cocycle {k} {name}", f)
        rd = yield from _regular(d, f"dual of cocycle {k}")
        n = c.n
        for i, obj in enumerate(c.objects):
            yield _equal(f"dual obstruction at {obj}*", "e_{X*} = (e_X)^T", rd.obstruction[(n - i) % n],
                         report.obstruction[i].T)
        yield _flag(f"double dual of cocycle {k}", "(C*)* = C", dual_cocycle(d).same_data(c))


def cmd_pairing(s: Scenario) -> Step:
    for k, c in enumerate(_cocycles(s), 1):
        report = yield from _regular(c, f"cocycle {k}")
        if not report:
            continue
        rep = pairing_report(c)
        for name, ok in zip(c.arrows, rep.adjunction):
            yield _flag(f"cocycle {k} pairing adjoint for {name}", "⟨f*ξ, x⟩ = ⟨ξ, f x⟩", ok)
        for obj, ok in zip(c.objects, rep.obstruction_symmetry):
            yield _flag(f"cocycle {k} pairing symmetric at {obj}", "⟨e*ξ, x⟩ = ⟨ξ, e x⟩", ok)


def cmd_functor_check(s: Scenario) -> Step:
    p = s.payload
    src, dst = _category(p["source"]), _category(p["target"])
    cocycles = [src.cocycle(*names) for names in p["cocycles"]]
    F = FunctorData(p["object_map"], p["arrow_map"], p.get("transports", {}))
    ok = True
    for k, c in enumerate(cocycles, 1):
        report = yield from _regular(c, f"source cocycle {k}")
        ok &= bool(report)
    if not ok:
        return
    rep = functor_report(src, dst, F, cocycles)
    detail = "; ".join(rep.failures)
    yield _flag("functor preserves composites", "F(g∘f) = F(g)∘F(f)", rep.composition, detail)
    yield _flag("functor preserves obstructions", "F(e_X) = e_{F X}", rep.obstruction, detail)
    yield _flag("image absorbs its obstruction", "F(f_i)∘e_{F X_i} = F(f_i)", rep.absorption, detail)
    if "natural" in p:
        nat = p["natural"]
        G = FunctorData(nat["object_map"], nat["arrow_map"], nat.get("transports", {}))
        v = natural_transformation_check(dst, F, G, nat["components"], cocycles)
        where = None if v.failing_square is None else f"cocycle {v.failing_square[0] + 1}, arrow {v.failing_square[1]}"
        yield _flag("naturality", "s_{X_{i+1}}∘F(f_i) = G(f_i)∘s_{X_i}", v.holds, f"square fails at {where}")


def _algebra(p: dict) -> ObstructedAlgebra:
    return ObstructedAlgebra(p["dim"], p["mult"], p["obstruction"])


def _bialgebra(p: dict) -> AlmostBialgebra:
    alg = _algebra(p)
    coalg = ObstructedCoalgebra(p["dim"], p["comult"], p["obstruction"])
    unit = Matrix.column(p["unit"]) if "unit" in p else None
    counit = Matrix.row(p["counit"]) if "counit" in p else None
    return AlmostBialgebra(alg, coalg, unit, counit)


def cmd_algebra_check(s: Scenario) -> Step:
    p = s.payload
    a = _algebra(p)
    e = a.obstruction
    yield _equal("regular algebra", "m∘(e⊗e) = e∘m", a.mult @ e.kron(e), e @ a.mult)
    if check_regular_algebra(a):
        c = dualize_algebra(a)
        yield _flag("dual is a regular coalgebra", "Δ*∘e* = (e*⊗e*)∘Δ*", check_regular_coalgebra(c))
        yield _flag("duality pairing", "⟨Δ*ξ, x⊗y⟩ = ⟨ξ, m(x⊗y)⟩", pairing_identities(a, c))
        yield _flag("double dual", "(A*)* = A", dualize_coalgebra(c) == a)
    if s.kind == "bialgebra":
        b = _bialgebra(p)
        co = b.coalgebra
        yield _equal("regular coalgebra", "Δ∘e = (e⊗e)∘Δ", co.comult @ e, e.kron(e) @ co.comult)
        if check_regular_algebra(a) and check_regular_coalgebra(co):
            yield _flag("double dual bialgebra", "(B*)* = B", dualize_bialgebra(dualize_bialgebra(b)) == b)


def cmd_hopf_check(s: Scenario) -> Step:
    if s.kind != "bialgebra":
        raise SchemaError("hopf-check needs a bialgebra scenario", "kind")
    if "antipode" not in s.payload:
        raise SchemaError("missing required key", "antipode")
    b = _bialgebra(s.payload)
    S, i = s.payload["antipode"], Matrix.identity(b.dim)
    if S.shape != i.shape:
        raise SchemaError(f"antipode must be {b.dim}x{b.dim}", "antipode")
    mult = _equal("antipode respects the product", "S∘m = m∘(S⊗S)", S @ b.mult, b.mult @ S.kron(S))
    yield mult
    if not mult.passed:
        return
    left, right = convolution(b, i, S), convolution(b, S, i)
    yield Output("id⋆S", left)
    yield Output("S⋆id", right)
    yield _equal("almost Hopf", "S⋆id⋆S = S", convolution(b, right, S), S)
    yield _equal("almost Hopf", "id⋆S⋆id = id", convolution(b, left, i), i)


def cmd_module_check(s: Scenario) -> Step:
    p = s.payload
    a = _algebra(p["algebra"])
    d, rho, e_m = p["module_dim"], p["action"], p["module_obstruction"]
    if rho.shape != (d, a.dim * d):
        raise SchemaError(f"action must be {d}x{a.dim * d}", "action")
    if e_m.shape != (d, d):
        raise SchemaError(f"module obstruction must be {d}x{d}", "module_obstruction")
    im, ia = Matrix.identity(d), Matrix.identity(a.dim)
    yield _equal("module obstruction is idempotent", "e_M∘e_M = e_M", e_m @ e_m, e_m)
    if not e_m.is_idempotent():
        return
    yield _equal("module associativity", "ρ∘(m⊗id) = ρ∘(id⊗ρ)", rho @ a.mult.kron(im), rho @ ia.kron(rho))
    yield _equal("regular module", "ρ∘(e_A⊗e_M) = e_M∘ρ", rho @ a.obstruction.kron(e_m), e_m @ rho)
    c, delta, e_c = dual_comodule(a, rho, e_m)
    yield Output("coaction", delta)
    yield _equal("dual comodule coassociativity", "(Δ⊗id)∘δ = (id⊗δ)∘δ", c.comult.kron(im) @ delta,
                 ia.kron(delta) @ delta)
    yield _equal("regular dual comodule", "(e_A⊗e_M)∘δ = δ∘e_M", c.obstruction.kron(e_c) @ delta, delta @ e_c)


def _tqft(p: dict) -> tuple[Signature, TqftAssignment, list]:
    gens = [
        Generator(tag, Boundary.of(*g["in"]), Boundary.of(*g["out"]), g.get("opposite"), g.get("cylinder", False))
        for tag, g in p["generators"].items()
    ]
    sig = Signature(p["labels"], gens)
    F = TqftAssignment(sig, p["labels"], {tag: g["map"] for tag, g in p["generators"].items() if "map" in g})
    cycle = []
    for item in p["cycle"]:
        inc = Boundary.of(*item["in"]) if "in" in item else None
        out = Boundary.of(*item["out"]) if "out" in item else None
        cycle.append(sig.interaction(item["word"], inc, out))
    return sig, F, cycle


def cmd_tqft_check(s: Scenario) -> Step:
    sig, F, cycle = _tqft(s.payload)
    yield _flag("empty boundary", "dim F(∅) = 1", F.boundary_dim(Boundary()) == 1)
    for k, m in enumerate(cycle, 1):
        yield Output(f"M{k}", str(m))
        cyl = sig.cylinder(m.incoming)
        yield _equal(f"cylinder neutrality for M{k}", "F(Σ×I ∘ M) = F(M)", evaluate(F, glue(cyl, m)), evaluate(F, m))
    n = len(cycle)
    for k in range(n if n > 1 else 0):
        m1, m2 = cycle[k], cycle[(k + 1) % n]
        yield _equal(f"functoriality for M{(k + 1) % n + 1}∘M{k + 1}", "F(M'∘M) = F(M')∘F(M)",
                     evaluate(F, glue(m1, m2)), evaluate(F, m2) @ evaluate(F, m1))
    report = check_n_regular_tqft(F, cycle)
    c = report.cocycle
    for name, f in zip(c.arrows, c.maps):
        yield Output(f"F({name})", f)
    report = yield from _regular(c, "evaluated cycle")
    if report:
        yield from _obstruction_outputs(report, "evaluated cycle")
        if report.trivial:
            yield Output("regularity", "trivial (time reversible)")
        else:
            yield Output("regularity", f"{c.n}-regular with nontrivial obstruction")


COMMANDS: dict[str, tuple[tuple[str, ...], Callable[[Scenario], Step]]] = {
    "ginverse": (("matrix",), cmd_ginverse),
    "check-chain": (("chain",), cmd_check_chain),
    "verify-cocycle": (("category", "cocycle"), cmd_verify_cocycle),
    "obstruction-degree": (("category", "cocycle"), cmd_obstruction_degree),
    "lift": (("lift",), cmd_lift),
    "cocycle-morphism": (("category",), cmd_cocycle_morphism),
    "tensor": (("category",), cmd_tensor),
    "dual": (("category", "cocycle"), cmd_dual),
    "pairing": (("category", "cocycle"), cmd_pairing),
    "functor-check": (("functor",), cmd_functor_check),
    "algebra-check": (("algebra", "bialgebra"), cmd_algebra_check),
    "hopf-check": (("bialgebra",), cmd_hopf_check),
    "module-check": (("module",), cmd_module_check),
    "tqft-check": (("tqft",), cmd_tqft_check),
}


def run(command: str, scenario: Scenario, stop_on_first_failure: bool = False) -> Verdict:
    """Run one command on a loaded scenario; input problems raise ``InputError``."""
    try:
        kinds, fn = COMMANDS[command]
    except KeyError:
        raise SchemaError(f"unknown command {command!r}") from None
    if scenario.kind not in kinds:
        raise SchemaError(f"{command} accepts {' or '.join(kinds)} scenarios, not {scenario.kind}", "kind")
    checks, outputs = [], []
    for item in fn(scenario):
        if isinstance(item, Output):
            outputs.append(item)
            continue
        checks.append(item)
        if stop_on_first_failure and not item.passed:
            break
    return Verdict(command, scenario.kind, tuple(checks), tuple(outputs))


# -- rendering ---------------------------------------------------------------------


def _plain(value):
    if isinstance(value, Matrix):
        return value.to_lists()
    return value


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "command": v.command,
        "kind": v.kind,
        "passed": v.passed,
        "checks": [
            {
                "law": c.law,
                "anchor": c.anchor,
                "passed": c.passed,
                "witness": None if c.witness is None else [format_fraction(x) for x in c.witness.col_at(0)],
                "detail": c.detail,
            }
            for c in v.checks
        ],
        "outputs": [{"name": o.name, "value": _plain(o.value)} for o in v.outputs],
    }


def render_json(v: Verdict) -> str:
    return json.dumps(verdict_to_dict(v), indent=2, ensure_ascii=False) + "\n"


def render_text(v: Verdict) -> str:
    lines = [f"{v.command} ({v.kind} scenario)"]
    if v.outputs:
        lines.append("outputs:")
        for o in v.outputs:
            if isinstance(o.value, Matrix):
                lines.append(f"  {o.name} =")
                lines.append(o.value.pretty("    "))
            else:
                lines.append(f"  {o.name}: {o.value}")
    lines.append("checks:")
    for c in v.checks:
        lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.law}: {c.anchor}")
        if not c.passed and c.detail:
            lines.append(f"         counterexample {c.detail}")
    failed = sum(not c.passed for c in v.checks)
    total = len(v.checks)
    if failed:
        lines.append(f"verdict: FAIL ({failed} of {total} checks failed)")
    else:
        lines.append(f"verdict: pass ({total} check{'' if total == 1 else 's'})")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regobs", description="Exact verification of generalized inverses, "
                                 "regular cocycles and their obstructions.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("scenario", help="path to a JSON scenario file")
    ap.add_argument("--report", choices=("text", "json"), default="text")
    ap.add_argument("--stop-on-first-failure", action="store_true")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scenario = load_scenario(args.scenario)
        verdict = run(args.command, scenario, args.stop_on_first_failure)
    except InternalConsistencyError:
        raise
    except RegObsError as exc:
        print(f"regobs: error: {exc}", file=sys.stderr)
        return 2
    out = render_json(verdict) if args.report == "json" else render_text(verdict)
    sys.stdout.write(out)
    return 0 if verdict.passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
