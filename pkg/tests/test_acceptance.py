"""End-to-end acceptance checks, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line (printed immediately with
``-s`` and collected in the terminal summary).
"""
import random
import time
from contextlib import contextmanager
from math import comb

import pytest

from monocrystal import (
    Convention,
    MonomialCrystal,
    ProductSpec,
    classify_highest_pairs,
    decompose,
    fundamental_crystal,
    generate_component,
    multi_product,
    parse,
    predicted_product_decomposition,
    predicted_tensor_decomposition,
    ssyt_count,
    tensor_product,
    validate_axioms,
    verify_case,
)
from monocrystal.decomposition import L, Y, fundamental_graph, iter_cases


class Outcome:
    def __init__(self):
        self.failures: list[str] = []
        self.detail = ""

    def expect(self, ok, message):
        if not ok:
            self.failures.append(message)


@contextmanager
def criterion(log, number, title):
    outcome = Outcome()
    start = time.perf_counter()
    try:
        yield outcome
    except Exception as exc:
        outcome.failures.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    status = "FAIL" if outcome.failures else "PASS"
    extra = f" ({outcome.detail})" if outcome.detail else ""
    line = f"criterion {number}: {status} {title} [{elapsed:.3f}s]{extra}"
    if outcome.failures:
        line += " -- " + "; ".join(outcome.failures[:3])
    log.append(line)
    print(line)
    assert not outcome.failures, line


def ms(*weights):
    return tuple(sorted(weights))


SWEEP_N = range(2, 7)


@pytest.fixture(scope="module")
def sweep():
    """Brute-force reports for n in 2..6, all p, q, 1 <= m <= n+2, with wall time."""
    start = time.perf_counter()
    reports = [verify_case(*case) for n in SWEEP_N for case in iter_cases(n, n + 2, n_min=n)]
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def tensor_sweep():
    start = time.perf_counter()
    out = []
    for n in range(1, 6):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                graph = tensor_product(fundamental_graph(n, p), fundamental_graph(n, q))
                out.append(((n, p, q), graph, decompose(graph.nodes, graph)))
    return out, time.perf_counter() - start


LAMBDA5_PATH = [
    "Y_5(1)",
    "Y_5(2)^-1*Y_4(2)",
    "Y_4(3)^-1*Y_3(3)",
    "Y_3(4)^-1*Y_2(4)",
    "Y_2(5)^-1*Y_1(5)",
    "Y_1(6)^-1",
]

# entry 1 is f_2 Y_2(1) = Y_2(1) A_2(1)^-1, the branching node
LAMBDA2_NODES = [
    "Y_2(1)",
    "Y_3(1)*Y_2(2)^-1*Y_1(2)",
    "Y_4(1)*Y_3(2)^-1*Y_1(2)",
    "Y_3(1)*Y_1(3)^-1",
    "Y_5(1)*Y_4(2)^-1*Y_1(2)",
    "Y_4(1)*Y_3(2)^-1*Y_2(2)*Y_1(3)^-1",
    "Y_5(2)^-1*Y_1(2)",
    "Y_5(1)*Y_4(2)^-1*Y_2(2)*Y_1(3)^-1",
    "Y_4(1)*Y_2(3)^-1",
    "Y_5(2)^-1*Y_2(2)*Y_1(3)^-1",
    "Y_5(1)*Y_4(2)^-1*Y_3(2)*Y_2(3)^-1",
    "Y_5(2)^-1*Y_3(2)*Y_2(3)^-1",
    "Y_5(1)*Y_3(3)^-1",
    "Y_5(2)^-1*Y_4(2)*Y_3(3)^-1",
    "Y_4(3)^-1",
]


def test_criterion_1_lambda5_path(acceptance_log):
    with criterion(acceptance_log, 1, "B(L5) path from Y_5(1)") as c:
        ops = MonomialCrystal(Convention(5))
        start = time.perf_counter()
        graph = generate_component(Y(5, 5, 1), ops)
        elapsed = time.perf_counter() - start
        path = [parse(t, 5) for t in LAMBDA5_PATH]
        c.expect(set(graph.nodes) == set(path), "node set differs")
        order = sorted(graph.edges, key=lambda e: -e[1])
        c.expect(order == [(path[k], 5 - k, path[k + 1]) for k in range(5)], "edges differ")
        c.expect(elapsed < 1e-3, f"generation took {elapsed * 1e3:.3f} ms")
        c.detail = f"generation {elapsed * 1e3:.3f} ms"


def test_criterion_2_lambda2_graph(acceptance_log):
    with criterion(acceptance_log, 2, "B(L2) graph from Y_2(1)") as c:
        ops = MonomialCrystal(Convention(5))
        start = time.perf_counter()
        graph = generate_component(Y(5, 2, 1), ops)
        violations = validate_axioms(graph)
        elapsed = time.perf_counter() - start
        c.expect(set(graph.nodes) == {parse(t, 5) for t in LAMBDA2_NODES}, "node set differs")
        c.expect(violations == [], f"{len(violations)} axiom violations")
        branch = parse(LAMBDA2_NODES[1], 5)
        out_colors = sorted(i for s, i, _ in graph.edges if s == branch)
        c.expect(out_colors == [1, 3], f"outgoing colors {out_colors}")
        c.expect(graph.f(branch, 3) == parse(LAMBDA2_NODES[2], 5), "f_3 target")
        c.expect(graph.f(branch, 1) == parse(LAMBDA2_NODES[3], 5), "f_1 target")
        c.expect(graph.e(branch, 2) == Y(5, 2, 1), "e_2 target")
        c.expect(all(graph.e(branch, i) is None for i in (1, 3, 4, 5)), "extra e-arrows")
        c.expect(elapsed < 1e-2, f"took {elapsed * 1e3:.3f} ms")
        c.detail = f"{elapsed * 1e3:.3f} ms"


def test_criterion_3_examples(acceptance_log):
    cases = {
        (5, 5, 2, 1): ms(L(5, 5, 2)),
        (5, 5, 2, 2): ms(L(5, 5, 2), L(5, 1)),
        (5, 2, 2, 1): ms(L(5, 2, 2)),
        (5, 2, 2, 3): ms(L(5, 2, 2), L(5, 3, 1), L(5, 4)),
        (5, 2, 5, 5): ms(L(5, 2, 5), L(5, 1)),
    }
    with criterion(acceptance_log, 3, "five worked product examples") as c:
        start = time.perf_counter()
        for case, expected in cases.items():
            report = verify_case(*case)
            c.expect(report.computed == expected, f"{case}: computed {report.computed}")
            c.expect(report.predicted == expected, f"{case}: predicted {report.predicted}")
        elapsed = time.perf_counter() - start
        c.expect(elapsed < 1.0, f"took {elapsed:.3f} s")


def test_criterion_4_product_sweep(acceptance_log, sweep):
    with criterion(acceptance_log, 4, "product decomposition sweep n=2..6, m<=n+2") as c:
        reports, elapsed = sweep
        bad = [(r.n, r.p, r.q, r.m) for r in reports if r.match is not True]
        c.expect(not bad, f"mismatches at {bad[:5]}")
        c.expect(elapsed < 60, f"sweep took {elapsed:.1f} s")
        c.detail = f"{len(reports)} cases, {len(bad)} mismatches, sweep {elapsed:.1f} s"


def test_criterion_5_tensor_sweep(acceptance_log, tensor_sweep):
    with criterion(acceptance_log, 5, "tensor decomposition sweep n=1..5") as c:
        results, elapsed = tensor_sweep
        bad = [key for key, _, d in results if d.weights() != predicted_tensor_decomposition(*key)]
        c.expect(not bad, f"mismatches at {bad[:5]}")
        c.expect(elapsed < 30, f"took {elapsed:.1f} s")
        c.detail = f"{len(results)} cases, {len(bad)} mismatches, {elapsed:.1f} s"


def test_criterion_6_closure(acceptance_log, sweep):
    with criterion(acceptance_log, 6, "product sets are closed (sweep + 20 random triples)") as c:
        reports, _ = sweep
        c.expect(all(sum(r.sizes) == r.universe_size for r in reports), "sweep partition")
        rng = random.Random(20260)
        sizes = []
        for _ in range(20):
            n = rng.randint(1, 4)
            spec = ProductSpec(n, [(rng.randint(1, n), rng.randint(-2, 4)) for _ in range(3)])
            universe = multi_product(spec)
            result = decompose(universe, MonomialCrystal(Convention(n)))
            sizes.append(len(universe))
            c.expect(sum(x.size for x in result.components) == len(universe), f"{spec} partition")
        c.detail = f"{len(reports)} sweep cases, triple sizes {min(sizes)}..{max(sizes)}"


def test_criterion_7_rigidity(acceptance_log, sweep):
    with criterion(acceptance_log, 7, "every highest pair has first factor Y_p(m)") as c:
        reports, _ = sweep
        total = 0
        for r in reports:
            pairs = classify_highest_pairs(r.n, r.p, r.q, r.m)
            total += len(pairs)
            bad = [a for a, _ in pairs if a != Y(r.n, r.p, r.m)]
            c.expect(not bad, f"{(r.n, r.p, r.q, r.m)}: first factor {bad[:1]}")
            c.expect(
                sorted(str(a * b) for a, b in pairs) == sorted(str(w) for w in r.witnesses),
                f"{(r.n, r.p, r.q, r.m)}: pairs and highest elements differ",
            )
        c.detail = f"{total} highest pairs"


def test_criterion_8_cardinality(acceptance_log, sweep, tensor_sweep):
    with criterion(acceptance_log, 8, "cardinality oracles") as c:
        for n in range(1, 7):
            for k in range(1, n + 1):
                for shift in range(-2, 4):
                    size = len(fundamental_crystal(n, k, shift))
                    c.expect(size == comb(n + 1, k), f"|M(Y_{k}({shift}))| = {size} in rank {n}")
        checked = 0
        for r in sweep[0]:
            for comp in r.components:
                checked += 1
                c.expect(comp.size == ssyt_count(r.n, comp.weight), f"{(r.n, r.p, r.q, r.m)} {comp.weight}")
        for (n, p, q), _, result in tensor_sweep[0]:
            for comp in result.components:
                checked += 1
                c.expect(comp.size == ssyt_count(n, comp.weight), f"tensor {(n, p, q)} {comp.weight}")
        c.detail = f"{checked} component sizes"


def test_criterion_9_size_claims(acceptance_log, sweep):
    with criterion(acceptance_log, 9, "collapse at m=1, saturation at large m") as c:
        collapse = saturate = 0
        for r in sweep[0]:
            full = comb(r.n + 1, r.p) * comb(r.n + 1, r.q)
            tensor = predicted_tensor_decomposition(r.n, r.p, r.q)
            c.expect(r.tensor_size == full, f"{(r.n, r.p, r.q, r.m)} pair count")
            if r.m == 1:
                collapse += 1
                c.expect(r.universe_size == ssyt_count(r.n, L(r.n, r.p, r.q)), f"{(r.n, r.p, r.q)} m=1 size")
                if len(tensor) >= 2:
                    c.expect(r.universe_size < full, f"{(r.n, r.p, r.q)} m=1 not smaller than tensor")
            if r.m >= max(r.q + 1, r.n - r.p + 2):
                saturate += 1
                c.expect(r.universe_size == full, f"{(r.n, r.p, r.q, r.m)} size {r.universe_size} != {full}")
                c.expect(r.computed == tensor, f"{(r.n, r.p, r.q, r.m)} not the tensor decomposition")
        c.detail = f"{collapse} collapse cases, {saturate} saturated cases"


def test_criterion_10_axioms(acceptance_log, sweep, tensor_sweep):
    with criterion(acceptance_log, 10, "crystal axioms on every component and tensor product") as c:
        graphs = 0
        conv = MonomialCrystal(Convention(5))
        for seed in (Y(5, 5, 1), Y(5, 2, 1)):
            graphs += 1
            c.expect(validate_axioms(generate_component(seed, conv)) == [], f"component of {seed}")
        for n in range(1, 6):
            for k in range(1, n + 1):
                graphs += 1
                c.expect(validate_axioms(fundamental_graph(n, k)) == [], f"B(L{k}) in rank {n}")
        for r in sweep[0]:
            for comp in r.components:
                graphs += 1
                violations = validate_axioms(comp.graph)
                c.expect(not violations, f"{(r.n, r.p, r.q, r.m)}: {violations[:1]}")
        for key, graph, result in tensor_sweep[0]:
            graphs += 1
            violations = validate_axioms(graph)
            c.expect(not violations, f"tensor {key}: {violations[:1]}")
        c.detail = f"{graphs} graphs"


def test_sweep_predictions_use_every_m(sweep):
    # sanity on the sweep itself: each (n, p, q) appears with m = 1..n+2
    seen = {(r.n, r.p, r.q, r.m) for r in sweep[0]}
    assert len(seen) == sum(n * n * (n + 2) for n in SWEEP_N)
    assert all(r.predicted == predicted_product_decomposition(r.n, r.p, r.q, r.m) for r in sweep[0])
