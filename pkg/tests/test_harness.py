import pytest

from amalgadim import families as fam
from amalgadim.graph import from_edge_list
from amalgadim.harness import (
    Corpus,
    Solver,
    check_family_forms,
    complete_formula,
    ladder_audit_ea,
    ladder_audit_va,
    mixed_corpus,
    multisets,
    run_suite,
    verify_t1,
    verify_t2,
    verify_t3,
    verify_t4,
    verify_t5_bounds,
    verify_t6_bipartite,
    verify_t6_bounds,
)

from .conftest import oracle_dim


@pytest.fixture(scope="module")
def solver():
    return Solver()


def test_t1_examples(solver):
    r = verify_t1(fam.complete(4).graph, 0, fam.complete(5).graph, 0, solver=solver)
    assert (r.observed, r.predicted[0], r.status) == (5, 5, "pass")
    p5 = fam.path(5)
    r = verify_t1(p5.graph, p5.default_terminal_vertex, fam.cycle(5).graph, 0, solver=solver)
    assert r.predicted[0] == 1 and r.status == "pass"
    r = verify_t1(fam.path(3).graph, 1, fam.path(3).graph, 1, solver=solver)
    assert r.predicted[0] == 0 and r.status == "pass"


def test_t2_examples(solver):
    r = verify_t2([3, 5, 7], "vertex", solver=solver)
    assert (r.predicted, r.status) == (3, "pass")
    r = verify_t2([4, 6], "vertex", solver=solver)
    assert (r.predicted, r.status) == (3, "pass")
    r = verify_t2([4, 4], "edge", solver=solver)
    assert r.predicted == (0, 2) and r.status == "pass"


def test_t3_examples(solver):
    assert verify_t3([4, 5], "vertex", solver=solver).predicted == 5
    r = verify_t3([2, 2, 5], "vertex", solver=solver)
    assert (r.predicted, r.status) == (4, "pass")
    r = verify_t3([4, 5], "edge", solver=solver)
    assert (r.predicted, r.observed, r.status) == (4, 4, "pass")


def test_complete_formula_cases():
    assert complete_formula("vertex", 6, 3, 2, 0) == 4
    assert complete_formula("vertex", 7, 2, 0, 0) == 5
    assert complete_formula("edge", 7, 2, 0, 0) == 4
    assert complete_formula("edge", 5, 2, 0, 1) == 2
    assert complete_formula("edge", 6, 3, 0, 1) == 0


def test_t3_counterexamples_are_reported_as_fail(solver):
    # K3 with a pendant edge: formula says 1, the oracle says 2.
    r = verify_t3([2, 3], "vertex", solver=solver)
    assert (r.predicted, r.observed, r.status) == (1, 2, "fail")
    # two triangles on a shared edge (the diamond): formula 0, oracle 2
    r = verify_t3([3, 3], "edge", solver=solver)
    assert (r.predicted, r.observed, r.status) == (0, 2, "fail")
    diamond = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    assert r.observed == oracle_dim(diamond)


def test_t4_examples(solver):
    r = verify_t4([3, 3], "vertex", solver=solver)
    assert r.predicted == 4 - 2 + 2 - 1 and r.status == "pass"
    r = verify_t4([4, 4], "vertex", solver=solver)
    assert r.predicted == 6 - 2 and r.status == "pass"
    r = verify_t4([3, 4], "edge", solver=solver)
    assert r.predicted == 5 - 2 + 1 - 1 and r.status == "pass"


def test_t4_edge_counterexample(solver):
    r = verify_t4([3, 5], "edge", solver=solver)
    assert (r.predicted, r.observed, r.status) == (3, 2, "fail")


def test_t5_examples(solver):
    k4 = fam.complete(4).graph
    r = verify_t5_bounds([(k4, 0)] * 3, solver=solver)
    assert (r.predicted, r.observed, r.status) == ((6, 11), 6, "pass")
    p5 = fam.path(5)
    r = verify_t5_bounds([(k4, 0), (fam.cycle(5).graph, 0), (p5.graph, 2)], solver=solver)
    assert r.status == "pass"
    r = verify_t5_bounds([(fam.cycle(6).graph, 0)], solver=solver)
    assert (r.predicted, r.observed) == ((1, 2), 2)


def test_t6_examples(solver):
    k33 = fam.complete_bipartite(3, 3)
    r = verify_t6_bounds([(k33.graph, k33.default_terminal_edge)] * 2, solver=solver)
    assert (r.predicted[0], r.observed, r.status) == (4, 4, "pass")
    dhc = fam.double_hats_cycle(8)
    r = verify_t6_bounds([(dhc.graph, dhc.default_terminal_edge)] * 2, solver=solver)
    assert r.predicted == (1, 5) and r.status == "pass"
    r = verify_t6_bounds([(fam.complete(4).graph, (0, 1)), (fam.cycle(6).graph, (0, 1))], solver=solver)
    assert r.status == "pass"


def test_t6_bipartite_rows(solver):
    eq, literal, with_y = verify_t6_bipartite(3, 2, solver=solver)
    assert (eq.predicted, eq.observed, eq.status) == (4, 4, "pass")
    assert (literal.observed, literal.status) == (0, "fail")
    assert (with_y.predicted, with_y.observed, with_y.status) == (4, 4, "audit")
    assert "resolving=True" in with_y.note


def test_ladder_va_rows(solver):
    rows = ladder_audit_va(3, 4, 5, solver=solver)
    bounds = [r for r in rows if not r.instance.endswith(("stepwise", "star"))]
    assert [r.instance.split("j=")[1] for r in bounds] == ["0", "1", "2", "3"]
    assert all(r.status == "pass" for r in bounds)
    assert bounds[0].observed == 6
    star = rows[-1]
    assert star.status == "audit" and star.instance.endswith("subdivided star")
    # a spider with 6 legs: the upper bound 3 + 3 - 1 is attained
    assert (star.predicted, star.observed) == (5, 5)


def test_ladder_va_small(solver):
    rows = ladder_audit_va(2, 3, 4, solver=solver)
    step1 = next(r for r in rows if r.instance.endswith("j=1 stepwise"))
    assert step1.status == "audit"


def test_ladder_ea_rows(solver):
    rows = ladder_audit_ea(2, 3, 8, solver=solver)
    first = rows[0]
    assert (first.observed, first.predicted[0], first.status) == (4, 4, "pass")
    end = rows[-1]
    assert end.instance.endswith("all DHC") and end.predicted == 5 and end.status == "audit"
    assert all(r.status in ("pass", "audit") for r in rows)
    assert all(r.status != "fail" for r in ladder_audit_ea(2, 4, 9, solver=solver))


def test_family_forms(solver):
    rows = check_family_forms(9, solver=solver)
    failing = [r.instance for r in rows if r.status != "pass"]
    assert failing == ["dhc(7)", "dhc(7) {x2,y5} resolves"]


def test_multisets():
    assert len(multisets(range(3, 8), (2, 3))) == 15 + 35
    assert len(multisets(range(2, 6), (2, 3))) == 10 + 20


def test_mixed_corpus_is_seeded():
    a, b = mixed_corpus(20, seed=7), mixed_corpus(20, seed=7)
    assert a == b
    assert a != mixed_corpus(20, seed=8)
    for mc in a:
        assert 1 <= len(mc.blocks) <= 3
        for blk, (u, v) in zip(mc.blocks, mc.edge_terminals):
            assert blk.graph.order <= 8 and blk.graph.has_edge(u, v)


def test_run_suite_ordering_is_deterministic():
    small = Corpus(cycle_lengths=(3, 4), complete_orders=(4,), prism_params=(3,), mixed_count=5)
    first = [(r.theorem, r.instance, r.observed) for r in run_suite("all", small, Solver())]
    again = [(r.theorem, r.instance, r.observed) for r in run_suite("all", small, Solver(jobs=2))]
    assert first == again
    tags = [t for t, _, _ in first]
    order = ["T1", "T2", "T3", "T4", "T5", "T6", "ladder_va", "ladder_ea", "family_forms"]
    assert tags == sorted(tags, key=order.index)


def test_report_fields():
    r = verify_t2([3, 4], "edge")
    d = r.as_dict()
    assert set(d) == {"theorem", "instance", "predicted", "observed", "status", "runtime", "note"}
    assert isinstance(d["predicted"], list)
