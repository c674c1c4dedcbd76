from collections import Counter
from fractions import Fraction as F

from conftest import fixtures, plane_graphs, relabelled
from hypothesis import given

from choosecheck import families
from choosecheck.configuration import classify
from choosecheck.discharging import (
    RULE_DENOMINATOR,
    TOTAL_CHARGE,
    Fc,
    InvariantViolation,
    Ledger,
    Transfer,
    V,
    apply_rules,
    discharge,
    final_charges,
    initial_charges,
    redistribute,
)
from choosecheck.fixtures import bowtie, case5_gadget, flaw_triangle_gadget, trio_gadget, w5_heptagon_gadget


def ids(G):
    return {G.label(v): v for v in G.vertices}


def triangle(G, labels):
    want = {ids(G)[x] for x in labels}
    return next(f.id for f in G.faces if f.degree == 3 and f.vertex_set == want)


def into(ledger, face, rules=None):
    return [t for t in ledger.entries if t.target == Fc(face) and (rules is None or t.rule in rules)]


def test_initial_charges():
    G = case5_gadget()
    mu = initial_charges(G)
    a = ids(G)["a"]
    assert mu[V(a)] == 2
    assert mu[Fc(triangle(G, "abc"))] == -3
    H = families.cycle(6)
    assert {mu for e, mu in initial_charges(H).items() if e.kind == "f"} == {0}


def test_flaw_vertex_gives_three_fifths_to_its_455_triangle():
    G = flaw_triangle_gadget()
    v, f = ids(G)["v"], triangle(G, "vab")
    assert sorted(G.vertex_degree(x) for x in G.face(f).vertex_set) == [4, 5, 5]
    (t,) = [t for t in into(apply_rules(G), f) if t.source == V(v)]
    assert (t.amount, t.rule) == (F(3, 5), "R1.1")


def test_heptagon_gives_one_eighth_to_wheel_triangle():
    G = w5_heptagon_gadget()
    seven = next(f.id for f in G.faces if f.degree == 7)
    led = apply_rules(G)
    out = [t for t in led.entries if t.source == Fc(seven)]
    assert [(t.amount, t.rule) for t in out] == [(F(1, 8), "R5")]
    assert G.face_degree(out[0].target.id) == 3


def test_hub_gives_half_to_each_wheel_face():
    G = families.wheel(5)
    led = apply_rules(G)
    out = [t for t in led.entries if t.source == V(0)]
    assert [(t.amount, t.rule) for t in out] == [(F(1, 2), "R2.1")] * 4
    assert final_charges(G, led).charges[V(0)] == 0


def test_case_1_2_bowtie_vertex():
    G = bowtie(6)
    v = ids(G)["v"]
    res = discharge(G)
    assert res.final.charges[V(v)] == 2 - 2 * 1 == 0
    m = next(m for m in res.audit.matches if m.element == V(v))
    assert (m.case, m.value, m.agrees) == ("1.2", 0, True)


def test_case_1_2_hub():
    res = discharge(families.wheel(5))
    m = next(m for m in res.audit.matches if m.element == V(0))
    assert (m.case, m.value, m.agrees) == ("1.2", F(2) - 4 * F(1, 2), True)


def test_case_5_triangle():
    G = case5_gadget()
    f = triangle(G, "abc")
    res = discharge(G)
    assert [t.amount for t in into(res.ledger, f)] == [1, 1, 1]
    m = next(m for m in res.audit.matches if m.element == Fc(f))
    assert (m.case, m.value, m.agrees) == ("5", 0, True)


def test_case_6_2_trio_total():
    G = trio_gadget()
    res = discharge(G)
    (trio,) = res.taxonomy.trios
    gifts = Counter(t.amount for f in trio.faces for t in into(res.ledger, f, {"R2.1", "R2.2", "R3.1", "R3.2"}))
    assert gifts == Counter({F(2, 3): 3, F(3, 2): 2, F(1): 4})
    total = -9 + 3 * F(2, 3) + 2 * F(3, 2) + 4 * 1
    assert total == 0
    assert sum(res.final.charges[Fc(f)] for f in trio.faces) == total
    for f in trio.faces:
        m = next(m for m in res.audit.matches if m.element == Fc(f))
        assert (m.case, m.cluster_total, m.agrees) == ("6.2", 0, True)


def test_final_charges_detect_a_leak():
    G = families.cycle(4)
    led = apply_rules(G)
    leaky = Ledger(led.initial, led.entries + (Transfer(V(0), V(1), F(0), "R1.1"),))
    assert final_charges(G, leaky).total == TOTAL_CHARGE
    broken = Ledger({**led.initial, V(0): led.initial[V(0)] + 1}, led.entries)
    try:
        final_charges(G, broken)
    except InvariantViolation:
        pass
    else:
        raise AssertionError("a non-conserving ledger was accepted")


def test_fixture_set_conserves_charge():
    for G in fixtures().values():
        res = discharge(G)
        assert sum(res.ledger.initial.values()) == TOTAL_CHARGE
        assert res.final.total == TOTAL_CHARGE


@given(plane_graphs)
def test_charge_is_conserved(G):
    res = discharge(G)
    assert sum(res.ledger.initial.values()) == TOTAL_CHARGE
    assert sum(res.final.charges.values()) == TOTAL_CHARGE


@given(plane_graphs)
def test_rule_amounts_are_multiples_of_the_common_denominator(G):
    for t in apply_rules(G).entries:
        assert t.amount >= 0
        if t.rule != "R6":
            assert (t.amount * RULE_DENOMINATOR).denominator == 1


@given(plane_graphs)
def test_sources_and_targets(G):
    for t in apply_rules(G).entries:
        if t.rule.startswith(("R1", "R2", "R3", "R4")):
            assert t.source.kind == "v" and t.target.kind == "f"
            assert t.source.id in G.face(t.target.id).vertex_set
        else:
            assert t.source.kind == "f" and t.target.kind == "f"


@given(plane_graphs)
def test_redistribution_equalises_clusters_and_is_idempotent(G):
    res = discharge(G)
    final = res.final.charges
    for c in res.taxonomy.clusters:
        assert len({final[Fc(f)] for f in c.faces}) == 1
    again, _ = redistribute(final, res.taxonomy.clusters)
    assert again == []


@given(plane_graphs)
def test_discharge_is_deterministic(G):
    a, b = discharge(G), discharge(G)
    assert a.ledger.entries == b.ledger.entries
    assert a.final.charges == b.final.charges


@given(relabelled())
def test_final_charge_multiset_is_label_invariant(data):
    G, H, _ = data
    a = sorted(discharge(G).final.charges.values())
    b = sorted(discharge(H).final.charges.values())
    assert a == b


@given(plane_graphs)
def test_classification_never_conflicts(G):
    tax = classify(G)
    discharge(G, tax)
