"""Claim checks: PASS paths, hypothesis guards, the machine-refuted
four-cut classification, and ledger orchestration."""

from fractions import Fraction
from types import SimpleNamespace

import pytest

import toughkit.verify as verify
from toughkit.generators import build_jm, cycle
from toughkit.graphs import components, mask_of
from toughkit.invariants import ToughnessCertificate, cutsets_of_size
from toughkit.verify import (
    CLAIM_IDS,
    M_CLAIMS,
    ClaimReport,
    applicable,
    build_tasks,
    ledger_json,
    run_ledger,
    verify_alpha_bound,
    verify_claw_structure,
    verify_cycle_power_tough,
    verify_lemma_a,
    verify_lemma_b,
    verify_lemma_c,
    verify_ms_consistency,
    verify_theorem,
)


def test_claim_report_surface():
    rep = ClaimReport("LEMMA_A", 3, "PASS", {"kappa": 4})
    assert rep.passed
    assert rep.to_json_dict() == {
        "claim": "LEMMA_A", "parameter": 3, "verdict": "PASS",
        "details": {"kappa": 4},
    }
    assert not ClaimReport("LEMMA_A", 3, "FAIL", {}).passed


# ---------------------------------------------------------------------------
# connectivity claim

@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_lemma_a_passes(m):
    rep = verify_lemma_a(m)
    assert rep.verdict == "PASS"
    assert rep.details["kappa"] == 4
    cut = mask_of(rep.details["witness_cut"])
    assert cut.bit_count() == 4
    assert len(components(build_jm(m).graph, cut)) >= 2


def test_lemma_a_fails_on_doctored_graph(monkeypatch):
    monkeypatch.setattr(verify, "_jm", lambda m: SimpleNamespace(graph=cycle(8)))
    rep = verify_lemma_a(3)
    assert rep.verdict == "FAIL"
    assert rep.details["kappa"] == 2


# ---------------------------------------------------------------------------
# four-cut classification: FAILs honestly for every m >= 5

def test_lemma_b_hypothesis_guard():
    with pytest.raises(ValueError):
        verify_lemma_b(4)


def bridge_skew_family(m):
    """Cut-sets {a_1, a_j, b_j, b_m} and {a_j, a_m, b_1, b_j}, 2 <= j < m."""
    fam = set()
    for j in range(2, m):
        fam.add(frozenset({0, j - 1, m + j - 1, 2 * m - 1}))
        fam.add(frozenset({j - 1, m - 1, m, m + j - 1}))
    return fam


@pytest.mark.parametrize("m,total,by_kind", [
    (5, 25, {"isolates_cycle_vertex": 10, "aligned_pair": 9, "outside_claim": 6}),
    (6, 34, {"isolates_cycle_vertex": 12, "aligned_pair": 14, "outside_claim": 8}),
])
def test_lemma_b_fails_with_exact_tallies(m, total, by_kind):
    rep = verify_lemma_b(m)
    assert rep.verdict == "FAIL"
    assert rep.details["cutsets"] == total
    assert rep.details["by_kind"] == by_kind
    assert sum(by_kind.values()) == total
    found = {frozenset(c) for c in rep.details["counterexamples"]}
    assert found == bridge_skew_family(m)


def test_lemma_b_counterexamples_revalidate():
    m = 5
    lg = build_jm(m)
    g, lab = lg.graph, lg.labeling
    rep = verify_lemma_b(m)
    ab = lab.a_mask() | lab.b_mask()
    for ids in rep.details["counterexamples"]:
        cut = mask_of(ids)
        assert cut.bit_count() == 4
        comps = components(g, cut)
        assert len(comps) >= 2  # genuinely disconnects
        alive = g.full_mask & ~cut
        for v in range(g.n):
            if alive >> v & 1 and ab >> v & 1:
                assert g.adj[v] & alive != 0  # no cycle vertex isolated
        a_idx = sorted(v + 1 for v in ids if v < m)
        b_idx = sorted(v - m + 1 for v in ids if m <= v < 2 * m)
        assert not (len(a_idx) == 2 and a_idx == b_idx)  # not an aligned pair
    # the report enumerates the same universe the cut-set scanner sees
    assert rep.details["cutsets"] == len(cutsets_of_size(g, 4))


# ---------------------------------------------------------------------------
# independence claim and its triangle device

def test_lemma_c_hypothesis_guard():
    with pytest.raises(ValueError):
        verify_lemma_c(4)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_lemma_c_passes(m):
    alpha_rep, tri_rep = verify_lemma_c(m)
    assert alpha_rep.verdict == "PASS"
    assert alpha_rep.details["alpha"] == m - 1
    g = build_jm(m).graph
    wit = mask_of(alpha_rep.details["witness"])
    assert wit.bit_count() == m - 1
    for v in alpha_rep.details["witness"]:
        assert g.adj[v] & wit == 0

    assert tri_rep.verdict == "PASS"
    assert len(tri_rep.details["triangles"]) == m - 1
    assert tri_rep.details["disjoint_triangles"] is True
    assert tri_rep.details["spanning"] is True
    lab = build_jm(m).labeling
    assert sorted(tri_rep.details["dropped"]) == sorted([lab.a(1), lab.b(m)])


# ---------------------------------------------------------------------------
# toughness claim

def test_theorem_hypothesis_guard():
    with pytest.raises(ValueError):
        verify_theorem(6)


@pytest.mark.parametrize("m", [3, 5])
def test_theorem_passes(m):
    rep = verify_theorem(m)
    assert rep.verdict == "PASS"
    assert rep.details["toughness"] == {"num": 2, "den": 1}
    cut = mask_of(rep.details["witness_cut"])
    comps = components(build_jm(m).graph, cut)
    assert len(comps) == rep.details["components"]
    assert Fraction(cut.bit_count(), len(comps)) == Fraction(2)


def test_theorem_fails_on_doctored_value(monkeypatch):
    fake = ToughnessCertificate(Fraction(3, 2), mask_of([0, 1, 2]), 2)
    monkeypatch.setattr(verify, "_jm_toughness", lambda m: fake)
    rep = verify_theorem(5)
    assert rep.verdict == "FAIL"
    assert rep.details["toughness"] == {"num": 3, "den": 2}


# ---------------------------------------------------------------------------
# claw structure claims

def test_claw_structure_hypothesis_guard():
    with pytest.raises(ValueError):
        verify_claw_structure(3)


@pytest.mark.parametrize("m", [4, 5, 6])
def test_claw_structure_passes(m):
    centers_rep, k14_rep = verify_claw_structure(m)
    assert centers_rep.verdict == "PASS"
    lab = build_jm(m).labeling
    assert centers_rep.details["centers"] == sorted(
        [lab.a(1), lab.a(m), lab.b(1), lab.b(m)]
    )
    assert k14_rep.verdict == "PASS"
    assert k14_rep.details["k14_at_bridge"] == []


# ---------------------------------------------------------------------------
# background claims

@pytest.mark.parametrize("label", ["J_3", "C_5", "L(K_4)", "L(K_5)", "L(petersen)"])
def test_ms_consistency_passes(label):
    rep = verify_ms_consistency(label)
    assert rep.verdict == "PASS"
    assert rep.details["claw_free"] is True
    tough = Fraction(rep.details["toughness"]["num"],
                     rep.details["toughness"]["den"])
    assert tough == Fraction(rep.details["kappa"], 2)


def test_ms_consistency_line_graph_values():
    rep = verify_ms_consistency("L(petersen)")
    assert rep.details["kappa"] == 4
    assert Fraction(rep.details["toughness"]["num"],
                    rep.details["toughness"]["den"]) == Fraction(2)


@pytest.mark.parametrize("label", ["C_8^2", "C_10^2"])
def test_cycle_power_tough_passes(label):
    rep = verify_cycle_power_tough(label)
    assert rep.verdict == "PASS"
    assert rep.details["toughness"] == {"num": 2, "den": 1}


@pytest.mark.parametrize("label,n,alpha", [
    ("J_3", 8, 2),
    ("J_5", 14, 4),
    ("J_7", 20, 6),
    ("C_8^2", 8, 2),
    ("C_10^2", 10, 3),
])
def test_alpha_bound_passes(label, n, alpha):
    rep = verify_alpha_bound(label)
    assert rep.verdict == "PASS"
    assert rep.details["n"] == n
    assert rep.details["alpha"] == alpha
    assert rep.details["supertough"] is True
    bound = rep.details["bound"]
    assert Fraction(bound["num"], bound["den"]) == Fraction(2 * n, 6)
    assert alpha <= Fraction(2 * n, 6)


# ---------------------------------------------------------------------------
# orchestration

def test_applicable_table():
    assert applicable("LEMMA_A", 3)
    assert not applicable("LEMMA_B", 4)
    assert applicable("LEMMA_B", 5)
    assert applicable("THEOREM", 5)
    assert not applicable("THEOREM", 4)
    assert not applicable("LEMMA_C", 6)
    assert applicable("CLAW_CENTERS", 4)
    assert not applicable("CLAW_CENTERS", 3)
    assert not applicable("MS_CONSISTENCY", 3)  # not m-parameterized


def test_build_tasks_default_composition():
    tasks = build_tasks()
    assert len(tasks) == 47
    assert ("LEMMA_A", 9) in tasks
    assert ("THEOREM", 7) in tasks
    assert ("THEOREM", 9) not in tasks  # toughness default stops at 7
    assert ("LEMMA_B", 4) not in tasks
    assert ("CYCLE_POWER_TOUGH", "C_8^2") in tasks
    # m-parameterized claims come first, grouped in registry order
    names = [c for c, _ in tasks]
    assert names[:7] == ["LEMMA_A"] * 7
    assert set(names) == set(CLAIM_IDS)


def test_build_tasks_selection_and_parity():
    assert build_tasks(range(3, 8), ["LEMMA_A"], odd_only=True) == [
        ("LEMMA_A", 3), ("LEMMA_A", 5), ("LEMMA_A", 7),
    ]
    assert build_tasks([4], ["LEMMA_B"]) == []  # hypothesis excludes m=4
    assert build_tasks([3], ["CYCLE_POWER_TOUGH"]) == [
        ("CYCLE_POWER_TOUGH", "C_8^2"), ("CYCLE_POWER_TOUGH", "C_10^2"),
    ]
    with pytest.raises(ValueError):
        build_tasks(claims=["LEMMA_Z"])
    assert set(M_CLAIMS) < set(CLAIM_IDS)


def test_run_ledger_workers_agree():
    kwargs = dict(m_values=range(3, 6), claims=["LEMMA_A", "MS_CONSISTENCY"])
    solo = run_ledger(**kwargs, workers=1)
    duo = run_ledger(**kwargs, workers=2)
    assert ledger_json(solo) == ledger_json(duo)
    assert all(r.verdict == "PASS" for r in solo)
    assert len(solo) == 3 + 5


def test_run_task_rejects_unknown_claim():
    with pytest.raises(ValueError):
        verify._run_task(("LEMMA_Z", 3))


def test_ledger_json_is_stable_and_parseable():
    import json

    reports = run_ledger(m_values=[3], claims=["LEMMA_A"])
    text = ledger_json(reports)
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert parsed == [r.to_json_dict() for r in reports]
    first = text.index('"claim"')
    assert first < text.index('"details"') < text.index('"parameter"') \
        < text.index('"verdict"')
