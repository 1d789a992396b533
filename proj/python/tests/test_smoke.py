"""End-to-end smoke tests of the python binding surface.

Expected values are frozen from independently checked small cases; the full
numerical battery lives in the C++ test suites.
"""

import math

import pytest

import isoclass as ic


# ---- class numbers ---------------------------------------------------------


def test_class_numbers():
    assert ic.class_number_forms(-23) == 3
    assert ic.class_number_forms(-4) == 1
    assert ic.class_number_forms(-163) == 1
    assert ic.class_number_order(-3, 5) == 2
    assert ic.is_fundamental_discriminant(-23)
    assert not ic.is_fundamental_discriminant(-12)
    with pytest.raises(ValueError):
        ic.class_number_forms(5)


def test_formula_matches_forms_on_nonfundamental_disc():
    # disc -12 = conductor 2 over fundamental -3
    assert ic.class_number_forms(-12) == ic.class_number_order(-3, 2)


# ---- isogeny classes --------------------------------------------------------


def test_isogeny_class_size_and_summary():
    assert ic.isogeny_class_size(2, 5) == 2
    s = ic.isogeny_class_summary(2, 5, n=3, with_members=True)
    assert s["q"] == 5
    assert s["ordinary"]
    assert s["size"] == ic.isogeny_class_size(2, 5, 3)
    assert len(s["members"]) == ic.isogeny_class_size(2, 5, 1)
    assert s["members"] == ic.isogeny_class_members(5, 2)


def test_census_matches_class_sizes():
    census = ic.curve_census(7)
    for a in (1, 2, 3, 4, 5):
        assert census[a] == ic.isogeny_class_size(a, 7)


def test_supersingular():
    assert ic.supersingular_j_invariants(7) == [6]
    assert len(ic.supersingular_j_invariants(31)) == 3


# ---- Weil polynomials --------------------------------------------------------


def test_weil_status_and_census():
    assert ic.weil_status([5, -2, 1], 5) == "weil"
    assert ic.weil_status([5, -5, 1], 5) == "off-circle-roots"
    recs = ic.weil_census(1, 5)
    assert len(recs) == 9  # traces -4..4
    assert sum(r["ordinary"] for r in recs) == 8
    assert all(r["newton_slopes"] == ["0", "1"] for r in recs if r["ordinary"])


def test_weil_scaling_slope():
    s = ic.weil_scaling(1, [25, 121, 625], workers=2)
    assert s["target"] == pytest.approx(0.5)
    assert abs(s["slope_ordinary"] - 0.5) < 0.15


# ---- analytic profiles --------------------------------------------------------


def test_root_profile_and_density():
    prof = ic.root_profile([5, -1, 1], 5)
    assert prof["g"] == 1 and not prof["degenerate"]
    assert 0.0 < prof["angles"][0] < math.pi
    d = ic.positivity_density([5, -1, 1], 5, n_max=100000, workers=2)
    assert abs(d - 0.5) < 0.02


def test_independence_verdicts():
    assert ic.angle_independence([5, -1, 1], 5)["independent"]
    dep = ic.angle_independence([5, 0, 1], 5)  # angle exactly pi/2
    assert not dep["independent"]


def test_discriminant_identity():
    r = ic.discriminant_report([5, -2, 1], 5, n=4)
    assert r["exact_identity_holds"]
    assert r["disc_power"] == r["disc_trace"] ** 2 * r["q_power_factor"] * r["circle_term"]
    assert r["unit_circle_factor"] <= r["unit_circle_bound"]


# ---- additive combinatorics -----------------------------------------------


def test_set_ops():
    assert ic.set_op(5, [1, 2], [1, 2], "sum") == [2, 3, 4]
    assert ic.set_op(5, [1, 2], [1, 2], "product") == [1, 2, 4]
    assert ic.set_op(5, [1, 2], [1, 2], "shifted_product") == [1, 4]
    with pytest.raises(ValueError):
        ic.set_op(5, [1], [1], "xor")


def test_sum_product_growth():
    stats = ic.sum_product_stats(1009, list(range(1, 21)))  # arithmetic progression
    assert stats["sum_size"] == 39
    assert stats["max_exponent"] > 12 / 11 - 0.1


def test_expander_and_subfield():
    assert ic.expander_image(7, [1], [1], [1], shift=0) == [2]
    # Indices 0..6 are the prime-field scalars of F_49; the whole prime field
    # concentrates perfectly on its own dilate.
    assert ic.subfield_concentration(49, list(range(7)), 1) == 7


def test_ruzsa_sweeps():
    assert ic.ruzsa_sweep_cyclic(300, 64, 1) == (300, 0)
    assert ic.ruzsa_sweep_multiplicative(300, 64, 1) == (300, 0)


def test_dot_products():
    chk = ic.check_dot_product_bound(3, 1, [[1], [2]], [[1], [2]])
    assert chk["avoids"] and chk["holds"]
    assert chk["product"] == 4 and chk["bound"] == 27
    assert ic.dot_product_sweep(3, 2, 25, seed=1) == (25, 0)
    with pytest.raises(ValueError):
        ic.check_dot_product_bound(3, 1, [[0]], [[1]])


def test_pair_products():
    c = ic.distinct_pair_products(7, [1, 2, 4])
    assert c["pairs_with_repetition"] == 6
    assert not c["all_distinct"]


# ---- structured hypersurface ------------------------------------------------


def test_hypersurface_evaluate():
    info = ic.hypersurface_info(2)
    assert info["arity"] == 12 and info["factor_count"] == 16
    value, vanishing = ic.evaluate_R(5, 1, [0] * 6)
    assert value == 0 and vanishing == [0, 0]
    value, vanishing = ic.evaluate_R(5, 1, [1] * 6)
    assert value == 1 and vanishing is None
    with pytest.raises(ValueError):
        ic.evaluate_R(5, 1, [5, 0, 0, 0, 0, 0])


def test_hypersurface_search_modes_agree():
    classes = [[1, 2]] * 6
    blk = ic.hypersurface_search(5, 1, classes, budget=10**6, mode="block-solve")
    lex = ic.hypersurface_search(5, 1, classes, budget=10**6, mode="lexicographic", workers=3)
    assert blk["found"] and lex["found"]
    assert blk["witness"] == lex["witness"] == [1, 1, 1, 2, 2, 1]
    assert len(blk["vanishing_c"]) == 2
    value, _ = ic.evaluate_R(5, 1, blk["witness"])
    assert value == 0
    exhausted = ic.hypersurface_search(5, 1, classes, budget=0, mode="lexicographic")
    assert not exhausted["found"] and exhausted["fraction_searched"] == 0.0


def test_search_on_isogeny_classes():
    classes = [ic.isogeny_class_members(101, a) for a in range(1, 7)]
    rep = ic.hypersurface_search(101, 1, classes, budget=10**6, seed=1)
    assert rep["found"]
    value, _ = ic.evaluate_R(101, 1, rep["witness"])
    assert value == 0


# ---- acceptance --------------------------------------------------------------


def test_acceptance_filtered():
    results = ic.acceptance(filter="isogeny-size-growth", workers=2)
    assert len(results) == 1
    assert results[0]["pass"]
    assert results[0]["number"] == 3
