"""Structural laws that every slice fixture must satisfy, with readable
failure lists (see properties.py for the fixture table and the suites)."""


def test_no_projective_successors_or_injective_predecessors(suite_results):
    assert suite_results["suite_presecpro"] == []


def test_member_quiver_acyclic(suite_results):
    assert suite_results["suite_presecpro2"] == []


def test_endomorphism_algebras_hereditary(suite_results):
    assert suite_results["suite_endoslice"] == []


def test_weak_and_sectional_convexity(suite_results):
    assert suite_results["suite_wconvex_lemix"] == []


def test_no_homs_from_inverse_translate(suite_results):
    assert suite_results["suite_rmk1"] == []


def test_factor_class_decomposition(suite_results):
    assert suite_results["suite_propita"] == []


def test_translate_stable_under_annihilator_quotients(suite_results):
    assert suite_results["suite_tauiguales"] == []


def test_complete_tau_slices_are_local_slices(suite_results):
    assert suite_results["suite_clustertilted_forward"] == []
