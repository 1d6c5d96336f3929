from fractions import Fraction

import pytest

from tauslice import fixtures as fixdata
from tauslice.algebra import ideal_bimodule, split_extension, presentation_isomorphism
from tauslice.modrep import (
    simple, projective, injective, direct_sum, decompose, hom_dim,
    is_isomorphic, fac_member, sub_member, dual,
)
from tauslice.artheory import (
    tau, tau_inverse, tau_power, ar_quiver, almost_split_sequence,
    ext_dim, ext_data, realize_extension, stable_hom_dim_mod_injectives,
    end_algebra, is_hereditary, is_projective_rep, is_injective_rep,
    relation_extension_bimodule, bimodule_right_rep, bimodule_dual_left_rep,
    radical_power_dim,
)

from helpers import w, rep


def test_tau_on_line_quiver(a3):
    s1, s2, s3 = (simple(a3, v) for v in "123")
    m12 = rep(a3, (1, 1, 0), a=[[1]])
    assert tau(s3).dims == (0, 0, 0)  # projective
    assert is_isomorphic(tau(s1), s2)
    assert is_isomorphic(tau(s2), s3)
    assert is_isomorphic(tau(m12), projective(a3, "2"))
    # inverse undoes it away from projectives / injectives
    assert is_isomorphic(tau_inverse(tau(s1)), s1)
    assert is_isomorphic(tau_power(s1, 2), s3)
    assert tau_power(s1, 3).dims == (0, 0, 0)
    assert tau_inverse(s1).dims == (0, 0, 0)  # injective


def test_tau_kills_projective_summands(a3):
    m = direct_sum(a3, [simple(a3, "1"), projective(a3, "1")])[0]
    assert is_isomorphic(tau(m), simple(a3, "2"))


def test_projective_injective_recognition(a3, ex1):
    assert is_projective_rep(projective(a3, "1"))
    assert is_injective_rep(injective(a3, "3"))
    s2 = simple(a3, "2")
    assert not is_projective_rep(s2)
    assert not is_injective_rep(s2)
    assert is_hereditary(a3)
    assert not is_hereditary(ex1)  # bound by commutativity relations


def test_ext_dims_on_line_quiver(a3):
    s1, s2, s3 = (simple(a3, v) for v in "123")
    assert ext_dim(s1, s2) == 1
    assert ext_dim(s2, s1) == 0
    assert ext_dim(s1, s3) == 0
    assert ext_dim(s2, s3) == 1


def test_ext_realization_round_trip(a3):
    s1, s2 = simple(a3, "1"), simple(a3, "2")
    ed = ext_data(s1, s2)
    assert ed.dim == 1
    ses = realize_extension(ed, (Fraction(1),))
    ses.verify()
    assert ses.middle.dims == (1, 1, 0)
    assert is_isomorphic(ses.middle, rep(a3, (1, 1, 0), a=[[1]]))


def test_almost_split_sequence_structure(a3):
    s1 = simple(a3, "1")
    seq = almost_split_sequence(s1)
    seq.ses.verify()
    assert is_isomorphic(seq.left, tau(s1))
    assert seq.right is s1
    mids = sorted((r.dims, k) for r, k in seq.middle_summands)
    assert mids == [((1, 1, 0), 1)]
    # additivity of dimension vectors across the mesh
    total = tuple(l + r for l, r in zip(seq.left.dims, s1.dims))
    assert seq.ses.middle.dims == total


def test_ar_quiver_counts(algebras):
    expected = {"a2": 3, "a3": 6, "ex1": 12, "ex2": 13, "fig1": 14,
                "fig3": 12, "ex5_tilde": 12, "ex5_a": 9, "ex5_aprime": 6,
                "ex5_c": 8}
    for name, count in expected.items():
        assert ar_quiver(algebras[name]).count == count, name


def test_ar_quiver_labels_and_links(a3):
    arq = ar_quiver(a3)
    plabels = sorted(n.projective_label for n in arq.nodes
                     if n.projective_label is not None)
    ilabels = sorted(n.injective_label for n in arq.nodes
                     if n.injective_label is not None)
    assert plabels == ["1", "2", "3"]
    assert ilabels == ["1", "2", "3"]
    # one translate link per non-projective node
    assert len(arq.tau_link) == arq.count - 3
    for ident, pred in arq.tau_link.items():
        assert is_isomorphic(arq.nodes[pred].rep, tau(arq.nodes[ident].rep))


def test_stable_hom_agrees_with_ext(ex2):
    arq = ar_quiver(ex2)
    reps = arq.representatives()
    for m in reps[:6]:
        for n in reps[7:12]:
            assert ext_dim(m, n) == stable_hom_dim_mod_injectives(n, tau(m))


def test_end_algebra_of_projectives(a3):
    reg = [projective(a3, v) for v in a3.quiver.vertices]
    res = end_algebra(direct_sum(a3, reg)[0], labels=["1", "2", "3"])
    b = res.algebra
    assert b.dim == a3.dim
    assert is_hereditary(b)
    # End(A) recovers A up to the composition convention
    assert (presentation_isomorphism(b, a3) is not None
            or presentation_isomorphism(b, a3.opposite()) is not None)


def test_end_algebra_hom_functor_dims(a3):
    members = [projective(a3, "1"), simple(a3, "1")]
    res = end_algebra(direct_sum(a3, members)[0], labels=["p", "s"])
    x = simple(a3, "1")
    hx = res.hom_functor(x)
    assert hx.dims == tuple(hom_dim(m, x) for m in res.summands)


def test_radical_power_dim_on_ar_universe(a3):
    arq = ar_quiver(a3)
    universe = arq.representatives()
    p3, p1 = projective(a3, "3"), projective(a3, "1")
    # soc P1 includes through P2: a composite of two irreducible maps,
    # so the span survives to rad^2 and dies at rad^3
    assert hom_dim(p3, p1) == 1
    assert radical_power_dim(p3, p1, 1, universe) == 1
    assert radical_power_dim(p3, p1, 2, universe) == 1
    assert radical_power_dim(p3, p1, 3, universe) == 0
    assert radical_power_dim(p3, p1, "infinity", universe) == 0


def test_relation_extension_bimodule(ex5_c):
    bim = relation_extension_bimodule(ex5_c)
    assert bim.dim == 3
    bim.check()
    ext = split_extension(ex5_c, bim)
    assert ext.algebra.dim == ex5_c.dim + 3


def test_ideal_bimodule_reps(ex5_a):
    q = ex5_a.quiver
    ib = ideal_bimodule(ex5_a, [{w(q, "1", "al"): Fraction(1)}])
    c = ib.quotient_map.target
    r = bimodule_right_rep(ib.bimodule)
    assert r.algebra is c
    assert is_isomorphic(r, simple(c, "3"))
    d = bimodule_dual_left_rep(ib.bimodule)
    assert is_isomorphic(d, simple(c, "1"))
