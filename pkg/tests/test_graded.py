"""Associated graded pieces, symbol arithmetic, relations, chains."""

import pytest

from grfilt.filtration import WindowExceeded
from grfilt.graded import (GradedTrunc, check_relation, sandwich_zero_sweep,
                           spanning_check, ideal_chain_witness,
                           verify_chain_report, rees_dims, ChainReport)


RIGHT_MODULE_PATTERNS = (((), "alpha", ()),
                         (("beta",), "alpha", ()),
                         (("alpha", "beta"), "alpha", ()))


def test_standard_piece_dims(gr12):
    dims = gr12.piece_dims()
    assert dims[0] == 1 and dims[1] == 2
    assert all(dims[m] == 3 for m in range(2, 13))


def test_weak_adic_piece_dims(gr_adic):
    dims = gr_adic.piece_dims()
    assert dims[0] == 1
    assert all(dims[-i] == 2 for i in range(1, 10))


def test_class_is_coset_invariant(gr12, ring_r):
    amb = ring_r.ambient
    beta = ring_r.el("beta")
    ab = amb.mul(ring_r.el("alpha"), beta)  # x e12, lies in layer 2
    rep = gr12.class_of(ab, 2)
    # shifting by a layer-1 element does not move the degree-2 coset
    shifted = ab + beta
    assert gr12.class_of(shifted, 2) == rep
    assert gr12.lift(rep) == gr12.lift(gr12.class_of(shifted, 2))


def test_class_of_demands_membership(gr12, ring_r):
    with pytest.raises(ValueError):
        gr12.class_of(ring_r.el("xe12"), 1)  # x e12 is not in layer 1


def test_symbol_degrees(classes12, classes_adic):
    assert all(c.degree == 1 for c in classes12.values())
    assert all(c.degree == -1 for c in classes_adic.values())


def test_product_outside_window_raises(gr12, classes12):
    deep = gr12.word(classes12, ["alpha"] * 12)
    with pytest.raises(WindowExceeded):
        gr12.mul(deep, classes12["alpha"])


def test_relations_in_standard_graded(gr12, classes12):
    # alpha^2 beta collapses into the layer below; beta alpha^2 does not
    assert check_relation(gr12, classes12, ["alpha", "alpha", "beta"])
    assert not check_relation(gr12, classes12, ["beta", "alpha", "alpha"])
    # the two degree-2 corner symbols stay independent
    assert not check_relation(gr12, classes12, ["alpha", "beta"],
                              ["beta", "alpha"])


def test_corner_sandwich_vanishes(gr12, classes12):
    ok, checked = sandwich_zero_sweep(gr12, classes12, "beta")
    assert ok and checked > 20


def test_weak_adic_relations(gr_adic, classes_adic):
    assert check_relation(gr_adic, classes_adic, ["beta", "alpha"])
    assert check_relation(gr_adic, classes_adic, ["beta", "beta"])
    assert not check_relation(gr_adic, classes_adic, ["alpha", "beta"])


def test_spanning_over_polynomial_coefficients(gr12, classes12):
    rep = spanning_check(gr12, classes12, RIGHT_MODULE_PATTERNS)
    assert rep.all_covered
    # dropping the corner families loses every degree >= 1
    thin = spanning_check(gr12, classes12, (((), "alpha", ()),))
    assert not thin.all_covered
    assert list(thin.covered)[1:] == [False] * 12


def test_left_ideal_chain_strictly_ascends(gr12, classes12):
    words = [["beta"] + ["alpha"] * i for i in range(6)]
    rep = ideal_chain_witness(gr12, classes12, words, side="left")
    assert rep.strictly_ascending
    assert list(rep.ideal_dims) == [2 * (i + 1) for i in range(6)]
    assert verify_chain_report(gr12, classes12, rep)


def test_right_ideal_chain_in_weak_adic(gr_adic, classes_adic):
    words = [["alpha"] * i + ["beta"] for i in range(5)]
    rep = ideal_chain_witness(gr_adic, classes_adic, words, side="right")
    assert rep.strictly_ascending
    assert list(rep.ideal_dims) == [1, 2, 3, 4, 5]
    assert verify_chain_report(gr_adic, classes_adic, rep)


def test_chain_verifier_rejects_tampering(gr12, classes12):
    words = [["beta"] + ["alpha"] * i for i in range(3)]
    rep = ideal_chain_witness(gr12, classes12, words, side="left")
    fake = ChainReport(rep.side, (("alpha",),) + rep.words[1:],
                       rep.ideal_dims, rep.strictly_ascending,
                       rep.witnesses, rep.window)
    assert not verify_chain_report(gr12, classes12, fake)


def test_chain_flat_when_generator_already_inside(gr12, classes12):
    # beta*alpha lies in the right ideal of beta, so the chain stalls
    words = [["beta"], ["beta", "alpha"]]
    rep = ideal_chain_witness(gr12, classes12, words, side="right")
    assert not rep.strictly_ascending


def test_rees_dims_are_partial_sums(filt12, adic10):
    assert rees_dims(filt12, 4) == [1, 4, 10, 19, 31]
    assert rees_dims(adic10, 3) == [20, 39, 56, 71]
