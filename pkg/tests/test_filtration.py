"""Filtration layers, Hilbert tables, quotients, offsets, axioms.

Dimension literals were frozen from the brute-force word-span oracle
(tests/oracle.py) before this suite was written.
"""

import pytest

from grfilt.workbench import make
from grfilt.filtration import (standard_filtration, weak_adic_filtration,
                               hilbert, two_sided_closure, full_span,
                               induced_quotient_filtration,
                               induced_good_filtration,
                               intrinsic_module_filtration,
                               equivalence_offset, verify_filtration_axioms,
                               is_good, Filtration, TruncationError,
                               WindowExceeded)
from grfilt.linspace import zero_space


def test_standard_dims_match_oracle_freeze(filt12):
    assert list(filt12.dims().values()) == [1] + [3 * n for n in
                                                  range(1, 13)]


def test_standard_hilbert_values(filt12):
    assert list(hilbert(filt12, 12).values) == [1] + [3 * n for n in
                                                      range(1, 13)]


def test_layer_outside_window(filt12):
    assert filt12.layer(-1).dim == 0
    with pytest.raises(WindowExceeded):
        filt12.layer(13)


def test_quotient_filtration_dims(ring_r, filt12):
    quo = induced_quotient_filtration(ring_r.pres, [ring_r.el("beta")],
                                      12, base=filt12)
    assert list(quo.filtration.dims().values()) == list(range(1, 14))
    assert quo.closed_degree == 24


def test_quotient_truncation_is_refused():
    ring = make("R_2x2", degcap=8)
    # layer 4 of the standard filtration reaches degree 8 > closed 6
    with pytest.raises(TruncationError):
        induced_quotient_filtration(ring.pres, [ring.el("beta")], 4)


def test_two_sided_closure_of_corner(ring_r):
    ideal, closed = two_sided_closure(ring_r.pres, [ring_r.el("beta")])
    assert closed == 24
    # all corner polynomials up to the cap: beta, alpha*beta, beta*alpha, ...
    assert ideal.dim == ring_r.ambient.degcap + 1
    assert ideal.member(ring_r.el("xe12"))


def test_weak_adic_dims_match_oracle_freeze(adic10):
    dims = adic10.dims()
    assert [dims[-i] for i in range(11)] == [20, 19, 17, 15, 13, 11,
                                             9, 7, 5, 3, 1]


def test_weak_adic_hilbert(adic10):
    # H(n) = codim of m^n: 0, 1, then odd numbers
    assert list(hilbert(adic10, 10).values) == [0, 1] + \
        [2 * n - 1 for n in range(2, 11)]


def test_weak_adic_layer_conventions(adic10):
    assert adic10.layer(3) is adic10.layer(0)
    with pytest.raises(WindowExceeded):
        adic10.layer(-11)


def test_weak_adic_needs_series_ambient():
    ring = make("R_2x2")
    with pytest.raises(ValueError):
        weak_adic_filtration(ring.pres, 4)


def test_full_span_stabilizes_in_series_mode(rprime):
    ring = full_span(rprime.pres)
    assert ring.dim == 20
    assert ring.member(rprime.ambient.one())


def test_axioms_hold_for_both_kinds(filt12, adic10):
    assert verify_filtration_axioms(filt12).ok
    assert verify_filtration_axioms(adic10).ok


def test_axiom_checker_catches_broken_nesting(ring_r, filt12):
    amb = ring_r.ambient
    layers = {0: filt12.layer(1), 1: zero_space(amb), 2: filt12.layer(2)}
    rep = verify_filtration_axioms(Filtration("ascending", amb, layers))
    assert not rep.nested_ok and not rep.ok


def test_equivalence_offset_finds_shift(ring_r, filt12):
    shifted = Filtration("ascending", ring_r.ambient,
                         {n: filt12.layer(min(n + 2, 12))
                          for n in range(11)}, name="shifted")
    base = Filtration("ascending", ring_r.ambient,
                      {n: filt12.layer(n) for n in range(11)})
    rep = equivalence_offset(base, shifted, max_offset=3)
    assert rep.equivalent and rep.a_in_b == 0 and rep.b_in_a == 2
    assert rep.offset == 2


def test_equivalence_offset_window_guard(filt12):
    with pytest.raises(ValueError, match="windows too small"):
        equivalence_offset(filt12, filt12, max_offset=13)


def test_good_filtration_divergence(ring_r, filt12):
    """The left-good filtration on the corner ideal falls strictly behind
    the intrinsic one, with no uniform catch-up offset in the window."""
    amb = ring_r.ambient
    beta = ring_r.el("beta")
    albe = amb.mul(ring_r.el("alpha"), beta)
    carrier, _ = two_sided_closure(ring_r.pres, [beta])
    gens = [(beta, 1), (albe, 2)]
    left = induced_good_filtration(filt12, gens, "left", 0, 12,
                                   name="left-good")
    right = induced_good_filtration(filt12, gens, "right", 0, 12,
                                    name="right-good")
    intrinsic = intrinsic_module_filtration(carrier, filt12, 0, 12,
                                            name="intrinsic")
    div = equivalence_offset(left, intrinsic, max_offset=2)
    assert not div.equivalent and div.a_in_b == 0 and div.b_in_a is None
    match = equivalence_offset(right, intrinsic, max_offset=2)
    assert match.equivalent and match.offset == 0
    assert is_good(filt12, left, side="left").submultiplicative_ok
    assert is_good(filt12, right, side="right").submultiplicative_ok
