"""One-sided rank certificates over k[t] windows."""

import pytest

from grfilt.workbench import make
from grfilt.filtration import two_sided_closure
from grfilt.bimodule import (ModuleAction, BimoduleSpec, free_rank,
                             verify_rank_certificate, torsion_window,
                             slope_table, goldie_rank,
                             verify_goldie_certificate, bimodule_ranks)
from grfilt.linspace import span, restrict_degree


@pytest.fixture(scope="module")
def corner_spec():
    ring = make("R_2x2", degcap=18)
    carrier, _ = two_sided_closure(ring.pres, [ring.el("beta")])
    return ring, BimoduleSpec("corner", ring.ambient, carrier,
                              ring.el("alpha"), ring.el("alpha"))


def test_corner_ranks_one_and_two(corner_spec):
    ring, spec = corner_spec
    left = free_rank(spec.action("left"), 8)
    right = free_rank(spec.action("right"), 8)
    assert (left.verdict, left.rank) == ("free", 1)
    assert (right.verdict, right.rank) == ("free", 2)
    assert list(left.generator_degrees) == [0]
    assert list(right.generator_degrees) == [0, 1]
    # alpha raises corner degree by 1 from the left, 2 from the right
    assert left.effective_step == 1 and right.effective_step == 2


def test_rank_certificates_reverify(corner_spec):
    ring, spec = corner_spec
    for side in ("left", "right"):
        act = spec.action(side)
        rep = free_rank(act, 8)
        assert verify_rank_certificate(act, rep)


def test_shallow_depth_is_inconclusive(corner_spec):
    ring, spec = corner_spec
    rep = free_rank(spec.action("right"), 1)
    assert rep.verdict == "inconclusive" and rep.rank is None


def test_nilpotent_actor_gives_not_free(corner_spec):
    ring, spec = corner_spec
    amb = ring.ambient
    act = ModuleAction("corner-by-beta", amb,
                       span(amb, [amb.one()]), ring.el("beta"), "right")
    rep = free_rank(act, 4)
    assert rep.verdict == "not free"
    assert rep.relation["kind"] == "nilpotent"
    assert verify_rank_certificate(act, rep)


def test_collision_relation_is_caught(corner_spec):
    ring, spec = corner_spec
    amb = ring.ambient
    fld = amb.field
    # t = 2 + beta satisfies (t - 2)^2 = 0, so t^2 = 4t - 4 and the orbit
    # of 1 collides at the second power
    actor = amb.one().scale(fld.of(2)) + ring.el("beta")
    act = ModuleAction("unipotent-shift", amb,
                       span(amb, [amb.one()]), actor, "left")
    rep = free_rank(act, 6)
    assert rep.verdict == "not free"
    assert rep.relation["kind"] == "collision"
    assert rep.relation["power"] == 2
    assert verify_rank_certificate(act, rep)


def test_verifier_rejects_tampered_rank(corner_spec):
    ring, spec = corner_spec
    act = spec.action("left")
    rep = free_rank(act, 8)
    forged = type(rep)(rep.name, rep.side, rep.verdict, rep.rank, rep.depth,
                       rep.effective_step, rep.generator_degrees,
                       rep.generators + (ring.el("xe12"),), rep.relation,
                       rep.spanned_through)
    assert not verify_rank_certificate(act, forged)


def test_torsion_window_under_corner_action(corner_spec):
    ring, spec = corner_spec
    amb = ring.ambient
    # right multiplication by beta kills the whole corner
    act = ModuleAction("corner-killed", amb, spec.carrier,
                       ring.el("beta"), "right")
    tor = torsion_window(act, max_power=1)
    assert tor.dim == restrict_degree(spec.carrier,
                                      amb.degcap - 1).dim
    # the alpha action is torsion free
    assert torsion_window(spec.action("right"), max_power=2).dim == 0


def test_slope_probe_shows_twist_factor(corner_spec):
    ring, spec = corner_spec
    tab = slope_table(spec.action("right"), 8)
    assert tab["effective_step"] == 2
    last = tab["rows"][-1]
    assert last["raw_slope"] == 1.0 and last["twist_corrected"] == 2.0


def test_goldie_ranks_and_certificates(corner_spec):
    ring, spec = corner_spec
    for side, expected in (("left", 1), ("right", 2)):
        act = spec.action(side)
        rep = goldie_rank(act, 8)
        assert rep.verdict == "certified" and rep.rank == expected
        assert verify_goldie_certificate(act, rep)


def test_goldie_refuses_series_mode():
    ring = make("R_prime")
    carrier, _ = two_sided_closure(ring.pres, [ring.el("beta")])
    act = ModuleAction("series-corner", ring.ambient, carrier,
                       ring.el("alpha"), "right")
    with pytest.raises(ValueError, match="polynomial mode"):
        goldie_rank(act, 4)


def test_bimodule_ranks_bundle(corner_spec):
    ring, spec = corner_spec
    both = bimodule_ranks(spec, 8)
    assert both["actions_commute"]
    assert both["left"].rank == 1 and both["right"].rank == 2
