"""Crystallographic glued intervals: factor structure, lattice audits,
translation chains."""

import pytest

from axial.cryst import (
    audit_component_affine_relations,
    audit_d_interval,
    audit_factor_meets_joins,
    build_factor_interval,
    check_translation_chain,
    cryst_window_stability,
    factored_translations,
    horizontal_components,
    middle_group_components,
    period_census,
    verify_lattice,
    w_interval_bowtie,
)
from axial.rootdata import EuclideanType, build_root_system

from conftest import coxeter, cryst_data

RANK2 = [("G", 2, None), ("C", 2, None), ("A", 2, (2, 1))]


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + [("B", 3, None)])
def test_horizontal_components_split(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    comps = horizontal_components(cox)
    assert comps
    roots = [r for c in comps for r in c.roots]
    assert len({r.vector for r in roots}) == len(roots)
    for c in comps:
        for r in c.roots:
            assert cox.is_horizontal_root(r.vector)


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + [("B", 3, None)])
def test_factored_translations_multiply_back(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    comps = horizontal_components(cox)
    out = factored_translations(cox, comps)
    assert set(out) == {t.key() for t in cox.T}
    for pieces in out.values():
        assert len(pieces) == len(comps)


def test_middle_group_phi_is_homomorphism():
    cox = coxeter("B", 3)
    for cmg in middle_group_components(cox):
        from axial.midnc import mid_generators

        gens = mid_generators(cmg.mid_rank, max_shift=1)
        for a in gens[:6]:
            for b in gens[:6]:
                assert (cmg.phi(a) * cmg.phi(b)).key() == cmg.phi(a * b).key()


@pytest.mark.parametrize("letter,rank,bigon", RANK2)
def test_glued_interval_contains_both_factors(letter, rank, bigon):
    data = cryst_data(letter, rank, bigon)
    c_keys = set(data.c_interval.keys)
    assert set(data.w_interval.keys) <= c_keys
    assert set(data.factor.interval.keys) <= c_keys
    assert data.d_keys <= set(data.w_interval.keys)
    assert data.d_keys <= set(data.factor.interval.keys)
    for which in "WFDC":
        sub = data.subinterval(which)
        sub.check_bounded()
    # the horizontal slice has no single top element, only a bottom
    h = data.subinterval("H")
    assert data.c_interval.keys[data.c_interval.bottom] in set(h.keys)


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + [("B", 3, None)])
def test_glued_interval_is_lattice(letter, rank, bigon):
    rep = verify_lattice(cryst_data(letter, rank, bigon))
    assert rep.lattice
    assert not rep.bowties
    assert not rep.atom_failures


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + [("B", 3, None)])
def test_audits(letter, rank, bigon):
    data = cryst_data(letter, rank, bigon)
    assert audit_d_interval(data)
    assert audit_factor_meets_joins(data)
    assert audit_component_affine_relations(data.cox, data.factor)


def test_bare_w_interval_bowtie_depends_on_components():
    # two horizontal components: the ungated reflection interval has a bowtie
    assert w_interval_bowtie(coxeter("B", 3)) is not None
    # one horizontal component: no bowtie in the bare interval
    assert w_interval_bowtie(coxeter("G", 2)) is None


@pytest.mark.parametrize("letter,rank,bigon", RANK2)
def test_window_stability_of_census(letter, rank, bigon):
    rs = build_root_system(EuclideanType(letter, rank, bigon))
    assert cryst_window_stability(rs)


def test_period_census_counts_identity_once(g2):
    data = cryst_data("G", 2)
    census = period_census(data.cox, data.c_interval)
    assert census["0"] == 1  # exactly one family at weight zero


def test_translation_chain_single_step_g2(g2):
    for t in g2.T:
        rep = check_translation_chain(g2, t)
        assert rep.consecutive
        assert rep.conjugation_matches_shift
        assert rep.single_step
        assert rep.period_shift == 1


def test_translation_chain_shift_a2():
    cox = coxeter("A", 2, (2, 1))
    reps = [check_translation_chain(cox, t) for t in cox.T]
    for rep in reps:
        assert rep.consecutive
        assert rep.conjugation_matches_shift
    # conjugation by the period power advances the chain three levels here
    assert {rep.period_shift for rep in reps} == {3}
    assert not any(rep.single_step for rep in reps)


def test_factor_interval_structure_g2(g2):
    fd = build_factor_interval(g2)
    import math

    sizes = [len(iv) for iv in fd.factor_intervals]
    expect = math.prod(sizes)
    assert len(fd.interval) == expect
    fd.interval.check_bounded()
