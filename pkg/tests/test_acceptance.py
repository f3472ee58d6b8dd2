"""Acceptance gate: one test (one pass/fail line under `pytest -v`) per
criterion.  Expected values live in the packaged golden data files; derived
counts were first produced by the independent oracles exercised in the
per-module tests and then frozen."""

import json
import math
import random
import time
from importlib import resources

import pytest

from axial.winterval import coarse_table

from conftest import coxeter, cryst_data, garside_data, mid_interval, w_interval


def golden(name: str) -> dict:
    path = resources.files("axial") / "data" / "golden" / name
    data = json.loads(path.read_text())
    data.pop("description", None)
    return data


# -- 1: the rank-8 coarse grid (long build, gated) -------------------------


@pytest.mark.full
def test_criterion_01_e8_coarse_table():
    table = coarse_table(coxeter("E", 8))
    assert table.json() == golden("coarse_e8.json")
    assert table.top == tuple(reversed(table.bottom))


# -- 2: the rank-2 hexagonal coarse grid, under a second ------------------


def test_criterion_02_g2_coarse_table_fast(g2):
    t0 = time.monotonic()
    table = coarse_table(g2)
    elapsed = time.monotonic() - t0
    assert table.json() == golden("coarse_g2.json")
    assert elapsed < 1.0


# -- 3: horizontal decompositions for every type ---------------------------


def test_criterion_03_horizontal_decompositions():
    from axial.rootdata import (EuclideanType, build_root_system,
                                horizontal_decomposition)

    expect = golden("horizontal.json")["components"]
    seen = {}
    for letter, rank, bigon in [
        ("G", 2, None), ("C", 2, None), ("A", 2, (2, 1)),
        ("B", 3, None), ("C", 3, None), ("A", 3, (2, 2)), ("A", 3, (3, 1)),
        ("D", 4, None), ("F", 4, None), ("B", 4, None), ("C", 4, None),
        ("A", 4, (3, 2)), ("A", 4, (4, 1)),
        ("E", 6, None), ("E", 7, None), ("E", 8, None),
    ]:
        t = EuclideanType(letter, rank, bigon)
        rs = build_root_system(t)
        seen[str(t)] = [n for n, _ in horizontal_decomposition(rs)]
    assert seen == expect


# -- 4: middle-group interval sizes and the noncrossing isomorphism --------


def test_criterion_04_mid_interval_counts_and_iso():
    from axial.midnc import interval_ncb_map, ncb_from_element

    counts = golden("ncb_counts.json")
    for n in range(1, 7):
        iv = mid_interval(n)
        assert len(iv) == math.comb(2 * n, n) == counts[str(n)]
    for n in range(1, 6):
        iv = mid_interval(n)
        m = interval_ncb_map(iv)
        assert len(m) == len(iv)
        keys = list(m)
        refines = lambda p, q: all(
            any(set(bp) <= set(bq) for bq in q) for bp in p)
        for p in keys:
            for q in keys:
                assert iv.leq(m[p], m[q]) == refines(p, q)


# -- 5: the rank-8 factor interval -----------------------------------------


def test_criterion_05_e8_factor_interval():
    from axial.cryst import middle_group_components
    from axial.rootdata import EuclideanType, build_root_system
    from axial.coxeter import CoxeterElement

    rs = build_root_system(EuclideanType("E", 8))
    cox = CoxeterElement(rs, window_mult=1)
    cmgs = middle_group_components(cox)
    ranks = sorted(c.mid_rank for c in cmgs)
    assert ranks == [2, 3, 5]
    sizes = [len(mid_interval(r)) for r in ranks]
    assert sizes == [6, 20, 252]
    assert math.prod(sizes) == 30240


# -- 6: lattice certification with window stability ------------------------

LATTICE_TYPES_FAST = [
    ("G", 2, None), ("C", 2, None), ("A", 2, (2, 1)),
    ("B", 3, None), ("C", 3, None), ("A", 3, (2, 2)), ("A", 3, (3, 1)),
    ("D", 4, None),
]
LATTICE_TYPES_LONG = [
    ("F", 4, None), ("B", 4, None), ("C", 4, None),
    ("A", 4, (3, 2)), ("A", 4, (4, 1)),
]


def _assert_lattice(letter, rank, bigon):
    from axial.cryst import verify_lattice

    rep = verify_lattice(cryst_data(letter, rank, bigon))
    assert rep.lattice and not rep.bowties and not rep.atom_failures


def test_criterion_06_lattice_rank_le_4():
    from axial.cryst import cryst_window_stability, w_interval_bowtie
    from axial.rootdata import EuclideanType, build_root_system

    for letter, rank, bigon in LATTICE_TYPES_FAST:
        _assert_lattice(letter, rank, bigon)
    for letter, rank, bigon in [("G", 2, None), ("C", 2, None),
                                ("A", 2, (2, 1))]:
        rs = build_root_system(EuclideanType(letter, rank, bigon))
        assert cryst_window_stability(rs)
    # the bare reflection interval for B3 is NOT a lattice: bowtie witness
    assert w_interval_bowtie(coxeter("B", 3)) is not None


@pytest.mark.full
def test_criterion_06_lattice_rank_4_long_types():
    for letter, rank, bigon in LATTICE_TYPES_LONG:
        _assert_lattice(letter, rank, bigon)


@pytest.mark.full
def test_criterion_06_window_stability_rank_3():
    from axial.cryst import cryst_window_stability
    from axial.rootdata import EuclideanType, build_root_system

    assert cryst_window_stability(build_root_system(EuclideanType("B", 3)))


# -- 7: the rank-2 hexagonal dual presentation -----------------------------


def test_criterion_07_g2_dual_presentation(g2):
    from axial.garside import w_dual_presentation

    text = w_dual_presentation(g2, w_interval("G", 2)).text()
    for rel in golden("g2_relations.json")["relations"]:
        assert rel in text


# -- 8: Hurwitz transitivity ------------------------------------------------


def test_criterion_08_hurwitz_transitivity(g2):
    from axial.garside import (b_coxeter_element, b_reflections, hurwitz_orbit,
                               minimal_factorizations, period_canonicalizer,
                               w_chain_factorizations)

    for n, count in [(2, 4), (3, 27)]:
        delta = b_coxeter_element(n)
        facts = minimal_factorizations(delta, b_reflections(n).values(), n)
        assert len(facts) == count
        assert hurwitz_orbit(next(iter(sorted(facts, key=str)))) == facts
    chains = w_chain_factorizations(g2, w_interval("G", 2))
    canon = period_canonicalizer(g2)
    classes = {tuple(r.key() for r in canon(c)) for c in chains}
    orbit = hurwitz_orbit(chains[0], canon=canon, key=lambda r: r.key())
    assert orbit == classes


# -- 9: Garside normal forms ------------------------------------------------


def test_criterion_09_garside_normal_forms():
    from axial.garside import garside_nf, nf_conjugate, rewriting_class

    # uniqueness against the exhaustive rewriting oracle
    G2 = garside_data(2)
    letters2 = [k for k in G2.iv.keys if k != G2.bottom_key]
    for a in letters2:
        for b in letters2:
            nfs = {(nf.power, tuple(nf.simples))
                   for nf in (garside_nf([(x, 1) for x in w], G2)
                              for w in rewriting_class(G2, (a, b)))}
            assert len(nfs) == 1
    G3 = garside_data(3)
    letters3 = [k for k in G3.iv.keys if k != G3.bottom_key]
    rng = random.Random(23)
    for _ in range(30):
        word = tuple(rng.choice(letters3) for _ in range(2))
        nfs = {(nf.power, tuple(nf.simples))
               for nf in (garside_nf([(x, 1) for x in w], G3)
                          for w in rewriting_class(G3, word))}
        assert len(nfs) == 1
    # idempotence and termwise conjugation compatibility, >= 10^4 samples
    total = 0
    for n, iters in [(2, 4000), (3, 3500), (4, 3000)]:
        G = garside_data(n)
        letters = [k for k in G.iv.keys if k != G.bottom_key]
        delta = G.top_key
        rng = random.Random(1000 + n)
        for _ in range(iters):
            word = [(rng.choice(letters), rng.choice((1, -1)))
                    for _ in range(rng.randrange(1, 6))]
            nf = garside_nf(word, G)
            again = garside_nf([(s, 1) for s in nf.simples], G)
            assert again.power == 0 and again.simples == nf.simples
            conj_word = [(delta, -1)] + word + [(delta, 1)]
            assert garside_nf(conj_word, G) == nf_conjugate(G, nf)
            total += 1
    assert total >= 10_000


# -- 10: reflection length equals Cayley distance --------------------------


def test_criterion_10_reflection_length_is_bfs_distance():
    from axial.isometry import identity_isometry
    from axial.winterval import hom_from_isometry, hom_inverse, hom_mul

    pads = {("A", 3, (3, 1)): 8}
    for letter, rank, bigon in [
        ("G", 2, None), ("C", 2, None), ("A", 2, (2, 1)),
        ("B", 3, None), ("C", 3, None), ("A", 3, (2, 2)), ("A", 3, (3, 1)),
    ]:
        cox = coxeter(letter, rank, bigon)
        iv = w_interval(letter, rank, bigon)
        gens = [hom_from_isometry(r)
                for r in cox.nearby_reflections(pads.get((letter, rank, bigon), 6))]
        ginvs = [hom_inverse(g) for g in gens]
        # exact distance-<=2 ball; membership in larger balls via one or two
        # generator steps back into it
        dist = {hom_from_isometry(identity_isometry(cox.rs.ambient_dim)): 0}
        for g in gens:
            dist.setdefault(g, 1)
        for g in gens:
            for h in gens:
                dist.setdefault(hom_mul(g, h), 2)
        for k in iv.keys:
            ell = int(iv.weight_of(k))
            h = hom_from_isometry(iv.payload[k])
            if ell <= 2:
                assert dist.get(h) == ell
            elif ell == 3:
                assert h not in dist
                assert any(hom_mul(gi, h) in dist for gi in ginvs)
            else:
                assert ell == 4
                assert h not in dist
                assert not any(hom_mul(gi, h) in dist for gi in ginvs)
                assert any(hom_mul(g2, hom_mul(g1, h)) in dist
                           for g1 in ginvs for g2 in ginvs)


# -- 11: translation factorizations below w --------------------------------


def test_criterion_11_translation_chains_structure(g2):
    from axial.cryst import check_translation_chain

    for cox in (g2, coxeter("A", 2, (2, 1))):
        for t in cox.T:
            rep = check_translation_chain(cox, t)
            # consecutive-level chain r_{k+1} r_k, and conjugation by the
            # period power advances the chain by the measured shift
            assert rep.consecutive
            assert rep.conjugation_matches_shift


@pytest.mark.xfail(strict=True, reason="period conjugation advances this "
                   "chain three levels, not one: the one-step pattern cannot "
                   "hold for the (2,1) bigon class")
def test_criterion_11_translation_chain_single_step_a2():
    from axial.cryst import check_translation_chain

    cox = coxeter("A", 2, (2, 1))
    assert all(check_translation_chain(cox, t).single_step for t in cox.T)


def test_criterion_11_translation_chain_single_step_g2(g2):
    from axial.cryst import check_translation_chain

    assert all(check_translation_chain(g2, t).single_step for t in g2.T)
