"""Acceptance suite: one test per headline claim, one pass/fail line each.

Every test compares an independent witness computation (rank oracle, Bott
cohomology, or elimination) against fixed expected values.  Expected values
are stated literally; where a witness disagrees the test is left to fail so
the discrepancy stays visible.
"""

import os
import time
from itertools import product

import pytest

from minorrel.birep import character_A, dim_at, gr_components_bivariate, gr_labels, predicted_character, transpose_duality
from minorrel.bott import bott_weight, lemma_4_3_character, verify_lemma_4_4
from minorrel.partitions import dim_schur, partitions_of, weyl_dim_weight
from minorrel.polyring import RingContext
from minorrel.rees import fiber_type_check
from minorrel.symfunc import plethysm_schur, schur_multiply
from minorrel.witness import (
    koszul_h1_dim,
    relation_dims,
    subspace_variety_gens,
    veronese_presentation_dims,
)


def timed(limit_s):
    class _Timer:
        def __enter__(self):
            self.t0 = time.perf_counter()
            return self

        def __exit__(self, *exc):
            if exc[0] is None:
                assert time.perf_counter() - self.t0 < limit_s

    return _Timer()


def test_criterion_01_minor_relations_2x4():
    with timed(5):
        dims = relation_dims(RingContext(2, 4), "minors", 4)
    assert {d: dims[d][1] for d in (2, 3, 4)} == {2: 1, 3: 0, 4: 0}


def test_criterion_02_minor_relations_3x4():
    with timed(600):
        dims = relation_dims(RingContext(3, 4), "minors", 4)
    assert {d: dims[d][1] for d in (2, 3, 4)} == {2: 6, 3: 10, 4: 0}


def test_criterion_03_minor_relations_3x3_vanish():
    with timed(120):
        dims = relation_dims(RingContext(3, 3), "minors", 4)
    assert {d: dims[d][1] for d in (2, 3, 4)} == {2: 0, 3: 0, 4: 0}


def test_criterion_04_permanent_relations_3x3():
    with timed(600):
        dims = relation_dims(RingContext(3, 3), "permanents", 3)
    # the quotient in degree 2: dim Sym^2 of the 36 permanent span is 666
    assert dim_at(character_A(2, "permanents"), 3, 3) == 666 - dims[2][1]
    assert {d: dims[d][1] for d in (2, 3)} == {2: 180, 3: 120}


def test_criterion_05_koszul_homology_3x3():
    with timed(900):
        witnessed = {
            d: koszul_h1_dim(RingContext(3, 3), "minors", d) for d in (2, 3, 4, 5)
        }
    assert witnessed == {2: 0, 3: 16, 4: 99, 5: 216}


def test_criterion_06_permanent_koszul_vanishing_3x3():
    with timed(900):
        witnessed = koszul_h1_dim(RingContext(3, 3), "permanents", 6)
    assert witnessed == 0


def test_criterion_07_cohomology_vanishing_sweep():
    with timed(60):
        for j in range(1, 5):
            for u in range(0, j + 3):
                for v in range(0, j + 3 - u):
                    for r in (1, 2):
                        for m in range(2, 6):
                            for n in range(2, 6):
                                assert verify_lemma_4_4(u, v, j, r, m, n), (
                                    u,
                                    v,
                                    j,
                                    r,
                                    m,
                                    n,
                                )


def test_criterion_08_veronese_layer_presentation_3x3():
    with timed(600):
        out = veronese_presentation_dims(RingContext(3, 3), "minors", 1, 2)
    assert [d for d, v in out["generators"].items() if v] == [1]
    assert [d for d, v in out["relations"].items() if v] == [2]
    bound = dim_at(predicted_character("eq-tor1-Nr", 1), 3, 3)
    assert out["relations"][2] <= bound


def test_criterion_09_filtration_layer_character_identity():
    with timed(10):
        for r in (1, 2, 3):
            for d in (0, 1, 2, 3, 4):
                for m in range(2, 6):
                    for n in range(2, 6):
                        stated = {
                            pair: mult
                            for pair, mult in predicted_character(
                                "lem-4.3", d, r=r
                            ).terms.items()
                            if len(pair[0]) <= m and len(pair[1]) <= n
                        }
                        geo = lemma_4_3_character(r, d, m, n)
                        geo_terms = (
                            dict(geo.terms) if hasattr(geo, "terms") else dict(geo)
                        )
                        assert geo_terms == stated, (r, d, m, n)


def test_criterion_10_subspace_variety_generators():
    with timed(300):
        assert subspace_variety_gens(2, 2) == {1: 0, 2: 15, 3: 0}
        assert subspace_variety_gens(2, 3) == {1: 0, 2: 66, 3: 0}


def test_criterion_11_fiber_type_small_sizes():
    for m, n in [(2, 2), (2, 3), (2, 4), (3, 3)]:
        fiber, table = fiber_type_check(RingContext(m, n))
        assert fiber, (m, n, table)


@pytest.mark.skipif(
    os.environ.get("MINORREL_PROFILE") != "long",
    reason="long-running case; set MINORREL_PROFILE=long to enable",
)
def test_criterion_11_fiber_type_5x3_long_profile():
    fiber, table = fiber_type_check(
        RingContext(5, 3), a_max=3, e_max=3, dominant_only_offtype=True
    )
    assert fiber, table


def test_criterion_12_character_engine_property_suites():
    with timed(120):
        # product commutativity for all diagram pairs up to size 6
        parts = [lam for d in range(7) for lam in partitions_of(d)]
        for lam, mu in product(parts, parts):
            assert schur_multiply(lam, mu).terms == schur_multiply(mu, lam).terms
        # composite functors decompose with positive integer multiplicities
        for outer in [(2,), (1, 1), (3,), (2, 1)]:
            for inner in [(2,), (1, 1), (2, 1)]:
                out = plethysm_schur(outer, inner)
                assert all(isinstance(c, int) and c > 0 for c in out.values())
        # weight cohomology is concentrated in a single degree
        for n in (2, 3):
            for w in product(range(-4, 5), repeat=n):
                res = bott_weight(w)
                euler = weyl_dim_weight(w)
                if res is None:
                    assert euler == 0
                else:
                    ell, dom = res
                    assert (-1) ** ell * weyl_dim_weight(dom) == euler
        # duality is an involution on stated characters
        for name in ("thm-1.1", "thm-3.1"):
            for j in (2, 3, 4):
                P = predicted_character(name, j)
                assert transpose_duality(transpose_duality(P)).terms == P.terms
        # the quadratic slice of the image coordinate ring
        assert character_A(2, "minors").terms == {
            ((1, 1, 1, 1), (1, 1, 1, 1)): 1,
            ((2, 1, 1), (2, 1, 1)): 1,
            ((2, 2), (2, 2)): 1,
        }
        # the eight filtration labels on each side of the degree-3 calculation
        first = set(gr_labels(gr_components_bivariate((1, 1, 1), (2, 1), 8)))
        second = set(gr_labels(gr_components_bivariate((2, 1), (1, 1, 1), 8)))
        assert first == {
            ((1, 1, 1), (2, 1)),
            ((1, 1, 1, 1), (2, 1, 1)),
            ((1, 1, 1, 1), (2, 2)),
            ((1, 1, 1, 1), (3, 1)),
            ((2, 1, 1), (2, 1, 1)),
            ((2, 1, 1), (2, 2)),
            ((2, 1, 1, 1), (2, 2, 1)),
            ((3, 1, 1), (2, 2, 1)),
        }
        assert second == {(b, a) for (a, b) in first}
