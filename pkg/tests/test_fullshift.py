import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lampk.errors import LampkError, NonAbelianGroupError
from lampk.fullshift import (
    CylinderSpec,
    PeriodicPoint,
    beta_eval,
    coboundary_decompose,
    cylinder_to_chain,
    default_period_bound,
    livsic_check,
    orbit_representatives,
    periodic_orbit_sum,
    shift_point,
)
from lampk.grouprep import builtin
from lampk.sampling import random_chain
from lampk.shiftwords import EMPTY_WORD, Word
from lampk.zchain import ZChain, alpha

C2 = builtin("C2")
C3 = builtin("C3")

words_st = st.builds(
    Word,
    st.dictionaries(st.integers(-3, 4), st.integers(1, 2), max_size=3),
)
chains_st = st.builds(
    ZChain,
    st.lists(st.tuples(words_st, st.integers(-5, 5)), max_size=4),
)
points_st = st.lists(st.integers(0, 2), min_size=1, max_size=5).map(PeriodicPoint)


def test_periodic_point_basics():
    x = PeriodicPoint((1, 0, 1))
    assert x.period == 3
    assert [x.value_at(i) for i in range(-3, 6)] == [1, 0, 1] * 3
    assert x.shifted(1).pattern == (1, 1, 0)
    assert PeriodicPoint((1, 0, 1, 0)).minimal_period() == 2
    assert PeriodicPoint((0, 1, 1)).least_rotation() == (0, 1, 1)
    with pytest.raises(LampkError):
        PeriodicPoint(())


def test_beta_eval_examples():
    assert beta_eval(C2, ZChain.of(EMPTY_WORD), PeriodicPoint((0, 1))) == 1
    assert beta_eval(C2, ZChain.of(Word({0: 1})), PeriodicPoint((1,))) == 1
    assert beta_eval(C2, ZChain.of(Word({0: 1, 1: 1})), PeriodicPoint((1, 0))) == 0
    # eventually-trivial points are words
    assert beta_eval(C2, ZChain.of(Word({2: 1})), Word({2: 1, 5: 1})) == 1
    assert beta_eval(C2, ZChain.of(Word({2: 1})), Word({5: 1})) == 0


def test_beta_requires_abelian():
    s3 = builtin("S3")
    with pytest.raises(NonAbelianGroupError):
        beta_eval(s3, ZChain(), PeriodicPoint((0,)))
    with pytest.raises(NonAbelianGroupError):
        cylinder_to_chain(s3, CylinderSpec({0: 1}))
    with pytest.raises(NonAbelianGroupError):
        coboundary_decompose(s3, ZChain())
    with pytest.raises(NonAbelianGroupError):
        livsic_check(s3, ZChain())


@given(chains_st, chains_st, points_st)
def test_beta_additive(c1, c2, x):
    assert beta_eval(C3, c1 + c2, x) == beta_eval(C3, c1, x) + beta_eval(C3, c2, x)


@given(chains_st, points_st)
def test_beta_shift_equivariant(c, x):
    assert beta_eval(C3, alpha(c), x) == beta_eval(C3, c, shift_point(x, -1))
    assert beta_eval(C3, alpha(c, -1), x) == beta_eval(C3, c, shift_point(x, 1))


def test_cylinder_examples():
    assert cylinder_to_chain(C2, CylinderSpec({0: 1})) == ZChain.of(Word({0: 1}))
    assert cylinder_to_chain(C2, CylinderSpec({0: 0})) == ZChain.of(
        EMPTY_WORD
    ) - ZChain.of(Word({0: 1}))
    expected = (
        ZChain.of(Word({1: 1}))
        - ZChain.of(Word({0: 1, 1: 1}))
        - ZChain.of(Word({0: 2, 1: 1}))
    )
    assert cylinder_to_chain(C3, CylinderSpec({0: 0, 1: 1})) == expected


def test_cylinder_c3_example_by_evaluation():
    # Verify the expansion on all 9 two-coordinate patterns.
    spec = CylinderSpec({0: 0, 1: 1})
    chain = cylinder_to_chain(C3, spec)
    for v0, v1 in product(range(3), repeat=2):
        x = Word({0: v0, 1: v1})
        indicator = 1 if (v0 == 0 and v1 == 1) else 0
        assert beta_eval(C3, chain, x) == indicator


@given(
    st.dictionaries(st.integers(-2, 2), st.integers(0, 2), max_size=3),
    st.lists(st.integers(0, 2), min_size=1, max_size=6),
)
def test_cylinder_indicator_oracle(constraints, pattern):
    # The expanded chain evaluates exactly as the cylinder membership test,
    # and all coefficients are +-1.
    spec = CylinderSpec(constraints)
    chain = cylinder_to_chain(C3, spec)
    assert all(c in (1, -1) for _, c in chain.items())
    x = PeriodicPoint(pattern)
    member = all(x.value_at(p) == v for p, v in spec.constraints.items())
    assert beta_eval(C3, chain, x) == (1 if member else 0)


def test_cylinder_value_range_checked():
    with pytest.raises(LampkError):
        cylinder_to_chain(C2, CylinderSpec({0: 5}))


def _functional_residual(group, f, witness, canonical, x):
    return (
        beta_eval(group, f, x)
        - (
            beta_eval(group, witness, x)
            - beta_eval(group, witness, shift_point(x, 1))
        )
        - beta_eval(group, canonical, x)
    )


def test_coboundary_decompose_examples():
    # pure coboundary: h = 0
    c = ZChain.of(Word({0: 1, 2: 1}), 2)
    f = c - alpha(c)
    witness, canonical = coboundary_decompose(C2, f)
    assert canonical == ZChain()

    # constant 1 is canonical
    witness, canonical = coboundary_decompose(C2, ZChain.of(EMPTY_WORD))
    assert canonical == ZChain.of(EMPTY_WORD)
    assert witness == ZChain()

    # shifted single letter
    f = ZChain.of(Word({2: 1}))
    witness, canonical = coboundary_decompose(C2, f)
    assert canonical == ZChain.of(Word({0: 1}))
    assert witness != ZChain()
    for pattern in product(range(2), repeat=4):
        x = PeriodicPoint(pattern)
        assert _functional_residual(C2, f, witness, canonical, x) == 0


@given(chains_st, points_st)
def test_coboundary_decompose_functional_identity(f, x):
    witness, canonical = coboundary_decompose(C3, f)
    assert all(w.is_canonical() for w in canonical)
    assert _functional_residual(C3, f, witness, canonical, x) == 0


def test_periodic_orbit_sum_examples():
    c = ZChain.of(Word({0: 1, 3: 1}), 5)
    coboundary = c - alpha(c)
    for pattern in ((1,), (0, 1), (1, 1, 0), (1, 0, 1, 1)):
        # chain coboundaries are function coboundaries: orbit sums vanish
        assert periodic_orbit_sum(C2, coboundary, PeriodicPoint(pattern)) == 0
    assert periodic_orbit_sum(C2, ZChain.of(EMPTY_WORD), PeriodicPoint((0, 1, 0))) == 3
    assert periodic_orbit_sum(C2, ZChain.of(Word({0: 1})), PeriodicPoint((1, 0))) == 1


def test_orbit_representatives_dedupe():
    reps = list(orbit_representatives(C2, 4))
    # aperiodic binary necklaces by period: 2, 1, 2, 3
    assert [r.period for r in reps].count(1) == 2
    assert [r.period for r in reps].count(2) == 1
    assert [r.period for r in reps].count(3) == 2
    assert [r.period for r in reps].count(4) == 3
    assert len(set(reps)) == len(reps)
    assert all(r.pattern == r.least_rotation() for r in reps)
    assert all(r.minimal_period() == r.period for r in reps)


def test_default_period_bound():
    assert default_period_bound(ZChain()) == 2
    assert default_period_bound(ZChain.of(EMPTY_WORD)) == 2
    assert default_period_bound(ZChain.of(Word({0: 1}))) == 2
    assert default_period_bound(ZChain.of(Word({0: 1, 2: 1}))) == 4
    f = ZChain.of(Word({-3: 1}))
    assert default_period_bound(f) >= 1


def test_livsic_examples():
    report = livsic_check(C2, ZChain.of(Word({1: 1})) - ZChain.of(Word({4: 1})), 5)
    assert report.is_coboundary_exact and report.periodic_sums_vanish

    report = livsic_check(C2, ZChain.of(EMPTY_WORD), 1)
    assert not report.is_coboundary_exact
    assert not report.periodic_sums_vanish
    assert report.violating_orbit == PeriodicPoint((0,))
    assert report.violating_sum == 1

    report = livsic_check(C2, ZChain.of(Word({0: 1})), 1)
    assert report.violating_orbit == PeriodicPoint((1,))
    assert report.violating_sum == 1


@given(chains_st)
def test_livsic_forward_direction(m):
    # coboundaries sum to zero over every periodic orbit, for every period
    f = m - alpha(m)
    report = livsic_check(C3, f, max_period=5)
    assert report.is_coboundary_exact
    assert report.periodic_sums_vanish


def test_livsic_converse_fuzz_small():
    rng = random.Random(3)
    for _ in range(150):
        f = random_chain(rng, C3, range(0, 3), max_terms=4)
        report = livsic_check(C3, f)
        assert report.consistent, (f, report)
