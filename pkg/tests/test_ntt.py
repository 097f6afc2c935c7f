import numpy as np
import pytest

from ctishare.mhe.ntt import NttPlan, get_plan, is_ntt_modulus, schoolbook_negacyclic

SMALL_RINGS = [
    (4, 97),
    (8, 97),
    (16, 7681),
    (32, 12289),
    (64, 12289),
]


@pytest.mark.parametrize("n,q", SMALL_RINGS)
def test_roundtrip_small(n, q):
    plan = NttPlan(q, n)
    rng = np.random.default_rng(n)
    a = rng.integers(0, q, size=n, dtype=np.uint64)
    assert np.array_equal(plan.inverse(plan.forward(a)), a)
    assert np.array_equal(plan.forward(plan.inverse(a)), a)


@pytest.mark.parametrize("n,q", SMALL_RINGS)
def test_matches_schoolbook(n, q):
    plan = NttPlan(q, n)
    rng = np.random.default_rng(n + 1)
    for _ in range(10):
        a = rng.integers(0, q, size=n, dtype=np.uint64)
        b = rng.integers(0, q, size=n, dtype=np.uint64)
        via_ntt = plan.inverse(plan.pointwise(plan.forward(a), plan.forward(b)))
        ref = schoolbook_negacyclic(a, b, q, n)
        assert np.array_equal(via_ntt, ref)


def test_roundtrip_production_size():
    q = 0x3FFFFFFF000001  # 54-bit, == 1 mod 2^15
    assert is_ntt_modulus(q, 4096)
    plan = get_plan(q, 4096)
    rng = np.random.default_rng(99)
    a = rng.integers(0, q, size=4096, dtype=np.uint64)
    assert np.array_equal(plan.inverse(plan.forward(a)), a)


def test_linearity_production_size():
    q = 0x3FFFFFFF000001
    plan = get_plan(q, 4096)
    rng = np.random.default_rng(5)
    a = rng.integers(0, q, size=4096, dtype=np.uint64)
    b = rng.integers(0, q, size=4096, dtype=np.uint64)
    fa, fb = plan.forward(a), plan.forward(b)
    fsum = plan.forward((a.astype(object) + b.astype(object) % q).astype(np.uint64) % np.uint64(q))
    assert np.array_equal(fsum, (fa.astype(object) + fb.astype(object)).astype(object) % q)


def test_plan_cache_returns_same_object():
    assert get_plan(97, 8) is get_plan(97, 8)


def test_rejects_non_power_of_two():
    with pytest.raises(ValueError):
        NttPlan(97, 12)


def test_rejects_bad_modulus():
    with pytest.raises(ValueError):
        NttPlan(101, 8)  # 101 - 1 not divisible by 16
