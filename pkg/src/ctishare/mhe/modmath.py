"""Vectorized modular arithmetic on uint64 arrays.

numpy has no 128-bit integer type, so products of ~60-bit residues are
computed through 32-bit limb splitting and reduced with Montgomery's
algorithm (R = 2^64).  All public helpers take and return uint64 arrays
with values in [0, q); q may be any odd modulus below 2^63.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_U32_MASK = np.uint64(0xFFFFFFFF)
_SHIFT32 = np.uint64(32)
_R64 = 1 << 64


def _mul_hi_lo(a: np.ndarray, b: np.ndarray):
    """Full 64x64 -> 128 bit product as (hi, lo) uint64 pairs."""
    a_lo = a & _U32_MASK
    a_hi = a >> _SHIFT32
    b_lo = b & _U32_MASK
    b_hi = b >> _SHIFT32
    ll = a_lo * b_lo
    lh = a_lo * b_hi
    hl = a_hi * b_lo
    hh = a_hi * b_hi
    mid = (ll >> _SHIFT32) + (lh & _U32_MASK) + (hl & _U32_MASK)
    lo = (ll & _U32_MASK) | ((mid & _U32_MASK) << _SHIFT32)
    hi = hh + (lh >> _SHIFT32) + (hl >> _SHIFT32) + (mid >> _SHIFT32)
    return hi, lo


@dataclass(frozen=True)
class ModContext:
    """Precomputed Montgomery constants for one prime modulus."""

    q: int
    q_u64: np.uint64
    qinv_u64: np.uint64  # -q^{-1} mod 2^64
    r1: int  # 2^64 mod q (Montgomery form of 1)
    r2_u64: np.uint64  # 2^128 mod q

    @classmethod
    def for_modulus(cls, q: int) -> "ModContext":
        if q % 2 == 0 or not (2 < q < (1 << 63)):
            raise ValueError(f"modulus must be odd and below 2^63, got {q}")
        qinv = (-pow(q, -1, _R64)) % _R64
        return cls(
            q=q,
            q_u64=np.uint64(q),
            qinv_u64=np.uint64(qinv),
            r1=_R64 % q,
            r2_u64=np.uint64(pow(_R64 % q, 2, q)),
        )

    def to_mont(self, a: np.ndarray) -> np.ndarray:
        return mont_mul(a, np.broadcast_to(self.r2_u64, a.shape), self)

    def mont_scalar(self, value: int) -> np.uint64:
        """Montgomery form of an integer constant."""
        return np.uint64((value % self.q) * self.r1 % self.q)


def mont_redc(hi: np.ndarray, lo: np.ndarray, ctx: ModContext) -> np.ndarray:
    """Montgomery reduction of a 128-bit value (hi, lo) to [0, q)."""
    m = lo * ctx.qinv_u64
    mq_hi, _ = _mul_hi_lo(m, np.broadcast_to(ctx.q_u64, m.shape))
    t = hi + mq_hi + (lo != 0).astype(np.uint64)
    return np.where(t >= ctx.q_u64, t - ctx.q_u64, t)


def mont_mul(a: np.ndarray, b: np.ndarray, ctx: ModContext) -> np.ndarray:
    """a * b * 2^-64 mod q; exact for inputs below q."""
    hi, lo = _mul_hi_lo(a, b)
    return mont_redc(hi, lo, ctx)


def mul_mod(a: np.ndarray, b: np.ndarray, ctx: ModContext) -> np.ndarray:
    """Plain modular product a * b mod q via two reductions."""
    ab_r = mont_mul(a, b, ctx)  # a*b/R
    return mont_mul(ab_r, np.broadcast_to(ctx.r2_u64, ab_r.shape), ctx)


def add_mod(a: np.ndarray, b: np.ndarray, q: np.uint64) -> np.ndarray:
    s = a + b
    return np.where(s >= q, s - q, s)


def sub_mod(a: np.ndarray, b: np.ndarray, q: np.uint64) -> np.ndarray:
    return np.where(a >= b, a - b, a + (q - b))


def neg_mod(a: np.ndarray, q: np.uint64) -> np.ndarray:
    return np.where(a == 0, a, q - a)
