"""Negacyclic number-theoretic transform over Z_q[X]/(X^N + 1).

Twiddle factors follow the merged-psi layout (Longa/Naehrig): the table
entry at index m + i holds psi^brv(i) for the stage with m blocks, so
forward/inverse passes need no separate psi pre/post scaling.  Twiddles
are stored in Montgomery form; data stays in the standard domain.

The transform is generic over (N, q) so tiny rings (N <= 64) can be
cross-checked against schoolbook convolution.
"""

from __future__ import annotations

import numpy as np

from .modmath import ModContext, add_mod, mont_mul, mul_mod, sub_mod


def is_ntt_modulus(q: int, n: int) -> bool:
    return q % (2 * n) == 1


def _find_primitive_2nth_root(q: int, n: int) -> int:
    """Smallest generator-derived primitive 2N-th root of unity mod q."""
    order = 2 * n
    if (q - 1) % order != 0:
        raise ValueError(f"{q} is not NTT-friendly for N={n}")
    cofactor = (q - 1) // order
    for g in range(2, 10000):
        psi = pow(g, cofactor, q)
        if pow(psi, order // 2, q) == q - 1:  # psi^N = -1 => primitive
            return psi
    raise ValueError("no primitive root found")


def _bit_reverse(i: int, bits: int) -> int:
    out = 0
    for _ in range(bits):
        out = (out << 1) | (i & 1)
        i >>= 1
    return out


class NttPlan:
    """Per-(q, N) transform plan with precomputed twiddle tables."""

    def __init__(self, q: int, n: int):
        if n & (n - 1) != 0:
            raise ValueError("ring degree must be a power of two")
        self.q = q
        self.n = n
        self.ctx = ModContext.for_modulus(q)
        bits = n.bit_length() - 1
        psi = _find_primitive_2nth_root(q, n)
        psi_inv = pow(psi, q - 2, q)
        fwd = np.empty(n, dtype=np.uint64)
        inv = np.empty(n, dtype=np.uint64)
        for i in range(n):
            j = _bit_reverse(i, bits)
            fwd[i] = pow(psi, j, q) * self.ctx.r1 % q
            inv[i] = pow(psi_inv, j, q) * self.ctx.r1 % q
        self.psi_brv = fwd
        self.ipsi_brv = inv
        self.n_inv_mont = self.ctx.mont_scalar(pow(n, q - 2, q))

    def forward(self, a: np.ndarray) -> np.ndarray:
        """Coefficients -> evaluations (in plan order), out of place."""
        n, q = self.n, self.ctx.q_u64
        a = a.copy()
        m, t = 1, n
        while m < n:
            t >>= 1
            blk = a.reshape(m, 2, t)
            w = self.psi_brv[m : 2 * m, None]
            u = blk[:, 0, :]
            v = mont_mul(blk[:, 1, :], w, self.ctx)
            s = add_mod(u, v, q)
            d = sub_mod(u, v, q)
            blk[:, 0, :] = s
            blk[:, 1, :] = d
            m <<= 1
        return a

    def inverse(self, a: np.ndarray) -> np.ndarray:
        """Evaluations -> coefficients, exact inverse of forward()."""
        n, q = self.n, self.ctx.q_u64
        a = a.copy()
        m = n >> 1
        t = 1
        while m >= 1:
            blk = a.reshape(m, 2, t)
            w = self.ipsi_brv[m : 2 * m, None]
            u = blk[:, 0, :]
            v = blk[:, 1, :]
            s = add_mod(u, v, q)
            d = mont_mul(sub_mod(u, v, q), w, self.ctx)
            blk[:, 0, :] = s
            blk[:, 1, :] = d
            m >>= 1
            t <<= 1
        return mont_mul(a, np.broadcast_to(self.n_inv_mont, a.shape), self.ctx)

    def pointwise(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return mul_mod(a, b, self.ctx)


def schoolbook_negacyclic(a, b, q: int, n: int) -> np.ndarray:
    """Reference O(N^2) product mod (X^N + 1, q), exact integer arithmetic."""
    out = [0] * n
    a = [int(x) for x in a]
    b = [int(x) for x in b]
    for i in range(n):
        for j in range(n):
            k = i + j
            term = a[i] * b[j]
            if k >= n:
                out[k - n] = (out[k - n] - term) % q
            else:
                out[k] = (out[k] + term) % q
    return np.array(out, dtype=np.uint64)


_PLAN_CACHE: dict[tuple[int, int], NttPlan] = {}


def get_plan(q: int, n: int) -> NttPlan:
    key = (q, n)
    plan = _PLAN_CACHE.get(key)
    if plan is None:
        plan = NttPlan(q, n)
        _PLAN_CACHE[key] = plan
    return plan
