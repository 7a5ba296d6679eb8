"""Numerically stable primitives shared across the package.

The sigmoid/softplus pair is written so that log-probabilities of the
noise channel never go through a bare ``log(sigmoid(x))``:

    log r(x)       == -softplus(-x)
    log (1 - r(x)) == -softplus(x)

Both identities are finite for |x| up to ~700.
"""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF


def sigmoid(x):
    """Logistic function, branch-stable for large |x|.

    Accepts scalars or arrays; returns the same shape (float64).
    """
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    if out.ndim == 0:
        return float(out)
    return out


def softplus(x):
    """log(1 + exp(x)) without overflow; exact asymptote for large x.

    For x > 0 this evaluates x + log1p(exp(-x)), so the identity
    softplus(x) == x + softplus(-x) holds bit-for-bit.
    """
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    pos = x > 0
    out[pos] = x[pos] + np.log1p(np.exp(-x[pos]))
    out[~pos] = np.log1p(np.exp(x[~pos]))
    if out.ndim == 0:
        return float(out)
    return out


def log_sigmoid(x):
    """log r(x) = -softplus(-x)."""
    return -softplus(-np.asarray(x, dtype=np.float64)) if np.ndim(x) else -softplus(-x)


def logsumexp(v, axis=None, keepdims=False):
    """Max-shifted log-sum-exp. Raises on empty input."""
    v = np.asarray(v, dtype=np.float64)
    if v.size == 0:
        raise ValueError("logsumexp of empty input")
    vmax = np.max(v, axis=axis, keepdims=True)
    out = np.log(np.sum(np.exp(v - vmax), axis=axis, keepdims=True)) + vmax
    if not keepdims:
        out = np.squeeze(out, axis=axis) if axis is not None else out.reshape(())
    if out.ndim == 0:
        return float(out)
    return out


def pairwise_sum(v):
    """Sum with a fixed, index-based pairwise reduction tree.

    The tree depends only on the input length, never on thread count, so
    results are reproducible. Permutation stability is NOT claimed: the
    tree is index-fixed, so reordering the inputs may change the result.
    """
    v = np.asarray(v, dtype=np.float64).ravel()
    if v.size == 0:
        raise ValueError("pairwise_sum of empty input")
    # pad to a power of two with zeros (x + 0.0 == x exactly), then fold
    n = 1 << (int(v.size - 1).bit_length())
    if n != v.size:
        v = np.concatenate([v, np.zeros(n - v.size)])
    while v.size > 1:
        v = v[0::2] + v[1::2]
    return float(v[0])


def _fnv1a(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & _MASK64
    return h


class RandomStream:
    """Seeded counter-based random stream (Philox 4x64).

    The same (seed, stream) pair yields the same sequence on every
    platform and independently of thread count. Parallel work never
    shares a stream: derive one sub-stream per task with
    :meth:`substream`, which partitions the key space deterministically
    (string tags are hashed with FNV-1a, not Python's salted ``hash``).
    """

    algorithm = "philox4x64"

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed) & _MASK64
        self.stream = int(stream) & _MASK64
        self._gen = np.random.Generator(
            np.random.Philox(key=[self.seed, self.stream])
        )

    def substream(self, tag) -> "RandomStream":
        """Derive an independent stream from an int or string tag."""
        if isinstance(tag, str):
            tag_val = _fnv1a(tag.encode("utf-8"))
        else:
            tag_val = int(tag) & _MASK64
        mixed = _fnv1a(self.stream.to_bytes(8, "little") + tag_val.to_bytes(8, "little"))
        return RandomStream(self.seed, mixed)

    # thin delegations; keep the surface small on purpose
    def random(self, size=None):
        return self._gen.random(size)

    def integers(self, low, high, size=None):
        return self._gen.integers(low, high, size=size)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self._gen.uniform(low, high, size)

    def normal(self, loc=0.0, scale=1.0, size=None):
        return self._gen.normal(loc, scale, size)
