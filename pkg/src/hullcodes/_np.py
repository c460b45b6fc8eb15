"""Vectorized field arithmetic on integer-encoded numpy arrays.

Only used by the bulk checkers (distance enumeration, batched witness
solves); the reference paths in ``linalg`` and ``grs`` stay scalar.
"""

from __future__ import annotations

import functools

import numpy as np

from .field import FieldSpec


@functools.lru_cache(maxsize=None)
def _log_exp(f: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    n = f.q - 1
    g = f.primitive_element()
    exp = np.zeros(2 * n, dtype=np.int64)
    log = np.zeros(f.q, dtype=np.int64)
    x = 1
    for i in range(n):
        exp[i] = x
        log[x] = i
        x = f.mul(x, g)
    exp[n:] = exp[:n]
    return log, exp


_ADD_TABLE_LIMIT = 2**11


@functools.lru_cache(maxsize=None)
def _add_table(f: FieldSpec) -> np.ndarray:
    x = np.arange(f.q, dtype=np.int64)
    return _digit_add(f, x[:, None], x[None, :]).ravel()


def add(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if f.p == 2:
        return np.bitwise_xor(a, b)
    if f.m == 1:
        return (a + b) % f.p
    if f.q <= _ADD_TABLE_LIMIT:
        return _add_table(f)[np.asarray(a) * f.q + np.asarray(b)]
    return _digit_add(f, a, b)


def _digit_add(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(np.broadcast_shapes(np.shape(a), np.shape(b)), dtype=np.int64)
    scale = 1
    for _ in range(f.m):
        out += ((a // scale + b // scale) % f.p) * scale
        scale *= f.p
    return out


def neg(f: FieldSpec, a: np.ndarray) -> np.ndarray:
    if f.p == 2:
        return a
    if f.m == 1:
        return (-a) % f.p
    out = np.zeros(np.shape(a), dtype=np.int64)
    scale = 1
    for _ in range(f.m):
        out += ((-(a // scale)) % f.p) * scale
        scale *= f.p
    return out


def mul(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if f.m == 1:
        return (a * b) % f.p
    log, exp = _log_exp(f)
    a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    out = exp[log[a] + log[b]]
    return np.where((a == 0) | (b == 0), 0, out)


def matmul(f: FieldSpec, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Field matrix product of (M, r) by (r, c)."""
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    acc = np.zeros((X.shape[0], Y.shape[1]), dtype=np.int64)
    for j in range(X.shape[1]):
        acc = add(f, acc, mul(f, X[:, j : j + 1], Y[j : j + 1, :]))
    return acc
