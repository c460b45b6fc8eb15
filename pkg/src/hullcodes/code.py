"""Generic [n, k] linear codes: dual, hull, minimum distance."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from . import _np, linalg
from .errors import InstanceTooLarge
from .field import FieldSpec
from .linalg import MatrixGF

DEFAULT_CAP = 2**22
# number of codewords materialized at once by the distance enumerator
_BLOCK = 2**16


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by a full-rank ``k x n`` generator matrix.

    The generator is kept exactly as supplied; two codes are the same code
    when their row spaces agree (see :meth:`same_code`), not when the
    matrices are equal.
    """

    G: MatrixGF

    def __post_init__(self) -> None:
        if self.G.rows < 1 or self.G.rows > self.G.cols:
            raise ValueError(f"need 1 <= k <= n, got k={self.G.rows}, n={self.G.cols}")
        if linalg.rank(self.G) != self.G.rows:
            raise ValueError("generator matrix is not full rank")

    @property
    def field(self) -> FieldSpec:
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    def dual(self) -> LinearCode:
        return LinearCode(linalg.nullspace_basis(self.G))

    def hull_basis(self) -> MatrixGF:
        """Basis of C ∩ C⊥ by intersecting the code with its dual."""
        H = linalg.nullspace_basis(self.G)
        return linalg.rowspace_intersection(self.G, H)

    def hull_dim_gram(self) -> int:
        """Hull dimension as k - rank(G G^t)."""
        return self.k - linalg.rank(gram(self.G))

    def contains(self, word) -> bool:
        return linalg.in_rowspace(self.G, word)

    def same_code(self, other: LinearCode) -> bool:
        return self.field == other.field and linalg.same_rowspace(self.G, other.G)

    def encode(self, message) -> list[int]:
        return linalg.vec_mat(self.field, message, self.G)

    def min_distance(self, cap: int = DEFAULT_CAP) -> int:
        return min_distance(self.G, cap)

    def is_mds(self, cap: int = DEFAULT_CAP) -> bool:
        return self.min_distance(cap) == self.n - self.k + 1

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n, "k": self.k, "generator": self.G.to_json()}

    @classmethod
    def from_json(cls, data: dict | str) -> LinearCode:
        if isinstance(data, str):
            data = json.loads(data)
        f = FieldSpec.from_json(data["field"])
        code = cls(MatrixGF.from_json(f, data["generator"]))
        if (code.n, code.k) != (data["n"], data["k"]):
            raise ValueError("declared n/k disagree with the generator")
        return code


def gram(G: MatrixGF) -> MatrixGF:
    return linalg.matmul(G, linalg.transpose(G))


def min_distance(G: MatrixGF, cap: int = DEFAULT_CAP) -> int:
    """Minimum weight over all nonzero codewords, by enumerating messages.

    Scalar multiples share a weight, so only messages whose first nonzero
    coefficient is 1 are visited: for each leading row i the words
    ``row_i + span(rows after i)`` are scanned.  The span of the trailing
    rows is materialized once as a numpy block; any rows between i and that
    block are looped over in Python.
    """
    f, k, n = G.field, G.rows, G.cols
    q = f.q
    if q**k > cap:
        raise InstanceTooLarge(f"q^k = {q}^{k} exceeds the enumeration cap {cap}")
    rows = np.array(G.entries, dtype=np.int64)
    # multiples[i][c] = c * row_i
    multiples = [_np.mul(f, np.arange(q, dtype=np.int64)[:, None], rows[i][None, :]) for i in range(k)]
    depth = 0
    while depth < k - 1 and q ** (depth + 1) <= _BLOCK:
        depth += 1
    # block[j] for j < q^t spans the last t rows
    block = np.zeros((1, n), dtype=np.int64)
    for i in range(k - depth, k):
        block = _np.add(f, block[:, None, :], multiples[i][None, :, :]).reshape(-1, n)
    best = n
    for lead in range(k):
        tail = k - 1 - lead
        if tail <= depth:
            words = _np.add(f, block[: q**tail], rows[lead])
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
            continue
        middle = range(lead + 1, k - depth)
        for coeffs in itertools.product(range(q), repeat=len(middle)):
            offset = rows[lead]
            for i, c in zip(middle, coeffs):
                if c:
                    offset = _np.add(f, offset, multiples[i][c])
            words = _np.add(f, block, offset)
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best
