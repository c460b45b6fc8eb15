"""Dense exact linear algebra over a :class:`~hullcodes.field.FieldSpec`."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, OracleMismatch
from .field import FieldSpec


@dataclass(frozen=True)
class MatrixGF:
    """Immutable ``rows x cols`` matrix; ``entries`` is a tuple of row tuples."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} matrix")
        q = self.field.q
        if any(not 0 <= x < q for r in self.entries for x in r):
            raise ValueError(f"entry outside {self.field!r}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixGF:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("cols must be given for an empty matrix")
            cols = len(rows[0])
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixGF:
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixGF:
        return cls.from_rows(field, [[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.tolist()}

    @classmethod
    def from_json(cls, field: FieldSpec, data: dict | str) -> MatrixGF:
        if isinstance(data, str):
            data = json.loads(data)
        m = cls.from_rows(field, data["entries"], data["cols"])
        if m.rows != data["rows"]:
            raise DimensionMismatch(f"declared {data['rows']} rows, found {m.rows}")
        return m


def _rref_rows(f: FieldSpec, rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """In-place Gauss-Jordan on a list of row lists; returns (nonzero rows, pivots)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            inv = f.inv(lead)
            rows[r] = [f.mul(inv, x) if x else 0 for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = f.neg(rows[i][c])
                rows[i] = [f.add(x, f.mul(factor, y)) if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(M: MatrixGF) -> tuple[MatrixGF, list[int]]:
    """Reduced row echelon form (zero rows kept at the bottom) and pivot columns."""
    nonzero, pivots = _rref_rows(M.field, M.tolist(), M.cols)
    full = nonzero + [[0] * M.cols for _ in range(M.rows - len(nonzero))]
    return MatrixGF.from_rows(M.field, full, M.cols), pivots


def rank(M: MatrixGF) -> int:
    return len(_rref_rows(M.field, M.tolist(), M.cols)[1])


def row_basis(M: MatrixGF) -> MatrixGF:
    """RREF basis of the row space (zero rows dropped)."""
    nonzero, _ = _rref_rows(M.field, M.tolist(), M.cols)
    return MatrixGF.from_rows(M.field, nonzero, M.cols)


def nullspace_basis(M: MatrixGF) -> MatrixGF:
    """Rows form a basis of ``{x : M x^t = 0}``."""
    f = M.field
    reduced, pivots = _rref_rows(f, M.tolist(), M.cols)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * M.cols
        v[fc] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = f.neg(row[fc])
        basis.append(v)
    return MatrixGF.from_rows(f, basis, M.cols)


def transpose(A: MatrixGF) -> MatrixGF:
    entries = [[A.entries[i][j] for i in range(A.rows)] for j in range(A.cols)]
    return MatrixGF.from_rows(A.field, entries, A.rows)


def matmul(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    if A.field != B.field:
        raise DimensionMismatch("matrices over different fields")
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    f = A.field
    bcols = transpose(B).entries
    return MatrixGF.from_rows(f, [[f.dot(r, c) for c in bcols] for r in A.entries], B.cols)


def vstack(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    if A.field != B.field or A.cols != B.cols:
        raise DimensionMismatch("vstack needs matching field and column count")
    return MatrixGF(A.field, A.rows + B.rows, A.cols, A.entries + B.entries)


def vec_mat(f: FieldSpec, x: Sequence[int], M: MatrixGF) -> list[int]:
    """Row vector times matrix."""
    out = [0] * M.cols
    for xi, row in zip(x, M.entries):
        if xi:
            out = [f.add(o, f.mul(xi, r)) if r else o for o, r in zip(out, row)]
    return out


def solve(A: MatrixGF, b: Sequence[int]) -> list[int] | None:
    """Some ``x`` with ``A x = b``, or None if the system is inconsistent."""
    f = A.field
    if len(b) != A.rows:
        raise DimensionMismatch(f"rhs has length {len(b)}, expected {A.rows}")
    aug = [list(r) + [bi] for r, bi in zip(A.entries, b)]
    reduced, pivots = _rref_rows(f, aug, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [0] * A.cols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return x


def in_rowspace(M: MatrixGF, vec: Sequence[int]) -> bool:
    if len(vec) != M.cols:
        raise DimensionMismatch("vector length differs from column count")
    if M.rows == 0:
        return all(v == 0 for v in vec)
    return solve(transpose(M), vec) is not None


def same_rowspace(A: MatrixGF, B: MatrixGF) -> bool:
    return all(in_rowspace(B, r) for r in A.entries) and all(in_rowspace(A, r) for r in B.entries)


def rowspace_intersection(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    """Basis of rowspace(A) ∩ rowspace(B) from the left kernel of [A; B]."""
    if A.field != B.field or A.cols != B.cols:
        raise DimensionMismatch("intersection needs matching field and column count")
    f = A.field
    S = vstack(A, B)
    kernel = nullspace_basis(transpose(S))
    # z = (x, y) with xA + yB = 0, so xA lies in both row spaces
    products = [vec_mat(f, z[: A.rows], A) for z in kernel.entries]
    basis, _ = _rref_rows(f, products, A.cols)
    expected = rank(A) + rank(B) - rank(S)
    if len(basis) != expected:
        raise OracleMismatch(f"intersection has dim {len(basis)}, dimension formula gives {expected}")
    return MatrixGF.from_rows(f, basis, A.cols)
