"""Entanglement-assisted quantum code parameters from classical hull data."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundViolated, HullOutOfRange, NoApplicableFamily, NotASquare, NoValidOmega, ParamOutOfRange
from .grs import ConstructionRequest, construct


@dataclass(frozen=True)
class EaqeccParams:
    """[[n, k, d; c]]_q: k logical qudits in n physical ones using c ebits."""

    q: int
    n: int
    k: int
    d: int
    c: int

    def __post_init__(self) -> None:
        if not 0 <= self.c <= self.n - 1:
            raise ValueError(f"ebit count {self.c} outside [0, n-1]")
        if self.k < 0 or self.d < 1:
            raise ValueError("need k >= 0 and d >= 1")

    def cell(self) -> str:
        """Bracket notation used in the published tables, e.g. ``[[10, 1, 9,7]]_16``."""
        return f"[[{self.n}, {self.k}, {self.d},{self.c}]]_{self.q}"

    def as_list(self) -> list[int]:
        return [self.n, self.k, self.d, self.c]


@dataclass(frozen=True)
class TableRow:
    k: int
    s: int
    first: EaqeccParams
    second: EaqeccParams

    def to_json(self) -> dict:
        return {"k": self.k, "s": self.s, "first": self.first.as_list(), "second": self.second.as_list()}


def derive_pair(q: int, n: int, k: int, d: int, d_dual: int, hull_dim: int) -> tuple[EaqeccParams, EaqeccParams]:
    """The two EAQECCs obtained from an [n, k, d] code with the given hull dimension."""
    h = hull_dim
    if not 0 <= h <= min(k, n - k):
        raise HullOutOfRange(f"hull dimension {h} outside [0, {min(k, n - k)}]")
    return EaqeccParams(q, n, k - h, d, n - k - h), EaqeccParams(q, n, n - k - h, d_dual, k - h)


def singleton_defect(e: EaqeccParams) -> int:
    """(n + c - k) - 2(d - 1); zero exactly for MDS EAQECCs."""
    defect = (e.n + e.c - e.k) - 2 * (e.d - 1)
    if defect < 0:
        raise BoundViolated(f"{e.cell()} violates the EA Singleton bound by {-defect}")
    return defect


def emit_table(q: int, n: int, family: str = "auto", verify: bool = True) -> list[TableRow]:
    """Rows (k, s) for 2 <= k <= n/2 and every hull dimension s the family reaches.

    Each row comes from an actually constructed code whose hull dimension was
    checked by both oracles (unless ``verify`` is False).  The classical code
    is MDS, so d = n - k + 1 and its dual has distance k + 1.
    """
    rows = []
    reasons: dict[str, str] = {}
    for k in range(2, n // 2 + 1):
        for s in range(1, k + 1):
            try:
                res = construct(ConstructionRequest(q, n, k, s, family), verify=verify)
            except NoApplicableFamily as exc:
                reasons.update(exc.reasons)
                continue
            except (ParamOutOfRange, NotASquare, NoValidOmega) as exc:
                reasons[family] = str(exc)
                continue
            first, second = derive_pair(q, n, k, n - k + 1, k + 1, res.requested_l)
            singleton_defect(first)
            singleton_defect(second)
            rows.append(TableRow(k, s, first, second))
    if not rows:
        raise NoApplicableFamily(f"no family yields rows for q={q}, n={n}", reasons)
    return rows


def format_table(rows: list[TableRow]) -> str:
    header = ("k", "s", "[[n,k1,d1;c1]]_q", "k", "s", "[[n,k2,d2;c2]]_q")
    body = [(str(r.k), str(r.s), r.first.cell(), str(r.k), str(r.s), r.second.cell()) for r in rows]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(6)]

    def fmt(line: tuple[str, ...]) -> str:
        left = "  ".join(x.ljust(w) for x, w in zip(line[:3], widths[:3]))
        right = "  ".join(x.ljust(w) for x, w in zip(line[3:], widths[3:]))
        return f"{left} | {right}".rstrip()

    return "\n".join(fmt(line) for line in [header] + body) + "\n"
