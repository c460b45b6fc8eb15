"""(Extended) generalized Reed-Solomon codes with a prescribed Euclidean hull.

Every family builds a GRS or extended GRS code from evaluation points ``a``
and column multipliers ``v``, then sets the hull dimension by replacing the
first ``s`` multipliers with a value whose square is not 1.  The relation
between ``s`` and the hull dimension ``l`` differs per family:

=====================  ==============  ====================
family                 code length     hull dimension
=====================  ==============  ====================
even-grs               n <= q          k - s
even-egrs              q + 1           k - 1 - s
odd-egrs               q + 1           k - 1 - s, or k - s when k = (q+1)/2
mult-subgroup          n | q - 1       k - 1 - s
mult-subgroup-zero     n + 1           k - s
mult-two-cosets        2m              k - 1 - s
add-subgroup           n | q           k - s
add-two-cosets         2m              k - s
=====================  ==============  ====================

Each result is checked against two independent hull computations before it
is returned unless ``verify=False``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import _np, linalg
from .code import DEFAULT_CAP, LinearCode
from .errors import NoApplicableFamily, NotASquare, NoValidOmega, OracleMismatch, ParamOutOfRange
from .field import FieldSpec, field_of_order, prime_power
from .linalg import MatrixGF

FAMILIES = (
    "even-grs",
    "even-egrs",
    "odd-egrs",
    "mult-subgroup",
    "mult-subgroup-zero",
    "mult-two-cosets",
    "add-subgroup",
    "add-two-cosets",
)
AUTO_ORDER_EVEN = ("even-grs", "even-egrs")
AUTO_ORDER_ODD = (
    "mult-subgroup-zero",
    "mult-subgroup",
    "add-subgroup",
    "odd-egrs",
    "mult-two-cosets",
    "add-two-cosets",
)


@dataclass(frozen=True)
class GrsSpec:
    """Recipe of a (possibly extended) GRS code.

    ``points`` are the evaluation points, ``multipliers`` the column scalars.
    An extended spec evaluates at every field element and appends the
    coefficient of ``x^(k-1)`` as a final coordinate.
    """

    field: FieldSpec
    points: tuple[int, ...]
    multipliers: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self) -> None:
        pts, vs = self.points, self.multipliers
        if len(pts) != len(vs):
            raise ValueError("points and multipliers differ in length")
        if len(set(pts)) != len(pts):
            raise ValueError("evaluation points are not distinct")
        if any(not 0 <= a < self.field.q for a in pts):
            raise ValueError("evaluation point outside the field")
        if any(not 0 < v < self.field.q for v in vs):
            raise ValueError("multipliers must be nonzero field elements")
        if self.extended and set(pts) != set(range(self.field.q)):
            raise ValueError("an extended code evaluates at every field element")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def n(self) -> int:
        return len(self.points) + int(self.extended)


@dataclass(frozen=True)
class ConstructionRequest:
    q: int
    n: int
    k: int
    l: int
    family: str = "auto"


@dataclass(frozen=True)
class ConstructionResult:
    spec: GrsSpec
    code: LinearCode
    requested_l: int
    s_used: int
    family: str
    verified: bool = field(default=False, compare=False)

    def to_json(self) -> dict:
        out = self.code.to_json()
        out.update(
            family=self.family,
            s=self.s_used,
            points=list(self.spec.points),
            multipliers=list(self.spec.multipliers),
            extended=self.spec.extended,
            hull_dim=self.requested_l,
        )
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> ConstructionResult:
        """Rebuild a result from its JSON form; the family is not re-derived."""
        if isinstance(data, str):
            data = json.loads(data)
        code = LinearCode.from_json(data)
        spec = GrsSpec(code.field, tuple(data["points"]), tuple(data["multipliers"]), code.k, bool(data["extended"]))
        if grs_generator(spec) != code.G:
            raise ValueError("generator does not match points/multipliers")
        return cls(spec, code, int(data["hull_dim"]), int(data["s"]), str(data["family"]))


def grs_generator(spec: GrsSpec) -> MatrixGF:
    """k x n matrix with entry (i, j) = v_j * a_j^i; extended adds column e_k."""
    f = spec.field
    rows = []
    for i in range(spec.k):
        row = [f.mul(v, f.pow(a, i)) for a, v in zip(spec.points, spec.multipliers)]
        if spec.extended:
            row.append(int(i == spec.k - 1))
        rows.append(row)
    return MatrixGF.from_rows(f, rows, spec.n)


def dual_weights(f: FieldSpec, points: Sequence[int]) -> list[int]:
    """u_i = prod_{j != i} (a_i - a_j)^(-1), from the defining product."""
    if len(points) < 2:
        raise ValueError("need at least two points")
    return [
        f.inv(f.prod(f.sub(ai, aj) for j, aj in enumerate(points) if j != i)) for i, ai in enumerate(points)
    ]


def _trim_poly(coeffs: Sequence[int]) -> list[int]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


def _witness_system(spec: GrsSpec) -> MatrixGF:
    """Coefficient matrix of the linear system in g's coefficients.

    Plain: row i is u_i * (1, a_i, ..., a_i^(n-k-1)).
    Extended: row i is (1, a_i, ..., a_i^(q-k)) for each field element, plus a
    final row picking out g_(q-k).
    """
    f, k = spec.field, spec.k
    if spec.extended:
        deg = f.q - k
        rows = [[f.pow(a, j) for j in range(deg + 1)] for a in spec.points]
        rows.append([0] * deg + [1])
        return MatrixGF.from_rows(f, rows, deg + 1)
    n = spec.n
    u = dual_weights(f, spec.points)
    rows = [[f.mul(ui, f.pow(a, j)) for j in range(n - k)] for a, ui in zip(spec.points, u)]
    return MatrixGF.from_rows(f, rows, n - k)


def _witness_rhs(spec: GrsSpec, message: Sequence[int]) -> list[int]:
    f = spec.field
    rhs = [f.mul(f.mul(v, v), f.poly_eval(message, a)) for a, v in zip(spec.points, spec.multipliers)]
    if spec.extended:
        rhs.append(message[spec.k - 1] if len(message) >= spec.k else 0)
    return rhs


def hull_membership_witness(spec: GrsSpec, message: Sequence[int]) -> list[int] | None:
    """The polynomial g certifying that the codeword of ``message`` lies in the dual.

    Solves v_i^2 f(a_i) = u_i g(a_i) with deg g <= n-k-1; for extended codes
    v_i^2 f(a_i) = g(a_i) with deg g <= q-k and f_(k-1) = g_(q-k).  Returns
    None when no such g exists.
    """
    if len(_trim_poly(message)) > spec.k:
        raise ValueError(f"message has degree >= k = {spec.k}")
    msg = list(message) + [0] * (spec.k - len(message))
    g = linalg.solve(_witness_system(spec), _witness_rhs(spec, msg))
    return None if g is None else _trim_poly(g)


# --- canonical choices ---


def _non_unit_square(f: FieldSpec) -> int:
    """Smallest nonzero v with v^2 != 1."""
    return next(v for v in range(1, f.q) if f.mul(v, v) != 1)


def _field(q: int) -> FieldSpec:
    try:
        prime_power(q)
    except ValueError as exc:
        raise ParamOutOfRange(str(exc)) from None
    return field_of_order(q)


def _check_k_l(n: int, k: int, l: int, l_max: int) -> None:
    if not 1 < k <= n // 2:
        raise ParamOutOfRange(f"need 1 < k <= floor(n/2) = {n // 2}, got k={k}")
    if not 1 <= l <= l_max:
        raise ParamOutOfRange(f"need 1 <= l <= {l_max}, got l={l}")


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise ParamOutOfRange(reason)


def _finish(
    f: FieldSpec,
    points: Sequence[int],
    mults: Sequence[int],
    k: int,
    l: int,
    s: int,
    family: str,
    extended: bool = False,
    verify: bool = True,
) -> ConstructionResult:
    spec = GrsSpec(f, tuple(points), tuple(mults), k, extended)
    result = ConstructionResult(spec, LinearCode(grs_generator(spec)), l, s, family)
    if verify:
        verify_hull(result)
        result = replace(result, verified=True)
    return result


def verify_hull(result: ConstructionResult) -> int:
    """Check both hull oracles against the requested dimension."""
    by_basis = result.code.hull_basis().rows
    by_gram = result.code.hull_dim_gram()
    if not by_basis == by_gram == result.requested_l:
        raise OracleMismatch(
            f"{result.family}: hull basis dim {by_basis}, Gram dim {by_gram}, requested {result.requested_l}"
        )
    return by_basis


# --- the eight families ---


def construct_even_grs(q: int, n: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    """GRS over GF(2^m) of length n <= q with any hull dimension 1 <= l <= k."""
    f = _field(q)
    _require(f.p == 2 and f.m > 1, f"q = {q} is not 2^m with m > 1")
    _require(1 < n <= q, f"need 1 < n <= q, got n={n}")
    _check_k_l(n, k, l, k)
    points = list(range(n))
    # v_i^2 = u_i makes the code contained in its dual; scaling s columns
    # by a != 1 removes s dimensions from the hull.
    base = [f.sqrt(u) for u in dual_weights(f, points)]
    s = k - l
    a = 2
    mults = [f.mul(a, v) if i < s else v for i, v in enumerate(base)]
    return _finish(f, points, mults, k, l, s, "even-grs", verify=verify)


def construct_even_egrs(q: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    f = _field(q)
    _require(f.p == 2 and f.m > 1, f"q = {q} is not 2^m with m > 1")
    _check_k_l(q + 1, k, l, k - 1)
    s = k - 1 - l
    v = _non_unit_square(f)
    mults = [v] * s + [1] * (q - s)
    return _finish(f, range(q), mults, k, l, s, "even-egrs", extended=True, verify=verify)


def construct_odd_egrs(q: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    f = _field(q)
    _require(f.p != 2 and q > 3, f"q = {q} must be odd and > 3")
    half = (q + 1) // 2
    if k < half:
        _check_k_l(q + 1, k, l, k - 1)
        s = k - 1 - l
    else:
        _check_k_l(q + 1, k, l, k)
        s = k - l
    v = _non_unit_square(f)
    mults = [v] * s + [1] * (q - s)
    return _finish(f, range(q), mults, k, l, s, "odd-egrs", extended=True, verify=verify)


def _subgroup_points(f: FieldSpec, order: int) -> list[int]:
    """(a, a^2, ..., a^order) for a = gamma^((q-1)/order)."""
    alpha = f.pow(f.primitive_element(), (f.q - 1) // order)
    return [f.pow(alpha, i) for i in range(1, order + 1)]


def construct_mult_subgroup(q: int, n: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    f = _field(q)
    _require(f.p != 2 and q > 3, f"q = {q} must be odd and > 3")
    _require(n > 1 and (q - 1) % n == 0, f"n = {n} does not divide q - 1 = {q - 1}")
    _check_k_l(n, k, l, k - 1)
    s = k - 1 - l
    v = _non_unit_square(f)
    mults = [v] * s + [1] * (n - s)
    return _finish(f, _subgroup_points(f, n), mults, k, l, s, "mult-subgroup", verify=verify)


def construct_mult_subgroup_zero(q: int, n: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    """Subgroup of order n plus the point 0; the code has length n + 1."""
    f = _field(q)
    _require(f.p != 2 and q > 3, f"q = {q} must be odd and > 3")
    _require(n > 1 and (q - 1) % n == 0, f"n = {n} does not divide q - 1 = {q - 1}")
    minus_n = f.neg(f.from_int(n))
    if not f.is_square(minus_n):
        raise NotASquare(f"-{n} is not a square in GF({q})")
    _check_k_l(n + 1, k, l, k)
    a = f.sqrt(f.inv(minus_n))  # a^2 = -1/n
    s = k - l
    v = _non_unit_square(f)
    mults = [f.mul(a, v)] * s + [a] * (n - s) + [1]
    points = _subgroup_points(f, n) + [0]
    return _finish(f, points, mults, k, l, s, "mult-subgroup-zero", verify=verify)


def construct_mult_two_cosets(q: int, m: int, n: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    """Points G and wG for the order-m subgroup G and a square w outside G."""
    f = _field(q)
    _require(f.p != 2 and q > 3 and q % 4 == 1, f"q = {q} must be > 3 and 1 mod 4")
    _require(m > 1 and (q - 1) % m == 0, f"m = {m} does not divide q - 1 = {q - 1}")
    _require(n == 2 * m and n < q - 1, f"need n = 2m < q - 1, got n={n}, m={m}")
    _check_k_l(n, k, l, k - 1)
    group = _subgroup_points(f, m)
    members = set(group)
    omega = next((w for w in range(1, q) if w not in members and f.is_square(w)), None)
    if omega is None:
        raise NoValidOmega(f"no square outside the order-{m} subgroup of GF({q})")
    coset = [f.mul(omega, x) for x in group]
    if members & set(coset):
        raise NoValidOmega("cosets overlap")
    # second-coset multiplier squares to -w^(-m), matching u_(m+i)/u_i = -w^(-m) * (w a^i)/a^i
    a = f.sqrt(omega)
    w2 = f.mul(f.fourth_root_of_minus_one(), f.pow(a, -m))
    s = k - 1 - l
    v = _non_unit_square(f)
    mults = [v] * s + [1] * (m - s) + [w2] * m
    return _finish(f, group + coset, mults, k, l, s, "mult-two-cosets", verify=verify)


def _additive_subgroup(f: FieldSpec, order: int) -> list[int]:
    """GF(p)-span of 1, x, ..., x^(t-1) for order = p^t, in encoding order."""
    t = 0
    size = 1
    while size < order:
        size *= f.p
        t += 1
    _require(size == order and 1 <= t <= f.m, f"{order} is not p^t with 1 <= t <= {f.m}")
    # encodings below p^t are exactly the span of the first t monomials
    return list(range(order))


def construct_add_subgroup(q: int, n: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    f = _field(q)
    _require(f.p != 2 and q > 3, f"q = {q} must be odd and > 3")
    _require(n > 1 and q % n == 0, f"n = {n} does not divide q = {q}")
    points = _additive_subgroup(f, n)
    _check_k_l(n, k, l, k)
    s = k - l
    v = _non_unit_square(f)
    mults = [v] * s + [1] * (n - s)
    return _finish(f, points, mults, k, l, s, "add-subgroup", verify=verify)


def construct_add_two_cosets(q: int, m: int, n: int, k: int, l: int, verify: bool = True) -> ConstructionResult:
    """Points G and a + G for an additive subgroup G of order m."""
    f = _field(q)
    _require(f.p != 2 and q > 3 and q % 4 == 1, f"q = {q} must be > 3 and 1 mod 4")
    _require(m > 1 and q % m == 0, f"m = {m} does not divide q = {q}")
    _require(n == 2 * m and n < q, f"need n = 2m < q, got n={n}, m={m}")
    group = _additive_subgroup(f, m)
    _check_k_l(n, k, l, k)
    shift = next(x for x in range(q) if x not in set(group))
    points = group + [f.add(shift, x) for x in group]
    i4 = f.fourth_root_of_minus_one()
    s = k - l
    v = _non_unit_square(f)
    mults = [f.mul(i4, v)] * s + [i4] * (m - s) + [1] * m
    return _finish(f, points, mults, k, l, s, "add-two-cosets", verify=verify)


def _call_family(family: str, q: int, n: int, k: int, l: int, verify: bool) -> ConstructionResult:
    """Run one family on a request whose ``n`` is the code length."""
    if family == "even-grs":
        return construct_even_grs(q, n, k, l, verify)
    if family in ("even-egrs", "odd-egrs"):
        _require(n == q + 1, f"length must be q + 1 = {q + 1}, got {n}")
        fn = construct_even_egrs if family == "even-egrs" else construct_odd_egrs
        return fn(q, k, l, verify)
    if family == "mult-subgroup":
        return construct_mult_subgroup(q, n, k, l, verify)
    if family == "mult-subgroup-zero":
        return construct_mult_subgroup_zero(q, n - 1, k, l, verify)
    if family in ("mult-two-cosets", "add-two-cosets"):
        _require(n % 2 == 0, f"length {n} is odd")
        fn = construct_mult_two_cosets if family == "mult-two-cosets" else construct_add_two_cosets
        return fn(q, n // 2, n, k, l, verify)
    if family == "add-subgroup":
        return construct_add_subgroup(q, n, k, l, verify)
    raise ParamOutOfRange(f"unknown family {family!r}; choose from {', '.join(FAMILIES)} or auto")


def auto_order(q: int) -> tuple[str, ...]:
    return AUTO_ORDER_EVEN if q % 2 == 0 else AUTO_ORDER_ODD


def construct(req: ConstructionRequest, verify: bool = True) -> ConstructionResult:
    """Build a code for ``req``; ``req.n`` is always the code length.

    With ``family="auto"`` the families are tried in a fixed order and the
    first one that accepts the parameters wins.
    """
    try:
        prime_power(req.q)
    except ValueError as exc:
        raise ParamOutOfRange(str(exc)) from None
    if req.family != "auto":
        return _call_family(req.family, req.q, req.n, req.k, req.l, verify)
    reasons: dict[str, str] = {}
    for fam in auto_order(req.q):
        try:
            return _call_family(fam, req.q, req.n, req.k, req.l, verify)
        except (ParamOutOfRange, NotASquare, NoValidOmega) as exc:
            reasons[fam] = str(exc)
    raise NoApplicableFamily(f"no family builds q={req.q}, n={req.n}, k={req.k}, l={req.l}", reasons)


def hull_range(family: str, q: int, n: int, k: int) -> list[int]:
    """Hull dimensions the family can reach for these (q, n, k)."""
    out = []
    for l in range(1, k + 1):
        try:
            _call_family(family, q, n, k, l, verify=False)
        except (ParamOutOfRange, NotASquare, NoValidOmega):
            continue
        out.append(l)
    return out


# --- verification report ---


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def decode_message(code: LinearCode, word: Sequence[int]) -> list[int]:
    """Message x with x G = word (the code must contain ``word``)."""
    x = linalg.solve(linalg.transpose(code.G), list(word))
    if x is None:
        raise ValueError("word is not a codeword")
    return x


class WitnessBatch:
    """Solves the witness system for many messages at once.

    Reducing ``[A | I]`` to RREF gives ``[R | T]`` with ``T A = R``.  For a
    right-hand side b, the first rank(A) entries of ``T b`` are g at the
    pivot coefficients (free coefficients set to 0) and the remaining entries
    must vanish for the system to be consistent.
    """

    def __init__(self, spec: GrsSpec):
        self.spec = spec
        f = spec.field
        A = _witness_system(spec)
        aug = [list(r) + [int(i == j) for j in range(A.rows)] for i, r in enumerate(A.entries)]
        full, pivots = linalg.rref(MatrixGF.from_rows(f, aug, A.cols + A.rows))
        self.pivots = [c for c in pivots if c < A.cols]
        self.rank = len(self.pivots)
        self.ncols = A.cols
        self.T = np.array([r[A.cols :] for r in full.entries], dtype=np.int64)
        k = spec.k
        self._eval = np.array(
            [[f.mul(f.mul(v, v), f.pow(a, j)) for a, v in zip(spec.points, spec.multipliers)] for j in range(k)],
            dtype=np.int64,
        )

    def solve(self, messages: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(has_witness, g coefficients) for an (M, k) array of messages."""
        spec, f = self.spec, self.spec.field
        rhs = _np.matmul(f, messages, self._eval)
        if spec.extended:
            rhs = np.concatenate([rhs, messages[:, spec.k - 1 : spec.k]], axis=1)
        reduced = _np.matmul(f, rhs, self.T.T)
        ok = np.all(reduced[:, self.rank :] == 0, axis=1)
        g = np.zeros((len(messages), self.ncols), dtype=np.int64)
        for row, pc in enumerate(self.pivots):
            g[:, pc] = reduced[:, row]
        return ok, g


def message_samples(f: FieldSpec, k: int, exhaustive_limit: int, samples: int, rng: random.Random,
                    hull: MatrixGF | None = None, code: LinearCode | None = None) -> np.ndarray:
    """All messages when q^k <= exhaustive_limit, else random ones.

    Random sampling mixes uniform messages with messages of random hull
    codewords so both outcomes are exercised.
    """
    q = f.q
    if q**k <= exhaustive_limit:
        idx = np.arange(q**k, dtype=np.int64)
        return np.stack([(idx // q**j) % q for j in range(k)], axis=1)
    out = [[rng.randrange(q) for _ in range(k)] for _ in range(samples)]
    if hull is not None and code is not None and hull.rows:
        # decoding is linear: combine the decoded basis instead of decoding each word
        hull_msgs = MatrixGF.from_rows(f, [decode_message(code, r) for r in hull.entries], k)
        for _ in range(samples):
            coeffs = [rng.randrange(q) for _ in range(hull.rows)]
            out.append(linalg.vec_mat(f, coeffs, hull_msgs))
    return np.array(out, dtype=np.int64)


def check_witness_equivalence(result: ConstructionResult, exhaustive_limit: int = 2**12, samples: int = 100,
                              seed: int = 0) -> tuple[int, int]:
    """Compare hull membership with witness existence; returns (messages, disagreements)."""
    code, spec, f = result.code, result.spec, result.code.field
    hull = result.code.hull_basis()
    rng = random.Random(seed)
    msgs = message_samples(f, spec.k, exhaustive_limit, samples, rng, hull, code)
    words = _np.matmul(f, msgs, np.array(code.G.entries, dtype=np.int64))
    # membership in the hull row space: word == word[:, pivots] @ rref basis
    if hull.rows:
        basis, pivots = linalg.rref(hull)
        B = np.array(basis.entries[: hull.rows], dtype=np.int64)
        recon = _np.matmul(f, words[:, pivots], B)
        in_hull = np.all(recon == words, axis=1)
    else:
        in_hull = np.all(words == 0, axis=1)
    has_g, g = WitnessBatch(spec).solve(msgs)
    disagreements = int(np.count_nonzero(in_hull != has_g))
    return len(msgs), disagreements


def run_checks(result: ConstructionResult, cap: int = DEFAULT_CAP, samples: int = 100, seed: int = 0) -> list[Check]:
    """Independent checks of a constructed code, in a fixed order."""
    code, l = result.code, result.requested_l
    checks = []
    basis_dim = code.hull_basis().rows
    checks.append(Check("hull-intersection", basis_dim == l, f"dim {basis_dim}, expected {l}"))
    gram_dim = code.hull_dim_gram()
    gram_note = "; G G^t = 0" if gram_dim == code.k else ""
    checks.append(Check("hull-gram", gram_dim == l, f"k - rank(GG^t) = {gram_dim}, expected {l}{gram_note}"))
    n_msgs, bad = check_witness_equivalence(result, samples=samples, seed=seed)
    checks.append(Check("witness-equivalence", bad == 0, f"{bad} disagreements over {n_msgs} messages"))
    if code.field.q**code.k <= cap:
        d = code.min_distance(cap)
        checks.append(Check("mds", d == code.n - code.k + 1, f"d = {d}, n - k + 1 = {code.n - code.k + 1}"))
    else:
        checks.append(Check("mds", True, "distance check skipped (q^k above cap)"))
    return checks


def admissible_grid(qs, max_n: int, max_k: int, families: Sequence[str] = FAMILIES):
    """Yield (family, q, n, k, l, result) for every admissible instance.

    Results are built with ``verify=False``; ``n`` is the code length.
    """
    for fam in families:
        for q in qs:
            for n in range(2, max_n + 1):
                for k in range(2, min(max_k, n // 2) + 1):
                    for l in range(1, k + 1):
                        try:
                            res = _call_family(fam, q, n, k, l, verify=False)
                        except (ParamOutOfRange, NotASquare, NoValidOmega):
                            continue
                        yield fam, q, n, k, l, res


def corrupt_last_multiplier(result: ConstructionResult) -> ConstructionResult:
    """Negative control: rescale the final multiplier so the hull shrinks.

    The prefix that tunes the hull sits at the front, so the last column
    still carries the family's canonical multiplier.
    """
    spec = result.spec
    f = spec.field
    mults = list(spec.multipliers)
    mults[-1] = f.mul(mults[-1], _non_unit_square(f))
    bad = replace(spec, multipliers=tuple(mults))
    return replace(result, spec=bad, code=LinearCode(grs_generator(bad)), verified=False)
