"""Exact integer Laurent polynomials in ``q`` and square matrices over them.

Degree statistics follow the zero convention ``m(0) = +inf`` and
``M(0) = -inf``; the infinities are the float ``math.inf`` so they compare
correctly against integer degrees.

Matrices keep all entries in one integer array of shape ``(m, m, D)`` with a
shared lowest exponent ``lo``: entry ``(i, j)`` is
``sum_k coeffs[i, j, k] q^(lo + k)``.  Arithmetic runs in ``int64`` while a
cheap magnitude bound proves it cannot overflow, and switches to Python
integers (``dtype=object``) otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

_SAFE = 2**62


class DegreeStats(NamedTuple):
    min_deg: float
    max_deg: float


@dataclass(frozen=True)
class LaurentPoly:
    """``sum_k coeffs[k] q^(lo + k)``, trimmed so both end coefficients are nonzero."""

    lo: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(c[start:end]))
        object.__setattr__(self, "lo", int(self.lo) + start if end > start else 0)

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls(k, (c,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)))

    @classmethod
    def coerce(cls, x: LaurentPoly | int) -> LaurentPoly:
        return x if isinstance(x, LaurentPoly) else cls.constant(int(x))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def min_deg(self) -> float:
        return self.lo if self.coeffs else math.inf

    @property
    def max_deg(self) -> float:
        return self.lo + len(self.coeffs) - 1 if self.coeffs else -math.inf

    def stats(self) -> DegreeStats:
        return DegreeStats(self.min_deg, self.max_deg)

    def terms(self) -> dict[int, int]:
        return {self.lo + k: c for k, c in enumerate(self.coeffs) if c}

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.lo + len(self.coeffs), other.lo + len(other.coeffs))
        out = [0] * (hi - lo)
        for k, c in enumerate(self.coeffs):
            out[self.lo - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.lo - lo + k] += c
        return LaurentPoly(lo, tuple(out))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca:
                for b, cb in enumerate(other.coeffs):
                    out[a + b] += ca * cb
        return LaurentPoly(self.lo + other.lo, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise ValueError(f"{self} is not a unit of Z[q, q^-1]")
            return LaurentPoly(self.lo * k, (self.coeffs[0] ** k,))
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly(self.lo + k, self.coeffs) if self.coeffs else self

    def __call__(self, value):
        return sum(c * value ** (self.lo + k) for k, c in enumerate(self.coeffs) if c)

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls(int(data["lo"]), tuple(int(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.terms(), reverse=True):
            c = self.terms()[k]
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            parts.append(coef + ("*" if mono and coef not in ("", "-") else "") + mono)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


Q = LaurentPoly(1, (1,))
ONE = LaurentPoly(0, (1,))
ZERO = LaurentPoly()


def poly_add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def poly_mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def poly_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def poly_stats(p: LaurentPoly) -> DegreeStats:
    return p.stats()


# ----------------------------------------------------------------------------
# matrices


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.abs(a).max())


def _demote(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and _max_abs(a) < _SAFE:
        return a.astype(np.int64)
    return a


def _trim(lo: int, c: np.ndarray) -> tuple[int, np.ndarray]:
    if c.shape[2] == 0:
        return 0, c
    nz = np.flatnonzero((c != 0).any(axis=(0, 1)))
    if nz.size == 0:
        return 0, c[:, :, :0]
    first, last = int(nz[0]), int(nz[-1])
    if first == 0 and last == c.shape[2] - 1:
        return lo, c
    return lo + first, c[:, :, first:last + 1]


def _cube_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m, _, da = a.shape
    db = b.shape[2]
    if da == 0 or db == 0:
        return np.zeros((m, m, 0), dtype=np.int64)
    safe = (a.dtype != object and b.dtype != object
            and _max_abs(a) * _max_abs(b) * m * min(da, db) < _SAFE)
    dtype = np.int64 if safe else object
    if not safe:
        a = a.astype(object)
        b = b.astype(object)
    out = np.zeros((m, m, da + db - 1), dtype=dtype)
    if da <= db:
        flat = b.reshape(m, m * db)
        for k in range(da):
            out[:, :, k:k + db] += (a[:, :, k] @ flat).reshape(m, m, db)
    else:
        flat = a.transpose(0, 2, 1).reshape(m * da, m)
        for k in range(db):
            out[:, :, k:k + da] += (flat @ b[:, :, k]).reshape(m, da, m).transpose(0, 2, 1)
    return out if safe else _demote(out)


class BurauMatrix:
    """An ``(n-1) x (n-1)`` matrix over ``Z[q, q^-1]``.

    Indexing with ``M[i, j]`` is zero based and returns a :class:`LaurentPoly`;
    the degree helpers :func:`row_max` and :func:`col_max` use the one based
    row/column numbers of the literature.
    """

    __slots__ = ("n", "lo", "coeffs", "_hash")

    def __init__(self, n: int, lo: int, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs)
        m = n - 1
        if m < 1 or coeffs.ndim != 3 or coeffs.shape[:2] != (m, m):
            raise ValueError(f"coefficient array of shape {coeffs.shape} does not fit n={n}")
        if coeffs.dtype != object:
            coeffs = coeffs.astype(np.int64, copy=False)
        self.n = n
        self.lo, self.coeffs = _trim(int(lo), coeffs)
        self._hash = None

    @property
    def dim(self) -> int:
        return self.n - 1

    @classmethod
    def zero(cls, n: int) -> BurauMatrix:
        return cls(n, 0, np.zeros((n - 1, n - 1, 0), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> BurauMatrix:
        return cls.scalar(n, ONE)

    @classmethod
    def scalar(cls, n: int, c: LaurentPoly) -> BurauMatrix:
        m = n - 1
        if not c:
            return cls.zero(n)
        coeffs = np.zeros((m, m, len(c.coeffs)), dtype=object)
        for i in range(m):
            coeffs[i, i, :] = c.coeffs
        return cls(n, c.lo, _demote(coeffs))

    @classmethod
    def from_entries(cls, n: int, entries: Sequence[Sequence[LaurentPoly | int]]) -> BurauMatrix:
        m = n - 1
        polys = [[LaurentPoly.coerce(x) for x in row] for row in entries]
        if len(polys) != m or any(len(row) != m for row in polys):
            raise ValueError(f"expected a {m}x{m} array of entries")
        nonzero = [p for row in polys for p in row if p]
        if not nonzero:
            return cls.zero(n)
        lo = min(p.lo for p in nonzero)
        hi = max(p.lo + len(p.coeffs) for p in nonzero)
        coeffs = np.zeros((m, m, hi - lo), dtype=object)
        for i, row in enumerate(polys):
            for j, p in enumerate(row):
                if p:
                    coeffs[i, j, p.lo - lo:p.lo - lo + len(p.coeffs)] = p.coeffs
        return cls(n, lo, _demote(coeffs))

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return LaurentPoly(self.lo, tuple(int(c) for c in self.coeffs[i, j]))

    @property
    def entries(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        m = self.dim
        return tuple(tuple(self[i, j] for j in range(m)) for i in range(m))

    def _check_same(self, other: BurauMatrix) -> None:
        if not isinstance(other, BurauMatrix):
            raise TypeError(f"expected BurauMatrix, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        self._check_same(other)
        return BurauMatrix(self.n, self.lo + other.lo, _cube_mul(self.coeffs, other.coeffs))

    def __add__(self, other: BurauMatrix) -> BurauMatrix:
        self._check_same(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.lo + self.coeffs.shape[2], other.lo + other.coeffs.shape[2])
        out = np.zeros((self.dim, self.dim, hi - lo), dtype=object)
        out[:, :, self.lo - lo:self.lo - lo + self.coeffs.shape[2]] += self.coeffs.astype(object)
        out[:, :, other.lo - lo:other.lo - lo + other.coeffs.shape[2]] += other.coeffs.astype(object)
        return BurauMatrix(self.n, lo, _demote(out))

    def __neg__(self) -> BurauMatrix:
        return BurauMatrix(self.n, self.lo, -self.coeffs)

    def __sub__(self, other: BurauMatrix) -> BurauMatrix:
        return self + (-other)

    def shift(self, k: int) -> BurauMatrix:
        """Multiply every entry by ``q^k``."""
        return BurauMatrix(self.n, self.lo + k, self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BurauMatrix):
            return NotImplemented
        return (self.n == other.n and self.lo == other.lo
                and self.coeffs.shape == other.coeffs.shape
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.lo, self.coeffs.shape,
                               tuple(int(c) for c in self.coeffs.ravel())))
        return self._hash

    def is_zero(self) -> bool:
        return self.coeffs.shape[2] == 0

    @property
    def max_deg(self) -> float:
        return self.lo + self.coeffs.shape[2] - 1 if not self.is_zero() else -math.inf

    @property
    def min_deg(self) -> float:
        return self.lo if not self.is_zero() else math.inf

    def stats(self) -> DegreeStats:
        return DegreeStats(self.min_deg, self.max_deg)

    def _last_nonzero(self, mask: np.ndarray) -> float:
        nz = np.flatnonzero(mask)
        return self.lo + int(nz[-1]) if nz.size else -math.inf

    def entry_max_deg(self, i: int, j: int) -> float:
        """Zero based ``M(self[i, j])``."""
        return self._last_nonzero(self.coeffs[i, j] != 0)

    def entry_min_deg(self, i: int, j: int) -> float:
        nz = np.flatnonzero(self.coeffs[i, j] != 0)
        return self.lo + int(nz[0]) if nz.size else math.inf

    def row_max(self, i: int) -> float:
        """One based maximal degree over row ``i``."""
        self._check_index(i)
        return self._last_nonzero((self.coeffs[i - 1] != 0).any(axis=0))

    def col_max(self, j: int) -> float:
        """One based maximal degree over column ``j``."""
        self._check_index(j)
        return self._last_nonzero((self.coeffs[:, j - 1] != 0).any(axis=0))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.dim:
            raise IndexError(f"index {i} outside 1..{self.dim}")

    def degree_matrix(self) -> list[list[float]]:
        """Matrix of entry maximal degrees (``-inf`` for zero entries)."""
        m = self.dim
        return [[self.entry_max_deg(i, j) for j in range(m)] for i in range(m)]

    def min_degree_matrix(self) -> list[list[float]]:
        m = self.dim
        return [[self.entry_min_deg(i, j) for j in range(m)] for i in range(m)]

    def is_identity(self) -> bool:
        return self == BurauMatrix.identity(self.n)

    def homothety_ratio(self) -> LaurentPoly | None:
        """The scalar ``c`` when ``self == c * I``, else ``None``."""
        c = self[0, 0]
        if not c:
            return None
        return c if self == BurauMatrix.scalar(self.n, c) else None

    def det(self) -> LaurentPoly:
        return mat_det(self)

    def to_json(self) -> dict:
        return {"n": self.n,
                "entries": [[p.to_json() for p in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> BurauMatrix:
        n = int(data["n"])
        return cls.from_entries(n, [[LaurentPoly.from_json(p) for p in row] for row in data["entries"]])

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(p) for p in row) for row in self.entries)
        return f"BurauMatrix(n={self.n}, [{rows}])"


def mat_identity(n: int) -> BurauMatrix:
    return BurauMatrix.identity(n)


def mat_mul(a: BurauMatrix, b: BurauMatrix) -> BurauMatrix:
    return a @ b


def mat_product(mats: Iterable[BurauMatrix], n: int) -> BurauMatrix:
    out = BurauMatrix.identity(n)
    for a in mats:
        out = out @ a
    return out


def mat_stats(a: BurauMatrix) -> DegreeStats:
    return a.stats()


def row_max(a: BurauMatrix, i: int) -> float:
    return a.row_max(i)


def col_max(a: BurauMatrix, j: int) -> float:
    return a.col_max(j)


# -- determinant: Laplace expansion with memoised minors over Z[q]


def _pmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    if (a.dtype != object and b.dtype != object
            and _max_abs(a) * _max_abs(b) * min(a.size, b.size) < _SAFE):
        return np.convolve(a, b)
    out = [0] * (a.size + b.size - 1)
    bl = [int(y) for y in b]
    for i, x in enumerate(a):
        x = int(x)
        if x:
            for j, y in enumerate(bl):
                out[i + j] += x * y
    return _demote(np.array(out, dtype=object))


def _padd(a: np.ndarray, b: np.ndarray, sign: int) -> np.ndarray:
    size = max(a.size, b.size)
    if (a.dtype != object and b.dtype != object
            and _max_abs(a) + _max_abs(b) < _SAFE):
        out = np.zeros(size, dtype=np.int64)
    else:
        out = np.zeros(size, dtype=object)
    out[:a.size] += a
    if sign > 0:
        out[:b.size] += b
    else:
        out[:b.size] -= b
    return out


def mat_det(a: BurauMatrix) -> LaurentPoly:
    m = a.dim
    if a.is_zero():
        return ZERO
    c = a.coeffs

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> np.ndarray:
        if row == m:
            return np.ones(1, dtype=np.int64)
        acc = np.zeros(0, dtype=np.int64)
        for pos, col in enumerate(cols):
            entry = c[row, col]
            if not entry.any():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            acc = _padd(acc, _pmul(entry, sub), -1 if pos % 2 else 1)
        return acc

    poly = minor(0, tuple(range(m)))
    return LaurentPoly(a.lo * m, tuple(int(x) for x in poly))
