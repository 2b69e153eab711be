"""Tilings built from pairs of paths, and the inverse construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import DomainError, FareyError, LiftVec, Mat2Z, mobius
from .paths import FareyPath


class RangeError(FareyError):
    pass


class NotTameError(FareyError):
    pass


@dataclass(frozen=True)
class TilingWindow:
    """Entries m[i][j] for i0 <= i <= i1 and j0 <= j <= j1, stored row by row."""

    i0: int
    j0: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise RangeError("window must be nonempty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise RangeError("window rows have different lengths")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def i1(self) -> int:
        return self.i0 + len(self.rows) - 1

    @property
    def j1(self) -> int:
        return self.j0 + len(self.rows[0]) - 1

    @property
    def i_range(self) -> tuple[int, int]:
        return self.i0, self.i1

    @property
    def j_range(self) -> tuple[int, int]:
        return self.j0, self.j1

    def contains(self, i: int, j: int) -> bool:
        return self.i0 <= i <= self.i1 and self.j0 <= j <= self.j1

    def entry(self, i: int, j: int) -> int:
        if not self.contains(i, j):
            raise RangeError(f"({i}, {j}) lies outside the window {self.i_range} x {self.j_range}")
        return self.rows[i - self.i0][j - self.j0]

    def __getitem__(self, ij):
        return self.entry(*ij)

    def positions(self) -> Iterator[tuple[int, int]]:
        for i in range(self.i0, self.i1 + 1):
            for j in range(self.j0, self.j1 + 1):
                yield i, j

    def __neg__(self):
        return TilingWindow(self.i0, self.j0, tuple(tuple(-x for x in r) for r in self.rows))

    def sub(self, i_range, j_range) -> TilingWindow:
        (a, b), (c, d) = i_range, j_range
        if not (self.contains(a, c) and self.contains(b, d)):
            raise RangeError(f"sub-window {i_range} x {j_range} is not inside the window")
        return TilingWindow(
            a, c, tuple(self.rows[i - self.i0][c - self.j0 : d - self.j0 + 1] for i in range(a, b + 1))
        )

    def to_json(self) -> dict:
        return {"i0": self.i0, "j0": self.j0, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> TilingWindow:
        try:
            return cls(int(data["i0"]), int(data["j0"]), data["rows"])
        except (KeyError, TypeError) as exc:
            raise RangeError(f"malformed window JSON: {exc}") from None


@dataclass(frozen=True)
class PathPair:
    gamma: FareyPath
    delta: FareyPath


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """u[i] with row(i+1) + row(i-1) = u[i] row(i); v[j] likewise for columns."""

    u: dict
    v: dict


def _check_cover(path: FareyPath, rng, name: str):
    lo, hi = rng
    if lo > hi:
        raise RangeError(f"{name} range {rng} is empty")
    if lo < path.start or hi > path.end:
        raise RangeError(f"{name} lifts cover {path.index_range}, not {rng}")


def phi(pair: PathPair, i_range, j_range, canonical: bool = True) -> TilingWindow:
    """m[i][j] = a_i d_j - b_i c_j."""
    _check_cover(pair.gamma, i_range, "gamma")
    _check_cover(pair.delta, j_range, "delta")
    gs = [pair.gamma.lift(i) for i in range(i_range[0], i_range[1] + 1)]
    ds = [pair.delta.lift(j) for j in range(j_range[0], j_range[1] + 1)]
    rows = tuple(tuple(g.a * d.b - g.b * d.a for d in ds) for g in gs)
    w = TilingWindow(i_range[0], j_range[0], rows)
    return canonical_sign(w) if canonical else w


def frieze_phi(gamma: FareyPath, i_range, j_range) -> TilingWindow:
    """m[i][j] = a_j b_i - b_j a_i: antisymmetric, with 1 just below the zero diagonal."""
    lo, hi = min(i_range[0], j_range[0]), max(i_range[1], j_range[1])
    _check_cover(gamma, (lo, hi), "gamma")
    rows = []
    for i in range(i_range[0], i_range[1] + 1):
        x = gamma.lift(i)
        rows.append(tuple(y.a * x.b - y.b * x.a for y in (gamma.lift(j) for j in range(j_range[0], j_range[1] + 1))))
    return TilingWindow(i_range[0], j_range[0], tuple(rows))


def _minors2(w: TilingWindow) -> Iterator[int]:
    R = w.rows
    for r in range(len(R) - 1):
        for c in range(len(R[0]) - 1):
            yield R[r][c] * R[r + 1][c + 1] - R[r][c + 1] * R[r + 1][c]


def _det3(R, r, c) -> int:
    (a, b, x), (d, e, f), (g, h, k) = (R[r + t][c : c + 3] for t in range(3))
    return a * (e * k - f * h) - b * (d * k - f * g) + x * (d * h - e * g)


def is_sl2(window: TilingWindow) -> bool:
    rows, cols = window.shape
    if rows < 2 or cols < 2:
        raise DomainError("SL2 test needs a window of at least 2x2")
    # negating a window leaves every 2x2 determinant unchanged
    return all(m == 1 for m in _minors2(window))


def is_tame(window: TilingWindow) -> bool:
    rows, cols = window.shape
    if rows < 3 or cols < 3:
        raise DomainError("tameness test needs a window of at least 3x3")
    R = window.rows
    return all(_det3(R, r, c) == 0 for r in range(rows - 2) for c in range(cols - 2))


def psi(window: TilingWindow) -> PathPair:
    """Recover a pair of lifted paths whose tiling is the window."""
    for k in (0, 1):
        if not (window.i0 <= k <= window.i1 and window.j0 <= k <= window.j1):
            raise RangeError("window must contain rows 0, 1 and columns 0, 1")
    if not is_sl2(window):
        raise NotTameError("window is not an SL2 window")
    rows, cols = window.shape
    if rows >= 3 and cols >= 3 and not is_tame(window):
        raise NotTameError("window is not tame")
    m = window.entry
    m00, m01, m10, m11 = m(0, 0), m(0, 1), m(1, 0), m(1, 1)
    gamma = [LiftVec(m(i, 0), m(i, 1)) for i in range(window.i0, window.i1 + 1)]
    # (c_j, d_j) = M^T J^{-1} (m_0j, m_1j) with M the central 2x2 block
    delta = [
        LiftVec(m10 * m(0, j) - m00 * m(1, j), m11 * m(0, j) - m01 * m(1, j))
        for j in range(window.j0, window.j1 + 1)
    ]
    return PathPair(FareyPath(tuple(gamma), window.i0, "window"), FareyPath(tuple(delta), window.j0, "window"))


def common_map(first: PathPair, second: PathPair) -> Mat2Z | None:
    """The g with g(first) = second vertex by vertex on both paths, if there is one."""
    g1, g2 = first.gamma, second.gamma
    k = max(g1.start, g2.start)
    if k + 1 > min(g1.end, g2.end):
        raise RangeError("pairs share fewer than two gamma indices")
    src = Mat2Z(g1.lift(k).a, g1.lift(k + 1).a, g1.lift(k).b, g1.lift(k + 1).b)
    dst = Mat2Z(g2.lift(k).a, g2.lift(k + 1).a, g2.lift(k).b, g2.lift(k + 1).b)
    g = dst @ src.inverse()
    for a, b in ((g1, g2), (first.delta, second.delta)):
        lo, hi = max(a.start, b.start), min(a.end, b.end)
        for i in range(lo, hi + 1):
            if mobius(g, a.vertex(i)) != b.vertex(i):
                return None
    return g


def _solve(num: int, den: int, what: str) -> int:
    if num % den:
        raise NotTameError(f"{what} is not an integer")
    return num // den


def recurrence_coeffs(window: TilingWindow) -> RecurrenceCoeffs:
    rows, cols = window.shape
    if rows < 3 or cols < 3:
        raise DomainError("recurrence coefficients need at least 3 rows and 3 columns")
    m = window.entry
    u = {}
    for i in range(window.i0 + 1, window.i1):
        js = [j for j in range(window.j0, window.j1 + 1) if m(i, j)]
        if not js:
            raise NotTameError(f"row {i} is zero")
        ui = _solve(m(i + 1, js[0]) + m(i - 1, js[0]), m(i, js[0]), f"u[{i}]")
        for j in range(window.j0, window.j1 + 1):
            if m(i + 1, j) + m(i - 1, j) != ui * m(i, j):
                raise NotTameError(f"row relation at row {i} fails in column {j}")
        u[i] = ui
    v = {}
    for j in range(window.j0 + 1, window.j1):
        is_ = [i for i in range(window.i0, window.i1 + 1) if m(i, j)]
        if not is_:
            raise NotTameError(f"column {j} is zero")
        vj = _solve(m(is_[0], j + 1) + m(is_[0], j - 1), m(is_[0], j), f"v[{j}]")
        for i in range(window.i0, window.i1 + 1):
            if m(i, j + 1) + m(i, j - 1) != vj * m(i, j):
                raise NotTameError(f"column relation at column {j} fails in row {i}")
        v[j] = vj
    return RecurrenceCoeffs(u, v)


def _coeff(table: dict, idx: int, period: int | None, name: str) -> int:
    if idx in table:
        return table[idx]
    if period:
        for k in table:
            if (k - idx) % period == 0:
                return table[k]
    raise RangeError(f"no coefficient {name}[{idx}]")


def extend(
    window: TilingWindow,
    coeffs: RecurrenceCoeffs,
    direction: str,
    k: int,
    period: int | None = None,
) -> TilingWindow:
    """Grow the window by k rows or columns using the three-term relations.

    With period set, a missing coefficient is taken from any known index
    congruent to it modulo the period.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    if direction not in ("up", "down", "left", "right"):
        raise DomainError(f"unknown direction {direction!r}")
    rows = [list(r) for r in window.rows]
    i0, j0 = window.i0, window.j0
    for _ in range(k):
        if direction in ("up", "down") and len(rows) < 2:
            raise RangeError("need two rows to extend vertically")
        if direction in ("left", "right") and len(rows[0]) < 2:
            raise RangeError("need two columns to extend horizontally")
        if direction == "down":
            i = i0 + len(rows) - 1
            u = _coeff(coeffs.u, i, period, "u")
            rows.append([u * x - y for x, y in zip(rows[-1], rows[-2])])
        elif direction == "up":
            u = _coeff(coeffs.u, i0, period, "u")
            rows.insert(0, [u * x - y for x, y in zip(rows[0], rows[1])])
            i0 -= 1
        elif direction == "right":
            j = j0 + len(rows[0]) - 1
            v = _coeff(coeffs.v, j, period, "v")
            for r in rows:
                r.append(v * r[-1] - r[-2])
        else:
            v = _coeff(coeffs.v, j0, period, "v")
            for r in rows:
                r.insert(0, v * r[0] - r[1])
            j0 -= 1
    return TilingWindow(i0, j0, tuple(tuple(r) for r in rows))


def canonical_sign(window: TilingWindow) -> TilingWindow:
    for r in window.rows:
        for x in r:
            if x:
                return window if x > 0 else -window
    return window


def shift(window: TilingWindow, p: int, q: int) -> TilingWindow:
    """Re-index so that the new entry at (i, j) is the old entry at (i - p, j - q)."""
    return TilingWindow(window.i0 + p, window.j0 + q, window.rows)


def unique_min(window: TilingWindow) -> tuple[int, list[tuple[int, int]]]:
    """Smallest entry of a positive window and every position where it occurs."""
    best = None
    where = []
    for i, j in window.positions():
        x = window.entry(i, j)
        if x <= 0:
            raise DomainError(f"entry at ({i}, {j}) is not positive")
        if best is None or x < best:
            best, where = x, [(i, j)]
        elif x == best:
            where.append((i, j))
    return best, where


@dataclass(frozen=True)
class OnesReport:
    positions: list
    violation: tuple | None

    @property
    def ok(self) -> bool:
        return self.violation is None


def ones_structure(window: TilingWindow) -> OnesReport:
    """Positions of 1s; flags two of them where one lies strictly below and right of the other."""
    ones = []
    for i, j in window.positions():
        x = window.entry(i, j)
        if x <= 0:
            raise DomainError(f"entry at ({i}, {j}) is not positive")
        if x == 1:
            ones.append((i, j))
    for a in range(len(ones)):
        for b in range(a + 1, len(ones)):
            (i, j), (r, s) = ones[a], ones[b]
            if (i - r) * (j - s) > 0:
                return OnesReport(ones, (ones[a], ones[b]))
    return OnesReport(ones, None)


def to_tsv(window: TilingWindow) -> str:
    header = "i\\j\t" + "\t".join(str(j) for j in range(window.j0, window.j1 + 1))
    lines = [header]
    for i, r in zip(range(window.i0, window.i1 + 1), window.rows):
        lines.append(str(i) + "\t" + "\t".join(str(x) for x in r))
    return "\n".join(lines) + "\n"


def render_matrix(window: TilingWindow) -> str:
    """Right-aligned grid in matrix layout."""
    width = max(len(str(x)) for r in window.rows for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in window.rows) + "\n"
