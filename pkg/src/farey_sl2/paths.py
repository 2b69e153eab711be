"""Lifted paths in the Farey graph, itineraries, and limits of periodic tails."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    IDENTITY,
    INF,
    ZERO,
    DomainError,
    ExtRational,
    FareyError,
    LiftVec,
    Mat2Z,
    QuadraticIrrational,
    canonical_lift,
    clockwise3,
    edge_normalizer,
    mobius,
    normalize,
    vertex,
)


class PathError(FareyError):
    pass


@dataclass(frozen=True)
class ItinerarySpec:
    """An integer word core[0], core[1], ... placed at indices origin, origin+1, ...

    To the left of the core the left period repeats (its last entry sits just
    before the core); to the right the right period repeats.
    """

    core: tuple[int, ...] = ()
    left_period: tuple[int, ...] = ()
    right_period: tuple[int, ...] = ()
    origin: int = 1

    def __post_init__(self):
        for name in ("core", "left_period", "right_period"):
            object.__setattr__(self, name, tuple(int(e) for e in getattr(self, name)))

    @classmethod
    def periodic(cls, word: Sequence[int], origin: int = 1) -> ItinerarySpec:
        return cls(core=(), left_period=tuple(word), right_period=tuple(word), origin=origin)

    def entry(self, i: int) -> int:
        k = i - self.origin
        if 0 <= k < len(self.core):
            return self.core[k]
        if k >= len(self.core):
            if not self.right_period:
                raise PathError(f"itinerary has no entry at index {i} (no right period)")
            return self.right_period[(k - len(self.core)) % len(self.right_period)]
        if not self.left_period:
            raise PathError(f"itinerary has no entry at index {i} (no left period)")
        return self.left_period[k % len(self.left_period)]

    def to_json(self) -> dict:
        return {
            "left_period": list(self.left_period),
            "core": list(self.core),
            "right_period": list(self.right_period),
            "origin": self.origin,
        }

    @classmethod
    def from_json(cls, data: dict) -> ItinerarySpec:
        unknown = set(data) - {"left_period", "core", "right_period", "origin", "seed"}
        if unknown:
            raise PathError(f"unknown itinerary keys: {sorted(unknown)}")
        return cls(
            core=data.get("core", []),
            left_period=data.get("left_period", []),
            right_period=data.get("right_period", []),
            origin=int(data.get("origin", 1)),
        )


@dataclass(frozen=True)
class FareyPath:
    """Lifts of v_start, v_start+1, ... with every step determinant equal to +1.

    kind is "finite", "closed" (last vertex equals the first) or "window"
    (a finite piece of a bi-infinite path).
    """

    lifts: tuple[LiftVec, ...]
    start: int = 0
    kind: str = "finite"
    spec: ItinerarySpec | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lifts", tuple(self.lifts))
        if self.kind not in ("finite", "closed", "window"):
            raise PathError(f"unknown path kind {self.kind!r}")
        for k in range(len(self.lifts) - 1):
            if self.lifts[k].det(self.lifts[k + 1]) != 1:
                i = self.start + k
                raise PathError(f"step {i}->{i + 1} does not have determinant +1")
        if self.kind == "closed" and (
            len(self.lifts) < 2 or self.lifts[0].vertex != self.lifts[-1].vertex
        ):
            raise PathError("closed path must end where it starts")

    def __len__(self):
        return len(self.lifts)

    @property
    def end(self) -> int:
        return self.start + len(self.lifts) - 1

    @property
    def index_range(self) -> tuple[int, int]:
        return self.start, self.end

    def lift(self, i: int) -> LiftVec:
        k = i - self.start
        if not 0 <= k < len(self.lifts):
            raise PathError(f"index {i} outside path window {self.index_range}")
        return self.lifts[k]

    def vertex(self, i: int) -> ExtRational:
        return self.lift(i).vertex

    @property
    def vertices(self) -> list[ExtRational]:
        return [v.vertex for v in self.lifts]

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.lifts) - 1

    def transformed(self, g: Mat2Z) -> FareyPath:
        return FareyPath(tuple(g.apply(v) for v in self.lifts), self.start, self.kind)

    def __str__(self):
        return "<" + ", ".join(str(v) for v in self.vertices) + ">"


def lift_path(vertices: Sequence, start: int = 0, kind: str | None = None) -> FareyPath:
    """Lift a vertex sequence so that every step has determinant +1.

    The first lift is the canonical form of v_start (b > 0, or (1, 0) for infinity).
    """
    verts = [vertex(v) for v in vertices]
    if not verts:
        return FareyPath((), start, kind or "finite")
    lifts = [canonical_lift(verts[0])]
    for k in range(1, len(verts)):
        prev, x = lifts[-1], verts[k]
        lv = canonical_lift(x)
        d = prev.det(lv)
        if abs(d) != 1:
            raise PathError(
                f"vertices {verts[k - 1]} and {x} at indices {start + k - 1}, {start + k} "
                "are not adjacent"
            )
        lifts.append(lv if d == 1 else -lv)
    if kind is None:
        kind = "closed" if len(verts) > 1 and verts[0] == verts[-1] else "finite"
    return FareyPath(tuple(lifts), start, kind)


def turn(u: ExtRational, v: ExtRational, w: ExtRational) -> int:
    """The itinerary entry at v for the steps u -> v -> w."""
    g = edge_normalizer(u, v)
    x = mobius(g, w)
    if x.den != 1:
        raise PathError(f"{w} is not adjacent to {v}")
    return x.num


def itinerary_of(path: FareyPath) -> list[int]:
    """Turn sequence e_i at the interior vertices.

    For a closed path of length n the result is one period e_1, ..., e_n,
    where e_n is the turn at the starting vertex.
    """
    verts = path.vertices
    if path.kind == "closed":
        cyc = verts[:-1]
        n = len(cyc)
        if n < 2:
            raise PathError("closed path needs at least two edges")
        return [turn(cyc[(i - 1) % n], cyc[i % n], cyc[(i + 1) % n]) for i in range(1, n + 1)]
    if len(verts) < 3:
        raise PathError("itinerary needs at least three vertices")
    return [turn(verts[k - 1], verts[k], verts[k + 1]) for k in range(1, len(verts) - 1)]


def path_from_itinerary(
    itin: ItinerarySpec,
    window: tuple[int, int],
    seed: tuple[ExtRational, ExtRational] | None = None,
) -> FareyPath:
    """Realize v_lo..v_hi from an itinerary, with v_0, v_1 placed at the seed (default 0, inf)."""
    lo, hi = window
    if hi - lo < 1:
        raise PathError("path window needs at least two vertices")
    if seed is None:
        l0, l1 = LiftVec(0, 1), LiftVec(-1, 0)
    else:
        sp = lift_path(seed)
        l0, l1 = sp.lifts
    lifts = {0: l0, 1: l1}
    for i in range(1, hi):
        e = itin.entry(i)
        a, b = lifts[i], lifts[i - 1]
        lifts[i + 1] = LiftVec(e * a.a - b.a, e * a.b - b.b)
    for i in range(0, lo, -1):
        e = itin.entry(i)
        a, b = lifts[i], lifts[i + 1]
        lifts[i - 1] = LiftVec(e * a.a - b.a, e * a.b - b.b)
    out = tuple(lifts[i] for i in range(lo, hi + 1))
    return FareyPath(out, lo, "window", spec=itin)


def _distinct_vertices(path: FareyPath) -> list[ExtRational]:
    verts = path.vertices
    if path.kind == "closed":
        verts = verts[:-1]
    if len(set(verts)) != len(verts):
        raise DomainError("path repeats a vertex")
    return verts


def is_clockwise_sequence(verts: Sequence[ExtRational]) -> bool:
    """Clockwise test for distinct vertices: cut the circle at the first one."""
    if len(verts) < 3:
        return True
    v0 = verts[0]
    return all(clockwise3(v0, verts[k], verts[k + 1]) for k in range(1, len(verts) - 1))


def is_clockwise(path: FareyPath) -> bool:
    return is_clockwise_sequence(_distinct_vertices(path))


def _require_closed(path: FareyPath):
    if len(path) < 2 or path.lifts[0].vertex != path.lifts[-1].vertex:
        raise DomainError("path is not closed")


def is_simple_closed(path: FareyPath) -> bool:
    _require_closed(path)
    verts = path.vertices[:-1]
    return len(set(verts)) == len(verts)


def is_clockwise_simple_closed(path: FareyPath) -> bool:
    if not is_simple_closed(path):
        return False
    return is_clockwise_sequence(path.vertices[:-1])


def step_matrix(e: int) -> Mat2Z:
    """Sends the state (x_{i-1}, x_i) to (x_i, x_{i+1}) where x_{i+1} = e x_i - x_{i-1}."""
    return Mat2Z(0, 1, -1, e)


def period_transform(word: Sequence[int]) -> Mat2Z:
    if not word:
        raise DomainError("period word is empty")
    m = IDENTITY
    for e in word:
        m = step_matrix(e) @ m
    return m


@dataclass(frozen=True)
class LimitClass:
    """tag is "rational", "quadratic_irrational" or "none"."""

    tag: str
    value: ExtRational | QuadraticIrrational | None = None

    def to_json(self) -> dict:
        if self.tag == "rational":
            return {"tag": self.tag, "value": str(self.value)}
        if self.tag == "quadratic_irrational":
            v = self.value
            return {"tag": self.tag, "p": v.p, "q": v.q, "D": v.d, "r": v.r}
        return {"tag": "none"}

    def __str__(self):
        return "none" if self.value is None else str(self.value)


def attracting_fixed_point(A: Mat2Z) -> LimitClass:
    """Where A^k(z) tends for generic z, when that limit exists."""
    if A.is_pm_identity():
        return LimitClass("none")
    tr = A.trace
    if abs(tr) < 2:
        return LimitClass("none")
    if abs(tr) == 2:
        if A.r == 0:
            return LimitClass("rational", INF)
        return LimitClass("rational", normalize(A.p - A.s, 2 * A.r))
    # r z^2 + (s - p) z - q = 0; the attracting root has |r z + s| > 1
    sgn = 1 if tr > 0 else -1
    return LimitClass(
        "quadratic_irrational", QuadraticIrrational.make(A.p - A.s, sgn, tr * tr - 4, 2 * A.r)
    )


def _frame(path: FareyPath, k: int) -> Mat2Z:
    u, v = path.lift(k), path.lift(k + 1)
    return Mat2Z(u.a, v.a, u.b, v.b)


def _is_rotation(seq: list[int], word: list[int]) -> bool:
    n = len(word)
    return len(seq) == n and any(seq == word[r:] + word[:r] for r in range(n))


def classify_tail_limit(path: FareyPath, word: Sequence[int], direction: str) -> LimitClass:
    """Limit of the path in the given direction, assuming its tail repeats word."""
    word = list(word)
    n = len(word)
    if n == 0:
        raise DomainError("tail period word is empty")
    lo, hi = path.index_range
    if hi - lo < n + 1:
        raise DomainError(f"path window {path.index_range} is too short for a period of {n}")
    if direction == "forward":
        k = hi - n - 1
        tail = [turn(path.vertex(i - 1), path.vertex(i), path.vertex(i + 1)) for i in range(k + 1, hi)]
        A = _frame(path, k + n) @ _frame(path, k).inverse()
    elif direction == "backward":
        k = lo
        tail = [turn(path.vertex(i - 1), path.vertex(i), path.vertex(i + 1)) for i in range(k + 1, k + n + 1)]
        A = _frame(path, k) @ _frame(path, k + n).inverse()
    else:
        raise DomainError(f"direction must be forward or backward, not {direction!r}")
    if not _is_rotation(tail, word):
        raise DomainError(f"{direction} tail {tail} is not a rotation of the period {word}")
    return attracting_fixed_point(A)


def is_cycle_sequence(word: Sequence[int]) -> bool:
    word = list(word)
    if not word or any(e <= 0 for e in word):
        return False
    path = path_from_itinerary(ItinerarySpec(core=tuple(word), origin=1), (0, len(word) + 1))
    if path.vertex(0) != path.vertex(len(word) + 1):
        return False
    return is_clockwise_simple_closed(lift_path(path.vertices, kind="closed"))


def contains_cycle_sequence(word: Sequence[int]) -> bool:
    """True when some contiguous subword of word is a cycle sequence.

    For each start the path is grown one vertex at a time; the scan from that
    start stops as soon as the vertices stop being clockwise, since no longer
    subword can then close up into a clockwise simple cycle.
    """
    word = list(word)
    for s in range(len(word)):
        prev, cur = LiftVec(0, 1), LiftVec(-1, 0)
        seen = {ZERO, INF}
        last = INF
        for t in range(s, len(word)):
            e = word[t]
            if e <= 0:
                break
            prev, cur = cur, LiftVec(e * cur.a - prev.a, e * cur.b - prev.b)
            x = cur.vertex
            if x == ZERO:
                return True
            if x in seen or not clockwise3(ZERO, last, x):
                break
            seen.add(x)
            last = x
    return False

