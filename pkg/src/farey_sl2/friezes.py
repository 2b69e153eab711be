"""Friezes, triangulated polygons and dual paths."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .core import (
    DomainError,
    ExtRational,
    FareyError,
    Mat2Z,
    QuadraticIrrational,
    clockwise3,
    clockwise_key,
    clockwise_points,
    edge_normalizer,
    is_adjacent,
    mobius,
)
from .paths import (
    FareyPath,
    ItinerarySpec,
    LimitClass,
    classify_tail_limit,
    contains_cycle_sequence,
    is_clockwise,
    is_clockwise_simple_closed,
    itinerary_of,
    lift_path,
    path_from_itinerary,
    period_transform,
)
from .tilings import PathPair, TilingWindow, frieze_phi, phi


class NotAFrieze(FareyError):
    pass


@dataclass(frozen=True)
class FriezeOrderN:
    order: int
    path: FareyPath
    window: TilingWindow
    sign_period: str  # "periodic" or "antiperiodic"


def _periodic_lifts(path: FareyPath, lo: int, hi: int) -> FareyPath:
    """Lift the periodic extension v_{i+n} = v_i of a closed path over [lo, hi]."""
    cyc = path.vertices[:-1]
    n = len(cyc)
    verts = [cyc[(i - path.start) % n] for i in range(lo, hi + 1)]
    return lift_path(verts, start=lo, kind="window")


def frieze_from_closed_path(
    path: FareyPath, n: int | None = None, i_range=None, j_range=None
) -> FriezeOrderN:
    """The frieze of a closed path, declared at order n (a multiple of its length)."""
    if path.kind != "closed":
        raise DomainError("frieze_from_closed_path needs a closed path")
    length = path.length
    n = length if n is None else n
    if n < 2 or n % length:
        raise DomainError(f"order {n} is not a multiple of the path length {length}")
    if i_range is None:
        i_range = (path.start - 1, path.start + 2 * n - 1)
    if j_range is None:
        j_range = i_range
    lo, hi = min(i_range[0], j_range[0]), max(i_range[1], j_range[1])
    window = frieze_phi(_periodic_lifts(path, lo, hi), i_range, j_range)
    for i, j in window.positions():
        if (i - j) % n == 0 and window.entry(i, j) != 0:
            raise NotAFrieze(f"entry ({i}, {j}) should vanish for order {n}")
    T = period_transform(itinerary_of(path))
    if not T.is_pm_identity():
        raise NotAFrieze("period transform of a closed path must be plus or minus the identity")
    sign = T.p ** (n // length)
    return FriezeOrderN(n, path, window, "periodic" if sign == 1 else "antiperiodic")


def quiddity(window: TilingWindow) -> list[int]:
    """m[i+1][i-1] along the window, for a frieze window."""
    second = set()
    for i, j in window.positions():
        if i == j and window.entry(i, j) != 0:
            raise NotAFrieze(f"diagonal entry ({i}, {i}) is not zero")
        if i == j + 1:
            second.add(window.entry(i, j))
    if second not in ({1}, {-1}):
        raise NotAFrieze(f"entries below the diagonal are {sorted(second)}, not all 1 or all -1")
    sign = 1 if second == {1} else -1
    lo = max(window.i0 - 1, window.j0 + 1)
    hi = min(window.i1 - 1, window.j1 + 1)
    return [sign * window.entry(i + 1, i - 1) for i in range(lo, hi + 1)]


def is_positive_frieze(frieze: FriezeOrderN) -> bool:
    w, n = frieze.window, frieze.order
    return all(w.entry(i, j) > 0 for i, j in w.positions() if 0 < i - j < n)


@dataclass(frozen=True)
class TriangulatedPolygon:
    """Polygon on vertices 0..n-1 (clockwise) cut into n - 2 triangles.

    vertices optionally places the corners at Farey vertices.
    """

    n: int
    triangles: tuple[tuple[int, int, int], ...]
    vertices: tuple[ExtRational, ...] | None = None

    def __post_init__(self):
        tris = tuple(sorted(tuple(sorted(t)) for t in self.triangles))
        object.__setattr__(self, "triangles", tris)
        n = self.n
        if n < 3:
            raise DomainError("polygon needs at least 3 vertices")
        if len(tris) != n - 2:
            raise DomainError(f"{n}-gon needs {n - 2} triangles, got {len(tris)}")
        edges = {}
        for t in tris:
            if len(set(t)) != 3 or not all(0 <= x < n for x in t):
                raise DomainError(f"bad triangle {t}")
            for e in itertools.combinations(t, 2):
                edges[e] = edges.get(e, 0) + 1
        for a, b in edges:
            side = (b - a) % n in (1, n - 1)
            if edges[(a, b)] != (1 if side else 2):
                raise DomainError(f"edge {(a, b)} is not shared correctly")
        if self.vertices is not None:
            vs = tuple(self.vertices)
            object.__setattr__(self, "vertices", vs)
            if len(vs) != n:
                raise DomainError("wrong number of vertex labels")
            for a, b in edges:
                if not is_adjacent(vs[a], vs[b]):
                    raise DomainError(f"edge {vs[a]}-{vs[b]} is not a Farey edge")

    @classmethod
    def from_diagonals(cls, n: int, diagonals: Iterable[Sequence[int]]) -> TriangulatedPolygon:
        edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
        for d in diagonals:
            a, b = sorted(int(x) for x in d)
            if not (0 <= a < b < n) or (b - a) % n in (1, n - 1):
                raise DomainError(f"{d} is not a diagonal of the {n}-gon")
            edges.add((a, b))
        tris = [
            t
            for t in itertools.combinations(range(n), 3)
            if all(e in edges for e in itertools.combinations(t, 2))
        ]
        return cls(n, tuple(tris))

    @property
    def diagonals(self) -> list[tuple[int, int]]:
        n = self.n
        out = set()
        for t in self.triangles:
            for a, b in itertools.combinations(t, 2):
                if (b - a) % n not in (1, n - 1):
                    out.add((a, b))
        return sorted(out)

    def to_json(self) -> dict:
        data = {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}
        if self.vertices is not None:
            data["vertices"] = [str(v) for v in self.vertices]
        return data


def triangle_counts(poly: TriangulatedPolygon) -> list[int]:
    counts = [0] * poly.n
    for t in poly.triangles:
        for x in t:
            counts[x] += 1
    return counts


def triangulations(n: int) -> list[TriangulatedPolygon]:
    """Every triangulation of the n-gon on vertices 0..n-1."""

    def rec(vs):
        if len(vs) < 3:
            return [[]]
        a, b = vs[0], vs[-1]
        out = []
        for k in range(1, len(vs) - 1):
            for left in rec(vs[: k + 1]):
                for right in rec(vs[k:]):
                    out.append(left + right + [(a, vs[k], b)])
        return out

    return [TriangulatedPolygon(n, tuple(ts)) for ts in rec(list(range(n)))]


def closed_path_from_cycle(counts: Sequence[int]) -> FareyPath:
    """Closed path v_0..v_n whose turn at vertex k is counts[k]."""
    n = len(counts)
    word = tuple(counts[1:])
    p = path_from_itinerary(ItinerarySpec(core=word, origin=1), (0, n))
    if p.vertex(0) != p.vertex(n):
        raise DomainError(f"{list(counts)} does not close up")
    return FareyPath(p.lifts, 0, "closed")


def positive_frieze_from_triangulation(poly: TriangulatedPolygon) -> FriezeOrderN:
    path = closed_path_from_cycle(triangle_counts(poly))
    frieze = frieze_from_closed_path(path)
    if not is_positive_frieze(frieze):
        raise AssertionError("triangulated polygon gave a non-positive frieze")
    return frieze


def polygon_from_path(path: FareyPath) -> TriangulatedPolygon:
    if path.kind != "closed" or path.length < 3 or not is_clockwise_simple_closed(path):
        raise DomainError("need a clockwise simple closed path of length at least 3")
    vs = tuple(path.vertices[:-1])
    tris = [
        t
        for t in itertools.combinations(range(len(vs)), 3)
        if all(is_adjacent(vs[a], vs[b]) for a, b in itertools.combinations(t, 2))
    ]
    return TriangulatedPolygon(len(vs), tuple(tris), vs)


def cc_count(triangles: Iterable[Sequence[Hashable]], u: Hashable) -> dict:
    """Counting labels from u: 0 at u, 1 at its neighbours, b + d across each triangle."""
    tris = [tuple(t) for t in triangles]
    verts = {x for t in tris for x in t}
    if u not in verts:
        raise DomainError(f"{u} is not a vertex")
    val = {u: 0}
    for t in tris:
        if u in t:
            for x in t:
                val.setdefault(x, 1)
    changed = True
    while changed:
        changed = False
        for t in tris:
            known = [x for x in t if x in val]
            if len(known) == 2:
                (x,) = [y for y in t if y not in val]
                val[x] = val[known[0]] + val[known[1]]
                changed = True
    if len(val) != len(verts):
        raise DomainError("triangles are not connected")
    for t in tris:
        a, b, c = sorted(val[x] for x in t)
        if a + b != c:
            raise DomainError(f"labels {a}, {b}, {c} on triangle {t} are inconsistent")
    return val


def quiddity_realizable(word: Sequence[int]) -> bool:
    if any(e <= 0 for e in word):
        raise DomainError("quiddity windows of positive friezes have positive entries")
    return not contains_cycle_sequence(word)


def positive_corner(gamma: FareyPath, delta: FareyPath) -> tuple[int, int]:
    """Corner (p, q) of an r x s block on which the tiling of two disjoint cycles keeps one sign.

    Over one period the lifts of each cycle turn through less than half a
    revolution, so such a block exists; p and q are searched over one period.
    """
    r, s = gamma.length, delta.length
    g = _periodic_lifts(gamma, gamma.start, gamma.start + 2 * r)
    d = _periodic_lifts(delta, delta.start, delta.start + 2 * s)
    w = phi(PathPair(g, d), g.index_range, d.index_range, canonical=False)
    for p in range(gamma.start, gamma.start + r):
        for q in range(delta.start, delta.start + s):
            signs = {(w[i, j] > 0) - (w[i, j] < 0) for i in range(p, p + r) for j in range(q, q + s)}
            if signs in ({1}, {-1}):
                return p, q
    raise DomainError("no block of constant sign; are the cycles disjoint, simple and clockwise?")


def antiperiodic_tiling(gamma: FareyPath, delta: FareyPath, i_range, j_range) -> TilingWindow:
    """Tiling of two disjoint clockwise cycles, signed so the block at positive_corner is positive."""
    for name, p in (("gamma", gamma), ("delta", delta)):
        if p.kind != "closed" or not is_clockwise_simple_closed(p):
            raise DomainError(f"{name} must be a clockwise simple closed path")
    if set(gamma.vertices) & set(delta.vertices):
        raise DomainError("the two paths intersect")
    p, q = positive_corner(gamma, delta)
    g = _periodic_lifts(gamma, min(i_range[0], p), max(i_range[1], p))
    d = _periodic_lifts(delta, min(j_range[0], q), max(j_range[1], q))
    pair = PathPair(g, d)
    w = phi(pair, i_range, j_range, canonical=False)
    corner = phi(pair, (p, p), (q, q), canonical=False).rows[0][0]
    return -w if corner < 0 else w


def is_Cn0(path: FareyPath) -> bool:
    """Every consecutive triple, read cyclically, turns clockwise."""
    if path.kind != "closed":
        raise DomainError("is_Cn0 needs a closed path")
    cyc = path.vertices[:-1]
    n = len(cyc)
    for i in range(n):
        x, y, z = cyc[i - 1], cyc[i], cyc[(i + 1) % n]
        if x == z or not clockwise3(x, y, z):
            return False
    return True


def _limit_value(lim: LimitClass):
    if lim.tag == "none":
        raise DomainError("path tail has no limit")
    return lim.value


def dual_path(
    gamma: FareyPath,
    backward: LimitClass | None = None,
    forward: LimitClass | None = None,
) -> FareyPath:
    """Vertices of the dual path that a window of a clockwise path pins down.

    The limits of gamma bound the arc where the dual lives. They are read
    from the path's itinerary when the path was built from one with periodic
    tails; otherwise they must be passed in.
    """
    verts = gamma.vertices
    if len(verts) < 3 or not is_clockwise(gamma):
        raise DomainError("dual_path needs a clockwise window with at least 3 vertices")
    if backward is None or forward is None:
        spec = gamma.spec
        if spec is None or not spec.left_period or not spec.right_period:
            raise DomainError("dual_path needs the limits of gamma or an itinerary with periodic tails")
        backward, forward = path_limits(spec, gamma)
    lb, lf = _limit_value(backward), _limit_value(forward)
    on_path = set(verts)
    found = set()
    for k in range(1, len(verts) - 1):
        g = edge_normalizer(verts[k - 1], verts[k])
        e = mobius(g, verts[k + 1]).num
        ginv = g.inverse()
        for t in range(1, e):
            found.add(mobius(ginv, ExtRational(t, 1)))
    keep = []
    for x in found - on_path:
        if lb == lf:
            ok = x == lf
        else:
            ok = x == lf or x == lb or clockwise_points(lf, x, lb)
        if ok:
            keep.append(x)
    keep.sort(key=clockwise_key(verts[-1]))
    return lift_path(keep, kind="window")


def path_limits(spec: ItinerarySpec, path: FareyPath | None = None) -> tuple[LimitClass, LimitClass]:
    """(backward, forward) limits of the path realized from spec."""
    n = len(spec.left_period) + len(spec.right_period) + 2
    lo = spec.origin - n
    hi = spec.origin + len(spec.core) + n
    if path is not None:
        lo, hi = min(lo, path.start), max(hi, path.end)
    realized = path_from_itinerary(spec, (lo, hi))
    back = classify_tail_limit(realized, spec.left_period, "backward")
    fwd = classify_tail_limit(realized, spec.right_period, "forward")
    if path is not None:
        g = _transfer(realized, path)
        back, fwd = _move(g, back), _move(g, fwd)
    return back, fwd


def _transfer(src: FareyPath, dst: FareyPath) -> Mat2Z:
    """The map sending the realization src onto dst at the first index they share."""
    k = max(src.start, dst.start)
    s0, s1 = src.lift(k), src.lift(k + 1)
    d0, d1 = dst.lift(k), dst.lift(k + 1)
    S = Mat2Z(s0.a, s1.a, s0.b, s1.b)
    D = Mat2Z(d0.a, d1.a, d0.b, d1.b)
    return D @ S.inverse()


def _move(g: Mat2Z, lim: LimitClass) -> LimitClass:
    if lim.tag == "rational":
        return LimitClass("rational", mobius(g, lim.value))
    if lim.tag == "none":
        return lim
    x: QuadraticIrrational = lim.value
    # g(z) = (P z + Q)/(R z + S) with z = (p + q sqrt d)/r; rationalize the denominator
    P, Q, R, S = g.p, g.q, g.r, g.s
    na, nb = P * x.p + Q * x.r, P * x.q
    da, db = R * x.p + S * x.r, R * x.q
    den = da * da - db * db * x.d
    pa = na * da - nb * db * x.d
    pb = nb * da - na * db
    return LimitClass("quadratic_irrational", QuadraticIrrational.make(pa, pb, x.d, den))


def render_standard_form(window: TilingWindow, order: int, start: int, count: int | None = None) -> str:
    """Rows m[j+d][j] for d = 0..order, each row shifted half a cell from the last."""
    count = order if count is None else count
    cells = []
    for d in range(order + 1):
        j0 = start - d // 2
        cells.append([str(window.entry(j + d, j)) for j in range(j0, j0 + count)])
    width = max(len(c) for row in cells for c in row) + 1
    lines = []
    for d, row in enumerate(cells):
        pad = " " * (width if d % 2 else 0)
        lines.append((pad + "".join(c.rjust(2 * width) for c in row)).rstrip())
    return "\n".join(lines) + "\n"


def standard_form_rows(window: TilingWindow, order: int, start: int, count: int | None = None) -> list[list[int]]:
    count = order if count is None else count
    return [
        [window.entry(j + d, j) for j in range(start - d // 2, start - d // 2 + count)]
        for d in range(order + 1)
    ]

