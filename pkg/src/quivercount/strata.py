"""Instability types, their polygons and dominance order, and the
classification of a whole representation space into strata.

An instability type records the dimension vectors of the semistable
subquotients of a filtration; the slopes are always derived from the
character rather than stored, so a type cannot drift out of sync with
the stability data.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded
from .quiver import (nonzero_subvectors, rep_space_dim, slope, theta_of,
                     total_dim)

DEFAULT_MAX_TYPE_DIM = 64


@dataclass(frozen=True)
class HNType:
    """An ordered decomposition d = d^1 + ... + d^n with strictly
    decreasing slopes; indexes one stratum."""

    theta: tuple
    pieces: tuple

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(int(t) for t in self.theta))
        object.__setattr__(self, "pieces", tuple(
            tuple(int(x) for x in piece) for piece in self.pieces))
        if not self.pieces:
            raise ValueError("a type needs at least one piece")
        for piece in self.pieces:
            if len(piece) != len(self.theta):
                raise ValueError("piece length does not match the character")
            if total_dim(piece) == 0:
                raise ValueError("zero piece in an instability type")
        mus = self.slopes
        if any(a <= b for a, b in zip(mus, mus[1:])):
            raise ValueError("slopes must strictly decrease")

    @property
    def slopes(self):
        return tuple(slope(self.theta, piece) for piece in self.pieces)

    @property
    def ambient(self):
        return tuple(map(sum, zip(*self.pieces)))

    @property
    def length(self):
        return len(self.pieces)

    def is_trivial(self):
        return len(self.pieces) == 1

    def sort_key(self):
        return (len(self.pieces), self.pieces)

    def key_str(self):
        """Serialized form: dimension vectors as comma-joined integer
        tuples, semicolon separated, e.g. ``1,0;0,1``."""
        return ";".join(",".join(str(x) for x in piece) for piece in self.pieces)

    def __str__(self):
        return self.key_str()


def trivial_type(theta, dims):
    return HNType(tuple(theta), (tuple(dims),))


@dataclass(frozen=True)
class HNPolygon:
    """Lattice path of the partial sums (total dimension, theta value)."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(
            (int(x), int(y)) for (x, y) in self.vertices))
        if self.vertices[0] != (0, 0):
            raise ValueError("polygon must start at the origin")
        xs = [x for x, _ in self.vertices]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("x coordinates must strictly increase")

    def height_at(self, x):
        """Piecewise-linear height of the path at x (exact)."""
        verts = self.vertices
        if not verts[0][0] <= x <= verts[-1][0]:
            raise ValueError("x outside the polygon range")
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if x0 <= x <= x1:
                return Fraction(y0) + Fraction(y1 - y0, x1 - x0) * (x - x0)
        raise AssertionError("unreachable")


def polygon(beta):
    """The polygon of a type: the origin followed by the running sums of
    (dim(d^k), theta(d^k))."""
    verts = [(0, 0)]
    x = y = 0
    for piece in beta.pieces:
        x += total_dim(piece)
        y += theta_of(beta.theta, piece)
        verts.append((x, y))
    return HNPolygon(tuple(verts))


def dominates(gamma, beta):
    """Whether the polygon of gamma lies on or above the polygon of beta
    at every point.

    By piecewise linearity it suffices to compare at the union of the
    vertex x-coordinates.  Reflexive; both types must decompose the
    same dimension vector for the same character.
    """
    if gamma.theta != beta.theta or gamma.ambient != beta.ambient:
        raise ValueError("types do not share ambient data")
    pg, pb = polygon(gamma), polygon(beta)
    xs = sorted({x for x, _ in pg.vertices} | {x for x, _ in pb.vertices})
    return all(pg.height_at(x) >= pb.height_at(x) for x in xs)


def enumerate_hn_types(quiver, dims, theta, max_dim=DEFAULT_MAX_TYPE_DIM):
    """All ordered decompositions of the dimension vector into nonzero
    pieces with strictly decreasing slopes, the trivial type included.

    Sorted by (number of pieces, pieces lexicographically), so the
    trivial type always comes first.
    """
    dims = tuple(int(d) for d in dims)
    theta = tuple(int(t) for t in theta)
    if total_dim(dims) == 0:
        raise ValueError("no types for the zero dimension vector")
    if total_dim(dims) > max_dim:
        raise BudgetExceeded(
            f"total dimension {total_dim(dims)} exceeds the type budget {max_dim}")

    def rest(remaining, bound):
        if total_dim(remaining) == 0:
            yield ()
            return
        for piece in nonzero_subvectors(remaining):
            mu = slope(theta, piece)
            if bound is not None and mu >= bound:
                continue
            tail_remaining = tuple(r - p for r, p in zip(remaining, piece))
            for tail in rest(tail_remaining, mu):
                yield (piece,) + tail

    types = [HNType(theta, pieces) for pieces in rest(dims, None)]
    types.sort(key=HNType.sort_key)
    return types


@dataclass
class StratumTable:
    """Exact point count of every nonempty stratum of one space."""

    quiver: object
    dims: tuple
    theta: tuple
    q: int
    counts: dict

    def total(self):
        return sum(self.counts.values())

    def expected_total(self):
        return self.q**rep_space_dim(self.quiver, self.dims)

    def trivial_count(self):
        """Points of the open stratum, i.e. the semistable locus."""
        return self.counts.get(trivial_type(self.theta, self.dims), 0)

    def sorted_items(self):
        return sorted(self.counts.items(), key=lambda kv: kv[0].sort_key())

    def serialize_lines(self):
        """One line per type: the type key, a space, the count."""
        return [f"{beta.key_str()} {count}" for beta, count in self.sorted_items()]


def classify_representations(quiver, dims, theta, field, engine="auto",
                             workers=1, max_reps=None, max_tuples=None):
    """Assign every point of the representation space to its stratum.

    ``engine`` picks the route: "direct" runs the filtration procedure
    point by point (parallelizable via ``workers``), "scan" iterates
    candidate destabilizing subspace tuples instead, and "auto" picks
    the scan engine.  Both engines produce identical tables.
    """
    from . import exhaustive

    kwargs = {}
    if max_reps is not None:
        kwargs["max_reps"] = max_reps
    if max_tuples is not None:
        kwargs["max_tuples"] = max_tuples
    if engine in ("auto", "scan"):
        if workers != 1 and engine == "scan":
            raise ValueError("the scan engine is single-process")
        counts = exhaustive.classify_scan(quiver, dims, theta, field, **kwargs)
    elif engine == "direct":
        counts = exhaustive.classify_direct(quiver, dims, theta, field,
                                            workers=workers, **kwargs)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return StratumTable(quiver, tuple(dims), tuple(theta), field.q, dict(counts))


@dataclass(frozen=True)
class ClosureReport:
    """Dominance order among all admissible types, with counts attached.

    ``edges`` lists every strictly dominating pair (above, below).  A
    flag records a nonempty stratum together with a type it dominates
    whose stratum is empty; this is diagnostic only, since closure
    itself is not decidable from point counts.
    """

    types: tuple
    counts: tuple
    edges: tuple
    flags: tuple

    def format_lines(self):
        lines = []
        for beta, count in zip(self.types, self.counts):
            lines.append(f"type {beta.key_str()} count {count}")
        for above, below in self.edges:
            lines.append(f"dominates {above.key_str()} > {below.key_str()}")
        for above, below in self.flags:
            lines.append(
                f"flag {above.key_str()} (nonempty) dominates empty {below.key_str()}")
        return lines


def closure_consistency(table):
    """Dominance DAG over the admissible types of the table's space,
    flagging nonempty strata that dominate empty ones."""
    types = enumerate_hn_types(table.quiver, table.dims, table.theta)
    counts = tuple(table.counts.get(beta, 0) for beta in types)
    edges = []
    flags = []
    for i, gamma in enumerate(types):
        for j, beta in enumerate(types):
            if i == j:
                continue
            if dominates(gamma, beta):
                edges.append((gamma, beta))
                if counts[i] > 0 and counts[j] == 0:
                    flags.append((gamma, beta))
    return ClosureReport(tuple(types), counts, tuple(edges), tuple(flags))
