"""Exhaustive classification of whole representation spaces.

Two independent routes compute the stratum table:

* ``classify_direct`` runs the filtration procedure point by point; it
  is the reference route and can spread index ranges over worker
  processes.
* ``classify_scan`` turns the quantifier around: for every candidate
  destabilizing subspace tuple it enumerates the representations that
  preserve it.  Preserving a fixed tuple is a linear condition, so the
  preserving set has a product parametrization (restriction block,
  mixing block, quotient block) and the scan costs a table lookup per
  preserved point instead of a subspace search per point.  This is
  what makes million-point spaces affordable.

The two engines are compared on every small instance by the test
suite.  The scan machinery is reused to count, for every point, all
filtrations with semistable subquotients and strictly decreasing
slopes (the uniqueness oracle for the filtration procedure).
"""

from array import array
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from .errors import BudgetExceeded, TheoremViolation
from .ffield import field_table
from .linalg import decode_vector, encode_matrix, encode_vector, reduce_mod
from .quiver import Quiver, nonzero_subvectors, slope, total_dim
from .rep import (DEFAULT_MAX_REPS, DEFAULT_MAX_TUPLES, RepSpace,
                  subspace_catalog)
from .strata import HNType, trivial_type


class BlockTable:
    """All matrices carrying a fixed source subspace into a fixed target
    subspace, tabulated with the restriction and quotient blocks.

    ``a_indices`` lists the encoded matrices; ``blocks[a]`` gives the
    encoded matrix of the restricted map (in the subspace bases) and of
    the quotient map (in the free coordinates), matching the
    conventions of sub_rep and quotient_rep exactly.  ``by_sub`` groups
    entries by restriction block.
    """

    __slots__ = ("a_indices", "blocks", "by_sub")

    def __init__(self, field, n_src, n_tgt, src, tgt):
        q = field.q
        add, mul, neg = field.add_table, field.mul_table, field.neg_table
        ks, kt = src.k, tgt.k
        free_s = src.free_cols
        fs, ft = len(free_s), n_tgt - kt

        # Every target vector, with its coordinates over the target basis
        # (pivot entries) and over the free columns of the reduction.
        vecs, zs = [], []
        span = [None] * q**kt
        for enc in range(q**n_tgt):
            v = decode_vector(enc, n_tgt, q)
            y = encode_vector([v[p] for p in tgt.pivots], q)
            red = reduce_mod(field, tgt.rows, tgt.pivots, v)
            z = encode_vector([red[c] for c in tgt.free_cols], q)
            vecs.append(v)
            zs.append(z)
            if z == 0:
                span[y] = v

        # digit -> contribution lookups for the encoded U and W blocks
        u_contrib = [
            [sum(((y // q**s) % q) * q**(s * ks + r) for s in range(kt))
             for y in range(q**kt)]
            for r in range(ks)]
        w_contrib = [
            [sum(((z // q**t) % q) * q**(t * fs + ci) for t in range(ft))
             for z in range(q**ft)]
            for ci in range(fs)]

        self.a_indices = []
        self.blocks = {}
        self.by_sub = {}
        pivots_src = src.pivots
        rows_src = src.rows
        for u_cols in product(range(q**kt), repeat=ks):
            u_idx = sum(u_contrib[r][y] for r, y in enumerate(u_cols))
            base_imgs = [span[y] for y in u_cols]
            for f_cols in product(range(q**n_tgt), repeat=fs):
                cols = [None] * n_src
                for ci, enc in enumerate(f_cols):
                    cols[free_s[ci]] = vecs[enc]
                for r, p in enumerate(pivots_src):
                    vec = list(base_imgs[r])
                    for ci in range(fs):
                        coef = rows_src[r][free_s[ci]]
                        if coef:
                            cm = mul[coef]
                            img = cols[free_s[ci]]
                            vec = [add[x][neg[cm[y]]] for x, y in zip(vec, img)]
                    cols[p] = vec
                mat = tuple(tuple(cols[j][i] for j in range(n_src))
                            for i in range(n_tgt))
                a_idx = encode_matrix(mat, q)
                w_idx = sum(w_contrib[ci][zs[enc]]
                            for ci, enc in enumerate(f_cols))
                self.a_indices.append(a_idx)
                self.blocks[a_idx] = (u_idx, w_idx)
                self.by_sub.setdefault(u_idx, []).append((a_idx, w_idx))


_BLOCK_CACHE = {}


def _block_table(field, n_src, n_tgt, src_ord, tgt_ord):
    key = (field, n_src, n_tgt, src_ord, tgt_ord)
    if key not in _BLOCK_CACHE:
        src = subspace_catalog(field, n_src)[src_ord]
        tgt = subspace_catalog(field, n_tgt)[tgt_ord]
        _BLOCK_CACHE[key] = BlockTable(field, n_src, n_tgt, src, tgt)
    return _BLOCK_CACHE[key]


def _iter_sums(lists):
    """Sums over the cartesian product of pre-scaled index lists.

    An empty family has one element, the empty sum (this is the
    arrowless quiver, whose space is a single point).
    """
    if not lists:
        yield 0
    elif len(lists) == 1:
        yield from lists[0]
    elif len(lists) == 2:
        first, second = lists
        for a in first:
            for b in second:
                yield a + b
    else:
        head = lists[0]
        for rest in _iter_sums(lists[1:]):
            for a in head:
                yield a + rest


class SpaceTable:
    """Classification of one representation space: the interned types and
    the type of every point by index."""

    __slots__ = ("dims", "types", "type_ids", "counts")

    def __init__(self, dims, types, type_ids, counts):
        self.dims = dims
        self.types = types
        self.type_ids = type_ids
        self.counts = counts


class ScanClassifier:
    """Subspace-major classification, memoized over dimension vectors.

    Candidate destabilizing tuples are visited in decreasing
    (slope, total dimension) order; the first group that preserves a
    point names its maximal destabilizing subrepresentation, the
    quotient is read off block tables and looked up in the table of the
    smaller space.  Uniqueness of the maximizer and semistability of
    the extracted piece are asserted on every point.
    """

    def __init__(self, quiver, theta, field, max_reps=DEFAULT_MAX_REPS,
                 max_tuples=DEFAULT_MAX_TUPLES):
        self.quiver = quiver
        self.theta = tuple(theta)
        self.field = field
        self.max_reps = max_reps
        self.max_tuples = max_tuples
        self.tables = {}

    def table(self, dims):
        dims = tuple(dims)
        if dims in self.tables:
            return self.tables[dims]
        if total_dim(dims) == 0:
            raise ValueError("cannot classify the zero dimension vector")
        quiver, theta, field = self.quiver, self.theta, self.field
        q = field.q
        space = RepSpace(quiver, dims, field)
        N = space.point_count
        if N > self.max_reps:
            raise BudgetExceeded(
                f"{N} representations exceed the budget {self.max_reps}")
        catalogs = [subspace_catalog(field, n) for n in dims]
        candidates = 1
        for cat in catalogs:
            candidates *= len(cat)
        if candidates > self.max_tuples:
            raise BudgetExceeded(
                f"{candidates} candidate subspace tuples exceed the budget "
                f"{self.max_tuples}")

        mu = slope(theta, dims)
        groups = {}
        for e in nonzero_subvectors(dims):
            mu_e = slope(theta, e)
            if mu_e > mu:
                groups.setdefault((mu_e, total_dim(e)), []).append(e)
        group_keys = sorted(groups, key=lambda k: (-k[0], -k[1]))
        if len(group_keys) > 254:
            raise BudgetExceeded("too many destabilizer groups")

        trivial = trivial_type(theta, dims)
        types = [trivial]
        type_index = {trivial.pieces: 0}
        type_ids = array("h", bytes(2 * N))
        assigned = bytearray(N)
        gen = bytearray(N)
        winner = array("i", bytes(4 * N))
        arrows = quiver.arrows
        pstride = space.arrow_strides
        ppow = tuple(q**size for size in space.arrow_sizes)

        by_dim = [
            {k: [(o, rec) for o, rec in enumerate(cat) if rec.k == k]
             for k in range(n + 1)}
            for cat, n in zip(catalogs, dims)]

        for g, key in enumerate(group_keys, start=1):
            tuples = []
            touched = []
            for e in groups[key]:
                quot_dims = tuple(d - x for d, x in zip(dims, e))
                sub_strides = RepSpace(quiver, e, field).arrow_strides
                quot_strides = RepSpace(quiver, quot_dims, field).arrow_strides
                per_vertex = [by_dim[i][e[i]] for i in range(len(dims))]
                for recs in product(*per_vertex):
                    tables = tuple(
                        _block_table(field, dims[s], dims[t],
                                     recs[s][0], recs[t][0])
                        for (s, t) in arrows)
                    t_ord = len(tuples)
                    tuples.append((e, quot_dims, tables, sub_strides,
                                   quot_strides))
                    scaled = [
                        [a * st for a in tbl.a_indices]
                        for tbl, st in zip(tables, pstride)]
                    for idx in _iter_sums(scaled):
                        if assigned[idx]:
                            continue
                        if gen[idx] != g:
                            gen[idx] = g
                            winner[idx] = t_ord
                            touched.append(idx)
                        elif winner[idx] != t_ord:
                            raise TheoremViolation(
                                "non-unique maximal destabilizing "
                                f"subrepresentation at index {idx} of {dims}")
            resolved = {}
            for t_ord, (e, quot_dims, tables, sub_strides,
                        quot_strides) in enumerate(tuples):
                resolved[t_ord] = (e, tables, sub_strides, quot_strides,
                                   self.table(e), self.table(quot_dims))
            for idx in touched:
                assigned[idx] = 1
                e, tables, sub_strides, quot_strides, sub_table, quot_table = \
                    resolved[winner[idx]]
                u = w = 0
                for k in range(len(arrows)):
                    a = (idx // pstride[k]) % ppow[k]
                    uk, wk = tables[k].blocks[a]
                    u += uk * sub_strides[k]
                    w += wk * quot_strides[k]
                if sub_table.type_ids[u] != 0:
                    raise TheoremViolation(
                        "extracted maximal destabilizing piece is not "
                        f"semistable at index {idx} of {dims}")
                pieces = (e,) + quot_table.types[quot_table.type_ids[w]].pieces
                tid = type_index.get(pieces)
                if tid is None:
                    tid = len(types)
                    types.append(HNType(theta, pieces))
                    type_index[pieces] = tid
                type_ids[idx] = tid

        counts = {types[tid]: n for tid, n in Counter(type_ids).items()}
        result = SpaceTable(dims, types, type_ids, counts)
        self.tables[dims] = result
        return result


def classify_scan(quiver, dims, theta, field, max_reps=DEFAULT_MAX_REPS,
                  max_tuples=DEFAULT_MAX_TUPLES, classifier=None):
    """Stratum counts via the subspace-major engine."""
    if classifier is None:
        classifier = ScanClassifier(quiver, theta, field, max_reps, max_tuples)
    return dict(classifier.table(tuple(dims)).counts)


# ---------------------------------------------------------------------------
# direct (point-by-point) engine


def _direct_range(quiver, dims, theta, field, start, stop, max_tuples):
    from .stability import hn_filtration

    space = RepSpace(quiver, dims, field)
    counter = Counter()
    for idx in range(start, stop):
        _, beta = hn_filtration(space.rep(idx), theta, max_tuples=max_tuples)
        counter[beta.pieces] += 1
    return counter


def _direct_worker(args):
    (vertex_count, arrows, dims, theta, q, start, stop, max_tuples) = args
    quiver = Quiver(vertex_count, arrows)
    field = field_table(q)
    counter = _direct_range(quiver, dims, theta, field, start, stop, max_tuples)
    return list(counter.items())


POOL_MIN_POINTS = 2048  # below this the pool startup dominates the work


def classify_direct(quiver, dims, theta, field, workers=1,
                    max_reps=DEFAULT_MAX_REPS, max_tuples=DEFAULT_MAX_TUPLES):
    """Stratum counts via the filtration procedure on every point.

    With ``workers`` > 1 the index range is split over a process pool;
    partial tables merge by addition.
    """
    dims = tuple(dims)
    theta = tuple(theta)
    space = RepSpace(quiver, dims, field)
    N = space.point_count
    if N > max_reps:
        raise BudgetExceeded(f"{N} representations exceed the budget {max_reps}")
    if workers <= 1 or N < POOL_MIN_POINTS:
        merged = _direct_range(quiver, dims, theta, field, 0, N, max_tuples)
    else:
        chunk = -(-N // (2 * workers))
        jobs = [(quiver.vertex_count, quiver.arrows, dims, theta, field.q,
                 lo, min(lo + chunk, N), max_tuples)
                for lo in range(0, N, chunk)]
        merged = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for items in pool.map(_direct_worker, jobs):
                for pieces, n in items:
                    merged[pieces] += n
    return {HNType(theta, pieces): n for pieces, n in merged.items()}


# ---------------------------------------------------------------------------
# filtration counting (the uniqueness oracle)


class FiltrationCounter:
    """For every point, the number of filtrations with semistable
    subquotients and strictly decreasing slopes.

    Organized like the scan classifier: a filtration is a first step (a
    subspace tuple) plus a filtration of the quotient with slopes below
    the first slope, so the count table of a space is assembled from
    count tables of smaller spaces keyed by a slope bound.  The
    recursion never consults the filtration procedure, which is what
    makes it an independent uniqueness oracle.
    """

    def __init__(self, classifier):
        self.classifier = classifier
        self.memo = {}

    def counts(self, dims, bound=None):
        """Count table for the space, or None if identically zero.

        ``bound`` restricts to filtrations whose first slope is
        strictly below it; None means unrestricted.
        """
        key = (tuple(dims), bound)
        if key in self.memo:
            return self.memo[key]
        dims = tuple(dims)
        cls = self.classifier
        quiver, theta, field = cls.quiver, cls.theta, cls.field
        space = RepSpace(quiver, dims, field)
        N = space.point_count
        out = None
        if bound is None or slope(theta, dims) < bound:
            tids = cls.table(dims).type_ids
            out = [1 if t == 0 else 0 for t in tids]
        arrows = quiver.arrows
        pstride = space.arrow_strides
        catalogs = [subspace_catalog(field, n) for n in dims]
        by_dim = [
            {k: [(o, rec) for o, rec in enumerate(cat) if rec.k == k]
             for k in range(n + 1)}
            for cat, n in zip(catalogs, dims)]
        for e in nonzero_subvectors(dims):
            if e == dims:
                continue
            mu_e = slope(theta, e)
            if bound is not None and mu_e >= bound:
                continue
            quot_dims = tuple(d - x for d, x in zip(dims, e))
            child = self.counts(quot_dims, mu_e)
            if child is None:
                continue
            ss_ids = cls.table(e).type_ids
            sub_strides = RepSpace(quiver, e, field).arrow_strides
            quot_strides = RepSpace(quiver, quot_dims, field).arrow_strides
            if out is None:
                out = [0] * N
            per_vertex = [by_dim[i][e[i]] for i in range(len(dims))]
            for recs in product(*per_vertex):
                tables = [
                    _block_table(field, dims[s], dims[t], recs[s][0], recs[t][0])
                    for (s, t) in arrows]
                self._accumulate(out, child, ss_ids, tables,
                                 pstride, sub_strides, quot_strides)
        if out is not None and not any(out):
            out = None
        self.memo[key] = out
        return out

    def _accumulate(self, out, child, ss_ids, tables, pstride, sub_strides,
                    quot_strides):
        # iterate over restriction blocks first so non-semistable first
        # pieces are skipped wholesale
        grouped = [
            {u: [(a * pst, w * qst) for (a, w) in lst]
             for u, lst in tbl.by_sub.items()}
            for tbl, pst, qst in zip(tables, pstride, quot_strides)]
        for u_combo in product(*[list(g.items()) for g in grouped]):
            u = sum(uk * st for (uk, _), st in zip(u_combo, sub_strides))
            if ss_ids[u] != 0:
                continue
            lists = [entry for (_, entry) in u_combo]
            for pairs in product(*lists):
                idx = 0
                w = 0
                for a_scaled, w_scaled in pairs:
                    idx += a_scaled
                    w += w_scaled
                out[idx] += child[w]


def count_hn_filtrations(quiver, dims, theta, field, classifier=None,
                         max_reps=DEFAULT_MAX_REPS,
                         max_tuples=DEFAULT_MAX_TUPLES):
    """Number of valid filtrations of every point, by representation index."""
    if classifier is None:
        classifier = ScanClassifier(quiver, tuple(theta), field,
                                    max_reps, max_tuples)
    result = FiltrationCounter(classifier).counts(tuple(dims), None)
    if result is None:
        space = RepSpace(quiver, tuple(dims), field)
        result = [0] * space.point_count
    return result
