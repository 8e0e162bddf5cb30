"""Representations of a quiver over GF(q) as matrix tuples, and the
exhaustive enumeration of representations, subspaces and
subrepresentations.

Conventions fixed here and relied on everywhere else:

* A representation is one matrix per arrow, in quiver arrow order; the
  matrix of an arrow s -> t has shape d_t x d_s and acts on column
  vectors.
* Representations are indexed 0 .. q^dim - 1: arrow 0 occupies the
  least significant base-q digits, each matrix flattened row-major
  (see linalg for the digit order).  enumerate_reps yields in
  increasing index order.
* Subspaces are stored as reduced row echelon bases, so equal
  subspaces have identical storage and set-level deduplication is
  structural equality.
* Quotient coordinates are the non-pivot columns of the subspace
  basis, in increasing column order.  This makes quotients and
  associated graded pieces deterministic.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import BudgetExceeded
from .linalg import (decode_matrix, encode_matrix, encode_vector, mat_vec,
                     reduce_mod, rref)
from .quiver import check_vector, rep_space_dim

DEFAULT_MAX_REPS = 2**24
DEFAULT_MAX_TUPLES = 2**20


class RepSpace:
    """The affine space of matrix tuples for (quiver, dims) over GF(q)."""

    def __init__(self, quiver, dims, field):
        self.quiver = quiver
        self.dims = check_vector(quiver, dims, "dimension vector")
        self.field = field
        self.arrow_shapes = tuple(
            (self.dims[t], self.dims[s]) for (s, t) in quiver.arrows)
        self.arrow_sizes = tuple(r * c for (r, c) in self.arrow_shapes)
        self.dimension = rep_space_dim(quiver, self.dims)
        strides = []
        acc = 1
        for size in self.arrow_sizes:
            strides.append(acc)
            acc *= field.q**size
        self.arrow_strides = tuple(strides)
        self.point_count = acc

    def rep(self, index):
        """The representation with the given index."""
        if not 0 <= index < self.point_count:
            raise ValueError(f"index {index} out of range")
        q = self.field.q
        mats = []
        for (rows, cols), size in zip(self.arrow_shapes, self.arrow_sizes):
            index, digit = divmod(index, q**size)
            mats.append(decode_matrix(digit, rows, cols, q))
        return Representation(self, tuple(mats))

    def index_of(self, mats):
        q = self.field.q
        return sum(encode_matrix(m, q) * s for m, s in zip(mats, self.arrow_strides))

    def zero_rep(self):
        return self.rep(0)

    def __eq__(self, other):
        return (isinstance(other, RepSpace) and self.quiver == other.quiver
                and self.dims == other.dims and self.field == other.field)

    def __hash__(self):
        return hash((self.quiver, self.dims, self.field.q))

    def __repr__(self):
        return f"RepSpace({self.quiver!r}, dims={self.dims}, q={self.field.q})"


@dataclass(frozen=True)
class Representation:
    """One point of the representation space: a matrix per arrow."""

    space: RepSpace
    mats: tuple

    def __post_init__(self):
        q = self.space.field.q
        if len(self.mats) != len(self.space.arrow_shapes):
            raise ValueError("wrong number of matrices")
        norm = []
        for mat, (rows, cols) in zip(self.mats, self.space.arrow_shapes):
            mat = tuple(tuple(int(x) for x in row) for row in mat)
            if len(mat) != rows or any(len(row) != cols for row in mat):
                raise ValueError(f"matrix shape mismatch: expected {rows}x{cols}")
            if any(not 0 <= x < q for row in mat for x in row):
                raise ValueError("matrix entry outside the field")
            norm.append(mat)
        object.__setattr__(self, "mats", tuple(norm))

    @property
    def index(self):
        return self.space.index_of(self.mats)

    @property
    def dims(self):
        return self.space.dims


@dataclass(frozen=True)
class SubspaceTuple:
    """A subspace of GF(q)^{d_i} per vertex, each stored as an RREF basis."""

    ambient: tuple
    bases: tuple

    def __post_init__(self):
        object.__setattr__(self, "ambient", tuple(int(d) for d in self.ambient))
        object.__setattr__(self, "bases", tuple(
            tuple(tuple(int(x) for x in row) for row in basis)
            for basis in self.bases))
        if len(self.bases) != len(self.ambient):
            raise ValueError("one basis per vertex required")
        for basis, n in zip(self.bases, self.ambient):
            _check_rref(basis, n)

    @property
    def dims(self):
        return tuple(len(basis) for basis in self.bases)

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def is_full(self):
        return self.dims == self.ambient

    @classmethod
    def zero(cls, ambient):
        return cls(tuple(ambient), tuple(() for _ in ambient))

    @classmethod
    def full(cls, ambient):
        return cls(tuple(ambient), tuple(_identity_basis(n) for n in ambient))


def _identity_basis(n):
    return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))


def _check_rref(basis, n):
    pivots = []
    for row in basis:
        if len(row) != n:
            raise ValueError("basis row length does not match the ambient dimension")
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None or row[p] != 1:
            raise ValueError("basis is not in reduced row echelon form")
        if pivots and p <= pivots[-1]:
            raise ValueError("pivot columns must strictly increase")
        pivots.append(p)
    for i, row in enumerate(basis):
        for j, p in enumerate(pivots):
            if j != i and row[p] != 0:
                raise ValueError("pivot column not reduced")
    return tuple(pivots)


def pivots_of(basis):
    """Pivot columns of an RREF basis (first nonzero entry of each row)."""
    return tuple(next(j for j, x in enumerate(row) if x) for row in basis)


def free_columns(basis, n):
    """Non-pivot columns, increasing: the quotient coordinate positions."""
    piv = set(pivots_of(basis))
    return tuple(c for c in range(n) if c not in piv)


@dataclass(frozen=True)
class Filtration:
    """A strictly increasing chain 0 = S^0 < S^1 < ... < S^n = full."""

    steps: tuple

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) < 2:
            raise ValueError("a filtration has at least the zero and full steps")
        ambient = steps[0].ambient
        if any(s.ambient != ambient for s in steps):
            raise ValueError("all steps must share the ambient dimensions")
        if not steps[0].is_zero() or not steps[-1].is_full():
            raise ValueError("filtration must run from 0 to the full tuple")
        totals = [s.total_dim for s in steps]
        if any(a >= b for a, b in zip(totals, totals[1:])):
            raise ValueError("total dimension must strictly increase")

    @property
    def length(self):
        """Number of nonzero steps (graded pieces)."""
        return len(self.steps) - 1

    def piece_dims(self):
        return tuple(
            tuple(b - a for a, b in zip(s0.dims, s1.dims))
            for s0, s1 in zip(self.steps, self.steps[1:]))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_reps(quiver, dims, field, start=0, stop=None,
                   max_reps=DEFAULT_MAX_REPS):
    """Yield every representation exactly once, in increasing index order.

    ``start``/``stop`` select an index sub-range so the stream can be
    partitioned across workers.
    """
    space = RepSpace(quiver, dims, field)
    if space.point_count > max_reps:
        raise BudgetExceeded(
            f"{space.point_count} representations exceed the budget {max_reps}")
    if stop is None or stop > space.point_count:
        stop = space.point_count
    for index in range(start, stop):
        yield space.rep(index)


def enumerate_subspaces(n, k, field):
    """Yield the RREF basis of every k-dimensional subspace of GF(q)^n.

    Each subspace appears exactly once; the total count is the Gaussian
    binomial coefficient.  For k = 0 the single empty basis is yielded.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        yield ()
        return
    q = field.q
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, c) for r in range(k)
                for c in range(n) if c > pivots[r] and c not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r in range(k):
                rows[r][pivots[r]] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


class SubspaceInfo:
    """Catalog record: an RREF basis plus derived data for fast scans."""

    __slots__ = ("rows", "pivots", "free_cols", "k", "members")

    def __init__(self, field, rows, n):
        self.rows = rows
        self.k = len(rows)
        self.pivots = pivots_of(rows)
        piv = set(self.pivots)
        self.free_cols = tuple(c for c in range(n) if c not in piv)
        q = field.q
        add, mul = field.add_table, field.mul_table
        members = set()
        for coeffs in product(range(q), repeat=self.k):
            v = [0] * n
            for c, row in zip(coeffs, rows):
                if c:
                    mc = mul[c]
                    v = [add[x][mc[y]] for x, y in zip(v, row)]
            members.add(encode_vector(v, q))
        self.members = frozenset(members)


_CATALOGS = {}


def subspace_catalog(field, n):
    """All subspaces of GF(q)^n as SubspaceInfo records, cached.

    Ordered by dimension, then by generation order of
    enumerate_subspaces; the order is deterministic.
    """
    key = (field, n)
    if key not in _CATALOGS:
        records = []
        for k in range(n + 1):
            for rows in enumerate_subspaces(n, k, field):
                records.append(SubspaceInfo(field, rows, n))
        _CATALOGS[key] = tuple(records)
    return _CATALOGS[key]


def is_subrep(M, S):
    """Definitional check: every arrow maps S at its source into S at
    its target."""
    field = M.space.field
    for (s, t), mat in zip(M.space.quiver.arrows, M.mats):
        target = S.bases[t]
        tp = pivots_of(target)
        for row in S.bases[s]:
            image = mat_vec(field, mat, row)
            if any(reduce_mod(field, target, tp, image)):
                return False
    return True


def enumerate_subreps(M, max_tuples=DEFAULT_MAX_TUPLES):
    """Yield exactly the subspace tuples closed under all arrow maps,
    including the zero and full tuples, in deterministic order."""
    space = M.space
    field = space.field
    catalogs = [subspace_catalog(field, n) for n in space.dims]
    budget = 1
    for cat in catalogs:
        budget *= len(cat)
    if budget > max_tuples:
        raise BudgetExceeded(
            f"{budget} candidate subspace tuples exceed the budget {max_tuples}")
    arrows = space.quiver.arrows
    q = field.q
    for recs in product(*catalogs):
        ok = True
        for (s, t), mat in zip(arrows, M.mats):
            target_members = recs[t].members
            for row in recs[s].rows:
                if encode_vector(mat_vec(field, mat, row), q) not in target_members:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield SubspaceTuple(space.dims, tuple(r.rows for r in recs))


# ---------------------------------------------------------------------------
# quotients, restrictions, graded pieces


def _unit_vector(n, c):
    return tuple(1 if j == c else 0 for j in range(n))


def quotient_rep(M, S):
    """The induced representation on the quotient coordinates.

    Coordinates of the quotient at each vertex are the non-pivot
    columns of the subspace basis; the matrix entries are read off
    after reducing images modulo the subspace.
    """
    if not is_subrep(M, S):
        raise ValueError("not a subrepresentation")
    space = M.space
    field = space.field
    new_dims = tuple(d - k for d, k in zip(space.dims, S.dims))
    free = [free_columns(basis, n) for basis, n in zip(S.bases, space.dims)]
    pivots = [pivots_of(basis) for basis in S.bases]
    mats = []
    for (s, t), mat in zip(space.quiver.arrows, M.mats):
        cols = []
        for c in free[s]:
            image = mat_vec(field, mat, _unit_vector(space.dims[s], c))
            reduced = reduce_mod(field, S.bases[t], pivots[t], image)
            cols.append([reduced[r] for r in free[t]])
        mats.append(tuple(
            tuple(col[i] for col in cols) for i in range(new_dims[t])))
    return Representation(RepSpace(space.quiver, new_dims, field), tuple(mats))


def sub_rep(M, S):
    """The restriction of M to a subrepresentation, in the basis rows of S.

    Coefficients are read off the pivot columns of the target basis,
    which is the unique expression of an element of an RREF row space.
    """
    if not is_subrep(M, S):
        raise ValueError("not a subrepresentation")
    space = M.space
    field = space.field
    pivots = [pivots_of(basis) for basis in S.bases]
    mats = []
    for (s, t), mat in zip(space.quiver.arrows, M.mats):
        cols = []
        for row in S.bases[s]:
            image = mat_vec(field, mat, row)
            cols.append([image[p] for p in pivots[t]])
        k_t = S.dims[t]
        mats.append(tuple(
            tuple(col[i] for col in cols) for i in range(k_t)))
    return Representation(RepSpace(space.quiver, S.dims, field), tuple(mats))


def _image_in_sub_coords(field, outer, inner):
    """inner expressed in the pivot coordinates of outer (inner <= outer)."""
    bases = []
    for basis_in, basis_out in zip(inner.bases, outer.bases):
        piv = pivots_of(basis_out)
        coords = [tuple(row[p] for p in piv) for row in basis_in]
        reduced, _ = rref(field, coords)
        bases.append(reduced)
    return SubspaceTuple(outer.dims, tuple(bases))


def contains(field, outer, inner):
    """Whether each subspace of ``inner`` lies in the one of ``outer``."""
    for basis_in, basis_out in zip(inner.bases, outer.bases):
        piv = pivots_of(basis_out)
        for row in basis_in:
            if any(reduce_mod(field, basis_out, piv, row)):
                return False
    return True


def associated_graded(M, filtration):
    """The list of subquotient representations S^k / S^{k-1}.

    This realizes the limit of the one-parameter subgroup attached to
    the filtration without ever constructing the subgroup: the graded
    pieces are exactly the diagonal blocks in adapted coordinates.
    """
    field = M.space.field
    steps = filtration.steps
    if steps[0].ambient != M.space.dims:
        raise ValueError("filtration ambient does not match the representation")
    for step in steps[1:-1]:
        if not is_subrep(M, step):
            raise ValueError("filtration step is not a subrepresentation")
    for lower, upper in zip(steps, steps[1:]):
        if not contains(field, upper, lower):
            raise ValueError("filtration steps are not nested")
    pieces = []
    for lower, upper in zip(steps, steps[1:]):
        restricted = sub_rep(M, upper)
        lowered = _image_in_sub_coords(field, upper, lower)
        pieces.append(quotient_rep(restricted, lowered))
    return pieces


def pullback(field, S, quotient_rows):
    """Lift a subspace given in quotient coordinates of S back to the
    ambient space, returning the enlarged subspace tuple."""
    bases = []
    for basis, n, rows in zip(S.bases, S.ambient, quotient_rows):
        free = free_columns(basis, n)
        lifted = []
        for row in rows:
            v = [0] * n
            for c, x in zip(free, row):
                v[c] = x
            lifted.append(tuple(v))
        combined, _ = rref(field, list(basis) + lifted)
        # lifts are supported on free columns, so no rank can collapse
        assert len(combined) == len(basis) + len(rows)
        bases.append(combined)
    return SubspaceTuple(S.ambient, tuple(bases))
