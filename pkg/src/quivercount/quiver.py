"""Quivers, dimension vectors, stability characters and slopes.

Dimension vectors and characters are plain tuples of ints indexed by
vertex; slopes are exact Fractions so that every comparison made while
stratifying is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .polynomial import CountPolynomial, Q


@dataclass(frozen=True)
class Quiver:
    """A finite directed graph; loops and parallel arrows allowed.

    The arrow list order is part of the identity of the quiver: matrix
    tuples, representation indices and file formats all follow it.
    """

    vertex_count: int
    arrows: tuple

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("quiver needs at least one vertex")
        object.__setattr__(self, "arrows", tuple(
            (int(s), int(t)) for (s, t) in self.arrows))
        for (s, t) in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow ({s}, {t}) leaves the vertex range")

    def __repr__(self):
        return f"Quiver({self.vertex_count}, {list(self.arrows)})"


def kronecker(arrow_count):
    """Two vertices and ``arrow_count`` parallel arrows 0 -> 1."""
    return Quiver(2, tuple((0, 1) for _ in range(arrow_count)))


def check_vector(quiver, vec, name):
    vec = tuple(int(x) for x in vec)
    if len(vec) != quiver.vertex_count:
        raise ValueError(f"{name} has length {len(vec)}, expected {quiver.vertex_count}")
    return vec


def total_dim(dims):
    return sum(dims)


def nonzero_subvectors(dims):
    """All nonzero vectors e with 0 <= e <= dims componentwise (the full
    vector included)."""
    for vec in product(*[range(d + 1) for d in dims]):
        if any(vec):
            yield vec


def theta_of(theta, dims):
    """The value of the linear function theta on a dimension vector."""
    return sum(t * d for t, d in zip(theta, dims))


def slope(theta, dims):
    """Exact slope theta(d) / dim(d) of a nonzero dimension vector."""
    dim = total_dim(dims)
    if dim <= 0:
        raise ValueError("slope of the zero dimension vector is undefined")
    return Fraction(theta_of(theta, dims), dim)


def character_exponents(theta, dims):
    """Exponent vector (m_i) of the determinant character attached to theta.

    m_i = theta(d) - dim(d) * theta_i; the m_i satisfy sum_i m_i d_i = 0,
    which is what makes the character well defined on the quotient of the
    base-change group by its central torus.
    """
    td = theta_of(theta, dims)
    dim = total_dim(dims)
    return tuple(td - dim * t for t in theta)


def rep_space_dim(quiver, dims):
    """Affine dimension of the space of matrix tuples: sum of d_i * d_j."""
    return sum(dims[i] * dims[j] for (i, j) in quiver.arrows)


def gl_order(n, q):
    """|GL_n(F_q)| as an exact integer; 1 for n = 0."""
    if n < 0:
        raise ValueError("negative matrix size")
    if q < 2:
        raise ValueError("q must be at least 2")
    qn = q**n
    out = 1
    for k in range(n):
        out *= qn - q**k
    return out


def gl_order_poly(n):
    """|GL_n| as a polynomial in q."""
    out = CountPolynomial.one()
    qn = CountPolynomial.monomial(n)
    for k in range(n):
        out = out * (qn - CountPolynomial.monomial(k))
    return out


def group_order_poly(dims):
    """Order polynomial of the product of the GL(d_i), the group acting by
    base change on the representation space."""
    out = CountPolynomial.one()
    for d in dims:
        out = out * gl_order_poly(d)
    return out


def pg_order(dims, q):
    """Point count of the base-change group modulo its central torus."""
    if total_dim(dims) == 0:
        raise ValueError("no central torus to quotient by for the zero vector")
    order = 1
    for d in dims:
        order *= gl_order(d, q)
    assert order % (q - 1) == 0
    return order // (q - 1)


# re-exported for callers assembling polynomials by hand
q_poly = Q
