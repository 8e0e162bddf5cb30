"""Closed-form stratum counts and the recursion that produces the
semistable and moduli counting polynomials.

The count of one stratum factors as (number of flags of the type) x
(free off-diagonal block choices) x (semistable choices for the
diagonal blocks):

    |S_beta| = (g_d / |P_beta|) * q^f(beta) * prod_k |R^ss(d^k)|

with |P_beta| the order of the flag-preserving subgroup and f(beta)
counting the arrow matrix entries above the block diagonal.  Which
triangle of blocks is free is a convention that cannot be read off a
formula alone; the acceptance suite locks it by exact comparison with
exhaustive classification before anything downstream is trusted.

Summing strata over all types recovers the whole space, which solved
for the open stratum turns into a recursion over smaller dimension
vectors for |R^ss|.
"""

from dataclasses import dataclass

from .errors import CoprimalityError, TheoremViolation
from .polynomial import CountPolynomial, InexactDivisionError
from .quiver import (gl_order_poly, group_order_poly, nonzero_subvectors,
                     pg_order, rep_space_dim, slope)
from .strata import classify_representations, enumerate_hn_types


def poly_ops(op, a, b=None):
    """Dispatch a polynomial operation by name
    (add|mul|div_exact|eval_at_integer)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div_exact":
        return a.div_exact(b)
    if op == "eval_at_integer":
        return a(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def rep_count_poly(quiver, dims):
    """Point count of the whole representation space: the monomial
    q^(sum of d_i * d_j over arrows)."""
    return CountPolynomial.monomial(rep_space_dim(quiver, dims))


def parabolic_order_poly(beta):
    """Order of the subgroup preserving one flag of type beta: per vertex,
    a q-power for the unipotent blocks times the GL orders of the
    diagonal blocks."""
    out = CountPolynomial.one()
    pieces = beta.pieces
    n = len(pieces)
    for i in range(len(beta.ambient)):
        exponent = sum(pieces[k][i] * pieces[l][i]
                       for k in range(n) for l in range(k))
        out = out * CountPolynomial.monomial(exponent)
        for k in range(n):
            out = out * gl_order_poly(pieces[k][i])
    return out


def flag_count_poly(beta):
    """Number of flags of type beta: the group order divided (exactly) by
    the parabolic order."""
    try:
        return group_order_poly(beta.ambient).div_exact(parabolic_order_poly(beta))
    except InexactDivisionError as exc:
        raise TheoremViolation(f"inexact flag factor for type {beta}") from exc


def fiber_exponent(quiver, beta):
    """Number of free arrow matrix entries once a flag of type beta is
    preserved: blocks from a later piece to an earlier one."""
    pieces = beta.pieces
    n = len(pieces)
    exponent = 0
    for (i, j) in quiver.arrows:
        for k in range(n):
            for l in range(k):
                exponent += pieces[k][i] * pieces[l][j]
    return exponent


@dataclass(frozen=True)
class StratumFormula:
    """The factored closed form of one stratum count."""

    beta: object
    flag_factor: CountPolynomial
    fiber_exponent: int
    ss_factors: tuple

    def polynomial(self):
        out = self.flag_factor * CountPolynomial.monomial(self.fiber_exponent)
        for _, factor in self.ss_factors:
            out = out * factor
        return out


def stratum_formula(quiver, beta, ss_counts):
    """Assemble the stratum formula from known semistable counts.

    ``ss_counts`` maps each piece dimension vector of beta to its
    semistable count polynomial.
    """
    factors = []
    for piece in beta.pieces:
        if piece not in ss_counts:
            raise ValueError(f"missing semistable count for piece {piece}")
        factors.append((piece, ss_counts[piece]))
    return StratumFormula(beta, flag_count_poly(beta),
                          fiber_exponent(quiver, beta), tuple(factors))


def stratum_count_poly(quiver, beta, ss_counts):
    """Exact point count of the stratum indexed by beta, as a polynomial."""
    return stratum_formula(quiver, beta, ss_counts).polynomial()


def semistable_count_poly(quiver, dims, theta):
    """Point count polynomial of the semistable locus.

    Recursion over total dimension: the whole space is the disjoint
    union of its strata, every nontrivial stratum is a closed form in
    semistable counts of strictly smaller dimension vectors, and the
    trivial stratum is the semistable locus itself.
    """
    theta = tuple(theta)
    memo = {}

    def ss(d):
        if d not in memo:
            total = rep_count_poly(quiver, d)
            for beta in enumerate_hn_types(quiver, d, theta):
                if beta.is_trivial():
                    continue
                counts = {piece: ss(piece) for piece in set(beta.pieces)}
                total = total - stratum_count_poly(quiver, beta, counts)
            memo[d] = total
        return memo[d]

    return ss(tuple(dims))


def coprime_witness(dims, theta):
    """A nonzero proper subvector sharing the slope of dims, or None."""
    dims = tuple(dims)
    mu = slope(theta, dims)
    for e in nonzero_subvectors(dims):
        if e != dims and slope(theta, e) == mu:
            return e
    return None


def is_coprime(dims, theta):
    """Whether no nonzero proper subvector of dims has the same slope.

    When this holds, every semistable point is stable, which is the
    hypothesis under which the moduli count below is valid.
    """
    return coprime_witness(dims, theta) is None


def moduli_count_poly(quiver, dims, theta):
    """Point count polynomial of the moduli space of stable
    representations.

    The stable locus fibers freely over the moduli space with fiber the
    base-change group modulo its central torus, so the count is
    (q - 1) * |R^ss| / g_d.  The division must be exact and the result
    must have integer coefficients; either failure is a theorem
    violation, not a recoverable condition.
    """
    dims = tuple(dims)
    witness = coprime_witness(dims, theta)
    if witness is not None:
        raise CoprimalityError(
            f"dimension vector {dims} is not coprime for theta "
            f"{tuple(theta)}: {witness} has the same slope")
    numerator = CountPolynomial((-1, 1)) * semistable_count_poly(quiver, dims, theta)
    try:
        poly = numerator.div_exact(group_order_poly(dims))
    except InexactDivisionError as exc:
        raise TheoremViolation(
            f"(q-1)*|R^ss| not divisible by the group order for {dims}") from exc
    if not poly.has_integer_coeffs():
        raise TheoremViolation(
            f"moduli counting polynomial has non-integer coefficients: {poly}")
    return poly


def torsor_orbit_count(quiver, dims, theta, field, max_reps=None,
                       max_tuples=None):
    """Number of stable points over F_q divided by the order of the
    acting group modulo its central torus, with the divisibility
    verified on the way.

    Requires a coprime dimension vector, so the stable and semistable
    loci agree and the stable count is the open stratum of the
    exhaustive classification.
    """
    dims = tuple(dims)
    witness = coprime_witness(dims, theta)
    if witness is not None:
        raise CoprimalityError(
            f"dimension vector {dims} is not coprime for theta "
            f"{tuple(theta)}: {witness} has the same slope")
    table = classify_representations(quiver, dims, theta, field,
                                     max_reps=max_reps, max_tuples=max_tuples)
    stable = table.trivial_count()
    pg = pg_order(dims, field.q)
    if stable % pg:
        raise TheoremViolation(
            f"|R^s| = {stable} is not divisible by |PG| = {pg} at q = {field.q}")
    return stable // pg
