"""Command line front end.

Problem file format (line oriented, UTF-8, '#' starts a comment):

    vertices <n>                  required, before any arrow
    arrow <src> <dst>             zero or more
    dim <d_0> ... <d_{n-1}>       required
    theta <t_0> ... <t_{n-1}>     required
    q <q1> <q2> ...               optional default field sizes
    budget-reps <N>               optional enumeration budget
    budget-subspaces <N>          optional subspace tuple budget

Representation literal format (for ``hn --rep``): one line per arrow of
nonzero matrix size, in quiver arrow order, the d_t x d_s matrix given
row-major as field element indices.

Stratum tables serialize one type per line: the piece dimension vectors
as comma-joined tuples separated by semicolons, a space, the count
(e.g. ``1,0;0,1 1``).  Polynomials print both in a human form like
``q^2 + q + 1`` and as the ascending coefficient line ``1 1 1``.

Exit codes: 0 ok, 2 parse error, 3 budget exceeded, 4 coprimality
precondition failed, 5 theorem violation.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .counting import (coprime_witness, moduli_count_poly, rep_count_poly,
                       semistable_count_poly, stratum_count_poly,
                       torsor_orbit_count)
from .errors import (ProblemParseError, QuiverCountError,
                     TheoremViolation)
from .ffield import field_table, prime_power
from .purity import CountSamples, strong_purity_check, weak_purity_periodic_fit
from .quiver import Quiver, rep_space_dim
from .rep import (DEFAULT_MAX_REPS, DEFAULT_MAX_TUPLES, RepSpace,
                  Representation, enumerate_reps)
from .stability import hn_filtration
from .strata import classify_representations, enumerate_hn_types


@dataclass
class ProblemFile:
    """A parsed problem: the quiver, dimension vector and character,
    optional default field sizes and enumeration budgets."""

    quiver: Quiver
    dims: tuple
    theta: tuple
    q_list: tuple | None = None
    max_reps: int = DEFAULT_MAX_REPS
    max_tuples: int = DEFAULT_MAX_TUPLES


def parse_problem(text):
    """Parse a problem file; rejects unknown keys, duplicate keys and
    semantic mismatches, reporting the offending line."""
    vertices = None
    arrows = []
    dims = theta = q_list = None
    max_reps, max_tuples = DEFAULT_MAX_REPS, DEFAULT_MAX_TUPLES
    seen_budget_reps = seen_budget_tuples = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "vertices":
            if vertices is not None:
                raise ProblemParseError("duplicate 'vertices'", lineno)
            vertices = _one_int(args, lineno, minimum=1)
        elif key == "arrow":
            if vertices is None:
                raise ProblemParseError("'vertices' must come before arrows", lineno)
            src, dst = _ints(args, 2, lineno)
            if not (0 <= src < vertices and 0 <= dst < vertices):
                raise ProblemParseError(
                    f"arrow endpoint outside 0..{vertices - 1}", lineno)
            arrows.append((src, dst))
        elif key == "dim":
            if dims is not None:
                raise ProblemParseError("duplicate 'dim'", lineno)
            dims = _vector(args, vertices, lineno, minimum=0)
        elif key == "theta":
            if theta is not None:
                raise ProblemParseError("duplicate 'theta'", lineno)
            theta = _vector(args, vertices, lineno)
        elif key == "q":
            if q_list is not None:
                raise ProblemParseError("duplicate 'q'", lineno)
            values = _ints(args, None, lineno)
            for v in values:
                try:
                    prime_power(v)
                except ValueError as exc:
                    raise ProblemParseError(str(exc), lineno) from exc
            q_list = tuple(values)
        elif key == "budget-reps":
            if seen_budget_reps:
                raise ProblemParseError("duplicate 'budget-reps'", lineno)
            seen_budget_reps = True
            max_reps = _one_int(args, lineno, minimum=1)
        elif key == "budget-subspaces":
            if seen_budget_tuples:
                raise ProblemParseError("duplicate 'budget-subspaces'", lineno)
            seen_budget_tuples = True
            max_tuples = _one_int(args, lineno, minimum=1)
        else:
            raise ProblemParseError(f"unknown key {key!r}", lineno)
    if vertices is None:
        raise ProblemParseError("missing 'vertices'")
    if dims is None:
        raise ProblemParseError("missing 'dim'")
    if theta is None:
        raise ProblemParseError("missing 'theta'")
    return ProblemFile(Quiver(vertices, tuple(arrows)), dims, theta, q_list,
                       max_reps, max_tuples)


def _ints(args, count, lineno):
    if count is not None and len(args) != count:
        raise ProblemParseError(f"expected {count} integers", lineno)
    if count is None and not args:
        raise ProblemParseError("expected at least one integer", lineno)
    try:
        return tuple(int(a) for a in args)
    except ValueError as exc:
        raise ProblemParseError(f"not an integer: {exc}", lineno) from exc


def _one_int(args, lineno, minimum=None):
    (value,) = _ints(args, 1, lineno)
    if minimum is not None and value < minimum:
        raise ProblemParseError(f"value must be >= {minimum}", lineno)
    return value


def _vector(args, vertices, lineno, minimum=None):
    values = _ints(args, None, lineno)
    if vertices is None:
        raise ProblemParseError("'vertices' must come first", lineno)
    if len(values) != vertices:
        raise ProblemParseError(
            f"expected {vertices} entries, got {len(values)}", lineno)
    if minimum is not None and any(v < minimum for v in values):
        raise ProblemParseError(f"entries must be >= {minimum}", lineno)
    return values


def parse_representation(text, space):
    """Parse a representation literal for the given space."""
    expected = [(k, size) for k, size in enumerate(space.arrow_sizes) if size > 0]
    data_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        data_lines.append((lineno, line))
    if len(data_lines) != len(expected):
        raise ProblemParseError(
            f"expected {len(expected)} matrix lines, got {len(data_lines)}")
    mats = [None] * len(space.arrow_sizes)
    q = space.field.q
    for (lineno, line), (k, size) in zip(data_lines, expected):
        entries = _ints(line.split(), size, lineno)
        if any(not 0 <= x < q for x in entries):
            raise ProblemParseError(f"entry outside field of size {q}", lineno)
        rows, cols = space.arrow_shapes[k]
        mats[k] = tuple(entries[r * cols:(r + 1) * cols] for r in range(rows))
    for k, size in enumerate(space.arrow_sizes):
        if size == 0:
            rows, cols = space.arrow_shapes[k]
            mats[k] = tuple(() for _ in range(rows))
    return Representation(space, tuple(mats))


def parse_samples(text):
    """Parse a sample file: a ``base_q <q>`` header, then ``n count`` lines."""
    base_q = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "base_q":
            if base_q is not None:
                raise ProblemParseError("duplicate 'base_q'", lineno)
            base_q = _one_int(args, lineno, minimum=2)
        else:
            if len(args) != 1:
                raise ProblemParseError("sample lines are 'n count'", lineno)
            try:
                pairs.append((int(key), int(args[0])))
            except ValueError as exc:
                raise ProblemParseError(f"bad sample line: {raw!r}", lineno) from exc
    if base_q is None:
        raise ProblemParseError("missing 'base_q' header")
    try:
        return CountSamples(base_q, tuple(pairs))
    except ValueError as exc:
        raise ProblemParseError(str(exc)) from exc


def _prime_powers_upto(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except ValueError:
            continue
        out.append(q)
    return out


def _poly_json(poly):
    return {"pretty": poly.pretty(), "coeffs": poly.coeff_line().split()}


def _emit(args, text_lines, json_obj):
    if args.json:
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load_problem(args):
    with open(args.problem, encoding="utf-8") as handle:
        return parse_problem(handle.read())


# ---------------------------------------------------------------------------
# subcommands


def _cmd_count_reps(args):
    problem = _load_problem(args)
    poly = rep_count_poly(problem.quiver, problem.dims)
    lines = [f"rep-count-poly: {poly.pretty()}", f"coeffs: {poly.coeff_line()}"]
    obj = {"command": "count-reps", "poly": _poly_json(poly)}
    if args.brute is not None:
        field = field_table(args.brute)
        count = sum(1 for _ in enumerate_reps(
            problem.quiver, problem.dims, field, max_reps=problem.max_reps))
        expected = poly(args.brute)
        if count != expected:
            raise TheoremViolation(
                f"brute count {count} != polynomial value {expected}")
        lines.append(f"brute q={args.brute}: {count}")
        obj["brute"] = {"q": args.brute, "count": count}
    _emit(args, lines, obj)
    return 0


def _format_basis(basis):
    if not basis:
        return "-"
    return ";".join(" ".join(str(x) for x in row) for row in basis)


def _cmd_hn(args):
    problem = _load_problem(args)
    field = field_table(args.q)
    space = RepSpace(problem.quiver, problem.dims, field)
    with open(args.rep, encoding="utf-8") as handle:
        M = parse_representation(handle.read(), space)
    filt, beta = hn_filtration(M, problem.theta, max_tuples=problem.max_tuples)
    lines = [f"type: {beta.key_str()}",
             "slopes: " + " ".join(str(mu) for mu in beta.slopes)]
    for k, step in enumerate(filt.steps[1:], 1):
        lines.append(f"step {k} dims: {','.join(str(d) for d in step.dims)}")
        for i, basis in enumerate(step.bases):
            lines.append(f"  vertex {i}: {_format_basis(basis)}")
    obj = {"command": "hn",
           "type": [list(p) for p in beta.pieces],
           "slopes": [str(mu) for mu in beta.slopes],
           "steps": [{"dims": list(s.dims),
                      "bases": [[list(r) for r in b] for b in s.bases]}
                     for s in filt.steps[1:]]}
    _emit(args, lines, obj)
    return 0


def _cmd_stratify(args):
    problem = _load_problem(args)
    field = field_table(args.q)
    table = classify_representations(
        problem.quiver, problem.dims, problem.theta, field,
        engine=args.engine, workers=args.threads,
        max_reps=problem.max_reps, max_tuples=problem.max_tuples)
    lines = [f"stratum table (q={args.q}):"]
    lines += ["  " + line for line in table.serialize_lines()]
    formulas = []
    lines.append("stratum formulas:")
    for beta in enumerate_hn_types(problem.quiver, problem.dims, problem.theta):
        ss = {piece: semistable_count_poly(problem.quiver, piece, problem.theta)
              for piece in set(beta.pieces)}
        poly = stratum_count_poly(problem.quiver, beta, ss)
        value = poly(args.q)
        observed = table.counts.get(beta, 0)
        if value != observed:
            raise TheoremViolation(
                f"stratum formula for {beta.key_str()} predicts {value}, "
                f"classification found {observed}")
        lines.append(f"  {beta.key_str()}: {poly.pretty()} = {value}")
        formulas.append({"type": [list(p) for p in beta.pieces],
                         "poly": _poly_json(poly), "count": observed})
    total, expected = table.total(), table.expected_total()
    if total != expected:
        raise TheoremViolation(f"partition failed: {total} != {expected}")
    lines.append(f"partition: {total} == q^{rep_space_dim(problem.quiver, problem.dims)} ok")
    obj = {"command": "stratify", "q": args.q,
           "table": [{"type": [list(p) for p in b.pieces], "count": c}
                     for b, c in table.sorted_items()],
           "formulas": formulas, "total": total}
    _emit(args, lines, obj)
    return 0


def _cmd_moduli_poly(args):
    problem = _load_problem(args)
    poly = moduli_count_poly(problem.quiver, problem.dims, problem.theta)
    _emit(args, [poly.pretty(), f"coeffs: {poly.coeff_line()}"],
          {"command": "moduli-poly", "poly": _poly_json(poly)})
    return 0


DIRECT_CROSSCHECK_LIMIT = 4096


def _cmd_verify(args):
    problem = _load_problem(args)
    if args.qmax is not None:
        qs = _prime_powers_upto(args.qmax)
    elif problem.q_list:
        qs = list(problem.q_list)
    else:
        raise ProblemParseError("no fields to verify: pass --qmax or add a 'q' line")
    quiver, dims, theta = problem.quiver, problem.dims, problem.theta
    lines = []
    checks = []

    def report(name, q, detail):
        lines.append(f"q={q}: {name} ok ({detail})")
        checks.append({"q": q, "check": name, "detail": detail})

    types = enumerate_hn_types(quiver, dims, theta)
    ss_polys = {}
    for beta in types:
        for piece in beta.pieces:
            if piece not in ss_polys:
                ss_polys[piece] = semistable_count_poly(quiver, piece, theta)
    witness = coprime_witness(dims, theta)
    for q in qs:
        field = field_table(q)
        table = classify_representations(
            quiver, dims, theta, field,
            max_reps=problem.max_reps, max_tuples=problem.max_tuples)
        total, expected = table.total(), table.expected_total()
        if total != expected:
            raise TheoremViolation(
                f"partition failed at q={q}: {total} != {expected}")
        report("partition", q, f"{total} points in {len(table.counts)} strata")
        if expected <= DIRECT_CROSSCHECK_LIMIT:
            direct = classify_representations(
                quiver, dims, theta, field, engine="direct",
                workers=args.threads,
                max_reps=problem.max_reps, max_tuples=problem.max_tuples)
            if direct.counts != table.counts:
                raise TheoremViolation(f"engines disagree at q={q}")
            report("engines", q, "point-by-point table matches")
        for beta in types:
            value = stratum_count_poly(quiver, beta, ss_polys)(q)
            observed = table.counts.get(beta, 0)
            if value != observed:
                raise TheoremViolation(
                    f"stratum formula for {beta.key_str()} at q={q}: "
                    f"{value} != {observed}")
        report("stratum formulas", q, f"{len(types)} types")
        if witness is None:
            orbits = torsor_orbit_count(quiver, dims, theta, field,
                                        max_reps=problem.max_reps,
                                        max_tuples=problem.max_tuples)
            value = moduli_count_poly(quiver, dims, theta)(q)
            if value != orbits:
                raise TheoremViolation(
                    f"moduli polynomial at q={q}: {value} != {orbits} orbits")
            report("torsor and moduli", q, f"{orbits} orbits")
        else:
            lines.append(
                f"q={q}: torsor check skipped (not coprime: {witness} shares the slope)")
            checks.append({"q": q, "check": "torsor", "detail": "skipped"})
    lines.append("verify: all checks passed")
    _emit(args, lines, {"command": "verify", "qs": qs, "checks": checks,
                        "result": "ok"})
    return 0


def _cmd_purity_fit(args):
    with open(args.samples, encoding="utf-8") as handle:
        samples = parse_samples(handle.read())
    if args.period == 1:
        report = strong_purity_check(samples, args.degree)
    else:
        report = weak_purity_periodic_fit(samples, args.period, args.degree)
    obj = {"command": "purity-fit", "verdict": report.verdict,
           "period": report.period, "details": report.details,
           "polynomials": ([_poly_json(p) for p in report.polynomials]
                           if report.polynomials else None)}
    _emit(args, report.format_lines(), obj)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quivercount",
        description="Exact point counting for quiver representation spaces "
                    "over small finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true",
                       help="machine readable output, one JSON object")
        return p

    p = add("count-reps", _cmd_count_reps,
            "print the point count polynomial of the representation space")
    p.add_argument("problem")
    p.add_argument("--brute", type=int, metavar="Q",
                   help="also count exhaustively over F_Q")

    p = add("hn", _cmd_hn,
            "print the filtration and instability type of one representation")
    p.add_argument("problem")
    p.add_argument("--rep", required=True, help="representation literal file")
    p.add_argument("--q", required=True, type=int, help="field size")

    p = add("stratify", _cmd_stratify,
            "classify every representation over F_q into strata")
    p.add_argument("problem")
    p.add_argument("--q", required=True, type=int, help="field size")
    p.add_argument("--engine", choices=("auto", "scan", "direct"),
                   default="auto")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker processes for the point-by-point engine")

    p = add("moduli-poly", _cmd_moduli_poly,
            "print the moduli counting polynomial (coprime case)")
    p.add_argument("problem")

    p = add("verify", _cmd_verify,
            "run every cross-check for all prime powers up to a bound")
    p.add_argument("problem")
    p.add_argument("--qmax", type=int, help="check all prime powers <= QMAX")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker processes for the point-by-point engine")

    p = add("purity-fit", _cmd_purity_fit,
            "fit sampled counts by a (periodic) polynomial in q^n")
    p.add_argument("--samples", required=True, help="sample file")
    p.add_argument("--period", required=True, type=int)
    p.add_argument("--degree", required=True, type=int)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except QuiverCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
