"""Command-line interface.

Subcommands: poly, table, triangle, seq, graph, factor, verify, oeis.
Data goes to stdout, diagnostics to stderr; output is byte-deterministic
for a fixed command line. Exit codes: 0 success, 1 verification failure,
2 usage error, 3 network or cache error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import factors, graphs, oeis, polynomials, sequences
from .polynomials import Family

_SEQUENCES: dict[str, Callable[[int], int]] = {
    "padovan": sequences.padovan,
    "fibonacci": sequences.fib,
    "lucas": sequences.lucas,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubefactor",
        description="Optimal cube factors of the gamma and omega cube families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="polynomial coefficients for one index")
    poly.add_argument("--family", choices=["gamma", "omega"], required=True)
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--method", choices=["rec", "closed", "gf"], default="rec")
    fmt = poly.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    table = sub.add_parser("table", help="coefficient triangle, one row per n")
    table.add_argument("--family", choices=["gamma", "omega"], required=True)
    table.add_argument("--rows", type=int, required=True)
    table.add_argument("--csv", action="store_true")

    triangle = sub.add_parser("triangle", help="Lucas triangle rows")
    triangle.add_argument("--rows", type=int, required=True)

    seq = sub.add_parser("seq", help="sequence terms, one per line")
    seq.add_argument("--name", choices=sorted(_SEQUENCES), required=True)
    seq.add_argument("--count", type=int, required=True)

    graph = sub.add_parser("graph", help="graph export")
    graph.add_argument("--family", choices=["gamma", "omega"], required=True)
    graph.add_argument("--n", type=int, required=True)
    graph.add_argument("--emit", choices=["dot", "edgelist"], required=True)

    factor = sub.add_parser("factor", help="cube factor of one graph")
    factor.add_argument("--family", choices=["gamma", "omega"], required=True)
    factor.add_argument("--n", type=int, required=True)
    factor.add_argument("--method", choices=["exact", "greedy", "structural"], required=True)
    factor.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="run the audit suites")
    verify.add_argument("--suite", choices=["identities", "oracle", "all"], required=True)
    verify.add_argument("--max-n", type=int, default=8)
    verify.add_argument("--offline", action="store_true")

    oeis_cmd = sub.add_parser("oeis", help="shift-scan comparison against a b-file")
    oeis_cmd.add_argument("--id", required=True)
    oeis_cmd.add_argument("--against", choices=sorted(_SEQUENCES), required=True)
    oeis_cmd.add_argument("--offline", action="store_true")
    oeis_cmd.add_argument("--cache-dir", default=None)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {
        "poly": _cmd_poly,
        "table": _cmd_table,
        "triangle": _cmd_triangle,
        "seq": _cmd_seq,
        "graph": _cmd_graph,
        "factor": _cmd_factor,
        "verify": _cmd_verify,
        "oeis": _cmd_oeis,
    }[args.command]
    try:
        return handler(args)
    except (oeis.FetchError, oeis.BFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


# ---------------------------------------------------------------------------
# plain data commands
# ---------------------------------------------------------------------------


def _poly_coeffs(family: str, n: int, method: str) -> polynomials.CubeFactorPolynomial:
    fam = Family(family)
    if method == "rec":
        return polynomials.qpoly_rec(fam, n)
    if method == "closed":
        degree = polynomials.poly_degree(fam, n)
        coeffs = tuple(polynomials.q_closed(fam, n, k) for k in range(degree + 1))
        return polynomials.CubeFactorPolynomial(fam, n, coeffs)
    series = polynomials.gf_series(fam, n)
    return polynomials.CubeFactorPolynomial(fam, n, series.terms[n])


def _cmd_poly(args: argparse.Namespace) -> int:
    poly = _poly_coeffs(args.family, args.n, args.method)
    if args.json:
        print(polynomials.poly_to_json(poly))
    elif args.csv:
        print(",".join(str(c) for c in poly.coeffs))
    else:
        print(" ".join(str(c) for c in poly.coeffs))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.rows < 0:
        raise ValueError("--rows must be non-negative")
    sep = "," if args.csv else " "
    for n in range(args.rows):
        print(sep.join(str(c) for c in polynomials.qpoly_rec(args.family, n).coeffs))
    return 0


def _cmd_triangle(args: argparse.Namespace) -> int:
    if args.rows < 0:
        raise ValueError("--rows must be non-negative")
    for n in range(args.rows):
        print(" ".join(str(v) for v in sequences.lucas_triangle_row(n)))
    return 0


def _cmd_seq(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise ValueError("--count must be non-negative")
    term = _SEQUENCES[args.name]
    for n in range(args.count):
        print(term(n))
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    g = graphs.build_graph(args.family, args.n)
    sys.stdout.write(graphs.export_graph(g, args.emit))
    return 0


def _cmd_factor(args: argparse.Namespace) -> int:
    g = graphs.build_graph(args.family, args.n)
    if args.method == "exact":
        factor = factors.exact_min_factor(g)
    elif args.method == "greedy":
        factor = factors.greedy_layered_factor(g)
    else:
        factor = factors.structural_factor(args.family, args.n, g)
    outcome = factors.verify_factor(g, factor)
    if isinstance(outcome, factors.FactorViolation):
        print(f"error: produced factor failed verification: {outcome.message}", file=sys.stderr)
        return 1
    if args.json:
        print(factors.factor_to_json(g, factor))
        return 0
    print(f"parts: {factor.part_count}")
    print("profile: " + " ".join(str(c) for c in outcome.counts))
    for part in factor.parts:
        print(f"k={part.dimension}: " + " ".join(g.labels[v] for v in part.vertices))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


class _Report:
    def __init__(self) -> None:
        self.lines: list[str] = []
        self.counts = {"PASS": 0, "FAIL": 0, "INFO": 0}

    def section(self, title: str) -> None:
        self.lines.append(f"-- {title} --")

    def entry(self, status: str, name: str, detail: str) -> None:
        self.counts[status] += 1
        self.lines.append(f"{status} {name}: {detail}")

    def check(self, name: str, ok: bool, detail: str, fail_detail: str | None = None) -> None:
        if ok:
            self.entry("PASS", name, detail)
        else:
            self.entry("FAIL", name, fail_detail or detail)

    def extend_audit(self, report: polynomials.AuditReport) -> None:
        for e in report.entries:
            self.entry(e.status, e.name, e.detail)


def _verify_sequences(report: _Report, max_n: int) -> None:
    report.section("sequence identities")
    bad = [n for n in range(max_n + 1) if sequences.padovan_closed(n) != sequences.padovan(n)]
    report.check(
        "padovan closed-form equals recurrence",
        not bad,
        f"[n=0..{max_n}]",
        f"first failure at n={bad[0]}" if bad else None,
    )
    bad = [
        n
        for n in range(max_n + 1)
        if sequences.lucas_triangle_row(n)
        != [sequences.lucas_triangle(n, k) for k in range(n + 1)]
    ]
    report.check(
        "lucas-triangle recurrence rows equal the additive formula",
        not bad,
        f"[n=0..{max_n}]",
        f"first failure at row {bad[0]}" if bad else None,
    )
    bad = [
        n
        for n in range(1, max_n + 1)
        if sum(sequences.lucas_triangle_row(n)) != 3 * 2 ** (n - 1)
    ]
    report.check(
        "lucas-triangle row sums equal 3*2^(n-1)",
        not bad,
        f"[n=1..{max_n}]",
        f"first failure at row {bad[0]}" if bad else None,
    )
    bad = [
        n
        for n in range(1, max_n + 1)
        if sequences.fib(n + 1) * sequences.fib(n - 1) - sequences.fib(n) ** 2 != (-1) ** n
    ]
    report.check(
        "fibonacci cassini identity",
        not bad,
        f"[n=1..{max_n}]",
        f"first failure at n={bad[0]}" if bad else None,
    )
    support_ok = (
        sequences.binom_ext(-1, -1) == 1
        and all(
            sequences.binom_ext(a, b) == 0
            for a in range(-4, 7)
            for b in range(-4, 7)
            if (a, b) != (-1, -1) and not (0 <= b <= a)
        )
    )
    report.check(
        "binomial extension is zero outside its support except C(-1,-1)=1",
        support_ok,
        "grid [-4..6]^2",
    )


def _verify_identities(report: _Report, max_n: int) -> None:
    _verify_sequences(report, max_n)
    for fam in (Family.GAMMA, Family.OMEGA):
        report.section(f"polynomial identities: {fam.value}")
        report.extend_audit(polynomials.identity_audit(fam, max_n))


def _solver_range(fam: Family, max_n: int) -> list[int]:
    out = []
    n = 0
    while n <= max_n and graphs.expected_vertex_count(fam, n) <= factors.EXACT_SEARCH_CAP:
        out.append(n)
        n += 1
    return out


def _verify_oracle(report: _Report, max_n: int) -> None:
    for fam in (Family.GAMMA, Family.OMEGA):
        report.section(f"graph oracle: {fam.value}")
        build_ns = list(range(min(max_n, graphs.DEFAULT_MAX_N) + 1))
        built = {n: graphs.build_graph(fam, n) for n in build_ns}

        bad = [n for n in build_ns if built[n].vertex_count != graphs.expected_vertex_count(fam, n)]
        expected_name = "fib(n+2)" if fam is Family.GAMMA else "lucas(n)"
        report.check(
            f"{fam.value} vertex count equals {expected_name}",
            not bad,
            f"[n=0..{build_ns[-1]}]",
            f"first failure at n={bad[0]}" if bad else None,
        )
        bad = [n for n in build_ns if not built[n].is_connected()]
        report.check(
            f"{fam.value} graphs are connected",
            not bad,
            f"[n=0..{build_ns[-1]}]",
            f"first failure at n={bad[0]}" if bad else None,
        )

        solver_ns = _solver_range(fam, max_n)
        hi = solver_ns[-1]
        exact_count_ok = True
        greedy_ok = True
        structural_ok = True
        verified_ok = True
        exact_profile_diffs: list[int] = []
        first_fail = {"exact": -1, "greedy": -1, "structural": -1, "verify": -1}
        for n in solver_ns:
            g = built[n]
            poly = polynomials.qpoly_rec(fam, n)
            exact = factors.exact_min_factor(g)
            greedy = factors.greedy_layered_factor(g)
            structural = factors.structural_factor(fam, n, g)
            for factor in (exact, greedy, structural):
                if isinstance(factors.verify_factor(g, factor), factors.FactorViolation):
                    verified_ok = False
                    if first_fail["verify"] < 0:
                        first_fail["verify"] = n
            if exact.part_count != sequences.padovan(n + 1):
                exact_count_ok = False
                if first_fail["exact"] < 0:
                    first_fail["exact"] = n
            if greedy.profile().counts != poly.coeffs:
                greedy_ok = False
                if first_fail["greedy"] < 0:
                    first_fail["greedy"] = n
            if structural.profile().counts != poly.coeffs:
                structural_ok = False
                if first_fail["structural"] < 0:
                    first_fail["structural"] = n
            if exact.profile().counts != poly.coeffs:
                exact_profile_diffs.append(n)
        rng = f"[n=0..{hi}]"
        report.check(
            f"{fam.value} exact-min part count equals padovan(n+1)",
            exact_count_ok,
            rng,
            f"first failure at n={first_fail['exact']}",
        )
        report.check(
            f"{fam.value} greedy-layered profile equals recurrence coefficients",
            greedy_ok,
            rng,
            f"first failure at n={first_fail['greedy']}",
        )
        report.check(
            f"{fam.value} structural profile equals recurrence coefficients",
            structural_ok,
            rng,
            f"first failure at n={first_fail['structural']}",
        )
        report.check(
            f"{fam.value} verify-factor passes on all three solvers",
            verified_ok,
            rng,
            f"first failure at n={first_fail['verify']}",
        )
        if exact_profile_diffs:
            report.entry(
                "INFO",
                f"{fam.value} exact-min profile vs recurrence coefficients",
                f"minimum-count factor with a different profile at n={exact_profile_diffs}",
            )
        else:
            report.entry(
                "PASS",
                f"{fam.value} exact-min profile equals recurrence coefficients",
                rng,
            )

        bad = []
        for n in solver_ns:
            g = built[n]
            ones = factors.enumerate_cubes(g, 1)[1]
            if sorted(c.vertices for c in ones) != sorted(g.edges()):
                bad.append(n)
        report.check(
            f"{fam.value} dimension-1 cubes are exactly the edge set",
            not bad,
            rng,
            f"first failure at n={bad[0]}" if bad else None,
        )

        split_lo = 3 if fam is Family.GAMMA else 5
        split_ns = [n for n in build_ns if n >= split_lo]
        bad = []
        for n in split_ns:
            g = built[n]
            union: set[int] = set()
            total = 0
            for name in ("cube-pair-0", "cube-pair-1", "third"):
                part = g.subcopies[name].vertices
                union.update(part)
                total += len(part)
            if total != g.vertex_count or len(union) != g.vertex_count:
                bad.append(n)
        if split_ns:
            report.check(
                f"{fam.value} recursion split partitions the vertex set",
                not bad,
                f"[n={split_lo}..{split_ns[-1]}]",
                f"first failure at n={bad[0]}" if bad else None,
            )

        sub_fail = None
        for n in build_ns:
            for name in sorted(built[n].subcopies):
                try:
                    graphs.canonical_subgraph(built[n], name)
                except RuntimeError:
                    sub_fail = (n, name)
                    break
            if sub_fail:
                break
        report.check(
            f"{fam.value} canonical subcopies equal freshly built members",
            sub_fail is None,
            f"[n=0..{build_ns[-1]}]",
            f"first failure at n={sub_fail[0]} ({sub_fail[1]})" if sub_fail else None,
        )

        if fam is Family.OMEGA:
            bad = []
            for n in [n for n in build_ns if 4 <= n <= 12]:
                g = built[n]
                second = g.subcopies["second"]
                b_set = set(second.vertices)
                for v in second.vertices:
                    cross = [u for u in range(g.vertex_count)
                             if g.has_edge(v, u) and u not in b_set]
                    if len(cross) != 1:
                        bad.append(n)
                        break
            report.check(
                "omega cross edges form a perfect matching on the smaller copy",
                not bad,
                "[n=4..12 within range]",
                f"first failure at n={bad[0]}" if bad else None,
            )
            if 4 in built:
                fig = _grid_plus_pendant()
                report.check(
                    "omega order-4 member is the grid-plus-pendant graph",
                    graphs.find_isomorphism(built[4], fig) is not None,
                    "explicit isomorphism found",
                    "no isomorphism found",
                )

        probe_n = min(5, hi)
        g = built[probe_n]
        factor = factors.structural_factor(fam, probe_n, g)
        round_tripped = factors.factor_from_json(g, factors.factor_to_json(g, factor))
        report.check(
            f"{fam.value} factor JSON round-trips through verification",
            round_tripped == factor
            and isinstance(factors.verify_factor(g, round_tripped), factors.FactorProfile),
            f"[n={probe_n}]",
        )
        report.check(
            f"{fam.value} exports are deterministic",
            graphs.export_graph(g, "edgelist") == graphs.export_graph(g, "edgelist")
            and graphs.export_graph(g, "dot") == graphs.export_graph(g, "dot"),
            f"[n={probe_n}]",
        )


def _grid_plus_pendant() -> graphs.LabeledGraph:
    # 2x3 grid with one pendant vertex on a corner, as drawn for order 4
    labels = ["g00", "g01", "g02", "g10", "g11", "g12", "p"]
    edges = [
        ("g00", "g01"), ("g01", "g02"), ("g10", "g11"), ("g11", "g12"),
        ("g00", "g10"), ("g01", "g11"), ("g02", "g12"), ("g02", "p"),
    ]
    return graphs.custom_graph(labels, edges)


_OEIS_CHECKS: tuple[tuple[str, str], ...] = (
    ("A000931", "padovan"),
    ("A000045", "fibonacci"),
    ("A000032", "lucas"),
    ("A029635", "lucas-triangle rows flattened"),
)


def _local_terms(name: str, count: int) -> list[int]:
    if name == "lucas-triangle rows flattened":
        out: list[int] = []
        n = 0
        while len(out) < count:
            out.extend(sequences.lucas_triangle_row(n))
            n += 1
        return out[:count]
    return [_SEQUENCES[name](n) for n in range(count)]


def _verify_oeis(report: _Report, offline: bool) -> None:
    report.section("oeis cross-checks")
    for oid, name in _OEIS_CHECKS:
        label = f"oeis {oid} vs {name}"
        try:
            record = oeis.fetch_bfile(oid, offline=offline)
        except (oeis.FetchError, oeis.BFileError):
            report.entry("INFO", label, "not available locally; skipped")
            continue
        local = _local_terms(name, 120)
        best = oeis.best_match(oeis.scan_shifts(local, 0, record))
        if best is None:
            report.entry("FAIL", label, "no full-overlap match at any shift in [-5,5]")
        else:
            report.entry(
                "PASS", label, f"matched at shift {best.shift} over {best.overlap} terms"
            )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 5:
        raise ValueError("--max-n must be at least 5")
    report = _Report()
    print(f"== cubefactor verify: suite={args.suite} max-n={args.max_n} ==")
    if args.suite in ("identities", "all"):
        _verify_identities(report, args.max_n)
    if args.suite in ("oracle", "all"):
        _verify_oracle(report, args.max_n)
    if args.suite == "all":
        _verify_oeis(report, args.offline)
    for line in report.lines:
        print(line)
    c = report.counts
    print(f"== summary: {c['PASS']} PASS, {c['FAIL']} FAIL, {c['INFO']} INFO ==")
    return 0 if c["FAIL"] == 0 else 1


def _cmd_oeis(args: argparse.Namespace) -> int:
    record = oeis.fetch_bfile(args.id, offline=args.offline, cache=args.cache_dir)
    local = [_SEQUENCES[args.against](n) for n in range(120)]
    reports = oeis.scan_shifts(local, 0, record)
    if not reports:
        print(f"error: no overlap with {record.id} at any shift in [-5,5]", file=sys.stderr)
        return 1
    for r in reports:
        if r.matched:
            print(f"shift {r.shift:+d}: match over {r.overlap} terms")
        else:
            i, a, b = r.first_mismatch
            print(
                f"shift {r.shift:+d}: mismatch at index {i} "
                f"(local {a}, remote {b}), overlap {r.overlap}"
            )
    best = oeis.best_match(reports)
    if best is None:
        print("result: no matching shift")
        return 1
    print(f"result: best match at shift {best.shift:+d} over {best.overlap} terms")
    return 0


if __name__ == "__main__":
    main()
