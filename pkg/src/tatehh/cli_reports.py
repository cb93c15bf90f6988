"""Command-line front end: dimension tables, the raw oracle, verification.

Subcommands:

  dims       route a degree window through the engine and print the table;
  oracle     raw bar-complex dimensions for degrees 0..max (classical
             Hochschild values, no stable corrections);
  exactness  run the near-zero exactness check for one algebra;
  verify     run named theorem suites (default all) and report each checked
             equality with both sides.

Algebra spec files are JSON: {"field": {"type": "rational"} or
{"type": "prime", "p": N}, "exponents": [a1, ...], "q": c x c matrix of
scalar strings, optional "c"}.  Scalars are strings end to end; floats are
rejected.  Exit codes: 0 success, 1 assertion mismatch, 2 usage or
validation error, 3 resource budget exhausted.  A dims table containing
budget-capped entries exits 3 (the table is still printed); entries a
restrictive method policy cannot serve are an answered request and exit 0.
Output bytes are deterministic for a fixed configuration: suite families
are fixed lists, the one randomized family is seeded, and all orderings
are explicit.
"""

import argparse
import json
import sys
from random import Random

from .closed_forms import ci_dim, codim2_cohomology_dim, exterior_dim
from .codim2_complex import expected_kernel_dim, kernel_dims, \
    twisted_homology_dims
from .exact_field import QQ, PrimeField
from .hochschild_bar import BarWindowRequest, BudgetExceeded, DEFAULT_BUDGET, \
    hh_cohomology_dims, hh_homology_dims
from .near_zero import check_exactness_claim, tate_hh0
from .qci_algebra import QciAlgebra, codim2_algebra, dual_bimodule, \
    exterior_algebra, truncated_polynomial_algebra, twisted_bimodule
from .tate_engine import TableEntry, TateRequest, coefficient_name, tate_dims

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_METHOD_POLICIES = {
    "auto": "auto",
    "bar": "bar_only",
    "complex": "complex_only",
    "formula": "formula_only",
}

SUITES = ("ci", "exterior", "codim2", "duality", "exactness")


# ---------------------------------------------------------------- spec files

def parse_spec(text):
    """Parse a JSON algebra specification into a validated algebra."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"spec is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("spec must be a JSON object")
    field_doc = doc.get("field")
    if not isinstance(field_doc, dict) or "type" not in field_doc:
        raise ValueError('spec needs "field": {"type": ...}')
    if field_doc["type"] == "rational":
        field = QQ
    elif field_doc["type"] == "prime":
        if "p" not in field_doc:
            raise ValueError('prime field spec needs "p"')
        field = PrimeField(field_doc["p"])
    else:
        raise ValueError(f'unknown field type {field_doc["type"]!r}')
    exponents = doc.get("exponents")
    if not isinstance(exponents, list) or \
            not all(isinstance(a, int) for a in exponents):
        raise ValueError('"exponents" must be a list of integers')
    c = doc.get("c", len(exponents))
    if c != len(exponents):
        raise ValueError(f'"c" is {c} but {len(exponents)} exponents given')
    q_doc = doc.get("q")
    if q_doc is None and c == 1:
        q_doc = [["1"]]
    if not isinstance(q_doc, list) or len(q_doc) != c or \
            any(not isinstance(row, list) or len(row) != c for row in q_doc):
        raise ValueError(f'"q" must be a {c} x {c} matrix')
    q = []
    for i, row in enumerate(q_doc):
        parsed = []
        for j, scalar in enumerate(row):
            if not isinstance(scalar, str):
                raise ValueError(f"q[{i}][{j}]: scalars must be strings, "
                                 f"got {scalar!r}")
            try:
                parsed.append(field.parse(scalar))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"q[{i}][{j}]: {exc}") from None
        q.append(parsed)
    return QciAlgebra(field, exponents, q)


def _load_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())


def _parse_coeff(text):
    if text == "regular":
        return 0
    if text.startswith("nu:"):
        try:
            return int(text[3:])
        except ValueError:
            pass
    raise ValueError(f"coefficient must be 'regular' or 'nu:K', got {text!r}")


# ------------------------------------------------------------ serialization

def table_from_csv(text):
    """Entries of a dims CSV document (inverse of DimensionTable.to_csv)."""
    lines = text.strip("\n").split("\n")
    if lines[0] != "degree,dimension,method,source":
        raise ValueError("unexpected CSV header")
    entries = []
    for line in lines[1:]:
        degree, dim, method, source = line.split(",", 3)
        entries.append(TableEntry(int(degree),
                                  None if dim == "" else int(dim),
                                  method, source))
    return entries


def table_from_json(text):
    doc = json.loads(text)
    return [TableEntry(e["degree"], e["dimension"], e["method"], e["source"])
            for e in doc["entries"]]


def _render_entries(entries, fmt, header=None):
    if fmt == "csv":
        lines = ["degree,dimension,method,source"]
        for e in entries:
            dim = "" if e.dimension is None else str(e.dimension)
            lines.append(f"{e.degree},{dim},{e.method},{e.source}")
        return "\n".join(lines) + "\n"
    doc = dict(header or {})
    doc["entries"] = [
        {"degree": e.degree, "dimension": e.dimension,
         "method": e.method, "source": e.source}
        for e in entries
    ]
    return json.dumps(doc, indent=2) + "\n"


def _emit(payload, out_path):
    if out_path is None:
        sys.stdout.write(payload)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)


# ------------------------------------------------------------- subcommands

def _cmd_dims(args):
    algebra = _load_spec(args.spec)
    req = TateRequest(algebra, args.min, args.max, args.variant,
                      nakayama_power=_parse_coeff(args.coeff),
                      method=_METHOD_POLICIES[args.method],
                      budget=args.budget)
    table = tate_dims(req)
    if args.format == "csv":
        payload = table.to_csv()
    else:
        payload = json.dumps(table.to_json_dict(), indent=2) + "\n"
    _emit(payload, args.out)
    if any(e.dimension is None and "budget" in e.source
           for e in table.entries):
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_oracle(args):
    algebra = _load_spec(args.spec)
    k = _parse_coeff(args.coeff)
    B = twisted_bimodule(algebra, algebra.nakayama(k),
                         algebra.identity_twist(),
                         label=coefficient_name(k))
    req = BarWindowRequest(B, args.max, args.variant, args.budget)
    if args.variant == "homology":
        dims = hh_homology_dims(req)
    else:
        dims = hh_cohomology_dims(req)
    entries = [TableEntry(n, dims[n], "oracle", coefficient_name(k))
               for n in range(args.max + 1)]
    header = {"algebra": algebra.describe(), "variant": args.variant,
              "coefficient": coefficient_name(k)}
    _emit(_render_entries(entries, args.format, header), args.out)
    return EXIT_OK


def _cmd_exactness(args):
    algebra = _load_spec(args.spec)
    ok = check_exactness_claim(algebra)
    report = [{"check": "near-zero sequence exact and shifted copies "
                        f"independent (dim {algebra.dim})",
               "lhs": ok, "rhs": True, "pass": ok}]
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_verify(args):
    suites = args.suite or list(SUITES)
    report = []
    for name in suites:
        report.extend(run_verify(name, args.max, args.budget))
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    if any(not row["pass"] and "error" not in row for row in report):
        return EXIT_MISMATCH
    if any("error" in row for row in report):
        return EXIT_BUDGET
    return EXIT_OK


# ------------------------------------------------------------ verify suites

def _check(name, lhs, rhs):
    return {"check": name, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs}


def _guarded(checks, label, fn):
    """Append fn()'s checks; a budget error becomes one failed row."""
    try:
        checks.extend(fn())
    except BudgetExceeded as exc:
        checks.append({"check": label, "error": str(exc), "pass": False})


def _nu_module(A, k):
    return twisted_bimodule(A, A.nakayama(k), A.identity_twist(),
                            label=coefficient_name(k))


def _bar_dims(A, k, direction, n_max, budget):
    req = BarWindowRequest(_nu_module(A, k), n_max, direction, budget)
    if direction == "homology":
        return hh_homology_dims(req)
    return hh_cohomology_dims(req)


def _suite_ci(max_degree, budget):
    checks = []
    for field, label in ((QQ, "QQ"), (PrimeField(2), "GF(2)")):
        A = truncated_polynomial_algebra(field, (2, 2))
        p = field.characteristic

        def unit(A=A, p=p, label=label):
            rows = [_check(f"ci {label} degree 0 zeromaps vs formula",
                           tate_hh0(A, A.identity_twist()),
                           ci_dim(2, 2, p, 0))]
            dims = _bar_dims(A, 0, "homology", max_degree, budget)
            rows.extend(
                _check(f"ci {label} degree {n} oracle vs formula",
                       dims[n], ci_dim(2, 2, p, n))
                for n in range(1, max_degree + 1))
            return rows

        _guarded(checks, f"ci {label}", unit)
    return checks


def _suite_exterior(max_degree, budget):
    checks = []
    fields = ((PrimeField(2), "GF(2)"), (PrimeField(3), "GF(3)"), (QQ, "QQ"))
    for c in (1, 2, 3):
        for field, label in fields:
            A = exterior_algebra(field, c)
            p = field.characteristic

            def unit(A=A, p=p, c=c, label=label):
                rows = [_check(
                    f"exterior c={c} {label} degree 0 zeromaps vs formula",
                    tate_hh0(A, A.identity_twist()), exterior_dim(c, p, 0))]
                dims = _bar_dims(A, 0, "homology", max_degree, budget)
                rows.extend(_check(
                    f"exterior c={c} {label} degree {n} oracle vs formula",
                    dims[n], exterior_dim(c, p, n))
                    for n in range(1, max_degree + 1))
                table = tate_dims(TateRequest(A, -max_degree - 1, max_degree,
                                              "homology", budget=budget))
                rows.append(_check(
                    f"exterior c={c} {label} homology palindrome on "
                    f"[{-max_degree - 1}, {max_degree}]",
                    [table.dimension(n) for n in range(max_degree + 1)],
                    [table.dimension(-n - 1) for n in range(max_degree + 1)]))
                return rows

            _guarded(checks, f"exterior c={c} {label}", unit)
    return checks


def _suite_codim2(max_degree, budget):
    from fractions import Fraction

    checks = []
    qs = (Fraction(2), Fraction(3), Fraction(1, 2))
    for (a, b) in ((2, 2), (3, 2)):

        def unit(a=a, b=b):
            rows = []
            tables = {}
            for q in qs:
                A = codim2_algebra(QQ, a, b, q)
                table = tate_dims(TateRequest(A, -max_degree, max_degree,
                                              "cohomology", budget=budget))
                tables[q] = table.dims()
            for q in qs[1:]:
                rows.append(_check(
                    f"codim2 ({a},{b}) cohomology table q={q} matches q=2",
                    tables[q], tables[qs[0]]))
            rows.append(_check(
                f"codim2 ({a},{b}) cohomology table q=2 vs formula",
                tables[qs[0]],
                [codim2_cohomology_dim(n)
                 for n in range(-max_degree, max_degree + 1)]))
            A = codim2_algebra(QQ, a, b, Fraction(2))
            hom = tate_dims(TateRequest(A, -max_degree, max_degree,
                                        "homology", budget=budget))
            rows.append(_check(
                f"codim2 ({a},{b}) homology table q=2 constant",
                hom.dims(), [a + b - 2] * (2 * max_degree + 1)))
            bar = _bar_dims(A, 0, "homology", min(max_degree, 3), budget)
            rows.append(_check(
                f"codim2 ({a},{b}) homology degrees 1..{min(max_degree, 3)} "
                "oracle vs formula",
                bar[1:], [a + b - 2] * min(max_degree, 3)))
            rows.append(_check(
                f"codim2 ({a},{b}) twisted homology vanishes to {max_degree}",
                twisted_homology_dims(A, max_degree + 1), [0] * max_degree))
            rows.append(_check(
                f"codim2 ({a},{b}) kernel dimensions to {max_degree + 1}",
                kernel_dims(A, max_degree + 1),
                [expected_kernel_dim(A, n) for n in range(1, max_degree + 2)]))
            return rows

        _guarded(checks, f"codim2 ({a},{b})", unit)
    return checks


def _duality_family():
    from fractions import Fraction

    rng = Random(7)
    family = [
        ("trunc QQ (3,)", truncated_polynomial_algebra(QQ, (3,))),
        ("exterior GF(3) c=2", exterior_algebra(PrimeField(3), 2)),
        ("codim2 QQ q=2 (2,2)", codim2_algebra(QQ, 2, 2, Fraction(2))),
        ("codim2 QQ q=1/2 (2,3)", codim2_algebra(QQ, 2, 3, Fraction(1, 2))),
    ]
    rational_qs = [Fraction(2), Fraction(3), Fraction(5, 3), Fraction(1, 2)]
    for i in range(4):
        if rng.random() < 0.5:
            q = rng.choice(rational_qs)
            family.append((f"random {i} codim2 QQ q={q}",
                           codim2_algebra(QQ, 2, rng.choice((2, 3)), q)))
        else:
            p = rng.choice((3, 5))
            field = PrimeField(p)
            q = field.parse(rng.choice(("1", "-1")))
            family.append((f"random {i} codim2 GF({p}) q={field.to_str(q)}",
                           codim2_algebra(field, 2, rng.choice((2, 3)), q)))
    return [(label, A) for label, A in family if A.dim <= 6]


def _suite_duality(max_degree, budget):
    checks = []
    upto = min(max_degree, 3)
    for label, A in _duality_family():
        for k in (0, 1, -1):

            def unit(A=A, k=k, label=label):
                B = _nu_module(A, k)
                co = hh_cohomology_dims(
                    BarWindowRequest(B, upto, "cohomology", budget))
                ho = hh_homology_dims(
                    BarWindowRequest(dual_bimodule(B), upto, "homology",
                                     budget))
                return [_check(
                    f"duality {label} coeff {coefficient_name(k)} "
                    f"cohomology vs dual homology to {upto}", co, ho)]

            _guarded(checks, f"duality {label} {coefficient_name(k)}", unit)
    return checks


def _exactness_family():
    from fractions import Fraction

    return [
        ("trunc QQ (2,)", truncated_polynomial_algebra(QQ, (2,))),
        ("trunc GF(3) (4,)", truncated_polynomial_algebra(PrimeField(3), (4,))),
        ("exterior GF(2) c=3", exterior_algebra(PrimeField(2), 3)),
        ("exterior QQ c=2", exterior_algebra(QQ, 2)),
        ("codim2 QQ q=2 (2,2)", codim2_algebra(QQ, 2, 2, Fraction(2))),
        ("codim2 QQ q=1/2 (3,2)", codim2_algebra(QQ, 3, 2, Fraction(1, 2))),
        ("codim2 GF(5) q=2 (2,4)", codim2_algebra(PrimeField(5), 2, 4, 2)),
        ("trunc GF(2) (2,2,2,2)",
         truncated_polynomial_algebra(PrimeField(2), (2, 2, 2, 2))),
    ]


def _suite_exactness(max_degree, budget):
    del max_degree, budget  # the check has no degree or budget parameter
    return [_check(f"exactness {label} (dim {A.dim})",
                   check_exactness_claim(A), True)
            for label, A in _exactness_family()]


_SUITE_RUNNERS = {
    "ci": _suite_ci,
    "exterior": _suite_exterior,
    "codim2": _suite_codim2,
    "duality": _suite_duality,
    "exactness": _suite_exactness,
}


def run_verify(suite, max_degree=3, budget=DEFAULT_BUDGET):
    """All checks of one named suite; resource errors become failed rows."""
    if suite not in _SUITE_RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    try:
        return _SUITE_RUNNERS[suite](max_degree, budget)
    except BudgetExceeded as exc:
        return [{"check": f"{suite} suite", "error": str(exc), "pass": False}]


# ------------------------------------------------------------------- parser

def _add_common(sub, spec=True):
    if spec:
        sub.add_argument("--spec", required=True, help="algebra spec JSON path")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="chain-space element budget")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tatehh",
        description="Stable Hochschild dimension tables for quantum "
                    "complete intersections")
    subs = parser.add_subparsers(dest="command", required=True)

    dims = subs.add_parser("dims", help="dimension table over a degree window")
    _add_common(dims)
    dims.add_argument("--min", type=int, required=True)
    dims.add_argument("--max", type=int, required=True)
    dims.add_argument("--variant", choices=("homology", "cohomology"),
                      default="homology")
    dims.add_argument("--coeff", default="regular",
                      help="'regular' or 'nu:K' for the K-th Nakayama twist")
    dims.add_argument("--method", choices=tuple(_METHOD_POLICIES),
                      default="auto")
    dims.add_argument("--format", choices=("csv", "json"), default="csv")
    dims.set_defaults(func=_cmd_dims)

    oracle = subs.add_parser("oracle",
                             help="raw bar-complex dimensions, degrees 0..max")
    _add_common(oracle)
    oracle.add_argument("--max", type=int, required=True)
    oracle.add_argument("--variant", choices=("homology", "cohomology"),
                        default="homology")
    oracle.add_argument("--coeff", default="regular")
    oracle.add_argument("--format", choices=("csv", "json"), default="csv")
    oracle.set_defaults(func=_cmd_oracle)

    exactness = subs.add_parser("exactness",
                                help="near-zero exactness check")
    _add_common(exactness)
    exactness.set_defaults(func=_cmd_exactness)

    verify = subs.add_parser("verify", help="run theorem verification suites")
    _add_common(verify, spec=False)
    verify.add_argument("--suite", action="append", choices=SUITES,
                        help="suite to run (repeatable; default all)")
    verify.add_argument("--max", type=int, default=3,
                        help="degree depth for the suites")
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
