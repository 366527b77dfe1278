"""Command-line front end: every calculator behind one `cq` entry point.

Output is plain text by default or a single JSON object with --format
json; the object carries a schema tag, the result, and a meta block
echoing the parameters.  Exit codes: 0 success, 2 usage error, 3 domain
error (degree mismatches, out-of-range parameters, hypothesis violations).

Identical argv produces byte-identical stdout; wall-clock timing is only
added to the meta block under --timings, since it is inherently
nondeterministic.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .exactmath import DomainError, UnivariatePolynomial
from . import cells as cells_mod
from . import matroid as matroid_mod
from . import quadrics
from . import schubert
from . import segre as segre_mod
from . import toric as toric_mod

SCHEMA_VERSION = 1


def _jsonable(value):
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value}"
    if isinstance(value, UnivariatePolynomial):
        return {
            "coefficients": [_jsonable(c) for c in value.coefficients],
            "pretty": value.to_string(),
        }
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational {text!r}: {exc}")


def _parse_int_list(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise DomainError(f"expected a comma-separated integer list, got {text!r}")


def _read_text_file(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}")


def _parse_assignments(text):
    values = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise DomainError(f"assignment {chunk!r} must look like name=value")
        name, _, raw = chunk.partition("=")
        values[name.strip()] = _parse_fraction(raw.strip())
    return values


def _read_data_argument(text):
    """Inline JSON, or @path to read JSON from a file."""
    if text.startswith("@"):
        text = _read_text_file(text[1:])
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad JSON data: {exc}")


def _load_fan(args):
    if getattr(args, "permutohedral", None) is not None:
        return toric_mod.permutohedral_fan(args.permutohedral)
    if getattr(args, "fan", None):
        return toric_mod.parse_fan(_read_text_file(args.fan))
    raise DomainError("need --fan FILE or --permutohedral N")


def _load_matroid(args):
    sources = [
        args.graph is not None,
        args.uniform is not None,
        args.matrix is not None,
    ]
    if sum(sources) != 1:
        raise DomainError("need exactly one of --graph, --uniform, --matrix")
    if args.graph is not None:
        g = matroid_mod.parse_graph(_read_text_file(args.graph))
        return matroid_mod.matroid_from_graph(g), {"graph": args.graph}
    if args.uniform is not None:
        r, n = _parse_int_list(args.uniform)
        return matroid_mod.uniform_matroid(r, n), {"uniform": [r, n]}
    rows = _read_data_argument(args.matrix)
    m = matroid_mod.matroid_from_subspace(
        [[_parse_fraction(str(x)) for x in row] for row in rows]
    )
    return m, {"matrix": rows}


# --- handlers -------------------------------------------------------------

def _cmd_phi(args):
    return quadrics.phi(args.n, args.d), {"n": args.n, "d": args.d}


def _cmd_phi_poly(args):
    poly = quadrics.phi_polynomial(args.d, jobs=args.jobs)
    return poly, {"d": args.d, "jobs": args.jobs}


def _cmd_delta(args):
    return quadrics.delta(args.m, args.n, args.r), {
        "m": args.m,
        "n": args.n,
        "r": args.r,
    }


def _cmd_delta_poly(args):
    poly = quadrics.delta_polynomial(args.m, args.s, jobs=args.jobs)
    return poly, {"m": args.m, "s": args.s, "jobs": args.jobs}


def _cmd_phi_c(args):
    return quadrics.phi_c(args.n, args.c, args.d), {
        "n": args.n,
        "c": args.c,
        "d": args.d,
    }


def _cmd_product(args):
    a = _parse_int_list(args.a)
    b = _parse_int_list(args.b)
    value = quadrics.integrate_monomial(args.n, a, b)
    return value, {"n": args.n, "a": a, "b": b}


def _cmd_pataki(args):
    return quadrics.pataki_nonzero(args.m, args.n, args.r), {
        "m": args.m,
        "n": args.n,
        "r": args.r,
    }


def _cmd_flag_integral(args):
    b = _parse_int_list(args.b)
    return schubert.flag_integral(args.n, b), {"n": args.n, "b": b}


def _cmd_monk(args):
    w = tuple(_parse_int_list(args.w))
    comb = schubert.monk_multiply(args.i, w)
    result = {
        ",".join(str(x) for x in v): c for v, c in sorted(comb.terms.items())
    }
    return result, {"i": args.i, "w": list(w)}


def _cmd_hypersurface(args):
    value = quadrics.hypersurface_characteristic_number(args.d, args.n, args.b)
    return value, {"d": args.d, "n": args.n, "b": args.b}


def _cmd_matroid_charpoly(args):
    m, echo = _load_matroid(args)
    poly = matroid_mod.characteristic_polynomial(m)
    result = {"characteristic": poly, "reduced": None}
    if not poly.is_zero() and m.full_rank() >= 1:
        result["reduced"] = list(matroid_mod.reduced_characteristic_coefficients(m))
    return result, echo


def _cmd_matroid_reduced(args):
    m, echo = _load_matroid(args)
    return list(matroid_mod.reduced_characteristic_coefficients(m)), echo


def _cmd_matroid_chromatic(args):
    if args.graph is None:
        raise DomainError("chromatic polynomial needs --graph FILE")
    g = matroid_mod.parse_graph(_read_text_file(args.graph))
    return matroid_mod.chromatic_polynomial(g), {"graph": args.graph}


def _cmd_matroid_euler(args):
    nu = _parse_int_list(args.nu)
    return matroid_mod.euler_characteristic_complement(nu), {"nu": nu}


def _cmd_toric_fan_check(args):
    fan = _load_fan(args)
    fan.check_smooth()
    fan.check_complete()
    return {
        "smooth": True,
        "complete": True,
        "rank": fan.rank,
        "rays": len(fan.rays),
        "maximal_cones": len(fan.maximal_cones),
    }, {}


def _cmd_toric_mu_generic(args):
    return toric_mod.mu_generic(args.n), {"n": args.n}


def _cmd_toric_integral(args):
    fan = _load_fan(args)
    spec = _read_data_argument(args.cls)
    if not isinstance(spec, list) or not all(
        isinstance(item, dict) and isinstance(item.get("rays"), list)
        for item in spec
    ):
        raise DomainError('class must be a JSON list of {"rays": [...], "coeff": ...}')
    terms = {}
    for item in spec:
        rays = frozenset(int(i) - 1 for i in item["rays"])
        coeff = _parse_fraction(str(item.get("coeff", 1)))
        terms[rays] = terms.get(rays, Fraction(0)) + coeff
    degree = len(next(iter(terms), frozenset()))
    cls = toric_mod.ToricClass(fan, degree, terms)
    return toric_mod.toric_integral(cls), {"degree": degree}


def _cmd_cells(args):
    if args.histogram:
        if args.n is None:
            raise UsageError("histogram needs --n")
        hist = cells_mod.chow_group_dimensions(args.n)
        return hist, {"n": args.n}
    raise UsageError("choose a cells action or pass --histogram")


def _cmd_cells_enumerate(args):
    sigmas = cells_mod.enumerate_two_permutations(args.n)
    return [str(s) for s in sigmas], {"n": args.n}


def _cmd_cells_weight(args):
    sigma = cells_mod.TwoPermutation.parse(args.sigma)
    return cells_mod.weight(sigma), {"sigma": str(sigma)}


def _cmd_cells_param(args):
    sigma = cells_mod.TwoPermutation.parse(args.sigma)
    param = cells_mod.cell_parametrization(sigma)
    result = {
        "sigma": str(sigma),
        "free_variables": list(param.free_variables()),
        "free_variable_count": param.free_variable_count,
        "X": [[str(e) for e in row] for row in param.X],
        "Y": [[str(e) for e in row] for row in param.Y],
        "companion": [[str(e) for e in row] for row in param.companion],
    }
    return result, {"sigma": str(sigma)}


def _cmd_cells_verify(args):
    sigma = cells_mod.TwoPermutation.parse(args.sigma)
    if args.values is not None:
        values = _parse_assignments(args.values)
    elif args.random:
        import random

        rng = random.Random(args.seed)
        param = cells_mod.cell_parametrization(sigma)
        values = {
            name: Fraction(rng.randint(1, 20), rng.randint(1, 9))
            * rng.choice([1, -1])
            for name in param.free_variables()
        }
    else:
        raise DomainError("need --values or --random")
    ok = cells_mod.verify_cell_point(sigma, values)
    return ok, {
        "sigma": str(sigma),
        "values": {k: str(v) for k, v in sorted(values.items())},
    }


def _cmd_segre_mu(args):
    data = _segre_data(args)
    return segre_mod.mu_from_segre(data, args.i), {"i": args.i}


def _cmd_segre_nu(args):
    data = _segre_data(args)
    return segre_mod.nu_from_segre(data, args.i), {"i": args.i}


def _segre_data(args):
    raw = _read_data_argument(args.data)
    try:
        return segre_mod.SegreData(
            degF=raw["degF"], nL=raw["nL"], mY=raw["mY"], s=tuple(raw["s"])
        )
    except KeyError as exc:
        raise DomainError(f"Segre data missing field {exc}")


def _cmd_segre_correct(args):
    s = _parse_int_list(args.s) if args.s else []
    value = segre_mod.nu_from_mu_correction(args.mu, args.n, len(s) - 1, s)
    return value, {"mu": args.mu, "n": args.n, "s": s}


def _cmd_segre_compare(args):
    mu = _parse_int_list(args.mu)
    nu = _parse_int_list(args.nu)
    return segre_mod.mu_nu_inequality_check(mu, nu), {"mu": mu, "nu": nu}


# --- plumbing -------------------------------------------------------------

class UsageError(Exception):
    pass


def _text_render(value):
    if value is None:
        return "-"
    if isinstance(value, UnivariatePolynomial):
        coeffs = " ".join(str(_jsonable(c)) for c in value.coefficients)
        return f"{value.to_string()}  [coefficients, ascending: {coeffs}]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        if all(isinstance(v, (int, Fraction)) for v in value):
            return " ".join(str(_jsonable(v)) for v in value)
        if value and all(isinstance(v, (list, tuple)) for v in value):
            return "\n".join(
                " ".join(str(_jsonable(x)) for x in row) for row in value
            )
        return "\n".join(str(_jsonable(v)) for v in value)
    if isinstance(value, dict):
        return "\n".join(f"{k}: {_text_render(v)}" for k, v in value.items())
    return str(_jsonable(value))


def _emit(args, command, result, params, elapsed):
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "result": _jsonable(result),
            "meta": {"command": command, "params": _jsonable(params)},
        }
        if args.timings:
            payload["meta"]["elapsed_ms"] = round(elapsed * 1000, 3)
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_text_render(result))


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument(
        "--timings", action="store_true", help="include wall time in json meta"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cq",
        description="Exact intersection-theory calculators for complete "
        "quadrics, flag varieties, matroids and toric Chow rings.",
    )
    top = parser.add_subparsers(dest="command")

    def leaf(subparsers, name, handler, configure, prefix=""):
        sub = subparsers.add_parser(name)
        configure(sub)
        _add_common(sub)
        sub.set_defaults(handler=handler, command_name=f"{prefix}{name}")
        return sub

    leaf(top, "phi", _cmd_phi, lambda s: (
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--d", type=int, required=True),
    ))
    leaf(top, "phi-poly", _cmd_phi_poly, lambda s: (
        s.add_argument("--d", type=int, required=True),
        s.add_argument("--jobs", type=int, default=1),
    ))
    leaf(top, "delta", _cmd_delta, lambda s: (
        s.add_argument("--m", type=int, required=True),
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--r", type=int, required=True),
    ))
    leaf(top, "delta-poly", _cmd_delta_poly, lambda s: (
        s.add_argument("--m", type=int, required=True),
        s.add_argument("--s", type=int, required=True),
        s.add_argument("--jobs", type=int, default=1),
    ))
    leaf(top, "phi-c", _cmd_phi_c, lambda s: (
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--c", type=int, required=True),
        s.add_argument("--d", type=int, required=True),
    ))
    leaf(top, "product", _cmd_product, lambda s: (
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--a", required=True, help="comma-separated exponents of S_1..S_{n-1}"),
        s.add_argument("--b", required=True, help="comma-separated exponents of L_1..L_{n-1}"),
    ))
    leaf(top, "pataki", _cmd_pataki, lambda s: (
        s.add_argument("--m", type=int, required=True),
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--r", type=int, required=True),
    ))
    leaf(top, "flag-integral", _cmd_flag_integral, lambda s: (
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--b", required=True),
    ))
    leaf(top, "monk", _cmd_monk, lambda s: (
        s.add_argument("--i", type=int, required=True),
        s.add_argument("--w", required=True, help="one-line notation, e.g. 2,1,3"),
    ))
    leaf(top, "hypersurface-count", _cmd_hypersurface, lambda s: (
        s.add_argument("--d", type=int, required=True),
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--b", type=int, required=True),
    ))

    matroid = top.add_parser("matroid").add_subparsers(dest="action", required=True)

    def matroid_source(s):
        s.add_argument("--graph", help="graph file: 'v e' header then edge lines")
        s.add_argument("--uniform", help="rank,size")
        s.add_argument("--matrix", help="JSON rows spanning the subspace (or @file)")

    leaf(matroid, "charpoly", _cmd_matroid_charpoly, matroid_source, prefix="matroid ")
    leaf(matroid, "reduced", _cmd_matroid_reduced, matroid_source, prefix="matroid ")
    leaf(matroid, "chromatic", _cmd_matroid_chromatic, matroid_source, prefix="matroid ")
    leaf(matroid, "euler", _cmd_matroid_euler, prefix="matroid ", configure=lambda s: (
        s.add_argument("--nu", required=True, help="comma-separated integers"),
    ))

    toric = top.add_parser("toric").add_subparsers(dest="action", required=True)

    def fan_source(s):
        s.add_argument("--fan", help="fan file: 'rank #rays #cones' header")
        s.add_argument("--permutohedral", type=int, help="use the built-in fan")

    leaf(toric, "fan-check", _cmd_toric_fan_check, fan_source, prefix="toric ")
    leaf(toric, "mu-generic", _cmd_toric_mu_generic, prefix="toric ", configure=lambda s: (
        s.add_argument("--n", type=int, required=True),
    ))
    leaf(toric, "integral", _cmd_toric_integral, prefix="toric ", configure=lambda s: (
        fan_source(s),
        s.add_argument(
            "--class", dest="cls", required=True,
            help='JSON like [{"rays":[1,4],"coeff":1}, ...] (or @file)',
        ),
    ))

    cells = top.add_parser("cells")
    cells.add_argument("--n", type=int)
    cells.add_argument("--histogram", action="store_true")
    _add_common(cells)
    cells.set_defaults(handler=_cmd_cells, command_name="cells")
    cells_actions = cells.add_subparsers(dest="action")
    leaf(cells_actions, "enumerate", _cmd_cells_enumerate, prefix="cells ", configure=lambda s: (
        s.add_argument("--n", type=int, required=True),
    ))
    leaf(cells_actions, "weight", _cmd_cells_weight, prefix="cells ", configure=lambda s: (
        s.add_argument("--sigma", required=True, help='bar syntax, e.g. "2|13"'),
    ))
    leaf(cells_actions, "param", _cmd_cells_param, prefix="cells ", configure=lambda s: (
        s.add_argument("--sigma", required=True),
    ))
    leaf(cells_actions, "verify", _cmd_cells_verify, prefix="cells ", configure=lambda s: (
        s.add_argument("--sigma", required=True),
        s.add_argument("--values", help='assignments like "x13=1,x23=-2/3,y1=5"'),
        s.add_argument("--random", action="store_true"),
        s.add_argument("--seed", type=int, default=0),
    ))

    segre = top.add_parser("segre").add_subparsers(dest="action", required=True)
    leaf(segre, "mu", _cmd_segre_mu, prefix="segre ", configure=lambda s: (
        s.add_argument("--data", required=True, help="JSON Segre data (or @file)"),
        s.add_argument("--i", type=int, required=True),
    ))
    leaf(segre, "nu", _cmd_segre_nu, prefix="segre ", configure=lambda s: (
        s.add_argument("--data", required=True),
        s.add_argument("--i", type=int, required=True),
    ))
    leaf(segre, "correct", _cmd_segre_correct, prefix="segre ", configure=lambda s: (
        s.add_argument("--mu", type=int, required=True),
        s.add_argument("--n", type=int, required=True),
        s.add_argument("--s", default="", help="comma-separated Segre degrees"),
    ))
    leaf(segre, "compare", _cmd_segre_compare, prefix="segre ", configure=lambda s: (
        s.add_argument("--mu", required=True),
        s.add_argument("--nu", required=True),
    ))

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        result, params = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    elapsed = time.perf_counter() - start
    _emit(args, args.command_name, result, params, elapsed)
    return 0


if __name__ == "__main__":
    sys.exit(main())
