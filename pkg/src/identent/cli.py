"""Command-line front end.

State files are UTF-8 JSON::

    {"dim": 2, "statistics": "fermion",
     "matrix": [[[0, 0], [0.7071067811865476, 0]],
                [[-0.7071067811865476, 0], [0, 0]]]}

with every matrix entry an ``[re, im]`` pair.  Reports are JSON documents on
standard output with every float printed to 17 significant digits, so
identical invocations produce byte-identical output.

Exit codes: 0 success, 1 usage, 2 unparsable input, 3 invalid state,
4 numerical failure (including failed verification checks).
"""
import argparse
import hashlib
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import entropy_from_schmidt, entropy_from_slater, reduced_density, spectrum, von_neumann_entropy
from .classify import classify
from .decomp import DEFAULT_EPS, SlaterDecomposition, decompose, schmidt_distinguishable
from .errors import InvariantViolation, NumericalFailure
from .oracle import verify_state
from .properties import DEFAULT_RESTARTS, DEFAULT_TOL, find_property_projector
from .states import FERMION, Statistics, antisymmetrize, from_matrix, random_state, symmetrize

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVARIANT, EXIT_NUMERICAL = range(5)


class ParseError(Exception):
    pass


class UsageError(Exception):
    pass


# -- serialization -----------------------------------------------------------

def _fmt_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite number {x!r}")
    return "%.17g" % x


def _plain(obj):
    """Turn numpy values and complex numbers into JSON-ready Python values."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def _scalar(o):
    return not isinstance(o, (list, dict))


def _flat(o):
    # Scalars and [re, im]-style lists of scalars stay on one line.
    return _scalar(o) or (isinstance(o, list) and all(_scalar(v) for v in o))


def dumps(obj, indent=None):
    """JSON text with floats at 17 significant digits."""
    obj = _plain(obj)
    pad = "" if indent is None else "\n"
    sep = ", " if indent is None else ","

    def enc(o, level):
        inner = "" if indent is None else " " * (indent * (level + 1))
        outer = "" if indent is None else " " * (indent * level)
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, int):
            return str(o)
        if isinstance(o, float):
            return _fmt_float(o)
        if isinstance(o, str):
            return json.dumps(o, ensure_ascii=False)
        if isinstance(o, list):
            if not o:
                return "[]"
            if indent is None or all(_flat(v) for v in o):
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            return "[" + pad + (sep + pad).join(inner + enc(v, level + 1) for v in o) + pad + outer + "]"
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = (inner + json.dumps(str(k)) + ": " + enc(v, level + 1) for k, v in o.items())
            return "{" + pad + (sep + pad).join(items) + pad + outer + "}"
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0)


def state_to_document(state):
    return {"dim": state.dim, "statistics": state.statistics.value, "matrix": state.coeffs}


def dump_state(state):
    return dumps(state_to_document(state), indent=2) + "\n"


def parse_state(text):
    """Parse state-file text into a validated :class:`TwoParticleState`.

    Raises :class:`ParseError` for malformed documents and
    :class:`InvariantViolation` for well-formed but invalid states.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("state file must be a JSON object")
    missing = {"dim", "statistics", "matrix"} - set(doc)
    if missing:
        raise ParseError(f"missing fields: {', '.join(sorted(missing))}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError("'dim' must be an integer")
    try:
        statistics = Statistics.parse(doc["statistics"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise ParseError(f"'matrix' must have {dim} rows")
    C = np.zeros((dim, dim), dtype=np.complex128) if dim > 0 else np.zeros((0, 0), complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"row {i} must have {dim} entries")
        for j, entry in enumerate(row):
            ok = (
                isinstance(entry, list)
                and len(entry) == 2
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
            )
            if not ok:
                raise ParseError(f"entry ({i}, {j}) must be a [re, im] pair of numbers")
            C[i, j] = complex(entry[0], entry[1])
    if not np.all(np.isfinite(C)):
        raise ParseError("matrix entries must be finite")
    return from_matrix(dim, statistics, C)


def load_state(path):
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path}: not UTF-8 text") from None
    return parse_state(text), hashlib.sha256(data).hexdigest()


def parse_vector(text):
    """Parse ``"a+bi,c,d-ei,..."`` into a complex vector."""
    items = [t.strip().replace(" ", "") for t in text.split(",")]
    out = []
    for item in items:
        s = re.sub(r"(^|[+-])[ij]$", r"\g<1>1j", item).replace("i", "j")
        try:
            out.append(complex(s))
        except ValueError:
            raise UsageError(f"cannot parse complex number {item!r}") from None
    return np.array(out, dtype=np.complex128)


# -- report builders ---------------------------------------------------------

def _header(command, state, digest):
    return {
        "tool": "identent",
        "version": __version__,
        "command": command,
        "input_sha256": digest,
        "dim": state.dim,
        "statistics": state.statistics.value,
    }


def decomposition_summary(dec):
    if isinstance(dec, SlaterDecomposition):
        return {
            "kind": "slater",
            "number": dec.slater_number,
            "coefficients": dec.coefficients,
            "basis": dec.pair_basis,
            "eps": dec.eps,
        }
    return {
        "kind": "schmidt",
        "number": dec.schmidt_number,
        "coefficients": dec.coefficients,
        "basis": dec.basis,
        "eps": dec.eps,
    }


def classification_summary(report):
    pair = report.factorizing_pair
    return {
        "verdict": report.verdict.value,
        "rule": report.rule,
        "number": report.number,
        "entropy": report.entropy,
        "coefficients": report.coefficients,
        "marginal": report.marginal,
        "factorizing_pair": None if pair is None else [pair[0], pair[1]],
        "overlap": report.overlap,
    }


def property_summary(report):
    return {
        "max_value": report.max_value,
        "argmax": report.argmax,
        "attained": report.attained,
        "restarts_used": report.restarts_used,
        "tolerance": report.tolerance,
        "both_value": report.both_value,
        "both_pair": None if report.both_pair is None else list(report.both_pair),
        "both_attained": report.both_attained,
    }


def classify_document(state, digest, eps):
    doc = _header("classify", state, digest)
    doc["classification"] = classification_summary(classify(state, eps))
    doc["decomposition"] = decomposition_summary(decompose(state, eps))
    return doc


# -- commands ----------------------------------------------------------------

def _emit(doc, out, compact=False):
    out.write(dumps(doc, indent=None if compact else 2) + "\n")


def _error_code(exc):
    if isinstance(exc, (ParseError, OSError)):
        return EXIT_PARSE
    if isinstance(exc, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(exc, NumericalFailure):
        return EXIT_NUMERICAL
    return None


def cmd_classify(args, out):
    eps = args.eps_count if args.eps_count is not None else args.tol
    if args.dir:
        # One line per file in path order; a bad file yields an error line and
        # the largest error code becomes the exit status.
        status = EXIT_OK
        paths = sorted(p for p in Path(args.dir).iterdir() if p.is_file() and p.suffix == ".json")
        for path in paths:
            try:
                state, digest = load_state(path)
                doc = classify_document(state, digest, eps)
            except Exception as exc:
                code = _error_code(exc)
                if code is None:
                    raise
                status = max(status, code)
                doc = {"path": path.name, "error": f"{type(exc).__name__}: {exc}", "exit_code": code}
            else:
                doc["path"] = path.name
            _emit(doc, out, compact=True)
        return status
    if args.path is None:
        raise UsageError("classify needs a state file or --dir")
    state, digest = load_state(args.path)
    _emit(classify_document(state, digest, eps), out)
    return EXIT_OK


def cmd_decompose(args, out):
    state, digest = load_state(args.path)
    doc = _header("decompose", state, digest)
    doc["decomposition"] = decomposition_summary(decompose(state, args.eps_count))
    baseline = schmidt_distinguishable(state.coeffs, args.eps_count)
    doc["distinguishable_schmidt"] = {
        "number": baseline.schmidt_number,
        "coefficients": baseline.coefficients,
    }
    _emit(doc, out)
    return EXIT_OK


def cmd_entropy(args, out):
    state, digest = load_state(args.path)
    rho = reduced_density(state)
    dec = decompose(state, args.eps_count)
    closed = entropy_from_slater if state.statistics is FERMION else entropy_from_schmidt
    doc = _header("entropy", state, digest)
    doc["entropy"] = von_neumann_entropy(rho)
    doc["entropy_closed_form"] = closed(dec.coefficients)
    doc["spectrum"] = spectrum(rho)[::-1]
    _emit(doc, out)
    return EXIT_OK


def cmd_properties(args, out):
    state, digest = load_state(args.path)
    report = find_property_projector(state, tol=args.tol, restarts=args.restarts, seed=args.seed, eps=args.eps_count)
    doc = _header("properties", state, digest)
    doc["properties"] = property_summary(report)
    _emit(doc, out)
    return EXIT_OK


def cmd_verify(args, out):
    state, digest = load_state(args.path)
    outcomes = verify_state(state, samples=args.samples, seed=args.seed, eps=args.eps_count)
    doc = _header("verify", state, digest)
    doc["checks"] = [
        {
            "check_name": o.check_name,
            "passed": o.passed,
            "measured_error": o.measured_error,
            "tolerance": o.tolerance,
        }
        for o in outcomes
    ]
    doc["all_passed"] = all(o.passed for o in outcomes)
    _emit(doc, out)
    return EXIT_OK if doc["all_passed"] else EXIT_NUMERICAL


def _write_state(state, path, out):
    text = dump_state(state)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_make(args, out):
    phi, chi = parse_vector(args.phi), parse_vector(args.chi)
    if phi.size != chi.size:
        raise UsageError("--phi and --chi must have the same length")
    if not (np.linalg.norm(phi) > 0 and np.linalg.norm(chi) > 0):
        raise UsageError("--phi and --chi must be nonzero")
    statistics = Statistics.parse(args.statistics)
    build = antisymmetrize if statistics is FERMION else symmetrize
    _write_state(build(phi, chi), args.out, out)
    return EXIT_OK


def cmd_random(args, out):
    state = random_state(args.dim, args.statistics, args.seed)
    _write_state(state, args.out, out)
    return EXIT_OK


# -- argument parsing --------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _eps(parser):
    parser.add_argument("--eps-count", type=float, default=DEFAULT_EPS,
                        help="coefficients above this count towards the Slater/Schmidt number")


def build_parser():
    parser = _Parser(prog="identent", description="Entanglement of two identical particles.")
    parser.add_argument("--version", action="version", version=f"identent {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("classify", help="entanglement verdict")
    p.add_argument("path", nargs="?")
    p.add_argument("--tol", type=float, default=DEFAULT_EPS, help="counting threshold (same as --eps-count)")
    p.add_argument("--eps-count", type=float, default=None)
    p.add_argument("--dir", help="classify every *.json file in a directory, one report per line")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="Slater or bosonic Schmidt decomposition")
    p.add_argument("path")
    _eps(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("entropy", help="von Neumann entropy of the reduced state (bits)")
    p.add_argument("path")
    _eps(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("properties", help="search for property-attributing projectors")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=0)
    _eps(p)
    p.set_defaults(func=cmd_properties)

    p = sub.add_parser("verify", help="brute-force cross-checks")
    p.add_argument("path")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    _eps(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("make", help="(anti)symmetrize two single-particle vectors")
    p.add_argument("--statistics", required=True, choices=["fermion", "boson"])
    p.add_argument("--phi", required=True, help='comma-separated complex amplitudes, e.g. "1,0.5i"')
    p.add_argument("--chi", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("random", help="seeded random state")
    p.add_argument("--statistics", required=True, choices=["fermion", "boson"])
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ParseError, OSError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InvariantViolation as exc:
        err.write(f"invalid state: {type(exc).__name__}: {exc}\n")
        return EXIT_INVARIANT
    except NumericalFailure as exc:
        err.write(f"numerical failure: {type(exc).__name__}: {exc}\n")
        return EXIT_NUMERICAL
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
