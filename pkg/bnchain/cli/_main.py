"""The bnchain command-line interface.

Every subcommand writes a single document (JSON by default, text with
``--render ascii``) to the output stream. Exit status is 0 on success, 1
when a domain check fails and 2 for malformed input or usage errors.
"""

import argparse
import dataclasses
import logging
import sys
import threading

from ..certify import (
    component_witness,
    distinctness_check,
    inclusion_candidates,
    maxrank_m2_certificate,
    maxrank_scope,
    petri_certificate,
)
from ..construct import optimal_separation_filling, staircase_filling
from ..core import BnParams, Rectangle, existence_ranges, rho, serre_dual
from ..documents import FillingBundle, load_document
from ..errors import (
    CertificateError,
    ImpossibleFillingError,
    MalformedInputError,
    OutOfRangeError,
)
from ..renderers import get_renderer
from ..series import dual_series, filling_to_series, series_to_filling
from ..tableau import (
    DEFAULT_BUDGET,
    ChainSpec,
    Filling,
    WeightedFilling,
    enumerate_fillings,
    minimal_torsion_chain,
    reduce_to_positive,
    transpose,
    validate_positive,
    validate_weighted,
)


logger = logging.getLogger(__name__)


class _ParserExit(Exception):
    def __init__(self, status):
        super().__init__(status)
        self.status = status


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that writes to the streams given to ``run()`` and
    raises instead of exiting.
    """

    def __init__(self, *args, streams=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.streams = streams or (sys.stdout, sys.stderr)

    def _print_message(self, message, file=None):
        if message:
            out, err = self.streams
            (out if file is sys.stdout else err).write(message)

    def exit(self, status=0, message=None):
        if message:
            self.streams[1].write(message)
        raise _ParserExit(status)


class _Failure(Exception):
    """A domain check failed; the result is still written, exit status 1."""

    def __init__(self, result):
        super().__init__()
        self.result = result


# %% Argument types


def _triple(text):
    try:
        g, r, d = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected g,r,d but got {text!r}")
    return g, r, d


def _special(text):
    special = {}
    for part in filter(None, text.split(",")):
        try:
            component, order = (int(x) for x in part.split(":"))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"expected component:order pairs but got {part!r}"
            )
        special[component] = order
    return special


def _params(args, name="p"):
    triple = getattr(args, name, None)
    flags = tuple(getattr(args, x, None) for x in "grd")
    if triple is None and name == "p" and None not in flags:
        triple = flags
    if triple is None:
        return None
    try:
        return BnParams(*triple)
    except ValueError as err:
        raise MalformedInputError(str(err))


def _read(args, stdin):
    if args.infile:
        with open(args.infile, "rb") as f:
            return f.read().decode()
    return stdin.read()


def _chain_for(f, args, chain=None):
    if chain is None and args.chain is not None:
        chain = ChainSpec(f.g, args.chain)
    if chain is None:
        chain = minimal_torsion_chain(f)
        logger.info("Using the minimal torsion chain %r", chain)
    return chain


def _read_filling(args, stdin):
    """Read a filling or filling_bundle document; returns (filling, chain, params)."""
    doc = load_document(_read(args, stdin))
    if isinstance(doc, FillingBundle):
        return doc.filling, doc.chain, doc.params
    if isinstance(doc, Filling):
        return doc, None, None
    raise MalformedInputError(f"Expected a filling document, got {type(doc).__name__}.")


# %% Subcommands


def cmd_params(args, stdin):
    p = _params(args)
    if p is None:
        raise MalformedInputError("params needs --p g,r,d or --g, --r and --d.")
    try:
        dual = serre_dual(p)
    except OutOfRangeError:
        dual = None
    q = BnParams.normalized(*p.triple)
    return {
        "kind": "params_report",
        "params": p,
        "rho": rho(p),
        "dual": dual,
        "alpha": p.alpha,
        "beta": p.beta,
        "e": p.e,
        "normalized": q,
        "dualized": q.dualized,
        "ranges": existence_ranges(q.alpha, q.beta, q.g),
    }


def cmd_fill_construct(args, stdin):
    if args.mode == "separation":
        if args.e is None:
            raise MalformedInputError("--mode separation needs --e.")
        return optimal_separation_filling(args.alpha, args.beta, args.e)
    if args.g is None:
        raise MalformedInputError("--mode staircase needs --g.")
    return staircase_filling(args.alpha, args.beta, args.g)


def cmd_fill_enumerate(args, stdin):
    shape = Rectangle(args.alpha, args.beta, args.g)
    chain = ChainSpec(args.g, args.chain or {})
    fillings = list(enumerate_fillings(shape, chain, budget=args.budget))
    return {
        "kind": "filling_list",
        "chain": chain,
        "count": len(fillings),
        "fillings": fillings,
    }


def cmd_fill_validate(args, stdin):
    doc = load_document(_read(args, stdin))
    if isinstance(doc, WeightedFilling):
        chain = ChainSpec(doc.g, args.chain or {})
        report = validate_weighted(doc, chain)
        if report and args.reduce:
            return reduce_to_positive(doc)
    else:
        if isinstance(doc, FillingBundle):
            f, chain = doc.filling, doc.chain
        elif isinstance(doc, Filling):
            f, chain = doc, None
        else:
            raise MalformedInputError(
                f"Cannot validate {type(doc).__name__} documents."
            )
        try:
            chain = _chain_for(f, args, chain)
        except ImpossibleFillingError as err:
            logger.warning("No torsion chain fits the filling: %s", err)
            chain = ChainSpec(f.g)
        report = validate_positive(f, chain)
    if not report:
        raise _Failure(report)
    return report


def cmd_fill_transpose(args, stdin):
    f, chain, params = _read_filling(args, stdin)
    if chain is None:
        return transpose(f)
    if params is not None:
        params = serre_dual(params)
    return FillingBundle(transpose(f), chain, params)


def cmd_series_from_filling(args, stdin):
    f, chain, params = _read_filling(args, stdin)
    p = _params(args) or params
    if p is None:
        raise MalformedInputError("series-from-filling needs --p or a params field.")
    chain = _chain_for(f, args, chain)
    if args.dual:
        return dual_series(f, p, chain)
    return filling_to_series(f, p, chain)


def cmd_series_to_filling(args, stdin):
    table = load_document(_read(args, stdin), "limit_series")
    return series_to_filling(table)


def cmd_certify_petri(args, stdin):
    p = _params(args)
    if p is not None and not args.infile:
        return component_witness(p)
    f, chain, params = _read_filling(args, stdin)
    p = p or params
    if p is None:
        raise MalformedInputError("certify-petri needs --p or a params field.")
    return petri_certificate(f, p, _chain_for(f, args, chain))


def cmd_certify_maxrank(args, stdin):
    p = _params(args)
    if p is not None:
        scope = maxrank_scope(p)
        cert = maxrank_m2_certificate(scope.r)
        return dataclasses.replace(cert, scope=scope.kind)
    if args.r is None:
        raise MalformedInputError("certify-maxrank needs --r or --p.")
    return maxrank_m2_certificate(args.r)


def cmd_loci_distinct(args, stdin):
    return distinctness_check(_params(args, "p1"), _params(args, "p2"))


def cmd_loci_inclusions(args, stdin):
    candidates = inclusion_candidates(args.alpha_max)
    return {
        "kind": "inclusion_candidates",
        "alpha_max": args.alpha_max,
        "candidates": candidates,
    }


# %% Parser


def _add_params(parser, flags="grd"):
    parser.add_argument("--p", type=_triple, help="parameters as g,r,d")
    for name in flags:
        parser.add_argument(f"--{name}", type=int)


def build_parser(streams=None):
    """The argument parser; usage and errors go to the given (out, err) streams."""
    common = _Parser(add_help=False, streams=streams)
    common.add_argument("--render", choices=["json", "ascii"], default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--in", dest="infile", help="read the input document here")
    common.add_argument("--out", dest="outfile", help="write the result here")
    common.add_argument("--chain", type=_special, help="torsion orders as c:l,c:l")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(
        prog="bnchain",
        description="Limit linear series on chains of elliptic curves.",
        streams=streams,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name, func, summary):
        sub = subparsers.add_parser(
            name, parents=[common], help=summary, streams=streams
        )
        sub.set_defaults(func=func)
        return sub

    sub = add("params", cmd_params, "Brill-Noether numbers of g,r,d")
    _add_params(sub)

    sub = add("fill-construct", cmd_fill_construct, "build a filling")
    sub.add_argument("--mode", choices=["separation", "staircase"], required=True)
    sub.add_argument("--alpha", type=int, required=True)
    sub.add_argument("--beta", type=int, required=True)
    sub.add_argument("--e", type=int)
    sub.add_argument("--g", type=int)

    sub = add("fill-enumerate", cmd_fill_enumerate, "list all admissible fillings")
    sub.add_argument("--alpha", type=int, required=True)
    sub.add_argument("--beta", type=int, required=True)
    sub.add_argument("--g", type=int, required=True)

    sub = add("fill-validate", cmd_fill_validate, "check a (weighted) filling")
    sub.add_argument("--reduce", action="store_true", help="reduce a weighted filling")

    add("fill-transpose", cmd_fill_transpose, "the Serre dual filling")

    sub = add("series-from-filling", cmd_series_from_filling, "filling to series")
    _add_params(sub)
    sub.add_argument("--dual", action="store_true", help="the Serre dual series")

    add("series-to-filling", cmd_series_to_filling, "series to filling")

    sub = add("certify-petri", cmd_certify_petri, "Petri map certificate")
    _add_params(sub)

    sub = add("certify-maxrank", cmd_certify_maxrank, "maximal rank for m=2")
    sub.add_argument("--r", type=int, help="the square case of dimension r")
    _add_params(sub, flags="gd")

    sub = add("loci-distinct", cmd_loci_distinct, "compare two loci")
    sub.add_argument("--p1", type=_triple, required=True)
    sub.add_argument("--p2", type=_triple, required=True)

    sub = add("loci-inclusions", cmd_loci_inclusions, "candidate inclusions")
    sub.add_argument("--alpha-max", type=int, required=True)

    return parser


# %% Entry points


def _error_document(err):
    doc = {"kind": "error", "error": type(err).__name__, "message": str(err)}
    if isinstance(err, CertificateError):
        doc["step"] = err.step
        doc["details"] = err.details
    return doc


def run(argv, stdin=None, stdout=None, stderr=None):
    """Run the command line with the given arguments and streams.
    Returns the exit status.
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser((stdout, stderr))
    try:
        args = parser.parse_args(argv)
    except _ParserExit as err:
        return err.status

    # log this thread's records to the given stderr for the duration of this run
    handler = logging.StreamHandler(stderr)
    thread = threading.get_ident()
    handler.addFilter(lambda record: record.thread == thread)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("bnchain")
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    previous = root.level
    root.addHandler(handler)
    root.setLevel(level)

    renderer = get_renderer(args.render)
    status = 0
    try:
        result = args.func(args, stdin)
    except (MalformedInputError, OSError) as err:
        stderr.write(f"bnchain {args.command}: {err}\n")
        return 2
    except _Failure as failure:
        result, status = failure.result, 1
    except (ValueError, RuntimeError) as err:
        stderr.write(f"bnchain {args.command}: {err}\n")
        result, status = _error_document(err), 1
    finally:
        root.removeHandler(handler)
        root.setLevel(previous)

    text = renderer.render(result)
    if args.outfile:
        with open(args.outfile, "wb") as f:
            f.write(text.encode())
    else:
        stdout.write(text)
    return status


def main():
    sys.exit(run(sys.argv[1:]))
