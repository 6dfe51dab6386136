"""Command-line frontend: decompose, verify, cfrac, eval, random and batch."""

import argparse
import json
import logging
import os
import re
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, TextIO

from .algebra.cfrac import alternate, convergents, expand
from .algebra.words import evaluate
from .data.loader import load_matrices
from .data.parsers import (
    format_cf,
    format_matrix,
    format_rational,
    format_word,
    parse_matrix,
    parse_rational,
    parse_word,
)
from .data.serialization import (
    convergents_to_list,
    cf_to_list,
    matrix_to_dict,
    rational_to_dict,
    trace_to_dict,
    word_to_list,
)
from .decomposition.batch import BatchResult, BatchRunner
from .decomposition.decomposer import decompose, decompose_all
from .decomposition.verifier import verify
from .errors import NotUnimodularError, ParseError
from .models.continued_fraction import ContinuedFraction, Representation
from .models.matrix import Mat2
from .models.trace import DecompositionTrace, VerificationReport
from .models.word import Word

logger = logging.getLogger(__name__)

PROG = "gl2word"
FORMAT_ENV_VAR = "GL2WORD_FORMAT"
FORMATS = ("text", "json")
DEFAULT_FORMAT = "text"
DEFAULT_SEED = 0
DEFAULT_RANDOM_COUNT = 10
DEFAULT_RANDOM_LENGTH = 20

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_UNIMODULAR = 3


class RepresentationChoice(Enum):
    FIRST = "first"
    SECOND = "second"
    BOTH = "both"

    @property
    def representations(self) -> List[Representation]:
        if self == RepresentationChoice.BOTH:
            return [Representation.FIRST, Representation.SECOND]
        return [Representation(self.value)]


DEFAULT_REPRESENTATION = RepresentationChoice.FIRST


@dataclass
class CliRequest:
    """A parsed command line."""
    command: str  # decompose, verify, cfrac, eval, random, batch
    matrix: Optional[Mat2] = None
    word: Optional[Word] = None
    rational: Optional[Fraction] = None
    path: Optional[str] = None
    rep: RepresentationChoice = DEFAULT_REPRESENTATION
    format: str = DEFAULT_FORMAT
    trace: bool = False
    seed: Optional[int] = None
    count: Optional[int] = None
    length: Optional[int] = None
    allow_c: bool = False
    verbose: bool = False


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reads '-17/11' as a positional, not as an option."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Overrides a private argparse attribute; if a Python release renames it,
        # negative rationals need a "--" before them (gl2word cfrac -- -17/11).
        self._negative_number_matcher = re.compile(r'^-[0-9]+(/-?[0-9]+)?$|^-[0-9]*\.[0-9]+$')


def _argument_type(parse):
    def convert(text: str):
        try:
            return parse(text)
        except ParseError as e:
            raise argparse.ArgumentTypeError(str(e))
    convert.__name__ = parse.__name__.replace('parse_', '')
    return convert


def _non_negative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--rep", choices=[c.value for c in RepresentationChoice],
                        default=DEFAULT_REPRESENTATION.value,
                        help="continued-fraction representation (default: first)")
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV_VAR} or {DEFAULT_FORMAT})")
    common.add_argument("--trace", action="store_true", help="print every intermediate quantity")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = _ArgumentParser(prog=PROG, description="Factor GL2(Z) matrices into words in A, B, C.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="factor a matrix")
    p.add_argument("matrix", type=_argument_type(parse_matrix), help="e.g. '[-65, 17; 42, -11]'")

    p = sub.add_parser("verify", parents=[common], help="check that a word evaluates to a matrix")
    p.add_argument("matrix", type=_argument_type(parse_matrix))
    p.add_argument("word", type=_argument_type(parse_word), help="e.g. 'A^-3 B A^4'")

    p = sub.add_parser("cfrac", parents=[common], help="continued fractions of a rational")
    p.add_argument("rational", type=_argument_type(parse_rational), help="e.g. -17/11")

    p = sub.add_parser("eval", parents=[common], help="multiply a word out")
    p.add_argument("word", type=_argument_type(parse_word))

    p = sub.add_parser("random", parents=[common], help="decompose seeded random matrices")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=_non_negative, default=DEFAULT_RANDOM_COUNT)
    p.add_argument("--length", type=_non_negative, default=DEFAULT_RANDOM_LENGTH)
    p.add_argument("--allow-c", action="store_true", help="also draw C, so det may be -1")

    p = sub.add_parser("batch", parents=[common], help="decompose every row of a CSV (columns a,b,c,d)")
    p.add_argument("path")

    return parser


def _default_format() -> str:
    env = os.environ.get(FORMAT_ENV_VAR)
    if env is None:
        return DEFAULT_FORMAT
    if env.strip().lower() in FORMATS:
        return env.strip().lower()
    logger.warning("ignoring %s=%r, expected one of %s", FORMAT_ENV_VAR, env, ", ".join(FORMATS))
    return DEFAULT_FORMAT


def parse_args(argv: Optional[Sequence[str]] = None) -> CliRequest:
    """
    Parse argv into a CliRequest.

    Unknown flags and malformed positionals print usage and exit with status 2.
    """
    return _request_from_args(build_parser().parse_args(argv))


def _request_from_args(args: argparse.Namespace) -> CliRequest:
    return CliRequest(
        command=args.command,
        matrix=getattr(args, 'matrix', None),
        word=getattr(args, 'word', None),
        rational=getattr(args, 'rational', None),
        path=getattr(args, 'path', None),
        rep=RepresentationChoice(args.rep),
        format=args.format or _default_format(),
        trace=args.trace,
        seed=getattr(args, 'seed', None),
        count=getattr(args, 'count', None),
        length=getattr(args, 'length', None),
        allow_c=getattr(args, 'allow_c', False),
        verbose=args.verbose,
    )


def format_trace(trace: DecompositionTrace, report: Optional[VerificationReport] = None) -> str:
    """Human-readable derivation of one decomposition."""
    m = trace.input
    lines = [
        f"matrix:         {format_matrix(m)}  (det {m.det})",
        f"representation: {trace.representation.value}",
    ]
    if trace.is_d_zero:
        lines.append("cf:             none (d = 0)")
    else:
        lines += [
            f"cf:             {format_cf(trace.cf)}  (j = {trace.j})",
            "convergents:    " + " ".join(f"({p}, {q})" for p, q in trace.table),
            f"sign exponent:  {trace.sign_exponent}",
        ]
    lines.append(f"det exponent:   {trace.det_exponent}")
    if not trace.is_d_zero:
        lines.append(f"b_j:            {trace.b_j}")
        lines.append("chain:")
        lines += [f"  P_{k} = {format_matrix(p)}" for k, p in enumerate(trace.chain)]
    lines.append(f"word:           {format_word(trace.word)}")
    if report is not None:
        lines.append("checks:")
        for check in report.checks:
            mark = "ok  " if check.passed else "FAIL"
            detail = f"  {check.detail}" if check.detail and not check.passed else ""
            lines.append(f"  [{mark}] {check.name}{detail}")
    return "\n".join(lines)


def _cf_block(cf: ContinuedFraction) -> dict:
    table = convergents(cf)
    return {
        'cf': cf_to_list(cf),
        'text': format_cf(cf),
        'convergents': convergents_to_list(table),
    }


def _emit_json(data, out: TextIO) -> None:
    print(json.dumps(data, indent=2), file=out)


def _cmd_decompose(req: CliRequest, out: TextIO) -> int:
    if req.rep == RepresentationChoice.BOTH:
        traces = decompose_all(req.matrix)
    else:
        traces = (decompose(req.matrix, req.rep.representations[0]),)
    results = [(trace, verify(trace)) for trace in traces]

    if req.format == "json":
        payload = [trace_to_dict(t, r.passed) for t, r in results]
        _emit_json(payload[0] if len(payload) == 1 else payload, out)
    elif req.trace:
        print("\n\n".join(format_trace(t, r) for t, r in results), file=out)
    else:
        for trace, _ in results:
            print(format_word(trace.word), file=out)

    if all(r.passed for _, r in results):
        return EXIT_OK
    return EXIT_VERIFICATION_FAILED


def _cmd_verify(req: CliRequest, out: TextIO) -> int:
    m = req.matrix
    if not m.is_unimodular:
        raise NotUnimodularError(m.det)
    product = evaluate(req.word)
    ok = product == m

    if req.format == "json":
        _emit_json({
            'matrix': matrix_to_dict(m),
            'word': word_to_list(req.word),
            'evaluates_to': matrix_to_dict(product),
            'verified': ok,
        }, out)
    elif ok:
        print("ok", file=out)
    else:
        print(f"mismatch: {format_word(req.word)} evaluates to {format_matrix(product)}, "
              f"not {format_matrix(m)}", file=out)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def _cmd_cfrac(req: CliRequest, out: TextIO) -> int:
    first = expand(req.rational)
    second = alternate(first)

    if req.format == "json":
        _emit_json({
            'rational': rational_to_dict(req.rational),
            'first': _cf_block(first),
            'second': _cf_block(second),
        }, out)
        return EXIT_OK

    print(f"rational: {format_rational(req.rational)}", file=out)
    print(f"first:    {format_cf(first)}", file=out)
    print(f"second:   {format_cf(second)}", file=out)
    for name, cf in (("first", first), ("second", second)):
        print(f"convergents ({name}):", file=out)
        print("  k\tp_k\tq_k", file=out)
        for k, (p, q) in enumerate(convergents(cf)):
            print(f"  {k}\t{p}\t{q}", file=out)
    return EXIT_OK


def _cmd_eval(req: CliRequest, out: TextIO) -> int:
    m = evaluate(req.word)
    if req.format == "json":
        _emit_json({'matrix': matrix_to_dict(m), 'det': str(m.det)}, out)
    else:
        print(format_matrix(m), file=out)
    return EXIT_OK


def _print_batch(result: BatchResult, req: CliRequest, out: TextIO) -> None:
    if req.format == "json":
        _emit_json({
            'summary': result.to_dict(),
            'items': [
                {
                    'index': item.index,
                    'matrix': matrix_to_dict(item.matrix),
                    'error': item.error,
                    'traces': [trace_to_dict(t, r.passed) for t, r in zip(item.traces, item.reports)],
                }
                for item in result.items
            ],
        }, out)
        return

    for item in result.items:
        if item.error is not None:
            print(f"{format_matrix(item.matrix)}\terror: {item.error}", file=out)
        elif req.trace:
            print("\n\n".join(format_trace(t, r) for t, r in zip(item.traces, item.reports)), file=out)
            print(file=out)
        else:
            words = "\t".join(format_word(t.word) for t in item.traces)
            status = "" if item.passed else "\tFAILED"
            print(f"{format_matrix(item.matrix)}\t{words}{status}", file=out)


def _batch_exit_code(result: BatchResult) -> int:
    if result.n_rejected:
        return EXIT_NOT_UNIMODULAR
    if result.n_failures:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _cmd_random(req: CliRequest, out: TextIO) -> int:
    runner = BatchRunner.from_seed(
        seed=req.seed if req.seed is not None else DEFAULT_SEED,
        count=req.count if req.count is not None else DEFAULT_RANDOM_COUNT,
        length=req.length if req.length is not None else DEFAULT_RANDOM_LENGTH,
        allow_c=req.allow_c,
        representations=req.rep.representations,
    )
    result = runner.run()
    _print_batch(result, req, out)
    return _batch_exit_code(result)


def _cmd_batch(req: CliRequest, out: TextIO) -> int:
    result = BatchRunner(load_matrices(req.path), req.rep.representations).run()
    _print_batch(result, req, out)
    return _batch_exit_code(result)


COMMANDS = {
    'decompose': _cmd_decompose,
    'verify': _cmd_verify,
    'cfrac': _cmd_cfrac,
    'eval': _cmd_eval,
    'random': _cmd_random,
    'batch': _cmd_batch,
}


def run(req: CliRequest, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Execute a request and return the process exit code.

    0 on verified success, 1 on verification failure, 2 on unreadable
    input files, 3 when a matrix is not in GL2(Z).
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return COMMANDS[req.command](req, out)
    except NotUnimodularError as e:
        print(f"{PROG}: {e}", file=err)
        return EXIT_NOT_UNIMODULAR
    except (OSError, ValueError) as e:
        print(f"{PROG}: {e}", file=err)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    # must run before _request_from_args, which may warn about $GL2WORD_FORMAT
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return run(_request_from_args(args))
