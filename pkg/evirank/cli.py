"""
    evirank.cli
    ~~~~~~~~~~~

    Command line interface. Every subcommand writes a table, as CSV (default)
    or as JSON with ``--format json``. Numbers are printed with
    :data:`DECIMALS` decimal places so that outputs can be diffed.

    Exit status: 0 on success, 1 on usage errors, 2 if the input cannot be
    read or is invalid, 3 if a computation fails (e.g. total conflict).
"""

import argparse
import csv
import functools
import json
import logging
import sys

from . import repro
from .core import EvidenceError, FrameError, FocalSetError, MassError
from .combination import combine_all, conflict
from .distance import DistanceMeasure, RED
from .document import DocumentError, read_document
from .pignistic import ppt
from .ranking import rank_by_distance, distance_matrix

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

logger = logging.getLogger(__name__)

DECIMALS = 4

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_COMPUTATION = 3

_INPUT_ERRORS = (DocumentError, FrameError, FocalSetError, MassError, OSError)


class UsageError(Exception):
    """Bad command line arguments."""
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so that usage errors
    get their own exit status. Help goes to ``stream`` when one is given."""

    def __init__(self, *args, stream=None, **kwargs):
        self.stream = stream
        super().__init__(*args, **kwargs)

    def _print_message(self, message, file=None):
        if self.stream is not None:
            file = self.stream
        super()._print_message(message, file)

    def error(self, message):
        raise UsageError("%s\n%s" % (message, self.format_usage().strip()))


def _fmt(value):
    return "%.*f" % (DECIMALS, value)


def _json_value(value):
    return round(value, DECIMALS) if isinstance(value, float) else value


def _write_table(out, fmt, header, rows):
    """Write rows (sequences matching ``header``). Floats are rounded to
    DECIMALS places and booleans spelled true/false."""
    if fmt == "json":
        records = [{h: _json_value(v) for h, v in zip(header, row)}
                   for row in rows]
        json.dump(records, out, indent=2)
        out.write("\n")
        return

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, float)
                         else str(v).lower() if isinstance(v, bool)
                         else v for v in row])


def _set_text(focal_set):
    return " ".join(str(label) for label in focal_set.labels)


def _names(text, count=None):
    names = [n.strip() for n in text.split(",") if n.strip()]
    if count is not None and len(names) != count:
        raise UsageError("expected %d comma separated names, got %r"
                         % (count, text))
    return names


def _measure(text):
    try:
        return DistanceMeasure.from_attr(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _load(ns):
    return read_document(ns.file, renormalize=ns.renormalize)


def _pick(bbas, names):
    missing = [n for n in names if n not in bbas]
    if missing:
        raise UsageError("no bba named %s in the document"
                         % ", ".join(repr(n) for n in missing))
    return [bbas[n] for n in names]


def cmd_validate(ns, out):
    document = _load(ns)
    rows = [(name, len(bba.masses), sum(bba.masses.values()))
            for name, bba in document.bbas.items()]
    _write_table(out, ns.format, ("name", "focal_sets", "mass_sum"), rows)


def cmd_combine(ns, out):
    document = _load(ns)
    names = _names(ns.bbas)
    if len(names) < 2:
        raise UsageError("combine needs at least two bbas")

    bbas = _pick(document.bbas, names)
    for name, bba in zip(names[1:], bbas[1:]):
        logger.info("Conflict between %s and %s: %.*f", names[0], name,
                    DECIMALS, conflict(bbas[0], bba))

    combined = combine_all(bbas)
    _write_table(out, ns.format, ("set", "mass"),
                 [(_set_text(fs), mass) for fs, mass in combined.items()])


def cmd_ppt(ns, out):
    document = _load(ns)
    bba, = _pick(document.bbas, [ns.bba])
    p = ppt(bba)
    _write_table(out, ns.format, ("grade", "probability"),
                 list(zip(document.frame.labels, p.probabilities)))


def cmd_dist(ns, out):
    document = _load(ns)
    a, b = _names(ns.pair, 2)
    m1, m2 = _pick(document.bbas, [a, b])
    _write_table(out, ns.format, ("a", "b", "measure", "distance"),
                 [(a, b, str(ns.measure), ns.measure(m1, m2))])


def cmd_rank(ns, out):
    document = _load(ns)
    reference, = _pick(document.bbas, [ns.reference])
    result = rank_by_distance(reference, document.bbas, ns.measure,
                              reference_name=ns.reference)
    _write_table(out, ns.format, ("name", "distance", "rank", "tied"),
                 [(c.name, c.distance, c.rank, c.tied)
                  for c in result.candidates])


def cmd_matrix(ns, out):
    document = _load(ns)
    names, matrix = distance_matrix(document.bbas, ns.measure)
    _write_table(out, ns.format, ("name",) + names,
                 [(name,) + tuple(float(x) for x in row)
                  for name, row in zip(names, matrix)])


def cmd_repro(ns, out):
    if ns.what == "examples":
        _write_table(out, ns.format, repro.ExampleRow._fields,
                     [tuple(row) for row in repro.run_examples()])
    elif ns.what == "sweep":
        _write_table(out, ns.format, repro.SweepRow._fields,
                     [tuple(row) for row in repro.run_sweep(jobs=ns.jobs)])
    else:
        matrix = repro.run_correlation(ns.size)
        header = ("s_ij",) + tuple(str(i) for i in range(1, ns.size + 1))
        _write_table(out, ns.format, header,
                     [(str(i),) + tuple(row)
                      for i, row in enumerate(matrix, 1)])


def cmd_shell(ns, out):
    from .shell import Shell

    app = Shell(stdout=out)
    if ns.file:
        app.onecmd("load %s" % ns.file)
    app.cmdloop()


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer: %r"
                                         % text)
    return value


def build_parser(stream=None):
    # Options accepted both before and after the subcommand. SUPPRESS keeps
    # the subparser from overwriting a value given before the subcommand.
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"),
                        default=argparse.SUPPRESS,
                        help="Output format (default: csv)")
    common.add_argument("-v", "--verbose", action="count",
                        default=argparse.SUPPRESS,
                        help="Log more (repeat for debug output)")

    parser = _ArgumentParser(
        prog="evirank", parents=[common], stream=stream,
        description="Evidence distances and ranking of basic belief "
                    "assignments on ordered frames.")
    parser.set_defaults(format="csv", verbose=0)

    sub = parser.add_subparsers(dest="command", metavar="command",
                                parser_class=functools.partial(
                                    _ArgumentParser, stream=stream))
    sub.required = True

    def _file_command(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file", help="Evidence document (XML)")
        p.add_argument("--renormalize", action="store_true",
                       help="Divide masses by their sum when reading")
        p.set_defaults(func=func)
        return p

    _file_command("validate", cmd_validate, "Check a document")

    p = _file_command("combine", cmd_combine,
                      "Combine bbas with Dempster's rule")
    p.add_argument("--bbas", required=True, help="a,b[,c...]")

    p = _file_command("ppt", cmd_ppt, "Pignistic transformation")
    p.add_argument("--bba", required=True)

    p = _file_command("dist", cmd_dist, "Distance between two bbas")
    p.add_argument("--pair", required=True, help="a,b")
    p.add_argument("--measure", type=_measure, default=RED,
                   help="red | jousselme | betp[:all|singleton|focal]")

    p = _file_command("rank", cmd_rank,
                      "Rank all bbas by distance to a reference")
    p.add_argument("--reference", required=True)
    p.add_argument("--measure", type=_measure, default=RED)

    p = _file_command("matrix", cmd_matrix, "Pairwise distance matrix")
    p.add_argument("--measure", type=_measure, default=RED)

    p = sub.add_parser("repro", parents=[common],
                       help="Recompute the published examples")
    p.add_argument("what", choices=("examples", "sweep", "correlation"))
    p.add_argument("--jobs", type=_positive_int, default=1,
                   help="Worker threads for the sweep")
    p.add_argument("--size", type=_positive_int, default=len(repro.GRADES),
                   help="Frame size for the correlation matrix")
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("shell", parents=[common],
                       help="Interactive evidence shell")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_shell)

    return parser


def _log_handler(verbose, stream):
    """Attach a handler for the package loggers. The caller removes it."""
    level = (logging.WARNING if verbose <= 0
             else logging.INFO if verbose == 1
             else logging.DEBUG)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter("%(name)s: %(levelname)s: "
                                           "%(message)s"))
    package_logger = logging.getLogger(__package__)
    package_logger.addHandler(handler)
    package_logger.setLevel(level)

    return handler


def run_cli(argv, stdout=None, stderr=None):
    """Run the command line and return the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser(stdout)

    try:
        ns = parser.parse_args(argv)
    except UsageError as e:
        print("evirank: error: %s" % e, file=stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK

    handler = _log_handler(ns.verbose, stderr)

    try:
        ns.func(ns, stdout)
    except UsageError as e:
        print("evirank: error: %s" % e, file=stderr)
        return EXIT_USAGE
    except _INPUT_ERRORS as e:
        print("evirank: error: %s" % e, file=stderr)
        return EXIT_INPUT
    except EvidenceError as e:
        print("evirank: error: %s" % e, file=stderr)
        return EXIT_COMPUTATION
    finally:
        logging.getLogger(__package__).removeHandler(handler)

    return EXIT_OK


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
