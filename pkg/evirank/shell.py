"""
    evirank.shell
    ~~~~~~~~~~~~~

    Interactive evidence shell. Load a document and query distances,
    rankings and combinations without re-reading the file each time.

    Access it by typing::

      evirank shell [document.xml]

    or by using the ``evirank-shell`` console script.
"""

import argparse
import cmd
import functools

from .core import EvidenceError
from .combination import combine_all
from .distance import DistanceMeasure, RED, correlation_matrix
from .document import read_document
from .pignistic import ppt
from .ranking import rank_by_distance

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"


def _catch(*args):
    """Wrap a command so that it prints errors instead of leaving the
    shell."""
    exceptions = args or Exception

    def _catch_decorator(f):
        @functools.wraps(f)
        def _f(self, line):
            try:
                return f(self, line)
            except exceptions as e:
                self._print("Error:", " ".join(str(a) for a in e.args))

        return _f

    return _catch_decorator


_catch_evidence = _catch(EvidenceError, ValueError, OSError)


class Shell(cmd.Cmd):
    """Query the evidence held in a document."""

    prompt = "evirank> "
    intro = 'This is the evirank shell. Type "?" or "help" for help'

    """Commands that can be run without a document loaded"""
    NOINIT_CMDS = ("", "load", "?", "EOF", "help", "correlation")

    def __init__(self, document=None, **kwargs):
        self.document = document
        super().__init__(**kwargs)

    def _print(self, *args):
        print(*args, file=self.stdout)

    def precmd(self, line):
        if (line and self.document is None
                and line.strip().split()[0] not in self.NOINIT_CMDS):
            self._print("No document loaded")
            return ""
        else:
            return line

    def emptyline(self):
        # do not repeat the last command.
        pass

    def do_EOF(self, _):
        self._print()
        return True

    def _bba(self, name):
        try:
            return self.document.bbas[name]
        except KeyError:
            raise ValueError("No bba named %s" % name) from None

    @_catch_evidence
    def do_load(self, filename):
        """\
        load <document.xml>
        Read an evidence document. The previous one is discarded."""
        self.document = read_document(filename.strip())
        self._print("Loaded %d bbas" % len(self.document.bbas))

    def do_info(self, _):
        """Show the frame and the names of the loaded bbas."""
        self._print("frame:", self.document.frame)
        self._print("bbas:", " ".join(self.document.bbas))

    @_catch_evidence
    def do_show(self, name):
        """\
        show <bba>
        Print the focal sets and masses of a bba."""
        for focal, mass in self._bba(name.strip()).items():
            self._print("{}\t{}".format(focal, mass))

    @_catch_evidence
    def do_ppt(self, name):
        """\
        ppt <bba>
        Print the pignistic probability of every grade."""
        p = ppt(self._bba(name.strip()))
        for label, prob in zip(p.frame.labels, p.probabilities):
            self._print("{}\t{:.4f}".format(label, prob))

    @_catch_evidence
    def do_dist(self, line):
        """\
        dist <bba> <bba> [<measure>]
        Distance between two bbas. The measure defaults to red."""
        args = line.split()
        if len(args) not in (2, 3):
            self._print("Usage: dist <bba> <bba> [<measure>]")
            return

        measure = DistanceMeasure.from_attr(args[2]) if len(args) == 3 else RED
        self._print("{:.4f}".format(measure(self._bba(args[0]),
                                            self._bba(args[1]))))

    @_catch_evidence
    def do_rank(self, line):
        """\
        rank <reference> [<measure>]
        Rank all bbas by their distance to the reference."""
        args = line.split()
        if len(args) not in (1, 2):
            self._print("Usage: rank <reference> [<measure>]")
            return

        measure = DistanceMeasure.from_attr(args[1]) if len(args) == 2 else RED
        result = rank_by_distance(self._bba(args[0]), self.document.bbas,
                                  measure, reference_name=args[0])

        for c in result.candidates:
            self._print("{}\t{}\t{:.4f}{}".format(c.rank, c.name, c.distance,
                                                  "\t(tied)" if c.tied else ""))

    @_catch_evidence
    def do_combine(self, line):
        """\
        combine <bba> <bba>+
        Combine bbas with Dempster's rule and print the result."""
        bbas = [self._bba(name) for name in line.split()]
        for focal, mass in combine_all(bbas).items():
            self._print("{}\t{:.4f}".format(focal, mass))

    @_catch_evidence
    def do_correlation(self, size):
        """\
        correlation [<size>]
        Print the correlation matrix for a frame of the given size (by
        default, the size of the loaded frame)."""
        if size.strip():
            n = int(size)
        elif self.document is not None:
            n = self.document.frame.size
        else:
            self._print("Usage: correlation <size>")
            return

        for row in correlation_matrix(n):
            self._print("\t".join("{:.4f}".format(x) for x in row))


def main():
    parser = argparse.ArgumentParser(description="evirank evidence shell",
                                     epilog="""\
    Use the -e option to run commands before the prompt appears:
    shell.py -e "load evidence.xml" -e "rank m1"
    """)

    parser.add_argument('-e', action="append",
                        help="Run command as if it was given in the terminal. "
                             "Can be specified multiple times.")

    ns = parser.parse_args()

    app = Shell()

    for cmdline in ns.e or ():
        if app.onecmd(app.precmd(cmdline)):
            break
    else:
        app.cmdloop()


if __name__ == "__main__":
    main()
