"""
Command-line front end. Every command writes one JSON document to stdout;
diagnostics go to stderr.

Exit codes: 0 on success (and free-up-to-D for ``free``), 2 when ``free``
finds a degenerate degree, 1 on any error.
"""
import argparse
import json
import sys
import warnings

from NicholsPy.analyzer.HypothesisError import HypothesisError
from NicholsPy.analyzer.NicholsAnalyzer import NicholsAnalyzer
from NicholsPy.poly.PmFamily import a_cofactor, a_form, classify, \
    p_factor_form, p_poly, q_monomial
from NicholsPy.shuffle.BraidingMatrix import DEFAULT_SEED
from NicholsPy.words.DegreeVector import DegreeVector
from NicholsPy.words.LyndonWords import lyndon_count, lyndon_words, \
    necklace_count
from .BraidingSpec import BraidingSpec
from .SelfTest import SelfTest

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FREE = 2


class UsageError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """
    argparse exits with status 2 on bad usage, which would read as
    "not free"; raise instead so that main() exits with 1.
    """
    def error(self, message):
        raise UsageError(message)


def cmd_lyndon(args):
    """
    l_m, N_m, N(m), gcd(m) for one degree or for all 1 <= |m| <= D.
    """
    if args.all_upto is not None:
        if args.m:
            raise UsageError("give either a degree or --all-upto.")
        degrees = DegreeVector.all_upto(args.n, args.all_upto, min_total=1)
        return [_lyndon_row(m, args.words) for m in degrees]

    return _lyndon_row(_parse_degree(args.m), args.words)


def cmd_poly(args):
    """
    P_m, A_m, Q_m or the cyclotomic factorizations of degree m.
    """
    m = _parse_degree(args.m)
    if m.total() < 2:
        raise UsageError("poly needs |m| >= 2.")

    result = {"m": list(m.as_tuple())}
    if args.qm:
        monomial = q_monomial(m)
        result.update({"qm": str(monomial), "exps": monomial.to_json(),
                       "N": m.bigN()})
    elif args.am:
        form = a_form(m)
        result.update({"am": str(form), "form": form.to_dict()})
    elif args.factors:
        result.update({"am": a_form(m).to_dict(),
                       "pm": p_factor_form(m).to_dict()})
        if len(m.support()) >= 2:
            result["cofactor"] = a_cofactor(m).to_dict()
    else:
        polynomial = p_poly(m)
        result.update({"case": classify(m).to_dict(),
                       "pm": str(polynomial),
                       "terms": polynomial.to_json()})
    return result


def cmd_free(args):
    """
    Bounded freeness sweep; --verify adds kernel dimensions by elimination
    at every witness.
    """
    analyzer = NicholsAnalyzer(_load_braiding(args.spec), args.verbose)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = analyzer.freeness_check(args.maxdeg)

    for warning in caught:
        sys.stderr.write("warning: %s\n" % warning.message)

    if args.verify:
        for m in report.witnesses:
            report.add_kernel(analyzer.kernel_dim(m, verify=True,
                                                  relations=True))

    status = EXIT_OK if report.is_free() else EXIT_NOT_FREE
    return report.to_dict(), status


def cmd_kernel(args):
    """
    n1 - n2 at a minimal degenerate degree; --dump adds the matrix of
    S_{1,|m|-1} on V_m with its basis words.
    """
    analyzer = NicholsAnalyzer(_load_braiding(args.spec), args.verbose)
    m = _parse_degree(args.m)
    report = analyzer.kernel_dim(m, verify=args.brute, relations=args.brute)

    result = report.to_dict()
    if args.dump:
        matrix = analyzer.representation.s1_matrix(m.total() - 1, m)
        result["matrix"] = matrix.to_dict()
    return result


def cmd_dioph(args):
    """
    Box search for K(m) = lambda(m); each solution is checked by evaluating
    P_m(t).
    """
    spec = BraidingSpec.from_file(args.spec)
    exponents = spec.exponent_braiding()
    solutions = exponents.diophantine_search(args.box)

    analyzer = NicholsAnalyzer(exponents.braiding(), args.verbose)
    return {"box": args.box,
            "exponents": exponents.exponents.tolist(),
            "solutions": [list(m.as_tuple()) for m in solutions],
            "confirmed": [analyzer.is_degenerate(m) for m in solutions]}


def cmd_selftest(args):

    result = SelfTest(args.seed, args.random, args.verbose).run()
    return result, EXIT_OK if result["passed"] else EXIT_ERROR


def build_parser():

    parser = _ArgumentParser(prog="nicholspy",
                             description="Freeness of Nichols algebras of "
                                         "diagonal type.")
    parser.add_argument("--seed", type=_integer, default=DEFAULT_SEED,
                        help="seed of randomized checks (default 0x%X)" %
                             DEFAULT_SEED)
    parser.add_argument("--verbose", action="store_true",
                        help="progress on stderr")

    commands = parser.add_subparsers(dest="command")

    lyndon = commands.add_parser("lyndon", help="Lyndon word counts")
    lyndon.add_argument("m", nargs="*", type=int)
    lyndon.add_argument("--all-upto", type=int, default=None)
    lyndon.add_argument("--n", type=int, default=2,
                        help="alphabet size for --all-upto")
    lyndon.add_argument("--words", action="store_true",
                        help="also list the Lyndon words")
    lyndon.set_defaults(handler=cmd_lyndon)

    poly = commands.add_parser("poly", help="P_m, A_m and Q_m")
    poly.add_argument("m", nargs="+", type=int)
    which = poly.add_mutually_exclusive_group()
    which.add_argument("--pm", action="store_true")
    which.add_argument("--am", action="store_true")
    which.add_argument("--qm", action="store_true")
    which.add_argument("--factors", action="store_true")
    poly.set_defaults(handler=cmd_poly)

    free = commands.add_parser("free", help="bounded freeness check")
    free.add_argument("spec")
    free.add_argument("--maxdeg", type=int, default=7)
    free.add_argument("--verify", action="store_true")
    free.set_defaults(handler=cmd_free)

    kernel = commands.add_parser("kernel", help="shuffle kernel dimension")
    kernel.add_argument("spec")
    kernel.add_argument("m", nargs="+", type=int)
    kernel.add_argument("--brute", action="store_true")
    kernel.add_argument("--dump", action="store_true",
                        help="include the matrix of S_{1,|m|-1}")
    kernel.set_defaults(handler=cmd_kernel)

    dioph = commands.add_parser("dioph", help="diophantine box search")
    dioph.add_argument("spec")
    dioph.add_argument("--box", type=int, default=50)
    dioph.set_defaults(handler=cmd_dioph)

    selftest = commands.add_parser("selftest", help="invariant suites")
    selftest.add_argument("--random", type=int, default=3,
                          help="random braidings per check")
    selftest.set_defaults(handler=cmd_selftest)

    return parser


def main(argv=None):
    """
    :param argv: Arguments without the program name; sys.argv[1:] if None.
    :return: Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required.")

        result = args.handler(args)
    except HypothesisError as error:
        sys.stderr.write(json.dumps(error.to_dict()) + "\n")
        return EXIT_ERROR
    except UsageError as error:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write("usage error: %s\n" % error)
        return EXIT_ERROR
    except (ValueError, TypeError, IOError) as error:
        sys.stderr.write("error: %s\n" % error)
        return EXIT_ERROR

    status = EXIT_OK
    if isinstance(result, tuple):
        result, status = result

    if args.seed != DEFAULT_SEED or args.command == "selftest":
        sys.stderr.write("seed: 0x%X\n" % args.seed)

    sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return status


def _lyndon_row(m, with_words):

    if m.is_zero():
        raise UsageError("the degree must be nonzero.")

    row = {"m": list(m.as_tuple()),
           "lyndon": lyndon_count(m),
           "necklaces": necklace_count(m),
           "N": m.bigN() if m.total() >= 2 else None,
           "gcd": m.gcd()}
    if with_words:
        row["words"] = [str(word) for word in lyndon_words(m)]
    return row


def _parse_degree(entries):

    if not entries:
        raise UsageError("a degree m_1 ... m_n is required.")

    if any(entry < 0 for entry in entries):
        raise UsageError("degree entries must be nonnegative.")

    return DegreeVector(entries)


def _load_braiding(path):

    return BraidingSpec.from_file(path).braiding()


def _integer(text):
    """
    Accepts decimal or 0x-prefixed seeds.
    """
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid integer '%s'." % text)


if __name__ == "__main__":
    sys.exit(main())
