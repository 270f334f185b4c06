__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Sub-commands of the ucluster program.

stdout only ever carries the decision (YES / NO), JSON kernel statistics or
CSV rows; everything else goes to stderr through logging.  Exit codes:

    0   the command ran (whatever the decision was)
    1   a witness failed verification, or an oracle size guard was exceeded
    2   usage, parse, configuration or input errors
"""

import argparse
import csv
import glob
import json
import logging
import os
import sys
import time

from UCluster import __version__
from UCluster.Graph import norm_edge
from UCluster._Instance import Instance, Witness, VARIANTS, verify_witness
from UCluster._Exceptions import (
    APIException, InputException, ParseException, WitnessException,
    CapacityException, GenerationException, StructuralException,
)
from UCluster.Kernels import (
    kernelize, kernel_bound, CliqueFamily, PARTITION, COVER,
    partition_to_splits, cover_to_splits,
)
from UCluster.Managers import Config, WorkerPool, get_config, set_config
from UCluster.Oracle import oracle, oracle_dway_cut
from UCluster.Parsers import (
    read_instance, write_instance, read_witness, write_witness, save_witness
)
from UCluster.Solvers import solve_ucvd, solve_uced, solve_uced_dense
from UCluster.utils.generate import generate_planted

logger = logging.getLogger(__name__)

METHODS = ("auto", "fpt", "kernel+oracle", "oracle", "dense")

FPT_SOLVERS = {"ucvd": solve_ucvd, "uced": solve_uced}

CUT_ORACLES = {"bruteforce": oracle_dway_cut}

BOUND_TEXT = {
    "ucvd": "max(32k^3+40k^2+11k, 154k^3)",
    "uced": "6k",
    "ucea": "5k",
    "ucee": "45k^2+12k-1",
    "ucevs": "4k",
    "ucivs": "4k",
}

BENCH_COLUMNS = ("variant", "n", "m", "k", "kernel_n", "bound", "decided",
                 "time")

YES_TEXT = "YES"
NO_TEXT = "NO"


class RunReport(object):
    """Answer of one solve, with the verified witness, the kernel statistics
    when a kernel ran and the wall-clock time."""

    def __init__(self, answer, witness=None, kernel_stats=None, seconds=0.0,
                 method=None):
        self.answer = answer
        self.witness = witness
        self.kernel_stats = kernel_stats
        self.seconds = seconds
        self.method = method

    @property
    def decision(self):
        return YES_TEXT if self.answer else NO_TEXT

    def to_dict(self):
        return {
            "version": 1,
            "answer": self.decision,
            "method": self.method,
            "witness_size": None if self.witness is None else self.witness.size,
            "kernel": self.kernel_stats,
            "time": self.seconds,
        }

    def __repr__(self):
        return "RunReport({}, method={})".format(self.decision, self.method)


# witness lifting
def lift_witness(outcome, witness=None, family=None):
    """Witness for the input graph of a kernel outcome, built from the edits
    and parts the kernel committed plus a witness (or split family) of the
    reduced instance."""
    variant = outcome.variant
    g = outcome.original.graph
    info = VARIANTS[variant]
    reduced = outcome.instance.graph if outcome.instance is not None else None
    if info.kind == "vertex":
        items = set(outcome.forced_deletions)
        if witness is not None:
            items.update(reduced.labels[v] for v in witness.items)
        return Witness(variant, items)
    if info.kind == "edge":
        pairs = set()
        for u, v, _ in outcome.forced_edits:
            pairs ^= {norm_edge(u, v)}
        if witness is not None:
            pairs ^= set(reduced.root_edge(e) for e in witness.items)
        return Witness(variant, pairs)
    kind = PARTITION if variant == "ucevs" else COVER
    parts = [tuple(p) for p in outcome.family]
    if family is not None:
        parts.extend(
            tuple(reduced.labels[v] for v in p) for p in family.parts
        )
    fam = CliqueFamily(parts, kind)
    if kind == PARTITION:
        return Witness(variant, partition_to_splits(g, fam))
    return Witness(variant, cover_to_splits(g, fam))


def _exact(variant, g, k, workers=1, override=False):
    """(witness, family) from the FPT solver when there is one, else from the
    oracle."""
    if variant in FPT_SOLVERS:
        return FPT_SOLVERS[variant](g, k, workers=workers), None
    answer = oracle(variant, g, k, override=override)
    if not answer.decision:
        return None, None
    return answer.witness, answer.family


def _check_method(variant, method):
    if method not in METHODS:
        raise APIException("Unknown method: {}".format(method))
    if method == "fpt" and variant not in FPT_SOLVERS:
        raise APIException(
            "No fpt engine for {}; use auto, kernel+oracle or oracle".format(
                variant
            )
        )
    if method == "dense" and variant != "uced":
        raise APIException("The dense method only applies to uced")


def _through_kernel(instance, method, workers, override):
    outcome = kernelize(instance.variant, instance.graph, instance.k)
    stats = outcome.stats()
    if outcome.decided:
        if outcome.decision != "yes":
            return None, stats, True
        return lift_witness(outcome), stats, True
    red = outcome.instance
    if method == "auto":
        witness, family = _exact(red.variant, red.graph, red.k, workers,
                                 override)
    else:
        answer = oracle(red.variant, red.graph, red.k, override=override)
        witness = answer.witness if answer.decision else None
        family = answer.family
    if witness is None:
        return None, stats, False
    return lift_witness(outcome, witness, family), stats, False


def solve_instance(instance, method="auto", workers=1, override=False,
                   lower_guard=False, cut_oracle="bruteforce"):
    """Decide an instance with the chosen engine and return a RunReport whose
    witness, when present, has been verified against the instance."""
    _check_method(instance.variant, method)
    g, k, variant = instance.graph, instance.k, instance.variant
    start = time.time()
    stats = None
    if method in ("auto", "kernel+oracle"):
        witness, stats, decided = _through_kernel(
            instance, method, workers, override
        )
        if witness is not None:
            try:
                verify_witness(instance, witness)
            except WitnessException as e:
                # decided outcomes do not always carry a complete witness
                logger.info(
                    "lifted witness rejected ({}), re-solving {} exactly".format(
                        e, variant
                    )
                )
                witness, _ = _exact(variant, g, k, workers, override)
    elif method == "fpt":
        witness = FPT_SOLVERS[variant](g, k, workers=workers)
    elif method == "dense":
        witness = solve_uced_dense(g, k, CUT_ORACLES[cut_oracle],
                                   lower_guard=lower_guard, workers=workers)
    else:
        answer = oracle(variant, g, k, override=override)
        witness = answer.witness if answer.decision else None
    if witness is not None:
        verify_witness(instance, witness)
    report = RunReport(witness is not None, witness, stats,
                       time.time() - start, method)
    logger.info("{}: {} in {:.3f}s".format(instance, report, report.seconds))
    return report


def minimize(g, variant, k_max, **kwargs):
    """(k, report) for the smallest k <= k_max with a YES, or (None, report
    of k_max)."""
    report = None
    for k in range(0, k_max + 1):
        report = solve_instance(Instance(g, k, variant), **kwargs)
        if report.answer:
            return k, report
    return None, report


# sub-commands
def _emit_witness(path, witness):
    if path and witness is not None:
        save_witness(path, witness)
        logger.info("witness written to {}".format(path))


def cmd_solve(args):
    g = read_instance(args.instance)
    kwargs = dict(method=args.method, workers=args.workers,
                  override=args.override, lower_guard=args.test_lower_guard,
                  cut_oracle=args.cut_oracle)
    if args.minimize:
        best, report = minimize(g, args.variant, args.k, **kwargs)
        if best is not None:
            print("minimum k = {}".format(best), file=sys.stderr)
    else:
        report = solve_instance(Instance(g, args.k, args.variant), **kwargs)
    print(report.decision)
    _emit_witness(args.out, report.witness)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2)
    return 0


def cmd_kernel(args):
    g = read_instance(args.instance)
    outcome = kernelize(args.variant, g, args.k)
    stats = outcome.stats()
    stats["bound"] = kernel_bound(args.variant, args.k)
    stats["trace"] = outcome.trace_lines()
    if args.trace:
        for line in outcome.trace_lines():
            print(line, file=sys.stderr)
    if outcome.reduced and args.out:
        red = outcome.instance
        comments = [
            "reduced {} instance, k = {}".format(red.variant, red.k),
            "labels {}".format(",".join(str(v + 1) for v in red.graph.labels)),
        ]
        with open(args.out, "w") as fh:
            fh.write(write_instance(red.graph, comments))
    text = json.dumps(stats, indent=2)
    if args.stats:
        with open(args.stats, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_oracle(args):
    g = read_instance(args.instance)
    answer = oracle(args.variant, g, args.k, override=args.override)
    print(YES_TEXT if answer.decision else NO_TEXT)
    if answer.optimum is not None:
        print("optimum = {}".format(answer.optimum), file=sys.stderr)
    _emit_witness(args.out, answer.witness)
    return 0


def cmd_gen(args):
    g = generate_planted(args.cliques, args.size, args.add, args.delete,
                         args.seed)
    comments = [
        "planted {} x K{}, +{} -{} edges, PCG64 seed {}".format(
            args.cliques, args.size, args.add, args.delete, args.seed
        )
    ]
    text = write_instance(g, comments)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    g = read_instance(args.instance)
    w = read_witness(args.witness)
    k = args.k if args.k is not None else w.size
    try:
        c = verify_witness(Instance(g, k, w.variant), w)
    except WitnessException as e:
        print("invalid witness: {}".format(e), file=sys.stderr)
        return 1
    print(YES_TEXT)
    logger.info("witness leaves cliques of size {}".format(c))
    return 0


def bench_row(path, variant, k):
    """One CSV row for a kernel run on the instance at path."""
    g = read_instance(path)
    start = time.time()
    outcome = kernelize(variant, g, k)
    seconds = time.time() - start
    return {
        "variant": variant,
        "n": g.n,
        "m": g.m,
        "k": k,
        "kernel_n": outcome.instance.graph.n if outcome.reduced else "",
        "bound": kernel_bound(variant, k),
        "decided": outcome.decision or "",
        "time": "{:.6f}".format(seconds),
    }


def cmd_bench(args):
    paths = sorted(glob.glob(os.path.join(args.directory, args.pattern)))
    if not paths:
        raise InputException(
            "No files matching {} in {}".format(args.pattern, args.directory)
        )
    rows = WorkerPool(args.workers).map(
        bench_row, [(p, args.variant, args.k) for p in paths]
    )
    writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_COLUMNS,
                            lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
        if row["kernel_n"] != "" and row["kernel_n"] > row["bound"]:
            logger.error("kernel bound exceeded: {}".format(row))
    return 0


def cmd_variants(args):
    for name in sorted(VARIANTS):
        info = VARIANTS[name]
        print("{:6} {:45} {:6} fpt={:3} kernel<={}".format(
            name, info.title, info.kind, "yes" if info.fpt else "no",
            BOUND_TEXT[name]
        ))
    return 0


# argument parsing
def _add_common(parser, need_k=True):
    parser.add_argument(
        "instance", action="store", metavar="<instance>",
        help="Path of the instance file."
    )
    parser.add_argument(
        "--variant", action="store", required=True,
        choices=sorted(VARIANTS), metavar="<variant>",
        help="Problem variant: {}".format("|".join(sorted(VARIANTS)))
    )
    if need_k:
        parser.add_argument(
            "--k", action="store", type=int, required=True, metavar="<k>",
            help="Budget (upper bound when --minimize is given)."
        )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ucluster",
        formatter_class=argparse.RawTextHelpFormatter,
        description=(
            "Kernels, FPT solvers and brute-force oracles for the uniform "
            "cluster\nmodification problems."
        )
    )
    parser.add_argument("--version", action="version",
                        version="%(prog)s {}".format(__version__))
    parser.add_argument(
        "--log-level", action="store", default=None, metavar="<level>",
        help="Logging level name, e.g. DEBUG, INFO, WARNING (default from config)."
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="More logging: -v for INFO, -vv for DEBUG."
    )
    parser.add_argument(
        "--config", action="store", default=None, metavar="<path>",
        help="Config file (default $UCLUSTER_CONFIG or ~/.ucluster.json)."
    )
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    p = sub.add_parser("solve", help="Decide an instance.",
                       formatter_class=argparse.RawTextHelpFormatter)
    _add_common(p)
    p.add_argument(
        "--method", action="store", default="auto", choices=METHODS,
        help=(
            "auto:          kernel, then fpt (ucvd, uced) or oracle\n"
            "fpt:           FPT solver on the whole instance\n"
            "kernel+oracle: kernel, then the oracle on the reduced instance\n"
            "oracle:        brute force on the whole instance\n"
            "dense:         dense UCED algorithm"
        )
    )
    p.add_argument("--minimize", action="store_true", default=False,
                   help="Report the smallest k <= --k with a YES.")
    p.add_argument("--out", action="store", default=None, metavar="<path>",
                   help="Write the witness here.")
    p.add_argument("--report", action="store", default=None, metavar="<path>",
                   help="Write the JSON run report here.")
    p.add_argument("--override", action="store_true", default=False,
                   help="Run oracles past their size guards.")
    p.add_argument("--cut-oracle", action="store", default="bruteforce",
                   choices=sorted(CUT_ORACLES),
                   help="d-way cut engine (dense).")
    p.add_argument("--test-lower-guard", action="store_true", default=False,
                   help=argparse.SUPPRESS)
    p.add_argument("--workers", action="store", type=int, default=1,
                   metavar="<n>", help="Parallel workers (default 1).")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernel", help="Kernelize an instance.")
    _add_common(p)
    p.add_argument("--out", action="store", default=None, metavar="<path>",
                   help="Write the reduced instance here.")
    p.add_argument("--stats", action="store", default=None, metavar="<path>",
                   help="Write the JSON statistics here instead of stdout.")
    p.add_argument("--trace", action="store_true", default=False,
                   help="Print the rule trace on stderr.")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("oracle", help="Brute-force an instance.")
    _add_common(p)
    p.add_argument("--out", action="store", default=None, metavar="<path>",
                   help="Write the witness here.")
    p.add_argument("--override", action="store_true", default=False,
                   help="Run past the size guard.")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="Generate a planted instance.")
    p.add_argument("cliques", type=int, metavar="<cliques>",
                   help="Number of planted cliques.")
    p.add_argument("size", type=int, metavar="<size>",
                   help="Size of each planted clique.")
    p.add_argument("--add", type=int, default=0, metavar="<n>",
                   help="Random edges to add.")
    p.add_argument("--del", dest="delete", type=int, default=0,
                   metavar="<n>", help="Random edges to delete.")
    p.add_argument("--seed", type=int, default=0, metavar="<seed>",
                   help="PCG64 seed.")
    p.add_argument("--out", action="store", default=None, metavar="<path>",
                   help="Write the instance here instead of stdout.")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="Check a witness against an instance.")
    p.add_argument("instance", metavar="<instance>", help="Instance file.")
    p.add_argument("witness", metavar="<witness>", help="Witness file.")
    p.add_argument("--k", type=int, default=None, metavar="<k>",
                   help="Budget (default: the witness size).")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="Kernelize every instance in a directory.")
    p.add_argument("directory", metavar="<directory>",
                   help="Directory of instance files.")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS),
                   metavar="<variant>", help="Problem variant.")
    p.add_argument("--k", type=int, required=True, metavar="<k>",
                   help="Budget.")
    p.add_argument("--pattern", default="*.gr", metavar="<glob>",
                   help="File name pattern (default *.gr).")
    p.add_argument("--workers", type=int, default=None, metavar="<n>",
                   help="Parallel workers (default from config).")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("variants", help="List the problem variants.")
    p.set_defaults(func=cmd_variants)
    return parser


def setup_logging(args):
    level_name = args.log_level or get_config().log_level
    level = logging.getLevelName(level_name.upper())
    if not isinstance(level, int):
        raise APIException("Unknown log level: {}".format(level_name))
    level = max(logging.DEBUG, level - 10 * args.verbose)
    logging.basicConfig(
        stream=sys.stderr, level=level,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s"
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config is not None:
            set_config(Config(args.config))
        setup_logging(args)
        return args.func(args)
    except (ParseException, APIException, InputException,
            GenerationException) as e:
        print("ucluster: error: {}".format(e), file=sys.stderr)
        return 2
    except (WitnessException, CapacityException, StructuralException) as e:
        print("ucluster: {}".format(e), file=sys.stderr)
        return 1
    except (IOError, OSError) as e:
        print("ucluster: error: {}".format(e), file=sys.stderr)
        return 2
