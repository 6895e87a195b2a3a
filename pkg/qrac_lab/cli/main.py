import argparse
import sys
from typing import List, Optional

from qrac_lab import __version__
from qrac_lab.cli.CommandInterpreter import CommandInterpreter
from qrac_lab.constants import OutputFormat
from qrac_lab.model import ExperimentConfig
from qrac_lab.model.experiment_config import (
    CFG_ACTION,
    CFG_COMMAND,
    CFG_FORMAT,
    CFG_OUTPUT,
    CFG_PARAMETERS,
    CFG_SEED,
)
from qrac_lab.utils.config import setting


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TABLE.value,
        help="Rendering of the result."
    )
    common.add_argument("--output", default=None, help="Write the result to this file instead of stdout.")
    common.add_argument("--seed", type=int, default=None, help="Seed of numpy's default_rng (PCG64).")
    return common


def _scheme_options(parser: argparse.ArgumentParser):
    parser.add_argument("kind", help="Builtin scheme 2to1 or 3to1, or a JSON scheme file.")
    parser.add_argument("--tensor", type=int, default=1, help="Tensor power k of the (amplified) scheme.")
    parser.add_argument("--amplify", type=int, default=1, help="Odd number of copies for majority amplification.")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="qrac-lab",
        description="Random access codes, their classical counterparts and quantum finite automata."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest=CFG_COMMAND, required=True)

    qrac = commands.add_parser("qrac", parents=[common], help="Quantum random access codes.")
    _scheme_options(qrac)
    qrac.add_argument("--table", action="store_true", help="Print the success probability of every (x, i).")
    qrac.add_argument("--extract", default=None, help="Extract the bit string X with deferred measurements.")
    qrac.add_argument("--growth", action="store_true", help="Extraction failure of 1, 2 and 3 amplified 2to1 blocks.")
    qrac.add_argument("--samples", type=int, default=None, help="Estimate the success by sampling instead.")
    qrac.add_argument("--export", default=None, help="Write the scheme as a JSON document.")

    crac = commands.add_parser("crac", help="Classical random access codes.")
    crac_actions = crac.add_subparsers(dest=CFG_ACTION, required=True)
    build = crac_actions.add_parser("build", parents=[common], help="Build and verify a pad family code.")
    build.add_argument("m", type=int)
    build.add_argument("p", type=float)
    build.add_argument("--ell", type=int, default=None, help="Number of pads.")
    build.add_argument("--table", action="store_true")
    build.add_argument("--export", default=None, help="Write the verified build as JSON.")
    lower = crac_actions.add_parser("lower-bound", parents=[common], help="(1 - H(p)) m.")
    lower.add_argument("m", type=int)
    lower.add_argument("p", type=float)
    game = crac_actions.add_parser("two-into-one", parents=[common], help="Optimum of the classical 2 -> 1 game.")
    game.add_argument("--denominator", type=int, default=None, help="Grid of the decoder points.")
    covering = crac_actions.add_parser("covering", parents=[common], help="Greedy covering code.")
    covering.add_argument("m", type=int)
    covering.add_argument("radius", type=int)

    qfa = commands.add_parser("qfa", help="Quantum finite automata.")
    qfa_actions = qfa.add_subparsers(dest=CFG_ACTION, required=True)
    automaton_help = "Builtin ln:N, rfa:N, dfa:N or a JSON automaton file."
    horizon_help = "Longest word a DFA embedding decides; dfa:N defaults to N + 2, DFA files need it."
    run = qfa_actions.add_parser("run", parents=[common], help="Acceptance probability of a word.")
    run.add_argument("automaton", help=automaton_help)
    run.add_argument("word")
    run.add_argument("--horizon", type=int, default=None, help=horizon_help)
    restrict = qfa_actions.add_parser("restrict", parents=[common], help="r-restricted equivalent automaton.")
    restrict.add_argument("automaton", help=automaton_help)
    restrict.add_argument("r", type=int)
    restrict.add_argument("--export", default=None, help="Write the restricted automaton as JSON.")
    restrict.add_argument("--check-length", type=int, default=4, help="Compare acceptance on all words up to this length.")
    restrict.add_argument("--horizon", type=int, default=None, help=horizon_help)
    serial = qfa_actions.add_parser("serial", parents=[common], help="Serial encoding read off an automaton.")
    serial.add_argument("automaton", help=automaton_help)
    serial.add_argument("n", type=int)
    serial.add_argument("--noise", type=float, default=None, help="Rotate the final decision by this angle.")
    serial.add_argument("--horizon", type=int, default=None, help=horizon_help)
    sizes = qfa_actions.add_parser("sizes", parents=[common], help="Automaton sizes for L_n.")
    sizes.add_argument("n", type=int)

    bounds = commands.add_parser("bounds", help="Information bounds.")
    bounds_actions = bounds.add_subparsers(dest=CFG_ACTION, required=True)
    holevo = bounds_actions.add_parser("holevo", parents=[common], help="Holevo quantity and decoding information.")
    _scheme_options(holevo)
    for name in ("report", "serial-report"):
        report = bounds_actions.add_parser(name, parents=[common], help="Lower bound chain for (m, n, p).")
        report.add_argument("m", type=int)
        report.add_argument("n", type=int)
        report.add_argument("p", type=float)
    sweep = bounds_actions.add_parser("sweep", parents=[common], help="Bound chain over several m.")
    sweep.add_argument("p", type=float)
    sweep.add_argument("ms", type=int, nargs="+")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    values = vars(args).copy()
    command = values.pop(CFG_COMMAND)
    action = values.pop(CFG_ACTION, None)
    seed = setting("cli", "seed", int, values.pop(CFG_SEED))
    output = values.pop(CFG_OUTPUT)
    format = values.pop(CFG_FORMAT)
    return ExperimentConfig.from_dict({
        CFG_COMMAND: command,
        CFG_ACTION: action,
        CFG_PARAMETERS: values,
        CFG_SEED: seed,
        CFG_OUTPUT: output,
        CFG_FORMAT: format
    })


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return CommandInterpreter(sys.stdout, sys.stderr).execute(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
