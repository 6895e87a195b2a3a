import sys
from itertools import product
from typing import Callable, Dict

import numpy as np

from qrac_lab.bounds import (
    bound_sweep,
    bit_informations,
    holevo_chi,
    quantum_bound_report,
    scheme_ensemble,
    serial_bound_report,
)
from qrac_lab.cli.builtins import as_qfa, builtin_horizon, resolve_automaton, resolve_scheme
from qrac_lab.cli.CommandResult import CommandResult
from qrac_lab.cli.OutputWriter import OutputWriter
from qrac_lab.constants import ExitCodes, Symbols
from qrac_lab.crac import (
    best_two_into_one,
    build_pad_family,
    classical_lower_bound,
    exact_success,
    existential_code_size_bound,
    greedy_covering_code,
    length_comparison,
    pad_scheme,
)
from qrac_lab.documents import qfa_to_document, scheme_to_document
from qrac_lab.errors import DocumentFormatError, InfeasibleParametersError, VerificationError
from qrac_lab.model import BoundReport, Dfa, ExperimentConfig, Qfa
from qrac_lab.qfa import (
    dfa_as_qfa,
    dfa_Ln,
    halted_before,
    qfa_size_report,
    restrict,
    rfa_Ln,
    run,
    serial_from_qfa,
    with_decision_noise,
)
from qrac_lab.qrac import (
    error_growth_sweep,
    extraction_report,
    monte_carlo_success,
    success_probability,
)
from qrac_lab.utils.ios import write_file
from qrac_lab.utils.logging import get_logger

MAX_SERIAL_TABLE_BITS = 8


def _table_rows(table):
    return ["x", "i", "probability"], [[x, i, p] for x, i, p in table.rows()]


def _export(document, path):
    if path:
        write_file(document, path)
        get_logger(__name__).info(f"exported document to {path}")


def _report_result(report: BoundReport) -> CommandResult:
    summary = report.to_dict()
    notes = summary.pop("notes")
    return CommandResult(
        title=f"{report.kind} bound report",
        summary=summary,
        header=["note"],
        rows=[[note] for note in notes]
    )


class CommandInterpreter:
    """Dispatches a parsed command line to the library and maps its
    exceptions to exit codes"""

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        self.command_mapping: Dict[str, Callable[[ExperimentConfig], CommandResult]] = {
            "qrac": self.cmd_qrac,
            "crac": self.cmd_crac,
            "qfa": self.cmd_qfa,
            "bounds": self.cmd_bounds,
        }

    def execute(self, config: ExperimentConfig) -> int:
        logger = get_logger(__name__)
        logger.debug(f"executing {config.to_dict()}")
        try:
            handler = self.command_mapping[config.command]
            result = handler(config)
            OutputWriter(config.format, config.output).write(result, self.stdout)
            return ExitCodes.SUCCESS
        except InfeasibleParametersError as e:
            return self._fail(ExitCodes.INFEASIBLE_PARAMETERS, "infeasible parameters", e)
        except VerificationError as e:
            return self._fail(ExitCodes.VERIFICATION_FAILED, "verification failed", e)
        except DocumentFormatError as e:
            return self._fail(ExitCodes.INPUT_FORMAT, "malformed input", e)
        except OSError as e:
            return self._fail(ExitCodes.INPUT_FORMAT, "cannot read input", e)
        except ValueError as e:
            return self._fail(ExitCodes.INFEASIBLE_PARAMETERS, "invalid parameters", e)

    def _fail(self, code: int, what: str, error: Exception) -> int:
        get_logger(__name__).debug(f"{what}: {error!r}")
        self.stderr.write(f"error: {what}: {error}\n")
        return code

    # qrac

    def cmd_qrac(self, config: ExperimentConfig) -> CommandResult:
        params = config.parameters
        scheme = resolve_scheme(params["kind"], params.get("tensor", 1), params.get("amplify", 1))
        _export(scheme_to_document(scheme), params.get("export"))

        if params.get("growth"):
            copies = params.get("amplify", 1)
            sweep = error_growth_sweep(copies=copies if copies > 1 else 3)
            return CommandResult(
                title="extraction failure growth",
                summary={"slope": sweep["slope"]},
                header=["k", "m", "epsilon", "failure", "bound"],
                rows=[[row[key] for key in ("k", "m", "epsilon", "failure", "bound")] for row in sweep["rows"]]
            )

        summary = {"scheme": scheme.name, "m": scheme.m, "n": scheme.n}
        samples = params.get("samples")
        if samples:
            summary["estimated_success"] = monte_carlo_success(scheme, samples, config.seed)
            summary["samples"] = samples
            return CommandResult(title=f"qrac {params['kind']}", summary=summary)

        p, table = success_probability(scheme)
        summary["min_success"] = p
        summary["error"] = table.error
        result = CommandResult(title=f"qrac {params['kind']}", summary=summary)

        if params.get("extract"):
            report = extraction_report(scheme, params["extract"])
            summary.update({
                "x": report.x,
                "failure": report.failure,
                "failure_bound": report.failure_bound,
                "hybrid_distance": report.hybrid_distance,
                "hybrid_bound": report.hybrid_bound,
                "within_bounds": report.within_bounds
            })
            result.header = ["a", "probability"]
            result.rows = [[a, q] for a, q in sorted(report.distribution.to_dict().items())]
        elif params.get("table"):
            result.header, result.rows = _table_rows(table)
        return result

    # crac

    def cmd_crac(self, config: ExperimentConfig) -> CommandResult:
        params = config.parameters
        action = config.action
        if action == "lower-bound":
            m, p = params["m"], params["p"]
            return CommandResult(
                title="classical lower bound",
                summary={"m": m, "p": p, "min_n": classical_lower_bound(m, p)}
            )
        if action == "two-into-one":
            optimum, witness = best_two_into_one(params.get("denominator"))
            points = witness["decoder_points"]
            return CommandResult(
                title="classical 2 -> 1 game",
                summary={
                    "optimum": optimum,
                    "witness_p0": list(points.p0),
                    "witness_p1": list(points.p1),
                    "witness_value": witness["value"],
                    "missed_quarters": witness["missed_quarters"]
                }
            )
        if action == "covering":
            m, radius = params["m"], params["radius"]
            code = greedy_covering_code(m, radius)
            return CommandResult(
                title="greedy covering code",
                summary={"m": m, "radius": radius, "size": code.size},
                header=["codeword"],
                rows=[[word] for word in code.codewords]
            )

        m, p = params["m"], params["p"]
        build = build_pad_family(m, p, target_ell=params.get("ell"), seed=config.seed)
        _export(build, params.get("export"))
        scheme = pad_scheme(build.family, build.code)
        minimum, table = exact_success(scheme)
        lengths = length_comparison(build, p)
        result = CommandResult(
            title=f"crac build m={m} p={p}",
            summary={
                "m": m,
                "p": p,
                "seed": config.seed,
                "ell": build.family.ell,
                "code_size": build.code.size,
                "radius": build.code.radius,
                "attempts": build.attempts,
                "n": scheme.n,
                "min_success": minimum,
                "spread": build.spread,
                "deviation_bound": build.deviation_bound,
                "log_length": lengths["log_length"],
                "lower_bound": lengths["lower_bound"],
                "upper_bound": lengths["upper_bound"],
                "existential_code_size": existential_code_size_bound(m, p)
            }
        )
        if params.get("table"):
            result.header, result.rows = _table_rows(table)
        return result

    # qfa

    def cmd_qfa(self, config: ExperimentConfig) -> CommandResult:
        params = config.parameters
        action = config.action
        if action == "sizes":
            n = params["n"]
            rows = []
            for automaton in (dfa_Ln(n), rfa_Ln(n), dfa_as_qfa(dfa_Ln(n), n + 2)):
                states, qubits = qfa_size_report(automaton)
                rows.append([automaton.name, states, qubits])
            return CommandResult(
                title=f"automata for L_{n}",
                summary={"n": n, "dfa_formula": 2 * n + 3},
                header=["automaton", "states", "qubits"],
                rows=rows
            )

        automaton = resolve_automaton(params["automaton"])
        if action == "run":
            word = params["word"]
            a = as_qfa(params["automaton"], automaton, params.get("horizon"), len(word) + 1)
            result = run(a, word)
            return CommandResult(
                title=f"run {a.name or params['automaton']} on {word!r}",
                summary={
                    "p_accept": result.p_accept,
                    "p_reject": result.p_reject,
                    "residual": result.residual
                },
                header=["step", "symbol", "halted"],
                rows=[
                    [k, symbol, halted]
                    for k, (symbol, halted) in enumerate(
                        zip((Symbols.CENT, *word, Symbols.DOLLAR), result.halting_profile)
                    )
                ]
            )

        if action == "restrict":
            r = params["r"]
            horizon = params.get("horizon")
            if isinstance(automaton, Dfa) and horizon is None:
                horizon = builtin_horizon(params["automaton"])
            a = as_qfa(params["automaton"], automaton, horizon)
            b = restrict(a, r)
            _export(qfa_to_document(b), params.get("export"))
            expected = a.dimension + 2 * (r + 2) * (len(a.accepting) + len(a.rejecting))
            words = [
                "".join(letters)
                for length in range(params.get("check_length", 4) + 1)
                for letters in product(a.alphabet, repeat=length)
            ]
            accepted = {word: run(b, word).p_accept for word in words}
            summary = {
                "states": a.dimension,
                "restricted_states": b.dimension,
                "expected_states": expected,
                "state_count_ok": b.dimension == expected,
                "halted_within_r": halted_before(b, r) if set(Symbols.LN_ALPHABET) <= set(b.alphabet) else None,
                "words_checked": len(words),
                "max_accept_difference": max(
                    abs(run(a, word).p_accept - accepted[word]) for word in words
                )
            }
            if isinstance(automaton, Dfa):
                # the embedding rejects words longer than its horizon
                decided = [word for word in words if len(word) <= horizon]
                summary["horizon"] = horizon
                summary["max_language_difference"] = max(
                    abs(float(automaton.accepts(word)) - accepted[word]) for word in decided
                )
            return CommandResult(
                title=f"restrict {params['automaton']} r={r}",
                summary=summary
            )

        # serial
        n = params["n"]
        if n > MAX_SERIAL_TABLE_BITS:
            raise InfeasibleParametersError(
                f"serial tables are printed for n <= {MAX_SERIAL_TABLE_BITS}, got n={n}"
            )
        a: Qfa = as_qfa(params["automaton"], automaton, params.get("horizon"), n + 2)
        if params.get("noise"):
            a = with_decision_noise(a, params["noise"])
        scheme = serial_from_qfa(a, n)
        p, table = success_probability(scheme)
        header, rows = _table_rows(table)
        return CommandResult(
            title=f"serial encoding from {params['automaton']}",
            summary={
                "m": scheme.m,
                "n": scheme.n,
                "states": a.dimension,
                "min_success": p,
                "expected_min": float(np.cos(params.get("noise") or 0.0) ** 2)
            },
            header=header,
            rows=rows
        )

    # bounds

    def cmd_bounds(self, config: ExperimentConfig) -> CommandResult:
        params = config.parameters
        action = config.action
        if action == "report":
            return _report_result(quantum_bound_report(params["m"], params["n"], params["p"]))
        if action == "serial-report":
            return _report_result(serial_bound_report(params["m"], params["n"], params["p"]))
        if action == "sweep":
            header, rows = bound_sweep(params["ms"], params["p"])
            return CommandResult(
                title=f"bound sweep p={params['p']}",
                summary={"p": params["p"]},
                header=header,
                rows=rows
            )

        scheme = resolve_scheme(params["kind"], params.get("tensor", 1), params.get("amplify", 1))
        chi = holevo_chi(scheme_ensemble(scheme))
        informations = bit_informations(scheme)
        return CommandResult(
            title=f"holevo {params['kind']}",
            summary={
                "m": scheme.m,
                "n": scheme.n,
                "chi": chi,
                "information_sum": sum(informations)
            },
            header=["i", "information"],
            rows=[[i, value] for i, value in enumerate(informations)]
        )
