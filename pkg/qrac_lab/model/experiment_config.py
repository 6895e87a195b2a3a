from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from qrac_lab.constants import OutputFormat

CFG_COMMAND = "command"
CFG_ACTION = "action"
CFG_PARAMETERS = "parameters"
CFG_SEED = "seed"
CFG_OUTPUT = "output"
CFG_FORMAT = "format"


@dataclass
class ExperimentConfig:
    """ Everything a CLI invocation depends on

    :command: one of qrac, crac, qfa, bounds

    :action: the sub-action of the command (2to1, build, run, report, ...)

    :parameters: remaining command line parameters by name

    :seed: seed of numpy's default_rng (PCG64). Together with the other
        fields it fully determines every sampled value.

    :output: path to write the rendered result to, stdout if None

    :format: rendering of the result

          Possible values:
            * table ... default, aligned text
            * csv ... RFC-4180 with header row
            * json ... sorted keys, two-space indent
    """

    @staticmethod
    def from_dict(dict: Dict[str, Any]):
        return ExperimentConfig(
            command=dict[CFG_COMMAND],
            action=dict.get(CFG_ACTION),
            parameters=dict.get(CFG_PARAMETERS, {}),
            seed=int(dict.get(CFG_SEED, 0)),
            output=dict.get(CFG_OUTPUT),
            format=OutputFormat(dict.get(CFG_FORMAT, OutputFormat.TABLE.value))
        )

    command: str
    action: Optional[str] = None
    parameters: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    output: Optional[str] = None
    format: OutputFormat = field(default=OutputFormat.TABLE)

    def to_dict(self):
        return {
            CFG_COMMAND: self.command,
            CFG_ACTION: self.action,
            CFG_PARAMETERS: self.parameters,
            CFG_SEED: self.seed,
            CFG_OUTPUT: self.output,
            CFG_FORMAT: self.format.value
        }
