from .state_vector import StateVector
from .unitary_op import UnitaryOp, subsystem_permutation
from .projective_measurement import ProjectiveMeasurement
from .density_matrix import DensityMatrix
from .outcome_distribution import OutcomeDistribution
from .success_table import SuccessTable
from .quantum_encoding import QuantumEncoding
from .qrac_scheme import QracScheme
from .serial_scheme import SerialScheme
from .classical_rac_scheme import ClassicalRacScheme
from .covering_code import CoveringCode
from .pad_family import Pad, PadFamily, PadFamilyBuild
from .decoder_point_pair import DecoderPointPair
from .qfa import Qfa
from .run_result import RunResult
from .dfa import Dfa
from .ensemble import Ensemble
from .experiment_config import ExperimentConfig
from .bound_report import BoundReport
from .extraction_report import ExtractionReport

__all__ = [
    StateVector,
    UnitaryOp,
    subsystem_permutation,
    ProjectiveMeasurement,
    DensityMatrix,
    OutcomeDistribution,
    SuccessTable,
    QuantumEncoding,
    QracScheme,
    SerialScheme,
    ClassicalRacScheme,
    CoveringCode,
    Pad,
    PadFamily,
    PadFamilyBuild,
    DecoderPointPair,
    Qfa,
    RunResult,
    Dfa,
    Ensemble,
    ExperimentConfig,
    BoundReport,
    ExtractionReport
]
