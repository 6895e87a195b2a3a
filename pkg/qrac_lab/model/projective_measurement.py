from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, Mapping, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space

from qrac_lab.model.unitary_op import UnitaryOp
from qrac_lab.utils.config import tolerance

Label = Hashable


@dataclass(frozen=True, eq=False)
class ProjectiveMeasurement():
    """Labelled orthogonal decomposition of the ambient space.

    Stored as a frame V together with a partition of the coordinates:
    the projector of a label is V^dag Pi V where Pi keeps the label's
    coordinates. Pairwise orthogonality and completeness follow from the
    unitarity of V and the partition property, both checked on
    construction.

    :frame: unitary taking the measurement basis to the computational one
    :outcomes: (label, coordinate indices) pairs partitioning
        range(frame.dimension)
    """
    frame :UnitaryOp
    outcomes :Tuple[Tuple[Label, Tuple[int, ...]], ...]

    def __post_init__(self):
        outcomes = tuple(
            (label, tuple(int(index) for index in indices))
            for label, indices in self.outcomes
        )
        object.__setattr__(self, "outcomes", outcomes)

        labels = [label for label, _ in outcomes]
        if len(set(labels)) != len(labels):
            raise ValueError(f"measurement labels must be unique, got {labels}")
        covered = np.sort(
            np.array(
                [index for _, indices in outcomes for index in indices],
                dtype=np.int64
            )
        )
        if not np.array_equal(covered, np.arange(self.frame.dimension)):
            raise ValueError(
                "measurement outcomes must partition the basis of the "
                "ambient space exactly once"
            )

    @staticmethod
    def from_partition(
            dimension: int,
            partition: Mapping[Label, Sequence[int]]
        ) -> "ProjectiveMeasurement":
        """Measurement in the computational basis, grouped by label"""
        return ProjectiveMeasurement(
            UnitaryOp.identity(dimension),
            tuple((label, tuple(indices)) for label, indices in partition.items())
        )

    @staticmethod
    def from_subspaces(
            subspaces: Sequence[Tuple[Label, np.ndarray]],
            atol: float = None
        ) -> "ProjectiveMeasurement":
        """Builds the measurement from an orthonormal basis per label.

        Each basis is given as a (dimension, k) array of column vectors.
        """
        columns = []
        outcomes = []
        offset = 0
        for label, basis in subspaces:
            basis = np.asarray(basis, dtype=complex)
            if basis.ndim == 1:
                basis = basis.reshape(-1, 1)
            columns.append(basis)
            outcomes.append((label, tuple(range(offset, offset + basis.shape[1]))))
            offset += basis.shape[1]
        stacked = np.hstack(columns)
        try:
            frame = UnitaryOp.from_matrix(stacked.conj().T, atol=tolerance(atol))
        except ValueError as e:
            raise ValueError(
                f"subspaces must be pairwise orthogonal orthonormal bases "
                f"summing to the identity ({e})"
            )
        return ProjectiveMeasurement(frame, tuple(outcomes))

    @staticmethod
    def binary_from_outcome_one(
            basis_one: np.ndarray,
            dimension: int = None,
            atol: float = None
        ) -> "ProjectiveMeasurement":
        """Binary 0/1 measurement given only the outcome-1 subspace; the
        outcome-0 subspace is its orthogonal complement."""
        basis_one = np.asarray(basis_one, dtype=complex)
        if basis_one.ndim == 1:
            basis_one = basis_one.reshape(-1, 1)
        if dimension is not None and basis_one.shape[0] != dimension:
            raise ValueError(
                f"outcome-1 basis has dimension {basis_one.shape[0]}, "
                f"expected {dimension}"
            )
        if basis_one.shape[1] == 0:
            complement = np.eye(basis_one.shape[0], dtype=complex)
        else:
            complement = null_space(basis_one.conj().T)
        return ProjectiveMeasurement.from_subspaces(
            [(0, complement), (1, basis_one)], atol=atol
        )

    @property
    def dimension(self) -> int:
        return self.frame.dimension

    @property
    def labels(self) -> Tuple[Label, ...]:
        return tuple(label for label, _ in self.outcomes)

    @cached_property
    def index_sets(self) -> Dict[Label, np.ndarray]:
        return {
            label: np.array(indices, dtype=np.int64)
            for label, indices in self.outcomes
        }

    def indices(self, label: Label) -> np.ndarray:
        if label not in self.index_sets:
            raise KeyError(f"unknown measurement outcome {label!r}")
        return self.index_sets[label]

    def rank(self, label: Label) -> int:
        return self.indices(label).size

    def basis(self, label: Label) -> np.ndarray:
        """Orthonormal basis (columns) of the label's subspace"""
        inverse = self.frame.inverse
        if inverse.is_sparse:
            return inverse.entries[:, self.indices(label)].toarray()
        return inverse.matrix[:, self.indices(label)]

    def projector(self, label: Label) -> np.ndarray:
        basis = self.basis(label)
        return basis @ basis.conj().T

    def project(self, label: Label, amplitudes: np.ndarray) -> np.ndarray:
        """Applies the label's projector along axis 0"""
        rotated = self.frame.apply_to(amplitudes)
        kept = np.zeros_like(rotated)
        indices = self.indices(label)
        kept[indices] = rotated[indices]
        return self.frame.inverse.apply_to(kept)

    def probability(self, label: Label, amplitudes: np.ndarray) -> np.ndarray:
        """Squared norm of the projection, per column for 2-D input"""
        rotated = self.frame.apply_to(amplitudes)
        return np.sum(np.abs(rotated[self.indices(label)]) ** 2, axis=0)

    def probabilities(self, amplitudes: np.ndarray) -> Dict[Label, float]:
        rotated = self.frame.apply_to(amplitudes)
        weights = np.abs(rotated) ** 2
        return {
            label: float(np.sum(weights[self.indices(label)]))
            for label in self.labels
        }

    def after(self, unitary: UnitaryOp) -> "ProjectiveMeasurement":
        """The measurement obtained by first applying unitary and then
        measuring self"""
        return ProjectiveMeasurement(self.frame.compose(unitary), self.outcomes)

    def relabeled(self, mapping: Mapping[Label, Label]) -> "ProjectiveMeasurement":
        """Renames labels; labels mapped to the same name are merged"""
        merged: Dict[Label, list] = {}
        for label, indices in self.outcomes:
            merged.setdefault(mapping.get(label, label), []).extend(indices)
        return ProjectiveMeasurement(
            self.frame,
            tuple((label, tuple(indices)) for label, indices in merged.items())
        )
