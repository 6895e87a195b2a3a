from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np
from scipy import sparse

from qrac_lab.utils.config import tolerance


@dataclass(frozen=True, eq=False)
class UnitaryOp():
    """Square unitary operator.

    Either given by its entries or, for reversible automata, by the images
    of the basis states (U|j> = |images[j]>). Entries may be a dense array
    or a scipy sparse matrix; sparse entries stay sparse through inverse,
    compose, kron and padding as long as no dense operand is involved.
    Unitarity is checked on construction in every case.
    """
    entries :Optional[object] = None
    images :Optional[np.ndarray] = None
    atol :float = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "atol", tolerance(self.atol))
        if (self.entries is None) == (self.images is None):
            raise ValueError("UnitaryOp needs exactly one of entries or images")

        if self.images is not None:
            images = np.array(self.images, dtype=np.int64).reshape(-1)
            if not np.array_equal(np.sort(images), np.arange(images.size)):
                raise ValueError(
                    "permutation images must be a bijection on the basis "
                    "states"
                )
            images.setflags(write=False)
            object.__setattr__(self, "images", images)
            return

        if sparse.issparse(self.entries):
            entries = sparse.csr_matrix(self.entries, dtype=complex)
            if entries.shape[0] != entries.shape[1]:
                raise ValueError(
                    f"UnitaryOp entries must be a square matrix, got shape "
                    f"{entries.shape}"
                )
            gram = entries.conj().T @ entries - sparse.identity(entries.shape[0])
            deviation = abs(gram).max() if gram.nnz else 0.0
        else:
            entries = np.array(self.entries, dtype=complex)
            if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
                raise ValueError(
                    f"UnitaryOp entries must be a square matrix, got shape "
                    f"{entries.shape}"
                )
            deviation = np.abs(
                entries.conj().T @ entries - np.eye(entries.shape[0])
            ).max(initial=0.0)
            entries.setflags(write=False)
        if deviation > self.atol:
            raise ValueError(
                f"UnitaryOp is not unitary: max |U^dag U - I| = {deviation:.3e}"
            )
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def identity(dimension: int) -> "UnitaryOp":
        return UnitaryOp(images=np.arange(dimension))

    @staticmethod
    def from_permutation(images: Sequence[int]) -> "UnitaryOp":
        return UnitaryOp(images=images)

    @staticmethod
    def from_matrix(entries, atol: float = None) -> "UnitaryOp":
        return UnitaryOp(entries=entries, atol=atol)

    @property
    def dimension(self) -> int:
        if self.images is not None:
            return self.images.size
        return self.entries.shape[0]

    @property
    def is_permutation(self) -> bool:
        return self.images is not None

    @property
    def is_sparse(self) -> bool:
        return self.images is None and sparse.issparse(self.entries)

    @cached_property
    def matrix(self) -> np.ndarray:
        if self.is_sparse:
            matrix = self.entries.toarray()
        elif self.images is None:
            return self.entries
        else:
            matrix = np.zeros((self.dimension, self.dimension), dtype=complex)
            matrix[self.images, np.arange(self.dimension)] = 1.0
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def sparse_matrix(self) -> sparse.csr_matrix:
        if self.is_sparse:
            return self.entries
        if self.images is None:
            return sparse.csr_matrix(self.entries)
        columns = np.arange(self.dimension)
        return sparse.csr_matrix(
            (np.ones(self.dimension, dtype=complex), (self.images, columns)),
            shape=(self.dimension, self.dimension)
        )

    def apply_to(self, amplitudes: np.ndarray) -> np.ndarray:
        """Applies the operator along axis 0, so a matrix of column states
        is transformed column by column."""
        amplitudes = np.asarray(amplitudes, dtype=complex)
        if amplitudes.shape[0] != self.dimension:
            raise ValueError(
                f"dimension mismatch: operator {self.dimension}, "
                f"state {amplitudes.shape[0]}"
            )
        if self.images is None:
            return np.asarray(self.entries @ amplitudes)
        result = np.empty_like(amplitudes)
        result[self.images] = amplitudes
        return result

    @cached_property
    def inverse(self) -> "UnitaryOp":
        if self.images is not None:
            return UnitaryOp(images=np.argsort(self.images))
        return UnitaryOp(entries=self.entries.conj().T, atol=self.atol)

    def _keeps_sparse(self, other: "UnitaryOp") -> bool:
        dense = [
            op for op in (self, other)
            if op.images is None and not op.is_sparse
        ]
        return not dense

    def compose(self, other: "UnitaryOp") -> "UnitaryOp":
        """self . other, i.e. other is applied first"""
        if self.dimension != other.dimension:
            raise ValueError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}"
            )
        if self.images is not None and other.images is not None:
            return UnitaryOp(images=self.images[other.images])
        if self._keeps_sparse(other):
            return UnitaryOp(
                entries=self.sparse_matrix @ other.sparse_matrix,
                atol=self.atol
            )
        return UnitaryOp(entries=self.matrix @ other.matrix, atol=self.atol)

    def kron(self, other: "UnitaryOp") -> "UnitaryOp":
        """self (x) other, self acting on the more significant subsystem"""
        if self.images is not None and other.images is not None:
            images = (
                self.images[:, None] * other.dimension + other.images[None, :]
            )
            return UnitaryOp(images=images.reshape(-1))
        if self._keeps_sparse(other):
            return UnitaryOp(
                entries=sparse.kron(self.sparse_matrix, other.sparse_matrix),
                atol=self.atol
            )
        return UnitaryOp(entries=np.kron(self.matrix, other.matrix), atol=self.atol)

    def padded(self, dimension: int) -> "UnitaryOp":
        """Direct sum with the identity on the extra coordinates"""
        extra = dimension - self.dimension
        if extra < 0:
            raise ValueError(
                f"cannot pad dimension {self.dimension} down to {dimension}"
            )
        if self.images is not None:
            return UnitaryOp(
                images=np.concatenate(
                    [self.images, np.arange(self.dimension, dimension)]
                )
            )
        if self.is_sparse:
            return UnitaryOp(
                entries=sparse.block_diag(
                    [self.entries, sparse.identity(extra, dtype=complex)]
                ),
                atol=self.atol
            )
        entries = np.eye(dimension, dtype=complex)
        entries[:self.dimension, :self.dimension] = self.entries
        return UnitaryOp(entries=entries, atol=self.atol)

    def permute_subsystems(
            self,
            dims: Sequence[int],
            order: Sequence[int]
        ) -> "UnitaryOp":
        """Conjugates the operator with the reordering of tensor factors
        that puts old subsystem order[k] at position k."""
        shuffle = subsystem_permutation(dims, order)
        return shuffle.compose(self).compose(shuffle.inverse)


def subsystem_permutation(dims: Sequence[int], order: Sequence[int]) -> UnitaryOp:
    """Permutation operator moving old tensor factor order[k] to position k"""
    dims = tuple(int(d) for d in dims)
    total = int(np.prod(dims))
    old_index = np.arange(total).reshape(dims).transpose(tuple(order)).reshape(-1)
    images = np.empty(total, dtype=np.int64)
    images[old_index] = np.arange(total)
    return UnitaryOp(images=images)
