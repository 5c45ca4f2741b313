"""
Matrix-free symmetric Toeplitz, Kronecker-sum and multi-level Toeplitz
operators.

Vectors of length N = n_1 * ... * n_m are laid out with the first index
fastest, so level i acts along axis i of `x.reshape(dims, order="F")`.
Every `matvec` accepts a vector of length N or an (N, k) block of columns.
"""

from math import prod
from typing import Sequence

import numpy as np
import scipy.fft
import scipy.linalg

from config import config
from errors import ArgumentError, check_dense_cap


def to_grid(x, dims: Sequence[int]) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    size = prod(dims)
    if x.ndim not in (1, 2) or x.shape[0] != size:
        raise ArgumentError(
            f"Expected a vector of length {size} or an ({size}, k) block, "
            f"got shape {x.shape}"
        )
    return x.reshape(tuple(dims) + x.shape[1:], order="F")


def from_grid(grid: np.ndarray, dims: Sequence[int]) -> np.ndarray:
    size = prod(dims)
    if grid.ndim == len(dims):
        return grid.reshape(size, order="F")
    return grid.reshape(size, grid.shape[-1], order="F")


def _along(values: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = -1
    return values.reshape(shape)


def level_kron(dims: Sequence[int], axis: int, block: np.ndarray) -> np.ndarray:
    """I (x) block (x) I, with `block` acting on level `axis`."""
    slower = np.eye(prod(dims[axis + 1 :]))
    faster = np.eye(prod(dims[:axis]))
    return np.kron(slower, np.kron(block, faster))


class SymToeplitz1D:
    def __init__(self, column):
        column = np.asarray(column, dtype=np.float64)
        if column.ndim != 1 or column.size == 0:
            raise ArgumentError("A Toeplitz first column must be a non-empty vector")
        self.column = column
        self.n = column.size
        self.dims = (self.n,)
        # Circulant embedding of order 2n: [t_0 .. t_{n-1}, 0, t_{n-1} .. t_1]
        embedding = np.concatenate([column, [0.0], column[:0:-1]])
        self.spectrum = scipy.fft.rfft(embedding)

    @property
    def shape(self):
        return (self.n, self.n)

    def apply(self, grid: np.ndarray, axis: int = 0) -> np.ndarray:
        size = 2 * self.n
        transformed = scipy.fft.rfft(grid, n=size, axis=axis)
        transformed *= _along(self.spectrum, axis, grid.ndim)
        result = scipy.fft.irfft(transformed, n=size, axis=axis)
        return np.take(result, np.arange(self.n), axis=axis)

    def matvec(self, x):
        return from_grid(self.apply(to_grid(x, self.dims)), self.dims)

    __matmul__ = matvec

    def dense(self) -> np.ndarray:
        return scipy.linalg.toeplitz(self.column)


class KronSumOperator:
    """A = sum_i I (x) w_i A_{n_i} (x) I."""

    def __init__(self, blocks: Sequence[SymToeplitz1D], weights: Sequence[float]):
        if len(blocks) == 0 or len(blocks) != len(weights):
            raise ArgumentError("Each level needs one Toeplitz block and one weight")
        if any(w <= 0 for w in weights):
            raise ArgumentError(f"Level weights must be positive, got {list(weights)}")
        self.blocks = list(blocks)
        self.weights = np.asarray(weights, dtype=np.float64)
        self.dims = tuple(block.n for block in self.blocks)
        self.size = prod(self.dims)

    @classmethod
    def from_columns(cls, columns, weights):
        return cls([SymToeplitz1D(c) for c in columns], weights)

    @property
    def levels(self) -> int:
        return len(self.blocks)

    @property
    def shape(self):
        return (self.size, self.size)

    def weighted_columns(self):
        return [w * block.column for w, block in zip(self.weights, self.blocks)]

    def apply(self, grid: np.ndarray) -> np.ndarray:
        result = np.zeros_like(grid)
        for axis, (weight, block) in enumerate(zip(self.weights, self.blocks)):
            result += weight * block.apply(grid, axis=axis)
        return result

    def matvec(self, x):
        return from_grid(self.apply(to_grid(x, self.dims)), self.dims)

    __matmul__ = matvec

    def coefficient_tensor(self) -> np.ndarray:
        """The same operator written as a multi-level Toeplitz coefficient tensor."""
        tensor = np.zeros(self.dims, dtype=np.float64)
        for axis, column in enumerate(self.weighted_columns()):
            index = [0] * self.levels
            index[axis] = slice(None)
            tensor[tuple(index)] += column
        return tensor

    def dense(self) -> np.ndarray:
        return sum(
            level_kron(self.dims, axis, w * block.dense())
            for axis, (w, block) in enumerate(zip(self.weights, self.blocks))
        )


class MultilevelToeplitz:
    def __init__(self, coefficients):
        coefficients = np.asarray(coefficients, dtype=np.float64)
        if coefficients.ndim == 0 or coefficients.size == 0:
            raise ArgumentError("Coefficient tensor must have at least one level")
        self.coefficients = coefficients
        self.dims = coefficients.shape
        self.size = coefficients.size

        embedding = coefficients
        for axis, n in enumerate(self.dims):
            zero = np.zeros_like(np.take(embedding, [0], axis=axis))
            tail = np.flip(np.take(embedding, np.arange(1, n), axis=axis), axis=axis)
            embedding = np.concatenate([embedding, zero, tail], axis=axis)
        self.spectrum = scipy.fft.rfftn(embedding)

    @property
    def levels(self) -> int:
        return len(self.dims)

    @property
    def shape(self):
        return (self.size, self.size)

    def apply(self, grid: np.ndarray) -> np.ndarray:
        axes = tuple(range(self.levels))
        padded = tuple(2 * n for n in self.dims)
        transformed = scipy.fft.rfftn(grid, s=padded, axes=axes)
        spectrum = self.spectrum
        if grid.ndim > self.levels:
            spectrum = spectrum[..., np.newaxis]
        result = scipy.fft.irfftn(transformed * spectrum, s=padded, axes=axes)
        return result[tuple(slice(0, n) for n in self.dims)]

    def matvec(self, x):
        return from_grid(self.apply(to_grid(x, self.dims)), self.dims)

    __matmul__ = matvec

    def dense(self) -> np.ndarray:
        m = self.levels
        index = []
        for axis, n in enumerate(self.dims):
            distance = np.abs(np.subtract.outer(np.arange(n), np.arange(n)))
            shape = [1] * (2 * m)
            shape[axis] = n
            shape[m + axis] = n
            index.append(distance.reshape(shape))
        return self.coefficients[tuple(index)].reshape(self.size, self.size, order="F")


def _check_length(op, x):
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] != op.shape[0]:
        raise ArgumentError(
            f"Vector length {x.shape} does not match operator order {op.shape[0]}"
        )


def toeplitz_matvec(T: SymToeplitz1D, x) -> np.ndarray:
    _check_length(T, x)
    return T.matvec(x)


def kron_sum_matvec(A: KronSumOperator, x) -> np.ndarray:
    _check_length(A, x)
    return A.matvec(x)


def multilevel_matvec(B: MultilevelToeplitz, x) -> np.ndarray:
    _check_length(B, x)
    return B.matvec(x)


def materialize_dense(op, cap: int = None) -> np.ndarray:
    check_dense_cap(op.shape[0], config.dense_cap if cap is None else cap)
    return op.dense()
