"""Exact integer matrix arithmetic for transfer systems."""

from typing import List, Sequence

from ..exceptions import BadParametersError

Matrix = List[List[int]]


def identity(size: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in columns] for row in a]


def mat_pow(m: Sequence[Sequence[int]], k: int) -> Matrix:
    """``m ** k`` by repeated squaring."""
    if k < 0:
        raise BadParametersError(f"negative exponent {k}")
    result = identity(len(m))
    base = [list(row) for row in m]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def vec_mat(v: Sequence[int], m: Sequence[Sequence[int]]) -> List[int]:
    """Row vector times matrix."""
    return [sum(x * row[j] for x, row in zip(v, m)) for j in range(len(m[0]) if m else 0)]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))
