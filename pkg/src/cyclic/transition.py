"""Transition matrices of cycles and of (cycle, winding vector) pairs.

Entries are Python ints throughout; powers of these matrices overflow
machine words quickly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cycles import Cycle, descent
from .errors import InvariantError

Matrix = tuple[tuple[int, ...], ...]


def cyclic_interval(a: int, b: int, q: int) -> list[int]:
    """Half-open cyclic interval ``[a, b)`` in Z/qZ, represented in ``1..q``.

    >>> cyclic_interval(4, 2, 5)
    [4, 5, 1]
    """
    out = []
    i = a
    while i != b:
        out.append(i)
        i = i % q + 1
    return out


@dataclass(frozen=True)
class TransitionMatrix:
    """Square non-negative integer matrix with constant column sums."""

    entries: Matrix
    column_sum: int

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        q = len(entries)
        if any(len(row) != q for row in entries):
            raise ValueError("matrix must be square")
        for j in range(q):
            s = sum(entries[i][j] for i in range(q))
            if s != self.column_sum:
                raise ValueError(f"column {j + 1} sums to {s}, expected {self.column_sum}")

    @property
    def q(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.q))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def to_json(self) -> list[list[str]]:
        return matrix_to_json(self.entries)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    """Rows of decimal strings, since entries can exceed the JSON number range."""
    return [[str(v) for v in row] for row in m]


def matrix_from_json(rows) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def transition_matrix(sigma: Cycle) -> TransitionMatrix:
    """``a_ij = 1`` iff ``j`` lies in the cyclic interval ``[sigma(i), sigma(i+1))``."""
    q = sigma.q
    rows = []
    for i in range(1, q + 1):
        row = [0] * q
        for j in cyclic_interval(sigma(i), sigma(i + 1), q):
            row[j - 1] = 1
        rows.append(tuple(row))
    return TransitionMatrix(tuple(rows), descent(sigma))


@dataclass(frozen=True)
class Signature:
    bits: tuple[int, ...]

    @property
    def marked(self) -> tuple[int, ...]:
        """Indices ``i_1 < ... < i_{d-1}`` of the marked intervals (1-based)."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __iter__(self):
        return iter(self.bits)


def signature(sigma: Cycle) -> Signature:
    return Signature(transition_matrix(sigma).diagonal())


def signature_rotate(sig: Signature | Sequence[int], j: int) -> Signature:
    """Left rotation by ``j``: the signature of ``rho**(-j) sigma rho**j``."""
    bits = tuple(sig)
    j %= len(bits)
    return Signature(bits[j:] + bits[:j])


def pair_matrix(sigma: Cycle, p: Sequence[int]) -> TransitionMatrix:
    """``B = A + P`` where ``P`` has every column equal to ``p``."""
    p = tuple(int(v) for v in p)
    if len(p) != sigma.q:
        raise ValueError(f"winding vector has length {len(p)}, expected {sigma.q}")
    if any(v < 0 for v in p):
        raise ValueError(f"winding vector has a negative component: {p}")
    a = transition_matrix(sigma)
    rows = tuple(tuple(v + p[i] for v in row) for i, row in enumerate(a.entries))
    return TransitionMatrix(rows, a.column_sum + sum(p))


def identity(q: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(q)) for i in range(q))


def matmul(x: Matrix, y: Matrix) -> Matrix:
    cols = list(zip(*y))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in x)


def matrix_power(m: TransitionMatrix | Matrix, n: int) -> Matrix:
    """Exact ``m**n`` by binary exponentiation."""
    if n < 0:
        raise ValueError("n must be non-negative")
    base = m.entries if isinstance(m, TransitionMatrix) else tuple(map(tuple, m))
    result = identity(len(base))
    while n:
        if n & 1:
            result = matmul(result, base)
        n >>= 1
        if n:
            base = matmul(base, base)
    return result


def is_positive(m: Matrix) -> bool:
    return all(v > 0 for row in m for v in row)


def regularity_index(sigma: Cycle) -> int | None:
    """Least ``n >= 1`` with ``A**n`` entrywise positive; ``None`` for rotation cycles."""
    a = transition_matrix(sigma)
    if a.column_sum == 1:
        return None
    power = a.entries
    for n in range(1, sigma.q + 1):
        if is_positive(power):
            return n
        power = matmul(power, a.entries)
    raise InvariantError(f"A^q is not positive for {sigma} with descent {a.column_sum}")
