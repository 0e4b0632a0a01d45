"""Exact stationary vectors of transition matrices.

Solves ``M l = c l`` with ``c`` the common column sum, over the rationals.
There is no floating point anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InvariantError
from .transition import Matrix, TransitionMatrix, matrix_power

RationalVector = tuple[Fraction, ...]


def _require_regular(m: TransitionMatrix):
    if m.column_sum < 2:
        raise ValueError(
            "column sum must be >= 2; a rotation cycle's matrix is a permutation "
            "matrix (use a pair matrix B = A + P with a non-zero winding vector)"
        )


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination on a square non-singular system.

    Pivots on the first non-zero entry of each column.
    """
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise InvariantError("singular system: eigenspace is not one-dimensional")
        aug[col], aug[piv] = aug[piv], aug[col]
        pivot_row = aug[col]
        inv = 1 / pivot_row[col]
        for c in range(col, n + 1):
            pivot_row[c] *= inv
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                row = aug[r]
                for c in range(col, n + 1):
                    row[c] -= f * pivot_row[c]
    return [aug[r][n] for r in range(n)]


def stationary_vector(m: TransitionMatrix) -> RationalVector:
    """The unique probability vector ``l`` with ``M l = c l``.

    The last equation of ``(M - cI) l = 0`` is replaced by ``sum(l) = 1``.
    """
    _require_regular(m)
    q, c = m.q, m.column_sum
    rows = [[Fraction(m.entries[i][j] - (c if i == j else 0)) for j in range(q)] for i in range(q)]
    rhs = [Fraction(0)] * q
    rows[-1] = [Fraction(1)] * q
    rhs[-1] = Fraction(1)
    ell = tuple(solve(rows, rhs))
    if not verify_eigen(m, ell):
        raise InvariantError(f"solution {ell} is not a positive stationary vector")
    return ell


def verify_eigen(m: TransitionMatrix, ell: Sequence[Fraction]) -> bool:
    """True iff ``M l == c l`` exactly, ``sum(l) == 1`` and ``l > 0``."""
    if len(ell) != m.q:
        raise ValueError("dimension mismatch")
    c = m.column_sum
    for i, row in enumerate(m.entries):
        if sum(a * x for a, x in zip(row, ell)) != c * ell[i]:
            return False
    return sum(ell) == 1 and all(x > 0 for x in ell)


def _round_half_up(x: Fraction) -> int:
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def stationary_by_iteration(m: TransitionMatrix, n: int) -> Matrix:
    """Entrywise nearest integer to ``(c**q - 1) c**(-n) M**n``.

    Once ``n`` is large enough every column equals ``(c**q - 1) l``.
    """
    _require_regular(m)
    if n < 1:
        raise ValueError("n must be >= 1")
    c, q = m.column_sum, m.q
    scale = c**q - 1
    denom = c**n
    power = matrix_power(m, n)
    return tuple(tuple(_round_half_up(Fraction(scale * v, denom)) for v in row) for row in power)


def iterate_until_stable(m: TransitionMatrix, start: int = 1, limit: int = 10_000) -> tuple[int, tuple[int, ...]]:
    """Smallest ``n >= start`` whose snapshot has identical columns equal to the next one's.

    Returns ``(n, column)``.
    """
    c, q = m.column_sum, m.q
    _require_regular(m)
    scale = c**q - 1
    power = matrix_power(m, start)
    prev = None
    for n in range(start, limit):
        snap = tuple(tuple(_round_half_up(Fraction(scale * v, c**n)) for v in row) for row in power)
        cols = set(zip(*snap))
        if len(cols) == 1 and snap == prev:
            return n - 1, next(iter(cols))
        prev = snap
        power = tuple(
            tuple(sum(power[i][t] * m.entries[t][j] for t in range(q)) for j in range(q))
            for i in range(q)
        )
    raise InvariantError(f"power iteration did not stabilize within {limit} steps")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
