"""q-cycles acting on {1, ..., q} and their conjugation by rotations.

A cycle is stored in one-line form: ``table[i - 1] == sigma(i)``. The
rotation ``rho`` is ``i -> i + 1 (mod q)``, with residues represented by
``1..q`` so that descents use the linear order of those representatives.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, CycleParseError

#: Largest q accepted by :func:`enumerate_types` unless overridden.
DEFAULT_TYPE_BOUND = 9


def _wrap(i: int, q: int) -> int:
    """Representative of ``i mod q`` in ``1..q``."""
    return (i - 1) % q + 1


@dataclass(frozen=True, order=True)
class Cycle:
    """A permutation of ``{1..q}`` consisting of a single q-cycle."""

    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        q = len(table)
        if q == 0:
            raise CycleParseError("empty cycle")
        if sorted(table) != list(range(1, q + 1)):
            raise CycleParseError(f"{list(table)} is not a permutation of 1..{q}")
        # transitivity: the orbit of 1 must visit every symbol
        i, steps = 1, 0
        while True:
            i = table[i - 1]
            steps += 1
            if i == 1:
                break
        if steps != q:
            raise CycleParseError(f"{list(table)} is not a {q}-cycle")

    @property
    def q(self) -> int:
        return len(self.table)

    def __call__(self, i: int) -> int:
        return self.table[_wrap(i, self.q) - 1]

    def notation(self) -> tuple[int, ...]:
        """The symbol ``(1 sigma(1) sigma^2(1) ...)`` as a tuple."""
        out = [1]
        while len(out) < self.q:
            out.append(self.table[out[-1] - 1])
        return tuple(out)

    def inverse(self) -> Cycle:
        inv = [0] * self.q
        for i, v in enumerate(self.table, start=1):
            inv[v - 1] = i
        return Cycle(tuple(inv))

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.notation())) + ")"

    def __repr__(self) -> str:
        return f"Cycle{str(self)}"


def cycle_from_cycle_notation(symbols: Sequence[int]) -> Cycle:
    """Build the cycle ``symbols[t] -> symbols[t + 1]`` (indices mod q)."""
    symbols = [int(s) for s in symbols]
    q = len(symbols)
    if q == 0:
        raise CycleParseError("empty cycle")
    if symbols[0] != 1:
        raise CycleParseError("cycle notation must start with 1", position=0)
    seen = set()
    for pos, s in enumerate(symbols):
        if not 1 <= s <= q:
            raise CycleParseError(f"symbol {s} outside 1..{q}", position=pos)
        if s in seen:
            raise CycleParseError(f"duplicate symbol {s}", position=pos)
        seen.add(s)
    table = [0] * q
    for t, s in enumerate(symbols):
        table[s - 1] = symbols[(t + 1) % q]
    return Cycle(tuple(table))


def cycle_from_table(table: Sequence[int]) -> Cycle:
    """Build a cycle from its one-line images ``sigma(1), ..., sigma(q)``."""
    return Cycle(tuple(table))


def parse_cycle(text: str, one_line: bool = False) -> Cycle:
    """Parse ``"(1 2 4 5 3)"``; with ``one_line`` parse ``"2 4 1 5 3"``.

    Commas are accepted as separators as well as whitespace.
    """
    body = text.strip()
    if not one_line:
        if not (body.startswith("(") and body.endswith(")")):
            raise CycleParseError(f"expected parenthesized cycle, got {text!r}")
        body = body[1:-1]
    tokens = body.replace(",", " ").split()
    values = []
    for pos, tok in enumerate(tokens):
        try:
            values.append(int(tok))
        except ValueError:
            raise CycleParseError(f"not an integer: {tok!r}", position=pos) from None
    if one_line:
        return cycle_from_table(values)
    return cycle_from_cycle_notation(values)


def rho(q: int) -> Cycle:
    return Cycle(tuple(_wrap(i + 1, q) for i in range(1, q + 1)))


def rotation_cycle(q: int, p: int) -> Cycle:
    """The rotation cycle ``rho**p`` with rotation number ``p/q``."""
    if not 1 <= p < q:
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1: rho^{p} is not a {q}-cycle")
    return Cycle(tuple(_wrap(i + p, q) for i in range(1, q + 1)))


def descent(sigma: Cycle) -> int:
    """Number of ``i`` in Z/qZ with ``sigma(i) > sigma(i + 1)``."""
    t = sigma.table
    q = len(t)
    return sum(1 for i in range(q) if t[i] > t[(i + 1) % q])


def descents_at(sigma: Cycle) -> list[int]:
    t = sigma.table
    q = len(t)
    return [i + 1 for i in range(q) if t[i] > t[(i + 1) % q]]


def is_rotation_cycle(sigma: Cycle) -> bool:
    return descent(sigma) == 1


def rotation_number(sigma: Cycle) -> tuple[int, int] | None:
    """``(p, q)`` if ``sigma == rho**p``, else ``None``."""
    if not is_rotation_cycle(sigma):
        return None
    return sigma(sigma.q) % sigma.q, sigma.q


def _conjugate_table(table: tuple[int, ...], j: int) -> tuple[int, ...]:
    q = len(table)
    return tuple(_wrap(table[(i + j) % q] - j, q) for i in range(q))


def conjugate_by_rotation(sigma: Cycle, j: int) -> Cycle:
    """Return ``rho**(-j) . sigma . rho**j``, i.e. ``i -> sigma(i + j) - j``."""
    return Cycle(_conjugate_table(sigma.table, j % sigma.q))


def symmetry_order(sigma: Cycle) -> int:
    t = sigma.table
    return sum(1 for j in range(sigma.q) if _conjugate_table(t, j) == t)


@dataclass(frozen=True)
class CombinatorialType:
    """The orbit of a cycle under conjugation by the rotation group."""

    representatives: tuple[Cycle, ...]

    @property
    def canonical(self) -> Cycle:
        return min(self.representatives)

    @property
    def q(self) -> int:
        return self.representatives[0].q

    @property
    def size(self) -> int:
        return len(self.representatives)

    @property
    def symmetry(self) -> int:
        return self.q // self.size

    @property
    def descent(self) -> int:
        return descent(self.representatives[0])

    def __contains__(self, sigma) -> bool:
        return sigma in self.representatives


def combinatorial_type(sigma: Cycle) -> CombinatorialType:
    """Conjugates ``rho**(-j) sigma rho**j`` for ``0 <= j < q / sym(sigma)``."""
    r = sigma.q // symmetry_order(sigma)
    reps = tuple(conjugate_by_rotation(sigma, j) for j in range(r))
    return CombinatorialType(reps)


def canonical_representative(sigma: Cycle) -> Cycle:
    t = sigma.table
    return Cycle(min(_conjugate_table(t, j) for j in range(sigma.q)))


def all_cycles(q: int) -> Iterable[Cycle]:
    """All (q-1)! q-cycles, in lexicographic order of their cycle notation."""
    for rest in itertools.permutations(range(2, q + 1)):
        yield cycle_from_cycle_notation((1,) + rest)


def enumerate_types(q: int, bound: int = DEFAULT_TYPE_BOUND) -> list[CombinatorialType]:
    """Partition all q-cycles into combinatorial types, sorted by canonical table."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if q > bound:
        raise BudgetExceeded(f"q={q} exceeds the enumeration bound {bound}")
    seen: set[tuple[int, ...]] = set()
    types = []
    for sigma in all_cycles(q):
        if sigma.table in seen:
            continue
        ctype = combinatorial_type(sigma)
        seen.update(c.table for c in ctype.representatives)
        types.append(ctype)
    types.sort(key=lambda c: c.canonical.table)
    return types
