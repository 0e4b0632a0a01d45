"""Brute-force catalog of every period-q orbit of ``m_k``.

Period-q points of ``m_k`` are the fractions ``a / (k**q - 1)``; the map acts
on numerators as ``a -> k a mod (k**q - 1)``. Everything here works on those
integer numerators and shares no code with the construction in
:mod:`cyclic.realization`, so it can serve as ground truth for it.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable

from .cycles import Cycle, all_cycles, canonical_representative, descent, symmetry_order
from .errors import BudgetExceeded, InvariantError
from .realization import (
    Orbit,
    count_cycle_realizations,
    count_type_realizations,
    realize_general,
)
from .transition import signature

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    """``CYCLIC_BUDGET`` from the environment, else 10**7."""
    value = os.environ.get("CYCLIC_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def moebius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def period_q_point_count(q: int, k: int) -> int:
    """Number of points of exact period q: ``sum_{j | q} mu(q/j) (k**j - 1)``."""
    return sum(moebius(q // j) * (k**j - 1) for j in range(1, q + 1) if q % j == 0)


@dataclass(frozen=True)
class OrbitRecord:
    """One catalog orbit, held as sorted numerators over ``k**q - 1``."""

    k: int
    numerators: tuple[int, ...]
    cycle: Cycle
    fix: tuple[int, ...]
    shift: int
    dep: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.numerators)

    @property
    def denominator(self) -> int:
        return self.k**self.q - 1

    def orbit(self) -> Orbit:
        den = self.denominator
        return Orbit(self.k, tuple(Fraction(a, den) for a in self.numerators))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "denominator": str(self.denominator),
            "numerators": [str(a) for a in self.numerators],
            "cycle": str(self.cycle),
            "fix": list(self.fix),
            "shift": self.shift,
            "dep": list(self.dep),
            "type": str(canonical_representative(self.cycle)),
        }


def classify_numerators(nums: tuple[int, ...], k: int) -> Cycle:
    """The cycle ``sigma`` with ``k x_i = x_{sigma(i)}`` for sorted numerators."""
    den = k ** len(nums) - 1
    index = {a: i for i, a in enumerate(nums, start=1)}
    return Cycle(tuple(index[a * k % den] for a in nums))


def classify(o: Orbit) -> Cycle:
    den = o.denominator
    nums = []
    for x in o.points:
        a = x * den
        if a.denominator != 1:
            raise ValueError(f"{x} is not a period-{o.q} point of m_{o.k}")
        nums.append(a.numerator)
    return classify_numerators(tuple(nums), o.k)


def _fix_and_dep(nums: tuple[int, ...], k: int) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    q = len(nums)
    den = k**q - 1
    step = den // (k - 1)
    fixed = [j * step for j in range(k - 1)]
    n = [0] * q
    shift = 0
    for c in fixed:
        # number of orbit points below c
        below = sum(1 for a in nums if a < c)
        if below == 0 or below == q:
            n[q - 1] += 1
            if below == 0 and c > 0:
                shift += 1
        else:
            n[below - 1] += 1
    dep = tuple(sum(1 for a in nums if a < i * step) for i in range(1, k))
    return tuple(n), shift, dep


def _record(nums: tuple[int, ...], k: int) -> OrbitRecord:
    fix, shift, dep = _fix_and_dep(nums, k)
    return OrbitRecord(k, nums, classify_numerators(nums, k), fix, shift, dep)


def _scan_sequential(q: int, k: int) -> list[tuple[int, ...]]:
    den = k**q - 1
    visited = bytearray(den)
    out = []
    for a in range(1, den):
        if visited[a]:
            continue
        orbit = [a]
        b = a * k % den
        while b != a:
            orbit.append(b)
            b = b * k % den
        for b in orbit:
            visited[b] = 1
        if len(orbit) == q:
            out.append(tuple(sorted(orbit)))
    return out


def _scan_range(args) -> list[tuple[int, ...]]:
    """Orbits of size q whose least numerator lies in ``[lo, hi)``."""
    q, k, lo, hi = args
    den = k**q - 1
    out = []
    for a in range(lo, hi):
        orbit = [a]
        b = a * k % den
        ok = True
        while b != a:
            if b < a:
                ok = False
                break
            orbit.append(b)
            b = b * k % den
        if ok and len(orbit) == q:
            out.append(tuple(sorted(orbit)))
    return out


@dataclass
class OrbitCatalog:
    q: int
    k: int
    records: list[OrbitRecord]

    @property
    def denominator(self) -> int:
        return self.k**self.q - 1

    @cached_property
    def orbits(self) -> list[Orbit]:
        return [r.orbit() for r in self.records]

    @cached_property
    def by_cycle(self) -> dict[Cycle, list[OrbitRecord]]:
        out = defaultdict(list)
        for r in self.records:
            out[r.cycle].append(r)
        return dict(out)

    @cached_property
    def by_type(self) -> dict[Cycle, list[OrbitRecord]]:
        out = defaultdict(list)
        for r in self.records:
            out[canonical_representative(r.cycle)].append(r)
        return dict(sorted(out.items(), key=lambda kv: kv[0].table))

    def find(self, o: Orbit) -> OrbitRecord | None:
        if o.k != self.k or o.q != self.q:
            return None
        nums = o.numerators
        for r in self.by_cycle.get(o.cycle, []):
            if r.numerators == nums:
                return r
        return None

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_json(), separators=(",", ":")) + "\n" for r in self.records)


def enumerate_orbits(q: int, k: int, budget: int | None = None, jobs: int = 1) -> OrbitCatalog:
    """Every period-q orbit of ``m_k``, each sorted, catalog ordered by least numerator."""
    if q < 2 or k < 2:
        raise ValueError("need q >= 2 and k >= 2")
    budget = default_budget() if budget is None else budget
    if k**q > budget:
        raise BudgetExceeded(f"k^q = {k**q} exceeds the enumeration budget {budget}")
    den = k**q - 1
    if jobs <= 1:
        found = _scan_sequential(q, k)
    else:
        bounds = [1 + (den - 1) * i // jobs for i in range(jobs + 1)]
        chunks = [(q, k, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [o for part in pool.map(_scan_range, chunks) for o in part]
    found.sort()
    catalog = OrbitCatalog(q, k, [_record(nums, k) for nums in found])
    expected = period_q_point_count(q, k)
    if len(found) * q != expected:
        raise InvariantError(f"found {len(found) * q} period-{q} points, expected {expected}")
    return catalog


@dataclass
class CycleCheck:
    cycle: Cycle
    descent: int
    last_signature_bit: int
    tally: int
    expected: int
    orbit_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.tally == self.expected and not self.orbit_failures


@dataclass
class TypeCheck:
    canonical: Cycle
    size: int
    descent: int
    symmetry: int
    tally: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.tally == self.expected


@dataclass
class VerificationReport:
    q: int
    k: int
    total_orbits: int
    expected_total: int
    cycles: list[CycleCheck]
    types: list[TypeCheck]
    restricted: bool = False

    @property
    def ok(self) -> bool:
        return (
            self.total_orbits == self.expected_total
            and all(c.ok for c in self.cycles)
            and all(t.ok for t in self.types)
        )

    def failures(self) -> list[str]:
        out = []
        if self.total_orbits != self.expected_total:
            out.append(f"total orbits {self.total_orbits} != {self.expected_total}")
        for c in self.cycles:
            if c.tally != c.expected:
                out.append(f"cycle {c.cycle}: oracle {c.tally} != formula {c.expected}")
            out.extend(f"cycle {c.cycle}: {msg}" for msg in c.orbit_failures)
        for t in self.types:
            if not t.ok:
                out.append(f"type {t.canonical}: oracle {t.tally} != formula {t.expected}")
        return out

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "status": "PASS" if self.ok else "FAIL",
            "restricted": self.restricted,
            "total_orbits": self.total_orbits,
            "expected_total": self.expected_total,
            "cycles": [
                {
                    "cycle": str(c.cycle),
                    "des": c.descent,
                    "a_q": c.last_signature_bit,
                    "oracle": c.tally,
                    "formula": c.expected,
                    "status": "PASS" if c.ok else "FAIL",
                    "orbit_failures": c.orbit_failures,
                }
                for c in self.cycles
            ],
            "types": [
                {
                    "type": str(t.canonical),
                    "size": t.size,
                    "des": t.descent,
                    "sym": t.symmetry,
                    "oracle": t.tally,
                    "formula": t.expected,
                    "status": "PASS" if t.ok else "FAIL",
                }
                for t in self.types
            ],
            "failures": self.failures(),
        }


def _check_orbits(sigma: Cycle, k: int, records: list[OrbitRecord]) -> list[str]:
    """Rebuild each catalog orbit from its raw fix vector and shift, compare everything."""
    problems = []
    for r in records:
        try:
            built = realize_general(sigma, k, r.fix, r.shift)
        except Exception as exc:  # any failure is a finding, not a crash
            problems.append(f"{r.numerators}: realize_general raised {exc!r}")
            continue
        if built.numerators != r.numerators:
            problems.append(f"{r.numerators}: rebuilt as {built.numerators}")
            continue
        f = built.fix()
        if f.n != r.fix or f.shift != r.shift or built.dep().w != r.dep:
            problems.append(f"{r.numerators}: fix/dep disagree with raw recount")
    return problems


def verify_counts(
    q: int,
    k: int,
    cycles: Iterable[Cycle] | None = None,
    budget: int | None = None,
    jobs: int = 1,
    check_orbits: bool = True,
) -> VerificationReport:
    """Compare oracle tallies against the closed-form counts.

    With ``cycles`` given, only those cycles and their types are checked
    (the total orbit count is still checked against the Moebius formula).
    """
    catalog = enumerate_orbits(q, k, budget=budget, jobs=jobs)
    restricted = cycles is not None
    if cycles is None:
        cycles = list(all_cycles(q))
    else:
        from .cycles import combinatorial_type

        wanted = {}
        for c in cycles:
            for nu in combinatorial_type(c).representatives:
                wanted[nu.table] = nu
        cycles = [wanted[t] for t in sorted(wanted)]

    cycle_checks = []
    for sigma in cycles:
        records = catalog.by_cycle.get(sigma, [])
        cycle_checks.append(
            CycleCheck(
                cycle=sigma,
                descent=descent(sigma),
                last_signature_bit=signature(sigma).bits[-1],
                tally=len(records),
                expected=count_cycle_realizations(sigma, k),
                orbit_failures=_check_orbits(sigma, k, records) if check_orbits else [],
            )
        )
    type_checks = []
    seen = set()
    for sigma in cycles:
        canon = canonical_representative(sigma)
        if canon in seen:
            continue
        seen.add(canon)
        d = descent(canon)
        s = symmetry_order(canon)
        expected = count_type_realizations(canon, k) if k >= d else 0
        type_checks.append(
            TypeCheck(
                canonical=canon,
                size=q // s,
                descent=d,
                symmetry=s,
                tally=len(catalog.by_type.get(canon, [])),
                expected=expected,
            )
        )
    total = len(catalog.records)
    return VerificationReport(
        q=q,
        k=k,
        total_orbits=total,
        expected_total=period_q_point_count(q, k) // q,
        cycles=cycle_checks,
        types=type_checks,
        restricted=restricted,
    )
