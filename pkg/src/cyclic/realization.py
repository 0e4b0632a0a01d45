"""Period-q orbits of ``m_k(x) = kx (mod 1)`` realizing a given cycle.

An orbit ``{x_1 < ... < x_q}`` realizes ``sigma`` when ``k x_i = x_{sigma(i)}``
(mod 1). Realizations are parametrized by their fixed point distribution
``n = (n_1, ..., n_q)`` (how many of the ``k - 1`` fixed points ``j/(k-1)`` of
``m_k`` fall in each gap ``(x_i, x_{i+1})``) together with the number of
fixed points in ``(0, x_1)``, here called the *shift*; or equivalently by the
deployment vector ``w_i = #(O & (0, i/(k-1)))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .cycles import Cycle, combinatorial_type, conjugate_by_rotation, descent, symmetry_order
from .errors import (
    CycleParseError,
    DegreeTooSmall,
    InvariantError,
    NotAdmissible,
    NotRealizable,
    RotationCycleError,
    ShiftOutOfRange,
)
from .spectral import format_rational, stationary_vector
from .transition import cyclic_interval, pair_matrix, signature


@dataclass(frozen=True)
class FixVector:
    """Fixed point distribution ``n`` plus the count ``shift`` of fixed points in ``(0, x_1)``."""

    n: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        if any(v < 0 for v in self.n):
            raise ValueError(f"negative component in {self.n}")
        if not self.n or self.n[-1] < 1:
            raise ValueError(f"last component must be >= 1: {self.n}")
        if not 0 <= self.shift < self.n[-1]:
            raise ShiftOutOfRange(f"shift {self.shift} not in [0, {self.n[-1]})")

    @property
    def q(self) -> int:
        return len(self.n)

    @property
    def degree(self) -> int:
        return sum(self.n) + 1


@dataclass(frozen=True)
class DepVector:
    """Cumulative deployment vector ``(w_1, ..., w_{k-1})``."""

    w: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(v) for v in self.w)
        object.__setattr__(self, "w", w)
        if not w:
            raise ValueError("deployment vector must be non-empty")
        if w[0] < 0 or any(a > b for a, b in zip(w, w[1:])):
            raise ValueError(f"deployment vector must be non-decreasing and >= 0: {w}")

    @property
    def degree(self) -> int:
        return len(self.w) + 1


@dataclass(frozen=True)
class Orbit:
    """A period-q orbit of ``m_k``: exact points ``0 < x_1 < ... < x_q < 1``."""

    k: int
    points: tuple[Fraction, ...]
    cycle: Cycle | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = tuple(Fraction(x) for x in self.points)
        object.__setattr__(self, "points", pts)
        if self.k < 2:
            raise ValueError("degree must be >= 2")
        if not all(0 < x < 1 for x in pts):
            raise ValueError(f"orbit points must lie in (0, 1): {pts}")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError("orbit points must be strictly increasing")
        index = {x: i for i, x in enumerate(pts, start=1)}
        images = []
        for x in pts:
            y = (self.k * x) % 1
            if y not in index:
                raise ValueError(f"m_{self.k}({x}) = {y} leaves the point set")
            images.append(index[y])
        try:
            sigma = Cycle(tuple(images))
        except CycleParseError:
            raise ValueError(f"{pts} is a union of several periodic orbits") from None
        if self.cycle is not None and self.cycle != sigma:
            raise InvariantError(f"orbit realizes {sigma}, not {self.cycle}")
        object.__setattr__(self, "cycle", sigma)

    @property
    def q(self) -> int:
        return len(self.points)

    @property
    def denominator(self) -> int:
        return self.k**self.q - 1

    @property
    def numerators(self) -> tuple[int, ...]:
        den = self.denominator
        out = []
        for x in self.points:
            a = x * den
            if a.denominator != 1:
                raise InvariantError(f"{x} is not a multiple of 1/{den}")
            out.append(a.numerator)
        return tuple(out)

    def rotate(self, t) -> Orbit:
        """The orbit ``O + t (mod 1)``; only meaningful for ``t`` a multiple of ``1/(k-1)``."""
        return Orbit(self.k, tuple(sorted((x + t) % 1 for x in self.points)))

    def fix(self) -> FixVector:
        return fixed_point_distribution(self)

    def dep(self) -> DepVector:
        return deployment_vector(self)

    def to_json(self) -> dict:
        f = self.fix()
        return {
            "k": self.k,
            "denominator": str(self.denominator),
            "numerators": [str(a) for a in self.numerators],
            "reduced": [format_rational(x) for x in self.points],
            "fix": list(f.n),
            "shift": f.shift,
            "dep": list(self.dep().w),
        }

    @classmethod
    def from_json(cls, obj: dict) -> Orbit:
        den = int(obj["denominator"])
        return cls(int(obj["k"]), tuple(Fraction(int(a), den) for a in obj["numerators"]))

    def __str__(self):
        return "{" + ", ".join(format_rational(x) for x in self.points) + "}"


def fixed_point_distribution(orbit: Orbit) -> FixVector:
    """Count the fixed points ``j/(k-1)`` in each gap of the orbit, directly from the points."""
    k, pts, q = orbit.k, orbit.points, orbit.q
    n = [0] * q
    shift = 0
    for j in range(k - 1):
        c = Fraction(j, k - 1)
        if c in pts:
            raise InvariantError(f"fixed point {c} lies on a period-{q} orbit")
        if c < pts[0]:
            n[q - 1] += 1
            if c > 0:
                shift += 1
        elif c > pts[-1]:
            n[q - 1] += 1
        else:
            i = max(i for i in range(q) if pts[i] < c)
            n[i] += 1
    return FixVector(tuple(n), shift)


def deployment_vector(orbit: Orbit) -> DepVector:
    k = orbit.k
    return DepVector(
        tuple(sum(1 for x in orbit.points if x < Fraction(i, k - 1)) for i in range(1, k))
    )


def fix_to_dep(n: FixVector, k: int | None = None, q: int | None = None) -> DepVector:
    """Deployment vector determined by a fixed point distribution and shift.

    The ``shift`` fixed points in ``(0, x_1)`` contribute leading zeros; index
    ``j < q`` repeats ``n_j`` times; ``q`` repeats ``n_q - shift`` times.
    """
    if k is not None and n.degree != k:
        raise ValueError(f"sum(n) = {n.degree - 1}, expected k - 1 = {k - 1}")
    if q is not None and n.q != q:
        raise ValueError(f"fix vector has length {n.q}, expected {q}")
    w = [0] * n.shift
    for j, c in enumerate(n.n[:-1], start=1):
        w.extend([j] * c)
    w.extend([n.q] * (n.n[-1] - n.shift))
    return DepVector(tuple(w))


def dep_to_fix(w: DepVector, q: int) -> FixVector:
    """Inverse of :func:`fix_to_dep`."""
    if w.w[-1] != q:
        raise ValueError(f"last component must equal q = {q}: {w.w}")
    shift = w.w.count(0)
    n = [w.w.count(j) for j in range(1, q + 1)]
    n[-1] += shift
    return FixVector(tuple(n), shift)


def check_admissible(sigma: Cycle, k: int, n: Sequence[int]) -> None:
    """Raise :class:`NotAdmissible` naming the first violated clause."""
    sig = signature(sigma).bits
    n = tuple(n)
    if len(n) != sigma.q:
        raise NotAdmissible(f"fix vector has length {len(n)}, expected q = {sigma.q}", "length")
    if any(v < 0 for v in n):
        raise NotAdmissible(f"negative component in {n}", "non-negative")
    if sum(n) != k - 1:
        raise NotAdmissible(f"sum of components is {sum(n)}, expected k - 1 = {k - 1}", "sum")
    if n[-1] < 1:
        raise NotAdmissible("last component must be at least 1", "last")
    for i, (a, b) in enumerate(zip(n, sig), start=1):
        if a < b:
            raise NotAdmissible(f"n_{i} = {a} but interval {i} is marked", "signature")


def check_dep_admissible(sigma: Cycle, k: int, w: Sequence[int]) -> None:
    w = tuple(w)
    q = sigma.q
    if len(w) != k - 1:
        raise NotAdmissible(f"deployment vector has length {len(w)}, expected k - 1 = {k - 1}", "length")
    if w[0] < 0 or any(a > b for a, b in zip(w, w[1:])) or w[-1] != q:
        raise NotAdmissible(f"need 0 <= w_1 <= ... <= w_(k-1) = {q}: {w}", "monotone")
    missing = [i for i in signature(sigma).marked if i not in w]
    if missing:
        raise NotAdmissible(f"marked indices {missing} do not appear in {w}", "marked")


def _build_orbit(sigma: Cycle, k: int, n: tuple[int, ...], shift: int) -> Orbit:
    sig = signature(sigma).bits
    p = tuple(a - b for a, b in zip(n, sig))
    ell = stationary_vector(pair_matrix(sigma, p))
    head = sum(ell[j - 1] for j in cyclic_interval(1, sigma(1), sigma.q))
    x1 = (shift + head) / (k - 1)
    pts = [x1]
    for i in range(sigma.q - 1):
        pts.append(pts[-1] + ell[i])
    orbit = Orbit(k, tuple(pts), cycle=sigma)
    got = orbit.fix()
    if got.n != n or got.shift != shift:
        raise InvariantError(f"constructed orbit has fix {got}, expected {n} shift {shift}")
    return orbit


def realize_minimal(sigma: Cycle) -> Orbit:
    """The unique orbit of ``m_d``, ``d = des(sigma)``, realizing ``sigma``."""
    d = descent(sigma)
    if d == 1:
        raise RotationCycleError(
            f"{sigma} is a rotation cycle; realize it under m_k for k >= 2 with a fix or dep vector"
        )
    sig = signature(sigma)
    if sig.bits[-1] == 0:
        raise NotRealizable(f"{sigma} has signature {sig.bits} ending in 0; no realization under m_{d}")
    return _build_orbit(sigma, d, sig.bits, 0)


def realize_general(sigma: Cycle, k: int, n: FixVector | Sequence[int], shift: int | None = None) -> Orbit:
    """The orbit of ``m_k`` realizing ``sigma`` with the given fixed point distribution and shift.

    ``k == des(sigma)`` is accepted and reduces to :func:`realize_minimal`
    when ``n`` is the signature.
    """
    if isinstance(n, FixVector):
        shift = n.shift if shift is None else shift
        n = n.n
    shift = 0 if shift is None else shift
    n = tuple(int(v) for v in n)
    d = descent(sigma)
    if k < max(d, 2):
        raise DegreeTooSmall(f"k = {k} < max(des(sigma), 2) = {max(d, 2)}")
    check_admissible(sigma, k, n)
    if not 0 <= shift < n[-1]:
        raise ShiftOutOfRange(f"shift {shift} not in [0, {n[-1]})")
    return _build_orbit(sigma, k, n, shift)


def realize_from_dep(sigma: Cycle, k: int, w: DepVector | Sequence[int]) -> Orbit:
    """The unique orbit of ``m_k`` realizing ``sigma`` with deployment vector ``w``."""
    w = w.w if isinstance(w, DepVector) else tuple(int(v) for v in w)
    d = descent(sigma)
    if k < max(d, 2):
        raise DegreeTooSmall(f"k = {k} < max(des(sigma), 2) = {max(d, 2)}")
    check_dep_admissible(sigma, k, w)
    f = dep_to_fix(DepVector(w), sigma.q)
    return realize_general(sigma, k, f.n, f.shift)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All non-negative integer vectors of length ``parts`` summing to ``total``, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_admissible(sigma: Cycle, k: int) -> list[FixVector]:
    """All admissible ``(n, shift)`` in degree ``k``, ordered by ``n`` then shift."""
    d = descent(sigma)
    if k < d:
        raise DegreeTooSmall(f"k = {k} < des(sigma) = {d}")
    if k < 2:
        return []
    sig = signature(sigma).bits
    floor = list(sig)
    floor[-1] = 1
    free = k - 1 - sum(floor)
    if free < 0:
        return []
    out = []
    for extra in _compositions(free, sigma.q):
        n = tuple(a + b for a, b in zip(floor, extra))
        out.extend(FixVector(n, s) for s in range(n[-1]))
    return out


def count_cycle_realizations(sigma: Cycle, k: int) -> int:
    """Number of orbits of ``m_k`` realizing ``sigma``: ``C(q + k - d + a_q - 1, q)``."""
    d = descent(sigma)
    if k < max(d, 2):
        return 0
    a_q = signature(sigma).bits[-1]
    return comb(sigma.q + k - d + a_q - 1, sigma.q)


def count_type_realizations(sigma: Cycle, k: int) -> int:
    """Number of orbits of ``m_k`` realizing some conjugate of ``sigma``."""
    d = descent(sigma)
    if k < d:
        raise DegreeTooSmall(f"k = {k} < des(sigma) = {d}")
    if k < 2:
        return 0
    s = symmetry_order(sigma)
    q = sigma.q
    if k == d:
        num = d - 1
        total = 1
    else:
        num = k - 1
        total = comb(q + k - d - 1, q - 1)
    if (num * total) % s:
        raise InvariantError(f"count not divisible by symmetry order {s}")
    return num * total // s


def rotated_type_realizations(sigma: Cycle) -> list[Orbit]:
    """All ``(d-1)/s`` realizations of the type of ``sigma`` under ``m_d``.

    They are rotated copies ``O - j/(d-1)`` of the realization of a
    representative whose signature ends in 1.
    """
    d = descent(sigma)
    if d == 1:
        raise RotationCycleError(f"{sigma} is a rotation cycle")
    sig = signature(sigma).bits
    # left rotation by j ends with a_j; pick the first marked j
    j = next(j for j in range(sigma.q) if sig[j - 1])
    base = realize_minimal(conjugate_by_rotation(sigma, j))
    s = symmetry_order(sigma)
    return [base.rotate(Fraction(-i, d - 1)) for i in range((d - 1) // s)]


def type_realizations(sigma: Cycle, k: int) -> dict[Cycle, list[Orbit]]:
    """Every realization under ``m_k`` of every cycle in the type of ``sigma``."""
    out = {}
    for nu in combinatorial_type(sigma).representatives:
        if k == descent(nu):
            sig = signature(nu).bits
            out[nu] = [realize_minimal(nu)] if sig[-1] else []
        else:
            out[nu] = [realize_general(nu, k, f) for f in enumerate_admissible(nu, k)]
    return out
