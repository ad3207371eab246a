"""Root data for simple, simply connected groups of types A-G.

Simple roots use Bourbaki numbering. The Cartan matrix is stored with rows
indexed by coroots::

    C[i][j] = <alpha_j, alpha_i^vee>

so a coweight ``eta = sum_i eta_i alpha_i^vee`` pairs with a root
``alpha = sum_j m_j alpha_j`` as ``sum_{i,j} eta_i m_j C[i][j]``.

Everything is exact: roots are integer tuples in the simple-root basis and
coweights are ``Fraction`` tuples in the coroot basis.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import linalg

_RANK_OK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 3,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_OK:
            raise RootSystemError(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.series](self.rank):
            raise RootSystemError(f"invalid rank {self.rank!r} for series {self.series}")

    @classmethod
    def parse(cls, text: str | LieType) -> LieType:
        if isinstance(text, LieType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if m is None:
            raise RootSystemError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def all_types(max_rank: int = 8) -> list[LieType]:
    """Every valid type of rank <= max_rank, in a fixed order."""
    out = []
    for s in "ABCDEFG":
        for r in range(1, max_rank + 1):
            if _RANK_OK[s](r):
                out.append(LieType(s, r))
    return out


@dataclass(frozen=True, order=True)
class Root:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if all(x == 0 for x in c):
            raise RootSystemError("the zero vector is not a root")
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            raise RootSystemError(f"mixed signs in root {c}")

    @property
    def is_positive(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> Root:
        return Root(tuple(-x for x in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.coeffs)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Coweight:
    """Rational vector in the coroot basis."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_as_fraction(x) for x in self.coeffs))

    @classmethod
    def zero(cls, rank: int) -> Coweight:
        return cls((Fraction(0),) * rank)

    @classmethod
    def basis(cls, rank: int, i: int) -> Coweight:
        return cls(tuple(Fraction(int(j == i)) for j in range(rank)))

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: Coweight) -> None:
        if len(other) != len(self):
            raise RootSystemError("coweight dimension mismatch")

    def __add__(self, other: Coweight) -> Coweight:
        self._check(other)
        return Coweight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Coweight) -> Coweight:
        self._check(other)
        return Coweight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Coweight:
        return Coweight(tuple(-a for a in self.coeffs))

    def __mul__(self, s) -> Coweight:
        s = _as_fraction(s)
        return Coweight(tuple(a * s for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, s) -> Coweight:
        s = _as_fraction(s)
        return Coweight(tuple(a / s for a in self.coeffs))

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    @property
    def denominator(self) -> int:
        """Least positive k with k * self in the coroot lattice."""
        return lcm(*(a.denominator for a in self.coeffs)) if self.coeffs else 1

    def __str__(self) -> str:
        return "(" + ",".join(_frac_str(a) for a in self.coeffs) + ")"


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or int")
    return Fraction(x)


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in the ``C[i][j] = <alpha_j, alpha_i^vee>`` convention."""
    r = t.rank
    C = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j, a=-1, b=-1):
        # C[i][j] = a, C[j][i] = b  (1-based indices)
        C[i - 1][j - 1] = a
        C[j - 1][i - 1] = b

    s = t.series
    if s in "ABC":
        for i in range(1, r):
            link(i, i + 1)
        if s == "B":
            # alpha_r short
            link(r - 1, r, -1, -2)
        elif s == "C":
            # alpha_r long
            link(r - 1, r, -2, -1)
    elif s == "D":
        for i in range(1, r - 1):
            link(i, i + 1)
        link(r - 2, r)
    elif s == "E":
        link(1, 3)
        link(3, 4)
        link(2, 4)
        for i in range(4, r):
            link(i, i + 1)
    elif s == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif s == "G":
        # alpha_1 short, alpha_2 long
        link(1, 2, -3, -1)
    return tuple(tuple(row) for row in C)


def _positive_roots_by_strings(C: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots by the root-string closure from the simple roots.

    For a positive root beta and simple alpha_i != beta, beta + alpha_i is a
    root iff p - <beta, alpha_i^vee> > 0, where p is the length of the
    downward alpha_i-string through beta.
    """
    r = len(C)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                if beta == simple[i]:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - sum(beta[j] * C[i][j] for j in range(r))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda v: (sum(v), v))


def _symmetrizer(C: Sequence[Sequence[int]]) -> list[Fraction]:
    """d_i = (alpha_i, alpha_i)/2 up to scale, with d_i C[i][j] symmetric."""
    r = len(C)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and C[i][j] != 0 and d[j] is None:
                d[j] = d[i] * C[i][j] / C[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise RootSystemError("Dynkin diagram is not connected")
    # normalize so the shortest simple root has d = 1
    m = min(d)
    return [x / m for x in d]


@dataclass(frozen=True, eq=False)
class RootSystem:
    # one instance per type (see build_root_system), so identity hashing suffices
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    inv_cartan: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    marks: tuple[int, ...]
    symmetrizer: tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def marks0(self) -> tuple[int, ...]:
        """(n_0, n_1, ..., n_r) with n_0 = 1."""
        return (1,) + self.marks

    @property
    def roots(self) -> tuple[Root, ...]:
        """All roots: positives by height, then their negatives."""
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(Root(tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank))

    def simple_pairings(self, eta: Coweight) -> tuple[Fraction, ...]:
        """(<alpha_1, eta>, ..., <alpha_r, eta>)."""
        if len(eta) != self.rank:
            raise RootSystemError(f"coweight of length {len(eta)} for rank {self.rank}")
        C = self.cartan
        r = self.rank
        return tuple(sum((eta.coeffs[i] * C[i][j] for i in range(r)), Fraction(0)) for j in range(r))

    def coroot(self, alpha: Root) -> Coweight:
        """alpha^vee = 2 alpha / (alpha, alpha), in the coroot basis."""
        d = self.symmetrizer
        r = self.rank
        norm = sum(
            (alpha.coeffs[i] * alpha.coeffs[j] * d[i] * self.cartan[i][j] for i in range(r) for j in range(r)),
            Fraction(0),
        ) / 2
        return Coweight(tuple(alpha.coeffs[i] * d[i] / norm for i in range(r)))

    @property
    def theta_coroot(self) -> Coweight:
        return _theta_coroot(self)

    def to_text(self) -> str:
        """Canonical text dump, used by golden-file tests."""
        lines = [f"type {self.lie_type}", f"rank {self.rank}", "cartan"]
        lines += [" ".join(f"{x:d}" for x in row) for row in self.cartan]
        lines.append("inv_cartan")
        lines += [" ".join(_frac_str(x) for x in row) for row in self.inv_cartan]
        lines.append(f"highest_root {self.highest_root}")
        lines.append("marks " + " ".join(str(m) for m in self.marks0))
        lines.append(f"positive_roots {len(self.positive_roots)}")
        lines += [str(a) for a in sorted(self.positive_roots, key=lambda a: (a.height, a.coeffs))]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _theta_coroot(rs: RootSystem) -> Coweight:
    return rs.coroot(rs.highest_root)


@lru_cache(maxsize=None)
def _build(t: LieType) -> RootSystem:
    C = cartan_matrix(t)
    inv = linalg.inverse(C)
    pos = _positive_roots_by_strings(C)
    top = max(pos, key=sum)
    if not all(all(a <= b for a, b in zip(beta, top)) for beta in pos):
        raise RootSystemError("no unique maximal root")  # pragma: no cover
    return RootSystem(
        lie_type=t,
        cartan=C,
        inv_cartan=tuple(tuple(row) for row in inv),
        positive_roots=tuple(Root(b) for b in pos),
        highest_root=Root(top),
        marks=top,
        symmetrizer=tuple(_symmetrizer(C)),
    )


def build_root_system(t: LieType | str) -> RootSystem:
    return _build(LieType.parse(t))


def pairing(alpha: Root | Sequence[int], eta: Coweight, rs: RootSystem) -> Fraction:
    """<alpha, eta> = sum_{i,j} eta_i m_j C[i][j]."""
    m = alpha.coeffs if isinstance(alpha, Root) else tuple(alpha)
    if len(m) != rs.rank or len(eta) != rs.rank:
        raise RootSystemError("dimension mismatch in pairing")
    s = rs.simple_pairings(eta)
    return sum((mj * sj for mj, sj in zip(m, s)), Fraction(0))


def pair_with(s: Sequence[Fraction], alpha: Root) -> Fraction:
    """Pairing against precomputed ``rs.simple_pairings(eta)``."""
    return sum((mj * sj for mj, sj in zip(alpha.coeffs, s)), Fraction(0))


def fundamental_coweights(rs: RootSystem) -> tuple[Coweight, ...]:
    """omega_j^vee with <alpha_i, omega_j^vee> = delta_ij.

    These are the columns of (C^T)^{-1}, i.e. the rows of C^{-1}.
    """
    return tuple(Coweight(row) for row in rs.inv_cartan)


def is_root(rs: RootSystem, coeffs: Iterable[int]) -> bool:
    c = tuple(coeffs)
    pos = {a.coeffs for a in rs.positive_roots}
    return c in pos or tuple(-x for x in c) in pos
