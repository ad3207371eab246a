"""Geometry of the fundamental alcove.

The alcove is the set of level-one coweights ``eta`` with
``<alpha_i, eta> >= 0`` for i = 1..r and ``<theta, eta> <= 1``. Its vertices
are ``eta_0 = 0`` and ``eta_j = omega_j^vee / n_j``. Faces are labelled by
their *support*: the indices whose barycentric coordinate is positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable

from .rootsys import Coweight, RootSystem, fundamental_coweights, pair_with


class AlcoveError(ValueError):
    pass


@dataclass(frozen=True)
class FaceLabel:
    support: frozenset[int]

    def __init__(self, support: Iterable[int]):
        s = frozenset(int(i) for i in support)
        if not s:
            raise AlcoveError("a face label needs a nonempty support")
        if min(s) < 0:
            raise AlcoveError(f"negative index in face label {sorted(s)}")
        object.__setattr__(self, "support", s)

    @property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    def complement(self, rank: int) -> frozenset[int]:
        return frozenset(range(rank + 1)) - self.support

    def __len__(self) -> int:
        return len(self.support)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.sorted)) + "}"


@dataclass(frozen=True)
class AlcoveOrders:
    k_each: tuple[int, ...]
    k_G: int


def _violations(rs: RootSystem, eta: Coweight) -> list[str]:
    s = rs.simple_pairings(eta)
    bad = [f"<alpha_{i + 1}, eta> = {x} < 0" for i, x in enumerate(s) if x < 0]
    th = pair_with(s, rs.highest_root)
    if th > 1:
        bad.append(f"<theta, eta> = {th} > 1")
    return bad


def in_alcove(rs: RootSystem, eta: Coweight) -> bool:
    return not _violations(rs, eta)


@dataclass(frozen=True)
class AlcovePoint:
    eta: Coweight
    rs: RootSystem

    def __post_init__(self):
        bad = _violations(self.rs, self.eta)
        if bad:
            raise AlcoveError(f"{self.eta} is outside the alcove of {self.rs.lie_type}: " + "; ".join(bad))


@lru_cache(maxsize=None)
def vertices(rs: RootSystem) -> tuple[Coweight, ...]:
    """(eta_0, ..., eta_r)."""
    om = fundamental_coweights(rs)
    return (Coweight.zero(rs.rank),) + tuple(w / n for w, n in zip(om, rs.marks))


def orders(rs: RootSystem) -> AlcoveOrders:
    """k_i = least k with k * eta_i coroot-integral; k_G = lcm(k_i)."""
    ks = tuple(v.denominator for v in vertices(rs))
    return AlcoveOrders(k_each=ks, k_G=lcm(*ks))


def k_G(rs: RootSystem) -> int:
    return orders(rs).k_G


def barycentric(p: AlcovePoint | tuple[RootSystem, Coweight]) -> tuple[Fraction, ...]:
    """(a_0, ..., a_r) with a_i = n_i <alpha_i, eta> and a_0 = 1 - <theta, eta>."""
    if not isinstance(p, AlcovePoint):
        p = AlcovePoint(p[1], p[0])
    rs = p.rs
    s = rs.simple_pairings(p.eta)
    a0 = 1 - pair_with(s, rs.highest_root)
    return (a0,) + tuple(n * x for n, x in zip(rs.marks, s))


def from_barycentric(rs: RootSystem, a: Iterable) -> Coweight:
    """sum_{i>=1} a_i eta_i; a_0 is ignored (eta_0 = 0)."""
    a = [Fraction(x) for x in a]
    out = Coweight.zero(rs.rank)
    for ai, v in zip(a[1:], vertices(rs)[1:]):
        out = out + v * ai
    return out


def face_of(p: AlcovePoint | tuple[RootSystem, Coweight]) -> FaceLabel:
    return FaceLabel(i for i, a in enumerate(barycentric(p)) if a > 0)


def is_exotic(f: FaceLabel) -> bool:
    """The face lies in {<theta, eta> = 1}, i.e. a_0 vanishes on it."""
    return 0 not in f.support


def eta_I(rs: RootSystem, I: FaceLabel | Iterable[int]) -> Coweight:
    """sum_{i in I} eta_i; the empty set gives the zero coweight."""
    idx = I.support if isinstance(I, FaceLabel) else frozenset(I)
    if idx and (min(idx) < 0 or max(idx) > rs.rank):
        raise AlcoveError(f"label set {sorted(idx)} not inside {{0..{rs.rank}}}")
    vs = vertices(rs)
    out = Coweight.zero(rs.rank)
    for i in sorted(idx):
        out = out + vs[i]
    return out


def barycenter(rs: RootSystem, I: FaceLabel | Iterable[int]) -> Coweight:
    """eta_I / |I|, the alcove representative of the face with support I."""
    idx = I.support if isinstance(I, FaceLabel) else frozenset(I)
    if not idx:
        raise AlcoveError("the empty label set has no barycenter")
    return eta_I(rs, idx) / len(idx)
