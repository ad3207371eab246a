"""Affine Weyl reduction into the alcove and the resulting face data.

A finite-order datum ``(l, eta)`` with ``eta`` integral is represented by the
level-one point ``eta / l``. Reducing that point into the closed alcove picks
out a face ``I``; ``eta_I = sum_{i in I} eta_i`` then defines a twisted
structure of order ``k_G`` with the same framed automorphisms. The check below
is that both points give the same parahoric sign pattern.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .alcove import AlcovePoint, FaceLabel, barycentric, barycenter, eta_I, face_of, k_G
from .parahoric import DEFAULT_TRUNCATION, parahoric_slice
from .rootsys import Coweight, RootSystem, pair_with

MAX_STEPS = 10**6


class ReductionError(RuntimeError):
    pass


def reflect(rs: RootSystem, i: int, eta: Coweight) -> Coweight:
    """Simple affine reflection s_i acting on level-one coweights.

    s_i (i >= 1) is the finite reflection in alpha_i; s_0 reflects in the
    hyperplane <theta, eta> = 1.
    """
    if not 0 <= i <= rs.rank:
        raise IndexError(f"reflection index {i} outside 0..{rs.rank}")
    s = rs.simple_pairings(eta)
    if i == 0:
        return eta - rs.theta_coroot * (pair_with(s, rs.highest_root) - 1)
    return eta - Coweight.basis(rs.rank, i - 1) * s[i - 1]


def replay(rs: RootSystem, eta: Coweight, word: Sequence[int]) -> Coweight:
    for i in word:
        eta = reflect(rs, i, eta)
    return eta


@dataclass(frozen=True)
class ReductionTrace:
    input: Coweight
    word: tuple[int, ...]
    output: AlcovePoint


def reduce_to_alcove(rs: RootSystem, eta: Coweight, max_steps: int = MAX_STEPS) -> ReductionTrace:
    """Walk ``eta`` into the closed alcove, lowest violated wall first.

    The walk runs on the integer vector ``D * <alpha_j, eta>``; reflections
    act on it through the Cartan matrix, so no fractions are formed until the
    end.
    """
    s = rs.simple_pairings(eta)
    D = lcm(*(x.denominator for x in s))
    v = [int(x * D) for x in s]
    C = rs.cartan
    marks = rs.marks
    tc = _theta_coroot_pairings(rs)
    r = rs.rank
    word: list[int] = []
    while True:
        step = next((i for i in range(r) if v[i] < 0), None)
        if step is not None:
            c = v[step]
            row = C[step]
            v = [v[j] - c * row[j] for j in range(r)]
            word.append(step + 1)
        else:
            excess = sum(n * x for n, x in zip(marks, v)) - D
            if excess <= 0:
                break
            v = [v[j] - excess * tc[j] for j in range(r)]
            word.append(0)
        if len(word) > max_steps:
            raise ReductionError(f"no convergence after {max_steps} reflections from {eta}")
    inv = rs.inv_cartan
    out = Coweight(tuple(sum((Fraction(v[j], D) * inv[j][k] for j in range(r)), Fraction(0)) for k in range(r)))
    return ReductionTrace(input=eta, word=tuple(word), output=AlcovePoint(out, rs))


@lru_cache(maxsize=None)
def _theta_coroot_pairings(rs: RootSystem) -> tuple[int, ...]:
    """<alpha_j, theta^vee>, integers."""
    return tuple(int(x) for x in rs.simple_pairings(rs.theta_coroot))


@dataclass(frozen=True)
class GiesekerLimit:
    k_G: int
    l: int
    eta: Coweight
    reduced: Coweight
    word: tuple[int, ...]
    barycentric: tuple[Fraction, ...]
    face: FaceLabel
    eta_I: Coweight
    truncation: int
    slice_equal: bool = field(compare=False)

    @property
    def chain_length(self) -> int:
        return len(self.face) - 1

    @property
    def node_labels(self) -> tuple[int, ...]:
        return self.face.sorted


def gieseker_limit(rs: RootSystem, l: int, eta: Coweight, N: int = DEFAULT_TRUNCATION) -> GiesekerLimit:
    if l < 1:
        raise ValueError("l must be a positive integer")
    if not eta.is_integral:
        raise ValueError(f"{eta} is not in the coroot lattice")
    trace = reduce_to_alcove(rs, eta / l)
    red = trace.output
    face = face_of(red)
    same = parahoric_slice(rs, red.eta, N).same_pattern(parahoric_slice(rs, barycenter(rs, face), N))
    return GiesekerLimit(
        k_G=k_G(rs),
        l=l,
        eta=eta,
        reduced=red.eta,
        word=trace.word,
        barycentric=barycentric(red),
        face=face,
        eta_I=eta_I(rs, face),
        truncation=N,
        slice_equal=same,
    )
