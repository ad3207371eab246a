"""Parahoric subgroups as sign patterns on truncated affine roots.

An affine root ``(n, alpha)`` indexes the loop-algebra direction
``z^n g_alpha``; ``alpha = None`` stands for the imaginary root ``(n, 0)``.
For a level-one coweight ``eta`` the parahoric ``P(eta)`` contains exactly the
directions with ``n + <alpha, eta> >= 0``. Its Levi part is where equality
holds and its pro-unipotent radical is where the inequality is strict. The
torus (and the loop-rotation generator) are always present and are not
listed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable

from .alcove import FaceLabel, barycenter, eta_I, vertices
from .rootsys import Coweight, Root, RootSystem, pair_with

DEFAULT_TRUNCATION = 5


@dataclass(frozen=True)
class AffineRoot:
    degree: int
    finite_part: Root | None

    def __post_init__(self):
        if self.degree == 0 and self.finite_part is None:
            raise ValueError("(0, 0) is not an affine root")

    @property
    def is_imaginary(self) -> bool:
        return self.finite_part is None

    def sort_key(self, rank: int) -> tuple:
        fin = (0,) * rank if self.finite_part is None else self.finite_part.coeffs
        return (self.degree, fin)

    def __neg__(self) -> AffineRoot:
        return AffineRoot(-self.degree, None if self.finite_part is None else -self.finite_part)

    def text(self, rank: int) -> str:
        fin = (0,) * rank if self.finite_part is None else self.finite_part.coeffs
        return f"{self.degree};{','.join(map(str, fin))}"


def affine_pairing(a: AffineRoot, eta: Coweight, rs: RootSystem) -> Fraction:
    if a.finite_part is None:
        return Fraction(a.degree)
    return a.degree + pair_with(rs.simple_pairings(eta), a.finite_part)


@lru_cache(maxsize=64)
def affine_roots(rs: RootSystem, N: int) -> tuple[AffineRoot, ...]:
    """All affine roots with |degree| <= N, in canonical order."""
    out = []
    for n in range(-N, N + 1):
        if n != 0:
            out.append(AffineRoot(n, None))
        out.extend(AffineRoot(n, a) for a in rs.roots)
    out.sort(key=lambda a: a.sort_key(rs.rank))
    return tuple(out)


@dataclass(frozen=True)
class ParahoricSlice:
    eta: Coweight
    truncation: int
    p_roots: frozenset[AffineRoot]
    levi_roots: frozenset[AffineRoot]
    unip_roots: frozenset[AffineRoot]
    unip_neg_roots: frozenset[AffineRoot]

    def same_pattern(self, other: ParahoricSlice) -> bool:
        return (
            self.truncation == other.truncation
            and self.levi_roots == other.levi_roots
            and self.unip_roots == other.unip_roots
            and self.unip_neg_roots == other.unip_neg_roots
        )

    def dump(self, rs: RootSystem) -> str:
        """One line ``n;m_1,...,m_r;class`` per affine root, canonical order."""
        classes = (
            [(a, "levi") for a in self.levi_roots]
            + [(a, "unip") for a in self.unip_roots]
            + [(a, "neg") for a in self.unip_neg_roots]
        )
        classes.sort(key=lambda t: t[0].sort_key(rs.rank))
        return "".join(f"{a.text(rs.rank)};{c}\n" for a, c in classes)


def parahoric_slice(rs: RootSystem, eta: Coweight, N: int = DEFAULT_TRUNCATION) -> ParahoricSlice:
    if N < 1:
        raise ValueError("truncation must be >= 1")
    # signs only: clear denominators once and classify in integers
    s = rs.simple_pairings(eta)
    D = lcm(*(x.denominator for x in s))
    si = [int(x * D) for x in s]
    levi, unip, neg = [], [], []
    for a in affine_roots(rs, N):
        v = a.degree * D
        if a.finite_part is not None:
            v += sum(m * x for m, x in zip(a.finite_part.coeffs, si))
        (levi if v == 0 else unip if v > 0 else neg).append(a)
    return ParahoricSlice(
        eta=eta,
        truncation=N,
        p_roots=frozenset(levi + unip),
        levi_roots=frozenset(levi),
        unip_roots=frozenset(unip),
        unip_neg_roots=frozenset(neg),
    )


def face_slice(rs: RootSystem, I: FaceLabel | Iterable[int], N: int = DEFAULT_TRUNCATION) -> ParahoricSlice:
    """Slice of the parahoric attached to the face with support I.

    ``eta_I`` itself generally sits at level |I|; dividing by |I| moves it
    back to level one, where it is the barycenter of the face.
    """
    return parahoric_slice(rs, barycenter(rs, I), N)


def verify_intersection(rs: RootSystem, I: FaceLabel | Iterable[int], N: int = DEFAULT_TRUNCATION) -> bool:
    """p_roots(eta_I) == intersection of p_roots(eta_i) over i in I."""
    idx = sorted(I.support if isinstance(I, FaceLabel) else set(I))
    lhs = face_slice(rs, idx, N).p_roots
    vs = vertices(rs)
    rhs = None
    for i in idx:
        pi = parahoric_slice(rs, vs[i], N).p_roots
        rhs = pi if rhs is None else rhs & pi
    return lhs == rhs


@dataclass(frozen=True)
class FiniteLeviData:
    I: FaceLabel
    levi_pos_roots: frozenset[Root]
    u_roots: frozenset[Root]
    dim_L: int
    dim_U: int
    dim_Z: int

    @property
    def dim_levi_ad(self) -> int:
        return self.dim_L - self.dim_Z


def finite_levi_data(rs: RootSystem, I: FaceLabel | Iterable[int]) -> FiniteLeviData:
    """Levi decomposition of the finite parabolic of eta_I."""
    face = I if isinstance(I, FaceLabel) else FaceLabel(I)
    s = rs.simple_pairings(eta_I(rs, face))
    # eta_I is dominant, so a positive root pairs to zero iff its support
    # misses every wall with positive pairing
    walls = [j for j, x in enumerate(s) if x > 0]
    levi, u = [], []
    for a in rs.positive_roots:
        (u if any(a.coeffs[j] for j in walls) else levi).append(a)
    simple = set(rs.simple_roots)
    n_simple = sum(1 for a in levi if a in simple)
    return FiniteLeviData(
        I=face,
        levi_pos_roots=frozenset(levi),
        u_roots=frozenset(u),
        dim_L=rs.rank + 2 * len(levi),
        dim_U=len(u),
        dim_Z=rs.rank - n_simple,
    )
