"""Equivariant line bundles on twisted chains of projective lines.

A chain has fixed points ``p_0, ..., p_n`` and components ``C_1, ..., C_n``,
with ``C_j`` running from ``p_{j-1}`` (coordinate ``x_0`` nonvanishing) to
``p_j`` (``x_1`` nonvanishing). A line bundle is given by rational weights
``w_0, ..., w_n``, one per fixed point; on ``C_j`` it has degree
``d_j = k (w_{j-1} - w_j)``.

Sections on ``C_j`` are spanned by the monomials ``x_0^{d-a} x_1^a`` that an
:class:`EquivariantModel` retains. A global section is a choice of sections on
each component whose values agree at the internal nodes. The value at
``p_{j-1}`` is the coefficient of ``x_0^d`` and the value at ``p_j`` that of
``x_1^d``; mixed monomials vanish at both ends. Twisting by ``O(-p_0 - p_n)``
is imposed as vanishing at the two extreme points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Sequence

from . import linalg
from .alcove import k_G, vertices
from .parahoric import finite_levi_data
from .rootsys import Root, RootSystem, pair_with


class ChainModelError(ValueError):
    pass


@dataclass(frozen=True)
class TwistedChain:
    k: int
    node_labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "node_labels", tuple(int(i) for i in self.node_labels))
        if self.k < 1:
            raise ChainModelError("stabilizer order k must be positive")
        if not self.node_labels:
            raise ChainModelError("a chain needs at least one node label")
        if len(set(self.node_labels)) != len(self.node_labels):
            raise ChainModelError(f"node labels must be distinct: {self.node_labels}")
        if min(self.node_labels) < 0:
            raise ChainModelError(f"negative node label in {self.node_labels}")

    @classmethod
    def for_type(cls, rs: RootSystem, labels: Sequence[int], k: int | None = None) -> TwistedChain:
        chain = cls(k_G(rs) if k is None else k, tuple(labels))
        chain.check(rs)
        return chain

    @property
    def n(self) -> int:
        """Number of P^1 components."""
        return len(self.node_labels) - 1

    def check(self, rs: RootSystem) -> None:
        if max(self.node_labels) > rs.rank:
            raise ChainModelError(f"label {max(self.node_labels)} outside 0..{rs.rank}")

    def reversed(self) -> TwistedChain:
        return TwistedChain(self.k, self.node_labels[::-1])


@dataclass(frozen=True)
class EquivLine:
    k: int
    weights: tuple[Fraction, ...]
    root: Root | None = None

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        for x in w:
            if (self.k * x).denominator != 1:
                raise ChainModelError(f"k * w = {self.k * x} is not an integer (k = {self.k})")

    @property
    def degrees(self) -> tuple[int, ...]:
        w = self.weights
        return tuple(int(self.k * (w[j - 1] - w[j])) for j in range(1, len(w)))


@dataclass(frozen=True)
class EquivariantModel:
    """Which monomials on each component are mu_k-invariant.

    ``x_0^{d-a} x_1^a`` on component j is kept iff
    ``(d - a) c0 + a c1 == target (mod k)``, where ``(c0, c1) = coords[j-1]``
    and ``target`` is ``k w_{j-1}`` for an anchored model and 0 otherwise.
    """

    name: str
    k: int
    coords: tuple[tuple[int, int], ...]
    anchored: bool = False

    def target(self, left_weight: Fraction) -> int:
        return int(self.k * left_weight) if self.anchored else 0

    def exponents(self, j: int, d: int, left_weight: Fraction = Fraction(0)) -> list[int]:
        c0, c1 = self.coords[j - 1]
        return component_sections(d, c0, c1, self.k, self.target(left_weight))


MODELS = ("paper", "unit")


def make_model(name: str, rs: RootSystem, chain: TwistedChain) -> EquivariantModel:
    """Build a named weight model for ``chain``.

    ``paper``: x_0, x_1 on C_j carry k/n_{i_{j-1}} and k/n_{i_j}; kept
    monomials have total weight 0 mod k.
    ``unit``: x_0, x_1 carry +1, -1 (the node-smoothing weights) and kept
    monomials match the fiber character k w at the left fixed point.
    """
    k, labels = chain.k, chain.node_labels
    if name == "paper":
        marks = rs.marks0
        for i in labels:
            if k % marks[i]:
                raise ChainModelError(
                    f"mark n_{i} = {marks[i]} does not divide k = {k} for {rs.lie_type}; "
                    "weight model 'paper' is undefined"
                )
        coords = tuple((k // marks[labels[j - 1]], k // marks[labels[j]]) for j in range(1, len(labels)))
        return EquivariantModel("paper", k, coords)
    if name == "unit":
        return EquivariantModel("unit", k, ((1, -1),) * chain.n, anchored=True)
    raise ChainModelError(f"unknown model {name!r}; choose from {MODELS}")


def trivial_model(k: int, n: int) -> EquivariantModel:
    """Every monomial retained (all coordinate weights 0)."""
    return EquivariantModel("trivial", k, ((0, 0),) * n)


def component_sections(d: int, c0: int, c1: int, k: int, target: int = 0) -> list[int]:
    """Exponents a with x_0^{d-a} x_1^a retained, ascending."""
    if k < 1:
        raise ChainModelError("k must be positive")
    if d < 0:
        return []
    return [a for a in range(d + 1) if ((d - a) * c0 + a * c1 - target) % k == 0]


@dataclass
class SectionSpace:
    # variables[v] = (component j, exponent a); j = 0 denotes the bare fiber of an n = 0 chain
    variables: list[tuple[int, int]]
    degrees: tuple[int, ...]
    constraints: list[list[Fraction]]
    basis: list[list[Fraction]]
    p0_var: int | None
    pn_var: int | None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def value_p0(self, vec: Sequence[Fraction]) -> Fraction:
        return Fraction(0) if self.p0_var is None else vec[self.p0_var]

    def value_pn(self, vec: Sequence[Fraction]) -> Fraction:
        return Fraction(0) if self.pn_var is None else vec[self.pn_var]

    def describe(self, vec: Sequence[Fraction]) -> list[dict]:
        """Nonzero monomial coefficients of ``vec`` grouped by component."""
        out: dict[int, list] = {}
        for (j, a), c in zip(self.variables, vec):
            if c != 0:
                d = self.degrees[j - 1] if j else 0
                out.setdefault(j, []).append({"x0": d - a, "x1": a, "coeff": _q(c)})
        return [{"component": j, "monomials": out[j]} for j in sorted(out)]


def line_h0(
    chain: TwistedChain,
    line: EquivLine,
    model: EquivariantModel,
    vanish_p0: bool = False,
    vanish_pn: bool = False,
) -> SectionSpace:
    if len(line.weights) != chain.n + 1:
        raise ChainModelError(f"line has {len(line.weights)} weights for a chain with {chain.n + 1} nodes")
    if line.k != chain.k or model.k != chain.k:
        raise ChainModelError("k mismatch between chain, line and model")
    degs = line.degrees
    variables: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}

    if chain.n == 0:
        # no components: sections are the invariant part of the fiber at p_0
        if line.weights[0] == 0:
            index[(0, 0)] = 0
            variables.append((0, 0))
        p0 = pn = index.get((0, 0))
        internal: list[tuple[int | None, int | None]] = []
    else:
        if len(model.coords) != chain.n:
            raise ChainModelError("model does not match the chain length")
        for j in range(1, chain.n + 1):
            for a in model.exponents(j, degs[j - 1], line.weights[j - 1]):
                index[(j, a)] = len(variables)
                variables.append((j, a))

        def right(j):  # value of C_j at p_j
            return index.get((j, degs[j - 1])) if degs[j - 1] >= 0 else None

        def left(j):  # value of C_j at p_{j-1}
            return index.get((j, 0))

        p0, pn = left(1), right(chain.n)
        internal = [(right(m), left(m + 1)) for m in range(1, chain.n)]

    nv = len(variables)
    rows: list[list[Fraction]] = []
    for r_var, l_var in internal:
        if r_var is None and l_var is None:
            continue
        row = [Fraction(0)] * nv
        if r_var is not None:
            row[r_var] += 1
        if l_var is not None:
            row[l_var] -= 1
        rows.append(row)
    for flag, var in ((vanish_p0, p0), (vanish_pn, pn)):
        if flag and var is not None:
            row = [Fraction(0)] * nv
            row[var] = Fraction(1)
            rows.append(row)
    basis = linalg.nullspace(rows, nv) if nv else []
    return SectionSpace(variables, degs, rows, basis, p0, pn)


def ad_decomposition(rs: RootSystem, chain: TwistedChain) -> tuple[list[EquivLine], int]:
    """Root lines of ad E(eta_{i_0}, ..., eta_{i_n}) plus the number of trivial summands."""
    chain.check(rs)
    vs = vertices(rs)
    pairings = [rs.simple_pairings(vs[i]) for i in chain.node_labels]
    lines = [EquivLine(chain.k, tuple(pair_with(s, a) for s in pairings), a) for a in rs.roots]
    return lines, rs.rank


def _trivial_line(chain: TwistedChain) -> EquivLine:
    return EquivLine(chain.k, (Fraction(0),) * (chain.n + 1))


@dataclass(frozen=True)
class RootH0:
    root: Root | None
    degrees: tuple[int, ...]
    dim: int


@dataclass(frozen=True)
class AdH0:
    total_dim: int
    trivial_dim: int
    per_root: tuple[RootH0, ...]


def chain_h0_adE(rs: RootSystem, chain: TwistedChain, model: EquivariantModel, vanish: bool = False) -> AdH0:
    lines, ntriv = ad_decomposition(rs, chain)
    triv = line_h0(chain, _trivial_line(chain), model, vanish, vanish).dim
    per_root = tuple(
        RootH0(ln.root, ln.degrees, line_h0(chain, ln, model, vanish, vanish).dim) for ln in lines
    )
    total = ntriv * triv + sum(p.dim for p in per_root)
    return AdH0(total, ntriv * triv, per_root)


@dataclass(frozen=True)
class EvMap:
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    total_dim: int

    @property
    def kernel_dim(self) -> int:
        return self.total_dim - self.rank

    @property
    def injective(self) -> bool:
        return self.rank == self.total_dim


def ev_map(rs: RootSystem, chain: TwistedChain, model: EquivariantModel) -> EvMap:
    """Evaluation of untwisted H^0(ad E) at (p_0, p_n), in g + g coordinates.

    Rows come in pairs (value at p_0, value at p_n): first the r Cartan
    directions, then one pair per root in ``rs.roots`` order.
    """
    lines, ntriv = ad_decomposition(rs, chain)
    summands = [_trivial_line(chain)] * ntriv + lines
    spaces = [line_h0(chain, ln, model) for ln in summands]
    ncols = sum(sp.dim for sp in spaces)
    rows: list[list[Fraction]] = []
    col = 0
    for sp in spaces:
        r0 = [Fraction(0)] * ncols
        r1 = [Fraction(0)] * ncols
        for b in sp.basis:
            r0[col] = sp.value_p0(b)
            r1[col] = sp.value_pn(b)
            col += 1
        rows += [r0, r1]
    rk = linalg.rank(rows, ncols) if ncols else 0
    return EvMap(tuple(tuple(r) for r in rows), rk, ncols)


@dataclass(frozen=True)
class FormulaDims:
    statement_dim: int
    constructive_dim: int
    dim_L: int
    dim_Z: int
    dim_U: int
    n: int
    count_neg: int
    count_pos: int


def formula_dims(rs: RootSystem, chain: TwistedChain) -> FormulaDims:
    """Two dimension counts for Aut of the bundle on the chain.

    ``statement_dim`` is dim of Z(L_I) x Z(L_I) . Delta(L_I) |x (U_I^- x U_I);
    ``constructive_dim`` counts Delta(L_I), the n lifted tori, and the root
    directions (X_a, 0) / (0, X_a) shown to lie in the image of ev.
    """
    chain.check(rs)
    fin = finite_levi_data(rs, chain.node_labels)
    vs = vertices(rs)
    ps = [rs.simple_pairings(vs[i]) for i in chain.node_labels]
    count_neg = count_pos = 0
    for a in rs.positive_roots:
        w = [pair_with(s, a) for s in ps]
        # -a is negative with weights -w
        if w[0] == 0 and any(x > 0 for x in w):
            count_neg += 1
        if w[-1] == 0 and any(x > 0 for x in w):
            count_pos += 1
    return FormulaDims(
        statement_dim=fin.dim_L + fin.dim_Z + 2 * fin.dim_U,
        constructive_dim=fin.dim_L + chain.n + count_neg + count_pos,
        dim_L=fin.dim_L,
        dim_Z=fin.dim_Z,
        dim_U=fin.dim_U,
        n=chain.n,
        count_neg=count_neg,
        count_pos=count_pos,
    )


@dataclass(frozen=True)
class VanishingResult:
    verdict: int | dict
    witnesses: tuple[dict, ...]
    report: dict = field(compare=False)

    @property
    def vanishes(self) -> bool:
        return self.verdict == 0


def verify_vanishing(rs: RootSystem, chain: TwistedChain, model: EquivariantModel) -> VanishingResult:
    """Twisted H^0(ad E (-p_0 - p_n)); 0 or explicit nonzero sections."""
    lines, ntriv = ad_decomposition(rs, chain)
    witnesses = []
    per_root = []
    triv = line_h0(chain, _trivial_line(chain), model, True, True)
    if triv.dim:
        for b in triv.basis:
            witnesses.append({"root": None, "components": triv.describe(b)})
    for ln in lines:
        sp = line_h0(chain, ln, model, True, True)
        per_root.append({"root": list(ln.root.coeffs), "dim_twisted": sp.dim})
        for b in sp.basis:
            witnesses.append({"root": list(ln.root.coeffs), "components": sp.describe(b)})
    report = {
        "type": str(rs.lie_type),
        "labels": list(chain.node_labels),
        "k": chain.k,
        "model": model.name,
        "per_root": per_root,
    }
    verdict: int | dict = 0 if not witnesses else witnesses[0]
    return VanishingResult(verdict, tuple(witnesses), report)


def chain_record(rs: RootSystem, chain: TwistedChain, model_name: str) -> dict:
    """Full report record for one (type, chain, model) configuration."""
    model = make_model(model_name, rs, chain)
    lines, ntriv = ad_decomposition(rs, chain)
    triv_u = line_h0(chain, _trivial_line(chain), model).dim
    triv_t = line_h0(chain, _trivial_line(chain), model, True, True).dim
    per_root = []
    total_u = ntriv * triv_u
    total_t = ntriv * triv_t
    witnesses = []
    for ln in lines:
        su = line_h0(chain, ln, model)
        st = line_h0(chain, ln, model, True, True)
        total_u += su.dim
        total_t += st.dim
        per_root.append(
            {
                "root": list(ln.root.coeffs),
                "degrees": list(ln.degrees),
                "dim_untwisted": su.dim,
                "dim_twisted": st.dim,
            }
        )
        for b in st.basis:
            witnesses.append({"root": list(ln.root.coeffs), "components": st.describe(b)})
    fd = formula_dims(rs, chain)
    ev = ev_map(rs, chain, model)
    return {
        "type": str(rs.lie_type),
        "rank": rs.rank,
        "k": chain.k,
        "labels": list(chain.node_labels),
        "model": model.name,
        "contains_zero": 0 in chain.node_labels,
        "per_root": per_root,
        "trivial_untwisted": ntriv * triv_u,
        "trivial_twisted": ntriv * triv_t,
        "total_untwisted": total_u,
        "total_twisted": total_t,
        "statement_dim": fd.statement_dim,
        "constructive_dim": fd.constructive_dim,
        "dim_L": fd.dim_L,
        "dim_Z": fd.dim_Z,
        "dim_U": fd.dim_U,
        "count_neg": fd.count_neg,
        "count_pos": fd.count_pos,
        "ev_rank": ev.rank,
        "ev_kernel_dim": ev.kernel_dim,
        "verdict": 0 if total_t == 0 else "nonzero",
        "witnesses": witnesses,
    }


def admissible_chains(rs: RootSystem, k: int | None = None, include_zero: bool = True) -> Iterator[TwistedChain]:
    """Every sequence of distinct labels from {0..r}, shortest first."""
    labels = [i for i in range(rs.rank + 1) if include_zero or i != 0]
    kk = k_G(rs) if k is None else k
    for length in range(1, len(labels) + 1):
        for seq in permutations(labels, length):
            yield TwistedChain(kk, seq)


def _q(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
