"""Boundary orbits O_I of the loop-group embedding and their incidence poset.

Orbits are labelled by subsets I of {0, ..., r}. The closure order is taken
to be inclusion (larger I = deeper stratum), matching a normal-crossings
boundary whose codimension-|I| strata are intersections of |I| divisors.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .alcove import FaceLabel, is_exotic
from .parahoric import FiniteLeviData, finite_levi_data
from .rootsys import RootSystem


@dataclass(frozen=True, order=True)
class OrbitLabel:
    I: tuple[int, ...]

    def __init__(self, I):
        object.__setattr__(self, "I", tuple(sorted(set(int(i) for i in I))))

    def __len__(self) -> int:
        return len(self.I)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.I)) + "}"

    @property
    def sort_key(self) -> tuple:
        return (len(self.I), self.I)


@dataclass(frozen=True)
class OrbitReport:
    I: OrbitLabel
    exotic_flags: dict[int, bool]
    fin_levi: FiniteLeviData | None
    dim_levi_ad_fin: int | None
    z0_trivial: bool
    chain_length: int | None

    @property
    def is_open(self) -> bool:
        return not self.I.I

    def as_dict(self) -> dict:
        d = {
            "I": list(self.I.I),
            "open_stratum": self.is_open,
            "exotic_flags": {str(i): f for i, f in sorted(self.exotic_flags.items())},
            "chain_length": self.chain_length,
            "z0_trivial": self.z0_trivial,
        }
        if self.fin_levi is None:
            d["fin_levi"] = None
            d["dim_levi_ad_fin"] = None
        else:
            f = self.fin_levi
            d["fin_levi"] = {"dim_L": f.dim_L, "dim_U": f.dim_U, "dim_Z": f.dim_Z}
            d["dim_levi_ad_fin"] = self.dim_levi_ad_fin
        return d


def enumerate_orbits(rs: RootSystem) -> list[OrbitLabel]:
    """All 2^(r+1) labels, by size then lexicographically."""
    idx = range(rs.rank + 1)
    return [OrbitLabel(c) for size in range(rs.rank + 2) for c in combinations(idx, size)]


def orbit_report(rs: RootSystem, I: OrbitLabel) -> OrbitReport:
    if I.I and (I.I[0] < 0 or I.I[-1] > rs.rank):
        raise ValueError(f"orbit label {I} not inside {{0..{rs.rank}}}")
    flags = {i: is_exotic(FaceLabel([i])) for i in I.I}
    if not I.I:
        return OrbitReport(I, flags, None, None, False, None)
    fin = finite_levi_data(rs, I.I)
    return OrbitReport(
        I=I,
        exotic_flags=flags,
        fin_levi=fin,
        dim_levi_ad_fin=fin.dim_L - fin.dim_Z,
        # Z_0(L_I) is trivial exactly for singletons; the finite dim_Z stays in fin_levi
        z0_trivial=len(I) == 1,
        chain_length=len(I) - 1,
    )


def closure_poset(rs: RootSystem) -> list[tuple[OrbitLabel, OrbitLabel]]:
    """Covering edges I -> I + {j}, canonical order."""
    edges = []
    for lab in enumerate_orbits(rs):
        for j in range(rs.rank + 1):
            if j not in lab.I:
                edges.append((lab, OrbitLabel(lab.I + (j,))))
    edges.sort(key=lambda e: (e[0].sort_key, e[1].sort_key))
    return edges


def _node_id(lab: OrbitLabel) -> str:
    return "O_" + ("_".join(map(str, lab.I)) if lab.I else "empty")


def emit_poset(rs: RootSystem, fmt: str = "json") -> str:
    labels = enumerate_orbits(rs)
    if fmt == "json":
        reports = [orbit_report(rs, lab).as_dict() for lab in labels]
        return json.dumps(reports, indent=2, sort_keys=False) + "\n"
    if fmt == "dot":
        lines = [f'digraph "strata_{rs.lie_type}" {{', "  rankdir=BT;"]
        for lab in labels:
            rep = orbit_report(rs, lab)
            cl = "-" if rep.chain_length is None else str(rep.chain_length)
            ex = "".join("e" if rep.exotic_flags[i] else "." for i in lab.I) or "-"
            lines.append(f'  {_node_id(lab)} [label="{lab}\\nchain={cl} exotic={ex}"];')
        for a, b in closure_poset(rs):
            lines.append(f"  {_node_id(a)} -> {_node_id(b)};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown poset format {fmt!r}; use 'dot' or 'json'")
