"""The ten acceptance criteria, each timed against its own budget.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal summary
prints one PASS/FAIL line per criterion.
"""
import json
import random
import time
from fractions import Fraction
from itertools import combinations

from loopstrata.alcove import face_of, in_alcove, orders, vertices
from loopstrata.chainbundle import (
    MODELS,
    TwistedChain,
    ad_decomposition,
    admissible_chains,
    chain_h0_adE,
    ev_map,
    line_h0,
    make_model,
    EquivLine,
    trivial_model,
)
from loopstrata.cli import run
from loopstrata.parahoric import verify_intersection
from loopstrata.rootsys import Coweight, all_types, build_root_system, pairing
from loopstrata.strata import closure_poset, enumerate_orbits, orbit_report, OrbitLabel
from loopstrata.weylreduce import gieseker_limit, reduce_to_alcove

SEED = 20240601


def test_c01_vertex_pairing(criterion):
    t0 = time.perf_counter()
    bad = []
    for t in all_types(8):
        rs = build_root_system(t)
        vs = vertices(rs)
        for j in range(1, rs.rank + 1):
            for i in range(1, rs.rank + 1):
                want = Fraction(1, rs.marks0[i]) if i == j else 0
                if pairing(rs.simple_roots[i - 1], vs[j], rs) != want:
                    bad.append((str(t), i, j))
            if pairing(rs.highest_root, vs[j], rs) != 1:
                bad.append((str(t), "theta", j))
    dt = time.perf_counter() - t0
    criterion("C1 vertex pairing delta_ij/n_i, rank<=8", not bad and dt < 5, f"{dt:.2f}s bad={bad[:3]}")


def test_c02_orders(criterion):
    t0 = time.perf_counter()
    bad = []
    for t in all_types(8):
        rs = build_root_system(t)
        o = orders(rs)
        if o.k_each[0] != 1:
            bad.append((str(t), "k0"))
        for v, k in zip(vertices(rs), o.k_each):
            first = next(m for m in range(1, k + 1) if (v * m).is_integral)
            if first != k:
                bad.append((str(t), "min", k, first))
        lcm = 1
        for k in o.k_each:
            lcm = lcm * k // __import__("math").gcd(lcm, k)
        if o.k_G != lcm or any(o.k_G % n for n in rs.marks0):
            bad.append((str(t), "kG"))
    dt = time.perf_counter() - t0
    criterion("C2 orders k_i minimal, k_G = lcm, n_i | k_G", not bad and dt < 10, f"{dt:.2f}s bad={bad[:3]}")


def test_c03_parahoric_intersection(criterion):
    t0 = time.perf_counter()
    bad, n = [], 0
    for t in all_types(4):
        rs = build_root_system(t)
        for size in range(1, rs.rank + 2):
            for I in combinations(range(rs.rank + 1), size):
                n += 1
                if not verify_intersection(rs, I, 5):
                    bad.append((str(t), I))
    dt = time.perf_counter() - t0
    criterion("C3 P_I = intersection of P(eta_i), N=5, rank<=4", not bad and dt < 60,
              f"{dt:.2f}s subsets={n} bad={bad[:3]}")


def _rand(rng, r, b=12):
    return Coweight(tuple(rng.randint(-b, b) for _ in range(r)))


def test_c04_alcove_reduction(criterion):
    t0 = time.perf_counter()
    bad, checked = [], 0
    for t in all_types(4):
        rs = build_root_system(t)
        rng = random.Random(f"{SEED}:{t}:reduce")
        for _ in range(500):
            l = rng.randint(1, 6)
            eta, shift = _rand(rng, rs.rank), _rand(rng, rs.rank)
            out = reduce_to_alcove(rs, eta / l).output.eta
            ok = (
                in_alcove(rs, out)
                and reduce_to_alcove(rs, out).word == ()
                and reduce_to_alcove(rs, eta / l + shift).output.eta == out
            )
            checked += 1
            if not ok:
                bad.append((str(t), l, eta))
        rng = random.Random(f"{SEED}:{t}:slice")
        for _ in range(100):
            eta = _rand(rng, rs.rank)
            for l in range(1, 7):
                g = gieseker_limit(rs, l, eta, 5)
                checked += 1
                if not (g.slice_equal and g.face == face_of(reduce_to_alcove(rs, eta / l).output)):
                    bad.append((str(t), l, eta, "slice"))
    dt = time.perf_counter() - t0
    criterion("C4 alcove reduction: inequalities, idempotence, translation, slice equality", not bad and dt < 120,
              f"{dt:.2f}s checks={checked} bad={bad[:3]}")


def test_c05_classical_reduction(criterion):
    chain, model = TwistedChain(1, (0, 1)), trivial_model(1, 1)
    bad = []
    for d in range(11):
        line = EquivLine(1, (d, 0))
        got = (line_h0(chain, line, model).dim, line_h0(chain, line, model, True, True).dim)
        if got != (d + 1, max(d - 1, 0)):
            bad.append((d, got))
    criterion("C5 k=1 single component: d+1, twisted max(d-1,0)", not bad, f"bad={bad}")


def test_c06_degree_bound(criterion):
    t0 = time.perf_counter()
    bad, n = [], 0
    for t in all_types(4):
        rs = build_root_system(t)
        for chain in admissible_chains(rs):
            lines, _ = ad_decomposition(rs, chain)
            for ln in lines:
                for d in ln.degrees:
                    n += 1
                    if not (isinstance(d, int) and abs(d) <= chain.k):
                        bad.append((str(t), chain.node_labels, d))
    dt = time.perf_counter() - t0
    criterion("C6 ad-decomposition degrees integral with |d| <= k_G, rank<=4", not bad and dt < 60,
              f"{dt:.2f}s degrees={n} bad={bad[:3]}")


def test_c07_ev_kernel_identity(criterion):
    bad, n = [], 0
    for t in all_types(3):
        rs = build_root_system(t)
        for chain in admissible_chains(rs):
            for m in MODELS:
                model = make_model(m, rs, chain)
                n += 1
                if ev_map(rs, chain, model).kernel_dim != chain_h0_adE(rs, chain, model, vanish=True).total_dim:
                    bad.append((str(t), chain.node_labels, m))
    criterion("C7 ker(ev) = twisted H0 total, rank<=3, both models", not bad, f"configs={n} bad={bad[:3]}")


def test_c08_anchor(criterion):
    # Hand count, k = 2, marks (1, 1), so every monomial is invariant:
    #   trivial summand: constants on the chain                      -> 1
    #   alpha  : weights (0, 1),  degree 2*(0 - 1) = -2, no sections -> 0
    #   -alpha : weights (0, -1), degree 2,  x0^2, x0*x1, x1^2       -> 3
    rs = build_root_system("A1")
    chain = TwistedChain.for_type(rs, (0, 1))
    h = chain_h0_adE(rs, chain, make_model("paper", rs, chain))
    per = {p.root.coeffs: p.dim for p in h.per_root}
    ok = chain.k == 2 and h.total_dim == 4 and (h.trivial_dim, per[(1,)], per[(-1,)]) == (1, 0, 3)
    criterion("C8 A1 chain (0,1), k=2: dim H0(ad E) = 4 = 1+0+3", ok, f"total={h.total_dim} per={per}")


def test_c09_orbit_combinatorics(criterion):
    t0 = time.perf_counter()
    bad = []
    for t in all_types(8):
        rs = build_root_system(t)
        r = rs.rank
        labels = enumerate_orbits(rs)
        edges = closure_poset(rs)
        tops = {b for _, b in edges} - {a for a, _ in edges}
        flags = all(orbit_report(rs, lab).z0_trivial == (len(lab) == 1) for lab in labels)
        if (len(labels), len(edges), tops, flags) != (2 ** (r + 1), (r + 1) * 2**r, {OrbitLabel(range(r + 1))}, True):
            bad.append(str(t))
    dt = time.perf_counter() - t0
    criterion("C9 2^(r+1) orbits, (r+1)2^r edges, top {0..r}, singleton flags, rank<=8",
              not bad and dt < 5, f"{dt:.2f}s bad={bad}")


def test_c10_vanishing_audit(criterion, tmp_path):
    t0 = time.perf_counter()
    paths = [tmp_path / "audit1.json", tmp_path / "audit2.json"]
    codes = [run(["verify", "--what", "vanishing", "--max-rank", "3", "--model", "both", "--out", str(p)])
             for p in paths]
    dt = time.perf_counter() - t0
    same = paths[0].read_bytes() == paths[1].read_bytes()
    rep = json.loads(paths[0].read_text())
    recs = rep["records"]
    agree = [r for r in recs if r["dims_agree"]]
    agree_ok = all(r["verdict"] == 0 for r in agree)
    logged = [r for r in recs if r["verdict"] != 0]
    witnessed = all(r["witnesses"] and all(w["components"] for w in r["witnesses"]) for r in logged)
    models = {r["model"] for r in recs}
    ok = codes == [0, 0] and same and agree_ok and witnessed and models == set(MODELS) and dt < 600
    criterion("C10 vanishing audit rank<=3, both models: deterministic, agree => verdict 0, witnesses logged", ok,
              f"{dt:.2f}s configs={len(recs)} agree={len(agree)} logged={len(logged)} identical={same}")
