"""Command-line front end.

Exit codes: 0 success, 1 an asserted check failed, 2 usage error.

Scope note: ``reduce`` performs one affine Weyl reduction of eta/l into the
alcove and reports the face it lands in. It does not factor loops (no Bruhat
decomposition over Laurent series); iterated degeneration is the inclusion
walk printed by ``strata``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import __version__
from .alcove import barycentric, is_exotic, FaceLabel, orders, vertices
from .chainbundle import MODELS, ChainModelError, TwistedChain, chain_record
from .parahoric import DEFAULT_TRUNCATION
from .rootsys import Coweight, LieType, RootSystemError, all_types, build_root_system, fundamental_coweights
from .strata import emit_poset
from .sweeps import DEFAULT_SEED, SWEEPS, SweepResult, run_sweep
from .weylreduce import gieseker_limit

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    lie_type: str | None = None
    truncation: int = DEFAULT_TRUNCATION
    model: str = "paper"
    out: str | None = None
    format: str = "json"
    seed: int = DEFAULT_SEED
    max_rank: int | None = None
    what: str | None = None
    labels: list[int] | None = None
    l: int | None = None
    eta: list[int] | None = None
    vanish: bool = False
    samples: int | None = None
    workers: int = 1


def q(x: Fraction) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rootsys(t: LieType) -> tuple[list[dict], SweepResult]:
    rs = build_root_system(t)
    res = SweepResult()
    rec = {
        "type": str(t),
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "inv_cartan": [[q(x) for x in r] for r in rs.inv_cartan],
        "num_positive_roots": len(rs.positive_roots),
        "num_roots": len(rs.roots),
        "highest_root": list(rs.highest_root.coeffs),
        "marks": list(rs.marks0),
        "positive_roots": [list(a.coeffs) for a in rs.positive_roots],
        "fundamental_coweights": [[q(x) for x in w.coeffs] for w in fundamental_coweights(rs)],
    }
    return [rec], res


def _alcove(t: LieType) -> tuple[list[dict], SweepResult]:
    rs = build_root_system(t)
    res = SweepResult()
    vs = vertices(rs)
    bary = [[q(x) for x in barycentric((rs, v))] for v in vs]
    res.check(all(barycentric((rs, v)) == tuple(int(i == j) for i in range(rs.rank + 1)) for j, v in enumerate(vs)))
    pmat = [[q(rs.simple_pairings(vs[j])[i - 1]) for j in range(1, rs.rank + 1)] for i in range(1, rs.rank + 1)]
    res.check(
        all(
            Fraction(pmat[i - 1][j - 1]) == (Fraction(1, rs.marks0[i]) if i == j else 0)
            for i in range(1, rs.rank + 1)
            for j in range(1, rs.rank + 1)
        )
    )
    o = orders(rs)
    rec = {
        "type": str(t),
        "vertices": [[q(x) for x in v.coeffs] for v in vs],
        "vertex_pairing_matrix": pmat,
        "vertex_barycentric": bary,
        "k_each": list(o.k_each),
        "k_G": o.k_G,
        "exotic": {str(i): is_exotic(FaceLabel([i])) for i in range(rs.rank + 1)},
    }
    return [rec], res


def _reduce(t: LieType, l: int, eta: list[int], N: int) -> tuple[list[dict], SweepResult]:
    rs = build_root_system(t)
    if len(eta) != rs.rank:
        raise UsageError(f"--eta needs {rs.rank} coefficients for {t}, got {len(eta)}")
    if l < 1:
        raise UsageError("--l must be positive")
    g = gieseker_limit(rs, l, Coweight(tuple(eta)), N)
    res = SweepResult()
    res.check(g.slice_equal)
    rec = {
        "type": str(t),
        "l": l,
        "eta": eta,
        "k_G": g.k_G,
        "reduced": [q(x) for x in g.reduced.coeffs],
        "word": list(g.word),
        "barycentric": [q(x) for x in g.barycentric],
        "face": list(g.face.sorted),
        "exotic": 0 not in g.face.support,
        "eta_I": [q(x) for x in g.eta_I.coeffs],
        "chain_length": g.chain_length,
        "node_labels": list(g.node_labels),
        "truncation": N,
        "slice_equal": g.slice_equal,
    }
    return [rec], res


def _chain(t: LieType, labels: list[int], model: str) -> tuple[list[dict], SweepResult]:
    rs = build_root_system(t)
    try:
        chain = TwistedChain.for_type(rs, labels)
        rec = chain_record(rs, chain, model)
    except ChainModelError as e:
        raise UsageError(str(e))
    res = SweepResult()
    res.check(rec["ev_kernel_dim"] == rec["total_twisted"])
    if rec["verdict"] != 0:
        res.logged_discrepancies += 1
    return [rec], res


def _tsv(records: list[dict]) -> str:
    keys: list[str] = []
    for r in records:
        for key in r:
            if key not in keys:
                keys.append(key)
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(keys)
    for r in records:
        w.writerow(
            [json.dumps(r[k], separators=(",", ":")) if isinstance(r.get(k), (list, dict)) else r.get(k, "") for k in keys]
        )
    return buf.getvalue()


def render(cfg: RunConfig, records: list[dict], res: SweepResult) -> str:
    if cfg.format == "tsv":
        return _tsv(records)
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool": "loopstrata",
        "version": __version__,
        # output path and worker count don't affect results; keep reruns byte-identical
        "config": {k: v for k, v in asdict(cfg).items() if k not in ("out", "workers")},
        "records": records,
        "summary": res.summary(),
    }
    return json.dumps(report, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopstrata", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"loopstrata {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmts=("json", "tsv")):
        sp.add_argument("type", nargs="?", help="Lie type, e.g. A2, E8")
        sp.add_argument("--type", dest="type_opt", metavar="TYPE")
        sp.add_argument("--format", choices=fmts, default="json")
        sp.add_argument("--out", metavar="PATH")

    common(sub.add_parser("rootsys", help="roots, highest root, marks, inverse Cartan"))
    common(sub.add_parser("alcove", help="alcove vertices, orders k_i, k_G"))

    sp = sub.add_parser("reduce", help="alcove reduction of eta/l and the resulting face",
                        description="Reduce eta/l into the alcove. " + __doc__.split("Scope note: ")[1])
    common(sp)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--eta", type=_int_list, required=True, help="integer coroot coefficients c1,...,cr")
    sp.add_argument("--N", type=int, default=DEFAULT_TRUNCATION)

    sp = sub.add_parser("chain", help="H^0 of ad E on a twisted chain")
    common(sp)
    sp.add_argument("--labels", type=_int_list, required=True)
    sp.add_argument("--model", choices=MODELS, default="paper")
    sp.add_argument("--vanish", action="store_true", help="print only the twisted (vanishing) summary")

    sp = sub.add_parser("verify", help="run a verification sweep; exit 1 on an asserted failure")
    common(sp)
    sp.add_argument("--what", choices=sorted(SWEEPS), required=True)
    sp.add_argument("--max-rank", type=int, default=None)
    sp.add_argument("--N", type=int, default=DEFAULT_TRUNCATION)
    sp.add_argument("--model", choices=MODELS + ("both",), default="both")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--workers", type=int, default=1)

    common(sub.add_parser("strata", help="boundary orbit poset"), fmts=("json", "dot"))
    return p


def _resolve_type(args) -> LieType | None:
    text = args.type_opt or args.type
    if text is None:
        return None
    try:
        return LieType.parse(text)
    except RootSystemError as e:
        raise UsageError(str(e))


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        t = _resolve_type(args)
        cfg = RunConfig(command=args.command, lie_type=None if t is None else str(t), format=args.format, out=args.out)
        if args.command != "verify" and t is None:
            raise UsageError("a Lie type is required")
        if args.command == "rootsys":
            records, res = _rootsys(t)
        elif args.command == "alcove":
            records, res = _alcove(t)
        elif args.command == "reduce":
            cfg.l, cfg.eta, cfg.truncation = args.l, args.eta, args.N
            records, res = _reduce(t, args.l, args.eta, args.N)
        elif args.command == "chain":
            cfg.labels, cfg.model, cfg.vanish = args.labels, args.model, args.vanish
            records, res = _chain(t, args.labels, args.model)
            if args.vanish:
                keep = ("type", "k", "labels", "model", "total_twisted", "verdict", "witnesses")
                records = [{key: r[key] for key in keep} for r in records]
        elif args.command == "verify":
            cfg.what, cfg.truncation, cfg.seed, cfg.workers = args.what, args.N, args.seed, args.workers
            cfg.max_rank = args.max_rank
            types = [t] if t is not None else all_types(args.max_rank or 8)
            kwargs = {}
            if args.what == "intersection":
                kwargs["N"] = args.N
            elif args.what == "reduction":
                kwargs.update(samples=args.samples, seed=args.seed, N=args.N)
                cfg.samples = args.samples
            elif args.what == "vanishing":
                cfg.model = args.model
                kwargs["models"] = MODELS if args.model == "both" else (args.model,)
            if args.workers < 1:
                raise UsageError("--workers must be >= 1")
            res = run_sweep(args.what, types=types, workers=args.workers, **kwargs)
            records = res.records
        else:  # strata
            text = emit_poset(build_root_system(t), args.format)
            _emit(text, args.out)
            return 0
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"loopstrata: error: {e}", file=sys.stderr)
        return 2
    _emit(render(cfg, records, res), args.out)
    return 0 if res.ok else 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
