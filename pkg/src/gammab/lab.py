"""Invariant profiles, proposition checks and family sweeps."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .bcolor import b_number, is_b_coloring, m_number, max_clique, optimal_coloring
from .generators import RNG_NAME, FamilySpec, gen_path, parse_family, r_coloring
from .graph import Graph, GraphError, degree_sequence, is_tree
from .grundy import grundy_number
from .pattern import find_induced, is_free

CAP_ENV = "GAMMAB_CAP_N"
DEFAULT_CAP = 14
ORACLE_CAP = 9
PROP3_RANGE = range(2, 7)
CSV_COLUMNS = ("family", "param", "n", "delta", "omega", "chi", "m", "gamma", "b", "gamma_minus_b")


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Caps:
    gamma: int = DEFAULT_CAP
    b: int = DEFAULT_CAP
    oracle: int = ORACLE_CAP

    @classmethod
    def from_env(cls) -> "Caps":
        cap = default_cap()
        return cls(gamma=cap, b=cap)


@dataclass
class ProfileRecord:
    n: int
    delta: int
    omega: int | None = None
    chi: int | None = None
    m: int | None = None
    gamma: int | None = None
    b: int | None = None
    witnesses: dict = field(default_factory=dict)
    uncomputed: list[str] = field(default_factory=list)

    @property
    def gamma_minus_b(self) -> int | None:
        if self.gamma is None or self.b is None:
            return None
        return self.gamma - self.b

    def chain_holds(self) -> bool:
        """ω ≤ χ ≤ b ≤ m ≤ Δ+1 and χ ≤ Γ ≤ Δ+1 over whatever was computed."""
        def le(*vals):
            known = [v for v in vals if v is not None]
            return all(a <= b for a, b in zip(known, known[1:]))
        top = self.delta + 1
        return le(self.omega, self.chi, self.b, self.m, top) and le(self.chi, self.gamma, top)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["gamma_minus_b"] = self.gamma_minus_b
        return d


def profile(g: Graph, caps: Caps | None = None) -> ProfileRecord:
    """All seven invariants with witnesses; Γ and b are skipped above their caps."""
    if g.n < 1:
        raise GraphError("cannot profile the empty graph")
    caps = caps or Caps.from_env()
    rec = ProfileRecord(n=g.n, delta=g.max_degree())
    w = rec.witnesses
    w["degree_sequence"] = list(degree_sequence(g))
    clique = max_clique(g)
    rec.omega = len(clique)
    w["clique"] = list(clique)
    chi_col = optimal_coloring(g)
    rec.chi = len(set(chi_col))
    w["chi_coloring"] = list(chi_col)
    rec.m = m_number(g)
    if g.n <= caps.gamma:
        rec.gamma, order = grundy_number(g)
        w["gamma_order"] = list(order)
    else:
        rec.uncomputed.append("gamma")
    if g.n <= caps.b:
        rec.b, col = b_number(g)
        w["b_coloring"] = list(col)
    else:
        rec.uncomputed.append("b")
    return rec


# proposition checks ---------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool | None  # None: inputs were not computed
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def check_tree_bound(t: Graph, rec: ProfileRecord | None = None) -> Check:
    """Γ(T) ≤ 2m(T) and the weaker Γ(T) ≤ 2b(T) + 2 on a tree."""
    if not is_tree(t):
        raise GraphError("tree bound check needs a tree")
    rec = rec or profile(t, Caps(gamma=t.n, b=t.n))
    d = {"gamma": rec.gamma, "m": rec.m, "b": rec.b, "gamma_le_2m": None, "gamma_le_2b_plus_2": None}
    if rec.gamma is None or rec.b is None:
        return Check("tree_bound", None, d)
    d["gamma_le_2m"] = rec.gamma <= 2 * rec.m
    d["gamma_le_2b_plus_2"] = rec.gamma <= 2 * rec.b + 2
    return Check("tree_bound", d["gamma_le_2m"] and d["gamma_le_2b_plus_2"], d)


def check_tree_lower(rec: ProfileRecord) -> Check:
    d = {"b": rec.b, "m": rec.m}
    if rec.b is None:
        return Check("tree_b_ge_m_minus_1", None, d)
    return Check("tree_b_ge_m_minus_1", rec.b >= rec.m - 1, d)


def _prop3(t: int, g: Graph, rec: ProfileRecord) -> Check:
    p5 = find_induced(g, gen_path(5)) if t >= 3 else None
    d = {
        "t": t,
        "gamma": rec.gamma,
        "b": rec.b,
        "gamma_eq_t_plus_1": None if rec.gamma is None else rec.gamma == t + 1,
        "b_eq_2": None if rec.b is None else rec.b == 2,
        "p6_free": is_free(g, [gen_path(6)]),
        "p5_embedding": None if p5 is None else list(p5),
        "p5_checked": t >= 3,
    }
    parts = [d["gamma_eq_t_plus_1"], d["b_eq_2"], d["p6_free"]]
    if t >= 3:
        parts.append(p5 is not None)
    passed = None if None in parts else all(parts)
    return Check(f"prop3[t={t}]", passed, d)


def check_prop3_B(t: int, caps: Caps | None = None) -> Check:
    """Γ(B_t) = t+1, b(B_t) = 2, B_t is P_6-free and, for t ≥ 3, has an induced P_5."""
    if t not in PROP3_RANGE:
        raise GraphError(f"B_t check supports t in 2..6, got {t}")
    g = FamilySpec("B", (t,)).build()
    return _prop3(t, g, profile(g, caps or Caps(gamma=2 * t, b=2 * t)))


# sweeps ---------------------------------------------------------------------

@dataclass
class SweepReport:
    family: str
    members: list[str]
    records: list[ProfileRecord | None]
    checks: list[Check]
    metadata: dict

    def to_dict(self) -> dict:
        rows = []
        for label, rec in zip(self.members, self.records):
            row = {"param": label, "skipped": rec is None}
            if rec is not None:
                row.update(rec.to_dict())
            rows.append(row)
        return {
            "family": self.family,
            "metadata": self.metadata,
            "records": rows,
            "checks": [c.to_dict() for c in self.checks],
        }

    def column(self, name: str) -> list:
        return [None if r is None else getattr(r, name) for r in self.records]


def _member_spec(base: FamilySpec, p, seed: int) -> FamilySpec:
    if isinstance(p, tuple):
        params = p
    elif base.kind in ("caterpillar", "complete_bipartite"):
        params = (p, p)
    else:
        params = (p,)
    s = (base.seed if base.seed is not None else seed) if base.kind == "random_tree" else None
    return FamilySpec(base.kind, params, s)


def _profile_member(args):
    g, caps = args
    return profile(g, caps)


def _strictly_increasing(vals: list) -> bool:
    return all(a < b for a, b in zip(vals, vals[1:]))


def sweep_family(
    family: str | FamilySpec,
    params: Iterable,
    seed: int = 0,
    caps: Caps | None = None,
    workers: int = 1,
    timestamp: str | None = None,
) -> SweepReport:
    """Profile each member of a family and attach the family's checks.

    Integer parameters for caterpillars mean s = l; for ``Kst`` they mean
    K_{t,t}. Members over the caps are kept as skipped rows.
    """
    base = parse_family(family) if isinstance(family, str) else family
    caps = caps or Caps.from_env()
    params = list(params)
    specs = [_member_spec(base, p, seed) for p in params]
    graphs = [s.build() for s in specs]
    # a member is skipped when neither Γ nor b fits under the caps
    todo = [i for i, g in enumerate(graphs) if g.n <= max(caps.gamma, caps.b)]
    records: list[ProfileRecord | None] = [None] * len(graphs)
    jobs = [(graphs[i], caps) for i in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = list(pool.map(_profile_member, jobs))
    else:
        done = [_profile_member(j) for j in jobs]
    for i, rec in zip(todo, done):
        records[i] = rec

    checks: list[Check] = []
    labels = [s.param_label() for s in specs]
    for label, rec in zip(labels, records):
        if rec is not None:
            checks.append(Check(f"chain[{label}]", rec.chain_holds(),
                                {k: getattr(rec, k) for k in ("omega", "chi", "b", "m", "delta", "gamma")}))

    live = [(s, g, r) for s, g, r in zip(specs, graphs, records) if r is not None]
    if base.kind == "B":
        for s, g, r in live:
            checks.append(_prop3(s.params[0], g, r))
        ts = [s.params[0] for s, _, r in live if r.gamma is not None and r.b is not None]
        diffs = [r.gamma_minus_b for _, _, r in live if r.gamma is not None and r.b is not None]
        bs = [r.b for _, _, r in live if r.b is not None]
        checks.append(Check("gamma_minus_b_eq_t_minus_1", all(d == t - 1 for d, t in zip(diffs, ts)),
                            {"t": ts, "gamma_minus_b": diffs}))
        checks.append(Check("gamma_minus_b_increasing", _strictly_increasing(diffs), {"gamma_minus_b": diffs}))
        checks.append(Check("b_constant_2", all(b == 2 for b in bs), {"b": bs}))

    if base.kind in ("path", "caterpillar", "random_tree", "R"):
        for s, g, r in live:
            c = check_tree_bound(g, r)
            c.name = f"tree_bound[{s.param_label()}]"
            checks.append(c)
            c = check_tree_lower(r)
            c.name = f"tree_b_ge_m_minus_1[{s.param_label()}]"
            checks.append(c)

    if base.kind == "caterpillar":
        gammas = [r.gamma for _, _, r in live if r.gamma is not None]
        bs = [r.b for _, _, r in live if r.b is not None]
        bound = max(gammas, default=None)
        checks.append(Check("b_increasing", _strictly_increasing(bs), {"b": bs}))
        checks.append(Check("gamma_bounded", bound is not None, {"gamma": gammas, "C": bound}))
        # the constant 3 quoted for path-plus-leaves trees; recorded, not enforced
        checks.append(Check("gamma_le_3", None if bound is None else bound <= 3, {"C": bound}))

    if base.kind == "R":
        for s, g, r in live:
            k = s.params[0]
            col = r_coloring(k)
            d = {"k": k, "m": r.m, "b": r.b, "coloring": list(col), "b_coloring_valid": is_b_coloring(g, col),
                 "vertices": g.n, "leaves": sum(1 for x in g.degrees() if x == 1)}
            ok = d["b_coloring_valid"] and r.m == k and (r.b is None or r.b == k)
            checks.append(Check(f"R_b_coloring[k={k}]", ok, d))

    metadata = {
        "spec": str(base),
        "params": [list(p) if isinstance(p, tuple) else p for p in params],
        "seed": seed,
        "rng": RNG_NAME,
        "caps": asdict(caps),
    }
    if timestamp is not None:
        metadata["timestamp"] = timestamp
    return SweepReport(base.short, labels, records, checks, metadata)


def emit_report(report: SweepReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for label, rec in zip(report.members, report.records):
            if rec is None:
                w.writerow([report.family, label] + [""] * (len(CSV_COLUMNS) - 2))
                continue
            vals = [rec.n, rec.delta, rec.omega, rec.chi, rec.m, rec.gamma, rec.b, rec.gamma_minus_b]
            w.writerow([report.family, label] + ["" if v is None else v for v in vals])
        return buf.getvalue()
    raise GraphError(f"unknown report format {fmt!r}; expected json or csv")
