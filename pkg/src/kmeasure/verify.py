"""Exhaustive checking suites with minimal-first counterexample reports.

Every suite returns a :class:`VerificationReport`. A failed comparison is
recorded as a counterexample, never raised. Counterexamples are kept per
group (at most :data:`CAP` each), ordered by ``n`` and then by the
enumeration order of the witnessing partition (reverse lexicographic,
see :func:`kmeasure.counting.iter_parts`), so the first entry of a group
is always the earliest witness.
"""

from __future__ import annotations

import json
import time
from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Iterable, Sequence

from kmeasure import counting
from kmeasure._parallel import map_by_n
from kmeasure.bijection import (
    _FORWARD,
    _INVERSE,
    STRATEGIES,
    Strategy,
    _deltas,
)
from kmeasure.counting import CountTable, iter_parts, max_order
from kmeasure.partition import _replace
from kmeasure.statistics import (
    contains_km_polygon,
    durfee_polygon_order,
    durfee_side,
    k_measure,
    k_measure_oracle,
    km_polygon_shape,
)

CAP = 10

SUITES = (
    "theorem1",
    "theorem2",
    "theorem-general",
    "theorem3",
    "k1-corollaries",
    "remark9",
    "measure-oracle",
    "durfee-gf",
    "map-postconditions",
    "strategy-search",
)

SEARCH_PROPERTIES = ("phi-codomain", "injective", "psi-phi-identity", "phi-psi-identity", "psi-codomain")
GENERAL_CHECKS = ("c=d", "a=polygon-order", "by-length", "telescoping")


@dataclass
class VerificationReport:
    suite: str
    params: dict[str, Any]
    status: str
    checks_run: int
    counterexamples: list[dict[str, Any]]
    elapsed_ms: float = 0.0
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d = {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "checks_run": self.checks_run,
            "counterexamples": self.counterexamples,
            "summary": self.summary,
        }
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"


class _Collector:
    """Per-group capped, sorted counterexample store plus tallies."""

    def __init__(self, cap: int = CAP):
        self.cap = cap
        self.groups: dict[tuple, list[tuple[tuple, dict]]] = {}
        self.checks: dict[tuple, int] = defaultdict(int)
        self.violations: dict[tuple, int] = defaultdict(int)

    def tally(self, group: tuple, n: int = 1) -> None:
        self.checks[group] += n

    def fail(self, group: tuple, sort_key: tuple, record: dict) -> None:
        self.violations[group] += 1
        bucket = self.groups.setdefault(group, [])
        bucket.append((sort_key, record))
        if len(bucket) > 4 * self.cap:
            bucket.sort(key=lambda kv: kv[0])
            del bucket[self.cap:]

    def counterexamples(self) -> list[dict]:
        out = []
        for group in sorted(self.groups, key=_group_order):
            bucket = sorted(self.groups[group], key=lambda kv: kv[0])[: self.cap]
            out.extend(rec for _, rec in bucket)
        return out

    @property
    def checks_run(self) -> int:
        return sum(self.checks.values())

    def nested_summary(self) -> dict:
        """``{label: {sub: {"checks": c, "violations": v}}}`` keyed by group tuples."""
        summary: dict = {}
        for group in sorted(set(self.checks) | set(self.violations), key=_group_order):
            node = summary
            for part in group[:-1]:
                node = node.setdefault(str(part), {})
            node[str(group[-1])] = {"checks": self.checks[group], "violations": self.violations[group]}
        return summary

    def report(self, suite: str, params: dict, started: float) -> VerificationReport:
        cex = self.counterexamples()
        return VerificationReport(
            suite=suite,
            params=params,
            status="fail" if cex else "pass",
            checks_run=self.checks_run,
            counterexamples=cex,
            elapsed_ms=(time.perf_counter() - started) * 1000.0,
            summary=self.nested_summary(),
        )


def _enum_key(parts: tuple[int, ...]) -> tuple[int, ...]:
    # ascending key == reverse-lexicographic order among partitions of one n
    return tuple(-v for v in parts)


def _group_order(group: tuple) -> tuple:
    return tuple((0, x) if isinstance(x, int) else (1, str(x)) for x in group)


def _compare_tables(col: _Collector, group: tuple, left: CountTable, right: CountTable,
                    labels: tuple[str, str], extra: dict | None = None) -> None:
    for key in sorted(set(left.entries) | set(right.entries)):
        col.tally(group)
        lv, rv = left.get(*key), right.get(*key)
        if lv != rv:
            inputs = dict(zip(left.key_names, key))
            if extra:
                inputs = {**extra, **inputs}
            col.fail(group, key, {
                "check": "/".join(str(g) for g in group),
                "inputs": inputs,
                "expected": {labels[0]: lv},
                "actual": {labels[1]: rv},
            })


# -- counting theorems ---------------------------------------------------

def check_theorem_1(n_max: int = 40, workers: int = 1) -> VerificationReport:
    """#{2-measure = m} == #{Durfee side = m} for every n <= n_max."""
    started = time.perf_counter()
    col = _Collector()
    a = counting.table_a(2, n_max, workers)
    b = counting.table_b_durfee(n_max, workers)
    _compare_tables(col, ("a=b",), a, b, ("2-measure", "durfee"))
    return col.report("theorem1", {"n_max": n_max}, started)


def check_theorem_2(n_max: int = 30, workers: int = 1) -> VerificationReport:
    started = time.perf_counter()
    col = _Collector()
    left = counting.table_by_length(2, n_max, "k-measure", workers)
    right = counting.table_by_length(2, n_max, "durfee", workers)
    _compare_tables(col, ("by-length",), left, right, ("2-measure", "durfee"))
    return col.report("theorem2", {"n_max": n_max}, started)


def check_theorem_general(k_max: int = 5, n_max: int = 30, workers: int = 1,
                          k_min: int = 1, checks: Sequence[str] = GENERAL_CHECKS) -> VerificationReport:
    """c_{k,m}(n) == d_{k,m}(n), exact-order and length-refined variants, and
    the telescoping identities linking them, for k_min <= k <= k_max."""
    started = time.perf_counter()
    unknown = set(checks) - set(GENERAL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}; expected a subset of {GENERAL_CHECKS}")
    col = _Collector()
    for k in range(k_min, k_max + 1):
        need_cd = "c=d" in checks or "telescoping" in checks
        need_exact = "a=polygon-order" in checks or "telescoping" in checks
        c = counting.table_c(k, n_max, workers) if need_cd else None
        d = counting.table_d(k, n_max, workers) if need_cd else None
        a = counting.table_a(k, n_max, workers) if need_exact else None
        order = counting.table_polygon_order(k, n_max, workers) if need_exact else None
        if "c=d" in checks:
            _compare_tables(col, ("c=d", k), c, d, ("c", "d"), {"k": k})
        if "a=polygon-order" in checks:
            _compare_tables(col, ("a=polygon-order", k), a, order, ("a", "polygon-order"), {"k": k})
        if "by-length" in checks:
            left = counting.table_by_length(k, n_max, "k-measure", workers)
            right = counting.table_by_length(k, n_max, "polygon-order", workers)
            _compare_tables(col, ("by-length", k), left, right, ("k-measure", "polygon-order"), {"k": k})
        if "telescoping" in checks:
            for exact, cum, label in ((a, c, "a=c(m)-c(m+1)"), (order, d, "order=d(m)-d(m+1)")):
                group = ("telescoping", label, k)
                for (n, m) in sorted(exact.entries):
                    col.tally(group)
                    lhs = exact.get(n, m)
                    rhs = cum.get(n, m) - cum.get(n, m + 1)
                    if lhs != rhs:
                        col.fail(group, (n, m), {"check": f"telescoping/{label}", "inputs": {"k": k, "n": n, "m": m},
                                                 "expected": lhs, "actual": rhs})
    params = {"k_min": k_min, "k_max": k_max, "n_max": n_max, "checks": list(checks)}
    return col.report("theorem-general", params, started)


def check_theorem_3(n_max: int = 40, workers: int = 1) -> VerificationReport:
    """Signed excess vs distinct-odd partitions, by series and by enumeration."""
    started = time.perf_counter()
    col = _Collector()
    excess = counting.signed_excess(n_max, workers)
    series = counting.distinct_odd_count(n_max)
    direct = counting.distinct_odd_enumerated(n_max, workers)
    for n in range(n_max + 1):
        for label, lhs, rhs in (("excess=series", excess[n], series[n]),
                                ("series=enumeration", series[n], direct[n]),
                                ("excess=enumeration", excess[n], direct[n])):
            col.tally((label,))
            if lhs != rhs:
                col.fail((label,), (n,), {"check": label, "inputs": {"n": n}, "expected": lhs, "actual": rhs})
    return col.report("theorem3", {"n_max": n_max}, started)


def _k1_counts(n: int) -> dict:
    top = max_order(1, n)
    at_least = [0] * (top + 2)
    exactly = [0] * (top + 2)
    d = [0] * (top + 2)
    order = [0] * (top + 2)
    seven = [0, 0]
    six = [0, 0]
    for parts in iter_parts(n):
        distinct = len(set(parts))
        exactly[distinct] += 1
        for m in range(distinct + 1):
            at_least[m] += 1
        for m in range(top + 1):
            if contains_km_polygon(parts, 1, m):
                d[m] += 1
        order[durfee_polygon_order(parts, 1)] += 1
        # the two worked instances, thresholds written out literally
        seven[0] += distinct >= 7
        seven[1] += len(parts) >= 7 and parts[6] >= 4
        six[0] += distinct >= 6
        six[1] += len(parts) >= 6 and parts[2] >= 4 and parts[5] >= 3
    return {"top": top, "at_least": at_least, "exactly": exactly, "d": d, "order": order,
            "seven": seven, "six": six}


def check_k1_corollaries(n_max: int = 40, workers: int = 1) -> VerificationReport:
    """k = 1: at least m distinct parts vs the (1,m)-polygon thresholds, the
    exact-order form, and the m = 7 and m = 6 worked instances."""
    started = time.perf_counter()
    col = _Collector()
    ns = list(range(n_max + 1))
    for n, r in zip(ns, map_by_n(_k1_counts, ns, workers)):
        for m in range(1, r["top"] + 1):
            for label, lhs, rhs in (("at-least-m-distinct=d", r["at_least"][m], r["d"][m]),
                                    ("exactly-m-distinct=polygon-order", r["exactly"][m], r["order"][m])):
                col.tally((label,))
                if lhs != rhs:
                    col.fail((label,), (n, m), {"check": label, "inputs": {"n": n, "m": m},
                                                "expected": lhs, "actual": rhs})
        for label, (lhs, rhs) in (("m=7: 7 distinct vs 7 parts >= 4", r["seven"]),
                                  ("m=6: 6 distinct vs 3 parts >= 4 + 3 more >= 3", r["six"])):
            col.tally((label,))
            if lhs != rhs:
                col.fail((label,), (n,), {"check": label, "inputs": {"n": n},
                                          "expected": lhs, "actual": rhs})
    return col.report("k1-corollaries", {"n_max": n_max}, started)


# -- statistic cross-checks ---------------------------------------------

def _remark9_failures(n: int) -> tuple[int, list]:
    bad = []
    count = 0
    for parts in iter_parts(n):
        count += 1
        a, b = durfee_polygon_order(parts, 2), durfee_side(parts)
        if a != b:
            bad.append((parts, a, b))
    return count, bad


def check_remark_9(n_max: int = 40, workers: int = 1) -> VerificationReport:
    """(2,m)-Durfee polygon order equals the Durfee side for every partition."""
    started = time.perf_counter()
    col = _Collector()
    ns = list(range(n_max + 1))
    for n, (count, bad) in zip(ns, map_by_n(_remark9_failures, ns, workers)):
        col.tally(("order=side",), count)
        for parts, a, b in bad:
            col.fail(("order=side",), (n, _enum_key(parts)),
                     {"check": "order=side", "inputs": {"partition": list(parts)},
                      "expected": b, "actual": a})
    for m in range(max_order(2, n_max) + 2):
        col.tally(("square-nodes",))
        nodes = km_polygon_shape(2, m).nodes
        if nodes != m * m:
            col.fail(("square-nodes",), (m,), {"check": "square-nodes", "inputs": {"m": m},
                                               "expected": m * m, "actual": nodes})
    return col.report("remark9", {"n_max": n_max}, started)


def _oracle_failures(k_max: int, n: int) -> tuple[int, list]:
    bad = []
    count = 0
    for parts in iter_parts(n):
        count += 1
        for k in range(1, k_max + 1):
            g, o = k_measure(parts, k), k_measure_oracle(parts, k)
            if g != o:
                bad.append((k, parts, g, o))
    return count, bad


def check_measure_oracle(k_max: int = 5, n_max: int = 30, workers: int = 1) -> VerificationReport:
    """Greedy k-measure against the dynamic-programming oracle."""
    started = time.perf_counter()
    col = _Collector()
    ns = list(range(n_max + 1))
    for n, (count, bad) in zip(ns, map_by_n(partial(_oracle_failures, k_max), ns, workers)):
        for k in range(1, k_max + 1):
            col.tally(("greedy=dp", k), count)
        for k, parts, g, o in bad:
            col.fail(("greedy=dp", k), (n, _enum_key(parts)), {"check": "greedy=dp", "inputs": {"k": k, "partition": list(parts)},
                                                    "expected": o, "actual": g})
    return col.report("measure-oracle", {"k_max": k_max, "n_max": n_max}, started)


def check_durfee_gf(n_max: int = 60, m_max: int = 7, workers: int = 1) -> VerificationReport:
    """Exhaustive Durfee-side counts against q^(m^2)/(q;q)_m^2."""
    started = time.perf_counter()
    col = _Collector()
    table = counting.table_b_durfee(n_max, workers)
    for m in range(m_max + 1):
        series = counting.durfee_gf_oracle(m, n_max)
        for n in range(n_max + 1):
            col.tally(("table=gf", m))
            if table.get(n, m) != series[n]:
                col.fail(("table=gf", m), (n,), {"check": "table=gf", "inputs": {"n": n, "m": m},
                                                 "expected": series[n], "actual": table.get(n, m)})
    return col.report("durfee-gf", {"n_max": n_max, "m_max": m_max}, started)


# -- map properties --------------------------------------------------------

def _map_worker(k_max: int, strategies: tuple[str, ...], properties: tuple[str, ...], n: int) -> dict:
    """All map checks for one weight n; returns tallies and capped failures."""
    checks: dict[tuple, int] = defaultdict(int)
    fails: dict[tuple, list] = defaultdict(list)
    want = set(properties)
    partitions = list(iter_parts(n))

    def fail(group, key, record):
        fails[group].append((key, record))

    for k in range(1, k_max + 1):
        mus = {p: k_measure(p, k) for p in partitions}
        for m in range(1, max_order(k, n) + 1):
            deltas = _deltas(k, m)
            neg = tuple(-d for d in deltas)
            C = [p for p in partitions if mus[p] >= m]
            D = [p for p in partitions if contains_km_polygon(p, k, m)]
            for s in strategies:
                fwd = _FORWARD[Strategy(s)]
                inv = _INVERSE[Strategy(s)]

                def phi_(p):
                    idx = fwd(p, k, m)
                    return _replace(p, idx, [p[i] + d for i, d in zip(idx, deltas)])

                def psi_(p):
                    idx = inv(p, k, m)
                    return _replace(p, idx, [p[i] + d for i, d in zip(idx, neg)])

                base = {"strategy": s, "k": k, "m": m, "n": n}
                images: dict[tuple, list] = defaultdict(list)
                for p in C:
                    q = phi_(p)
                    images[q].append(p)
                    if "phi-codomain" in want:
                        g = (s, "phi-codomain", k, m)
                        checks[g] += 1
                        problems = []
                        if not contains_km_polygon(q, k, m):
                            problems.append("not in D")
                        if sum(q) != n:
                            problems.append("weight changed")
                        if len(q) != len(p):
                            problems.append("length changed")
                        if problems:
                            fail(g, (n, _enum_key(p)), {"check": "phi-codomain", "inputs": {**base, "partition": list(p)},
                                             "expected": "image in D_{k,m}(n), same weight and length",
                                             "actual": {"image": list(q), "problems": problems}})
                    if "psi-phi-identity" in want:
                        g = (s, "psi-phi-identity", k, m)
                        checks[g] += 1
                        back = psi_(q)
                        if back != p:
                            fail(g, (n, _enum_key(p)), {"check": "psi-phi-identity", "inputs": {**base, "partition": list(p)},
                                             "expected": list(p), "actual": {"phi": list(q), "psi(phi)": list(back)}})
                if "injective" in want:
                    g = (s, "injective", k, m)
                    checks[g] += len(C)
                    for q, pre in images.items():
                        if len(pre) > 1:
                            pre = sorted(pre, reverse=True)
                            fail(g, (n, _enum_key(pre[0])), {"check": "injective",
                                                  "inputs": {**base, "partitions": [list(x) for x in pre]},
                                                  "expected": "distinct images", "actual": list(q)})
                if "psi-codomain" in want or "phi-psi-identity" in want:
                    Cset = {p for p in C}
                    for p in D:
                        r = psi_(p)
                        in_c = r in Cset
                        if "psi-codomain" in want:
                            g = (s, "psi-codomain", k, m)
                            checks[g] += 1
                            problems = []
                            if not in_c:
                                problems.append(f"mu_{k} = {k_measure(r, k)} < {m}")
                            if sum(r) != n:
                                problems.append("weight changed")
                            if len(r) != len(p):
                                problems.append("length changed")
                            if problems:
                                fail(g, (n, _enum_key(p)), {"check": "psi-codomain", "inputs": {**base, "partition": list(p)},
                                                 "expected": "image in C_{k,m}(n), same weight and length",
                                                 "actual": {"image": list(r), "problems": problems}})
                        if "phi-psi-identity" in want:
                            g = (s, "phi-psi-identity", k, m)
                            checks[g] += 1
                            fwd_back = phi_(r) if in_c else None
                            if fwd_back != p:
                                actual = ({"psi": list(r), "phi(psi)": list(fwd_back)} if in_c
                                          else {"psi": list(r), "phi(psi)": "undefined: psi(p) outside C_{k,m}"})
                                fail(g, (n, _enum_key(p)), {"check": "phi-psi-identity",
                                                 "inputs": {**base, "partition": list(p)},
                                                 "expected": list(p), "actual": actual})
    capped = {}
    for g, items in fails.items():
        items.sort(key=lambda kv: kv[0])
        capped[g] = (len(items), items[:CAP])
    return {"checks": dict(checks), "fails": capped}


def _run_map_checks(suite: str, k_max: int, n_max: int, strategies: Iterable[Strategy | str],
                    properties: tuple[str, ...], workers: int) -> VerificationReport:
    started = time.perf_counter()
    strategies = tuple(Strategy(s).value for s in strategies)
    col = _Collector()
    ns = list(range(n_max + 1))
    for result in map_by_n(partial(_map_worker, k_max, strategies, properties), ns, workers):
        for g, c in result["checks"].items():
            col.tally(g, c)
        for g, (total, items) in result["fails"].items():
            for key, rec in items:
                col.fail(g, key, rec)
            col.violations[g] += total - len(items)
    # every requested group shows up in the summary, even when vacuous
    for s in strategies:
        for prop in properties:
            for k in range(1, k_max + 1):
                for m in range(1, max_order(k, n_max) + 1):
                    col.tally((s, prop, k, m), 0)
    params = {"k_max": k_max, "n_max": n_max, "strategies": list(strategies), "properties": list(properties)}
    report = col.report(suite, params, started)
    report.summary = _strategy_summary(col, strategies, properties)
    return report


def _strategy_summary(col: _Collector, strategies: tuple[str, ...], properties: tuple[str, ...]) -> dict:
    out: dict = {}
    for s in strategies:
        out[s] = {}
        for prop in properties:
            groups = [g for g in col.checks if g[0] == s and g[1] == prop]
            checks = sum(col.checks[g] for g in groups)
            violations = sum(col.violations[g] for g in groups)
            failing = sorted(f"k={g[2]},m={g[3]}" for g in groups if col.violations[g])
            out[s][prop] = {"holds": violations == 0, "checks": checks, "violations": violations,
                            "failing": failing}
    return out


def check_map_postconditions(k_max: int = 5, n_max: int = 30,
                             strategies: Iterable[Strategy | str] = STRATEGIES,
                             workers: int = 1) -> VerificationReport:
    """phi lands in D and psi lands in C, weight and length preserved."""
    return _run_map_checks("map-postconditions", k_max, n_max, strategies,
                           ("phi-codomain", "psi-codomain"), workers)


def strategy_search(k_max: int = 5, n_max: int = 30,
                    strategies: Iterable[Strategy | str] = STRATEGIES,
                    workers: int = 1) -> VerificationReport:
    """Measure, per strategy, whether the maps are well-defined mutual inverses.

    Checks codomains, injectivity of phi on C_{k,m}(n), and both round trips
    for every k <= k_max, n <= n_max and feasible m >= 1.
    """
    return _run_map_checks("strategy-search", k_max, n_max, strategies, SEARCH_PROPERTIES, workers)


def run_suite(name: str, *, n_max: int | None = None, k_max: int | None = None,
              strategies: Sequence[str] | None = None, workers: int = 1) -> VerificationReport:
    """Dispatch by suite name with the default bounds of each suite."""
    strategies = tuple(strategies) if strategies else STRATEGIES
    if name == "theorem1":
        return check_theorem_1(n_max if n_max is not None else 40, workers)
    if name == "theorem2":
        return check_theorem_2(n_max if n_max is not None else 30, workers)
    if name == "theorem-general":
        return check_theorem_general(k_max or 5, n_max if n_max is not None else 30, workers)
    if name == "theorem3":
        return check_theorem_3(n_max if n_max is not None else 40, workers)
    if name == "k1-corollaries":
        return check_k1_corollaries(n_max if n_max is not None else 40, workers)
    if name == "remark9":
        return check_remark_9(n_max if n_max is not None else 40, workers)
    if name == "measure-oracle":
        return check_measure_oracle(k_max or 5, n_max if n_max is not None else 30, workers)
    if name == "durfee-gf":
        return check_durfee_gf(n_max if n_max is not None else 60, 7, workers)
    if name == "map-postconditions":
        return check_map_postconditions(k_max or 5, n_max if n_max is not None else 30, strategies, workers)
    if name == "strategy-search":
        return strategy_search(k_max or 5, n_max if n_max is not None else 30, strategies, workers)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
