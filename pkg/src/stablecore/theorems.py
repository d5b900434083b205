"""Single-tree theorem verifiers and the sweep drivers around them.

Each verifier checks every clause of one statement on one tree.  Whenever a
tree is small enough, quantities are taken from the enumeration oracles
(all maximum stable sets, all stable sets, all maximal stable sets); larger
trees fall back to the linear-time routines and clauses that have no exact
polynomial route are reported as skipped, never as passed.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

from .core import (
    _branch_core,
    _core_and_alpha,
    canonical_split,
    has_perfect_matching,
    is_alpha_plus_stable,
    is_strong_unique_independence,
)
from .formats import parse_edge_list, to_edge_list
from .graph import Tree, bipartition, distance, distances_from, prufer_decode, random_tree
from .stable import (
    ALL_STABLE_CAP,
    ENUM_CAP,
    EXACT_CAP,
    _alpha_adj,
    mask_of,
    maximal_stable_masks,
    max_stable_set,
    members_of,
    mss_masks,
    stable_set_masks,
)

THEOREM_IDS = (
    "th4", "cor8", "cor4", "cor5", "prop6", "cor1", "th1th2", "prop4cor3",
    "lem3", "prop5", "lem4", "th6", "deg2k", "th7", "even_dist", "berge_pend",
)

# above this order the verifiers stop enumerating maximum stable sets
ORACLE_N = 16
EXHAUSTIVE_MAX_N = 8


def _oracle_core_alpha(t: Tree) -> tuple[frozenset[int], int]:
    if t.n <= ORACLE_N:
        alpha, found = mss_masks(t)
        acc = (1 << t.n) - 1
        for m in found:
            acc &= m
        return frozenset(members_of(acc)), alpha
    flags, alpha = _core_and_alpha(t.adj, t.n)
    return frozenset(v for v in range(t.n) if flags[v]), alpha


class TreeFacts:
    """Lazily computed quantities shared by the verifiers for one tree."""

    def __init__(self, t: Tree):
        self.t = t
        self.n = t.n

    @cached_property
    def pend(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if len(self.t.adj[v]) == 1)

    @cached_property
    def pend_mask(self) -> int:
        return mask_of(self.pend)

    @cached_property
    def bip(self):
        return bipartition(self.t)

    @cached_property
    def mss(self) -> list[int] | None:
        return mss_masks(self.t)[1] if self.n <= ORACLE_N else None

    @cached_property
    def _core_alpha(self) -> tuple[frozenset[int], int]:
        return _oracle_core_alpha(self.t)

    @property
    def core(self) -> frozenset[int]:
        return self._core_alpha[0]

    @property
    def alpha(self) -> int:
        return self._core_alpha[1]

    @cached_property
    def core_pend(self) -> frozenset[int]:
        return self.core & self.pend

    @cached_property
    def matching(self):
        return has_perfect_matching(self.t)

    @cached_property
    def splits(self) -> list:
        """``(v, (core1, alpha1), (core2, alpha2))`` for every vertex of degree >= 2.

        Cores are in the labels of the whole tree.  Small trees are split into
        real :class:`Tree` objects and go through the enumeration oracle.
        """
        out = []
        adj, n = self.t.adj, self.n
        for v in range(n):
            nb = adj[v]
            if len(nb) < 2:
                continue
            if n <= ORACLE_N:
                s = canonical_split(self.t, v)
                c1, a1 = _oracle_core_alpha(s.t1)
                c2, a2 = _oracle_core_alpha(s.t2)
                out.append((v, (frozenset(s.map1[x] for x in c1), a1), (frozenset(s.map2[x] for x in c2), a2)))
            else:
                c1, a1 = _branch_core(adj, n, v, nb[:1])
                c2, a2 = _branch_core(adj, n, v, nb[1:])
                out.append((v, (frozenset(c1), a1), (frozenset(c2), a2)))
        return out

    def pendant_with_stable_at_distance_two(self, s: int) -> bool:
        """Some pendant ``v`` in ``s`` has another member of ``s`` two steps away."""
        adj, masks = self.t.adj, self.t.masks
        for v in members_of(s & self.pend_mask):
            (u,) = adj[v]
            if masks[u] & s & ~(1 << v):
                return True
        return False


class _Outcome:
    def __init__(self):
        self.failure: tuple[str, str] | None = None
        self.skipped: list[str] = []
        self.checked = False

    def check(self, ok: bool, clause: str, detail: Callable[[], str] | str = "") -> bool:
        self.checked = True
        if not ok and self.failure is None:
            self.failure = (clause, detail() if callable(detail) else detail)
        return ok

    def skip(self, clause: str) -> None:
        self.skipped.append(clause)


def _fmt(vs) -> str:
    return "{" + ", ".join(map(str, sorted(vs))) + "}"


# -- verifiers -------------------------------------------------------------

def _berge_pend(f: TreeFacts, out: _Outcome) -> None:
    out.check(len(f.pend) >= 2, "|pend| >= 2", lambda: f"pend = {_fmt(f.pend)}")


def _th4(f: TreeFacts, out: _Outcome) -> None:
    n = f.n
    if n <= ALL_STABLE_CAP:
        for s in stable_set_masks(f.t, (n + 1) // 2):
            if not out.check(bool(s & f.pend_mask), "pendant", lambda: f"stable S = {_fmt(members_of(s))} has no pendant"):
                return
            if not out.check(
                f.pendant_with_stable_at_distance_two(s),
                "distance2",
                lambda: f"stable S = {_fmt(members_of(s))}: no pendant of S has a member of S at distance 2",
            ):
                return
        return
    out.skip("pendant")
    out.skip("distance2")
    a, b = mask_of(f.bip.class_a), mask_of(f.bip.class_b)
    samples = [m for m in (a, b) if 2 * m.bit_count() >= n] + [mask_of(max_stable_set(f.t).members)]
    for s in samples:
        if not out.check(bool(s & f.pend_mask), "pendant[sampled]", lambda: f"stable S = {_fmt(members_of(s))} has no pendant"):
            return


def _cor8(f: TreeFacts, out: _Outcome) -> None:
    if f.mss is not None:
        for s in f.mss:
            if not out.check(bool(s & f.pend_mask), "S & pend != {}", lambda: f"maximum stable {_fmt(members_of(s))} avoids pend"):
                return
        return
    # every maximum stable set meets pend iff deleting pend lowers alpha
    keep = [v for v in range(f.n) if v not in f.pend]
    local = {v: i for i, v in enumerate(keep)}
    adj = [[local[y] for y in f.t.adj[v] if y in local] for v in keep]
    rest = _alpha_adj(adj, len(keep))
    out.check(rest < f.alpha, "S & pend != {}", lambda: f"alpha(T - pend) = {rest} = alpha(T)")


def _cor4(f: TreeFacts, out: _Outcome) -> None:
    if 2 * f.alpha != f.n:
        out.checked = True
        return
    out.check(bool(f.bip.class_a & f.pend), "A & pend != {}", "class A holds no pendant")
    out.check(bool(f.bip.class_b & f.pend), "B & pend != {}", "class B holds no pendant")


def _cor5(f: TreeFacts, out: _Outcome) -> None:
    if 2 * f.alpha != f.n:
        out.checked = True
        return
    pend = sorted(f.pend)
    for u in pend:
        d = distances_from(f.t, u)
        if any(d[v] % 2 for v in pend):
            out.check(True, "odd pendant pair")
            return
    out.check(False, "odd pendant pair", "all pendant pairs are at even distance")


def _prop6(f: TreeFacts, out: _Outcome) -> None:
    _, cond = is_strong_unique_independence(f.t)
    out.check(cond.agree, "(i) <=> (ii) <=> (iii)", lambda: json.dumps(cond.to_json()))


def _cor1(f: TreeFacts, out: _Outcome) -> None:
    smallest = min(f.bip.sizes)
    if f.n <= ENUM_CAP:
        sets = maximal_stable_masks(f.t)
        prefix = ""
    else:
        out.skip("pendant")
        out.skip("distance2")
        prefix = "[sampled]"
        sets = [mask_of(f.bip.class_a), mask_of(f.bip.class_b), mask_of(max_stable_set(f.t).members)]
        for order in (range(f.n), range(f.n - 1, -1, -1)):
            s = 0
            for v in order:
                if not f.t.masks[v] & s:
                    s |= 1 << v
            sets.append(s)
    for s in sets:
        if s.bit_count() <= smallest:
            continue
        if not out.check(bool(s & f.pend_mask), "pendant" + prefix, lambda: f"maximal S = {_fmt(members_of(s))} has no pendant"):
            return
        if not out.check(
            f.pendant_with_stable_at_distance_two(s),
            "distance2" + prefix,
            lambda: f"maximal S = {_fmt(members_of(s))}, |S| > {smallest}: no pendant of S has a member of S at distance 2",
        ):
            return
    out.checked = True


def _th1th2(f: TreeFacts, out: _Outcome) -> None:
    n, alpha, c = f.n, f.alpha, f.core
    pm, witness = f.matching
    if pm:
        covered = sorted(x for e in witness for x in e)
        out.check(
            covered == list(range(n)) and all(f.t.has_edge(u, v) for u, v in witness),
            "matching witness",
            lambda: f"invalid perfect matching {witness}",
        )
    if f.mss is not None:
        full = (1 << n) - 1
        stars = set(f.mss)
        partition = any(full & ~s in stars for s in f.mss)
    else:
        # two complementary stable sets are a proper 2-coloring, hence {A, B}
        partition = f.bip.sizes == (alpha, alpha)
    facts = {"perfect matching": pm, "two mss partition V": partition, "core empty": not c}
    if n <= EXACT_CAP:
        aplus = is_alpha_plus_stable(f.t)
        out.check(aplus == (len(c) <= 1), "th1: alpha+ <=> |core| <= 1", lambda: f"alpha+ = {aplus}, core = {_fmt(c)}")
        facts["alpha+"] = aplus
    else:
        out.skip("th1: alpha+ <=> |core| <= 1")
        out.skip("th2: alpha+")
    out.check(len(set(facts.values())) == 1, "th2: four-way equivalence", lambda: json.dumps(facts))


def _prop4cor3(f: TreeFacts, out: _Outcome) -> None:
    n, a, k = f.n, f.alpha, len(f.core)
    out.check((2 * a > n) == (k >= 2), "alpha > n/2 <=> |core| >= 2", lambda: f"alpha = {a}, n = {n}, |core| = {k}")
    out.check((2 * a == n) == (k == 0), "alpha = n/2 <=> core empty", lambda: f"alpha = {a}, n = {n}, |core| = {k}")
    out.check(k != 1, "|core| != 1", lambda: f"core = {_fmt(f.core)}")


def _lem3(f: TreeFacts, out: _Outcome) -> None:
    out.checked = True
    for v, (_, a1), (_, a2) in f.splits:
        if v in f.core:
            if not out.check(
                f.alpha == a1 + a2 - 1,
                "alpha(T) = alpha(T1) + alpha(T2) - 1",
                lambda: f"v = {v}: alpha(T) = {f.alpha}, alpha(T1) = {a1}, alpha(T2) = {a2}",
            ):
                return


def _prop5(f: TreeFacts, out: _Outcome) -> None:
    out.checked = True
    for v, (c1, _), (c2, _) in f.splits:
        in_t = v in f.core
        in_both = v in c1 and v in c2
        if in_t and not in_both:
            out.check(False, "v in core(T) => v in core(T1), core(T2)", f"v = {v}")
            return
        if in_both and not in_t:
            out.check(False, "v in core(T1), core(T2) => v in core(T)", f"v = {v}")
            return


def _lem4(f: TreeFacts, out: _Outcome) -> None:
    out.checked = True
    for v, (c1, _), (c2, _) in f.splits:
        if v not in f.core:
            continue
        union = c1 | c2
        if not out.check(
            union == f.core,
            "core(T) = core(T1) | core(T2)",
            lambda: f"v = {v}: core(T) = {_fmt(f.core)}, union = {_fmt(union)}",
        ):
            return


def _th6(f: TreeFacts, out: _Outcome) -> None:
    if 2 * f.alpha > f.n:
        out.check(len(f.core_pend) >= 2, "|core & pend| >= 2", lambda: f"core & pend = {_fmt(f.core_pend)}")
    out.checked = True


def _deg2k(f: TreeFacts, out: _Outcome) -> None:
    out.checked = True
    if 2 * f.alpha <= f.n:
        return
    for v in sorted(f.core):
        d = len(f.t.adj[v])
        if d >= 4 and not out.check(
            len(f.core_pend) >= 2 * (d // 2),
            "|core & pend| >= 2k",
            lambda: f"v = {v} in core with degree {d}, |core & pend| = {len(f.core_pend)}",
        ):
            return


def _th7(f: TreeFacts, out: _Outcome) -> None:
    facts = {
        "alpha > n/2": 2 * f.alpha > f.n,
        "no perfect matching": not f.matching[0],
        "|core & pend| >= 2": len(f.core_pend) >= 2,
        "core non-empty": bool(f.core),
    }
    out.check(len(set(facts.values())) == 1, "four-way equivalence", lambda: json.dumps(facts))


def _even_dist(f: TreeFacts, out: _Outcome) -> None:
    out.checked = True
    if 2 * f.alpha <= f.n:
        return
    cp = sorted(f.core_pend)
    pair = None
    if len(cp) >= 2:
        d = distances_from(f.t, cp[0])
        even = [x for x in cp[1:] if d[x] % 2 == 0]
        odd = [x for x in cp[1:] if d[x] % 2]
        if even:
            pair = (cp[0], even[0])
        elif len(odd) >= 2:
            pair = (odd[0], odd[1])
    ok = pair is not None and distance(f.t, *pair) % 2 == 0
    if not out.check(ok, "even pair in core & pend", lambda: f"core & pend = {_fmt(cp)}"):
        return
    if len(cp) == 2:
        dd = distance(f.t, cp[0], cp[1])
        out.check(dd != 4, "exactly two => distance != 4", lambda: f"core & pend = {_fmt(cp)} at distance {dd}")


VERIFIERS: dict[str, Callable[[TreeFacts, _Outcome], None]] = {
    "th4": _th4,
    "cor8": _cor8,
    "cor4": _cor4,
    "cor5": _cor5,
    "prop6": _prop6,
    "cor1": _cor1,
    "th1th2": _th1th2,
    "prop4cor3": _prop4cor3,
    "lem3": _lem3,
    "prop5": _prop5,
    "lem4": _lem4,
    "th6": _th6,
    "deg2k": _deg2k,
    "th7": _th7,
    "even_dist": _even_dist,
    "berge_pend": _berge_pend,
}


# -- records ---------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    edge_list: str
    clause: str
    detail: str

    def to_json(self) -> dict:
        return {"edge_list": self.edge_list, "clause": self.clause, "detail": self.detail}


@dataclass(frozen=True)
class VerdictRecord:
    """Outcome of one verifier over one or many trees."""

    theorem_id: str
    instances_checked: int
    verdict: str
    counterexample: Counterexample | None = None
    instances_skipped: int = 0
    skipped_clauses: tuple[str, ...] = ()
    instances_failed: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict != "counterexample"

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instances_checked": self.instances_checked,
            "instances_skipped": self.instances_skipped,
            "instances_failed": self.instances_failed,
            "verdict": self.verdict,
            "skipped_clauses": list(self.skipped_clauses),
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, d: dict) -> VerdictRecord:
        cx = d.get("counterexample")
        return cls(
            d["theorem_id"],
            d["instances_checked"],
            d["verdict"],
            Counterexample(**cx) if cx else None,
            d.get("instances_skipped", 0),
            tuple(d.get("skipped_clauses", ())),
            d.get("instances_failed", 0),
        )


def _check_id(theorem_id: str) -> None:
    if theorem_id not in VERIFIERS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; choose from {', '.join(THEOREM_IDS)}")


def _run(theorem_id: str, facts: TreeFacts) -> VerdictRecord:
    out = _Outcome()
    VERIFIERS[theorem_id](facts, out)
    skipped = tuple(sorted(set(out.skipped)))
    if out.failure is not None:
        clause, detail = out.failure
        cx = Counterexample(to_edge_list(facts.t), clause, detail)
        return VerdictRecord(theorem_id, 1, "counterexample", cx, 0, skipped, 1)
    if not out.checked:
        return VerdictRecord(theorem_id, 0, "skipped", None, 1, skipped)
    return VerdictRecord(theorem_id, 1, "pass", None, 0, skipped)


def verify(theorem_id: str, t: Tree) -> VerdictRecord:
    """Check one statement on one tree."""
    _check_id(theorem_id)
    return _run(theorem_id, TreeFacts(t.as_tree()))


def verify_all(t: Tree, theorems=THEOREM_IDS) -> list[VerdictRecord]:
    facts = TreeFacts(t.as_tree())
    return [_run(tid, facts) for tid in theorems]


def verify_bonding_laws(t: Tree) -> list[VerdictRecord]:
    """The three clique-bonding checks (alpha additivity, core membership of
    the bond vertex, core union) over every canonical split of ``t``."""
    return verify_all(t, ("lem3", "prop5", "lem4"))


def replay(record: VerdictRecord) -> VerdictRecord:
    """Re-run the verifier on a stored counterexample tree."""
    if record.counterexample is None:
        raise ValueError("record carries no counterexample")
    t = parse_edge_list(record.counterexample.edge_list).as_tree()
    return verify(record.theorem_id, t)


# -- sweeps ----------------------------------------------------------------

@dataclass(frozen=True)
class SweepPlan:
    """Which trees to visit.

    ``exhaustive`` walks every labeled tree for ``n_min..n_max`` in Prüfer
    order.  ``random`` draws ``count`` trees; tree ``i`` uses
    ``random.Random(f"{seed}:{i}")`` to pick ``n`` in ``[n_min, n_max]`` and
    the Prüfer seed.
    """

    mode: str
    n_min: int
    n_max: int
    count: int = 0
    seed: int = 0
    theorems: tuple[str, ...] = THEOREM_IDS

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if not 2 <= self.n_min <= self.n_max:
            raise ValueError("need 2 <= n_min <= n_max")
        if self.mode == "exhaustive" and self.n_max > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive sweeps are limited to n <= {EXHAUSTIVE_MAX_N}")
        if self.mode == "random" and self.count < 0:
            raise ValueError("count must be non-negative")
        for tid in self.theorems:
            _check_id(tid)

    def size(self) -> int:
        if self.mode == "random":
            return self.count
        return sum(n ** (n - 2) for n in range(self.n_min, self.n_max + 1))

    def tree_at(self, index: int) -> Tree:
        if self.mode == "random":
            rng = random.Random(f"{self.seed}:{index}")
            n = rng.randint(self.n_min, self.n_max)
            return random_tree(n, rng.getrandbits(64))
        for n in range(self.n_min, self.n_max + 1):
            total = n ** (n - 2)
            if index < total:
                seq = []
                for _ in range(n - 2):
                    index, r = divmod(index, n)
                    seq.append(r)
                return prufer_decode(seq[::-1], n)
            index -= total
        raise IndexError("tree index beyond the plan")

    def trees(self, start: int = 0, stop: int | None = None) -> Iterator[Tree]:
        stop = self.size() if stop is None else stop
        if self.mode == "exhaustive":
            yield from _exhaustive_trees(self.n_min, self.n_max, start, stop)
        else:
            for i in range(start, stop):
                yield self.tree_at(i)


def _exhaustive_trees(n_min: int, n_max: int, start: int, stop: int) -> Iterator[Tree]:
    from itertools import islice, product

    offset = 0
    for n in range(n_min, n_max + 1):
        total = n ** (n - 2)
        lo, hi = max(start - offset, 0), min(stop - offset, total)
        if lo < hi:
            for seq in islice(product(range(n), repeat=n - 2), lo, hi):
                yield prufer_decode(seq, n)
        offset += total


@dataclass
class _Tally:
    checked: int = 0
    skipped: int = 0
    failed: int = 0
    first: tuple[int, Counterexample] | None = None
    clauses: set = field(default_factory=set)

    def merge(self, other: _Tally) -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        self.failed += other.failed
        self.clauses |= other.clauses
        if other.first is not None and (self.first is None or other.first[0] < self.first[0]):
            self.first = other.first


def _sweep_chunk(plan: SweepPlan, start: int, stop: int) -> dict[str, _Tally]:
    tallies = {tid: _Tally() for tid in plan.theorems}
    for i, t in enumerate(plan.trees(start, stop), start):
        facts = TreeFacts(t)
        for tid in plan.theorems:
            tally = tallies[tid]
            rec = _run(tid, facts)
            tally.checked += rec.instances_checked
            tally.skipped += rec.instances_skipped
            tally.clauses.update(rec.skipped_clauses)
            if rec.counterexample is not None:
                tally.failed += 1
                if tally.first is None:
                    tally.first = (i, rec.counterexample)
    return tallies


def worker_count(requested: int | None = None) -> int:
    """Resolve a worker count; ``None`` reads ``STABLECORE_THREADS`` (0 = auto)."""
    if requested is None:
        requested = int(os.environ.get("STABLECORE_THREADS", "1") or 1)
    if requested <= 0:
        requested = os.cpu_count() or 1
    return requested


def sweep(plan: SweepPlan, workers: int | None = None) -> list[VerdictRecord]:
    """Run the plan; one aggregated record per theorem, in plan order.

    Every tree is checked against every theorem; the stored counterexample
    is the earliest failing tree in plan order.  Results do not depend on
    ``workers``.
    """
    size = plan.size()
    workers = min(worker_count(workers), max(size, 1))
    if workers <= 1:
        parts = [_sweep_chunk(plan, 0, size)]
    else:
        step = -(-size // (workers * 4))
        bounds = [(lo, min(lo + step, size)) for lo in range(0, size, step)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_sweep_chunk, [plan] * len(bounds), *zip(*bounds)))
    total = {tid: _Tally() for tid in plan.theorems}
    for part in parts:
        for tid, tally in part.items():
            total[tid].merge(tally)
    records = []
    for tid in plan.theorems:
        tally = total[tid]
        cx = tally.first[1] if tally.first else None
        verdict = "counterexample" if cx else ("pass" if tally.checked else "skipped")
        records.append(
            VerdictRecord(tid, tally.checked, verdict, cx, tally.skipped, tuple(sorted(tally.clauses)), tally.failed)
        )
    return records


def to_jsonl(records: list[VerdictRecord]) -> str:
    return "".join(r.dumps() + "\n" for r in records)


def summary_table(records: list[VerdictRecord]) -> str:
    rows = [f"{'theorem':<11} {'checked':>9} {'skipped':>8} {'failed':>8}  verdict"]
    for r in records:
        line = f"{r.theorem_id:<11} {r.instances_checked:>9} {r.instances_skipped:>8} {r.instances_failed:>8}  {r.verdict}"
        if r.counterexample:
            line += f"  [{r.counterexample.clause}]"
        rows.append(line)
    return "\n".join(rows) + "\n"


def oracle_mismatches(t: Tree) -> list[str]:
    """Cross-check the fast routines against the enumeration oracle on one tree.

    Compares the tree DP, the branch-and-bound solver and the size of the
    enumerated maximum stable sets, and the removal-test core against the
    intersection of those sets.  Returns a description per disagreement.
    """
    from .core import core
    from .stable import alpha_exact, alpha_forest

    a_dp, a_bb = alpha_forest(t), alpha_exact(t)
    a_enum, found = mss_masks(t)
    out = []
    if not a_dp == a_bb == a_enum:
        out.append(f"alpha: dp={a_dp} exact={a_bb} enumeration={a_enum}")
    acc = (1 << t.n) - 1
    for m in found:
        acc &= m
    fast, slow = core(t), frozenset(members_of(acc))
    if fast != slow:
        out.append(f"core: removal test {_fmt(fast)} != intersection {_fmt(slow)}")
    return out
