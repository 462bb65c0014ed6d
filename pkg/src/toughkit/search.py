"""Isomorph-free enumeration of regular graphs and the census pipeline.

Canonical form: the graph6 string of the labeling whose upper-triangle
bitstring (column-major, the graph6 bit order) is lexicographically
maximal over all permutations, found by backtracking with prefix pruning.
Two graphs share the string iff they are isomorphic.

Enumeration is orderly: grow one vertex at a time, keep an extension only
when the grown labeled graph is already its own canonical labeling.  The
max-string canonical form is prefix-closed (a permutation improving a
prefix would extend to one improving the whole string), so every class is
produced exactly once and no isomorph store is needed.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .formats import ParseError, parse_graph6, serialize_graph6
from .graphs import EnvelopeError, Graph, is_connected, relabel
from .invariants import (
    INFINITE,
    claw_centers,
    connectivity,
    connectivity_json,
    is_t_tough,
    toughness,
    toughness_json,
)

CANONICAL_MAX_VERTICES = 12
LABELED_ORACLE_MAX_VERTICES = 8
PREDICATES = ("connected", "claw_free", "has_claw", "supertough")


def _identity_cols(n: int, adj) -> list[int]:
    cols = []
    for j in range(1, n):
        col = 0
        row = adj[j]
        for i in range(j):
            col = col << 1 | row >> i & 1
        cols.append(col)
    return cols


def _is_max_canonical(n: int, adj) -> bool:
    """Is this labeling already the lex-max one?  Backtracks over labelings,
    pruning branches that fall below the identity string."""
    if n == 1:
        return True
    target = _identity_cols(n, adj)

    def dfs(depth: int, placed: list[int], placed_mask: int) -> bool:
        if depth == n:
            return True  # an automorphism, not a beater
        want = target[depth - 1] if depth else 0
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            if depth == 0:
                if not dfs(1, [v], 1 << v):
                    return False
                continue
            row = adj[v]
            col = 0
            for p in placed:
                col = col << 1 | row >> p & 1
            if col > want:
                return False  # found a strictly larger labeling
            if col == want:
                placed.append(v)
                ok = dfs(depth + 1, placed, placed_mask | 1 << v)
                placed.pop()
                if not ok:
                    return False
        return True

    return dfs(0, [], 0)


def _max_labeling(n: int, adj) -> list[int]:
    """Position -> vertex permutation achieving the lex-max column string.

    ``equal`` tracks whether the column prefix built so far ties the current
    best exactly; after a strictly-greater subtree returns, the best has been
    replaced by a path extending this prefix, so the flag flips to equal.
    """
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    cols: list[int] = []
    placed: list[int] = []

    def dfs(depth: int, placed_mask: int, equal: bool) -> None:
        nonlocal best_cols, best_perm
        if depth == n:
            if not equal:
                best_cols = cols.copy()
                best_perm = placed.copy()
            return
        cands = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            row = adj[v]
            col = 0
            for p in placed:
                col = col << 1 | row >> p & 1
            cands.append((col, v))
        cands.sort(key=lambda cv: (-cv[0], cv[1]))
        for col, v in cands:
            if depth == 0:
                child_equal = equal  # no column at position 0
            elif equal:
                ref = best_cols[depth - 1]
                if col < ref:
                    break  # sorted descending, nothing later can tie or beat
                child_equal = col == ref
            else:
                child_equal = False
            placed.append(v)
            if depth:
                cols.append(col)
            dfs(depth + 1, placed_mask | 1 << v, child_equal)
            if depth:
                cols.pop()
            placed.pop()
            if not child_equal:
                equal = True

    dfs(0, 0, False)
    assert best_perm is not None
    return best_perm


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string: equal for two graphs iff they are isomorphic."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise EnvelopeError(
            f"canonical form search is capped at n <= {CANONICAL_MAX_VERTICES}"
        )
    if g.n == 1 or _is_max_canonical(g.n, g.adj):
        return serialize_graph6(g)
    perm = _max_labeling(g.n, g.adj)
    old_to_new = [0] * g.n
    for pos, v in enumerate(perm):
        old_to_new[v] = pos
    return serialize_graph6(relabel(g, old_to_new))


# ---------------------------------------------------------------------------
# orderly generation of connected r-regular graphs

def _feasible(rows: list[int], k: int, n: int, r: int) -> bool:
    """Can a k-vertex prefix with these degrees still finish r-regular on n?"""
    s = n - k
    total = 0
    for v in range(k):
        d = r - rows[v].bit_count()
        if d < 0 or d > s:
            return False
        total += d
    if total > r * s:
        return False
    spare = r * s - total  # twice the edge count still to be placed inside the suffix
    return spare % 2 == 0 and spare <= s * (s - 1)


def enumerate_regular(n: int, r: int) -> list[Graph]:
    """All connected r-regular graphs on n vertices, one per isomorphism class.

    Orderly vertex-extension search; output sorted by canonical graph6 (the
    emitted labelings are already canonical).  Envelope: n <= 12, r <= 4.
    """
    if n > 12 or r > 4:
        raise EnvelopeError(f"enumeration capped at n <= 12, r <= 4, got ({n}, {r})")
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r}, n={n}")
    if n * r % 2:
        raise ValueError(f"no {r}-regular graph on {n} vertices (odd degree sum)")
    level: list[list[int]] = [[0]]
    for k in range(1, n):
        nxt = []
        for rows in level:
            open_verts = [v for v in range(k) if rows[v].bit_count() < r]
            for size in range(min(r, len(open_verts)) + 1):
                for combo in combinations(open_verts, size):
                    grown = rows.copy()
                    newrow = 0
                    for v in combo:
                        grown[v] |= 1 << k
                        newrow |= 1 << v
                    grown.append(newrow)
                    if _feasible(grown, k + 1, n, r) and _is_max_canonical(k + 1, grown):
                        nxt.append(grown)
        level = nxt
    out = [Graph(n, tuple(rows)) for rows in level]
    out = [g for g in out if is_connected(g)]
    return sorted(out, key=serialize_graph6)


def labeled_regular_class_forms(n: int, r: int, connected_only: bool = True) -> set[str]:
    """Independent check on enumerate_regular: walk every labeled r-regular
    graph by row-completion backtracking and dedup through canonical_form.

    Exponential in the labeled count, so capped at n <= 8.
    """
    if n > LABELED_ORACLE_MAX_VERTICES:
        raise EnvelopeError(
            f"labeled enumeration capped at n <= {LABELED_ORACLE_MAX_VERTICES}"
        )
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r}, n={n}")
    if n * r % 2:
        raise ValueError(f"no {r}-regular graph on {n} vertices (odd degree sum)")
    rows = [0] * n
    forms: set[str] = set()

    def rec(v: int) -> None:
        if v == n:
            g = Graph(n, tuple(rows))
            if not connected_only or is_connected(g):
                forms.add(canonical_form(g))
            return
        need = r - rows[v].bit_count()
        if need < 0:
            return
        pool = [u for u in range(v + 1, n) if rows[u].bit_count() < r]
        if need > len(pool):
            return
        for combo in combinations(pool, need):
            for u in combo:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            rec(v + 1)
            for u in combo:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)

    rec(0)
    return forms


# ---------------------------------------------------------------------------
# census pipeline

@dataclass(frozen=True)
class SearchSpec:
    n: int
    r: int
    source: str = "builtin"  # "builtin" or "stream"
    predicates: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.source not in ("builtin", "stream"):
            raise ValueError(f"unknown source {self.source!r}")
        preds = tuple(sorted(set(self.predicates)))
        unknown = [p for p in preds if p not in PREDICATES]
        if unknown:
            raise ValueError(f"unknown predicates {unknown}")
        if "claw_free" in preds and "has_claw" in preds:
            raise ValueError("claw_free and has_claw are mutually exclusive")
        object.__setattr__(self, "predicates", preds)
        if not 0 <= self.r < self.n:
            raise ValueError(f"need 0 <= r < n, got r={self.r}, n={self.n}")
        if self.n * self.r % 2:
            raise ValueError(f"no {self.r}-regular graph on {self.n} vertices")


@dataclass
class CensusResult:
    spec: SearchSpec
    examined: int = 0
    complete_graphs: int = 0
    counts: dict = field(default_factory=dict)
    survivors: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "spec": {
                "n": self.spec.n,
                "r": self.spec.r,
                "source": self.spec.source,
                "predicates": list(self.spec.predicates),
            },
            "examined": self.examined,
            "complete_graphs": self.complete_graphs,
            "counts": dict(self.counts),
            "survivors": self.survivors,
            "errors": [{"line": ln, "message": msg} for ln, msg in self.errors],
        }


# pipeline stages ordered cheap to expensive; requested predicates filter,
# the rest are skipped
_STAGE_ORDER = ("regular", "connected", "claw_free", "has_claw", "supertough")


def _examine(args):
    """One graph through the predicate pipeline.

    Returns (stage flags dict, survivor record or None, is_complete)."""
    g, spec = args
    flags: dict[str, bool] = {}
    flags["regular"] = all(d == spec.r for d in (g.degree(v) for v in range(g.n)))
    ok = flags["regular"]
    comp = g.is_complete()
    want = spec.predicates
    if ok and "connected" in want:
        flags["connected"] = is_connected(g)
        ok = flags["connected"]
    if ok and "claw_free" in want:
        flags["claw_free"] = claw_centers(g) == 0
        ok = flags["claw_free"]
    if ok and "has_claw" in want:
        flags["has_claw"] = claw_centers(g) != 0
        ok = flags["has_claw"]
    if ok and "supertough" in want:
        # r-regular and not complete means toughness <= r/2, so the decision
        # procedure suffices for equality; complete graphs sit at INFINITE
        target = Fraction(spec.r, 2)
        flags["supertough"] = (not comp) and is_t_tough(g, target)[0]
        ok = flags["supertough"]
    record = None
    if ok:
        cert = toughness(g)
        tj = toughness_json(cert)
        if "supertough" in want:
            assert cert is not INFINITE and cert.value == Fraction(spec.r, 2)
        record = {
            "graph6": canonical_form(g),
            "toughness": tj,
            "connectivity": connectivity_json(connectivity(g)),
            "has_claw": claw_centers(g) != 0,
        }
    return flags, record, comp


def run_census(spec: SearchSpec, stream=None, workers: int = 1) -> CensusResult:
    """Filter a universe of graphs through the predicate pipeline.

    Builtin source enumerates connected r-regular classes; a stream source
    reads graph6 lines (malformed or mis-sized lines are recorded per line
    number and skipped).  Results are independent of worker count: counts
    are sums and survivors are sorted by canonical form.
    """
    res = CensusResult(spec=spec, counts={"regular": 0})
    for p in _STAGE_ORDER[1:]:
        if p in spec.predicates:
            res.counts[p] = 0
    graphs: list[Graph] = []
    if spec.source == "builtin":
        if stream is not None:
            raise ValueError("builtin source does not take a stream")
        graphs = enumerate_regular(spec.n, spec.r)
    else:
        if stream is None:
            raise ValueError("stream source needs lines of graph6")
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except ParseError as exc:
                res.errors.append((lineno, str(exc)))
                continue
            if g.n != spec.n:
                res.errors.append((lineno, f"expected order {spec.n}, got {g.n}"))
                continue
            graphs.append(g)
    res.examined = len(graphs)
    tasks = [(g, spec) for g in graphs]
    if workers > 1 and tasks:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            outcomes = pool.map(_examine, tasks)
    else:
        outcomes = [_examine(t) for t in tasks]
    for flags, record, comp in outcomes:
        if comp:
            res.complete_graphs += 1
        for p, passed in flags.items():
            if p in res.counts and passed:
                res.counts[p] += 1
        if record is not None:
            res.survivors.append(record)
    res.survivors.sort(key=lambda rec: rec["graph6"])
    return res
