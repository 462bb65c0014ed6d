"""Exact invariants with certificates: toughness, connectivity, independence,
induced stars, cut-set utilities.

Toughness of a connected non-complete graph is min |S| / c(G - S) over all
cut-sets S, computed here with exact rationals throughout.  The optimized
solver prunes by connectivity, independence number and a running best; the
oracle walks every subset with none of that and exists only to gate the
solver.  Both report the same witness: the minimizing cut-set with the
smallest bitmask value (ties beyond that cannot occur).
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import EnvelopeError, Graph, VertexSet, bits, components, mask_of

ORACLE_MAX_VERTICES = 22


class _InfiniteToughness:
    """Toughness marker for complete graphs; compares above every number."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INFINITE")

    def __repr__(self):
        return "INFINITE"


INFINITE = _InfiniteToughness()


@dataclass(frozen=True)
class ToughnessCertificate:
    value: Fraction
    witness_cut: VertexSet
    component_count: int

    def validate(self, g: Graph) -> bool:
        """Recompute the ratio from the witness; certificates must self-check."""
        comps = components(g, self.witness_cut)
        if len(comps) != self.component_count or len(comps) < 2:
            return False
        return Fraction(self.witness_cut.bit_count(), len(comps)) == self.value


@dataclass(frozen=True)
class ConnectivityCertificate:
    kappa: int
    witness_cut: VertexSet | None  # None marks a complete graph (kappa = n-1)

    @property
    def is_complete_marker(self) -> bool:
        return self.witness_cut is None

    def validate(self, g: Graph) -> bool:
        if self.witness_cut is None:
            return g.is_complete() and self.kappa == g.n - 1
        if self.witness_cut.bit_count() != self.kappa:
            return False
        return len(components(g, self.witness_cut)) >= 2


@dataclass(frozen=True)
class StarInstance:
    """An induced K_{1,k}: center plus a bitmask of independent leaves."""

    center: int
    leaves: VertexSet


# ---------------------------------------------------------------------------
# component counting tuned for the subset sweeps

def _union_tables(adj: tuple[int, ...], n: int) -> list[list[int]]:
    # tables[c][byte] = union of neighborhoods of the byte's vertices in chunk c
    nchunks = (n + 7) >> 3
    tables = []
    for c in range(nchunks):
        base = c << 3
        width = min(8, n - base)
        tbl = [0] * 256
        for byte in range(1, 1 << width):
            low = byte & (byte - 1)
            tbl[byte] = tbl[low] | adj[base + (byte & -byte).bit_length() - 1]
        tables.append(tbl)
    return tables


def _count_components(alive: int, tables: list[list[int]]) -> int:
    cnt = 0
    rem = alive
    while rem:
        cnt += 1
        comp = rem & -rem
        frontier = comp
        while frontier:
            nb = 0
            f = frontier
            ti = 0
            while f:
                byte = f & 255
                if byte:
                    nb |= tables[ti][byte]
                f >>= 8
                ti += 1
            frontier = nb & rem & ~comp
            comp |= frontier
        rem &= ~comp
    return cnt


def _subsets_of_size(n: int, s: int):
    """All s-subsets of an n-bit universe as masks, ascending (Gosper)."""
    if s == 0:
        yield 0
        return
    x = (1 << s) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = ((r ^ x) >> (c.bit_length() + 1)) | r


# ---------------------------------------------------------------------------
# toughness, optimized path

def toughness(g: Graph, workers: int = 1):
    """Exact toughness with certificate; INFINITE for complete graphs.

    Disconnected graphs get value 0 via the empty cut-set.  The witness is
    the minimizing cut-set of smallest bitmask value, matching the oracle's
    tie-break exactly.
    """
    comps = components(g)
    if len(comps) > 1:
        return ToughnessCertificate(Fraction(0), 0, len(comps))
    if g.is_complete():
        return INFINITE
    alpha, _ = independence_number(g)
    kappa = connectivity(g).kappa
    best_s, best_k = _isolation_seed(g)
    best_s, best_k = _sweep_value(g, kappa, alpha, best_s, best_k, workers)
    value = Fraction(best_s, best_k)
    witness = _lex_min_witness(g, value, alpha)
    return ToughnessCertificate(value, witness, len(components(g, witness)))


def _isolation_seed(g: Graph) -> tuple[int, int]:
    """Warm-start ratio from single-vertex isolating cuts S = N(v)."""
    tables = _union_tables(g.adj, g.n)
    full = g.full_mask
    best_s = best_k = 0
    for v in range(g.n):
        cut = g.adj[v]
        k = _count_components(full & ~cut, tables)
        if k >= 2 and (best_k == 0 or cut.bit_count() * best_k < best_s * k):
            best_s, best_k = cut.bit_count(), k
    # connected non-complete: isolating some vertex always leaves >= 2 parts
    assert best_k >= 2
    return best_s, best_k


def _scan_size(adj: tuple[int, ...], n: int, s: int, best_s: int, best_k: int,
               top: int | None = None) -> tuple[int, int]:
    """Best ratio among size-s cut-sets; ``top`` restricts to max vertex = top."""
    tables = _union_tables(adj, n)
    full = (1 << n) - 1
    if top is None:
        stream = _subsets_of_size(n, s)
    else:
        hi = 1 << top
        stream = (sub | hi for sub in _subsets_of_size(top, s - 1))
    for x in stream:
        k = _count_components(full & ~x, tables)
        if k >= 2 and s * best_k < best_s * k:
            best_s, best_k = s, k
    return best_s, best_k


def _scan_size_task(args):
    return _scan_size(*args)


def _sweep_value(g: Graph, kappa: int, alpha: int, best_s: int, best_k: int,
                 workers: int) -> tuple[int, int]:
    """Size-major sweep for the optimal ratio.

    Sound bounds: cut-sets are at least kappa large; removing s vertices
    leaves at most min(n - s, alpha) components (one independent vertex per
    component), so once s / that cap reaches the running best no larger size
    can improve and the sweep stops.
    """
    n, adj = g.n, g.adj
    pool = None
    if workers > 1:
        pool = multiprocessing.get_context("fork").Pool(workers)
    try:
        for s in range(max(1, kappa), n - 1):
            kcap = min(n - s, alpha)
            if kcap < 2 or s * best_k >= best_s * kcap:
                break
            if pool is None:
                best_s, best_k = _scan_size(adj, n, s, best_s, best_k)
            else:
                # partition the size class by highest vertex; merge exactly
                tasks = [(adj, n, s, best_s, best_k, top) for top in range(s - 1, n)]
                for cs, ck in pool.map(_scan_size_task, tasks):
                    if ck and cs * best_k < best_s * ck:
                        best_s, best_k = cs, ck
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return best_s, best_k


def _lex_min_witness(g: Graph, value: Fraction, alpha: int) -> VertexSet:
    """Smallest-bitmask cut-set achieving the optimal ratio exactly.

    Candidate sizes are p*j with required component count q*j; sizes are
    scanned ascending and a size is skipped once even its smallest mask
    cannot beat the current candidate.
    """
    n, adj = g.n, g.adj
    tables = _union_tables(adj, n)
    full = g.full_mask
    p, q = value.numerator, value.denominator
    best = None
    j = 2 if q == 1 else 1
    while True:
        s, k = p * j, q * j
        if s > n - 2 or k > min(n - s, alpha):
            break
        if best is not None and (1 << s) - 1 >= best:
            break
        for x in _subsets_of_size(n, s):
            if best is not None and x >= best:
                break
            if _count_components(full & ~x, tables) == k:
                best = x
                break
        j += 1
    assert best is not None, "phase 1 established the value, a witness must exist"
    return best


# ---------------------------------------------------------------------------
# toughness, unpruned oracle

def _oracle_components(adj_sets: list[set[int]], alive: set[int]) -> int:
    seen: set[int] = set()
    cnt = 0
    for v in sorted(alive):
        if v in seen:
            continue
        cnt += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj_sets[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return cnt


def _oracle_range(adj_sets: list[set[int]], n: int, lo: int, hi: int):
    """Best (value, mask, k) over masks in [lo, hi); first mask wins ties."""
    verts = set(range(n))
    best = None  # (Fraction, mask, k)
    for mask in range(lo, hi):
        alive = {v for v in verts if not mask >> v & 1}
        k = _oracle_components(adj_sets, alive)
        if k >= 2:
            val = Fraction(mask.bit_count(), k)
            if best is None or val < best[0]:
                best = (val, mask, k)
    return best


def _oracle_range_task(args):
    return _oracle_range(*args)


def toughness_oracle(g: Graph, workers: int = 1):
    """Same contract as toughness(), via a full 2^n sweep with no pruning.

    Deliberately naive (set-based BFS, every subset visited) so it shares no
    search logic with the optimized solver.  Hard cap n <= 22.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise EnvelopeError(
            f"toughness oracle sweeps 2^n subsets, capped at n <= {ORACLE_MAX_VERTICES}"
        )
    adj_sets = [set(bits(row)) for row in g.adj]
    n = g.n
    if workers > 1:
        nch = 1
        while (1 << nch) < workers:
            nch += 1
        nch = 1 << nch  # 2^ceil(log2(workers)) chunks split by top bits
        step = (1 << n) // nch if (1 << n) >= nch else 1
        ranges = []
        lo = 0
        while lo < (1 << n):
            ranges.append((adj_sets, n, lo, min(lo + step, 1 << n)))
            lo += step
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            results = pool.map(_oracle_range_task, ranges)
        best = None
        for cand in results:  # ranges are ascending, so first strict min keeps lowest mask
            if cand is not None and (best is None or cand[0] < best[0]):
                best = cand
    else:
        best = _oracle_range(adj_sets, n, 0, 1 << n)
    if best is None:
        return INFINITE
    return ToughnessCertificate(best[0], best[1], best[2])


# ---------------------------------------------------------------------------
# t-tough decision

def is_t_tough(g: Graph, t) -> tuple[bool, VertexSet | None]:
    """Decide whether every cut-set S has |S| >= t * c(G - S).

    Returns (True, None) or (False, violating cut-set).  The witness is the
    first violation in (size, subset) order, not necessarily the global
    minimizer.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    comps = components(g)
    if len(comps) > 1:
        return (True, None) if t == 0 else (False, 0)
    if g.is_complete() or t == 0:
        return True, None
    p, q = t.numerator, t.denominator
    n, adj = g.n, g.adj
    alpha, _ = independence_number(g)
    tables = _union_tables(adj, n)
    full = g.full_mask
    for s in range(1, n - 1):
        kcap = min(n - s, alpha)
        if kcap < 2 or s * q >= p * kcap:
            break
        for x in _subsets_of_size(n, s):
            k = _count_components(full & ~x, tables)
            if k >= 2 and s * q < p * k:
                return False, x
    return True, None


# ---------------------------------------------------------------------------
# vertex connectivity via vertex-split max-flow (Menger)

def connectivity(g: Graph) -> ConnectivityCertificate:
    """Exact vertex connectivity with a minimum separator witness.

    Complete graphs get kappa = n-1 and a None witness.  Otherwise kappa is
    the minimum over the standard dominating pair family: a minimum-degree
    vertex v against its non-neighbors, plus non-adjacent pairs inside N(v).
    """
    n = g.n
    if len(components(g)) > 1:
        return ConnectivityCertificate(0, 0)
    if g.is_complete():
        return ConnectivityCertificate(n - 1, None)
    v = min(range(n), key=lambda u: (g.degree(u), u))
    pairs = [(v, u) for u in range(n) if u != v and not g.has_edge(v, u)]
    nbrs = sorted(bits(g.adj[v]))
    pairs.extend(
        (x, y) for x, y in combinations(nbrs, 2) if not g.has_edge(x, y)
    )
    flows = [(_max_flow_value(g, s, t), s, t) for s, t in pairs]
    kappa = min(f for f, _, _ in flows)
    for f, s, t in flows:
        if f == kappa:
            witness = _min_cut_vertices(g, s, t)
            break
    return ConnectivityCertificate(kappa, witness)


def _build_capacity(g: Graph) -> list[list[int]]:
    # node 2v is v_in, 2v+1 is v_out; vertex arcs carry 1, edge arcs n (effectively infinite)
    n = g.n
    big = n
    cap = [[0] * (2 * n) for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1
        for u in bits(g.adj[v]):
            cap[2 * v + 1][2 * u] = big
    return cap


def _augment(cap: list[list[int]], src: int, snk: int) -> bool:
    size = len(cap)
    parent = [-1] * size
    parent[src] = src
    queue = [src]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == snk:
            break
        row = cap[x]
        for y in range(size):
            if row[y] > 0 and parent[y] < 0:
                parent[y] = x
                queue.append(y)
    if parent[snk] < 0:
        return False
    y = snk
    while y != src:
        x = parent[y]
        cap[x][y] -= 1
        cap[y][x] += 1
        y = x
    return True


def _run_flow(g: Graph, s: int, t: int) -> tuple[int, list[list[int]]]:
    cap = _build_capacity(g)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while _augment(cap, src, snk):
        flow += 1
    return flow, cap


def _max_flow_value(g: Graph, s: int, t: int) -> int:
    return _run_flow(g, s, t)[0]


def _min_cut_vertices(g: Graph, s: int, t: int) -> VertexSet:
    flow, cap = _run_flow(g, s, t)
    size = 2 * g.n
    reach = [False] * size
    reach[2 * s + 1] = True
    queue = [2 * s + 1]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in range(size):
            if cap[x][y] > 0 and not reach[y]:
                reach[y] = True
                queue.append(y)
    cut = mask_of(v for v in range(g.n) if reach[2 * v] and not reach[2 * v + 1])
    assert cut.bit_count() == flow
    return cut


# ---------------------------------------------------------------------------
# independence number

def independence_number(g: Graph) -> tuple[int, VertexSet]:
    """Exact maximum independent set size plus one witness set.

    Branch and bound on bitmasks: branch on a maximum-degree vertex of the
    candidate set, prune when even taking everything left cannot beat the
    incumbent.  Deterministic, so the witness is stable run to run.
    """
    n, adj = g.n, g.adj
    closed = [adj[v] | 1 << v for v in range(n)]
    best_size = 0
    best_set = 0

    def expand(cand: int, cur: int, size: int) -> None:
        nonlocal best_size, best_set
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            pivot, pdeg = -1, -1
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                d = (adj[v] & cand).bit_count()
                if d > pdeg:
                    pivot, pdeg = v, d
                m ^= low
            expand(cand & ~closed[pivot], cur | 1 << pivot, size + 1)
            cand &= ~(1 << pivot)
        if size > best_size:
            best_size, best_set = size, cur

    expand(g.full_mask, 0, 0)
    return best_size, best_set


# ---------------------------------------------------------------------------
# induced stars and claw structure

def induced_stars(g: Graph, k: int) -> list[StarInstance]:
    """All induced K_{1,k} subgraphs, ordered by center then leaf set."""
    if k < 2:
        raise ValueError(f"induced stars need k >= 2, got {k}")
    out = []
    for center in range(g.n):
        nbrs = sorted(bits(g.adj[center]))
        if len(nbrs) < k:
            continue
        for combo in combinations(nbrs, k):
            cm = mask_of(combo)
            if all(g.adj[u] & cm == 0 for u in combo):
                out.append(StarInstance(center, cm))
    return out


def claw_centers(g: Graph) -> VertexSet:
    """Vertices whose neighborhood holds an independent triple (claw centers)."""
    centers = 0
    for v in range(g.n):
        nbrs = sorted(bits(g.adj[v]))
        if len(nbrs) < 3:
            continue
        for combo in combinations(nbrs, 3):
            cm = mask_of(combo)
            if all(g.adj[u] & cm == 0 for u in combo):
                centers |= 1 << v
                break
    return centers


def is_claw_free(g: Graph) -> bool:
    return claw_centers(g) == 0


# ---------------------------------------------------------------------------
# cut-set utilities

def cutsets_of_size(g: Graph, s: int) -> list[VertexSet]:
    """All size-s vertex sets whose removal leaves >= 2 components.

    Masks come back in ascending order.  Empty when s > n - 2 (fewer
    than two vertices would remain)."""
    if s < 1:
        raise ValueError(f"cut-set size must be positive, got {s}")
    if s > g.n - 2:
        return []
    tables = _union_tables(g.adj, g.n)
    full = g.full_mask
    out = []
    for x in _subsets_of_size(g.n, s):
        if _count_components(full & ~x, tables) >= 2:
            out.append(x)
    return out


def is_vertex_cover(g: Graph, s: VertexSet) -> bool:
    """True when every edge has an endpoint in s."""
    if s & ~g.full_mask:
        raise ValueError("cover set mentions vertices outside the graph")
    outside = g.full_mask & ~s
    return all(g.adj[v] & outside == 0 for v in bits(outside))


# ---------------------------------------------------------------------------
# certificate JSON shapes (stable key order comes from json.dumps sort_keys)

def toughness_json(result) -> dict:
    if result is INFINITE:
        return {"invariant": "toughness", "value": "infinite",
                "witness": None, "components": None}
    return {
        "invariant": "toughness",
        "value": {"num": result.value.numerator, "den": result.value.denominator},
        "witness": list(bits(result.witness_cut)),
        "components": result.component_count,
    }


def connectivity_json(cert: ConnectivityCertificate) -> dict:
    return {
        "invariant": "connectivity",
        "value": {"num": cert.kappa, "den": 1},
        "witness": None if cert.witness_cut is None else list(bits(cert.witness_cut)),
        "components": None,
    }


def independence_json(alpha: int, witness: VertexSet) -> dict:
    return {
        "invariant": "independence",
        "value": {"num": alpha, "den": 1},
        "witness": list(bits(witness)),
        "components": None,
    }


def stars_json(stars: list[StarInstance]) -> dict:
    return {
        "invariant": "claws",
        "count": len(stars),
        "stars": [{"center": s.center, "leaves": list(bits(s.leaves))} for s in stars],
    }
