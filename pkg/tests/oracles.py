"""Independent brute-force oracles used to cross-check the package.

Everything here works from first principles (subset and permutation
enumeration) and deliberately shares no search code with the package.
"""

from __future__ import annotations

from itertools import combinations, permutations


def cycle_is_pc(g, seq) -> bool:
    """Definitional check: consecutive edge colors differ all around."""
    length = len(seq)
    for i in range(length):
        a, b, c = seq[i - 1], seq[i], seq[(i + 1) % length]
        if g.colors[a][b] == g.colors[b][c]:
            return False
    return True


def canonical_cycles(vertices):
    """Every cyclic order of the vertex set, one per rotation+reflection."""
    vs = sorted(vertices)
    first = vs[0]
    for perm in permutations(vs[1:]):
        if len(perm) < 2 or perm[0] < perm[-1]:
            yield (first,) + perm


def all_short_pc_cycles(g, avoid=()):
    """All PC cycles of length 3 or 4 by raw enumeration."""
    verts = [v for v in range(g.n) if v not in set(avoid)]
    found = []
    for size in (3, 4):
        for subset in combinations(verts, size):
            for seq in canonical_cycles(subset):
                if cycle_is_pc(g, seq):
                    found.append(seq)
    return found


def all_pc_cycles(g, avoid=()):
    """All PC cycles of every length by raw enumeration."""
    verts = [v for v in range(g.n) if v not in set(avoid)]
    found = []
    for size in range(3, len(verts) + 1):
        for subset in combinations(verts, size):
            for seq in canonical_cycles(subset):
                if cycle_is_pc(g, seq):
                    found.append(seq)
    return found


def pack_exists(g, k, avoid=()) -> bool:
    """Naive packing oracle: try every k-subset of candidate short cycles."""
    cands = all_short_pc_cycles(g, avoid)
    for chosen in combinations(cands, k):
        used = set()
        ok = True
        for cyc in chosen:
            if used & set(cyc):
                ok = False
                break
            used |= set(cyc)
        if ok:
            return True
    return False


def all_dicycles(mt, max_length=None):
    """All elementary dicycles by raw enumeration, least vertex first."""
    n = mt.n
    cap = max_length if max_length is not None else n
    found = []
    for size in range(3, cap + 1):
        for subset in combinations(range(n), size):
            first = subset[0]
            for perm in permutations(subset[1:]):
                seq = (first,) + perm
                if all(mt.has_arc(seq[i], seq[(i + 1) % size]) for i in range(size)):
                    found.append(seq)
    return found


def dicycle_pack_exists(mt, k) -> bool:
    """Naive dicycle packing oracle over the full cycle universe."""
    cands = all_dicycles(mt)
    for chosen in combinations(cands, k):
        used = set()
        ok = True
        for cyc in chosen:
            if used & set(cyc):
                ok = False
                break
            used |= set(cyc)
        if ok:
            return True
    return False


def mono_cut_exists(g):
    """Scan all bipartitions with vertex 0 on the left side."""
    n = g.n
    rest = list(range(1, n))
    for size in range(0, n - 1):
        for extra in combinations(rest, size):
            side = {0, *extra}
            other = [v for v in range(n) if v not in side]
            cols = {g.colors[u][v] for u in side for v in other}
            if len(cols) == 1:
                return sorted(side), next(iter(cols))
    return None


def yeo_property_holds(g, verts, v) -> bool:
    """Definitional check on induced complete subgraphs: removing v leaves a
    single component, which must see v in at most one color."""
    others = [u for u in verts if u != v]
    if not others:
        return True
    return len({g.colors[v][u] for u in others}) <= 1
