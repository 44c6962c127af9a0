#!/usr/bin/env python3
"""Independent reference values for the test suite.

Nothing here imports the C++ library. Run it and compare with the constants
frozen in tests/test_oracle_values.cpp:

    python3 tools/oracles/oracles.py > tools/oracles/oracle_values.json
"""
import itertools
import json
import math
from fractions import Fraction

import networkx as nx
import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

TABLE1 = {  # columns (1),(2),(3),(4),(1,1),(2,2),(3,3),(4,4)
    "12": "00000000", "13": "00000001", "14": "00000011", "15": "00000111", "16": "00001111",
    "23": "00010001", "24": "00010011", "25": "00010111", "26": "00011111", "34": "00110012",
    "35": "00110112", "36": "00111112", "45": "01110122", "46": "01111122", "56": "11111222",
}
PHI_IMAGE = dict(TABLE1, **{"16": "10001111", "26": "10011111", "36": "10111112",
                            "45": "11110122", "46": "11111122", "56": "31111222"})
TABLE2 = {
    "123": "000000000", "124": "000000001", "125": "000000011", "126": "000001011", "134": "000000101",
    "135": "000000111", "136": "000001111", "145": "000100112", "146": "000101112", "156": "001101122",
    "234": "000010101", "235": "000010111", "236": "000011111", "245": "000110112", "246": "000111112",
    "256": "001111122", "345": "010110212", "346": "010111212", "356": "011111222", "456": "111211223",
}


def rows(table):
    return np.array([[int(c) for c in v] for v in table.values()], dtype=float)


def extreme_count(pts):
    """Points that are not convex combinations of the others (exact-feasibility LP)."""
    count = 0
    for i in range(len(pts)):
        others = np.delete(pts, i, axis=0)
        m = len(others)
        res = linprog(np.zeros(m), A_eq=np.vstack([others.T, np.ones(m)]),
                      b_eq=np.append(pts[i], 1.0), bounds=[(0, None)] * m, method="highs")
        count += res.status != 0
    return count


def hull_volume_times_factorial(pts):
    d = pts.shape[1]
    return round(ConvexHull(pts).volume * math.factorial(d))


def facet_count(pts):
    eq = ConvexHull(pts).equations
    return len({tuple(np.round(e / np.abs(e[:-1]).max(), 6)) for e in eq})


def lattice_points(pts, dilation=1):
    hull = ConvexHull(pts * dilation)
    hi = (pts.max(axis=0) * dilation).astype(int)
    grid = np.array(list(itertools.product(*[range(h + 1) for h in hi])), dtype=float)
    inside = np.all(grid @ hull.equations[:, :-1].T + hull.equations[:, -1] <= 1e-9, axis=1)
    return int(inside.sum())


def grid_poset(k, m):
    """i x j rectangles, i <= k rows, j <= m columns, ordered by containment."""
    g = nx.DiGraph()
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            g.add_node((i, j))
            if i < k:
                g.add_edge((i, j), (i + 1, j))
            if j < m:
                g.add_edge((i, j), (i, j + 1))
    return g


def filters(p):
    closure = nx.transitive_closure_dag(p)
    nodes = list(p.nodes)
    out = []
    for mask in range(1 << len(nodes)):
        s = {nodes[i] for i in range(len(nodes)) if mask >> i & 1}
        if all(v in s for u in s for v in closure.successors(u)):
            out.append(frozenset(s))
    return out


def plane_partitions(k, m, top):
    """Order-preserving maps from the grid poset to {0..top}: lattice points of top * O(P)."""
    return sum(1 for _ in _chains(k, m, top))


def _chains(k, m, top):
    cells = [(i, j) for i in range(k) for j in range(m)]
    for vals in itertools.product(range(top + 1), repeat=len(cells)):
        a = dict(zip(cells, vals))
        if all(a[(i, j)] <= a[(i + 1, j)] for i in range(k - 1) for j in range(m)) and \
           all(a[(i, j)] <= a[(i, j + 1)] for i in range(k) for j in range(m - 1)):
            yield a


def linear_extensions(p):
    return sum(1 for _ in nx.all_topological_sorts(p))


def grid_flow_count(k, n, J):
    """Vertex-disjoint path families in the planar grid network (west/south steps)."""
    m = n - k
    src = [s for s in range(1, k + 1) if s not in J]
    snk = [j for j in J if j > k]
    g = nx.DiGraph()
    for x in range(m + 1):
        for y in range(k + 1):
            if y > 0 and x > 0:
                g.add_edge((x, y), (x - 1, y))
            if y > 0 and x < m:
                g.add_edge((x, y), (x, y - 1))
    starts = {s: (m, k - s + 1) for s in src}
    ends = {j: (n - j, 0) for j in snk}
    # sources pair with sinks in reverse order (planarity)
    pairs = list(zip(sorted(src, reverse=True), sorted(snk)))
    paths = {p: list(nx.all_simple_paths(g, starts[p[0]], ends[p[1]])) for p in pairs}
    total = 0
    for combo in itertools.product(*[paths[p] for p in pairs]):
        seen = set()
        ok = True
        for path in combo:
            if seen & set(path):
                ok = False
                break
            seen |= set(path)
        total += ok
    return total


def triangulation_flip_graph(n):
    """Triangulations of an n-gon joined by diagonal flips."""
    diag = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]

    def cross(a, b):
        (i, j), (k, l) = a, b
        return (i < k < j < l) or (k < i < l < j)

    tris = [frozenset(c) for c in itertools.combinations(diag, n - 3)
            if all(not cross(a, b) for a, b in itertools.combinations(c, 2))]
    g = nx.Graph()
    g.add_nodes_from(tris)
    for a, b in itertools.combinations(tris, 2):
        if len(a & b) == n - 4:
            g.add_edge(a, b)
    return g


def transfer(k, m, x):
    """Stanley's transfer map: x_a - max over lower covers, 0 at the minimum."""
    out = {}
    for (i, j), v in x.items():
        lower = [x[c] for c in [(i - 1, j), (i, j - 1)] if c in x]
        out[(i, j)] = v - max(lower) if lower else v
    return out


def main():
    t1, t2, phi = rows(TABLE1), rows(TABLE2), rows(PHI_IMAGE)
    res = {}
    res["table1_extreme_points"] = extreme_count(t1)
    res["table2_extreme_points"] = extreme_count(t2)
    res["table1_volume_times_8_factorial"] = hull_volume_times_factorial(t1)
    res["phi_image_volume_times_8_factorial"] = hull_volume_times_factorial(phi)
    res["table2_volume_times_9_factorial"] = hull_volume_times_factorial(t2)
    res["table1_facets"] = facet_count(t1)
    res["table2_facets"] = facet_count(t2)
    res["table1_lattice_points"] = lattice_points(t1)
    res["table2_lattice_points"] = lattice_points(t2)
    res["table1_lattice_points_2x"] = lattice_points(t1, 2)

    for k, m in [(2, 4), (3, 3)]:
        p = grid_poset(k, m)
        key = f"{k}_{k + m}"
        res[f"poset_{key}_covers"] = p.number_of_edges()
        res[f"poset_{key}_filters"] = len(filters(p))
        res[f"poset_{key}_antichains"] = sum(1 for _ in nx.antichains(p))
        res[f"poset_{key}_linear_extensions"] = linear_extensions(p)
        res[f"poset_{key}_ehrhart_2"] = plane_partitions(k, m, 2)

    # indicator of the filter {(2,2),(3),(3,3),(4),(4,4)} in the 2 x 4 grid, as (rows, cols)
    filt = {(2, 2), (1, 3), (2, 3), (1, 4), (2, 4)}
    x = {(i, j): int((i, j) in filt) for i in range(1, 3) for j in range(1, 5)}
    y = transfer(2, 4, x)
    res["transfer_example_support"] = sorted(f"{i}x{j}" for (i, j), v in y.items() if v)

    for k, n in [(2, 4), (2, 5), (2, 6), (3, 6)]:
        res[f"grid_flow_counts_{k}_{n}"] = {
            "".join(map(str, J)): grid_flow_count(k, n, set(J))
            for J in itertools.combinations(range(1, n + 1), k)}

    for n in [4, 5, 6]:
        g = triangulation_flip_graph(n)
        res[f"flip_graph_{n}"] = [g.number_of_nodes(), g.number_of_edges()]

    res["binomial_3_6"] = math.comb(6, 3)
    res["volume_table1"] = str(Fraction(res["table1_volume_times_8_factorial"], math.factorial(8)))
    print(json.dumps(res, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
