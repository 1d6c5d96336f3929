"""Shared test utilities: quick representation builders and graph checks."""

from tauslice.exactlin import Matrix
from tauslice.modrep import Representation


def w(q, src, *names):
    """Path word (source vertex index, arrow index tuple) from arrow names."""
    return (q.vertex_index[src], tuple(q.arrow_index[n] for n in names))


def rep(alg, dims, **maps):
    """Representation from per-arrow row lists; missing arrows act by zero."""
    q = alg.quiver
    unknown = set(maps) - {ar.name for ar in q.arrows}
    if unknown:
        raise KeyError(f"not arrows of this quiver: {sorted(unknown)}")
    mats = []
    for j, ar in enumerate(q.arrows):
        ds = dims[q.arrow_source[j]]
        dt = dims[q.arrow_target[j]]
        if ar.name in maps:
            mats.append(Matrix(alg.field, maps[ar.name], ds))
        else:
            mats.append(Matrix.zero(alg.field, dt, ds))
    return Representation(alg, dims, mats)


def dims_multiset(mods):
    return sorted(m.dims for m in mods)


def digraph_is_acyclic(n, edges):
    """DFS cycle check on vertices 0..n-1 with directed edge list."""
    adj = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
    seen, active = set(), set()

    def visit(u):
        seen.add(u)
        active.add(u)
        for v in adj[u]:
            if v in active or (v not in seen and visit(v)):
                return True
        active.discard(u)
        return False

    return not any(visit(u) for u in range(n) if u not in seen)


def undirected_degrees(edges):
    """Sorted (descending) degree sequence of the underlying graph."""
    deg = {}
    for s, t in edges:
        deg[s] = deg.get(s, 0) + 1
        deg[t] = deg.get(t, 0) + 1
    return sorted(deg.values(), reverse=True)


def is_path_graph(edges, n_vertices):
    """Underlying graph is the line on n_vertices (ignoring orientation)."""
    if len(edges) != n_vertices - 1:
        return False
    deg = undirected_degrees(edges)
    return deg == [2] * (n_vertices - 2) + [1, 1] if n_vertices >= 2 else True
