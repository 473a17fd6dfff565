"""Explicit quiver representations over the rationals.

Matrices act on row vectors: the map of an arrow a is a
``dim V(ta) x dim V(ha)`` matrix M and v maps to v M.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .quiverkit import (
    Multiplicities,
    Quiver,
    RootOrder,
    dimension_of,
    euler_form,
)


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple  # one matrix per arrow, aligned with quiver.arrows

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != len(q.vertices) or len(self.maps) != len(q.arrows):
            raise RepresentationError("representation does not match its quiver")
        for (t, h), mat in zip(q.arrows, self.maps):
            r, c = self.dim(t), self.dim(h)
            if len(mat) != r or any(len(row) != c for row in mat):
                raise RepresentationError(f"arrow {t}->{h} needs a {r}x{c} matrix")

    def dim(self, v) -> int:
        return self.dims[self.quiver.index(v)]

    def map(self, t, h) -> linalg.Matrix:
        return self.maps[self.quiver.arrows.index((t, h))]

    @classmethod
    def from_matrices(cls, q: Quiver, dims: Sequence[int], matrices: Sequence) -> "Representation":
        dims = tuple(dims)
        maps = []
        for (t, h), mat in zip(q.arrows, matrices):
            r, c = dims[q.index(t)], dims[q.index(h)]
            maps.append(tuple(tuple(row) for row in linalg.to_fraction_matrix(mat, r, c)))
        return cls(q, dims, tuple(maps))


def _freeze(mat) -> tuple:
    return tuple(tuple(Fraction(x) for x in row) for row in mat)


def zero_rep(q: Quiver, dims: Sequence[int]) -> Representation:
    dims = tuple(dims)
    maps = tuple(
        _freeze(linalg.zeros(dims[q.index(t)], dims[q.index(h)])) for t, h in q.arrows
    )
    return Representation(q, dims, maps)


def simple_rep(q: Quiver, i) -> Representation:
    return zero_rep(q, tuple(int(v == i) for v in q.vertices))


def reflection_functor(rep: Representation, i, direction: str) -> Representation:
    """BGP reflection functor at ``i``; the result lives on ``quiver.reflect_at(i)``.

    ``plus`` needs a sink and replaces V(i) by the kernel of the sum of the
    incoming maps; ``minus`` needs a source and uses the cokernel of the sum
    of the outgoing maps.
    """
    q = rep.quiver
    new_q = q.reflect_at(i)
    if direction == "plus":
        if not q.is_sink(i):
            raise RepresentationError(f"vertex {i} is not a sink")
        incoming = [k for k, (t, h) in enumerate(q.arrows) if h == i]
        sizes = [rep.dim(q.arrows[k][0]) for k in incoming]
        total = sum(sizes)
        stacked = [list(row) for k in incoming for row in rep.maps[k]]
        ker = linalg.left_nullspace(stacked, total, rep.dim(i)) if total else []
        new_dim = len(ker)
        maps = list(rep.maps)
        off = 0
        for k, size in zip(incoming, sizes):
            maps[k] = _freeze([row[off:off + size] for row in ker])
            off += size
    elif direction == "minus":
        if not q.is_source(i):
            raise RepresentationError(f"vertex {i} is not a source")
        outgoing = [k for k, (t, h) in enumerate(q.arrows) if t == i]
        sizes = [rep.dim(q.arrows[k][1]) for k in outgoing]
        total = sum(sizes)
        di = rep.dim(i)
        joined = [[x for k in outgoing for x in rep.maps[k][r]] for r in range(di)]
        coker = linalg.right_nullspace(joined, total) if total else []
        new_dim = len(coker[0]) if coker else 0
        maps = list(rep.maps)
        off = 0
        for k, size in zip(outgoing, sizes):
            maps[k] = _freeze(coker[off:off + size]) if new_dim else _freeze([[] for _ in range(size)])
            off += size
    else:
        raise ValueError("direction must be 'plus' or 'minus'")
    dims = list(rep.dims)
    dims[q.index(i)] = new_dim
    return Representation(new_q, tuple(dims), tuple(maps))


@lru_cache(maxsize=None)
def indecomposable(q: Quiver, ro: RootOrder, j: int) -> Representation:
    """Indecomposable with dimension vector gamma_j (1-based).

    Built from the simple at a_j on s_{a_{j-1}}...s_{a_1} Q by applying the
    minus functors at a_{j-1}, ..., a_1.
    """
    word = ro.word
    if not 1 <= j <= len(word):
        raise IndexError(j)
    quivers = [q]
    for a in word[: j - 1]:
        quivers.append(quivers[-1].reflect_at(a))
    rep = simple_rep(quivers[j - 1], word[j - 1])
    for a in reversed(word[: j - 1]):
        rep = reflection_functor(rep, a, "minus")
    if rep.quiver != q:  # pragma: no cover
        raise AssertionError("reflection functors did not return to the original orientation")
    if rep.dims != ro.gammas[j - 1]:
        raise AssertionError(
            f"indecomposable {j} has dimension {rep.dims}, expected {ro.gammas[j - 1]}"
        )
    return rep


def indecomposable_beta(q: Quiver, ro: RootOrder, j: int) -> Representation:
    """Indecomposable for beta_{j+1} (0-based index into ``ro.betas``)."""
    return indecomposable(q, ro, len(ro) - j)


def direct_sum(q: Quiver, reps: Sequence[Representation]) -> Representation:
    dims = tuple(sum(r.dims[k] for r in reps) for k in range(len(q.vertices)))
    maps = []
    for ai, (t, h) in enumerate(q.arrows):
        ti, hi = q.index(t), q.index(h)
        mat = linalg.zeros(dims[ti], dims[hi])
        ot = oh = 0
        for r in reps:
            block = r.maps[ai]
            for x, row in enumerate(block):
                for y, val in enumerate(row):
                    mat[ot + x][oh + y] = val
            ot += r.dims[ti]
            oh += r.dims[hi]
        maps.append(_freeze(mat))
    return Representation(q, dims, tuple(maps))


def rep_from_multiplicities(q: Quiver, ro: RootOrder, m: Multiplicities) -> Representation:
    """Direct sum of indecomposables, beta_1 blocks first."""
    summands = []
    for j, k in enumerate(m):
        summands.extend([indecomposable_beta(q, ro, j)] * k)
    if not summands:
        return zero_rep(q, (0,) * len(q.vertices))
    return direct_sum(q, summands)


def d_matrix(U: Representation, V: Representation) -> list[list[Fraction]]:
    """Matrix of d_U^V(f)_a = U_a f_ha - f_ta V_a on the unknowns f_i."""
    q = U.quiver
    if V.quiver != q:
        raise RepresentationError("representations of different quivers")
    offsets = {}
    n = 0
    for v in q.vertices:
        offsets[v] = n
        n += U.dim(v) * V.dim(v)

    def var(v, p, s):
        return offsets[v] + p * V.dim(v) + s

    rows = []
    for ai, (t, h) in enumerate(q.arrows):
        Ua, Va = U.maps[ai], V.maps[ai]
        for p in range(U.dim(t)):
            for s in range(V.dim(h)):
                row = [Fraction(0)] * n
                for r in range(U.dim(h)):
                    if Ua[p][r]:
                        row[var(h, r, s)] += Ua[p][r]
                for r in range(V.dim(t)):
                    if Va[r][s]:
                        row[var(t, p, r)] -= Va[r][s]
                rows.append(row)
    return rows


def rank_d(U: Representation, V: Representation) -> int:
    return linalg.rank(d_matrix(U, V))


def hom_dim(U: Representation, V: Representation) -> int:
    ambient = sum(a * b for a, b in zip(U.dims, V.dims))
    return ambient - rank_d(U, V)


def ext_dim(U: Representation, V: Representation) -> int:
    return hom_dim(U, V) - euler_form(U.quiver, U.dims, V.dims)


@lru_cache(maxsize=None)
def hom_table(q: Quiver, ro: RootOrder) -> tuple[tuple[int, ...], ...]:
    """hom_dim(I_{beta_u}, I_{beta_w}) for 0-based beta indices u, w."""
    N = len(ro)
    reps = [indecomposable_beta(q, ro, j) for j in range(N)]
    return tuple(tuple(hom_dim(reps[u], reps[w]) for w in range(N)) for u in range(N))


@lru_cache(maxsize=None)
def ext_table(q: Quiver, ro: RootOrder) -> tuple[tuple[int, ...], ...]:
    H = hom_table(q, ro)
    N = len(ro)
    return tuple(
        tuple(H[u][w] - euler_form(q, ro.betas[u], ro.betas[w]) for w in range(N))
        for u in range(N)
    )


def codim_orbit(q: Quiver, ro: RootOrder, m: Multiplicities) -> int:
    E = ext_table(q, ro)
    support = [j for j, k in enumerate(m) if k]
    return sum(m[u] * m[w] * E[u][w] for u in support for w in support)


def degeneration_leq(q: Quiver, ro: RootOrder, m1: Multiplicities, m2: Multiplicities) -> bool:
    """True iff the orbit closure of m1 lies inside that of m2.

    Hom can only grow under degeneration, so the test is
    rank d_U^{V1} <= rank d_U^{V2} for every indecomposable U.
    """
    if dimension_of(ro, m1) != dimension_of(ro, m2):
        raise RepresentationError("orbits have different dimension vectors")
    V1 = rep_from_multiplicities(q, ro, m1)
    V2 = rep_from_multiplicities(q, ro, m2)
    for j in range(len(ro)):
        U = indecomposable_beta(q, ro, j)
        if rank_d(U, V1) > rank_d(U, V2):
            return False
    return True


def decompose(q: Quiver, ro: RootOrder, rep: Representation) -> Multiplicities:
    """Multiplicities of ``rep`` from its Hom numbers against all indecomposables."""
    if rep.quiver != q:
        raise RepresentationError("representation is on a different quiver")
    N = len(ro)
    H = [list(map(Fraction, row)) for row in hom_table(q, ro)]
    if abs(linalg.determinant(H)) != 1:
        raise RepresentationError("Hom matrix of the indecomposables is not unimodular")
    rhs = [hom_dim(indecomposable_beta(q, ro, u), rep) for u in range(N)]
    sol = linalg.solve(H, rhs, N)
    if any(x.denominator != 1 or x < 0 for x in sol):
        raise RepresentationError(f"inconsistent decomposition {sol}")
    return tuple(int(x) for x in sol)


@dataclass(frozen=True)
class DegenerationPoset:
    orbits: tuple[Multiplicities, ...]
    leq: tuple[tuple[bool, ...], ...]  # leq[u][w]: orbit u lies in the closure of orbit w
    hasse: tuple[tuple[int, int], ...]  # covering pairs (u, w) with u < w

    def maxima(self) -> list[int]:
        n = len(self.orbits)
        return [w for w in range(n) if not any(self.leq[w][u] and u != w for u in range(n))]

    def is_partial_order(self) -> bool:
        n = len(self.orbits)
        L = self.leq
        refl = all(L[i][i] for i in range(n))
        anti = all(not (L[i][j] and L[j][i]) for i in range(n) for j in range(n) if i != j)
        trans = all(L[i][k] for i in range(n) for j in range(n) if L[i][j] for k in range(n) if L[j][k])
        return refl and anti and trans


def degeneration_poset(q: Quiver, ro: RootOrder, orbits: Sequence[Multiplicities]) -> DegenerationPoset:
    import networkx as nx

    orbits = tuple(tuple(m) for m in orbits)
    reps = [rep_from_multiplicities(q, ro, m) for m in orbits]
    ranks = [
        [rank_d(indecomposable_beta(q, ro, j), V) for j in range(len(ro))] for V in reps
    ]
    n = len(orbits)
    leq = tuple(
        tuple(all(a <= b for a, b in zip(ranks[u], ranks[w])) for w in range(n)) for u in range(n)
    )
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((u, w) for u in range(n) for w in range(n) if u != w and leq[u][w])
    if not nx.is_directed_acyclic_graph(g):
        raise RepresentationError("degeneration relation has a cycle")
    hasse = tuple(sorted(nx.transitive_reduction(g).edges()))
    return DegenerationPoset(orbits, leq, hasse)
