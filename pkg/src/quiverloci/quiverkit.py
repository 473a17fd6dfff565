"""Dynkin quivers, adapted reduced words and the Auslander-Reiten quiver."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Sequence

from .rootsys import (
    DiagramError,
    DynkinDiagram,
    Root,
    RootSystem,
    build_root_system,
    reflect,
    standard_edges,
)

Label = Hashable
Multiplicities = tuple[int, ...]


class QuiverError(DiagramError):
    """Raised when a quiver is not an orientation of an ADE diagram."""


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[tuple[Label, Label], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))

    @classmethod
    def from_arrows(cls, arrows: Iterable[tuple[Label, Label]], vertices=None) -> "Quiver":
        arrows = [tuple(a) for a in arrows]
        if vertices is None:
            seen: list = []
            for a in arrows:
                for v in a:
                    if v not in seen:
                        seen.append(v)
            vertices = sorted(seen, key=_label_key)
        return cls(tuple(vertices), tuple(arrows))

    def index(self, v: Label) -> int:
        return self.vertices.index(v)

    def is_sink(self, v: Label) -> bool:
        return all(t != v for t, _ in self.arrows)

    def is_source(self, v: Label) -> bool:
        return all(h != v for _, h in self.arrows)

    def sinks(self) -> list:
        return [v for v in self.vertices if self.is_sink(v)]

    def reflect_at(self, v: Label) -> "Quiver":
        """Reverse every arrow incident to ``v`` (s_v Q for a sink or source)."""
        arrows = tuple((h, t) if v in (t, h) else (t, h) for t, h in self.arrows)
        return Quiver(self.vertices, arrows)


def _label_key(v):
    return (type(v).__name__, v)


def equioriented_a(n: int) -> Quiver:
    return Quiver(tuple(range(1, n + 1)), tuple((i, i + 1) for i in range(1, n)))


def all_orientations(diagram: DynkinDiagram) -> list[Quiver]:
    edges = sorted((tuple(sorted(e, key=_label_key)) for e in diagram.edges), key=str)
    out = []
    for mask in range(2 ** len(edges)):
        arrows = tuple(
            (u, v) if not (mask >> k) & 1 else (v, u) for k, (u, v) in enumerate(edges)
        )
        out.append(Quiver(diagram.labels, arrows))
    return out


# --- validation ---------------------------------------------------------------


def validate_dynkin(q: Quiver) -> DynkinDiagram:
    """Return the underlying ADE diagram, labelled by ``q.vertices``.

    The diagram's ``canonical`` field records an isomorphism onto the
    standard numbering (the identity whenever ``q`` already uses it).
    """
    verts = q.vertices
    if len(set(verts)) != len(verts) or not verts:
        raise QuiverError("not a Dynkin quiver: vertex labels must be distinct and nonempty")
    vset = set(verts)
    undirected = set()
    for t, h in q.arrows:
        if t not in vset or h not in vset:
            raise QuiverError(f"not a Dynkin quiver: arrow {t}->{h} leaves the vertex set")
        if t == h:
            raise QuiverError(f"not a Dynkin quiver: loop at vertex {t}")
        e = frozenset((t, h))
        if e in undirected:
            raise QuiverError(f"not a Dynkin quiver: repeated edge between {t} and {h}")
        undirected.add(e)
    n = len(verts)
    adj = {v: [] for v in verts}
    for e in undirected:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)
    if len(undirected) != n - 1 or not _connected(verts, adj):
        raise QuiverError("not a Dynkin quiver: underlying graph is not a tree")

    series, canon = _identify(verts, adj)
    edges = frozenset(undirected)
    std = frozenset(frozenset(e) for e in standard_edges(series, n))
    if set(verts) == set(range(1, n + 1)) and edges == std:
        canon = {v: v for v in verts}
    return DynkinDiagram(series, n, tuple(verts), edges, tuple((v, canon[v]) for v in verts))


def _connected(verts, adj) -> bool:
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(verts)


def _identify(verts, adj) -> tuple[str, dict]:
    n = len(verts)
    ordered = sorted(verts, key=_label_key)
    branch = [v for v in verts if len(adj[v]) >= 3]
    if not branch:
        start = next(v for v in ordered if len(adj[v]) <= 1)
        path = _walk(start, None, adj)
        return "A", {v: i + 1 for i, v in enumerate(path)}
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        raise QuiverError("not a Dynkin quiver: branching is not of type D or E")
    c = branch[0]
    arms = [_walk(v, c, adj) for v in sorted(adj[c], key=_label_key)]
    arms.sort(key=len)
    lens = tuple(len(a) for a in arms)
    canon = {}
    if lens[0] == 1 and lens[1] == 1:
        # D_n: long arm reversed, then the centre at n-2, leaves n-1 and n
        for i, v in enumerate(reversed(arms[2])):
            canon[v] = i + 1
        canon[c] = n - 2
        canon[arms[0][0]] = n - 1
        canon[arms[1][0]] = n
        return "D", canon
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        short, mid, long_ = arms
        canon[mid[1]], canon[mid[0]] = 1, 2
        canon[c] = 3
        for i, v in enumerate(long_):
            canon[v] = 4 + i
        canon[short[0]] = n
        return "E", canon
    raise QuiverError(f"not a Dynkin quiver: arm lengths {lens} are not ADE")


def _walk(start, prev, adj) -> list:
    path = [start]
    while True:
        nxt = [v for v in adj[path[-1]] if v != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


@lru_cache(maxsize=None)
def root_system_of(q: Quiver) -> RootSystem:
    return build_root_system(validate_dynkin(q))


# --- adapted words -------------------------------------------------------------


@dataclass(frozen=True)
class RootOrder:
    """Roots gamma_1 < ... < gamma_N of an adapted word and their reversal."""

    word: tuple
    gammas: tuple[Root, ...]

    @property
    def betas(self) -> tuple[Root, ...]:
        return tuple(reversed(self.gammas))

    def __len__(self) -> int:
        return len(self.gammas)

    def beta_index(self, root: Root) -> int:
        return self.betas.index(tuple(root))


def _gamma(rs: RootSystem, prefix: Sequence, letter) -> Root:
    r = rs.simple_root(letter)
    for a in reversed(prefix):
        r = reflect(rs, a, r)
    return r


def sink_ordering(q: Quiver) -> list:
    """Admissible sink sequence, smallest label first among ties."""
    order = []
    cur = q
    remaining = list(q.vertices)
    while remaining:
        sinks = sorted((v for v in remaining if cur.is_sink(v)), key=_label_key)
        if not sinks:
            raise QuiverError("quiver has an oriented cycle")
        v = sinks[0]
        order.append(v)
        remaining.remove(v)
        cur = cur.reflect_at(v)
    return order


def adapted_word(q: Quiver) -> tuple:
    """A reduced word for w0 adapted to ``q``.

    Take the longest prefix of the repeated sink ordering whose roots stay
    positive and distinct; if that falls short of N letters, search over
    sink choices instead.
    """
    rs = root_system_of(q)
    N = len(rs.positive_roots)
    cycle = sink_ordering(q)
    word: list = []
    seen = set()
    k = 0
    while len(word) < N:
        letter = cycle[k % len(cycle)]
        g = _gamma(rs, word, letter)
        if not rs.is_positive(g) or g in seen:
            break
        seen.add(g)
        word.append(letter)
        k += 1
    if len(word) == N and validate_adapted(q, word):
        return tuple(word)
    found = _adapted_search(q, rs, N)
    if found is None:  # pragma: no cover - an adapted word always exists
        raise QuiverError("no adapted reduced word found")
    return found


def _adapted_search(q: Quiver, rs: RootSystem, N: int):
    def rec(cur: Quiver, word: list, seen: set):
        if len(word) == N:
            return tuple(word)
        for v in sorted(cur.sinks(), key=_label_key):
            g = _gamma(rs, word, v)
            if rs.is_positive(g) and g not in seen:
                seen.add(g)
                word.append(v)
                out = rec(cur.reflect_at(v), word, seen)
                if out is not None:
                    return out
                word.pop()
                seen.discard(g)
        return None

    return rec(q, [], set())


def validate_adapted(q: Quiver, letters: Sequence) -> bool:
    rs = root_system_of(q)
    N = len(rs.positive_roots)
    if len(letters) != N or any(a not in q.vertices for a in letters):
        return False
    cur = q
    seen = set()
    for j, a in enumerate(letters):
        if not cur.is_sink(a):
            return False
        g = _gamma(rs, letters[:j], a)
        if not rs.is_positive(g) or g in seen:
            return False
        seen.add(g)
        cur = cur.reflect_at(a)
    return True


def root_order(rs: RootSystem, word: Sequence) -> RootOrder:
    gammas = []
    seen = set()
    for j, a in enumerate(word):
        g = _gamma(rs, word[:j], a)
        if not rs.is_positive(g) or g in seen:
            raise QuiverError(f"word is not reduced at letter {j + 1}")
        seen.add(g)
        gammas.append(g)
    if len(gammas) != len(rs.positive_roots):
        raise QuiverError("word does not have length N")
    return RootOrder(tuple(word), tuple(gammas))


@lru_cache(maxsize=None)
def default_order(q: Quiver) -> RootOrder:
    return root_order(root_system_of(q), adapted_word(q))


# --- Auslander-Reiten quiver ---------------------------------------------------


@dataclass(frozen=True)
class ARQuiver:
    placements: tuple[tuple[Label, int], ...]  # index j-1 -> (row a_j, column c_j)
    edges: tuple[tuple[int, int], ...]  # 1-based (j, k)

    def to_dot(self, gammas: Sequence[Root] | None = None) -> str:
        lines = ["digraph AR {", "  rankdir=LR;"]
        for j, (row, col) in enumerate(self.placements, start=1):
            label = f"g{j}"
            if gammas is not None:
                label += " " + "".join(str(c) for c in gammas[j - 1])
            lines.append(f'  g{j} [label="{label}", pos="{col},{row}!"];')
        for j, k in self.edges:
            lines.append(f"  g{j} -> g{k};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def ar_quiver(rs: RootSystem, word: Sequence) -> ARQuiver:
    """Planar layout of the AR quiver from an adapted word.

    Adjacency of gamma_k and gamma_j is read through their rows a_k, a_j.
    Each gamma_j gets one outgoing edge per adjacent row: to the first later
    root in that row.
    """
    dg = rs.diagram
    cols = []
    for j, a in enumerate(word):
        if j == 0:
            cols.append(1)
            continue
        prev = cols[j - 1]
        bump = any(cols[k] == prev and dg.adjacent(word[k], a) for k in range(j))
        cols.append(prev + 1 if bump else prev)
    edges = []
    for j, a in enumerate(word):
        for b in dg.neighbors(a):
            for k in range(j + 1, len(word)):
                if word[k] == b:
                    edges.append((j + 1, k + 1))
                    break
    edges.sort()
    return ARQuiver(tuple(zip(word, cols)), tuple(edges))


# --- dimension vectors ---------------------------------------------------------


def dimvec(q: Quiver, d) -> tuple[int, ...]:
    """Normalise a mapping or sequence to a tuple in ``q.vertices`` order."""
    if isinstance(d, Mapping):
        if set(d) != set(q.vertices):
            raise ValueError("dimension vector must be defined on exactly the vertex set")
        out = tuple(int(d[v]) for v in q.vertices)
    else:
        out = tuple(int(x) for x in d)
        if len(out) != len(q.vertices):
            raise ValueError("dimension vector length does not match the vertex count")
    if any(x < 0 for x in out):
        raise ValueError("dimension vector entries must be nonnegative")
    return out


def euler_form(q: Quiver, d, d2) -> int:
    d, d2 = dimvec(q, d), dimvec(q, d2)
    idx = {v: i for i, v in enumerate(q.vertices)}
    return sum(a * b for a, b in zip(d, d2)) - sum(d[idx[t]] * d2[idx[h]] for t, h in q.arrows)


def dimension_of(ro: RootOrder, m: Multiplicities) -> tuple[int, ...]:
    n = len(ro.gammas[0])
    out = [0] * n
    for mult, beta in zip(m, ro.betas):
        for i in range(n):
            out[i] += mult * beta[i]
    return tuple(out)


def enumerate_orbits(rs: RootSystem, ro: RootOrder, d) -> list[Multiplicities]:
    """All multiplicity vectors (indexed by beta_1 > ... > beta_N) of total ``d``."""
    d = tuple(d)
    betas = ro.betas
    N = len(betas)
    n = len(d)
    # last root touching each vertex; past it the vertex's remainder must be 0
    last = [max((j for j in range(N) if betas[j][i]), default=-1) for i in range(n)]
    out: list[Multiplicities] = []
    m = [0] * N

    def rec(j: int, rem: list[int]):
        if j == N:
            if not any(rem):
                out.append(tuple(m))
            return
        beta = betas[j]
        cap = min(rem[i] // beta[i] for i in range(n) if beta[i])
        for k in range(cap, -1, -1):
            nxt = [rem[i] - k * beta[i] for i in range(n)]
            if any(nxt[i] and last[i] == j for i in range(n)):
                continue
            m[j] = k
            rec(j + 1, nxt)
        m[j] = 0

    rec(0, list(d))
    out.sort(reverse=True)
    return out


def root_key(root: Root) -> str:
    """JSON key for a root, e.g. ``"0110"``; comma-separated if a coefficient exceeds 9."""
    if all(0 <= c <= 9 for c in root):
        return "".join(str(c) for c in root)
    return ",".join(str(c) for c in root)


def parse_root_key(key: str, n: int) -> Root:
    parts = key.split(",") if "," in key else list(key)
    root = tuple(int(p) for p in parts)
    if len(root) != n:
        raise ValueError(f"root key {key!r} does not have {n} coefficients")
    return root


def multiplicities_to_json(ro: RootOrder, m: Multiplicities) -> dict[str, int]:
    return {root_key(b): k for b, k in zip(ro.betas, m) if k}


def multiplicities_from_json(ro: RootOrder, data: Mapping[str, int]) -> Multiplicities:
    n = len(ro.gammas[0])
    m = [0] * len(ro)
    for key, k in data.items():
        root = parse_root_key(key, n)
        if root not in ro.betas:
            raise ValueError(f"{key!r} is not a positive root")
        m[ro.beta_index(root)] = int(k)
    if any(k < 0 for k in m):
        raise ValueError("multiplicities must be nonnegative")
    return tuple(m)
