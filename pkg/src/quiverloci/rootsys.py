"""Simply-laced root systems and symmetric-group combinatorics.

Roots are integer tuples in the simple-root basis, indexed by the position
of each vertex in ``DynkinDiagram.labels``.  Permutations are one-line
tuples on ``1..m``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations as _all_perms
from math import comb, factorial
from typing import Hashable, Sequence

Label = Hashable
Root = tuple[int, ...]
Permutation = tuple[int, ...]

_E_CHAIN_BRANCH = 3  # the E branch node hangs off chain vertex 3


class DiagramError(ValueError):
    """Raised for graphs that are not ADE Dynkin diagrams."""


def positive_root_count(series: str, rank: int) -> int:
    if series == "A":
        return rank * (rank + 1) // 2
    if series == "D":
        return rank * (rank - 1)
    if series == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    raise DiagramError(f"unknown series {series!r}")


def check_series_rank(series: str, rank: int) -> None:
    ok = (
        (series == "A" and rank >= 1)
        or (series == "D" and rank >= 4)
        or (series == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise DiagramError(f"{series}{rank} is not a simply-laced Dynkin type")


def standard_edges(series: str, rank: int) -> list[tuple[int, int]]:
    """Edges of the standard diagram on vertices ``1..rank``.

    A_n is the path 1-2-...-n.  D_n is the path 1-...-(n-1) with n attached
    to n-2, so D4 has central node 2.  E_n is the path 1-...-(n-1) with n
    attached to vertex 3.
    """
    check_series_rank(series, rank)
    if series == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if series == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    return [(i, i + 1) for i in range(1, rank - 1)] + [(_E_CHAIN_BRANCH, rank)]


@dataclass(frozen=True)
class DynkinDiagram:
    """An ADE diagram on arbitrary vertex labels.

    ``canonical`` maps each label to its vertex number in the standard
    diagram of ``standard_edges``.
    """

    series: str
    rank: int
    labels: tuple
    edges: frozenset
    canonical: tuple = field(default=(), compare=False)

    @classmethod
    def standard(cls, series: str, rank: int) -> "DynkinDiagram":
        edges = frozenset(frozenset(e) for e in standard_edges(series, rank))
        labels = tuple(range(1, rank + 1))
        return cls(series, rank, labels, edges, tuple((i, i) for i in labels))

    def index(self, label: Label) -> int:
        return self.labels.index(label)

    def adjacent(self, u: Label, v: Label) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, u: Label) -> list:
        return [v for v in self.labels if self.adjacent(u, v)]

    def canonical_map(self) -> dict:
        return dict(self.canonical)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"


def cartan_matrix(diagram: DynkinDiagram) -> list[list[int]]:
    labels = diagram.labels
    return [
        [2 if u == v else (-1 if diagram.adjacent(u, v) else 0) for v in labels]
        for u in labels
    ]


@dataclass(frozen=True)
class RootSystem:
    diagram: DynkinDiagram
    positive_roots: tuple[Root, ...]
    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def simple_root(self, label: Label) -> Root:
        i = self.diagram.index(label)
        return tuple(int(k == i) for k in range(self.rank))

    def is_positive(self, r: Root) -> bool:
        return any(r) and all(c >= 0 for c in r)


def reflect(rs: RootSystem, i: Label, r: Sequence[int]) -> Root:
    """Apply the simple reflection s_i: r - <r, alpha_i^vee> alpha_i."""
    k = rs.diagram.index(i)
    pairing = sum(r[j] * rs.cartan[j][k] for j in range(rs.rank))
    out = list(r)
    out[k] -= pairing
    return tuple(out)


def build_root_system(diagram: DynkinDiagram) -> RootSystem:
    """Enumerate positive roots by closure of the simples under reflections."""
    check_series_rank(diagram.series, diagram.rank)
    if len(diagram.labels) != diagram.rank:
        raise DiagramError("label count does not match rank")
    cartan = tuple(tuple(row) for row in cartan_matrix(diagram))
    partial = RootSystem(diagram, (), cartan)
    simples = [partial.simple_root(v) for v in diagram.labels]
    seen = set(simples)
    order = list(simples)
    queue = deque(simples)
    while queue:
        r = queue.popleft()
        for v in diagram.labels:
            s = reflect(partial, v, r)
            if s not in seen and all(c >= 0 for c in s) and any(s):
                seen.add(s)
                order.append(s)
                queue.append(s)
    order.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
    expected = positive_root_count(diagram.series, diagram.rank)
    if len(order) != expected:
        raise DiagramError(
            f"closure produced {len(order)} roots, expected {expected} for {diagram.name}"
        )
    return RootSystem(diagram, tuple(order), cartan)


# --- symmetric groups -------------------------------------------------------


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def length(w: Permutation) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def simple_transposition(i: int, m: int) -> Permutation:
    w = list(range(1, m + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def word_to_permutation(word: Sequence[int], m: int) -> Permutation:
    w: Permutation = tuple(range(1, m + 1))
    for i in word:
        w = compose(w, simple_transposition(i, m))
    return w


def _blocks(parts: Sequence[int]) -> list[range]:
    out, start = [], 1
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def longest_element(m: int) -> Permutation:
    return tuple(range(m, 0, -1))


def longest_young_element(parts: Sequence[int]) -> Permutation:
    w: list[int] = []
    for block in _blocks(parts):
        w.extend(reversed(block))
    return tuple(w)


def min_coset_reps(parts: Sequence[int]) -> list[Permutation]:
    """Minimal-length representatives of S_m / (S_p1 x S_p2 x ...).

    These are exactly the permutations whose one-line notation increases
    inside each block of positions.
    """
    m = sum(parts)
    if m < 1:
        raise ValueError("composition total must be at least 1")
    blocks = [b for b in _blocks(parts) if len(b) > 0]
    out = []
    # choose which values land in each block; the block is then filled increasingly
    def rec(bi: int, remaining: tuple[int, ...], acc: list[int]):
        if bi == len(blocks):
            out.append(tuple(acc))
            return
        size = len(blocks[bi])
        for chosen in combinations(remaining, size):
            rest = tuple(x for x in remaining if x not in chosen)
            rec(bi + 1, rest, acc + list(chosen))

    rec(0, tuple(range(1, m + 1)), [])
    out.sort()
    return out


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def reduced_word(w: Permutation) -> list[int]:
    """Lexicographically smallest reduced word s_{i1} ... s_{il} = w.

    The first letter is the smallest left descent of w, then recurse.
    """
    word = []
    cur = list(w)
    m = len(cur)
    while True:
        pos = {v: idx for idx, v in enumerate(cur)}
        for i in range(1, m):
            if pos[i] > pos[i + 1]:
                break
        else:
            return word
        word.append(i)
        # s_i w: swap the values i and i+1
        a, b = pos[i], pos[i + 1]
        cur[a], cur[b] = cur[b], cur[a]


def w0_wP(parts: Sequence[int]) -> Permutation:
    m = sum(parts)
    return compose(longest_element(m), longest_young_element(parts))


def reduced_word_w0wP(parts: Sequence[int]) -> list[int]:
    """Reduced word for w0 * w0^P with P the Young subgroup of ``parts``.

    Zero parts are ignored; the word length is C(m,2) - sum C(p,2).
    """
    parts = [p for p in parts if p > 0]
    if sum(parts) < 1:
        raise ValueError("composition total must be at least 1")
    return reduced_word(w0_wP(parts))


def w0_wP_length(parts: Sequence[int]) -> int:
    m = sum(parts)
    return comb(m, 2) - sum(comb(p, 2) for p in parts)


def all_permutations(m: int) -> list[Permutation]:
    return [tuple(p) for p in _all_perms(range(1, m + 1))]
