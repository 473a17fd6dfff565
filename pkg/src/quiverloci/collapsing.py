"""Multidegrees and K-polynomials of quiver loci through Reineke collapsings.

For an orbit with multiplicities m, each vertex space splits into blocks
indexed by beta_1 > ... > beta_N; Z_m keeps the entries of each arrow matrix
on or below the block diagonal.  The class of Z_m is pushed forward by
divided differences (Demazure operators on the K side) along a reduced word
for w0 w0^P at every vertex.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import rootsys
from .polyengine import (
    LaurentPoly,
    LinearForm,
    MultiPoly,
    Reflection,
    XVar,
    apply_reflection,
    as_laurent,
    demazure,
    divided_difference,
    k_class_of_weight,
    lowest_term,
    sort_vars,
)
from .quiverkit import Multiplicities, Quiver, RootOrder, dimension_of, root_system_of
from .repkit import codim_orbit

E_WARNING = "rational singularities open for type E"
MAX_RESAMPLES = 100
SAMPLE_BOUND = 10 ** 6


class OrbitError(ValueError):
    """Multiplicities inconsistent with the dimension vector."""


class CollapsingError(AssertionError):
    """An invariant of the pipeline failed; this is a bug, not bad input."""


# --- block structure ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockStructure:
    quiver: Quiver
    order: RootOrder
    dims: tuple[int, ...]
    m: Multiplicities
    compositions: tuple[tuple[int, ...], ...]  # per vertex, indexed by beta
    zm_pattern: tuple[frozenset, ...]  # per arrow, cells (row, col), 1-based

    def composition(self, v) -> tuple[int, ...]:
        return self.compositions[self.quiver.index(v)]

    def support_composition(self, v) -> tuple[int, ...]:
        """Block sizes over the summands actually present in the orbit."""
        comp = self.composition(v)
        return tuple(comp[j] for j, k in enumerate(self.m) if k)

    def block_of(self, v, k: int) -> int:
        """Beta index of the block containing basis vector k (1-based) at v."""
        acc = 0
        for j, size in enumerate(self.composition(v)):
            acc += size
            if k <= acc:
                return j
        raise IndexError(k)

    @property
    def variables(self) -> tuple:
        return orbit_variables(self.quiver, self.dims)


def orbit_variables(q: Quiver, dims: Sequence[int]) -> tuple:
    return sort_vars(XVar(v, k) for v, n in zip(q.vertices, dims) for k in range(1, n + 1))


def block_structure(q: Quiver, ro: RootOrder, d: Sequence[int], m: Multiplicities) -> BlockStructure:
    d = tuple(d)
    m = tuple(m)
    if len(m) != len(ro):
        raise OrbitError(f"expected {len(ro)} multiplicities, got {len(m)}")
    if any(k < 0 for k in m):
        raise OrbitError("multiplicities must be nonnegative")
    if dimension_of(ro, m) != d:
        raise OrbitError(f"multiplicities give dimension {dimension_of(ro, m)}, not {d}")
    comps = tuple(
        tuple(m[j] * ro.betas[j][i] for j in range(len(ro))) for i in range(len(q.vertices))
    )
    partial = BlockStructure(q, ro, d, m, comps, ())
    patterns = []
    for t, h in q.arrows:
        cells = frozenset(
            (r, c)
            for r in range(1, partial.dims[q.index(t)] + 1)
            for c in range(1, partial.dims[q.index(h)] + 1)
            if partial.block_of(t, r) >= partial.block_of(h, c)
        )
        patterns.append(cells)
    return BlockStructure(q, ro, d, m, comps, tuple(patterns))


def z_weights(bs: BlockStructure) -> list[LinearForm]:
    """Weights x^(ta)_r - x^(ha)_c of the arrow entries that vanish on Z_m."""
    q = bs.quiver
    out = []
    for (t, h), cells in zip(q.arrows, bs.zm_pattern):
        for r in range(1, bs.dims[q.index(t)] + 1):
            for c in range(1, bs.dims[q.index(h)] + 1):
                if (r, c) not in cells:
                    out.append(LinearForm.diff(XVar(t, r), XVar(h, c)))
    return out


def class_of_Z(bs: BlockStructure) -> tuple[MultiPoly, LaurentPoly]:
    vs = bs.variables
    H = MultiPoly.constant(1, vs)
    K = LaurentPoly.constant(1, vs)
    for w in z_weights(bs):
        H = H * w.to_poly(vs)
        K = K * k_class_of_weight(w, vs)
    return H, K


def vertex_word(v, composition: Sequence[int]) -> list[Reflection]:
    if sum(composition) < 1:
        return []
    return [
        Reflection.transposition(XVar(v, i), XVar(v, i + 1))
        for i in rootsys.reduced_word_w0wP(composition)
    ]


def operator_word(bs: BlockStructure) -> list[Reflection]:
    """Concatenated per-vertex words; apply rightmost letter first."""
    word: list[Reflection] = []
    for v in bs.quiver.vertices:
        word.extend(vertex_word(v, bs.composition(v)))
    return word


def expected_operator_count(bs: BlockStructure) -> int:
    return sum(
        rootsys.w0_wP_length(bs.composition(v)) for v in bs.quiver.vertices
    )


# --- the pipeline -----------------------------------------------------------------


@dataclass
class QuiverClassResult:
    multidegree: MultiPoly
    codim: int
    operators_applied: int
    kpolynomial: LaurentPoly | None = None
    skipped: int = 0
    certified: bool = True
    warnings: list[str] = field(default_factory=list)


def apply_word(f, word: Sequence[Reflection], op, *, forbid_zero: bool = True) -> tuple:
    """Apply ``op`` for each letter, rightmost first; returns (result, applied)."""
    applied = 0
    for r in reversed(word):
        g = op(f, r)
        if forbid_zero and not g:
            raise CollapsingError(f"operator for {r.label} annihilated the class")
        f = g
        applied += 1
    return f, applied


def multidegree(
    q: Quiver,
    ro: RootOrder,
    d: Sequence[int],
    m: Multiplicities,
    *,
    check_codim: bool = True,
) -> QuiverClassResult:
    bs = block_structure(q, ro, d, m)
    H, _ = class_of_Z(bs)
    word = operator_word(bs)
    f, applied = apply_word(H, word, divided_difference)
    if applied != expected_operator_count(bs):  # pragma: no cover
        raise CollapsingError("operator count differs from the length of w0 w0^P")
    if not f.is_homogeneous():
        raise CollapsingError("multidegree is not homogeneous")
    deg = f.degree()
    if check_codim:
        expected = codim_orbit(q, ro, bs.m)
        if deg != expected:
            raise CollapsingError(f"multidegree has degree {deg}, Ext oracle gives codim {expected}")
    return QuiverClassResult(f, deg, applied)


def kpolynomial(q: Quiver, ro: RootOrder, d: Sequence[int], m: Multiplicities) -> LaurentPoly:
    bs = block_structure(q, ro, d, m)
    _, K = class_of_Z(bs)
    f, _ = apply_word(K, operator_word(bs), demazure)
    return f


def series_of(q: Quiver) -> str:
    return root_system_of(q).diagram.series


def analyze_orbit(
    q: Quiver,
    ro: RootOrder,
    d: Sequence[int],
    m: Multiplicities,
    *,
    with_kpoly: bool = False,
    check_codim: bool = True,
) -> QuiverClassResult:
    res = multidegree(q, ro, d, m, check_codim=check_codim)
    if with_kpoly:
        res.kpolynomial = kpolynomial(q, ro, d, m)
        if series_of(q) == "E":
            res.certified = False
            res.warnings.append(E_WARNING)
    return res


def greedy(f: MultiPoly, reflections: Sequence[Reflection]) -> tuple[MultiPoly, list[Reflection]]:
    """Apply any divided difference with nonzero output until none remains.

    The scan restarts from the first reflection after every accepted step.
    """
    steps = []
    while True:
        for r in reflections:
            g = divided_difference(f, r)
            if g:
                f = g
                steps.append(r)
                break
        else:
            return f, steps


def gl_reflections(q: Quiver, d: Sequence[int]) -> list[Reflection]:
    return [
        Reflection.transposition(XVar(v, i), XVar(v, i + 1))
        for v, n in zip(q.vertices, d)
        for i in range(1, n)
    ]


def multidegree_greedy(q: Quiver, ro: RootOrder, d: Sequence[int], m: Multiplicities) -> MultiPoly:
    bs = block_structure(q, ro, d, m)
    H, _ = class_of_Z(bs)
    f, _ = greedy(H, gl_reflections(q, bs.dims))
    return f


# --- summation formulas ----------------------------------------------------------


def _vertex_positive_roots(bs: BlockStructure) -> list[tuple]:
    """(u, v) with x_u - x_v a root of G outside P: u in a strictly earlier block."""
    out = []
    for vert, n in zip(bs.quiver.vertices, bs.dims):
        for k in range(1, n + 1):
            for k2 in range(1, n + 1):
                if bs.block_of(vert, k) < bs.block_of(vert, k2):
                    out.append((XVar(vert, k), XVar(vert, k2)))
    return out


def _coset_substitutions(bs: BlockStructure) -> list[dict]:
    """W^P as variable maps x^(i)_k -> x^(i)_{w(k)}."""
    subs: list[dict] = [{}]
    for vert, n in zip(bs.quiver.vertices, bs.dims):
        if n == 0:
            continue
        reps = rootsys.min_coset_reps(bs.composition(vert))
        subs = [
            {**s, **{XVar(vert, k): XVar(vert, w[k - 1]) for k in range(1, n + 1)}}
            for s in subs
            for w in reps
        ]
    return subs


def _sample_point(rng: random.Random, vs: Sequence, nonzero: bool) -> dict:
    pt = {}
    for v in vs:
        x = rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND)
        while nonzero and x == 0:
            x = rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND)
        pt[v] = Fraction(x)
    return pt


def _wp_sum(top, denominators, subs, point, laurent: bool) -> Fraction | None:
    total = Fraction(0)
    for s in subs:
        moved = {v: point[s.get(v, v)] for v in point}
        den = Fraction(1)
        for u, v in denominators:
            if laurent:
                val = 1 - moved[v] / moved[u]
            else:
                val = moved[u] - moved[v]
            if val == 0:
                return None
            den *= val
        total += top.evaluate(moved) / den
    return total


@dataclass
class SumCheckReport:
    ok: bool
    trials: int
    resamples: int
    side: str


def sum_formula_check(
    q: Quiver,
    ro: RootOrder,
    d: Sequence[int],
    m: Multiplicities,
    trials: int = 20,
    *,
    seed: int = 0,
    k_side: bool = True,
    result: QuiverClassResult | None = None,
) -> bool:
    """Compare the W^P sums against the operator results at random points."""
    return all(r.ok for r in sum_formula_reports(q, ro, d, m, trials, seed=seed, k_side=k_side, result=result))


def sum_formula_reports(
    q: Quiver,
    ro: RootOrder,
    d: Sequence[int],
    m: Multiplicities,
    trials: int = 20,
    *,
    seed: int = 0,
    k_side: bool = True,
    result: QuiverClassResult | None = None,
) -> list[SumCheckReport]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    bs = block_structure(q, ro, d, m)
    H, K = class_of_Z(bs)
    word = operator_word(bs)
    omega = result.multidegree if result is not None else apply_word(H, word, divided_difference)[0]
    sides = [("H", H, omega)]
    if k_side:
        omega_k = (
            result.kpolynomial
            if result is not None and result.kpolynomial is not None
            else apply_word(K, word, demazure)[0]
        )
        sides.append(("K", K, omega_k))
    betas = _vertex_positive_roots(bs)
    subs = _coset_substitutions(bs)
    vs = bs.variables
    rng = random.Random(seed)
    reports = []
    for side, top, target in sides:
        laurent = side == "K"
        resamples = 0
        ok = True
        for _ in range(trials):
            for _attempt in range(MAX_RESAMPLES):
                pt = _sample_point(rng, vs, nonzero=laurent)
                val = _wp_sum(top, betas, subs, pt, laurent)
                if val is not None:
                    break
                resamples += 1
            else:
                raise CollapsingError("could not find a point avoiding every denominator")
            if val != target.evaluate(pt):
                ok = False
                break
        reports.append(SumCheckReport(ok, trials, resamples, side))
    return reports


def k_to_h_compatible(q: Quiver, ro: RootOrder, d, m, result: QuiverClassResult | None = None) -> bool:
    res = result or analyze_orbit(q, ro, d, m, with_kpoly=True, check_codim=False)
    kp = res.kpolynomial if res.kpolynomial is not None else kpolynomial(q, ro, d, m)
    if not res.multidegree:  # pragma: no cover
        return False
    return lowest_term(kp, res.codim + 1) == res.multidegree


# --- generic Kempf data ---------------------------------------------------------------


@dataclass(frozen=True)
class KempfData:
    """Weights of Y, the coordinates spanning Z and the acting Weyl group data."""

    varset: tuple
    y_weights: tuple[LinearForm, ...]
    z_cells: frozenset
    simple_reflections: tuple[Reflection, ...]
    wp_word: tuple[int, ...]
    wp_reps: tuple[Mapping, ...]  # variable -> LinearForm
    pbeta: tuple[LinearForm, ...]

    def __post_init__(self):
        if not self.z_cells <= set(range(len(self.y_weights))):
            raise ValueError("z_cells must index y_weights")
        if len(self.pbeta) != len(self.wp_word):
            raise ValueError("|pbeta| must equal the length of wp_word")

    def class_of_Z(self) -> MultiPoly:
        f = MultiPoly.constant(1, self.varset)
        for i, w in enumerate(self.y_weights):
            if i not in self.z_cells:
                f = f * w.to_poly(self.varset)
        return f


def generic_multidegree(data: KempfData) -> MultiPoly:
    """d [G.Z] by greedy divided differences; the fiber count d stays unknown."""
    f, _ = greedy(data.class_of_Z(), data.simple_reflections)
    return f


def word_multidegree(data: KempfData) -> MultiPoly:
    f = data.class_of_Z()
    for i in reversed(data.wp_word):
        f = divided_difference(f, data.simple_reflections[i])
    return f


def generic_sum_formula(data: KempfData, point: Mapping) -> Fraction | None:
    """sum over W^P of w . ([Z] / prod beta) at ``point``; None if a denominator vanishes."""
    top = data.class_of_Z()
    total = Fraction(0)
    for sub in data.wp_reps:
        moved = {v: sub[v].evaluate(point) if v in sub else Fraction(point[v]) for v in data.varset}
        den = Fraction(1)
        for beta in data.pbeta:
            val = beta.evaluate(moved)
            if val == 0:
                return None
            den *= val
        total += top.evaluate(moved) / den
    return total


def generic_sum_check(data: KempfData, trials: int = 20, seed: int = 0) -> bool:
    target = generic_multidegree(data)
    rng = random.Random(seed)
    for _ in range(trials):
        for _attempt in range(MAX_RESAMPLES):
            pt = _sample_point(rng, data.varset, nonzero=False)
            val = generic_sum_formula(data, pt)
            if val is not None:
                break
        else:
            raise CollapsingError("could not find a point avoiding every denominator")
        if val != target.evaluate(pt):
            return False
    return True


def _weyl_closure(reflections: Sequence[Reflection], varset: Sequence) -> list[dict]:
    """All products of the reflections, as substitutions var -> LinearForm."""
    ident = {v: LinearForm.var(v) for v in varset}
    key = lambda s: tuple(s[v] for v in varset)  # noqa: E731
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for s in frontier:
            for r in reflections:
                t = {v: s[v].substitute(r.substitution) for v in varset}
                k = key(t)
                if k not in seen:
                    seen[k] = t
                    nxt.append(t)
        frontier = nxt
    return list(seen.values())


def sl2_data() -> KempfData:
    """SL2 x C^* on sl2; Z is the lower Borel, so only alpha + a is missing."""
    al, a = "alpha", "a"
    A, ALPHA = LinearForm.var(a), LinearForm.var(al)
    s = Reflection({al: -ALPHA}, ALPHA, label="alpha")
    varset = (al, a)
    weights = (ALPHA + A, A, A - ALPHA)
    return KempfData(varset, weights, frozenset({1, 2}), (s,), (0,), tuple(_weyl_closure([s], varset)), (ALPHA,))


def sl3_data() -> KempfData:
    """SL3 x C^* on sl3 with Z the lower Borel subalgebra."""
    a1, a2, a = "alpha1", "alpha2", "a"
    A1, A2, A = LinearForm.var(a1), LinearForm.var(a2), LinearForm.var(a)
    s1 = Reflection({a1: -A1, a2: A1 + A2}, A1, label="alpha1")
    s2 = Reflection({a2: -A2, a1: A1 + A2}, A2, label="alpha2")
    varset = (a1, a2, a)
    positive = (A1, A2, A1 + A2)
    weights = tuple(A + r for r in positive) + (A, A) + tuple(A - r for r in positive)
    z = frozenset(range(3, 8))
    reps = tuple(_weyl_closure([s1, s2], varset))
    return KempfData(varset, weights, z, (s1, s2), (0, 1, 0), reps, positive)
