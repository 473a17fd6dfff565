"""Double Schubert and double Schur polynomials by divided differences.

Convention: S_{w s_i} = d_i S_w whenever w(i) > w(i+1), with d_i acting on
the x variables, and S_u = prod_{(i,j) in lambda} (x_i - y_j) for a dominant
permutation u of code lambda.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Sequence

from . import linalg, rootsys
from .polyengine import LinearForm, MultiPoly, Reflection, XVar, divided_difference, sort_vars

_X, _Y = "_x", "_y"


def lehmer_code(w: Sequence[int]) -> tuple[int, ...]:
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def _ascend_to_dominant(w: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    """Return (u, letters) with u = w s_{l1} s_{l2} ... dominant, each step a length increase."""
    cur = list(w)
    letters = []
    while True:
        code = lehmer_code(cur)
        i = next((k for k in range(len(code) - 1) if code[k] < code[k + 1]), None)
        if i is None:
            return tuple(cur), letters
        # w(i) < w(i+1) here because code[i] < code[i+1]
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
        letters.append(i + 1)


def _dominant_class(u: tuple[int, ...]) -> MultiPoly:
    lam = lehmer_code(u)
    vs = sort_vars(
        [XVar(_X, i) for i in range(1, len(u) + 1)] + [XVar(_Y, j) for j in range(1, len(u) + 1)]
    )
    f = MultiPoly.constant(1, vs)
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            f = f * LinearForm.diff(XVar(_X, i), XVar(_Y, j)).to_poly(vs)
    return f


def _trim(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    while len(w) > 1 and w[-1] == len(w):
        w = w[:-1]
    return w


@lru_cache(maxsize=None)
def _schubert_internal(w: tuple[int, ...]) -> MultiPoly:
    u, letters = _ascend_to_dominant(w)
    f = _dominant_class(u)
    for i in reversed(letters):
        f = divided_difference(f, Reflection.transposition(XVar(_X, i), XVar(_X, i + 1)))
    return f.trimmed()


@lru_cache(maxsize=None)
def _schubert_from_w0(w: tuple[int, ...]) -> MultiPoly:
    """Reference route: descend from the longest element of S_n."""
    n = len(w)
    w0 = rootsys.longest_element(n)
    # w = w0 v with v = s_i1 s_i2 ... reduced, so apply d_i1 first
    v = rootsys.compose(rootsys.inverse(w0), w)
    f = _dominant_class(w0)
    for i in rootsys.reduced_word(v):
        f = divided_difference(f, Reflection.transposition(XVar(_X, i), XVar(_X, i + 1)))
    return f.trimmed()


def _check_perm(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation in one-line notation")
    return w


def _to_user_vars(f: MultiPoly, xvars: Sequence, yvars: Sequence) -> MultiPoly:
    if set(xvars) & set(yvars):
        raise ValueError("x and y variable lists must be disjoint")
    mapping = {}
    for v in f.used_vars():
        seq = xvars if v.vertex == _X else yvars
        if v.k > len(seq):
            raise ValueError(f"not enough {'x' if v.vertex == _X else 'y'} variables (need {v.k})")
        mapping[v] = seq[v.k - 1]
    return f.trimmed().rename(mapping)


def double_schubert(w: Sequence[int], xvars: Sequence, yvars: Sequence) -> MultiPoly:
    """S_w(x; y) in the given variables."""
    return _to_user_vars(_schubert_internal(_trim(_check_perm(w))), xvars, yvars)


def double_schubert_via_w0(w: Sequence[int], xvars: Sequence, yvars: Sequence) -> MultiPoly:
    return _to_user_vars(_schubert_from_w0(_check_perm(w)), xvars, yvars)


def rectangle_permutation(p: int, q: int, r: int) -> tuple[int, ...]:
    """Grassmannian permutation with descent at p + r and shape q^p."""
    n = q + r
    return tuple(range(1, r + 1)) + tuple(range(n + 1, n + p + 1)) + tuple(range(r + 1, n + 1))


def double_schur_rect(p: int, q: int, X: Sequence, Y: Sequence) -> MultiPoly:
    """Double Schur polynomial of the p x q rectangle in |X| = p + r, |Y| = q + r variables."""
    if p < 0 or q < 0:
        raise ValueError("rectangle sides must be nonnegative")
    r = len(X) - p
    if r < 0 or len(Y) - q != r:
        raise ValueError("need len(X) - p == len(Y) - q >= 0")
    if p == 0 or q == 0:
        return MultiPoly.constant(1)
    return double_schubert(rectangle_permutation(p, q, r), X, Y)


def jacobi_trudi_value(p: int, q: int, xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Fraction:
    """det(h_{q - i + j}) for the p x q rectangle with sum h_k t^k = prod(1 - y t) / prod(1 - x t)."""
    top = q + p
    # power series coefficients up to t^top
    h = [Fraction(0)] * (top + 1)
    h[0] = Fraction(1)
    for x in xs:
        for k in range(1, top + 1):
            h[k] += x * h[k - 1]
    for y in ys:
        for k in range(top, 0, -1):
            h[k] -= y * h[k - 1]

    def hk(k):
        return h[k] if 0 <= k <= top else Fraction(0)

    mat = [[hk(q - i + j) for j in range(p)] for i in range(p)]
    return linalg.determinant(mat) if p else Fraction(1)


def jacobi_trudi_check(p: int, q: int, X: Sequence, Y: Sequence, trials: int = 5, seed: int = 0) -> bool:
    f = double_schur_rect(p, q, X, Y)
    rng = random.Random(seed)
    for _ in range(trials):
        pt = {v: Fraction(rng.randint(-1000, 1000)) for v in list(X) + list(Y)}
        if f.evaluate(pt) != jacobi_trudi_value(p, q, [pt[v] for v in X], [pt[v] for v in Y]):
            return False
    return True


def count_ssyt(p: int, q: int, bound: int) -> int:
    """Semistandard tableaux of the p x q rectangle with entries in 1..bound, by brute force."""
    if p == 0 or q == 0:
        return 1
    rows = [r for r in _cartesian(range(1, bound + 1), repeat=q) if all(r[i] <= r[i + 1] for i in range(q - 1))]
    count = 0

    def rec(depth: int, prev):
        nonlocal count
        if depth == p:
            count += 1
            return
        for r in rows:
            if prev is None or all(r[i] > prev[i] for i in range(q)):
                rec(depth + 1, r)

    rec(0, None)
    return count


def component_formula_a3(a: Sequence, b: Sequence, c: Sequence) -> MultiPoly:
    """Three-lacing-diagram sum for the orbit 2 I12 + I23 + I33 of equioriented A3."""
    if (len(a), len(b), len(c)) != (2, 3, 2):
        raise ValueError("need |a|=2, |b|=3, |c|=2")
    pairs = [((1, 2, 3), (3, 4, 1, 2)), ((1, 3, 2), (3, 1, 4, 2)), ((2, 3, 1), (1, 3, 4, 2))]
    total = None
    for u, v in pairs:
        term = double_schubert(u, a, b) * double_schubert(v, b, c)
        total = term if total is None else total + term
    return total
