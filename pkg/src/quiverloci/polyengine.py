"""Sparse exact polynomials, Laurent polynomials and the operators acting on them.

A polynomial stores an ordered tuple of variables and a dict from exponent
tuples to nonzero ints.  Variables are either ``XVar(vertex, k)`` (printed
``x^(i)_k``; on the Laurent side the same object stands for ``t = exp(x)``)
or plain strings for formal symbols such as ``alpha1``.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Hashable, Iterable, Mapping, NamedTuple, Sequence

import numpy as np

Var = Hashable


class XVar(NamedTuple):
    vertex: Hashable
    k: int

    def __str__(self) -> str:
        return f"x^({self.vertex})_{self.k}"


class DivisionError(ArithmeticError):
    """A division that theory says is exact left a remainder."""


def var_key(v: Var):
    if isinstance(v, XVar):
        return (0, type(v.vertex).__name__, v.vertex, v.k)
    return (1, "str", str(v), 0)


def var_name(v: Var, laurent: bool = False) -> str:
    if isinstance(v, XVar):
        return f"{'t' if laurent else 'x'}^({v.vertex})_{v.k}"
    return str(v)


def parse_var(name: str) -> Var:
    """Inverse of ``var_name`` for ``x^(i)_k`` / ``t^(i)_k``; anything else is a symbol."""
    if len(name) > 4 and name[0] in "xt" and name[1:3] == "^(" and ")_" in name:
        head, k = name[3:].rsplit(")_", 1)
        vertex: Hashable = int(head) if head.lstrip("-").isdigit() else head
        return XVar(vertex, int(k))
    return name


def sort_vars(vs: Iterable[Var]) -> tuple:
    return tuple(sorted(set(vs), key=var_key))


# --- linear forms ---------------------------------------------------------------


class LinearForm:
    """Finitely supported integer combination of variables."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Var, int] | Iterable[tuple[Var, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for v, c in items:
            acc[v] = acc.get(v, 0) + int(c)
        self.coeffs = tuple(sorted(((v, c) for v, c in acc.items() if c), key=lambda p: var_key(p[0])))

    @classmethod
    def var(cls, v: Var) -> "LinearForm":
        return cls({v: 1})

    @classmethod
    def diff(cls, u: Var, v: Var) -> "LinearForm":
        return cls([(u, 1), (v, -1)])

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @property
    def support(self) -> tuple:
        return tuple(v for v, _ in self.coeffs)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.coeffs + other.coeffs)

    def __neg__(self) -> "LinearForm":
        return LinearForm((v, -c) for v, c in self.coeffs)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __rmul__(self, k: int) -> "LinearForm":
        return LinearForm((v, k * c) for v, c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def evaluate(self, point: Mapping[Var, Fraction]) -> Fraction:
        return sum((c * Fraction(point[v]) for v, c in self.coeffs), Fraction(0))

    def substitute(self, sub: Mapping[Var, "LinearForm"]) -> "LinearForm":
        out: list = []
        for v, c in self.coeffs:
            img = sub.get(v)
            if img is None:
                out.append((v, c))
            else:
                out.extend((w, c * e) for w, e in img.coeffs)
        return LinearForm(out)

    def to_poly(self, vars: Sequence[Var] | None = None) -> "MultiPoly":
        vs = sort_vars(self.support) if vars is None else tuple(vars)
        idx = {v: i for i, v in enumerate(vs)}
        terms = {}
        for v, c in self.coeffs:
            e = [0] * len(vs)
            e[idx[v]] = 1
            terms[tuple(e)] = c
        return MultiPoly(vs, terms)

    def __repr__(self) -> str:
        return f"LinearForm({format_linear(self)})"


def format_linear(f: LinearForm, namer: Callable[[Var], str] = var_name) -> str:
    if not f.coeffs:
        return "0"
    parts = []
    for v, c in f.coeffs:
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        parts.append((sign, mag + namer(v)))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {t}" for s, t in parts[1:])


# --- polynomials --------------------------------------------------------------------


def _grlex_key(e: tuple) -> tuple:
    return (-sum(e), tuple(-x for x in e))


class _Poly:
    __slots__ = ("vars", "terms")
    _laurent = False

    def __init__(self, vars: Sequence[Var] = (), terms: Mapping[tuple, int] | None = None, _trusted: bool = False):
        self.vars = tuple(vars)
        if _trusted:
            self.terms = terms  # type: ignore[assignment]
            return
        n = len(self.vars)
        if len(set(self.vars)) != n:
            raise ValueError("duplicate variables")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError("exponent length does not match variables")
            if not self._laurent and any(x < 0 for x in e):
                raise ValueError("negative exponent in a polynomial")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction ------------------------------------------------------------

    @classmethod
    def _make(cls, vars, terms):
        return cls(vars, terms, _trusted=True)

    @classmethod
    def constant(cls, c: int, vars: Sequence[Var] = ()):
        vars = tuple(vars)
        return cls._make(vars, {(0,) * len(vars): int(c)} if c else {})

    @classmethod
    def zero(cls, vars: Sequence[Var] = ()):
        return cls._make(tuple(vars), {})

    @classmethod
    def var(cls, v: Var, vars: Sequence[Var] | None = None, power: int = 1):
        vars = (v,) if vars is None else tuple(vars)
        e = [0] * len(vars)
        e[vars.index(v)] = power
        return cls._make(vars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Mapping[Var, int], coeff: int = 1, vars: Sequence[Var] | None = None):
        vars = sort_vars(exps) if vars is None else tuple(vars)
        e = tuple(int(exps.get(v, 0)) for v in vars)
        return cls(vars, {e: coeff})

    # alignment -----------------------------------------------------------------

    def with_vars(self, vars: Sequence[Var]):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        n = len(vars)
        idx = []
        for i, v in enumerate(self.vars):
            if v in pos:
                idx.append(pos[v])
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {var_name(v)} is used but not in the target set")
            else:
                idx.append(None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                if x:
                    ne[idx[i]] = x
            out[tuple(ne)] = c
        return self._make(vars, out)

    def _coerce(self, other):
        if isinstance(other, int):
            return self, type(self).constant(other, self.vars)
        if type(other) is not type(self):
            return NotImplemented
        if other.vars == self.vars:
            return self, other
        vs = sort_vars(self.vars + other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def used_vars(self) -> tuple:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def trimmed(self):
        return self.with_vars(sort_vars(self.used_vars()))

    # arithmetic ------------------------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._make(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return self._make(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.zero(self.vars)
            return self._make(self.vars, {e: c * other for e, c in self.terms.items()})
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e2, c2 in b.terms.items():
            for e1, c1 in a.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return self._make(a.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = type(self).constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_exact(self, k: int):
        """Divide every coefficient by ``k``; raise unless exact."""
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise DivisionError(f"coefficient {c} not divisible by {k}")
            out[e] = q
        return self._make(self.vars, out)

    # comparison --------------------------------------------------------------------

    def _canonical(self):
        t = self.trimmed()
        return t.vars, frozenset(t.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure -------------------------------------------------------------------

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self.degrees())

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self.degrees())

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, k: int):
        return self._make(self.vars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def permute(self, perm: Mapping[Var, Var]):
        """Rename variables by a bijection of ``self.vars`` (identity off its support)."""
        img = tuple(perm.get(v, v) for v in self.vars)
        if set(img) != set(self.vars):
            raise ValueError("permutation does not preserve the variable set")
        pos = [self.vars.index(v) for v in img]
        out = {}
        n = len(self.vars)
        for e, c in self.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                ne[pos[i]] = x
            out[tuple(ne)] = c
        return self._make(self.vars, out)

    def rename(self, mapping: Mapping[Var, Var]):
        """Substitute variables by variables; images must stay distinct."""
        img = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(img)) != len(img):
            raise ValueError("renaming identifies two variables")
        return self._make(img, dict(self.terms)).with_vars(sort_vars(img))

    def evaluate(self, point: Mapping[Var, Fraction | int]) -> Fraction:
        vals = []
        for v in self.vars:
            x = Fraction(point[v]) if v in point else None
            vals.append(x)
        total = Fraction(0)
        cache: dict = {}
        for e, c in self.terms.items():
            term = Fraction(c)
            for i, x in enumerate(e):
                if x:
                    base = vals[i]
                    if base is None:
                        raise KeyError(f"no value for {var_name(self.vars[i])}")
                    if base == 0 and x < 0:
                        raise ZeroDivisionError(f"{var_name(self.vars[i])} evaluated at 0")
                    key = (i, x)
                    p = cache.get(key)
                    if p is None:
                        p = cache[key] = base ** x
                    term *= p
            total += term
        return total

    # display -----------------------------------------------------------------------

    def __str__(self) -> str:
        return pretty(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({pretty(self)})"


class MultiPoly(_Poly):
    __slots__ = ()
    _laurent = False


class LaurentPoly(_Poly):
    __slots__ = ()
    _laurent = True

    def to_polynomial(self) -> MultiPoly:
        if any(x < 0 for e in self.terms for x in e):
            raise ValueError("Laurent polynomial has negative exponents")
        return MultiPoly._make(self.vars, dict(self.terms))


def as_laurent(f: MultiPoly) -> LaurentPoly:
    return LaurentPoly._make(f.vars, dict(f.terms))


def product(factors: Iterable[_Poly], start: _Poly) -> _Poly:
    out = start
    for f in factors:
        out = out * f
    return out


# --- exact division by a linear form ---------------------------------------------


def divide_linear(g: _Poly, alpha: LinearForm) -> _Poly:
    """Exact quotient g / alpha, raising ``DivisionError`` on a remainder.

    Works degree by degree in a pivot variable whose coefficient in alpha is
    +-1.  Laurent inputs are shifted by a monomial first.
    """
    if not alpha:
        raise ZeroDivisionError("division by the zero form")
    if not g.terms:
        return g
    pivots = [v for v, c in alpha.coeffs if abs(c) == 1]
    if not pivots:
        raise DivisionError(f"no unit coefficient in {format_linear(alpha)}")
    vs = sort_vars(g.vars + alpha.support)
    g = g.with_vars(vs)
    n = len(vs)
    shift = [0] * n
    if g._laurent:
        for i in range(n):
            shift[i] = min(0, min(e[i] for e in g.terms))
    p = vs.index(pivots[0])
    cp = alpha.as_dict()[pivots[0]]
    rest = [(vs.index(v), c) for v, c in alpha.coeffs if v != pivots[0]]

    work: dict[tuple, int] = {}
    for e, c in g.terms.items():
        work[tuple(x - s for x, s in zip(e, shift))] = c
    quotient: dict[tuple, int] = {}
    top = max(e[p] for e in work)
    by_deg: dict[int, dict] = {}
    for e, c in work.items():
        by_deg.setdefault(e[p], {})[e] = c
    for deg in range(top, 0, -1):
        layer = by_deg.pop(deg, {})
        below = by_deg.setdefault(deg - 1, {})
        for e, c in layer.items():
            if not c:
                continue
            qe = list(e)
            qe[p] -= 1
            qc = c * cp  # cp = +-1 so c / cp == c * cp
            qe_t = tuple(qe)
            quotient[qe_t] = quotient.get(qe_t, 0) + qc
            for i, ci in rest:
                ne = list(qe)
                ne[i] += 1
                ne_t = tuple(ne)
                below[ne_t] = below.get(ne_t, 0) - qc * ci
    if any(by_deg.get(0, {}).values()):
        raise DivisionError(f"nonzero remainder dividing by {format_linear(alpha)}")
    out = {}
    for e, c in quotient.items():
        if c:
            out[tuple(x + s for x, s in zip(e, shift))] = c
    return type(g)._make(vs, out)


# --- reflections and operators -----------------------------------------------------


class Reflection:
    """A linear involution of the variables sending ``alpha`` to ``-alpha``."""

    __slots__ = ("substitution", "alpha", "perm", "label")

    def __init__(self, substitution: Mapping[Var, LinearForm], alpha: LinearForm, label: str | None = None):
        self.substitution = {v: f for v, f in substitution.items() if f != LinearForm.var(v)}
        self.alpha = alpha
        self.label = label or format_linear(alpha)
        twice = {v: f.substitute(self.substitution) for v, f in self.substitution.items()}
        if any(twice[v] != LinearForm.var(v) for v in twice):
            raise ValueError("substitution is not an involution")
        if alpha.substitute(self.substitution) != -alpha:
            raise ValueError("substitution does not negate alpha")
        perm = {}
        for v, f in self.substitution.items():
            if len(f.coeffs) == 1 and f.coeffs[0][1] == 1:
                perm[v] = f.coeffs[0][0]
            else:
                perm = None
                break
        self.perm = perm

    @classmethod
    def transposition(cls, u: Var, v: Var) -> "Reflection":
        return cls({u: LinearForm.var(v), v: LinearForm.var(u)}, LinearForm.diff(u, v), label=None)

    @property
    def is_transposition(self) -> bool:
        return self.perm is not None and len(self.perm) == 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Reflection) and self.alpha == other.alpha and self.substitution == other.substitution

    def __hash__(self) -> int:
        return hash(self.alpha)

    def __repr__(self) -> str:
        return f"Reflection({self.label})"


def apply_reflection(f: _Poly, r: Reflection) -> _Poly:
    if r.perm is not None:
        vs = sort_vars(f.vars + tuple(r.perm))
        return f.with_vars(vs).permute(r.perm)
    if f._laurent:
        raise ValueError("Laurent polynomials only admit permutation reflections")
    return substitute_linear(f, r.substitution)


def substitute_linear(f: MultiPoly, sub: Mapping[Var, LinearForm]) -> MultiPoly:
    """Ring map sending each variable v to ``sub[v]`` (identity elsewhere)."""
    images = {}
    allvars = list(f.vars)
    for form in sub.values():
        allvars.extend(form.support)
    vs = sort_vars(allvars)
    for i, v in enumerate(f.vars):
        form = sub.get(v, LinearForm.var(v))
        images[i] = form.to_poly(vs)
    powers: dict = {}
    out = MultiPoly.zero(vs)
    for e, c in f.terms.items():
        term = MultiPoly.constant(c, vs)
        for i, x in enumerate(e):
            if x:
                key = (i, x)
                pw = powers.get(key)
                if pw is None:
                    pw = powers[key] = images[i] ** x
                term = term * pw
        out = out + term
    return out


def _swap_divided_difference(f: MultiPoly, u: int, v: int) -> MultiPoly:
    # termwise (x_u^a x_v^b - x_u^b x_v^a) / (x_u - x_v)
    out: dict = {}
    get = out.get
    for e, c in f.terms.items():
        a, b = e[u], e[v]
        if a == b:
            continue
        lo, hi = (b, a) if a > b else (a, b)
        sign = c if a > b else -c
        base = list(e)
        for i in range(hi - lo):
            base[u] = hi - 1 - i
            base[v] = lo + i
            t = tuple(base)
            out[t] = get(t, 0) + sign
    return MultiPoly._make(f.vars, {e: c for e, c in out.items() if c})


def divided_difference(f: MultiPoly, r: Reflection) -> MultiPoly:
    """(f - r f) / alpha."""
    if f._laurent:
        raise TypeError("divided differences act on polynomials")
    if r.is_transposition and r.alpha.coeffs and sorted(c for _, c in r.alpha.coeffs) == [-1, 1]:
        (p, cp), (q, _) = r.alpha.coeffs
        u, v = (p, q) if cp == 1 else (q, p)
        vs = sort_vars(f.vars + (u, v))
        g = f.with_vars(vs)
        return _swap_divided_difference(g, vs.index(u), vs.index(v))
    return divide_linear(f - apply_reflection(f, r), r.alpha)


def divided_difference_general(f: MultiPoly, r: Reflection) -> MultiPoly:
    """Same as ``divided_difference`` but always through long division."""
    return divide_linear(f - apply_reflection(f, r), r.alpha)


def _root_vars(r: Reflection) -> tuple:
    coeffs = dict(r.alpha.coeffs)
    if not r.is_transposition or sorted(coeffs.values()) != [-1, 1]:
        raise ValueError("Demazure operators need alpha = x_u - x_v")
    u = next(v for v, c in coeffs.items() if c == 1)
    v = next(v for v, c in coeffs.items() if c == -1)
    return u, v


def demazure(f: LaurentPoly, r: Reflection) -> LaurentPoly:
    """(t_u f - t_v r f) / (t_u - t_v) for alpha = x_u - x_v."""
    if not isinstance(f, LaurentPoly):
        raise TypeError("Demazure operators act on Laurent polynomials")
    u, v = _root_vars(r)
    vs = sort_vars(f.vars + (u, v))
    g = f.with_vars(vs)
    tu = LaurentPoly.var(u, vs)
    tv = LaurentPoly.var(v, vs)
    num = tu * g - tv * apply_reflection(g, r)
    return divide_linear(num, LinearForm.diff(u, v))


def k_factor(head_over_tail: tuple[Var, Var], vars: Sequence[Var] | None = None) -> LaurentPoly:
    """1 - t_h / t_t, the K-class of the weight x_t - x_h."""
    t, h = head_over_tail
    vs = sort_vars((t, h)) if vars is None else tuple(vars)
    e_t = [0] * len(vs)
    e_t[vs.index(h)] += 1
    e_t[vs.index(t)] -= 1
    return LaurentPoly._make(vs, {(0,) * len(vs): 1, tuple(e_t): -1})


def k_class_of_weight(w: LinearForm, vars: Sequence[Var] | None = None) -> LaurentPoly:
    """1 - exp(-w) in t-variables."""
    vs = sort_vars(w.support) if vars is None else tuple(vars)
    e = [0] * len(vs)
    for v, c in w.coeffs:
        e[vs.index(v)] -= c
    terms = {(0,) * len(vs): 1}
    key = tuple(e)
    terms[key] = terms.get(key, 0) - 1
    return LaurentPoly(vs, terms)


# --- truncated exponential --------------------------------------------------------------

_INT64_SAFE = 2 ** 62


def _compositions(n: int, k: int):
    """Exponent vectors of length n and total k, lexicographically descending."""
    if n == 0:
        if k == 0:
            yield ()
        return
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(n - 1, k - first):
            yield (first,) + rest


def _component(E: np.ndarray, coeffs: np.ndarray, k: int) -> dict[tuple, int]:
    n = E.shape[1]
    out: dict[tuple, int] = {}
    for beta in _compositions(n, k):
        prod = coeffs.copy()
        denom = 1
        for i, b in enumerate(beta):
            if b:
                prod = prod * E[:, i] ** b
                denom *= factorial(b)
        s = int(prod.sum())
        if s:
            q, r = divmod(s, denom)
            if r:
                raise ValueError("lowest-order component has non-integral coefficients")
            out[beta] = q
    return out


def lowest_term(f: LaurentPoly, order: int) -> MultiPoly:
    """Lowest nonzero homogeneous component of f under t = exp(x).

    The degree-k part of sum_m c_m exp(e_m . x) has coefficient
    (sum_m c_m e_m^beta) / beta! at x^beta, so each component is a moment
    sum over the terms of f.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not f.terms:
        raise ValueError("zero Laurent polynomial has no lowest term")
    g = f.trimmed()
    vs = g.vars
    items = list(g.terms.items())
    exps = [e for e, _ in items]
    cs = [c for _, c in items]
    max_e = max((abs(x) for e in exps for x in e), default=0)
    total_c = sum(abs(c) for c in cs)
    for k in range(order + 1):
        if max(max_e, 1) ** k * total_c < _INT64_SAFE:
            E = np.array(exps, dtype=np.int64).reshape(len(exps), len(vs))
            C = np.array(cs, dtype=np.int64)
        else:
            E = np.array(exps, dtype=object).reshape(len(exps), len(vs))
            C = np.array(cs, dtype=object)
        comp = _component(E, C, k)
        if comp:
            return MultiPoly._make(vs, comp)
    raise ValueError(f"no nonzero component up to degree {order}; raise the truncation order")


# --- evaluation, JSON, printing ---------------------------------------------------------


def eval_rational(f: _Poly | LinearForm, point: Mapping[Var, Fraction | int]) -> Fraction:
    return f.evaluate(point)


def to_json(f: _Poly) -> list[dict]:
    laurent = f._laurent
    out = []
    for e, c in f.sorted_terms():
        exps = {var_name(v, laurent): x for v, x in zip(f.vars, e) if x}
        out.append({"coeff": str(c), "exponents": dict(sorted(exps.items()))})
    return out


def from_json(data: Sequence[Mapping], laurent: bool = False) -> _Poly:
    cls = LaurentPoly if laurent else MultiPoly
    parsed = []
    names = set()
    for term in data:
        exps = {parse_var(k): int(v) for k, v in term["exponents"].items()}
        names.update(exps)
        parsed.append((exps, int(term["coeff"])))
    vs = sort_vars(names)
    terms: dict = {}
    for exps, c in parsed:
        e = tuple(exps.get(v, 0) for v in vs)
        terms[e] = terms.get(e, 0) + c
    return cls(vs, terms)


def alias_namer(vertices: Sequence[Hashable] | None, laurent: bool = False) -> Callable[[Var], str]:
    """Names ``a1, b2, ...`` with one letter per vertex, in the given vertex order.

    On the Laurent side the names become ``ta1, tb2, ...`` for exp(a1), exp(b2).
    """
    letters = {}
    if vertices is not None and len(vertices) <= 26:
        letters = {v: chr(ord("a") + i) for i, v in enumerate(vertices)}

    def namer(v: Var) -> str:
        if isinstance(v, XVar) and v.vertex in letters:
            return f"{'t' if laurent else ''}{letters[v.vertex]}{v.k}"
        return var_name(v, laurent)

    return namer


def pretty(f: _Poly, namer: Callable[[Var], str] | None = None) -> str:
    if namer is None:
        laurent = f._laurent
        namer = lambda v: var_name(v, laurent)  # noqa: E731
    if not f.terms:
        return "0"
    pieces = []
    for e, c in f.sorted_terms():
        factors = []
        for v, x in zip(f.vars, e):
            if x == 1:
                factors.append(namer(v))
            elif x:
                factors.append(f"{namer(v)}^{x}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    head = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    return head + "".join(f" {s} {b}" for s, b in pieces[1:])
