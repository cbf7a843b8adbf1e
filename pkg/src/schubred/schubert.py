"""Cohomology of G/P in the Schubert basis.

``tau_v`` denotes the class of the Schubert variety closure(BvP/P); it has
dimension l(v).  Intersection numbers c(v_1, ..., v_n) integrate the product
of the tau_{v_i} over G/P.

Two backends compute them:

* ``lr``: type A Grassmannians, through the Littlewood-Richardson rule;
* ``localization``: any classical G/P, by restricting Schubert classes to
  torus fixed points (Billey's formula evaluated at a regular integral point)
  and summing over W^P with the tangent Euler classes as denominators.

The environment variable ``SCHUBRED_BACKEND`` (auto, lr, localization)
overrides the automatic choice.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from . import lr
from .rootsys import ParabolicData, RootSystem, Weight, dot
from .weyl import (
    WeylElt,
    identity,
    in_WP,
    longest_coset_rep,
    min_coset_reps,
    poincare_dual,
    simple_reflection,
    strong_covers,
    weyl_to_subset,
)

BACKENDS = ("auto", "lr", "localization")


@dataclass(frozen=True)
class CohClass:
    """Finite integer combination of the classes tau_v, v in W^P."""

    P: ParabolicData
    terms: Mapping[WeylElt, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {v: c for v, c in self.terms.items() if c}
        for v in clean:
            if not in_WP(v, self.P):
                raise ValueError(f"{v} is not in W^P")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def schubert(cls, v: WeylElt, P: ParabolicData) -> "CohClass":
        return cls(P, {v: 1})

    @classmethod
    def fundamental(cls, P: ParabolicData) -> "CohClass":
        return cls(P, {longest_coset_rep(P): 1})

    @classmethod
    def point(cls, P: ParabolicData) -> "CohClass":
        return cls(P, {identity(P.system): 1})

    def __add__(self, other: "CohClass") -> "CohClass":
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, 0) + c
        return CohClass(self.P, out)

    def scale(self, k: int) -> "CohClass":
        return CohClass(self.P, {v: k * c for v, c in self.terms.items()})

    def is_homogeneous(self) -> bool:
        return len({v.length for v in self.terms}) <= 1

    def degree(self) -> int:
        """Coefficient of the point class."""
        return self.terms.get(identity(self.P.system), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)


def chevalley_multiply(zeta: Weight, c: CohClass) -> CohClass:
    """c_1(L(zeta)) times c, by the Chevalley formula.

    Each tau_v becomes the sum over down-covers v' = v s_gamma in W^P of
    <zeta, gamma^vee> tau_{v'}.
    """
    out: dict[WeylElt, int] = {}
    for v, a in c.terms.items():
        for e in strong_covers(v, c.P, "down"):
            k = zeta.pair(e.twisted_label)
            if k:
                out[e.lower] = out.get(e.lower, 0) + a * k
    return CohClass(c.P, out)


# backend selection -------------------------------------------------------


def _is_type_a_grassmannian(P: ParabolicData) -> bool:
    return P.system.kind == "A" and len(P.omitted) == 1


def choose_backend(P: ParabolicData, backend: Optional[str] = None) -> str:
    b = backend or os.environ.get("SCHUBRED_BACKEND", "auto")
    if b not in BACKENDS:
        raise ValueError(f"unknown backend {b!r}")
    if b == "auto":
        return "lr" if _is_type_a_grassmannian(P) else "localization"
    if b == "lr" and not _is_type_a_grassmannian(P):
        raise ValueError("the lr backend only handles type A Grassmannians")
    return b


# localization ------------------------------------------------------------


class Localization:
    """Restrictions xi^u(w) of opposite Schubert classes to fixed points.

    xi^u has codimension l(u) and, for u in W^P, pulls back from G/P.  The
    values are numbers: the equivariant parameters are specialised at a
    regular integral point ``t``, which keeps the integration formula exact.
    """

    def __init__(self, system: RootSystem):
        self.system = system
        m = system.dim_eps
        self.t = tuple(range(m, 0, -1))
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._simple = [simple_reflection(system, i) for i in range(1, system.rank + 1)]

    def root_value(self, root: Sequence[int]) -> int:
        return dot(root, self.t) // 2

    def xi(self, u: WeylElt, w: WeylElt) -> int:
        # xi^u(w' s_j) = xi^u(w') + [u s_j < u] w'(alpha_j) xi^{u s_j}(w')
        key = (u.perm, w.perm)
        got = self._memo.get(key)
        if got is not None:
            return got
        if u.length > w.length:
            val = 0
        elif w.is_identity():
            val = 1 if u.is_identity() else 0
        else:
            s = self.system
            j = next(i for i in range(1, s.rank + 1) if w.right_descent(i))
            sj = self._simple[j - 1]
            wp = w * sj
            val = self.xi(u, wp)
            if u.right_descent(j):
                val += self.root_value(wp.act(s.simple_roots[j - 1])) * self.xi(u * sj, wp)
        self._memo[key] = val
        return val

    def euler(self, w: WeylElt, P: ParabolicData) -> int:
        out = 1
        for g in P.unipotent_roots:
            out *= -self.root_value(w.act(g))
        return out

    def integrate(self, classes: Sequence[WeylElt], P: ParabolicData) -> int:
        """Integral over G/P of the product of xi^{u} for u in ``classes``."""
        total = Fraction(0)
        for w in min_coset_reps(P):
            num = 1
            for u in classes:
                num *= self.xi(u, w)
                if not num:
                    break
            if num:
                total += Fraction(num, self.euler(w, P))
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral localization sum {total}")
        return int(total)


@lru_cache(maxsize=None)
def localization(system: RootSystem) -> Localization:
    return Localization(system)


def _check_same(vs: Sequence[WeylElt], P: ParabolicData) -> None:
    for v in vs:
        if v.system != P.system or not in_WP(v, P):
            raise ValueError(f"{v} is not in W^P for {P}")


def intersection_number(vs: Sequence[WeylElt], P: ParabolicData, backend: Optional[str] = None) -> int:
    """c(v_1, ..., v_n): the integral of prod tau_{v_i} over G/P."""
    _check_same(vs, P)
    n = len(vs)
    if sum(v.length for v in vs) != (n - 1) * P.dim:
        return 0
    b = choose_backend(P, backend)
    if b == "lr":
        (r,) = P.omitted
        N = P.system.N
        return lr.grassmannian_coefficient([weyl_to_subset(v, P) for v in vs], r, N)
    loc = localization(P.system)
    duals = [poincare_dual(v, P) for v in vs]
    return loc.integrate(duals, P)


def product(a: CohClass, b: CohClass, backend: Optional[str] = None) -> CohClass:
    """Cup product in the Schubert basis."""
    P = a.P
    out: dict[WeylElt, int] = {}
    for u, x in a.terms.items():
        for v, y in b.terms.items():
            target = u.length + v.length - P.dim
            if target < 0:
                continue
            for w in min_coset_reps(P):
                if w.length != target:
                    continue
                c = intersection_number([u, v, poincare_dual(w, P)], P, backend)
                if c:
                    out[w] = out.get(w, 0) + x * y * c
    return CohClass(P, out)


# Belkale-Kumar -------------------------------------------------------------


def bk_degree(v: WeylElt, P: ParabolicData) -> int:
    """BK degree of tau^v = <v^{-1} rho - rho, tau>, tau the sum of omitted coweights.

    The value is minus the tau-weight of the inversion set of v.
    """
    s = P.system
    total = 0
    for b in v.inversion_set():
        c = s.simple_coords(b)
        total += sum(c[i - 1] for i in P.omitted)
    return -total


def bk_intersection_number(vs: Sequence[WeylElt], P: ParabolicData, backend: Optional[str] = None) -> int:
    """c^BK(v): c(v) when the BK degrees of the factors add up to that of the point."""
    c = intersection_number(vs, P, backend)
    if not c:
        return 0
    pt = bk_degree(longest_coset_rep(P), P)
    degs = sum(bk_degree(poincare_dual(v, P), P) for v in vs)
    return c if degs == pt else 0


def levi_movable(vs: Sequence[WeylElt], P: ParabolicData, backend: Optional[str] = None) -> bool:
    return bk_intersection_number(vs, P, backend) != 0


# two-step flags ----------------------------------------------------------


def positions_within(inner: Iterable[int], outer: Iterable[int]) -> tuple[int, ...]:
    outer = sorted(outer)
    idx = {x: i for i, x in enumerate(outer, 1)}
    try:
        return tuple(sorted(idx[x] for x in inner))
    except KeyError:
        raise ValueError(f"{tuple(inner)} is not contained in {tuple(outer)}") from None


def richmond_bk_twostep(flags: Sequence[tuple[Sequence[int], Sequence[int]]], p: int, q: int, n: int) -> int:
    """BK coefficient of Fl(p, q; n) as base coefficient times fiber coefficient.

    Each flag is (I_1, I_2) with I_1 of size p inside I_2 of size q; the base
    lives on Gr(q, n) and the fiber on Gr(p, q), indexed by the positions of
    I_1 inside I_2.
    """
    for small, big in flags:
        if len(small) != p or len(big) != q or not set(small) <= set(big) or max(big) > n:
            raise ValueError(f"incompatible flag {tuple(small)} in {tuple(big)}")
    base = lr.grassmannian_coefficient([tuple(sorted(b)) for _, b in flags], q, n)
    if p == q or p == 0:
        return base
    fiber = lr.grassmannian_coefficient([positions_within(s, b) for s, b in flags], p, q)
    return base * fiber
