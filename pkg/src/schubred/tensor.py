"""Tensor product multiplicities for classical groups and their Levi subgroups.

Weights are handled through their doubled epsilon coordinates.  Weight
multiplicities come from Freudenthal's recursion on dominant weights; the
rest of a weight diagram is recovered by W-invariance.  Invariants of a
triple tensor product use the Racah-Speiser form of Steinberg's formula

    m(z1, z2, z3) = sum_w sign(w) mult_{z2}(w(z1* + rho) - rho - z3).

In type A the group is SL_N, realised with GL_N coordinates; a triple has
invariants only when the sizes of its GL lifts add up to a multiple of N.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .rootsys import ParabolicData, RootSystem, Vec, Weight, dot


def _sub(x: Sequence[int], y: Sequence[int]) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def _add(x: Sequence[int], y: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def dominant_rep(s: RootSystem, x: Sequence[int]) -> tuple[Vec, int]:
    """Dominant element of the W-orbit of x and the parity of the reflections used."""
    x = tuple(x)
    parity = 0
    simple = s.simple_roots
    changed = True
    while changed:
        changed = False
        for a in simple:
            p = s.pair(x, a)
            if p < 0:
                x = tuple(xi - p * ai for xi, ai in zip(x, a))
                parity ^= 1
                changed = True
    return x, parity


def is_dominant(s: RootSystem, x: Sequence[int]) -> bool:
    return all(s.pair(x, a) >= 0 for a in s.simple_roots)


def orbit(s: RootSystem, x: Sequence[int]) -> list[Vec]:
    seen = {tuple(x)}
    todo = [tuple(x)]
    while todo:
        y = todo.pop()
        for a in s.simple_roots:
            p = s.pair(y, a)
            if p:
                z = tuple(yi - p * ai for yi, ai in zip(y, a))
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
    return sorted(seen)


def signed_orbit(s: RootSystem, x: Sequence[int]) -> list[tuple[Vec, int]]:
    """The orbit of a regular vector x with the sign of the element reaching each point."""
    start = tuple(x)
    sign = {start: 1}
    todo = [start]
    while todo:
        y = todo.pop()
        for a in s.simple_roots:
            p = s.pair(y, a)
            if p == 0:
                raise ValueError(f"{start} is not regular")
            z = tuple(yi - p * ai for yi, ai in zip(y, a))
            if z not in sign:
                sign[z] = -sign[y]
                todo.append(z)
    return sorted(sign.items())


def weyl_dimension(s: RootSystem, lam: Sequence[int]) -> int:
    """dim V_lambda by the Weyl dimension formula (lam doubled)."""
    lr = _add(lam, s.rho2)
    num, den = 1, 1
    for a in s.positive_roots:
        num *= dot(lr, a)
        den *= dot(s.rho2, a)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    return int(q)


@dataclass
class WeightMultiplicityTable:
    system: RootSystem
    highest: Vec
    dominant: dict[Vec, int] = field(default_factory=dict)

    def __getitem__(self, x: Sequence[int]) -> int:
        d, _ = dominant_rep(self.system, x)
        return self.dominant.get(d, 0)

    def items(self):
        """All weights with their multiplicities."""
        for d, m in self.dominant.items():
            for x in orbit(self.system, d):
                yield x, m

    def dimension(self) -> int:
        return sum(m * len(orbit(self.system, d)) for d, m in self.dominant.items())


def _dominant_weights(s: RootSystem, lam: Vec) -> list[Vec]:
    """Dominant weights below lam, ordered by their distance to lam."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in s.positive_roots:
                nu = _sub(mu, a)
                if nu not in seen and is_dominant(s, nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda mu: (_level(s, lam, mu), mu))


def _level(s: RootSystem, lam: Vec, mu: Vec) -> int:
    return sum(s.simple_coords(_sub(lam, mu))) if lam != mu else 0


def _freudenthal(s: RootSystem, lam: Vec) -> dict[Vec, int]:
    """Multiplicities of the dominant weights of V_lam (doubled coordinates)."""
    weights = _dominant_weights(s, lam)
    known = set(weights)
    mult: dict[Vec, int] = {}
    lr = _add(lam, s.rho2)
    norm = dot(lr, lr)
    for mu in weights:
        if mu == lam:
            mult[mu] = 1
            continue
        mr = _add(mu, s.rho2)
        den = norm - dot(mr, mr)
        num = 0
        for a in s.positive_roots:
            k = 1
            while True:
                x = tuple(m + k * ai for m, ai in zip(mu, a))
                d, _ = dominant_rep(s, x)
                if d not in known:
                    break
                num += dot(x, a) * mult[d]
                k += 1
        num *= 2
        if den <= 0 or num % den:
            raise ArithmeticError(f"Freudenthal recursion failed at {mu}")
        mult[mu] = num // den
    return {mu: m for mu, m in mult.items() if m}


@lru_cache(maxsize=None)
def _table(s: RootSystem, lam: Vec) -> WeightMultiplicityTable:
    return WeightMultiplicityTable(s, lam, _freudenthal(s, lam))


def weight_multiplicities(lam: Weight) -> WeightMultiplicityTable:
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    return _table(lam.system, lam.eps2)


def dimension(lam: Weight) -> int:
    return weyl_dimension(lam.system, lam.eps2)


def dual(lam: Weight) -> Weight:
    """The highest weight -w0(lam) of the dual module."""
    s = lam.system
    d, _ = dominant_rep(s, tuple(-x for x in lam.eps2))
    return s.weight_from_eps2(d)


def _klimyk(s: RootSystem, lam: Vec, mu: Vec) -> dict[Vec, int]:
    """V_lam (x) V_mu as doubled highest weights with multiplicities."""
    t = _table(s, lam)
    out: dict[Vec, int] = {}
    for x, m in t.items():
        y = _add(_add(x, mu), s.rho2)
        d, parity = dominant_rep(s, y)
        if any(s.pair(d, a) == 0 for a in s.simple_roots):
            continue
        nu = _sub(d, s.rho2)
        out[nu] = out.get(nu, 0) + (-m if parity else m)
    return {nu: m for nu, m in out.items() if m}


def tensor_decompose(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of the irreducible summands of V_lam (x) V_mu."""
    s = lam.system
    if mu.system != s or not (lam.is_dominant() and mu.is_dominant()):
        raise ValueError("need dominant weights of one group")
    a, b = (lam, mu) if dimension(lam) <= dimension(mu) else (mu, lam)
    res = _klimyk(s, a.eps2, b.eps2)
    out = {}
    for nu, m in res.items():
        if m < 0:
            raise ArithmeticError("negative multiplicity")
        out[s.weight_from_eps2(nu)] = m
    return out


def _gl_shift(s: RootSystem, vecs: Sequence[Vec]) -> Optional[int]:
    """Constant c with sizes summing to c * N, or None (type A only)."""
    total = sum(sum(v) for v in vecs)
    n = s.dim_eps
    if total % (2 * n):
        return None
    return total // (2 * n)


def _triple(s: RootSystem, z1: Vec, z2: Vec, z3: Vec) -> int:
    """dim (V1 (x) V2 (x) V3)^G with V2 the module whose weights are tabulated."""
    star, _ = dominant_rep(s, tuple(-x for x in z1))
    if s.kind == "A":
        c = _gl_shift(s, (z1, z2, z3))
        if c is None:
            return 0
        star = tuple(x + 2 * c for x in star)
    t = _table(s, z2)
    total = 0
    for x, sign in signed_orbit(s, _add(star, s.rho2)):
        m = t[_sub(_sub(x, s.rho2), z3)]
        if m:
            total += sign * m
    return total


def triple_invariants(*weights: Weight) -> int:
    """dim (V_{z1} (x) ... (x) V_{zn})^G for dominant weights of one group."""
    if not weights:
        return 1
    s = weights[0].system
    for w in weights:
        if w.system != s:
            raise ValueError("weights of different groups")
        if not w.is_dominant():
            raise ValueError(f"{w} is not dominant")
    vecs = [w.eps2 for w in weights]
    return _invariants(s, vecs)


def _invariants(s: RootSystem, vecs: list[Vec]) -> int:
    n = len(vecs)
    if n == 1:
        return 1 if not any(s.pair(vecs[0], a) for a in s.simple_roots) and _center_ok(s, vecs) else 0
    if n == 2:
        star, _ = dominant_rep(s, tuple(-x for x in vecs[0]))
        same = all(s.pair(star, a) == s.pair(vecs[1], a) for a in s.simple_roots)
        return 1 if same and _center_ok(s, vecs) else 0
    if n == 3:
        order = sorted(range(3), key=lambda i: weyl_dimension(s, vecs[i]))
        i2 = order[0]
        i1, i3 = [i for i in range(3) if i != i2]
        return _triple(s, vecs[i1], vecs[i2], vecs[i3])
    # fold the last two factors and recurse
    a, b = vecs[-2], vecs[-1]
    if weyl_dimension(s, a) > weyl_dimension(s, b):
        a, b = b, a
    total = 0
    for nu, m in _klimyk(s, a, b).items():
        total += m * _invariants(s, vecs[:-2] + [nu])
    return total


def _center_ok(s: RootSystem, vecs: Sequence[Vec]) -> bool:
    if s.kind != "A":
        # the center of the simply connected group acts through the weight
        # lattice modulo the root lattice
        total = tuple(sum(c) for c in zip(*vecs))
        try:
            s.simple_coords(total)
        except ValueError:
            return False
        return True
    return _gl_shift(s, vecs) is not None


# Levi subgroups -------------------------------------------------------------


@dataclass(frozen=True)
class LeviFactor:
    """A simple factor of L^ss on a block of epsilon coordinates.

    ``coords`` are 0-based indices into the ambient epsilon vector and
    ``signs`` flip coordinates where the block uses -eps_j.
    """

    system: RootSystem
    coords: tuple[int, ...]
    signs: tuple[int, ...]

    def restrict(self, x: Sequence[int]) -> Vec:
        return tuple(sg * x[i] for i, sg in zip(self.coords, self.signs))

    def weight(self, x: Sequence[int]) -> Weight:
        return self.system.weight_from_eps2(self.restrict(x))


def _a_block(coords: Sequence[int], signs: Optional[Sequence[int]] = None) -> Optional[LeviFactor]:
    coords = tuple(coords)
    if len(coords) < 2:
        return None
    signs = tuple(signs) if signs is not None else (1,) * len(coords)
    return LeviFactor(RootSystem("A", len(coords) - 1), coords, signs)


def _cuts(bounds: Sequence[int], stop: int) -> list[tuple[int, ...]]:
    out = []
    prev = 0
    for b in list(bounds) + [stop]:
        out.append(tuple(range(prev, b)))
        prev = b
    return out


def levi_factors(P: ParabolicData) -> tuple[LeviFactor, ...]:
    s = P.system
    n = s.rank
    om = sorted(P.omitted)
    blocks: list[Optional[LeviFactor]] = []
    if s.kind == "A":
        blocks = [_a_block(c) for c in _cuts(om, n + 1)]
    elif s.kind in "BC" or (s.kind == "D" and om[-1] <= n - 2):
        blocks = [_a_block(c) for c in _cuts(om[:-1], om[-1])]
        t = n - om[-1]
        if t:
            tail = tuple(range(om[-1], n))
            if s.kind == "D" and t == 1:
                raise AssertionError("unreachable")
            blocks.append(LeviFactor(RootSystem(s.kind, t, small=True), tail, (1,) * t))
    else:
        low = [i for i in om if i <= n - 2]
        top = set(om) - set(low)
        start = low[-1] if low else 0
        blocks = [_a_block(c) for c in _cuts(low[:-1], start)] if low else []
        if top == {n - 1}:
            coords = tuple(range(start, n))
            blocks.append(_a_block(coords, (1,) * (len(coords) - 1) + (-1,)))
        elif top == {n}:
            blocks.append(_a_block(tuple(range(start, n))))
        else:
            blocks.append(_a_block(tuple(range(start, n - 1))))
    out = tuple(b for b in blocks if b is not None)
    if sum(b.system.rank for b in out) != len(P.levi_nodes):
        raise AssertionError(f"Levi decomposition of {P} lost nodes")
    return out


def center_character(P: ParabolicData, vecs: Sequence[Sequence[int]]) -> dict[int, Fraction]:
    """Pairings of the total weight with the omitted fundamental coweights."""
    s = P.system
    total = tuple(sum(c) for c in zip(*vecs))
    return {node: s.coweight(total, node) for node in sorted(P.omitted)}


def levi_invariants(P: ParabolicData, vecs: Sequence[Sequence[int]], method: str = "auto") -> int:
    """m_L for L-dominant doubled vectors.

    L = S L^ss with S the connected center; the invariants are those of L^ss
    when S acts trivially on the tensor product and 0 otherwise.  ``method``
    "auto" evaluates type A factors with three weights by the LR rule and
    "tensor" forces the weight-diagram computation everywhere.
    """
    if any(x for x in center_character(P, vecs).values()):
        return 0
    total = 1
    for f in levi_factors(P):
        ws = [f.weight(x) for x in vecs]
        for w in ws:
            if not w.is_dominant():
                raise ValueError(f"{w} is not dominant for the factor {f.system}")
        if method == "auto" and f.system.kind == "A" and len(ws) == 3:
            from . import lr

            total *= lr.m_sl(*[tuple(x // 2 for x in w.eps2) for w in ws])
        else:
            total *= _invariants(f.system, [w.eps2 for w in ws])
        if not total:
            return 0
    return total
