"""Weyl groups of classical type as (signed) permutations.

An element is stored by its one-line notation on the basis e_1..e_N of the
defining representation.  In types B, C, D the permutation commutes with
i -> N+1-i, and e_i, e_{N+1-i} carry the weights eps_i, -eps_i.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .rootsys import ParabolicData, RootSystem, Vec


@lru_cache(maxsize=None)
def _basis_weights(s: RootSystem) -> tuple[Vec, ...]:
    """Doubled weight of each basis vector e_1..e_N."""
    m, N = s.dim_eps, s.N
    out = []
    for j in range(1, N + 1):
        v = [0] * m
        if s.kind == "A":
            v[j - 1] = 2
        elif j <= s.rank:
            v[j - 1] = 2
        elif j >= N + 1 - s.rank:
            v[N - j] = -2
        out.append(tuple(v))
    return tuple(out)


@lru_cache(maxsize=None)
def _weight_index(s: RootSystem) -> dict[Vec, int]:
    return {w: j for j, w in enumerate(_basis_weights(s), 1)}


def _reflect(s: RootSystem, x: Sequence[int], root: Sequence[int]) -> Vec:
    c = s.pair(x, root)
    return tuple(a - c * b for a, b in zip(x, root))


@dataclass(frozen=True)
class WeylElt:
    system: RootSystem
    perm: tuple[int, ...]

    # group structure ---------------------------------------------------

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        p = self.perm
        return WeylElt(self.system, tuple(p[i - 1] for i in other.perm))

    def inverse(self) -> "WeylElt":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm, 1):
            inv[j - 1] = i
        return WeylElt(self.system, tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm, 1))

    def act(self, x: Sequence[int]) -> Vec:
        """Action on a doubled epsilon vector."""
        s = self.system
        bw = _basis_weights(s)
        out = [0] * s.dim_eps
        for i, xi in enumerate(x):
            if xi:
                img = bw[self.perm[i] - 1]
                for j, c in enumerate(img):
                    if c:
                        out[j] += xi * c // 2
        return tuple(out)

    # length and inversions ---------------------------------------------

    @cached_property
    def length(self) -> int:
        s = self.system
        if s.kind == "A":
            p = self.perm
            return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        return len(self.inversion_set())

    def inversion_set(self) -> frozenset[Vec]:
        """Positive roots sent to negative roots by this element."""
        return frozenset(b for b in self.system.positive_roots if not self.system.is_positive(self.act(b)))

    def sends_negative(self, root: Sequence[int]) -> bool:
        return not self.system.is_positive(self.act(root))

    def right_descent(self, i: int) -> bool:
        return self.sends_negative(self.system.simple_roots[i - 1])

    def left_descent(self, i: int) -> bool:
        return self.inverse().right_descent(i)

    def reduced_word(self) -> tuple[int, ...]:
        """Greedy reduced word (a_1, ..., a_l) with self = s_{a_1} ... s_{a_l}."""
        word = []
        w = self
        while not w.is_identity():
            i = next(i for i in range(1, self.system.rank + 1) if w.left_descent(i))
            word.append(i)
            w = simple_reflection(self.system, i) * w
        return tuple(word)

    # text --------------------------------------------------------------

    def one_line(self) -> tuple[int, ...]:
        """Plain one-line notation in type A, signed notation on 1..rank otherwise."""
        s = self.system
        if s.kind == "A":
            return self.perm
        N = s.N
        return tuple(j if j <= s.rank else -(N + 1 - j) for j in self.perm[: s.rank])

    def encode(self) -> str:
        if self.system.kind == "A" and self.system.N <= 9:
            return "[" + "".join(map(str, self.perm)) + "]"
        return "[" + ",".join(map(str, self.one_line())) + "]"

    def __str__(self) -> str:
        return self.encode()

    def __lt__(self, other: "WeylElt") -> bool:
        return (self.length, self.perm) < (other.length, other.perm)


def identity(s: RootSystem) -> WeylElt:
    return WeylElt(s, tuple(range(1, s.N + 1)))


def perm_of_linear_map(s: RootSystem, f) -> WeylElt:
    """Element whose action on basis weights agrees with ``f``.

    Basis weights are pairwise distinct, so the permutation is determined.
    """
    idx = _weight_index(s)
    return WeylElt(s, tuple(idx[f(w)] for w in _basis_weights(s)))


@lru_cache(maxsize=None)
def reflection(s: RootSystem, root: Vec) -> WeylElt:
    return perm_of_linear_map(s, lambda x: _reflect(s, x, root))


def simple_reflection(s: RootSystem, i: int) -> WeylElt:
    return reflection(s, s.simple_roots[i - 1])


def from_word(s: RootSystem, word: Iterable[int]) -> WeylElt:
    w = identity(s)
    for i in word:
        w = w * simple_reflection(s, i)
    return w


def from_one_line(s: RootSystem, images: Sequence[int]) -> WeylElt:
    """Inverse of :meth:`WeylElt.one_line`."""
    N = s.N
    if s.kind == "A":
        if sorted(images) != list(range(1, N + 1)):
            raise ValueError(f"{tuple(images)} is not a permutation of 1..{N}")
        return WeylElt(s, tuple(images))
    n = s.rank
    if len(images) != n or sorted(abs(x) for x in images) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(images)} is not a signed permutation of 1..{n}")
    perm = [0] * N
    for i, x in enumerate(images, 1):
        j = x if x > 0 else N + 1 + x
        perm[i - 1] = j
        perm[N - i] = N + 1 - j
    if s.kind == "B":
        perm[n] = n + 1
    if s.kind == "D" and sum(1 for x in images if x < 0) % 2:
        raise ValueError("type D needs an even number of sign changes")
    return WeylElt(s, tuple(perm))


def parse_weyl(s: RootSystem, text: str) -> WeylElt:
    """Accept "[35681247]" (type A, N <= 9) or "[2,-4,1,3]"."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad Weyl element {text!r}")
    body = text[1:-1]
    if "," in body or (s.kind != "A"):
        vals = [int(x) for x in body.split(",")]
    else:
        vals = [int(c) for c in body]
    return from_one_line(s, vals)


@lru_cache(maxsize=None)
def longest_element(s: RootSystem, nodes: Optional[tuple[int, ...]] = None) -> WeylElt:
    """Longest element of the parabolic subgroup generated by ``nodes``."""
    nodes = tuple(range(1, s.rank + 1)) if nodes is None else nodes
    w = identity(s)
    grown = True
    while grown:
        grown = False
        for i in nodes:
            if not w.right_descent(i):
                w = w * simple_reflection(s, i)
                grown = True
    return w


def w0(s: RootSystem) -> WeylElt:
    return longest_element(s)


def w0_levi(P: ParabolicData) -> WeylElt:
    return longest_element(P.system, P.levi_nodes)


def in_WP(w: WeylElt, P: ParabolicData) -> bool:
    return not any(w.right_descent(i) for i in P.levi_nodes)


def _require_WP(v: WeylElt, P: ParabolicData) -> None:
    if v.system != P.system or not in_WP(v, P):
        raise ValueError(f"{v} is not a minimal coset representative for {P}")


@lru_cache(maxsize=None)
def min_coset_reps(P: ParabolicData) -> tuple[WeylElt, ...]:
    """W^P sorted by length, grown from e by left multiplication."""
    s = P.system
    e = identity(s)
    seen = {e}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for i in range(1, s.rank + 1):
            if w.left_descent(i):
                continue
            u = simple_reflection(s, i) * w
            if u not in seen and in_WP(u, P):
                seen.add(u)
                queue.append(u)
    return tuple(sorted(seen))


def min_rep(w: WeylElt, P: ParabolicData) -> WeylElt:
    """The minimal length element of the coset w W_P."""
    done = False
    while not done:
        done = True
        for i in P.levi_nodes:
            if w.right_descent(i):
                w = w * simple_reflection(w.system, i)
                done = False
    return w


def all_elements(s: RootSystem) -> tuple[WeylElt, ...]:
    return min_coset_reps(ParabolicData.borel(s))


def longest_coset_rep(P: ParabolicData) -> WeylElt:
    """w^P, the longest element of W^P."""
    return w0(P.system) * w0_levi(P)


def poincare_dual(v: WeylElt, P: ParabolicData) -> WeylElt:
    _require_WP(v, P)
    return w0(P.system) * v * w0_levi(P)


# covers ---------------------------------------------------------------


@dataclass(frozen=True)
class CoverEdge:
    lower: WeylElt
    upper: WeylElt
    twisted_label: Vec
    simple_label: Optional[int] = None


def _positive(s: RootSystem, root: Vec) -> Vec:
    return root if s.is_positive(root) else tuple(-x for x in root)


def _simple_label(lower: WeylElt, upper: WeylElt) -> Optional[int]:
    s = lower.system
    for i in range(1, s.rank + 1):
        if simple_reflection(s, i) * lower == upper:
            return i
    return None


def strong_covers(v: WeylElt, P: ParabolicData, direction: str = "up") -> list[CoverEdge]:
    """Edges v -> v s_gamma inside W^P with length changing by one."""
    s = P.system
    step = 1 if direction == "up" else -1
    out = []
    for g in s.positive_roots:
        u = v * reflection(s, g)
        if u.length == v.length + step and in_WP(u, P):
            lo, hi = (v, u) if step == 1 else (u, v)
            out.append(CoverEdge(lo, hi, g, _simple_label(lo, hi)))
    return out


def weak_covers(v: WeylElt, P: ParabolicData, direction: str = "up") -> list[CoverEdge]:
    """Edges v -> s_alpha v inside W^P with length changing by one."""
    s = P.system
    step = 1 if direction == "up" else -1
    out = []
    for i in range(1, s.rank + 1):
        u = simple_reflection(s, i) * v
        if u.length == v.length + step and in_WP(u, P):
            lo, hi = (v, u) if step == 1 else (u, v)
            gamma = _positive(s, lo.inverse().act(s.simple_roots[i - 1]))
            out.append(CoverEdge(lo, hi, gamma, i))
    return out


def covers(v: WeylElt, P: ParabolicData, direction: str = "up", order: str = "strong") -> list[CoverEdge]:
    _require_WP(v, P)
    if direction not in ("up", "down") or order not in ("strong", "weak"):
        raise ValueError("direction is up/down and order is strong/weak")
    fn = strong_covers if order == "strong" else weak_covers
    return fn(v, P, direction)


# words and inversion sequences -----------------------------------------


def beta_sequence(s: RootSystem, word: Sequence[int]) -> list[Vec]:
    """beta_i = s_{a_1} ... s_{a_{i-1}} (alpha_{a_i}); these enumerate the inversions of w^{-1}."""
    w = from_word(s, word)
    if w.length != len(word):
        raise ValueError(f"word {tuple(word)} is not reduced")
    out = []
    prefix = identity(s)
    for a in word:
        out.append(prefix.act(s.simple_roots[a - 1]))
        prefix = prefix * simple_reflection(s, a)
    return out


def gamma_sequence(s: RootSystem, word: Sequence[int]) -> list[Vec]:
    """gamma_i = s_{a_l} ... s_{a_{l-i+2}} (alpha_{a_{l-i+1}}), the inversions of w."""
    return beta_sequence(s, tuple(reversed(word)))


def reduced_words(w: WeylElt) -> Iterator[tuple[int, ...]]:
    """Every reduced word of ``w`` (exponential; meant for small ranks)."""
    s = w.system
    if w.is_identity():
        yield ()
        return
    for i in range(1, s.rank + 1):
        if w.left_descent(i):
            for rest in reduced_words(simple_reflection(s, i) * w):
                yield (i,) + rest


# Grassmannian subsets ---------------------------------------------------


def standard_subset(P: ParabolicData) -> tuple[int, ...]:
    """Indices of the basis vectors spanning the subspace fixed by P."""
    s = P.system
    if len(P.omitted) != 1:
        raise ValueError("subset indexing needs a maximal parabolic")
    (r,) = P.omitted
    if s.kind == "D" and r == s.rank - 1:
        return tuple(range(1, s.rank)) + (s.rank + 1,)
    return tuple(range(1, r + 1))


def weyl_to_subset(v: WeylElt, P: ParabolicData) -> tuple[int, ...]:
    return tuple(sorted(v.perm[i - 1] for i in standard_subset(P)))


@lru_cache(maxsize=None)
def _subset_table(P: ParabolicData) -> dict[tuple[int, ...], WeylElt]:
    return {weyl_to_subset(v, P): v for v in min_coset_reps(P)}


def subset_to_weyl(I: Iterable[int], P: ParabolicData) -> WeylElt:
    """The element v_I of W^P with v_I(standard subset) = I."""
    s = P.system
    I = tuple(sorted(I))
    F = standard_subset(P)
    N = s.N
    if len(I) != len(F) or len(set(I)) != len(I) or not all(1 <= i <= N for i in I):
        raise ValueError(f"{I} is not an admissible subset for {P}")
    if s.kind == "A":
        rest = tuple(i for i in range(1, N + 1) if i not in I)
        return WeylElt(s, I + rest)
    if any(N + 1 - i in I for i in I):
        raise ValueError(f"{I} is not isotropic")
    try:
        return _subset_table(P)[I]
    except KeyError:
        raise ValueError(f"{I} is not an admissible subset for {P}") from None


def flag_to_weyl(chain: Sequence[Iterable[int]], P: ParabolicData) -> WeylElt:
    """Type A: the element of W^P sending each standard subspace to the given chain.

    ``chain`` lists nested subsets I_1 < I_2 < ... whose sizes are the
    omitted nodes of P.
    """
    s = P.system
    if s.kind != "A":
        raise ValueError("flags of subsets are read in type A only")
    chain = [tuple(sorted(set(c))) for c in chain]
    sizes = [len(c) for c in chain]
    if sizes != sorted(P.omitted):
        raise ValueError(f"subset sizes {sizes} do not match the omitted nodes {sorted(P.omitted)}")
    N = s.N
    images: list[int] = []
    prev: set[int] = set()
    for c in chain:
        if not prev <= set(c) or not all(1 <= i <= N for i in c):
            raise ValueError(f"{tuple(chain)} is not a chain of subsets of 1..{N}")
        images += sorted(set(c) - prev)
        prev = set(c)
    images += [i for i in range(1, N + 1) if i not in prev]
    return WeylElt(s, tuple(images))


def dual_subset(I: Iterable[int], N: int) -> tuple[int, ...]:
    return tuple(sorted(N + 1 - i for i in I))


# combinatorial lemmas as predicates ------------------------------------


def check_rho_identity(w: WeylElt) -> bool:
    """Sum of the inversions of w^{-1} equals rho - w(rho)."""
    s = w.system
    inv = w.inverse().inversion_set()
    lhs = tuple(sum(b[j] for b in inv) for j in range(s.dim_eps))
    wr = w.act(s.rho2)
    rhs = tuple(a - b for a, b in zip(s.rho2, wr))
    return lhs == rhs


def check_sumgamma(v: WeylElt) -> bool:
    """The deletion identity for every strong down-cover s_beta v of v (one reduced word)."""
    s = v.system
    word = v.reduced_word()
    betas = beta_sequence(s, word)
    for beta in s.positive_roots:
        vp = reflection(s, beta) * v
        if vp.length != v.length - 1:
            continue
        hits = [i for i in range(len(word)) if from_word(s, word[:i] + word[i + 1:]) == vp]
        if len(hits) != 1:
            return False
        i = hits[0]
        if betas[i] != beta:
            return False
        total = tuple(sum(b[j] for b in betas[i:]) for j in range(s.dim_eps))
        neg = tuple(-x for x in v.inverse().act(beta))
        if not s.is_positive(neg) or s.pair(total, beta) != s.height(neg) + 1:
            return False
    return True


def check_weak_diamonds(v: WeylElt) -> bool:
    """Every weak-order diamond with bottom v has alpha = delta, beta = gamma, commuting."""
    s = v.system
    up = [i for i in range(1, s.rank + 1) if not v.left_descent(i)]
    for a in up:
        for b in up:
            if a == b:
                continue
            left = simple_reflection(s, a) * v
            right = simple_reflection(s, b) * v
            for g in range(1, s.rank + 1):
                top = simple_reflection(s, g) * left
                if top.length != v.length + 2:
                    continue
                for d in range(1, s.rank + 1):
                    if simple_reflection(s, d) * right != top:
                        continue
                    sa, sb = simple_reflection(s, a), simple_reflection(s, b)
                    if not (a == d and b == g and sa * sb == sb * sa):
                        return False
    return True


def check_mixed_diamonds(w: WeylElt, P: ParabolicData) -> bool:
    """Completion of mixed strong/weak diamonds and W^P closure."""
    s = w.system
    lw = w.length
    for i in range(1, s.rank + 1):
        sa = simple_reflection(s, i)
        aw = sa * w
        for g in s.positive_roots:
            sg = reflection(s, g)
            wg = w * sg
            if aw == wg:
                continue
            top = sa * w * sg
            if aw.length == lw + 1 and wg.length == lw + 1:
                if top.length != lw + 2:
                    return False
                if in_WP(wg, P) and in_WP(aw, P) and not (in_WP(w, P) and in_WP(top, P)):
                    return False
            if aw.length == lw - 1 and wg.length == lw - 1 and top.length != lw - 2:
                return False
    return True


__all__ = [
    "WeylElt", "CoverEdge", "identity", "reflection", "simple_reflection", "from_word",
    "from_one_line", "parse_weyl", "w0", "w0_levi", "longest_element", "in_WP",
    "min_coset_reps", "all_elements", "longest_coset_rep", "poincare_dual", "covers",
    "strong_covers", "weak_covers", "beta_sequence", "gamma_sequence", "reduced_words",
    "standard_subset", "weyl_to_subset", "subset_to_weyl", "dual_subset",
    "check_rho_identity", "check_sumgamma", "check_weak_diamonds", "check_mixed_diamonds",
]
