"""Littlewood-Richardson coefficients and their dictionaries for GL_n.

Coefficients are counted by backtracking over LR tableaux, one box at a
time in reading order.  A second counter fills whole rows and memoises on
the (row, content so far, previous row) state; it is kept as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    if p and p[-1] < 0:
        raise ValueError(f"{p} has negative parts")
    return p


def parse_partition(text: str) -> Partition:
    """Read "p:3,2,1" (the prefix is optional; "" or "p:" is the empty partition)."""
    text = text.strip()
    if text.startswith("p:"):
        text = text[2:]
    return as_partition(int(x) for x in text.split(",") if x.strip()) if text.strip() else ()


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


# coefficients ----------------------------------------------------------


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int],
                   method: str = "boxes") -> int:
    """c_{lam, mu}^{nu}: LR tableaux of shape nu/lam with content mu."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1
    if not contains(nu, mu):
        return 0
    if method == "rows":
        return _lr_count(lam, mu, nu)
    if method != "boxes":
        raise ValueError(f"unknown method {method!r}")
    return _race(_orientations(lam, mu, nu))


def _orientations(lam: Partition, mu: Partition, nu: Partition) -> list[tuple[Partition, Partition, Partition]]:
    """Triples with the same coefficient: swap lam and mu, conjugate all three."""
    out = []
    for t in ((lam, mu, nu), (mu, lam, nu)):
        for u in (t, tuple(conjugate(p) for p in t)):
            if u not in out:
                out.append(u)
    return out


def conjugate(p: Sequence[int]) -> Partition:
    p = as_partition(p)
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


class _BoxSearch:
    """Resumable count of LR tableaux, filling boxes in reading order."""

    def __init__(self, lam: Partition, mu: Partition, nu: Partition):
        rows = len(nu)
        self.lam = lam + (0,) * (rows - len(lam))
        self.k = len(mu)
        self.cells = [(i, c) for i in range(rows) for c in range(nu[i] - 1, self.lam[i] - 1, -1)]
        index = {cell: p for p, cell in enumerate(self.cells)}
        self.above = [index.get((i - 1, c), -1) for i, c in self.cells]
        self.filled = [0] * len(self.cells)
        self.count = [0] * (self.k + 1)
        self.cap = (0,) + mu
        self.total = 0
        self.stack = [(0, 0)]

    def run(self, budget: int) -> bool:
        """Advance at most ``budget`` steps; True once the count is final."""
        cells, filled, count, cap, above, stack = \
            self.cells, self.filled, self.count, self.cap, self.above, self.stack
        k = self.k
        while stack and budget:
            budget -= 1
            p, x = stack.pop()
            if p == len(cells):
                self.total += 1
                continue
            if x:
                count[filled[p]] -= 1
                x = filled[p] + 1
            else:
                x = filled[above[p]] + 1 if above[p] >= 0 else 1
            i = cells[p][0]
            hi = min(k, i + 1)
            if p and cells[p - 1][0] == i:
                hi = min(hi, filled[p - 1])
            # content not exhausted, and the reading word stays a lattice word
            while x <= hi and (count[x] == cap[x] or (x > 1 and count[x] >= count[x - 1])):
                x += 1
            if x > hi:
                continue
            filled[p] = x
            count[x] += 1
            stack.append((p, x))
            stack.append((p + 1, 0))
        return not stack


@lru_cache(maxsize=200_000)
def _race_cached(candidates: tuple) -> int:
    searches = [_BoxSearch(*t) for t in candidates]
    budget = 2_000
    while True:
        for s in searches:
            if s.run(budget):
                return s.total
        budget *= 2


def _race(candidates: Sequence[tuple[Partition, Partition, Partition]]) -> int:
    # the search time depends a lot on the orientation, the count does not
    return _race_cached(tuple(candidates))


@lru_cache(maxsize=200_000)
def _lr_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    rows = len(nu)
    lam = lam + (0,) * (rows - len(lam))
    k = len(mu)
    inf = sum(nu) + 1

    def rows_of(i: int, content: tuple[int, ...], prev_ends: tuple[int, ...]):
        # prev_ends[j]: column where letters below j+1 end in the row above
        letters = min(i + 1, k)
        width = nu[i] - lam[i]
        counts = [0] * k

        def rec(j: int, end: int, left: int):
            if j == letters:
                if left == 0:
                    yield tuple(counts)
                return
            cap = min(mu[j] - content[j], left)
            if j > 0:
                cap = min(cap, content[j - 1] - content[j])
            if i > 0:
                cap = min(cap, prev_ends[j] - end)
            for a in range(cap, -1, -1):
                counts[j] = a
                yield from rec(j + 1, end + a, left - a)
            counts[j] = 0

        yield from rec(0, lam[i], width)

    @lru_cache(maxsize=None)
    def fill(i: int, content: tuple[int, ...], prev_ends: tuple[int, ...]) -> int:
        if i == rows:
            return 1 if content == mu else 0
        total = 0
        for counts in rows_of(i, content, prev_ends):
            ends = [lam[i]]
            for a in counts:
                ends.append(ends[-1] + a)
            new = tuple(c + a for c, a in zip(content, counts))
            total += fill(i + 1, new, tuple(ends))
        return total

    return fill(0, (0,) * k, (inf,) * (k + 1))


def partitions_in_box(rows: int, cols: int, size: Optional[int] = None) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    out = []

    def rec(prefix: tuple[int, ...], cap: int, total: int):
        if size is None or total == size:
            out.append(prefix)
        if len(prefix) == rows:
            return
        for x in range(1, cap + 1):
            if size is None or total + x <= size:
                rec(prefix + (x,), x, total + x)

    rec((), cols, 0)
    return sorted(out)


def lr_product(a: Iterable[int], b: Iterable[int], rows: Optional[int] = None,
               cols: Optional[int] = None) -> dict[Partition, int]:
    """s_a * s_b expanded in Schur functions, optionally cut to a rows x cols box."""
    a, b = as_partition(a), as_partition(b)
    size = sum(a) + sum(b)
    r = rows if rows is not None else len(a) + len(b)
    c = cols if cols is not None else (a[0] if a else 0) + (b[0] if b else 0)
    out = {}
    for nu in partitions_in_box(r, c, size):
        if contains(nu, a) and contains(nu, b):
            v = lr_coefficient(a, b, nu)
            if v:
                out[nu] = v
    return out


def scaled_lr(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int], k: int) -> int:
    """c_{k lam, k mu}^{k nu}, counted directly."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return lr_coefficient([k * x for x in lam], [k * x for x in mu], [k * x for x in nu])


def m_gl(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """dim (V_lam x V_mu x V_nu)^{GL_n} for dominant GL weights of one length n."""
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise ValueError("the three weights must have the same length")
    for w in (lam, mu, nu):
        if any(x < y for x, y in zip(w, w[1:])):
            raise ValueError(f"{tuple(w)} is not dominant")
    if sum(lam) + sum(mu) + sum(nu):
        return 0
    if n == 0:
        return 1
    # m is symmetric in the three weights and under w -> w*; every
    # arrangement gives an LR coefficient, race them all
    triples = [(lam, mu, nu), (mu, nu, lam), (nu, lam, mu)]
    triples += [tuple(_star(w) for w in t) for t in triples]
    candidates = []
    for x, y, z in triples:
        z_star = _star(z)
        a, b = x[-1], y[-1]
        if z_star[-1] - a - b < 0:
            return 0
        t = tuple(as_partition(v - s for v in w) for w, s in ((x, a), (y, b), (z_star, a + b)))
        if not (contains(t[2], t[0]) and contains(t[2], t[1])):
            return 0
        if not t[1]:
            return 1
        for u in _orientations(*t):
            if u not in candidates:
                candidates.append(u)
    return _race(candidates)


def _star(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(-v for v in reversed(w))


def m_sl(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """SL_n version: GL weights modulo the centre (0 unless the total is divisible by n)."""
    n = len(lam)
    total = sum(lam) + sum(mu) + sum(nu)
    if n == 0:
        return 1
    if total % n:
        return 0
    t = total // n
    return m_gl(lam, mu, [x - t for x in nu])


# subsets and partitions -------------------------------------------------


def lambda_of_subset(I: Iterable[int], n: Optional[int] = None) -> Partition:
    """lambda(I): the k-th largest part is i_{r+1-k} - (r+1-k)."""
    I = sorted(I)
    if len(set(I)) != len(I) or (I and I[0] < 1) or (n is not None and I and I[-1] > n):
        raise ValueError(f"{I} is not a subset of 1..{n}")
    r = len(I)
    return tuple(I[r - k] - (r + 1 - k) for k in range(1, r + 1))


def subset_of_lambda(lam: Iterable[int], r: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`lambda_of_subset` for a partition in an r x (n-r) box."""
    lam = list(as_partition(lam))
    if len(lam) > r or (lam and lam[0] > n - r):
        raise ValueError(f"{tuple(lam)} does not fit in a {r} x {n - r} box")
    lam += [0] * (r - len(lam))
    return tuple(lam[r - j] + j for j in range(1, r + 1))


def dual_subset(I: Iterable[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(n + 1 - i for i in I))


def complement(I: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(I)
    return tuple(i for i in range(1, n + 1) if i not in s)


def select(parts: Sequence[int], I: Iterable[int]) -> tuple[int, ...]:
    """lambda_I: the parts at the (1-based) positions in I."""
    return tuple(parts[i - 1] for i in sorted(I))


def grassmannian_coefficient(subsets: Sequence[Sequence[int]], r: int, n: int) -> int:
    """Integral over Gr(r, n) of the product of the classes tau_{v_I}.

    tau_{v_I} is the class of dimension |lambda(I)|, i.e. sigma_{lambda(I^vee)}.
    """
    box = r * (n - r)
    parts = [lambda_of_subset(dual_subset(I, n), n) for I in subsets]
    if sum(sum(p) for p in parts) != box:
        return 0
    if len(parts) == 1:
        return 1 if sum(parts[0]) == box else 0
    if len(parts) == 2:
        return 1 if _complement_in_box(parts[0], r, n - r) == as_partition(parts[1]) else 0
    last = _complement_in_box(parts[-1], r, n - r)
    if len(parts) == 3:
        return lr_coefficient(parts[0], parts[1], last)
    current = {as_partition(parts[0]): 1}
    for p in parts[1:-1]:
        nxt: dict[Partition, int] = {}
        for shape, mult in current.items():
            for nu, c in lr_product(shape, p, r, n - r).items():
                nxt[nu] = nxt.get(nu, 0) + mult * c
        current = nxt
    return current.get(last, 0)


def _complement_in_box(lam: Sequence[int], rows: int, cols: int) -> Partition:
    p = list(lam) + [0] * (rows - len(lam))
    return as_partition(cols - x for x in reversed(p))


# Horn inequalities -------------------------------------------------------


@dataclass(frozen=True)
class GLHornForm:
    """The functional |lam_I| + |mu_J| + |nu_K| on GL weight triples.

    It is nonpositive wherever m_gl is nonzero, provided c(v_I, v_J, v_K) != 0.
    """

    subsets: tuple[tuple[int, ...], ...]
    n: int

    def __call__(self, *weights: Sequence[int]) -> int:
        return sum(sum(select(w, I)) for w, I in zip(weights, self.subsets))

    def describe(self, names: str = "λμν") -> str:
        return "+".join(f"{names[m]}{i}" for m, I in enumerate(self.subsets) for i in I)


def horn_form(I: Iterable[int], J: Iterable[int], K: Iterable[int], n: int, strict: bool = True) -> GLHornForm:
    subsets = tuple(tuple(sorted(x)) for x in (I, J, K))
    r = len(subsets[0])
    if strict and grassmannian_coefficient(subsets, r, n) == 0:
        raise ValueError("the triple has zero Schubert coefficient")
    return GLHornForm(subsets, n)


# GL_3 interval formula ---------------------------------------------------


def gl3_interval_count(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """m_gl for GL_3 as the number of integers in an explicit interval."""
    l1, l2, l3 = lam
    m1, m2, m3 = mu
    n1, n2, n3 = nu
    if l1 + l2 + l3 + m1 + m2 + m3 + n1 + n2 + n3:
        return 0
    # the interval is only valid once lam and mu end in 0
    l1, l2 = l1 - l3, l2 - l3
    m1, m2 = m1 - m3, m2 - m3
    n1, n2, n3 = n1 + l3 + m3, n2 + l3 + m3, n3 + l3 + m3
    lo = max(m1 - l2, m2, -n3 - l1, m1 + n1, -n2 - l2, m1 + m2 + n2)
    hi = min(m1, -n3 - l2, m1 + m2 + n1)
    return max(0, hi - lo + 1)


# puzzles -------------------------------------------------------------------

# Pieces as label triples.  Up triangles are read (left, right, bottom) and
# down triangles (top, left, right); the label 2 marks the glued edge of a
# rhombus and never sits on the boundary.
UP_PIECES = frozenset({(0, 0, 0), (1, 1, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)})
DOWN_PIECES = frozenset({(0, 0, 0), (1, 1, 1), (0, 1, 2), (2, 0, 1), (1, 2, 0)})


def _parse_boundary(side) -> tuple[int, ...]:
    if isinstance(side, str):
        return tuple(int(c) for c in side.strip())
    return tuple(int(c) for c in side)


def puzzle_count(left, right, bottom, up_pieces=UP_PIECES, down_pieces=DOWN_PIECES) -> int:
    """Number of puzzles of size n with the given 0/1 boundary labels.

    ``left`` is read from the top vertex down, ``right`` from the bottom right
    corner up to the top, ``bottom`` from left to right.
    """
    L, R, B = (_parse_boundary(x) for x in (left, right, bottom))
    n = len(L)
    if len(R) != n or len(B) != n:
        raise ValueError("the three sides must have the same length")
    if any(x not in (0, 1) for x in L + R + B):
        raise ValueError("boundary labels are 0 and 1")
    if not (sum(L) == sum(R) == sum(B)):
        raise ValueError("unbalanced boundary")
    if n == 0:
        return 1
    Rdown = tuple(reversed(R))
    up_by_left: dict[int, list[tuple[int, int]]] = {}
    for a, b, c in up_pieces:
        up_by_left.setdefault(a, []).append((b, c))
    down_by_top_left: dict[tuple[int, int], list[int]] = {}
    for t, l, r in down_pieces:
        down_by_top_left.setdefault((t, l), []).append(r)

    states = {(): 1}
    for i in range(n):
        new_states: dict[tuple[int, ...], int] = {}
        for tops, cnt in states.items():
            # walk along row i: up, down, up, ..., up (i+1 up triangles)
            stack = [(0, L[i], ())]
            while stack:
                j, lab, bottoms = stack.pop()
                for rlab, blab in up_by_left.get(lab, ()):
                    nb = bottoms + (blab,)
                    if j == i:
                        if rlab == Rdown[i]:
                            new_states[nb] = new_states.get(nb, 0) + cnt
                        continue
                    for nxt in down_by_top_left.get((tops[j], rlab), ()):
                        stack.append((j + 1, nxt, nb))
        states = new_states
    return states.get(B, 0)


def subset_string(I: Iterable[int], n: int) -> str:
    s = set(I)
    return "".join("1" if i in s else "0" for i in range(1, n + 1))


def paper_string_to_subset(text: str) -> tuple[int, ...]:
    """Strings over {1,2}: the letters 1 mark the first block of the one-line notation."""
    text = text.strip()
    if set(text) - {"1", "2"}:
        raise ValueError(f"{text!r} is not a 1/2 string")
    return tuple(i for i, c in enumerate(text, 1) if c == "1")


def grassmannian_puzzle_count(A: Iterable[int], B: Iterable[int], C: Iterable[int], n: int) -> int:
    """Puzzles whose three sides carry 1s at the positions A, B, C.

    This equals the integral of sigma_{lambda(A)} sigma_{lambda(B)} sigma_{lambda(C)}
    over Gr(|A|, n), where sigma_lambda has codimension |lambda|.
    """
    a, b, c = (subset_string(X, n) for X in (A, B, C))
    return puzzle_count(a, b, c)
