"""Root systems of classical types in epsilon coordinates.

Every epsilon vector is stored doubled (``eps2``) so that spin weights, whose
entries are all half-integers, stay integral.  Roots, coroot pairings and
fundamental weights follow the Bourbaki tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Vec = tuple[int, ...]

KINDS = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _unit(m: int, i: int, scale: int = 2) -> list[int]:
    v = [0] * m
    v[i] = scale
    return v


@dataclass(frozen=True)
class RootSystem:
    """A classical root system.

    ``kind`` is one of A, B, C, D.  Type A of rank r is realised inside
    GL_{r+1}, so its epsilon space has r+1 coordinates; the other types use
    ``rank`` coordinates.  Pass ``small=True`` to allow the degenerate ranks
    (B1, C1, D2) that show up as Levi factors.
    """

    kind: str
    rank: int
    small: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown type {self.kind!r}")
        lo = 1 if self.small else MIN_RANK[self.kind]
        if self.kind == "D" and self.small:
            lo = 2
        if self.rank < lo:
            raise ValueError(f"{self.kind}{self.rank} is not supported")

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def dim_eps(self) -> int:
        return self.rank + 1 if self.kind == "A" else self.rank

    @property
    def N(self) -> int:
        """Dimension of the defining representation."""
        return {"A": self.rank + 1, "B": 2 * self.rank + 1}.get(self.kind, 2 * self.rank)

    @cached_property
    def simple_roots(self) -> tuple[Vec, ...]:
        m, n = self.dim_eps, self.rank
        out = []
        for i in range(n - 1):
            v = [0] * m
            v[i], v[i + 1] = 2, -2
            out.append(tuple(v))
        if self.kind == "A":
            v = [0] * m
            v[n - 1], v[n] = 2, -2
        elif self.kind == "B":
            v = _unit(m, n - 1)
        elif self.kind == "C":
            v = _unit(m, n - 1, 4)
        else:
            v = [0] * m
            v[n - 2], v[n - 1] = 2, 2
        out.append(tuple(v))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[Vec, ...]:
        m = self.dim_eps
        roots = []
        for i in range(m):
            for j in range(i + 1, m):
                v = [0] * m
                v[i], v[j] = 2, -2
                roots.append(tuple(v))
                if self.kind != "A":
                    v = [0] * m
                    v[i], v[j] = 2, 2
                    roots.append(tuple(v))
            if self.kind == "B":
                roots.append(tuple(_unit(m, i)))
            elif self.kind == "C":
                roots.append(tuple(_unit(m, i, 4)))
        return tuple(sorted(roots, key=lambda r: (self.height(r), r)))

    @cached_property
    def _root_set(self) -> frozenset[Vec]:
        return frozenset(self.positive_roots)

    def is_root(self, v: Vec) -> bool:
        return v in self._root_set or tuple(-x for x in v) in self._root_set

    @staticmethod
    def is_positive(v: Sequence[int]) -> bool:
        """Sign of a root: the first nonzero coordinate decides."""
        for x in v:
            if x:
                return x > 0
        raise ValueError("zero vector has no sign")

    def pair(self, x: Sequence[int], root: Sequence[int]) -> int:
        """<x, root^vee> for doubled vectors x and root."""
        num, den = 2 * dot(x, root), dot(root, root)
        if num % den:
            raise ValueError(f"non-integral pairing of {x} with {root}")
        return num // den

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        s = self.simple_roots
        return tuple(tuple(self.pair(s[i], s[j]) for j in range(self.rank)) for i in range(self.rank))

    def coweight(self, x: Sequence[int], node: int) -> Fraction:
        """<x, omega_node^vee> for a doubled vector x of the weight lattice."""
        inv = _inverse_cartan(self)
        return sum(self.pair(x, a) * inv[j][node - 1] for j, a in enumerate(self.simple_roots))

    def simple_coords(self, root: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of a root-lattice vector on the simple roots."""
        c = [self.coweight(root, i) for i in range(1, self.rank + 1)]
        if any(x.denominator != 1 for x in c):
            raise ValueError(f"{tuple(root)} is not in the root lattice")
        return tuple(int(x) for x in c)

    def height(self, root: Sequence[int]) -> int:
        """<rho, root^vee>."""
        return self.pair(self.rho2, root)

    @cached_property
    def fundamental_weights(self) -> tuple[Vec, ...]:
        m, n = self.dim_eps, self.rank
        out = []
        for i in range(1, n + 1):
            v = [2 if j < i else 0 for j in range(m)]
            if self.kind == "B" and i == n:
                v = [1] * n
            if self.kind == "D" and i >= n - 1:
                v = [1] * n
                if i == n - 1:
                    v[n - 1] = -1
            out.append(tuple(v))
        return tuple(out)

    @cached_property
    def rho2(self) -> Vec:
        """rho in doubled coordinates."""
        return tuple(sum(c) for c in zip(*self.fundamental_weights)) if self.rank else ()

    def weight(self, coords: Iterable[int]) -> "Weight":
        return Weight(self, tuple(coords))

    def weight_from_eps2(self, eps2: Sequence[int]) -> "Weight":
        coords = tuple(self.pair(eps2, a) for a in self.simple_roots)
        w = Weight(self, coords)
        if self.kind != "A" and w.eps2 != tuple(eps2):
            raise ValueError(f"{eps2} is not a weight")
        return w

    @property
    def rho(self) -> "Weight":
        return Weight(self, (1,) * self.rank)

    def zero(self) -> "Weight":
        return Weight(self, (0,) * self.rank)


def _combine(vectors: Sequence[Vec], coeffs: Sequence[int]) -> Vec:
    m = len(vectors[0]) if vectors else 0
    return tuple(sum(c * v[j] for c, v in zip(coeffs, vectors)) for j in range(m))


@lru_cache(maxsize=None)
def root_system(kind: str, rank: int) -> RootSystem:
    return RootSystem(kind, rank)


def parse_group(text: str) -> RootSystem:
    """Parse "A5", "B4" and so on."""
    text = text.strip().upper()
    if len(text) < 2 or text[0] not in KINDS or not text[1:].isdigit():
        raise ValueError(f"bad group {text!r}")
    return root_system(text[0], int(text[1:]))


@dataclass(frozen=True)
class Weight:
    """A weight given by its coordinates on the fundamental weights."""

    system: RootSystem
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.system.rank:
            raise ValueError("wrong number of coordinates")

    @cached_property
    def eps2(self) -> Vec:
        return _combine(self.system.fundamental_weights, self.coords)

    @property
    def eps(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.eps2)

    def pair(self, root: Sequence[int]) -> int:
        return self.system.pair(self.eps2, root)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.system, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.system, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: int) -> "Weight":
        return Weight(self.system, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> "Weight":
        return self * -1

    def halve(self) -> "Weight":
        if any(c % 2 for c in self.coords):
            raise ValueError(f"{self.coords} is not divisible by 2")
        return Weight(self.system, tuple(c // 2 for c in self.coords))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords, 1):
            if c:
                terms.append(f"w{i}" if c == 1 else f"{c}w{i}")
        return "+".join(terms) or "0"

    def encode(self) -> str:
        return "w:[" + ",".join(map(str, self.coords)) + "]"


def pairing(w: Weight, root: Sequence[int]) -> int:
    """<w, root^vee>; ``root`` is a doubled epsilon vector of a root."""
    if not w.system.is_root(tuple(root)):
        raise ValueError(f"{tuple(root)} is not a root of {w.system}")
    return w.pair(root)


def parse_weight(system: RootSystem, text: str) -> Weight:
    text = text.strip()
    if not (text.startswith("w:[") and text.endswith("]")):
        raise ValueError(f"bad weight {text!r}")
    body = text[3:-1].strip()
    coords = [int(x) for x in body.split(",")] if body else []
    return Weight(system, tuple(coords))


@dataclass(frozen=True)
class ParabolicData:
    """A standard parabolic P, described by the simple roots not in its Levi.

    Nodes are numbered 1..rank as in Bourbaki.
    """

    system: RootSystem
    omitted: frozenset[int]

    def __post_init__(self):
        if not self.omitted:
            raise ValueError("a proper parabolic needs at least one omitted node")
        if not all(1 <= i <= self.system.rank for i in self.omitted):
            raise ValueError(f"nodes out of range: {sorted(self.omitted)}")

    @classmethod
    def of(cls, system: RootSystem, omitted: Iterable[int]) -> "ParabolicData":
        return cls(system, frozenset(omitted))

    @classmethod
    def borel(cls, system: RootSystem) -> "ParabolicData":
        return cls(system, frozenset(range(1, system.rank + 1)))

    @property
    def levi_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.system.rank + 1) if i not in self.omitted)

    @cached_property
    def levi_positive_roots(self) -> tuple[Vec, ...]:
        return tuple(r for r in self.system.positive_roots if not self._meets_omitted(r))

    @cached_property
    def unipotent_roots(self) -> tuple[Vec, ...]:
        """Positive roots outside the Levi; their number is dim G/P."""
        return tuple(r for r in self.system.positive_roots if self._meets_omitted(r))

    def _meets_omitted(self, root: Vec) -> bool:
        c = self.system.simple_coords(root)
        return any(c[i - 1] for i in self.omitted)

    @property
    def dim(self) -> int:
        return len(self.unipotent_roots)

    @cached_property
    def rho_L2(self) -> Vec:
        """Sum of the positive Levi roots (2 rho_L), doubled."""
        m = self.system.dim_eps
        return tuple(sum(r[j] for r in self.levi_positive_roots) for j in range(m))

    def coweight_value(self, x: Sequence[int], node: int) -> Fraction:
        return self.system.coweight(x, node)

    def __str__(self) -> str:
        return f"{self.system}/P{sorted(self.omitted)}"


@lru_cache(maxsize=None)
def _inverse_cartan(s: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Rows express fundamental weights on simple roots."""
    import sympy

    a = sympy.Matrix(s.cartan_matrix)  # a[i][j] = <alpha_i, alpha_j^vee>
    # varpi_j = sum_i c_{ji} alpha_i with sum_i c_{ji} a[i][k] = delta_{jk}
    inv = a.inv()
    return tuple(tuple(Fraction(int(inv[j, i].p), int(inv[j, i].q)) for i in range(s.rank)) for j in range(s.rank))


def two_rho_upper_L(P: ParabolicData) -> Weight:
    """2(rho - rho_L), the sum of the roots of the unipotent radical."""
    s = P.system
    diff = tuple(2 * a - b for a, b in zip(s.rho2, P.rho_L2))
    return s.weight_from_eps2(diff)


def rho_upper_L(P: ParabolicData) -> Weight:
    """rho - rho_L, which pairs to zero with every simple coroot of L.

    Raises ValueError when rho - rho_L is only a half weight (e.g. B4 with
    node 1 omitted); use two_rho_upper_L there.
    """
    return two_rho_upper_L(P).halve()


def _halve_vec(v: Sequence[int]) -> Vec:
    if any(x % 2 for x in v):
        raise ValueError("odd entries")
    return tuple(x // 2 for x in v)


# partitions and GL weights ------------------------------------------------


def check_decreasing(parts: Sequence[int]) -> None:
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{tuple(parts)} is not weakly decreasing")


def gl_weight_from_partition(parts: Sequence[int], n: int) -> Weight:
    """Weight of SL_n attached to a GL_n weight (zero-padded to length n)."""
    check_decreasing(parts)
    p = list(parts) + [0] * (n - len(parts))
    if len(p) != n:
        raise ValueError("too many parts")
    s = root_system("A", n - 1)
    return Weight(s, tuple(p[i] - p[i + 1] for i in range(n - 1)))


def partition_from_weight(w: Weight) -> tuple[int, ...]:
    """GL representative with last entry 0 of a type A weight."""
    if w.system.kind != "A":
        raise ValueError("partitions only describe type A weights")
    return tuple(x // 2 for x in w.eps2)


def dual_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """nu* = (-nu_n, ..., -nu_1)."""
    return tuple(-x for x in reversed(parts))


def sl_reduce(parts: Sequence[int]) -> tuple[int, ...]:
    base = parts[-1]
    return tuple(x - base for x in parts)
