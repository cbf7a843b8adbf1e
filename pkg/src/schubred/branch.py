"""Branch divisor class of the incidence map in the diagonal case G in G^(n-1).

For a tuple v = (v_1, ..., v_n) in (W^P)^n with c(v) != 0 and total length
(n-1) dim G/P, the push-forward of the ramification divisor is a line bundle
on (G/B)^n.  Its coefficient on the fundamental weight alpha of factor m is

    (n-1) deg(v') + 2 c(v) - sum (h(gamma) + 1) c(v'')

when s_alpha v_m is an up-cover of v_m in W^P, and 0 otherwise.  Here v' is v
with v_m replaced by s_alpha v_m, deg(v') is the degree of c_1(L(2 rho^L)) on
the curve class prod tau_{v'_i}, and v'' runs over the strong down-covers of v'
in a single factor with twisted label gamma.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .rootsys import ParabolicData, Weight, two_rho_upper_L
from .schubert import bk_intersection_number, intersection_number
from .weyl import WeylElt, in_WP, simple_reflection, strong_covers, weyl_to_subset


class PreconditionError(ValueError):
    """Raised when the input tuple does not satisfy the hypotheses."""


@dataclass
class BranchClassReport:
    P: ParabolicData
    vs: tuple[WeylElt, ...]
    coefficients: dict[tuple[int, int], int]
    c_value: int
    bk_value: int
    theta: Optional[tuple[Weight, ...]] = None
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.vs)

    def weights(self) -> tuple[Weight, ...]:
        """[B_Pi] as one weight per factor."""
        s = self.P.system
        out = []
        for m in range(self.n):
            out.append(s.weight(self.coefficients.get((m, a), 0) for a in range(1, s.rank + 1)))
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.coefficients.values())

    def to_json(self) -> dict:
        P = self.P
        try:
            vs = [list(weyl_to_subset(v, P)) for v in self.vs]
        except ValueError:
            vs = [v.encode() for v in self.vs]
        coeffs = [
            {"factor": m + 1, "node": a, "value": val}
            for (m, a), val in sorted(self.coefficients.items())
            if val
        ]
        theta = None
        if self.theta is not None:
            theta = [str(t) for t in self.theta]
        out = {
            "group": str(P.system),
            "omit": sorted(P.omitted),
            "v": vs,
            "c": self.c_value,
            "c_bk": self.bk_value,
            "coeffs": coeffs,
            "class": [str(w) for w in self.weights()],
            "theta": theta,
            "flags": dict(self.flags),
        }
        gl = theta_partitions(self) if self.theta is not None else None
        if gl is not None:
            out["theta_gl"] = [list(p) for p in gl]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _replace(vs: Sequence[WeylElt], m: int, x: WeylElt) -> tuple[WeylElt, ...]:
    out = list(vs)
    out[m] = x
    return tuple(out)


def curve_degree(vs: Sequence[WeylElt], P: ParabolicData, factor: int = 0,
                 backend: Optional[str] = None) -> int:
    """Integral of c_1(L(2 rho^L)) against prod tau_{v_i}, via Chevalley in one factor."""
    rl = two_rho_upper_L(P)
    total = 0
    for e in strong_covers(vs[factor], P, "down"):
        k = rl.pair(e.twisted_label)
        if k:
            total += k * intersection_number(_replace(vs, factor, e.lower), P, backend)
    return total


def up_cover_nodes(v: WeylElt, P: ParabolicData) -> list[int]:
    """Simple roots alpha with s_alpha v in W^P of length l(v) + 1."""
    s = P.system
    out = []
    for a in range(1, s.rank + 1):
        if v.left_descent(a):
            continue
        if in_WP(simple_reflection(s, a) * v, P):
            out.append(a)
    return out


def branch_coefficient(vs: Sequence[WeylElt], P: ParabolicData, m: int, alpha: int,
                       c: Optional[int] = None, backend: Optional[str] = None,
                       degree_factor: int = 0) -> int:
    s = P.system
    v = vs[m]
    if v.left_descent(alpha):
        return 0
    u = simple_reflection(s, alpha) * v
    if not in_WP(u, P):
        return 0
    if c is None:
        c = intersection_number(vs, P, backend)
    vp = _replace(vs, m, u)
    n = len(vs)
    value = (n - 1) * curve_degree(vp, P, degree_factor, backend) + 2 * c
    for f in range(n):
        for e in strong_covers(vp[f], P, "down"):
            cc = intersection_number(_replace(vp, f, e.lower), P, backend)
            if cc:
                value -= (s.height(e.twisted_label) + 1) * cc
    return value


def _check_inputs(vs: Sequence[WeylElt], P: ParabolicData) -> None:
    n = len(vs)
    if n < 2:
        raise PreconditionError("need at least two factors")
    for v in vs:
        if v.system != P.system or not in_WP(v, P):
            raise PreconditionError(f"{v} is not in W^P")
    total = sum(v.length for v in vs)
    if total != (n - 1) * P.dim:
        raise PreconditionError(
            f"total length {total} differs from (n-1) dim G/P = {(n - 1) * P.dim}")


def branch_class(vs: Sequence[WeylElt], P: ParabolicData, backend: Optional[str] = None,
                 degree_factor: int = 0) -> BranchClassReport:
    vs = tuple(vs)
    _check_inputs(vs, P)
    c = intersection_number(vs, P, backend)
    if c == 0:
        raise PreconditionError("c(v) = 0")
    s = P.system
    coeffs: dict[tuple[int, int], int] = {}
    for m in range(len(vs)):
        for a in range(1, s.rank + 1):
            coeffs[(m, a)] = branch_coefficient(vs, P, m, a, c, backend, degree_factor)
    bk = bk_intersection_number(vs, P, backend)
    values = list(coeffs.values())
    even = all(x % 2 == 0 for x in values)
    report = BranchClassReport(P, vs, coeffs, c, bk)
    report.flags["divisible_by_2"] = even
    report.flags["divisible_by_c"] = all(x % c == 0 for x in values)
    report.flags["levi_movable"] = bk != 0
    if even:
        report.theta = tuple(w.halve() for w in report.weights())
        report.flags["theta_on_face"] = on_face(report.theta, vs, P)
    return report


class NotDivisibleError(ValueError):
    def __init__(self, coefficients):
        self.coefficients = coefficients
        odd = sorted(k for k, v in coefficients.items() if v % 2)
        super().__init__(f"odd coefficients at (factor, node) {odd}")


def theta(report: BranchClassReport) -> tuple[Weight, ...]:
    """theta = sum (n_alpha / 2) varpi_alpha in every factor."""
    if report.theta is None:
        raise NotDivisibleError(report.coefficients)
    return report.theta


def theta_partitions(report: BranchClassReport) -> Optional[tuple[tuple[int, ...], ...]]:
    """GL lifts of theta in type A whose sizes add up to 0.

    All factors but the last use the lift ending in 0; the last one is shifted
    by a constant.  Returns None outside type A or when no such shift exists.
    """
    if report.P.system.kind != "A":
        return None
    return gl_lifts(theta(report))


def gl_lifts(weights: Sequence[Weight]) -> Optional[tuple[tuple[int, ...], ...]]:
    parts = [tuple(x // 2 for x in w.eps2) for w in weights]
    N = len(parts[0])
    total = sum(sum(p) for p in parts)
    if total % N:
        return None
    shift = total // N
    parts[-1] = tuple(x - shift for x in parts[-1])
    return tuple(parts)


def face_values(zetas: Sequence[Weight], vs: Sequence[WeylElt], P: ParabolicData) -> dict[int, Fraction]:
    """sum_i <v_i^{-1} zeta_i, omega^vee> for each omitted node."""
    s = P.system
    out = {}
    for node in sorted(P.omitted):
        out[node] = sum((s.coweight(v.inverse().act(z.eps2), node) for z, v in zip(zetas, vs)), Fraction(0))
    return out


def face_functional(vs: Sequence[WeylElt], P: ParabolicData) -> dict[int, list[list[Fraction]]]:
    """Per omitted node, the epsilon coefficients of zeta_i -> <v_i^-1 zeta_i, omega^vee>.

    The sum over the factors is the linear form cutting out the face; it is
    nonpositive on triples with a nonzero invariant.
    """
    s = P.system
    m = s.dim_eps
    out = {}
    for node in sorted(P.omitted):
        rows = []
        for v in vs:
            vi = v.inverse()
            rows.append([s.coweight(vi.act(tuple(2 if j == i else 0 for j in range(m))), node)
                         for i in range(m)])
        out[node] = rows
    return out


def on_face(zetas: Sequence[Weight], vs: Sequence[WeylElt], P: ParabolicData) -> bool:
    if len(zetas) != len(vs):
        raise ValueError("one weight per factor")
    for z in zetas:
        if not z.is_dominant():
            raise ValueError(f"{z} is not dominant")
    return all(x == 0 for x in face_values(zetas, vs, P).values())


def levi_blocks(parts: Sequence[int], I: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(parts at positions in I, parts at the other positions)."""
    I = sorted(set(I))
    n = len(parts)
    if not I or I[0] < 1 or I[-1] > n:
        raise ValueError(f"{tuple(I)} does not index a length {n} sequence")
    inside = tuple(parts[i - 1] for i in I)
    outside = tuple(parts[i - 1] for i in range(1, n + 1) if i not in I)
    return inside, outside
