"""Multiplicity reduction when c(v) = 2.

For v in (W^P)^n with c(v) = 2 and theta = [B_Pi] / 2, every tuple of
dominant weights zeta on the face of v satisfies

    m_G(zeta) + m_G(zeta - theta) = m_L(v^-1 zeta),

and, when v is Levi-movable, iterating gives the alternating sum

    m_G(zeta) = sum_k (-1)^k m_L(v^-1 (zeta - k theta)).

This module evaluates both sides, the stretched values in type A, and the
self-map of triples with LR coefficient 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import lr
from .branch import PreconditionError, branch_class, face_values, gl_lifts, on_face
from .rootsys import ParabolicData, Weight, root_system
from .tensor import levi_invariants, triple_invariants
from .weyl import WeylElt, subset_to_weyl


class UnsupportedError(ValueError):
    """The identity does not apply to this input."""


def multiplicity(weights: Sequence[Weight]) -> int:
    """m_G(zeta_1, ..., zeta_n); type A triples go through the LR rule."""
    s = weights[0].system
    if any(not w.is_dominant() for w in weights):
        return 0
    if s.kind == "A" and len(weights) == 3:
        return lr.m_sl(*[gl_parts(w) for w in weights])
    return triple_invariants(*weights)


def gl_parts(w: Weight) -> tuple[int, ...]:
    return tuple(x // 2 for x in w.eps2)


def sl_weights(parts: Sequence[Sequence[int]]) -> tuple[Weight, ...]:
    """SL_n weights of GL_n weights (all of one length n)."""
    n = len(parts[0])
    s = root_system("A", n - 1)
    out = []
    for p in parts:
        if len(p) != n:
            raise ValueError("GL weights of different lengths")
        out.append(s.weight_from_eps2(tuple(2 * x for x in p)))
    return tuple(out)


def levi_multiplicity(zetas: Sequence[Weight], vs: Sequence[WeylElt], P: ParabolicData) -> int:
    """m_L(v_1^-1 zeta_1, ..., v_n^-1 zeta_n)."""
    return levi_invariants(P, [v.inverse().act(z.eps2) for z, v in zip(zetas, vs)])


def _shift(zetas: Sequence[Weight], theta: Sequence[Weight], k: int) -> tuple[Weight, ...]:
    return tuple(z - t * k for z, t in zip(zetas, theta))


@dataclass
class ReductionCheck:
    zetas: tuple[Weight, ...]
    vs: tuple[WeylElt, ...]
    m_zeta: int
    m_shifted: int
    m_levi: int

    @property
    def lhs(self) -> int:
        return self.m_zeta + self.m_shifted

    @property
    def verdict(self) -> bool:
        return self.lhs == self.m_levi

    def to_json(self) -> dict:
        return {
            "zeta": [str(z) for z in self.zetas],
            "m_zeta": self.m_zeta,
            "m_zeta_minus_theta": self.m_shifted,
            "m_levi": self.m_levi,
            "holds": self.verdict,
        }


def _report_c2(vs: Sequence[WeylElt], P: ParabolicData, theta: Optional[Sequence[Weight]]):
    if theta is not None:
        return tuple(theta)
    rep = branch_class(vs, P)
    if rep.c_value != 2:
        raise UnsupportedError(f"c(v) = {rep.c_value}, the identity needs c(v) = 2")
    return rep.theta


def verify_main_theo(zetas: Sequence[Weight], vs: Sequence[WeylElt], P: ParabolicData,
                     theta: Optional[Sequence[Weight]] = None) -> ReductionCheck:
    zetas, vs = tuple(zetas), tuple(vs)
    if not on_face(zetas, vs, P):
        raise PreconditionError(f"zeta is off the face: {face_values(zetas, vs, P)}")
    th = _report_c2(vs, P, theta)
    return ReductionCheck(
        zetas, vs,
        multiplicity(zetas),
        multiplicity(_shift(zetas, th, 1)),
        levi_multiplicity(zetas, vs, P),
    )


@dataclass
class AlternatingSum:
    terms: list[int] = field(default_factory=list)
    stopped_at: int = 0
    reason: str = ""

    @property
    def value(self) -> int:
        return sum((-1) ** k * t for k, t in enumerate(self.terms))

    def to_json(self) -> dict:
        return {"terms": self.terms, "value": self.value, "stopped_at": self.stopped_at, "reason": self.reason}


def alternating_multiplicity(zetas: Sequence[Weight], vs: Sequence[WeylElt], P: ParabolicData,
                             theta: Optional[Sequence[Weight]] = None, require_bk: bool = True,
                             k_max: int = 10_000) -> AlternatingSum:
    """sum_k (-1)^k m_L(v^-1(zeta - k theta)), over the k keeping zeta - k theta dominant.

    Past the first non-dominant shift m_G vanishes, so the telescoping sum
    stops there.  ``theta`` may be passed when it is known from another
    parabolic (e.g. a coarser one with the same branch divisor); then the
    Levi-movability test is left to the caller.
    """
    zetas, vs = tuple(zetas), tuple(vs)
    if theta is None:
        rep = branch_class(vs, P)
        if rep.c_value != 2:
            raise UnsupportedError(f"c(v) = {rep.c_value}")
        if require_bk and rep.bk_value != 2:
            raise UnsupportedError("v is not Levi-movable, the alternating sum does not apply")
        theta = rep.theta
    if not on_face(zetas, vs, P):
        raise PreconditionError("zeta is off the face")
    out = AlternatingSum()
    for k in range(k_max + 1):
        z = _shift(zetas, theta, k)
        if not all(w.is_dominant() for w in z):
            out.stopped_at, out.reason = k, "not dominant"
            return out
        out.terms.append(levi_multiplicity(z, vs, P))
    raise ArithmeticError("alternating sum did not terminate")


# type A stretching ---------------------------------------------------------


def theta_stretch_check(vs: Sequence[WeylElt], P: ParabolicData, k_max: int) -> list[dict]:
    """Rows k, m_G(k theta), the two Levi block values, and the predicted values."""
    s = P.system
    if s.kind != "A" or len(P.omitted) != 1 or len(vs) != 3:
        raise UnsupportedError("stretching is stated for type A Grassmannians and triples")
    rep = branch_class(vs, P)
    if rep.c_value != 2:
        raise UnsupportedError(f"c(v) = {rep.c_value}")
    (r,) = P.omitted
    th = rep.theta
    rows = []
    for k in range(k_max + 1):
        z = tuple(t * k for t in th)
        big = multiplicity(z)
        restricted = [v.inverse().act(w.eps2) for v, w in zip(vs, z)]
        blocks = []
        for lo, hi in ((0, r), (r, s.N)):
            blocks.append(lr.m_sl(*[tuple(x[i] // 2 for i in range(lo, hi)) for x in restricted]))
        rows.append({
            "k": k,
            "m": big,
            "m_I": blocks[0],
            "m_Ibar": blocks[1],
            "expected_m": (k + 1) * (k + 2) // 2,
            "expected_block": k + 1,
        })
    return rows


# LR_2 self-map -------------------------------------------------------------


@dataclass(frozen=True)
class LR2Triple:
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    r: int

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            p = tuple(getattr(self, name))
            if len(p) > self.r or any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
                raise ValueError(f"{p} is not a partition with at most {self.r} parts")
            object.__setattr__(self, name, p + (0,) * (self.r - len(p)))
        c = lr.lr_coefficient(self.lam, self.mu, self.nu)
        if c != 2:
            raise ValueError(f"c = {c}, not 2")

    @property
    def n(self) -> int:
        # nu contains lam and mu, so nu_1 is the largest first part
        return self.r + self.nu[0]

    def subsets(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """(I, J, K) with lambda(I^vee) = lam, lambda(J^vee) = mu, lambda(K) = nu."""
        r, n = self.r, self.n
        I = lr.dual_subset(lr.subset_of_lambda(self.lam, r, n), n)
        J = lr.dual_subset(lr.subset_of_lambda(self.mu, r, n), n)
        K = lr.subset_of_lambda(self.nu, r, n)
        return I, J, K

    def __str__(self) -> str:
        def fmt(p):
            return "(" + ",".join(str(x) for x in p if x) + ")"
        return f"c_{{{fmt(self.lam)},{fmt(self.mu)}}}^{{{fmt(self.nu)}}}"


def _strip(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(x for x in p if x)


def lr2_map(t: LR2Triple) -> LR2Triple:
    r, n = t.r, t.n
    I, J, K = t.subsets()
    P = ParabolicData.of(root_system("A", n - 1), [r])
    vs = [subset_to_weyl(X, P) for X in (I, J, K)]
    rep = branch_class(vs, P)
    if rep.c_value != 2 or rep.theta is None:
        raise AssertionError(f"branch class of a c = 2 triple is not even: {rep.coefficients}")
    lifts = gl_lifts(rep.theta)
    if lifts is None:
        raise AssertionError("theta has no GL lift of total size 0")
    a, b, g = lifts
    aI, bJ, gK = lr.select(a, I), lr.select(b, J), lr.select(g, K)
    # m(aI, bJ, gK) = m(aI*, bJ*, gK*) = c_{aI*, bJ*}^{gK}; shift the duals to end in 0
    da = tuple(-x for x in reversed(aI))
    db = tuple(-x for x in reversed(bJ))
    sa, sb = da[-1], db[-1]
    alpha = tuple(x - sa for x in da)
    beta = tuple(x - sb for x in db)
    nu = tuple(x - sa - sb for x in gK)
    return LR2Triple(_strip(alpha), _strip(beta), _strip(nu), r)


@dataclass
class LR2Orbit:
    triples: list[LR2Triple]
    cycle_start: Optional[int]

    def to_json(self) -> dict:
        return {
            "orbit": [[list(_strip(x.lam)), list(_strip(x.mu)), list(_strip(x.nu))] for x in self.triples],
            "cycle_start": self.cycle_start,
        }


def lr2_orbit(t: LR2Triple, max_steps: int = 10) -> LR2Orbit:
    """Iterate the map until a triple repeats or ``max_steps`` is reached."""
    seen = {t: 0}
    out = [t]
    for _ in range(max_steps):
        t = lr2_map(t)
        if t in seen:
            return LR2Orbit(out, seen[t])
        seen[t] = len(out)
        out.append(t)
    return LR2Orbit(out, None)

