"""Concrete modules: small Verma modules M(alpha,beta), elementary modules
L(alpha,beta), the 3-dimensional vector representation, reconstruction of the
full 3x3 operator matrix T(u) from its generating corner, twists, and JSON
serialization.

Conventions.  The module basis vectors xi_rs (0 <= r <= s) carry parity
(r+s) mod 2 and weight (beta-alpha) - r - s; the highest vector is xi_00.
The stored operators are the polynomial forms T_ij(u) = d(u) t_ij(u) with
d(u) = (u+alpha-1/2)(u+beta); each T_ij has degree <= deg d and the leading
u^{deg d} coefficient of T_ii is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .exact_arith import (HALF, KAPPA, ONE, RatFunc, Scalar, UniPoly, ZERO,
                          rat, rat_str)
from ._linalg import eye, mat_eq, mat_mul, mat_sub, zeros
from .super_linalg import GradedSpace, OperatorPoly, bar

W_SHIFT = (None, 1, 0, -1)  # weight carried by row/column index i of T


class MissingDepth(ValueError):
    """An infinite-dimensional family was requested without a truncation depth."""


class ReconstructionInconsistent(ArithmeticError):
    """The reconstructed T matrix fails an internal cross-relation."""


@dataclass(frozen=True)
class Factor:
    """Provenance of one tensor factor: its parameters and truncation depth."""

    alpha: Scalar
    beta: Scalar
    depth: Optional[int] = None


@dataclass
class ModuleRep:
    """A representation: graded space, d(u), the 3x3 array T_ij(u), and c(u)."""

    space: GradedSpace
    denom: UniPoly
    T: List[List[OperatorPoly]]
    c: RatFunc
    highest_index: int
    factors: List[Factor]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def params(self) -> List[Tuple[Scalar, Scalar]]:
        return [(f.alpha, f.beta) for f in self.factors]

    @property
    def depth(self) -> Optional[int]:
        depths = {f.depth for f in self.factors if f.depth is not None}
        return max(depths) if depths else None

    @property
    def truncated(self) -> bool:
        return self.depth is not None

    def op(self, i: int, j: int) -> OperatorPoly:
        """T_ij(u) with 1-based indices."""
        return self.T[i - 1][j - 1]

    def t_first(self, i: int, j: int):
        """Matrix of t_ij^{(1)}, the u^{-1} coefficient of t_ij(u) = T_ij(u)/d(u)."""
        D = self.denom.degree
        M = [list(row) for row in self.op(i, j).coeff(D - 1)]
        if i == j and D >= 1:
            dcoef = self.denom.coeffs[D - 1]
            for a in range(self.dim):
                M[a][a] -= dcoef
        return M

    def interior_indices(self, margin: int = 2) -> List[int]:
        """Basis positions whose truncated-factor labels stay margin levels
        below every truncation cut (everything, when the module is exact)."""
        if not self.truncated:
            return list(range(self.dim))
        cuts = [f.depth for f in self.factors]
        out = []
        for idx in range(self.dim):
            lab = self.space.labels[idx]
            ok = all(cut is None or lab[m][0] + lab[m][1] <= cut - margin
                     for m, cut in enumerate(cuts))
            if ok:
                out.append(idx)
        return out

    def weight_shift_violations(self):
        """Entries of T_ij breaking the weight grading w(target)-w(source)=w_i-w_j."""
        bad = []
        wt = self.space.weight
        for i in range(1, 4):
            for j in range(1, 4):
                shift = W_SHIFT[i] - W_SHIFT[j]
                for M in self.op(i, j).coeffs:
                    for a, row in enumerate(M):
                        for b, x in enumerate(row):
                            if x != 0 and wt[a] - wt[b] != shift and not (
                                    i == j and a == b):
                                bad.append((i, j, a, b))
        return bad


def small_verma_denominator(alpha, beta) -> UniPoly:
    return UniPoly.x_plus(rat(alpha) - HALF) * UniPoly.x_plus(beta)


def central_ratfunc(alpha, beta) -> RatFunc:
    """c(u) = (u+alpha)(u+beta+1) / ((u+alpha+1)(u+beta))."""
    alpha, beta = rat(alpha), rat(beta)
    num = UniPoly.x_plus(alpha) * UniPoly.x_plus(beta + 1)
    den = UniPoly.x_plus(alpha + 1) * UniPoly.x_plus(beta)
    return RatFunc(num, den)


def _xi_space(alpha, beta, pairs) -> GradedSpace:
    alpha, beta = rat(alpha), rat(beta)
    pairs = sorted(pairs, key=lambda p: (p[0] + p[1], p[0]))
    parity = tuple((r + s) % 2 for r, s in pairs)
    weight = tuple((beta - alpha) - r - s for r, s in pairs)
    labels = tuple(((r, s),) for r, s in pairs)
    return GradedSpace(len(pairs), parity, weight, labels)


def _build_corner(alpha, beta, space: GradedSpace):
    """Populate T_11, T_21, T_12 from the closed-form xi_rs action."""
    alpha, beta = rat(alpha), rat(beta)
    n = space.dim
    index = {lab[0]: i for i, lab in enumerate(space.labels)}
    T11 = [zeros(n) for _ in range(3)]
    T21 = [zeros(n) for _ in range(3)]
    T12 = [zeros(n) for _ in range(3)]

    def put(T, target, col, const, lin=ZERO, quad=ZERO):
        idx = index.get(target)
        if idx is None:  # killed by the quotient or the truncation cut
            return
        T[0][idx][col] += const
        T[1][idx][col] += lin
        T[2][idx][col] += quad

    for (r, s), col in ((lab[0], i) for i, lab in enumerate(space.labels)):
        r_, s_ = rat(r), rat(s)
        # T_11 xi_rs = (u + alpha + r - 1/2)(u + alpha + s) xi_rs
        a1, a2 = alpha + r_ - HALF, alpha + s_
        put(T11, (r, s), col, a1 * a2, a1 + a2, ONE)
        # T_21: raise s or raise r
        c = rat((-1) ** (r + 1) * (s - r + 1), (s + 1) * (2 * s - 2 * r + 1))
        put(T21, (r, s + 1), col, c * (2 * alpha + 2 * r_ - 1), 2 * c)
        c = rat(2, 2 * s - 2 * r + 1)
        put(T21, (r + 1, s), col, c * (alpha + s_), c)
        # T_12: lower r or lower s
        if r >= 1:
            c = -rat(r, 2 * (2 * s - 2 * r + 1)) * (s_ - r_ + 1) \
                * (2 * alpha - 2 * beta + 2 * r_ - 3)
            put(T12, (r - 1, s), col, c * (alpha + s_), c)
        if s >= 1 and s - 1 >= r:
            c = rat((-1) ** (r + 1) * s * (2 * s + 1), 4 * (2 * s - 2 * r + 1)) \
                * (alpha - beta + s_ - 1)
            put(T12, (r, s - 1), col, c * (2 * alpha + 2 * r_ - 1), 2 * c)
    return (OperatorPoly(T11, 0), OperatorPoly(T21, 1), OperatorPoly(T12, 1))


def reconstruct_full_T(partial: ModuleRep, check: bool = True) -> ModuleRep:
    """Fill T_31, T_22, T_32, T_33, T_23, T_13 from T_11, T_12, T_21.

    The recurrences are super-brackets with the level-one generators
    t_21^{(1)}, t_12^{(1)} and t_23^{(1)} = -t_12^{(1)}; a failed
    cross-relation [t_12^{(1)}, T_11(u)] = T_12(u) raises
    ReconstructionInconsistent (it would mean a sign-convention bug).
    """
    m = partial
    T11, T12, T21 = m.op(1, 1), m.op(1, 2), m.op(2, 1)
    t12 = m.t_first(1, 2)
    t21 = m.t_first(2, 1)
    t23 = [[-x for x in row] for row in t12]

    T31 = T21.bracket_const(t21, 1)                       # {T_21(u), t_21^(1)}
    T22 = T11 - T21.bracket_const(t12, 1)                 # T_11 - {t_12^(1), T_21(u)}
    T32 = T21 - T22.bracket_const(t21, 1)                 # [t_21^(1), T_22(u)] + T_21
    T33 = T22 + T32.bracket_const(t23, 1)                 # {t_23^(1), T_32(u)} + T_22
    T23 = T33.bracket_const(t23, 1)                       # -[t_23^(1), T_33(u)]
    T13 = -T12.bracket_const(t12, 1)                      # -{T_12(u), t_12^(1)}

    T = [[T11.trim(), T12.trim(), T13.trim()],
         [T21.trim(), T22.trim(), T23.trim()],
         [T31.trim(), T32.trim(), T33.trim()]]
    out = ModuleRep(m.space, m.denom, T, m.c, m.highest_index, m.factors)
    if check:
        lhs = -T11.bracket_const(t12, 1)                  # [t_12^(1), T_11(u)]
        if not lhs.trim() == T12.trim():
            raise ReconstructionInconsistent("[t_12^(1), T_11(u)] != T_12(u)")
        if out.weight_shift_violations():
            raise ReconstructionInconsistent("weight grading broken")
    return out


def build_small_verma(alpha, beta, depth: int) -> ModuleRep:
    """Truncated small Verma module: basis {xi_rs : 0 <= r <= s, r+s <= depth}."""
    alpha, beta = rat(alpha), rat(beta)
    pairs = [(r, s) for s in range(depth + 1) for r in range(min(s, depth - s) + 1)]
    space = _xi_space(alpha, beta, pairs)
    T11, T21, T12 = _build_corner(alpha, beta, space)
    stub = [[T11, T12, None], [T21, None, None], [None, None, None]]
    m = ModuleRep(space, small_verma_denominator(alpha, beta),
                  stub, central_ratfunc(alpha, beta), 0,
                  [Factor(alpha, beta, depth)])
    return reconstruct_full_T(m)


def build_elementary(alpha, beta, depth: Optional[int] = None) -> ModuleRep:
    """Elementary module L(alpha,beta).

    beta-alpha = k a nonnegative integer: exact quotient with basis
    {xi_rs : 0 <= r <= s <= k}, dimension (k+1)(k+2)/2.
    beta-alpha+1/2 = k a nonnegative integer: infinite-dimensional quotient
    with rows r <= k, truncated at r+s <= depth.
    Otherwise the small Verma module itself is already irreducible.
    """
    alpha, beta = rat(alpha), rat(beta)
    k = beta - alpha
    if k >= 0 and k == int(k):
        k = int(k)
        pairs = [(r, s) for s in range(k + 1) for r in range(s + 1)]
        space = _xi_space(alpha, beta, pairs)
        T11, T21, T12 = _build_corner(alpha, beta, space)
        stub = [[T11, T12, None], [T21, None, None], [None, None, None]]
        m = ModuleRep(space, small_verma_denominator(alpha, beta),
                      stub, central_ratfunc(alpha, beta), 0,
                      [Factor(alpha, beta, None)])
        return reconstruct_full_T(m)
    kk = k + HALF
    if kk >= 0 and kk == int(kk):
        if depth is None:
            raise MissingDepth("beta-alpha+1/2 in Z_+ gives an infinite-dimensional "
                               "module; supply a truncation depth")
        kk = int(kk)
        pairs = [(r, s) for s in range(depth + 1)
                 for r in range(min(s, depth - s, kk) + 1)]
        space = _xi_space(alpha, beta, pairs)
        T11, T21, T12 = _build_corner(alpha, beta, space)
        stub = [[T11, T12, None], [T21, None, None], [None, None, None]]
        m = ModuleRep(space, small_verma_denominator(alpha, beta),
                      stub, central_ratfunc(alpha, beta), 0,
                      [Factor(alpha, beta, depth)])
        return reconstruct_full_T(m)
    if depth is None:
        raise MissingDepth("generic parameters give an infinite-dimensional "
                           "module; supply a truncation depth")
    return build_small_verma(alpha, beta, depth)


def vector_representation() -> ModuleRep:
    """The 3-dimensional module on C^{1|2} itself, isomorphic to L(-1,0):

    t_ij(u) = delta_ij + u^{-1} e_ij (-1)^{bar i}
            - (u+kappa)^{-1} e_{j'i'} (-1)^{bar i bar j} theta_i theta_j,
    cleared against d(u) = u(u+kappa) = u(u-3/2).
    """
    from .super_linalg import iprime, theta
    space = GradedSpace(3, (1, 0, 1), (rat(1), rat(0), rat(-1)),
                        (((0, 0),), ((0, 1),), ((1, 1),)))
    d = UniPoly([ZERO, KAPPA, ONE])  # u^2 + kappa u = u(u - 3/2)
    T = [[None] * 3 for _ in range(3)]
    for i in range(1, 4):
        for j in range(1, 4):
            c0, c1, c2 = zeros(3), zeros(3), zeros(3)
            if i == j:
                for a in range(3):
                    c2[a][a] += ONE
                    c1[a][a] += KAPPA
            s1 = rat((-1) ** bar(i))
            c1[i - 1][j - 1] += s1
            c0[i - 1][j - 1] += s1 * KAPPA
            s2 = rat((-1) ** (bar(i) * bar(j)) * theta(i) * theta(j))
            c1[iprime(j) - 1][iprime(i) - 1] -= s2
            T[i - 1][j - 1] = OperatorPoly([c0, c1, c2],
                                           (bar(i) + bar(j)) % 2).trim()
    return ModuleRep(space, d, T, central_ratfunc(-1, 0), 0,
                     [Factor(rat(-1), rat(0), None)])


def apply_twist(m: ModuleRep, f: Optional[RatFunc] = None, a=None) -> ModuleRep:
    """Twist by a multiplier series f(u) with f(inf)=1, or shift u -> u+a."""
    from .exact_arith import DegreeError
    if f is not None:
        if f.num.degree != f.den.degree or f.num.leading() != 1:
            raise DegreeError("multiplier twist needs f(infinity) = 1")
        denom = m.denom * f.den
        T = [[m.T[i][j].mul_poly(f.num).trim() for j in range(3)] for i in range(3)]
        c = m.c * f * f.shift(-KAPPA)
        return ModuleRep(m.space, denom, T, c, m.highest_index, m.factors)
    a = rat(a)
    T = [[m.T[i][j].shift(a).trim() for j in range(3)] for i in range(3)]
    factors = [Factor(fa.alpha + a, fa.beta + a, fa.depth) for fa in m.factors]
    return ModuleRep(m.space, m.denom.shift(a), T, m.c.shift(a),
                     m.highest_index, factors)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def to_json_dict(m: ModuleRep) -> dict:
    D = m.denom.degree
    out = {
        "params": [[rat_str(a), rat_str(b)] for a, b in m.params],
        "depth": m.depth,
        "denom": [rat_str(c) for c in m.denom.coeffs],
        "basis": [
            {"labels": [[int(r), int(s)] for r, s in m.space.labels[i]],
             "parity": int(m.space.parity[i]),
             "weight": rat_str(m.space.weight[i])}
            for i in range(m.dim)
        ],
        "T": {
            f"{i}{j}": [[rat_str(x) for row in m.op(i, j).coeff(k) for x in row]
                        for k in range(D + 1)]
            for i in range(1, 4) for j in range(1, 4)
        },
        "c": {"num": [rat_str(c) for c in m.c.num.coeffs],
              "den": [rat_str(c) for c in m.c.den.coeffs]},
        "highest_index": m.highest_index,
    }
    return out


def from_json_dict(d: dict) -> ModuleRep:
    params = [(rat(a), rat(b)) for a, b in d["params"]]
    depth = d["depth"]
    basis = d["basis"]
    n = len(basis)
    space = GradedSpace(
        n,
        tuple(int(b["parity"]) for b in basis),
        tuple(rat(b["weight"]) for b in basis),
        tuple(tuple((int(r), int(s)) for r, s in b["labels"]) for b in basis),
    )
    denom = UniPoly([rat(c) for c in d["denom"]])
    T = [[None] * 3 for _ in range(3)]
    for i in range(1, 4):
        for j in range(1, 4):
            mats = []
            for flat in d["T"][f"{i}{j}"]:
                vals = [rat(x) for x in flat]
                mats.append([vals[r * n:(r + 1) * n] for r in range(n)])
            T[i - 1][j - 1] = OperatorPoly(mats, (bar(i) + bar(j)) % 2).trim()
    c = RatFunc(UniPoly([rat(x) for x in d["c"]["num"]]),
                UniPoly([rat(x) for x in d["c"]["den"]]))
    factors = []
    for a, b in params:
        exact = b - a >= 0 and b - a == int(b - a)
        factors.append(Factor(a, b, None if exact else depth))
    return ModuleRep(space, denom, T, c, int(d["highest_index"]), factors)


def save_module(m: ModuleRep, path: str):
    with open(path, "w") as fh:
        json.dump(to_json_dict(m), fh, indent=1)
        fh.write("\n")


def load_module(path: str) -> ModuleRep:
    with open(path) as fh:
        return from_json_dict(json.load(fh))
