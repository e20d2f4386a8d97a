"""Coproduct-based tensor products, highest-weight extraction, and duals.

The coproduct t_ij(u) -> sum_k t_ik(u) (x) t_kj(u) turns the tensor product
of two modules into a module; the Koszul sign of the second factor is the
only sign involved and it is validated by the RTT verifier on the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .exact_arith import HALF, ONE, RatFunc, UniPoly, rat
from ._linalg import transpose, zeros
from .super_linalg import GradedSpace, OperatorPoly, bar, iprime, theta
from .rep_core import Factor, ModuleRep


class DepthMismatch(ValueError):
    """Tensor factors carry incompatible truncation depths."""


class NoHighestVector(ValueError):
    """The maximal-weight space is not spanned by a single eigenvector."""


class InfiniteDual(ValueError):
    """Dual requested of a truncated (infinite-dimensional) module."""


@dataclass(frozen=True)
class HighestWeight:
    """The eigenvalue triple (lambda_1, lambda_2, lambda_3) on the highest vector."""

    l1: RatFunc
    l2: RatFunc
    l3: RatFunc

    def consistency_holds(self) -> bool:
        """lambda_1(u) lambda_3(u+1/2) = lambda_2(u) lambda_2(u+1/2)."""
        return self.l1 * self.l3.shift(HALF) == self.l2 * self.l2.shift(HALF)

    def product(self, other: "HighestWeight") -> "HighestWeight":
        return HighestWeight(self.l1 * other.l1, self.l2 * other.l2,
                             self.l3 * other.l3)


def elementary_hw(alpha, beta) -> HighestWeight:
    """Highest weight of L(alpha,beta):
    ((u+alpha)/(u+beta), 1, (u+beta-1/2)/(u+alpha-1/2))."""
    alpha, beta = rat(alpha), rat(beta)
    return HighestWeight(RatFunc.linear_ratio(alpha, beta),
                         RatFunc.const(1),
                         RatFunc.linear_ratio(beta - HALF, alpha - HALF))


def central_from_hw(hw: HighestWeight) -> RatFunc:
    """c(u) = lambda_1(u) lambda_1(u+1)^{-1} lambda_2(u+1) lambda_2(u+3/2)."""
    return (hw.l1 / hw.l1.shift(1)) * hw.l2.shift(1) * hw.l2.shift(rat(3, 2))


def tensor_modules(a: ModuleRep, b: ModuleRep) -> ModuleRep:
    """Module on the tensor product space via the coproduct."""
    if a.truncated and b.truncated and a.depth != b.depth:
        raise DepthMismatch(f"factor depths {a.depth} and {b.depth} differ")
    space = a.space.tensor(b.space)
    denom = a.denom * b.denom
    D = denom.degree
    n = space.dim
    T = [[None] * 3 for _ in range(3)]
    src_par_a = a.space.parity
    for i in range(1, 4):
        for j in range(1, 4):
            coeffs = [zeros(n) for _ in range(D + 1)]
            for k in range(1, 4):
                A = a.op(i, k)
                B = b.op(k, j)
                op_b = (bar(k) + bar(j)) % 2
                for p in range(A.degree + 1):
                    Ap = A.coeff(p)
                    if all(x == 0 for row in Ap for x in row):
                        continue
                    for q in range(B.degree + 1):
                        Bq = B.coeff(q)
                        _kron_accumulate(coeffs[p + q], Ap, Bq, op_b, src_par_a)
            T[i - 1][j - 1] = OperatorPoly(coeffs, (bar(i) + bar(j)) % 2).trim()
    hi = a.highest_index * b.dim + b.highest_index
    return ModuleRep(space, denom, T, a.c * b.c, hi, list(a.factors) + list(b.factors))


def _kron_accumulate(out, A, B, op_parity_b, source_parity_a):
    nb, mb = len(B), len(B[0])
    for i, rowa in enumerate(A):
        for j, x in enumerate(rowa):
            if x == 0:
                continue
            coef = -x if (op_parity_b and source_parity_a[j]) else x
            for k, rowb in enumerate(B):
                orow = out[i * nb + k]
                for l, y in enumerate(rowb):
                    if y != 0:
                        orow[j * mb + l] += coef * y
    return out


def highest_weight_of(m: ModuleRep) -> HighestWeight:
    """Read off (lambda_1, lambda_2, lambda_3) from the maximal-weight vector."""
    top = m.space.top_weight()
    idx = [i for i, w in enumerate(m.space.weight) if w == top]
    if len(idx) != 1:
        raise NoHighestVector(f"maximal-weight space has dimension {len(idx)}")
    h = idx[0]
    lams = []
    for i in range(1, 4):
        col_ok = all(M[a][h] == 0
                     for M in m.op(i, i).coeffs for a in range(m.dim) if a != h)
        if not col_ok:
            raise NoHighestVector("top vector is not a t_ii(u) eigenvector")
        lam = UniPoly([M[h][h] for M in m.op(i, i).coeffs])
        lams.append(RatFunc(lam, m.denom))
    hw = HighestWeight(*lams)
    if not hw.consistency_holds():
        raise NoHighestVector("eigenvalue triple fails the consistency condition")
    return hw


def dual_module(m: ModuleRep) -> ModuleRep:
    """Dual via the anti-automorphism omega: t_ij(u) -> t_{i'j'}(-u+1/2) theta_i theta_j,
    acting on the dual basis by transposed matrices."""
    if m.truncated:
        raise InfiniteDual("dual of a truncated module is not materializable")
    D = m.denom.degree
    sign = ONE if D % 2 == 0 else -ONE
    denom = m.denom.reflect(HALF) * sign
    T = [[None] * 3 for _ in range(3)]
    par = m.space.parity
    for i in range(1, 4):
        for j in range(1, 4):
            op = m.op(iprime(i), iprime(j)).reflect(HALF).transpose_mats()
            if (bar(i) + bar(j)) % 2:
                # omega reverses products only up to Koszul signs, so the
                # transposed action of an odd series needs a row-parity sign
                op = OperatorPoly(
                    [[[-x if par[a] else x for x in row]
                      for a, row in enumerate(M)] for M in op.coeffs],
                    op.op_parity)
            s = sign * theta(i) * theta(j)
            T[i - 1][j - 1] = op.scale(s).trim()
    factors = [Factor(-f.beta, -f.alpha, None) for f in m.factors]
    out = ModuleRep(m.space, denom, T, RatFunc.const(1), m.highest_index, factors)
    out.c = central_from_hw(highest_weight_of(out))
    return out
