"""Z2-graded linear algebra on C^{1|2} and its tensor powers.

Basis indices run over 1, 2, 3 with parities bar(1)=bar(3)=1, bar(2)=0
(the middle vector is even), signs theta = (1, 1, -1), and the index
involution i -> i' = 4 - i.  All operators are stored as plain rational
matrices; the Koszul signs live in super_kron and in the two-leg encodings
of P, Q and R(u), so there is exactly one place where sign conventions can
go wrong and the RTT verifier will catch it there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import List, Sequence, Tuple

from .exact_arith import KAPPA, ONE, Scalar, UniPoly, ZERO, rat
from ._linalg import (eye, mat_add, mat_mul, mat_neg, mat_scale, mat_sub,
                      transpose, zeros)

BAR = (None, 1, 0, 1)      # BAR[i] for i in 1..3
THETA = (None, 1, 1, -1)


def bar(i: int) -> int:
    return BAR[i]


def theta(i: int) -> int:
    return THETA[i]


def iprime(i: int) -> int:
    return 4 - i


@dataclass(frozen=True)
class GradedSpace:
    """Ordered basis with a parity bit, a weight, and an opaque label per vector."""

    dim: int
    parity: Tuple[int, ...]
    weight: Tuple[Scalar, ...]
    labels: Tuple = ()

    def __post_init__(self):
        assert len(self.parity) == self.dim and len(self.weight) == self.dim

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        par, wt, lab = [], [], []
        for i in range(self.dim):
            for j in range(other.dim):
                par.append((self.parity[i] + other.parity[j]) % 2)
                wt.append(self.weight[i] + other.weight[j])
                la = self.labels[i] if self.labels else ()
                lb = other.labels[j] if other.labels else ()
                lab.append(tuple(la) + tuple(lb))
        return GradedSpace(self.dim * other.dim, tuple(par), tuple(wt), tuple(lab))

    def weight_spaces(self):
        """Map weight -> list of basis indices, in basis order."""
        out = {}
        for i, w in enumerate(self.weight):
            out.setdefault(w, []).append(i)
        return out

    def top_weight(self) -> Scalar:
        return max(self.weight)


@dataclass
class GradedMatrix:
    """A homogeneous operator: dense entries plus the operator's parity bit."""

    entries: List[List[Scalar]]
    op_parity: int
    target: GradedSpace
    source: GradedSpace

    def parity_ok(self) -> bool:
        for a, row in enumerate(self.entries):
            for b, x in enumerate(row):
                if x != 0 and (self.target.parity[a] - self.source.parity[b]
                               - self.op_parity) % 2:
                    return False
        return True


def super_kron_raw(A, B, op_parity_b: int, source_parity_a: Sequence[int]):
    """Kronecker product of plain matrices with the Koszul sign.

    Entry ((i,k),(j,l)) = A[i][j] * B[k][l] * (-1)^{op_parity_b * parity(e_j)}:
    the second factor picks up a sign passing the first factor's source vector.
    """
    na, ma = len(A), len(A[0])
    nb, mb = len(B), len(B[0])
    out = zeros(na * nb, ma * mb)
    for i in range(na):
        for j in range(ma):
            a = A[i][j]
            if a == 0:
                continue
            sgn = -ONE if (op_parity_b and source_parity_a[j]) else ONE
            coef = a * sgn
            for k in range(nb):
                Brow = B[k]
                orow = out[i * nb + k]
                for l in range(mb):
                    if Brow[l] != 0:
                        orow[j * mb + l] = coef * Brow[l]
    return out


def super_kron(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    ent = super_kron_raw(A.entries, B.entries, B.op_parity, A.source.parity)
    return GradedMatrix(ent, (A.op_parity + B.op_parity) % 2,
                        A.target.tensor(B.target), A.source.tensor(B.source))


def sbracket_mats(A, B, pa: int, pb: int):
    """AB - (-1)^{pa pb} BA on plain matrices (anticommutator when both odd)."""
    BA = mat_mul(B, A)
    return mat_add(mat_mul(A, B), BA) if (pa and pb) else mat_sub(mat_mul(A, B), BA)


def super_bracket(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    ent = sbracket_mats(A.entries, B.entries, A.op_parity, B.op_parity)
    return GradedMatrix(ent, (A.op_parity + B.op_parity) % 2, A.target, A.source)


def super_transpose(A):
    """Entrywise super-transpose of a 3x3 array (scalars or operator entries).

    (A^t)_{ij} = A_{j'i'} (-1)^{bar(i)bar(j)+bar(j)} theta_i theta_j;
    indices here are 0-based in storage, 1-based in the formula.
    """
    out = [[None] * 3 for _ in range(3)]
    for i in range(1, 4):
        for j in range(1, 4):
            sgn = theta(i) * theta(j) * (-1) ** (bar(i) * bar(j) + bar(j))
            val = A[iprime(j) - 1][iprime(i) - 1]
            out[i - 1][j - 1] = val if sgn == 1 else -val
    return out


# ---------------------------------------------------------------------------
# The operators P, Q and the R-matrix on C^{1|2} x C^{1|2}.
#
# Everything is stored as a plain rational matrix in the convention where the
# entries of a multi-leg operator are the coefficients relative to the
# standard product basis and a two-leg element x (x) y placed in legs p < q
# carries the sign (-1)^{|x| * (parity of the source indices of the legs
# strictly between p and q)}.  In particular adjacent legs carry no sign.
# The same rule gives the leg-1 sign of T_1(u) used by the RTT verifier.
# This convention was fixed empirically: it is the unique one (up to the
# mirror image) under which the vector representation satisfies RTT.
# ---------------------------------------------------------------------------

def _pair_index(a: int, b: int) -> int:
    return 3 * (a - 1) + (b - 1)


def build_P_Q_R():
    """Return (P, Q, Rc): the permutation-type operator P with
    P[(i,j),(j,i)] = (-1)^{bar i bar j}, its partial super-transpose Q with
    Q[(i,i'),(j,j')] = (-1)^{bar j} theta_i theta_j, and the coefficient list
    of the cleared R-matrix u(u-kappa)R(u) = kappa P + u(-kappa-P+Q) + u^2."""
    P = zeros(9)
    Q = zeros(9)
    for i in range(1, 4):
        for j in range(1, 4):
            P[_pair_index(i, j)][_pair_index(j, i)] += rat((-1) ** (bar(i) * bar(j)))
            Q[_pair_index(i, iprime(i))][_pair_index(j, iprime(j))] += \
                rat((-1) ** bar(j) * theta(i) * theta(j))
    c0 = mat_scale(P, KAPPA)
    c1 = mat_add(mat_sub(mat_scale(eye(9), -KAPPA), P), Q)
    c2 = eye(9)
    return P, Q, [c0, c1, c2]


def rc_eval(Rc, w):
    """Evaluate the cleared R-matrix coefficient list at w."""
    w = rat(w)
    return mat_add(Rc[0], mat_add(mat_scale(Rc[1], w), mat_scale(Rc[2], w * w)))


def embed_two_leg(R9, legs: Tuple[int, int], nlegs: int = 3):
    """Place a two-leg operator into legs p < q of (C^{1|2})^{(x) nlegs}."""
    p, q = legs
    dim = 3 ** nlegs
    out = zeros(dim, dim)
    mids = [m for m in range(nlegs) if p < m < q]
    free = [m for m in range(nlegs) if m != p and m != q]
    for a in range(1, 4):
        for d in range(1, 4):
            for b in range(1, 4):
                for e in range(1, 4):
                    val = R9[_pair_index(a, b)][_pair_index(d, e)]
                    if val == 0:
                        continue
                    for mask in range(3 ** len(free)):
                        src = [0] * nlegs
                        tgt = [0] * nlegs
                        mm = mask
                        for m in free:
                            src[m] = tgt[m] = mm % 3 + 1
                            mm //= 3
                        tgt[p], src[p] = a, d
                        tgt[q], src[q] = b, e
                        sgn = 1
                        if (bar(a) + bar(d)) % 2 and sum(bar(src[m]) for m in mids) % 2:
                            sgn = -1
                        r = sum((tgt[m] - 1) * 3 ** (nlegs - 1 - m) for m in range(nlegs))
                        c = sum((src[m] - 1) * 3 ** (nlegs - 1 - m) for m in range(nlegs))
                        out[r][c] += sgn * val
    return out


def ybe_holds_at(u, v) -> bool:
    """Yang-Baxter on (C^{1|2})^{(x)3} at a sample point, denominators cleared."""
    u, v = rat(u), rat(v)
    _, _, Rc = build_P_Q_R()
    r12 = embed_two_leg(rc_eval(Rc, u - v), (0, 1))
    r13 = embed_two_leg(rc_eval(Rc, u), (0, 2))
    r23 = embed_two_leg(rc_eval(Rc, v), (1, 2))
    lhs = mat_mul(mat_mul(r12, r13), r23)
    rhs = mat_mul(mat_mul(r23, r13), r12)
    return lhs == rhs


class OperatorPoly:
    """Operator-valued polynomial in u: a list of plain matrix coefficients
    (ascending powers) sharing one operator parity."""

    __slots__ = ("coeffs", "op_parity")

    def __init__(self, coeffs, op_parity: int):
        self.coeffs = [[[rat(x) for x in row] for row in M] for M in coeffs]
        self.op_parity = op_parity % 2

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def dim(self) -> int:
        return len(self.coeffs[0])

    def coeff(self, k: int):
        return self.coeffs[k] if k < len(self.coeffs) else zeros(self.dim)

    def eval(self, u0):
        u0 = rat(u0)
        acc = [[x for x in row] for row in self.coeffs[-1]]
        for M in reversed(self.coeffs[:-1]):
            acc = mat_add(mat_scale(acc, u0), M)
        return acc

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        d = self.dim
        return OperatorPoly([mat_add(self.coeff(k), other.coeff(k)) for k in range(n)],
                            self.op_parity)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return OperatorPoly([mat_neg(M) for M in self.coeffs], self.op_parity)

    def scale(self, c):
        return OperatorPoly([mat_scale(M, c) for M in self.coeffs], self.op_parity)

    def mul_poly(self, p: UniPoly):
        out = [zeros(self.dim) for _ in range(len(self.coeffs) + p.degree)]
        for k, M in enumerate(self.coeffs):
            for l, c in enumerate(p.coeffs):
                if c != 0:
                    out[k + l] = mat_add(out[k + l], mat_scale(M, c))
        return OperatorPoly(out, self.op_parity)

    def shift(self, a):
        """Substitute u -> u + a."""
        a = rat(a)
        n = len(self.coeffs)
        out = [zeros(self.dim) for _ in range(n)]
        for m, M in enumerate(self.coeffs):
            for k in range(m + 1):
                c = comb(m, k) * a ** (m - k)
                if c != 0:
                    out[k] = mat_add(out[k], mat_scale(M, c))
        return OperatorPoly(out, self.op_parity)

    def reflect(self, c0):
        """Substitute u -> c0 - u."""
        c0 = rat(c0)
        n = len(self.coeffs)
        out = [zeros(self.dim) for _ in range(n)]
        for m, M in enumerate(self.coeffs):
            for k in range(m + 1):
                c = comb(m, k) * c0 ** (m - k) * (-1) ** k
                if c != 0:
                    out[k] = mat_add(out[k], mat_scale(M, c))
        return OperatorPoly(out, self.op_parity)

    def bracket_const(self, M, m_parity: int):
        """[self(u), M] coefficientwise (super-bracket)."""
        return OperatorPoly([sbracket_mats(C, M, self.op_parity, m_parity)
                             for C in self.coeffs], (self.op_parity + m_parity) % 2)

    def transpose_mats(self):
        return OperatorPoly([transpose(M) for M in self.coeffs], self.op_parity)

    def trim(self):
        cs = list(self.coeffs)
        while len(cs) > 1 and all(x == 0 for row in cs[-1] for x in row):
            cs.pop()
        return OperatorPoly(cs, self.op_parity)

    def __eq__(self, other):
        a, b = self.trim(), other.trim()
        return a.coeffs == b.coeffs

    def parity_violations(self, space: GradedSpace):
        """List of (a, b) where a nonzero entry breaks the parity grading."""
        bad = []
        for M in self.coeffs:
            for a, row in enumerate(M):
                for b, x in enumerate(row):
                    if x != 0 and (space.parity[a] + space.parity[b]
                                   + self.op_parity) % 2:
                        bad.append((a, b))
        return bad
