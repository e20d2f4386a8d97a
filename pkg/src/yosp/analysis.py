"""Verifiers and structure analysis for constructed modules.

RTT and central-relation verification by exact sampling with degree-bound
certification; Gauss decomposition checks via Schur complements; singular
vectors, cyclic spans, quotients and irreducibility; the tensor-product
irreducibility criterion; Drinfeld polynomials; characters; and the
decomposition under the embedded osp(1|2).
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .exact_arith import (HALF, KAPPA, ONE, PoleError, RatFunc, Scalar,
                          UniPoly, ZERO, rat, rat_str)
from ._linalg import (SingularMatrix, Span, eye, inverse, mat_add, mat_eq,
                      mat_mul, mat_scale, mat_sub, mat_vec, nullspace, rank,
                      transpose, zeros)
from .super_linalg import bar, build_P_Q_R, iprime, rc_eval, theta
from .rep_core import ModuleRep, to_json_dict
from .hopf_tensor import HighestWeight


class RelationViolation(ArithmeticError):
    """An algebraic relation failed at a sample point; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInvariant(ValueError):
    """The given subspace is not stable under the module action."""


class TruncatedInput(ValueError):
    """The analysis is only meaningful for exact (untruncated) modules."""


class NotDominant(ValueError):
    """lambda_2/lambda_1 is not of the form P(u+1)/P(u) for a monic P."""


class WeightMismatch(ArithmeticError):
    """Embedded osp(1|2) eigenvalues disagree with the stored weights."""


@dataclass
class Subspace:
    """An exact subspace of a module's underlying space (row-vector basis)."""

    ambient: "object"
    basis: List[List[Scalar]]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class WeightCharacter:
    """Weight multiplicities, highest weight first."""

    pairs: List[Tuple[Scalar, int]]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    def multiplicity(self, w) -> int:
        w = rat(w)
        for wt, m in self.pairs:
            if wt == w:
                return m
        return 0


@dataclass(frozen=True)
class DrinfeldPoly:
    P: UniPoly

    def ratio(self) -> RatFunc:
        """P(u+1)/P(u)."""
        return RatFunc(self.P.shift(1), self.P)


def module_digest(m: ModuleRep) -> str:
    blob = json.dumps(to_json_dict(m)).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


# ---------------------------------------------------------------------------
# Relation verifiers
# ---------------------------------------------------------------------------

_RTT_CACHE = build_P_Q_R()


def _avoiding(start, bad, count, step=1):
    """count values start, start+step, ... skipping members of bad."""
    out = []
    x = start
    while len(out) < count:
        if all(x != b for b in bad):
            out.append(x)
        x = x + step
    return out


def _interior_cols(m: ModuleRep, margin: int):
    return m.interior_indices(margin) if m.truncated else list(range(m.dim))


def verify_rtt(m: ModuleRep, n_samples: int = 0, seed: int = 0,
               margin: int = 4) -> dict:
    """Certify R(u-v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u-v) on a sample grid.

    Both sides are polynomials of degree <= deg d + 2 in each variable after
    clearing denominators, so exact agreement on a (deg d + 3)-per-axis grid
    proves the identity; truncated modules are checked on source columns with
    a safety margin below the cut.  Raises RelationViolation with a witness
    on failure, returns a report dict on success.
    """
    P, Q, Rc = _RTT_CACHE
    D = m.denom.degree
    side = D + 3
    while side * side < n_samples:
        side += 1
    rng = random.Random(seed)
    base = rng.randint(-6, 6)
    droots = [-f.alpha + HALF for f in m.factors] + [-f.beta for f in m.factors]
    us = _avoiding(rat(base), droots, side)
    vs = _avoiding(rat(base) + rat(1, 3), droots, side)
    cols = _interior_cols(m, margin)
    n = m.dim
    samples = []
    for u0 in us:
        Mu = [[m.op(i, j).eval(u0) for j in range(1, 4)] for i in range(1, 4)]
        for v0 in vs:
            Mv = [[m.op(i, j).eval(v0) for j in range(1, 4)] for i in range(1, 4)]
            X, Y = {}, {}
            for A in range(1, 4):
                for C in range(1, 4):
                    sAC = (bar(A) + bar(C)) % 2
                    prodAC = Mu[A - 1][C - 1]
                    for B in range(1, 4):
                        for Dd in range(1, 4):
                            x = mat_mul(prodAC, Mv[B - 1][Dd - 1])
                            y = mat_mul(Mv[B - 1][Dd - 1], prodAC)
                            if sAC and bar(B):
                                x = mat_scale(x, -1)
                            if sAC and bar(Dd):
                                y = mat_scale(y, -1)
                            X[(3 * A + B - 4, 3 * C + Dd - 4)] = x
                            Y[(3 * A + B - 4, 3 * C + Dd - 4)] = y
            R = rc_eval(Rc, u0 - v0)
            for p in range(9):
                for q in range(9):
                    L = zeros(n)
                    Rm = zeros(n)
                    for e in range(9):
                        if R[p][e] != 0:
                            L = mat_add(L, mat_scale(X[(e, q)], R[p][e]))
                        if R[e][q] != 0:
                            Rm = mat_add(Rm, mat_scale(Y[(p, e)], R[e][q]))
                    for t in range(n):
                        for s in cols:
                            if L[t][s] != Rm[t][s]:
                                raise RelationViolation(
                                    f"RTT fails at (u,v)=({u0},{v0}) "
                                    f"block ({p},{q}) entry ({t},{s})",
                                    witness=(u0, v0, (p, q, t, s)))
            samples.append({"u": rat_str(u0), "v": rat_str(v0), "pass": True})
    return {"check": "rtt", "module_digest": module_digest(m),
            "degree_bound": [D + 2, D + 2], "grid": [len(us), len(vs)],
            "samples": samples, "result": "pass"}


def _super_transpose_ops(m: ModuleRep):
    """The 3x3 array of operator polynomials of T^t."""
    out = [[None] * 3 for _ in range(3)]
    for i in range(1, 4):
        for j in range(1, 4):
            s = theta(i) * theta(j) * (-1) ** (bar(i) * bar(j) + bar(j))
            out[i - 1][j - 1] = m.op(iprime(j), iprime(i)).scale(s)
    return out


def verify_central(m: ModuleRep, n_samples: int = 0, seed: int = 0,
                   margin: int = 4) -> dict:
    """Certify T(u-kappa) T^t(u) = c(u) d(u-kappa) d(u) identity at samples."""
    D = m.denom.degree
    count = max(2 * D + 3, n_samples)
    rng = random.Random(seed)
    base = rng.randint(-6, 6)
    bad = []
    for f in m.factors:
        for r in (-f.alpha + HALF, -f.beta):
            bad.extend([r, r + KAPPA])
    bad.extend(r for r, c in _poly_rational_roots(m.c.den)[0].items())
    us = _avoiding(rat(base) + rat(1, 7), bad, count)
    cols = _interior_cols(m, margin)
    n = m.dim
    Tt = _super_transpose_ops(m)
    samples = []
    for u0 in us:
        lhs_scalar = m.c(u0) * m.denom(u0 - KAPPA) * m.denom(u0)
        Mu = [[m.op(i, j).eval(u0 - KAPPA) for j in range(1, 4)]
              for i in range(1, 4)]
        Mt = [[Tt[i][j].eval(u0) for j in range(3)] for i in range(3)]
        for i in range(3):
            for j in range(3):
                acc = zeros(n)
                for k in range(3):
                    acc = mat_add(acc, mat_mul(Mu[i][k], Mt[k][j]))
                for t in range(n):
                    for s in cols:
                        want = lhs_scalar if (i == j and t == s) else ZERO
                        if acc[t][s] != want:
                            raise RelationViolation(
                                f"central relation fails at u={u0} "
                                f"entry ({i+1},{j+1})({t},{s})",
                                witness=(u0, (i + 1, j + 1, t, s)))
        samples.append({"u": rat_str(u0), "pass": True})
    return {"check": "central", "module_digest": module_digest(m),
            "degree_bound": 2 * D, "samples": samples, "result": "pass"}


def _t_blocks_at(m: ModuleRep, x) -> List[List[List[List[Scalar]]]]:
    """Matrices of t_ij(x) = T_ij(x)/d(x); SingularMatrix at roots of d."""
    dx = m.denom(x)
    if dx == 0:
        raise SingularMatrix(f"d({x}) = 0; pick another sample point")
    inv = ONE / dx
    return [[mat_scale(m.op(i, j).eval(x), inv) for j in range(1, 4)]
            for i in range(1, 4)]


def _gauss_at(m: ModuleRep, x):
    """Gaussian generators at the point x via Schur complements."""
    t = _t_blocks_at(m, x)
    n = m.dim
    h1 = t[0][0]
    h1i = inverse(h1)
    e12 = mat_mul(h1i, t[0][1])
    f21 = mat_mul(t[1][0], h1i)
    h2 = mat_sub(t[1][1], mat_mul(t[1][0], mat_mul(h1i, t[0][1])))
    h2i = inverse(h2)
    e23 = mat_mul(h2i, mat_sub(t[1][2], mat_mul(t[1][0], mat_mul(h1i, t[0][2]))))
    f32 = mat_mul(mat_sub(t[2][1], mat_mul(t[2][0], mat_mul(h1i, t[0][1]))), h2i)
    # h3 = t_33 - [t_31 t_32] [[t_11 t_12],[t_21 t_22]]^{-1} [t_13; t_23]
    big = [t[0][0][a] + t[0][1][a] for a in range(n)] + \
          [t[1][0][a] + t[1][1][a] for a in range(n)]
    bigi = inverse(big)
    right = [t[0][2][a] for a in range(n)] + [t[1][2][a] for a in range(n)]
    left = [t[2][0][a] + t[2][1][a] for a in range(n)]
    h3 = mat_sub(t[2][2], mat_mul(left, mat_mul(bigi, right)))
    return {"h1": h1, "h2": h2, "h3": h3, "e12": e12, "e23": e23,
            "f21": f21, "f32": f32}


def gauss_diagonal_check(m: ModuleRep, u0) -> dict:
    """Check the Gauss-generator relations at the point u0:

    e_12(u0) = -e_23(u0+1/2), f_21(u0) = f_32(u0+1/2),
    h_1(u0) h_3(u0+1/2) = h_2(u0) h_2(u0+1/2), and
    c(u0) = h_1(u0) h_1(u0+1)^{-1} h_2(u0+1) h_2(u0+3/2).
    """
    u0 = rat(u0)
    g0 = _gauss_at(m, u0)
    g_half = _gauss_at(m, u0 + HALF)
    g1 = _gauss_at(m, u0 + 1)
    g32 = _gauss_at(m, u0 + rat(3, 2))
    n = m.dim
    checks = {}
    checks["ef_e"] = mat_eq(g0["e12"], mat_scale(g_half["e23"], -1))
    checks["ef_f"] = mat_eq(g0["f21"], g_half["f32"])
    checks["hoht"] = mat_eq(mat_mul(g0["h1"], g_half["h3"]),
                            mat_mul(g0["h2"], g_half["h2"]))
    cu = mat_mul(mat_mul(g0["h1"], inverse(g1["h1"])),
                 mat_mul(g1["h2"], g32["h2"]))
    checks["cu"] = mat_eq(cu, mat_scale(eye(n), m.c(u0)))
    if not all(checks.values()):
        failed = [k for k, v in checks.items() if not v]
        raise RelationViolation(f"Gauss relations fail at u0={u0}: {failed}",
                                witness=(u0, failed))
    return {"check": "gauss", "module_digest": module_digest(m),
            "u0": rat_str(u0), "relations": sorted(checks), "result": "pass"}


# ---------------------------------------------------------------------------
# Submodule structure
# ---------------------------------------------------------------------------

def _coeff_matrices(m: ModuleRep, upper_only: bool = False):
    out = []
    for i in range(1, 4):
        for j in range(1, 4):
            if upper_only and i >= j:
                continue
            out.extend(m.op(i, j).coeffs)
    return out


def singular_vectors(m: ModuleRep, margin: int = 2) -> Subspace:
    """Common kernel of all u-coefficients of T_12, T_13, T_23, weight by weight."""
    raising = _coeff_matrices(m, upper_only=True)
    cols_ok = set(_interior_cols(m, margin))
    basis = []
    by_weight = m.space.weight_spaces()
    for w in sorted(by_weight, reverse=True):
        idxs = [i for i in by_weight[w] if i in cols_ok]
        if not idxs:
            continue
        rows = []
        for M in raising:
            for tgt in range(m.dim):
                row = [M[tgt][s] for s in idxs]
                if any(x != 0 for x in row):
                    rows.append(row)
        if not rows:
            rows = [[ZERO] * len(idxs)]
        for v in nullspace(rows):
            full = [ZERO] * m.dim
            for x, i in zip(v, idxs):
                full[i] = x
            basis.append(full)
    return Subspace(m.space, basis)


def cyclic_span(m: ModuleRep, v: Sequence) -> Subspace:
    """Closure of span{v} under all coefficient matrices of all nine T_ij."""
    v = [rat(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("cyclic span of the zero vector")
    mats = _coeff_matrices(m)
    span = Span(m.dim)
    span.add(v)
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for M in mats:
                y = mat_vec(M, x)
                if any(c != 0 for c in y) and span.add(y):
                    nxt.append(y)
        frontier = nxt
    return Subspace(m.space, span.basis())


def quotient_module(m: ModuleRep, k: Subspace) -> ModuleRep:
    """Induced action on the complement of an invariant subspace."""
    from .super_linalg import GradedSpace, OperatorPoly
    span = Span(m.dim)
    for b in k.basis:
        ws = {m.space.weight[i] for i, x in enumerate(b) if x != 0}
        if len(ws) > 1:
            raise ValueError("subspace basis must be weight-homogeneous")
        span.add(b)
    for M in _coeff_matrices(m):
        for b in k.basis:
            if not span.contains(mat_vec(M, b)):
                raise NotInvariant("subspace is not stable under the action")
    pivots = set(span._rows)
    keep = [i for i in range(m.dim) if i not in pivots]
    pos = {i: a for a, i in enumerate(keep)}

    def project(vec):
        red = span._reduce(vec)
        return [red[i] for i in keep]

    n = len(keep)
    T = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            op = m.T[i][j]
            mats = []
            for M in op.coeffs:
                cols = [project(mat_vec(M, _unit(m.dim, c))) for c in keep]
                mats.append([[cols[b][a] for b in range(n)] for a in range(n)])
            T[i][j] = OperatorPoly(mats, op.op_parity).trim()
    space = GradedSpace(n,
                        tuple(m.space.parity[i] for i in keep),
                        tuple(m.space.weight[i] for i in keep),
                        tuple(m.space.labels[i] for i in keep))
    if m.highest_index in pos:
        hi = pos[m.highest_index]
    else:
        hi = max(range(n), key=lambda a: space.weight[a])
    return ModuleRep(space, m.denom, T, m.c, hi, list(m.factors))


def _unit(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def is_irreducible(m: ModuleRep):
    """Two-sided test: singular space is a line and the highest vector is cyclic.

    Returns (bool, certificate dict).
    """
    if m.truncated:
        raise TruncatedInput("irreducibility is undecidable under truncation")
    sing = singular_vectors(m)
    span = cyclic_span(m, _unit(m.dim, m.highest_index))
    ok = sing.dim == 1 and span.dim == m.dim
    cert = {"singular_dim": sing.dim, "cyclic_dim": span.dim, "dim": m.dim}
    if sing.dim > 1:
        wit = next(b for b in sing.basis
                   if any(x != 0 for i, x in enumerate(b)
                          if i != m.highest_index))
        cert["witness"] = [rat_str(x) for x in wit]
    return ok, cert


def tii_eigenvalue(m: ModuleRep, v: Sequence, i: int) -> RatFunc:
    """The eigenvalue of t_ii(u) on a common eigenvector v, as a RatFunc."""
    v = [rat(x) for x in v]
    pivot = next(a for a, x in enumerate(v) if x != 0)
    cs = []
    for M in m.op(i, i).coeffs:
        w = mat_vec(M, v)
        c = w[pivot] / v[pivot]
        if any(w[a] != c * v[a] for a in range(m.dim)):
            raise ValueError(f"vector is not a t_{i}{i}(u) eigenvector")
        cs.append(c)
    return RatFunc(UniPoly(cs), m.denom)


# ---------------------------------------------------------------------------
# Tensor-product irreducibility criterion
# ---------------------------------------------------------------------------

def _is_znn(x) -> bool:
    x = rat(x)
    return x >= 0 and x.denominator == 1


def check_tensor_criterion(pairs: Sequence[Tuple]) -> bool:
    """Sufficient criterion for irreducibility of L(a_1,b_1) (x) ... (x) L(a_k,b_k).

    For each h < k, with the multisets over i = h..k:
    (1) if {b_h-a_i, b_i-a_h}_+ is nonempty, then b_h-a_h must be a minimal
        element of {b_h-a_i, b_i-a_h, b_h-a_i+1/2, b_i-a_h+1/2}_+;
    (2) if it is empty but the shifted multiset {b_h-a_i+1/2, b_i-a_h+1/2}_+
        is not, then b_h-a_h+1/2 must be a minimal element of the latter.
    Here {..}_+ keeps the entries lying in Z_+ = {0, 1, 2, ...}.
    """
    ps = [(rat(a), rat(b)) for a, b in pairs]
    k = len(ps)
    for h in range(k - 1):
        ah, bh = ps[h]
        plain = []
        shifted = []
        for i in range(h, k):
            ai, bi = ps[i]
            plain.extend([bh - ai, bi - ah])
            shifted.extend([bh - ai + HALF, bi - ah + HALF])
        plain_p = [x for x in plain if _is_znn(x)]
        shifted_p = [x for x in shifted if _is_znn(x)]
        if plain_p:
            combined = plain_p + shifted_p
            if not (_is_znn(bh - ah) and bh - ah == min(combined)):
                return False
        elif shifted_p:
            if not (_is_znn(bh - ah + HALF) and bh - ah + HALF == min(shifted_p)):
                return False
    return True


# ---------------------------------------------------------------------------
# Drinfeld polynomials
# ---------------------------------------------------------------------------

def _poly_rational_roots(p: UniPoly):
    """All rational roots with multiplicities plus the rootless cofactor."""
    roots: Dict[Scalar, int] = {}
    if p.is_zero():
        return roots, p
    while p.degree > 0 and p.coeffs[0] == 0:
        roots[ZERO] = roots.get(ZERO, 0) + 1
        p = UniPoly(p.coeffs[1:])
    while p.degree > 0:
        root = _find_rational_root(p)
        if root is None:
            break
        roots[root] = roots.get(root, 0) + 1
        p = p // UniPoly([-root, ONE])
    return roots, p


def _find_rational_root(p: UniPoly) -> Optional[Scalar]:
    from math import gcd
    dens = [int(c.denominator) for c in p.coeffs]
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c.numerator) * (lcm // int(c.denominator)) for c in p.coeffs]
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return ZERO
    for pn in _divisors(abs(a0)):
        for qn in _divisors(abs(an)):
            for cand in (rat(pn, qn), rat(-pn, qn)):
                if p(cand) == 0:
                    return cand
    return None


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _expand(roots: Dict[Scalar, int]) -> List[Scalar]:
    out = []
    for r, m in roots.items():
        out.extend([r] * m)
    return out


def drinfeld_polynomial(hw: HighestWeight) -> DrinfeldPoly:
    """The monic P with lambda_2(u)/lambda_1(u) = P(u+1)/P(u).

    Roots of numerator and denominator are grouped into Z-cosets and matched
    in sorted order; every matched difference must be a nonnegative integer,
    and each match contributes the string of roots it spans.
    """
    mu = hw.l2 / hw.l1
    if mu.num.degree != mu.den.degree or mu.num.leading() != 1:
        raise NotDominant("lambda_2/lambda_1 is not a ratio of equal-degree "
                          "monic polynomials")
    nroots, nrest = _poly_rational_roots(mu.num)
    droots, drest = _poly_rational_roots(mu.den)
    if nrest.degree > 0 or drest.degree > 0:
        raise NotDominant("irrational roots cannot form integer strings")
    by_coset: Dict[Scalar, Tuple[List[Scalar], List[Scalar]]] = {}
    for r in _expand(nroots):
        key = r - (int(r.numerator) // int(r.denominator))
        by_coset.setdefault(key, ([], []))[0].append(r)
    for r in _expand(droots):
        key = r - (int(r.numerator) // int(r.denominator))
        by_coset.setdefault(key, ([], []))[1].append(r)
    proots: List[Scalar] = []
    for key, (ns, ds) in by_coset.items():
        if len(ns) != len(ds):
            raise NotDominant(f"unbalanced roots in the coset of {key}")
        ns.sort()
        ds.sort()
        for nr, dr in zip(ns, ds):
            k = dr - nr
            if not _is_znn(k):
                raise NotDominant(f"difference {k} of matched roots "
                                  f"({dr}, {nr}) is not in Z_+")
            proots.extend(dr - j for j in range(int(k)))
    proots.sort(reverse=True)
    return DrinfeldPoly(UniPoly.from_roots(proots))


def classify_finite_dim(hw: HighestWeight) -> bool:
    """Classification rule: finite-dimensional iff a Drinfeld polynomial exists."""
    try:
        drinfeld_polynomial(hw)
        return True
    except NotDominant:
        return False


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

def character_of(m: ModuleRep) -> WeightCharacter:
    counts: Dict[Scalar, int] = {}
    for w in m.space.weight:
        counts[w] = counts.get(w, 0) + 1
    return WeightCharacter(sorted(counts.items(), key=lambda p: p[0],
                                  reverse=True))


def character_prefix(m: ModuleRep, levels: int) -> List[int]:
    """Multiplicities by integer offset p below the top weight, p = 0..levels."""
    top = m.space.top_weight()
    ch = character_of(m)
    return [ch.multiplicity(top - p) for p in range(levels + 1)]


def _base_series(n: int) -> int:
    """Coefficient of q^n in 1/((1-q)(1-q^2))."""
    return n // 2 + 1 if n >= 0 else 0


def closed_character(numer: Dict[int, int], offsets: range) -> List[int]:
    """Coefficients of (sum_j numer[j] q^j) / ((1-q)(1-q^2)) at the offsets."""
    return [sum(c * _base_series(p - j) for j, c in numer.items())
            for p in offsets]


def char_elementary_int(k: int, levels: int) -> List[int]:
    """ch L(-k) offsets 0..levels: q^{-k}(1-q^{k+1})(1-q^{k+2})/((1-q)(1-q^2))."""
    numer = {0: 1, k + 1: -1, k + 2: -1, 2 * k + 3: 1}
    return closed_character(numer, range(levels + 1))


def char_elementary_half(k: int, levels: int) -> List[int]:
    """ch L(-k+1/2) offsets 0..levels: q^{-k+1/2}(1-q^{2k+2})/((1-q)(1-q^2))."""
    return closed_character({0: 1, 2 * k + 2: -1}, range(levels + 1))


def char_small_verma(levels: int) -> List[int]:
    """ch M(alpha) offsets 0..levels: 1/((1-q)(1-q^2))."""
    return closed_character({0: 1}, range(levels + 1))


# ---------------------------------------------------------------------------
# The embedded osp(1|2)
# ---------------------------------------------------------------------------

def _emb_matrix(m: ModuleRep, i: int, j: int):
    """F_ij = (t_ij^(1) - t_{j'i'}^(1) (-1)^{bar j + bar i bar j} th_i th_j)(-1)^{bar i}/2."""
    A = m.t_first(i, j)
    B = m.t_first(iprime(j), iprime(i))
    s = (-1) ** (bar(j) + bar(i) * bar(j)) * theta(i) * theta(j)
    out = mat_sub(A, mat_scale(B, s))
    sign = HALF if bar(i) == 0 else -HALF
    return mat_scale(out, sign)


def osp_action(m: ModuleRep):
    """F_11, F_12, F_21 of the embedded osp(1|2) plus the V(mu) decomposition.

    Checks that the F_11-eigenvalues reproduce the stored weights, then counts
    highest vectors per nonnegative weight space.
    """
    if m.truncated:
        raise TruncatedInput("decomposition needs an exact finite module")
    F11 = _emb_matrix(m, 1, 1)
    F12 = _emb_matrix(m, 1, 2)
    F21 = _emb_matrix(m, 2, 1)
    for a in range(m.dim):
        for b in range(m.dim):
            want = m.space.weight[a] if a == b else ZERO
            if F11[a][b] != want:
                raise WeightMismatch(
                    f"F_11 entry ({a},{b}) = {F11[a][b]}, expected {want}")
    by_weight = m.space.weight_spaces()
    decomp: Dict[Scalar, int] = {}
    for w, idxs in by_weight.items():
        if w < 0:
            continue
        rows = [[F12[t][s] for s in idxs] for t in range(m.dim)]
        mult = len(idxs) - rank(rows)
        if mult:
            decomp[w] = mult
    total = sum(mult * (2 * int(w) + 1) for w, mult in decomp.items())
    if total != m.dim:
        raise WeightMismatch(f"V(mu) multiplicities sum to {total} != {m.dim}")
    return F11, F12, F21, dict(sorted(decomp.items(), reverse=True))
