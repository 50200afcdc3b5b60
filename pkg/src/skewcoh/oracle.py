"""Brute-force cochain complex for the degree -1 part of HH^2, one group
element at a time.

A 2-cochain at h = g^i is a pair (lambda, alpha) with lambda in V*
(attached to the group element hg) and alpha: wedge^2 V -> V (attached
to h).  The cocycle conditions are

    (1)  lambda(im T) = 0,
    (2)  (alpha - ^{g^{-1}}alpha)(u ^ v) = lambda(v)(u - ^h u) - lambda(u)(v - ^h v)   in V,
    (3)  alpha(u^v)(w - ^h w) + alpha(v^w)(u - ^h u) + alpha(w^u)(v - ^h v) = 0        in Sym^2 V,

with the twist (^{g^{-1}}alpha)(u^v) = ^{g^{-1}}(alpha(^g u ^ ^g v)), and a
coboundary is d(f tensor h) for f in V*:

    lambda(u) = f(u - ^g u),     alpha(u ^ v) = f(v)(u - ^h u) - f(u)(v - ^h v).

Everything is assembled as matrices over the flat coordinates
(lambda_0..lambda_{n-1}, then alpha(e_a ^ e_b) vector by vector), so
dimensions, containments, and distinguished representatives are plain
rank/kernel computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .fields import Field, Scalar
from .group_action import CyclicGroup, wedge_pairs, sym_pairs, wedge2_matrix
from .linalg import Matrix, Subspace, kernel_basis, rank, solve


class NotACocycleError(ValueError):
    pass


class DimensionMismatchError(AssertionError):
    pass


@dataclass(frozen=True)
class CochainTwo:
    """(lambda, alpha) at element index i; lambda's group tag is hg = g^{i+1}."""
    field: Field
    n: int
    element_index: int
    lam: Tuple[Scalar, ...]                    # lambda(e_0), ..., lambda(e_{n-1})
    alpha: Tuple[Tuple[Scalar, ...], ...]      # per wedge pair (a<b, lex), the value in V

    def flat(self) -> Tuple[Scalar, ...]:
        out = list(self.lam)
        for col in self.alpha:
            out.extend(col)
        return tuple(out)

    @staticmethod
    def from_flat(field: Field, n: int, i: int, flat) -> "CochainTwo":
        w = len(wedge_pairs(n))
        flat = [field.coerce(x) for x in flat]
        if len(flat) != n + w * n:
            raise ValueError("flat vector has wrong length")
        lam = tuple(flat[:n])
        alpha = tuple(tuple(flat[n + k * n: n + (k + 1) * n]) for k in range(w))
        return CochainTwo(field, n, i, lam, alpha)

    @staticmethod
    def zero(field: Field, n: int, i: int) -> "CochainTwo":
        w = len(wedge_pairs(n))
        return CochainTwo(field, n, i, tuple([field.zero()] * n),
                          tuple(tuple([field.zero()] * n) for _ in range(w)))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.flat())


@dataclass(frozen=True)
class CochainOne:
    element_index: int
    f: Tuple[Scalar, ...]


@dataclass(frozen=True)
class PerElementComplex:
    element_index: int
    cocycle_condition_matrix: Matrix
    coboundary_matrix: Matrix
    distinguished_constraints: Matrix
    z_dim: int
    b_dim: int
    hh_dim: int


def cochain_dim(n: int) -> int:
    return n + n * len(wedge_pairs(n))


def _lam_idx(n: int, j: int) -> int:
    return j


def _alpha_idx(n: int, w: int, s: int) -> int:
    return n + w * n + s


def cocycle_conditions(gr: CyclicGroup, i: int) -> Matrix:
    """Matrix whose kernel is Z^2_{-1}(h), h = g^i, in flat coordinates."""
    f = gr.field
    n = gr.n
    pairs = wedge_pairs(n)
    dim = cochain_dim(n)
    g = gr.generator
    ginv = g.inverse()
    w2g = wedge2_matrix(g)
    h = gr.power(i)
    one_minus_h = Matrix.identity(f, n) - h
    rows: List[List[Scalar]] = []

    # (1) lambda vanishes on im T
    for t in gr.transfer().image.basis_rows():
        row = [f.zero()] * dim
        for j in range(n):
            row[_lam_idx(n, j)] = t[j]
        rows.append(row)

    # (2) one V-valued condition per basis pair
    pair_pos = {p: k for k, p in enumerate(pairs)}
    for (a, b) in pairs:
        w0 = pair_pos[(a, b)]
        for r in range(n):
            row = [f.zero()] * dim
            # alpha(w0)_r itself
            row[_alpha_idx(n, w0, r)] = f.add(row[_alpha_idx(n, w0, r)], f.one())
            # minus (^{g^{-1}}alpha)(w0)_r = sum_w sum_s w2g[w][w0] ginv[r][s] alpha(w)_s
            for w in range(len(pairs)):
                c = w2g.rows[w][w0]
                if c == 0:
                    continue
                for s in range(n):
                    coef = f.mul(c, ginv.rows[r][s])
                    if coef != 0:
                        idx = _alpha_idx(n, w, s)
                        row[idx] = f.sub(row[idx], coef)
            # - lambda(e_b)(e_a - ^h e_a)_r + lambda(e_a)(e_b - ^h e_b)_r
            row[_lam_idx(n, b)] = f.sub(row[_lam_idx(n, b)], one_minus_h.rows[r][a])
            row[_lam_idx(n, a)] = f.add(row[_lam_idx(n, a)], one_minus_h.rows[r][b])
            rows.append(row)

    # (3) one Sym^2-valued condition per basis triple
    spairs = sym_pairs(n)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                # alpha(e_a^e_b) (1-h)e_c + alpha(e_b^e_c) (1-h)e_a - alpha(e_a^e_c) (1-h)e_b
                terms = [((a, b), c, f.one()), ((b, c), a, f.one()), ((a, c), b, f.neg(f.one()))]
                for (i0, j0) in spairs:
                    row = [f.zero()] * dim
                    for (w_pair, t, sign) in terms:
                        w = pair_pos[w_pair]
                        x = one_minus_h.col(t)   # the vector (1-h)e_t
                        # coefficient of alpha(w)_s in monomial e_{i0} e_{j0}
                        if i0 == j0:
                            coef = f.mul(sign, x[i0])
                            if coef != 0:
                                idx = _alpha_idx(n, w, i0)
                                row[idx] = f.add(row[idx], coef)
                        else:
                            c1 = f.mul(sign, x[j0])
                            if c1 != 0:
                                idx = _alpha_idx(n, w, i0)
                                row[idx] = f.add(row[idx], c1)
                            c2 = f.mul(sign, x[i0])
                            if c2 != 0:
                                idx = _alpha_idx(n, w, j0)
                                row[idx] = f.add(row[idx], c2)
                    rows.append(row)

    return Matrix(f, rows, ncols=dim)


def coboundary_matrix(gr: CyclicGroup, i: int) -> Matrix:
    """The (n + n*C(n,2)) x n matrix taking f in V* to d(f tensor h) in the
    flat coordinates at h = g^i (lambda lands at tag hg)."""
    f = gr.field
    n = gr.n
    pairs = wedge_pairs(n)
    g = gr.generator
    h = gr.power(i)
    one_minus_g = Matrix.identity(f, n) - g
    one_minus_h = Matrix.identity(f, n) - h
    cols: List[List[Scalar]] = []
    for j in range(n):
        col = [f.zero()] * cochain_dim(n)
        # lambda(e_k) = f(e_k - ^g e_k) = (1-g)[j][k] for f = e_j*
        for k in range(n):
            col[_lam_idx(n, k)] = one_minus_g.rows[j][k]
        # alpha(e_a ^ e_b) = f(e_b)(1-h)e_a - f(e_a)(1-h)e_b
        for w, (a, b) in enumerate(pairs):
            for r in range(n):
                v = f.zero()
                if b == j:
                    v = f.add(v, one_minus_h.rows[r][a])
                if a == j:
                    v = f.sub(v, one_minus_h.rows[r][b])
                col[_alpha_idx(n, w, r)] = v
        cols.append(col)
    return Matrix.from_columns(f, cols)


def distinguished_constraints(gr: CyclicGroup, i: int) -> Matrix:
    """Linear constraints cutting out the distinguished representatives at
    h = g^i: pi_h o alpha = 0 always, plus the codimension case conditions."""
    f = gr.field
    n = gr.n
    pairs = wedge_pairs(n)
    dim = cochain_dim(n)
    ed = gr.element(i)
    rows: List[List[Scalar]] = []

    # pi_h o alpha = 0: alpha values have no V_h component (w.r.t. (V_h)^perp)
    d = ed.moved_space.dim
    if d > 0:
        cols = list(ed.moved_space.basis_rows()) + list(ed.moved_complement.basis_rows())
        p = Matrix.from_columns(f, cols)
        proj = p.inverse().rows[:d]       # V_h coordinates of a vector
        for w in range(len(pairs)):
            for pr in proj:
                row = [f.zero()] * dim
                for s in range(n):
                    row[_alpha_idx(n, w, s)] = pr[s]
                rows.append(row)

    codim = ed.codim
    if codim == 0:
        # lambda = 0 on (V^G)^perp
        for u in gr.invariants().complement().basis_rows():
            row = [f.zero()] * dim
            for j in range(n):
                row[_lam_idx(n, j)] = u[j]
            rows.append(row)
    elif codim == 1:
        # alpha = 0 on wedge^2 V^h
        fixed = ed.fixed_space.basis_rows()
        pair_pos = {p_: k for k, p_ in enumerate(pairs)}
        for x in range(len(fixed)):
            for y in range(x + 1, len(fixed)):
                u, v = fixed[x], fixed[y]
                for r in range(n):
                    row = [f.zero()] * dim
                    for (a, b) in pairs:
                        coef = f.sub(f.mul(u[a], v[b]), f.mul(u[b], v[a]))
                        if coef != 0:
                            idx = _alpha_idx(n, pair_pos[(a, b)], r)
                            row[idx] = f.add(row[idx], coef)
                    rows.append(row)
        # chi_h nontrivial: lambda = 0 on (V^h)^perp
        if ed.chi_of_generator != f.one():
            for u in ed.fixed_complement.basis_rows():
                row = [f.zero()] * dim
                for j in range(n):
                    row[_lam_idx(n, j)] = u[j]
                rows.append(row)
    elif codim == 2:
        # alpha(u ^ v) = 0 for u in V^h, v in V
        pair_pos = {p_: k for k, p_ in enumerate(pairs)}
        for u in ed.fixed_space.basis_rows():
            for j in range(n):
                for r in range(n):
                    row = [f.zero()] * dim
                    any_nonzero = False
                    for (a, b) in pairs:
                        coef = f.zero()
                        if b == j:
                            coef = f.add(coef, u[a])
                        if a == j:
                            coef = f.sub(coef, u[b])
                        if coef != 0:
                            idx = _alpha_idx(n, pair_pos[(a, b)], r)
                            row[idx] = f.add(row[idx], coef)
                            any_nonzero = True
                    if any_nonzero:
                        rows.append(row)
        # lambda = 0 on V^h
        for u in ed.fixed_space.basis_rows():
            row = [f.zero()] * dim
            for j in range(n):
                row[_lam_idx(n, j)] = u[j]
            rows.append(row)
    else:
        # codim > 2: the zero cochain
        ident = Matrix.identity(f, dim)
        rows.extend(list(r) for r in ident.rows)

    return Matrix(f, rows, ncols=dim)


def per_element_cohomology(gr: CyclicGroup, i: int) -> PerElementComplex:
    cond = cocycle_conditions(gr, i)
    cob = coboundary_matrix(gr, i)
    dist = distinguished_constraints(gr, i)
    if not (cond @ cob).is_zero():
        raise AssertionError("coboundaries violate the cocycle conditions at element %d" % i)
    z = cochain_dim(gr.n) - rank(cond)
    b = rank(cob)
    hh = z - b
    if hh < 0:
        raise AssertionError("negative cohomology dimension at element %d" % i)
    return PerElementComplex(i, cond, cob, dist, z, b, hh)


def oracle_report(gr: CyclicGroup) -> List[PerElementComplex]:
    return [per_element_cohomology(gr, i) for i in range(gr.order)]


def representative_basis(gr: CyclicGroup, i: int) -> List[CochainTwo]:
    """Basis of Z^2_{-1}(h) cut down by the distinguished constraints; its
    size must equal hh_dim (that is the uniqueness statement)."""
    pec = per_element_cohomology(gr, i)
    ker = kernel_basis(pec.cocycle_condition_matrix.stack(pec.distinguished_constraints))
    if ker.dim != pec.hh_dim:
        raise DimensionMismatchError(
            "distinguished space has dim %d but hh_dim is %d at element %d"
            % (ker.dim, pec.hh_dim, i))
    return [CochainTwo.from_flat(gr.field, gr.n, i, row) for row in ker.basis_rows()]


def reduce_to_representative(gr: CyclicGroup, gamma: CochainTwo) -> Tuple[CochainTwo, CochainOne]:
    """The distinguished representative of gamma's class, plus the 1-cochain
    witness f with gamma - d(f tensor h) distinguished."""
    i = gamma.element_index
    f = gr.field
    pec = per_element_cohomology(gr, i)
    flat = gamma.flat()
    cond = pec.cocycle_condition_matrix
    if any(x != 0 for x in cond.apply(flat)):
        raise NotACocycleError("cochain violates the cocycle conditions")
    dmat = pec.coboundary_matrix
    dist = pec.distinguished_constraints
    m = dist @ dmat
    target = dist.apply(flat)
    f0 = solve(m, target)
    if f0 is None:
        raise AssertionError("no coboundary reaches the distinguished subspace")
    correction = dmat.apply(f0)
    rep_flat = tuple(f.sub(x, y) for x, y in zip(flat, correction))
    if any(x != 0 for x in dist.apply(rep_flat)):
        raise AssertionError("representative escapes the distinguished subspace")
    if any(x != 0 for x in cond.apply(rep_flat)):
        raise AssertionError("representative is not a cocycle")
    # uniqueness: every f-freedom leaves the representative untouched
    for k in kernel_basis(m).basis_rows():
        if any(x != 0 for x in dmat.apply(k)):
            raise AssertionError("distinguished representative is not unique")
    return CochainTwo.from_flat(f, gr.n, i, rep_flat), CochainOne(i, f0)


def assembled_complex(gr: CyclicGroup) -> Tuple[Matrix, Matrix]:
    """The full-degree complex built WITHOUT the per-element split, straight
    from the pre-decomposition conditions: coordinates are lambda_j and
    alpha_j per group element g^j (each attached to its own element, no
    shift pairing), so comparing its nullity/rank against the per-element
    sums exercises the lambda-to-hg bookkeeping.

    Returns (cocycle condition matrix, coboundary matrix of d^1).
    """
    f = gr.field
    n = gr.n
    N = gr.order
    pairs = wedge_pairs(n)
    w = len(pairs)
    blk = n + w * n
    dim = N * blk
    g = gr.generator
    w2g = wedge2_matrix(g)

    def lam_at(j: int, k: int) -> int:
        return (j % N) * blk + k

    def alpha_at(j: int, wi: int, s: int) -> int:
        return (j % N) * blk + n + wi * n + s

    rows: List[List[Scalar]] = []
    imt = gr.transfer().image.basis_rows()

    for j in range(N):
        hj = gr.power(j)
        # (1) lambda_j(im T) = 0
        for t in imt:
            row = [f.zero()] * dim
            for k in range(n):
                row[lam_at(j, k)] = t[k]
            rows.append(row)
        # (2) at group element g^j:
        # 0 = g alpha_{j-1}(u^v) - alpha_{j-1}(^g u ^ ^g v)
        #     - lambda_j(v)(^g u - ^{g^j} u) + lambda_j(u)(^g v - ^{g^j} v)
        gm = g - hj   # (^g - ^{g^j}) as a matrix
        for w0, (a, b) in enumerate(pairs):
            for r in range(n):
                row = [f.zero()] * dim
                for s in range(n):
                    c = g.rows[r][s]
                    if c != 0:
                        idx = alpha_at(j - 1, w0, s)
                        row[idx] = f.add(row[idx], c)
                for wi in range(w):
                    c = w2g.rows[wi][w0]
                    if c != 0:
                        idx = alpha_at(j - 1, wi, r)
                        row[idx] = f.sub(row[idx], c)
                row[lam_at(j, b)] = f.sub(row[lam_at(j, b)], gm.rows[r][a])
                row[lam_at(j, a)] = f.add(row[lam_at(j, a)], gm.rows[r][b])
                rows.append(row)
        # (3) the commutator Jacobi condition, valued in Sym^2 V, at g^j
        one_minus_hj = Matrix.identity(f, n) - hj
        spairs = sym_pairs(n)
        pair_pos = {p_: k for k, p_ in enumerate(pairs)}
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    terms = [((a, b), c, f.one()), ((b, c), a, f.one()),
                             ((a, c), b, f.neg(f.one()))]
                    for (i0, j0) in spairs:
                        row = [f.zero()] * dim
                        for (w_pair, t, sign) in terms:
                            wi = pair_pos[w_pair]
                            x = one_minus_hj.col(t)
                            if i0 == j0:
                                coef = f.mul(sign, x[i0])
                                if coef != 0:
                                    idx = alpha_at(j, wi, i0)
                                    row[idx] = f.add(row[idx], coef)
                            else:
                                c1 = f.mul(sign, x[j0])
                                if c1 != 0:
                                    idx = alpha_at(j, wi, i0)
                                    row[idx] = f.add(row[idx], c1)
                                c2 = f.mul(sign, x[i0])
                                if c2 != 0:
                                    idx = alpha_at(j, wi, j0)
                                    row[idx] = f.add(row[idx], c2)
                        rows.append(row)

    cond = Matrix(f, rows, ncols=dim)

    # d^1 on the full 1-cochain space: f_j tensor g^j |-> lambda at g^{j+1}
    # plus alpha at g^j
    one_minus_g = Matrix.identity(f, n) - g
    cols: List[List[Scalar]] = []
    for j in range(N):
        hj = gr.power(j)
        one_minus_hj = Matrix.identity(f, n) - hj
        for jj in range(n):
            col = [f.zero()] * dim
            for k in range(n):
                col[lam_at(j + 1, k)] = one_minus_g.rows[jj][k]
            for wi, (a, b) in enumerate(pairs):
                for r in range(n):
                    v = f.zero()
                    if b == jj:
                        v = f.add(v, one_minus_hj.rows[r][a])
                    if a == jj:
                        v = f.sub(v, one_minus_hj.rows[r][b])
                    col[alpha_at(j, wi, r)] = v
            cols.append(col)
    cob = Matrix.from_columns(f, cols)
    return cond, cob
