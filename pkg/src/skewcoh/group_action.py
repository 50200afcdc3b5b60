"""Cyclic group actions on V and the derived modules the summand
formulas consume.

For G = <g> in GL_n(F) this computes, per element h = g^i: the fixed
space V^h = ker(1-h), the moved space V_h = im(1-h), their
pivot-completion complements, the codimension, and the character value
chi_h(g) = det of g acting on V/V^h.  It also builds the induced
actions on V*, wedge^2 V, V tensor wedge^2 V*, quotients V/U and duals
of restrictions, all with the contragredient convention
(^g f)(m) = f(^{g^{-1}} m).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .fields import Field, NotInvertibleError, Scalar
from .linalg import Matrix, Subspace, eigenspace, image_basis, kernel_basis, solve

DEFAULT_ORDER_BOUND = 10000


class OrderExceedsBoundError(ValueError):
    pass


class NotGStableError(ValueError):
    pass


def order_bound_from_env(default: int = DEFAULT_ORDER_BOUND) -> int:
    raw = os.environ.get("SKEWCOH_MAX_ORDER")
    if raw is None:
        return default
    return int(raw)


def wedge_pairs(n: int) -> List[Tuple[int, int]]:
    """Basis index pairs (a, b), a < b, for wedge^2 of F^n, lexicographic."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def sym_pairs(n: int) -> List[Tuple[int, int]]:
    """Monomial index pairs (a, b), a <= b, for Sym^2 of F^n, lexicographic."""
    return [(a, b) for a in range(n) for b in range(a, n)]


def wedge2_matrix(m: Matrix) -> Matrix:
    """Action on wedge^2 V in the e_a ^ e_b basis via 2x2 minors."""
    f = m.field
    pairs = wedge_pairs(m.nrows)
    rows = []
    for (a, b) in pairs:
        row = []
        for (c, d) in pairs:
            minor = f.sub(f.mul(m.rows[a][c], m.rows[b][d]),
                          f.mul(m.rows[a][d], m.rows[b][c]))
            row.append(minor)
        rows.append(row)
    return Matrix(f, rows, ncols=len(pairs))


def dual_matrix(m: Matrix) -> Matrix:
    """Contragredient action on V*: inverse transpose."""
    return m.inverse().transpose()


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; basis of the tensor ordered with a's index major."""
    f = a.field
    rows = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            row = []
            for j in range(a.ncols):
                for l in range(b.ncols):
                    row.append(f.mul(a.rows[i][j], b.rows[k][l]))
            rows.append(row)
    return Matrix(f, rows, ncols=a.ncols * b.ncols)


def restricted_matrix(m: Matrix, sub: Subspace) -> Matrix:
    """Matrix of m on the invariant subspace, in the subspace's RREF basis."""
    f = m.field
    cols = []
    bt = sub.basis.transpose()
    for u in sub.basis.rows:
        mu = m.apply(u)
        coords = solve(bt, mu)
        if coords is None:
            raise NotGStableError("subspace is not preserved")
        cols.append(coords)
    return Matrix.from_columns(f, cols) if cols else Matrix(f, [], ncols=0)


def quotient_matrix(m: Matrix, sub: Subspace) -> Matrix:
    """Matrix of the action induced by m on V/sub, in the pivot-completion
    complement coordinates; sub must be m-stable."""
    f = m.field
    for u in sub.basis.rows:
        if not sub.contains(m.apply(u)):
            raise NotGStableError("subspace is not preserved")
    q = sub.quotient_map()
    comp = sub.complement()
    cols = []
    for w in comp.basis.rows:
        cols.append(q.apply(m.apply(w)))
    return Matrix.from_columns(f, cols) if cols else Matrix(f, [], ncols=0)


@dataclass(frozen=True)
class ElementData:
    index: int
    matrix: Matrix
    fixed_space: Subspace        # V^h
    moved_space: Subspace        # V_h
    codim: int
    fixed_complement: Subspace   # (V^h)^perp, pivot completion
    moved_complement: Subspace   # (V_h)^perp
    chi_of_generator: Scalar     # chi_h(g)
    det: Scalar


@dataclass(frozen=True)
class TransferData:
    matrix: Matrix
    image: Subspace


class CyclicGroup:
    """The cyclic group generated by an invertible matrix, with cached powers."""

    def __init__(self, field: Field, generator: Matrix, order_bound: Optional[int] = None):
        if generator.nrows != generator.ncols:
            raise ValueError("generator must be square")
        if generator.field != field:
            raise ValueError("field mismatch")
        bound = order_bound if order_bound is not None else order_bound_from_env()
        n = generator.nrows
        ident = Matrix.identity(field, n)
        if generator.det() == 0:
            raise NotInvertibleError("generator is singular")
        powers = [ident]
        cur = generator
        while cur != ident:
            powers.append(cur)
            if len(powers) > bound:
                raise OrderExceedsBoundError(
                    "order exceeds bound %d; infinite order or raise the cap" % bound)
            cur = cur @ generator
        self.field = field
        self.n = n
        self.generator = generator
        self.order = len(powers)
        self.powers = powers
        self._elements: dict[int, ElementData] = {}
        self._transfer: Optional[TransferData] = None

    def power(self, i: int) -> Matrix:
        return self.powers[i % self.order]

    def invariants(self) -> Subspace:
        """V^G = fixed space of the generator."""
        return self.element(1 % self.order).fixed_space

    def element(self, i: int) -> ElementData:
        i = i % self.order
        if i in self._elements:
            return self._elements[i]
        f = self.field
        h = self.powers[i]
        one_minus = Matrix.identity(f, self.n) - h
        fixed = kernel_basis(one_minus)
        moved = image_basis(one_minus)
        codim = self.n - fixed.dim
        assert moved.dim == codim
        # chi_h(g) = det of g on V/V^h; the 0x0 case (h = 1) gives 1
        if fixed.dim == self.n:
            chi = f.one()
        else:
            q = quotient_matrix(self.generator, fixed)
            chi = q.det()
        ed = ElementData(
            index=i, matrix=h,
            fixed_space=fixed, moved_space=moved, codim=codim,
            fixed_complement=fixed.complement(),
            moved_complement=moved.complement(),
            chi_of_generator=chi, det=h.det())
        self._elements[i] = ed
        return ed

    def transfer(self) -> TransferData:
        if self._transfer is None:
            f = self.field
            t = Matrix.zeros(f, self.n, self.n)
            for p in self.powers:
                t = t + p
            img = image_basis(t)
            if not self.invariants().contains_space(img):
                raise AssertionError("im T not contained in V^G")
            self._transfer = TransferData(matrix=t, image=img)
        return self._transfer

    def induced_action(self, i: int, module: str, subspace: Optional[Subspace] = None) -> Matrix:
        """Matrix of h = g^i on a derived module.

        module is one of 'V', 'dualV', 'wedge2V', 'V_tensor_wedge2dual',
        'quotient_by' (with subspace), 'dual_restricted_to' (with subspace).
        """
        h = self.power(i)
        if module == "V":
            return h
        if module == "dualV":
            return dual_matrix(h)
        if module == "wedge2V":
            return wedge2_matrix(h)
        if module == "V_tensor_wedge2dual":
            return kron(h, wedge2_matrix(dual_matrix(h)))
        if module == "quotient_by":
            if subspace is None:
                raise ValueError("quotient_by needs a subspace")
            return quotient_matrix(h, subspace)
        if module == "dual_restricted_to":
            if subspace is None:
                raise ValueError("dual_restricted_to needs a subspace")
            r = restricted_matrix(h, subspace)
            return dual_matrix(r) if r.nrows else r
        raise ValueError("unknown module %r" % (module,))

    def is_reflection(self, i: int) -> bool:
        return self.element(i).codim == 1

    def is_nondiagonalizable_reflection(self, i: int) -> bool:
        ed = self.element(i)
        if ed.codim != 1:
            return False
        one_minus = Matrix.identity(self.field, self.n) - ed.matrix
        return not one_minus.is_zero() and (one_minus @ one_minus).is_zero()


def group_from_generator(field: Field, rows, order_bound: Optional[int] = None) -> CyclicGroup:
    return CyclicGroup(field, Matrix(field, rows), order_bound=order_bound)


def chi_invariants(action_of_g: Matrix, chi_value) -> Subspace:
    """chi-isotypic invariants: for a cyclic group this is the eigenspace of
    the generator's action at chi(g)."""
    return eigenspace(action_of_g, chi_value)
