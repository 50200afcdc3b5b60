"""The worked n = 2 deformation: the lifted 2-cocycle

    gamma(g^i tensor v1) = -i g^{i+1},
    gamma(g^i tensor v2) = -C(i+1,2) g^{i+1},
    gamma(v2 ^ v1)       = v2 tensor g,

its Gerstenhaber square bracket on g^i tensor v1 ^ v2 (which must vanish
for the cocycle to lift to a graded deformation), and a rewriting-based
PBW certificate for the resulting algebra H_{lambda,kappa}: relations
become rules

    g^i g^j  -> g^{i+j},
    g^i v_k  -> (^{g^i} v_k) g^i + lambda(g^i tensor v_k),
    v2 v1    -> v1 v2 + kappa(v2 ^ v1),

confluence is checked on all short overlap words, and normal-form counts
are compared against the graded dimensions of F[v1,v2] x| G.

The lambda-table signs are forced: resolving the overlap word g.v2.v1 both
ways requires kappa = -lambda(g tensor v1)-compatible signs, and resolving
g.g^i.v_k fixes the whole table from its first row.  With kappa = v2
tensor g the unique associative completion is the table above; flipping
any sign breaks confluence (the check below finds the offending word).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import Field, Scalar
from .group_action import CyclicGroup, group_from_generator
from .linalg import Matrix

Letter = Tuple[str, int]          # ("v", 1|2) or ("g", 1..N-1)
Word = Tuple[Letter, ...]
GroupVec = Tuple[Scalar, ...]     # dense coefficients, index = power of g

MAX_REWRITE_STEPS = 200000


class UnsupportedKappaShape(ValueError):
    pass


class PrerequisiteFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class DeformationParams:
    group: CyclicGroup
    lambda_table: Dict[Tuple[int, int], GroupVec]   # (i, k) -> gamma(g^i tensor v_k) in FG
    kappa_v1: GroupVec                              # gamma(v2 ^ v1) = sum_c kappa_v1[c] v1 g^c + ...
    kappa_v2: GroupVec


def transvection_group(p: int) -> CyclicGroup:
    return group_from_generator(Field.prime(p), [[1, 1], [0, 1]])


def zero_params(group: CyclicGroup) -> DeformationParams:
    f = group.field
    N = group.order
    zero = tuple([f.zero()] * N)
    table = {(i, k): zero for i in range(N) for k in (1, 2)}
    return DeformationParams(group, table, zero, zero)


def builtin_transvection_gamma(p: int) -> DeformationParams:
    """The lifted cocycle's parameter tables over F_p: integer coefficients
    -i and -C(i+1,2) taken at the representative 0 <= i < p, then reduced.
    These are the unique values compatible with kappa = v2 tensor g (see
    the module docstring)."""
    group = transvection_group(p)
    f = group.field
    N = group.order
    table: Dict[Tuple[int, int], GroupVec] = {}
    for i in range(N):
        v1 = [f.zero()] * N
        v1[(i + 1) % N] = f.coerce(-i)
        table[(i, 1)] = tuple(v1)
        v2 = [f.zero()] * N
        v2[(i + 1) % N] = f.coerce(-((i + 1) * i // 2))
        table[(i, 2)] = tuple(v2)
    kv1 = tuple([f.zero()] * N)
    kv2 = [f.zero()] * N
    kv2[1 % N] = f.one()
    return DeformationParams(group, table, kv1, tuple(kv2))


# -- group algebra helpers ---------------------------------------------

def _ga_scale(f: Field, c: Scalar, v: GroupVec) -> GroupVec:
    return tuple(f.mul(c, x) for x in v)

def _ga_add(f: Field, a: GroupVec, b: GroupVec) -> GroupVec:
    return tuple(f.add(x, y) for x, y in zip(a, b))

def _ga_sub(f: Field, a: GroupVec, b: GroupVec) -> GroupVec:
    return tuple(f.sub(x, y) for x, y in zip(a, b))

def _ga_shift(v: GroupVec, s: int) -> GroupVec:
    """Multiply by g^s: index shift."""
    N = len(v)
    out = [v[(j - s) % N] for j in range(N)]
    return tuple(out)


def _gamma_on_ga(params: DeformationParams, v: GroupVec, k: int) -> GroupVec:
    """Bilinear extension gamma(x tensor v_k) for x in FG."""
    f = params.group.field
    N = params.group.order
    out = tuple([f.zero()] * N)
    for j, c in enumerate(v):
        if c != 0:
            out = _ga_add(f, out, _ga_scale(f, c, params.lambda_table[(j, k)]))
    return out


def square_bracket_transvection(params: DeformationParams) -> List[GroupVec]:
    """[gamma,gamma](g^i tensor v1 ^ v2) for each i:

        gamma(gamma(g^i tensor v2) tensor v1)
        - gamma(gamma(g^i tensor v1) tensor v2)
        - c * gamma(g^i tensor v2) g

    where kappa = c * (v2 tensor g); any other kappa shape is out of reach
    of this instantiated formula and is refused.  For the builtin tables
    the three terms evaluate to C(i+1,2)(i+1), -i C(i+2,2), and C(i+1,2)
    times g^{i+2}, which sum to zero identically in the integers.
    """
    gr = params.group
    f = gr.field
    N = gr.order
    ident = Matrix.identity(f, gr.n)
    one_minus = ident - gr.generator
    if gr.generator == ident or not (one_minus @ one_minus).is_zero():
        raise ValueError("square bracket formula requires a transvection generator")
    if any(x != 0 for x in params.kappa_v1):
        raise UnsupportedKappaShape("kappa has a v1 component")
    if any(x != 0 for j, x in enumerate(params.kappa_v2) if j != 1 % N):
        raise UnsupportedKappaShape("kappa is not a multiple of v2 tensor g")
    c = params.kappa_v2[1 % N]
    out = []
    for i in range(N):
        t1 = _gamma_on_ga(params, params.lambda_table[(i, 2)], 1)
        t2 = _gamma_on_ga(params, params.lambda_table[(i, 1)], 2)
        t3 = _ga_scale(f, f.neg(c), _ga_shift(params.lambda_table[(i, 2)], 1))
        out.append(_ga_add(f, _ga_sub(f, t1, t2), t3))
    return out


# -- elements and rewriting --------------------------------------------

class AlgebraElement:
    """A scalar combination of words in the generators; canonical once all
    words are in normal form v1^a v2^b g^c."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Optional[Dict[Word, Scalar]] = None):
        self.field = field
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            bits.append("%s*%s" % (self.field.to_str(c), word_str(w)))
        return " + ".join(bits)


def word_str(w: Word) -> str:
    if not w:
        return "1"
    out = []
    for (kind, idx) in w:
        out.append("v%d" % idx if kind == "v" else ("g" if idx == 1 else "g^%d" % idx))
    return "*".join(out)


def g_letter(c: int, N: int) -> Word:
    c %= N
    return () if c == 0 else (("g", c),)


class RewriteSystem:
    """Rewrite rules of H_{lambda,kappa} for a 2-dimensional cyclic action."""

    def __init__(self, params: DeformationParams):
        if params.group.n != 2:
            raise ValueError("rewriting layer covers n = 2 only")
        self.params = params
        self.group = params.group
        self.field = params.group.field
        self.N = params.group.order

    # replacement of the redex (x, y) as [(coeff, word), ...]
    def _replace(self, x: Letter, y: Letter) -> List[Tuple[Scalar, Word]]:
        f = self.field
        N = self.N
        if x[0] == "g" and y[0] == "g":
            return [(f.one(), g_letter(x[1] + y[1], N))]
        if x[0] == "g" and y[0] == "v":
            i, k = x[1], y[1]
            m = self.group.power(i)
            out: List[Tuple[Scalar, Word]] = []
            for row in (1, 2):
                coef = m.rows[row - 1][k - 1]
                if coef != 0:
                    out.append((coef, (("v", row),) + g_letter(i, N)))
            for c, coef in enumerate(self.params.lambda_table[(i, k)]):
                if coef != 0:
                    out.append((coef, g_letter(c, N)))
            return out
        if x == ("v", 2) and y == ("v", 1):
            out = [(f.one(), (("v", 1), ("v", 2)))]
            for c, coef in enumerate(self.params.kappa_v1):
                if coef != 0:
                    out.append((coef, (("v", 1),) + g_letter(c, N)))
            for c, coef in enumerate(self.params.kappa_v2):
                if coef != 0:
                    out.append((coef, (("v", 2),) + g_letter(c, N)))
            return out
        raise ValueError("no rule for %r %r" % (x, y))

    def redex_positions(self, w: Word) -> List[int]:
        out = []
        for l in range(len(w) - 1):
            x, y = w[l], w[l + 1]
            if x[0] == "g" or (x == ("v", 2) and y == ("v", 1)):
                out.append(l)
        # a trailing g is fine; a g anywhere else is caught above
        return out

    def is_normal(self, w: Word) -> bool:
        return not self.redex_positions(w)

    def rewrite_at(self, w: Word, l: int) -> Dict[Word, Scalar]:
        f = self.field
        out: Dict[Word, Scalar] = {}
        for coef, mid in self._replace(w[l], w[l + 1]):
            nw = w[:l] + mid + w[l + 2:]
            out[nw] = f.add(out.get(nw, f.zero()), coef)
        return {w_: c for w_, c in out.items() if c != 0}

    def normal_form(self, terms, coeff=None) -> AlgebraElement:
        """Exhaustive leftmost rewriting of a word or a term dict."""
        f = self.field
        if isinstance(terms, tuple):
            terms = {terms: f.one() if coeff is None else f.coerce(coeff)}
        work: Dict[Word, Scalar] = {w: c for w, c in terms.items() if c != 0}
        done: Dict[Word, Scalar] = {}
        steps = 0
        while work:
            steps += 1
            if steps > MAX_REWRITE_STEPS:
                raise AssertionError("rewrite step budget exceeded; termination broken")
            w = min(work, key=lambda w_: (len(w_), w_))
            c = work.pop(w)
            if c == 0:
                continue
            pos = self.redex_positions(w)
            if not pos:
                nc = f.add(done.get(w, f.zero()), c)
                if nc == 0:
                    done.pop(w, None)
                else:
                    done[w] = nc
                continue
            for nw, nc in self.rewrite_at(w, pos[0]).items():
                contrib = f.mul(c, nc)
                acc = f.add(work.get(nw, f.zero()), contrib)
                if acc == 0:
                    work.pop(nw, None)
                else:
                    work[nw] = acc
        return AlgebraElement(f, done)

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        f = self.field
        prod: Dict[Word, Scalar] = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                w = w1 + w2
                prod[w] = f.add(prod.get(w, f.zero()), f.mul(c1, c2))
        return self.normal_form(prod)

    def alphabet(self) -> List[Letter]:
        return [("v", 1), ("v", 2)] + [("g", c) for c in range(1, self.N)]


def orbifold_algebra(params: DeformationParams) -> RewriteSystem:
    return RewriteSystem(params)


@dataclass(frozen=True)
class ConfluenceReport:
    ok: bool
    words_checked: int
    witness: Optional[str]            # offending word, rendered
    witness_forms: Tuple[str, ...]    # the distinct normal forms reached


def confluence_check(rs: RewriteSystem, max_overlap_len: int = 3) -> ConfluenceReport:
    """Reduce every word of length <= max_overlap_len through each of its
    one-step reducts and demand one common normal form."""
    letters = rs.alphabet()
    words: List[Word] = [()]
    count = 0
    for _ in range(max_overlap_len):
        words = [w + (l,) for w in words for l in letters]
        for w in words:
            pos = rs.redex_positions(w)
            if not pos:
                continue
            forms = [rs.normal_form(rs.rewrite_at(w, l)) for l in pos]
            count += 1
            distinct = []
            for nf in forms:
                if nf not in distinct:
                    distinct.append(nf)
            if len(distinct) > 1:
                return ConfluenceReport(False, count, word_str(w),
                                        tuple(repr(d) for d in distinct))
    return ConfluenceReport(True, count, None, ())


@dataclass(frozen=True)
class HilbertReport:
    ok: bool
    degree: int
    count: int
    expected: int


def hilbert_check(rs: RewriteSystem, d: int,
                  confluence: Optional[ConfluenceReport] = None) -> HilbertReport:
    """Count irreducible words of v-degree <= d against the graded dimension
    N * C(d+2, 2) of F[v1,v2] x| G; also asserts the normal-form shape
    v1^a v2^b g^c by brute enumeration.  Requires a passed confluence check."""
    if confluence is None:
        confluence = confluence_check(rs)
    if not confluence.ok:
        raise PrerequisiteFailed("rewrite system is not confluent: %s" % confluence.witness)
    letters = rs.alphabet()
    N = rs.N
    count = 0
    words: List[Word] = [()]
    for _ in range(d + 2):
        for w in words:
            vdeg = sum(1 for (kind, _) in w if kind == "v")
            normal = rs.is_normal(w)
            shaped = _pbw_shaped(w)
            if normal != shaped:
                raise AssertionError("normal form shape mismatch at %s" % word_str(w))
            if normal and vdeg <= d:
                count += 1
        words = [w + (l,) for w in words for l in letters if len(w) < d + 1]
    expected = N * ((d + 2) * (d + 1) // 2)
    return HilbertReport(count == expected, d, count, expected)


def _pbw_shaped(w: Word) -> bool:
    """v1^a v2^b g^c with a single optional trailing g letter."""
    stage = 0   # 0: v1s, 1: v2s, 2: after g
    for (kind, idx) in w:
        if kind == "v" and idx == 1:
            if stage > 0:
                return False
        elif kind == "v" and idx == 2:
            if stage > 1:
                return False
            stage = 1
        else:
            if stage > 1:
                return False
            stage = 2
    return True
