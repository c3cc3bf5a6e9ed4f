"""Hopf-formula oracle over a Hall-basis model of the free class-3 algebra.

This is the independent route against which the exact-sequence formulas are
checked.  A class-2 algebra L on d generators is presented as F/R where F is
the free nilpotent Lie algebra of class 3 on x_1..x_d and R = S ⊕ F³ for the
grade-2 relation space S.  Then

    M(L)  = (R ∩ F²)/[R,F]   -> dim S + dim F³ - dim [S,F]
    L∧L   = F²/[R,F]         -> dim F² - dim [S,F]

and the exterior center, ker β and the cover F/[R,F] are all finite linear
algebra in the graded coordinates.  Truncation at class 3 is sound because
[R,F] already contains F⁴-terms' sources: for a class-2 target every bracket
of interest lands in grade <= 3.

Hall conventions (fixed so signs are reproducible bit for bit):
  * generators x_1 < ... < x_d (0-based internally);
  * grade 2: [x_i, x_j] with i < j, lexicographic;
  * grade 3: [[x_i, x_j], x_k] with i < j and k >= i, lexicographic, which
    counts (d³-d)/3; the one rewrite needed, for k < i < j, is
    [[x_i, x_j], x_k] = [[x_k, x_j], x_i] - [[x_k, x_i], x_j].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactla import Matrix, Subspace, Vec, kernel_basis, solve, vec_axpy
from .liealg import (
    ClassTwoRequired,
    LieAlgebra,
    bracket_vectors,
    center,
    derived_subalgebra,
    lower_central_series,
    quotient,
    rebase_class2,
    restrict,
    subalgebra_closure,
)

_ONE = Fraction(1)


class HallBasis:
    """Graded Hall basis of the free nilpotent class-3 algebra on d generators."""

    __slots__ = ("d", "pairs", "triples", "pair_index", "triple_index")

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("need at least one generator")
        self.d = d
        self.pairs = list(itertools.combinations(range(d), 2))
        self.triples = [
            (i, j, k) for (i, j) in self.pairs for k in range(i, d)
        ]
        self.pair_index = {p: w for w, p in enumerate(self.pairs)}
        self.triple_index = {t: m for m, t in enumerate(self.triples)}

    @property
    def grade2_dim(self) -> int:
        return len(self.pairs)

    @property
    def grade3_dim(self) -> int:
        return len(self.triples)

    @property
    def dim(self) -> int:
        return self.d + len(self.pairs) + len(self.triples)

    def grade_of(self, idx: int) -> int:
        if idx < self.d:
            return 1
        if idx < self.d + len(self.pairs):
            return 2
        return 3

    def pair_coord(self, w: int) -> int:
        return self.d + w

    def triple_coord(self, m: int) -> int:
        return self.d + len(self.pairs) + m

    def basis_bracket(self, a: int, b: int) -> Vec:
        """[e_a, e_b] rewritten into Hall coordinates."""
        ga, gb = self.grade_of(a), self.grade_of(b)
        if ga + gb > 3:
            return {}
        if ga == 1 and gb == 1:
            if a == b:
                return {}
            if a < b:
                return {self.pair_coord(self.pair_index[(a, b)]): _ONE}
            return {self.pair_coord(self.pair_index[(b, a)]): -_ONE}
        if ga == 2 and gb == 1:
            i, j = self.pairs[a - self.d]
            return self._pair_gen_bracket(i, j, b)
        # ga == 1 and gb == 2
        i, j = self.pairs[b - self.d]
        return {c: -x for c, x in self._pair_gen_bracket(i, j, a).items()}

    def _pair_gen_bracket(self, i: int, j: int, k: int) -> Vec:
        if k >= i:
            return {self.triple_coord(self.triple_index[(i, j, k)]): _ONE}
        return {
            self.triple_coord(self.triple_index[(k, j, i)]): _ONE,
            self.triple_coord(self.triple_index[(k, i, j)]): -_ONE,
        }


_HALL_CACHE: dict[int, HallBasis] = {}


def hall_basis(d: int) -> HallBasis:
    if d not in _HALL_CACHE:
        _HALL_CACHE[d] = HallBasis(d)
    return _HALL_CACHE[d]


def free_bracket(h: HallBasis, u: Vec, v: Vec) -> Vec:
    """Bilinear bracket of F_{d,3} in Hall coordinates."""
    out: Vec = {}
    for a, x in u.items():
        for b, y in v.items():
            vec_axpy(out, x * y, h.basis_bracket(a, b))
    return out


@dataclass
class FreePresentation:
    """Class-2 target presented as F_{d,3}/(rel2 ⊕ F³).

    rel2 lives in the grade-2 wedge coordinates, rel_bracket_span = [rel2, F]
    in the grade-3 coordinates.  lifts[s] is a grade-2 preimage of the s-th
    derived basis vector of the target.
    """

    hall: HallBasis
    rel2: Subspace
    rel_bracket_span: Subspace
    lifts: list[Vec]
    target: LieAlgebra

    @property
    def derived(self) -> Subspace:
        return self.rel_bracket_span


def _grade3_part(h: HallBasis, w: Vec) -> Vec:
    off = h.d + h.grade2_dim
    return {c - off: x for c, x in w.items() if c >= off}


def presentation_from_class2(a: LieAlgebra) -> FreePresentation:
    """Free presentation of a nilpotent algebra of class <= 2.

    An input off the basis contract (generators first, then L²) is re-based
    first; the stored target is the re-based algebra.
    """
    a = rebase_class2(a)
    r = derived_subalgebra(a).dim
    d = a.dim - r
    h = hall_basis(d)
    # Grade-2 coordinates -> L² coordinates, one column per wedge pair.
    phi_entries = {}
    for w, (i, j) in enumerate(h.pairs):
        for k, x in a.pair(i, j).items():
            phi_entries[(k - d, w)] = x
    phi = Matrix(r, h.grade2_dim, phi_entries)
    rel2 = kernel_basis(phi)
    bracket_gens = []
    for s_vec in rel2.vectors():
        emb = {h.pair_coord(w): x for w, x in s_vec.items()}
        for k in range(d):
            w3 = free_bracket(h, emb, {k: _ONE})
            if w3:
                bracket_gens.append(_grade3_part(h, w3))
    rf = Subspace.from_vectors(h.grade3_dim, bracket_gens)
    lifts = []
    for s in range(r):
        lift = solve(phi, {s: _ONE})
        if lift is None:
            raise ClassTwoRequired("derived basis vector is not in the bracket image")
        lifts.append(lift)
    return FreePresentation(h, rel2, rf, lifts, a)


def hopf_multiplier_dim(p: FreePresentation) -> int:
    """dim (R ∩ F²)/[R,F] = dim rel2 + dim F³ - dim [rel2, F]."""
    return p.rel2.dim + p.hall.grade3_dim - p.rel_bracket_span.dim


def exterior_square_oracle(p: FreePresentation) -> int:
    """dim F²/[R,F]."""
    return p.hall.grade2_dim + p.hall.grade3_dim - p.rel_bracket_span.dim


def ker_beta(p: FreePresentation) -> Subspace:
    """Kernel of β: L² ⊗ L/L² -> F³/[R,F], (s, g) -> [lift(y_s), x_g].

    Returned in the (derived index, generator index) lexicographic coordinates
    shared with the Jacobi-cycle subspace K, so equality checks are literal.
    """
    h = p.hall
    d = h.d
    r = len(p.lifts)
    rf = p.rel_bracket_span
    entries = {}
    for s in range(r):
        emb = {h.pair_coord(w): x for w, x in p.lifts[s].items()}
        for g in range(d):
            w3 = _grade3_part(h, free_bracket(h, emb, {g: _ONE}))
            for q, x in rf.quotient_coords(w3).items():
                entries[(q, s * d + g)] = x
    m = Matrix(h.grade3_dim - rf.dim, r * d, entries)
    return kernel_basis(m)


def exterior_center(p: FreePresentation) -> Subspace:
    """Elements x of the target with x ∧ L = 0: lifts with [x̃, F] ⊆ [R,F].

    Expressed in target coordinates (d generators, then r derived).  The
    generator block must already vanish in grade 2, so only derived-direction
    elements can survive; capability of the target is exactly this being zero.
    """
    h = p.hall
    d = h.d
    r = len(p.lifts)
    rf = p.rel_bracket_span
    entries = {}
    row = 0
    for k in range(d):
        # grade-2 component of [Σ a_i x_i, x_k] must vanish identically
        cols: dict[int, dict[int, Fraction]] = {}
        for i in range(d):
            if i == k:
                continue
            if i < k:
                cols.setdefault(h.pair_index[(i, k)], {})[i] = _ONE
            else:
                cols.setdefault(h.pair_index[(k, i)], {})[i] = -_ONE
        for _, by_col in sorted(cols.items()):
            for i, x in by_col.items():
                entries[(row, i)] = x
            row += 1
        # grade-3 component of [Σ b_s lift_s, x_k] must lie in [R,F]
        by_q: dict[int, dict[int, Fraction]] = {}
        for s in range(r):
            emb = {h.pair_coord(w): x for w, x in p.lifts[s].items()}
            w3 = _grade3_part(h, free_bracket(h, emb, {k: _ONE}))
            for q, x in rf.quotient_coords(w3).items():
                by_q.setdefault(q, {})[d + s] = x
        for _, by_col in sorted(by_q.items()):
            for c, x in by_col.items():
                entries[(row, c)] = x
            row += 1
    m = Matrix(row, d + r, entries)
    return kernel_basis(m)


@dataclass
class Cover:
    """The cover F/[R,F] together with its central ideal B = R/[R,F]."""

    algebra: LieAlgebra
    central_ideal: Subspace
    presentation: FreePresentation


def cover_construct(p: FreePresentation) -> Cover:
    """Quotient F_{d,3}/[R,F]; dim = dim L + dim M(L), B = R/[R,F] central."""
    h = p.hall
    d = h.d
    rf = p.rel_bracket_span
    comp3 = rf.complement_coords()
    pos3 = {c: q for q, c in enumerate(comp3)}
    g2 = h.grade2_dim
    dim = d + g2 + len(comp3)

    def project(w: Vec) -> Vec:
        out = {}
        low = h.d + g2
        w3 = {}
        for c, x in w.items():
            if c < low:
                out[c] = x
            else:
                w3[c - low] = x
        if w3:
            for c, x in rf.reduce(w3).items():
                out[d + g2 + pos3[c]] = x
        return out

    table = {}
    for i, j in itertools.combinations(range(dim), 2):
        ei = i if i < d + g2 else h.triple_coord(comp3[i - d - g2])
        ej = j if j < d + g2 else h.triple_coord(comp3[j - d - g2])
        w = free_bracket(h, {ei: _ONE}, {ej: _ONE})
        if w:
            img = project(w)
            if img:
                table[(i, j)] = img
    gen_labels = list(p.target.labels[:d])
    pair_labels = [f"[{gen_labels[i]},{gen_labels[j]}]" for i, j in h.pairs]
    triple_labels = [
        f"[[{gen_labels[i]},{gen_labels[j]}],{gen_labels[k]}]"
        for (i, j, k) in (h.triples[m] for m in comp3)
    ]
    algebra = LieAlgebra(dim, gen_labels + pair_labels + triple_labels, table)
    b_gens = [
        {d + w: x for w, x in v.items()} for v in p.rel2.vectors()
    ] + [{d + g2 + q: _ONE} for q in range(len(comp3))]
    central = Subspace.from_vectors(dim, b_gens)
    return Cover(algebra, central, p)


@dataclass
class CoverReport:
    cover_dim: int
    expected_dim: int
    nilpotency_class: int
    z_in_derived: bool
    b_central: bool
    b_in_derived: bool
    b_dim: int
    multiplier: int
    quotient_matches: bool
    cube_dim: int
    s: int
    defect: int
    branch_ok: bool
    witness_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return (
            self.cover_dim == self.expected_dim
            and self.nilpotency_class == 3
            and self.z_in_derived
            and self.b_central
            and self.b_in_derived
            and self.b_dim == self.multiplier
            and self.quotient_matches
            and self.branch_ok
            and self.witness_ok is not False
        )


def verify_cover(a: LieAlgebra, cover: LieAlgebra, b: Subspace) -> CoverReport:
    """Check the Thm-2.6 shape of a claimed cover of the class-2 algebra a.

    Branch detection: s = dim B - dim (L*)³ with B ≅ (L*)³ ⊕ A(s) whenever
    (L*)³ ⊆ B; the defect bound is dim rel2 of the presentation.
    """
    from . import multiplier as mult

    p = presentation_from_class2(a)
    der = derived_subalgebra(cover)
    z = center(cover)
    series = lower_central_series(cover)
    cls = len(series) - 1 if series[-1].dim == 0 else -1
    # series[2] is (L*)³ when present ([L, L², L³, ...]).
    cube = series[2] if len(series) > 2 else Subspace.zero(cover.dim)
    b_central = all(
        not bracket_vectors(cover, u, {j: _ONE})
        for u in b.vectors()
        for j in range(cover.dim)
    )
    b_in_derived = all(der.contains_vec(u) for u in b.vectors())
    z_in_derived = all(der.contains_vec(u) for u in z.vectors())
    m_dim = mult.multiplier_dim(a)
    quo, _ = quotient(cover, b)
    canonical = _canonical_class2(p)
    quotient_matches = quo.bracket == canonical.bracket and _iso_onto_target(p, canonical)
    cube_in_b = all(b.contains_vec(u) for u in cube.vectors())
    s = b.dim - cube.dim
    defect = p.rel2.dim
    branch_ok = cube_in_b and 0 <= s <= defect
    witness_ok = None
    if p.hall.d == 3:
        witness_ok = _extension_witness_agrees(p, cover)
    return CoverReport(
        cover_dim=cover.dim,
        expected_dim=a.dim + m_dim,
        nilpotency_class=cls,
        z_in_derived=z_in_derived,
        b_central=b_central,
        b_in_derived=b_in_derived,
        b_dim=b.dim,
        multiplier=m_dim,
        quotient_matches=quotient_matches,
        cube_dim=cube.dim,
        s=s,
        defect=defect,
        branch_ok=branch_ok,
        witness_ok=witness_ok,
    )


def _canonical_class2(p: FreePresentation) -> LieAlgebra:
    from .liealg import class2_from_relations

    return class2_from_relations(p.hall.d, p.rel2)


def _iso_onto_target(p: FreePresentation, canonical: LieAlgebra) -> bool:
    """Generator-fixing map canonical -> target is a bracket isomorphism."""
    t = p.target
    d = p.hall.d
    comp = p.rel2.complement_coords()
    images = [{i: _ONE} for i in range(d)]
    for c in comp:
        i, j = p.hall.pairs[c]
        images.append(t.pair(i, j))
    basis = Matrix.from_rows(t.dim, images)
    from .exactla import rank as mat_rank

    if mat_rank(basis) != t.dim:
        return False
    for i, j in itertools.combinations(range(canonical.dim), 2):
        lhs = bracket_vectors(t, images[i], images[j])
        rhs: Vec = {}
        for k, x in canonical.pair(i, j).items():
            vec_axpy(rhs, x, images[k])
        if lhs != rhs:
            return False
    return True


def extension_witness(p: FreePresentation) -> LieAlgebra:
    """The central extension from the explicit generator/relation table.

    Basis: generator images, derived images, the wedge symbols e_ij, and a
    basis of N = (L²⊗L/L²)/ker β.  The subalgebra generated by the generator
    images recovers the cover; used as a d=3 cross-check of cover_construct.
    """
    t = p.target
    h = p.hall
    d = h.d
    r = t.dim - d
    kb = ker_beta(p)
    n_dim = r * d - kb.dim
    g2 = h.grade2_dim
    dim = d + r + g2 + n_dim

    def n_image(s: int, i: int) -> Vec:
        return {d + r + g2 + q: x for q, x in kb.quotient_coords({s * d + i: _ONE}).items()}

    table: dict[tuple[int, int], Vec] = {}
    for i, j in itertools.combinations(range(d), 2):
        v: Vec = dict(t.pair(i, j))
        v[d + r + h.pair_index[(i, j)]] = _ONE
        table[(i, j)] = v
    for s in range(r):
        for i in range(d):
            v = n_image(s, i)
            if v:
                # [y_s, x_i] = a_si, stored as [x_i, y_s] = -a_si
                table[(i, d + s)] = {c: -x for c, x in v.items()}
    labels = (
        list(t.labels)
        + [f"e{i+1}{j+1}" for i, j in h.pairs]
        + [f"n{q+1}" for q in range(n_dim)]
    )
    return LieAlgebra(dim, labels, table)


def _extension_witness_agrees(p: FreePresentation, cover: LieAlgebra) -> bool:
    lstar = extension_witness(p)
    gen_span = subalgebra_closure(lstar, [{i: _ONE} for i in range(p.hall.d)])
    sub = restrict(lstar, gen_span)
    if sub.dim != cover.dim:
        return False
    sub_series = [s.dim for s in lower_central_series(sub)]
    cov_series = [s.dim for s in lower_central_series(cover)]
    return sub_series == cov_series
