"""Finite-dimensional Lie algebras over Q as sparse structure-constant tables.

A LieAlgebra stores only the brackets [b_i, b_j] for i < j; antisymmetry is
implicit.  Constructors cover the families used throughout: abelian algebras,
Heisenberg algebras H(m), and the d-generator class-2 algebras obtained from
the free class-2 algebra by killing a subspace of wedge coordinates, including
the generalized Heisenberg family (derived subalgebra = center).

Basis contract for class-2 constructors: the first dim(L/L²) coordinates are
generators, the remaining ones a basis of L².  This makes the projection onto
the abelianization a coordinate truncation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .exactla import (
    Matrix,
    Subspace,
    Vec,
    invert,
    kernel_basis,
    subspace_sum,
    vec_axpy,
)

_ONE = Fraction(1)


class CenterViolation(ValueError):
    """The requested relation subspace leaves a generator combination central."""


class NotAnIdealError(ValueError):
    """Quotient requested by a subspace that is not an ideal."""


class ClassTwoRequired(ValueError):
    """Operation defined only for nilpotent algebras of class at most two."""


class LieAlgebra:
    """Basis labels plus the sparse bracket table {(i, j) i<j: Vec}."""

    __slots__ = ("dim", "labels", "bracket")

    def __init__(self, dim: int, labels, bracket):
        self.dim = dim
        self.labels = tuple(labels)
        if len(self.labels) != dim:
            raise ValueError("label count does not match dimension")
        table = {}
        for (i, j), v in bracket.items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket key ({i},{j}) is not an ordered pair below {dim}")
            v = {k: Fraction(x) for k, x in v.items() if x}
            if any(not 0 <= k < dim for k in v):
                raise ValueError("bracket value has a coordinate outside the algebra")
            if v:
                table[(i, j)] = v
        self.bracket = table

    def pair(self, i: int, j: int) -> Vec:
        """[b_i, b_j] for arbitrary index order."""
        if i == j:
            return {}
        if i < j:
            return self.bracket.get((i, j), {})
        v = self.bracket.get((j, i))
        return {k: -x for k, x in v.items()} if v else {}

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.bracket == other.bracket
        )

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.bracket)})"


def bracket_vectors(a: LieAlgebra, u: Vec, v: Vec) -> Vec:
    """[u, v] by bilinear extension of the basis table."""
    for w in (u, v):
        if any(not 0 <= k < a.dim for k in w):
            raise ValueError("vector coordinate outside the algebra")
    out = {}
    for i, x in u.items():
        for j, y in v.items():
            if i == j:
                continue
            vec_axpy(out, x * y, a.pair(i, j))
    return out


def jacobi_check(a: LieAlgebra) -> list[tuple[int, int, int]]:
    """Triples i<j<k violating the Jacobi identity (empty list = valid table)."""
    bad = []
    e = [{i: _ONE} for i in range(a.dim)]
    for i, j, k in itertools.combinations(range(a.dim), 3):
        acc = dict(bracket_vectors(a, a.pair(i, j), e[k]))
        vec_axpy(acc, _ONE, bracket_vectors(a, a.pair(k, i), e[j]))
        vec_axpy(acc, _ONE, bracket_vectors(a, a.pair(j, k), e[i]))
        if acc:
            bad.append((i, j, k))
    return bad


def derived_subalgebra(a: LieAlgebra) -> Subspace:
    return Subspace.from_vectors(a.dim, list(a.bracket.values()))


def center(a: LieAlgebra) -> Subspace:
    """Kernel of v -> ([v, b_j])_j, assembled from the stacked adjoint maps."""
    entries = {}
    for (i, j), w in a.bracket.items():
        for k, x in w.items():
            # [e_i, e_j] = w contributes x to row (j, k) col i and -x to row (i, k) col j.
            r1 = j * a.dim + k
            entries[(r1, i)] = entries.get((r1, i), 0) + x
            r2 = i * a.dim + k
            entries[(r2, j)] = entries.get((r2, j), 0) - x
    m = Matrix(a.dim * a.dim, a.dim, entries)
    return kernel_basis(m)


def lower_central_series(a: LieAlgebra) -> list[Subspace]:
    """[L, L², L³, ...] down to stabilization (last term zero iff nilpotent)."""
    series = [Subspace.full(a.dim), derived_subalgebra(a)]
    while True:
        prev = series[-1]
        if prev.dim == 0:
            break
        gens = [
            bracket_vectors(a, u, {j: _ONE})
            for u in prev.vectors()
            for j in range(a.dim)
        ]
        nxt = Subspace.from_vectors(a.dim, gens)
        if nxt == prev:
            break
        series.append(nxt)
    return series


def nilpotency_class(a: LieAlgebra) -> int:
    if a.dim == 0:
        return 0
    series = lower_central_series(a)
    if series[-1].dim != 0:
        raise ValueError("algebra is not nilpotent")
    return len(series) - 1


def is_nilpotent_of_class_at_most(a: LieAlgebra, c: int) -> bool:
    series = lower_central_series(a)
    return series[-1].dim == 0 and len(series) - 1 <= c


def quotient(a: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix]:
    """Quotient algebra on the complement coordinates of the ideal.

    Returns (L/ideal, projection) with projection a (dim L/ideal) x (dim L)
    matrix mapping old coordinates to quotient coordinates.
    """
    if ideal.ambient_dim != a.dim:
        raise ValueError("ideal lives in the wrong ambient space")
    for u in ideal.vectors():
        for j in range(a.dim):
            if not ideal.contains_vec(bracket_vectors(a, u, {j: _ONE})):
                raise NotAnIdealError("subspace is not an ideal")
    comp = ideal.complement_coords()
    new_dim = len(comp)
    proj_entries = {}
    for c_old in range(a.dim):
        img = ideal.quotient_coords({c_old: _ONE})
        for k, x in img.items():
            proj_entries[(k, c_old)] = x
    proj = Matrix(new_dim, a.dim, proj_entries)
    table = {}
    for s, t in itertools.combinations(range(new_dim), 2):
        w = a.pair(comp[s], comp[t])
        img = ideal.quotient_coords(w)
        if img:
            table[(s, t)] = img
    labels = tuple(a.labels[c] for c in comp)
    return LieAlgebra(new_dim, labels, table), proj


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    table = {k: dict(v) for k, v in a.bracket.items()}
    off = a.dim
    for (i, j), v in b.bracket.items():
        table[(i + off, j + off)] = {k + off: x for k, x in v.items()}
    return LieAlgebra(a.dim + b.dim, a.labels + b.labels, table)


def abelian(n: int) -> LieAlgebra:
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return LieAlgebra(n, tuple(f"a{i+1}" for i in range(n)), {})


def heisenberg(m: int) -> LieAlgebra:
    """H(m): dim 2m+1, [x_{2i-1}, x_{2i}] = z, one-dimensional center."""
    if m < 1:
        raise ValueError("m must be at least 1")
    labels = tuple(f"x{i+1}" for i in range(2 * m)) + ("z",)
    table = {(2 * i, 2 * i + 1): {2 * m: _ONE} for i in range(m)}
    return LieAlgebra(2 * m + 1, labels, table)


def wedge_pairs(d: int) -> list[tuple[int, int]]:
    """Coordinate order of the wedge space Λ²(Q^d): pairs (i, j), i<j, lex."""
    return list(itertools.combinations(range(d), 2))


@dataclass(frozen=True)
class GhSpec:
    """Defining data of a generalized Heisenberg instance.

    relation_subspace lives in the wedge coordinate space of wedge_pairs(d);
    when absent, a subspace of dimension d(d-1)/2 - rank is drawn from seed.
    """

    d: int
    rank: int
    relation_subspace: Subspace | None = None
    seed: int | None = None

    def validate(self) -> None:
        max_rank = self.d * (self.d - 1) // 2
        if self.d < 3:
            raise ValueError("need at least 3 generators")
        if not 1 <= self.rank <= max_rank:
            raise ValueError(f"rank must be in 1..{max_rank}")
        if self.relation_subspace is not None:
            if self.relation_subspace.ambient_dim != max_rank:
                raise ValueError("relation subspace has wrong ambient dimension")
            if self.relation_subspace.dim != max_rank - self.rank:
                raise ValueError("relation subspace dimension does not match rank")


def class2_from_relations(d: int, relations: Subspace, labels=None) -> LieAlgebra:
    """Quotient of the free class-2 algebra on d generators by a wedge subspace.

    No center condition is imposed; the result is class <= 2 with
    dim L² = d(d-1)/2 - dim relations and the standard basis contract.
    """
    pairs = wedge_pairs(d)
    if relations.ambient_dim != len(pairs):
        raise ValueError("relations have wrong ambient dimension")
    r = len(pairs) - relations.dim
    if labels is None:
        labels = [f"x{i+1}" for i in range(d)] + [f"y{s+1}" for s in range(r)]
    table = {}
    for w, (i, j) in enumerate(pairs):
        img = relations.quotient_coords({w: _ONE})
        if img:
            table[(i, j)] = {d + s: x for s, x in img.items()}
    return LieAlgebra(d + r, labels, table)


def _center_equals_derived(a: LieAlgebra) -> bool:
    return center(a) == derived_subalgebra(a)


_RETRY_BUDGET = 64


def random_relation_subspace(d: int, rank: int, rng: random.Random) -> Subspace:
    """Seeded wedge subspace of dimension d(d-1)/2 - rank (small-int entries)."""
    n = d * (d - 1) // 2
    target = n - rank
    while True:
        rows = [
            {c: Fraction(rng.randint(-3, 3)) for c in range(n)}
            for _ in range(target)
        ]
        sub = Subspace.from_vectors(n, [{c: x for c, x in row.items() if x} for row in rows])
        if sub.dim == target:
            return sub


def gh_construct(spec: GhSpec) -> LieAlgebra:
    """Generalized Heisenberg algebra with Z(L) = L² verified.

    With an explicit relation subspace a violation raises immediately; with a
    seed the constructor retries with fresh randomness up to a fixed budget.
    """
    spec.validate()
    if spec.relation_subspace is not None:
        a = class2_from_relations(spec.d, spec.relation_subspace)
        if not _center_equals_derived(a):
            raise CenterViolation(
                f"relations leave extra central elements for d={spec.d}, rank={spec.rank}"
            )
        return a
    rng = random.Random(spec.seed)
    for _ in range(_RETRY_BUDGET):
        sub = random_relation_subspace(spec.d, spec.rank, rng)
        a = class2_from_relations(spec.d, sub)
        if _center_equals_derived(a):
            return a
    raise CenterViolation(
        f"no generalized Heisenberg instance found for d={spec.d}, rank={spec.rank} "
        f"within {_RETRY_BUDGET} draws"
    )


def is_generalized_heisenberg(a: LieAlgebra) -> bool:
    """True iff the derived subalgebra equals the center (as subspaces)."""
    return _center_equals_derived(a)


def minimal_generators(a: LieAlgebra) -> int:
    """dim L/L²; the minimal generator count for nilpotent algebras."""
    return a.dim - derived_subalgebra(a).dim


def change_of_basis(a: LieAlgebra, new_basis: Matrix) -> LieAlgebra:
    """Structure constants in the basis b'_i = row i of new_basis (invertible)."""
    if new_basis.rows != a.dim or new_basis.cols != a.dim:
        raise ValueError("basis matrix must be square of the algebra dimension")
    rows = new_basis.row_vecs()
    # old coordinates -> new coordinates via the inverse transpose, once.
    inv_rows = invert(new_basis.transpose()).row_vecs()
    table = {}
    for i, j in itertools.combinations(range(a.dim), 2):
        w = bracket_vectors(a, rows[i], rows[j])
        if not w:
            continue
        coords = {}
        for k, row in enumerate(inv_rows):
            s = sum((x * w[c] for c, x in row.items() if c in w), start=Fraction(0))
            if s:
                coords[k] = s
        if coords:
            table[(i, j)] = coords
    return LieAlgebra(a.dim, a.labels, table)


def rebase_class2(a: LieAlgebra) -> LieAlgebra:
    """Rewrite a class-2 algebra in the basis contract (generators, then L²).

    Returns a itself when the contract already holds (derived subalgebra
    spanned by the trailing coordinates).
    """
    if not is_nilpotent_of_class_at_most(a, 2):
        raise ClassTwoRequired("input must be nilpotent of class at most 2")
    der = derived_subalgebra(a)
    n = a.dim - der.dim
    trailing = Matrix(der.dim, a.dim, {(s, n + s): _ONE for s in range(der.dim)})
    if der.basis == trailing:
        return a
    rows = [{c: _ONE} for c in der.complement_coords()] + der.vectors()
    return change_of_basis(a, Matrix.from_rows(a.dim, rows))


def subalgebra_closure(a: LieAlgebra, seed_vectors) -> Subspace:
    """Smallest subalgebra containing the given vectors, as a subspace."""
    sub = Subspace.from_vectors(a.dim, list(seed_vectors))
    while True:
        gens = sub.vectors()
        new = [bracket_vectors(a, u, v) for u, v in itertools.combinations(gens, 2)]
        grown = subspace_sum(sub, Subspace.from_vectors(a.dim, new))
        if grown.dim == sub.dim:
            return sub
        sub = grown


def restrict(a: LieAlgebra, sub: Subspace) -> LieAlgebra:
    """The algebra structure induced on a bracket-closed subspace."""
    basis = sub.vectors()
    table = {}
    for s, t in itertools.combinations(range(len(basis)), 2):
        w = bracket_vectors(a, basis[s], basis[t])
        coords = sub.coords(w)
        if coords is None:
            raise ValueError("subspace is not closed under the bracket")
        if coords:
            table[(s, t)] = coords
    labels = tuple(f"u{k+1}" for k in range(len(basis)))
    return LieAlgebra(len(basis), labels, table)
