import itertools
import random
from fractions import Fraction

import pytest

from ghlie.exactla import Matrix, Subspace
from ghlie.fixtures import canonical_gh, random_class2
from ghlie.liealg import (
    ClassTwoRequired,
    GhSpec,
    abelian,
    change_of_basis,
    derived_subalgebra,
    direct_sum,
    gh_construct,
    heisenberg,
)
from ghlie.multiplier import (
    NotGeneralizedHeisenberg,
    capability_by_quotients,
    classify_by_multiplier,
    exterior_square_dim,
    j2_dim,
    k_subspace,
    multiplier_dim,
    psi2_image,
    square_dim,
    tensor_square_dim,
)

F = Fraction
ONE = F(1)


def gh(d, rank, seed=0):
    return gh_construct(GhSpec(d=d, rank=rank, seed=seed))


# --- psi2 ----------------------------------------------------------------------

def test_psi2_abelian_is_zero():
    data = psi2_image(abelian(4))
    assert data.rank == 0
    assert data.codomain_dim == 0


def test_psi2_full_rank_families():
    assert psi2_image(canonical_gh(4, 1)).rank == 4
    assert psi2_image(canonical_gh(4, 2)).rank == 4
    assert psi2_image(gh(4, 5, seed=3)).rank == 4


def test_psi2_triangle_is_deficient():
    assert psi2_image(canonical_gh(4, 3, "deficient")).rank == 3
    assert psi2_image(canonical_gh(4, 3, "generic")).rank == 4


def test_psi2_rejects_class_three():
    from ghlie import hopf

    cover = hopf.cover_construct(hopf.presentation_from_class2(gh(3, 2, seed=0)))
    with pytest.raises(ClassTwoRequired):
        psi2_image(cover.algebra)
    with pytest.raises(ClassTwoRequired):
        multiplier_dim(cover.algebra)


def full_enumeration_span(a):
    """Span of the Jacobi cycle over *all* index triples, repeats included."""
    der = derived_subalgebra(a)
    comp = der.complement_coords()
    n = len(comp)
    gens = []
    for g1, g2, g3 in itertools.product(range(n), repeat=3):
        v = {}
        for (ci, cj), g in (
            ((comp[g1], comp[g2]), g3),
            ((comp[g3], comp[g1]), g2),
            ((comp[g2], comp[g3]), g1),
        ):
            for s, x in der.coords(a.pair(ci, cj)).items():
                key = s * n + g
                t = v.get(key, 0) + x
                if t:
                    v[key] = t
                else:
                    v.pop(key, None)
        if v:
            gens.append(v)
    return Subspace.from_vectors(der.dim * n, gens)


def test_triples_suffice_against_full_enumeration():
    # multilinearity + the repeated-argument vanishing make i<j<k triples enough
    for a in (canonical_gh(3, 1), canonical_gh(4, 2), canonical_gh(4, 3, "deficient"),
              heisenberg(2), random_class2(4, seed=12)):
        assert psi2_image(a).image == full_enumeration_span(a)


def test_k_subspace_equals_psi2_image():
    for a in (canonical_gh(3, 1), canonical_gh(4, 1), heisenberg(2), random_class2(3, 5)):
        assert k_subspace(a) == psi2_image(a).image


# --- dimension formulas ------------------------------------------------------------

def test_multiplier_of_abelian():
    assert multiplier_dim(abelian(4)) == 6
    assert multiplier_dim(abelian(1)) == 0


def test_multiplier_examples():
    assert multiplier_dim(canonical_gh(3, 1)) == 6
    assert multiplier_dim(canonical_gh(4, 2)) == 14
    assert multiplier_dim(heisenberg(1)) == 2
    assert multiplier_dim(heisenberg(2)) == 5


def test_square_dim():
    assert square_dim(0) == 0
    assert square_dim(3) == 6
    assert square_dim(7) == 28


def test_wedge_tensor_j2():
    a = canonical_gh(3, 1)
    assert exterior_square_dim(a) == 8
    assert tensor_square_dim(a) == 14
    assert j2_dim(a) == 12
    b = abelian(3)
    assert tensor_square_dim(b) == 9 and j2_dim(b) == 9


def test_decomposition_identities():
    for a in (canonical_gh(4, 1), canonical_gh(5, 2), heisenberg(2), random_class2(4, 3)):
        r = derived_subalgebra(a).dim
        n = a.dim - r
        assert exterior_square_dim(a) == multiplier_dim(a) + r
        assert tensor_square_dim(a) == exterior_square_dim(a) + square_dim(n)
        assert j2_dim(a) == tensor_square_dim(a) - r


def test_classification_by_multiplier():
    assert classify_by_multiplier(gh(4, 5, seed=1)) == 1
    assert classify_by_multiplier(gh(4, 4, seed=1)) == 2
    assert classify_by_multiplier(gh(3, 3)) == 0
    assert classify_by_multiplier(canonical_gh(4, 3, "generic")) == "other"
    with pytest.raises(NotGeneralizedHeisenberg):
        classify_by_multiplier(abelian(3))


# --- direct sums ---------------------------------------------------------------------

def test_direct_sum_multiplier_law():
    for d, defect in ((3, 1), (4, 2), (5, 1)):
        rank = d * (d - 1) // 2 - defect
        h = gh(d, rank, seed=d)
        m = multiplier_dim(h)
        for t in (1, 2):
            got = multiplier_dim(direct_sum(h, abelian(t)))
            assert got == m + d * t + t * (t - 1) // 2


# --- third route: multiplier as second cohomology -----------------------------------

def h2_dim(a):
    """dim H²(L, Q): antisymmetric 2-cocycles modulo coboundaries.

    Independent of both the Jacobi-cycle count and the Hopf formula; over a
    field the multiplier has the dimension of H² with trivial coefficients.
    """
    from ghlie.exactla import Matrix, rank

    n = a.dim
    pairs = list(itertools.combinations(range(n), 2))
    pidx = {p: w for w, p in enumerate(pairs)}
    entries = {}
    row = 0
    for i, j, k in itertools.combinations(range(n), 3):
        touched = False
        for (x, y), z in (((i, j), k), ((k, i), j), ((j, k), i)):
            for l, c in a.pair(x, y).items():
                if l == z:
                    continue
                w, sign = (pidx[(l, z)], 1) if l < z else (pidx[(z, l)], -1)
                cur = entries.get((row, w), 0) + sign * c
                if cur:
                    entries[(row, w)] = cur
                    touched = True
                else:
                    entries.pop((row, w), None)
        if touched:
            row += 1
    constraints = Matrix(row, len(pairs), entries)
    cocycles = len(pairs) - rank(constraints)
    coboundaries = derived_subalgebra(a).dim
    return cocycles - coboundaries


def test_multiplier_agrees_with_second_cohomology():
    cases = [
        abelian(3), heisenberg(1), heisenberg(2),
        canonical_gh(3, 1), canonical_gh(3, 2), canonical_gh(4, 2),
        canonical_gh(4, 3, "deficient"),
        direct_sum(canonical_gh(3, 1), abelian(1)),
    ] + [random_class2(4, seed) for seed in range(6)]
    for a in cases:
        assert h2_dim(a) == multiplier_dim(a)


# --- capability ------------------------------------------------------------------------

def test_capability_of_defect_families():
    rep = capability_by_quotients(canonical_gh(3, 1))
    assert rep.capable and rep.exterior_center_dim == 0
    assert rep.all_quotients_drop
    rep = capability_by_quotients(canonical_gh(4, 2))
    assert rep.capable


def test_heisenberg2_is_not_capable():
    rep = capability_by_quotients(heisenberg(2))
    assert not rep.capable
    assert rep.exterior_center_dim == 1
    # quotient by the center is A(4) whose multiplier exceeds M(H(2)) = 5
    assert not rep.all_quotients_drop


def test_heisenberg1_is_capable():
    rep = capability_by_quotients(heisenberg(1))
    assert rep.capable and rep.multiplier == 2


# --- basis-change invariance -------------------------------------------------------------

def test_reported_dimensions_are_basis_invariant():
    rng = random.Random(77)
    a = canonical_gh(4, 2)
    base = (
        multiplier_dim(a),
        exterior_square_dim(a),
        tensor_square_dim(a),
        j2_dim(a),
        psi2_image(a).rank,
    )
    from ghlie.exactla import rank as mat_rank

    for _ in range(5):
        while True:
            p = Matrix.from_dense(
                [[rng.randint(-2, 2) for _ in range(a.dim)] for _ in range(a.dim)]
            )
            if mat_rank(p) == a.dim:
                break
        b = change_of_basis(a, p)
        got = (
            multiplier_dim(b),
            exterior_square_dim(b),
            tensor_square_dim(b),
            j2_dim(b),
            psi2_image(b).rank,
        )
        assert got == base
