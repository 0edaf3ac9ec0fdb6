import random
from fractions import Fraction

import pytest

from lieforms.errors import (
    DegenerateError,
    JacobiError,
    OwnerMismatchError,
    SingularMatrixError,
)
from lieforms.fields import gaussian_rationals, rationals
from lieforms.liealg import (
    LieAlgebra,
    LinearMap,
    change_basis,
    center_rows,
    commutator_rows,
    direct_sum,
    fingerprint,
    is_ideal,
    restrict_to_span,
    verify_morphism,
    verify_sigma_isomorphism,
)

Q = rationals()
QI = gaussian_rationals()


def heis(field=Q):
    return LieAlgebra(field, 3, {(0, 1): {2: 1}}, labels=("X", "Y", "Z"))


def sl2(field=Q):
    # [h,e]=2e, [h,f]=-2f, [e,f]=h with basis order (e0=h, e1=e, e2=f)
    return LieAlgebra(field, 3, {
        (0, 1): {1: 2},
        (0, 2): {2: -2},
        (1, 2): {0: 1},
    })


def test_bracket_antisymmetry_and_sparsity():
    L = heis()
    assert L.bracket_basis(0, 1) == {2: Q.one()}
    assert L.bracket_basis(1, 0) == {2: Q.from_rational(-1)}
    assert L.bracket_basis(0, 2) == {}
    assert L.bracket_basis(1, 1) == {}


def test_bracket_of_vectors():
    L = heis()
    u = L.vector([1, 2, 5])
    v = L.vector([3, 4, -1])
    w = L.bracket(u, v)
    # [X+2Y, 3X+4Y] = (1*4-2*3) Z = -2 Z
    assert w.coords == L.vector([0, 0, -2]).coords


def test_jacobi_rejection_reports_triple():
    with pytest.raises(JacobiError) as exc:
        LieAlgebra(Q, 3, {
            (0, 1): {0: 1},   # [X1,X2]=X1
            (1, 2): {1: 1},   # [X2,X3]=X2
            (0, 2): {2: -1},  # [X3,X1]=X3
        })
    assert exc.value.triple == (1, 2, 3)


def test_sl2_satisfies_jacobi():
    L = sl2()
    fp = fingerprint(L)
    assert fp.nilpotency_class is None
    assert not fp.solvable
    assert fp.commutator_dim == 3
    assert fp.center_dim == 0


def test_heisenberg_fingerprint():
    fp = fingerprint(heis())
    assert fp.dim == 3
    assert fp.lower_central == (3, 1, 0)
    assert fp.derived == (3, 1, 0)
    assert fp.center_dim == 1
    assert fp.commutator_dim == 1
    assert fp.nilpotency_class == 2
    assert fp.solvable
    assert fp.two_step == (2, 1)


def test_abelian_fingerprint():
    L = LieAlgebra(Q, 4, {})
    fp = fingerprint(L)
    assert fp.lower_central == (4, 0)
    assert fp.nilpotency_class == 1
    assert fp.center_dim == 4
    assert fp.two_step == (4, 0)


def test_solvable_not_nilpotent():
    # [X1,X2]=X2
    L = LieAlgebra(Q, 2, {(0, 1): {1: 1}})
    fp = fingerprint(L)
    assert fp.solvable
    assert fp.nilpotency_class is None
    assert fp.lower_central == (2, 1, 1)
    assert fp.derived == (2, 1, 0)


def test_direct_sum_blocks():
    L = direct_sum(heis(), heis())
    assert L.dim == 6
    assert L.bracket_basis(0, 1) == {2: Q.one()}
    assert L.bracket_basis(3, 4) == {5: Q.one()}
    assert L.bracket_basis(0, 4) == {}
    fp = fingerprint(L)
    assert fp.two_step == (4, 2)
    assert fp.center_dim == 2


def test_center_and_commutator_rows():
    L = heis()
    comm, _ = commutator_rows(L)
    assert len(comm) == 1 and comm[0][2] == Q.one()
    cen, _ = center_rows(L)
    assert len(cen) == 1 and cen[0][2] == Q.one()


def test_change_basis_roundtrip():
    L = sl2()
    rng = random.Random(5)
    for _ in range(10):
        while True:
            P = [[Fraction(rng.randint(-3, 3)) for _ in range(3)]
                 for _ in range(3)]
            try:
                M = change_basis(L, P)
                break
            except SingularMatrixError:
                continue
        # change_basis(L, P) is isomorphic to L via P
        assert verify_morphism(M, L, P)


def test_change_basis_singular_rejected():
    with pytest.raises(SingularMatrixError):
        change_basis(heis(), [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_verify_morphism_identity_and_scaling():
    L = heis()
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert verify_morphism(L, L, ident)
    # X->X, Y->2Y, Z->2Z is an automorphism of h3
    assert verify_morphism(L, L, [[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    # X->X, Y->2Y, Z->Z is not
    assert not verify_morphism(L, L, [[1, 0, 0], [0, 2, 0], [0, 0, 1]])


def test_verify_sigma_isomorphism_on_conjugate():
    # L over Q(i) with [X1,X2] = i X3; sigma-conjugate has -i; identity
    # matrix is a sigma-isomorphism onto it.
    i = QI.generator()
    L = LieAlgebra(QI, 3, {(0, 1): {2: i}})
    Lbar = LieAlgebra(QI, 3, {(0, 1): {2: -i}})
    sigma = QI.automorphisms()[1]
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert verify_sigma_isomorphism(L, Lbar, sigma, ident)
    assert not verify_sigma_isomorphism(L, L, sigma, ident)


def test_ideal_checks():
    L = heis()
    z = [[Q.zero(), Q.zero(), Q.one()]]
    assert is_ideal(L, z)
    x = [[Q.one(), Q.zero(), Q.zero()]]
    assert not is_ideal(L, x)
    assert is_ideal(L, [[Q.one(), Q.zero(), Q.zero()],
                        [Q.zero(), Q.zero(), Q.one()]])


def test_restrict_to_span():
    L = direct_sum(heis(), heis())
    rows = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]
    rows = [[Q.from_rational(c) for c in r] for r in rows]
    sub = restrict_to_span(L, rows)
    assert sub.dim == 3
    assert sub.bracket_basis(0, 1) == {2: Q.one()}
    bad = [[Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.zero(), Q.zero()],
           [Q.zero(), Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.zero()]]
    with pytest.raises(DegenerateError):
        restrict_to_span(L, bad)


def test_vector_owner_checks():
    L1, L2 = heis(), sl2()
    v = L1.vector([1, 0, 0])
    w = L2.vector([1, 0, 0])
    with pytest.raises(OwnerMismatchError):
        L1.bracket(v, w)


def test_linear_map_apply():
    L = heis()
    m = LinearMap.make(L, L, [[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    v = m.apply(L.vector([1, 2, 3]))
    assert v.coords == L.vector([2, 1, -3]).coords
    assert m.is_bijective()
    assert m.verify()  # X<->Y, Z->-Z preserves [X,Y]=Z


def test_ad_matrix():
    L = sl2()
    h = [Q.one(), Q.zero(), Q.zero()]
    ad = L.ad_matrix(h)
    # ad_h = diag(0, 2, -2) in basis (h, e, f)
    assert ad[1][1] == Q.from_rational(2)
    assert ad[2][2] == Q.from_rational(-2)
    assert ad[0][0].is_zero()
