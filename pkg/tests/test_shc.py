from jacklax import lr
from jacklax.partitions import add_box, add_set, partitions_of
from jacklax.shc import (apply_U, apply_X_plus, apply_dPhi,
                         construction_from_lax_check, delta_via_states,
                         gaiotto_state, h_state, Psi_eig, Y_eig, Yinv_eig,
                         whittaker_checks)
from jacklax.spectral import tau


def test_xplus_action(spec):
    F = spec.field
    st = {(2, 1): F.one}
    out = apply_X_plus(spec, st)
    for s in add_set((2, 1)):
        assert out[("p", s)] == {add_box((2, 1), s): tau(F, (2, 1), s)}


def test_U(spec):
    F = spec.field
    st = {(2, 2): F.one / spec.varpi((2, 2))}   # jhat_{2^2}
    assert apply_U(spec, st) == {(2, 2): F.one}
    assert apply_U(spec, {(): F.one}) == {}


def test_dPhi(spec):
    F = spec.field
    assert apply_dPhi(spec, {(1,): F.one}) == {("p", (0, 0)): {(1,): F.one}}


def test_Y_eigenvalues(spec):
    F = spec.field
    # Y_lam(z) * Yinv_lam(z) = 1
    for lam in [(1,), (2, 1)]:
        prod = Y_eig(F, lam) * Yinv_eig(F, lam)
        assert not prod.num and not prod.den and prod.pre == F.one
    # Psi at infinity is 1
    fun = Psi_eig(F, (2, 1))
    poly, _ = fun.partial_fractions(F)
    assert poly == [F.one]


def test_construction_from_lax(spec):
    rep = construction_from_lax_check(spec, 3)
    assert rep["xplus"] and rep["yinv"] and rep["xminus_lax"]
    assert rep["y_equals_minus_Pminus"]
    assert rep["xminus_literal_sign"] == [-1]


def test_whittaker(spec):
    rep = whittaker_checks(spec, 4)
    for key in ("gaiotto_is_exponential", "H_is_sum_Vn", "whittaker_minus",
                "whittaker_plus", "generalized_whittaker", "lifted_identity",
                "x_commutator", "dPhi_V1_commutator", "x_leading_term"):
        assert rep[key], key
    assert rep["whittaker_plus_sign"] == -1


def test_states(spec):
    F = spec.field
    G = gaiotto_state(spec, 3)
    for n in range(4):
        for lam in partitions_of(n):
            assert G[lam] == F.one / spec.norm_sq(lam)
    H = h_state(spec, 3)
    assert () not in H
    for lam in H:
        assert H[lam] == spec.varpi(lam) / spec.norm_sq(lam)


def test_delta_agreement(spec):
    for n in range(1, 5):
        for lam in partitions_of(n):
            a = delta_via_states(spec, spec.jack(lam), n)
            b = lr.delta_map(spec, spec.jack(lam))
            assert a == b
