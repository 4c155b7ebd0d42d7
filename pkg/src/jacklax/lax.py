"""The quantum Lax operator on H = F[w] and its polynomial eigenfunctions.

L = pi_w sum_k (w^{-k} V_k + w^k V_{-k}) + ebar * w d/dw, acting on ExtVecs.
Its eigenfunctions psi_lam^s (s addable to lam) are built by the corner
recursion
    psi_lam^s = j_lam + w * sum_{t in R_lam}
                   tau~_lam^{t+(1,1)} / [s-t-(1,1)] * psi_{lam-t}^t,
and satisfy L psi = [s] psi with pi0 psi = j_lam.
"""

from .errors import EmptyPartition, NotARemovableCorner, NotAnAddableBox
from .fock import (Pi, degree_of, fock_to_ext, hn_basis, pi0, pi_plus,
                   pi_star, v_add, v_scale, w_mul)
from .partitions import (add_set, add_box, rem_set, rem_set_plus,
                         remove_box)
from .spectral import tau, tau_hat, tau_tilde


# ---------------------------------------------------------------------------
# the operator itself
# ---------------------------------------------------------------------------

def lax_apply(field, zeta):
    """Apply L to an ExtVec."""
    out = {}

    def bump(key, val):
        w = out.get(key)
        w = val if w is None else w + val
        if w:
            out[key] = w
        elif key in out:
            del out[key]

    ebar, hbar = field.ebar, field.hbar
    for (m, mu), c in zeta.items():
        if m:
            bump((m, mu), c * ebar * field.num(m))
        # w^{-k} V_k terms, k <= m
        for k in range(1, m + 1):
            bump((m - k, tuple(sorted(mu + (k,), reverse=True))), c)
        # w^k V_{-k} terms: V_{-k} = hbar k d/dV_k
        for k in set(mu):
            d = mu.count(k)
            lst = list(mu)
            lst.remove(k)
            bump((m + k, tuple(lst)), c * hbar * field.num(k * d))
    return out


def lax_prime_apply(field, zeta):
    """The F-linear part L' (w^n -> sum_{0<k<=n} w^{n-k} V_k)."""
    out = {}
    for (m, mu), c in zeta.items():
        for k in range(1, m + 1):
            key = (m - k, tuple(sorted(mu + (k,), reverse=True)))
            w = out.get(key)
            w = c if w is None else w + c
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def op_A(field, zeta):
    """A = pi0 L w : H_n -> F_{n+1} (returns a FockVec)."""
    return pi0(lax_apply(field, w_mul(zeta)))


def op_B(field, f):
    """B = w^{-1} L restricted to F (returns an ExtVec)."""
    return Pi(lax_apply(field, fock_to_ext(f)))


def lax_matrix(ws, n):
    """Matrix of L_n in the canonical (w-power, partition) basis."""
    basis = hn_basis(n)
    index = {k: i for i, k in enumerate(basis)}
    cols = []
    for key in basis:
        img = lax_apply(ws.field, {key: ws.field.one})
        col = [ws.field.zero] * len(basis)
        for k, c in img.items():
            col[index[k]] = c
        cols.append(col)
    return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


def lax_plus_shift_check(ws, n):
    """w^{-1} L+_{n+1} w = L_n + ebar, as matrices on H_n."""
    field = ws.field
    for key in hn_basis(n):
        one = {key: field.one}
        lhs = Pi(pi_plus(lax_apply(field, w_mul(one))))
        rhs = v_add(lax_apply(field, one), v_scale(one, field.ebar))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# eigenfunctions
# ---------------------------------------------------------------------------

def compute_psi(ws, lam, s):
    field = ws.field
    if not lam:
        if s != (0, 0):
            raise NotAnAddableBox("only (0,0) is addable to the empty partition")
        return {(0, ()): field.one}
    if s not in add_set(lam):
        raise NotAnAddableBox("box (%d,%d) not addable to %s" % (s[0], s[1], (lam,)))
    acc = fock_to_ext(ws.jack(lam))
    for t in rem_set(lam):
        tp = (t[0] + 1, t[1] + 1)
        den = field.lf((s[0] - tp[0], s[1] - tp[1]))
        if not den:
            raise ZeroDivisionError("degenerate denominator in psi recursion")
        coeff = tau_tilde(field, lam, tp) / den
        sub = ws.psi(remove_box(lam, t), t)
        acc = v_add(acc, v_scale(w_mul(sub), coeff))
    return acc


def psi_tilde(ws, gamma, t_plus):
    """Eigenfunction of L^+ at an outer corner: w * psi_{gamma-t}^t."""
    if not gamma:
        raise EmptyPartition("psi~ needs a nonempty partition")
    if t_plus not in rem_set_plus(gamma):
        raise NotARemovableCorner("box (%d,%d) not an outer corner" % t_plus)
    t = (t_plus[0] - 1, t_plus[1] - 1)
    return w_mul(ws.psi(remove_box(gamma, t), t))


def q_poly(ws, gamma):
    """q_gamma = w^{-1} L j_gamma (lives in H_{|gamma|-1})."""
    if not gamma:
        raise EmptyPartition("q is defined for nonempty partitions")
    return Pi(lax_apply(ws.field, fock_to_ext(ws.jack(gamma))))


def q_poly_hat(ws, gamma):
    return v_scale(q_poly(ws, gamma), ws.field.one / ws.varpi(gamma))


def resolvent_at_form(ws, form, zeta, shift=(0, 0)):
    """(([form]+[shift]) - L)^{-1} zeta via the eigenbasis."""
    field = ws.field
    out = {}
    for (lam, s), c in ws.expand_psi(zeta).items():
        den = field.lf((form[0] + shift[0] - s[0], form[1] + shift[1] - s[1]))
        out = v_add(out, v_scale(ws.psi(lam, s), c / den))
    return out


# ---------------------------------------------------------------------------
# action coefficients in the psi basis
# ---------------------------------------------------------------------------

def w_action_coeffs(ws, lam, t, hatted=False):
    """w psi_lam^t = sum_s c_s psi_{lam+t}^s; returns {s: c_s}."""
    field = ws.field
    if t not in add_set(lam):
        raise NotAnAddableBox("box (%d,%d) not addable" % t)
    gamma = add_box(lam, t)
    out = {}
    for s in add_set(gamma):
        den = field.lf((s[0] - t[0] - 1, s[1] - t[1] - 1))
        tv = tau_hat(field, gamma, s) if hatted else tau(field, gamma, s)
        out[s] = tv / den
    return out


def Pi_action_coeffs(ws, lam, s, hatted=False):
    """Pi psi_lam^s = sum_t c_t psi_{lam-t}^t; returns {t: c_t}.

    With the fixed tau~ sign the denominator is [s-t-(1,1)]; the opposite
    sign convention flips both tau~ and the denominator."""
    field = ws.field
    if s not in add_set(lam):
        raise NotAnAddableBox("box (%d,%d) not addable" % s)
    out = {}
    for t in rem_set(lam):
        tp = (t[0] + 1, t[1] + 1)
        c = tau_tilde(field, lam, tp) / field.lf((s[0] - tp[0], s[1] - tp[1]))
        if hatted:
            below = remove_box(lam, t)
            c = c * ws.pi_star_psi(below, t) / ws.pi_star_psi(lam, s)
        out[t] = c
    return out


# ---------------------------------------------------------------------------
# decompositions and the diamond projection
# ---------------------------------------------------------------------------

def decompose(ws, zeta, scheme):
    """Split a homogeneous vector along Z (by lam), X (by lam+s), or
    Y (by eigen-box); components sum back to zeta."""
    exp = ws.expand_psi(zeta)
    out = {}
    for (lam, s), c in exp.items():
        if scheme == "Z":
            key = lam
        elif scheme == "X":
            key = add_box(lam, s)
        elif scheme == "Y":
            key = s
        else:
            raise ValueError("scheme must be Z, X or Y")
        out[key] = v_add(out.get(key, {}), v_scale(ws.psi(lam, s), c))
    return out


def project_Z(ws, zeta, lam):
    """P_{Z_lam} zeta."""
    out = {}
    for (mu, s), c in ws.expand_psi(zeta).items():
        if mu == lam:
            out = v_add(out, v_scale(ws.psi(mu, s), c))
    return out


def pi_diamond(ws, zeta):
    """The rank-p(n+1) projection (1/((n+1) hbar)) B A on H_n.

    (The normalizer (n+1) hbar, with gamma |- n+1, is what makes this
    idempotent: A q_gamma = |gamma| hbar j_gamma.)"""
    if not zeta:
        return {}
    n = degree_of(zeta)
    field = ws.field
    f = op_A(field, zeta)
    back = op_B(field, f)
    return v_scale(back, field.one / (field.num(n + 1) * field.hbar))


def phi_column_coeff(ws, r, k, s):
    """phi_{1^r,1^k}^s = [s] * prod of column contents (k+1..r-1) for k<r."""
    field = ws.field
    val = field.lf(s)
    for i in range(k + 1, r):
        val = val * field.lf((i, 0))
    return val
