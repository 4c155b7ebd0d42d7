"""Jack and Jack-Lax Littlewood-Richardson coefficients, the sum-product
identity checker, and the basic evaluation map with its kernel cycles.

The central identity: for mu, nu nonempty,
    sum_{gamma >= mu u nu} chat_{mu nu}^gamma sum_{s in gamma/(mu u nu)}
        1/(u-[s])   =   T_{mu*nu}(u) - 1,
with chat = c * varpi_gamma / (varpi_mu varpi_nu).
"""

from .errors import JackLaxError, NotACycle
from .fock import ext_mul, fock_mul, v_add, v_scale
from .linalg import rank, solve
from .partitions import (boxes, contains, diagram_union, partitions_of,
                         size)
from .spectral import T_star, star_residues


# ---------------------------------------------------------------------------
# LR tables
# ---------------------------------------------------------------------------

def jack_lr(ws, mu, nu, hatted=False):
    """{gamma: c_{mu nu}^gamma} (or hatted) from the exact product expansion."""
    prod = fock_mul(ws.jack(mu), ws.jack(nu))
    table = ws.expand_in_jacks(prod)
    if hatted:
        vm = ws.varpi(mu) * ws.varpi(nu)
        table = {g: c * ws.varpi(g) / vm for g, c in table.items()}
    return table


def jacklax_lr(ws, lam, s, nu, t, hatted=False):
    """{(gamma, u): coefficient} of psi_lam^s psi_nu^t in the psi basis."""
    if hatted:
        prod = ext_mul(ws.psi_hat(lam, s), ws.psi_hat(nu, t))
        return ws.expand_psi_hat(prod)
    prod = ext_mul(ws.psi(lam, s), ws.psi(nu, t))
    return ws.expand_psi(prod)


def marginalize(table):
    """Sum a Jack-Lax table over the eigen-box: {gamma: sum_u c}."""
    out = {}
    for (gamma, u), c in table.items():
        w = out.get(gamma)
        w = c if w is None else w + c
        if w:
            out[gamma] = w
        elif gamma in out:
            del out[gamma]
    return out


def rectangle_corner_value(ws, mu, s, nu, t, m, n):
    """The closed-form hatted Jack-Lax coefficient onto the rectangle-minus-
    box partition m^n - v*, v* = (n-1, m-1):
        Res_{u=[v*]} T_{mu*nu}(u) / (u - [s+t])."""
    field = ws.field
    vstar = (n - 1, m - 1)
    T = T_star(field, mu, nu)
    st = (s[0] + t[0], s[1] + t[1])
    from .arith import SpectralFun
    den = dict(T.den)
    den[st] = den.get(st, 0) + 1
    return SpectralFun(T.pre, dict(T.num), den).residue(vstar, field)


# ---------------------------------------------------------------------------
# the main sum-product identity
# ---------------------------------------------------------------------------

def main_theorem_residual(ws, mu, nu):
    """LHS minus RHS as a {pole: scalar} map (all zero iff the identity
    holds)."""
    if not mu or not nu:
        raise JackLaxError("mu, nu must be nonempty")
    field = ws.field
    union = diagram_union(mu, nu)
    union_boxes = set(boxes(union))
    lhs = {}
    for gamma, chat in jack_lr(ws, mu, nu, hatted=True).items():
        if not contains(gamma, union):
            # selection rule violation would surface here
            if chat:
                raise JackLaxError("selection rule violated at %s" % (gamma,))
            continue
        for b in boxes(gamma):
            if b in union_boxes:
                continue
            w = lhs.get(b, field.zero) + chat
            if w:
                lhs[b] = w
            elif b in lhs:
                del lhs[b]
    rhs = star_residues(field, mu, nu)
    residual = dict(lhs)
    for pole, r in rhs.items():
        w = residual.get(pole, field.zero) - r
        if w:
            residual[pole] = w
        elif pole in residual:
            del residual[pole]
    return residual


def main_theorem_check(ws, mu, nu):
    return not main_theorem_residual(ws, mu, nu)


def determination_check(ws, n):
    """Solve the pole equations for all pairs with |mu|+|nu| = n and verify
    they determine the hatted LR coefficients uniquely (claimed for n < 7)."""
    field = ws.field
    ok = True
    for a in range(1, n):
        b = n - a
        if b < a:
            break
        for mu in partitions_of(a):
            for nu in partitions_of(b):
                union = diagram_union(mu, nu)
                if size(union) > n:
                    continue
                gammas = [g for g in partitions_of(n) if contains(g, union)]
                union_boxes = set(boxes(union))
                poles = sorted({bx for g in gammas for bx in boxes(g)
                                if bx not in union_boxes})
                pos = {p: i for i, p in enumerate(poles)}
                rhs_map = star_residues(field, mu, nu)
                # equations indexed by poles; unknowns by gamma
                A = [[field.zero] * len(gammas) for _ in poles]
                for j, g in enumerate(gammas):
                    for bx in boxes(g):
                        if bx not in union_boxes:
                            A[pos[bx]][j] = field.one
                bvec = [rhs_map.get(p, field.zero) for p in poles]
                if rank([list(r) for r in A]) < len(gammas):
                    ok = False
                    continue
                sol = solve(A, bvec, field)
                truth = jack_lr(ws, mu, nu, hatted=True)
                for j, g in enumerate(gammas):
                    if sol[j] != truth.get(g, field.zero):
                        ok = False
    return ok


# ---------------------------------------------------------------------------
# the basic evaluation map Delta
# ---------------------------------------------------------------------------

def delta_map(ws, f):
    """Delta(f) as a partial-fraction map {pole-box: scalar}.

    On the Jack basis: Delta(j_lam) = varpi_lam sum_{b in lam} 1/(u-[b])."""
    field = ws.field
    out = {}
    for lam, c in ws.expand_in_jacks(f).items():
        w = c * ws.varpi(lam)
        for b in boxes(lam):
            acc = out.get(b, field.zero) + w
            if acc:
                out[b] = acc
            elif b in out:
                del out[b]
    return out


def delta_of_jack_product(ws, mu, nu):
    """Closed form varpi_mu varpi_nu (T_{mu*nu} - 1) as a pole map."""
    field = ws.field
    vm = ws.varpi(mu) * ws.varpi(nu)
    return {p: vm * r for p, r in star_residues(field, mu, nu).items()}


def is_cycle(lams):
    """Even closed chain of single-box moves where every box is used an even
    number of times in total."""
    N = len(lams)
    if N == 0 or N % 2:
        return False
    counts = {}
    for lam in lams:
        for b in boxes(lam):
            counts[b] = counts.get(b, 0) + 1
    if any(v % 2 for v in counts.values()):
        return False
    for i, lam in enumerate(lams):
        nxt = lams[(i + 1) % N]
        if size(lam) != size(nxt):
            return False
        a = set(boxes(lam)) - set(boxes(nxt))
        b = set(boxes(nxt)) - set(boxes(lam))
        if len(a) != 1 or len(b) != 1:
            return False
    return True


def delta_kernel_check(ws, lams):
    """Delta(sum (-1)^i jhat_{lam_i}) = 0 for an N-cycle."""
    if not is_cycle(lams):
        raise NotACycle("input is not an N-cycle")
    field = ws.field
    acc = {}
    for i, lam in enumerate(lams):
        sign = field.one if i % 2 == 0 else -field.one
        acc = v_add(acc, v_scale(ws.jack_hat(lam), sign))
    return not delta_map(ws, acc)


def delta_kernel_rank(n):
    """dim ker Delta_n from the box-incidence matrix over Q (integer data)."""
    from fractions import Fraction
    plist = partitions_of(n)
    cols = sorted({b for lam in plist for b in boxes(lam)})
    pos = {b: i for i, b in enumerate(cols)}
    rows = []
    for lam in plist:
        row = [Fraction(0)] * len(cols)
        for b in boxes(lam):
            row[pos[b]] = Fraction(1)
        rows.append(row)
    return len(plist) - rank(rows)
