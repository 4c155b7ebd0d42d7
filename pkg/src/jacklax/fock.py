"""The Fock module F = C[V1, V2, ...] and its extension H = F[w].

Vectors are sparse dicts:
    FockVec:  {partition mu: scalar}   for the monomial V_mu = prod V_{mu_k}
    ExtVec:   {(m, mu): scalar}        for w^m * V_mu

Scalars are field elements (Coeff or Fraction); zero coefficients are never
stored.  The V-monomial inner product is diagonal:
    <V_mu, V_mu> = prod_k (hbar*k)^{d_k} d_k!   (d_k = multiplicity of k).
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DegreeMismatch, InhomogeneousForPiStar, JackLaxError
from .linalg import invert
from .partitions import partition, partitions_of


# ---------------------------------------------------------------------------
# sparse vector helpers (shared by FockVec and ExtVec dicts)
# ---------------------------------------------------------------------------

def v_add(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def v_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = -v
        else:
            w = w - v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def v_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def v_eq(a, b):
    return a == b


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

def _merge_parts(mu, nu):
    return tuple(sorted(mu + nu, reverse=True))


def fock_mul(f, g):
    out = {}
    for mu, a in f.items():
        for nu, b in g.items():
            key = _merge_parts(mu, nu)
            w = out.get(key)
            w = a * b if w is None else w + a * b
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def ext_mul(f, g):
    out = {}
    for (m, mu), a in f.items():
        for (n, nu), b in g.items():
            key = (m + n, _merge_parts(mu, nu))
            w = out.get(key)
            w = a * b if w is None else w + a * b
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def fock_to_ext(f):
    return {(0, mu): c for mu, c in f.items()}


# ---------------------------------------------------------------------------
# grading and projections
# ---------------------------------------------------------------------------

def ext_degree(key):
    m, mu = key
    return m + sum(mu)


def degree_of(zeta):
    """Degree of a homogeneous ExtVec (raises if mixed)."""
    degs = {ext_degree(k) for k in zeta}
    if not degs:
        return 0
    if len(degs) > 1:
        raise DegreeMismatch("inhomogeneous vector: degrees %s" % sorted(degs))
    return degs.pop()


def pi0(zeta):
    """Project onto w^0 (an ExtVec -> FockVec)."""
    return {mu: c for (m, mu), c in zeta.items() if m == 0}


def pi_plus(zeta):
    return {k: c for k, c in zeta.items() if k[0] > 0}


def Pi(zeta):
    """w^{-1} pi_+ : drop the w^0 part and divide by w."""
    return {(m - 1, mu): c for (m, mu), c in zeta.items() if m > 0}


def w_mul(zeta, k=1):
    return {(m + k, mu): c for (m, mu), c in zeta.items()}


def pi_star(zeta, field):
    """Top w-coefficient [w^n] of a homogeneous degree-n vector."""
    if zeta:
        n = degree_of(zeta)
    else:
        return field.zero
    return zeta.get((n, ()), field.zero)


def project(zeta, which, field=None):
    if which == "pi0":
        return pi0(zeta)
    if which == "pi+":
        return pi_plus(zeta)
    if which == "Pi":
        return Pi(zeta)
    if which == "pi*":
        if field is None:
            raise JackLaxError("pi* needs the field")
        if zeta and len({ext_degree(k) for k in zeta}) > 1:
            raise InhomogeneousForPiStar("pi* needs a homogeneous vector")
        return pi_star(zeta, field)
    raise JackLaxError("unknown projection %r" % which)


# ---------------------------------------------------------------------------
# inner products
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _norm_shape(mu):
    """Integer data ((k, d_k) list, prod d_k!) for the V-monomial norm."""
    mults = {}
    for part in mu:
        mults[part] = mults.get(part, 0) + 1
    fact = 1
    for d in mults.values():
        fact *= factorial(d)
    return tuple(sorted(mults.items())), fact


def monomial_norm_sq(mu, field):
    """<V_mu, V_mu> = prod (hbar k)^{d_k} d_k!."""
    mults, fact = _norm_shape(mu)
    val = field.num(fact)
    for k, d in mults:
        val = val * (field.hbar * field.num(k)) ** d
    return val


def inner_hbar(f, g, field):
    """Inner product of two vectors (ExtVec or FockVec dicts)."""
    f = _as_ext(f)
    g = _as_ext(g)
    total = field.zero
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    for key, a in small.items():
        b = big.get(key)
        if b:
            total = total + a * b * monomial_norm_sq(key[1], field)
    return total


def _as_ext(f):
    if not f:
        return {}
    k = next(iter(f))
    if isinstance(k, tuple) and len(k) == 2 and isinstance(k[1], tuple):
        return f
    return fock_to_ext(f)


def zmu(mu):
    """z_mu = prod_k d_k! k^{d_k} (multiplicities d_k of the part k)."""
    mults, fact = _norm_shape(mu)
    z = fact
    for k, d in mults:
        z *= k ** d
    return z


def hall_inner_alpha(f, g, field, alpha=None):
    """alpha-deformed Hall product of two p-basis vectors.

    <p_mu, p_nu> = delta_{mu,nu} z_mu alpha^{#parts(mu)}.  (The exponent is
    the number of parts; that is what makes the integral Jacks orthogonal.)
    """
    alpha = field.alpha if alpha is None else alpha
    if f and g:
        df = {sum(mu) for mu in f}
        dg = {sum(mu) for mu in g}
        if len(df | dg) > 1:
            raise DegreeMismatch("hall inner product needs equal homogeneous degrees")
    total = field.zero
    for mu, a in f.items():
        b = g.get(mu)
        if b:
            total = total + a * b * field.num(zmu(mu)) * alpha ** len(mu)
    return total


# ---------------------------------------------------------------------------
# annihilation (adjoints of multiplication operators)
# ---------------------------------------------------------------------------

def deriv_V(f, k):
    """d/dV_k on a FockVec."""
    out = {}
    for mu, c in f.items():
        d = mu.count(k)
        if not d:
            continue
        lst = list(mu)
        lst.remove(k)
        key = tuple(lst)
        w = out.get(key)
        w = c * d if w is None else w + c * d
        if w:
            out[key] = w
        elif key in out:
            del out[key]
    return out


def annihilate(f, mu, field):
    """Apply V_mu^dagger = prod_k (hbar k d/dV_k) to a FockVec."""
    out = f
    for k in mu:
        out = v_scale(deriv_V(out, k), field.hbar * field.num(k))
    return out


def fock_adjoint_apply(g, f, field):
    """Apply (multiplication by g)^dagger to f; both FockVecs."""
    out = {}
    for mu, c in g.items():
        out = v_add(out, v_scale(annihilate(f, mu, field), c))
    return out


# ---------------------------------------------------------------------------
# monomial <-> power-sum transitions (rational, mode independent)
# ---------------------------------------------------------------------------

def _mult_m_by_p(mvec, r):
    """Multiply a monomial-basis vector {nu: Fraction} by p_r."""
    out = {}
    for nu, c in mvec.items():
        values = set(nu) | {0}
        seen = set()
        for v in values:
            lst = list(nu)
            if v:
                lst.remove(v)
            lst.append(v + r)
            rho = partition(lst)
            if rho in seen:
                continue
            seen.add(rho)
            # number of positions of rho holding u=v+r whose removal gives nu
            count = 0
            for u in set(rho):
                if u >= r:
                    lst2 = list(rho)
                    lst2.remove(u)
                    lst2.append(u - r)
                    if partition(lst2) == nu:
                        count += rho.count(u) if u != 0 else 0
            w = out.get(rho, Fraction(0)) + c * count
            if w:
                out[rho] = w
            elif rho in out:
                del out[rho]
    return out


@lru_cache(maxsize=None)
def monomial_powersum_transition(n):
    """(plist, P2M, M2P): P2M[i][j] = [m_{plist[j]}] p_{plist[i]} (integers),
    M2P its inverse over Q."""
    plist = list(partitions_of(n))
    index = {mu: i for i, mu in enumerate(plist)}
    P2M = []
    for mu in plist:
        vec = {(): Fraction(1)}
        for r in mu:
            vec = _mult_m_by_p(vec, r)
        row = [Fraction(0)] * len(plist)
        for nu, c in vec.items():
            row[index[nu]] = c
        P2M.append(row)

    class _Q:
        zero = Fraction(0)
        one = Fraction(1)

    M2P = invert([list(map(Fraction, row)) for row in _transpose(P2M)], _Q)
    return plist, P2M, M2P


def _transpose(M):
    return [list(col) for col in zip(*M)]


def p_to_m(pvec, n):
    """Convert {mu: scalar} in the p-basis to the m-basis (degree n)."""
    plist, P2M, _ = monomial_powersum_transition(n)
    index = {mu: i for i, mu in enumerate(plist)}
    out = {}
    for mu, c in pvec.items():
        row = P2M[index[mu]]
        for j, q in enumerate(row):
            if q:
                key = plist[j]
                w = out.get(key)
                w = c * q if w is None else w + c * q
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
    return out


def m_to_p(mvec, n, field):
    """Convert {mu: scalar} in the m-basis to the p-basis (degree n)."""
    plist, _, M2P = monomial_powersum_transition(n)
    index = {mu: i for i, mu in enumerate(plist)}
    out = {}
    for mu, c in mvec.items():
        col = index[mu]
        for i in range(len(plist)):
            q = M2P[i][col]
            if q:
                key = plist[i]
                w = out.get(key)
                term = c * field.from_fraction(q)
                w = term if w is None else w + term
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
    return out


# ---------------------------------------------------------------------------
# canonical bases of the graded pieces H_n
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def hn_basis(n):
    """Basis of H_n: (m, mu) with m + |mu| = n; w-power ascending, then the
    fixed partition order."""
    out = []
    for m in range(n + 1):
        for mu in partitions_of(n - m):
            out.append((m, mu))
    return tuple(out)


def dim_hn(n):
    return len(hn_basis(n))


def vector_to_coords(zeta, n, field):
    basis = hn_basis(n)
    index = {k: i for i, k in enumerate(basis)}
    coords = [field.zero] * len(basis)
    for k, c in zeta.items():
        coords[index[k]] = c
    return coords


def coords_to_vector(coords, n):
    basis = hn_basis(n)
    return {basis[i]: c for i, c in enumerate(coords) if c}
