"""Integral Jack functions, their homogeneous form, norms, and the Stanley
Pieri rule.

Construction is Gram-Schmidt against the alpha-deformed Hall product over
the monomial basis, taken in the fixed dominance-compatible order, then
rescaled to [m_{1^n}] J = n!.
"""

from math import factorial

from .errors import JackLaxError
from .fock import hall_inner_alpha, m_to_p, monomial_powersum_transition
from .partitions import (arm, boxes, boxes_x, contains, hooks_lower,
                         hooks_upper, leg, partition, partitions_of)


def compute_integral_jacks(field, n):
    """All integral Jacks of degree n: {lam: p-basis dict over the field}."""
    if n == 0:
        return {(): {(): field.one}}
    plist = list(partitions_of(n))  # most dominated first, 1^n at index 0
    # p-basis expansion of each m_mu (rational, promoted to the field)
    m_in_p = {mu: m_to_p({mu: field.one}, n, field) for mu in plist}
    alpha = field.alpha

    def pairing(f, g):
        return hall_inner_alpha(f, g, field, alpha)

    built = []  # (lam, p-vec, norm)
    out = {}
    for lam in plist:
        vec = dict(m_in_p[lam])
        for (mu, jvec, nrm) in built:
            c = pairing(vec, jvec)
            if c:
                f = c / nrm
                for k, v in jvec.items():
                    w = vec.get(k)
                    w = -f * v if w is None else w - f * v
                    if w:
                        vec[k] = w
                    elif k in vec:
                        del vec[k]
        nrm = pairing(vec, vec)
        if not nrm:
            raise JackLaxError("Gram-Schmidt degenerated at %s" % (lam,))
        built.append((lam, vec, nrm))
        # normalize [m_{1^n}] J = n!
        plist_n, P2M, _ = monomial_powersum_transition(n)
        col = plist_n.index((1,) * n)
        idx = {mu: i for i, mu in enumerate(plist_n)}
        lead = field.zero
        for mu, c in vec.items():
            q = P2M[idx[mu]][col]
            if q:
                lead = lead + c * field.from_fraction(q)
        if not lead:
            raise JackLaxError("vanishing m_{1^n} coefficient at %s" % (lam,))
        scale = field.num(factorial(n)) / lead
        out[lam] = {k: v * scale for k, v in vec.items()}
    return out


def jack_integral(field, lam):
    """Single integral Jack J_lam in the p-basis (computed with its degree)."""
    return compute_integral_jacks(field, sum(lam))[lam]


def jack_homogeneous(field, lam):
    """Single homogeneous Jack j_lam as a FockVec."""
    return homogenize(field, jack_integral(field, lam), sum(lam))


def homogenize(field, pvec, n):
    """j = (-e1)^n J(p -> (-e1)^{-1} V): FockVec from a p-basis dict."""
    me1 = -field.e1
    return {mu: c * me1 ** (n - len(mu)) for mu, c in pvec.items()}


def compute_homogeneous_jacks(field, n):
    return {lam: homogenize(field, pvec, n)
            for lam, pvec in compute_integral_jacks(field, n).items()}


def varpi(field, lam):
    """Product of contents over all boxes but (0,0); the V_n coefficient."""
    val = field.one
    for b in boxes_x(lam):
        val = val * field.lf(b)
    return val


def jack_norm_sq(field, lam):
    """Stanley's hook-product norm |j_lam|^2."""
    val = field.one
    for h in hooks_upper(lam):
        val = val * field.lf(h)
    for h in hooks_lower(lam):
        val = val * field.lf(h)
    return val


def principal_specialization(f, field):
    """Substitute V_k -> z for all k: {z-degree: scalar} from a FockVec."""
    out = {}
    for mu, c in f.items():
        d = len(mu)
        w = out.get(d)
        w = c if w is None else w + c
        if w:
            out[d] = w
        elif d in out:
            del out[d]
    return out


def content_product_poly(field, lam):
    """Coefficients {degree: scalar} of prod_{b in lam} (z + [b])."""
    coeffs = {0: field.one}
    for b in boxes(lam):
        v = field.lf(b)
        new = {}
        for d, c in coeffs.items():
            new[d + 1] = new.get(d + 1, field.zero) + c
            if v:
                new[d] = new.get(d, field.zero) + c * v
        coeffs = {d: c for d, c in new.items() if c}
    return coeffs


# ---------------------------------------------------------------------------
# Stanley's Pieri rule for multiplication by j_{1^r}
# ---------------------------------------------------------------------------

def _strip_rows(lam, mu):
    """Rows met by lam/mu, or None if not a one-box-per-row strip."""
    if not contains(lam, mu):
        return None
    rows = []
    for i in range(len(lam)):
        a = lam[i]
        b = mu[i] if i < len(mu) else 0
        if a - b > 1:
            return None
        if a - b == 1:
            rows.append(i)
    return rows


def pieri_stanley(field, r, mu):
    """{lam: c_{1^r, mu}^lam} over all valid strips lam/mu.

    The strip convention (at most one box per row, i.e. adding a column
    shape) is fixed by the worked value c_{1^2,2}^{1^2 2} = -e2/(e1-e2).
    """
    if r < 1:
        raise JackLaxError("r must be >= 1")
    col = (1,) * r
    num_col = field.one
    for h in hooks_lower(col):
        num_col = num_col * field.lf(h)
    out = {}
    for lam in _strips_above(mu, r):
        rows = _strip_rows(lam, mu)
        val = num_col
        for b in boxes(mu):
            kind = "lower" if b[0] in rows else "upper"
            val = val * field.lf(_hook_form(mu, b, kind))
        for b in boxes(lam):
            kind = "lower" if b[0] in rows else "upper"
            val = val / field.lf(_hook_form(lam, b, kind))
        out[lam] = val
    return out


def _hook_form(lam, b, kind):
    a, l = arm(lam, b), leg(lam, b)
    return (l, -(a + 1)) if kind == "upper" else (l + 1, -a)


def _strips_above(mu, r):
    """All lam >= mu with |lam/mu| = r and at most one box per row."""
    from itertools import combinations
    out = set()
    existing = range(len(mu))
    for k in range(min(r, len(mu)) + 1):
        t = r - k  # new length-1 rows below
        for S in combinations(existing, k):
            rows = [mu[i] + (1 if i in S else 0) for i in existing]
            rows += [1] * t
            if all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
                lam = tuple(x for x in rows if x)
                if _strip_rows(lam, mu) is not None:
                    out.add(lam)
    return sorted(out)
