"""Workspace: a coefficient field plus all per-degree caches.

Everything downstream (Lax eigenfunctions, traces, LR tables) is computed
through a Workspace so that symbolic and specialized runs share one code
path.  Caches are append-only behind a re-entrant lock; cached values are
immutable.
"""

import json
import os
import threading

from .arith import (DEFAULT_SPEC_POINTS, SpecializedField, SymbolicField,
                    parse_scalar, render_scalar)
from .fock import inner_hbar, vector_to_coords
from .jack import compute_homogeneous_jacks, jack_norm_sq, varpi
from .linalg import invert, matvec
from .partitions import (add_set, format_partition, parse_partition,
                         partitions_of)


def _cache_env_dir():
    return os.environ.get("JACKLAX_CACHE_DIR")


class Workspace:
    def __init__(self, field=None, cache_dir=None):
        self.field = field if field is not None else SymbolicField()
        self.cache_dir = cache_dir if cache_dir is not None else _cache_env_dir()
        self._lock = threading.RLock()
        self._jack = {}     # degree -> {lam: FockVec}
        self._norm = {}     # degree -> {lam: scalar}
        self._varpi = {}    # degree -> {lam: scalar}
        self._psi = {}      # (lam, s) -> ExtVec
        self._psi_solver = {}   # degree -> (pairs, inverse matrix)

    # ------------------------------------------------------------------
    # Jack basis with optional disk cache
    # ------------------------------------------------------------------

    def _cache_path(self, n):
        if not self.cache_dir:
            return None
        return os.path.join(self.cache_dir, "jack_%02d_%s.json" % (n, _slug(self.field.key())))

    def jack_degree(self, n):
        with self._lock:
            if n in self._jack:
                return self._jack[n]
            data = self._load_degree(n)
            if data is None:
                jacks = compute_homogeneous_jacks(self.field, n)
                norms = {lam: jack_norm_sq(self.field, lam) for lam in jacks}
                vps = {lam: varpi(self.field, lam) for lam in jacks}
                self._store_degree(n, jacks, norms, vps)
            else:
                jacks, norms, vps = data
            self._jack[n] = jacks
            self._norm[n] = norms
            self._varpi[n] = vps
            return jacks

    def _load_degree(self, n):
        path = self._cache_path(n)
        if not path or not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                blob = json.load(fh)
            if blob.get("degree") != n or blob.get("mode") != self.field.key():
                raise ValueError("cache key mismatch")
            jacks, norms, vps = {}, {}, {}
            for lam_s, entry in blob["jacks"].items():
                lam = parse_partition(lam_s)
                jacks[lam] = {parse_partition(t["partition"]): parse_scalar(t["coeff"], self.field)
                              for t in entry}
                norms[lam] = parse_scalar(blob["norms"][lam_s], self.field)
                vps[lam] = parse_scalar(blob["varpi"][lam_s], self.field)
            return jacks, norms, vps
        except Exception:
            # corrupt cache: rebuild
            import sys
            print("warning: corrupt cache file %s; rebuilding" % path, file=sys.stderr)
            try:
                os.remove(path)
            except OSError:
                pass
            return None

    def _store_degree(self, n, jacks, norms, vps):
        path = self._cache_path(n)
        if not path:
            return
        os.makedirs(os.path.dirname(path), exist_ok=True)
        blob = {"degree": n, "mode": self.field.key(), "jacks": {}, "norms": {}, "varpi": {}}
        for lam in sorted(jacks, key=lambda l: l):
            key = format_partition(lam)
            blob["jacks"][key] = [
                {"w": 0, "partition": format_partition(mu), "coeff": render_scalar(c)}
                for mu, c in sorted(jacks[lam].items())
            ]
            blob["norms"][key] = render_scalar(norms[lam])
            blob["varpi"][key] = render_scalar(vps[lam])
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(blob, fh, sort_keys=True)
        os.replace(tmp, path)

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    def jack(self, lam):
        return self.jack_degree(sum(lam))[lam]

    def jack_hat(self, lam):
        vp = self.varpi(lam)
        return {mu: c / vp for mu, c in self.jack(lam).items()}

    def norm_sq(self, lam):
        self.jack_degree(sum(lam))
        return self._norm[sum(lam)][lam]

    def norm_sq_hat(self, lam):
        vp = self.varpi(lam)
        return self.norm_sq(lam) / (vp * vp)

    def varpi(self, lam):
        self.jack_degree(sum(lam))
        return self._varpi[sum(lam)][lam]

    def expand_in_jacks(self, f):
        """FockVec -> {lam: coeff} via the diagonal V-monomial pairing."""
        if not f:
            return {}
        degs = {sum(mu) for mu in f}
        out = {}
        for n in degs:
            part = {mu: c for mu, c in f.items() if sum(mu) == n}
            for lam in partitions_of(n):
                c = inner_hbar(part, self.jack(lam), self.field)
                if c:
                    out[lam] = c / self.norm_sq(lam)
        return out

    # ------------------------------------------------------------------
    # Lax eigenfunctions (filled in by jacklax.lax to avoid an import cycle)
    # ------------------------------------------------------------------

    def psi(self, lam, s):
        from . import lax
        key = (lam, s)
        with self._lock:
            got = self._psi.get(key)
            if got is None:
                got = lax.compute_psi(self, lam, s)
                self._psi[key] = got
            return got

    def psi_hat(self, lam, s):
        from .fock import v_scale
        scale = self.field.one / self.pi_star_psi(lam, s)
        return v_scale(self.psi(lam, s), scale)

    def pi_star_psi(self, lam, s):
        """[w^n] psi_lam^s = [s] varpi_lam (is 1 for the vacuum)."""
        if not lam and s == (0, 0):
            return self.field.one
        return self.field.lf(s) * self.varpi(lam)

    def eigen_pairs(self, n):
        """Basis labels of H_n: all (lam |- n, s in add_set)."""
        out = []
        for lam in partitions_of(n):
            for s in add_set(lam):
                out.append((lam, s))
        return out

    def psi_hat_solver(self, n):
        """(pairs, M_inv) with M the matrix of psi-hat coordinates."""
        with self._lock:
            got = self._psi_solver.get(n)
            if got is None:
                pairs = self.eigen_pairs(n)
                cols = [vector_to_coords(self.psi_hat(lam, s), n, self.field)
                        for (lam, s) in pairs]
                M = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))]
                Minv = invert(M, self.field)
                got = (pairs, Minv)
                self._psi_solver[n] = got
            return got

    def expand_psi_hat(self, zeta):
        """Expand a homogeneous ExtVec in the psi-hat basis."""
        from .fock import degree_of
        if not zeta:
            return {}
        n = degree_of(zeta)
        pairs, Minv = self.psi_hat_solver(n)
        coords = vector_to_coords(zeta, n, self.field)
        sol = matvec(Minv, coords, self.field)
        return {pairs[i]: c for i, c in enumerate(sol) if c}

    def expand_psi(self, zeta):
        """Expansion in the unhatted psi basis."""
        out = {}
        for (lam, s), c in self.expand_psi_hat(zeta).items():
            out[(lam, s)] = c / self.pi_star_psi(lam, s)
        return out

    def warm(self, degree):
        """Precompute Jack and psi data up to the given degree."""
        for n in range(degree + 1):
            self.jack_degree(n)
            for lam, s in self.eigen_pairs(n):
                self.psi(lam, s)

    def cache_stat(self):
        out = {}
        if not self.cache_dir or not os.path.isdir(self.cache_dir):
            return out
        for name in sorted(os.listdir(self.cache_dir)):
            if name.startswith("jack_") and name.endswith(".json"):
                with open(os.path.join(self.cache_dir, name)) as fh:
                    blob = json.load(fh)
                out[name] = len(blob.get("jacks", {}))
        return out

    def cache_clear(self):
        n = 0
        if self.cache_dir and os.path.isdir(self.cache_dir):
            for name in list(os.listdir(self.cache_dir)):
                if name.startswith("jack_") and name.endswith(".json"):
                    os.remove(os.path.join(self.cache_dir, name))
                    n += 1
        return n


def _slug(s):
    return "".join(ch if ch.isalnum() else "_" for ch in s)


def symbolic_workspace(cache_dir=None):
    return Workspace(SymbolicField(), cache_dir)


def specialized_workspaces(points=None, cache_dir=None):
    points = DEFAULT_SPEC_POINTS if points is None else points
    return [Workspace(SpecializedField(p), cache_dir) for p in points]
