"""Lattice-of-subspaces criteria for two-degree presentations (S = {a, b}).

All spaces are TensorSubspaces of a fixed V^(n).  Every check returns a
small dict ``{"ok": bool, ...}`` carrying the failing degree and an explicit
word vector when it fails.
"""

from __future__ import annotations

from . import tensor as ts
from .koszul import JFamily, Verdict, n_map
from .linalg import LinalgError, Subspace, span_sum
from .presentation import Presentation
from .tensor import DEFAULT_AMBIENT_CAP, TensorSubspace, index_word


class NotApplicable(ValueError):
    pass


class Spaces:
    """Memoized building blocks V^(j) (x) R_s (x) V^(m), I_n, bar J and sums."""

    def __init__(self, pres: Presentation, cap: int | None = DEFAULT_AMBIENT_CAP):
        self.p = pres
        self.cap = cap
        self.fam = JFamily(pres, cap)
        self._cache: dict = {}

    def _memo(self, key, fn):
        v = self._cache.get(key)
        if v is None:
            v = fn()
            self._cache[key] = v
        return v

    def zero(self, n):
        return self._memo(("0", n), lambda: ts.zero(self.p.d, n, self.p.field, self.cap))

    def full(self, n):
        if n < 0:
            raise ValueError("negative degree")
        return self._memo(("V", n), lambda: ts.full(self.p.d, n, self.p.field, self.cap))

    def rel(self, s):
        return self.p.rel(s)

    def sand(self, j: int, s: int, m: int) -> TensorSubspace:
        """V^(j) (x) R_s (x) V^(m), zero if j or m is negative."""
        n = j + s + m
        if j < 0 or m < 0:
            return self.zero(n)
        return self._memo(("S", j, s, m), lambda: ts.sandwich(j, self.rel(s), m, self.cap))

    def sand_sum(self, s: int, n: int, lo: int, hi: int) -> TensorSubspace:
        """sum_{j=lo}^{hi} V^(j) (x) R_s (x) V^(n-s-j), empty terms dropped."""
        lo2, hi2 = max(lo, 0), min(hi, n - s)
        if n < 0:
            raise ValueError("negative degree")
        if lo2 > hi2:
            return self.zero(n)
        return self._memo(("SS", s, n, lo2, hi2), lambda: ts.tensor_sum(
            [self.sand(j, s, n - s - j) for j in range(lo2, hi2 + 1)],
            self.p.d, n, self.p.field, self.cap))

    def ideal(self, n: int) -> TensorSubspace:
        def build():
            parts = [self.sand_sum(s, n, 0, n - s) for s in self.p.degrees if s <= n]
            return ts.tensor_sum(parts, self.p.d, n, self.p.field, self.cap)
        return self._memo(("I", n), build)

    def bar(self, s: int, m: int) -> TensorSubspace:
        return self.fam.bar(s, m)

    def embed(self, u: TensorSubspace, w: TensorSubspace) -> TensorSubspace:
        if u.dim == 0 or w.dim == 0:
            return self.zero(u.n + w.n)
        return ts.tensor_embed(u, w, self.cap)

    def left_full(self, j: int, w: TensorSubspace) -> TensorSubspace:
        """V^(j) (x) w, zero for negative j."""
        if j < 0:
            return self.zero(j + w.n)
        return self.embed(self.full(j), w)

    def right_full(self, w: TensorSubspace, m: int) -> TensorSubspace:
        if m < 0:
            return self.zero(w.n + m)
        return self.embed(w, self.full(m))

    def add(self, *spaces) -> TensorSubspace:
        n = spaces[0].n
        return ts.tensor_sum(spaces, self.p.d, n, self.p.field, self.cap)


def _words(t: TensorSubspace, vec: dict) -> dict:
    return {index_word(i, t.n, t.d): a for i, a in vec.items()}


def _space(x):
    return x.space if isinstance(x, TensorSubspace) else x


def _sum(spaces, like):
    spaces = [_space(s) for s in spaces]
    amb = _space(like).ambient
    field = _space(like).field
    for s in spaces:
        if s.ambient != amb:
            raise LinalgError("ambient mismatch")
    return span_sum(spaces, amb, field)


def distributive(e, fs) -> bool:
    """E meet (sum F_j) equals sum (E meet F_j)."""
    return distributive_report(e, fs)["ok"]


def distributive_report(e, fs) -> dict:
    es = _space(e)
    fs_s = [_space(f) for f in fs]
    for f in fs_s:
        if f.ambient != es.ambient:
            raise LinalgError("ambient mismatch")
    if not fs_s:
        return {"ok": True}
    lhs = es.intersect(_sum(fs_s, es))
    rhs = _sum([es.intersect(f) for f in fs_s], es)
    if lhs.dim == rhs.dim:
        return {"ok": True}
    w = rhs.first_outside(lhs)
    return {"ok": False, "lhs_dim": lhs.dim, "rhs_dim": rhs.dim, "witness": w}


def bidistributive(e, e2, fs, gs) -> bool:
    return bidistributive_report(e, e2, fs, gs)["ok"]


def bidistributive_report(e, e2, fs, gs) -> dict:
    """(E + E') meet (sum F + sum G) equals sum(E meet F) + sum(E' meet G), with E meet E' = 0."""
    es, e2s = _space(e), _space(e2)
    if es.ambient != e2s.ambient:
        raise LinalgError("ambient mismatch")
    meet = es.intersect(e2s)
    if meet.dim:
        return {"ok": False, "reason": "E and E' intersect", "witness": meet.rows[0]}
    allfg = [_space(x) for x in list(fs) + list(gs)]
    lhs = es.sum(e2s).intersect(_sum(allfg, es)) if allfg else Subspace.zero(es.ambient, es.field)
    rhs = _sum([es.intersect(_space(f)) for f in fs] + [e2s.intersect(_space(g)) for g in gs], es)
    if lhs.dim == rhs.dim:
        return {"ok": True}
    return {"ok": False, "lhs_dim": lhs.dim, "rhs_dim": rhs.dim,
            "witness": rhs.first_outside(lhs)}


def crossed_inclusion_form(e, e2, fs, gs) -> bool:
    """The equivalent five-part condition for bidistributivity (given E meet E' = 0)."""
    es, e2s = _space(e), _space(e2)
    fg = [_space(x) for x in list(fs) + list(gs)]
    total = _sum(fg, es) if fg else Subspace.zero(es.ambient, es.field)
    if not distributive(total, [es, e2s]):
        return False
    if fg and not (distributive(es, fg) and distributive(e2s, fg)):
        return False
    ef = _sum([es.intersect(_space(f)) for f in fs], es)
    eg = _sum([es.intersect(_space(g)) for g in gs], es)
    e2f = _sum([e2s.intersect(_space(f)) for f in fs], es)
    e2g = _sum([e2s.intersect(_space(g)) for g in gs], es)
    return ef.contains(eg) and e2g.contains(e2f)


def _inclusion(sp: Spaces, lhs: TensorSubspace, rhs: TensorSubspace, label: str, n: int) -> dict:
    w = rhs.first_outside(lhs)
    if w is None:
        return {"ok": True}
    return {"ok": False, "clause": label, "n": n, "witness": _words(lhs, w)}


def _two_degrees(p: Presentation):
    degs = p.degrees
    if len(degs) != 2:
        raise NotApplicable(f"lattice criteria need exactly two relation degrees, got {degs}")
    return degs


# ---------------------------------------------------------------------------
# extra conditions

def extra_condition(sp: Spaces, s: int, h: int) -> dict:
    """(V^(h) R_s) meet sum_{j<h} V^(j) R_s V^(h-j)  inside  V^(h-1) (x) bar J^s_(s+1)."""
    n = h + s
    if h < 1:
        return {"ok": True}
    lhs = sp.sand(h, s, 0).intersect(sp.sand_sum(s, n, 0, h - 1))
    rhs = sp.left_full(h - 1, sp.bar(s, s + 1))
    return _inclusion(sp, lhs, rhs, f"e.c. for R_{s} at {h}", n)


def extra_conditions(p: Presentation, cap=DEFAULT_AMBIENT_CAP, sp: Spaces | None = None) -> dict:
    """The e.c. at l = a-1 and h = b-1 (one entry per relation degree)."""
    sp = sp or Spaces(p, cap)
    out = {}
    for s in p.degrees:
        out[s] = extra_condition(sp, s, s - 1)
    out["ok"] = all(v["ok"] for k, v in out.items() if k != "ok")
    return out


def ec_distributive_form(p: Presentation, cap=DEFAULT_AMBIENT_CAP, sp: Spaces | None = None) -> bool:
    """Equivalent form of the e.c.: triple distributivity plus crossing inclusions."""
    sp = sp or Spaces(p, cap)
    for s in p.degrees:
        for m in range(2, s):
            n = m + s
            e = sp.sand(m, s, 0)
            f = sp.sand(0, s, m)
            g = sp.sand_sum(s, n, 1, m - 1)
            if not distributive(e, [f, g]):
                return False
            if not sp.sand(m - 1, s, 1).contains(e.intersect(f)):
                return False
    return True


def crossing_equalities(p: Presentation, cap=DEFAULT_AMBIENT_CAP, sp: Spaces | None = None) -> bool:
    """(V^(m) R_s) meet (R_s V^(m)) equals bar J^s_(s+m) for 2 <= m <= s-1."""
    sp = sp or Spaces(p, cap)
    for s in p.degrees:
        for m in range(2, s):
            if sp.sand(m, s, 0).intersect(sp.sand(0, s, m)) != sp.bar(s, s + m):
                return False
    return True


# ---------------------------------------------------------------------------
# Ker(delta_2)

def build_tuple2(p: Presentation, n: int, cap=DEFAULT_AMBIENT_CAP, sp: Spaces | None = None) -> dict:
    a, b = _two_degrees(p)
    sp = sp or Spaces(p, cap)
    return {
        "E'": sp.left_full(n - a, sp.rel(a)),
        "G'": sp.sand_sum(a, n, n - 2 * a + 1, n - a - 1),
        "F'": sp.add(sp.sand_sum(a, n, 0, n - 2 * a), sp.sand_sum(b, n, 0, n - a - b)),
        "E''": sp.left_full(n - b, sp.rel(b)),
        "G''": sp.sand_sum(b, n, n - 2 * b + 1, n - b - 1),
        "F''": sp.add(sp.sand_sum(a, n, 0, n - a - b), sp.sand_sum(b, n, 0, n - 2 * b)),
    }


def check2(p: Presentation, n_max: int, cap=DEFAULT_AMBIENT_CAP, sp: Spaces | None = None) -> dict:
    """(2,2)-bidistributivity of (E', E'', F', G', F'', G'') for a+1 <= n <= n_max."""
    a, b = _two_degrees(p)
    sp = sp or Spaces(p, cap)
    for n in range(a + 1, n_max + 1):
        t = build_tuple2(p, n, cap, sp)
        r = bidistributive_report(t["E'"], t["E''"], [t["F'"], t["G'"]], [t["F''"], t["G''"]])
        if not r["ok"]:
            w = r.get("witness")
            return {"ok": False, "clause": "(2,2)-bidistributivity", "n": n,
                    "witness": _words(t["E'"], w) if w else None,
                    "detail": {k: v for k, v in r.items() if k != "witness"}}
    return {"ok": True}


# ---------------------------------------------------------------------------
# Ker(delta_i), i >= 3

def build_tupleI(p: Presentation, s: int, i: int, n: int, cap=DEFAULT_AMBIENT_CAP,
                 sp: Spaces | None = None) -> dict:
    a, b = _two_degrees(p)
    if i < 3:
        raise ValueError("tuples are defined for i >= 3")
    sp = sp or Spaces(p, cap)
    ns_i, ns_im1 = n_map(s, i), n_map(s, i - 1)
    out = {
        "E": sp.left_full(n - ns_i, sp.bar(s, ns_i)) if n >= ns_i else sp.zero(n),
        "F": sp.right_full(sp.ideal(n - ns_i), ns_i) if n >= ns_i else sp.zero(n),
    }
    for t in (a, b):
        out[f"G_{t}"] = sp.sand_sum(t, n, n - ns_i - t + 1, n - ns_im1 - t)
    return out


def x_space(sp: Spaces, s: int, m: int, s2: int) -> TensorSubspace:
    """X^{s,m}_{s'} = (V^(m) R_s) meet sum_{j=0}^{m+s-s'-1} V^(j) R_{s'} V^(m+s-s'-j)."""
    n = m + s
    return sp.sand(m, s, 0).intersect(sp.sand_sum(s2, n, 0, m + s - s2 - 1))


def theorem_inclusion(p: Presentation, i: int, n: int | None = None, cap=DEFAULT_AMBIENT_CAP,
                      sp: Spaces | None = None) -> dict:
    """The a-side inclusion for step i (even: at degree n; odd: at n = n_a(i)+b-1)."""
    a, b = _two_degrees(p)
    sp = sp or Spaces(p, cap)
    na = lambda k: n_map(a, k)  # noqa: E731
    if i % 2 == 0:
        m = n - na(i)
        e = sp.left_full(m, sp.bar(a, na(i)))
        lhs = e.intersect(sp.right_full(x_space(sp, a, m, b), na(i - 2)))
        rhs = sp.add(sp.left_full(n - na(i + 1), sp.bar(a, na(i + 1))),
                     sp.embed(sp.ideal(m), sp.bar(a, na(i))))
        return _inclusion(sp, lhs, rhs, f"even inclusion i={i}", n)
    n = na(i) + b - 1
    e = sp.left_full(b - 1, sp.bar(a, na(i)))
    cross = sp.sand(b - 1, a, 0).intersect(sp.sand(0, b, a - 1))
    lhs = e.intersect(sp.right_full(cross, na(i - 2)))
    rhs = sp.add(sp.left_full(b - a, sp.bar(a, na(i + 1))),
                 sp.embed(sp.ideal(b - 1), sp.bar(a, na(i))))
    return _inclusion(sp, lhs, rhs, f"odd inclusion i={i} (s,s')=(a,b)", n)


def checkI(p: Presentation, i_max: int, n_max: int, cap=DEFAULT_AMBIENT_CAP,
           sp: Spaces | None = None, i_min: int = 3) -> dict:
    """Distributivity of (E^s, F^s, G^s_a, G^s_b) and the a-side inclusions for
    3 <= i <= i_max, degrees up to n_max."""
    a, b = _two_degrees(p)
    sp = sp or Spaces(p, cap)
    for i in range(i_min, i_max + 1):
        checks = []
        for s in (a, b):
            for n in range(n_map(s, i), n_max + 1):
                checks.append((n, "dist", s))
        if i % 2 == 0:
            lo, hi = n_map(a, i - 1) + b, n_map(a, i) + b - 1
            for n in range(lo, min(hi, n_max) + 1):
                checks.append((n, "incl", None))
        else:
            n = n_map(a, i) + b - 1
            if n <= n_max:
                checks.append((n, "incl", None))
        checks.sort(key=lambda c: (c[0], c[1] != "dist"))
        for n, kind, s in checks:
            if kind == "dist":
                t = build_tupleI(p, s, i, n, cap, sp)
                r = distributive_report(t["E"], [t["F"], t[f"G_{a}"], t[f"G_{b}"]])
                if not r["ok"]:
                    w = r.get("witness")
                    return {"ok": False, "clause": f"distributivity s={s} i={i}", "i": i, "n": n,
                            "witness": _words(t["E"], w) if w else None}
            else:
                r = theorem_inclusion(p, i, n, cap, sp)
                if not r["ok"]:
                    r["i"] = i
                    return r
    return {"ok": True}


def theorem5_verdict(p: Presentation, n_max: int = 10, i_max: int = 6,
                     cap=DEFAULT_AMBIENT_CAP) -> Verdict:
    """Conjunction of the e.c., (2,2)-bidistributivity and the step-i clauses.

    Ker(delta_i) controls Tor_(i+1), so steps up to i_max - 1 are checked to
    match a Tor comparison with the same bounds.
    """
    a, b = _two_degrees(p)
    sp = Spaces(p, cap)
    clauses = {}
    ec = extra_conditions(p, cap, sp)
    clauses["e.c."] = ec
    fail = None
    if not ec["ok"]:
        s = a if not ec[a]["ok"] else b
        fail = dict(ec[s], i=2)
    if fail is None:
        r2 = check2(p, n_max, cap, sp)
        clauses["Ker delta_2"] = r2
        if not r2["ok"]:
            fail = dict(r2, i=2)
    if fail is None:
        ri = checkI(p, i_max - 1, n_max, cap, sp)
        clauses["Ker delta_i"] = ri
        if not ri["ok"]:
            fail = ri
    if fail is None:
        v = Verdict(True, "lattice", n_max, i_max)
    else:
        v = Verdict(False, "lattice", n_max, i_max, False, fail.get("i"), fail.get("n"),
                    witness=fail.get("witness"))
        v.details["clause"] = fail.get("clause")
    v.details["clauses"] = clauses
    v.details["odd_inclusion_reading"] = "(s, s') = (a, b)"
    return v


# ---------------------------------------------------------------------------
# monomial certificate

def incimp_inclusions(p: Presentation, cap=DEFAULT_AMBIENT_CAP, sp: Spaces | None = None) -> dict:
    a, b = _two_degrees(p)
    sp = sp or Spaces(p, cap)
    for m in range(b - a + 1, b):
        n = m + a
        lhs = sp.sand(m, a, 0).intersect(sp.sand_sum(b, n, 0, m + a - b - 1))
        rhs = sp.add(sp.left_full(m - 1, sp.bar(a, a + 1)), sp.embed(sp.ideal(m), sp.rel(a)))
        r = _inclusion(sp, lhs, rhs, f"R_a-side inclusion m_a={m}", n)
        if not r["ok"]:
            return r
    for m in range(1, a):
        n = m + b
        lhs = sp.sand(m, b, 0).intersect(sp.sand_sum(a, n, 0, m + b - a - 1))
        rhs = sp.left_full(m - 1, sp.bar(b, b + 1))
        r = _inclusion(sp, lhs, rhs, f"R_b-side inclusion m_b={m}", n)
        if not r["ok"]:
            return r
    return {"ok": True}


def monomial_verdict(p: Presentation, cap=DEFAULT_AMBIENT_CAP) -> Verdict:
    """Exact answer for monomial two-degree presentations: e.c. plus the finite
    inclusion families."""
    _two_degrees(p)
    if not p.is_monomial():
        raise NotApplicable("monomial_verdict needs every relation to be a single word")
    sp = Spaces(p, cap)
    ec = extra_conditions(p, cap, sp)
    fail = None
    if not ec["ok"]:
        fail = next(v for k, v in ec.items() if k != "ok" and not v["ok"])
    else:
        r = incimp_inclusions(p, cap, sp)
        if not r["ok"]:
            fail = r
    if fail is None:
        v = Verdict(True, "monomial_exact", exact=True)
    else:
        v = Verdict(False, "monomial_exact", exact=True, n=fail.get("n"), witness=fail.get("witness"))
        v.details["clause"] = fail.get("clause")
    return v


def distributes_with(basis, subspaces) -> bool:
    """True iff ``basis`` (word indices or word vectors) meets every subspace in a basis of it."""
    subspaces = [_space(s) for s in subspaces]
    if not subspaces:
        return True
    amb = subspaces[0].ambient
    field = subspaces[0].field
    vecs = []
    for b in basis:
        vecs.append({b: 1} if isinstance(b, int) else dict(b))
    bsp = Subspace(amb, vecs, field)
    if bsp.dim != amb or len(vecs) != amb:
        raise LinalgError("not a basis of the ambient space")
    for w in subspaces:
        if w.ambient != amb:
            raise LinalgError("ambient mismatch")
        inside = [v for v in vecs if w.contains_vector(v)]
        if Subspace(amb, inside, field).dim != w.dim:
            return False
    return True
