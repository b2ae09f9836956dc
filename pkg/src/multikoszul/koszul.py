"""Multi-Koszul complexes and verdicts.

For an S-multi-homogeneous presentation the spaces J_i live in degrees
n_s(i) (one component per s in S for i >= 2).  The left complex A (x) J_i,
its mirror J_i (x) A, and the bimodule complex A (x) J_i (x) A all share
one description of the differential: a word of J_i loses letters from the
left (delta'_L) or the right (delta'_R).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from . import tensor as ts
from .algebra import GradedAlgebra
from .linalg import Echelon, Subspace, axpy, kernel_vectors
from .presentation import Presentation, opposite, single_degree
from .resolution import (AlgebraModule, FreeMap, FreeModule, minimal_resolution,
                         global_dimension)
from .tensor import DEFAULT_AMBIENT_CAP, TensorSubspace, word_index


def n_map(s: int, i: int) -> int:
    """n_s(2l) = s*l and n_s(2l+1) = s*l + 1."""
    if i < 0:
        raise ValueError("negative homological degree")
    return s * (i // 2) + (i % 2)


class JFamily:
    """The spaces bar J^s_m and J_i of a presentation, memoized."""

    def __init__(self, pres: Presentation, cap: int | None = DEFAULT_AMBIENT_CAP,
                 n_limit: int | None = None):
        self.pres = pres
        self.cap = cap
        self.n_limit = n_limit      # blocks above this internal degree are left out
        self._bar: dict = {}

    def bar(self, s: int, m: int) -> TensorSubspace:
        """bar J^s_m: V^(m) for m < s, else the intersection of all placements of R_s."""
        key = (s, m)
        if key in self._bar:
            return self._bar[key]
        p = self.pres
        if m < s:
            out = ts.full(p.d, m, p.field, self.cap)
        elif m == s:
            out = p.rel(s)
        else:
            prev = self.bar(s, m - 1)
            left = ts.tensor_embed(prev, ts.full(p.d, 1, p.field, self.cap), self.cap)
            if left.dim:
                right = ts.sandwich(m - s, p.rel(s), 0, self.cap)
                out = left.intersect(right)
            else:
                out = ts.zero(p.d, m, p.field, self.cap)
        self._bar[key] = out
        return out

    def blocks(self, i: int) -> list:
        """Components of J_i as ``[(s, m, TensorSubspace)]``; s is None for i < 2."""
        p = self.pres
        if i == 0:
            return [(None, 0, ts.full(p.d, 0, p.field, self.cap))]
        if i == 1:
            return [(None, 1, ts.full(p.d, 1, p.field, self.cap))]
        out = []
        for s in p.degrees:
            m = n_map(s, i)
            if self.n_limit is not None and m > self.n_limit:
                continue
            b = self.bar(s, m)
            if b.dim:
                out.append((s, m, b))
        return out

    def graded_dims(self, i: int) -> dict:
        out: dict = {}
        for _, m, b in self.blocks(i):
            out[m] = out.get(m, 0) + b.dim
        return out

    def target_block(self, i: int, s) -> int | None:
        """Index of the component of J_(i-1) receiving the s-component of J_i."""
        if i <= 2:
            return 0
        for k, (t, _, _) in enumerate(self.blocks(i - 1)):
            if t == s:
                return k
        return None


def compute_J(pres: Presentation, i_max: int, cap=DEFAULT_AMBIENT_CAP) -> dict:
    """``{i: {s: TensorSubspace}}`` for 0 <= i <= i_max (s is None for i < 2)."""
    fam = JFamily(pres, cap)
    return {i: {s: b for s, _, b in fam.blocks(i)} for i in range(i_max + 1)}


def expansion(fam: JFamily, i: int, block: tuple, vec: dict, mode: str = "bimodule") -> dict:
    """Differential of the bimodule complex applied to ``1 (x) vec (x) 1``.

    ``vec`` is a word vector in the block's space.  Returns
    ``{(left word, right word, target block): target coordinates}``.
    ``mode`` keeps only the terms surviving in the left complex (no letters
    moved right), the right complex, or all of them.
    """
    s, m, _ = block
    field = fam.pres.field
    p = field.p
    if i % 2:
        k = 1
        terms = [(1, 1), (0, -1)]
    else:
        k = s - 1
        terms = [(t, 1) for t in range(s)]
    if mode == "left":
        terms = [(t, c) for t, c in terms if t == k]
    elif mode == "right":
        terms = [(t, c) for t, c in terms if t == 0]
    tb = fam.target_block(i, s)
    if tb is None:
        return {}
    tblock = fam.blocks(i - 1)[tb]
    tspace = tblock[2].space
    acc: dict = {}
    for w, a in vec.items():
        for t, sign in terms:
            left, mid, right = w[:t], w[t:m - (k - t)], w[m - (k - t):]
            key = (left, right)
            dv = acc.setdefault(key, {})
            idx = word_index(mid, fam.pres.d)
            c = dv.get(idx, 0) + sign * a
            if p:
                c %= p
            if c:
                dv[idx] = c
            else:
                dv.pop(idx, None)
    out = {}
    for (left, right), dv in acc.items():
        if dv:
            coords = tspace.coordinates(dv)
            if coords:
                out[(left, right, tb)] = coords
    return out


def basis_words(block) -> list:
    return block[2].word_vectors()


# ---------------------------------------------------------------------------
# complexes

@dataclass
class Complex:
    """A complex of graded vector spaces, given degreewise by matrix rows."""

    kind: str
    i_max: int
    n_max: int
    dims: dict = dc_field(default_factory=dict)      # (i, n) -> dim
    _rows: object = None                              # callable (i, n) -> rows of delta_i
    aug_rank: object = None                           # callable n -> rank of augmentation
    field: object = None

    def rows(self, i: int, n: int) -> list:
        return self._rows(i, n)


class LeftKoszul:
    """A (x) J_i as free left modules with the multi-Koszul differential."""

    def __init__(self, alg: GradedAlgebra, fam: JFamily, i_max: int, mode: str = "left"):
        self.alg = alg
        self.fam = fam
        self.i_max = i_max
        self.mods = []
        self.maps = []
        for i in range(i_max + 1):
            blocks = fam.blocks(i)
            degs, labels = [], []
            for b_idx, (s, m, b) in enumerate(blocks):
                for j in range(b.dim):
                    degs.append(m)
                    labels.append((b_idx, j))
            self.mods.append(FreeModule(alg, degs, labels))
        p = alg.field.p
        for i in range(1, i_max + 1):
            src, tgt = self.mods[i], self.mods[i - 1]
            tgt_index = {lab: g for g, lab in enumerate(tgt.labels)}
            images = []
            blocks = fam.blocks(i)
            for g, (b_idx, j) in enumerate(src.labels):
                block = blocks[b_idx]
                vec = block[2].word_vectors()[j]
                img: dict = {}
                for (left, right, tb), coords in expansion(fam, i, block, vec, mode).items():
                    nf = alg.normal_form(left)
                    for jj, c in coords.items():
                        tg = tgt_index[(tb, jj)]
                        base = tgt.offsets(src.degrees[g])[tg]
                        for u, a in nf.items():
                            axpy(img, c * a, {base + u: 1}, p)
                images.append(img)
            self.maps.append(FreeMap(src, tgt, images))

    def dim(self, i: int, n: int) -> int:
        return self.mods[i].dim(n)

    def rows(self, i: int, n: int) -> list:
        return self.maps[i - 1].rows(n)


def build_complex(pres: Presentation, kind: str = "left", n_max: int = 10, i_max: int = 6,
                  alg: GradedAlgebra | None = None, cap=DEFAULT_AMBIENT_CAP):
    """Left, right or bimodule multi-Koszul complex, truncated."""
    if kind == "right":
        # J_i (x) A for A is the mirror of A° (x) J_i(A°)
        return build_complex(opposite(pres), "left", n_max, i_max, None, cap)
    if alg is None:
        alg = GradedAlgebra(pres, n_max, cap)
    fam = JFamily(pres, cap, n_max)
    if kind == "left":
        lk = LeftKoszul(alg, fam, i_max)
        dims = {(i, n): lk.dim(i, n) for i in range(i_max + 1) for n in range(n_max + 1)}
        return Complex("left", i_max, n_max, dims, lk.rows, lambda n: 1 if n == 0 else 0,
                       pres.field)
    if kind == "bimodule":
        return BimoduleComplex(alg, fam, n_max, i_max).as_complex()
    raise ValueError(f"unknown complex kind {kind!r}")


class BimoduleComplex:
    """K_i = sum_s A (x) bar J^s_(n_s(i)) (x) A with delta_L - delta_R or the sum of
    mixed powers, augmented by multiplication A (x) A -> A."""

    def __init__(self, alg: GradedAlgebra, fam: JFamily, n_max: int, i_max: int):
        self.alg = alg
        self.fam = fam
        self.n_max = n_max
        self.i_max = i_max
        alg.extend(n_max)
        self._exp = {}
        for i in range(1, i_max + 1):
            lst = []
            for b_idx, block in enumerate(fam.blocks(i)):
                for j, vec in enumerate(block[2].word_vectors()):
                    lst.append((b_idx, j, expansion(fam, i, block, vec, "bimodule")))
            self._exp[i] = lst
        self._layout: dict = {}

    def layout(self, i: int, n: int):
        """``{(block, j, p): offset}`` and total dimension at (i, n)."""
        key = (i, n)
        if key in self._layout:
            return self._layout[key]
        alg = self.alg
        off = {}
        k = 0
        for b_idx, (s, m, b) in enumerate(self.fam.blocks(i)):
            for j in range(b.dim):
                for pdeg in range(n - m + 1):
                    q = n - m - pdeg
                    off[(b_idx, j, pdeg)] = k
                    k += alg.dim(pdeg) * alg.dim(q)
        self._layout[key] = (off, k)
        return off, k

    def dim(self, i: int, n: int) -> int:
        return self.layout(i, n)[1]

    def rows(self, i: int, n: int) -> list:
        alg = self.alg
        p = alg.field.p
        blocks = self.fam.blocks(i)
        toff, _ = self.layout(i - 1, n)
        out = []
        for b_idx, j, exp in self._exp[i]:
            m = blocks[b_idx][1]
            for pdeg in range(n - m + 1):
                q = n - m - pdeg
                dq = alg.dim(q)
                for iu in range(alg.dim(pdeg)):
                    for iv in range(dq):
                        row: dict = {}
                        for (left, right, tb), coords in exp.items():
                            lu = alg.mul_word({iu: 1}, pdeg, left)
                            if not lu:
                                continue
                            rv = alg.word_mul(right, {iv: 1}, q)
                            if not rv:
                                continue
                            p2 = pdeg + len(left)
                            q2 = q + len(right)
                            dq2 = alg.dim(q2)
                            for jj, c in coords.items():
                                base = toff[(tb, jj, p2)]
                                for a, x in lu.items():
                                    for bb, y in rv.items():
                                        kk = base + a * dq2 + bb
                                        val = row.get(kk, 0) + c * x * y
                                        if p:
                                            val %= p
                                        if val:
                                            row[kk] = val
                                        else:
                                            row.pop(kk, None)
                        out.append(row)
        return out

    def as_complex(self) -> Complex:
        dims = {(i, n): self.dim(i, n)
                for i in range(self.i_max + 1) for n in range(self.n_max + 1)}
        return Complex("bimodule", self.i_max, self.n_max, dims, self.rows,
                       lambda n: self.alg.dim(n), self.alg.field)


def square_zero(cx: Complex, n_max: int | None = None):
    """First (i, n) with delta_(i-1) delta_i != 0, or None."""
    p = cx.field.p
    n_max = cx.n_max if n_max is None else n_max
    for n in range(n_max + 1):
        for i in range(2, cx.i_max + 1):
            lower = cx.rows(i - 1, n)
            for r in cx.rows(i, n):
                acc: dict = {}
                for k, a in r.items():
                    axpy(acc, a, lower[k], p)
                if acc:
                    return (i, n)
    return None


@dataclass
class ExactnessReport:
    kind: str
    n_max: int
    i_max: int
    homology: dict            # (i, n) -> dim H_i at degree n
    exact: bool
    first_failure: tuple | None = None
    witness: dict | None = None
    seconds: float = 0.0


def check_exactness(cx: Complex, i_range=None, want_witness: bool = True) -> ExactnessReport:
    """Homology of the augmented complex at homological degrees 0..i_max-1.

    H_i at degree n is dim C_(i,n) - rank delta_i - rank delta_(i+1), with
    delta_0 the augmentation.
    """
    t0 = time.time()
    if i_range is None:
        i_range = range(0, cx.i_max)
    ranks: dict = {}

    def rk(i, n):
        if (i, n) not in ranks:
            if i == 0:
                ranks[(i, n)] = cx.aug_rank(n)
            else:
                e = Echelon(cx.field)
                for r in cx.rows(i, n):
                    if r:
                        e.add(r)
                ranks[(i, n)] = len(e)
        return ranks[(i, n)]

    hom = {}
    first = None
    witness = None
    for n in range(cx.n_max + 1):
        for i in i_range:
            h = cx.dims[(i, n)] - rk(i, n) - rk(i + 1, n)
            hom[(i, n)] = h
            if h and first is None:
                first = (i, n)
    if first is not None and want_witness and first[0] >= 1:
        i, n = first
        f = cx.field
        kern = Subspace(cx.dims[(i, n)], kernel_vectors(cx.rows(i, n), f), f)
        img = Subspace(cx.dims[(i, n)], cx.rows(i + 1, n), f)
        comp = kern.complement_in(img)
        witness = comp.rows[0] if comp.rows else None
    return ExactnessReport(cx.kind, cx.n_max, cx.i_max, hom, first is None, first, witness,
                           time.time() - t0)


# ---------------------------------------------------------------------------
# verdicts

@dataclass
class Verdict:
    multi_koszul: bool
    method: str
    n_max: int | None = None
    i_max: int | None = None
    exact: bool = False                 # finite certificate, no truncation
    i: int | None = None
    n: int | None = None
    tor_dim: int | None = None
    j_dim: int | None = None
    witness: object = None
    details: dict = dc_field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.multi_koszul:
            return "MultiKoszul" if self.exact else "MultiKoszulUpTo"
        return "NotMultiKoszul"

    def __str__(self):
        if self.multi_koszul:
            if self.exact:
                return f"MultiKoszul [{self.method}, exact]"
            return f"MultiKoszulUpTo(n={self.n_max}, i={self.i_max}) [{self.method}]"
        loc = ", ".join(f"{k}={v}" for k, v in (("i", self.i), ("n", self.n)) if v is not None)
        if "clause" in self.details:
            loc = f"{self.details['clause']}" + (f", {loc}" if loc else "")
        extra = f", tor={self.tor_dim}, J={self.j_dim}" if self.tor_dim is not None else ""
        return f"NotMultiKoszul({loc}{extra}) [{self.method}]"


def tor_vs_j(pres: Presentation, n_max: int = 10, i_max: int = 6, alg=None,
             early_stop: bool = False, cap=DEFAULT_AMBIENT_CAP):
    """Resolution of k and comparison of Tor_i with J_i; returns (verdict, resolution)."""
    if alg is None:
        alg = GradedAlgebra(pres, n_max, cap)
    fam = JFamily(pres, cap, n_max)
    jd = {i: fam.graded_dims(i) for i in range(i_max + 1)}

    def mismatch(i, n, count):
        return count != jd[i].get(n, 0)

    res = minimal_resolution(alg, None, n_max, i_max,
                             stop=mismatch if early_stop else None)
    verdict = Verdict(True, "tor_vs_J", res.n_max, i_max)
    for n in range(res.n_max + 1):
        for i in range(i_max + 1):
            t = res.betti.get(i, n)
            j = jd[i].get(n, 0)
            if t != j:
                if t > j:
                    gens = res.generators_at(i, n)
                    w = gens[0].words if gens else None
                else:
                    w = None
                    for s, m, b in fam.blocks(i):
                        if m == n:
                            w = b.word_vectors()[0]
                            break
                verdict = Verdict(False, "tor_vs_J", n_max, i_max, False, i, n, t, j, w)
                break
        if not verdict.multi_koszul:
            break
    verdict.details["betti"] = res.betti
    verdict.details["gldim"] = global_dimension(res)
    return verdict, res


def verdict_via_tor(pres: Presentation, n_max: int = 10, i_max: int = 6, **kw) -> Verdict:
    return tor_vs_j(pres, n_max, i_max, **kw)[0]


def verdict_via_complex(pres: Presentation, n_max: int = 10, i_max: int = 6,
                        kind: str = "left", alg=None, cap=DEFAULT_AMBIENT_CAP) -> Verdict:
    """Exactness of the truncated left (or bimodule) complex, degrees 1..i_max-1."""
    if alg is None and kind != "right":
        alg = GradedAlgebra(pres, n_max, cap)
    cx = build_complex(pres, kind, n_max, i_max, alg, cap)
    rep = check_exactness(cx, range(1 if kind != "bimodule" else 0, i_max))
    method = "complex_exactness" if kind != "bimodule" else "bimodule_exactness"
    if rep.exact:
        v = Verdict(True, method, n_max, i_max)
    else:
        i, n = rep.first_failure
        v = Verdict(False, method, n_max, i_max, False, i, n, witness=rep.witness)
        v.details["homology_dim"] = rep.homology[rep.first_failure]
    v.details["report"] = rep
    return v


# ---------------------------------------------------------------------------
# decomposition theorem

def right_pd_over_subalgebra(pres: Presentation, s: int, n_max: int = 10,
                             cap=DEFAULT_AMBIENT_CAP) -> dict:
    """Projective dimension of A as a right A^s-module, truncated.

    Right modules are handled through the opposite algebra: A as a right
    A^s-module is A° as a left (A°)^s-module.  The presentation A^s is
    infinitely generated over itself in general, so the result is only
    qualified by n_max.
    """
    op = opposite(pres)
    big = GradedAlgebra(op, n_max, cap)
    sub = GradedAlgebra(single_degree(op, s), n_max, cap)
    res = minimal_resolution(sub, AlgebraModule(big), n_max, 2, word_witnesses=False)
    g2 = res.generators[2]
    if g2:
        return {"result": "GreaterThanOne", "degree": g2[0].degree, "n_max": n_max,
                "betti": res.betti}
    return {"result": "AtMostOne", "n_max": n_max, "betti": res.betti}


def kernel_delta2_split(pres: Presentation, n_max: int, alg=None, cap=DEFAULT_AMBIENT_CAP):
    """Compare dim Ker(delta_2)_n with the sum over s of the kernels on A (x) R_s."""
    if alg is None:
        alg = GradedAlgebra(pres, n_max, cap)
    fam = JFamily(pres, cap, n_max)
    lk = LeftKoszul(alg, fam, 2)
    f = pres.field
    src = lk.mods[2]
    for n in range(n_max + 1):
        rows = lk.rows(2, n)
        total = len(rows) - _rank(rows, f)
        per = 0
        off = src.offsets(n)
        groups: dict = {}
        for g, lab in enumerate(src.labels):
            if g in off:
                s = fam.blocks(2)[lab[0]][0]
                size = alg.dim(n - src.degrees[g])
                groups.setdefault(s, []).extend(range(off[g], off[g] + size))
        for s, idx in groups.items():
            sub = [rows[k] for k in idx]
            per += len(sub) - _rank(sub, f)
        if total != per:
            kv = kernel_vectors(rows, f)
            return {"ok": False, "n": n, "kernel_dim": total, "split_dim": per,
                    "witness": kv[0] if kv else None}
    return {"ok": True}


def _rank(rows, f) -> int:
    e = Echelon(f)
    for r in rows:
        if r:
            e.add(r)
    return len(e)


def theorem_decomposition_check(pres: Presentation, n_max: int = 10, i_max: int = 6,
                                cap=DEFAULT_AMBIENT_CAP) -> Verdict:
    """Multi-Koszul iff each A^s is s-Koszul, pd of A over each A^s is at most one,
    and Ker(delta_2) splits along S."""
    clauses = {}
    degs = pres.degrees
    first_fail = None
    for s in degs:
        sub = single_degree(pres, s)
        v = verdict_via_tor(sub, n_max, i_max, early_stop=True, cap=cap)
        clauses[f"A^{s} is {s}-Koszul"] = v
        if not v.multi_koszul and first_fail is None:
            first_fail = (f"A^{s} is {s}-Koszul", v)
    if len(degs) > 1:
        for s in degs:
            pd = right_pd_over_subalgebra(pres, s, n_max, cap)
            clauses[f"r-pd over A^{s}"] = pd
            if pd["result"] != "AtMostOne" and first_fail is None:
                first_fail = (f"r-pd over A^{s}", pd)
        split = kernel_delta2_split(pres, n_max, cap=cap)
        clauses["Ker delta_2 splits"] = split
        if not split["ok"] and first_fail is None:
            first_fail = ("Ker delta_2 splits", split)
    if first_fail is None:
        v = Verdict(True, "theorem_decomposition", n_max, i_max)
    else:
        name, data = first_fail
        v = Verdict(False, "theorem_decomposition", n_max, i_max)
        v.details["clause"] = name
        if isinstance(data, Verdict):
            v.i, v.n, v.witness = data.i, data.n, data.witness
        elif "n" in data:
            v.n = data["n"]
        elif "degree" in data:
            v.n = data["degree"]
    v.details["clauses"] = clauses
    return v
