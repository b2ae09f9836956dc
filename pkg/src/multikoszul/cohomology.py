"""Ext through the reduced bar complex, cup products, and Hochschild (co)homology.

The reduced bar complex of k over A has B_i = (A_+)^(x i); in internal
degree n it is a sum over compositions (n_1, ..., n_i) of n.  Cochains are
vectors over the same basis, so cup product is concatenation of
compositions and word tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct

from .algebra import GradedAlgebra
from .koszul import BimoduleComplex, JFamily, check_exactness, expansion
from .linalg import Echelon, ExactMatrix, axpy, rank
from .presentation import Presentation
from .resolution import minimal_resolution
from .tensor import DEFAULT_AMBIENT_CAP

BAR_N_MAX = 8
BAR_I_MAX = 5


def compositions(n: int, i: int):
    if i == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - i + 2):
        for rest in compositions(n - first, i - 1):
            yield (first,) + rest


class BarComplex:
    """Reduced bar complex of the trivial module, one internal degree at a time."""

    def __init__(self, alg: GradedAlgebra, cap: int | None = 2_000_000):
        self.alg = alg
        self.cap = cap
        self._layout: dict = {}
        self._prod: dict = {}

    def layout(self, i: int, n: int):
        """``({composition: (offset, dims)}, total)``."""
        key = (i, n)
        if key not in self._layout:
            off, k = {}, 0
            self.alg.extend(n)
            for c in compositions(n, i):
                dims = tuple(self.alg.dim(x) for x in c)
                size = 1
                for x in dims:
                    size *= x
                off[c] = (k, dims)
                k += size
            if self.cap is not None and k > self.cap:
                raise MemoryError(f"bar complex B_{i} in degree {n} has dimension {k}")
            self._layout[key] = (off, k)
        return self._layout[key]

    def dim(self, i: int, n: int) -> int:
        return self.layout(i, n)[1]

    def index(self, i: int, n: int, comp: tuple, idx: tuple) -> int:
        off, _ = self.layout(i, n)
        base, dims = off[comp]
        k = 0
        for x, dx in zip(idx, dims):
            k = k * dx + x
        return base + k

    def _mul(self, m1: int, u: int, m2: int, v: int) -> dict:
        key = (m1, u, m2, v)
        r = self._prod.get(key)
        if r is None:
            r = self.alg.mul_word({u: 1}, m1, self.alg.words[m2][v])
            self._prod[key] = r
        return r

    def rows(self, i: int, n: int) -> list:
        """Rows of d: B_(i,n) -> B_(i-1,n) (zero for i <= 1)."""
        total = self.dim(i, n)
        if i <= 1:
            return [{} for _ in range(total)]
        p = self.alg.field.p
        off, _ = self.layout(i, n)
        out = []
        for comp, (base, dims) in off.items():
            for idx in iproduct(*[range(x) for x in dims]):
                row: dict = {}
                for j in range(i - 1):
                    sign = -1 if j % 2 == 0 else 1
                    prod = self._mul(comp[j], idx[j], comp[j + 1], idx[j + 1])
                    if not prod:
                        continue
                    c2 = comp[:j] + (comp[j] + comp[j + 1],) + comp[j + 2:]
                    for w, a in prod.items():
                        t = self.index(i - 1, n, c2, idx[:j] + (w,) + idx[j + 2:])
                        val = row.get(t, 0) + sign * a
                        if p:
                            val %= p
                        if val:
                            row[t] = val
                        else:
                            row.pop(t, None)
                out.append(row)
        return out

    def rank(self, i: int, n: int) -> int:
        if i <= 1 or self.dim(i, n) == 0 or self.dim(i - 1, n) == 0:
            return 0
        return rank(self.rows(i, n), self.alg.field)

    def ext_dim(self, i: int, n: int) -> int:
        return self.dim(i, n) - self.rank(i, n) - self.rank(i + 1, n)


def bar_ext_dims(pres: Presentation, n_max: int = 6, i_max: int = 4, alg=None,
                 cap=DEFAULT_AMBIENT_CAP) -> dict:
    """``{(i, n): dim Ext^i(k,k)_n}`` from the dualized bar complex (ranks are transpose-invariant)."""
    if alg is None:
        alg = GradedAlgebra(pres, n_max, cap)
    bar = BarComplex(alg)
    return {(i, n): bar.ext_dim(i, n) for i in range(i_max + 1) for n in range(n_max + 1)}


class CochainSpace:
    """Cocycle and coboundary data of the bar cochain complex at (i, n)."""

    def __init__(self, bar: BarComplex, i: int, n: int):
        self.bar, self.i, self.n = bar, i, n
        self.dim = bar.dim(i, n)
        f = bar.alg.field
        # coboundaries: columns of d_(i,n), i.e. transposed rows
        cols: dict = {}
        for x, row in enumerate(bar.rows(i, n)):
            for y, a in row.items():
                cols.setdefault(y, {})[x] = a
        self.coboundary = Echelon(f)
        for v in cols.values():
            self.coboundary.add(v)
        self._cocycles = None

    def cocycles(self) -> list:
        if self._cocycles is None:
            rows = self.bar.rows(self.i + 1, self.n)
            m = ExactMatrix(rows, self.dim, self.bar.alg.field)
            self._cocycles = m.kernel_basis().rows
        return self._cocycles

    def ext_dim(self) -> int:
        return len(self.cocycles()) - len(self.coboundary)

    def class_reps(self) -> list:
        """Cocycles completing a basis of the coboundaries (one per Ext class)."""
        e = Echelon(self.bar.alg.field)
        e.rows = dict(self.coboundary.rows)
        reps = []
        for z in self.cocycles():
            if e.add(z) is not None:
                reps.append(z)
        return reps


def cup_product(bar: BarComplex, f: dict, fi: int, fn: int, g: dict, gi: int, gn: int) -> dict:
    """(f cup g)(a_1|...|a_(p+q)) = f(a_1|...|a_p) g(a_(p+1)|...|a_(p+q))."""
    p = bar.alg.field.p
    offf, _ = bar.layout(fi, fn)
    offg, _ = bar.layout(gi, gn)
    decode_f = _decoder(offf)
    decode_g = _decoder(offg)
    out: dict = {}
    for x, a in f.items():
        c1, t1 = decode_f(x)
        for y, b in g.items():
            c2, t2 = decode_g(y)
            k = bar.index(fi + gi, fn + gn, c1 + c2, t1 + t2)
            val = out.get(k, 0) + a * b
            if p:
                val %= p
            if val:
                out[k] = val
            else:
                out.pop(k, None)
    return out


def _decoder(off: dict):
    starts = sorted((base, comp, dims) for comp, (base, dims) in off.items())

    def decode(k: int):
        lo, hi = 0, len(starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if starts[mid][0] <= k:
                lo = mid
            else:
                hi = mid - 1
        base, comp, dims = starts[lo]
        r = k - base
        idx = []
        for dx in reversed(dims):
            r, q = divmod(r, dx)
            idx.append(q)
        return comp, tuple(reversed(idx))
    return decode


@dataclass
class GenerationReport:
    generated: bool
    n_max: int
    i_max: int
    checked: dict = dc_field(default_factory=dict)   # (i, n) -> (generated dim, ext dim)
    failure: tuple | None = None


def k2_generation_check(pres: Presentation, n_max: int = BAR_N_MAX, i_max: int = BAR_I_MAX,
                        alg=None, cap=DEFAULT_AMBIENT_CAP) -> GenerationReport:
    """Is Ext(k,k) generated by Ext^1 and Ext^2 within the bar bounds?

    Zero entries are located with the minimal resolution (Ext^i_n and Tor_i,n
    have equal dimension); every nonzero entry is recomputed from bar
    cochains and compared with the span of cup products.
    """
    if n_max > BAR_N_MAX or i_max > BAR_I_MAX:
        raise ValueError(f"bar bounds are n <= {BAR_N_MAX}, i <= {BAR_I_MAX}")
    if alg is None:
        alg = GradedAlgebra(pres, n_max, cap)
    res = minimal_resolution(alg, None, n_max, i_max, word_witnesses=False)
    bar = BarComplex(alg)
    reps: dict = {}
    report = GenerationReport(True, n_max, i_max)
    for i in range(1, i_max + 1):
        for n in range(n_max + 1):
            if res.betti.get(i, n) == 0:
                continue
            cs = CochainSpace(bar, i, n)
            if i <= 2:
                reps[(i, n)] = cs.class_reps()
                report.checked[(i, n)] = (len(reps[(i, n)]), cs.ext_dim())
                continue
            e = Echelon(alg.field)
            e.rows = dict(cs.coboundary.rows)
            got = []
            for p_i in (1, 2):
                for m in range(n + 1):
                    for f in reps.get((p_i, m), []):
                        for g in reps.get((i - p_i, n - m), []):
                            prod = cup_product(bar, f, p_i, m, g, i - p_i, n - m)
                            if prod and e.add(prod) is not None:
                                got.append(prod)
            reps[(i, n)] = got
            ext = cs.ext_dim()
            report.checked[(i, n)] = (len(got), ext)
            if len(got) != ext and report.generated:
                report.generated = False
                report.failure = (i, n)
    return report


# ---------------------------------------------------------------------------
# Hochschild

@dataclass
class HochschildReport:
    homology: dict        # (i, n) -> dim HH_i in internal degree n
    cohomology: dict      # (i, d) -> dim HH^i of weight d (A-degree minus J-degree)
    valid: bool           # bimodule complex exact in the consulted range
    n_max: int
    i_max: int
    first_failure: tuple | None = None


def _hh_terms(fam: JFamily, i: int):
    """Per source basis element: (block, j, m, expansion terms)."""
    out = []
    for b_idx, block in enumerate(fam.blocks(i)):
        for j, vec in enumerate(block[2].word_vectors()):
            out.append((b_idx, j, block[1], expansion(fam, i, block, vec, "bimodule")))
    return out


def hochschild(pres: Presentation, n_max: int = 6, i_max: int = 4, alg=None,
               cap=DEFAULT_AMBIENT_CAP) -> HochschildReport:
    """HH_* from A (x)_(A^e) K and HH^* from Hom_(A^e)(K, A), K the bimodule complex."""
    if alg is None:
        alg = GradedAlgebra(pres, n_max, cap)
    fam = JFamily(pres, cap)
    f = alg.field
    p = f.p
    terms = {i: _hh_terms(fam, i) for i in range(1, i_max + 2)}

    def blocks(i):
        return [(b_idx, b[1], b[2].dim) for b_idx, b in enumerate(fam.blocks(i))]

    # chains A (x) W_i at internal degree n: index over (block, j, u)
    def chain_layout(i, n):
        off, k = {}, 0
        for b_idx, m, dim in blocks(i):
            if m <= n:
                for j in range(dim):
                    off[(b_idx, j)] = k
                    k += alg.dim(n - m)
        return off, k

    def chain_rows(i, n):
        off_t, _ = chain_layout(i - 1, n)
        out = []
        for b_idx, j, m, exp in terms[i]:
            if m > n:
                continue
            q = n - m
            for u in range(alg.dim(q)):
                row: dict = {}
                for (left, right, tb), coords in exp.items():
                    v = alg.word_mul(right, alg.mul_word({u: 1}, q, left), q + len(left))
                    for jj, c in coords.items():
                        base = off_t[(tb, jj)]
                        for w, a in v.items():
                            axpy(row, c * a, {base + w: 1}, p)
                out.append(row)
        return out

    hom = {}
    ranks: dict = {}

    def crank(i, n):
        if (i, n) not in ranks:
            ranks[(i, n)] = 0 if i == 0 else rank(chain_rows(i, n), f)
        return ranks[(i, n)]

    for i in range(i_max + 1):
        for n in range(n_max + 1):
            hom[(i, n)] = chain_layout(i, n)[1] - crank(i, n) - crank(i + 1, n)

    # cochains Hom(W_i, A): basis (block, j, u) with u in A_(m + d)
    def co_layout(i, d):
        off, k = {}, 0
        for b_idx, m, dim in blocks(i):
            if m + d >= 0:
                for j in range(dim):
                    off[(b_idx, j)] = k
                    k += alg.dim(m + d)
        return off, k

    def co_rows(i, d):
        """Rows of delta: C^i_d -> C^(i+1)_d, one per basis cochain of C^i_d."""
        off_s, size = co_layout(i, d)
        off_t, _ = co_layout(i + 1, d)
        rows = [dict() for _ in range(size)]
        for b_idx, j, m, exp in terms[i + 1]:
            if m + d < 0:
                continue
            tbase = off_t[(b_idx, j)]
            for (left, right, tb), coords in exp.items():
                for jj, c in coords.items():
                    key = (tb, jj)
                    if key not in off_s:
                        continue
                    sbase = off_s[key]
                    mt = fam.blocks(i)[tb][1]
                    for u in range(alg.dim(mt + d)):
                        v = alg.word_mul(left, alg.mul_word({u: 1}, mt + d, right),
                                         mt + d + len(right))
                        for w, a in v.items():
                            axpy(rows[sbase + u], c * a, {tbase + w: 1}, p)
        return rows

    def max_m(i):
        ms = [m for _, m, _ in blocks(i)]
        return max(ms) if ms else 0

    cohom = {}
    coranks: dict = {}

    def corank(i, d):
        if i < 0:
            return 0
        if (i, d) not in coranks:
            coranks[(i, d)] = rank(co_rows(i, d), f)
        return coranks[(i, d)]

    for i in range(i_max + 1):
        if not blocks(i):
            continue
        d_lo = -max_m(i)
        d_hi = n_max - max(max_m(i + 1), max_m(i))
        for d in range(d_lo, d_hi + 1):
            size = co_layout(i, d)[1]
            cohom[(i, d)] = size - corank(i, d) - corank(i - 1, d)

    cx = BimoduleComplex(alg, fam, n_max, i_max + 1).as_complex()
    rep = check_exactness(cx, range(0, i_max + 1), want_witness=False)
    return HochschildReport(hom, cohom, rep.exact, n_max, i_max, rep.first_failure)
