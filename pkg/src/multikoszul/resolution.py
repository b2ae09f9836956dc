"""Minimal graded free resolutions over a truncated algebra.

The resolution is built degree by degree.  At internal degree n and
homological step i, the images of the step-i generators already found span
(A_+ . Ker d_(i-1))_n, and new generators are chosen as the greedy complement
of that span inside (Ker d_(i-1))_n.  Kernel dimensions follow from
exactness at lower steps, so a kernel basis is only computed when new
generators are actually needed.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field as dc_field

from .algebra import GradedAlgebra
from .linalg import Echelon, Subspace, axpy, kernel_vectors


class TrivialModule:
    """The trivial module k concentrated in degree 0."""

    def dim(self, n: int) -> int:
        return 1 if n == 0 else 0

    def act(self, x: int, n: int, vec: dict) -> dict:
        return {}


class AlgebraModule:
    """An algebra B viewed as a left module over a presentation it is a quotient of."""

    def __init__(self, alg: GradedAlgebra):
        self.alg = alg

    def dim(self, n: int) -> int:
        return self.alg.dim(n)

    def act(self, x: int, n: int, vec: dict) -> dict:
        table = self.alg.left_action(x, n)
        out: dict = {}
        p = self.alg.field.p
        for i, a in vec.items():
            axpy(out, a, table[i], p)
        return out


class FreeModule:
    """Free graded module A (x) W with W spanned by generators of given degrees."""

    def __init__(self, alg: GradedAlgebra, degrees=(), labels=None):
        self.alg = alg
        self.degrees = list(degrees)
        self.labels = list(labels) if labels is not None else [None] * len(self.degrees)
        self._offsets: dict = {}

    def add(self, degree: int, label=None) -> int:
        self.degrees.append(degree)
        self.labels.append(label)
        self._offsets.clear()
        return len(self.degrees) - 1

    def offsets(self, n: int) -> dict:
        """``{generator: first basis index}`` at internal degree n."""
        off = self._offsets.get(n)
        if off is None:
            off, k = {}, 0
            for g, dg in enumerate(self.degrees):
                if dg <= n:
                    off[g] = k
                    k += self.alg.dim(n - dg)
            off[None] = k
            self._offsets[n] = off
        return off

    def dim(self, n: int) -> int:
        return self.offsets(n)[None]

    def basis(self, n: int) -> list:
        """List of ``(generator, normal word)`` at degree n."""
        out = []
        for g, dg in enumerate(self.degrees):
            if dg <= n:
                out.extend((g, w) for w in self.alg.words[n - dg])
        return out

    def locate(self, n: int, k: int):
        """Basis index -> (generator, index in A_(n - deg g))."""
        starts, order = self._blocks(n)
        pos = bisect_right(starts, k) - 1
        return order[pos], k - starts[pos]

    def _blocks(self, n: int):
        key = ("blocks", n)
        b = self._offsets.get(key)
        if b is None:
            off = self.offsets(n)
            gens = sorted((o, g) for g, o in off.items() if g is not None)
            b = ([o for o, _ in gens], [g for _, g in gens])
            self._offsets[key] = b
        return b

    def act(self, x: int, n: int, vec: dict) -> dict:
        starts, order = self._blocks(n)
        off1 = self.offsets(n + 1)
        p = self.alg.field.p
        out: dict = {}
        for k, a in vec.items():
            pos = bisect_right(starts, k) - 1
            g = order[pos]
            i = k - starts[pos]
            base = off1[g]
            for j, b in self.alg.left_action(x, n - self.degrees[g])[i].items():
                c = out.get(base + j, 0) + a * b
                if p:
                    c %= p
                if c:
                    out[base + j] = c
                else:
                    out.pop(base + j, None)
        return out

    def element_words(self, n: int, vec: dict, gen_words: list) -> dict:
        """Expand into tensor words: (g, u) -> u . gen_words[g]."""
        p = self.alg.field.p
        out: dict = {}
        off = self.offsets(n)
        for g, o in off.items():
            if g is None:
                continue
            dg = self.degrees[g]
            m = self.alg.dim(n - dg)
            for k in range(o, o + m):
                a = vec.get(k)
                if a:
                    u = self.alg.words[n - dg][k - o]
                    for w, b in gen_words[g].items():
                        key = u + w
                        c = out.get(key, 0) + a * b
                        if p:
                            c %= p
                        if c:
                            out[key] = c
                        else:
                            out.pop(key, None)
        return out


class FreeMap:
    """A module map out of a free module, given by the images of its generators."""

    def __init__(self, source: FreeModule, target, images: list):
        self.source = source
        self.target = target
        self.images = images
        self._cache: dict = {}

    def rows(self, n: int) -> list:
        """Images of the degree-n basis of the source, in target coordinates."""
        if n in self._cache:
            return self._cache[n]
        src = self.source
        alg = src.alg
        prev = self.rows(n - 1) if n > 0 and any(d < n for d in src.degrees) else None
        prev_off = src.offsets(n - 1) if prev is not None else None
        out = []
        for g, dg in enumerate(src.degrees):
            if dg > n:
                continue
            if dg == n:
                out.append(dict(self.images[g]))
                continue
            base = prev_off[g]
            idx_prev = alg.index[n - dg - 1]
            for w in alg.words[n - dg]:
                r = prev[base + idx_prev[w[1:]]]
                out.append(self.target.act(w[0], n - 1, r) if r else {})
        self._cache = {k: v for k, v in self._cache.items() if k >= n - 1}
        self._cache[n] = out
        return out


@dataclass
class Generator:
    step: int
    degree: int
    image: dict          # in target coordinates at this degree
    words: dict          # tensor-word expansion


@dataclass
class BettiTable:
    entries: dict = dc_field(default_factory=dict)   # (i, n) -> count
    n_max: int = 0
    i_max: int = 0
    complete: list = dc_field(default_factory=list)  # per step

    def get(self, i: int, n: int) -> int:
        return self.entries.get((i, n), 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def row(self, i: int) -> dict:
        return {n: v for (j, n), v in sorted(self.entries.items()) if j == i and v}

    def render(self) -> str:
        ns = range(self.n_max + 1)
        lines = ["i\\n " + " ".join(f"{n:>4}" for n in ns)]
        for i in range(self.i_max + 1):
            cells = []
            for n in ns:
                v = self.get(i, n)
                cells.append(f"{v:>4}" if v else "   .")
            lines.append(f"{i:>3} " + " ".join(cells))
        return "\n".join(lines)


class Resolution:
    def __init__(self, alg, module, n_max, i_max, modules, maps, gens, betti):
        self.alg = alg
        self.module = module
        self.n_max = n_max
        self.i_max = i_max
        self.modules = modules    # P_0 .. P_imax
        self.maps = maps          # d_0: P_0 -> M, d_i: P_i -> P_(i-1)
        self.generators = gens    # per step, list of Generator
        self.betti = betti

    def generators_at(self, i: int, n: int) -> list:
        return [g for g in self.generators[i] if g.degree == n]

    def matrix_rows(self, i: int, n: int) -> list:
        return self.maps[i].rows(n)


def minimal_resolution(alg: GradedAlgebra, module=None, n_max: int = 10, i_max: int = 6,
                       word_witnesses: bool = True, max_degree_of_relations: int | None = None,
                       stop=None) -> Resolution:
    """Minimal free resolution of ``module`` (default: k) up to the given bounds.

    ``stop(i, n, count)`` may return True to end the computation early after
    new generators are found at (i, n).
    """
    if module is None:
        module = TrivialModule()
    alg.extend(n_max)
    field = alg.field
    mods = [FreeModule(alg) for _ in range(i_max + 1)]
    gens: list = [[] for _ in range(i_max + 1)]
    images: list = [[] for _ in range(i_max + 1)]
    maps = [FreeMap(mods[i], module if i == 0 else mods[i - 1], images[i])
            for i in range(i_max + 1)]
    entries: dict = {}
    # kdim[i] = dim Ker(d_i) at the current degree
    halted = False
    n_done = -1
    for n in range(n_max + 1):
        kdim_prev = None
        for i in range(i_max + 1):
            target = module if i == 0 else mods[i - 1]
            tdim = target.dim(n)
            # dimension of what must be covered: M_n or Ker(d_(i-1))_n
            need = tdim if i == 0 else kdim_prev
            old = maps[i].rows(n) if any(d < n for d in mods[i].degrees) else []
            ech = Echelon(field)
            for r in old:
                if r:
                    ech.add(r)
            r_old = len(ech)
            deficit = need - r_old
            if deficit < 0:
                raise AssertionError(f"image exceeds kernel at step {i}, degree {n}")
            if deficit:
                if i == 0:
                    kern = Subspace.full(tdim, field)
                else:
                    krows = maps[i - 1].rows(n)
                    kv = kernel_vectors(krows, field)
                    kern = Subspace(tdim, kv, field)
                img = Subspace(tdim, ech.rref_rows(), field, reduced=True)
                comp = kern.complement_in(img)
                if comp.dim != deficit:
                    raise AssertionError("kernel dimension bookkeeping failed")
                for v in comp.rows:
                    mods[i].add(n)
                    images[i].append(v)
                    if word_witnesses:
                        if i == 0:
                            wv = {(): v.get(0, 0)} if n == 0 else {}
                            wv = {k: a for k, a in wv.items() if a}
                        else:
                            wv = mods[i - 1].element_words(
                                n, v, [gg.words for gg in gens[i - 1]])
                    else:
                        wv = {}
                    gens[i].append(Generator(i, n, v, wv))
                entries[(i, n)] = comp.dim
                if n in maps[i]._cache:
                    maps[i]._cache[n].extend(dict(v) for v in comp.rows)
            # kernel of d_i at degree n, after the new generators
            kdim_prev = mods[i].dim(n) - need
            if deficit and stop is not None and stop(i, n, deficit):
                halted = True
                break
        n_done = n
        if halted:
            break
    if max_degree_of_relations is None:
        degs = alg.pres.degrees
        max_degree_of_relations = max(degs) if degs else 1
    limit = n_max - max_degree_of_relations
    complete = []
    ok = not halted
    for i in range(i_max + 1):
        ok = ok and all(g.degree <= limit for g in gens[i])
        complete.append(ok)
    betti = BettiTable(entries, n_done, i_max, complete)
    return Resolution(alg, module, n_done, i_max, mods, maps, gens, betti)


@dataclass
class GlobalDimension:
    kind: str   # "Exactly", "AtLeast", "Unknown"
    value: int | None = None

    def __str__(self):
        return f"{self.kind}({self.value})" if self.value is not None else self.kind


def global_dimension(res: Resolution) -> GlobalDimension:
    rows = [i for i in range(res.i_max + 1) if res.generators[i]]
    top = max(rows) if rows else -1
    if top < res.i_max:
        if all(res.betti.complete[: top + 2]):
            return GlobalDimension("Exactly", top)
        return GlobalDimension("AtLeast", top)
    return GlobalDimension("AtLeast", res.i_max)


def betti_table(res: Resolution) -> BettiTable:
    return res.betti
