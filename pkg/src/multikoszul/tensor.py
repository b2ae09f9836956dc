"""Homogeneous pieces of the tensor algebra T(V).

A word of length n over generators ``0..d-1`` is stored at index
``sum w_k d^(n-1-k)``, so indices follow lexicographic order in the
declaration order of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .linalg import Field, QQ, LinalgError, Subspace, span_sum

DEFAULT_AMBIENT_CAP = 200_000


class TruncationTooDeep(Exception):
    """An ambient tensor power larger than the configured cap was requested."""

    def __init__(self, d: int, n: int, cap: int, size: int | None = None):
        self.d, self.n, self.cap = d, n, cap
        self.size = d ** n if size is None else size
        what = f"{d}^{n} = {self.size}" if size is None else f"{self.size}"
        super().__init__(f"truncation too deep in degree {n}: ambient dimension {what} "
                         f"exceeds cap {cap}")


def word_count(d: int, n: int) -> int:
    return d ** n


def check_cap(d: int, n: int, cap: int | None) -> int:
    size = d ** n
    if cap is not None and size > cap:
        raise TruncationTooDeep(d, n, cap)
    return size


def word_index(word, d: int) -> int:
    i = 0
    for c in word:
        i = i * d + c
    return i


def index_word(i: int, n: int, d: int) -> tuple:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        i, out[k] = divmod(i, d)
    return tuple(out)


def all_words(d: int, n: int):
    return product(range(d), repeat=n)


@dataclass(eq=False)
class TensorSubspace:
    """A subspace of V^(n) with dim V = d."""

    d: int
    n: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def rows(self):
        return self.space.rows

    def __eq__(self, other):
        return (isinstance(other, TensorSubspace) and self.d == other.d
                and self.n == other.n and self.space == other.space)

    def __repr__(self):
        return f"TensorSubspace(d={self.d}, n={self.n}, dim={self.dim})"

    def _same(self, other: "TensorSubspace"):
        if self.d != other.d or self.n != other.n:
            raise LinalgError(f"ambient mismatch: V^({self.n}) vs V^({other.n})")

    def sum(self, other):
        self._same(other)
        return TensorSubspace(self.d, self.n, self.space.sum(other.space))

    def intersect(self, other):
        self._same(other)
        return TensorSubspace(self.d, self.n, self.space.intersect(other.space))

    def contains(self, other) -> bool:
        self._same(other)
        return self.space.contains(other.space)

    def first_outside(self, other):
        self._same(other)
        return self.space.first_outside(other.space)

    def complement_in(self, sub):
        self._same(sub)
        return TensorSubspace(self.d, self.n, self.space.complement_in(sub.space))

    def word_vectors(self) -> list:
        """Basis vectors as ``{word tuple: coeff}``."""
        return [{index_word(i, self.n, self.d): a for i, a in r.items()} for r in self.rows]


def zero(d: int, n: int, field: Field = QQ, cap: int | None = DEFAULT_AMBIENT_CAP):
    return TensorSubspace(d, n, Subspace.zero(check_cap(d, n, cap), field))


def full(d: int, n: int, field: Field = QQ, cap: int | None = DEFAULT_AMBIENT_CAP):
    return TensorSubspace(d, n, Subspace.full(check_cap(d, n, cap), field))


def from_word_vectors(d: int, n: int, vecs, field: Field = QQ,
                      cap: int | None = DEFAULT_AMBIENT_CAP) -> TensorSubspace:
    amb = check_cap(d, n, cap)
    rows = []
    for v in vecs:
        r = {}
        for w, a in v.items():
            if len(w) != n:
                raise LinalgError(f"word {w} has length {len(w)}, expected {n}")
            r[word_index(w, d)] = r.get(word_index(w, d), 0) + a
        rows.append(r)
    return TensorSubspace(d, n, Subspace(amb, rows, field))


def tensor_embed(u: TensorSubspace, w: TensorSubspace,
                 cap: int | None = DEFAULT_AMBIENT_CAP) -> TensorSubspace:
    """u (x) w inside V^(p+q).  The Kronecker product of two RREF bases is RREF."""
    if u.d != w.d:
        raise LinalgError("generator count mismatch")
    d, n = u.d, u.n + w.n
    amb = check_cap(d, n, cap)
    shift = d ** w.n
    rows = []
    for a in u.rows:
        for b in w.rows:
            r = {}
            for i, x in a.items():
                base = i * shift
                for j, y in b.items():
                    r[base + j] = x * y
            rows.append(r)
    rows.sort(key=min)
    return TensorSubspace(d, n, Subspace(amb, rows, u.field, reduced=True))


def sandwich(j: int, r: TensorSubspace, m: int,
             cap: int | None = DEFAULT_AMBIENT_CAP) -> TensorSubspace:
    """V^(j) (x) r (x) V^(m); zero when j or m is negative."""
    d = r.d
    n = j + r.n + m
    if j < 0 or m < 0:
        return zero(d, max(n, 0), r.field, cap)
    amb = check_cap(d, n, cap)
    hi = d ** (r.n + m)
    lo = d ** m
    rows = []
    for pre in range(d ** j):
        for row in r.rows:
            for suf in range(lo):
                rows.append({pre * hi + i * lo + suf: a for i, a in row.items()})
    rows.sort(key=min)
    return TensorSubspace(d, n, Subspace(amb, rows, r.field, reduced=True))


def tensor_sum(spaces, d: int, n: int, field: Field = QQ,
               cap: int | None = DEFAULT_AMBIENT_CAP) -> TensorSubspace:
    amb = check_cap(d, n, cap)
    spaces = list(spaces)
    for s in spaces:
        if s.n != n or s.d != d:
            raise LinalgError("ambient mismatch in sum")
    return TensorSubspace(d, n, span_sum([s.space for s in spaces], amb, field))


def reverse_space(t: TensorSubspace) -> TensorSubspace:
    """Image under the anti-automorphism reversing words."""
    rows = []
    for r in t.rows:
        rows.append({word_index(index_word(i, t.n, t.d)[::-1], t.d): a for i, a in r.items()})
    return TensorSubspace(t.d, t.n, Subspace(t.space.ambient, rows, t.field))
