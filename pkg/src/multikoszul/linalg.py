"""Exact sparse linear algebra over Q and GF(p).

Vectors are dicts ``{column: coefficient}`` with no explicit zeros.  Over Q
the coefficients are Python ints or ``gmpy2.mpq``; over GF(p) they are ints
in ``range(1, p)``.  Every routine takes a :class:`Field` so the two cases
share one code path.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from gmpy2 import mpq


class LinalgError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p:
            if self.p >= 2 ** 31:
                raise LinalgError(f"characteristic {self.p} must be below 2^31")
            if not _is_prime(self.p):
                raise LinalgError(f"characteristic {self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().replace(" ", "")
        if t in ("Q", "QQ"):
            return cls(0)
        for prefix in ("GF(", "GF:"):
            if t.startswith(prefix):
                body = t[len(prefix):].rstrip(")")
                try:
                    return cls(int(body))
                except ValueError:
                    break
        raise LinalgError(f"unknown field {text!r}")

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"

    def coerce(self, x):
        if self.p:
            if isinstance(x, int):
                return x % self.p
            x = mpq(x)
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, int):
            return x
        x = mpq(x)
        return int(x) if x.denominator == 1 else x

    def inv(self, a):
        if self.p:
            return pow(a, -1, self.p)
        return mpq(1) / a

    def canon(self, a):
        """Stable plain representation used for JSON and comparisons."""
        if self.p:
            return int(a)
        a = mpq(a)
        return int(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


QQ = Field(0)


def vec_clean(v: dict, field: Field) -> dict:
    out = {}
    for k, a in v.items():
        a = field.coerce(a)
        if a:
            out[k] = a
    return out


def axpy(y: dict, a, x: dict, p: int) -> None:
    """In place ``y += a * x``."""
    if p:
        for k, b in x.items():
            c = (y.get(k, 0) + a * b) % p
            if c:
                y[k] = c
            else:
                y.pop(k, None)
    else:
        for k, b in x.items():
            c = y.get(k, 0) + a * b
            if c:
                y[k] = c
            else:
                y.pop(k, None)


def scale(v: dict, a, p: int) -> dict:
    if p:
        return {k: b * a % p for k, b in v.items()}
    return {k: b * a for k, b in v.items()}


def reduce_vector(v: dict, pivrows: dict, p: int, track: dict | None = None,
                  pivtrack: dict | None = None) -> dict:
    """Reduce ``v`` (in place) against echelon rows ``{pivot: row}``.

    Each stored row has coefficient 1 at its pivot, which is its smallest
    column.  If ``track`` is given, the same operations are applied to it
    using ``pivtrack`` (the combination that produced each pivot row).
    """
    heap = [c for c in v if c in pivrows]
    if not heap:
        return v
    heapq.heapify(heap)
    while heap:
        c = heapq.heappop(heap)
        a = v.get(c)
        if not a:
            continue
        row = pivrows[c]
        na = (-a) % p if p else -a
        for k, b in row.items():
            cur = v.get(k, 0) + na * b
            if p:
                cur %= p
            if cur:
                if k not in v and k in pivrows:
                    heapq.heappush(heap, k)
                v[k] = cur
            else:
                v.pop(k, None)
        if track is not None:
            axpy(track, na, pivtrack[c], p)
    return v


class Echelon:
    """Incremental row echelon form with lowest-column pivots."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def add(self, v: dict) -> int | None:
        """Insert a copy of ``v``; return its new pivot or None if dependent."""
        p = self.field.p
        w = reduce_vector(dict(v), self.rows, p)
        if not w:
            return None
        piv = min(w)
        a = w[piv]
        if a != 1:
            w = scale(w, self.field.inv(a), p)
        self.rows[piv] = w
        return piv

    def reduce(self, v: dict) -> dict:
        return reduce_vector(dict(v), self.rows, self.field.p)

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def rref_rows(self) -> list:
        """Fully reduced rows sorted by pivot."""
        p = self.field.p
        done: dict = {}
        for piv in sorted(self.rows, reverse=True):
            row = dict(self.rows[piv])
            for c in [c for c in row if c != piv and c in done]:
                a = row.get(c)
                if a:
                    axpy(row, (-a) % p if p else -a, done[c], p)
            done[piv] = row
        return [done[k] for k in sorted(done)]


def rank(rows, field: Field) -> int:
    e = Echelon(field)
    for r in rows:
        e.add(r)
    return len(e)


def kernel_vectors(rows: list, field: Field) -> list:
    """Basis of ``{c : sum_k c_k rows[k] = 0}`` as sparse vectors over row indices."""
    p = field.p
    piv: dict = {}
    pivtrack: dict = {}
    out = []
    for k, r in enumerate(rows):
        track = {k: 1}
        w = reduce_vector(dict(r), piv, p, track, pivtrack)
        if not w:
            out.append(track)
            continue
        c = min(w)
        a = w[c]
        if a != 1:
            ia = field.inv(a)
            w = scale(w, ia, p)
            track = scale(track, ia, p)
        piv[c] = w
        pivtrack[c] = track
    return out


class ExactMatrix:
    """A sparse matrix given by rows, with a fixed column count."""

    def __init__(self, rows: list, ncols: int, field: Field = QQ):
        self.field = field
        self.ncols = ncols
        self.rows = [vec_clean(r, field) for r in rows]

    @classmethod
    def from_dense(cls, data, field: Field = QQ) -> "ExactMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        return cls([{j: a for j, a in enumerate(r) if a} for r in data], ncols, field)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_dense(self) -> list:
        return [[r.get(j, 0) for j in range(self.ncols)] for r in self.rows]

    def rref(self):
        """Return ``(reduced, pivots, rank)``; pivots take the lowest column."""
        e = Echelon(self.field)
        for r in self.rows:
            e.add(r)
        red = e.rref_rows()
        pivs = [min(r) for r in red]
        return ExactMatrix(red, self.ncols, self.field), pivs, len(red)

    def rank(self) -> int:
        return rank(self.rows, self.field)

    def kernel_basis(self) -> "Subspace":
        """Right kernel ``{x : M x = 0}`` as a subspace of k^ncols."""
        cols: list = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, a in r.items():
                cols[j][i] = a
        return Subspace(self.ncols, kernel_vectors(cols, self.field), self.field)

    def left_kernel(self) -> "Subspace":
        """``{y : y M = 0}`` as a subspace of k^nrows."""
        return Subspace(self.nrows, kernel_vectors(self.rows, self.field), self.field)


class Subspace:
    """A subspace of k^ambient, stored as its canonical RREF basis."""

    __slots__ = ("ambient", "field", "rows", "pivots", "_coord", "_pivset")

    def __init__(self, ambient: int, vectors=(), field: Field = QQ, reduced: bool = False):
        self.ambient = ambient
        self.field = field
        if reduced:
            rows = list(vectors)
        else:
            e = Echelon(field)
            for v in vectors:
                v = vec_clean(v, field)
                if v and max(v) >= ambient:
                    raise LinalgError("vector outside ambient space")
                e.add(v)
            rows = e.rref_rows()
        self.rows = rows
        self.pivots = [min(r) for r in rows]
        self._coord = None
        self._pivset = None

    # construction helpers
    @classmethod
    def zero(cls, ambient: int, field: Field = QQ) -> "Subspace":
        return cls(ambient, [], field, reduced=True)

    @classmethod
    def full(cls, ambient: int, field: Field = QQ) -> "Subspace":
        return cls(ambient, [{i: 1} for i in range(ambient)], field, reduced=True)

    @classmethod
    def coordinate(cls, ambient: int, cols, field: Field = QQ) -> "Subspace":
        return cls(ambient, [{i: 1} for i in sorted(set(cols))], field, reduced=True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, self.dim, tuple(self.pivots)))

    @property
    def is_coordinate(self) -> bool:
        """True when spanned by standard basis vectors."""
        if self._coord is None:
            self._coord = all(len(r) == 1 for r in self.rows)
        return self._coord

    def _pivrows(self) -> dict:
        return dict(zip(self.pivots, self.rows))

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise LinalgError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
        if self.field != other.field:
            raise LinalgError("field mismatch")

    def reduce(self, v: dict) -> dict:
        """Remainder of ``v`` modulo this subspace (canonical, since rows are reduced)."""
        v = vec_clean(v, self.field)
        if self.is_coordinate:
            if self._pivset is None:
                self._pivset = set(self.pivots)
            return {k: a for k, a in v.items() if k not in self._pivset}
        return reduce_vector(v, self._pivrows(), self.field.p)

    def contains_vector(self, v: dict) -> bool:
        return not self.reduce(v)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(r) for r in other.rows)

    def first_outside(self, other: "Subspace"):
        """A basis vector of ``other`` not in ``self``, or None."""
        self._check(other)
        for r in other.rows:
            if not self.contains_vector(r):
                return r
        return None

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_coordinate and other.is_coordinate:
            return Subspace.coordinate(self.ambient, self.pivots + other.pivots, self.field)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace(self.ambient, self.rows + other.rows, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection."""
        self._check(other)
        if self.is_coordinate and other.is_coordinate:
            return Subspace.coordinate(self.ambient, set(self.pivots) & set(other.pivots),
                                       self.field)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.field)
        if self.is_coordinate or other.is_coordinate:
            # restrict the other space to the coordinate one: solve on the
            # complementary columns
            coord, gen = (self, other) if self.is_coordinate else (other, self)
            keep = set(coord.pivots)
            outside = [{k: a for k, a in r.items() if k not in keep} for r in gen.rows]
            combos = kernel_vectors(outside, self.field)
            vecs = []
            p = self.field.p
            for c in combos:
                w: dict = {}
                for i, a in c.items():
                    axpy(w, a, gen.rows[i], p)
                vecs.append(w)
            return Subspace(self.ambient, vecs, self.field)
        n = self.ambient
        p = self.field.p
        e = Echelon(self.field)
        for r in self.rows:
            v = dict(r)
            for k, a in r.items():
                v[k + n] = a
            e.add(v)
        for r in other.rows:
            e.add(r)
        red = e.rref_rows()
        vecs = [{k - n: a for k, a in r.items()} for r in red if min(r) >= n]
        return Subspace(n, vecs, self.field)

    def complement_in(self, sub: "Subspace") -> "Subspace":
        """Complement of ``sub`` inside ``self``.

        In the coordinates given by this space's RREF basis, ``sub`` has an
        RREF with some pivot set; the complement is spanned by the basis
        vectors of ``self`` whose coordinate index is not a pivot.
        """
        self._check(sub)
        if not self.contains(sub):
            raise LinalgError("complement_in: second space is not contained in the first")
        pos = {c: i for i, c in enumerate(self.pivots)}
        coords = [{pos[c]: r[c] for c in r if c in pos} for r in sub.rows]
        e = Echelon(self.field)
        for c in coords:
            e.add(c)
        taken = set(e.rows)
        return Subspace(self.ambient, [r for i, r in enumerate(self.rows) if i not in taken],
                        self.field, reduced=True)

    def coordinates(self, v: dict) -> dict:
        """Coordinates of ``v`` in this space's RREF basis (no membership check)."""
        out = {}
        for i, c in enumerate(self.pivots):
            a = v.get(c)
            if a:
                out[i] = a
        return out

    def to_dense(self) -> list:
        return [[r.get(j, 0) for j in range(self.ambient)] for r in self.rows]


def span_sum(spaces, ambient: int, field: Field = QQ) -> Subspace:
    spaces = list(spaces)
    if not spaces:
        return Subspace.zero(ambient, field)
    if all(s.is_coordinate for s in spaces):
        cols = set()
        for s in spaces:
            cols.update(s.pivots)
        return Subspace.coordinate(ambient, cols, field)
    rows = []
    for s in spaces:
        if s.ambient != ambient:
            raise LinalgError("ambient mismatch in sum")
        rows.extend(s.rows)
    return Subspace(ambient, rows, field)
