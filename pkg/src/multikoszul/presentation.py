"""Presentations A = T(V)/<R> with homogeneous relations of degree >= 2.

Text format, one statement per line (``;`` also separates statements)::

    # comment
    field Q            # or GF(7)
    gens x y z
    rel x*z
    rel y*y*x - 2*x*y*y
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from gmpy2 import mpq

from .linalg import Field, QQ, LinalgError
from . import tensor as ts
from .tensor import TensorSubspace, DEFAULT_AMBIENT_CAP


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message, self.line, self.column = message, line, column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


@dataclass
class Presentation:
    field: Field
    generators: list
    relations: dict  # degree -> TensorSubspace
    name: str = ""
    warnings: list = dc_field(default_factory=list)

    @property
    def d(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> list:
        """The degree set S (degrees carrying a nonzero relation space)."""
        return sorted(s for s, r in self.relations.items() if r.dim)

    def rel(self, s: int) -> TensorSubspace:
        r = self.relations.get(s)
        if r is None:
            return ts.zero(self.d, s, self.field, None)
        return r

    def is_monomial(self) -> bool:
        return all(r.space.is_coordinate for r in self.relations.values())

    def word_str(self, word) -> str:
        if not word:
            return "1"
        return "*".join(self.generators[c] for c in word)

    def poly_str(self, vec: dict) -> str:
        """Render ``{word: coeff}`` as text."""
        parts = []
        for w in sorted(vec, key=lambda w: (len(w), w)):
            a = self.field.canon(vec[w])
            parts.append((a, self.word_str(w)))
        out = ""
        for k, (a, w) in enumerate(parts):
            neg = isinstance(a, int) and a < 0 or isinstance(a, str) and a.startswith("-")
            mag = (-a if isinstance(a, int) else a[1:]) if neg else a
            coef = "" if mag == 1 else f"{mag}*"
            if k == 0:
                out = ("-" if neg else "") + coef + w
            else:
                out += (" - " if neg else " + ") + coef + w
        return out or "0"

    def relation_polys(self) -> list:
        out = []
        for s in self.degrees:
            for v in self.relations[s].word_vectors():
                out.append(v)
        return out

    def to_text(self) -> str:
        lines = [f"field {self.field.name}", "gens " + " ".join(self.generators)]
        for v in self.relation_polys():
            lines.append("rel " + self.poly_str(v))
        return "\n".join(lines) + "\n"

    def one_line(self) -> str:
        return "; ".join(self.to_text().strip().splitlines())

    def with_field(self, field: Field) -> "Presentation":
        return parse(self.to_text(), field_override=field, name=self.name)

    def __repr__(self):
        return f"Presentation({self.one_line()!r})"


def _parse_coeff(tok: str, lineno: int, col: int):
    m = re.fullmatch(r"(\d+)(?:/(\d+))?", tok)
    if not m:
        raise ParseError(f"malformed coefficient {tok!r}", lineno, col)
    if m.group(2) is not None:
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"malformed coefficient {tok!r}", lineno, col)
        return mpq(int(m.group(1)), den)
    return int(m.group(1))


def _parse_poly(text: str, gens: dict, lineno: int, col0: int) -> dict:
    poly: dict = {}
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty relation", lineno, col0)
    terms = re.findall(r"[+-]?[^+-]+", src)
    if "".join(terms) != src:
        raise ParseError("malformed relation", lineno, col0)
    pos = col0
    for t in terms:
        sign = 1
        body = t
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        factors = body.split("*")
        coeff = 1
        if factors and re.fullmatch(r"[\d/]+", factors[0] or "x"):
            coeff = _parse_coeff(factors[0], lineno, pos)
            factors = factors[1:]
        elif factors and factors[0][:1].isdigit():
            raise ParseError(f"malformed coefficient {factors[0]!r}", lineno, pos)
        if not factors:
            raise ParseError("constant term in relation", lineno, pos)
        word = []
        for f in factors:
            if f not in gens:
                if f and f[:1].isdigit():
                    raise ParseError(f"malformed coefficient {f!r}", lineno, pos)
                raise ParseError(f"unknown generator {f!r}", lineno, pos)
            word.append(gens[f])
        w = tuple(word)
        poly[w] = poly.get(w, 0) + sign * coeff
        pos += len(t)
    return poly


def parse(text: str, field_override: Field | None = None, name: str = "",
          cap: int | None = DEFAULT_AMBIENT_CAP, normalize_relations: bool = True) -> Presentation:
    """Parse the text format; relations are normalized unless told otherwise."""
    field = QQ
    gens: list | None = None
    raw: list = []
    statements = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        col = 1
        for chunk in line.split(";"):
            stripped = chunk.strip()
            if stripped:
                statements.append((lineno, col + len(chunk) - len(chunk.lstrip()), stripped))
            col += len(chunk) + 1
    for lineno, col, st in statements:
        kw, _, rest = st.partition(" ")
        rest = rest.strip()
        if kw == "field":
            try:
                field = Field.parse(rest)
            except LinalgError as e:
                raise ParseError(str(e), lineno, col) from None
        elif kw == "gens":
            names = rest.split()
            if not names:
                raise ParseError("no generators declared", lineno, col)
            for g in names:
                if not _NAME.match(g):
                    raise ParseError(f"bad generator name {g!r}", lineno, col)
            if len(set(names)) != len(names):
                raise ParseError("duplicate generator name", lineno, col)
            gens = names
        elif kw == "rel":
            if gens is None:
                raise ParseError("relation before gens", lineno, col)
            poly = _parse_poly(rest, {g: i for i, g in enumerate(gens)}, lineno, col + 4)
            lengths = {len(w) for w in poly}
            if len(lengths) != 1:
                raise ParseError("non-homogeneous relation", lineno, col)
            deg = lengths.pop()
            if deg < 2:
                raise ParseError(f"relation of degree {deg} < 2", lineno, col)
            raw.append((deg, poly))
        else:
            raise ParseError(f"unknown statement {kw!r}", lineno, col)
    if gens is None:
        raise ParseError("missing gens statement")
    if field_override is not None:
        field = field_override
    return from_polys(gens, raw, field, name=name, cap=cap, normalize_relations=normalize_relations)


def from_polys(gens, polys, field: Field = QQ, name: str = "",
               cap: int | None = DEFAULT_AMBIENT_CAP, normalize_relations: bool = True):
    """Build from ``[(degree, {word: coeff})]`` or bare ``{word: coeff}`` dicts."""
    d = len(gens)
    by_deg: dict = {}
    for item in polys:
        poly = item[1] if isinstance(item, tuple) else item
        deg = len(next(iter(poly)))
        by_deg.setdefault(deg, []).append(poly)
    rels = {}
    for s, vecs in sorted(by_deg.items()):
        t = ts.from_word_vectors(d, s, vecs, field, cap)
        if t.dim:
            rels[s] = t
    p = Presentation(field, list(gens), rels, name)
    return normalize(p, cap) if normalize_relations else p


def from_words(gens, words, field: Field = QQ, name: str = "", **kw) -> Presentation:
    """Monomial presentation from words written as strings of one-letter generators
    or tuples of indices."""
    idx = {g: i for i, g in enumerate(gens)}
    polys = []
    for w in words:
        t = tuple(idx[c] for c in w) if isinstance(w, str) else tuple(w)
        polys.append({t: 1})
    return from_polys(gens, polys, field, name, **kw)


def lower_ideal(p: Presentation, s: int, cap=DEFAULT_AMBIENT_CAP) -> TensorSubspace:
    """Degree-s part of the ideal generated by relations of degree < s."""
    parts = []
    for t in p.degrees:
        if t >= s:
            break
        r = p.relations[t]
        for j in range(s - t + 1):
            parts.append(ts.sandwich(j, r, s - t - j, cap))
    return ts.tensor_sum(parts, p.d, s, p.field, cap)


def check_minimality(p: Presentation, cap=DEFAULT_AMBIENT_CAP):
    """Return ``(ok, witness)``; the witness is a word vector in R_s meeting lower relations."""
    for s in p.degrees:
        inter = lower_ideal(p, s, cap).intersect(p.relations[s])
        if inter.dim:
            return False, (s, inter.word_vectors()[0])
    return True, None


def normalize(p: Presentation, cap=DEFAULT_AMBIENT_CAP) -> Presentation:
    """Drop the part of each R_n already generated by lower degrees.

    R_n is replaced by the complement (greedy pivot rule) of
    R_n meet L_n inside R_n, where L_n is the lower-degree ideal at n.
    """
    rels = {}
    warnings = list(p.warnings)
    cur = Presentation(p.field, p.generators, rels, p.name, warnings)
    for s in sorted(p.relations):
        r = p.relations[s]
        if not r.dim:
            continue
        low = lower_ideal(cur, s, cap)
        overlap = low.intersect(r)
        if overlap.dim:
            warnings.append(f"degree {s}: {overlap.dim} relation(s) already implied by "
                            f"lower degrees were removed")
            r = r.complement_in(overlap)
        if r.dim:
            rels[s] = r
    return cur


def ideal_component(p: Presentation, n: int, cap=DEFAULT_AMBIENT_CAP) -> TensorSubspace:
    """I_n = sum_s sum_j V^(j) (x) R_s (x) V^(n-s-j)."""
    parts = []
    for s in p.degrees:
        if s > n:
            break
        for j in range(n - s + 1):
            parts.append(ts.sandwich(j, p.relations[s], n - s - j, cap))
    return ts.tensor_sum(parts, p.d, n, p.field, cap)


def opposite(p: Presentation) -> Presentation:
    rels = {s: ts.reverse_space(r) for s, r in p.relations.items()}
    name = p.name + "_op" if p.name else ""
    return Presentation(p.field, list(p.generators), rels, name, list(p.warnings))


def single_degree(p: Presentation, s: int) -> Presentation:
    """A^s = T(V)/<R_s>."""
    return Presentation(p.field, list(p.generators), {s: p.relations[s]},
                        f"{p.name}^{s}" if p.name else "")


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """Free product; colliding generator names in q are renamed."""
    if p.field != q.field:
        raise LinalgError("free product needs a common field")
    names = list(p.generators)
    ren = []
    for g in q.generators:
        new = g
        k = 1
        while new in names:
            new = f"{g}{k}"
            k += 1
        names.append(new)
        ren.append(new)
    shift = p.d
    polys = [v for v in p.relation_polys()]
    for v in q.relation_polys():
        polys.append({tuple(c + shift for c in w): a for w, a in v.items()})
    name = f"{p.name}*{q.name}" if p.name and q.name else ""
    return from_polys(names, polys, p.field, name)
