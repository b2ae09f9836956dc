"""Bundled example algebras and seeded random presentation families."""

from __future__ import annotations

import random
from importlib import resources

from .linalg import Field, QQ
from .presentation import Presentation, free_product, from_polys, parse

EXAMPLE_ALGEBRAS = ["notcoprodcasi_1", "notcoprodcasi_2", "difkos", "loco_B", "loco_C", "loco_A"]
EXTRA_ALGEBRAS = ["x2_y3", "xz", "y2x", "xz_free_y2x"]


def bundled_names() -> list:
    files = resources.files("multikoszul") / "data"
    return sorted(f.name[:-4] for f in files.iterdir() if f.name.endswith(".alg"))


def bundled_text(name: str) -> str:
    path = resources.files("multikoszul") / "data" / f"{name}.alg"
    return path.read_text()


def load(name: str, field: Field | None = None) -> Presentation:
    return parse(bundled_text(name), field_override=field, name=name)


def example_algebras(field: Field | None = None) -> list:
    return [load(n, field) for n in EXAMPLE_ALGEBRAS]


def _has_factor(word: tuple, factor: tuple) -> bool:
    k = len(factor)
    return any(word[i:i + k] == factor for i in range(len(word) - k + 1))


def random_monomial(rng: random.Random, degrees=(2, 3), max_gens: int = 3,
                    max_rels: int = 3, field: Field = QQ) -> Presentation:
    """A random minimal monomial presentation with relations in exactly the given degrees."""
    names = ["x", "y", "z", "w"]
    while True:
        d = rng.randint(2, max_gens)
        rels: dict = {}
        for s in degrees:
            count = rng.randint(1, max_rels)
            rels[s] = {tuple(rng.randrange(d) for _ in range(s)) for _ in range(count)}
        lower: list = []
        ok = True
        for s in sorted(degrees):
            keep = {w for w in rels[s] if not any(_has_factor(w, f) for f in lower)}
            if not keep:
                ok = False
                break
            rels[s] = keep
            lower.extend(keep)
        if not ok:
            continue
        polys = [{w: 1} for s in sorted(degrees) for w in sorted(rels[s])]
        return from_polys(names[:d], polys, field)


def random_generic(rng: random.Random, degrees=(2, 3), gens: int = 2, field: Field = QQ,
                   coeff_range: int = 3) -> Presentation:
    """A random two-degree presentation with small integer coefficients (one relation per degree)."""
    names = ["x", "y", "z"][:gens]
    while True:
        polys = []
        for s in degrees:
            poly = {}
            for _ in range(rng.randint(1, 3)):
                w = tuple(rng.randrange(gens) for _ in range(s))
                c = rng.randint(-coeff_range, coeff_range)
                if c:
                    poly[w] = poly.get(w, 0) + c
            poly = {w: c for w, c in poly.items() if c}
            if poly:
                polys.append(poly)
        p = from_polys(names, polys, field)
        if p.degrees == sorted(degrees):
            return p


def monomial_corpus(seed: int = 0, count: int = 200, **kw) -> list:
    rng = random.Random(seed)
    return [random_monomial(rng, **kw) for _ in range(count)]


def free_product_instances(field: Field | None = None) -> list:
    """Free products of one-degree algebras; these are multi-Koszul by construction."""
    out = []
    a = parse("gens x; rel x*x", field_override=field, name="x2")
    b = parse("gens y; rel y*y*y", field_override=field, name="y3")
    out.append(free_product(a, b))
    c = parse("gens u; rel u*u*u*u", field_override=field, name="u4")
    out.append(free_product(a, c))
    return out
