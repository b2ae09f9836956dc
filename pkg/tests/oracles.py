"""Independent oracles for monomial algebras.

Nothing here touches the package's linear algebra: everything is plain word
combinatorics, so agreement with the library is a genuine cross-check.
"""

from itertools import product


def contains_factor(word, obstructions):
    return any(word[i:i + len(o)] == o for o in obstructions for i in range(len(word) - len(o) + 1))


def hilbert_by_words(d, obstructions, n_max):
    """Count words avoiding every obstruction as a factor."""
    obs = [tuple(o) for o in obstructions]
    return [sum(1 for w in product(range(d), repeat=n) if not contains_factor(w, obs))
            for n in range(n_max + 1)]


def anick_betti(d, obstructions, n_max, i_max):
    """Betti numbers of k over a monomial algebra from Anick chains.

    For monomial algebras the Anick resolution is minimal, so the number of
    (i-1)-chains of length n is dim Tor_(i, n).
    """
    obs = [tuple(o) for o in obstructions]
    betti = {(0, 0): 1}
    # (word, tail) pairs; 0-chains are the letters
    chains = [((x,), (x,)) for x in range(d)]
    i = 1
    while chains and i <= i_max:
        for w, _ in chains:
            if len(w) <= n_max:
                betti[(i, len(w))] = betti.get((i, len(w)), 0) + 1
        nxt = []
        for w, tail in chains:
            for extra in range(1, n_max - len(w) + 1):
                for t in product(range(d), repeat=extra):
                    u = tail + t
                    # an obstruction must end at the end of u and start inside the old tail
                    ok_suffix = any(len(o) <= len(u) and u[len(u) - len(o):] == o
                                    and len(u) - len(o) < len(tail) for o in obs)
                    if not ok_suffix:
                        continue
                    if contains_factor(u[:-1], obs):
                        continue
                    nxt.append((w + t, t))
        chains = nxt
        i += 1
    return {k: v for k, v in betti.items() if v}


def n_s(s, i):
    return (i // 2) * s + (i % 2)


def j_words(d, rels_by_degree, i):
    """Word sets of J_i for a monomial presentation: {s: set of words} (i >= 2)."""
    out = {}
    for s, rel in rels_by_degree.items():
        rel = {tuple(w) for w in rel}
        m_target = n_s(s, i)
        cur = rel
        for m in range(s + 1, m_target + 1):
            cur = {w + (x,) for w in cur for x in range(d) if (w + (x,))[m - s:] in rel}
        out[s] = cur
    return out


def j_dims(d, rels_by_degree, i_max):
    """{(i, n): dim J_i in degree n}."""
    dims = {(0, 0): 1, (1, 1): d}
    for i in range(2, i_max + 1):
        for s, ws in j_words(d, rels_by_degree, i).items():
            if ws:
                n = n_s(s, i)
                dims[(i, n)] = dims.get((i, n), 0) + len(ws)
    return {k: v for k, v in dims.items() if v}
