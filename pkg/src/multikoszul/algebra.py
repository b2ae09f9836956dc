"""Truncated graded algebra A = T(V)/I with normal-word bases.

The basis of A_n consists of the non-pivot words of the RREF of I_n under
lexicographic order.  Those words are closed under prefixes and suffixes,
so A_n is computed as a quotient of A_(n-1) (x) V by the images of
A_(n-s) (x) R_s, never touching the full space V^(n).
"""

from __future__ import annotations

from .linalg import Echelon, axpy
from .presentation import Presentation
from .tensor import DEFAULT_AMBIENT_CAP, TruncationTooDeep, word_index


class GradedAlgebra:
    def __init__(self, pres: Presentation, n_max: int, cap: int | None = DEFAULT_AMBIENT_CAP):
        self.pres = pres
        self.field = pres.field
        self.d = pres.d
        self.cap = cap
        self.words: list = [[()]]
        self.index: list = [{(): 0}]
        # rmul[n][x][i]: normal form of words[n][i] * x, a vector in A_(n+1)
        self.rmul: list = []
        self.lmul: list = []
        self._rels = {s: pres.relations[s].word_vectors() for s in pres.degrees}
        self.n_max = 0
        self.extend(n_max)

    @property
    def dims(self) -> list:
        return [len(w) for w in self.words]

    def dim(self, n: int) -> int:
        if n < 0:
            return 0
        self.extend(n)
        return len(self.words[n])

    def extend(self, n_max: int) -> None:
        while self.n_max < n_max:
            self._grow()

    def _grow(self) -> None:
        n = self.n_max + 1
        d, p = self.d, self.field.p
        prev = self.words[n - 1]
        ncand = len(prev) * d
        if self.cap is not None and ncand > self.cap:
            raise TruncationTooDeep(d, n, self.cap, ncand)
        # candidate column (i, x) -> i*d + x, already in lex order
        ech = Echelon(self.field)
        for s, rels in self._rels.items():
            if s > n:
                continue
            for u in self.words[n - s]:
                for r in rels:
                    row: dict = {}
                    for w, a in r.items():
                        v = self.mul_word({self.index[n - s][u]: 1}, n - s, w[:-1])
                        x = w[-1]
                        for i, b in v.items():
                            k = i * d + x
                            c = row.get(k, 0) + a * b
                            if p:
                                c %= p
                            if c:
                                row[k] = c
                            else:
                                row.pop(k, None)
                    if row:
                        ech.add(row)
        red = ech.rref_rows()
        pivots = {min(r): r for r in red}
        words = []
        index = {}
        newpos = {}
        for k in range(ncand):
            if k not in pivots:
                i, x = divmod(k, d)
                w = prev[i] + (x,)
                newpos[k] = len(words)
                index[w] = len(words)
                words.append(w)
        rm = [[None] * len(prev) for _ in range(d)]
        for k in range(ncand):
            i, x = divmod(k, d)
            if k in newpos:
                rm[x][i] = {newpos[k]: 1}
            else:
                row = pivots[k]
                rm[x][i] = {newpos[c]: (-a) % p if p else -a for c, a in row.items() if c != k}
        self.words.append(words)
        self.index.append(index)
        self.rmul.append(rm)
        # left action: x * (u y) = (x * u) * y
        lm = [[None] * len(prev) for _ in range(d)]
        for x in range(d):
            for i, w in enumerate(prev):
                if n == 1:
                    lm[x][i] = rm[x][0]
                    continue
                inner = self.lmul[n - 2][x][self.index[n - 2][w[:-1]]]
                out: dict = {}
                y = w[-1]
                rmy = rm[y]
                for j, a in inner.items():
                    axpy(out, a, rmy[j], p)
                lm[x][i] = out
        self.lmul.append(lm)
        self.n_max = n

    def mul_word(self, vec: dict, n: int, word) -> dict:
        """``vec * word`` for ``vec`` in A_n."""
        p = self.field.p
        self.extend(n + len(word))
        for x in word:
            table = self.rmul[n][x]
            out: dict = {}
            for i, a in vec.items():
                axpy(out, a, table[i], p)
            vec = out
            n += 1
            if not vec:
                break
        return vec

    def word_mul(self, word, vec: dict, n: int) -> dict:
        """``word * vec`` for ``vec`` in A_n."""
        p = self.field.p
        self.extend(n + len(word))
        for x in reversed(word):
            table = self.lmul[n][x]
            out: dict = {}
            for i, a in vec.items():
                axpy(out, a, table[i], p)
            vec = out
            n += 1
            if not vec:
                break
        return vec

    def normal_form(self, word) -> dict:
        return self.mul_word({0: 1}, 0, word)

    def mul(self, u: dict, m: int, v: dict, n: int) -> dict:
        """Product of ``u`` in A_m and ``v`` in A_n."""
        p = self.field.p
        out: dict = {}
        for j, b in v.items():
            prod = self.mul_word(u, m, self.words[n][j])
            axpy(out, b, prod, p)
        return out

    def left_action(self, x: int, n: int) -> list:
        """Matrix rows (one per basis word of A_n) of u -> x*u."""
        self.extend(n + 1)
        return self.lmul[n][x]

    def right_action(self, x: int, n: int) -> list:
        self.extend(n + 1)
        return self.rmul[n][x]

    def projection_row(self, word) -> dict:
        """Image of a word of V^(n) in A_n coordinates."""
        return self.normal_form(tuple(word))

    def hilbert_series(self) -> list:
        return self.dims

    def lift(self, vec: dict, n: int) -> dict:
        """A_n coordinates -> word vector over normal words."""
        return {self.words[n][i]: a for i, a in vec.items()}

    def word_column(self, word) -> int:
        return word_index(word, self.d)


def algebra_dims(pres: Presentation, n_max: int, cap: int | None = DEFAULT_AMBIENT_CAP) -> list:
    return GradedAlgebra(pres, n_max, cap).dims
