"""Crystal graphs, tensor-power words, invariant words and promotion.

A crystal is stored as its lowering edges ``(a, i, b)``: f_i(a) = b.  For a
vertex x, ``H[x][i]`` counts the raising moves e_i available at x and
``D[x][i]`` the lowering moves f_i.  On words the tensor rule is applied as
a left fold; e_i and f_i use the equivalent bracketing scan.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ._budget import BudgetExceeded, budget
from .csp import FiniteAction, OrbitReport, orbits

Word = tuple[int, ...]


class CrystalError(ValueError):
    """Malformed crystal data; the message carries the offending line when known."""


@dataclass(frozen=True, eq=False)
class CrystalGraph:
    name: str
    rank: int
    size: int
    edges: tuple[tuple[int, int, int], ...]
    letters: dict[int, str] | None = field(default=None)

    def __post_init__(self):
        down = [dict() for _ in range(self.size + 1)]
        up = [dict() for _ in range(self.size + 1)]
        for a, i, b in self.edges:
            down[a][i] = b
            up[b][i] = a
        object.__setattr__(self, "_down", down)
        object.__setattr__(self, "_up", up)
        H = [None] + [tuple(self._run(up, x, i) for i in range(1, self.rank + 1)) for x in self.vertices]
        D = [None] + [tuple(self._run(down, x, i) for i in range(1, self.rank + 1)) for x in self.vertices]
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "_path", None)

    @staticmethod
    def _run(step, x, i):
        n = 0
        seen = {x}
        while i in step[x]:
            x = step[x][i]
            if x in seen:
                raise CrystalError(f"label {i} string through vertex {x} is a cycle")
            seen.add(x)
            n += 1
        return n

    @property
    def vertices(self) -> range:
        return range(1, self.size + 1)

    def e(self, x: int, i: int) -> int | None:
        return self._up[x].get(i)

    def f(self, x: int, i: int) -> int | None:
        return self._down[x].get(i)

    def weight(self, x: int) -> tuple[int, ...]:
        """Dynkin labels D - H of a vertex."""
        return tuple(d - h for d, h in zip(self.D[x], self.H[x]))

    @property
    def source(self) -> int:
        (s,) = [x for x in self.vertices if not any(self.H[x])]
        return s

    @property
    def sink(self) -> int:
        (s,) = [x for x in self.vertices if not any(self.D[x])]
        return s

    def lowering_path(self) -> tuple[int, ...]:
        """Label sequence of the lexicographically smallest directed path
        from the source to the sink."""
        if self._path is None:
            target = self.sink

            def search(x):
                if x == target:
                    return ()
                for i in sorted(self._down[x]):
                    rest = search(self._down[x][i])
                    if rest is not None:
                        return (i,) + rest
                return None

            object.__setattr__(self, "_path", search(self.source))
        return self._path

    def max_string(self) -> tuple[int, ...]:
        return tuple(max(self.H[x][i] for x in self.vertices) for i in range(self.rank))

    def format_word(self, w: Sequence[int]) -> str:
        if self.letters:
            return "".join(self.letters[x] for x in w)
        sep = "" if self.size < 10 else " "
        return sep.join(str(x) for x in w)

    def parse_word(self, text: str) -> Word:
        if self.letters:
            rev = {v: k for k, v in self.letters.items()}
            try:
                return tuple(rev[ch] for ch in text)
            except KeyError as exc:
                raise ValueError(f"unknown letter {exc.args[0]!r} for crystal {self.name}") from None
        if " " in text.strip() or "," in text:
            return tuple(int(t) for t in text.replace(",", " ").split())
        return tuple(int(ch) for ch in text)

    def to_text(self) -> str:
        lines = [f"name {self.name}", f"labels {self.rank}", f"vertices {self.size}"]
        lines += [f"edge {a} {i} {b}" for a, i, b in self.edges]
        return "\n".join(lines) + "\n"

    def character(self, R):
        """Weight multiplicities as a Character of root system R; labels must
        follow R's simple-root numbering."""
        from .liechar import Character

        if R.rank != self.rank:
            raise ValueError(f"crystal {self.name} has {self.rank} labels, {R.name} has rank {R.rank}")
        return Character(R, crystal_weights(self))


def _validate(name, rank, size, edges, lines=None) -> CrystalGraph:
    where = (lambda k: f" (line {lines[k]})") if lines else (lambda k: "")
    out_seen, in_seen = {}, {}
    for k, (a, i, b) in enumerate(edges):
        if not (1 <= a <= size and 1 <= b <= size):
            raise CrystalError(f"edge {a} {i} {b}: vertex out of range 1..{size}{where(k)}")
        if not 1 <= i <= rank:
            raise CrystalError(f"edge {a} {i} {b}: label out of range 1..{rank}{where(k)}")
        if a == b:
            raise CrystalError(f"edge {a} {i} {b}: self loop{where(k)}")
        if (a, i) in out_seen:
            raise CrystalError(f"vertex {a} has two outgoing {i}-edges{where(k)}")
        if (b, i) in in_seen:
            raise CrystalError(f"vertex {b} has two incoming {i}-edges{where(k)}")
        out_seen[a, i] = k
        in_seen[b, i] = k
    adj = {x: set() for x in range(1, size + 1)}
    for a, _, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    if size:
        stack, seen = [1], {1}
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        if len(seen) != size:
            raise CrystalError(f"crystal {name} is disconnected: {sorted(set(adj) - seen)} unreachable from 1")
    X = CrystalGraph(name, rank, size, tuple(edges))
    sources = [x for x in X.vertices if not any(X.H[x])]
    sinks = [x for x in X.vertices if not any(X.D[x])]
    if len(sources) != 1:
        raise CrystalError(f"crystal {name} needs exactly one source, found {sources}")
    if len(sinks) != 1:
        raise CrystalError(f"crystal {name} needs exactly one sink, found {sinks}")
    return X


def load_crystal(text: str) -> CrystalGraph:
    """Parse the line-oriented crystal format (``name``, ``labels``,
    ``vertices``, ``edge a i b``; ``#`` starts a comment)."""
    name, rank, size = None, None, None
    edges, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "name" and len(tok) == 2:
                name = tok[1]
            elif tok[0] == "labels" and len(tok) == 2:
                rank = int(tok[1])
            elif tok[0] == "vertices" and len(tok) == 2:
                size = int(tok[1])
            elif tok[0] == "edge" and len(tok) == 4:
                edges.append(tuple(int(t) for t in tok[1:]))
                lines.append(lineno)
            else:
                raise CrystalError(f"line {lineno}: cannot parse {raw.strip()!r}")
        except ValueError as exc:
            if isinstance(exc, CrystalError):
                raise
            raise CrystalError(f"line {lineno}: expected integers in {raw.strip()!r}") from None
    if size is None:
        size = max((max(a, b) for a, _, b in edges), default=1)
    if rank is None:
        rank = max((i for _, i, _ in edges), default=1)
    return _validate(name or "crystal", rank, size, edges, lines)


def _chain(name, labels, letters=None) -> CrystalGraph:
    edges = [(k + 1, i, k + 2) for k, i in enumerate(labels)]
    X = _validate(name, max(labels, default=1), len(labels) + 1, edges)
    if letters:
        object.__setattr__(X, "letters", letters)
    return X


def _spin_b(n: int) -> CrystalGraph:
    signs = [tuple(1 - 2 * ((m >> (n - 1 - j)) & 1) for j in range(n)) for m in range(2**n)]
    index = {s: k + 1 for k, s in enumerate(signs)}
    edges = []
    for s in signs:
        for i in range(1, n):
            if s[i - 1] == 1 and s[i] == -1:
                t = list(s)
                t[i - 1], t[i] = -1, 1
                edges.append((index[s], i, index[tuple(t)]))
        if s[n - 1] == 1:
            t = list(s)
            t[n - 1] = -1
            edges.append((index[s], n, index[tuple(t)]))
    edges.sort()
    return _validate(f"b{n}_spin", n, 2**n, edges)


BUILTIN_NAMES = ("typeA_vector", "sl2", "g2_fund7", "b3_spin", "so_vector")


def builtin(name: str, param: int | None = None) -> CrystalGraph:
    """Named crystals: typeA_vector(n<=6), sl2(k<=6), g2_fund7, b3_spin, so_vector(7)."""
    if name == "typeA_vector":
        n = 3 if param is None else param
        if not 2 <= n <= 6:
            raise ValueError("typeA_vector needs 2 <= n <= 6")
        return _chain(f"typeA_vector{n}", list(range(1, n)))
    if name == "sl2":
        k = 1 if param is None else param
        if not 1 <= k <= 6:
            raise ValueError("sl2 needs 1 <= k <= 6")
        return _chain(f"sl2_{k}", [1] * k, {1: "U", 2: "D"} if k == 1 else None)
    if name == "g2_fund7":
        return _chain("g2_fund7", [1, 2, 1, 1, 2, 1])
    if name == "b3_spin":
        return _spin_b(3)
    if name == "so_vector":
        n = 7 if param is None else param
        if n != 7:
            raise ValueError("so_vector is only provided for n = 7")
        return _chain("so7_vector", [1, 2, 3, 3, 2, 1])
    raise ValueError(f"unknown builtin crystal {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def crystal_weights(X: CrystalGraph) -> dict[tuple[int, ...], int]:
    mults: dict[tuple[int, ...], int] = {}
    for x in X.vertices:
        wt = X.weight(x)
        mults[wt] = mults.get(wt, 0) + 1
    return mults


def _tensor(h1, d1, h2, d2):
    """H, D of A (x) B for one label."""
    if h2 >= d1:
        return h1 + h2 - d1, d2
    return h1, d2 + d1 - h2


def string_data(X: CrystalGraph, w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(H, D) of a word, folding the tensor rule left to right."""
    H = [0] * X.rank
    D = [0] * X.rank
    for x in w:
        hx, dx = X.H[x], X.D[x]
        for i in range(X.rank):
            H[i], D[i] = _tensor(H[i], D[i], hx[i], dx[i])
    return tuple(H), tuple(D)


def _unmatched(X: CrystalGraph, w: Sequence[int], i: int):
    """Positions carrying unmatched raising (-) and lowering (+) signs for label i.

    Each letter contributes H minuses then D pluses; a plus cancels a later minus.
    """
    minus, plus = [], []
    for pos, x in enumerate(w):
        for _ in range(X.H[x][i - 1]):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        plus.extend([pos] * X.D[x][i - 1])
    return minus, plus


def apply_e(X: CrystalGraph, w: Sequence[int], i: int) -> Word | None:
    minus, _ = _unmatched(X, w, i)
    if not minus:
        return None
    pos = minus[-1]
    out = list(w)
    out[pos] = X.e(out[pos], i)
    return tuple(out)


def apply_f(X: CrystalGraph, w: Sequence[int], i: int) -> Word | None:
    _, plus = _unmatched(X, w, i)
    if not plus:
        return None
    pos = plus[0]
    out = list(w)
    out[pos] = X.f(out[pos], i)
    return tuple(out)


def is_invariant(X: CrystalGraph, w: Sequence[int]) -> bool:
    H, D = string_data(X, w)
    return not any(H) and not any(D)


def enumerate_invariants(X: CrystalGraph, r: int) -> list[Word]:
    """All words of length r with H = D = 0, in lexicographic order.

    H of a prefix never decreases, so a prefix with H != 0 is dead; a prefix
    whose D exceeds what the remaining letters can cancel is dead too.
    """
    cap = budget()
    maxh = X.max_string()
    out: list[Word] = []
    visited = 0
    word: list[int] = []

    def extend(D):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise BudgetExceeded(f"invariant enumeration for {X.name}, r={r} exceeded {cap} partial states")
        left = r - len(word)
        if left == 0:
            if not any(D):
                out.append(tuple(word))
            return
        for x in X.vertices:
            hx, dx = X.H[x], X.D[x]
            newD = []
            ok = True
            for i in range(X.rank):
                if hx[i] > D[i]:
                    ok = False
                    break
                nd = D[i] - hx[i] + dx[i]
                if nd > (left - 1) * maxh[i]:
                    ok = False
                    break
                newD.append(nd)
            if ok:
                word.append(x)
                extend(newD)
                word.pop()

    extend([0] * X.rank)
    return out


class PromotionError(RuntimeError):
    """An operator step was undefined, which means corrupt crystal data."""


def promote(X: CrystalGraph, w: Sequence[int]) -> Word:
    """Drop the leading source letter, then raise to the top of the remaining
    component, then append the sink letter.

    Without its first letter the word is the lowest element of a copy of the
    dual crystal, whose raising path replays the source-to-sink lowering
    path of X in the same order.
    """
    w = tuple(w)
    if not w:
        return w
    if not is_invariant(X, w):
        raise ValueError(f"promotion needs an invariant word, got {X.format_word(w)}")
    if w[0] != X.source or w[-1] != X.sink:
        raise PromotionError(f"invariant word {X.format_word(w)} does not start at the source and end at the sink")
    cur = w[1:]
    for i in X.lowering_path():
        nxt = apply_e(X, cur, i)
        if nxt is None:
            raise PromotionError(f"e_{i} undefined on {X.format_word(cur)} while promoting {X.format_word(w)}")
        cur = nxt
    return cur + (X.sink,)


def promotion_action(X: CrystalGraph, r: int) -> FiniteAction:
    words = enumerate_invariants(X, r)
    index = {w: k for k, w in enumerate(words)}
    gen = []
    for w in words:
        p = promote(X, w)
        if p not in index:
            raise PromotionError(f"promotion left the invariant set at {X.format_word(w)}")
        gen.append(index[p])
    return FiniteAction(words, gen, max(r, 1))


def promotion_orbits(X: CrystalGraph, r: int) -> OrbitReport:
    return orbits(promotion_action(X, r))


def words_to_json(words: Iterable[Sequence[int]]) -> str:
    return json.dumps([list(w) for w in words])
