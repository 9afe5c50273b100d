"""Temperley-Lieb diagrams, Dyck paths, rectangular tableaux, the skein action
of the symmetric group, perfect matchings and derangements.

Points are numbered 1..2r.  A diagram is stored as its arc list sorted by
opener, so equality is structural.  Words use the letters ``U`` (opener)
and ``D`` (closer).  Permutations are 1-based image tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from ._budget import BudgetExceeded, budget
from .csp import FiniteAction
from .symfunc import CycleTypeFunction, Partition, partitions, tableau_maj

Arc = tuple[int, int]


class DiagramError(ValueError):
    pass


def _canonical(arcs: Iterable[Sequence[int]]) -> tuple[Arc, ...]:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in arcs))


def _check_pairing(arcs: tuple[Arc, ...]) -> None:
    points = sorted(p for arc in arcs for p in arc)
    if points != list(range(1, 2 * len(arcs) + 1)):
        raise DiagramError(f"arcs {list(arcs)} do not pair up the points 1..{2 * len(arcs)}")


@dataclass(frozen=True, order=True)
class PerfectMatching:
    arcs: tuple[Arc, ...]

    def __init__(self, arcs: Iterable[Sequence[int]]):
        canon = _canonical(arcs)
        _check_pairing(canon)
        object.__setattr__(self, "arcs", canon)

    @property
    def r(self) -> int:
        return len(self.arcs)

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.arcs:
            out[a], out[b] = b, a
        return out

    def relabel(self, perm: Sequence[int]) -> PerfectMatching:
        """Image of the matching under the point permutation i -> perm[i-1]."""
        return type(self)((perm[a - 1], perm[b - 1]) for a, b in self.arcs)

    def to_list(self) -> list[list[int]]:
        return [list(arc) for arc in self.arcs]

    def __str__(self):
        return "".join(f"({a},{b})" for a, b in self.arcs)


def _crossing(arcs: Sequence[Arc]) -> Arc | None:
    for (a, b), (c, d) in itertools.combinations(arcs, 2):
        if a < c < b < d or c < a < d < b:
            return (a, b)
    return None


class TLDiagram(PerfectMatching):
    """Noncrossing perfect matching of 1..2r."""

    def __init__(self, arcs: Iterable[Sequence[int]]):
        super().__init__(arcs)
        if _crossing(self.arcs) is not None:
            raise DiagramError(f"arcs {list(self.arcs)} cross")


# ---------------------------------------------------------------- encodings


def _check_word(w: str) -> None:
    height = 0
    for k, ch in enumerate(w):
        if ch not in "UD":
            raise DiagramError(f"letter {ch!r} at position {k + 1} is not U or D")
        height += 1 if ch == "U" else -1
        if height < 0:
            raise DiagramError(f"word {w} goes below zero at position {k + 1}")
    if height:
        raise DiagramError(f"word {w} is unbalanced")


def is_tl_word(w: str) -> bool:
    try:
        _check_word(w)
    except DiagramError:
        return False
    return True


def word_to_tl(w: str) -> TLDiagram:
    _check_word(w)
    stack, arcs = [], []
    for i, ch in enumerate(w, start=1):
        if ch == "U":
            stack.append(i)
        else:
            arcs.append((stack.pop(), i))
    return TLDiagram(arcs)


def tl_to_word(d: TLDiagram) -> str:
    letters = [""] * (2 * d.r)
    for a, b in d.arcs:
        letters[a - 1], letters[b - 1] = "U", "D"
    return "".join(letters)


def word_to_dyck(w: str) -> tuple[int, ...]:
    _check_word(w)
    return tuple(1 if ch == "U" else -1 for ch in w)


def dyck_to_word(steps: Sequence[int]) -> str:
    if any(s not in (1, -1) for s in steps):
        raise DiagramError("Dyck steps must be +1 or -1")
    w = "".join("U" if s == 1 else "D" for s in steps)
    _check_word(w)
    return w


@dataclass(frozen=True)
class RectTableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            return
        k = len(rows[0])
        if any(len(row) != k for row in rows):
            raise DiagramError(f"shape {[len(r) for r in rows]} is not rectangular")
        if sorted(x for row in rows for x in row) != list(range(1, k * len(rows) + 1)):
            raise DiagramError("entries are not 1..kn")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if j + 1 < k and row[j + 1] < x or i + 1 < len(rows) and rows[i + 1][j] < x:
                    raise DiagramError(f"entry {x} breaks row/column increase")

    @property
    def shape(self) -> tuple[int, int]:
        """(number of rows, row length)."""
        return (len(self.rows), len(self.rows[0])) if self.rows else (0, 0)

    def word(self) -> tuple[int, ...]:
        """Lattice word: letter i is the (1-based) row containing i."""
        where = {x: i + 1 for i, row in enumerate(self.rows) for x in row}
        return tuple(where[x] for x in range(1, len(where) + 1))

    @classmethod
    def from_word(cls, w: Sequence[int]) -> RectTableau:
        n = max(w, default=0)
        rows = [[] for _ in range(n)]
        for x, letter in enumerate(w, start=1):
            rows[letter - 1].append(x)
        return cls(rows)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self):
        width = len(str(max(self.rows[-1])))
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def word_to_tableau(w: str) -> RectTableau:
    _check_word(w)
    return RectTableau.from_word([1 if ch == "U" else 2 for ch in w])


def tableau_to_word(T: RectTableau) -> str:
    if T.shape[0] not in (0, 2):
        raise DiagramError("only two-row tableaux encode U/D words")
    return "".join("U" if letter == 1 else "D" for letter in T.word())


def rect_tableaux(rows: int, cols: int) -> Iterator[RectTableau]:
    """Standard tableaux of shape cols^rows, in lexicographic word order."""
    n = rows * cols
    counts = [0] * rows
    word = []

    def extend():
        if len(word) == n:
            yield RectTableau.from_word(word)
            return
        for i in range(rows):
            if counts[i] < cols and (i == 0 or counts[i - 1] > counts[i]):
                counts[i] += 1
                word.append(i + 1)
                yield from extend()
                word.pop()
                counts[i] -= 1

    yield from extend()


def tl_diagrams(r: int) -> list[TLDiagram]:
    """All TL diagrams on 2r points, ordered by their U/D words."""
    words = []

    def extend(prefix, ups, downs):
        if ups == downs == r:
            words.append(prefix)
            return
        if ups < r:
            extend(prefix + "U", ups + 1, downs)
        if downs < ups:
            extend(prefix + "D", ups, downs + 1)

    extend("", 0, 0)
    return [word_to_tl(w) for w in sorted(words, reverse=True)]


# ---------------------------------------------------------------- rotation and promotion


def _rotate(arcs, m: int, steps: int):
    return [((a - 1 + steps) % m + 1, (b - 1 + steps) % m + 1) for a, b in arcs]


def rotate_tl(d: TLDiagram, steps: int = 1) -> TLDiagram:
    """Relabel point i as i + steps (mod 2r)."""
    return TLDiagram(_rotate(d.arcs, 2 * d.r, steps))


def rotate_matching(m: PerfectMatching, steps: int = 1) -> PerfectMatching:
    return PerfectMatching(_rotate(m.arcs, 2 * m.r, steps))


def jdt_promote(T: RectTableau) -> RectTableau:
    """Remove 1, decrement, slide the hole to the bottom-right corner taking
    the smaller of the right/below neighbours, then fill in kn."""
    n, k = T.shape
    if not n:
        return T
    grid = [[x - 1 for x in row] for row in T.rows]
    i = j = 0
    while True:
        right = grid[i][j + 1] if j + 1 < k else None
        below = grid[i + 1][j] if i + 1 < n else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[i][j] = right
            j += 1
        else:
            grid[i][j] = below
            i += 1
    grid[i][j] = n * k
    return RectTableau(grid)


def tl_word_promote(w: str) -> str:
    """Drop the leading U, turn the last D whose prefix is a TL word into U,
    append D."""
    _check_word(w)
    if not w:
        return w
    rest = w[1:]
    height, flip = 0, None
    for k, ch in enumerate(rest):
        if ch == "D" and height == 0:
            flip = k
        height += 1 if ch == "U" else -1
        if height < 0:
            break
    return rest[:flip] + "U" + rest[flip + 1 :] + "D"


def maj(T: RectTableau) -> int:
    return tableau_maj(T.rows)


# ---------------------------------------------------------------- skein action


def _cupcap(d: TLDiagram, i: int) -> tuple[int, TLDiagram]:
    """(loop factor, diagram) for the cup-cap at i, i+1 stacked on d."""
    partner = d.partner()
    if partner[i] == i + 1:
        return -2, d
    a, b = partner[i], partner[i + 1]
    arcs = [arc for arc in d.arcs if i not in arc and i + 1 not in arc]
    return 1, TLDiagram(arcs + [(a, b), (i, i + 1)])


def _add(combo: dict, d, c: int) -> None:
    v = combo.get(d, 0) + c
    if v:
        combo[d] = v
    else:
        combo.pop(d, None)


def tl_skein_transposition(r: int, i: int, d: TLDiagram | dict) -> dict[TLDiagram, int]:
    """s_i applied to a diagram (or an integer combination of diagrams):
    the crossing resolves as -identity - cupcap, closed loops are -2."""
    if not 1 <= i <= 2 * r - 1:
        raise DiagramError(f"s_{i} is not a simple transposition of S({2 * r})")
    combo = d if isinstance(d, dict) else {d: 1}
    out: dict[TLDiagram, int] = {}
    for diagram, c in combo.items():
        if diagram.r != r:
            raise DiagramError(f"diagram {diagram} has {diagram.r} arcs, expected {r}")
        _add(out, diagram, -c)
        factor, e = _cupcap(diagram, i)
        _add(out, e, -c * factor)
    return out


def tl_skein_matrix(r: int, word: Sequence[int]) -> np.ndarray:
    """Matrix of s_{word[0]} s_{word[1]} ... in the basis tl_diagrams(r);
    the rightmost factor acts first, column j is the image of basis j."""
    basis = tl_diagrams(r)
    index = {d: k for k, d in enumerate(basis)}
    M = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for j, d in enumerate(basis):
        combo = {d: 1}
        for i in reversed(word):
            combo = tl_skein_transposition(r, i, combo)
        for e, c in combo.items():
            M[index[e], j] = c
    return M


def tl_long_cycle_matrix(r: int) -> np.ndarray:
    """Action of the long cycle s_1 s_2 ... s_{2r-1} on the TL basis."""
    if r > 4:
        raise BudgetExceeded("tl_long_cycle_matrix is limited to r <= 4")
    return tl_skein_matrix(r, range(1, 2 * r))


def rotation_matrix(r: int, steps: int = 1) -> np.ndarray:
    basis = tl_diagrams(r)
    index = {d: k for k, d in enumerate(basis)}
    M = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for j, d in enumerate(basis):
        M[index[rotate_tl(d, steps)], j] = 1
    return M


# ---------------------------------------------------------------- matchings and derangements


def double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2))


def _guard(factors: Iterable[int], what: str) -> None:
    """Raise BudgetExceeded once the running product of factors passes the cap."""
    cap = budget()
    total = 1
    for f in factors:
        total *= f
        if total > cap:
            raise BudgetExceeded(f"{what} exceeds the budget of {cap} elements (set CSP_LAB_BUDGET to raise it)")


def matchings_enumerate(r: int) -> list[PerfectMatching]:
    """All perfect matchings of 1..2r, sorted."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    _guard(range(1, 2 * r, 2), f"the set of perfect matchings of {2 * r} points")
    out = []

    def extend(free, arcs):
        if not free:
            out.append(PerfectMatching(arcs))
            return
        a = free[0]
        for k in range(1, len(free)):
            extend(free[1:k] + free[k + 1 :], arcs + [(a, free[k])])

    extend(list(range(1, 2 * r + 1)), [])
    return sorted(out)


def fixed_matchings(r: int, sigma: Sequence[int]) -> int:
    """Number of perfect matchings of 1..2r mapped to themselves by sigma.

    Counted cycle by cycle: a matching is sigma-stable iff it pairs up the
    cycles of sigma, so no enumeration of matchings is needed.
    """
    if len(sigma) != 2 * r:
        raise ValueError(f"sigma must permute {2 * r} points")
    cycle_counts: dict[int, int] = {}
    for length in cycle_type(sigma):
        cycle_counts[length] = cycle_counts.get(length, 0) + 1
    total = 1
    for length, m in cycle_counts.items():
        # within a class of m cycles of this length: choose a partial pairing of
        # cycles (length ways each), unpaired cycles match internally (only
        # possible for even length, one way)
        ways = 0
        for pairs in range(m // 2 + 1):
            single = m - 2 * pairs
            if single and length % 2:
                continue
            pairings = math.comb(m, 2 * pairs) * double_factorial(2 * pairs - 1)
            ways += pairings * length**pairs
        total *= ways
    return total


def fixed_matchings_bruteforce(r: int, sigma: Sequence[int]) -> int:
    return sum(1 for m in matchings_enumerate(r) if m.relabel(sigma) == m)


def derangement_number(n: int) -> int:
    a, b = 1, 0  # D_0, D_1
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return a if n == 0 else b


def derangements_enumerate(n: int) -> list[tuple[int, ...]]:
    """Fixed-point-free permutations of 1..n as image tuples, sorted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _guard(range(1, n + 1), f"the symmetric group S({n})")
    return [p for p in itertools.permutations(range(1, n + 1)) if all(p[i] != i + 1 for i in range(n))]


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """a after b."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


def inverse(a: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a, start=1):
        out[x - 1] = i
    return tuple(out)


def long_cycle(n: int) -> tuple[int, ...]:
    """The cycle (1 2 ... n)."""
    return tuple(list(range(2, n + 1)) + [1]) if n else ()


def conj_long_cycle(sigma: Sequence[int]) -> tuple[int, ...]:
    c = long_cycle(len(sigma))
    return compose(c, compose(sigma, inverse(c)))


def fixed_derangements(n: int, tau: Sequence[int]) -> int:
    """Number of derangements of 1..n commuting with tau."""
    return sum(1 for s in derangements_enumerate(n) if compose(s, tau) == compose(tau, s))


def cycle_type(sigma: Sequence[int]) -> Partition:
    seen = [False] * len(sigma)
    parts = []
    for i in range(len(sigma)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = sigma[j] - 1
                length += 1
            parts.append(length)
    return Partition(sorted(parts, reverse=True))


def permutation_of_type(mu: Sequence[int]) -> tuple[int, ...]:
    """A permutation with consecutive cycles of the given lengths."""
    out, start = [], 1
    for part in mu:
        out += list(range(start + 1, start + part)) + [start]
        start += part
    return tuple(out)


def directed_matching(sigma: Sequence[int]) -> PerfectMatching:
    """The matching (1, 2 sigma(1)), (3, 2 sigma(2)), ... pairing odd with even points."""
    return PerfectMatching((2 * i - 1, 2 * s) for i, s in enumerate(sigma, start=1))


def permutation_character(n: int, count_fixed: Callable[[tuple[int, ...]], int]) -> CycleTypeFunction:
    """Class function of S(n) from a fixed-point counter evaluated on one
    permutation of each cycle type."""
    return CycleTypeFunction(n, {mu: count_fixed(permutation_of_type(mu)) for mu in partitions(n)})


def matchings_character(r: int) -> CycleTypeFunction:
    return permutation_character(2 * r, lambda s: fixed_matchings(r, s))


def derangements_character(n: int) -> CycleTypeFunction:
    """Permutation character of S(n) acting on derangements by conjugation."""
    derangements = derangements_enumerate(n)

    def count(tau):
        return sum(1 for s in derangements if compose(s, tau) == compose(tau, s))

    return permutation_character(n, count)


def block_tl_subset(k: int, n: int) -> list[TLDiagram]:
    """TL diagrams on kn points with no arc inside a block {kb+1..kb+k}."""
    if k < 1 or n < 0 or (k * n) % 2:
        raise ValueError(f"k*n must be even, got k={k}, n={n}")
    if k * n > 18:
        raise BudgetExceeded(f"block_tl_subset needs k*n <= 18, got {k * n}")
    block = lambda p: (p - 1) // k
    return [d for d in tl_diagrams(k * n // 2) if all(block(a) != block(b) for a, b in d.arcs)]


def sl2_word_to_tl(word: Sequence[int], k: int) -> TLDiagram:
    """Substitute D^(j-1) U^(k-j+1) for the letter j of an sl2(k) crystal word."""
    return word_to_tl("".join("D" * (j - 1) + "U" * (k - j + 1) for j in word))


# ---------------------------------------------------------------- actions


def tl_rotation_action(r: int) -> FiniteAction:
    basis = tl_diagrams(r)
    index = {d: k for k, d in enumerate(basis)}
    return FiniteAction([tl_to_word(d) for d in basis], [index[rotate_tl(d)] for d in basis], max(2 * r, 1))


def matchings_rotation_action(r: int) -> FiniteAction:
    ms = matchings_enumerate(r)
    index = {m: k for k, m in enumerate(ms)}
    return FiniteAction([m.arcs for m in ms], [index[rotate_matching(m)] for m in ms], max(2 * r, 1))


def derangements_action(n: int) -> FiniteAction:
    ds = derangements_enumerate(n)
    index = {d: k for k, d in enumerate(ds)}
    return FiniteAction(ds, [index[conj_long_cycle(d)] for d in ds], max(n, 1))


def block_tl_action(k: int, n: int) -> FiniteAction:
    ds = block_tl_subset(k, n)
    index = {d: j for j, d in enumerate(ds)}
    return FiniteAction([tl_to_word(d) for d in ds], [index[rotate_tl(d, k)] for d in ds], max(n, 1))
