"""Lascoux determinants, reverse flagged fillings and their lattice-path model.

The coefficients of s_mu in prod_{i<j}(1 + x_i + x_j) count reverse flagged
fillings of mu. This module computes those counts three ways (enumeration,
binomial determinant, nonintersecting lattice paths) and builds both Schur
expansions from them.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .combinat import Partition, Tableau, partitions_inside, ssyt_enumerate, staircase, vertical_strip_extensions
from .exceptions import InexactDivisionError, ParameterRangeError
from .polyring import LinearForm, MultiPoly, bareiss_det, expand_linear_forms
from .schurbasis import SchurVector

Point = Tuple[int, int]


def binom(a: int, b: int) -> int:
    """C(a, b), zero for b < 0, b > a or a < 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def lascoux_det(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """det( C(lam_i + n - i, mu_j + n - j) ), the raw determinant d^(n)_{lam,mu}."""
    lam, mu = Partition(lam).padded(n), Partition(mu).padded(n)
    matrix = [[binom(lam[i] + n - 1 - i, mu[j] + n - 1 - j) for j in range(n)] for i in range(n)]
    return bareiss_det(matrix)


def binomial_det(mu: Sequence[int], n: int) -> int:
    """det( C(n - i, mu_j - j + i) ) for 1 <= i, j <= n."""
    mu = Partition(mu).padded(n)
    matrix = [[binom(n - i, mu[j - 1] - j + i) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return bareiss_det(matrix)


@dataclass(frozen=True)
class RFFilling:
    """Reverse flagged filling: rows strictly decrease, columns weakly decrease,
    row i takes entries in [1, n - i]."""

    n: int
    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int) -> "RFFilling":
        rows = tuple(tuple(r) for r in rows if len(r))
        return cls(n, Partition(len(r) for r in rows), rows)

    def is_valid(self) -> bool:
        for i, row in enumerate(self.rows, start=1):
            if any(e < 1 or e > self.n - i for e in row):
                return False
            if any(row[j] <= row[j + 1] for j in range(len(row) - 1)):
                return False
            if i > 1 and any(self.rows[i - 2][j] < row[j] for j in range(len(row))):
                return False
        return True

    @property
    def m_1(self) -> int:
        """Number of entries equal to 1."""
        return sum(1 for row in self.rows for e in row if e == 1)

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def rff_enumerate(mu: Sequence[int], n: int) -> List[RFFilling]:
    """All reverse flagged fillings of mu with flag parameter n."""
    mu = Partition(mu)
    if not staircase(n - 1).contains(mu):
        return []
    found: List[RFFilling] = []

    def fill(i: int, rows: List[Tuple[int, ...]]):
        if i == len(mu):
            found.append(RFFilling(n, mu, tuple(rows)))
            return
        above = rows[-1] if rows else None
        for chosen in combinations(range(n - 1 - i, 0, -1), mu[i]):
            if above is not None and any(above[j] < chosen[j] for j in range(mu[i])):
                continue
            rows.append(chosen)
            fill(i + 1, rows)
            rows.pop()

    fill(0, [])
    return found


@lru_cache(maxsize=None)
def rff_count(mu: Tuple[int, ...], n: int) -> int:
    """r^(n)_mu, counted by enumeration."""
    return len(rff_enumerate(mu, n))


@dataclass(frozen=True)
class PathFamily:
    """n lattice paths of unit east (E) and north (N) steps.

    Path i runs from (2i - 2, n - i) to (n + i - mu_i - 2, n - i + mu_i) with
    n - i steps, mu_i of them north.
    """

    n: int
    mu: Partition
    paths: Tuple[str, ...]

    def start(self, i: int) -> Point:
        return 2 * i - 2, self.n - i

    def end(self, i: int) -> Point:
        m = self.mu.part(i - 1)
        return self.n + i - m - 2, self.n - i + m

    def points(self, i: int) -> List[Point]:
        x, y = self.start(i)
        out = [(x, y)]
        for step in self.paths[i - 1]:
            if step == "E":
                x += 1
            else:
                y += 1
            out.append((x, y))
        return out

    def is_nonintersecting(self) -> bool:
        seen: Set[Point] = set()
        for i in range(1, self.n + 1):
            pts = set(self.points(i))
            if seen & pts:
                return False
            seen |= pts
        return True

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "mu": list(self.mu), "paths": list(self.paths)}


def _path_word(length: int, north: Sequence[int]) -> str:
    north = set(north)
    return "".join("N" if s in north else "E" for s in range(length))


def gv_enumerate(mu: Sequence[int], n: int) -> List[PathFamily]:
    """All nonintersecting path families with the fixed endpoints for mu."""
    mu = Partition(mu)
    if not staircase(n - 1).contains(mu):
        return []
    found: List[PathFamily] = []
    padded = mu.padded(n)

    def place(i: int, words: List[str], occupied: Set[Point]):
        if i > n:
            found.append(PathFamily(n, mu, tuple(words)))
            return
        length = n - i
        for north in combinations(range(length), padded[i - 1]):
            word = _path_word(length, north)
            x, y = 2 * i - 2, n - i
            pts = [(x, y)]
            for step in word:
                if step == "E":
                    x += 1
                else:
                    y += 1
                pts.append((x, y))
            if occupied.intersection(pts):
                continue
            words.append(word)
            place(i + 1, words, occupied.union(pts))
            words.pop()

    place(1, [], set())
    return found


def gv_to_filling(family: PathFamily) -> RFFilling:
    """Row i collects the labels of the north steps of path i.

    Steps of path i are labelled 1, ..., n - i starting from its endpoint and
    walking back to its start.
    """
    n = family.n
    rows = []
    for i, word in enumerate(family.paths, start=1):
        labels = [n - i - s for s, step in enumerate(word) if step == "N"]
        rows.append(tuple(sorted(labels, reverse=True)))
    return RFFilling(n, family.mu, tuple(r for r in rows if r))


def gv_from_filling(filling: RFFilling) -> PathFamily:
    n = filling.n
    words = []
    for i in range(1, n + 1):
        row = filling.rows[i - 1] if i <= len(filling.rows) else ()
        words.append(_path_word(n - i, [n - i - e for e in row]))
    return PathFamily(n, filling.shape, tuple(words))


def wedge_product(n: int, threads: Optional[int] = None) -> MultiPoly:
    """prod_{i<j} (1 + x_i + x_j), the total Chern class of the second exterior power."""
    forms = [LinearForm.subset_sum((i, j), n, const=1) for j in range(1, n + 1) for i in range(1, j)]
    return expand_linear_forms(forms, n, threads=threads)


def sym_product(n: int, threads: Optional[int] = None) -> MultiPoly:
    """prod_{i<=j} (1 + x_i + x_j), the total Chern class of the second symmetric power."""
    forms = [LinearForm.subset_sum((i, j), n, const=1) for j in range(1, n + 1) for i in range(1, j + 1)]
    return expand_linear_forms(forms, n, threads=threads)


def lascoux_wedge_expansion(n: int) -> SchurVector:
    """sum over mu inside delta_{n-1} of r^(n)_mu s_mu."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    return SchurVector({mu: rff_count(mu, n) for mu in partitions_inside(staircase(n - 1))})


def lascoux_sym_expansion(n: int) -> SchurVector:
    """sum over lambda inside delta_n of sum_mu 2^{|lambda/mu|} r^(n)_mu s_lambda,
    mu running over shapes inside delta_{n-1} with lambda/mu a vertical strip."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    outer = staircase(n)
    terms: Dict[Partition, int] = {}
    for mu in partitions_inside(staircase(n - 1)):
        r_mu = rff_count(mu, n)
        for r in range(n + 1):
            for lam in vertical_strip_extensions(mu, r, inside=outer):
                terms[lam] = terms.get(lam, 0) + 2 ** r * r_mu
    return SchurVector(terms)


def _normalize(d: int, exponent: int) -> int:
    if exponent >= 0:
        return d * 2 ** exponent
    divisor = 2 ** -exponent
    if d % divisor:
        raise InexactDivisionError(f"{d} is not divisible by 2^{-exponent}")
    return d // divisor


def lascoux_theorem_expansion(n: int, kind: str = "wedge") -> SchurVector:
    """Coefficient of s_mu is 2^{|mu| - C(n,2)} d^(n)_{delta,mu}.

    delta is delta_{n-1} for ``kind="wedge"`` and delta_n for ``kind="sym"``.
    """
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    if kind == "wedge":
        delta = staircase(n - 1)
    elif kind == "sym":
        delta = staircase(n)
    else:
        raise ParameterRangeError(f"kind must be 'wedge' or 'sym', got {kind!r}")
    pairs = comb(n, 2)
    return SchurVector({
        mu: _normalize(lascoux_det(delta, mu, n), mu.size - pairs)
        for mu in partitions_inside(delta)
    })


def asm_count(n: int) -> int:
    """prod_{k=0}^{n-1} (3k+1)!/(n+k)!, the number of n x n alternating sign matrices."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    num, den = 1, 1
    for k in range(n):
        num *= factorial(3 * k + 1)
        den *= factorial(n + k)
    if num % den:
        raise InexactDivisionError(f"ASM product for n={n} is not integral")
    return num // den


def f_sequence(n: int) -> int:
    """Sum of the coefficients of the symmetric-square expansion."""
    return lascoux_sym_expansion(n).total()


def f_sequence_by_fillings(n: int) -> int:
    """sum over lambda inside delta_n of sum_T 2^{m_1(T)}, fillings taken with flag parameter n + 1."""
    return sum(2 ** t.m_1 for lam in partitions_inside(staircase(n)) for t in rff_enumerate(lam, n + 1))


def kirillov_transform(filling: RFFilling) -> Tableau:
    """Transpose the filling and replace every entry e by n - e.

    The image is a semistandard tableau of the conjugate shape whose row c
    entries lie in [c, n - 1].
    """
    n = filling.n
    return Tableau.from_rows([[n - e for e in row] for row in Tableau(filling.shape, filling.rows).transpose().rows])


def kirillov_inverse(tableau: Tableau, n: int) -> RFFilling:
    flipped = Tableau(tableau.shape, tuple(tuple(n - e for e in row) for row in tableau.rows)).transpose()
    return RFFilling(n, flipped.shape, flipped.rows)


def kirillov_fillings(shape: Sequence[int], n: int) -> List[Tableau]:
    """Semistandard tableaux of ``shape`` with row c entries in [c, n - 1]."""
    return [t for t in ssyt_enumerate(shape, n - 1)
            if all(e >= c for c, row in enumerate(t.rows, start=1) for e in row)]


def lascoux_summary(n: int) -> Dict[str, int]:
    """Counts reported by the lascoux verification: filling total and ASM(n)."""
    total = sum(rff_count(mu, n) for mu in partitions_inside(staircase(n - 1)))
    return {"n": n, "fillings": total, "asm": asm_count(n)}
