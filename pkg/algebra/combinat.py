"""Partitions, tableaux, permutations and symmetric-group characters.

Every value here is immutable and every enumeration returns its results in a
fixed order, so callers can serialize them directly.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from itertools import permutations as _itertools_permutations
from math import factorial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import ParameterRangeError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros passed to the constructor are dropped, so
    ``Partition([2, 2, 1, 1, 0]) == Partition([2, 2, 1, 1])``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ParameterRangeError(f"partition parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise ParameterRangeError(f"partition parts must weakly decrease, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> Tuple[int, ...]:
        if len(self) > n:
            raise ParameterRangeError(f"partition {list(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        """True iff ``other`` fits inside this diagram."""
        return len(other) <= len(self) and all(o <= self[i] for i, o in enumerate(other))

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for p in self:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def __repr__(self):
        return f"Partition({list(self)})"


def partition_sort_key(lam: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Graded order: by size, then lexicographically descending parts."""
    return sum(lam), tuple(-p for p in lam)


def staircase(n: int) -> Partition:
    """The staircase (n, n-1, ..., 1); empty for n <= 0."""
    return Partition(range(n, 0, -1))


def rectangle(rows: int, cols: int) -> Partition:
    return Partition([cols] * rows if cols > 0 else [])


def partitions_inside(bound: Sequence[int]) -> List[Partition]:
    """All partitions contained in ``bound``, in graded lexicographic order."""
    bound = Partition(bound)
    found: List[Partition] = []

    def extend(prefix: List[int]):
        found.append(Partition(prefix))
        i = len(prefix)
        if i >= len(bound):
            return
        top = bound[i] if not prefix else min(bound[i], prefix[-1])
        for p in range(1, top + 1):
            prefix.append(p)
            extend(prefix)
            prefix.pop()

    extend([])
    return sorted(found, key=partition_sort_key)


def partitions_of(n: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """All partitions of n, optionally with at most ``max_parts`` parts each at most ``max_part``."""
    if n < 0:
        return []
    found: List[Partition] = []

    def extend(prefix: List[int], remaining: int, cap: int):
        if remaining == 0:
            found.append(Partition(prefix))
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            extend(prefix, remaining - p, p)
            prefix.pop()

    extend([], n, n if max_part is None else max_part)
    return found


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row."""

    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        rows = tuple(tuple(r) for r in rows if len(r))
        return cls(Partition(len(r) for r in rows), rows)

    @property
    def size(self) -> int:
        return self.shape.size

    def entries(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def is_semistandard(self) -> bool:
        for i, row in enumerate(self.rows):
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(self.rows[i - 1][j] >= row[j] for j in range(len(row))):
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_semistandard() and sorted(self.entries()) == list(range(1, self.size + 1))

    def content(self, n: int) -> Tuple[int, ...]:
        """Exponent vector x^T in n variables."""
        counts = [0] * n
        for e in self.entries():
            counts[e - 1] += 1
        return tuple(counts)

    def row_of(self) -> Dict[int, int]:
        return {e: i for i, row in enumerate(self.rows) for e in row}

    @property
    def descents(self) -> FrozenSet[int]:
        """Entries i of a standard tableau with i+1 in a strictly lower row."""
        rows = self.row_of()
        return frozenset(i for i in range(1, self.size) if rows[i + 1] > rows[i])

    @property
    def maj(self) -> int:
        return sum(self.descents)

    @property
    def des(self) -> int:
        return len(self.descents)

    def ascents(self, include_last: bool = False) -> FrozenSet[int]:
        found = {i for i in range(1, self.size) if i not in self.descents}
        if include_last and self.size:
            found.add(self.size)
        return frozenset(found)

    def transpose(self) -> "Tableau":
        conj = self.shape.conjugate()
        return Tableau(conj, tuple(tuple(self.rows[i][j] for i in range(c)) for j, c in enumerate(conj)))

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def ssyt_enumerate(shape: Sequence[int], max_entry: int) -> List[Tableau]:
    """All semistandard tableaux of ``shape`` with entries at most ``max_entry``.

    Cells are filled in reading order (row by row, left to right) trying the
    smallest admissible value first, so the output is lexicographic in the
    row-reading word.
    """
    shape = Partition(shape)
    if max_entry < 0:
        raise ParameterRangeError(f"max_entry must be nonnegative, got {max_entry}")
    if len(shape) > max_entry:
        return [] if shape else [Tableau(shape, ())]
    conj = shape.conjugate()
    cells = list(shape.cells())
    grid = [[0] * p for p in shape]
    found: List[Tableau] = []

    def fill(idx: int):
        if idx == len(cells):
            found.append(Tableau(shape, tuple(tuple(r) for r in grid)))
            return
        i, j = cells[idx]
        low = 1
        if j:
            low = grid[i][j - 1]
        if i:
            low = max(low, grid[i - 1][j] + 1)
        # leave room for the strictly increasing entries below
        high = max_entry - (conj[j] - i - 1)
        for v in range(low, high + 1):
            grid[i][j] = v
            fill(idx + 1)
        grid[i][j] = 0

    fill(0)
    return found


@lru_cache(maxsize=None)
def _syt_of_shape(shape: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    if not shape:
        return (Tableau(Partition(), ()),)
    n = sum(shape)
    # the largest entry sits in a removable corner
    found: List[Tableau] = []
    for i, p in enumerate(shape):
        if i + 1 < len(shape) and shape[i + 1] == p:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        for t in _syt_of_shape(Partition(smaller)):
            rows = [list(r) for r in t.rows]
            if i == len(rows):
                rows.append([])
            rows[i].append(n)
            found.append(Tableau(Partition(shape), tuple(tuple(r) for r in rows)))
    found.sort(key=lambda t: tuple(t.entries()))
    return tuple(found)


def syt_of_shape(shape: Sequence[int]) -> List[Tableau]:
    return list(_syt_of_shape(Partition(shape)))


def syt_enumerate(n: int) -> List[Tableau]:
    """All standard tableaux with n boxes, shape by shape in graded order.

    The empty tableau is the single element for n = 0.
    """
    if n < 0:
        raise ParameterRangeError(f"n must be nonnegative, got {n}")
    return [t for lam in partitions_of(n) for t in _syt_of_shape(lam)]


def smallest_ascent(tableau: Tableau) -> int:
    """Least ascent of a standard tableau, counting n as an ascent."""
    descents = tableau.descents
    for i in range(1, tableau.size):
        if i not in descents:
            return i
    return tableau.size


def vertical_strip_extensions(mu: Sequence[int], r: int, inside: Optional[Sequence[int]] = None) -> List[Partition]:
    """All lambda containing mu with lambda/mu a vertical strip of r boxes."""
    mu = Partition(mu)
    if r < 0:
        raise ParameterRangeError(f"strip size must be nonnegative, got {r}")
    bound = Partition(inside) if inside is not None else None
    found = []
    for rows in combinations(range(len(mu) + r), r):
        lam = [mu.part(i) for i in range(len(mu) + r)]
        for i in rows:
            lam[i] += 1
        if any(lam[i] > lam[i - 1] for i in range(1, len(lam))):
            continue
        lam = Partition(lam)
        if bound is None or bound.contains(lam):
            found.append(lam)
    return sorted(found, key=partition_sort_key)


def horizontal_strip_extensions(mu: Sequence[int], r: int, inside: Optional[Sequence[int]] = None) -> List[Partition]:
    """All lambda containing mu with lambda/mu a horizontal strip of r boxes."""
    mu = Partition(mu)
    if r < 0:
        raise ParameterRangeError(f"strip size must be nonnegative, got {r}")
    bound = Partition(inside) if inside is not None else None
    found = []

    def extend(i: int, prefix: List[int], remaining: int):
        if i > len(mu):
            if remaining == 0:
                lam = Partition(prefix)
                if bound is None or bound.contains(lam):
                    found.append(lam)
            return
        base = mu.part(i)
        top = base + remaining if i == 0 else min(base + remaining, mu[i - 1])
        for p in range(base, top + 1):
            prefix.append(p)
            extend(i + 1, prefix, remaining - (p - base))
            prefix.pop()

    extend(0, [], r)
    return sorted(found, key=partition_sort_key)


def _horizontal_strip_removals(lam: Tuple[int, ...], r: int) -> List[Tuple[int, ...]]:
    found = []

    def extend(i: int, prefix: List[int], remaining: int):
        if i == len(lam):
            if remaining == 0:
                found.append(tuple(Partition(prefix)))
            return
        low = lam[i + 1] if i + 1 < len(lam) else 0
        for p in range(lam[i], max(low, lam[i] - remaining) - 1, -1):
            prefix.append(p)
            extend(i + 1, prefix, remaining - (lam[i] - p))
            prefix.pop()

    extend(0, [], r)
    return found


@lru_cache(maxsize=None)
def _kostka(lam: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if not lam else 0
    return sum(_kostka(nu, content[:-1]) for nu in _horizontal_strip_removals(lam, content[-1]))


def kostka_number(lam: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam with the given content."""
    lam = Partition(lam)
    content = tuple(int(c) for c in content)
    if sum(content) != lam.size:
        return 0
    return _kostka(tuple(lam), content)


def hook_length_dimension(lam: Sequence[int]) -> int:
    """f^lambda, the number of standard tableaux of shape lam."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, j in lam.cells():
        hooks *= (lam[i] - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // hooks


def hook_content_count(lam: Sequence[int], n: int) -> int:
    """|SSYT(lam, <= n)| by the hook-content formula."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    conj = lam.conjugate()
    num, den = 1, 1
    for i, j in lam.cells():
        num *= n + j - i
        den *= (lam[i] - j - 1) + (conj[j] - i - 1) + 1
    return num // den


class Permutation(tuple):
    """A permutation of 1..n in one-line notation."""

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(w) for w in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ParameterRangeError(f"{list(word)} is not a permutation of 1..{len(word)}")
        return super().__new__(cls, word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(self[o - 1] for o in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, w in enumerate(self, start=1):
            inv[w - 1] = i
        return Permutation(inv)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cycle, i = [], start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self[i - 1]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (len(self) - len(self.cycles())) % 2 else 1

    def descent_set(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, len(self)) if self[i - 1] > self[i])

    def fixed_points(self) -> List[int]:
        return [i for i, w in enumerate(self, start=1) if i == w]

    def __repr__(self):
        return "".join(map(str, self)) if len(self) < 10 else f"Permutation({list(self)})"


def permutations(n: int) -> List[Permutation]:
    """All permutations of 1..n in lexicographic order."""
    return [Permutation(w) for w in _itertools_permutations(range(1, n + 1))]


def derangements(n: int) -> List[Permutation]:
    return [w for w in permutations(n) if not w.fixed_points()]


def representative(cycle_type: Sequence[int]) -> Permutation:
    """A permutation whose cycles are consecutive blocks of the given lengths."""
    rho = Partition(cycle_type)
    word, start = [], 1
    for length in rho:
        word.extend(range(start + 1, start + length))
        word.append(start)
        start += length
    return Permutation(word)


def centralizer_size(cycle_type: Sequence[int]) -> int:
    """z_rho, so that the class of rho has n!/z_rho elements."""
    z = 1
    for part, mult in Partition(cycle_type).multiplicities().items():
        z *= part ** mult * factorial(mult)
    return z


def _beta_to_partition(beta: Sequence[int]) -> Tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(Partition(b - (length - 1 - i) for i, b in enumerate(beta)))


@lru_cache(maxsize=None)
def _mn(lam: Tuple[int, ...], rho: Tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [p + length - 1 - i for i, p in enumerate(lam)]
    occupied = set(beta)
    total = 0
    # removing a rim hook of length k moves one bead k positions down
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        crossed = sum(1 for c in beta if target < c < b)
        moved = [target if c == b else c for c in beta]
        sign = -1 if crossed % 2 else 1
        total += sign * _mn(_beta_to_partition(moved), rest)
    return total


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """Irreducible character value chi^lam at cycle type rho (Murnaghan-Nakayama)."""
    lam, rho = Partition(lam), Partition(sorted(rho, reverse=True))
    if lam.size != rho.size:
        raise ParameterRangeError(f"|lambda| = {lam.size} differs from |rho| = {rho.size}")
    return _mn(tuple(lam), tuple(rho))
