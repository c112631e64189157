"""Frobenius characteristics of coinvariant-type quotients and of the positroid module."""
from functools import lru_cache
from itertools import combinations
from itertools import permutations as _itertools_permutations
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import settings

from .combinat import (
    Partition,
    Permutation,
    centralizer_size,
    derangements,
    mn_character,
    partitions_of,
    representative,
    smallest_ascent,
    syt_enumerate,
)
from .exceptions import InexactDivisionError, ParameterRangeError, UndefinedTermError
from .polyring import MultiPoly
from .schurbasis import GradedSchurSeries, SchurVector, e_h_product, pieri_e, restrict_to_vars, series_sum
from .symexpand import fundamental_qsym
from .utils.logger import KernelLogger
from .utils.workers import parallel_map

logger = KernelLogger("frobmod")

TPoly = Tuple[int, ...]


class Positroid(tuple):
    """A word with j zeros and one copy each of 1, ..., n - j."""

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(v) for v in word)
        nonzero = sorted(v for v in word if v)
        if nonzero != list(range(1, len(nonzero) + 1)) or any(v < 0 for v in word):
            raise ParameterRangeError(f"{list(word)} is not a positroid word")
        return super().__new__(cls, word)

    @property
    def zeros(self) -> int:
        return sum(1 for v in self if v == 0)

    def __repr__(self):
        return "".join(map(str, self)) if max(self, default=0) < 10 else f"Positroid({list(self)})"


def positroid_enumerate(n: int) -> List[Positroid]:
    """All positroids of length n, grouped by number of zeros, each group in lexicographic order."""
    if n < 0:
        raise ParameterRangeError(f"n must be nonnegative, got {n}")
    found = []
    for j in range(n + 1):
        group = []
        for zero_slots in combinations(range(n), j):
            free = [i for i in range(n) if i not in zero_slots]
            for letters in _itertools_permutations(range(1, n - j + 1)):
                word = [0] * n
                for slot, letter in zip(free, letters):
                    word[slot] = letter
                group.append(Positroid(word))
        found.extend(sorted(group))
    return found


def apply_generator(i: int, v: Sequence[int]) -> Tuple[Positroid, int]:
    """s_i swaps positions i and i+1 (1-based); the sign is -1 when both are zero."""
    word = list(v)
    sign = -1 if word[i - 1] == 0 and word[i] == 0 else 1
    word[i - 1], word[i] = word[i], word[i - 1]
    return Positroid(word), sign


def reduced_word(w: Permutation, strategy: str = "first") -> List[int]:
    """Generators i_1, ..., i_k with w = s_{i_k} ... s_{i_1}, applied to a vector in that order.

    ``strategy`` picks which descent is removed at each step: the first or the last.
    """
    word = list(w)
    out = []
    while True:
        descents = [i for i in range(1, len(word)) if word[i - 1] > word[i]]
        if not descents:
            return out
        i = descents[0] if strategy == "first" else descents[-1]
        word[i - 1], word[i] = word[i], word[i - 1]
        out.append(i)


def positroid_act(w: Permutation, v: Sequence[int], strategy: str = "first") -> Tuple[Positroid, int]:
    """Signed action of w on a positroid, through a reduced word of w."""
    w, v = Permutation(w), Positroid(v)
    if len(w) != len(v):
        raise ParameterRangeError(f"permutation of {len(w)} letters acting on a word of length {len(v)}")
    sign = 1
    for i in reduced_word(w, strategy):
        v, s = apply_generator(i, v)
        sign *= s
    return v, sign


def positroid_trace(w: Permutation) -> int:
    """Signed trace of w on the positroid basis."""
    total = 0
    for v in positroid_enumerate(len(w)):
        image, sign = positroid_act(w, v)
        if image == v:
            total += sign
    return total


def positroid_character(n: int, threads: Optional[int] = None) -> Dict[Partition, int]:
    """Character of C[P_n] on each conjugacy class, keyed by cycle type."""
    classes = partitions_of(n)
    traces = parallel_map(lambda rho: positroid_trace(representative(rho)), classes, threads=threads)
    return dict(zip(classes, traces))


def positroid_frobenius(n: int, threads: Optional[int] = None) -> SchurVector:
    """Frob(C[P_n]) from the character: c_lambda = (1/n!) sum_w chi(w) chi^lambda(w)."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    chi = positroid_character(n, threads=threads)
    order = factorial(n)
    terms = {}
    for lam in partitions_of(n):
        total = sum(order // centralizer_size(rho) * value * mn_character(lam, rho)
                    for rho, value in chi.items())
        if total % order:
            raise InexactDivisionError(f"character inner product for {list(lam)} is not integral")
        terms[lam] = total // order
    return SchurVector(terms)


def braid_relations_hold(n: int) -> bool:
    """Check (s_i s_{i+1})^3 = 1 and (s_i s_j)^2 = 1 for |i - j| > 1 on C[P_n]."""
    basis = positroid_enumerate(n)

    def run(word: Sequence[int], v: Positroid) -> Tuple[Positroid, int]:
        sign = 1
        for i in word:
            v, s = apply_generator(i, v)
            sign *= s
        return v, sign

    for i in range(1, n):
        for j in range(i + 1, n):
            word = [i, j] * 3 if j == i + 1 else [i, j] * 2
            if any(run(word, v) != (v, 1) for v in basis):
                return False
        if any(run([i, i], v) != (v, 1) for v in basis):
            return False
    return True


def coinvariant_grfrob(n: int) -> GradedSchurSeries:
    """sum over standard tableaux T with n boxes of t^maj(T) s_shape(T)."""
    if n < 0:
        raise ParameterRangeError(f"n must be nonnegative, got {n}")
    terms: Dict[Tuple[int, int, Partition], int] = {}
    for t in syt_enumerate(n):
        key = (0, t.maj, t.shape)
        terms[key] = terms.get(key, 0) + 1
    return GradedSchurSeries(terms)


def _e_times(series: GradedSchurSeries, j: int) -> GradedSchurSeries:
    return series.map_schur(lambda v: pieri_e(v, j)).shift(q=j)


def superspace_grfrob(n: int) -> GradedSchurSeries:
    """grFrob(R_n; q, t) = sum_j q^j e_j grFrob of the coinvariant algebra in n - j variables."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    return series_sum(_e_times(coinvariant_grfrob(n - j), j) for j in range(n + 1))


def reiner_webb(n: int) -> SchurVector:
    """sum of s_shape(T) over standard tableaux T whose smallest ascent is even."""
    if n < 2:
        raise ParameterRangeError(f"the smallest-ascent expansion needs n >= 2, got {n}")
    terms: Dict[Partition, int] = {}
    for t in syt_enumerate(n):
        if smallest_ascent(t) % 2 == 0:
            terms[t.shape] = terms.get(t.shape, 0) + 1
    return SchurVector(terms)


def signed_eh_sum(n: int) -> SchurVector:
    """sum_j (-1)^j e_j h_1^{n-j}."""
    result = SchurVector()
    for j in range(n + 1):
        result = result + e_h_product(j, n - j).scale((-1) ** j)
    return result


def derangement_qsym_check(n: int) -> bool:
    """Compare sum over derangements w of F_{D(w)} with the smallest-ascent expansion in n variables."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    lhs = MultiPoly.zero(n)
    for w in derangements(n):
        lhs = lhs + fundamental_qsym(w.descent_set(), n)
    rhs_vector = reiner_webb(n) if n >= 2 else signed_eh_sum(n)
    return lhs == restrict_to_vars(rhs_vector, n)


def _tadd(a: TPoly, b: TPoly) -> TPoly:
    size = max(len(a), len(b))
    out = [0] * size
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _tmul(a: TPoly, b: TPoly) -> TPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _tshift(a: TPoly, k: int) -> TPoly:
    return (0,) * k + a if a else ()


@lru_cache(maxsize=None)
def t_binomial(a: int, b: int) -> TPoly:
    """Gaussian binomial [a choose b]_t as dense coefficients (index = power of t).

    The empty tuple is the zero polynomial, returned for b < 0 or b > a.
    """
    if b < 0 or a < 0 or b > a:
        return ()
    if b == 0 or b == a:
        return (1,)
    return _tadd(t_binomial(a - 1, b - 1), _tshift(t_binomial(a - 1, b), b))


def _check_hrs_range(n: int, k: int, r: int):
    if not 0 <= r <= k <= n:
        raise ParameterRangeError(f"expected 0 <= r <= k <= n, got n={n}, k={k}, r={r}")


def hrs_grfrob(n: int, k: int, r: int) -> GradedSchurSeries:
    """grFrob(R_{n,k,r}; t) by the t-binomial tableau formula.

    The n = 0 quotient is the trivial module s_emptyset.
    """
    _check_hrs_range(n, k, r)
    if n == 0:
        return GradedSchurSeries({(0, 0, Partition()): 1})
    terms: Dict[Tuple[int, int, Partition], int] = {}
    tableaux = syt_enumerate(n)
    for m in range(k - r + 1):
        outer = _tshift(t_binomial(k - r, m), m * (n - k + m))
        if not outer:
            continue
        for t in tableaux:
            weight = _tmul(outer, _tshift(t_binomial(n - t.des - 1, n - k + m), t.maj))
            for power, c in enumerate(weight):
                if c:
                    key = (0, power, t.shape)
                    terms[key] = terms.get(key, 0) + c
    return GradedSchurSeries(terms)


def hrs_undefined_terms(n: int, k: int, r: int) -> List[int]:
    """The j with (n - j, k, r - j) outside 0 <= r - j <= k <= n - j."""
    _check_hrs_range(n, k, r)
    return [j for j in range(n + 1) if r - j < 0 or k > n - j]


def hrs_superspace(n: int, k: int, r: int, policy: Optional[str] = None) -> GradedSchurSeries:
    """sum_j q^j e_j grFrob(R_{n-j,k,r-j}; t).

    ``policy`` decides what happens to terms outside the defined regime:
    ``skip`` drops them, ``error`` raises, ``clamp`` evaluates
    R_{n-j, n-j, min(r-j, n-j)} when k > n - j. Terms with r - j < 0 are
    dropped under ``clamp`` as well.
    """
    policy = policy or settings.undefined_terms
    if policy not in ("skip", "error", "clamp"):
        raise ParameterRangeError(f"unknown undefined-term policy {policy!r}")
    undefined = set(hrs_undefined_terms(n, k, r))
    if undefined and policy == "error":
        raise UndefinedTermError(f"terms j={sorted(undefined)} of (n={n}, k={k}, r={r}) are undefined")
    parts, skipped = [], []
    for j in range(n + 1):
        params = (n - j, k, r - j)
        if j in undefined:
            if policy == "clamp" and r - j >= 0:
                params = (n - j, n - j, min(r - j, n - j))
            else:
                skipped.append(j)
                continue
        parts.append(_e_times(hrs_grfrob(*params), j))
    if skipped:
        logger.warning(f"hrs_superspace(n={n}, k={k}, r={r}): skipped undefined terms j={skipped}")
    return series_sum(parts)


def polynomial_ring_grfrob(n: int, max_degree: int) -> GradedSchurSeries:
    """grFrob(C[X_n]; t) up to t-degree max_degree.

    Coinvariant series times the Hilbert series of symmetric polynomials,
    sum_d p_{<=n}(d) t^d.
    """
    if n < 0 or max_degree < 0:
        raise ParameterRangeError(f"expected n >= 0 and max_degree >= 0, got {n}, {max_degree}")
    base = coinvariant_grfrob(n)
    result = GradedSchurSeries()
    for d in range(max_degree + 1):
        count = len(partitions_of(d, max_part=n))
        if count:
            shifted = base.shift(t=d).scale(count)
            result = result + GradedSchurSeries({k: c for k, c in shifted.terms.items() if k[1] <= max_degree})
    return result


def divergence_free_grfrob(n: int, max_degree: int) -> GradedSchurSeries:
    """sum_j q^j e_j grFrob(C[X_{n-j}]; t), truncated at t-degree max_degree."""
    if n < 0:
        raise ParameterRangeError(f"n must be nonnegative, got {n}")
    return series_sum(_e_times(polynomial_ring_grfrob(n - j, max_degree), j) for j in range(n + 1))
