"""Schur polynomials in finitely many variables and Schur expansion of symmetric polynomials."""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from config.settings import settings

from .combinat import Partition, kostka_number, partition_sort_key, partitions_of, permutations, ssyt_enumerate
from .exceptions import NotSymmetricError, ParameterRangeError
from .polyring import Key, MultiPoly

PairKey = Tuple[Partition, Partition]


@lru_cache(maxsize=None)
def _signed_staircases(n: int) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """(sign(w), w.delta) for every w, with delta = (n-1, ..., 0)."""
    out = []
    for w in permutations(n):
        exp = [0] * n
        for i in range(n):
            exp[w[i] - 1] = n - 1 - i
        out.append((w.sign(), tuple(exp)))
    return tuple(out)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> MultiPoly:
    """Delta_n = prod_{i<j} (x_i - x_j)."""
    return MultiPoly(n, None, {(0, exp, ()): s for s, exp in _signed_staircases(n)})


def _signed_permutations(n: int):
    return [(w.sign(), w) for w in permutations(n)]


def antisymmetrize(f: MultiPoly, n: Optional[int] = None) -> MultiPoly:
    """A_n(f) = (1/Delta_n) sum_w sign(w) w.f, computed exactly."""
    n = f.n if n is None else n
    if f.n != n:
        raise ParameterRangeError(f"polynomial has {f.n} x-variables, expected {n}")
    signed: Dict[Key, int] = {}
    for sign, w in _signed_permutations(n):
        for (q, x, y), c in f.terms.items():
            new = [0] * n
            for i, e in enumerate(x):
                new[w[i] - 1] = e
            key = (q, tuple(new), y)
            signed[key] = signed.get(key, 0) + sign * c
    alternant = MultiPoly(n, f.m, signed)
    if not alternant:
        return alternant
    delta = vandermonde(n)
    if f.m is not None:
        delta = MultiPoly(n, f.m, {(q, x, (0,) * f.m): c for (q, x, _), c in delta.terms.items()})
    return alternant.exact_divide(delta)


@lru_cache(maxsize=None)
def _schur_poly(lam: Tuple[int, ...], n: int) -> MultiPoly:
    if len(lam) > n:
        return MultiPoly.zero(n)
    exp = tuple(p + n - 1 - i for i, p in enumerate(Partition(lam).padded(n)))
    return antisymmetrize(MultiPoly.monomial(n, exp), n)


def schur_poly(lam: Sequence[int], n: int) -> MultiPoly:
    """s_lambda(X_n) by the bialternant formula; zero when l(lambda) > n."""
    return _schur_poly(tuple(Partition(lam)), n)


def schur_poly_ssyt(lam: Sequence[int], n: int) -> MultiPoly:
    """s_lambda(X_n) as the sum of x^T over semistandard tableaux."""
    terms: Dict[Key, int] = {}
    for t in ssyt_enumerate(lam, n):
        key = (0, t.content(n), ())
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(n, None, terms)


def elementary_poly(k: int, n: int) -> MultiPoly:
    terms = {}
    for subset in combinations(range(n), k):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        terms[(0, tuple(exp), ())] = 1
    return MultiPoly(n, None, terms)


def complete_poly(k: int, n: int) -> MultiPoly:
    terms = {}
    for multiset in combinations_with_replacement(range(n), k):
        exp = [0] * n
        for i in multiset:
            exp[i] += 1
        terms[(0, tuple(exp), ())] = 1
    return MultiPoly(n, None, terms)


def power_sum_poly(k: int, n: int) -> MultiPoly:
    if k == 0:
        return MultiPoly.constant(n, n)
    terms = {}
    for i in range(n):
        exp = [0] * n
        exp[i] = k
        terms[(0, tuple(exp), ())] = 1
    return MultiPoly(n, None, terms)


def monomial_poly(lam: Sequence[int], n: int) -> MultiPoly:
    lam = Partition(lam)
    if len(lam) > n:
        return MultiPoly.zero(n)
    base = lam.padded(n)
    terms = {}
    for w in permutations(n):
        terms[(0, tuple(base[w[i] - 1] for i in range(n)), ())] = 1
    return MultiPoly(n, None, terms)


def _is_invariant(terms: Mapping[Key, int], slot: int, length: int) -> bool:
    for key, c in terms.items():
        exps = key[slot]
        for i in range(length - 1):
            if exps[i] == exps[i + 1]:
                continue
            swapped = list(exps)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            other = list(key)
            other[slot] = tuple(swapped)
            if terms.get(tuple(other)) != c:
                return False
    return True


def is_symmetric(f: MultiPoly) -> bool:
    """True iff f is invariant under permuting x (and, separately, y)."""
    if not _is_invariant(f.terms, 1, f.n):
        return False
    return f.m is None or _is_invariant(f.terms, 2, f.m)


@dataclass
class SchurExpansion:
    """Coefficients of f in the basis s_lambda(X_n), or s_lambda(X_n) s_mu(Y_m) when m is set."""

    n: int
    terms: Dict[Union[Partition, PairKey], int] = field(default_factory=dict)
    m: Optional[int] = None

    def __post_init__(self):
        self.terms = {k: c for k, c in self.terms.items() if c}

    @property
    def is_double(self) -> bool:
        return self.m is not None

    def sort_key(self, key):
        if self.is_double:
            return partition_sort_key(key[0]), partition_sort_key(key[1])
        return partition_sort_key(key)

    def items(self) -> List[Tuple[Union[Partition, PairKey], int]]:
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def coefficient(self, lam, mu=None) -> int:
        if self.is_double:
            return self.terms.get((Partition(lam), Partition(mu or ())), 0)
        return self.terms.get(Partition(lam), 0)

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def first_violation(self) -> Optional[Tuple[Union[Partition, PairKey], int]]:
        return next(((k, c) for k, c in self.items() if c < 0), None)

    def total(self) -> int:
        return sum(self.terms.values())

    def to_polynomial(self) -> MultiPoly:
        if not self.is_double:
            result = MultiPoly.zero(self.n)
            for lam, c in self.terms.items():
                result = result + schur_poly(lam, self.n).scale(c)
            return result
        result = MultiPoly.zero(self.n, self.m)
        for (lam, mu), c in self.terms.items():
            sx = _embed(schur_poly(lam, self.n), self.m, side="x")
            sy = _embed(schur_poly(mu, self.m), self.n, side="y")
            result = result + (sx * sy).scale(c)
        return result

    def to_json(self) -> Dict[str, object]:
        out: Dict[str, object] = {"n": self.n}
        if self.is_double:
            out["m"] = self.m
            out["terms"] = [{"lambda": list(k[0]), "mu": list(k[1]), "coeff": str(c)} for k, c in self.items()]
        else:
            out["terms"] = [{"lambda": list(k), "coeff": str(c)} for k, c in self.items()]
        return out


def _embed(p: MultiPoly, other: int, side: str) -> MultiPoly:
    """Place a one-alphabet polynomial into the two-alphabet ring as its X or Y part."""
    if side == "x":
        return MultiPoly(p.n, other, {(q, x, (0,) * other): c for (q, x, _), c in p.terms.items()})
    return MultiPoly(other, p.n, {(q, (0,) * other, x): c for (q, x, _), c in p.terms.items()})


def _degrees(coeffs: Mapping[Tuple[int, ...], int]) -> Dict[int, int]:
    """Degree -> largest first exponent among terms of that degree."""
    tops: Dict[int, int] = {}
    for exp in coeffs:
        d = sum(exp)
        tops[d] = max(tops.get(d, 0), exp[0] if exp else 0)
    return tops


def _peel_slice(coeffs: Mapping[Tuple[int, ...], int], n: int) -> Dict[Partition, int]:
    """Peel leading terms on the dominant slice.

    Candidate shapes are visited in decreasing lexicographic order; the
    coefficient of s_lambda is what remains of [x^lambda] after removing the
    Kostka contributions of the shapes already peeled.
    """
    found: Dict[Partition, int] = {}
    for d, top in sorted(_degrees(coeffs).items()):
        peeled: List[Tuple[Partition, int]] = []
        for lam in partitions_of(d, max_parts=n, max_part=top):
            c = coeffs.get(lam.padded(n), 0)
            for mu, cm in peeled:
                c -= cm * kostka_number(mu, lam)
            if c:
                peeled.append((lam, c))
                found[lam] = c
    return found


def _alternant_slice(coeffs: Mapping[Tuple[int, ...], int], n: int) -> Dict[Partition, int]:
    """c_lambda = sum_w sign(w) [x^(lambda + delta - w.delta)] f."""
    signed = _signed_staircases(n)
    found: Dict[Partition, int] = {}
    for d, top in sorted(_degrees(coeffs).items()):
        for lam in partitions_of(d, max_parts=n, max_part=top):
            shifted = [p + n - 1 - i for i, p in enumerate(lam.padded(n))]
            c = 0
            for sign, wd in signed:
                exp = tuple(a - b for a, b in zip(shifted, wd))
                if min(exp, default=0) >= 0:
                    c += sign * coeffs.get(exp, 0)
            if c:
                found[lam] = c
    return found


def _x_coefficients(f: MultiPoly) -> Dict[Tuple[int, ...], int]:
    if f.m is not None or any(q for q, _, _ in f.terms):
        raise ParameterRangeError("expected a q-free polynomial over a single alphabet")
    return {x: c for (_, x, _), c in f.terms.items()}


def schur_expand(f: MultiPoly, method: Optional[str] = None) -> SchurExpansion:
    """Coefficients c_lambda with f = sum c_lambda s_lambda(X_n).

    ``method`` is ``"peel"`` (leading-term peeling) or ``"alternant"``
    (coefficient extraction from f * Delta_n); both are exact and agree.
    """
    coeffs = _x_coefficients(f)
    if not is_symmetric(f):
        lead = max(coeffs, default=())
        raise NotSymmetricError(f"polynomial is not symmetric in x (leading exponent {list(lead)})", lead)
    method = method or settings.schur_method
    if method == "peel":
        terms = _peel_slice(coeffs, f.n)
    elif method == "alternant":
        terms = _alternant_slice(coeffs, f.n)
    else:
        raise ParameterRangeError(f"unknown expansion method {method!r}")
    return SchurExpansion(f.n, terms)


def double_schur_expand(f: MultiPoly) -> SchurExpansion:
    """Coefficients a_{lambda,mu} with f = sum a s_lambda(X_n) s_mu(Y_m).

    Peels in X with Y-monomials as coefficients, then peels each
    X-coefficient in Y. Only Y-dominant monomials are ever needed.
    """
    if f.m is None or any(q for q, _, _ in f.terms):
        raise ParameterRangeError("expected a q-free polynomial over two alphabets")
    if not is_symmetric(f):
        raise NotSymmetricError("polynomial is not symmetric in x and y separately")
    by_y: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
    for (_, x, y), c in f.terms.items():
        if all(y[i] >= y[i + 1] for i in range(len(y) - 1)):
            by_y.setdefault(y, {})[x] = c
    x_coeffs: Dict[Partition, Dict[Tuple[int, ...], int]] = {}
    for y, slice_ in by_y.items():
        for lam, c in _peel_slice(slice_, f.n).items():
            x_coeffs.setdefault(lam, {})[y] = c
    terms: Dict[PairKey, int] = {}
    for lam, y_slice in x_coeffs.items():
        for mu, c in _peel_slice(y_slice, f.m).items():
            terms[(lam, mu)] = c
    return SchurExpansion(f.n, terms, m=f.m)


def fundamental_qsym(descents: Iterable[int], n: int, nvars: Optional[int] = None) -> MultiPoly:
    """Gessel's fundamental quasisymmetric polynomial F_S of degree n.

    Sums x_{i_1} ... x_{i_n} over i_1 <= ... <= i_n with i_j < i_{j+1}
    whenever j is in S.
    """
    s = set(descents)
    nvars = n if nvars is None else nvars
    if any(j < 1 or j > n - 1 for j in s):
        raise ParameterRangeError(f"descent set {sorted(s)} is not inside [1, {n - 1}]")
    terms: Dict[Key, int] = {}
    for seq in combinations_with_replacement(range(nvars), n):
        if any(seq[j - 1] == seq[j] for j in s):
            continue
        exp = [0] * nvars
        for i in seq:
            exp[i] += 1
        key = (0, tuple(exp), ())
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(nvars, None, terms)
