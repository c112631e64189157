"""Sparse exact polynomials over one or two alphabets with an optional q-grading.

A term key is ``(q, x, y)`` where ``x`` has length ``n`` and ``y`` has length
``m`` (or is the empty tuple when there is no second alphabet). Coefficients are
Python integers, so arithmetic never overflows or rounds.
"""
import heapq
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .exceptions import AlphabetMismatchError, InexactDivisionError, ParameterRangeError
from .utils.logger import KernelLogger
from .utils.workers import chunk, parallel_map, resolve_threads

logger = KernelLogger("polyring")

Key = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


def _add_keys(a: Key, b: Key) -> Key:
    return (
        a[0] + b[0],
        tuple(i + j for i, j in zip(a[1], b[1])),
        tuple(i + j for i, j in zip(a[2], b[2])),
    )


def _flat(key: Key) -> Tuple[int, ...]:
    return (key[0],) + key[1] + key[2]


class MultiPoly:
    """Immutable sparse polynomial in X_n (and optionally Y_m) with a formal q-grading."""

    __slots__ = ("n", "m", "_terms", "_hash")

    def __init__(self, n: int, m: Optional[int] = None, terms: Optional[Mapping[Key, int]] = None):
        if n < 0 or (m is not None and m < 0):
            raise ParameterRangeError(f"alphabet sizes must be nonnegative, got n={n}, m={m}")
        self.n = n
        self.m = m
        ylen = m or 0
        clean: Dict[Key, int] = {}
        for (q, x, y), c in (terms or {}).items():
            x, y = tuple(x), tuple(y or ())
            if len(x) != n or len(y) != ylen or q < 0 or min(x + y, default=0) < 0:
                raise ParameterRangeError(f"term {(q, x, y)} does not fit alphabets n={n}, m={m}")
            if c:
                key = (q, x, y)
                clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, m: Optional[int], terms: Dict[Key, int]) -> "MultiPoly":
        # terms must already be canonical
        poly = cls.__new__(cls)
        poly.n, poly.m, poly._terms, poly._hash = n, m, terms, None
        return poly

    # constructors

    @classmethod
    def zero(cls, n: int, m: Optional[int] = None) -> "MultiPoly":
        return cls._raw(n, m, {})

    @classmethod
    def constant(cls, c: int, n: int, m: Optional[int] = None) -> "MultiPoly":
        key = (0, (0,) * n, (0,) * (m or 0))
        return cls._raw(n, m, {key: int(c)} if c else {})

    @classmethod
    def one(cls, n: int, m: Optional[int] = None) -> "MultiPoly":
        return cls.constant(1, n, m)

    @classmethod
    def monomial(cls, n: int, x: Sequence[int], coeff: int = 1, m: Optional[int] = None,
                 y: Optional[Sequence[int]] = None, q: int = 0) -> "MultiPoly":
        return cls(n, m, {(q, tuple(x), tuple(y or (0,) * (m or 0))): coeff})

    @classmethod
    def x(cls, i: int, n: int, m: Optional[int] = None) -> "MultiPoly":
        """The variable x_i (1-based)."""
        exp = [0] * n
        exp[i - 1] = 1
        return cls.monomial(n, exp, m=m)

    @classmethod
    def y(cls, j: int, n: int, m: int) -> "MultiPoly":
        exp = [0] * m
        exp[j - 1] = 1
        return cls.monomial(n, (0,) * n, m=m, y=exp)

    @classmethod
    def q(cls, n: int, m: Optional[int] = None, power: int = 1) -> "MultiPoly":
        return cls.monomial(n, (0,) * n, m=m, q=power)

    # mapping surface

    @property
    def terms(self) -> Mapping[Key, int]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[Key, int]]:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, x: Sequence[int], y: Sequence[int] = (), q: int = 0) -> int:
        return self._terms.get((q, tuple(x), tuple(y)), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.n, self.m)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.m, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly(n={self.n}, m={self.m}, terms={len(self._terms)})"

    # ring operations

    def _coerce(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.constant(other, self.n, self.m)
        if not isinstance(other, MultiPoly):
            raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")
        if other.n != self.n or other.m != self.m:
            raise AlphabetMismatchError(
                f"alphabets differ: (n={self.n}, m={self.m}) vs (n={other.n}, m={other.m})"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return MultiPoly._raw(self.n, self.m, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.n, self.m, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c: int) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(self.n, self.m)
        return MultiPoly._raw(self.n, self.m, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if len(other) > len(self):
            small, big = self, other
        else:
            small, big = other, self
        terms: Dict[Key, int] = {}
        for ka, ca in small._terms.items():
            for kb, cb in big._terms.items():
                k = _add_keys(ka, kb)
                terms[k] = terms.get(k, 0) + ca * cb
        return MultiPoly._raw(self.n, self.m, {k: c for k, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ParameterRangeError("negative powers are not polynomials")
        result, base = MultiPoly.one(self.n, self.m), self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def exact_divide(self, d: "MultiPoly") -> "MultiPoly":
        """Quotient of exact division; raises InexactDivisionError on a remainder.

        Divides by leading terms in lexicographic order on (q, x, y), keeping
        the remainder's candidate leading terms in a heap.
        """
        d = self._coerce(d)
        if not d:
            raise InexactDivisionError("division by the zero polynomial")
        lead_key = max(d._terms)
        lead_coeff = d._terms[lead_key]
        rest = [(k, c) for k, c in d._terms.items() if k != lead_key]
        remainder = dict(self._terms)
        heap = [tuple(-e for e in _flat(k)) for k in remainder]
        heapq.heapify(heap)
        quotient: Dict[Key, int] = {}
        n = self.n
        while heap:
            flat = tuple(-e for e in heapq.heappop(heap))
            key = (flat[0], flat[1:n + 1], flat[n + 1:])
            c = remainder.get(key)
            if not c:
                # stale heap entry
                continue
            shift = (key[0] - lead_key[0],
                     tuple(a - b for a, b in zip(key[1], lead_key[1])),
                     tuple(a - b for a, b in zip(key[2], lead_key[2])))
            if shift[0] < 0 or min(shift[1] + shift[2], default=0) < 0 or c % lead_coeff:
                raise InexactDivisionError(f"remainder term {key} with coefficient {c} is not divisible")
            qc = c // lead_coeff
            quotient[shift] = qc
            del remainder[key]
            for k, dc in rest:
                target = _add_keys(shift, k)
                v = remainder.get(target, 0) - qc * dc
                if v:
                    if target not in remainder:
                        heapq.heappush(heap, tuple(-e for e in _flat(target)))
                    remainder[target] = v
                else:
                    remainder.pop(target, None)
        return MultiPoly._raw(self.n, self.m, quotient)

    # gradings and specializations

    def degree(self) -> int:
        """Total degree in x and y; -1 for the zero polynomial."""
        return max((sum(k[1]) + sum(k[2]) for k in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k[1]) + sum(k[2]) for k in self._terms}) <= 1

    def homogeneous_component(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.n, self.m, {k: c for k, c in self._terms.items()
                                               if sum(k[1]) + sum(k[2]) == d})

    def q_degrees(self) -> List[int]:
        return sorted({k[0] for k in self._terms})

    def q_coefficient(self, j: int) -> "MultiPoly":
        """The coefficient of q^j, as a q-free polynomial."""
        return MultiPoly._raw(self.n, self.m, {(0, k[1], k[2]): c for k, c in self._terms.items()
                                               if k[0] == j})

    def specialize_q(self, value: int) -> "MultiPoly":
        terms: Dict[Key, int] = {}
        for (q, x, y), c in self._terms.items():
            key = (0, x, y)
            terms[key] = terms.get(key, 0) + c * value ** q
        return MultiPoly._raw(self.n, self.m, {k: c for k, c in terms.items() if c})

    def set_y_zero(self) -> "MultiPoly":
        """Drop the second alphabet by substituting y_j = 0."""
        return MultiPoly._raw(self.n, None, {(q, x, ()): c for (q, x, y), c in self._terms.items()
                                             if not any(y)})

    def evaluate(self, x: Sequence[int], y: Sequence[int] = (), q: int = 1) -> int:
        total = 0
        for (qe, xe, ye), c in self._terms.items():
            term = c * q ** qe
            for v, e in zip(x, xe):
                term *= v ** e
            for v, e in zip(y, ye):
                term *= v ** e
            total += term
        return total

    def evaluate_all_ones(self, q: Optional[int] = None) -> int:
        """Sum of coefficients; q counts as 1 unless a value is supplied."""
        if q is None:
            return sum(self._terms.values())
        return sum(c * q ** k[0] for k, c in self._terms.items())

    def permute_x(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute x_i -> x_{perm[i-1]} for a permutation in one-line notation."""
        terms: Dict[Key, int] = {}
        for (q, x, y), c in self._terms.items():
            new = [0] * self.n
            for i, e in enumerate(x):
                new[perm[i] - 1] = e
            terms[(q, tuple(new), y)] = c
        return MultiPoly._raw(self.n, self.m, terms)

    def to_json(self) -> List[Dict[str, object]]:
        out = []
        for (q, x, y), c in self.items():
            term: Dict[str, object] = {"q": q, "x": list(x)}
            if self.m is not None:
                term["y"] = list(y)
            term["c"] = str(c)
            out.append(term)
        return out


@dataclass(frozen=True)
class LinearForm:
    """const + sum a_i x_i + sum b_j y_j + q (sum qa_i x_i + sum qb_j y_j)."""

    x: Tuple[int, ...]
    y: Tuple[int, ...] = ()
    const: int = 0
    qx: Tuple[int, ...] = ()
    qy: Tuple[int, ...] = ()
    m: Optional[int] = field(default=None)

    @classmethod
    def subset_sum(cls, subset: Iterable[int], n: int, y_subset: Iterable[int] = (),
                   m: Optional[int] = None, const: int = 0) -> "LinearForm":
        """Sum of x_i for i in subset (1-based), plus y_j for j in y_subset."""
        x = [0] * n
        for i in subset:
            x[i - 1] += 1
        y = [0] * (m or 0)
        for j in y_subset:
            y[j - 1] += 1
        return cls(tuple(x), tuple(y), const, m=m)

    @property
    def n(self) -> int:
        return len(self.x)

    def _pieces(self) -> List[Tuple[Key, int]]:
        n, ylen = len(self.x), self.m or 0
        zero_x, zero_y = (0,) * n, (0,) * ylen
        pieces: List[Tuple[Key, int]] = []
        if self.const:
            pieces.append(((0, zero_x, zero_y), self.const))
        for q, xs, ys in ((0, self.x, self.y), (1, self.qx, self.qy)):
            for i, a in enumerate(xs):
                if a:
                    exp = [0] * n
                    exp[i] = 1
                    pieces.append(((q, tuple(exp), zero_y), a))
            for j, b in enumerate(ys):
                if b:
                    exp = [0] * ylen
                    exp[j] = 1
                    pieces.append(((q, zero_x, tuple(exp)), b))
        return pieces

    def to_poly(self) -> MultiPoly:
        return MultiPoly(self.n, self.m, dict(self._pieces()))


def _multiply_by_form(terms: Dict[Key, int], form: LinearForm) -> Dict[Key, int]:
    out: Dict[Key, int] = {}
    for key, a in form._pieces():
        for k, c in terms.items():
            target = _add_keys(k, key)
            out[target] = out.get(target, 0) + a * c
    return {k: c for k, c in out.items() if c}


def _expand_chunk(forms: List[LinearForm], n: int, m: Optional[int]) -> MultiPoly:
    terms = {(0, (0,) * n, (0,) * (m or 0)): 1}
    for form in forms:
        terms = _multiply_by_form(terms, form)
    return MultiPoly._raw(n, m, terms)


def expand_linear_forms(forms: Sequence[LinearForm], n: Optional[int] = None,
                        m: Optional[int] = None, threads: Optional[int] = None) -> MultiPoly:
    """Exact product of linear forms, multiplied incrementally in the given order.

    With several threads the forms are split into contiguous chunks whose
    products are multiplied together in order; the result is the same
    canonical polynomial either way.
    """
    forms = list(forms)
    if n is None:
        if not forms:
            raise ParameterRangeError("alphabet size is required for an empty product")
        n, m = forms[0].n, forms[0].m
    for form in forms:
        if form.n != n or form.m != m:
            raise AlphabetMismatchError(f"linear form over (n={form.n}, m={form.m}) in a product over (n={n}, m={m})")
    workers = resolve_threads(threads)
    if workers <= 1 or len(forms) < 2 * workers:
        return _expand_chunk(forms, n, m)
    parts = chunk(forms, workers)
    logger.debug(f"expanding {len(forms)} forms in {len(parts)} chunks")
    partials = parallel_map(lambda part: _expand_chunk(part, n, m), parts, threads=workers)
    result = partials[0]
    for partial in partials[1:]:
        result = result * partial
    return result


Entry = Union[int, MultiPoly]


def _exact_quotient(a: Entry, b: Entry) -> Entry:
    if isinstance(a, MultiPoly):
        return a.exact_divide(b if isinstance(b, MultiPoly) else MultiPoly.constant(b, a.n, a.m))
    if isinstance(b, MultiPoly):
        return MultiPoly.constant(a, b.n, b.m).exact_divide(b)
    if a % b:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return a // b


def bareiss_det(matrix: Sequence[Sequence[Entry]]) -> Entry:
    """Fraction-free determinant over the integers or over MultiPoly entries."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ParameterRangeError("determinant of a non-square matrix")
    if size == 0:
        return 1
    a = [list(row) for row in matrix]
    sign, prev = 1, 1
    for k in range(size - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return 0 * a[0][0]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = _exact_quotient(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return det if sign > 0 else -det
