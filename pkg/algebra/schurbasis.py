"""Symmetric functions in the Schur basis and (q, t)-graded series of them."""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .combinat import Partition, hook_length_dimension, horizontal_strip_extensions, partition_sort_key, vertical_strip_extensions
from .polyring import MultiPoly
from .symexpand import SchurExpansion, schur_poly

SeriesKey = Tuple[int, int, Partition]


@dataclass
class SchurVector:
    """A finite sum of Schur functions s_lambda(X) with integer coefficients."""

    terms: Dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {Partition(k): c for k, c in self.terms.items() if c}

    @classmethod
    def one(cls) -> "SchurVector":
        return cls({Partition(): 1})

    @classmethod
    def s(cls, lam: Sequence[int], coeff: int = 1) -> "SchurVector":
        return cls({Partition(lam): coeff})

    @classmethod
    def h(cls, r: int) -> "SchurVector":
        return cls.s([r] if r else [])

    @classmethod
    def e(cls, r: int) -> "SchurVector":
        return cls.s([1] * r)

    @classmethod
    def from_expansion(cls, expansion: SchurExpansion) -> "SchurVector":
        return cls(dict(expansion.terms))

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.terms.get(Partition(lam), 0)

    def items(self) -> List[Tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: partition_sort_key(kv[0]))

    def __add__(self, other: "SchurVector") -> "SchurVector":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return SchurVector(terms)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SchurVector":
        return SchurVector({k: v * c for k, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def total(self) -> int:
        return sum(self.terms.values())

    def dimension(self) -> int:
        """sum c_lambda f^lambda, the dimension of the represented module."""
        return sum(c * hook_length_dimension(lam) for lam, c in self.terms.items())

    def degree_component(self, d: int) -> "SchurVector":
        return SchurVector({k: c for k, c in self.terms.items() if k.size == d})

    def restrict(self, n: int) -> "SchurVector":
        """Drop the terms that vanish in n variables."""
        return SchurVector({k: c for k, c in self.terms.items() if len(k) <= n})

    def to_expansion(self, n: int) -> SchurExpansion:
        return SchurExpansion(n, dict(self.restrict(n).terms))

    def pieri_h(self, r: int) -> "SchurVector":
        return pieri_h(self, r)

    def pieri_e(self, r: int) -> "SchurVector":
        return pieri_e(self, r)

    def to_json(self) -> Dict[str, object]:
        return {"terms": [{"lambda": list(k), "coeff": str(c)} for k, c in self.items()]}


def _pieri(v: SchurVector, r: int, extend: Callable) -> SchurVector:
    terms: Dict[Partition, int] = {}
    for mu, c in v.terms.items():
        for lam in extend(mu, r):
            terms[lam] = terms.get(lam, 0) + c
    return SchurVector(terms)


def pieri_h(v: SchurVector, r: int) -> SchurVector:
    """v * h_r via horizontal strips."""
    return _pieri(v, r, horizontal_strip_extensions)


def pieri_e(v: SchurVector, r: int) -> SchurVector:
    """v * e_r via vertical strips."""
    return _pieri(v, r, vertical_strip_extensions)


@lru_cache(maxsize=None)
def _e_h_product(j: int, k: int) -> Tuple[Tuple[Partition, int], ...]:
    if k == 0:
        return tuple(pieri_e(SchurVector.one(), j).terms.items())
    previous = SchurVector(dict(_e_h_product(j, k - 1)))
    return tuple(pieri_h(previous, 1).terms.items())


def e_h_product(j: int, k: int) -> SchurVector:
    """Schur expansion of e_j(X) h_1(X)^k."""
    return SchurVector(dict(_e_h_product(j, k)))


def restrict_to_vars(v: SchurVector, n: int) -> MultiPoly:
    """sum c_lambda s_lambda(X_n), dropping the shapes with more than n rows."""
    result = MultiPoly.zero(n)
    for lam, c in v.terms.items():
        if len(lam) <= n:
            result = result + schur_poly(lam, n).scale(c)
    return result


@dataclass
class GradedSchurSeries:
    """A sum of q^a t^b s_lambda(X) terms with integer coefficients."""

    terms: Dict[SeriesKey, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {(q, t, Partition(lam)): c for (q, t, lam), c in self.terms.items() if c}

    @classmethod
    def from_vector(cls, v: SchurVector, q: int = 0, t: int = 0) -> "GradedSchurSeries":
        return cls({(q, t, lam): c for lam, c in v.terms.items()})

    def items(self) -> List[Tuple[SeriesKey, int]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]) + partition_sort_key(kv[0][2]))

    def coefficient(self, q: int, t: int, lam: Sequence[int]) -> int:
        return self.terms.get((q, t, Partition(lam)), 0)

    def __add__(self, other: "GradedSchurSeries") -> "GradedSchurSeries":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return GradedSchurSeries(terms)

    def scale(self, c: int) -> "GradedSchurSeries":
        return GradedSchurSeries({k: v * c for k, v in self.terms.items()})

    def shift(self, q: int = 0, t: int = 0) -> "GradedSchurSeries":
        """Multiply by q^q t^t."""
        return GradedSchurSeries({(a + q, b + t, lam): c for (a, b, lam), c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def slices(self) -> Dict[Tuple[int, int], SchurVector]:
        grouped: Dict[Tuple[int, int], Dict[Partition, int]] = {}
        for (q, t, lam), c in self.terms.items():
            grouped.setdefault((q, t), {})[lam] = c
        return {k: SchurVector(v) for k, v in sorted(grouped.items())}

    def q_slice(self, j: int) -> "GradedSchurSeries":
        return GradedSchurSeries({k: c for k, c in self.terms.items() if k[0] == j})

    def q_degrees(self) -> List[int]:
        return sorted({k[0] for k in self.terms})

    def map_schur(self, fn: Callable[[SchurVector], SchurVector]) -> "GradedSchurSeries":
        """Apply a linear map on the Schur part of every (q, t) slice."""
        result = GradedSchurSeries()
        for (q, t), v in self.slices().items():
            result = result + GradedSchurSeries.from_vector(fn(v), q, t)
        return result

    def specialize(self, q: Optional[int] = None, t: Optional[int] = None):
        """Substitute integers for q and/or t; ``None`` keeps the grading.

        Returns a SchurVector when both gradings are substituted.
        """
        terms: Dict[SeriesKey, int] = {}
        for (a, b, lam), c in self.terms.items():
            value = c
            if q is not None:
                value *= q ** a
                a = 0
            if t is not None:
                value *= t ** b
                b = 0
            key = (a, b, lam)
            terms[key] = terms.get(key, 0) + value
        series = GradedSchurSeries(terms)
        if q is not None and t is not None:
            return SchurVector({lam: c for (_, _, lam), c in series.terms.items()})
        return series

    def dimension(self) -> int:
        return sum(c * hook_length_dimension(lam) for (_, _, lam), c in self.terms.items())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def to_json(self) -> Dict[str, object]:
        return {"terms": [{"q": q, "t": t, "lambda": list(lam), "coeff": str(c)}
                          for (q, t, lam), c in self.items()]}


def series_specialize(g: GradedSchurSeries, q_value: Optional[int] = None, t_value: Optional[int] = None):
    """Substitute q and/or t; a ``None`` value keeps that grading."""
    return g.specialize(q=q_value, t=t_value)


def series_sum(parts: Iterable[GradedSchurSeries]) -> GradedSchurSeries:
    result = GradedSchurSeries()
    for part in parts:
        result = result + part
    return result
