"""Boolean product polynomials, their q- and two-alphabet variants, and positivity checks."""
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple, Union

from config.settings import settings

from .combinat import Partition
from .exceptions import ParameterRangeError
from .polyring import LinearForm, MultiPoly, expand_linear_forms
from .schurbasis import GradedSchurSeries, e_h_product, series_sum
from .symexpand import PairKey, SchurExpansion, double_schur_expand, schur_expand
from .utils.logger import KernelLogger

logger = KernelLogger("boolprod")


def colex_subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    """k-subsets of [n] (1-based) in colexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda s: tuple(reversed(s)))


def _check_range(n: int, k: int, name: str = "k"):
    if not 1 <= k <= n:
        raise ParameterRangeError(f"{name} must satisfy 1 <= {name} <= {n}, got {k}")


def boolean_forms(n: int, k: int) -> List[LinearForm]:
    _check_range(n, k)
    return [LinearForm.subset_sum(s, n) for s in colex_subsets(n, k)]


def boolean_product(n: int, k: int, threads: Optional[int] = None) -> MultiPoly:
    """B_{n,k}(X_n): product over k-subsets S of [n] of sum_{i in S} x_i."""
    return expand_linear_forms(boolean_forms(n, k), n, threads=threads)


def boolean_total(n: int, threads: Optional[int] = None) -> MultiPoly:
    """B_n(X_n) = B_{n,1} B_{n,2} ... B_{n,n}, of degree 2^n - 1."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    if n >= settings.total_warning_n:
        logger.warning(f"B_{n} has degree {2 ** n - 1}; expansion may take a long time")
    forms = [form for k in range(1, n + 1) for form in boolean_forms(n, k)]
    return expand_linear_forms(forms, n, threads=threads)


def boolean_q(n: int, threads: Optional[int] = None) -> MultiPoly:
    """B_{n,n-1}(X_n; q) = prod_i (x_1 + ... + x_n + q x_i), with q stored as a grading."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    forms = []
    for i in range(n):
        qx = [0] * n
        qx[i] = 1
        forms.append(LinearForm((1,) * n, qx=tuple(qx)))
    return expand_linear_forms(forms, n, threads=threads)


def boolean_q_abstract(n: int) -> GradedSchurSeries:
    """B_{n,n-1}(X; q) = sum_j q^j e_j(X) h_1(X)^{n-j} in infinitely many variables."""
    if n < 1:
        raise ParameterRangeError(f"n must be at least 1, got {n}")
    return series_sum(GradedSchurSeries.from_vector(e_h_product(j, n - j), q=j) for j in range(n + 1))


def boolean_q_expansion(n: int, threads: Optional[int] = None, method: Optional[str] = None) -> GradedSchurSeries:
    """Schur-expand B_{n,n-1}(X_n; q) one q-degree at a time."""
    f = boolean_q(n, threads=threads)
    terms = {}
    for j in f.q_degrees():
        for lam, c in schur_expand(f.q_coefficient(j), method=method).terms.items():
            terms[(j, 0, lam)] = c
    return GradedSchurSeries(terms)


def bivariate_boolean(n: int, k: int, m: int, l: int, threads: Optional[int] = None) -> MultiPoly:
    """P_{k,l}(X_n; Y_m): product over (k-subset S, l-subset T) of the x-sum over S plus the y-sum over T."""
    _check_range(n, k)
    _check_range(m, l, name="l")
    forms = [
        LinearForm.subset_sum(s, n, y_subset=t, m=m)
        for s in colex_subsets(n, k)
        for t in colex_subsets(m, l)
    ]
    return expand_linear_forms(forms, n, m, threads=threads)


@dataclass
class PositivityReport:
    positive: bool
    expansion: SchurExpansion
    violation: Optional[Tuple[Union[Partition, PairKey], int]] = None

    def to_json(self):
        out = {"positive": self.positive, "expansion": self.expansion.to_json()}
        if self.violation is not None:
            key, c = self.violation
            if self.expansion.is_double:
                out["violation"] = {"lambda": list(key[0]), "mu": list(key[1]), "coeff": str(c)}
            else:
                out["violation"] = {"lambda": list(key), "coeff": str(c)}
        return out


def check_schur_positive(f: MultiPoly, method: Optional[str] = None) -> PositivityReport:
    """Expand f (per alphabet) and report whether every coefficient is nonnegative."""
    if f.m is None:
        expansion = schur_expand(f, method=method)
    else:
        expansion = double_schur_expand(f)
    violation = expansion.first_violation()
    return PositivityReport(violation is None, expansion, violation)
