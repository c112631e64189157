"""Vector-bundle expressions, their Chern roots, and Chern plethysm.

Chern roots are integer linear forms over at most two alphabets, one per base
bundle. The first base bundle named in an expression supplies X, the second
supplies Y.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from config.settings import settings

from .boolprod import PositivityReport, check_schur_positive
from .combinat import Partition, hook_content_count, ssyt_enumerate
from .exceptions import InvalidBundleError, ParameterRangeError, RankBoundExceededError
from .polyring import LinearForm, MultiPoly, bareiss_det, expand_linear_forms
from .schurbasis import SchurVector
from .utils.logger import KernelLogger

logger = KernelLogger("chern")


class BundleExpr:
    """Base class of bundle expression nodes."""

    def rank(self) -> int:
        raise NotImplementedError

    def bases(self) -> List["Base"]:
        raise NotImplementedError

    def alphabets(self) -> Dict[str, int]:
        """Base bundle names in order of first appearance, with their ranks."""
        found: Dict[str, int] = {}
        for base in self.bases():
            if found.setdefault(base.name, base.n) != base.n:
                raise InvalidBundleError(
                    f"base bundle {base.name!r} used with ranks {found[base.name]} and {base.n}"
                )
        if len(found) > 2:
            raise InvalidBundleError(f"at most two base bundles are supported, got {sorted(found)}")
        return found


@dataclass(frozen=True)
class Base(BundleExpr):
    name: str
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidBundleError(f"base bundle {self.name!r} must have positive rank, got {self.n}")

    def rank(self) -> int:
        return self.n

    def bases(self) -> List["Base"]:
        return [self]

    def __str__(self):
        return f"{self.name}:{self.n}"


@dataclass(frozen=True)
class DirectSum(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def rank(self) -> int:
        return self.left.rank() + self.right.rank()

    def bases(self) -> List[Base]:
        return self.left.bases() + self.right.bases()

    def __str__(self):
        return f"oplus({self.left}, {self.right})"


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def rank(self) -> int:
        return self.left.rank() * self.right.rank()

    def bases(self) -> List[Base]:
        return self.left.bases() + self.right.bases()

    def __str__(self):
        return f"tensor({self.left}, {self.right})"


@dataclass(frozen=True)
class SchurFunctor(BundleExpr):
    shape: Partition
    child: BundleExpr

    def rank(self) -> int:
        return hook_content_count(self.shape, self.child.rank())

    def bases(self) -> List[Base]:
        return self.child.bases()

    def __str__(self):
        return f"schur({list(self.shape)}, {self.child})"


def wedge(k: int, child: BundleExpr) -> SchurFunctor:
    return SchurFunctor(Partition([1] * k), child)


def sym(k: int, child: BundleExpr) -> SchurFunctor:
    return SchurFunctor(Partition([k] if k else []), child)


Root = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class RootMultiset:
    """Chern roots as (x-coefficients, y-coefficients) pairs."""

    names: Tuple[str, ...]
    n: int
    m: Optional[int]
    roots: Tuple[Root, ...]

    def __len__(self):
        return len(self.roots)

    def forms(self, const: int = 0) -> List[LinearForm]:
        return [LinearForm(x, y, const, m=self.m) for x, y in self.roots]

    def polys(self) -> List[MultiPoly]:
        return [form.to_poly() for form in self.forms()]

    def counts(self) -> Dict[Root, int]:
        found: Dict[Root, int] = {}
        for r in self.roots:
            found[r] = found.get(r, 0) + 1
        return found

    def to_json(self) -> Dict[str, object]:
        out: Dict[str, object] = {"alphabets": list(self.names), "rank": len(self.roots)}
        if self.m is None:
            out["roots"] = [list(x) for x, _ in self.roots]
        else:
            out["roots"] = [{"x": list(x), "y": list(y)} for x, y in self.roots]
        return out


def _check_rank(rank: int, bound: int):
    if rank > bound:
        logger.error(f"rank {rank} exceeds the bound {bound}")
        raise RankBoundExceededError(rank, bound)


def chern_roots(expr: BundleExpr, rank_bound: Optional[int] = None) -> RootMultiset:
    """The Chern root multiset of ``expr``.

    Direct sums take the multiset union, tensor products all pairwise sums,
    and S^lambda the content sums sum_{box} r_{T(box)} over semistandard T.
    """
    bound = rank_bound if rank_bound is not None else settings.rank_bound
    alphabets = expr.alphabets()
    names = tuple(alphabets)
    n = alphabets[names[0]]
    m = alphabets[names[1]] if len(names) > 1 else None

    def unit(name: str, i: int) -> Root:
        x, y = [0] * n, [0] * (m or 0)
        (x if name == names[0] else y)[i] = 1
        return tuple(x), tuple(y)

    def add(a: Root, b: Root) -> Root:
        return tuple(p + q for p, q in zip(a[0], b[0])), tuple(p + q for p, q in zip(a[1], b[1]))

    def walk(node: BundleExpr) -> List[Root]:
        _check_rank(node.rank(), bound)
        if isinstance(node, Base):
            return [unit(node.name, i) for i in range(node.n)]
        if isinstance(node, DirectSum):
            return walk(node.left) + walk(node.right)
        if isinstance(node, Tensor):
            left, right = walk(node.left), walk(node.right)
            return [add(a, b) for a in left for b in right]
        if isinstance(node, SchurFunctor):
            child = walk(node.child)
            zero = ((0,) * n, (0,) * (m or 0))
            out = []
            for t in ssyt_enumerate(node.shape, len(child)):
                root = zero
                for e in t.entries():
                    root = add(root, child[e - 1])
                out.append(root)
            return out
        raise InvalidBundleError(f"unknown bundle node {type(node).__name__}")

    return RootMultiset(names, n, m, tuple(walk(expr)))


@dataclass(frozen=True)
class NamedFunction:
    """One of e_d, h_d, p_d or s_lambda."""

    kind: str
    index: Union[int, Partition]

    def __post_init__(self):
        if self.kind not in ("e", "h", "p", "s"):
            raise ParameterRangeError(f"unknown symmetric function family {self.kind!r}")

    def degree(self) -> int:
        return self.index.size if self.kind == "s" else self.index

    def __str__(self):
        if self.kind == "s":
            return f"s_{list(self.index)}"
        return f"{self.kind}_{self.index}"


class _RootEvaluator:
    """Evaluates symmetric functions at a fixed list of linear roots, caching e_k and h_k."""

    def __init__(self, roots: RootMultiset):
        self.roots = roots
        self.polys = roots.polys()
        self.zero = MultiPoly.zero(roots.n, roots.m)
        self.one = MultiPoly.one(roots.n, roots.m)
        self._e: List[MultiPoly] = []
        self._h: List[MultiPoly] = []

    def elementary(self, k: int) -> MultiPoly:
        if k < 0 or k > len(self.polys):
            return self.zero
        if k == len(self.polys) and not self._e:
            return expand_linear_forms(self.roots.forms(), self.roots.n, self.roots.m)
        if len(self._e) <= k:
            # coefficients of u^j in prod (1 + u r)
            top = max(k, len(self._e) - 1)
            e = [self.one] + [self.zero] * top
            for r in self.polys:
                for j in range(top, 0, -1):
                    e[j] = e[j] + r * e[j - 1]
            self._e = e
        return self._e[k]

    def complete(self, k: int) -> MultiPoly:
        if k < 0:
            return self.zero
        if len(self._h) <= k:
            # coefficients of u^j in prod 1/(1 - u r)
            h = [self.one] + [self.zero] * k
            for r in self.polys:
                for j in range(1, k + 1):
                    h[j] = h[j] + r * h[j - 1]
            self._h = h
        return self._h[k]

    def power_sum(self, k: int) -> MultiPoly:
        if k == 0:
            return self.one.scale(len(self.polys))
        result = self.zero
        for r in self.polys:
            result = result + r ** k
        return result

    def schur(self, lam: Partition) -> MultiPoly:
        """Jacobi-Trudi in h, or in e on the conjugate when that matrix is smaller."""
        conj = lam.conjugate()
        if len(conj) < len(lam):
            shape, entry = conj, self.elementary
        else:
            shape, entry = lam, self.complete
        size = len(shape)
        if size == 0:
            return self.one
        matrix = [[entry(shape[i] - i + j) for j in range(size)] for i in range(size)]
        return bareiss_det(matrix)

    def evaluate(self, f: Union[SchurVector, NamedFunction]) -> MultiPoly:
        if isinstance(f, NamedFunction):
            if f.kind == "e":
                return self.elementary(f.index)
            if f.kind == "h":
                return self.complete(f.index)
            if f.kind == "p":
                return self.power_sum(f.index)
            return self.schur(Partition(f.index))
        result = self.zero
        for lam, c in f.items():
            result = result + self.schur(lam).scale(c)
        return result


def chern_plethysm(f: Union[SchurVector, NamedFunction], expr: BundleExpr,
                   rank_bound: Optional[int] = None) -> MultiPoly:
    """F(expr): the symmetric function F evaluated at the Chern roots of expr."""
    return _RootEvaluator(chern_roots(expr, rank_bound)).evaluate(f)


def total_chern(expr: BundleExpr, rank_bound: Optional[int] = None) -> MultiPoly:
    """prod over Chern roots r of (1 + r)."""
    roots = chern_roots(expr, rank_bound)
    return expand_linear_forms(roots.forms(const=1), roots.n, roots.m)


def pragacz_check(lam: Sequence[int], expr: BundleExpr, rank_bound: Optional[int] = None) -> PositivityReport:
    """Expand s_lambda at the Chern roots of expr per alphabet and test positivity."""
    value = chern_plethysm(NamedFunction("s", Partition(lam)), expr, rank_bound)
    return check_schur_positive(value)
