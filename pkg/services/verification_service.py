from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Tuple
import random
import sys

from tqdm import tqdm

from algebra.boolprod import (
    boolean_product,
    boolean_q_abstract,
    boolean_total,
    check_schur_positive,
)
from algebra.chern import Base, DirectSum, NamedFunction, Tensor, chern_plethysm, pragacz_check, sym, total_chern, wedge
from algebra.combinat import Partition, derangements, partitions_inside, partitions_of, staircase
from algebra.exceptions import VerificationFailure
from algebra.frobmod import (
    braid_relations_hold,
    coinvariant_grfrob,
    derangement_qsym_check,
    hrs_grfrob,
    positroid_frobenius,
    reiner_webb,
    superspace_grfrob,
)
from algebra.lascoux import (
    PathFamily,
    asm_count,
    binomial_det,
    f_sequence,
    f_sequence_by_fillings,
    gv_enumerate,
    gv_from_filling,
    gv_to_filling,
    lascoux_det,
    lascoux_sym_expansion,
    lascoux_theorem_expansion,
    lascoux_wedge_expansion,
    rff_enumerate,
    sym_product,
    wedge_product,
)
from algebra.polyring import MultiPoly
from algebra.schurbasis import GradedSchurSeries, SchurVector, e_h_product, pieri_e, pieri_h
from algebra.symexpand import antisymmetrize, schur_expand
from algebra.utils.logger import KernelLogger

ASM_VALUES = (1, 2, 7, 42, 429, 7436)
F_VALUES = (3, 16, 147, 2304, 61347)
FIGURE_FAMILY = PathFamily(5, Partition([2, 2, 1, 1]), ("ENEN", "NEN", "EN", "N", ""))
FIGURE_ROWS = ((3, 1), (3, 1), (1,), (1,))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict[str, object]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


class VerificationService:
    """Runs the acceptance identities of the kernel up to a size bound.

    Each check caps its own parameter range at the smaller of its natural
    bound and ``max_n``; a check whose smallest instance exceeds ``max_n``
    passes vacuously.

    Attributes:
        max_n (int): Largest n any check may use
        threads (int): Worker count handed to the parallel kernels
        progress (bool): Show a tqdm progress bar on stderr
    """

    def __init__(self, max_n: int, threads: Optional[int] = None, progress: bool = True, seed: int = 0):
        self.max_n = max_n
        self.threads = threads
        self.progress = progress
        self.seed = seed
        self.logger = KernelLogger("VerificationService")

    def checks(self) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
        return [
            ("boolean-small-k", self.check_small_k),
            ("boolean-evaluation", self.check_evaluations),
            ("boolean-positivity", self.check_positivity),
            ("wedge-product-n3", self.check_wedge_display),
            ("lascoux-expansions", self.check_lascoux_expansions),
            ("filling-counts", self.check_filling_counts),
            ("asm-corollary", self.check_asm),
            ("f-sequence", self.check_f_sequence),
            ("path-bijection", self.check_path_bijection),
            ("antisymmetrizer-identity", self.check_antisymmetrizer),
            ("positroid-frobenius", self.check_positroids),
            ("superspace-frobenius", self.check_superspace),
            ("smallest-ascent-expansion", self.check_smallest_ascent),
            ("hrs-degeneration", self.check_hrs),
            ("chern-plethysm", self.check_chern),
        ]

    def run_all(self) -> List[CheckResult]:
        """Run every check and collect the results.

        Returns:
            List[CheckResult]: One result per check, in registry order
        """
        results = []
        for name, check in tqdm(self.checks(), desc="verify", disable=not self.progress, file=sys.stderr):
            self.logger.info(f"running {name} (max_n={self.max_n})")
            passed, detail = check()
            self.logger.info(f"{name}: {'ok' if passed else 'FAILED'} {detail}")
            results.append(CheckResult(name, passed, detail))
        return results

    def _upto(self, bound: int, start: int = 1) -> range:
        return range(start, min(bound, self.max_n) + 1)

    def check_small_k(self) -> Tuple[bool, str]:
        for n in self._upto(6):
            if schur_expand(boolean_product(n, 1)).terms != {Partition([1] * n): 1}:
                return False, f"B_{{{n},1}} is not s_(1^{n})"
            if n >= 2 and schur_expand(boolean_product(n, 2)).terms != {staircase(n - 1): 1}:
                return False, f"B_{{{n},2}} is not the staircase Schur polynomial"
        return True, ""

    def check_evaluations(self) -> Tuple[bool, str]:
        for n in self._upto(6):
            for k in range(1, n + 1):
                value = boolean_product(n, k, threads=self.threads).evaluate_all_ones()
                if value != k ** comb(n, k):
                    return False, f"B_{{{n},{k}}}(1) = {value}"
        return True, ""

    def check_positivity(self) -> Tuple[bool, str]:
        for n in self._upto(6):
            for k in range(1, n + 1):
                report = check_schur_positive(boolean_product(n, k, threads=self.threads))
                if not report.positive:
                    return False, f"B_{{{n},{k}}} has coefficient {report.violation}"
        for n in self._upto(5):
            report = check_schur_positive(boolean_total(n, threads=self.threads))
            if not report.positive:
                return False, f"B_{n} has coefficient {report.violation}"
        return True, ""

    def check_wedge_display(self) -> Tuple[bool, str]:
        if self.max_n < 3:
            return True, "skipped"
        expected = {Partition(): 1, Partition([1]): 2, Partition([2]): 1, Partition([1, 1]): 2, Partition([2, 1]): 1}
        got = schur_expand(wedge_product(3)).terms
        return got == expected, "" if got == expected else f"got {got}"

    def check_lascoux_expansions(self) -> Tuple[bool, str]:
        for n in self._upto(5):
            peeled = SchurVector.from_expansion(schur_expand(wedge_product(n, threads=self.threads)))
            if lascoux_wedge_expansion(n) != peeled:
                return False, f"fillings formula differs from the wedge product at n={n}"
            if n <= 4 and lascoux_theorem_expansion(n, "wedge") != peeled:
                return False, f"determinant formula differs from the wedge product at n={n}"
        for n in self._upto(4):
            peeled = SchurVector.from_expansion(schur_expand(sym_product(n, threads=self.threads)))
            if lascoux_sym_expansion(n) != peeled:
                return False, f"fillings formula differs from the symmetric product at n={n}"
            if lascoux_theorem_expansion(n, "sym") != peeled:
                return False, f"determinant formula differs from the symmetric product at n={n}"
        return True, ""

    def check_filling_counts(self) -> Tuple[bool, str]:
        for n in self._upto(6):
            pairs = comb(n, 2)
            for mu in partitions_inside(staircase(n - 1)):
                fillings = len(rff_enumerate(mu, n))
                normalized, rem = divmod(lascoux_det(staircase(n - 1), mu, n), 2 ** (pairs - mu.size))
                counts = (fillings, binomial_det(mu, n), len(gv_enumerate(mu, n)), normalized)
                if rem or len(set(counts)) != 1:
                    return False, f"counts {counts} disagree for mu={list(mu)}, n={n}"
        return True, ""

    def check_asm(self) -> Tuple[bool, str]:
        for n in self._upto(6):
            total = lascoux_wedge_expansion(n).total()
            if not total == asm_count(n) == ASM_VALUES[n - 1]:
                return False, f"sum of r_mu = {total}, ASM({n}) = {asm_count(n)}"
        return True, ""

    def check_f_sequence(self) -> Tuple[bool, str]:
        for n in self._upto(5):
            if f_sequence(n) != F_VALUES[n - 1]:
                return False, f"f({n}) = {f_sequence(n)}"
            if n <= 4 and f_sequence_by_fillings(n) != F_VALUES[n - 1]:
                return False, f"filling count for f({n}) = {f_sequence_by_fillings(n)}"
        return True, ""

    def check_path_bijection(self) -> Tuple[bool, str]:
        for n in self._upto(5):
            for mu in partitions_inside(staircase(n - 1)):
                for family in gv_enumerate(mu, n):
                    if gv_from_filling(gv_to_filling(family)) != family:
                        return False, f"round trip fails for {family.paths}"
                for filling in rff_enumerate(mu, n):
                    family = gv_from_filling(filling)
                    if not family.is_nonintersecting() or gv_to_filling(family) != filling:
                        return False, f"round trip fails for filling {filling.rows}"
        if self.max_n >= 5 and gv_to_filling(FIGURE_FAMILY).rows != FIGURE_ROWS:
            return False, "figure family maps to the wrong filling"
        return True, ""

    def check_antisymmetrizer(self) -> Tuple[bool, str]:
        for n in self._upto(5):
            f = MultiPoly.one(n)
            for i in range(1, n + 1):
                xi = MultiPoly.x(i, n)
                f = f * (xi * (xi + 1)) ** (n - i)
            if antisymmetrize(f, n) != wedge_product(n):
                return False, f"A_{n} identity fails"
        return True, ""

    def check_positroids(self) -> Tuple[bool, str]:
        for n in self._upto(5):
            expected = SchurVector()
            for j in range(n + 1):
                expected = expected + e_h_product(j, n - j)
            got = positroid_frobenius(n, threads=self.threads)
            if got != expected:
                return False, f"character computation differs at n={n}"
            if got.dimension() != sum(factorial(n) // factorial(j) for j in range(n + 1)):
                return False, f"dimension mismatch at n={n}"
            if not braid_relations_hold(n):
                return False, f"braid relations fail on C[P_{n}]"
        return True, ""

    def check_superspace(self) -> Tuple[bool, str]:
        if self.max_n >= 3:
            expected = GradedSchurSeries({
                (0, 0, Partition([3])): 1, (0, 1, Partition([2, 1])): 1,
                (0, 2, Partition([2, 1])): 1, (0, 3, Partition([1, 1, 1])): 1,
            })
            expected = expected + GradedSchurSeries.from_vector(pieri_e(SchurVector.s([2]), 1), q=1)
            expected = expected + GradedSchurSeries.from_vector(pieri_e(SchurVector.s([1, 1]), 1), q=1, t=1)
            expected = expected + GradedSchurSeries.from_vector(pieri_e(SchurVector.s([1]), 2), q=2)
            expected = expected + GradedSchurSeries.from_vector(SchurVector.e(3), q=3)
            if superspace_grfrob(3) != expected:
                return False, "n=3 display not reproduced"
        for n in self._upto(6):
            series = superspace_grfrob(n)
            if series.specialize(t=1) != boolean_q_abstract(n):
                return False, f"t=1 specialization differs from B_{{{n},{n - 1}}}(X;q) at n={n}"
            expected_dim = sum(comb(n, j) * factorial(n - j) for j in range(n + 1))
            if series.dimension() != expected_dim:
                return False, f"dimension {series.dimension()} != {expected_dim} at n={n}"
        return True, ""

    def check_smallest_ascent(self) -> Tuple[bool, str]:
        for n in self._upto(7, start=2):
            expansion = reiner_webb(n)
            if expansion != boolean_q_abstract(n).specialize(q=-1, t=1):
                return False, f"q=-1 specialization differs at n={n}"
            if not expansion.is_positive() or expansion.dimension() != len(derangements(n)):
                return False, f"dimension {expansion.dimension()} != |D_{n}|"
        for n in self._upto(6):
            if not derangement_qsym_check(n):
                return False, f"quasisymmetric derangement identity fails at n={n}"
        return True, ""

    def check_hrs(self) -> Tuple[bool, str]:
        for n in self._upto(6):
            if hrs_grfrob(n, n, n) != coinvariant_grfrob(n):
                return False, f"R_{{{n},{n},{n}}} differs from the coinvariant algebra"
        for n in self._upto(5):
            for k in range(n + 1):
                for r in range(k + 1):
                    if not hrs_grfrob(n, k, r).is_nonnegative():
                        return False, f"negative coefficient for (n,k,r)=({n},{k},{r})"
        return True, ""

    def check_chern(self) -> Tuple[bool, str]:
        for n in self._upto(5):
            base = Base("E", n)
            for k in range(1, n + 1):
                value = chern_plethysm(NamedFunction("e", comb(n, k)), wedge(k, base))
                if value != boolean_product(n, k):
                    return False, f"e_{{C({n},{k})}} of wedge^{k} differs from B_{{{n},{k}}}"
            if total_chern(wedge(2, base)) != wedge_product(n) or total_chern(sym(2, base)) != sym_product(n):
                return False, f"total Chern classes differ at n={n}"
        if self.max_n >= 2 and not self._plethysm_laws(100):
            return False, "plethysm linearity or multiplicativity fails"
        for n in self._upto(3):
            for m in self._upto(3):
                for expr in (Tensor(Base("E", n), Base("F", m)), DirectSum(Base("E", n), Base("F", m))):
                    for size in range(1, 4):
                        for lam in partitions_of(size):
                            report = pragacz_check(lam, expr)
                            if not report.positive:
                                return False, f"s_{list(lam)}({expr}) has coefficient {report.violation}"
        return True, ""

    def _plethysm_laws(self, cases: int) -> bool:
        rng = random.Random(self.seed)
        bundles = [Base("E", 2), Base("E", 3), wedge(2, Base("E", 3)), sym(2, Base("E", 2)),
                   Tensor(Base("E", 2), Base("F", 2)), DirectSum(Base("E", 2), Base("F", 1))]
        shapes = [lam for d in range(3) for lam in partitions_of(d)]
        for _ in range(cases):
            expr = rng.choice(bundles)
            f = SchurVector({lam: rng.randint(-2, 2) for lam in rng.sample(shapes, 2)})
            g = SchurVector({lam: rng.randint(-2, 2) for lam in rng.sample(shapes, 2)})
            r = rng.randint(0, 2)
            if chern_plethysm(f + g, expr) != chern_plethysm(f, expr) + chern_plethysm(g, expr):
                return False
            kind, product = rng.choice([("h", pieri_h(f, r)), ("e", pieri_e(f, r))])
            if chern_plethysm(product, expr) != chern_plethysm(f, expr) * chern_plethysm(NamedFunction(kind, r), expr):
                return False
        return True

    def lascoux_report(self, n: int) -> Dict[str, int]:
        """Filling total against ASM(n), plus the n-specific identities.

        Raises:
            VerificationFailure: If any identity fails at n
        """
        total = lascoux_wedge_expansion(n).total()
        asm = asm_count(n)
        if total != asm:
            raise VerificationFailure("sum of r_mu = ASM(n)", f"{total} != {asm}")
        peeled = SchurVector.from_expansion(schur_expand(wedge_product(n, threads=self.threads)))
        if lascoux_wedge_expansion(n) != peeled:
            raise VerificationFailure("wedge expansion", f"n={n}")
        for mu in partitions_inside(staircase(n - 1)):
            if len(rff_enumerate(mu, n)) != binomial_det(mu, n) or len(gv_enumerate(mu, n)) != binomial_det(mu, n):
                raise VerificationFailure("filling counts", f"mu={list(mu)}")
        return {"n": n, "fillings": total, "asm": asm, "shapes": len(partitions_inside(staircase(n - 1)))}
