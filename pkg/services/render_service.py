from typing import Any, List, Sequence, Tuple
import json

from algebra.boolprod import PositivityReport
from algebra.chern import RootMultiset
from algebra.combinat import Tableau
from algebra.lascoux import PathFamily, RFFilling
from algebra.polyring import MultiPoly
from algebra.schurbasis import GradedSchurSeries, SchurVector
from algebra.symexpand import SchurExpansion
from algebra.utils.logger import KernelLogger


def _shape(lam: Sequence[int]) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else r"\emptyset"


def _signed_join(pieces: List[Tuple[int, str]], sep: str = "") -> str:
    """Join (coefficient, basis) pairs as c_1 b_1 + c_2 b_2 - ..."""
    if not pieces:
        return "0"
    out = []
    for idx, (c, basis) in enumerate(pieces):
        mag = abs(c)
        if not basis:
            body = str(mag)
        elif mag == 1:
            body = basis
        else:
            body = f"{mag}{sep}{basis}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


def _monomial(x: Sequence[int], y: Sequence[int], q: int, latex: bool) -> str:
    factors = []
    if q:
        factors.append("q" if q == 1 else (f"q^{{{q}}}" if latex else f"q^{q}"))
    for name, exps in (("x", x), ("y", y)):
        for i, e in enumerate(exps, start=1):
            if not e:
                continue
            var = f"{name}_{{{i}}}" if latex else f"{name}{i}"
            factors.append(var if e == 1 else (f"{var}^{{{e}}}" if latex else f"{var}^{e}"))
    return ("" if latex else "*").join(factors)


class RenderService:
    """Turns kernel results into plain text, compact JSON or LaTeX.

    JSON output uses compact separators and keeps the field order of each
    result's ``to_json``, so equal results render to identical bytes.

    Attributes:
        fmt (str): One of ``plain``, ``json`` or ``latex``
    """

    FORMATS = ("plain", "json", "latex")

    def __init__(self, fmt: str = "plain"):
        if fmt not in self.FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt
        self.logger = KernelLogger("RenderService")

    def render(self, result: Any) -> str:
        """Render any kernel result in the configured format.

        Args:
            result: A kernel value (expansion, series, polynomial, ...) or a
                dict/list/bool/int summary

        Returns:
            str: The rendered text, without a trailing newline
        """
        if self.fmt == "json":
            return json.dumps(self.to_jsonable(result), separators=(",", ":"))
        if self.fmt == "latex":
            return self.to_latex(result)
        return self.to_plain(result)

    def to_jsonable(self, result: Any) -> Any:
        if isinstance(result, MultiPoly):
            return {"n": result.n, "m": result.m, "terms": result.to_json()}
        if hasattr(result, "to_json"):
            return result.to_json()
        if isinstance(result, dict):
            return {str(k): self.to_jsonable(v) for k, v in result.items()}
        if isinstance(result, (list, tuple)):
            return [self.to_jsonable(v) for v in result]
        return result

    def to_plain(self, result: Any) -> str:
        if isinstance(result, SchurExpansion):
            if result.is_double:
                return "\n".join(f"{list(l)} {list(m)}\t{c}" for (l, m), c in result.items()) or "0"
            return "\n".join(f"{list(k)}\t{c}" for k, c in result.items()) or "0"
        if isinstance(result, SchurVector):
            return "\n".join(f"{list(k)}\t{c}" for k, c in result.items()) or "0"
        if isinstance(result, GradedSchurSeries):
            return "\n".join(f"q^{q} t^{t}\t{list(lam)}\t{c}" for (q, t, lam), c in result.items()) or "0"
        if isinstance(result, MultiPoly):
            pieces = [(c, _monomial(x, y, q, latex=False)) for (q, x, y), c in result.items()]
            return _signed_join(pieces, "*")
        if isinstance(result, PositivityReport):
            lines = [f"positive: {result.positive}"]
            if result.violation is not None:
                lines.append(f"violation: {result.violation[0]} -> {result.violation[1]}")
            lines.append(self.to_plain(result.expansion))
            return "\n".join(lines)
        if isinstance(result, RootMultiset):
            return "\n".join(f"{r}\t{c}" for r, c in sorted(result.counts().items())) or "(no roots)"
        if isinstance(result, (RFFilling, Tableau)):
            return "\n".join(" ".join(map(str, row)) for row in result.rows) or "(empty)"
        if isinstance(result, PathFamily):
            return "\n".join(f"L{i}: {word or '-'}" for i, word in enumerate(result.paths, start=1))
        if isinstance(result, dict):
            return "\n".join(f"{k}: {v}" for k, v in result.items())
        if isinstance(result, (list, tuple)):
            return "\n\n".join(self.to_plain(item) for item in result)
        return str(result)

    def to_latex(self, result: Any) -> str:
        if isinstance(result, SchurExpansion):
            if result.is_double:
                pieces = [(c, f"s_{{{_shape(l)}}}(X_{{{result.n}}})s_{{{_shape(m)}}}(Y_{{{result.m}}})")
                          for (l, m), c in result.items()]
            else:
                pieces = [(c, f"s_{{{_shape(l)}}}(X_{{{result.n}}})") for l, c in result.items()]
            return _signed_join(pieces)
        if isinstance(result, SchurVector):
            return _signed_join([(c, f"s_{{{_shape(l)}}}") for l, c in result.items()])
        if isinstance(result, GradedSchurSeries):
            pieces = []
            for (q, t, lam), c in result.items():
                grade = _monomial((), (), q, latex=True) + ("" if not t else "t" if t == 1 else f"t^{{{t}}}")
                pieces.append((c, f"{grade}s_{{{_shape(lam)}}}"))
            return _signed_join(pieces)
        if isinstance(result, MultiPoly):
            return _signed_join([(c, _monomial(x, y, q, latex=True)) for (q, x, y), c in result.items()])
        if isinstance(result, PositivityReport):
            return self.to_latex(result.expansion)
        self.logger.debug(f"no LaTeX form for {type(result).__name__}; using plain text")
        return self.to_plain(result)

