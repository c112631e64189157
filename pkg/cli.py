from functools import wraps
from typing import Any, Callable, Optional

import click

from algebra import __version__
from algebra.boolprod import bivariate_boolean, boolean_product, boolean_q_abstract, boolean_q_expansion, boolean_total, check_schur_positive
from algebra.chern import chern_plethysm, chern_roots, pragacz_check, total_chern
from algebra.chern_dsl import parse_bundle, parse_shape, parse_symmetric
from algebra.combinat import partitions_inside, staircase
from algebra.exceptions import VerificationFailure
from algebra.frobmod import (
    coinvariant_grfrob,
    derangement_qsym_check,
    hrs_superspace,
    positroid_frobenius,
    reiner_webb,
    superspace_grfrob,
)
from algebra.lascoux import (
    lascoux_sym_expansion,
    lascoux_theorem_expansion,
    lascoux_wedge_expansion,
    rff_enumerate,
    sym_product,
    wedge_product,
)
from algebra.schurbasis import SchurVector
from algebra.symexpand import schur_expand
from algebra.utils.error_handler import handle_cli_errors
from algebra.utils.logger import set_global_level
from config.settings import Settings, settings
from services.render_service import RenderService
from services.verification_service import VerificationService

BUNDLE_HELP = (
    "Bundle expression: NAME:RANK, wedge(k, e), sym(k, e), schur([2,1], e), "
    "tensor(a, b) or oplus(a, b), with at most two base bundles."
)


def kernel_options(func: Callable) -> Callable:
    """Attach the shared output/parallelism options and hand the command a Settings copy as ``cfg``."""
    @click.option("--format", "fmt", type=click.Choice(["plain", "json", "latex"]), default=None,
                  help="Output format (default: plain)")
    @click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads for products")
    @click.option("--verbose", is_flag=True, help="Log progress at INFO level on stderr")
    @wraps(func)
    def wrapper(fmt: Optional[str], threads: Optional[int], verbose: bool, **kwargs) -> Any:
        update = {"log_level": "INFO"} if verbose else {}
        if fmt:
            update["output_format"] = fmt
        if threads:
            update["threads"] = threads
        cfg = settings.model_copy(update=update)
        set_global_level(cfg.log_level)
        return func(cfg=cfg, **kwargs)
    return wrapper


def emit(cfg: Settings, result: Any) -> None:
    click.echo(RenderService(cfg.output_format).render(result))


@click.group()
@click.version_option(version=__version__)
def main():
    """Exact computations with Boolean product polynomials and their Schur expansions."""


@main.group()
def boolean():
    """Boolean product polynomials B_{n,k}, B_n and their variants."""


@boolean.command("expand")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--method", type=click.Choice(["peel", "alternant"]), default=None)
@click.option("--poly", is_flag=True, help="Print the polynomial instead of its Schur expansion")
@kernel_options
@handle_cli_errors
def boolean_expand(n: int, k: int, method: Optional[str], poly: bool, cfg: Settings):
    """Schur expansion of B_{n,k}(X_n)."""
    f = boolean_product(n, k, threads=cfg.threads)
    emit(cfg, f if poly else schur_expand(f, method=method or cfg.schur_method))


@boolean.command("total")
@click.argument("n", type=int)
@click.option("--method", type=click.Choice(["peel", "alternant"]), default=None)
@kernel_options
@handle_cli_errors
def boolean_total_cmd(n: int, method: Optional[str], cfg: Settings):
    """Schur expansion of B_n(X_n) = B_{n,1} ... B_{n,n}."""
    emit(cfg, schur_expand(boolean_total(n, threads=cfg.threads), method=method or cfg.schur_method))


@boolean.command("q")
@click.argument("n", type=int)
@click.option("--abstract", is_flag=True, help="Use infinitely many variables: sum_j q^j e_j h_1^{n-j}")
@kernel_options
@handle_cli_errors
def boolean_q_cmd(n: int, abstract: bool, cfg: Settings):
    """B_{n,n-1}(X; q) graded by q."""
    if abstract:
        emit(cfg, boolean_q_abstract(n))
    else:
        emit(cfg, boolean_q_expansion(n, threads=cfg.threads, method=cfg.schur_method))


@boolean.command("bivariate")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("m", type=int)
@click.argument("l", type=int)
@kernel_options
@handle_cli_errors
def boolean_bivariate(n: int, k: int, m: int, l: int, cfg: Settings):
    """Double Schur expansion of P_{k,l}(X_n; Y_m)."""
    emit(cfg, check_schur_positive(bivariate_boolean(n, k, m, l, threads=cfg.threads)))


@main.group()
def lascoux():
    """Lascoux expansions, reverse flagged fillings and their counts."""


def _lascoux_expansion(kind: str, n: int, method: str, cfg: Settings) -> SchurVector:
    if method == "fillings":
        return lascoux_wedge_expansion(n) if kind == "wedge" else lascoux_sym_expansion(n)
    if method == "determinant":
        return lascoux_theorem_expansion(n, kind)
    product = wedge_product(n, threads=cfg.threads) if kind == "wedge" else sym_product(n, threads=cfg.threads)
    return SchurVector.from_expansion(schur_expand(product, method=cfg.schur_method))


@lascoux.command("wedge")
@click.argument("n", type=int)
@click.option("--method", type=click.Choice(["fillings", "determinant", "expand"]), default="fillings")
@kernel_options
@handle_cli_errors
def lascoux_wedge(n: int, method: str, cfg: Settings):
    """Schur expansion of prod_{i<j} (1 + x_i + x_j)."""
    emit(cfg, _lascoux_expansion("wedge", n, method, cfg))


@lascoux.command("sym")
@click.argument("n", type=int)
@click.option("--method", type=click.Choice(["fillings", "determinant", "expand"]), default="fillings")
@kernel_options
@handle_cli_errors
def lascoux_sym(n: int, method: str, cfg: Settings):
    """Schur expansion of prod_{i<=j} (1 + x_i + x_j)."""
    emit(cfg, _lascoux_expansion("sym", n, method, cfg))


@lascoux.command("rff")
@click.argument("n", type=int)
@click.option("--shape", default=None, help="Shape such as [2,1]; default: every shape inside the staircase")
@kernel_options
@handle_cli_errors
def lascoux_rff(n: int, shape: Optional[str], cfg: Settings):
    """Reverse flagged fillings with flag parameter n."""
    shapes = [parse_shape(shape)] if shape else partitions_inside(staircase(n - 1))
    emit(cfg, [t for mu in shapes for t in rff_enumerate(mu, n)])


@lascoux.command("verify")
@click.argument("n", type=int)
@kernel_options
@handle_cli_errors
def lascoux_verify(n: int, cfg: Settings):
    """Check the filling total against ASM(n) and the expansion at n."""
    service = VerificationService(max_n=n, threads=cfg.threads, progress=False)
    emit(cfg, service.lascoux_report(n))


@main.group()
def frob():
    """Graded Frobenius characteristics."""


@frob.command("coinvariant")
@click.argument("n", type=int)
@kernel_options
@handle_cli_errors
def frob_coinvariant(n: int, cfg: Settings):
    """Lusztig-Stanley series of the coinvariant algebra."""
    emit(cfg, coinvariant_grfrob(n))


@frob.command("superspace")
@click.argument("n", type=int)
@kernel_options
@handle_cli_errors
def frob_superspace(n: int, cfg: Settings):
    """(q, t)-graded series of the superspace quotient."""
    emit(cfg, superspace_grfrob(n))


@frob.command("positroid")
@click.argument("n", type=int)
@kernel_options
@handle_cli_errors
def frob_positroid(n: int, cfg: Settings):
    """Frobenius image of the signed action on positroid words."""
    emit(cfg, positroid_frobenius(n, threads=cfg.threads))


@frob.command("reiner-webb")
@click.argument("n", type=int)
@kernel_options
@handle_cli_errors
def frob_reiner_webb(n: int, cfg: Settings):
    """Standard tableaux with even smallest ascent, summed by shape."""
    emit(cfg, reiner_webb(n))


@frob.command("hrs")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("r", type=int)
@click.option("--undefined-terms", type=click.Choice(["skip", "error", "clamp"]), default=None,
              help="Policy for terms outside r <= k <= n (default: skip)")
@kernel_options
@handle_cli_errors
def frob_hrs(n: int, k: int, r: int, undefined_terms: Optional[str], cfg: Settings):
    """sum_j q^j e_j grFrob(R_{n-j,k,r-j}; t)."""
    emit(cfg, hrs_superspace(n, k, r, policy=undefined_terms or cfg.undefined_terms))


@frob.command("derangement-check")
@click.argument("n", type=int)
@kernel_options
@handle_cli_errors
def frob_derangement_check(n: int, cfg: Settings):
    """Compare the descent-set expansion over derangements with the tableau expansion."""
    if not derangement_qsym_check(n):
        raise VerificationFailure("derangement quasisymmetric expansion", f"n={n}")
    emit(cfg, {"n": n, "holds": True})


@main.group()
def chern():
    """Chern roots and Chern plethysm of bundle expressions."""


@chern.command("roots", help=f"Chern roots of EXPR. {BUNDLE_HELP}")
@click.argument("expr")
@click.option("--rank-bound", type=click.IntRange(min=1), default=None)
@kernel_options
@handle_cli_errors
def chern_roots_cmd(expr: str, rank_bound: Optional[int], cfg: Settings):
    emit(cfg, chern_roots(parse_bundle(expr), rank_bound or cfg.rank_bound))


@chern.command("pleth", help=f"F evaluated at the Chern roots of EXPR, e.g. 'e_3' or '2*s_[2] - s_[1,1]'. {BUNDLE_HELP}")
@click.argument("function")
@click.argument("expr")
@click.option("--rank-bound", type=click.IntRange(min=1), default=None)
@click.option("--schur", "expand", is_flag=True, help="Print the Schur expansion per alphabet")
@kernel_options
@handle_cli_errors
def chern_pleth(function: str, expr: str, rank_bound: Optional[int], expand: bool, cfg: Settings):
    value = chern_plethysm(parse_symmetric(function), parse_bundle(expr), rank_bound or cfg.rank_bound)
    emit(cfg, check_schur_positive(value, method=cfg.schur_method) if expand else value)


@chern.command("total", help=f"Total Chern class prod (1 + r) of EXPR. {BUNDLE_HELP}")
@click.argument("expr")
@click.option("--rank-bound", type=click.IntRange(min=1), default=None)
@kernel_options
@handle_cli_errors
def chern_total(expr: str, rank_bound: Optional[int], cfg: Settings):
    emit(cfg, total_chern(parse_bundle(expr), rank_bound or cfg.rank_bound))


@chern.command("pragacz", help=f"Schur positivity of s_SHAPE at the Chern roots of EXPR. {BUNDLE_HELP}")
@click.argument("shape")
@click.argument("expr")
@click.option("--rank-bound", type=click.IntRange(min=1), default=None)
@kernel_options
@handle_cli_errors
def chern_pragacz(shape: str, expr: str, rank_bound: Optional[int], cfg: Settings):
    report = pragacz_check(parse_shape(shape), parse_bundle(expr), rank_bound or cfg.rank_bound)
    emit(cfg, report)
    if not report.positive:
        raise VerificationFailure("Schur positivity of the Chern plethysm", f"coefficient {report.violation}")


@main.group()
def verify():
    """Run the acceptance identities."""


@verify.command("all")
@click.option("--max-n", type=click.IntRange(min=1), default=4, show_default=True,
              help="Largest n used by any check")
@click.option("--progress/--no-progress", default=True)
@kernel_options
@handle_cli_errors
def verify_all(max_n: int, progress: bool, cfg: Settings):
    """Run every check up to --max-n; exit 1 naming the failures."""
    service = VerificationService(max_n=max_n, threads=cfg.threads, progress=progress)
    results = service.run_all()
    emit(cfg, [r.to_json() for r in results] if cfg.output_format == "json"
         else "\n".join(f"{'ok' if r.passed else 'FAILED'}\t{r.name}" for r in results))
    failed = [r for r in results if not r.passed]
    if failed:
        raise VerificationFailure(", ".join(r.name for r in failed), "; ".join(r.detail for r in failed))


if __name__ == "__main__":
    main()
