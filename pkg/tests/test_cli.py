import json

from algebra.combinat import Partition
from algebra.lascoux import sym_product, wedge_product
from cli import main


def test_boolean_expand_json(runner):
    result = runner.invoke(main, ["boolean", "expand", "3", "2", "--format", "json"])
    assert result.exit_code == 0
    assert result.output.strip() == '{"n":3,"terms":[{"lambda":[2,1],"coeff":"1"}]}'


def test_json_does_not_depend_on_threads(runner):
    one = runner.invoke(main, ["boolean", "expand", "5", "2", "--format", "json", "--threads", "1"])
    four = runner.invoke(main, ["boolean", "expand", "5", "2", "--format", "json", "--threads", "4"])
    assert one.exit_code == four.exit_code == 0
    assert one.output == four.output


def test_boolean_expand_range_error_is_usage_error(runner):
    result = runner.invoke(main, ["boolean", "expand", "3", "5"])
    assert result.exit_code == 2
    assert "E_RANGE" in result.output


def test_bad_integer_is_usage_error(runner):
    result = runner.invoke(main, ["boolean", "expand", "three", "2"])
    assert result.exit_code == 2


def test_unknown_subcommand(runner):
    assert runner.invoke(main, ["boolean", "explode", "3"]).exit_code == 2


def test_lascoux_verify(runner):
    result = runner.invoke(main, ["lascoux", "verify", "3"])
    assert result.exit_code == 0
    assert "fillings: 7" in result.output
    assert "asm: 7" in result.output


def test_lascoux_wedge_latex(runner):
    result = runner.invoke(main, ["lascoux", "wedge", "3", "--format", "latex"])
    assert result.exit_code == 0
    assert result.output.strip() == r"s_{\emptyset} + 2s_{(1)} + s_{(2)} + 2s_{(1,1)} + s_{(2,1)}"


def test_lascoux_rff_shape(runner):
    result = runner.invoke(main, ["lascoux", "rff", "3", "--shape", "[1]", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output) == [[[2]], [[1]]]


def test_frob_hrs_policies(runner):
    skipped = runner.invoke(main, ["frob", "hrs", "2", "2", "2"])
    assert skipped.exit_code == 0
    failed = runner.invoke(main, ["frob", "hrs", "2", "2", "2", "--undefined-terms", "error"])
    assert failed.exit_code == 2
    clamped = runner.invoke(main, ["frob", "hrs", "2", "2", "2", "--undefined-terms", "clamp", "--format", "json"])
    superspace = runner.invoke(main, ["frob", "superspace", "2", "--format", "json"])
    assert clamped.output == superspace.output


def test_frob_commands(runner):
    assert runner.invoke(main, ["frob", "reiner-webb", "3"]).output.strip() == "[2, 1]\t1"
    assert runner.invoke(main, ["frob", "derangement-check", "4"]).exit_code == 0
    assert runner.invoke(main, ["frob", "positroid", "2"]).exit_code == 0
    assert runner.invoke(main, ["frob", "reiner-webb", "1"]).exit_code == 2


def test_chern_commands(runner):
    roots = runner.invoke(main, ["chern", "roots", "wedge(2, E:3)", "--format", "json"])
    assert roots.exit_code == 0
    assert json.loads(roots.output)["rank"] == 3
    pleth = runner.invoke(main, ["chern", "pleth", "e_3", "wedge(2, E:3)", "--schur"])
    assert pleth.exit_code == 0
    assert "[2, 1]\t1" in pleth.output
    assert runner.invoke(main, ["chern", "pragacz", "[1,1]", "tensor(E:2, F:2)"]).exit_code == 0


def test_chern_parse_error_is_usage_error(runner):
    result = runner.invoke(main, ["chern", "roots", "wedge(2 E:3)"])
    assert result.exit_code == 2
    assert "position 8" in result.output


def test_chern_rank_bound_exits_one(runner):
    result = runner.invoke(main, ["chern", "roots", "wedge(2, E:5)", "--rank-bound", "4"])
    assert result.exit_code == 1


def test_verify_all_trivial(runner):
    result = runner.invoke(main, ["verify", "all", "--max-n", "1", "--no-progress"])
    assert result.exit_code == 0
    assert "FAILED" not in result.output


def test_verify_all_reports_failures(runner, monkeypatch):
    monkeypatch.setattr("services.verification_service.VerificationService.check_asm",
                        lambda self: (False, "mismatch"))
    result = runner.invoke(main, ["verify", "all", "--max-n", "2", "--no-progress"])
    assert result.exit_code == 1
    assert "FAILED: asm-corollary" in result.output


def test_non_integral_frobenius_exits_one(runner, monkeypatch):
    monkeypatch.setattr("algebra.frobmod.positroid_character",
                        lambda n, threads=None: {Partition([2]): 1, Partition([1, 1]): 0})
    result = runner.invoke(main, ["frob", "positroid", "2"])
    assert result.exit_code == 1


def _recording(target, seen):
    def wrapper(n, threads=None):
        seen.append(threads)
        return target(n, threads=threads)
    return wrapper


def test_lascoux_expand_passes_threads(runner, monkeypatch):
    seen = []
    monkeypatch.setattr("cli.wedge_product", _recording(wedge_product, seen))
    monkeypatch.setattr("cli.sym_product", _recording(sym_product, seen))
    expanded = runner.invoke(main, ["lascoux", "wedge", "4", "--method", "expand", "--threads", "3"])
    fillings = runner.invoke(main, ["lascoux", "wedge", "4"])
    assert expanded.exit_code == 0
    assert expanded.output == fillings.output
    assert runner.invoke(main, ["lascoux", "sym", "3", "--method", "expand", "--threads", "2"]).exit_code == 0
    assert seen == [3, 2]


def test_lascoux_verify_passes_threads(runner, monkeypatch):
    seen = []
    monkeypatch.setattr("services.verification_service.wedge_product", _recording(wedge_product, seen))
    result = runner.invoke(main, ["lascoux", "verify", "3", "--threads", "2"])
    assert result.exit_code == 0
    assert seen == [2]
