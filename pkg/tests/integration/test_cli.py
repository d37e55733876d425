"""命令行端到端测试。"""

import json
from typing import Any, Dict, List

import pytest

from src.cli import main
from src.kenyon_smillie.reports import CheckReport, SuiteReport
from src.kenyon_smillie.resources import load_ode

pytestmark = pytest.mark.integration


def _run(capsys: pytest.CaptureFixture, argv: List[str]) -> Dict[str, Any]:
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    data = json.loads(out)
    data["_exit"] = code
    return data


class TestGeometryCommands:
    """flex 与 project 测试类。"""

    def test_hyperflex(self, capsys: pytest.CaptureFixture) -> None:
        """t = 3 时 (0:1:-1) 是超拐点。"""
        result = _run(capsys, ["flex"])
        assert result["_exit"] == 0
        assert result["data"]["kind"] == "hyperflex"
        assert result["data"]["multiplicity"] == 4

    def test_flex_at_p(self, capsys: pytest.CaptureFixture) -> None:
        result = _run(capsys, ["flex", "--point", "(0:0:1)", "--at", "5"])
        assert result["data"]["kind"] == "flex"

    def test_projection(self, capsys: pytest.CaptureFixture) -> None:
        """从 Q 的投影次数为 3，分歧总数 10。"""
        result = _run(capsys, ["project", "--forms", "X", "Y + Z"])
        assert result["_exit"] == 0
        assert result["data"]["degree"] == 3
        assert result["data"]["total_ramification"] == 10
        assert result["data"]["riemann_hurwitz"]

    def test_reduce(self, capsys: pytest.CaptureFixture) -> None:
        """Fermat 四次曲线上 X⁴ 属于 Jacobian 理想。"""
        result = _run(capsys, ["reduce", "--curve", "X^4 + Y^4 + Z^4", "--poly", "X^4"])
        assert result["_exit"] == 0
        assert result["data"]["normal_form"] == "0"
        assert result["data"]["coordinates"] == {}


class TestEquationCommands:
    """exponents 与 pullback 测试类。"""

    def test_pullback_identity(self, capsys: pytest.CaptureFixture) -> None:
        """n = 1 时方程不变。"""
        result = _run(capsys, ["pullback", "--n", "1"])
        assert result["_exit"] == 0
        assert result["data"]["ode"] == result["data"]["source"]

    def test_pullback_l1(self, capsys: pytest.CaptureFixture) -> None:
        """L1 沿 t = s⁹ 拉回得到 s 表示的方程。"""
        result = _run(capsys, ["pullback", "--n", "9"])
        assert result["data"]["ode"]["text"] == str(load_ode("eq-spar-x"))

    def test_hypergeometric_scheme(self, capsys: pytest.CaptureFixture) -> None:
        result = _run(capsys, ["exponents", "--ode", "l1"])
        assert result["_exit"] == 0
        assert result["data"]["points"] == 3
        assert result["data"]["fuchs_relation"]["holds"]

    def test_scheme_text(self, capsys: pytest.CaptureFixture) -> None:
        """文本格式输出 Riemann 表。"""
        assert main(["exponents", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "∞" in out
        assert "10 singular points" in out

    @pytest.mark.slow
    def test_picard_fuchs(self, capsys: pytest.CaptureFixture) -> None:
        """截面 X 的方程 a_1 = 9s⁸/(s⁹ − 1)。"""
        result = _run(capsys, ["pf"])
        assert result["_exit"] == 0
        assert result["data"]["order"] == 2
        assert result["data"]["coefficients"] == [str(c) for c in load_ode("eq-spar-x").coefficients]


class TestErrors:
    """诊断与退出码测试类。"""

    def test_parse_error(self, capsys: pytest.CaptureFixture) -> None:
        """语法错误以 2 退出并给出列号。"""
        result = _run(capsys, ["flex", "--point", "(0:1"])
        assert result["_exit"] == 2
        assert result["code"] == "parse_error"
        assert "column" in result["details"]

    def test_point_off_curve(self, capsys: pytest.CaptureFixture) -> None:
        """点不在曲线上是数学错误，以 1 退出。"""
        result = _run(capsys, ["flex", "--point", "(1:0:0)"])
        assert result["_exit"] == 1
        assert result["code"] == "polynomial_error"

    def test_unknown_subcommand(self) -> None:
        assert main(["integrate"]) == 2

    def test_unknown_anchor(self) -> None:
        assert main(["verify", "--check", "no-such-check"]) == 2

    def test_bad_format(self) -> None:
        assert main(["flex", "--format", "yaml"]) == 2


class TestVerifyAndSample:
    """verify 与 sample-points 测试类。"""

    def test_selected_checks(self, capsys: pytest.CaptureFixture) -> None:
        result = _run(capsys, ["verify", "--check", "descent", "--check", "degree-table"])
        assert result["_exit"] == 0
        assert sorted(result["data"]["checks"]) == ["degree-table", "descent"]
        assert result["data"]["failed"] == []

    def test_deterministic_output(self, capsys: pytest.CaptureFixture) -> None:
        """同一种子两次运行输出逐字节相同。"""
        argv = ["verify", "--check", "torsion", "--seed", "11", "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_sample_points_csv(self, capsys: pytest.CaptureFixture) -> None:
        code = main(["sample-points", "--x-min", "0", "--x-max", "1", "--steps", "1", "--format", "text"])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        assert lines[0] == "x,y"
        assert lines[1:3] == ["0,-1.0", "0,0.0"]

    @pytest.mark.slow
    def test_full_suite(self, capsys: pytest.CaptureFixture) -> None:
        """全部检查通过。"""
        result = _run(capsys, ["verify"])
        assert result["_exit"] == 0
        assert result["data"]["failed"] == []

    def test_failed_check_exits_one(self, capsys: pytest.CaptureFixture, mocker: Any) -> None:
        """任何检查失败时以 1 退出，并列出失败的锚点。"""
        failing = SuiteReport.collect([CheckReport(anchor="descent", passed=False)], 1, "fix-zeta3")
        mocker.patch("src.cli.commands.run_suite", return_value=failing)
        result = _run(capsys, ["verify", "--check", "descent"])
        assert result["_exit"] == 1
        assert result["data"]["failed"] == ["descent"]

    def test_alias(self, capsys: pytest.CaptureFixture) -> None:
        result = _run(capsys, ["verify-paper", "--check", "symmetry"])
        assert result["_exit"] == 0
        assert result["command"] == "verify"
