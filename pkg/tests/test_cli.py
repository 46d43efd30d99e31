"""명령줄 인터페이스 테스트"""

import io
import json

import pytest

from lagsob import __version__
from lagsob.main import EXIT_CHECK_FAILURE, EXIT_PASS, build_parser, main


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch):
    """테스트 중 전역 로깅 재설정 방지"""
    monkeypatch.setattr("lagsob.main.setup_logging", lambda *args, **kwargs: None)


@pytest.fixture
def spec_file(tmp_path, worked_document):
    """기준 인스턴스 입력 파일"""
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(worked_document), encoding="utf-8")
    return path


def _write(tmp_path, name, data) -> str:
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
    return str(path)


class TestCommands:
    """명령 실행 테스트 클래스"""

    def test_awr_stdout(self, spec_file, capsys):
        """awr 결과를 표준 출력 JSON 으로"""
        assert main(["awr", "--input", str(spec_file)]) == EXIT_PASS
        document = json.loads(capsys.readouterr().out)
        assert document["command"] == "awr"
        assert document["status"] == "pass"
        assert document["payload"]["awr"] == 8

    def test_verify_to_file(self, spec_file, tmp_path):
        """verify 결과를 파일로 저장"""
        output = tmp_path / "report.json"
        code = main(["verify", "--input", str(spec_file), "--output", str(output), "--upto", "3"])
        assert code == EXIT_PASS
        document = json.loads(output.read_text(encoding="utf-8"))
        assert document["status"] == "pass"
        assert "orthogonality[n=3]" in [c["name"] for c in document["checks"]]
        assert "orthogonality[n=4]" not in [c["name"] for c in document["checks"]]

    def test_construct_from_stdin(self, worked_document, monkeypatch, capsys):
        """입력 경로가 없으면 표준 입력에서 읽기"""
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(worked_document)))
        assert main(["construct", "--upto", "2"]) == EXIT_PASS
        document = json.loads(capsys.readouterr().out)
        assert len(document["payload"]["q"]) == 3

    def test_operator_text_format(self, spec_file, capsys):
        """텍스트 출력 형식"""
        assert main(["operator", "--input", str(spec_file), "--format", "text", "--upto", "1"]) == EXIT_PASS
        out = capsys.readouterr().out
        assert out.startswith("command: operator\nstatus: pass")

    def test_reproduce_example(self, capsys):
        """입력 없이 예제 재현"""
        assert main(["reproduce-example", "--threads", "2"]) == EXIT_PASS
        assert json.loads(capsys.readouterr().out)["status"] == "pass"


class TestExitCodes:
    """종료 코드 테스트 클래스"""

    def test_unsupported_regime(self, tmp_path, capsys):
        """alpha < m 은 종료 코드 2 와 진단 메시지"""
        path = _write(tmp_path, "bad.json", {"alpha": 2, "m": 3, "M": [[0, 0, 0]] * 3})
        assert main(["verify", "--input", path]) == 2
        assert "requires alpha >= m" in capsys.readouterr().err

    def test_malformed_json(self, tmp_path, capsys):
        """잘못된 JSON 은 종료 코드 2"""
        path = _write(tmp_path, "broken.json", "{alpha: 3")
        assert main(["awr", "--input", path]) == 2
        assert "lagsob: " in capsys.readouterr().err

    def test_missing_input_file(self, tmp_path):
        """없는 입력 파일은 종료 코드 2"""
        assert main(["awr", "--input", str(tmp_path / "missing.json")]) == 2

    def test_negative_upto(self, spec_file):
        """음수 --upto 는 종료 코드 2"""
        assert main(["construct", "--input", str(spec_file), "--upto", "-1"]) == 2

    def test_check_failure(self, tmp_path):
        """Ω 가 음이 아닌 정수 근을 가지면 종료 코드 1"""
        path = _write(tmp_path, "degenerate.json", {"alpha": 1, "m": 1, "M": [[-1]]})
        assert main(["verify", "--input", path, "--upto", "2"]) == EXIT_CHECK_FAILURE

    @pytest.mark.parametrize("command", ["construct", "operator", "verify"])
    def test_root_failure_same_code_for_all_commands(self, tmp_path, command, capsys):
        """Ω 근 실패는 명령과 관계없이 종료 코드 1"""
        path = _write(tmp_path, "degenerate.json", {"alpha": 1, "m": 1, "M": [[-1]]})
        assert main([command, "--input", path, "--upto", "2"]) == EXIT_CHECK_FAILURE

    def test_unwritable_output(self, spec_file, tmp_path, capsys):
        """출력 디렉터리가 없으면 종료 코드 2 와 진단 메시지"""
        target = tmp_path / "missing" / "out.json"
        assert main(["awr", "--input", str(spec_file), "--output", str(target)]) == 2
        assert "설정 오류: output" in capsys.readouterr().err
        assert not target.exists()

    def test_unknown_command(self):
        """알 수 없는 명령은 argparse 오류"""
        with pytest.raises(SystemExit) as exc_info:
            main(["plot"])
        assert exc_info.value.code == 2

    def test_version(self, capsys):
        """--version 출력"""
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["--version"])
        assert exc_info.value.code == 0
        assert __version__ in capsys.readouterr().out
