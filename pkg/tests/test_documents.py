"""입력 문서 모델 테스트"""

import json

import pytest
from pydantic import ValidationError

from lagsob.exceptions import SpecValidationError, UnsupportedRegimeError
from lagsob.models.documents import RunConfig, SpecDocument
from lagsob.models.poly import Poly


class TestSpecDocument:
    """SpecDocument 테스트 클래스"""

    def test_parse_json(self, worked_document):
        """JSON 텍스트 파싱 테스트"""
        document = SpecDocument.parse(json.dumps(worked_document))
        assert document.alpha == 3
        assert document.N == 4
        assert document.s_poly() == Poly.one()
        assert document.to_spec().m == 3

    def test_rational_strings(self):
        """"num/den" 문자열 원소와 S 계수"""
        document = SpecDocument.parse({"alpha": 4, "m": 2, "M": [["1/2", 0], [0, "-3/6"]], "S": [0, "2/4"]})
        assert document.canonical() == {
            "alpha": 4,
            "m": 2,
            "M": [["1/2", "0"], ["0", "-1/2"]],
            "S": ["0", "1/2"],
        }
        assert document.s_poly() == Poly([0, "1/2"])
        assert json.loads(document.dumps())["M"][1][1] == "-1/2"

    @pytest.mark.parametrize(
        "data",
        [
            {"alpha": 3, "m": 2, "M": [[1, 0]]},
            {"alpha": 3, "m": 2, "M": [[1, 0], [0]]},
            {"alpha": 3, "m": 1, "M": [["x"]]},
            {"alpha": 3, "m": 1, "M": [[0.5]]},
            {"alpha": 3, "m": 0, "M": []},
            {"alpha": 3, "m": 1, "M": [[0]], "S": [0, 0]},
            {"alpha": 3, "m": 1, "M": [[0]], "N": -1},
            {"alpha": 3, "m": 1, "M": [[0]], "extra": 1},
            {"alpha": 999, "m": 1, "M": [[0]]},
            {"m": 1, "M": [[0]]},
        ],
    )
    def test_invalid_documents(self, data):
        """스키마 위반 문서는 SpecValidationError"""
        with pytest.raises(SpecValidationError):
            SpecDocument.parse(data)

    def test_invalid_json(self):
        """잘못된 JSON 텍스트"""
        with pytest.raises(SpecValidationError):
            SpecDocument.parse("{not json")

    def test_regime_checked_on_conversion(self):
        """alpha < m 은 문서 검증이 아니라 변환 시 거부"""
        document = SpecDocument.parse({"alpha": 2, "m": 3, "M": [[0, 0, 0]] * 3})
        with pytest.raises(UnsupportedRegimeError):
            document.to_spec()


class TestRunConfig:
    """RunConfig 테스트 클래스"""

    def test_defaults(self, worked_document):
        """기본값 테스트"""
        config = RunConfig(command="verify", spec=SpecDocument.parse(worked_document))
        assert config.N == 10
        assert config.format == "json"
        assert config.threads == 1
        assert config.s_poly() == Poly.one()

    def test_s_override(self, worked_document):
        """설정의 S 가 문서의 S 보다 우선"""
        config = RunConfig(command="operator", spec=SpecDocument.parse(worked_document), S=[0, 1])
        assert config.s_poly() == Poly.x()

    def test_spec_required(self):
        """예제 재현 외의 명령은 문서 필요"""
        with pytest.raises(ValidationError):
            RunConfig(command="construct")
        assert RunConfig(command="reproduce-example").spec is None

    def test_invalid_values(self):
        """잘못된 형식, 명령, 스레드 수"""
        with pytest.raises(ValidationError):
            RunConfig(command="reproduce-example", format="xml")
        with pytest.raises(ValidationError):
            RunConfig(command="plot")
        with pytest.raises(ValidationError):
            RunConfig(command="reproduce-example", threads=0)
        assert RunConfig(command="reproduce-example", format="TEXT").format == "text"
