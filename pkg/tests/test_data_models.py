"""
데이터 모델 테스트
"""

import pytest

from lagsob.exceptions import DimensionError, DomainError, UnsupportedRegimeError
from lagsob.models.data import Check, ConstructionResult, Report, RSystem, SobolevSpec
from lagsob.models.poly import Poly, RationalMatrix


class TestSobolevSpec:
    """문제 인스턴스 테스트 클래스"""

    def test_creation(self):
        """정상 생성 테스트"""
        spec = SobolevSpec.from_rows(3, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])
        assert spec.m == 3
        assert spec.to_json() == {
            "alpha": 3,
            "m": 3,
            "M": [["1", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]],
        }

    def test_alpha_below_m(self):
        """alpha < m 이면 지원하지 않는 영역"""
        with pytest.raises(UnsupportedRegimeError) as exc_info:
            SobolevSpec.from_rows(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert "requires alpha >= m" in str(exc_info.value)

    def test_alpha_must_be_integer(self):
        """정수가 아닌 alpha 거부"""
        with pytest.raises(DomainError):
            SobolevSpec(alpha="3", m=1, M=RationalMatrix.zeros(1, 1))
        with pytest.raises(DomainError):
            SobolevSpec(alpha=True, m=1, M=RationalMatrix.zeros(1, 1))

    def test_shape_errors(self):
        """m 과 M 크기 오류 테스트"""
        with pytest.raises(DimensionError):
            SobolevSpec(alpha=3, m=0, M=RationalMatrix.zeros(0, 0))
        with pytest.raises(DimensionError):
            SobolevSpec(alpha=3, m=2, M=RationalMatrix.zeros(3, 3))


class TestResults:
    """구성 결과와 보고서 테스트 클래스"""

    def test_rsystem(self):
        """𝓡 묶음 값과 JSON 테스트"""
        R = RSystem((Poly([1, 1]), Poly.constant(2)))
        assert R.m == 2
        assert R.value(1, 3) == 4
        assert R.to_json() == [["1", "1"], ["2"]]

    def test_with_qpoly(self, reduction_spec):
        """q_n 하나만 교체한 사본"""
        result = ConstructionResult((Poly.one(), Poly.x()), ((-1,), (-1,)), reduction_spec)
        replaced = result.with_qpoly(1, Poly([1, 1]))
        assert replaced.qpolys[1] == Poly([1, 1])
        assert result.qpolys[1] == Poly.x()
        assert replaced.upto == 1

    def test_report_status(self):
        """모든 검사가 통과해야 pass"""
        report = Report(command="verify")
        assert report.status == "pass"
        report.add(Check(name="a", expected=1, actual=1))
        report.extend([Check(name="b", expected=1, actual=2, passed=False)])
        assert report.status == "fail"
        assert [c.name for c in report.failures] == ["b"]

    def test_report_dict(self):
        """보고서 dict 변환과 시간 반올림"""
        report = Report(command="awr", timings={"weighted_rank": 0.12345678})
        report.payload["awr"] = 8
        document = report.to_dict()
        assert document["command"] == "awr"
        assert document["status"] == "pass"
        assert document["timings"]["weighted_rank"] == 0.123457
        assert document["payload"] == {"awr": 8}
