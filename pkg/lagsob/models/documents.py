"""
입력 문서 모델

JSON 입력 {"alpha", "m", "M", "S", "N"} 과 실행 설정을 Pydantic 으로 검증합니다.
alpha >= m 조건은 스키마가 아니라 SobolevSpec 이 검사합니다.
"""

import json
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from lagsob.exceptions import SpecValidationError
from lagsob.models.config import OUTPUT_FORMATS, settings
from lagsob.models.data import SobolevSpec
from lagsob.models.poly import Poly, RationalMatrix, format_rational, to_rational

COMMANDS = ("construct", "operator", "awr", "verify", "reproduce-example")

RationalEntry = Union[int, str]


def _check_rationals(values: List[RationalEntry]) -> List[RationalEntry]:
    for value in values:
        try:
            to_rational(value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"유리수가 아닌 값: {value!r}") from e
    return values


class SpecDocument(BaseModel):
    """문제 인스턴스 JSON 문서"""

    model_config = ConfigDict(extra="forbid")

    alpha: int = Field(description="라게르 매개변수 (정수)")
    m: int = Field(ge=1, description="행렬 M 의 크기")
    M: List[List[RationalEntry]] = Field(description="m x m 유리수 행렬 (\"num/den\" 문자열 또는 정수)")
    S: Optional[List[RationalEntry]] = Field(default=None, description="S 다항식 오름차순 계수")
    N: Optional[int] = Field(default=None, ge=0, description="구성/검증할 최대 차수")

    @field_validator("M")
    @classmethod
    def validate_matrix_entries(cls, v: List[List[RationalEntry]]) -> List[List[RationalEntry]]:
        """행렬 원소 검증"""
        for row in v:
            _check_rationals(row)
        return v

    @field_validator("S")
    @classmethod
    def validate_s_coeffs(cls, v: Optional[List[RationalEntry]]) -> Optional[List[RationalEntry]]:
        """S 계수 검증"""
        if v is None:
            return v
        _check_rationals(v)
        if not any(to_rational(c) for c in v):
            raise ValueError("S는 영 다항식이 아니어야 합니다")
        return v

    @model_validator(mode="after")
    def validate_shape(self) -> "SpecDocument":
        """행렬 크기와 상한 검증"""
        if len(self.M) != self.m or any(len(row) != self.m for row in self.M):
            raise ValueError(f"M은 {self.m}x{self.m} 정방 행렬이어야 합니다")
        if self.alpha > settings.max_alpha:
            raise ValueError(f"alpha는 {settings.max_alpha} 이하여야 합니다")
        if self.m > settings.max_m:
            raise ValueError(f"m은 {settings.max_m} 이하여야 합니다")
        return self

    @classmethod
    def parse(cls, data: Union[str, bytes, Dict[str, Any]]) -> "SpecDocument":
        """JSON 텍스트 또는 dict 에서 문서 생성

        Raises:
            SpecValidationError: JSON 이 잘못되었거나 스키마에 맞지 않는 경우
        """
        try:
            if isinstance(data, (str, bytes)):
                return cls.model_validate_json(data)
            return cls.model_validate(data)
        except ValidationError as e:
            errors = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or '문서'}: {err['msg']}"
                for err in e.errors()
            )
            raise SpecValidationError(errors) from e

    def to_spec(self) -> SobolevSpec:
        """SobolevSpec 으로 변환 (alpha < m 이면 UnsupportedRegimeError)"""
        return SobolevSpec(alpha=self.alpha, m=self.m, M=RationalMatrix.from_rows(self.M))

    def s_poly(self) -> Poly:
        return Poly.one() if self.S is None else Poly(self.S)

    def canonical(self) -> Dict[str, Any]:
        """정규화된 JSON 표현 (유리수는 기약분수 문자열)"""
        document: Dict[str, Any] = {
            "alpha": self.alpha,
            "m": self.m,
            "M": [[format_rational(c) for c in row] for row in self.M],
        }
        if self.S is not None:
            document["S"] = self.s_poly().to_json()
        if self.N is not None:
            document["N"] = self.N
        return document

    def dumps(self) -> str:
        return json.dumps(self.canonical(), ensure_ascii=False)


class RunConfig(BaseModel):
    """한 번의 명령 실행 설정"""

    command: Literal["construct", "operator", "awr", "verify", "reproduce-example"]
    spec: Optional[SpecDocument] = None
    S: Optional[List[RationalEntry]] = None
    N: int = Field(default=10, ge=0)
    output: Optional[str] = None
    format: str = "json"
    threads: int = Field(default=1, ge=1, le=64)

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        """출력 형식 검증"""
        if v.lower() not in OUTPUT_FORMATS:
            raise ValueError(f"출력 형식은 {OUTPUT_FORMATS} 중 하나여야 합니다")
        return v.lower()

    @model_validator(mode="after")
    def validate_spec_present(self) -> "RunConfig":
        """예제 재현 외의 명령은 문서가 필요"""
        if self.command != "reproduce-example" and self.spec is None:
            raise ValueError(f"{self.command} 명령에는 입력 문서가 필요합니다")
        return self

    def s_poly(self) -> Poly:
        if self.S is not None:
            return Poly(self.S)
        if self.spec is not None:
            return self.spec.s_poly()
        return Poly.one()
