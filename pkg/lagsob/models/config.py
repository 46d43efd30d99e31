"""
설정 관리 모듈

Pydantic Settings를 사용한 환경 변수 기반 설정 관리
"""

from typing import List

from pydantic import ConfigDict, Field, ValidationError, field_validator
from pydantic_settings import BaseSettings

from lagsob.exceptions import ConfigurationError

# 지원하는 출력 형식
OUTPUT_FORMATS: List[str] = ["json", "text"]


class Settings(BaseSettings):
    """애플리케이션 설정 클래스"""

    # 로깅 설정
    log_level: str = Field(
        default="INFO",
        description="로그 레벨 (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )
    debug_mode: bool = Field(
        default=False,
        description="디버그 모드 활성화 여부"
    )

    # 계산 설정
    default_upto: int = Field(
        default=10,
        ge=0,
        le=200,
        description="입력에 N이 없을 때 사용할 최대 차수"
    )
    threads: int = Field(
        default=1,
        ge=1,
        le=64,
        description="n별 검증에 사용할 워커 수"
    )
    output_format: str = Field(
        default="json",
        description="출력 형식 (json, text)"
    )
    max_alpha: int = Field(
        default=40,
        ge=1,
        description="허용하는 alpha 최댓값"
    )
    max_m: int = Field(
        default=8,
        ge=1,
        description="허용하는 행렬 크기 m 최댓값"
    )

    # HTTP 서버 설정
    server_host: str = Field(
        default="127.0.0.1",
        description="서버가 바인딩할 호스트 주소"
    )
    server_port: int = Field(
        default=31880,
        ge=1,
        le=65535,
        description="서버가 바인딩할 포트 번호"
    )

    model_config = ConfigDict(
        env_file=".env",
        env_prefix="LAGSOB_",
        case_sensitive=False,
        extra="ignore"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """로그 레벨 검증"""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"로그 레벨은 {valid_levels} 중 하나여야 합니다")
        return v.upper()

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        """출력 형식 검증"""
        if v.lower() not in OUTPUT_FORMATS:
            raise ValueError(f"출력 형식은 {OUTPUT_FORMATS} 중 하나여야 합니다")
        return v.lower()


def _create_settings() -> Settings:
    """설정 인스턴스 생성

    Raises:
        ConfigurationError: 환경 변수나 .env 값이 검증을 통과하지 못한 경우
    """
    try:
        return Settings()
    except ValidationError as e:
        import logging
        logger = logging.getLogger(__name__)
        logger.error(f"설정 생성 오류: {e}")
        keys = ", ".join(sorted({str(error["loc"][0]) for error in e.errors() if error["loc"]}))
        raise ConfigurationError(keys or "settings", detail=str(e)) from e


settings = _create_settings()
