"""
커스텀 예외 클래스들

lagsob에서 사용하는 모든 커스텀 예외를 정의합니다.
CLI는 exit_code를, HTTP 표면은 status_code를 사용합니다.
"""

from typing import Any, Dict, Optional


class LagsobException(Exception):
    """lagsob 기본 예외 클래스"""

    def __init__(
        self,
        message: str,
        exit_code: int = 2,
        status_code: int = 400,
        detail: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.status_code = status_code
        self.detail = detail or message
        self.context = context or {}
        super().__init__(self.message)


class DimensionError(LagsobException):
    """행렬/벡터 크기가 맞지 않는 경우"""

    def __init__(self, what: str, detail: Optional[str] = None):
        message = f"차원 오류: {what}"
        super().__init__(message=message, status_code=400, detail=detail or message)


class DomainError(LagsobException):
    """연산의 정의역을 벗어난 인자가 주어진 경우"""

    def __init__(self, what: str, detail: Optional[str] = None):
        message = f"정의역 오류: {what}"
        super().__init__(message=message, status_code=400, detail=detail or message)


class UnsupportedRegimeError(LagsobException):
    """정확 계산이 지원되지 않는 매개변수 영역 (alpha < m 등)"""

    def __init__(self, alpha: object, m: object, detail: Optional[str] = None):
        message = f"requires alpha >= m (alpha={alpha}, m={m})"
        super().__init__(message=message, status_code=422, detail=detail or message)


class InconsistencyError(LagsobException):
    """이론적으로 일어날 수 없는 불일치가 발견된 경우"""

    def __init__(self, what: str, detail: Optional[str] = None):
        message = f"불일치: {what}"
        super().__init__(
            message=message, exit_code=1, status_code=500, detail=detail or message
        )


class PreconditionError(LagsobException):
    """연산의 사전 조건이 만족되지 않는 경우 (Ω 의 음이 아닌 정수 근 등)

    입력은 올바르지만 수학적 검사가 실패한 것이므로 종료 코드는 1입니다.
    """

    def __init__(self, what: str, detail: Optional[str] = None, witness: Optional[int] = None):
        message = f"사전 조건 위반: {what}"
        super().__init__(
            message=message,
            exit_code=1,
            status_code=422,
            detail=detail or message,
            context={} if witness is None else {"witness": witness},
        )
        self.witness = witness


class SpecValidationError(LagsobException):
    """입력 문서(JSON)가 스키마에 맞지 않는 경우"""

    def __init__(self, what: str, detail: Optional[str] = None):
        message = f"입력 검증 실패: {what}"
        super().__init__(message=message, status_code=422, detail=detail or message)


class ConfigurationError(LagsobException):
    """설정 오류인 경우"""

    def __init__(self, config_key: str, detail: Optional[str] = None):
        message = f"설정 오류: {config_key}" + (f" ({detail})" if detail else "")
        super().__init__(message=message, status_code=500, detail=detail or "설정 오류")
