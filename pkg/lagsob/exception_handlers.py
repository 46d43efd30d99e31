"""
글로벌 예외 핸들러

HTTP 표면에서 발생하는 예외를 상태 코드와 응답 본문으로 변환합니다.
"""

import traceback
from typing import Union

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from lagsob.exceptions import LagsobException, PreconditionError
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)


async def lagsob_exception_handler(
    request: Request,
    exc: LagsobException,
) -> Union[JSONResponse, PlainTextResponse]:
    """
    lagsob 커스텀 예외 핸들러

    Args:
        request: FastAPI 요청 객체
        exc: 발생한 LagsobException

    Returns:
        적절한 HTTP 응답
    """
    log = logger.warning if isinstance(exc, PreconditionError) else logger.error
    log(
        f"{type(exc).__name__}: {exc.message} "
        f"(상태코드: {exc.status_code}, 문맥: {exc.context}) "
        f"요청: {request.method} {request.url}"
    )

    from lagsob.models.config import settings

    if settings.debug_mode:
        return JSONResponse(
            status_code=exc.status_code,
            content={
                "error": exc.message,
                "detail": exc.detail,
                "status_code": exc.status_code,
                "exit_code": exc.exit_code,
                "error_type": type(exc).__name__,
                "context": exc.context,
                "path": str(request.url.path),
                "method": request.method,
            },
        )
    lines = [exc.detail, *(f"{key}={value}" for key, value in exc.context.items())]
    return PlainTextResponse(content="\n".join(lines), status_code=exc.status_code)


async def http_exception_handler(
    request: Request,
    exc: HTTPException,
) -> Union[JSONResponse, PlainTextResponse]:
    """FastAPI HTTPException 핸들러"""
    logger.warning(
        f"HTTPException 발생: {exc.detail} "
        f"(상태코드: {exc.status_code}) "
        f"요청: {request.method} {request.url}"
    )

    from lagsob.models.config import settings

    if settings.debug_mode:
        return JSONResponse(
            status_code=exc.status_code,
            content={
                "error": "HTTP Exception",
                "detail": exc.detail,
                "status_code": exc.status_code,
                "path": str(request.url.path),
                "method": request.method,
            },
        )
    return PlainTextResponse(content=str(exc.detail), status_code=exc.status_code)


async def general_exception_handler(
    request: Request,
    exc: Exception,
) -> Union[JSONResponse, PlainTextResponse]:
    """일반 예외 핸들러 (예상하지 못한 모든 예외)"""
    logger.error(
        f"예상하지 못한 예외 발생: {str(exc)} "
        f"요청: {request.method} {request.url} "
        f"스택 트레이스: {traceback.format_exc()}"
    )

    from lagsob.models.config import settings

    if settings.debug_mode:
        return JSONResponse(
            status_code=500,
            content={
                "error": "Internal Server Error",
                "detail": str(exc),
                "status_code": 500,
                "path": str(request.url.path),
                "method": request.method,
                "traceback": traceback.format_exc().split("\n"),
            },
        )
    return PlainTextResponse(content="서버 내부 오류가 발생했습니다", status_code=500)


def register_exception_handlers(app: FastAPI) -> None:
    """
    FastAPI 앱에 예외 핸들러들을 등록합니다

    Args:
        app: FastAPI 애플리케이션 인스턴스
    """
    app.add_exception_handler(LagsobException, lagsob_exception_handler)
    app.add_exception_handler(HTTPException, http_exception_handler)
    app.add_exception_handler(Exception, general_exception_handler)

    logger.info("예외 핸들러 등록 완료")
