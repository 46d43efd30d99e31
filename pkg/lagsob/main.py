"""
lagsob 메인 엔트리 포인트

명령줄 인터페이스와 FastAPI 애플리케이션 생성
"""

# .env 파일 로드 (다른 import보다 먼저)
from dotenv import load_dotenv
load_dotenv()

import argparse
import sys
from contextlib import asynccontextmanager
from pathlib import Path
from typing import AsyncGenerator, List, Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from pydantic import ValidationError

from lagsob import __version__
from lagsob.exception_handlers import register_exception_handlers
from lagsob.exceptions import ConfigurationError, LagsobException, SpecValidationError
from lagsob.models.config import OUTPUT_FORMATS, settings
from lagsob.models.documents import COMMANDS, RunConfig, SpecDocument
from lagsob.services.pipeline import PipelineService, render_report
from lagsob.utils.logging import get_logger, log_error, setup_logging

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncGenerator[None, None]:
    """애플리케이션 생명주기 관리"""
    logger = get_logger(__name__)

    logger.info("lagsob 서버 시작 중...")
    logger.info(f"기본 최대 차수: {settings.default_upto}")
    logger.info(f"검증 워커 수: {settings.threads}")
    logger.info(f"디버그 모드: {settings.debug_mode}")

    yield

    logger.info("lagsob 서버 종료 중...")


def create_app() -> FastAPI:
    """FastAPI 애플리케이션 생성 및 설정"""
    from lagsob.api.routes import router

    setup_logging()
    logger = get_logger(__name__)

    app = FastAPI(
        title="lagsob",
        description="Exact discrete Laguerre-Sobolev orthogonal polynomials and their differential operators",
        version=__version__,
        lifespan=lifespan,
        debug=settings.debug_mode,
    )

    # CORS 미들웨어 설정 (디버그 모드에서만)
    if settings.debug_mode:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_credentials=True,
            allow_methods=["*"],
            allow_headers=["*"],
        )
        logger.info("CORS 미들웨어 활성화됨 (디버그 모드)")

    app.include_router(router)
    register_exception_handlers(app)

    logger.info("FastAPI 애플리케이션 생성 완료")
    return app


def serve() -> int:
    """uvicorn 으로 HTTP 표면 실행"""
    import uvicorn

    logger = get_logger(__name__)
    try:
        logger.info(f"lagsob 서버 시작: {settings.server_host}:{settings.server_port}")
        uvicorn.run(
            "lagsob.main:create_app",
            factory=True,
            host=settings.server_host,
            port=settings.server_port,
            reload=settings.debug_mode,
            log_level=settings.log_level.lower(),
        )
    except KeyboardInterrupt:
        logger.info("사용자에 의해 서버가 중단되었습니다")
    except Exception as e:
        logger.error(f"서버 시작 실패: {e}")
        return EXIT_CHECK_FAILURE
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    """명령줄 파서 생성"""
    parser = argparse.ArgumentParser(
        prog="lagsob",
        description="이산 라게르-소볼레프 직교 다항식과 고차 미분 연산자의 정확 계산/검증",
    )
    parser.add_argument("command", choices=[*COMMANDS, "serve"], help="실행할 명령")
    parser.add_argument("--input", type=Path, help="입력 JSON 경로 (없으면 표준 입력)")
    parser.add_argument("--output", type=Path, help="출력 경로 (없으면 표준 출력)")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="출력 형식")
    parser.add_argument("--upto", type=int, help="최대 차수 N")
    parser.add_argument("--threads", type=int, help="n별 검증 워커 수")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _read_document(path: Optional[Path]) -> SpecDocument:
    try:
        text = path.read_text(encoding="utf-8") if path else sys.stdin.read()
    except OSError as e:
        raise SpecValidationError(f"입력을 읽을 수 없습니다: {e}") from e
    return SpecDocument.parse(text)


def _emit(text: str, output: Optional[str]) -> None:
    """결과를 파일 또는 표준 출력으로 내보냄

    Raises:
        ConfigurationError: 출력 경로에 쓸 수 없는 경우
    """
    if not output:
        print(text)
        return
    try:
        Path(output).write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise ConfigurationError("output", detail=f"{output}: {e.strerror or e}") from e
    get_logger(__name__).info(f"결과 저장: {output}")


def _build_config(args: argparse.Namespace, pipeline: PipelineService) -> RunConfig:
    document = None if args.command == "reproduce-example" else _read_document(args.input)
    upto = settings.default_upto if document is None else pipeline.resolve_upto(document, args.upto)
    try:
        return RunConfig(
            command=args.command,
            spec=document,
            N=upto,
            output=str(args.output) if args.output else None,
            format=args.format or settings.output_format,
            threads=args.threads or settings.threads,
        )
    except ValidationError as e:
        raise SpecValidationError(str(e)) from e


def main(argv: Optional[List[str]] = None) -> int:
    """메인 엔트리 포인트

    Returns:
        0 모든 검증 통과, 1 검증 실패 (Ω 의 음이 아닌 정수 근 포함), 2 사용법/입력/출력 오류
    """
    args = build_parser().parse_args(argv)
    setup_logging()
    logger = get_logger(__name__)

    if args.command == "serve":
        return serve()

    pipeline = PipelineService(settings)
    try:
        if args.upto is not None and args.upto < 0:
            raise SpecValidationError(f"--upto 는 0 이상이어야 합니다: {args.upto}")
        if args.threads is not None and args.threads < 1:
            raise SpecValidationError(f"--threads 는 1 이상이어야 합니다: {args.threads}")
        config = _build_config(args, pipeline)
        report = pipeline.run(config)
        _emit(render_report(report, config.format), config.output)
    except LagsobException as e:
        log_error(logger, e, f"{args.command} 실패")
        print(f"lagsob: {e.message}", file=sys.stderr)
        return e.exit_code

    if report.status != "pass":
        for check in report.failures:
            logger.warning(f"검증 실패: {check.name}")
        return EXIT_CHECK_FAILURE
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
