"""FastAPI 라우터 및 엔드포인트 정의"""

from typing import Optional

from fastapi import APIRouter, Query
from fastapi.responses import JSONResponse, PlainTextResponse

from lagsob.api.handlers import SobolevRequestHandler
from lagsob.models.config import settings
from lagsob.models.documents import SpecDocument
from lagsob.services.pipeline import PipelineService
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)

router = APIRouter()

pipeline_service = PipelineService(settings)
sobolev_handler = SobolevRequestHandler(settings=settings, pipeline=pipeline_service)

UPTO_QUERY = Query(default=None, ge=0, le=200, description="최대 차수 N (문서 값보다 우선)")


@router.get("/health", response_class=PlainTextResponse)
async def health_check():
    """헬스 체크 엔드포인트

    Returns:
        서버 상태 정보
    """
    return (
        "status=healthy\n"
        f"debug_mode={settings.debug_mode}\n"
        f"default_upto={settings.default_upto}\n"
        "service=lagsob"
    )


@router.post("/construct")
async def construct(document: SpecDocument, upto: Optional[int] = UPTO_QUERY):
    """𝓡_l, Ω, q_0..q_N 을 계산합니다"""
    logger.info(f"construct 요청: alpha={document.alpha}, m={document.m}")
    return JSONResponse(await sobolev_handler.handle_construct(document, upto))


@router.post("/operator")
async def operator(document: SpecDocument, upto: Optional[int] = UPTO_QUERY):
    """P_S, M_h, 연산자 계수와 차수, 고윳값 표를 계산합니다"""
    logger.info(f"operator 요청: alpha={document.alpha}, m={document.m}")
    return JSONResponse(await sobolev_handler.handle_operator(document, upto))


@router.post("/awr")
async def awr(document: SpecDocument):
    """α-가중 랭크를 계산합니다"""
    logger.info(f"awr 요청: alpha={document.alpha}, m={document.m}")
    return JSONResponse(await sobolev_handler.handle_awr(document))


@router.post("/verify")
async def verify(document: SpecDocument, upto: Optional[int] = UPTO_QUERY):
    """직교성과 고유함수 관계를 포함한 전체 검증을 수행합니다

    검증이 실패해도 상태 코드는 200이며 status 필드가 결과를 알려줍니다.
    """
    logger.info(f"verify 요청: alpha={document.alpha}, m={document.m}")
    return JSONResponse(await sobolev_handler.handle_verify(document, upto))


@router.get("/reproduce-example")
async def reproduce_example():
    """기준 인스턴스를 재현하고 수록된 값과 비교합니다"""
    logger.info("reproduce-example 요청")
    return JSONResponse(await sobolev_handler.handle_reproduce_example())
