"""
Pytest 설정 및 공통 픽스처

테스트에서 사용할 공통 문제 인스턴스와 설정, 앱 픽스처들을 정의
"""

from typing import Any, Dict

import pytest
from fastapi import FastAPI
from fastapi.testclient import TestClient

from lagsob.models.config import Settings
from lagsob.models.data import CasoratiData, RSystem, SobolevSpec
from lagsob.models.golden import WORKED_EXAMPLE
from lagsob.services.laguerre import LaguerreFamily
from lagsob.services.sobolev import build_R, casorati
from tests.fixtures.sample_specs import SampleSpecs


@pytest.fixture(scope="session")
def worked_spec() -> SobolevSpec:
    """기준 인스턴스 (alpha=3, m=3, M=[[1,1,0],[1,1,0],[0,0,1]])"""
    return SobolevSpec.from_rows(WORKED_EXAMPLE.alpha, WORKED_EXAMPLE.M)


@pytest.fixture(scope="session")
def worked_R(worked_spec: SobolevSpec) -> RSystem:
    """기준 인스턴스의 𝓡_1, 𝓡_2, 𝓡_3"""
    return build_R(worked_spec)


@pytest.fixture(scope="session")
def worked_casorati(worked_R: RSystem) -> CasoratiData:
    """기준 인스턴스의 카소라티 행렬식"""
    return casorati(worked_R, worked_R.m)


@pytest.fixture(scope="session")
def worked_family(worked_spec: SobolevSpec) -> LaguerreFamily:
    """alpha=3 라게르 다항식 캐시"""
    return LaguerreFamily(worked_spec.alpha)


@pytest.fixture
def reduction_spec() -> SobolevSpec:
    """m=1, M=0 축소 인스턴스 (alpha=3)"""
    return SobolevSpec.from_rows(3, [[0]])


@pytest.fixture
def worked_document() -> Dict[str, Any]:
    """기준 인스턴스 JSON 문서"""
    return SampleSpecs.worked_document()


@pytest.fixture
def test_settings() -> Settings:
    """테스트용 설정 생성"""
    return Settings(
        debug_mode=True,
        log_level="DEBUG",
        default_upto=4,
        threads=2,
        server_port=31881,
    )


@pytest.fixture
def override_settings(test_settings: Settings, monkeypatch):
    """설정 오버라이드"""
    monkeypatch.setattr("lagsob.models.config.settings", test_settings)
    monkeypatch.setattr("lagsob.api.routes.settings", test_settings)
    return test_settings


@pytest.fixture
def app(override_settings: Settings, monkeypatch) -> FastAPI:
    """테스트용 FastAPI 앱"""
    from lagsob.api.handlers import SobolevRequestHandler
    from lagsob.api.routes import router
    from lagsob.exception_handlers import register_exception_handlers
    from lagsob.services.pipeline import PipelineService

    pipeline = PipelineService(override_settings)
    handler = SobolevRequestHandler(settings=override_settings, pipeline=pipeline)

    test_app = FastAPI(title="lagsob test")
    test_app.include_router(router)
    register_exception_handlers(test_app)

    # 라우터가 참조하는 전역 핸들러를 테스트 설정으로 교체
    monkeypatch.setattr("lagsob.api.routes.sobolev_handler", handler)
    return test_app


@pytest.fixture
def client(app: FastAPI) -> TestClient:
    """테스트 클라이언트 생성"""
    return TestClient(app)
