"""API 라우터 및 엔드포인트 모듈"""

from .routes import router

__all__ = ["router"]
