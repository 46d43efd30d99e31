"""계산 및 검증 서비스 레이어 모듈"""

from .pipeline import PipelineService

__all__ = ["PipelineService"]
