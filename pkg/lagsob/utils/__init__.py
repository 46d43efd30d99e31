"""유틸리티 함수 및 헬퍼 모듈"""

from .logging import get_logger, setup_logging

__all__ = [
    "get_logger",
    "setup_logging",
]
