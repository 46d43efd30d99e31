"""
lagsob

Exact construction and verification of discrete Laguerre-Sobolev orthogonal
polynomials, the weighted rank of their defining matrix, and the higher-order
differential operators they are eigenfunctions of.
"""

__version__ = "1.0.0"
__author__ = "lagsob Team"

# 주요 컴포넌트 임포트
from .models import Poly, Settings, SobolevSpec, settings
from .services import PipelineService
from .utils import get_logger, setup_logging

__all__ = [
    "Poly",
    "Settings",
    "settings",
    "SobolevSpec",
    "PipelineService",
    "get_logger",
    "setup_logging",
]
