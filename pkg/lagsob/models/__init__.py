"""데이터 모델 및 설정 모듈"""

from .config import Settings, settings
from .data import SobolevSpec
from .operator import DiffOp
from .poly import Poly, PolyMatrix, RationalMatrix

__all__ = [
    "Settings",
    "settings",
    "SobolevSpec",
    "DiffOp",
    "Poly",
    "PolyMatrix",
    "RationalMatrix",
]
