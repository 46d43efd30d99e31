"""
병렬 실행 유틸리티

n별 검증처럼 서로 독립적인 작업을 스레드 풀에서 실행하고 입력 순서대로 결과를 모읍니다.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from lagsob.utils.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """func를 items에 적용한 결과를 입력 순서대로 반환"""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    workers = min(threads, len(items))
    logger.debug(f"스레드 풀 실행: 작업 {len(items)}개, 워커 {workers}개")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
