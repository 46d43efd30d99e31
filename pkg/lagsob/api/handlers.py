"""계산 요청 처리 핸들러 모듈

HTTP 요청을 PipelineService 호출로 바꾸고, CPU 작업은 실행기 스레드에서 수행합니다.
"""

import asyncio
from functools import partial
from typing import Any, Dict, Optional

from lagsob.models.config import Settings
from lagsob.models.documents import SpecDocument
from lagsob.services.pipeline import PipelineService
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)


class SobolevRequestHandler:
    """계산 요청을 처리하는 핸들러 클래스"""

    def __init__(self, settings: Settings, pipeline: PipelineService):
        self.settings = settings
        self.pipeline = pipeline

    async def _run(self, func: Any, *args: Any, **kwargs: Any) -> Dict[str, Any]:
        loop = asyncio.get_running_loop()
        report = await loop.run_in_executor(None, partial(func, *args, **kwargs))
        logger.info(f"요청 처리 완료: {report.command}, 상태 {report.status}")
        return report.to_dict()

    async def handle_construct(self, document: SpecDocument, upto: Optional[int] = None) -> Dict[str, Any]:
        upto = self.pipeline.resolve_upto(document, upto)
        return await self._run(self.pipeline.construct, document, upto, threads=self.settings.threads)

    async def handle_operator(self, document: SpecDocument, upto: Optional[int] = None) -> Dict[str, Any]:
        upto = self.pipeline.resolve_upto(document, upto)
        return await self._run(self.pipeline.operator, document, document.s_poly(), upto)

    async def handle_awr(self, document: SpecDocument) -> Dict[str, Any]:
        return await self._run(self.pipeline.awr, document)

    async def handle_verify(self, document: SpecDocument, upto: Optional[int] = None) -> Dict[str, Any]:
        upto = self.pipeline.resolve_upto(document, upto)
        return await self._run(
            self.pipeline.verify, document, document.s_poly(), upto, threads=self.settings.threads
        )

    async def handle_reproduce_example(self) -> Dict[str, Any]:
        return await self._run(self.pipeline.reproduce_example, threads=self.settings.threads)
