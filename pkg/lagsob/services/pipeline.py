"""
파이프라인 서비스

construct / operator / awr / verify / reproduce-example 명령을 실행하고
단계별 시간과 검증 항목을 담은 Report 를 만듭니다. CLI 와 HTTP 표면이 함께 사용합니다.
"""

import json
import time
from contextlib import contextmanager
from typing import Any, Iterator, List, Optional

from lagsob.exceptions import SpecValidationError
from lagsob.models.config import Settings, settings as default_settings
from lagsob.models.data import Check, ConstructionResult, Report, RSystem, SobolevSpec
from lagsob.models.documents import RunConfig, SpecDocument
from lagsob.models.golden import WORKED_EXAMPLE
from lagsob.models.poly import Poly, RationalMatrix, format_rational
from lagsob.services.awr import degree_matches_awr, operator_order, weighted_rank
from lagsob.services.laguerre import LaguerreFamily
from lagsob.services.operator import (
    assemble_DqS,
    eigenvalue_table,
    plumbing_order,
    verify_eigen,
)
from lagsob.services.sobolev import (
    beta_ratio,
    build_R,
    casorati,
    construct,
    qn_from_betas,
    r_consistency_residuals,
    verify_left_orthogonality,
)
from lagsob.utils.logging import get_logger, log_performance

logger = get_logger(__name__)


def _equal_check(name: str, expected: Any, actual: Any) -> Check:
    return Check(name=name, expected=expected, actual=actual, passed=expected == actual)


def _poly_check(name: str, expected: Poly, actual: Poly) -> Check:
    difference = actual - expected
    return Check(
        name=name,
        expected=expected.to_json(),
        actual=actual.to_json(),
        residual=None if difference.is_zero else difference.to_json(),
        passed=difference.is_zero,
    )


class PipelineService:
    """명령 실행 서비스 클래스"""

    def __init__(self, settings: Optional[Settings] = None):
        """
        PipelineService 초기화

        Args:
            settings: 애플리케이션 설정 (None이면 전역 설정 사용)
        """
        self.settings = settings or default_settings
        logger.debug(f"PipelineService 초기화: threads={self.settings.threads}")

    @contextmanager
    def _phase(self, report: Report, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            duration = time.perf_counter() - start
            report.timings[name] = duration
            log_performance(logger, f"{report.command}.{name}", duration)

    def run(self, config: RunConfig) -> Report:
        """설정에 따라 명령을 실행"""
        logger.info(f"명령 실행: {config.command}")
        if config.command == "reproduce-example":
            report = self.reproduce_example(threads=config.threads)
        else:
            if config.spec is None:
                raise SpecValidationError(f"{config.command} 명령에는 입력 문서가 필요합니다")
            document = config.spec
            upto = config.N
            if config.command == "construct":
                report = self.construct(document, upto, threads=config.threads)
            elif config.command == "operator":
                report = self.operator(document, config.s_poly(), upto)
            elif config.command == "awr":
                report = self.awr(document)
            else:
                report = self.verify(document, config.s_poly(), upto, threads=config.threads)

        logger.info(f"명령 완료: {config.command}, 상태 {report.status}")
        return report

    def resolve_upto(self, document: SpecDocument, override: Optional[int] = None) -> int:
        """--upto > 문서 N > 설정 default_upto 순서로 최대 차수 결정"""
        if override is not None:
            return override
        if document.N is not None:
            return document.N
        return self.settings.default_upto

    def construct(self, document: SpecDocument, upto: int, threads: int = 1) -> Report:
        """𝓡_l, Ω, q_0..q_N 계산"""
        report = Report(command="construct")
        spec = document.to_spec()

        with self._phase(report, "build_R"):
            R = build_R(spec)
        with self._phase(report, "casorati"):
            cas = casorati(R, spec.m)
        report.payload.update({"R": R.to_json(), **cas.to_json()})
        report.add(_equal_check("casorati_root_free", True, cas.root_free))

        if not cas.root_free:
            logger.warning(f"Ω({cas.witness}) = 0, 직교 다항식을 구성하지 않습니다")
            return report

        with self._phase(report, "construct"):
            result = construct(spec, upto, R=R, casorati_data=cas, threads=threads)
        report.payload.update(result.to_json())
        report.add(
            _equal_check(
                "degree_q_n",
                list(range(upto + 1)),
                [int(q.degree) for q in result.qpolys],
            )
        )
        return report

    def operator(self, document: SpecDocument, S: Poly, upto: int) -> Report:
        """P_S, M_h, D 계수, 차수, 고윳값 표 계산"""
        report = Report(command="operator")
        spec = document.to_spec()

        with self._phase(report, "assemble"):
            R = build_R(spec)
            bundle = assemble_DqS(spec, S, R=R)
        with self._phase(report, "awr"):
            rank = weighted_rank(spec.M, spec.alpha)

        report.payload.update(bundle.to_json())
        report.payload["eigenvalues"] = [format_rational(v) for v in eigenvalue_table(bundle, upto)]
        report.payload["plumbing"] = plumbing_order(bundle, R)
        report.extend(
            [
                _equal_check("order_equals_2(degS+degOmega+1)", bundle.expected_order, int(bundle.order)),
                _equal_check("order_equals_2(degS+awr+1)", operator_order(spec, S), int(bundle.order)),
                _equal_check("degOmega_equals_awr", rank.value, int(bundle.omega.degree)),
                _equal_check("operator_in_algebra_A", True, bundle.D.in_algebra_a),
            ]
        )
        return report

    def awr(self, document: SpecDocument) -> Report:
        """α-가중 랭크 계산"""
        report = Report(command="awr")
        spec = document.to_spec()
        with self._phase(report, "weighted_rank"):
            rank = weighted_rank(spec.M, spec.alpha)
        report.payload.update(rank.to_json())
        with self._phase(report, "degree"):
            comparison = degree_matches_awr(spec)
        report.payload["degOmega"] = comparison.deg_omega
        report.add(_equal_check("degOmega_equals_awr", comparison.awr, comparison.deg_omega))
        return report

    def verify(self, document: SpecDocument, S: Poly, upto: int, threads: int = 1) -> Report:
        """직교성, 고유함수 관계, 차수, 연산자 차수 전체 검증"""
        report = Report(command="verify")
        spec = document.to_spec()

        with self._phase(report, "casorati"):
            R = build_R(spec)
            cas = casorati(R, spec.m)
        report.add(_equal_check("casorati_root_free", True, cas.root_free))
        if not cas.root_free:
            report.payload["witness"] = cas.witness
            return report

        with self._phase(report, "construct"):
            result = construct(spec, upto, R=R, casorati_data=cas, threads=threads)
        with self._phase(report, "orthogonality"):
            report.extend(verify_left_orthogonality(result, upto, threads).checks)
        with self._phase(report, "operator"):
            bundle = assemble_DqS(spec, S, R=R, casorati_data=cas)
        with self._phase(report, "eigen"):
            report.extend(verify_eigen(bundle, result, upto, threads).checks)
        with self._phase(report, "consistency"):
            report.extend(self._consistency_checks(spec, R, result, cas.omega, upto))

        rank = weighted_rank(spec.M, spec.alpha)
        report.extend(
            [
                _equal_check("degOmega_equals_awr", rank.value, int(cas.omega.degree)),
                _equal_check("order_equals_2(degS+awr+1)", operator_order(spec, S), int(bundle.order)),
                _equal_check("operator_in_algebra_A", True, bundle.D.in_algebra_a),
            ]
        )
        report.payload.update(
            {
                "awr": rank.value,
                "order": int(bundle.order),
                "betaRatios": [
                    format_rational(beta_ratio(b, cas.omega, n))
                    for n, b in enumerate(result.betas)
                ],
            }
        )
        return report

    def _consistency_checks(
        self,
        spec: SobolevSpec,
        R: RSystem,
        result: ConstructionResult,
        omega: Poly,
        upto: int,
    ) -> List[Check]:
        family = LaguerreFamily(spec.alpha)
        checks = []
        for n in range(upto + 1):
            betas = result.betas[n]
            difference = result.qpolys[n] - qn_from_betas(n, betas, omega(n), family)
            checks.append(
                Check(
                    name=f"determinant_equals_system[n={n}]",
                    expected="q_n = Omega(n) (L_n + sum_j beta_nj L_n-j)",
                    actual="equal" if difference.is_zero else "different",
                    residual=None if difference.is_zero else difference.to_json(),
                    passed=difference.is_zero,
                )
            )
            checks.append(
                Check(
                    name=f"beta_nm_nonzero[n={n}]",
                    expected="nonzero",
                    actual=format_rational(betas[-1]),
                    passed=bool(betas[-1]),
                )
            )
        residuals = r_consistency_residuals(spec, R, upto)
        nonzero = [format_rational(r) for r in residuals if r]
        checks.append(
            Check(
                name="R_closed_form_equals_moment_form",
                expected="all residuals 0",
                actual=f"{len(residuals) - len(nonzero)}/{len(residuals)} zero",
                residual=nonzero or None,
                passed=not nonzero,
            )
        )
        return checks

    def reproduce_example(self, threads: int = 1) -> Report:
        """기준 인스턴스를 계산하여 수록된 다항식과 계수 단위로 비교"""
        golden = WORKED_EXAMPLE
        report = Report(command="reproduce-example")
        spec = SobolevSpec(alpha=golden.alpha, m=golden.m, M=RationalMatrix.from_rows(golden.M))

        with self._phase(report, "build_R"):
            R = build_R(spec)
        with self._phase(report, "casorati"):
            cas = casorati(R, spec.m)
        with self._phase(report, "operator"):
            bundle = assemble_DqS(spec, Poly.one(), R=R, casorati_data=cas)
        with self._phase(report, "awr"):
            rank = weighted_rank(spec.M, spec.alpha)
        with self._phase(report, "plumbing"):
            plumbing = plumbing_order(bundle, R)

        for l, (expected, actual) in enumerate(zip(golden.R, R.polys), start=1):
            report.add(_poly_check(f"R_{l}", expected, actual))
        report.add(_poly_check("Omega", golden.omega, cas.omega))
        report.add(_poly_check("P_S", golden.PS, bundle.PS))
        for h, (expected, actual) in enumerate(zip(golden.Mh, bundle.Mh), start=1):
            report.add(_poly_check(f"M_{h}", expected, actual))
        report.extend(
            [
                _equal_check("order", golden.order, int(bundle.order)),
                _equal_check("order_equals_2degPS", golden.order, 2 * int(bundle.PS.degree)),
                _equal_check("awr", golden.awr, rank.value),
                _equal_check("nj", list(golden.nj), list(rank.nj)),
                _equal_check("mj", list(golden.mj), list(rank.mj)),
                _equal_check(
                    "summand_orders",
                    list(golden.summand_orders),
                    plumbing["summands"][: len(golden.summand_orders)],
                ),
                Check(
                    name="plumbing_sum_order_at_most_order",
                    expected=f"<= {golden.order}",
                    actual=plumbing["sum"],
                    passed=plumbing["sum"] is None or plumbing["sum"] <= golden.order,
                ),
            ]
        )
        report.payload.update({"spec": spec.to_json(), "operator": bundle.to_json(), "plumbing": plumbing})
        return report


def render_report(report: Report, output_format: str = "json") -> str:
    """보고서를 JSON 또는 정렬된 텍스트로 렌더링"""
    document = report.to_dict()
    if output_format == "json":
        return json.dumps(document, indent=2, ensure_ascii=False)

    lines = [f"command: {document['command']}", f"status: {document['status']}"]
    width = max((len(c["name"]) for c in document["checks"]), default=0)
    for check in document["checks"]:
        mark = "ok" if check["passed"] else "FAIL"
        line = f"  {check['name'].ljust(width)} : {mark}"
        if not check["passed"]:
            line += f" (expected={check['expected']}, actual={check['actual']}, residual={check['residual']})"
        lines.append(line)
    for phase, duration in document["timings"].items():
        lines.append(f"  time {phase}: {duration:.3f}s")
    for key, value in document["payload"].items():
        lines.append(f"{key}: {json.dumps(value, ensure_ascii=False)}")
    return "\n".join(lines)


def report_from_json(text: str) -> Report:
    """렌더링된 JSON 보고서를 다시 읽기"""
    return Report.from_dict(json.loads(text))
