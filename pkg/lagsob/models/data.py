"""
데이터 모델 정의

문제 인스턴스, 구성 결과, 가중 랭크, 검증 보고서를 위한 데이터 클래스들
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from lagsob.exceptions import DimensionError, DomainError, UnsupportedRegimeError
from lagsob.models.poly import Poly, RationalMatrix, format_rational, to_rational


@dataclass(frozen=True)
class SobolevSpec:
    """이산 라게르-소볼레프 쌍선형 형식의 문제 인스턴스 (alpha, m, M)"""

    alpha: int
    m: int
    M: RationalMatrix

    def __post_init__(self):
        """초기화 후 검증"""
        if isinstance(self.alpha, bool) or not isinstance(self.alpha, int):
            raise DomainError(f"alpha는 정수여야 합니다: {self.alpha!r}")
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise DimensionError(f"m은 1 이상의 정수여야 합니다: {self.m!r}")
        if self.M.rows != self.m or self.M.cols != self.m:
            raise DimensionError(
                f"M은 {self.m}x{self.m} 이어야 합니다: {self.M.rows}x{self.M.cols}"
            )
        if self.alpha < self.m:
            raise UnsupportedRegimeError(self.alpha, self.m)

    @classmethod
    def from_rows(cls, alpha: int, rows: Sequence[Sequence[Any]]) -> "SobolevSpec":
        return cls(alpha=alpha, m=len(rows), M=RationalMatrix.from_rows(rows))

    def to_json(self) -> Dict[str, Any]:
        return {"alpha": self.alpha, "m": self.m, "M": self.M.to_json()}


@dataclass(frozen=True)
class RSystem:
    """𝓡_1, ..., 𝓡_m 다항식 묶음"""

    polys: Tuple[Poly, ...]

    @property
    def m(self) -> int:
        return len(self.polys)

    def value(self, l: int, point: Any) -> Any:
        """𝓡_l(point), l은 1부터 시작"""
        return self.polys[l - 1](point)

    def to_json(self) -> List[List[str]]:
        return [p.to_json() for p in self.polys]


@dataclass(frozen=True)
class CasoratiData:
    """카소라티 행렬식 Ω 와 음이 아닌 정수 근 검사 결과"""

    omega: Poly
    root_free: bool
    witness: Optional[int] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "omega": self.omega.to_json(),
            "rootFree": self.root_free,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class GeneralSobolevSpec:
    """일반 이산 소볼레프 형식 ∫ p q dν + P(λ) M Q(λ)^T 의 입력 데이터

    basis[n]은 (x-λ)^m ν 에 대해 직교하는 n차 다항식이고, tail이 주어지면
    R_l(-1), ..., R_l(-m) 값으로 음의 인덱스를 채웁니다.
    """

    lam: Any
    nu_moments: Tuple[Any, ...]
    basis: Tuple[Poly, ...]
    M: RationalMatrix
    tail: Optional[Tuple[Tuple[Any, ...], ...]] = None

    def __post_init__(self):
        """초기화 후 검증"""
        object.__setattr__(self, "lam", to_rational(self.lam))
        if not self.M.is_square or self.M.rows < 1:
            raise DimensionError(f"M은 1 이상 크기의 정방 행렬이어야 합니다: {self.M.rows}x{self.M.cols}")
        for n, p in enumerate(self.basis):
            if p.degree != n:
                raise DomainError(f"basis[{n}]의 차수가 {n}이 아닙니다: {p.degree}")
        if self.tail is not None:
            if len(self.tail) != self.m or any(len(row) != self.m for row in self.tail):
                raise DimensionError(f"tail은 {self.m}x{self.m} 값 표여야 합니다")

    @property
    def m(self) -> int:
        return self.M.rows

    def moment(self, k: int) -> Any:
        """∫ x^k dν"""
        if k >= len(self.nu_moments):
            raise DomainError(f"모멘트가 부족합니다: {k}차 모멘트 필요, {len(self.nu_moments)}개 제공")
        return to_rational(self.nu_moments[k])


@dataclass(frozen=True)
class ConstructionResult:
    """직교 다항식 q_0, ..., q_N 과 연립방정식 해 β_{n,j}"""

    qpolys: Tuple[Poly, ...]
    betas: Tuple[Optional[Tuple[Any, ...]], ...]
    spec: Union[SobolevSpec, GeneralSobolevSpec]
    omega_values: Tuple[Any, ...] = ()

    @property
    def upto(self) -> int:
        return len(self.qpolys) - 1

    def with_qpoly(self, n: int, replacement: Poly) -> "ConstructionResult":
        """q_n 하나만 바꾼 사본"""
        qpolys = list(self.qpolys)
        qpolys[n] = replacement
        return ConstructionResult(tuple(qpolys), self.betas, self.spec, self.omega_values)

    def to_json(self) -> Dict[str, Any]:
        return {
            "q": [p.to_json() for p in self.qpolys],
            "betas": [
                None if b is None else [format_rational(c) for c in b] for b in self.betas
            ],
        }


@dataclass(frozen=True)
class WeightedRank:
    """α-가중 랭크 awr(M) 와 그 구성 요소"""

    nj: Tuple[int, ...]
    mj: Tuple[int, ...]
    mtilde: RationalMatrix
    value: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "nj": list(self.nj),
            "mj": list(self.mj),
            "mtilde": self.mtilde.to_json(),
            "awr": self.value,
        }


@dataclass
class Check:
    """단일 검증 항목"""

    name: str
    expected: Any
    actual: Any
    residual: Any = None
    passed: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "residual": self.residual,
            "passed": self.passed,
        }


@dataclass
class Report:
    """명령 실행 결과 보고서"""

    command: str
    checks: List[Check] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    payload: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if all(c.passed for c in self.checks) else "fail"

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, checks: Sequence[Check]) -> None:
        self.checks.extend(checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
            "payload": self.payload,
        }

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> "Report":
        """to_dict 결과에서 보고서 복원 (status 는 항목에서 다시 계산)"""
        return cls(
            command=document["command"],
            checks=[Check(**c) for c in document.get("checks", [])],
            timings=dict(document.get("timings", {})),
            payload=dict(document.get("payload", {})),
        )
