"""
α-가중 랭크 서비스

행렬 M 의 α-가중 랭크 awr(M) 를 열/행 생성 공간 검사로 계산하고
카소라티 행렬식의 차수와 비교합니다.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from lagsob.exceptions import DimensionError, UnsupportedRegimeError
from lagsob.models.data import SobolevSpec, WeightedRank
from lagsob.models.poly import Poly, RationalMatrix, to_rational
from lagsob.services.sobolev import build_R, casorati
from lagsob.utils.exact import span_member
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)


def weighted_rank(M: RationalMatrix, alpha: int) -> WeightedRank:
    """awr(M) = Σ n_j + Σ m_j - m(m-1)/2

    n_j = α+m-j  (c_{m-j+1} ∉ <c_{m-j+2}, ..., c_m>), 아니면 0
    m_j = m-j    (f_j ∈ <f_{j+1}, ..., f_m>), 아니면 0
    c_j 는 M 의 열, f_j 는 M̃ 의 행이고 빈 목록의 생성 공간은 {0} 입니다.

    Raises:
        DimensionError: M 이 정방 행렬이 아닌 경우
        UnsupportedRegimeError: alpha < m 인 경우
    """
    if not M.is_square:
        raise DimensionError(f"정방 행렬이 아닙니다: {M.rows}x{M.cols}")
    m = M.rows
    if alpha < m:
        raise UnsupportedRegimeError(alpha, m)

    columns = [M.column(j) for j in range(m)]
    independent = [not span_member(columns[i], columns[i + 1:]) for i in range(m)]

    # n_j 는 c_{m-j+1} (0 기반 인덱스 m-j) 의 독립성으로 결정
    nj = tuple(alpha + m - j if independent[m - j] else 0 for j in range(1, m + 1))

    mtilde = M.select_columns([i for i in range(m) if independent[i]])
    rows = [mtilde.row(i) for i in range(m)]
    mj = tuple(
        m - j if span_member(rows[j - 1], rows[j:]) else 0 for j in range(1, m)
    )

    value = sum(nj) + sum(mj) - m * (m - 1) // 2
    logger.debug(f"가중 랭크: nj={nj}, mj={mj}, awr={value}")
    return WeightedRank(nj=nj, mj=mj, mtilde=mtilde, value=value)


@dataclass(frozen=True)
class DegreeComparison:
    """deg Ω 와 awr(M) 비교 결과"""

    deg_omega: Optional[int]
    awr: int

    @property
    def match(self) -> bool:
        return self.deg_omega == self.awr

    def to_json(self) -> Dict[str, Any]:
        return {"degOmega": self.deg_omega, "awr": self.awr, "match": self.match}


def degree_matches_awr(spec: SobolevSpec) -> DegreeComparison:
    """Ω 를 직접 계산하여 deg Ω = awr(M) 인지 비교"""
    omega = casorati(build_R(spec), spec.m).omega
    degree = None if omega.is_zero else int(omega.degree)
    return DegreeComparison(deg_omega=degree, awr=weighted_rank(spec.M, spec.alpha).value)


def operator_order(spec: SobolevSpec, S: Optional[Poly] = None) -> int:
    """Ω 를 만들지 않고 구한 연산자 차수 2(deg S + awr(M) + 1)"""
    S = Poly.one() if S is None else S
    return 2 * (int(S.degree) + weighted_rank(spec.M, spec.alpha).value + 1)


def grunbaum_haine_horozov_matrix(a: Sequence[Any]) -> RationalMatrix:
    """반삼각 행렬 M_{i,j} = a_{i+j} (i+j <= m-1), 그 외 0"""
    m = len(a)
    return RationalMatrix.from_rows(
        [[a[i + j] if i + j <= m - 1 else 0 for j in range(m)] for i in range(m)]
    )


def diagonal_omega_degree(diagonal: Sequence[Any], alpha: int) -> int:
    """대각 M 에 대한 deg Ω = sα + (m-s)(m+1) - 2 Σ_{j: M_{j-1}=0} j"""
    values = [to_rational(d) for d in diagonal]
    m = len(values)
    zeros: List[int] = [j for j in range(1, m + 1) if not values[j - 1]]
    s = m - len(zeros)
    return s * alpha + (m - s) * (m + 1) - 2 * sum(zeros)
