"""
일반 이산 소볼레프 서비스

임의의 모멘트 데이터 ν, 질점 λ, 행렬 M 에 대해
⟨p, q⟩ = ∫ p q dν + P(λ) M Q(λ)^T 로 직교하는 다항식을 구성합니다.
p_n 은 (x-λ)^m ν 에 대해 직교하는 n차 다항식입니다.
"""

from math import factorial
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from lagsob.exceptions import DomainError, PreconditionError
from lagsob.models.data import ConstructionResult, GeneralSobolevSpec
from lagsob.models.poly import Poly, RationalMatrix
from lagsob.utils.exact import casorati_sign, expand_first_row, solve_rational
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)


def nu_integral(p: Poly, spec: GeneralSobolevSpec) -> Any:
    """∫ p dν (모멘트 전개)"""
    return sum(
        (c * spec.moment(k) for k, c in enumerate(p.coeffs) if c),
        QQ.zero,
    )


def jet_at(p: Poly, point: Any, count: int) -> Tuple[Any, ...]:
    """(p(λ), p'(λ), ..., p^(count-1)(λ))"""
    return p.shift(point).jet(count)


def jet_pairing(p: Poly, q: Poly, M: RationalMatrix, point: Any = 0) -> Any:
    """P(λ) M Q(λ)^T"""
    m = M.rows
    left = jet_at(p, point, m)
    right = jet_at(q, point, m)
    total = QQ.zero
    for i in range(m):
        if not left[i]:
            continue
        for j in range(m):
            total += left[i] * M.entry(i, j) * right[j]
    return total


def discrete_sobolev_form(p: Poly, q: Poly, spec: GeneralSobolevSpec) -> Any:
    """⟨p, q⟩ = ∫ p q dν + P(λ) M Q(λ)^T"""
    return nu_integral(p * q, spec) + jet_pairing(p, q, spec.M, spec.lam)


def general_w(n: int, i: int, spec: GeneralSobolevSpec) -> Any:
    """w_{n,i} = ∫ (x-λ)^i p_n dν (λ 주위 이항 전개)"""
    return nu_integral(Poly([-spec.lam, 1]) ** i * spec.basis[n], spec)


def general_r_value(l: int, n: int, spec: GeneralSobolevSpec) -> Optional[Any]:
    """R_l(n) = w_{n,l-1} + (l-1)! Σ_i M_{l-1,i} p_n^(i)(λ)

    n < 0 이면 tail 값을 쓰고, tail이 없으면 None 을 반환합니다.
    """
    if n < 0:
        if spec.tail is None:
            return None
        return spec.tail[l - 1][-n - 1]
    jet = jet_at(spec.basis[n], spec.lam, spec.m)
    mass = sum((spec.M.entry(l - 1, i) * jet[i] for i in range(spec.m)), QQ.zero)
    return general_w(n, l - 1, spec) + factorial(l - 1) * mass


def general_r_table(spec: GeneralSobolevSpec, upto: int) -> Dict[Tuple[int, int], Any]:
    """(l, n) -> R_l(n) 값 표, 0 <= n <= upto"""
    return {
        (l, n): general_r_value(l, n, spec)
        for l in range(1, spec.m + 1)
        for n in range(upto + 1)
    }


def _value(table: Dict[Tuple[int, int], Any], spec: GeneralSobolevSpec, l: int, n: int) -> Any:
    if n >= 0:
        return table[(l, n)]
    return general_r_value(l, n, spec)


def general_sobolev(spec: GeneralSobolevSpec, upto: int) -> ConstructionResult:
    """q_0, ..., q_upto 를 (m+1)x(m+1) 행렬식으로 구성

    n < m 이고 tail이 없으면 R_1..R_n 행만 쓰는 (n+1)x(n+1) 축소 행렬식을 씁니다.
    행렬식 크기 k 에 대해 casorati_sign(k) 를 곱합니다.

    Raises:
        DomainError: 기저 다항식이나 모멘트가 부족한 경우
        PreconditionError: 어떤 n에서 카소라티 값이 0인 경우
    """
    if upto < 0:
        raise DomainError(f"upto는 0 이상이어야 합니다: {upto}")
    if len(spec.basis) < upto + 1:
        raise DomainError(f"기저 다항식이 부족합니다: {upto + 1}개 필요, {len(spec.basis)}개 제공")

    m = spec.m
    logger.debug(f"일반 소볼레프 구성 시작: m={m}, upto={upto}, tail={'있음' if spec.tail else '없음'}")
    table = general_r_table(spec, upto)

    qpolys: List[Poly] = []
    betas: List[Optional[Tuple[Any, ...]]] = []
    leading: List[Any] = []
    for n in range(upto + 1):
        size = m if (n >= m or spec.tail is not None) else n
        first_row = [spec.basis[n - j] if n - j >= 0 else Poly.zero() for j in range(size + 1)]
        rows = [
            [_value(table, spec, l, n - j) for j in range(size + 1)]
            for l in range(1, size + 1)
        ]
        system = RationalMatrix.from_rows([row[1:] for row in rows], cols=size)
        sign = casorati_sign(size)
        omega_n = system.det() * sign
        if not omega_n:
            raise PreconditionError(
                f"n={n}에서 카소라티 값이 0이므로 직교 다항식이 존재하지 않습니다", witness=n
            )

        qpolys.append(expand_first_row(first_row, rows) * sign)
        betas.append(solve_rational(system, [-row[0] for row in rows]))
        leading.append(omega_n)

    return ConstructionResult(tuple(qpolys), tuple(betas), spec, tuple(leading))
