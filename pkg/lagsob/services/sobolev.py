"""
이산 라게르-소볼레프 서비스

𝓡_l 다항식, 카소라티 행렬식 Ω, 직교 다항식 q_n 을 구성하고
쌍선형 형식 ⟨p, q⟩ = ∫ p q μ_{α-m} dx + P(0) M Q(0)^T 로 직교성을 검증합니다.
"""

from math import factorial
from typing import Any, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from lagsob.exceptions import InconsistencyError, PreconditionError
from lagsob.models.data import (
    CasoratiData,
    Check,
    ConstructionResult,
    GeneralSobolevSpec,
    Report,
    RSystem,
    SobolevSpec,
)
from lagsob.models.operator import LAGUERRE_DOPERATOR, DOperatorSpec
from lagsob.models.poly import Poly, PolyMatrix, RationalMatrix, format_rational, to_rational
from lagsob.services.general import discrete_sobolev_form, general_w, jet_pairing
from lagsob.services.laguerre import LaguerreFamily, moment_integral, weight_moment
from lagsob.utils.exact import (
    casorati_sign,
    expand_first_row,
    nonneg_integer_root_free,
    poly_det,
    rising_poly,
    solve_rational,
)
from lagsob.utils.logging import get_logger
from lagsob.utils.parallel import map_ordered

logger = get_logger(__name__)


def build_R(spec: SobolevSpec) -> RSystem:
    """𝓡_l(x) = (α-m+l-1)!/(m-l)! (x+1)_{m-l}
                + (l-1)! (x+1)_α Σ_i (-1)^i M_{l-1,i}/(α+i)! (x-i+1)_i
    """
    alpha, m = spec.alpha, spec.m
    gamma_ratio = rising_poly(1, alpha)
    polys = []
    for l in range(1, m + 1):
        head = rising_poly(1, m - l) * QQ(factorial(alpha - m + l - 1), factorial(m - l))
        mass = Poly.zero()
        for i in range(m):
            entry = spec.M.entry(l - 1, i)
            if not entry:
                continue
            sign = -1 if i % 2 else 1
            mass = mass + rising_poly(1 - i, i) * (sign * entry / factorial(alpha + i))
        polys.append(head + gamma_ratio * mass * factorial(l - 1))

        if polys[-1].degree > alpha + m - 1:
            raise InconsistencyError(f"deg 𝓡_{l} = {polys[-1].degree} > α+m-1")

    logger.debug(f"𝓡 구성 완료: 차수 {[p.degree for p in polys]}")
    return RSystem(tuple(polys))


def scale_rsystem(R: RSystem, l: int, factor: Any) -> RSystem:
    """l번째 𝓡 에 상수를 곱한 새 묶음"""
    polys = list(R.polys)
    polys[l - 1] = polys[l - 1] * to_rational(factor)
    return RSystem(tuple(polys))


def casorati_matrix(R: RSystem, shifts: Sequence[Any]) -> PolyMatrix:
    """(R_i(x - s_j))_{i,j}"""
    return PolyMatrix.from_rows([[p.shift(-s) for s in shifts] for p in R.polys])


def casorati(R: RSystem, m: int) -> CasoratiData:
    """Ω(x) = σ_m det(𝓡_i(x-j))_{i,j=1..m} 와 음이 아닌 정수 근 검사

    σ_m 은 casorati_sign(m) 입니다.
    """
    if R.m != m:
        raise InconsistencyError(f"𝓡 개수 {R.m}가 m={m}과 다릅니다")
    omega = poly_det(casorati_matrix(R, range(1, m + 1))) * casorati_sign(m)
    if omega.is_zero:
        logger.warning("카소라티 행렬식이 영 다항식입니다")
        return CasoratiData(omega=omega, root_free=False, witness=0)

    scan = nonneg_integer_root_free(omega)
    logger.debug(f"Ω 차수 {omega.degree}, 근 상한 {scan.bound}, root_free={scan.free}")
    return CasoratiData(omega=omega, root_free=scan.free, witness=scan.witness)


def _value_rows(n: int, R: RSystem) -> list:
    return [[p(n - j) for j in range(R.m + 1)] for p in R.polys]


def build_qn(
    n: int, spec: SobolevSpec, R: RSystem, family: Optional[LaguerreFamily] = None
) -> Poly:
    """q_n = σ_m det [[L_n, L_{n-1}, ..., L_{n-m}], [𝓡_i(n-j)]_{j=0..m}]

    L_n 의 계수가 Ω(n) 이 되도록 Ω 와 같은 부호 σ_m 을 곱합니다.
    """
    if family is None:
        family = LaguerreFamily(spec.alpha)
    first_row = [family.poly(n - j) for j in range(spec.m + 1)]
    q = expand_first_row(first_row, _value_rows(n, R)) * casorati_sign(spec.m)
    if q.degree != n:
        raise InconsistencyError(f"deg q_{n} = {q.degree} 이 {n}이 아닙니다")
    return q


def build_qn_signed(
    n: int,
    R: RSystem,
    family: LaguerreFamily,
    dspec: DOperatorSpec = LAGUERRE_DOPERATOR,
) -> Poly:
    """첫 행이 (-1)^j ξ_{n,j} p_{n-j} 인 행렬식 (라게르 부호에서는 build_qn 과 같음)"""
    first_row = [
        family.poly(n - j) * ((-1 if j % 2 else 1) * dspec.xi(n, j))
        for j in range(R.m + 1)
    ]
    return expand_first_row(first_row, _value_rows(n, R)) * casorati_sign(R.m)


def betas_via_system(n: int, R: RSystem) -> Tuple[Any, ...]:
    """Σ_j β_{n,j} 𝓡_l(n-j) = -𝓡_l(n) 의 유일해 β_{n,1..m}

    Raises:
        InconsistencyError: Ω(n) = 0 이어서 해가 유일하지 않은 경우
    """
    system = RationalMatrix.from_rows(
        [[p(n - j) for j in range(1, R.m + 1)] for p in R.polys]
    )
    try:
        return solve_rational(system, [-p(n) for p in R.polys])
    except InconsistencyError as e:
        raise InconsistencyError(f"n={n}에서 β 연립방정식이 특이합니다 (Ω({n}) = 0)") from e


def qn_from_betas(
    n: int, betas: Sequence[Any], omega_n: Any, family: LaguerreFamily
) -> Poly:
    """Ω(n) (L_n + Σ_j β_{n,j} L_{n-j})"""
    total = family.poly(n)
    for j, beta in enumerate(betas, start=1):
        total = total + family.poly(n - j) * beta
    return total * omega_n


def beta_ratio(betas: Sequence[Any], omega: Poly, n: int) -> Any:
    """β_{n,m} / Ω(n+1)"""
    denominator = omega(n + 1)
    if not denominator:
        raise PreconditionError(f"Ω({n + 1}) = 0", witness=n + 1)
    return betas[-1] / denominator


def sobolev_form(p: Poly, q: Poly, spec: SobolevSpec) -> Any:
    """⟨p, q⟩ = ∫_0^∞ p q x^{α-m} e^{-x} dx + P(0) M Q(0)^T"""
    return moment_integral(p * q, spec.alpha - spec.m) + jet_pairing(p, q, spec.M)


def r_consistency_residuals(spec: SobolevSpec, R: RSystem, upto: int) -> Tuple[Any, ...]:
    """𝓡_l(n) - [w_{n,l-1} + (l-1)! Σ_i M_{l-1,i} (L_n^α)^(i)(0)] 잔차 (l, n 순서)"""
    gspec = laguerre_general_spec(spec, upto, R)
    residuals = []
    for l in range(1, spec.m + 1):
        for n in range(upto + 1):
            jet = gspec.basis[n].jet(spec.m)
            mass = sum((spec.M.entry(l - 1, i) * jet[i] for i in range(spec.m)), QQ.zero)
            expected = general_w(n, l - 1, gspec) + factorial(l - 1) * mass
            residuals.append(R.value(l, n) - expected)
    return tuple(residuals)


def laguerre_general_spec(
    spec: SobolevSpec, upto: int, R: Optional[RSystem] = None
) -> GeneralSobolevSpec:
    """라게르 데이터로 일반 형식을 구성 (λ=0, ν=μ_{α-m}, p_n=L_n^α, tail=𝓡_l(-k))"""
    if R is None:
        R = build_R(spec)
    family = LaguerreFamily(spec.alpha)
    moments = tuple(
        weight_moment(spec.alpha - spec.m, k) for k in range(2 * upto + 2 * spec.m + 2)
    )
    tail = tuple(tuple(p(-k) for k in range(1, spec.m + 1)) for p in R.polys)
    return GeneralSobolevSpec(
        lam=0,
        nu_moments=moments,
        basis=tuple(family.poly(n) for n in range(upto + 1)),
        M=spec.M,
        tail=tail,
    )


def construct(
    spec: SobolevSpec,
    upto: int,
    R: Optional[RSystem] = None,
    casorati_data: Optional[CasoratiData] = None,
    threads: int = 1,
) -> ConstructionResult:
    """q_0, ..., q_upto 와 β 계수 계산

    Raises:
        PreconditionError: Ω 가 음이 아닌 정수에서 0이 되는 경우
    """
    if R is None:
        R = build_R(spec)
    if casorati_data is None:
        casorati_data = casorati(R, spec.m)
    if not casorati_data.root_free:
        raise PreconditionError(
            f"Ω({casorati_data.witness}) = 0 이므로 직교 다항식이 존재하지 않습니다",
            witness=casorati_data.witness,
        )

    family = LaguerreFamily(spec.alpha)

    def _one(n: int) -> Tuple[Poly, Tuple[Any, ...]]:
        return build_qn(n, spec, R, family), betas_via_system(n, R)

    results = map_ordered(_one, range(upto + 1), threads)
    omega_values = tuple(casorati_data.omega(n) for n in range(upto + 1))
    logger.debug(f"q_0..q_{upto} 구성 완료")
    return ConstructionResult(
        qpolys=tuple(q for q, _ in results),
        betas=tuple(b for _, b in results),
        spec=spec,
        omega_values=omega_values,
    )


def _form_for(result: ConstructionResult):
    if isinstance(result.spec, GeneralSobolevSpec):
        return discrete_sobolev_form
    return sobolev_form


def verify_left_orthogonality(
    result: ConstructionResult, upto: Optional[int] = None, threads: int = 1
) -> Report:
    """n <= upto 에 대해 ⟨x^l, q_n⟩ = 0 (l < n), ⟨x^n, q_n⟩ != 0 검사

    q_n 은 형식의 두 번째 자리에 놓입니다. 대칭 M 에서는 ⟨q_n, x^l⟩ 과 같습니다.
    위반은 예외가 아니라 보고서 항목으로 기록합니다.
    """
    upto = result.upto if upto is None else min(upto, result.upto)
    form = _form_for(result)
    spec = result.spec

    def _check(n: int) -> Check:
        q = result.qpolys[n]
        violations = {}
        for l in range(n):
            value = form(Poly.monomial(l), q, spec)
            if value:
                violations[str(l)] = format_rational(value)
        diagonal = form(Poly.monomial(n), q, spec)
        passed = not violations and bool(diagonal)
        if not passed:
            logger.warning(f"직교성 위반: n={n}, 잔차={violations}, 대각={diagonal}")
        return Check(
            name=f"orthogonality[n={n}]",
            expected="<x^l, q_n> = 0 for l < n, <x^n, q_n> != 0",
            actual=format_rational(diagonal),
            residual=violations or None,
            passed=passed,
        )

    report = Report(command="orthogonality")
    report.extend(map_ordered(_check, range(upto + 1), threads))
    return report
