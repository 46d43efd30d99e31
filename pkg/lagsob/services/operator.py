"""
미분 연산자 서비스

연산자 합성, 연산자에서의 다항식 값, D-연산자 상, M_h 다항식을 계산하고
q_n 을 고유함수로 갖는 고차 미분 연산자
D = P_S(D_α) + Σ_h M_h(D_α) ∂ 𝓡_h(D_α) 를 조립하고 검증합니다.
"""

from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from lagsob.exceptions import DomainError, InconsistencyError, PreconditionError
from lagsob.models.data import CasoratiData, Check, ConstructionResult, Report, RSystem, SobolevSpec
from lagsob.models.operator import LAGUERRE_DOPERATOR, DiffOp, DOperatorSpec, OperatorBundle
from lagsob.models.poly import Poly, PolyMatrix, format_rational
from lagsob.services.laguerre import LaguerreFamily, dalpha_op
from lagsob.services.sobolev import build_R, casorati
from lagsob.utils.exact import casorati_sign, indefinite_sum, poly_det
from lagsob.utils.logging import get_logger
from lagsob.utils.parallel import map_ordered

logger = get_logger(__name__)


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """a ∘ b"""
    return a.compose(b)


def poly_of_op(p: Poly, op: DiffOp) -> DiffOp:
    """P(A) 를 왼쪽 합성 호너 방식으로 계산"""
    if p.is_zero:
        return DiffOp()
    identity = DiffOp.identity()
    result = identity * p.leading_coeff
    for power in range(p.degree - 1, -1, -1):
        result = result.compose(op) + identity * p.coeff(power)
    return result


def doperator_image(
    n: int, alpha: Any, dspec: DOperatorSpec = LAGUERRE_DOPERATOR
) -> Poly:
    """𝒟(p_n) = Σ_{j=1}^n (-1)^{j+1} ε_n ... ε_{n-j+1} p_{n-j}

    ε_n = -1 인 라게르 경우에는 결과가 (L_n^α)' 와 같은지 확인합니다.

    Raises:
        InconsistencyError: 라게르 경우 d/dx 와 일치하지 않는 경우
    """
    if n < 0:
        raise DomainError(f"n은 0 이상이어야 합니다: {n}")
    family = LaguerreFamily(alpha)
    image = Poly.zero()
    for j in range(1, n + 1):
        sign = 1 if j % 2 else -1
        image = image + family.poly(n - j) * (sign * dspec.xi(n, j))

    if dspec.is_laguerre and image != family.poly(n).derivative():
        raise InconsistencyError(f"𝒟(L_{n}) 가 도함수와 일치하지 않습니다")
    return image


def _minor_matrix(polys: Sequence[Poly], shifts: Sequence[int]) -> PolyMatrix:
    return PolyMatrix.from_rows([[p.shift(-r) for r in shifts] for p in polys])


def build_Mh(h: int, S: Poly, R: RSystem) -> Poly:
    """M_h(x) = σ_m Σ_{j=1}^m (-1)^{h+j} S(x+j) det(𝓡_l(x-r))

    l 은 {1..m}\\{h}, r 은 {-j+1..m-j}\\{0} 을 오름차순으로 지납니다.
    σ_m = casorati_sign(m) 은 Ω 와 같은 부호이므로 D_{q,S} 전체가 같은 부호를 갖습니다.

    Raises:
        DomainError: h 가 1..m 범위를 벗어난 경우
    """
    m = R.m
    if not 1 <= h <= m:
        raise DomainError(f"h는 1 이상 {m} 이하여야 합니다: {h}")

    rows = [p for l, p in enumerate(R.polys, start=1) if l != h]
    total = Poly.zero()
    for j in range(1, m + 1):
        shifts = [r for r in range(-j + 1, m - j + 1) if r != 0]
        minor = poly_det(_minor_matrix(rows, shifts))
        term = S.shift(j) * minor
        total = total + (term if (h + j) % 2 == 0 else -term)
    return total * casorati_sign(m)


def build_operator(PS: Poly, Mh: Sequence[Poly], R: RSystem, alpha: Any) -> DiffOp:
    """P_S(D_α) + Σ_h M_h(D_α) ∘ ∂ ∘ 𝓡_h(D_α)"""
    dalpha = dalpha_op(alpha)
    derivative = DiffOp.derivative_op()
    operator = poly_of_op(PS, dalpha)
    for mh, rh in zip(Mh, R.polys):
        operator = operator + poly_of_op(mh, dalpha).compose(derivative).compose(
            poly_of_op(rh, dalpha)
        )
    return operator


def assemble_DqS(
    spec: SobolevSpec,
    S: Optional[Poly] = None,
    R: Optional[RSystem] = None,
    casorati_data: Optional[CasoratiData] = None,
) -> OperatorBundle:
    """q_n 을 고유함수로 갖는 연산자 D_{q,S} 와 그 구성 요소를 조립

    Raises:
        DomainError: S 가 영 다항식인 경우
        PreconditionError: Ω 가 음이 아닌 정수에서 0이 되는 경우
    """
    S = Poly.one() if S is None else S
    if S.is_zero:
        raise DomainError("S는 영 다항식이 아니어야 합니다")
    if R is None:
        R = build_R(spec)
    if casorati_data is None:
        casorati_data = casorati(R, spec.m)
    if not casorati_data.root_free:
        raise PreconditionError(
            f"Ω({casorati_data.witness}) = 0 이므로 연산자를 조립할 수 없습니다",
            witness=casorati_data.witness,
        )

    omega = casorati_data.omega
    PS = indefinite_sum(S * omega)
    Mh = tuple(build_Mh(h, S, R) for h in range(1, spec.m + 1))
    D = build_operator(PS, Mh, R, spec.alpha)

    bundle = OperatorBundle(alpha=spec.alpha, S=S, omega=omega, PS=PS, Mh=Mh, D=D)
    if D.order != bundle.expected_order:
        logger.warning(f"연산자 차수 {D.order} 가 기대값 {bundle.expected_order} 와 다릅니다")
    if not D.in_algebra_a:
        logger.warning("조립된 연산자가 대수 𝒜 에 속하지 않습니다")
    logger.debug(f"연산자 조립 완료: 차수 {D.order}")
    return bundle


def plumbing_order(bundle: OperatorBundle, R: RSystem) -> Dict[str, Any]:
    """P_S(D_α) 와 Σ_h M_h(D_α) ∂ 𝓡_h(D_α) 및 각 항의 차수"""
    dalpha = dalpha_op(bundle.alpha)
    derivative = DiffOp.derivative_op()
    summands = [
        poly_of_op(mh, dalpha).compose(derivative).compose(poly_of_op(rh, dalpha))
        for mh, rh in zip(bundle.Mh, R.polys)
    ]
    total = DiffOp()
    for summand in summands:
        total = total + summand

    def _order(op: DiffOp) -> Optional[int]:
        return None if op.is_zero else int(op.order)

    return {
        "principal": _order(poly_of_op(bundle.PS, dalpha)),
        "summands": [_order(s) for s in summands],
        "sum": _order(total),
    }


def eigenvalue_table(bundle: OperatorBundle, upto: int) -> List[Any]:
    """λ_n = P_S(n), n = 0..upto"""
    return [bundle.eigenvalue(n) for n in range(upto + 1)]


def verify_eigen(
    bundle: OperatorBundle,
    result: ConstructionResult,
    upto: Optional[int] = None,
    threads: int = 1,
) -> Report:
    """n <= upto 에 대해 D(q_n) = P_S(n) q_n 을 정확히 검사"""
    upto = result.upto if upto is None else min(upto, result.upto)

    def _check(n: int) -> Check:
        q = result.qpolys[n]
        eigenvalue = bundle.eigenvalue(n)
        residual = bundle.D.apply(q) - q * eigenvalue
        passed = residual.is_zero
        if not passed:
            logger.warning(f"고유함수 관계 위반: n={n}, 잔차 차수 {residual.degree}")
        return Check(
            name=f"eigen[n={n}]",
            expected=format_rational(eigenvalue),
            actual="D(q_n) = lambda_n q_n" if passed else "D(q_n) != lambda_n q_n",
            residual=None if passed else residual.to_json(),
            passed=passed,
        )

    report = Report(command="eigen")
    report.extend(map_ordered(_check, range(upto + 1), threads))
    return report


def degree_law_fl1(polys: Sequence[Poly], shifts: Sequence[Any]) -> Tuple[Any, int]:
    """(deg det(R_i(x - l_j)), Σ deg R_i - C(m,2))"""
    if len(polys) != len(shifts):
        raise DomainError("다항식 수와 이동량 수가 다릅니다")
    m = len(polys)
    matrix = PolyMatrix.from_rows([[p.shift(-s) for s in shifts] for p in polys])
    return poly_det(matrix).degree, sum(int(p.degree) for p in polys) - comb(m, 2)


def degree_law_fl2(polys: Sequence[Poly]) -> Tuple[Any, int]:
    """(deg Σ_{j=1}^{m+1} (-1)^{j+1} det U_j, Σ deg R_i - C(m+1,2))

    U_j 의 l 행은 (R_l(x-r)), r = 1-j..m+1-j, r != 0 입니다.
    """
    m = len(polys)
    total = Poly.zero()
    for j in range(1, m + 2):
        shifts = [r for r in range(1 - j, m + 2 - j) if r != 0]
        det = poly_det(_minor_matrix(polys, shifts))
        total = total + (det if j % 2 else -det)
    return total.degree, sum(int(p.degree) for p in polys) - comb(m + 1, 2)
