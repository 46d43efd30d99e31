"""
정확 산술 연산

포흐하머 기호, 보간, 부정합, 다항식 행렬식, 근 검사, 유리 벡터 공간 검사 등
다른 모든 모듈이 사용하는 연산을 제공합니다.
"""

from dataclasses import dataclass
from math import factorial, gcd, lcm
from typing import Any, List, Optional, Sequence, Tuple

from sympy.ntheory import divisors
from sympy.polys.densearith import dup_exquo
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lagsob.exceptions import DimensionError, DomainError, InconsistencyError
from lagsob.models.poly import Poly, PolyMatrix, RationalLike, RationalMatrix, to_rational
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)

# 이 크기 이하의 행렬식은 Bareiss 소거로 계산
BAREISS_MAX_SIZE = 3


def pochhammer(a: RationalLike, k: int) -> Any:
    """상승 포흐하머 기호 (a)_k = a(a+1)...(a+k-1), (a)_0 = 1"""
    if k < 0:
        raise DomainError(f"포흐하머 기호의 k는 0 이상이어야 합니다: {k}")
    base = to_rational(a)
    result = QQ.one
    for i in range(k):
        result *= base + i
    return result


def rising_poly(c: RationalLike, k: int) -> Poly:
    """x에 대한 다항식 (x+c)_k"""
    if k < 0:
        raise DomainError(f"포흐하머 기호의 k는 0 이상이어야 합니다: {k}")
    shift = to_rational(c)
    result = Poly.one()
    for i in range(k):
        result = result * Poly([shift + i, 1])
    return result


def binomial(top: RationalLike, k: int) -> Any:
    """일반화 이항계수 C(top, k) = (top-k+1)_k / k! (k < 0이면 0)"""
    if k < 0:
        return QQ.zero
    return pochhammer(to_rational(top) - k + 1, k) / factorial(k)


def interpolate(points: Sequence[Tuple[RationalLike, RationalLike]]) -> Poly:
    """뉴턴 분할차분으로 주어진 점들을 지나는 최소 차수 다항식 계산"""
    xs = [to_rational(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("보간점의 x 좌표가 중복되었습니다")
    table = [to_rational(y) for _, y in points]
    n = len(xs)

    # table[i]가 f[x_0..x_i]가 되도록 제자리 갱신
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])

    result = Poly.zero()
    for i in range(n - 1, -1, -1):
        result = result * Poly([-xs[i], 1]) + table[i]
    return result


def indefinite_sum(f: Poly) -> Poly:
    """P(x) - P(x-1) = f(x), P(0) = 0 을 만족하는 다항식 P"""
    if f.is_zero:
        return Poly.zero()

    points = [(QQ(-1), QQ.zero)]
    partial = QQ.zero
    for k in range(f.degree + 1):
        partial += f(k)
        points.append((QQ(k), partial))

    result = interpolate(points)
    return result - result(0)


def _bareiss_det(matrix: PolyMatrix) -> Poly:
    """분수 없는 Bareiss 소거 (행 교환 포함)"""
    n = matrix.rows
    rows: List[List[Any]] = [[e.dup for e in matrix.row(i)] for i in range(n)]
    sign = 1
    previous: List[Any] = [QQ.one]

    for k in range(n - 1):
        if not rows[k][k]:
            pivot = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if pivot is None:
                return Poly.zero()
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = (Poly._from_dup(rows[k][k]) * Poly._from_dup(rows[i][j])) - (
                    Poly._from_dup(rows[i][k]) * Poly._from_dup(rows[k][j])
                )
                rows[i][j] = dup_exquo(numerator.dup, previous, QQ)
        previous = rows[k][k]

    result = Poly._from_dup(rows[n - 1][n - 1])
    return result if sign > 0 else -result


def _degree_bound(matrix: PolyMatrix) -> Optional[int]:
    """행렬식 차수 상한 (행 합과 열 합 중 작은 값, 영 행/열이 있으면 None)"""
    n = matrix.rows
    row_degrees = []
    col_degrees = []
    for i in range(n):
        degrees = [matrix.entry(i, j).degree for j in range(n) if not matrix.entry(i, j).is_zero]
        if not degrees:
            return None
        row_degrees.append(max(degrees))
    for j in range(n):
        degrees = [matrix.entry(i, j).degree for i in range(n) if not matrix.entry(i, j).is_zero]
        if not degrees:
            return None
        col_degrees.append(max(degrees))
    return min(sum(row_degrees), sum(col_degrees))


def poly_det(matrix: PolyMatrix) -> Poly:
    """다항식 행렬의 정확한 행렬식

    작은 행렬은 Bareiss 소거로, 큰 행렬은 정수점 D+1개에서의 유리수
    행렬식을 보간하여 계산합니다 (D는 차수 상한).

    Raises:
        DimensionError: 정방 행렬이 아닌 경우
    """
    if not matrix.is_square:
        raise DimensionError(f"정방 행렬이 아닙니다: {matrix.rows}x{matrix.cols}")

    n = matrix.rows
    if n == 0:
        return Poly.one()
    if n == 1:
        return matrix.entry(0, 0)
    if n <= BAREISS_MAX_SIZE:
        return _bareiss_det(matrix)

    bound = _degree_bound(matrix)
    if bound is None:
        return Poly.zero()

    logger.debug(f"평가-보간 행렬식: 크기 {n}, 차수 상한 {bound}")
    points = [(QQ(t), matrix.evaluate(t).det()) for t in range(bound + 1)]
    return interpolate(points)


def casorati_sign(size: int) -> int:
    """카소라티 행렬식의 열을 j = size, ..., 1 순서로 놓을 때의 부호 (-1)^{size(size-1)/2}

    Ω, q_n, M_h 는 모두 이 부호를 곱한 값으로 보고합니다. 기준 인스턴스 (α=3, m=3) 의
    Ω(0) = -2 와 P_S, M_h 계수가 이 규약을 따릅니다.
    """
    if size < 0:
        raise DomainError(f"크기는 0 이상이어야 합니다: {size}")
    return -1 if (size * (size - 1) // 2) % 2 else 1


def cauchy_root_bound(p: Poly) -> int:
    """코시 근 상한 1 + max|a_i / a_d| 의 올림"""
    if p.is_zero:
        raise DomainError("영 다항식에는 근 상한이 없습니다")
    lead = p.leading_coeff
    ratios = [abs(c / lead) for c in p.coeffs[:-1]]
    bound = QQ.one + max(ratios, default=QQ.zero)
    numerator, denominator = int(bound.numerator), int(bound.denominator)
    return -(-numerator // denominator)


def integer_coefficients(p: Poly) -> List[int]:
    """분모를 없앤 정수 계수 (오름차순, 원시 다항식)"""
    if p.is_zero:
        raise DomainError("영 다항식의 정수 계수는 정의하지 않습니다")
    common = lcm(*(int(c.denominator) for c in p.coeffs))
    scaled = [int(c.numerator) * (common // int(c.denominator)) for c in p.coeffs]
    content = gcd(*scaled)
    return [c // content for c in scaled]


@dataclass(frozen=True)
class RootScan:
    """음이 아닌 정수 근 검사 결과"""

    free: bool
    witness: Optional[int]
    bound: int
    candidates: int = 0


def nonneg_integer_root_free(p: Poly) -> RootScan:
    """p(n) != 0 이 모든 정수 n >= 0 에 대해 성립하는지 정확히 판정

    정수 계수로 바꾸면 0이 아닌 정수 근은 상수항의 약수이므로, 코시 근 상한
    이하의 양의 약수에서만 값을 계산합니다. 상수항이 0이면 n=0 이 근입니다.

    Raises:
        DomainError: 영 다항식인 경우
    """
    if p.is_zero:
        raise DomainError("영 다항식은 모든 점에서 0입니다")

    bound = cauchy_root_bound(p)
    constant = integer_coefficients(p)[0]
    if constant == 0:
        return RootScan(free=False, witness=0, bound=bound, candidates=1)

    candidates = [d for d in divisors(abs(constant)) if d <= bound]
    for n in candidates:
        if not p(n):
            return RootScan(free=False, witness=n, bound=bound, candidates=len(candidates))
    return RootScan(free=True, witness=None, bound=bound, candidates=len(candidates))


def rational_rank(vectors: Sequence[Sequence[RationalLike]]) -> int:
    """유리 벡터들이 생성하는 공간의 차원"""
    if not vectors:
        return 0
    width = len(vectors[0])
    if any(len(v) != width for v in vectors):
        raise DimensionError("벡터 길이가 서로 다릅니다")
    if width == 0:
        return 0
    rows = [[to_rational(c) for c in v] for v in vectors]
    return DomainMatrix(rows, (len(rows), width), QQ).rank()


def span_member(v: Sequence[RationalLike], basis: Sequence[Sequence[RationalLike]]) -> bool:
    """v 가 basis 의 유리 생성 공간에 속하는지 판정 (빈 목록의 생성 공간은 {0})

    Raises:
        DimensionError: 벡터 길이가 서로 다른 경우
    """
    if any(len(b) != len(v) for b in basis):
        raise DimensionError(f"벡터 길이가 서로 다릅니다: {len(v)}")
    if not any(to_rational(c) for c in v):
        return True
    if not basis:
        return False
    return rational_rank(list(basis)) == rational_rank(list(basis) + [v])


def solve_rational(matrix: RationalMatrix, rhs: Sequence[RationalLike]) -> Tuple[Any, ...]:
    """정방 유리 연립방정식 A x = b 의 유일해

    Raises:
        DimensionError: 크기가 맞지 않는 경우
        InconsistencyError: 행렬이 특이한 경우
    """
    if not matrix.is_square or matrix.rows != len(rhs):
        raise DimensionError(
            f"연립방정식 크기 불일치: {matrix.rows}x{matrix.cols}, 우변 {len(rhs)}"
        )
    if matrix.rows == 0:
        return ()
    if not matrix.det():
        raise InconsistencyError("특이 행렬로 연립방정식의 해가 유일하지 않습니다")

    column = DomainMatrix([[to_rational(c)] for c in rhs], (len(rhs), 1), QQ)
    solution = matrix.to_domain_matrix().lu_solve(column)
    return tuple(row[0] for row in solution.to_list())


def expand_first_row(first_row: Sequence[Poly], value_rows: Sequence[Sequence[RationalLike]]) -> Poly:
    """첫 행이 다항식이고 나머지 행이 유리수인 (k+1)x(k+1) 행렬식

    첫 행에 대한 여인수 전개로 계산합니다.

    Raises:
        DimensionError: 행렬이 정방이 아닌 경우
    """
    size = len(first_row)
    if len(value_rows) != size - 1 or any(len(row) != size for row in value_rows):
        raise DimensionError(f"첫 행 전개 크기 불일치: 첫 행 {size}, 값 행 {len(value_rows)}")

    result = Poly.zero()
    for j, entry in enumerate(first_row):
        if entry.is_zero:
            continue
        minor = RationalMatrix.from_rows(
            [[row[k] for k in range(size) if k != j] for row in value_rows],
            cols=size - 1,
        )
        cofactor = minor.det()
        if not cofactor:
            continue
        result = result + entry * (cofactor if j % 2 == 0 else -cofactor)
    return result
