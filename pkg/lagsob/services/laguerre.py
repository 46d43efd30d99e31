"""
라게르 다항식 서비스

정확한 라게르 다항식 L_n^α, 0에서의 도함수 값, 고전 가중치의 모멘트,
2차 미분 연산자 D_α 를 제공합니다.
"""

import threading
from math import factorial
from typing import Any, Dict, Tuple

from sympy.polys.domains import QQ

from lagsob.exceptions import DomainError
from lagsob.models.operator import DiffOp
from lagsob.models.poly import Poly, RationalLike, to_rational
from lagsob.utils.exact import binomial, pochhammer
from lagsob.utils.logging import get_logger

logger = get_logger(__name__)


def laguerre_poly(n: int, alpha: RationalLike) -> Poly:
    """L_n^α(x) = Σ_j (-x)^j / j! · C(n+α, n-j)  (n < 0 이면 0)

    일반화 이항계수는 (α+j+1)_{n-j} / (n-j)! 로 계산합니다.
    """
    if n < 0:
        return Poly.zero()
    a = to_rational(alpha)
    coeffs = []
    for j in range(n + 1):
        sign = -1 if j % 2 else 1
        coeffs.append(sign * pochhammer(a + j + 1, n - j) / (factorial(j) * factorial(n - j)))
    return Poly(coeffs)


def laguerre_jet0(n: int, alpha: RationalLike, count: int) -> Tuple[Any, ...]:
    """((L_n^α)^(i)(0))_{i<count} = ((-1)^i C(n+α, n-i))"""
    if count < 1:
        raise DomainError(f"count는 1 이상이어야 합니다: {count}")
    if n < 0:
        return tuple(QQ.zero for _ in range(count))
    a = to_rational(alpha)
    return tuple(
        (-1 if i % 2 else 1) * binomial(a + n, n - i) for i in range(count)
    )


def weight_moment(beta: int, k: int) -> Any:
    """∫_0^∞ x^k x^β e^{-x} dx = (β+k)!"""
    if beta < 0 or k < 0:
        raise DomainError(f"모멘트 인자는 0 이상이어야 합니다: beta={beta}, k={k}")
    return QQ(factorial(beta + k))


def moment_integral(p: Poly, beta: int) -> Any:
    """∫_0^∞ p(x) x^β e^{-x} dx (단항식 전개)"""
    return sum(
        (c * weight_moment(beta, k) for k, c in enumerate(p.coeffs) if c),
        QQ.zero,
    )


def laguerre_w(n: int, i: int, alpha: int, m: int) -> Any:
    """w_{n,i} = ∫ x^i L_n^α dμ_{α-m} 의 닫힌 형태

    w_{n,i} = (n+1)_{m-i-1} / (m-i-1)! · (α-m+i)!   (0 <= i <= m-1)
    """
    if not 0 <= i < m:
        raise DomainError(f"i는 0 이상 {m - 1} 이하여야 합니다: {i}")
    if alpha - m + i < 0:
        raise DomainError(f"alpha-m+i는 0 이상이어야 합니다: {alpha - m + i}")
    return pochhammer(n + 1, m - i - 1) / factorial(m - i - 1) * factorial(alpha - m + i)


def dalpha_op(alpha: RationalLike) -> DiffOp:
    """D_α = -x ∂² - (α+1-x) ∂"""
    a = to_rational(alpha)
    return DiffOp([Poly.zero(), Poly([-(a + 1), 1]), Poly([0, -1])])


class LaguerreFamily:
    """고정된 α에 대한 라게르 다항식 캐시

    읽기는 잠금 없이, 채우기는 배타적으로 수행합니다.
    """

    def __init__(self, alpha: RationalLike):
        """
        LaguerreFamily 초기화

        Args:
            alpha: 라게르 매개변수
        """
        self.alpha = to_rational(alpha)
        self._cache: Dict[int, Poly] = {}
        self._lock = threading.Lock()
        logger.debug(f"LaguerreFamily 초기화: alpha={self.alpha}")

    def poly(self, n: int) -> Poly:
        if n < 0:
            return Poly.zero()
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        with self._lock:
            if n not in self._cache:
                self._cache[n] = laguerre_poly(n, self.alpha)
            return self._cache[n]

    def jet0(self, n: int, count: int) -> Tuple[Any, ...]:
        return laguerre_jet0(n, self.alpha, count)

    @property
    def dalpha(self) -> DiffOp:
        return dalpha_op(self.alpha)

    def __len__(self) -> int:
        return len(self._cache)
