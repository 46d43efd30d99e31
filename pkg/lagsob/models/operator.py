"""
미분 연산자 모델

다항식 계수 미분 연산자 Σ f_j ∂^j, D-연산자 부호 규약, 조립된 연산자 묶음을 정의합니다.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from lagsob.models.poly import ZERO_DEGREE, Poly, RationalLike, is_scalar, to_rational


def _trim(coeffs: Sequence[Poly]) -> Tuple[Poly, ...]:
    items = list(coeffs)
    while items and items[-1].is_zero:
        items.pop()
    return tuple(items)


class DiffOp:
    """다항식 계수 미분 연산자 Σ_j f_j ∂^j (불변)"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Any] = ()) -> None:
        self._coeffs: Tuple[Poly, ...] = _trim(
            [c if isinstance(c, Poly) else Poly.constant(c) for c in coeffs]
        )

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls([Poly.one()])

    @classmethod
    def derivative_op(cls) -> "DiffOp":
        """d/dx"""
        return cls([Poly.zero(), Poly.one()])

    @classmethod
    def multiply_by(cls, p: Poly) -> "DiffOp":
        """다항식 p를 곱하는 0차 연산자"""
        return cls([p])

    @property
    def coeffs(self) -> Tuple[Poly, ...]:
        return self._coeffs

    @property
    def order(self) -> Any:
        """가장 높은 미분 차수 (영 연산자는 ZERO_DEGREE)"""
        if not self._coeffs:
            return ZERO_DEGREE
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def in_algebra_a(self) -> bool:
        """모든 j에 대해 deg f_j <= j 인지 여부"""
        return all(f.degree <= j for j, f in enumerate(self._coeffs))

    def coeff(self, j: int) -> Poly:
        if j < 0 or j >= len(self._coeffs):
            return Poly.zero()
        return self._coeffs[j]

    def apply(self, p: Poly) -> Poly:
        """다항식에 연산자를 적용"""
        result = Poly.zero()
        derivative = p
        for f in self._coeffs:
            if derivative.is_zero:
                break
            if not f.is_zero:
                result = result + f * derivative
            derivative = derivative.derivative()
        return result

    __call__ = apply

    def compose(self, other: "DiffOp") -> "DiffOp":
        """self ∘ other (라이프니츠 전개)

        (f ∂^i)(g ∂^j) = f Σ_k C(i,k) g^(k) ∂^(i-k+j)
        """
        if self.is_zero or other.is_zero:
            return DiffOp()
        result: List[Poly] = [Poly.zero()] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, f in enumerate(self._coeffs):
            if f.is_zero:
                continue
            for j, g in enumerate(other._coeffs):
                derivative = g
                for k in range(i + 1):
                    if derivative.is_zero:
                        break
                    result[i - k + j] = result[i - k + j] + f * derivative * comb(i, k)
                    derivative = derivative.derivative()
        return DiffOp(result)

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        return self.compose(other)

    def __add__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return DiffOp([self.coeff(j) + other.coeff(j) for j in range(size)])

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "DiffOp":
        return DiffOp([-f for f in self._coeffs])

    def __mul__(self, scalar: RationalLike) -> "DiffOp":
        if not is_scalar(scalar):
            return NotImplemented
        c = to_rational(scalar)
        return DiffOp([f * c for f in self._coeffs])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def to_json(self) -> List[List[str]]:
        """계수 다항식 목록 (인덱스 j = 미분 차수)"""
        return [f.to_json() for f in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[RationalLike]]) -> "DiffOp":
        return cls([Poly.from_json(c) for c in data])

    def __repr__(self) -> str:
        return f"DiffOp(order={self.order}, coeffs={self.to_json()})"


@dataclass(frozen=True)
class DOperatorSpec:
    """D-연산자를 정의하는 수열 ε_n

    sequence가 없으면 모든 n에 대해 constant 값을 씁니다.
    라게르 다항식은 ε_n = -1 입니다.
    """

    constant: Any = field(default_factory=lambda: QQ(-1))
    sequence: Optional[Callable[[int], Any]] = None

    def epsilon(self, n: int) -> Any:
        if self.sequence is not None:
            return to_rational(self.sequence(n))
        return to_rational(self.constant)

    def xi(self, n: int, i: int) -> Any:
        """ξ_{n,i} = ε_n ε_{n-1} ... ε_{n-i+1}, ξ_{n,0} = 1"""
        result = QQ.one
        for j in range(i):
            result *= self.epsilon(n - j)
        return result

    @property
    def is_laguerre(self) -> bool:
        return self.sequence is None and to_rational(self.constant) == QQ(-1)


LAGUERRE_DOPERATOR = DOperatorSpec()


@dataclass(frozen=True)
class OperatorBundle:
    """조립된 고차 미분 연산자와 그 구성 요소"""

    alpha: int
    S: Poly
    omega: Poly
    PS: Poly
    Mh: Tuple[Poly, ...]
    D: DiffOp

    def eigenvalue(self, n: int) -> Any:
        """λ_n = P_S(n)"""
        return self.PS(n)

    @property
    def order(self) -> Any:
        return self.D.order

    @property
    def expected_order(self) -> int:
        """2(deg S + deg Ω + 1)"""
        return 2 * (int(self.S.degree) + int(self.omega.degree) + 1)

    def to_json(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "S": self.S.to_json(),
            "omega": self.omega.to_json(),
            "PS": self.PS.to_json(),
            "Mh": [p.to_json() for p in self.Mh],
            "D": self.D.to_json(),
            "order": int(self.D.order) if not self.D.is_zero else None,
        }
