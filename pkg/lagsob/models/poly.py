"""
정확 산술 기본 타입

유리수, 유리수 계수 일변수 다항식, 다항식 행렬, 유리수 행렬을 정의합니다.
유리수는 sympy의 QQ 도메인 원소이고, 다항식은 sympy dense 표현(dup)
위에서 계산합니다. 부동소수점은 어디에도 쓰지 않습니다.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Basic, S
from sympy.polys.densearith import (
    dup_add,
    dup_mul,
    dup_mul_ground,
    dup_neg,
    dup_pow,
    dup_sub,
)
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_compose, dup_diff, dup_eval, dup_shift
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lagsob.exceptions import DimensionError

# 유리수 타입 (gmpy2.mpq 또는 sympy PythonMPQ)
Rational = QQ.dtype
RationalLike = Union[int, str, Fraction, Any]

# 영 다항식의 차수 (sympy Poly.degree와 같은 관례)
ZERO_DEGREE = S.NegativeInfinity


def to_rational(value: RationalLike) -> Any:
    """정수, "num/den" 문자열, Fraction, sympy 유리수를 QQ 원소로 변환

    Raises:
        TypeError: 부동소수점 등 지원하지 않는 타입
        ValueError: 유리수로 해석할 수 없는 문자열
    """
    if QQ.of_type(value):
        return value
    if isinstance(value, bool):
        raise TypeError("bool은 유리수로 변환할 수 없습니다")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        numerator, sep, denominator = value.strip().partition("/")
        try:
            return QQ(int(numerator), int(denominator) if sep else 1)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"유리수 문자열이 아닙니다: {value!r}") from e
    if isinstance(value, Basic) and value.is_Rational:
        return QQ.from_sympy(value)
    raise TypeError(f"유리수로 변환할 수 없는 타입: {type(value).__name__}")


def format_rational(value: RationalLike) -> str:
    """유리수를 기약분수 "num/den" 문자열로 직렬화 (분모 1이면 생략)"""
    q = to_rational(value)
    numerator, denominator = int(q.numerator), int(q.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def is_scalar(value: Any) -> bool:
    return (
        QQ.of_type(value)
        or isinstance(value, Fraction)
        or (isinstance(value, int) and not isinstance(value, bool))
    )


class Poly:
    """유리수 계수 일변수 다항식 (불변)

    내부 표현은 sympy dense 형식(내림차순 계수, 선행 0 없음)이고
    공개 API의 계수 순서는 오름차순입니다.
    """

    __slots__ = ("_rep",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        rep = [to_rational(c) for c in coeffs]
        rep.reverse()
        self._rep: Tuple[Any, ...] = tuple(dup_strip(rep))

    @classmethod
    def _from_dup(cls, rep: Sequence[Any]) -> "Poly":
        obj = cls.__new__(cls)
        obj._rep = tuple(dup_strip(list(rep)))
        return obj

    @classmethod
    def zero(cls) -> "Poly":
        return cls._from_dup([])

    @classmethod
    def one(cls) -> "Poly":
        return cls._from_dup([QQ.one])

    @classmethod
    def x(cls) -> "Poly":
        return cls._from_dup([QQ.one, QQ.zero])

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls._from_dup([to_rational(value)])

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "Poly":
        """coeff * x**power"""
        if power < 0:
            raise ValueError("지수는 0 이상이어야 합니다")
        return cls._from_dup([to_rational(coeff)] + [QQ.zero] * power)

    # 조회

    @property
    def dup(self) -> List[Any]:
        """sympy dense 표현 (내림차순) 사본"""
        return list(self._rep)

    @property
    def coeffs(self) -> Tuple[Any, ...]:
        """오름차순 계수"""
        return tuple(reversed(self._rep))

    @property
    def degree(self) -> Any:
        """차수 (영 다항식은 ZERO_DEGREE)"""
        if not self._rep:
            return ZERO_DEGREE
        return len(self._rep) - 1

    @property
    def is_zero(self) -> bool:
        return not self._rep

    @property
    def leading_coeff(self) -> Any:
        return self._rep[0] if self._rep else QQ.zero

    def coeff(self, power: int) -> Any:
        """x**power의 계수"""
        if power < 0 or power >= len(self._rep):
            return QQ.zero
        return self._rep[len(self._rep) - 1 - power]

    def __call__(self, point: RationalLike) -> Any:
        return dup_eval(list(self._rep), to_rational(point), QQ)

    def jet(self, count: int) -> Tuple[Any, ...]:
        """0에서의 도함수 값 (p(0), p'(0), ..., p^(count-1)(0))"""
        return tuple(factorial(k) * self.coeff(k) for k in range(count))

    def derivative(self, order: int = 1) -> "Poly":
        if order < 0:
            raise ValueError("미분 차수는 0 이상이어야 합니다")
        return Poly._from_dup(dup_diff(list(self._rep), order, QQ))

    def shift(self, amount: RationalLike) -> "Poly":
        """p(x + amount)"""
        return Poly._from_dup(dup_shift(list(self._rep), to_rational(amount), QQ))

    def compose(self, inner: "Poly") -> "Poly":
        """p(inner(x))"""
        return Poly._from_dup(dup_compose(list(self._rep), list(inner._rep), QQ))

    # 산술

    @staticmethod
    def _coerce(other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if is_scalar(other):
            return Poly.constant(other)
        return None

    def __add__(self, other: Any) -> "Poly":
        rhs = Poly._coerce(other)
        if rhs is None:
            return NotImplemented
        return Poly._from_dup(dup_add(list(self._rep), list(rhs._rep), QQ))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly":
        rhs = Poly._coerce(other)
        if rhs is None:
            return NotImplemented
        return Poly._from_dup(dup_sub(list(self._rep), list(rhs._rep), QQ))

    def __rsub__(self, other: Any) -> "Poly":
        lhs = Poly._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __neg__(self) -> "Poly":
        return Poly._from_dup(dup_neg(list(self._rep), QQ))

    def __mul__(self, other: Any) -> "Poly":
        if is_scalar(other):
            return Poly._from_dup(dup_mul_ground(list(self._rep), to_rational(other), QQ))
        if isinstance(other, Poly):
            return Poly._from_dup(dup_mul(list(self._rep), list(other._rep), QQ))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Poly":
        if not is_scalar(other):
            return NotImplemented
        divisor = to_rational(other)
        if not divisor:
            raise ZeroDivisionError("0으로 나눌 수 없습니다")
        return self * (QQ.one / divisor)

    def __pow__(self, power: int) -> "Poly":
        if power < 0:
            raise ValueError("지수는 0 이상이어야 합니다")
        return Poly._from_dup(dup_pow(list(self._rep), power, QQ))

    def __eq__(self, other: object) -> bool:
        rhs = Poly._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._rep == rhs._rep

    def __hash__(self) -> int:
        return hash(self._rep)

    def __bool__(self) -> bool:
        return bool(self._rep)

    # 직렬화

    def to_json(self) -> List[str]:
        """오름차순 유리수 문자열 배열"""
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[RationalLike]) -> "Poly":
        return cls(data)

    def __repr__(self) -> str:
        return f"Poly({self.to_json()})"

    def __str__(self) -> str:
        if not self._rep:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeff(power)
            if not c:
                continue
            if power == 0:
                terms.append(format_rational(c))
            elif power == 1:
                terms.append(f"{format_rational(c)}*x")
            else:
                terms.append(f"{format_rational(c)}*x^{power}")
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class RationalMatrix:
    """유리수 행렬 (행 우선 저장)"""

    rows: int
    cols: int
    entries: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("행렬 크기는 0 이상이어야 합니다")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"원소 수 {len(self.entries)}가 {self.rows}x{self.cols}와 맞지 않습니다"
            )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None
    ) -> "RationalMatrix":
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            raise DimensionError("행렬이 직사각형이 아닙니다")
        entries = tuple(to_rational(c) for row in rows for c in row)
        return cls(len(rows), width, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, tuple(QQ.zero for _ in range(rows * cols)))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RationalMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    def entry(self, i: int, j: int) -> Any:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Any, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [list(self.column(j)) for j in range(self.cols)], cols=self.rows
        )

    def select_columns(self, indices: Sequence[int]) -> "RationalMatrix":
        """주어진 열들로 이루어진 행렬 (열이 없으면 rows x 0 행렬)"""
        return RationalMatrix(
            self.rows,
            len(indices),
            tuple(self.entry(i, j) for i in range(self.rows) for j in indices),
        )

    def scale(self, factor: RationalLike) -> "RationalMatrix":
        c = to_rational(factor)
        return RationalMatrix(self.rows, self.cols, tuple(c * e for e in self.entries))

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(self.to_rows(), (self.rows, self.cols), QQ)

    def det(self) -> Any:
        if not self.is_square:
            raise DimensionError(f"정방 행렬이 아닙니다: {self.rows}x{self.cols}")
        if self.rows == 0:
            return QQ.one
        return self.to_domain_matrix().det()

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return self.to_domain_matrix().rank()

    def to_json(self) -> List[List[str]]:
        return [[format_rational(c) for c in self.row(i)] for i in range(self.rows)]


@dataclass(frozen=True)
class PolyMatrix:
    """다항식 행렬 (행 우선 저장)"""

    rows: int
    cols: int
    entries: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"원소 수 {len(self.entries)}가 {self.rows}x{self.cols}와 맞지 않습니다"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "PolyMatrix":
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise DimensionError("행렬이 직사각형이 아닙니다")
        entries = tuple(
            e if isinstance(e, Poly) else Poly.constant(e) for row in rows for e in row
        )
        return cls(len(rows), width, entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Poly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def evaluate(self, point: RationalLike) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, tuple(e(point) for e in self.entries))
