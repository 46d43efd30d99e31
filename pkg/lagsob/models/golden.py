"""
기준 예제 데이터

α=3, m=3, M=[[1,1,0],[1,1,0],[0,0,1]], S=1 인스턴스에 대해 기준 다항식 값.
다시 계산하지 않고 그대로 수록하며 reproduce-example 명령이 이 값과 비교합니다.
"""

from dataclasses import dataclass
from typing import Tuple

from lagsob.models.poly import Poly


@dataclass(frozen=True)
class GoldenExample:
    """공개 계수로 고정된 기준 인스턴스"""

    alpha: int
    M: Tuple[Tuple[int, ...], ...]
    R: Tuple[Poly, ...]
    omega: Poly
    PS: Poly
    Mh: Tuple[Poly, ...]
    order: int
    awr: int
    nj: Tuple[int, ...]
    mj: Tuple[int, ...]
    # M_1(D_α)∂𝓡_1(D_α), M_2(D_α)∂𝓡_2(D_α) 의 차수
    summand_orders: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.M)


def _x_plus(c: int) -> Poly:
    return Poly([c, 1])


WORKED_EXAMPLE = GoldenExample(
    alpha=3,
    M=((1, 1, 0), (1, 1, 0), (0, 0, 1)),
    R=(
        _x_plus(1) * _x_plus(2) * Poly([-24, -1, 1]) * Poly.constant("-1/24"),
        _x_plus(1) * Poly([-48, -14, 1, 1]) * Poly.constant("-1/24"),
        _x_plus(4) * Poly([30, -9, 1, 1, 1]) * Poly.constant("1/60"),
    ),
    omega=Poly(
        ["-2", "-22/5", "1333/360", "-71/40", "613/1440", "3/20", "-91/720", "1/40", "-1/480"]
    ),
    PS=Poly(
        [
            "0", "-18/5", "-289/360", "55/108", "-253/1440",
            "47/480", "-17/720", "-1/144", "1/480", "-1/4320",
        ]
    ),
    Mh=(
        Poly(["12", "152/5", "1553/60", "87/8", "29/24", "-11/40", "-11/120"]),
        Poly(["-14", "-369/10", "-512/15", "-131/8", "-71/24", "11/40", "11/120"]),
        Poly(["-7", "-3", "-3", "-2"]),
    ),
    order=18,
    awr=8,
    nj=(5, 4, 0),
    mj=(2, 0),
    summand_orders=(21, 21),
)
