"""기준 예제 데이터 테스트"""

from lagsob.models.golden import WORKED_EXAMPLE
from lagsob.models.poly import Poly
from lagsob.utils.exact import indefinite_sum


class TestGoldenData:
    """수록된 값의 내부 일관성 테스트 클래스"""

    def test_shape(self):
        """크기와 차수"""
        assert WORKED_EXAMPLE.m == 3
        assert WORKED_EXAMPLE.omega.degree == WORKED_EXAMPLE.awr
        assert WORKED_EXAMPLE.PS.degree == WORKED_EXAMPLE.omega.degree + 1
        assert 2 * WORKED_EXAMPLE.PS.degree == WORKED_EXAMPLE.order

    def test_ps_is_indefinite_sum_of_omega(self):
        """P_S(x) - P_S(x-1) = Ω(x), P_S(0) = 0"""
        PS = WORKED_EXAMPLE.PS
        assert PS - PS.shift(-1) == WORKED_EXAMPLE.omega
        assert PS(0) == 0
        assert indefinite_sum(WORKED_EXAMPLE.omega) == PS

    def test_awr_parts(self):
        """awr = Σ n_j + Σ m_j - m(m-1)/2"""
        m = WORKED_EXAMPLE.m
        total = sum(WORKED_EXAMPLE.nj) + sum(WORKED_EXAMPLE.mj) - m * (m - 1) // 2
        assert total == WORKED_EXAMPLE.awr

    def test_r_values(self):
        """𝓡_1(0) = 𝓡_2(0) = 2"""
        R1, R2, R3 = WORKED_EXAMPLE.R
        assert R1(0) == 2
        assert R2(0) == 2
        assert R3 == Poly([4, 1]) * Poly([30, -9, 1, 1, 1]) * Poly.constant("1/60")
