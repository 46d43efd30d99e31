"""
이산 라게르-소볼레프 서비스 테스트

𝓡_l, 카소라티 행렬식, q_n 구성과 직교성 검증을 확인합니다.
"""

import random
from math import factorial

import pytest
from sympy.ntheory import divisors
from sympy.polys.domains import QQ

from lagsob.exceptions import InconsistencyError, PreconditionError
from lagsob.models.data import SobolevSpec
from lagsob.models.golden import WORKED_EXAMPLE
from lagsob.models.poly import Poly
from lagsob.services.laguerre import LaguerreFamily, laguerre_poly
from lagsob.services.sobolev import (
    beta_ratio,
    betas_via_system,
    build_qn,
    build_qn_signed,
    build_R,
    casorati,
    casorati_matrix,
    construct,
    qn_from_betas,
    r_consistency_residuals,
    scale_rsystem,
    sobolev_form,
    verify_left_orthogonality,
)
from lagsob.utils.exact import casorati_sign, integer_coefficients, nonneg_integer_root_free
from tests.fixtures.oracles import cofactor_det
from tests.fixtures.sample_specs import SampleSpecs


class TestRPolynomials:
    """𝓡_l 다항식 테스트 클래스"""

    def test_worked_example(self, worked_R):
        """기준 인스턴스의 𝓡_1..𝓡_3 값 테스트"""
        assert worked_R.m == 3
        for expected, actual in zip(WORKED_EXAMPLE.R, worked_R.polys):
            assert actual == expected
        assert [p.degree for p in worked_R.polys] == [4, 4, 5]

    def test_values(self, worked_R):
        """𝓡_l 의 정수점 값 테스트"""
        assert worked_R.value(1, 0) == 2
        assert worked_R.value(1, 1) == 6
        assert worked_R.value(2, 0) == 2
        assert worked_R.value(2, 1) == 5
        assert worked_R.value(3, 1) == 2

    def test_reduction(self, reduction_spec):
        """M=0, m=1 에서 𝓡_1 = (α-1)!"""
        R = build_R(reduction_spec)
        assert R.polys == (Poly.constant(2),)

    def test_degree_bound(self):
        """deg 𝓡_l <= α+m-1"""
        spec = SobolevSpec.from_rows(5, [[1, 2], [3, 4]])
        for p in build_R(spec).polys:
            assert p.degree <= spec.alpha + spec.m - 1

    @pytest.mark.parametrize(
        "alpha,rows",
        [(3, [[1, 1, 0], [1, 1, 0], [0, 0, 1]]), (4, [[2, "1/2"], [-1, 3]]), (2, [[0, 0], [0, 1]])],
    )
    def test_closed_form_matches_moment_form(self, alpha, rows):
        """닫힌 형태 𝓡_l(n) 과 모멘트 형태가 일치하는지 확인"""
        spec = SobolevSpec.from_rows(alpha, rows)
        residuals = r_consistency_residuals(spec, build_R(spec), 8)
        assert len(residuals) == spec.m * 9
        assert all(r == 0 for r in residuals)

    def test_scale_rsystem(self, worked_R):
        """𝓡_l 상수배 테스트"""
        scaled = scale_rsystem(worked_R, 2, 3)
        assert scaled.polys[1] == worked_R.polys[1] * 3
        assert scaled.polys[0] == worked_R.polys[0]


class TestCasorati:
    """카소라티 행렬식 테스트 클래스"""

    def test_worked_example(self, worked_casorati):
        """기준 인스턴스의 Ω 테스트"""
        assert worked_casorati.omega == WORKED_EXAMPLE.omega
        assert worked_casorati.omega.degree == 8
        assert worked_casorati.root_free
        assert worked_casorati.witness is None

    def test_matches_cofactor_oracle(self, worked_R, worked_casorati):
        """여인수 전개 행렬식에 열 뒤집기 부호를 곱한 값과 일치하는지 확인"""
        matrix = casorati_matrix(worked_R, [1, 2, 3])
        rows = [list(matrix.row(i)) for i in range(3)]
        assert cofactor_det(rows) * casorati_sign(3) == worked_casorati.omega

        reversed_rows = [list(matrix.row(i))[::-1] for i in range(3)]
        assert cofactor_det(reversed_rows) == worked_casorati.omega

    def test_printed_sign(self, worked_casorati):
        """Ω(0) = -2"""
        assert worked_casorati.omega(0) == -2
        assert worked_casorati.omega.leading_coeff == QQ(-1, 480)

    def test_reduction(self, reduction_spec):
        """M=0, m=1 에서 Ω = (α-1)!"""
        data = casorati(build_R(reduction_spec), 1)
        assert data.omega == 2
        assert data.root_free

    def test_nonneg_integer_root(self):
        """alpha=1, M=[[-1]] 이면 Ω = 1-x 로 Ω(1) = 0"""
        spec = SobolevSpec.from_rows(1, [[-1]])
        data = casorati(build_R(spec), 1)
        assert data.omega == Poly([1, -1])
        assert not data.root_free
        assert data.witness == 1

    @pytest.mark.parametrize("l,num,den", [(1, 3, 1), (2, -2, 1), (3, 1, 5)])
    def test_scaling_covariance(self, worked_spec, worked_R, worked_casorati, l, num, den):
        """𝓡_l 을 c 배 하면 Ω 와 q_n 도 c 배, 직교성은 그대로"""
        c = QQ(num, den)
        scaled = scale_rsystem(worked_R, l, c)
        data = casorati(scaled, 3)
        assert data.omega == worked_casorati.omega * c
        assert data.root_free
        for n in range(4):
            assert build_qn(n, worked_spec, scaled) == build_qn(n, worked_spec, worked_R) * c
        result = construct(worked_spec, 4, R=scaled, casorati_data=data)
        assert verify_left_orthogonality(result).status == "pass"

    def test_large_root_bound_finishes(self):
        """코시 상한이 백만을 넘어도 약수 후보만 계산"""
        spec = SobolevSpec.from_rows(5, [[0, 2], [-1, -1]])
        data = casorati(build_R(spec), 2)
        scan = nonneg_integer_root_free(data.omega)
        assert scan.bound > 10**6
        assert scan.candidates <= len(divisors(abs(integer_coefficients(data.omega)[0])))
        assert scan.free == data.root_free
        assert scan.witness == data.witness
        for n in range(200):
            if data.omega(n) == 0:
                assert data.witness is not None and data.witness <= n
        if data.witness is not None:
            assert data.omega(data.witness) == 0

    def test_wrong_size(self, worked_R):
        """m 불일치 오류 테스트"""
        with pytest.raises(InconsistencyError):
            casorati(worked_R, 2)


class TestQPolynomials:
    """직교 다항식 q_n 테스트 클래스"""

    @pytest.mark.parametrize("n", range(7))
    def test_degree_and_leading_coefficient(self, n, worked_spec, worked_R, worked_casorati):
        """deg q_n = n, 최고차 계수 = Ω(n) (-1)^n / n!"""
        q = build_qn(n, worked_spec, worked_R)
        assert q.degree == n
        sign = -1 if n % 2 else 1
        assert q.leading_coeff == worked_casorati.omega(n) * QQ(sign, factorial(n))

    @pytest.mark.parametrize("n", range(7))
    def test_determinant_equals_system(self, n, worked_spec, worked_R, worked_casorati, worked_family):
        """행렬식 표현과 연립방정식 표현이 같은지 확인"""
        betas = betas_via_system(n, worked_R)
        assert len(betas) == 3
        q = build_qn(n, worked_spec, worked_R, worked_family)
        assert q == qn_from_betas(n, betas, worked_casorati.omega(n), worked_family)

    @pytest.mark.parametrize("n", range(6))
    def test_beta_nm_nonzero(self, n, worked_R, worked_casorati):
        """β_{n,m} = (-1)^m Ω(n+1)/Ω(n) 이므로 0이 아님"""
        betas = betas_via_system(n, worked_R)
        omega = worked_casorati.omega
        assert betas[-1] != 0
        assert betas[-1] == -omega(n + 1) / omega(n)
        assert beta_ratio(betas, omega, n) == -1 / omega(n)

    def test_signed_determinant_matches(self, worked_spec, worked_R, worked_family):
        """라게르 부호 규약에서 부호 있는 행렬식이 같은지 확인"""
        for n in range(6):
            assert build_qn_signed(n, worked_R, worked_family) == build_qn(
                n, worked_spec, worked_R, worked_family
            )

    @pytest.mark.parametrize("alpha", [1, 3, 6])
    def test_reduction(self, alpha):
        """M=0, m=1: q_n = (α-1)! L_n^{α-1}, β = -1"""
        spec = SobolevSpec.from_rows(alpha, [[0]])
        R = build_R(spec)
        for n in range(6):
            assert build_qn(n, spec, R) == laguerre_poly(n, alpha - 1) * factorial(alpha - 1)
            assert betas_via_system(n, R) == (-1,)


class TestSobolevForm:
    """쌍선형 형식 테스트 클래스"""

    def test_values(self, worked_spec):
        """⟨1,1⟩ = 2, ⟨1,x⟩ = 2, ⟨x,x⟩ = 3"""
        one, x = Poly.one(), Poly.x()
        assert sobolev_form(one, one, worked_spec) == 2
        assert sobolev_form(one, x, worked_spec) == 2
        assert sobolev_form(x, x, worked_spec) == 3

    def test_symmetric_for_symmetric_m(self, worked_spec):
        """대칭 M 에서 형식이 대칭인지 확인"""
        p, q = Poly([1, 2, 3]), Poly([0, -1, 0, 4])
        assert sobolev_form(p, q, worked_spec) == sobolev_form(q, p, worked_spec)


class TestConstruction:
    """구성 및 직교성 검증 테스트 클래스"""

    def test_orthogonality_worked_example(self, worked_spec, worked_R, worked_casorati):
        """n <= 8 직교성 검증 통과"""
        result = construct(worked_spec, 8, R=worked_R, casorati_data=worked_casorati)
        assert result.upto == 8
        assert len(result.omega_values) == 9
        report = verify_left_orthogonality(result)
        assert report.status == "pass"
        assert [c.name for c in report.checks] == [f"orthogonality[n={n}]" for n in range(9)]

    def test_threads_do_not_change_result(self, worked_spec):
        """스레드 수와 관계없이 같은 결과"""
        serial = construct(worked_spec, 5, threads=1)
        parallel = construct(worked_spec, 5, threads=4)
        assert serial.qpolys == parallel.qpolys
        assert serial.betas == parallel.betas

    def test_corrupted_q_is_detected(self, worked_spec):
        """q_3 + 1 은 l=0 에서 잔차 2 로 실패"""
        result = construct(worked_spec, 4)
        corrupted = result.with_qpoly(3, result.qpolys[3] + 1)
        report = verify_left_orthogonality(corrupted)
        assert report.status == "fail"
        failed = [c.name for c in report.failures]
        assert failed == ["orthogonality[n=3]"]
        assert report.failures[0].residual["0"] == "2"

    def test_verify_upto_limit(self, worked_spec):
        """upto 가 결과 크기보다 크면 결과 크기로 제한"""
        result = construct(worked_spec, 2)
        assert len(verify_left_orthogonality(result, upto=10).checks) == 3
        assert len(verify_left_orthogonality(result, upto=1).checks) == 2

    def test_not_root_free_raises(self):
        """Ω 가 음이 아닌 정수 근을 가지면 구성 거부"""
        spec = SobolevSpec.from_rows(1, [[-1]])
        with pytest.raises(PreconditionError):
            construct(spec, 3)

    def test_result_json(self, reduction_spec):
        """구성 결과 JSON 테스트"""
        document = construct(reduction_spec, 1).to_json()
        assert document["q"] == [["2"], ["6", "-2"]]
        assert document["betas"] == [["-1"], ["-1"]]

    def test_random_instances(self):
        """무작위 인스턴스의 직교성"""
        rng = random.Random(7)
        checked = 0
        while checked < 5:
            spec = SampleSpecs.random_spec(rng, max_m=2)
            data = casorati(build_R(spec), spec.m)
            if not data.root_free:
                continue
            result = construct(spec, 5, casorati_data=data)
            assert verify_left_orthogonality(result).status == "pass"
            checked += 1

    def test_family_reuse(self, worked_spec, worked_R):
        """캐시를 공유해도 결과가 같은지 확인"""
        family = LaguerreFamily(3)
        first = [build_qn(n, worked_spec, worked_R, family) for n in range(4)]
        second = [build_qn(n, worked_spec, worked_R) for n in range(4)]
        assert first == second
        assert len(family) > 0
