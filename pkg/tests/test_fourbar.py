import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mink4r import (
    Branch,
    OutputSolution,
    BranchingKind,
    BranchingPointError,
    DegenerateDenominatorError,
    DomainError,
    LightlikeOutputError,
    LinkageParams,
    Root,
    SolveMode,
    TimelikeCouplerError,
    branching_points,
    closure_residual,
    constraint_coeffs,
    coupler_angle,
    coupler_frame_direction,
    diagonal_sq,
    input_limits,
    limit_report,
    output_limits,
    pose,
    solve_output_angle,
    solve_output_angle_alt,
    transmission_angle,
    transmission_arg,
)
from oracles import assert_solver_matches_brute_force

EX1 = LinkageParams(1.0, 1.0, 4.0, 1.0)
PARALLELOGRAM = LinkageParams(1.0, 1.0, 2.0, 2.0)

lengths = st.floats(min_value=0.2, max_value=3.0)
thetas = st.floats(min_value=-2.5, max_value=2.5)


def random_params(rng) -> LinkageParams:
    return LinkageParams(*rng.uniform(0.2, 3.0, 4))


class TestConstraintCoeffs:
    def test_hand_substitution(self):
        co = constraint_coeffs(EX1, 0.0)
        assert (co.A, co.B, co.C) == (6.0, 0.0, -9.0)

    def test_b_vanishes_at_zero(self):
        assert constraint_coeffs(LinkageParams(0.7, 1.3, 2.1, 0.9), 0.0).B == 0.0

    def test_parallelogram_at_one(self):
        co = constraint_coeffs(PARALLELOGRAM, 1.0)
        assert co.A == pytest.approx(4 - 2 * math.cosh(1.0), rel=1e-15)
        assert co.B == pytest.approx(2 * math.sinh(1.0), rel=1e-15)
        assert co.C == pytest.approx(-2 + 4 * math.cosh(1.0), rel=1e-15)

    def test_rejects_bad_lengths(self):
        with pytest.raises(ValueError):
            LinkageParams(0.0, 1.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            LinkageParams(1.0, -2.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            LinkageParams(1.0, 1.0, math.nan, 1.0)


class TestSolveOutputAngle:
    def test_parallelogram_tracks_input(self):
        sols = solve_output_angle(PARALLELOGRAM, 0.5)
        assert any(
            abs(s.psi - 0.5) < 1e-12 and s.branch is Branch.STANDARD for s in sols
        )

    def test_strict_empty_but_extended_reversed(self):
        assert solve_output_angle(EX1, 0.0) == []
        sols = solve_output_angle(EX1, 0.0, SolveMode.EXTENDED)
        assert len(sols) == 2
        assert all(s.branch is Branch.REVERSED for s in sols)
        for s in sols:
            assert abs(closure_residual(EX1, 0.0, s)) <= 1e-9

    def test_tanh_half_roots_at_theta_zero(self):
        # (A, B, C) = (6, 0, -9): y = -+ sqrt(45) / 3, both outside (-1, 1).
        co = constraint_coeffs(EX1, 0.0)
        sq = math.sqrt(co.B**2 + co.C**2 - co.A**2)
        assert sq == pytest.approx(math.sqrt(45.0), rel=1e-15)
        assert abs((-co.B + sq) / (co.A + co.C)) == pytest.approx(math.sqrt(5.0), rel=1e-12)

    def test_branching_point_raises(self):
        with pytest.raises(BranchingPointError):
            solve_output_angle(EX1, math.acosh(1.5))

    def test_no_solution_between_limits(self):
        # ch(theta) = 1.9 lies inside the infeasible gap (1.625, 2.125).
        assert solve_output_angle(EX1, math.acosh(1.9), SolveMode.EXTENDED) == []

    def test_lightlike_root_raises(self):
        # g = exp(-1) at theta = 1 makes A = -B, so y = 1 is an exact root.
        params = LinkageParams(1.0, 1.0, math.exp(-1.0), 1.3)
        with pytest.raises(LightlikeOutputError):
            solve_output_angle(params, 1.0, SolveMode.EXTENDED)

    def test_root_order_plus_first(self):
        sols = solve_output_angle(EX1, 0.0, SolveMode.EXTENDED)
        assert [s.root for s in sols] == [Root.PLUS, Root.MINUS]

    @given(lengths, lengths, lengths, lengths, thetas)
    def test_closure_residual(self, a, b, g, h, theta):
        params = LinkageParams(a, b, g, h)
        try:
            sols = solve_output_angle(params, theta, SolveMode.EXTENDED)
        except (BranchingPointError, LightlikeOutputError):
            return
        for s in sols:
            assert abs(closure_residual(params, theta, s)) <= 1e-9 * max(1.0, h * h)

    @given(lengths, lengths, lengths, lengths, thetas)
    def test_strict_is_standard_subset_of_extended(self, a, b, g, h, theta):
        params = LinkageParams(a, b, g, h)
        try:
            strict = solve_output_angle(params, theta)
            extended = solve_output_angle(params, theta, SolveMode.EXTENDED)
        except (BranchingPointError, LightlikeOutputError):
            return
        assert strict == [s for s in extended if s.branch is Branch.STANDARD]

    def test_solver_matches_brute_force_sampling(self):
        rng = np.random.default_rng(314159)
        for _ in range(120):
            params = random_params(rng)
            theta = rng.uniform(-2.5, 2.5)
            assert_solver_matches_brute_force(params, theta)


class TestAlternativeFormula:
    def test_parallelogram_cross_check(self):
        vals = solve_output_angle_alt(PARALLELOGRAM, 0.5)
        assert any(abs(v - 0.5) < 1e-12 for v in vals)

    def test_domain_error_outside_remark_domain(self):
        with pytest.raises(DomainError) as err:
            solve_output_angle_alt(EX1, 0.0)
        assert err.value.q == pytest.approx(-1.5, abs=1e-12)

    def test_random_agreement_with_strict(self):
        rng = np.random.default_rng(2718)
        checked = 0
        while checked < 200:
            params = random_params(rng)
            theta = rng.uniform(-2.5, 2.5)
            try:
                alt = solve_output_angle_alt(params, theta)
            except DomainError:
                continue
            strict = solve_output_angle(params, theta)
            assert len(strict) == 2
            for got, want in zip(sorted(alt), sorted(s.psi for s in strict)):
                assert got == pytest.approx(want, abs=1e-9)
            checked += 1


class TestBranchingPoints:
    def test_discrete_realizable(self):
        res = branching_points(EX1)
        assert res.kind is BranchingKind.DISCRETE
        assert res.ch_theta == pytest.approx(1.5, abs=1e-12)
        assert res.realizable is True

    def test_discrete_unrealizable(self):
        res = branching_points(LinkageParams(0.5, 1.0, 2.0, 2.5))
        assert res.kind is BranchingKind.DISCRETE
        assert res.ch_theta == pytest.approx(-5.0, abs=1e-12)
        assert res.realizable is False

    def test_equal_ground_and_output_without_equal_coupler(self):
        res = branching_points(LinkageParams(1.2, 0.4, 0.4, 0.4))
        assert res.kind is BranchingKind.NONE

    def test_all_points_branching(self):
        res = branching_points(LinkageParams(0.7, 1.1, 1.1, 0.7))
        assert res.kind is BranchingKind.ALL

    def test_coefficients_degenerate_at_branching_input(self):
        res = branching_points(EX1)
        co = constraint_coeffs(EX1, math.acosh(res.ch_theta))
        assert abs(co.A + co.C) <= 1e-9 * (abs(co.A) + abs(co.C))

    def test_degenerate_linear_equation_root_still_closes(self):
        # With the quadratic term gone, 2By + (A - C) = 0 keeps one finite
        # root; here it lands outside (-1, 1), i.e. on the reversed branch.
        theta = math.acosh(branching_points(EX1).ch_theta)
        co = constraint_coeffs(EX1, theta)
        y = (co.C - co.A) / (2.0 * co.B)
        assert abs(y) == pytest.approx(math.sqrt(5.0), rel=1e-12)
        sol = OutputSolution(2.0 * math.atanh(1.0 / y), Root.PLUS, Branch.REVERSED)
        assert abs(closure_residual(EX1, theta, sol)) <= 1e-12


class TestCouplerAngle:
    def test_parallelogram_offset(self):
        assert coupler_angle(PARALLELOGRAM, 0.7, 0.7) == pytest.approx(math.pi - 0.7, abs=1e-12)

    def test_flat_parallelogram(self):
        assert coupler_angle(PARALLELOGRAM, 0.0, 0.0) == pytest.approx(math.pi, abs=1e-15)

    def test_timelike_coupler_rejected(self):
        with pytest.raises(TimelikeCouplerError):
            coupler_angle(LinkageParams(1.0, 1.0, 0.5, 1.0), 0.0, 2.0)

    def test_degenerate_denominator_rejected(self):
        with pytest.raises(DegenerateDenominatorError):
            coupler_angle(LinkageParams(2.0, 1.0, 1.0, 1.0), 0.0, 0.0)

    def test_loop_equation_reconstruction(self):
        # Rebuild B from the coupler-frame form and compare with the pose.
        rng = np.random.default_rng(99)
        checked = 0
        while checked < 200:
            params = random_params(rng)
            theta = rng.uniform(-2.0, 2.0)
            try:
                sols = solve_output_angle(params, theta)
            except (BranchingPointError, LightlikeOutputError):
                continue
            for s in sols:
                p = pose(params, theta, s)
                if p.b[0] - p.a[0] <= 0:
                    # Past-pointing coupler: theta + phi - pi has no real
                    # value, so the angle form of B does not apply.
                    continue
                try:
                    phi = coupler_angle(params, theta, s.psi)
                except (TimelikeCouplerError, DegenerateDenominatorError):
                    continue
                u = theta + phi - math.pi
                bx = p.a[0] + params.h * math.cosh(u)
                by = p.a[1] + params.h * math.sinh(u)
                assert bx == pytest.approx(p.b[0], abs=1e-9 * max(1.0, abs(p.b[0])))
                assert by == pytest.approx(p.b[1], abs=1e-9 * max(1.0, abs(p.b[1])))
                checked += 1


class TestTransmissionAngle:
    def test_aligned_symmetric_linkage(self):
        assert transmission_angle(LinkageParams(2.0, 1.0, 2.0, 1.0), 0.0) == 0.0

    def test_zero_at_upper_input_limit(self):
        theta = math.acosh(2.125)
        assert transmission_arg(EX1, theta) == pytest.approx(1.0, abs=1e-12)
        assert transmission_angle(EX1, theta) == pytest.approx(0.0, abs=1e-6)

    def test_domain_error_inside_gap(self):
        with pytest.raises(DomainError) as err:
            transmission_angle(EX1, math.acosh(2.0))
        assert err.value.q == pytest.approx(0.5, abs=1e-12)

    def test_diagonal_agreement(self):
        rng = np.random.default_rng(55)
        checked = 0
        while checked < 200:
            params = random_params(rng)
            theta = rng.uniform(-2.5, 2.5)
            try:
                zeta = transmission_angle(params, theta)
            except DomainError:
                continue
            lhs = diagonal_sq(params, theta)
            rhs = params.h**2 + params.b**2 - 2 * params.b * params.h * math.cosh(zeta)
            assert lhs == pytest.approx(rhs, abs=1e-9 * max(1.0, abs(lhs)))
            checked += 1


class TestLimits:
    @pytest.mark.parametrize(
        "params,ct,cp",
        [
            ((1.0, 1.0, 4.0, 1.0), (1.625, 2.125), (-2.125, -1.625)),
            ((1.2, 0.4, 0.4, 0.4), (1.0, 5.0 / 3.0), (1.0, 7.0)),
            ((0.5, 1.0, 2.0, 2.5), (-4.0, 1.0), (-0.25, 1.0)),
            ((0.6, 1.0, 0.7, 0.5), (-5.0 / 3.0, 5.0 / 7.0), (-1.48 / 1.4, -0.2)),
        ],
    )
    def test_worked_values(self, params, ct, cp):
        p = LinkageParams(*params)
        got_t = input_limits(p)
        got_p = output_limits(p)
        assert got_t[0] == pytest.approx(ct[0], abs=1e-9)
        assert got_t[1] == pytest.approx(ct[1], abs=1e-9)
        assert got_p[0] == pytest.approx(cp[0], abs=1e-9)
        assert got_p[1] == pytest.approx(cp[1], abs=1e-9)

    def test_existence_flags(self):
        rep = limit_report(EX1)
        assert rep.theta_min_exists and rep.theta_max_exists
        assert not rep.psi_min_exists and not rep.psi_max_exists

    @given(lengths, lengths, lengths, lengths)
    def test_discriminant_vanishes_at_limits(self, a, b, g, h):
        params = LinkageParams(a, b, g, h)
        for ch in input_limits(params):
            # Discriminant as a function of ch(theta); real theta not needed.
            aa = 2 * g * b - 2 * a * b * ch
            bb_sq = 4 * a * a * b * b * (ch * ch - 1.0)
            cc = h * h - g * g - b * b - a * a + 2 * a * g * ch
            disc = bb_sq + cc * cc - aa * aa
            scale = max(1.0, bb_sq**0.5 if bb_sq > 0 else 0.0, cc * cc, aa * aa)
            assert abs(disc) <= 1e-7 * scale

    @given(lengths, lengths, lengths, lengths)
    def test_transmission_arg_is_unit_at_limits(self, a, b, g, h):
        params = LinkageParams(a, b, g, h)
        ct_min, ct_max = input_limits(params)
        # q - 1 = 2ag (ch - ch_max) / (2bh) and q + 1 = 2ag (ch - ch_min) / (2bh).
        for ch, expected in ((ct_min, -1.0), (ct_max, 1.0)):
            q = (-g * g - a * a + h * h + b * b + 2 * a * g * ch) / (2 * b * h)
            assert q == pytest.approx(expected, abs=1e-9 * max(1.0, abs(q)))

    def test_input_limits_are_discriminant_roots_of_quoted_quadratic(self):
        params = LinkageParams(0.9, 1.7, 2.2, 1.1)
        a, b, g, h = params.a, params.b, params.g, params.h
        for ch in input_limits(params):
            val = (
                4 * a * a * g * g * ch * ch
                - 4 * a * g * (g * g + a * a - h * h - b * b) * ch
                + ((g * g + a * a) - (h + b) ** 2) * ((g * g + a * a) - (h - b) ** 2)
            )
            assert abs(val) <= 1e-9 * (4 * a * a * g * g * max(1.0, ch * ch))


class TestPose:
    def test_input_joint_at_zero(self):
        sols = solve_output_angle(LinkageParams(1.3, 1.0, 2.0, 1.8), 0.0)
        p = pose(LinkageParams(1.3, 1.0, 2.0, 1.8), 0.0, sols[0])
        assert p.a == (1.3, 0.0)
        assert p.o == (0.0, 0.0)
        assert p.c == (2.0, 0.0)

    def test_parallelogram_coordinates(self):
        s = next(
            s for s in solve_output_angle(PARALLELOGRAM, 0.5) if abs(s.psi - 0.5) < 1e-12
        )
        p = pose(PARALLELOGRAM, 0.5, s)
        assert p.a[0] == pytest.approx(math.cosh(0.5), rel=1e-15)
        assert p.b[0] == pytest.approx(2 + math.cosh(0.5), rel=1e-15)
        assert p.b[1] == pytest.approx(math.sinh(0.5), rel=1e-15)
        assert p.b[0] - p.a[0] == pytest.approx(2.0, abs=1e-12)
        assert p.b[1] - p.a[1] == pytest.approx(0.0, abs=1e-12)

    def test_link_lengths_reproduced(self):
        rng = np.random.default_rng(123)
        checked = 0
        while checked < 100:
            params = random_params(rng)
            theta = rng.uniform(-2.5, 2.5)
            try:
                sols = solve_output_angle(params, theta, SolveMode.EXTENDED)
            except (BranchingPointError, LightlikeOutputError):
                continue
            for s in sols:
                p = pose(params, theta, s)
                oa = math.sqrt(abs(p.a[0] ** 2 - p.a[1] ** 2))
                cb = math.sqrt(abs((p.b[0] - p.c[0]) ** 2 - (p.b[1] - p.c[1]) ** 2))
                ab = math.sqrt(abs((p.b[0] - p.a[0]) ** 2 - (p.b[1] - p.a[1]) ** 2))
                assert oa == pytest.approx(params.a, rel=1e-9)
                assert cb == pytest.approx(params.b, rel=1e-9)
                assert ab == pytest.approx(params.h, rel=1e-9)
                checked += 1


class TestCouplerFrameDirection:
    def test_unit_spacelike_pair(self):
        sols = solve_output_angle(EX1, 0.0, SolveMode.EXTENDED)
        for s in sols:
            cu, su = coupler_frame_direction(EX1, 0.0, s)
            assert cu * cu - su * su == pytest.approx(1.0, abs=1e-9)

    def test_matches_coupler_angle_when_future_pointing(self):
        s = next(
            s for s in solve_output_angle(PARALLELOGRAM, 0.5) if abs(s.psi - 0.5) < 1e-12
        )
        cu, su = coupler_frame_direction(PARALLELOGRAM, 0.5, s)
        phi = coupler_angle(PARALLELOGRAM, 0.5, s.psi)
        u = 0.5 + phi - math.pi
        assert cu == pytest.approx(math.cosh(u), rel=1e-12)
        assert su == pytest.approx(math.sinh(u), abs=1e-12)

    def test_rejects_non_closing_pose(self):
        fake = solve_output_angle(PARALLELOGRAM, 0.5)[0]
        with pytest.raises(TimelikeCouplerError):
            coupler_frame_direction(LinkageParams(1.0, 1.0, 2.0, 0.3), 0.5, fake)
