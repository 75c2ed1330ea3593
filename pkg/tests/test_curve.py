"""Curve solver against an independent bisection oracle and its invariants.

The oracle reimplements the curve point search with nothing but interval
bisection on the transform evaluator: find the height where Im G vanishes
on a vertical line, move the line until Re F hits the target.  It shares
no code with the Newton machinery under test.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freenormal.curve import (
    CurvePoint,
    f_of,
    in_omega,
    solve_H,
    trace_level_set,
    trace_p0,
)
from freenormal.errors import DomainError, FreeNormalError
from freenormal.series import eval_h_asym_infinity
from freenormal.transforms import f_tilde, g_tilde

HALF_PI = math.pi / 2.0


def bisection_oracle(x_target: float) -> complex:
    """Solve F(z) = x_target by nested bisection; independent of solve_H."""

    def height(c: float) -> float:
        lo, hi = -HALF_PI / c * (1.0 - 1e-9), -1e-12
        f_hi = complex(g_tilde(complex(c, hi))).imag
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            fm = complex(g_tilde(complex(c, mid))).imag
            if fm == 0.0:
                return mid
            if fm * f_hi < 0.0:
                lo = mid
            else:
                hi, f_hi = mid, fm
        return 0.5 * (lo + hi)

    def real_part(c: float) -> float:
        return complex(f_tilde(complex(c, height(c)))).real

    lo, hi = 0.7, 6.0
    f_lo = real_part(lo) - x_target
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = real_part(mid) - x_target
        if fm == 0.0:
            lo = hi = mid
            break
        if fm * f_lo < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, fm
    c = 0.5 * (lo + hi)
    return complex(c, height(c))


class TestSolveAgainstOracle:
    def test_bulk_point_matches_bisection(self):
        for x in (0.8, 2.0, 3.0):
            z_oracle = bisection_oracle(x)
            pt = solve_H(x)
            assert abs(pt.g - z_oracle.real) <= 1e-10
            assert abs(pt.h + z_oracle.imag) <= 1e-10 * abs(z_oracle.imag)

    def test_f_of_agrees_with_oracle_graph(self):
        z_oracle = bisection_oracle(3.0)
        # the oracle point lies on the graph of f at its own real part
        assert abs(f_of(z_oracle.real) - z_oracle.imag) <= 1e-9


class TestSolveRegimes:
    def test_pinned_values_across_regimes(self):
        pins = {
            0.01: (0.5652666246948257, 2.773251101375087),
            2.0: (2.5771836146056966, 0.17016436285743936),
            6.0: (6.171945334812455, 2.3391100544470117e-07),
            12.0: (12.083928917934582, 3.5091252814339155e-30),
        }
        for x, (g, h) in pins.items():
            pt = solve_H(x)
            assert abs(pt.g - g) <= 1e-11 * g
            assert abs(pt.h - h) <= 1e-9 * h

    def test_defining_equation_holds_everywhere(self):
        for x in (1e-5, 0.03, 0.4, 1.5, 4.0, 7.0, 11.0):
            pt = solve_H(x)
            F = complex(f_tilde(pt.z))
            assert abs(F - x) <= 1e-8 * max(1.0, x)

    def test_small_x_height_and_product(self):
        pt = solve_H(1e-6)
        assert pt.h > 4.0
        assert pt.g < 0.31
        assert 0.0 < HALF_PI - pt.g * pt.h < 1e-5

    def test_large_x_height_collapses(self):
        assert solve_H(12.0).h < 1e-20

    def test_very_large_x_uses_series_regime(self):
        pt = solve_H(35.0)
        model = eval_h_asym_infinity(35.0, 3).to_complex().real
        assert abs(pt.h - model) <= 1e-3 * model

    def test_rejects_nonpositive_x(self):
        with pytest.raises(DomainError):
            solve_H(0.0)
        with pytest.raises(DomainError):
            solve_H(-2.0)

    def test_height_underflow_is_a_domain_error(self):
        with pytest.raises(DomainError):
            solve_H(60.0)

    def test_derivative_matches_finite_difference(self):
        x, d = 1.0, 1e-3
        a, b = solve_H(x - d), solve_H(x + d)
        g_fd = (b.g - a.g) / (2 * d)
        h_fd = (b.h - a.h) / (2 * d)
        pt = solve_H(x)
        den = x * ((pt.g - x) ** 2 + pt.h**2)
        assert abs(g_fd - (pt.g - x) / den) <= 1e-4
        assert abs(h_fd + pt.h / den) <= 1e-4


class TestTrace:
    def test_monotone_and_complete(self):
        trace = trace_p0(0.02, 8.0, 60)
        assert len(trace.points) == 60
        gs = [p.g for p in trace.points]
        hs = [p.h for p in trace.points]
        assert all(b > a for a, b in zip(gs, gs[1:]))
        assert all(b < a for a, b in zip(hs, hs[1:]))
        assert trace.solver_stats["points"] == 60

    def test_degenerate_two_point_trace(self):
        trace = trace_p0(1.0, 1.0000001, 2)
        assert len(trace.points) == 2

    def test_rejects_bad_grid(self):
        with pytest.raises(DomainError):
            trace_p0(2.0, 1.0, 10)
        with pytest.raises(DomainError):
            trace_p0(0.5, 1.0, 1)


class TestGraphFunction:
    def test_even(self):
        assert f_of(1.5) == f_of(-1.5)

    def test_closed_form_region_is_exact(self):
        for x in (0.04, 0.02, 1e-3, 1e-6):
            assert f_of(x) == -math.pi / (2.0 * x)

    def test_graph_point_maps_to_a_positive_real(self):
        # the transform sends (a, f(a)) to the curve parameter s with
        # g(s) = a; the round trip through the solver recovers a
        for a in (0.5, 1.0, 3.0, 10.0):
            z = complex(a, f_of(a))
            F = complex(f_tilde(z))
            assert abs(F.imag) <= 1e-10 * max(1.0, abs(F))
            assert F.real > 0.0
            assert abs(solve_H(F.real).g - a) <= 1e-7 * max(1.0, a)

    @given(st.floats(0.06, 20.0, allow_nan=False))
    @settings(max_examples=40, deadline=None)
    def test_graph_round_trip_through_the_solver(self, a):
        z = complex(a, f_of(a))
        F = complex(f_tilde(z))
        assert abs(F.imag) <= 1e-9 * max(1.0, abs(F))
        assert abs(solve_H(F.real).g - a) <= 1e-6 * max(1.0, a)

    def test_sandwiched_near_zero(self):
        for x in (0.3, 0.2, 0.1):
            v = -x * f_of(x)
            assert v <= HALF_PI * (1.0 + 1e-12)
            assert v >= HALF_PI * (1.0 - 1e-3)

    def test_beyond_representable_height(self):
        with pytest.raises(DomainError):
            f_of(50.0)

    def test_zero_is_rejected(self):
        with pytest.raises(DomainError):
            f_of(0.0)


class TestOmegaMembership:
    def test_representative_points(self):
        assert in_omega(1j)
        assert in_omega(complex(0.0, -0.5))
        assert not in_omega(complex(3.0, -1.0))
        assert in_omega(complex(0.5, -0.01))

    def test_straddles_the_curve(self):
        a = 1.0
        y = f_of(a)
        assert in_omega(complex(a, y + 1e-6))
        assert not in_omega(complex(a, y - 1e-6))

    def test_closed_upper_half_plane_is_inside(self):
        assert in_omega(5.0 + 0j)
        assert in_omega(-17.0 + 3j)


class TestLevelSets:
    BBOX = (-3.2, 3.2, -2.2, 2.2)

    def test_t0_has_two_branches(self):
        traces = trace_level_set(0.0, self.BBOX, 0.1)
        branches = {t.branch for t in traces}
        assert branches == {"left", "right"}
        assert all(len(t.points) > 10 for t in traces)

    def test_t1_passes_through_known_axis_point(self):
        # the transform maps 0.3026308407115723i to i
        traces = trace_level_set(1.0, self.BBOX, 0.08)
        target = complex(0.0, 0.3026308407115723)
        d = min(abs(z - target) for t in traces for z in t.points)
        assert d <= 0.12

    def test_points_lie_on_their_level(self):
        for t in (0.0, 0.7):
            for tr in trace_level_set(t, self.BBOX, 0.12):
                for z in tr.points[::5]:
                    assert abs(complex(f_tilde(z)).imag - t) <= 1e-9

    def test_level_sets_are_symmetric(self):
        traces = trace_level_set(0.4, self.BBOX, 0.1)
        pts = [z for t in traces for z in t.points]
        for z in pts[::7]:
            mirrored = -z.conjugate()
            d = min(abs(w - mirrored) for w in pts)
            assert d <= 0.15

    def test_rejects_negative_level_and_bad_bbox(self):
        with pytest.raises(DomainError):
            trace_level_set(-0.5, self.BBOX, 0.1)
        with pytest.raises(DomainError):
            trace_level_set(0.5, (1.0, 1.0, -1.0, 1.0), 0.1)


class TestCurvePointInvariants:
    def test_rejects_points_outside_the_domain(self):
        with pytest.raises(FreeNormalError):
            CurvePoint(x=1.0, g=3.0, h=2.0, residual=0.0)  # g*h > pi/2

    def test_rejects_nonpositive_coordinates(self):
        with pytest.raises(FreeNormalError):
            CurvePoint(x=1.0, g=-1.0, h=0.5, residual=0.0)
