from fractions import Fraction as Q

import pytest
from mpmath import mp, mpf

from cartan_gamma import (DomainError, QuadratureNotConverged, SelbergParams,
                          complex_parameter_grid, gamma, gamma_tilde,
                          real_parameter_grid, selberg_complex_closed,
                          selberg_complex_quadrature, selberg_real_closed,
                          selberg_real_quadrature)


def test_params_validation():
    with pytest.raises(DomainError):
        SelbergParams(1, 1, 0, 0)
    with pytest.raises(DomainError):
        selberg_real_closed(SelbergParams(-1, 1, 0, 1), None)
    with pytest.raises(DomainError):
        selberg_real_quadrature(SelbergParams(1, 1, 1, 3), None)
    with pytest.raises(DomainError):
        selberg_complex_quadrature(SelbergParams(Q(1, 2), Q(3, 4), 0, 1), None)


def test_real_closed_is_beta_at_n1(ctx):
    with ctx.working():
        for a, b in ((Q(1, 2), Q(1, 2)), (Q(3, 4), Q(3, 4)), (Q(1, 3), Q(1, 2))):
            value = selberg_real_closed(SelbergParams(a, b, 0, 1), ctx)
            beta = gamma(a, ctx) * gamma(b, ctx) / gamma(a + b, ctx)
            assert abs(value - beta) < ctx.tolerance * abs(beta)
        # independent of rho at n = 1
        v0 = selberg_real_closed(SelbergParams(Q(1, 3), Q(2, 3), 0, 1), ctx)
        v2 = selberg_real_closed(SelbergParams(Q(1, 3), Q(2, 3), 2, 1), ctx)
        assert abs(v0 - v2) < ctx.tolerance


def test_real_closed_elementary_double_integral(ctx):
    with ctx.working():
        value = selberg_real_closed(SelbergParams(1, 1, 1, 2), ctx)
        assert abs(value - mpf(1) / 6) < ctx.tolerance


def test_real_quadrature_matches_closed_form(ctx):
    with ctx.working():
        for params in real_parameter_grid():
            closed = selberg_real_closed(params, ctx)
            quadrature = selberg_real_quadrature(params, ctx)
            assert abs(quadrature - closed) < mpf(10) ** -8 * abs(closed), params
        # the polynomial case is exact to machine precision
        exact = selberg_real_quadrature(SelbergParams(2, 3, 1, 2), ctx)
        closed = selberg_real_closed(SelbergParams(2, 3, 1, 2), ctx)
        assert abs(exact - closed) < mpf(10) ** -10 * abs(closed)


def test_real_quadrature_convergence_guard(ctx):
    with pytest.raises(QuadratureNotConverged):
        selberg_real_quadrature(SelbergParams(Q(1, 2), Q(1, 2), Q(1, 2), 2),
                                ctx, nodes=2)


def test_complex_closed_n1(ctx):
    with ctx.working():
        p = SelbergParams(Q(1, 4), Q(1, 4), 0, 1)
        value = selberg_complex_closed(p, ctx)
        direct = mp.pi * gamma_tilde(Q(1, 4), ctx) ** 2 / gamma_tilde(Q(1, 2), ctx)
        assert abs(value - direct) < ctx.tolerance * abs(value)
        assert abs(gamma_tilde(Q(1, 2), ctx) - 1) < ctx.tolerance
        # swap symmetry
        v1 = selberg_complex_closed(SelbergParams(Q(1, 4), Q(1, 2), 0, 1), ctx)
        v2 = selberg_complex_closed(SelbergParams(Q(1, 2), Q(1, 4), 0, 1), ctx)
        assert abs(v1 - v2) < ctx.tolerance
        # rho cancels at n = 1
        v3 = selberg_complex_closed(SelbergParams(Q(1, 4), Q(1, 2), Q(1, 3), 1), ctx)
        assert abs(v1 - v3) < ctx.tolerance * abs(v1)


def test_complex_closed_integer_degenerations(ctx):
    with pytest.raises(DomainError):
        selberg_complex_closed(SelbergParams(-1, Q(1, 2), 0, 1), ctx)
    # a vanishing numerator factor zeroes the product
    assert selberg_complex_closed(SelbergParams(1, Q(1, 2), 0, 1), ctx) == 0


def test_complex_quadrature_two_points(ctx):
    with ctx.working():
        for params in complex_parameter_grid()[:2]:
            closed = selberg_complex_closed(params, ctx)
            quadrature = selberg_complex_quadrature(params, ctx)
            assert abs(quadrature - closed) < mpf(10) ** -6 * abs(closed)
        # swap symmetry of the numeric route
        qa = selberg_complex_quadrature(SelbergParams(Q(1, 4), Q(1, 2), 0, 1), ctx)
        qb = selberg_complex_quadrature(SelbergParams(Q(1, 2), Q(1, 4), 0, 1), ctx)
        assert abs(qa - qb) < 2 * mpf(10) ** -6 * abs(qa)


def test_closed_form_log_derivative_consistency(ctx):
    # central differences at two spacings agree: smoothness sanity only
    with ctx.working():
        def logv(a):
            return mp.log(selberg_real_closed(SelbergParams(a, Q(3, 4), Q(1, 2), 2), ctx))

        for h1, h2 in ((Q(1, 256), Q(1, 512)),):
            d1 = (logv(Q(1, 2) + h1) - logv(Q(1, 2) - h1)) / (2 * ctx.to_mpf(h1))
            d2 = (logv(Q(1, 2) + h2) - logv(Q(1, 2) - h2)) / (2 * ctx.to_mpf(h2))
            assert abs(d1 - d2) < mpf(10) ** -4
