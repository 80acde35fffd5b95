"""Perron-Frobenius machinery and the main verifiers.

Three independent routes to the same positive vector are cross-checked:

* power iteration on the (shifted) incidence operator of the diagram,
* the classical closed-form mass vectors, type by type,
* the Gamma-product vector evaluated from the exponent words.

The affine verifier compares the reflection-ratio vector against the
comarks rescaled by the mark-power product k(R)**(-1/h).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from mpmath import mp, mpf

from .errors import NoConvergence
from .gammawords import (classify, evaluate, evaluate_gamma_ratio,
                         evaluate_sine_product, pairing_height_sum, tilde,
                         word_of_root_system)
from .reports import VerificationReport
from .rootkit import RootSystem
from .specialfn import PrecisionContext, pow_rat

SIMPLY_LACED = "ADE"


def lambda_min(rs: RootSystem, ctx: PrecisionContext):
    """Smallest Cartan eigenvalue, 4*sin(pi/2h)**2."""
    with ctx.working():
        return 4 * mp.sinpi(mpf(1) / (2 * rs.h)) ** 2


def incidence_max_eigenvalue(rs: RootSystem, ctx: PrecisionContext):
    """Largest eigenvalue of I - A/2: (2 - lambda_min)/2, i.e. cos(pi/h)."""
    with ctx.working():
        return (2 - lambda_min(rs, ctx)) / 2


@dataclass(frozen=True)
class EigenResult:
    """Positive eigen-pair of a Cartan matrix, last coordinate scaled to 1."""

    eigenvalue: object
    vector: tuple
    iterations: int
    residual: object


def _matvec(a, v):
    return [sum(aij * vj for aij, vj in zip(row, v) if aij) for row in a]


def pf_power_iteration(cartan, ctx: PrecisionContext, tol=None,
                       max_iterations: int = 200_000) -> EigenResult:
    """Strictly positive eigenvector of an irreducible Cartan matrix.

    Iterates the nonnegative operator 2I - A/2 from the all-ones vector.
    (The bare incidence operator I - A/2 of a diagram is bipartite, so its
    spectrum is symmetric and unshifted iteration cannot settle; adding I
    makes the dominant eigenvalue unique without moving the eigenvectors.)
    After the successive-iterate test passes, iteration continues until the
    geometric error estimate drops below tol, so the returned vector is
    accurate to tol, not merely Cauchy at tol.
    """
    with ctx.working():
        if tol is None:
            tol = mpf(10) ** (5 - ctx.digits)
        else:
            tol = mpf(tol)
        n = len(cartan)
        shifted = [[2 * (1 if i == j else 0) - mpf(cartan[i][j]) / 2 for j in range(n)]
                   for i in range(n)]
        if n == 1:
            lam = mpf(cartan[0][0])
            return EigenResult(eigenvalue=lam, vector=(mpf(1),), iterations=0,
                               residual=mpf(0))

        v = [mpf(1)] * n
        diff = mpf(1)
        ratio = mpf("0.5")
        iterations = 0
        met_cauchy = False
        while iterations < max_iterations:
            w = _matvec(shifted, v)
            scale = w[-1]
            if scale <= 0:
                raise NoConvergence("iterate left the positive cone")
            w = [wi / scale for wi in w]
            prev_diff = diff
            diff = max(abs(a - b) for a, b in zip(w, v))
            v = w
            iterations += 1
            if prev_diff > 0:
                ratio = min(max(diff / prev_diff, mpf("0.01")), mpf("0.999999"))
            if diff < tol:
                met_cauchy = True
                # Error behind the Cauchy increment is ~ diff * ratio/(1-ratio).
                if diff * ratio / (1 - ratio) < tol / 2:
                    break
        if not met_cauchy:
            raise NoConvergence(f"power iteration did not reach {tol} "
                                f"in {max_iterations} iterations")

        shifted_eig = _matvec(shifted, v)[-1]
        lam = 4 - 2 * shifted_eig
        av = _matvec([[mpf(c) for c in row] for row in cartan], v)
        residual = max(abs(ai - lam * vi) for ai, vi in zip(av, v))
        return EigenResult(eigenvalue=lam, vector=tuple(v),
                           iterations=iterations, residual=residual)


def deflated_second_eigenvalue(cartan, result: EigenResult, ctx: PrecisionContext,
                               steps: int = 200):
    """Dominant growth rate of the shifted operator 2I - A/2 after projecting
    out the positive eigen-pair.

    A strictly smaller value than 2 - eigenvalue/2 certifies that the
    dominant eigenvalue of the shifted operator is simple, hence that the
    positive eigenvector is unique up to scale.
    """
    with ctx.working():
        n = len(cartan)
        if n == 1:
            return mpf(0)
        shifted = [[2 * (1 if i == j else 0) - mpf(cartan[i][j]) / 2 for j in range(n)]
                   for i in range(n)]
        v = list(result.vector)
        # Left eigenvector: D v with D_ii = (a_i|a_i), recovered from the
        # Cartan asymmetry A_ij / A_ji = (a_j|a_j)/(a_i|a_i) along the diagram.
        d = [mpf(1)] * n
        settled = {0}
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in range(n):
                    if i in settled and j not in settled and cartan[i][j] != 0:
                        d[j] = d[i] * mpf(cartan[j][i]) / mpf(cartan[i][j])
                        settled.add(j)
                        changed = True
        left = [d[i] * v[i] for i in range(n)]
        lv = sum(li * vi for li, vi in zip(left, v))

        def deflate(w):
            coeff = sum(li * wi for li, wi in zip(left, w)) / lv
            return [wi - coeff * vi for wi, vi in zip(w, v)]

        w = deflate([mpf(1 + (i % 3)) for i in range(n)])
        growth = mpf(0)
        for _ in range(steps):
            w2 = deflate(_matvec(shifted, w))
            norm_prev = max(abs(x) for x in w)
            norm_next = max(abs(x) for x in w2)
            if norm_next == 0:
                return mpf(0)
            growth = norm_next / norm_prev
            w = [x / norm_next for x in w2]
        return growth


@lru_cache(maxsize=None)
def mass_vector_closed_form(rs: RootSystem, ctx: PrecisionContext) -> tuple:
    """Classical closed-form positive eigenvector, in plate node order.

    For the two classical families with a short/long fork the customary
    normalization carries a factor 2 on the sine coordinates and value 1 on
    the terminal node(s).
    """
    fam, n = rs.label.family, rs.rank
    with ctx.working():
        def sp(num, den):
            return mp.sinpi(mpf(num) / den)

        def cp(num, den):
            return mp.cospi(mpf(num) / den)

        if fam == "A":
            v = [sp(a, n + 1) for a in range(1, n + 1)]
        elif fam == "B":
            v = [2 * sp(a, 2 * n) for a in range(1, n)] + [mpf(1)]
        elif fam == "C":
            v = [sp(a, 2 * n) for a in range(1, n + 1)]
        elif fam == "D":
            v = [2 * sp(a, 2 * n - 2) for a in range(1, n - 1)] + [mpf(1), mpf(1)]
        elif fam == "G":
            v = [mpf(1), mp.sqrt(3)]
        elif fam == "F":
            s3 = mp.sqrt(3)
            v = [mp.sqrt(2), s3 + 1, (s3 + 1) / mp.sqrt(2), mpf(1)]
        elif fam == "E" and n == 6:
            s3 = mp.sqrt(3)
            v = [mpf(1), mp.sqrt(2), (s3 + 1) / mp.sqrt(2), s3 + 1,
                 (s3 + 1) / mp.sqrt(2), mpf(1)]
        elif fam == "E" and n == 7:
            v = [2 * cp(5, 18), 2 * cp(1, 9), 4 * cp(1, 18) * cp(5, 18),
                 4 * cp(1, 18) * cp(1, 9), 4 * cp(1, 9) * cp(2, 9),
                 2 * cp(1, 18), mpf(1)]
        else:  # E8
            v = [2 * cp(1, 5), 4 * cp(1, 5) * cp(7, 30), 4 * cp(1, 5) * cp(1, 30),
                 8 * cp(1, 5) ** 2 * cp(2, 15), 8 * cp(1, 5) ** 2 * cp(7, 30),
                 4 * cp(1, 5) * cp(2, 15), 2 * cp(1, 30), mpf(1)]
        return tuple(v)


@lru_cache(maxsize=None)
def gamma_vector(rs: RootSystem, ctx: PrecisionContext) -> tuple:
    """Gamma-product value of every simple index's exponent word."""
    return tuple(evaluate(word_of_root_system(rs, i), ctx)
                 for i in range(1, rs.rank + 1))


@lru_cache(maxsize=None)
def gamma_ratio_profile(rs: RootSystem, ctx: PrecisionContext):
    """Exact algebraic constant c and coordinate profile so that
    pi * (Gamma vector) = c * profile, per the per-type closed forms.

    For the B and D families the customary mass vector is twice this
    profile (its sine coordinates appear without the factor 2 and the
    terminal coordinates as 1/2), so c differs from pi*Gamma_i/mass_i by
    that global factor 2.
    """
    fam, n = rs.label.family, rs.rank
    with ctx.working():
        def sp(num, den):
            return mp.sinpi(mpf(num) / den)

        masses = mass_vector_closed_form(rs, ctx)
        if fam == "A":
            return mpf(1), masses
        if fam == "C":
            return mpf(1), masses
        if fam == "B":
            profile = tuple([sp(a, 2 * n) for a in range(1, n)] + [mpf(1) / 2])
            return pow_rat(2, Q(1, n), ctx), profile
        if fam == "D":
            profile = tuple([sp(a, 2 * n - 2) for a in range(1, n - 1)]
                            + [mpf(1) / 2, mpf(1) / 2])
            return pow_rat(2, Q(1, n - 1), ctx), profile
        if fam == "G":
            return pow_rat(2, Q(-2, 3), ctx), masses
        if fam == "F":
            c = (pow_rat(2, Q(-5, 4), ctx) * pow_rat(3, Q(1, 8), ctx)
                 * pow_rat(mp.sqrt(3) - 1, Q(1, 2), ctx))
            return c, masses
        if fam == "E" and n == 6:
            # Same constant as F4: the terminal values of the two systems agree.
            c = (pow_rat(2, Q(-5, 4), ctx) * pow_rat(3, Q(1, 8), ctx)
                 * pow_rat(mp.sqrt(3) - 1, Q(1, 2), ctx))
            return c, masses
        if fam == "E" and n == 7:
            c = pow_rat(2, Q(1, 9), ctx) * pow_rat(3, Q(-1, 6), ctx) * sp(1, 9)
            return c, masses
        # E8: no standalone closed form is quoted for the constant; derive it
        # from the square identity Gamma(f)^2 = (sine product) * (ratio product)
        # using the exact ratio value 2**(17/15) 3**(-2/5) 5**(-1/6) at the
        # terminal node.  Both factors are algebraic, so c stays algebraic.
        f_last = word_of_root_system(rs, 8)
        s_prod = evaluate_sine_product(f_last, ctx)
        ratio = (pow_rat(2, Q(2, 15), ctx) * pow_rat(3, Q(-2, 5), ctx)
                 * pow_rat(5, Q(-1, 6), ctx))
        c = mp.sqrt(mp.pi ** 2 * s_prod * ratio)
        return c, masses


def mark_power_product(rs: RootSystem) -> int:
    """k(R): product over finite nodes of comark**mark, an exact integer."""
    out = 1
    for mark, comark in zip(rs.marks[1:], rs.comarks[1:]):
        out *= comark ** mark
    return out


@lru_cache(maxsize=None)
def affine_gamma_vector(rs: RootSystem, ctx: PrecisionContext) -> tuple:
    """Reflection-ratio vector over all r+1 affine nodes.

    Finite entries are ratio products of the exponent words; the affine
    entry is the product of the finite entries raised to minus the marks
    (the affine root is minus the mark-weighted sum of the simple ones).
    """
    with ctx.working():
        finite = [evaluate_gamma_ratio(word_of_root_system(rs, i), ctx)
                  for i in range(1, rs.rank + 1)]
        log0 = -sum(rs.marks[i] * mp.log(v) for i, v in enumerate(finite, start=1))
        return (mp.exp(log0),) + tuple(finite)


def verify_pf_eigenvector(rs: RootSystem, ctx: PrecisionContext, tol) -> VerificationReport:
    """Check that the Gamma vector is the positive Cartan eigenvector.

    Residuals: (a) row-wise eigen-equation at the closed-form eigenvalue,
    (b) ratio spread against the closed-form masses, (c) the exact
    algebraic constant in pi * Gamma_i = c * profile_i.
    """
    with ctx.working():
        tol = mpf(tol)
        g = gamma_vector(rs, ctx)
        lam = lambda_min(rs, ctx)
        labels = []
        residuals = []
        for i, row in enumerate(rs.cartan):
            av = sum(mpf(c) * g[j] for j, c in enumerate(row) if c)
            labels.append(f"eigen_row_{i + 1}")
            residuals.append(abs(av - lam * g[i]))
        masses = mass_vector_closed_form(rs, ctx)
        base = g[-1] / masses[-1]
        for i in range(rs.rank - 1):
            labels.append(f"ratio_node_{i + 1}")
            residuals.append(abs(g[i] / masses[i] - base))
        constant, profile = gamma_ratio_profile(rs, ctx)
        for i in range(rs.rank):
            labels.append(f"constant_node_{i + 1}")
            residuals.append(abs(mp.pi * g[i] - constant * profile[i]))
    return VerificationReport(theorem="1.1", system=str(rs.label),
                              residuals=tuple(residuals), tolerance=tol,
                              labels=tuple(labels))


def verify_affine_masses(rs: RootSystem, ctx: PrecisionContext, tol) -> VerificationReport:
    """Check the affine ratio vector against k(R)**(-1/h) times the comarks."""
    with ctx.working():
        tol = mpf(tol)
        vec = affine_gamma_vector(rs, ctx)
        scale = pow_rat(mark_power_product(rs), Q(-1, rs.h), ctx)
        residuals = tuple(abs(v - scale * c) for v, c in zip(vec, rs.comarks))
        labels = tuple(f"node_{i}" for i in range(rs.rank + 1))
    theorem = "1.2" if rs.label.family in SIMPLY_LACED else "1.3"
    return VerificationReport(theorem=theorem, system=str(rs.label),
                              residuals=residuals, tolerance=tol, labels=labels)


def verify_membership(rs: RootSystem, tol) -> VerificationReport:
    """Exact check that every exponent word lands in the k = -1 class and
    every antisymmetrization in the k = 0 class.

    Residuals are 0 on success and 1 on failure; this check involves no
    floating point at all.
    """
    labels = []
    residuals = []
    for i in range(1, rs.rank + 1):
        w = word_of_root_system(rs, i)
        v = classify(w)
        vt = classify(tilde(w))
        labels.append(f"word_{i}")
        residuals.append(mpf(0) if (v.in_C and v.k == -1) else mpf(1))
        labels.append(f"tilde_{i}")
        residuals.append(mpf(0) if (vt.in_C and vt.k == 0) else mpf(1))
    return VerificationReport(theorem="4.2", system=str(rs.label),
                              residuals=tuple(residuals), tolerance=mpf(tol),
                              labels=tuple(labels))


def verify_pairing_sums(rs: RootSystem, tol) -> VerificationReport:
    """Exact check that the height-weighted coroot-pairing sum equals the
    Coxeter number at every simple index."""
    labels = tuple(f"index_{i}" for i in range(1, rs.rank + 1))
    residuals = tuple(mpf(abs(pairing_height_sum(rs, i) - rs.h))
                      for i in range(1, rs.rank + 1))
    return VerificationReport(theorem="4.4", system=str(rs.label),
                              residuals=residuals, tolerance=mpf(tol),
                              labels=labels)
