"""Finite-field character sums and numeric cyclotomic recognition.

Sites are degree-one primes p = 1 (mod N), so the residue field is the
prime field and the trace is the identity.  The multiplicative character
attached to a residue j/N sends the canonical generator g**((p-1)/N) of
the N-torsion to exp(2 pi i / N); any other choice is a conjugate and is
covered by the unit-group action on exponent words.

Recognition of values in the ring of integers of the N-th cyclotomic
field works on the real-embedding lattice: scaled real/imaginary parts
are appended to an identity block, the basis is LLL-reduced exactly over
the rationals, and a nearest-plane walk rounds the target; the candidate
is accepted only after high-precision re-evaluation against the stated
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from mpmath import mp, mpf

from .errors import DomainError, NotInC, SearchExhausted
from .gammawords import GammaWord, classify
from .specialfn import PrecisionContext


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _least_primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    g = 2
    while g < p:
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
        g += 1
    raise AssertionError(f"no primitive root found mod {p}")


@dataclass(frozen=True)
class PrimeSite:
    """Degree-one prime for modulus N: p = 1 (mod N), coprime to 2N,
    together with the least primitive root mod p."""

    modulus: int
    p: int
    generator: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {self.modulus}")
        if (self.p - 1) % self.modulus != 0:
            raise DomainError(f"{self.p} is not 1 mod {self.modulus}")
        if gcd(self.p, 2 * self.modulus) != 1:
            raise DomainError(f"{self.p} divides twice the modulus")
        if not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")


def find_site(modulus: int, p_min: int = 2, cap: int = 10_000_000) -> PrimeSite:
    """Smallest admissible prime site with p >= p_min."""
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    start = max(p_min, 3)
    candidate = start + ((1 - start) % modulus)  # first value = 1 mod modulus
    if candidate < start:
        candidate += modulus
    while candidate <= cap:
        if _is_prime(candidate) and gcd(candidate, 2 * modulus) == 1:
            return PrimeSite(modulus, candidate, _least_primitive_root(candidate))
        candidate += modulus
    raise SearchExhausted(f"no prime = 1 mod {modulus} in [{p_min}, {cap}]")


def site_for_prime(modulus: int, p: int) -> PrimeSite:
    """Site at an explicitly chosen prime."""
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")
    if (p - 1) % modulus != 0:
        raise DomainError(f"{p} is not 1 mod {modulus}")
    return PrimeSite(modulus, p, _least_primitive_root(p))


@dataclass(frozen=True)
class CharacterSum:
    """A complex character-sum value together with its defining data."""

    value: object
    site: PrimeSite
    word: GammaWord | None = None
    residue: Fraction | None = None


def _residue_index(a, modulus: int) -> int:
    if isinstance(a, Fraction):
        if modulus % a.denominator != 0:
            raise DomainError(f"residue {a} does not live mod {modulus}")
        j = int(a * modulus) % modulus
    else:
        j = int(a) % modulus
    if j == 0:
        raise DomainError("residue must be nonzero")
    return j


def gauss_sum(a, site: PrimeSite, ctx: PrecisionContext,
              additive_scale: int = 1) -> CharacterSum:
    """Negated full character sum for the residue a = j/N at the site.

    ``additive_scale`` replaces the standard additive character x -> e(x/p)
    by x -> e(c x / p); used to check that normalized word sums do not
    depend on this choice.
    """
    n, p, g = site.modulus, site.p, site.generator
    j = _residue_index(a, n)
    if additive_scale % p == 0:
        raise DomainError("additive character scale must be nonzero mod p")
    with ctx.working():
        zeta_n = [mp.expjpi(mpf(2 * k) / n) for k in range(n)]
        zeta_p = [mp.expjpi(mpf(2 * k) / p) for k in range(p)]
        total = mp.mpc(0)
        x = 1
        for m in range(p - 1):
            total += zeta_n[(j * m) % n] * zeta_p[(additive_scale * x) % p]
            x = (x * g) % p
        return CharacterSum(value=-total, site=site, residue=Fraction(j, n))


def jacobi_sum(f: GammaWord, site: PrimeSite, ctx: PrecisionContext,
               additive_scale: int = 1) -> CharacterSum:
    """Product over the word's support of gauss sums raised to the exponents."""
    if f.modulus != site.modulus:
        raise DomainError(f"word modulus {f.modulus} != site modulus {site.modulus}")
    with ctx.working():
        total = mp.mpc(1)
        for j, c in f.coeffs:
            g = gauss_sum(j, site, ctx, additive_scale=additive_scale).value
            total *= g ** c
        return CharacterSum(value=total, site=site, word=f)


def hecke_value(f: GammaWord, site: PrimeSite, ctx: PrecisionContext,
                additive_scale: int = 1):
    """p**(-k) times the word's character-sum product; unit modulus for
    member words.  Raises NotInC when the word fails membership."""
    verdict = classify(f)
    if not verdict.in_C:
        raise NotInC(f"word {f} fails membership (witness {verdict.witness})")
    with ctx.working():
        j = jacobi_sum(f, site, ctx, additive_scale=additive_scale).value
        return mpf(site.p) ** (-verdict.k) * j


def psi_order(f: GammaWord, site: PrimeSite, ctx: PrecisionContext,
              bound: int | None = None) -> int | None:
    """Least m <= bound with (normalized word sum)**m = 1 to precision,
    or None when no such m is found.  Default bound is 4 N**2."""
    n = site.modulus
    if bound is None:
        bound = 4 * n * n
    with ctx.working():
        psi = hecke_value(f, site, ctx)
        tol = mpf(10) ** (20 - ctx.digits)
        power = mp.mpc(1)
        for m in range(1, bound + 1):
            power *= psi
            if abs(power - 1) < tol:
                return m
    return None


# ---------------------------------------------------------------------------
# Exact lattice reduction for cyclotomic recognition.

def _gram_schmidt(basis: list[list[Fraction]]):
    k = len(basis)
    mu = [[Fraction(0)] * k for _ in range(k)]
    star: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for i in range(k):
        vec = list(basis[i])
        for j in range(i):
            if norms[j] == 0:
                continue
            mu[i][j] = _dot(basis[i], star[j]) / norms[j]
            vec = [a - mu[i][j] * b for a, b in zip(vec, star[j])]
        star.append(vec)
        norms.append(_dot(vec, vec))
    return mu, star, norms


def _dot(u, v) -> Fraction:
    return sum(a * b for a, b in zip(u, v))


def _lll_reduce(rows: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[Fraction]]:
    basis = [[Fraction(x) for x in row] for row in rows]
    k = len(basis)
    mu, _, norms = _gram_schmidt(basis)
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                basis[i] = [a - q * b for a, b in zip(basis[i], basis[j])]
                mu, _, norms = _gram_schmidt(basis)
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            basis[i], basis[i - 1] = basis[i - 1], basis[i]
            mu, _, norms = _gram_schmidt(basis)
            i = max(i - 1, 1)
    return basis


def _babai_nearest(basis: list[list[Fraction]], target: list[Fraction]) -> list[Fraction]:
    """Nearest-plane rounding of the target onto the lattice."""
    mu, star, norms = _gram_schmidt(basis)
    residue = list(target)
    combo = [Fraction(0)] * len(basis[0])
    for i in range(len(basis) - 1, -1, -1):
        if norms[i] == 0:
            continue
        c = round(_dot(residue, star[i]) / norms[i])
        if c:
            residue = [a - c * b for a, b in zip(residue, basis[i])]
            combo = [a + c * b for a, b in zip(combo, basis[i])]
    return combo


def _euler_phi(n: int) -> int:
    out = n
    for q in _prime_factors(n):
        out -= out // q
    return out


@lru_cache(maxsize=None)
def _zeta_powers(n: int, digits: int):
    ctx = PrecisionContext(digits)
    with ctx.working():
        return tuple(mp.expjpi(mpf(2 * j) / n) for j in range(n))


def recognize_cyclotomic(z, modulus: int, max_coeff: int = 1000, tol=None,
                         ctx: PrecisionContext | None = None):
    """Integer coordinates of z over the power basis of the N-th cyclotomic
    integers, or None.

    The candidate comes from exact LLL plus nearest-plane rounding on the
    scaled real-embedding lattice; acceptance requires the re-evaluated
    combination to fall within ``tol`` of z and all coordinates to stay
    within ``max_coeff``.
    """
    ctx = ctx or PrecisionContext()
    with ctx.working():
        tol = mpf(10) ** (-20) if tol is None else mpf(tol)
        phi = _euler_phi(modulus)
        zetas = _zeta_powers(modulus, ctx.digits)[:phi]
        scale = mpf(10) ** (ctx.digits - 2)

        def scaled(x) -> int:
            return int(mp.nint(x * scale))

        rows = []
        for j in range(phi):
            unit = [1 if t == j else 0 for t in range(phi)]
            rows.append(unit + [scaled(zetas[j].real), scaled(zetas[j].imag)])
        target = [Fraction(0)] * phi + [Fraction(scaled(mp.mpc(z).real)),
                                        Fraction(scaled(mp.mpc(z).imag))]

        reduced = _lll_reduce(rows)
        combo = _babai_nearest(reduced, target)
        if any(c.denominator != 1 for c in combo[:phi]):
            return None
        coeffs = [int(c) for c in combo[:phi]]
        if coeffs and max(abs(c) for c in coeffs) > max_coeff:
            return None
        recombined = sum(c * zetas[j] for j, c in enumerate(coeffs))
        if abs(mp.mpc(z) - recombined) < tol:
            return tuple(coeffs)
        return None
