"""Free Levy measure of the standard normal law, and its consistency checks.

The measure splits as ``nu(dx) = h(|x|)/(pi x^2) dx`` off the origin, where
``h`` is the boundary-curve height.  The companion finite measure ``tau``
from the Pick-Nevanlinna representation of the shifted inverse transform

    phi(w) = f_tilde^{-1}(w) - w = b + integral (1 + w x)/(w - x) tau(dx)

has density ``h(|x|)/(pi (1 + x^2))``; symmetry forces ``b = 0`` and the
atom at the origin (the semicircular component) vanishes.  Two facts make
cheap cross-checks possible: ``Im phi(i) = -tau(R)`` ties the quadrature of
the density to a single Newton solve, and ``tau({0}) = lim T |f_tilde(-iT)| T``
is explicitly ``~ T exp(-T^2/2)/sqrt(2 pi)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy.integrate import IntegrationWarning, quad

from .config import DEFAULT_CONFIG, EvalConfig
from .curve import in_omega, solve_H
from .errors import DomainError, NoConvergence, QuadratureFailure
from .series import eval_h_asym_infinity
from .transforms import DomainTag, classify_domain, f_tilde, f_tilde_prime

__all__ = [
    "LevySample",
    "TauSample",
    "levy_density",
    "voiculescu",
    "tau_total_mass",
    "semicircular_component_check",
]

_PI = math.pi


@dataclass(frozen=True)
class LevySample:
    """Density sample ``h(|x|)/(pi x^2)`` of the free Levy measure."""

    x: float
    density: float

    def __post_init__(self) -> None:
        if self.x == 0.0 or not self.density > 0.0:
            raise DomainError(
                f"Levy samples live off the origin with positive density, "
                f"got x = {self.x}, density = {self.density}"
            )


@dataclass(frozen=True)
class TauSample:
    """Density sample ``h(|x|)/(pi (1 + x^2))`` of the finite measure tau."""

    x: float
    tau_density: float

    def __post_init__(self) -> None:
        if self.x == 0.0 or not self.tau_density > 0.0:
            raise DomainError(
                f"tau samples live off the origin with positive density, "
                f"got x = {self.x}, tau_density = {self.tau_density}"
            )


def levy_density(x: float, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """``h(|x|) / (pi x^2)``, the free Levy density; even and positive."""
    x = float(x)
    if x == 0.0:
        raise DomainError("the free Levy density lives on nonzero x")
    pt = solve_H(abs(x), config)
    return pt.h / (_PI * x * x)


def voiculescu(w: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """``phi(w) = f_tilde^{-1}(w) - w`` on the closed upper half plane off 0.

    Real ``w`` uses the boundary parametrization
    ``f_tilde^{-1}(x) = sign(x) g(|x|) - i h(|x|)`` directly; upper-half-plane
    ``w`` runs a Newton iteration from the two-term large-argument seed
    ``w + 1/w`` (falling back to ``w``), confined to the certified region,
    and verifies the solution landed in the bijectivity domain.
    """
    w = complex(w)
    if w == 0:
        raise DomainError("the shifted inverse transform has a pole at w = 0")
    if w.imag < 0.0:
        raise DomainError(f"defined on the closed upper half plane, got {w!r}")
    if w.imag == 0.0:
        pt = solve_H(abs(w.real), config)
        return complex(math.copysign(pt.g, w.real) - w.real, -pt.h)

    def newton_from(z0: complex) -> complex | None:
        z = z0
        for _ in range(60):
            r = complex(f_tilde(z, config)) - w
            if abs(r) <= 1e-12 * max(1.0, abs(w)):
                return z
            dz = -r / complex(f_tilde_prime(z, config))
            # damped, staying inside the pole-free region
            for m in range(9):
                cand = z + dz * (0.5**m)
                if classify_domain(cand, config) is not DomainTag.OUTSIDE_XI:
                    z = cand
                    break
            else:
                return None
        return None

    z = newton_from(w + 1.0 / w)
    if z is None:
        z = newton_from(w)
    if z is None:
        raise NoConvergence(f"inversion of f_tilde at w = {w!r} failed")
    if not in_omega(z, config):
        raise NoConvergence(
            f"inversion at w = {w!r} converged outside the bijectivity domain",
            last_iterate=z,
        )
    return z - w


def tau_total_mass(
    quad_tol: float, config: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Total mass of ``tau`` by quadrature of ``h(|x|)/(pi (1 + x^2))``.

    The positive half line splits at the curve solver's regime thresholds:

    * ``(0, x_lo]`` under ``x = exp(-u)``, where the integrand inherits the
      ``sqrt(2 log 1/x)`` growth of ``h`` and decays like ``exp(-u) sqrt(u)``;
    * ``[x_lo, x_hi]`` directly against solver values;
    * ``[x_hi, oo)`` against the large-x series for ``h``, whose Gaussian
      factor makes everything beyond ``x = 40`` vanish under binary64.

    The result is doubled by symmetry.  Raises ``QuadratureFailure`` when the
    combined error estimate exceeds ``quad_tol``.
    """
    if not quad_tol > 0:
        raise DomainError(f"need a positive tolerance, got {quad_tol}")

    def body(x: float) -> float:
        return solve_H(x, config).h / (_PI * (1.0 + x * x))

    def small(u: float) -> float:
        x = math.exp(-u)
        return solve_H(x, config).h * x / (_PI * (1.0 + x * x))

    def tail(x: float) -> float:
        h = eval_h_asym_infinity(x, 3).to_complex().real
        return h / (_PI * (1.0 + x * x))

    u_lo = -math.log(config.x_lo)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        v1, e1 = quad(small, u_lo, 60.0, epsabs=quad_tol / 8, epsrel=1e-12, limit=300)
        v2, e2 = quad(
            body, config.x_lo, config.x_hi, epsabs=quad_tol / 8, epsrel=1e-12,
            limit=300,
        )
        v3, e3 = quad(tail, config.x_hi, 40.0, epsabs=quad_tol / 8, epsrel=1e-12,
                      limit=300)
    err = e1 + e2 + e3
    if err > quad_tol:
        raise QuadratureFailure(
            f"error estimate {err:.3g} exceeds requested {quad_tol}"
        )
    return 2.0 * (v1 + v2 + v3)


def semicircular_component_check(
    T: float, config: EvalConfig = DEFAULT_CONFIG
) -> float:
    """``|f_tilde(-iT) * T|``, the vanishing-atom witness at the origin.

    Decays like ``T exp(-T^2/2)/sqrt(2 pi)``; a nonvanishing limit would be
    the mass of a semicircular component.  Computed in scaled arithmetic, so
    very large ``T`` cleanly underflows to 0.0 rather than failing.
    """
    T = float(T)
    if T < 0:
        raise DomainError(f"need T >= 0, got {T}")
    if T == 0.0:
        return 0.0
    val = f_tilde(complex(0.0, -T), config) * T
    la = val.log_abs()
    if la < -745.0:
        return 0.0
    return abs(val.to_complex())
