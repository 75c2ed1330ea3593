"""Overflow-safe complex numbers as mantissa times ``exp(log_scale)``.

The continued Cauchy transform grows like ``exp(|z|^2/2)`` deep in the lower
half plane, which leaves binary64 range around ``|z| ~ 38``.  A
:class:`ScaledComplex` stores ``value = mantissa * exp(log_scale)`` with the
mantissa kept in the annulus ``0.5 <= |m| < 2`` (or exactly 0), so magnitude
lives in the float ``log_scale`` and precision in the float components of the
mantissa.

Multiplication and division renormalize the mantissa; addition aligns the two
scales and flushes the smaller summand when the scales differ by more than
``FLUSH_LOG_GAP`` in natural log, because past that point the summand cannot
influence any mantissa bit.  A consequence worth knowing: one value carries one
scale, so a component (real or imaginary part) smaller than the other by more
than the flush window is represented as zero.

Instances are immutable and cheap; arithmetic never raises on magnitude alone.
"""

from __future__ import annotations

import cmath
import math

from .config import DEFAULT_CONFIG

__all__ = ["ScaledComplex", "FLUSH_LOG_GAP"]

FLUSH_LOG_GAP = DEFAULT_CONFIG.flush_log_gap

_MANT_LO = DEFAULT_CONFIG.mantissa_lo
_MANT_HI = DEFAULT_CONFIG.mantissa_hi


class ScaledComplex:
    """Complex value ``mantissa * exp(log_scale)`` with ``|mantissa|`` in [0.5, 2).

    Parameters
    ----------
    mantissa : complex
    log_scale : float
        Natural-log scale factor.  The constructor renormalizes, so any
        ``(mantissa, log_scale)`` pair with finite entries is accepted.
    """

    __slots__ = ("mantissa", "log_scale")

    def __init__(self, mantissa: complex, log_scale: float = 0.0):
        m = complex(mantissa)
        s = float(log_scale)
        a = abs(m)
        if a == 0.0:
            m, s = 0j, 0.0
        elif not (_MANT_LO <= a < _MANT_HI):
            d = math.log(a)
            m /= cmath.exp(complex(d, 0.0))
            s += d
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "log_scale", s)

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("ScaledComplex is immutable")

    # ---- constructors ----

    @classmethod
    def from_complex(cls, value: complex) -> "ScaledComplex":
        return cls(value, 0.0)

    @classmethod
    def exp_of(cls, w: complex) -> "ScaledComplex":
        """``exp(w)`` for arbitrary complex ``w``, never overflowing.

        Exact by construction: the phase goes into the mantissa, the real part
        into the scale.
        """
        w = complex(w)
        return cls(cmath.exp(complex(0.0, w.imag)), w.real)

    # ---- queries ----

    @property
    def is_zero(self) -> bool:
        return self.mantissa == 0

    def log_abs(self) -> float:
        """Natural log of the magnitude (``-inf`` for zero)."""
        if self.is_zero:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.log_scale

    def arg(self) -> float:
        return cmath.phase(self.mantissa)

    def to_complex(self) -> complex:
        """Plain complex value.

        Raises
        ------
        OverflowError
            If the magnitude exceeds binary64 range.  Underflow is silent
            (returns 0, like float arithmetic).
        """
        if self.is_zero:
            return 0j
        if self.log_scale > 709.0:
            raise OverflowError(
                f"scaled value ~exp({self.log_abs():.6g}) exceeds binary64 range"
            )
        if self.log_scale < -745.0:
            return 0j
        return self.mantissa * math.exp(self.log_scale)

    def __complex__(self) -> complex:
        return self.to_complex()

    # ---- arithmetic ----

    def _coerce(self, other) -> "ScaledComplex":
        if isinstance(other, ScaledComplex):
            return other
        if isinstance(other, (int, float, complex)):
            return ScaledComplex(other, 0.0)
        return NotImplemented

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.is_zero or o.is_zero:
            return _ZERO
        return ScaledComplex(self.mantissa * o.mantissa, self.log_scale + o.log_scale)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero:
            raise ZeroDivisionError("ScaledComplex division by zero")
        if self.is_zero:
            return _ZERO
        return ScaledComplex(self.mantissa / o.mantissa, self.log_scale - o.log_scale)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def reciprocal(self) -> "ScaledComplex":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero ScaledComplex")
        return ScaledComplex(1.0 / self.mantissa, -self.log_scale)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        hi, lo = (self, o) if self.log_scale >= o.log_scale else (o, self)
        gap = hi.log_scale - lo.log_scale
        if gap > FLUSH_LOG_GAP:
            return hi
        return ScaledComplex(hi.mantissa + lo.mantissa * math.exp(-gap), hi.log_scale)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return ScaledComplex(-self.mantissa, self.log_scale)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def conjugate(self) -> "ScaledComplex":
        if self.is_zero:
            return self
        return ScaledComplex(self.mantissa.conjugate(), self.log_scale)

    def __abs__(self) -> float:
        """Magnitude as a plain float; inf on overflow, 0 on underflow."""
        la = self.log_abs()
        if la > 709.0:
            return math.inf
        if la == -math.inf or la < -745.0:
            return 0.0
        return math.exp(la)

    # ---- misc ----

    def __repr__(self) -> str:
        return f"ScaledComplex({self.mantissa!r}, log_scale={self.log_scale!r})"

    def isclose(self, other, rel_tol: float = 1e-12) -> bool:
        """Relative closeness that works at any scale."""
        o = self._coerce(other)
        if self.is_zero or o.is_zero:
            return self.is_zero and o.is_zero
        gap = self.log_scale - o.log_scale
        if abs(gap) > 1.0:  # > e apart: cannot be close at sane rel_tol
            return False
        return abs(self.mantissa - o.mantissa * math.exp(-gap)) <= rel_tol * abs(
            self.mantissa
        )


_ZERO = ScaledComplex(0j, 0.0)
