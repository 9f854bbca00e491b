"""Exact arithmetic in the real quadratic field Q(sqrt(D)).

A value is stored as ``rational + surd * sqrt(D)`` with both parts exact
rationals and D a squarefree nonnegative integer.  Signs are decided by
integer comparisons of squared quantities, never by floating point, so
equality and order are exact.  D = 0 and D = 1 are folded into the rational
part on construction, which makes the representation canonical: a value is
rational if and only if its stored surd part is zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import ParseError

RationalLike = int | Fraction


def is_squarefree(d: int) -> bool:
    """True if no square > 1 divides d (0 and 1 count as squarefree)."""
    if d < 0:
        return False
    i = 2
    while i * i <= d:
        if d % (i * i) == 0:
            return False
        i += 1
    return True


@total_ordering
@dataclass(frozen=True)
class QuadExact:
    """An element of Q(sqrt(D)), exact and immutable."""

    rational: Fraction
    surd: Fraction
    radicand: int

    def __post_init__(self):
        rat = Fraction(self.rational)
        sur = Fraction(self.surd)
        rad = self.radicand
        if not isinstance(rad, int) or not is_squarefree(rad):
            raise ValueError(f"radicand must be a squarefree nonnegative integer, got {rad!r}")
        # sqrt(0) = 0 and sqrt(1) = 1 are rational: fold them away.
        if rad == 1:
            rat += sur
            sur = Fraction(0)
        if sur == 0:
            rad = 0
        elif rad == 0:
            sur = Fraction(0)
        object.__setattr__(self, "rational", rat)
        object.__setattr__(self, "surd", sur)
        object.__setattr__(self, "radicand", rad)

    # -- construction helpers ------------------------------------------

    @classmethod
    def of(cls, rational: RationalLike, surd: RationalLike = 0, radicand: int = 0) -> QuadExact:
        return cls(Fraction(rational), Fraction(surd), radicand)

    @classmethod
    def zero(cls) -> QuadExact:
        return cls(Fraction(0), Fraction(0), 0)

    @classmethod
    def one(cls) -> QuadExact:
        return cls(Fraction(1), Fraction(0), 0)

    # -- predicates ----------------------------------------------------

    def is_rational(self) -> bool:
        return self.surd == 0

    def __bool__(self) -> bool:
        return self.rational != 0 or self.surd != 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, via integer comparison of p^2 and q^2 D."""
        p, q = self.rational, self.surd
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # Opposite signs.  D >= 2 squarefree, so sqrt(D) is irrational and
        # p^2 = q^2 D is impossible with p, q nonzero.
        if (p * p > q * q * self.radicand) == (p > 0):
            return 1
        return -1

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> QuadExact | None:
        if isinstance(other, QuadExact):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExact.of(other)
        return None

    def _common_radicand(self, other: QuadExact) -> int:
        if self.surd == 0:
            return other.radicand
        if other.surd == 0 or other.radicand == self.radicand:
            return self.radicand
        raise ValueError(
            f"mixed radicands {self.radicand} and {other.radicand}; values must share one surd"
        )

    def __add__(self, other) -> QuadExact:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        rad = self._common_radicand(o)
        return QuadExact(self.rational + o.rational, self.surd + o.surd, rad)

    __radd__ = __add__

    def __neg__(self) -> QuadExact:
        return QuadExact(-self.rational, -self.surd, self.radicand)

    def __sub__(self, other) -> QuadExact:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadExact:
        return (-self) + other

    def __mul__(self, other) -> QuadExact:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        rad = self._common_radicand(o)
        return QuadExact(
            self.rational * o.rational + self.surd * o.surd * rad,
            self.rational * o.surd + self.surd * o.rational,
            rad,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> QuadExact:
        if not self:
            raise ZeroDivisionError("division by zero in Q(sqrt(D))")
        p, q, d = self.rational, self.surd, self.radicand
        norm = p * p - q * q * d
        # norm = 0 with (p, q) != 0 would force sqrt(D) rational; cannot happen.
        return QuadExact(p / norm, -q / norm, d)

    def __truediv__(self, other) -> QuadExact:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other) -> QuadExact:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (
            self.rational == o.rational
            and self.surd == o.surd
            and (self.surd == 0 or self.radicand == o.radicand)
        )

    def __hash__(self):
        return hash((self.rational, self.surd, self.radicand))

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    # -- rendering -----------------------------------------------------

    def __str__(self) -> str:
        return render_coefficient(self)

    def __repr__(self) -> str:
        if self.surd == 0:
            return f"QuadExact({self.rational})"
        return f"QuadExact({self.rational} + {self.surd}*sqrt({self.radicand}))"


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_coefficient(x: QuadExact) -> str:
    """Canonical exact string: ``p/q`` or ``p/q+r/s√`` (radicand implied)."""
    if x.surd == 0:
        return _frac_str(x.rational)
    sep = "-" if x.surd < 0 else "+"
    return f"{_frac_str(x.rational)}{sep}{_frac_str(abs(x.surd))}√"


_FRAC = r"\d+(?:/\d+)?"
# Three unambiguous forms: rational only, surd only, rational±surd.
_RAT_ONLY = re.compile(rf"^(?P<rat>[+-]?{_FRAC})$")
_SURD_ONLY = re.compile(rf"^(?P<sign>[+-])?(?P<coef>{_FRAC})?√(?P<rad>\d+)?$")
_COMBINED = re.compile(
    rf"^(?P<rat>[+-]?{_FRAC})(?P<sign>[+-])(?P<coef>{_FRAC})?√(?P<rad>\d+)?$"
)


def _parse_exact(text: str, radicand: int | None, want_inline_rad: bool) -> QuadExact:
    s = text.strip().replace(" ", "")
    m = _RAT_ONLY.match(s)
    if m:
        return QuadExact.of(Fraction(m.group("rat")))
    m = _SURD_ONLY.match(s) or _COMBINED.match(s)
    if not m:
        raise ParseError(f"cannot parse exact value {text!r}")
    groups = m.groupdict()
    rational = Fraction(groups.get("rat") or 0)
    coef = Fraction(m.group("coef") or 1)
    if m.group("sign") == "-":
        coef = -coef
    inline = m.group("rad")
    if want_inline_rad:
        if inline is None:
            raise ParseError(f"missing radicand after √ in {text!r}")
        rad = int(inline)
    else:
        if inline is not None:
            raise ParseError(
                f"unexpected inline radicand in {text!r}; the radicand is declared separately"
            )
        rad = radicand if radicand is not None else 0
    try:
        return QuadExact.of(rational, coef, rad)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_coefficient(text: str, radicand: int) -> QuadExact:
    """Parse ``"p/q"`` or ``"p/q±r/s√"`` against a declared radicand.

    Integers may omit the denominator; a bare ``√`` means coefficient 1.
    """
    return _parse_exact(text, radicand, want_inline_rad=False)


def parse_slope(text: str) -> QuadExact:
    """Parse a standalone exact value with an inline radicand, e.g. ``"2/3"``, ``"√2"``, ``"1/2+3/4√5"``."""
    return _parse_exact(text, None, want_inline_rad=True)
