"""Exact scalar and Laurent-polynomial arithmetic in a formal parameter t.

Three layers, all immutable and represented exactly:

  * scalars: ``Fraction`` for rationals, ``GaussianRational`` for a + b*i
    with rational a, b.  A Gaussian value whose imaginary part cancels is
    always demoted back to ``Fraction``, so equality across the union is
    plain structural equality;
  * ``TPoly``: Laurent polynomials in t, a finitely supported map from
    integer exponents to scalars with no stored zero coefficients;
  * ``RationalFunctionT``: quotients of Laurent polynomials kept in a
    canonical reduced form (gcd removed, denominator with order zero and
    leading coefficient one), with valuation and limit-at-zero support.

The textual grammars implemented by ``parse_scalar``/``format_scalar`` and
``parse_tpoly``/``format_tpoly`` round-trip bit-exactly:
``parse(format(x)) == x``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union


class Pole(ArithmeticError):
    """The limit at t -> 0 does not exist (negative valuation)."""

    def __init__(self, message: str = "pole at t = 0", position: tuple | None = None):
        super().__init__(message)
        self.position = position


class Singular(ArithmeticError):
    """A matrix that was required to be invertible is not."""


class GaussianRational:
    """A Gaussian rational a + b*i with Fraction parts and b != 0.

    Instances are only created through :func:`scalar`, which demotes
    pure-rational values to ``Fraction``; arithmetic methods do the same,
    so ``GaussianRational`` always has a nonzero imaginary part.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction, im: Fraction):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return False  # im != 0 by construction
        return NotImplemented

    def __bool__(self):
        return True

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return scalar(self.re + re, self.im + im)

    __radd__ = __add__

    def __sub__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return scalar(self.re - re, self.im - im)

    def __rsub__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return scalar(re - self.re, im - self.im)

    def __mul__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return scalar(self.re * re - self.im * im, self.re * im + self.im * re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        norm = re * re + im * im
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        return scalar((self.re * re + self.im * im) / norm,
                      (self.im * re - self.re * im) / norm)

    def __rtruediv__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        norm = self.re * self.re + self.im * self.im
        return scalar((re * self.re + im * self.im) / norm,
                      (im * self.re - re * self.im) / norm)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (Fraction(1) / self) ** (-exponent)
        result: Scalar = Fraction(1)
        base: Scalar = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)


Scalar = Union[Fraction, GaussianRational]


def _parts(x) -> tuple[Fraction | None, Fraction]:
    """Real and imaginary parts of a scalar-like value, (None, 0) if foreign."""
    if isinstance(x, GaussianRational):
        return x.re, x.im
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0)
    return None, Fraction(0)


def scalar(re, im=0) -> Scalar:
    """Build a scalar from rational parts, demoting to Fraction when im == 0."""
    re = Fraction(re)
    im = Fraction(im)
    if im == 0:
        return re
    return GaussianRational(re, im)


def as_scalar(x) -> Scalar:
    """Coerce an int/Fraction/GaussianRational/str into a canonical scalar."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


I = GaussianRational(Fraction(0), Fraction(1))


def _format_fraction(q: Fraction) -> str:
    return str(q)


def format_scalar(x: Scalar) -> str:
    """Render a scalar in the grammar ``a``, ``a/b``, ``a + c/d i``."""
    re, im = _parts(x)
    if re is None:
        raise TypeError(f"not a scalar: {x!r}")
    if im == 0:
        return _format_fraction(re)
    sign = "+" if im > 0 else "-"
    return f"{_format_fraction(re)} {sign} {_format_fraction(abs(im))} i"


def parse_scalar(text: str) -> Scalar:
    """Parse the scalar grammar; inverse of :func:`format_scalar`."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    # Split a trailing imaginary part off at the last top-level +/- that is
    # followed by an 'i' term.  Simpler: detect 'i' and work backwards.
    if "i" not in s:
        return Fraction(_strip(s))
    body = s[:-1].strip() if s.endswith("i") else None
    if body is None:
        raise ValueError(f"malformed scalar {text!r}")
    # body now holds "<re> [+-] <im coeff>" or just the im coefficient.
    idx = _last_toplevel_sign(body)
    if idx is None:
        im = _coefficient(body)
        return scalar(0, im)
    re_part = body[:idx].strip()
    sign = -1 if body[idx] == "-" else 1
    im_part = body[idx + 1:].strip()
    im = sign * _coefficient(im_part)
    if not re_part:
        return scalar(0, im)
    return scalar(Fraction(_strip(re_part)), im)


def _strip(s: str) -> str:
    return s.replace(" ", "")


def _coefficient(s: str) -> Fraction:
    s = _strip(s)
    if s in ("", "+"):
        return Fraction(1)
    if s == "-":
        return Fraction(-1)
    if s.endswith("*"):
        s = s[:-1]
    return Fraction(s)


def _last_toplevel_sign(s: str) -> int | None:
    """Index of the last +/- separating real and imaginary parts, or None."""
    for i in range(len(s) - 1, 0, -1):
        if s[i] in "+-" and s[i - 1] not in "/^*eE" and not s[i - 1].isspace() or \
           s[i] in "+-" and s[i - 1].isspace():
            # reject a sign that merely prefixes the whole string
            if s[:i].strip():
                return i
    return None


class TPoly:
    """Laurent polynomial in t: finitely supported exponent -> scalar map.

    Zero coefficients are never stored; the zero polynomial has an empty
    coefficient map.  Instances are immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, Scalar] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = as_scalar(v)
                if v != 0:
                    c[int(e)] = v
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "TPoly":
        return cls()

    @classmethod
    def const(cls, value) -> "TPoly":
        return cls({0: as_scalar(value)})

    @classmethod
    def t(cls, exponent: int = 1, coeff=1) -> "TPoly":
        return cls({exponent: as_scalar(coeff)})

    # -- structure ---------------------------------------------------------

    def items(self) -> list[tuple[int, Scalar]]:
        return sorted(self._c.items())

    def coeff(self, exponent: int) -> Scalar:
        return self._c.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def ord(self) -> int:
        """Minimal exponent; undefined (raises) for the zero polynomial."""
        if not self._c:
            raise ValueError("ord of zero polynomial")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero polynomial")
        return max(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"TPoly({format_tpoly(self)!r})"

    def __str__(self):
        return format_tpoly(self)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return TPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s == 0:
                c.pop(e, None)
            else:
                c[e] = s
        return TPoly(c)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_tpoly(other)
        if other is None:
            return NotImplemented
        c: dict[int, Scalar] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + v1 * v2
                if s == 0:
                    c.pop(e, None)
                else:
                    c[e] = s
        return TPoly(c)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = TPoly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "TPoly":
        """Multiply by t^k."""
        return TPoly({e + k: v for e, v in self._c.items()})

    def scale(self, factor) -> "TPoly":
        factor = as_scalar(factor)
        return TPoly({e: v * factor for e, v in self._c.items()})

    def evaluate(self, at) -> Scalar:
        """Exact value at a nonzero scalar point (negative exponents allowed)."""
        point = as_scalar(at)
        total: Scalar = Fraction(0)
        for e, v in self._c.items():
            total = total + v * point ** e
        return total


def _as_tpoly(x) -> TPoly | None:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return TPoly.const(x)
    return None


def format_tpoly(p: TPoly) -> str:
    """Render in the Laurent grammar, terms in ascending exponent order."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, v in p.items():
        re, im = _parts(v)
        if im != 0:
            coeff = f"({format_scalar(v)})"
            term = coeff if e == 0 else f"{coeff}*t^{e}"
            parts.append(f" + {term}" if parts else term)
            continue
        neg = re < 0
        mag = abs(re)
        if e == 0:
            term = _format_fraction(mag)
        elif mag == 1:
            term = f"t^{e}"
        else:
            term = f"{_format_fraction(mag)}*t^{e}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f" - {term}" if neg else f" + {term}")
    return "".join(parts)


def parse_tpoly(text: str) -> TPoly:
    """Parse the Laurent grammar; inverse of :func:`format_tpoly`."""
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial")
    total = TPoly.zero()
    for sign, term in _split_terms(s):
        total = total + _parse_term(term).scale(sign)
    return total


def _split_terms(s: str) -> list[tuple[int, str]]:
    """Split on top-level +/- signs, honoring parentheses and '^' exponents."""
    terms: list[tuple[int, str]] = []
    sign = 1
    depth = 0
    current: list[str] = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
            current.append(ch)
        elif ch == ")":
            depth -= 1
            current.append(ch)
        elif ch in "+-" and depth == 0:
            prev = "".join(current).rstrip()
            if prev and not prev.endswith(("^", "*", "/")):
                terms.append((sign, prev))
                sign = -1 if ch == "-" else 1
                current = []
            elif not prev and not terms:
                sign = -1 if ch == "-" else sign
            else:
                current.append(ch)
        else:
            current.append(ch)
        i += 1
    last = "".join(current).strip()
    if last:
        terms.append((sign, last))
    return terms


def _parse_term(term: str) -> TPoly:
    term = term.strip()
    if not term:
        raise ValueError("empty term")
    if "t" not in term or (term.startswith("(") and term.endswith(")") and "t" not in term[term.index(")"):]):
        return TPoly.const(_parse_term_coeff(term))
    tpos = term.rindex("t")
    coeff_part = term[:tpos].rstrip()
    exp_part = term[tpos + 1:].strip()
    if coeff_part.endswith("*"):
        coeff_part = coeff_part[:-1].rstrip()
    coeff = _parse_term_coeff(coeff_part) if coeff_part else Fraction(1)
    if exp_part:
        if not exp_part.startswith("^"):
            raise ValueError(f"malformed term {term!r}")
        exponent = int(exp_part[1:].replace(" ", ""))
    else:
        exponent = 1
    return TPoly.t(exponent, coeff)


def _parse_term_coeff(s: str) -> Scalar:
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        return Fraction(1)
    return parse_scalar(s)


# -- ordinary-polynomial helpers for canonicalization ------------------------


def _poly_divmod(a: TPoly, b: TPoly) -> tuple[TPoly, TPoly]:
    """Division with remainder for polynomials with nonnegative exponents."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = TPoly.zero()
    r = a
    db = b.degree()
    lb = b.coeff(db)
    while not r.is_zero() and r.degree() >= db:
        e = r.degree() - db
        c = r.coeff(r.degree()) / lb
        term = TPoly.t(e, c)
        q = q + term
        r = r - term * b
    return q, r


def _poly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd of two polynomials with nonnegative exponents."""
    while not b.is_zero():
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.scale(Fraction(1) / a.coeff(a.degree()))


class RationalFunctionT:
    """Quotient of Laurent polynomials in canonical reduced form.

    Canonical form: numerator and denominator share no polynomial factor,
    all powers of t live in the numerator (the denominator has order zero),
    and the denominator's leading coefficient is one.  Equality is therefore
    structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: TPoly, den: TPoly | None = None):
        num = _as_tpoly(num)
        den = TPoly.const(1) if den is None else _as_tpoly(den)
        if den is None or num is None:
            raise TypeError("RationalFunctionT needs TPoly-like arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", TPoly.zero())
            object.__setattr__(self, "den", TPoly.const(1))
            return
        a = num.ord()
        b = den.ord()
        p = num.shift(-a)
        q = den.shift(-b)
        g = _poly_gcd(p, q)
        if not (g.degree() == 0 and g.coeff(0) == 1):
            p, _ = _poly_divmod(p, g)
            q, _ = _poly_divmod(q, g)
        lead = q.coeff(q.degree())
        if lead != 1:
            inv = Fraction(1) / lead if not isinstance(lead, GaussianRational) else 1 / lead
            p = p.scale(inv)
            q = q.scale(inv)
        object.__setattr__(self, "num", p.shift(a - b))
        object.__setattr__(self, "den", q)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunctionT is immutable")

    @classmethod
    def zero(cls) -> "RationalFunctionT":
        return cls(TPoly.zero())

    @classmethod
    def one(cls) -> "RationalFunctionT":
        return cls(TPoly.const(1))

    @classmethod
    def const(cls, value) -> "RationalFunctionT":
        return cls(TPoly.const(value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_tpoly(self) -> bool:
        """True when the denominator is 1 (the value is a Laurent polynomial)."""
        return self.den == TPoly.const(1)

    def val(self) -> int:
        """Valuation ord(num) - ord(den); denominator order is always 0."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        return self.num.ord() - self.den.ord()

    def limit0(self) -> Scalar:
        """Exact limit as t -> 0; raises Pole when the valuation is negative."""
        if self.is_zero():
            return Fraction(0)
        v = self.val()
        if v > 0:
            return Fraction(0)
        if v < 0:
            raise Pole(f"pole of order {-v} at t = 0")
        return self.num.coeff(self.num.ord()) / self.den.coeff(self.den.ord())

    def evaluate(self, at) -> Scalar:
        d = self.den.evaluate(at)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t = {at}")
        return self.num.evaluate(at) / d

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunctionT({str(self)!r})"

    def __str__(self):
        if self.is_tpoly():
            return format_tpoly(self.num)
        return f"({format_tpoly(self.num)})/({format_tpoly(self.den)})"

    def __neg__(self):
        return RationalFunctionT(-self.num, self.den)

    def __add__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return RationalFunctionT(self.num * other.den + other.num * self.den,
                                 self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return RationalFunctionT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunctionT(self.num * other.den, self.den * other.num)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return RationalFunctionT.one() / self ** (-exponent)
        return RationalFunctionT(self.num ** exponent, self.den ** exponent)

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return other / self


def _as_rational(x) -> RationalFunctionT | None:
    if isinstance(x, RationalFunctionT):
        return x
    if isinstance(x, TPoly):
        return RationalFunctionT(x)
    if isinstance(x, (int, Fraction, GaussianRational)):
        return RationalFunctionT(TPoly.const(x))
    return None


def tpoly_limit0(f: RationalFunctionT | TPoly) -> Scalar:
    """Limit of f(t) as t -> 0; raises :class:`Pole` when it does not exist."""
    r = _as_rational(f)
    if r is None:
        raise TypeError(f"cannot take a t -> 0 limit of {f!r}")
    return r.limit0()


TMatrix = Sequence[Sequence[TPoly]]


def tmatrix_identity(n: int) -> list[list[TPoly]]:
    one, zero = TPoly.const(1), TPoly.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def tmatrix_mul(a: TMatrix, b: TMatrix) -> list[list[TPoly]]:
    n, k, m = len(a), len(b), len(b[0])
    if len(a[0]) != k:
        raise ValueError("matrix shape mismatch")
    return [[sum((a[i][l] * b[l][j] for l in range(k)), TPoly.zero())
             for j in range(m)] for i in range(n)]


def tmatrix_inverse(m: TMatrix) -> list[list[RationalFunctionT]]:
    """Invert a square Laurent-polynomial matrix over the function field.

    Raises :class:`Singular` when the determinant is the zero function.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    work = [[RationalFunctionT(m[i][j]) for j in range(n)] for i in range(n)]
    aug = [[RationalFunctionT.one() if i == j else RationalFunctionT.zero()
            for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise Singular("matrix is singular over the rational-function field")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = RationalFunctionT.one() / work[col][col]
        work[col] = [x * inv for x in work[col]]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = work[r][col]
            if f.is_zero():
                continue
            work[r] = [x - f * y for x, y in zip(work[r], work[col])]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return aug
