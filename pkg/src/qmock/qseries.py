"""Exact truncated Laurent series over the Gaussian rationals.

Every q-expansion in this package lives on the exponent lattice (1/24)Z:
an exponent is stored as an integer number of lattice units, i.e. 24ths
of a power of q.  A series knows its coefficients exactly for all
exponents strictly below ``prec`` (also in lattice units).  Coefficients
are Gaussian rationals a + b*i with Fraction components, which is enough
to hold every phase that appears when Jacobi theta functions are
specialised at half-period arguments.

All values are immutable after construction and all operations are pure
functions, so series may be freely shared between threads.
"""

from fractions import Fraction
from math import gcd

LATTICE_DEN = 24

_F0 = Fraction(0)
_F1 = Fraction(1)


class QSeriesError(Exception):
    """Base class for all errors raised by this package."""


class LatticeError(QSeriesError):
    """An exponent left the (1/24)Z lattice, or lattices disagree."""


class NotInvertible(QSeriesError):
    """Inversion of a series with no determined nonzero leading term."""


class InsufficientPrecision(QSeriesError):
    """A coefficient was requested at or beyond the certified precision."""

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed  # lattice units of prec that would suffice


class NonRealCoefficient(QSeriesError):
    """assert_real found a coefficient with nonzero imaginary part."""


def _frac(x):
    return x if type(x) is Fraction else Fraction(x)


class GaussRat:
    """A Gaussian rational re + im*i, exact in both components.

    Field operations are exact; division by 0 raises ZeroDivisionError.
    Values are kept in canonical (lowest-terms) form by Fraction itself.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @property
    def is_real(self):
        return not self.im

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gauss(other).__sub__(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        # fast path: purely real factors dominate in practice
        if not self.im and not other.im:
            return GaussRat(self.re * other.re)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not self.im and not other.im:
            return GaussRat(self.re / other.re)
        conj = other.conjugate()
        num = self * conj
        return GaussRat(num.re / norm, num.im / norm)

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{istr}"


def _as_gauss(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)

#: e^{pi*i*t/2} for integer t: the four Gaussian units.
QUARTER_PHASES = (GR_ONE, GR_I, -GR_ONE, -GR_I)


def quarter_phase(t):
    """e^{pi*i*t/2} for an integer t."""
    return QUARTER_PHASES[t % 4]


def _ceil_div(a, b):
    return -((-a) // b)


class Series:
    """Truncated Laurent series on the lattice (1/24)Z.

    ``coeffs[k]`` is the coefficient of q^((min_exp + k)/24); the series
    is asserted correct for every exponent strictly below ``prec``
    lattice units.  Exponents below ``min_exp`` are genuinely zero: all
    constructors and operations in this package produce the complete
    expansion from the true valuation upward.
    """

    __slots__ = ("min_exp", "coeffs", "prec")

    lattice_den = LATTICE_DEN

    def __init__(self, min_exp, coeffs, prec):
        coeffs = tuple(coeffs)
        if min_exp > prec:
            raise ValueError(f"min_exp {min_exp} exceeds prec {prec}")
        if len(coeffs) != prec - min_exp:
            raise ValueError(
                f"coefficient count {len(coeffs)} != prec - min_exp = {prec - min_exp}"
            )
        self.min_exp = min_exp
        self.coeffs = coeffs
        self.prec = prec

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, prec):
        return cls(prec, (), prec)

    @classmethod
    def monomial(cls, exp24, coeff=1, *, prec):
        """c * q^(exp24/24), known up to (but excluding) prec."""
        coeff = _as_gauss(coeff)
        if exp24 >= prec or not coeff:
            return cls.zero(prec)
        return cls(exp24, (coeff,) + (GR_ZERO,) * (prec - exp24 - 1), prec)

    @classmethod
    def one(cls, prec):
        return cls.monomial(0, 1, prec=prec)

    @classmethod
    def from_pairs(cls, pairs, *, prec):
        """Series from (exp24, coefficient) pairs; later pairs accumulate."""
        live = [(e, _as_gauss(c)) for e, c in pairs if e < prec and _as_gauss(c)]
        if not live:
            return cls.zero(prec)
        lo = min(e for e, _ in live)
        acc = [GR_ZERO] * (prec - lo)
        for e, c in live:
            acc[e - lo] = acc[e - lo] + c
        return cls(lo, acc, prec)

    # ------------------------------------------------------------------
    # inspection

    def _nonzero(self):
        lo = self.min_exp
        return [(lo + k, c) for k, c in enumerate(self.coeffs) if c]

    def support(self):
        """Lattice exponents with nonzero coefficient, ascending."""
        return tuple(e for e, _ in self._nonzero())

    def val(self):
        """Lattice exponent of the first nonzero term, or None if zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return self.min_exp + k
        return None

    def is_zero(self):
        return self.val() is None

    def is_real(self):
        return all(c.is_real for c in self.coeffs)

    def coefficient(self, exp24):
        """Exact coefficient of q^(exp24/24).

        Below min_exp the series is entire, so 0 is returned; at or
        beyond prec nothing is certified and InsufficientPrecision is
        raised, carrying the lattice precision that would suffice.
        """
        if exp24 >= self.prec:
            raise InsufficientPrecision(
                f"coefficient at lattice exponent {exp24} requested, but series "
                f"is only certified below {self.prec}",
                needed=exp24 + 1,
            )
        if exp24 < self.min_exp:
            return GR_ZERO
        return self.coeffs[exp24 - self.min_exp]

    def coefficient_q(self, exponent):
        """Coefficient at a q-exponent given as int or Fraction."""
        e24 = Fraction(exponent) * LATTICE_DEN
        if e24.denominator != 1:
            raise LatticeError(f"exponent {exponent} is not on the (1/24)Z lattice")
        return self.coefficient(int(e24))

    def constant_term(self):
        return self.coefficient(0)

    def normalized(self):
        """Copy with leading zero coefficients trimmed (canonical form)."""
        v = self.val()
        if v is None:
            return Series(self.prec, (), self.prec)
        if v == self.min_exp:
            return self
        return Series(v, self.coeffs[v - self.min_exp :], self.prec)

    def truncate(self, prec):
        """Restrict certification to exponents below ``prec``."""
        if prec >= self.prec:
            return self
        if prec <= self.min_exp:
            return Series.zero(prec)
        return Series(self.min_exp, self.coeffs[: prec - self.min_exp], prec)

    # ------------------------------------------------------------------
    # ring operations

    def __neg__(self):
        return Series(self.min_exp, tuple(-c for c in self.coeffs), self.prec)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Series.monomial(0, other, prec=self.prec)
        if not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.min_exp, other.min_exp, prec)
        acc = [GR_ZERO] * (prec - lo)
        for e, c in self._nonzero():
            if e < prec:
                acc[e - lo] = acc[e - lo] + c
        for e, c in other._nonzero():
            if e < prec:
                acc[e - lo] = acc[e - lo] + c
        return Series(lo, acc, prec)

    __radd__ = __add__

    def __sub__(self, other):
        return self.__add__(-other if isinstance(other, Series) else -_as_gauss(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, c):
        """Multiply every coefficient by the scalar c."""
        c = _as_gauss(c)
        if not c:
            return Series.zero(self.prec)
        if c == GR_ONE:
            return self
        return Series(self.min_exp, tuple(c * x if x else x for x in self.coeffs), self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self, other
        av, bv = a.val(), b.val()
        ea = a.prec if av is None else av
        eb = b.prec if bv is None else bv
        prec = min(a.prec + eb, b.prec + ea)
        lo = ea + eb
        if av is None or bv is None or lo >= prec:
            return Series.zero(prec)
        n = prec - lo
        az = a._nonzero()
        bz = b._nonzero()
        if len(az) > len(bz):
            az, bz = bz, az
        bz_parts = [(e, c.re, c.im) for e, c in bz]
        re_acc = [_F0] * n
        im_acc = [_F0] * n
        for ea_, ca in az:
            base = ea_ - lo
            car, cai = ca.re, ca.im
            if cai:
                for eb_, cbr, cbi in bz_parts:
                    k = base + eb_
                    if k >= n:
                        break
                    re_acc[k] += car * cbr - cai * cbi
                    im_acc[k] += car * cbi + cai * cbr
            else:
                for eb_, cbr, cbi in bz_parts:
                    k = base + eb_
                    if k >= n:
                        break
                    if cbr:
                        re_acc[k] += car * cbr
                    if cbi:
                        im_acc[k] += car * cbi
        return Series(lo, tuple(GaussRat(r, i) for r, i in zip(re_acc, im_acc)), prec)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse, exact to precision prec - 2*val.

        The inverse of q^v * u is q^(-v) / u; the unit part is inverted
        by the standard convolution recurrence, restricted to the
        arithmetic progression actually supported by u (the inverse of a
        series in q^g is again a series in q^g).
        """
        nz = self._nonzero()
        if not nz:
            raise NotInvertible("series has no determined nonzero coefficient")
        v, lead = nz[0]
        rel = [(e - v, c) for e, c in nz]
        length = self.prec - v  # relative certification of the unit part
        lead_inv = GR_ONE / lead
        if len(rel) == 1:
            out = Series.monomial(-v, lead_inv, prec=self.prec - 2 * v)
            return out
        g = 0
        for e, _ in rel[1:]:
            g = gcd(g, e)
        tail = rel[1:]
        b = {0: lead_inv}
        for k in range(g, length, g):
            s = None
            for e, c in tail:
                if e > k:
                    break
                prev = b.get(k - e)
                if prev is not None:
                    term = c * prev
                    s = term if s is None else s + term
            if s is not None and s:
                b[k] = -lead_inv * s if lead_inv != GR_ONE else -s
        coeffs = [GR_ZERO] * length
        for k, c in b.items():
            coeffs[k] = c
        return Series(-v, coeffs, self.prec - 2 * v)

    def pow_int(self, k):
        """Integer power by binary exponentiation; negative k inverts."""
        if k < 0:
            return self.invert().pow_int(-k)
        if k == 0:
            v = self.val()
            if v is None:
                raise NotInvertible("0^0 of an all-zero series is undetermined")
            # x^0 = 1 exactly; certify at the relative precision of x
            return Series.one(self.prec - v)
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    __pow__ = pow_int

    def q_derive(self):
        """Apply q d/dq: multiply each coefficient by its exponent."""
        return Series(
            self.min_exp,
            tuple(
                c * Fraction(self.min_exp + k, LATTICE_DEN) if c else c
                for k, c in enumerate(self.coeffs)
            ),
            self.prec,
        )

    def rescale_exponents(self, num, den):
        """Substitute q -> q^(num/den); exponents scale by num/den.

        Every nonzero exponent must land back on the lattice, otherwise
        LatticeError is raised.  Precision rescales the same way.
        """
        if num < 1 or den < 1:
            raise ValueError("rescale factors must be positive integers")
        new_prec = _ceil_div(self.prec * num, den)
        pairs = []
        for e, c in self._nonzero():
            j = e * num
            if j % den:
                raise LatticeError(
                    f"exponent {Fraction(e, LATTICE_DEN)} maps off the lattice under "
                    f"q -> q^({num}/{den})"
                )
            pairs.append((j // den, c))
        return Series.from_pairs(pairs, prec=new_prec)

    def sieve(self, r, m):
        """Keep only terms whose integer q-exponent is r mod m.

        Requires all nonzero exponents to be integers (multiples of 24).
        """
        kept = []
        for e, c in self._nonzero():
            if e % LATTICE_DEN:
                raise LatticeError(
                    f"sieve requires integer q-exponents; found {Fraction(e, LATTICE_DEN)}"
                )
            if (e // LATTICE_DEN) % m == r % m:
                kept.append((e, c))
        return Series.from_pairs(kept, prec=self.prec)

    def assert_real(self):
        """Certify that every coefficient is real, or raise."""
        for k, c in enumerate(self.coeffs):
            if c.im:
                e = self.min_exp + k
                raise NonRealCoefficient(
                    f"imaginary part {c.im} at exponent q^({Fraction(e, LATTICE_DEN)})"
                )
        return RealSeries(self.min_exp, self.coeffs, self.prec)

    # ------------------------------------------------------------------
    # comparison and display

    def agrees_with(self, other):
        """Coefficientwise equality up to the smaller precision."""
        prec = min(self.prec, other.prec)
        lo = min(self.min_exp, other.min_exp)
        for e in range(lo, prec):
            a = self.coefficient(e) if e >= self.min_exp else GR_ZERO
            b = other.coefficient(e) if e >= other.min_exp else GR_ZERO
            if a != b:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        a = self.normalized()
        b = other.normalized()
        return a.prec == b.prec and a.min_exp == b.min_exp and a.coeffs == b.coeffs

    __hash__ = None

    def __repr__(self):
        return f"Series(min_exp={self.min_exp}, prec={self.prec}, terms={len(self.support())})"

    def __str__(self):
        parts = []
        for e, c in self._nonzero():
            exp = Fraction(e, LATTICE_DEN)
            if exp == 0:
                mono = ""
            elif exp == 1:
                mono = "q"
            elif exp.denominator == 1:
                mono = f"q^{exp}"
            else:
                mono = f"q^({exp})"
            cs = str(c)
            if not c.is_real and c.re:
                cs = f"({cs})"
            if mono:
                term = mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
            else:
                term = cs
            parts.append(term)
        tail = f"O(q^({Fraction(self.prec, LATTICE_DEN)}))"
        if not parts:
            return tail
        joined = parts[0]
        for p in parts[1:]:
            joined += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return f"{joined} + {tail}"

    # ------------------------------------------------------------------
    # JSON wire format

    def to_json_obj(self):
        """The exact interchange form: integers as decimal strings."""
        return {
            "lattice_den": LATTICE_DEN,
            "min_exp": self.min_exp,
            "prec": self.prec,
            "coeffs": [
                [
                    str(c.re.numerator),
                    str(c.re.denominator),
                    str(c.im.numerator),
                    str(c.im.denominator),
                ]
                for c in self.coeffs
            ],
        }

    @classmethod
    def from_json_obj(cls, obj):
        if obj.get("lattice_den") != LATTICE_DEN:
            raise LatticeError(
                f"lattice mismatch: expected {LATTICE_DEN}, got {obj.get('lattice_den')}"
            )
        coeffs = [
            GaussRat(Fraction(int(rn), int(rd)), Fraction(int(sn), int(sd)))
            for rn, rd, sn, sd in obj["coeffs"]
        ]
        return cls(int(obj["min_exp"]), coeffs, int(obj["prec"]))


class RealSeries(Series):
    """A Series whose coefficients are certified real."""

    __slots__ = ()

    def __init__(self, min_exp, coeffs, prec):
        super().__init__(min_exp, coeffs, prec)
        for c in self.coeffs:
            if c.im:
                raise NonRealCoefficient("RealSeries constructed with complex coefficient")


# ----------------------------------------------------------------------
# functional aliases, for callers who prefer free functions


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def invert(a):
    return a.invert()


def pow_int(a, k):
    return a.pow_int(k)


def q_derive(a):
    return a.q_derive()


def rescale_exponents(a, num, den):
    return a.rescale_exponents(num, den)


def coefficient(a, exp24):
    return a.coefficient(exp24)


def sieve(a, r, m):
    return a.sieve(r, m)


def assert_real(a):
    return a.assert_real()
