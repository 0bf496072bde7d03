"""Formal Laurent series with explicit truncation bookkeeping.

A LaurentPoly stores coefficients on a tracked exponent window.  The
window edges record which tail has been discarded: ``lo`` set means
exponents below ``lo`` are unknown O-terms (a series developed toward
negative powers), ``hi`` set means exponents above ``hi`` are unknown (a
series developed toward positive powers).  Both edges ``None`` is an
exact Laurent polynomial.  Binary operations propagate the windows, so a
result never claims a coefficient it cannot actually know.

Coefficients live in one of two scalar modes chosen at construction:
``"exact"`` keeps Gaussian rationals (Fraction real and imaginary
parts), ``"float"`` keeps complex floats.  Mixing modes in a binary
operation demotes the result to floats.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InputError, TruncationError

DEFAULT_HORIZON = 16


class ExactComplex:
    """Gaussian rational: a complex number with Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _exact(other)
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _exact(other)
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _exact(other) - self

    def __mul__(self, other):
        other = _exact(other)
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _exact(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _exact(other) / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __eq__(self, other):
        try:
            other = _exact(other)
        except (TypeError, InputError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ExactComplex({self.re!r}, {self.im!r})"


def _exact(x) -> ExactComplex:
    if isinstance(x, ExactComplex):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactComplex(x)
    if isinstance(x, str):
        return ExactComplex(Fraction(x))
    if isinstance(x, tuple) and len(x) == 2:
        return ExactComplex(Fraction(x[0]), Fraction(x[1]))
    if isinstance(x, (float, complex)):
        # exact mode refuses silent binary-float promotion
        raise InputError("exact mode needs rational coefficients, got %r" % (x,))
    raise InputError("cannot interpret %r as an exact coefficient" % (x,))


def _coerce(x, mode):
    if mode == "exact":
        return _exact(x)
    if isinstance(x, ExactComplex):
        return complex(x)
    return complex(x)


class LaurentPoly:
    """Formal Laurent series over a tracked exponent window."""

    __slots__ = ("coeffs", "lo", "hi", "mode")

    def __init__(self, coeffs=None, lo=None, hi=None, mode="float"):
        if mode not in ("exact", "float"):
            raise InputError("mode must be 'exact' or 'float'")
        if lo is not None and hi is not None and lo > hi:
            raise InputError("empty window: lo > hi")
        clean = {}
        for k, v in (coeffs or {}).items():
            k = int(k)
            if lo is not None and k < lo:
                continue
            if hi is not None and k > hi:
                continue
            v = _coerce(v, mode)
            if v:
                clean[k] = v
        self.coeffs = clean
        self.lo = lo
        self.hi = hi
        self.mode = mode

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, mode="float"):
        return cls({}, mode=mode)

    @classmethod
    def one(cls, mode="float"):
        return cls({0: 1}, mode=mode)

    @classmethod
    def monomial(cls, exponent, coefficient=1, mode="float"):
        return cls({exponent: coefficient}, mode=mode)

    # -- inspection -----------------------------------------------------

    @property
    def order(self):
        """Smallest tracked exponent with a nonzero coefficient, or None."""
        return min(self.coeffs) if self.coeffs else None

    @property
    def degree(self):
        """Largest tracked exponent with a nonzero coefficient, or None."""
        return max(self.coeffs) if self.coeffs else None

    @property
    def truncation(self):
        """Tracked-window edges (lo, hi); None marks an exact side."""
        return (self.lo, self.hi)

    @property
    def is_exact(self):
        return self.lo is None and self.hi is None

    def coefficient(self, exponent):
        """Coefficient at an exponent, zero inside the window, error outside."""
        exponent = int(exponent)
        if self.lo is not None and exponent < self.lo:
            raise TruncationError(f"exponent {exponent} below tracked window")
        if self.hi is not None and exponent > self.hi:
            raise TruncationError(f"exponent {exponent} above tracked window")
        if exponent in self.coeffs:
            return self.coeffs[exponent]
        return ExactComplex() if self.mode == "exact" else 0j

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if (self.lo, self.hi) != (other.lo, other.hi):
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        if self.mode == other.mode == "exact":
            return all(self.coefficient(k) == other.coefficient(k) for k in keys)
        return all(complex(self.coefficient(k)) == complex(other.coefficient(k)) for k in keys)

    def __repr__(self):
        window = "" if self.is_exact else f", window=[{self.lo}, {self.hi}]"
        return f"LaurentPoly({self.to_text()!r}, mode={self.mode!r}{window})"

    # -- window helpers -------------------------------------------------

    def _possible_max(self):
        """Largest exponent that might carry a nonzero term; None if surely zero."""
        if self.hi is not None:
            return self.hi if self.coeffs or self.lo is None else max(self.hi, self.lo - 1)
        if self.coeffs:
            return max(self.coeffs)
        return self.lo - 1 if self.lo is not None else None

    def _possible_min(self):
        if self.lo is not None:
            return self.lo if self.coeffs or self.hi is None else min(self.lo, self.hi + 1)
        if self.coeffs:
            return min(self.coeffs)
        return self.hi + 1 if self.hi is not None else None

    def _windowed(self, lo=None, hi=None):
        """Copy restricted to a (possibly tighter) window."""
        nlo = self.lo if lo is None else (lo if self.lo is None else max(lo, self.lo))
        nhi = self.hi if hi is None else (hi if self.hi is None else min(hi, self.hi))
        return LaurentPoly(self.coeffs, nlo, nhi, self.mode)

    def _shift(self, offset):
        """Multiply by z**offset."""
        return LaurentPoly(
            {k + offset: v for k, v in self.coeffs.items()},
            None if self.lo is None else self.lo + offset,
            None if self.hi is None else self.hi + offset,
            self.mode,
        )

    # -- arithmetic -----------------------------------------------------

    def _pair_mode(self, other):
        return "exact" if self.mode == other.mode == "exact" else "float"

    def _in_mode(self, mode):
        if mode == self.mode:
            return self
        return LaurentPoly(self.coeffs, self.lo, self.hi, mode)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other}, mode=self.mode)
        mode = self._pair_mode(other)
        a, b = self._in_mode(mode), other._in_mode(mode)
        los = [x for x in (a.lo, b.lo) if x is not None]
        his = [x for x in (a.hi, b.hi) if x is not None]
        lo = max(los) if los else None
        hi = min(his) if his else None
        acc = dict(a.coeffs)
        for k, v in b.coeffs.items():
            acc[k] = acc.get(k, _coerce(0, mode)) + v
        return LaurentPoly(acc, lo, hi, mode)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()}, self.lo, self.hi, self.mode)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other}, mode=self.mode)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        scalar = _coerce(scalar, self.mode)
        if not scalar:
            return LaurentPoly({}, self.lo, self.hi, self.mode)
        return LaurentPoly(
            {k: v * scalar for k, v in self.coeffs.items()}, self.lo, self.hi, self.mode
        )

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        mode = self._pair_mode(other)
        a, b = self._in_mode(mode), other._in_mode(mode)
        if (a.lo is not None and b.hi is not None) or (a.hi is not None and b.lo is not None):
            raise TruncationError("cannot multiply series truncated on opposite sides")
        # a partner that is exactly zero annihilates every unknown tail
        if (a.is_exact and not a.coeffs) or (b.is_exact and not b.coeffs):
            return LaurentPoly.zero(mode)
        lo = hi = None
        if a.lo is not None or b.lo is not None:
            cands = []
            if a.lo is not None:
                m = b._possible_max()
                if m is not None:
                    cands.append(a.lo + m)
            if b.lo is not None:
                m = a._possible_max()
                if m is not None:
                    cands.append(b.lo + m)
            lo = max(cands) if cands else None
        if a.hi is not None or b.hi is not None:
            cands = []
            if a.hi is not None:
                m = b._possible_min()
                if m is not None:
                    cands.append(a.hi + m)
            if b.hi is not None:
                m = a._possible_min()
                if m is not None:
                    cands.append(b.hi + m)
            hi = min(cands) if cands else None
        acc = {}
        zero = _coerce(0, mode)
        for i, u in a.coeffs.items():
            for j, v in b.coeffs.items():
                k = i + j
                if lo is not None and k < lo:
                    continue
                if hi is not None and k > hi:
                    continue
                acc[k] = acc.get(k, zero) + u * v
        return LaurentPoly(acc, lo, hi, mode)

    __rmul__ = __mul__

    def invert(self, horizon=None):
        """Multiplicative inverse as a truncated geometric expansion.

        A series truncated below expands toward negative exponents; one
        truncated above (and any exact non-monomial) expands toward
        positive exponents around zero.  ``horizon`` is the tracked
        window width of the result; a truncated input caps it at the
        width the input actually supplies.
        """
        if not self.coeffs:
            raise DomainError("cannot invert a series with no nonzero tracked term")
        if self.is_exact and len(self.coeffs) == 1:
            ((k, c),) = self.coeffs.items()
            inv = _coerce(1, self.mode) / c
            return LaurentPoly({-k: inv}, mode=self.mode)
        descending = self.lo is not None
        if descending:
            m = max(self.coeffs)
            avail = m - self.lo
        else:
            m = min(self.coeffs)
            avail = None if self.hi is None else self.hi - m
        width = horizon if horizon is not None else (avail if avail is not None else DEFAULT_HORIZON)
        if avail is not None:
            width = min(width, avail)
        if width < 0:
            raise TruncationError("input window too narrow to invert")
        lead = self.coeffs[m]
        # u = self / (lead z^m) - 1 has exponents strictly on the tail side
        u = (self._shift(-m)).scale(_coerce(1, self.mode) / lead) - LaurentPoly.one(self.mode)
        # u's tail side is truncated; its other side is exactly zero, so
        # only one window edge may be stamped or products become illegal
        if descending:
            u = u._windowed(lo=-width)
        else:
            u = u._windowed(hi=width)
        acc = LaurentPoly.one(self.mode)
        term = LaurentPoly.one(self.mode)
        for _ in range(width):
            term = term * (-u)
            term = term._windowed(lo=-width if descending else None,
                                  hi=None if descending else width)
            if not term.coeffs:
                break
            acc = acc + term
        acc = acc._windowed(lo=-width if descending else None,
                            hi=None if descending else width)
        out = acc._shift(-m).scale(_coerce(1, self.mode) / lead)
        if descending:
            return out._windowed(lo=-m - width)
        return out._windowed(hi=-m + width)

    def power(self, n):
        """Integer power; negative exponents go through invert."""
        n = int(n)
        if n == 0:
            return LaurentPoly.one(self.mode)
        if n < 0:
            return self.invert().power(-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def polynomial_part(self):
        """Coefficients at exponents >= 0 as a dense ascending list.

        The tracked window must cover the whole nonnegative range, so a
        series truncated above, or truncated below at a positive
        exponent, raises TruncationError.
        """
        if self.hi is not None:
            raise TruncationError("upper tail unknown; polynomial part unavailable")
        if self.lo is not None and self.lo > 0:
            raise TruncationError("window starts above exponent 0")
        top = max((k for k in self.coeffs if k >= 0), default=None)
        if top is None:
            return []
        zero = ExactComplex() if self.mode == "exact" else 0j
        return [self.coeffs.get(k, zero) for k in range(top + 1)]

    # -- serialization --------------------------------------------------

    def to_text(self):
        """Human form: terms with descending exponents, ellipsis for open tails."""
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for k in sorted(self.coeffs, reverse=True):
                mag, neg = _fmt_coeff(self.coeffs[k])
                if k == 0:
                    term = mag
                else:
                    zk = "z" if k == 1 else f"z^{k}"
                    term = zk if mag == "1" else f"{mag} {zk}"
                if not parts:
                    parts.append(f"-{term}" if neg else term)
                else:
                    parts.append(f"{'- ' if neg else '+ '}{term}")
            body = " ".join(parts)
        if self.hi is not None:
            body = "... + " + body
        if self.lo is not None:
            body = body + " + ..."
        return body

    @classmethod
    def from_text(cls, text, mode=None):
        """Parse the to_text form.

        An ellipsis narrows the window to the printed extreme exponent:
        the text only vouches for what it shows.
        """
        return _parse_text(text, mode)

    def to_json(self):
        """Map exponent -> coefficient.

        Float coefficients emit [re, im].  Exact real rationals emit
        [num, den]; exact values with an imaginary part emit
        [[re_num, re_den], [im_num, im_den]].  Window state is runtime
        bookkeeping and is not serialized.
        """
        out = {}
        for k, v in sorted(self.coeffs.items()):
            if self.mode == "exact":
                if v.im == 0:
                    out[str(k)] = [v.re.numerator, v.re.denominator]
                else:
                    out[str(k)] = [
                        [v.re.numerator, v.re.denominator],
                        [v.im.numerator, v.im.denominator],
                    ]
            else:
                out[str(k)] = [v.real, v.imag]
        return out

    @classmethod
    def from_json(cls, data):
        coeffs = {}
        mode = "exact"
        for k, v in data.items():
            try:
                exp = int(k)
            except ValueError as exc:
                raise InputError(f"bad exponent key {k!r}") from exc
            if not isinstance(v, (list, tuple)) or len(v) != 2:
                raise InputError(f"coefficient for {k} must be a pair")
            if isinstance(v[0], (list, tuple)):
                coeffs[exp] = ExactComplex(
                    Fraction(int(v[0][0]), int(v[0][1])),
                    Fraction(int(v[1][0]), int(v[1][1])),
                )
            elif isinstance(v[0], int) and isinstance(v[1], int):
                coeffs[exp] = ExactComplex(Fraction(v[0], v[1]))
            else:
                coeffs[exp] = complex(float(v[0]), float(v[1]))
                mode = "float"
        if mode == "float":
            coeffs = {k: complex(v) if isinstance(v, ExactComplex) else v for k, v in coeffs.items()}
        return cls(coeffs, mode=mode)


def _fmt_coeff(c):
    """Render a coefficient; returns (magnitude_text, is_negative)."""
    if isinstance(c, ExactComplex):
        if c.im == 0:
            neg = c.re < 0
            return str(abs(c.re)), neg
        if c.re == 0:
            neg = c.im < 0
            m = abs(c.im)
            return ("i" if m == 1 else f"{m}i"), neg
        return f"({c.re}{'+' if c.im > 0 else '-'}{abs(c.im)}i)", False
    c = complex(c)
    if c.imag == 0:
        return (_fmt_float(abs(c.real)), c.real < 0)
    if c.real == 0:
        m = abs(c.imag)
        return ("i" if m == 1 else f"{_fmt_float(m)}i"), c.imag < 0
    sign = "+" if c.imag > 0 else "-"
    return f"({_fmt_float(c.real)}{sign}{_fmt_float(abs(c.imag))}i)", False


def _fmt_float(x):
    return format(x, ".15g")


def _parse_text(text, mode):
    src = text.replace("…", "...").strip()
    hi_open = lo_open = False
    if src.startswith("..."):
        hi_open = True
        src = src.lstrip(".").lstrip()
        if src.startswith("+"):
            src = src[1:].lstrip()
    if src.endswith("..."):
        lo_open = True
        src = src.rstrip(".").rstrip()
        if src.endswith("+"):
            src = src[:-1].rstrip()
    if not src or src == "0":
        return LaurentPoly({}, mode=mode or "float")
    terms = _split_terms(src)
    coeffs = {}
    saw_float = False
    for sign, body in terms:
        coeff_text, exp = _split_term_body(body)
        c, is_float = _parse_coeff(coeff_text)
        saw_float = saw_float or is_float
        if sign == "-":
            c = -c
        if exp in coeffs:
            coeffs[exp] = coeffs[exp] + c
        else:
            coeffs[exp] = c
    use_mode = mode or ("float" if saw_float else "exact")
    if use_mode == "float":
        coeffs = {k: complex(v) if isinstance(v, ExactComplex) else v for k, v in coeffs.items()}
    exps = coeffs.keys()
    lo = min(exps) if (lo_open and exps) else None
    hi = max(exps) if (hi_open and exps) else None
    return LaurentPoly(coeffs, lo, hi, use_mode)


def _split_terms(src):
    terms = []
    sign = "+"
    buf = []
    depth = 0
    prev_nonspace = ""
    for ch in src:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and prev_nonspace not in ("", "^", "e", "E", "(", "+", "-"):
            terms.append((sign, "".join(buf).strip()))
            sign = ch
            buf = []
        else:
            buf.append(ch)
        if not ch.isspace():
            prev_nonspace = ch
    last = "".join(buf).strip()
    if last:
        terms.append((sign, last))
    return terms


def _split_term_body(body):
    body = body.strip()
    if "z" not in body:
        return body, 0
    zpos = body.rindex("z")
    # a trailing z may carry ^exp
    head = body[:zpos].strip()
    tail = body[zpos + 1 :].strip()
    if tail.startswith("^"):
        try:
            exp = int(tail[1:])
        except ValueError as exc:
            raise InputError(f"bad exponent in term {body!r}") from exc
    elif tail:
        raise InputError(f"unexpected text after z in term {body!r}")
    else:
        exp = 1
    if head.endswith("*"):
        head = head[:-1].strip()
    if not head:
        head = "1"
    return head, exp


def _parse_coeff(text):
    """Parse a coefficient literal; returns (value, needs_float_mode)."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        inner = text[1:-1]
        # (a+bi) or (a-bi)
        for pos in range(len(inner) - 1, 0, -1):
            if inner[pos] in "+-" and inner[pos - 1] not in "eE":
                re_t, im_t = inner[:pos], inner[pos:]
                if not im_t.rstrip().endswith("i"):
                    continue
                im_t = im_t.rstrip()[:-1]
                if im_t in ("+", "-"):
                    im_t += "1"
                rv, rf = _parse_real(re_t)
                iv, if_ = _parse_real(im_t)
                if rf or if_:
                    return complex(float(rv), float(iv)), True
                return ExactComplex(rv, iv), False
        raise InputError(f"bad complex literal {text!r}")
    if text.endswith("i"):
        head = text[:-1].strip()
        if head in ("", "+"):
            return ExactComplex(0, 1), False
        if head == "-":
            return ExactComplex(0, -1), False
        v, is_f = _parse_real(head)
        if is_f:
            return complex(0.0, float(v)), True
        return ExactComplex(0, v), False
    v, is_f = _parse_real(text)
    if is_f:
        return complex(float(v), 0.0), True
    return ExactComplex(v), False


def _parse_real(text):
    """Returns (Fraction-or-float, needs_float_mode)."""
    text = text.strip()
    try:
        if "/" in text:
            return Fraction(text), False
        if any(ch in text for ch in ".eE") and not text.lstrip("+-").isdigit():
            return float(text), True
        return Fraction(int(text)), False
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad numeric literal {text!r}") from exc


# -- module-level op mirrors -------------------------------------------


def multiply(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Cauchy product truncated to the window both operands support."""
    return a * b


def invert(a: LaurentPoly, horizon: int | None = None) -> LaurentPoly:
    """Multiplicative inverse; see LaurentPoly.invert."""
    return a.invert(horizon)


def power(a: LaurentPoly, n: int) -> LaurentPoly:
    """Integer power; see LaurentPoly.power."""
    return a.power(n)


def polynomial_part(a: LaurentPoly) -> list:
    """Dense ascending list of the coefficients at exponents >= 0."""
    return a.polynomial_part()
