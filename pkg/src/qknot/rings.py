"""Exact sparse Laurent-polynomial and cyclotomic-integer arithmetic.

Everything in this module is exact: coefficients are Python ints (arbitrary
precision, so intermediate growth under long braid words is never a problem)
and all ring elements are kept in canonical form, meaning no zero coefficient
is ever stored.  Values are immutable after construction and every operation
is a pure function, so elements may be shared freely between threads.

The text rendering produced by ``render`` is a stable contract used by the
golden-file tests and the CLI: terms are sorted by exponent (tuple) in
descending lexicographic order and printed as ``c*v1^a*v2^b``, omitting unit
factors (coefficient 1, exponent 0) and writing a bare variable for
exponent 1.
"""

from __future__ import annotations

import functools

# The two working coefficient rings.  Keys of `TwoVarLaurent.terms` are
# exponent pairs in the order of the variable tuple.
XD = ("x", "d")
QS = ("q", "s")


class RingError(ValueError):
    """Raised on variable mismatches and inexact divisions."""


def _render_terms(items):
    """Shared renderer.  `items` is a list of (factors, coeff) with factors
    already stringified (e.g. ["x^-2", "d"]) and coeff a nonzero int."""
    out = []
    for factors, coeff in items:
        mag = abs(coeff)
        body = list(factors)
        if mag != 1 or not body:
            body.insert(0, str(mag))
        chunk = "*".join(body)
        if not out:
            out.append(chunk if coeff > 0 else "-" + chunk)
        else:
            out.append((" + " if coeff > 0 else " - ") + chunk)
    return "".join(out) if out else "0"


def _var_factor(var, exp):
    return var if exp == 1 else f"{var}^{exp}"


class TwoVarLaurent:
    """Laurent polynomial in two named variables over the integers.

    Stored sparsely as ``{(e1, e2): coeff}``; equality is structural equality
    of the canonical form (same variables, same nonzero terms).
    """

    __slots__ = ("terms", "vars")

    def __init__(self, terms=None, vars=QS):
        self.vars = tuple(vars)
        if len(self.vars) != 2:
            raise RingError("exactly two variable names required")
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[(int(key[0]), int(key[1]))] = int(coeff)

    @classmethod
    def _raw(cls, terms, vars):
        """Trusted constructor: `terms` must already be canonical."""
        p = cls.__new__(cls)
        p.terms = terms
        p.vars = vars
        return p

    @classmethod
    def zero(cls, vars=QS):
        return cls._raw({}, tuple(vars))

    @classmethod
    def one(cls, vars=QS):
        return cls._raw({(0, 0): 1}, tuple(vars))

    @classmethod
    def const(cls, c, vars=QS):
        return cls._raw({(0, 0): int(c)} if c else {}, tuple(vars))

    @classmethod
    def monomial(cls, coeff, exps, vars=QS):
        e = (int(exps[0]), int(exps[1]))
        return cls._raw({e: int(coeff)} if coeff else {}, tuple(vars))

    def _check(self, other):
        if self.vars != other.vars:
            raise RingError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        if not isinstance(other, TwoVarLaurent):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return TwoVarLaurent._raw({k: -c for k, c in self.terms.items()}, self.vars)

    def __add__(self, other):
        if isinstance(other, int):
            other = TwoVarLaurent.const(other, self.vars)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return TwoVarLaurent._raw(out, self.vars)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = TwoVarLaurent.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return TwoVarLaurent.zero(self.vars)
            return TwoVarLaurent._raw(
                {k: c * other for k, c in self.terms.items()}, self.vars)
        self._check(other)
        out = {}
        add_mul_terms(out, self.terms, other.terms)
        return TwoVarLaurent._raw({k: c for k, c in out.items() if c}, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise RingError("only nonnegative integer powers")
        result = TwoVarLaurent.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def times_monomial(self, coeff, shift):
        """Multiply by coeff * v1^shift[0] * v2^shift[1] (exact, O(terms))."""
        if not coeff:
            return TwoVarLaurent.zero(self.vars)
        a, b = shift
        return TwoVarLaurent._raw(
            {(k[0] + a, k[1] + b): c * coeff for k, c in self.terms.items()},
            self.vars)

    def sole_term(self):
        """The (exponents, coeff) of a monomial; error if not a monomial."""
        if len(self.terms) != 1:
            raise RingError("not a monomial")
        [(key, coeff)] = self.terms.items()
        return key, coeff

    def coefficient(self, exps):
        return self.terms.get((exps[0], exps[1]), 0)

    def render(self):
        items = []
        for key in sorted(self.terms, reverse=True):
            factors = [_var_factor(v, e) for v, e in zip(self.vars, key) if e]
            items.append((factors, self.terms[key]))
        return _render_terms(items)

    __str__ = render

    def __repr__(self):
        return f"TwoVarLaurent({self.render()!r}, vars={self.vars})"


def add_mul_terms(acc, a, b):
    """acc += a*b on raw term dicts (tuple keys).  Hot-loop kernel; may leave
    explicit zeros in acc, callers strip them when canonicalizing."""
    if len(a) > len(b):
        a, b = b, a
    for (e1, e2), c1 in a.items():
        for (f1, f2), c2 in b.items():
            k = (e1 + f1, e2 + f2)
            acc[k] = acc.get(k, 0) + c1 * c2


class OneVarLaurent:
    """Laurent polynomial in a single named variable over the integers."""

    __slots__ = ("terms", "var")

    def __init__(self, terms=None, var="q"):
        self.var = var
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[int(e)] = int(c)

    @classmethod
    def _raw(cls, terms, var):
        p = cls.__new__(cls)
        p.terms = terms
        p.var = var
        return p

    @classmethod
    def zero(cls, var="q"):
        return cls._raw({}, var)

    @classmethod
    def one(cls, var="q"):
        return cls._raw({0: 1}, var)

    @classmethod
    def const(cls, c, var="q"):
        return cls._raw({0: int(c)} if c else {}, var)

    @classmethod
    def monomial(cls, coeff, exp, var="q"):
        return cls._raw({int(exp): int(coeff)} if coeff else {}, var)

    def _check(self, other):
        if self.var != other.var:
            raise RingError(f"variable mismatch: {self.var} vs {other.var}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, OneVarLaurent):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return OneVarLaurent._raw({e: -c for e, c in self.terms.items()}, self.var)

    def __add__(self, other):
        if isinstance(other, int):
            other = OneVarLaurent.const(other, self.var)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return OneVarLaurent._raw(out, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = OneVarLaurent.const(other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return OneVarLaurent.zero(self.var)
            return OneVarLaurent._raw(
                {e: c * other for e, c in self.terms.items()}, self.var)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return OneVarLaurent._raw({e: c for e, c in out.items() if c}, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise RingError("only nonnegative integer powers")
        result = OneVarLaurent.one(self.var)
        for _ in range(n):
            result = result * self
        return result

    def times_monomial(self, coeff, shift):
        if not coeff:
            return OneVarLaurent.zero(self.var)
        return OneVarLaurent._raw(
            {e + shift: c * coeff for e, c in self.terms.items()}, self.var)

    def exact_div(self, other):
        """Exact Laurent division; raises RingError on a nonzero remainder.

        Doubles as an internal consistency check wherever a division is known
        to be exact (Gaussian binomials, Alexander normalisation)."""
        self._check(other)
        return OneVarLaurent._raw(
            _div_terms_exact(self.terms, other.terms), self.var)

    def min_exponent(self):
        if not self.terms:
            raise RingError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exponent(self):
        if not self.terms:
            raise RingError("zero polynomial has no exponents")
        return max(self.terms)

    def render(self):
        items = []
        for e in sorted(self.terms, reverse=True):
            factors = [_var_factor(self.var, e)] if e else []
            items.append((factors, self.terms[e]))
        return _render_terms(items)

    __str__ = render

    def __repr__(self):
        return f"OneVarLaurent({self.render()!r}, var={self.var!r})"


def _div_terms_exact(num, den):
    """Exact division of sparse one-variable Laurent term dicts."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return {}
    nlo, dlo = min(num), min(den)
    ndeg, ddeg = max(num) - nlo, max(den) - dlo
    a = [0] * (ndeg + 1)
    for e, c in num.items():
        a[e - nlo] = c
    b = [0] * (ddeg + 1)
    for e, c in den.items():
        b[e - dlo] = c
    q = _dense_div_exact(a, b)
    shift = nlo - dlo
    return {i + shift: c for i, c in enumerate(q) if c}


def _dense_div_exact(a, b):
    """Exact division of dense integer polynomials (ascending coefficients)."""
    a = list(a)
    db = len(b) - 1
    while b[db] == 0:
        db -= 1
    lead = b[db]
    da = len(a) - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    if da < db:
        if any(a):
            raise RingError("inexact division: nonzero remainder")
        return [0]
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c % lead:
            raise RingError("inexact division: leading coefficient does not divide")
        f = c // lead
        q[i] = f
        if f:
            for j in range(db + 1):
                a[i + j] -= f * b[j]
    if any(a):
        raise RingError("inexact division: nonzero remainder")
    return q


# ---------------------------------------------------------------------------
# Cyclotomic integers
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _cyclotomic(m):
    """Ascending integer coefficients of the m-th cyclotomic polynomial,
    computed by exact division of t^m - 1 by all lower-index factors."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _dense_div_exact(num, list(_cyclotomic(d)))
    return tuple(num)


def cyclotomic_poly(N):
    """Coefficient vector (ascending) of the 2N-th cyclotomic polynomial,
    the defining modulus for `CycScalar` of order N."""
    if N < 2:
        raise ValueError("order must be at least 2")
    return _cyclotomic(2 * N)


def _reduce_mod_cyclotomic(coeffs, modulus):
    """Reduce a dense integer polynomial modulo the monic `modulus`."""
    deg = len(modulus) - 1
    a = list(coeffs)
    for i in range(len(a) - 1, deg - 1, -1):
        f = a[i]
        if f:
            a[i] = 0
            for j in range(deg):
                a[i - deg + j] -= f * modulus[j]
    return a[:deg] + [0] * (deg - len(a))


class CycScalar:
    """Element of Z[xi], xi a primitive 2N-th root of unity, stored as an
    integer residue vector modulo the 2N-th cyclotomic polynomial."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 2:
            raise ValueError("order must be at least 2")
        modulus = cyclotomic_poly(order)
        vec = _reduce_mod_cyclotomic([int(c) for c in coeffs], modulus)
        self.coeffs = tuple(vec)
        self.order = order

    @classmethod
    def _raw(cls, coeffs, order):
        s = cls.__new__(cls)
        s.coeffs = coeffs
        s.order = order
        return s

    @classmethod
    def from_int(cls, c, order):
        deg = len(cyclotomic_poly(order)) - 1
        return cls._raw((int(c),) + (0,) * (deg - 1), order)

    @classmethod
    def zero(cls, order):
        return cls.from_int(0, order)

    @classmethod
    def one(cls, order):
        return cls.from_int(1, order)

    @classmethod
    @functools.lru_cache(maxsize=None)
    def root_power(cls, k, order):
        """xi^k for any integer k (xi has multiplicative order 2N)."""
        k %= 2 * order
        modulus = cyclotomic_poly(order)
        vec = _reduce_mod_cyclotomic([0] * k + [1], modulus)
        return cls._raw(tuple(vec), order)

    def _check(self, other):
        if self.order != other.order:
            raise RingError(f"order mismatch: {self.order} vs {other.order}")

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == CycScalar.from_int(other, self.order)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __neg__(self):
        return CycScalar._raw(tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(other, self.order)
        self._check(other)
        return CycScalar._raw(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycScalar._raw(tuple(c * other for c in self.coeffs), self.order)
        self._check(other)
        n = len(self.coeffs)
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        vec = _reduce_mod_cyclotomic(prod, cyclotomic_poly(self.order))
        return CycScalar._raw(tuple(vec), self.order)

    __rmul__ = __mul__

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_int(self):
        if not self.is_rational():
            raise RingError(f"not a rational integer: {self.render()}")
        return self.coeffs[0]

    def render(self):
        """Residue rendering, ascending powers of z (z = the root of unity)."""
        items = []
        for e, c in enumerate(self.coeffs):
            if c:
                items.append(([_var_factor("z", e)] if e else [], c))
        return _render_terms(items)

    __str__ = render

    def __repr__(self):
        return f"CycScalar({self.render()!r}, order={self.order})"


class CycLaurent:
    """Laurent polynomial in the formal variable s with `CycScalar`
    coefficients; the value ring of the root-of-unity invariants."""

    __slots__ = ("terms", "order")

    def __init__(self, terms, order):
        self.order = order
        self.terms = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, CycScalar):
                c = CycScalar.from_int(c, order)
            if c.order != order:
                raise RingError("coefficient order mismatch")
            if c:
                self.terms[int(e)] = c

    @classmethod
    def _raw(cls, terms, order):
        p = cls.__new__(cls)
        p.terms = terms
        p.order = order
        return p

    @classmethod
    def zero(cls, order):
        return cls._raw({}, order)

    @classmethod
    def one(cls, order):
        return cls._raw({0: CycScalar.one(order)}, order)

    @classmethod
    def monomial(cls, coeff, exp, order):
        if isinstance(coeff, int):
            coeff = CycScalar.from_int(coeff, order)
        return cls._raw({int(exp): coeff} if coeff else {}, order)

    def _check(self, other):
        if self.order != other.order:
            raise RingError(f"order mismatch: {self.order} vs {other.order}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == CycLaurent.monomial(other, 0, self.order)
        if not isinstance(other, CycLaurent):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return CycLaurent._raw({e: -c for e, c in self.terms.items()}, self.order)

    def __add__(self, other):
        if isinstance(other, int):
            other = CycLaurent.monomial(other, 0, self.order)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return CycLaurent._raw(out, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycLaurent.monomial(other, 0, self.order)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            out = {e: c * other for e, c in self.terms.items()}
            return CycLaurent._raw({e: c for e, c in out.items() if c}, self.order)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = e1 + e2
                s = out.get(k)
                out[k] = c1 * c2 if s is None else s + c1 * c2
        return CycLaurent._raw({e: c for e, c in out.items() if c}, self.order)

    __rmul__ = __mul__

    def times_monomial(self, coeff, shift):
        if isinstance(coeff, int):
            coeff = CycScalar.from_int(coeff, self.order)
        out = {}
        for e, c in self.terms.items():
            p = c * coeff
            if p:
                out[e + shift] = p
        return CycLaurent._raw(out, self.order)

    def render(self):
        """Descending s-exponents; non-integer coefficients parenthesized."""
        chunks = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sfac = [_var_factor("s", e)] if e else []
            if c.is_rational():
                chunks.append((sfac, c.to_int()))
            else:
                body = "(" + c.render() + ")"
                chunks.append(([body] + sfac, 1))
        return _render_terms(chunks)

    __str__ = render

    def __repr__(self):
        return f"CycLaurent({self.render()!r}, order={self.order})"


# ---------------------------------------------------------------------------
# Quantum integers, factorials, binomials
# ---------------------------------------------------------------------------

def _qint_terms(n):
    # q^(n-1) + q^(n-3) + ... + q^(1-n); empty for n = 0
    return {n - 1 - 2 * k: 1 for k in range(n)}


@functools.lru_cache(maxsize=None)
def _qfact_terms(n):
    if n <= 0:
        return {0: 1} if n == 0 else None
    prev = _qfact_terms(n - 1)
    out = {}
    for e1, c1 in prev.items():
        for e2, c2 in _qint_terms(n).items():
            k = e1 + e2
            out[k] = out.get(k, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _embed_q(terms):
    return TwoVarLaurent._raw({(e, 0): c for e, c in terms.items()}, QS)


def qint(n):
    """Balanced quantum integer [n]_q as an element of Z[q^±, s^±]."""
    if n < 0:
        raise ValueError("quantum integers are defined for n >= 0 here")
    return _embed_q(_qint_terms(n))


def qfact(n):
    """Balanced quantum factorial [n]_q!."""
    if n < 0:
        raise ValueError("quantum factorials are defined for n >= 0 here")
    return _embed_q(dict(_qfact_terms(n)))


@functools.lru_cache(maxsize=None)
def _qbinom_terms(n, j):
    num = dict(_qfact_terms(n))
    den = {}
    for e1, c1 in _qfact_terms(n - j).items():
        for e2, c2 in _qfact_terms(j).items():
            k = e1 + e2
            den[k] = den.get(k, 0) + c1 * c2
    # exact by construction; a nonzero remainder would expose a bug upstream
    return _div_terms_exact(num, den)


def qbinom(n, j):
    """Gaussian binomial as an exact Laurent polynomial in q."""
    if j < 0 or j > n:
        raise ValueError(f"binomial index out of range: ({n}, {j})")
    return _embed_q(dict(_qbinom_terms(n, j)))


def yfact(n, var="d"):
    """One-sided quantum factorial (n)_y! = prod_k (1 + y + ... + y^(k-1))
    in the named variable, embedded in its owning two-variable ring."""
    if n < 0:
        raise ValueError("quantum factorials are defined for n >= 0 here")
    if var in XD:
        vars_, slot = XD, XD.index(var)
    elif var in QS:
        vars_, slot = QS, QS.index(var)
    else:
        raise ValueError(f"unknown variable {var!r}")
    acc = {0: 1}
    for k in range(1, n + 1):
        out = {}
        for e, c in acc.items():
            for i in range(k):
                out[e + i] = out.get(e + i, 0) + c
        acc = out
    if slot == 0:
        terms = {(e, 0): c for e, c in acc.items()}
    else:
        terms = {(0, e): c for e, c in acc.items()}
    return TwoVarLaurent._raw(terms, vars_)
