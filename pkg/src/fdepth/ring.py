"""Base ring layer: F_p arithmetic and sparse multivariate polynomials.

Everything here is immutable after construction and every operation is a
pure function, so values can be shared freely across threads.  Heavy term
manipulation is delegated to the active kernel backend (compiled if
available, pure Python otherwise); this module owns validation, the public
types and the text grammar.
"""

import re

from ._kernel import impl as K
from .errors import DimensionMismatch, ParseError, ZeroInverse

GREVLEX = K.GREVLEX
LEX = K.LEX
BLOCK = K.BLOCK

_ORDER_TAGS = {"grevlex": GREVLEX, "lex": LEX, "block": BLOCK}

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_prime(p):
    """Trial division; fine for p < 2^16."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RingCtx:
    """The ambient ring F_p[x_1..x_n] with a fixed monomial order.

    ``order`` is one of ``"grevlex"``, ``"lex"``, ``"block"``; a block order
    compares the first ``split`` variables (grevlex) before the rest, which
    is what variable elimination needs.
    """

    __slots__ = ("p", "n", "var_names", "order", "split", "_var_index")

    def __init__(self, p, var_names, order="grevlex", split=0):
        p = int(p)
        if not (2 <= p < 2 ** 16):
            raise ValueError(f"p={p} out of range [2, 2^16)")
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        var_names = tuple(var_names)
        if not var_names:
            raise ValueError("need at least one variable")
        if len(set(var_names)) != len(var_names):
            raise ValueError("variable names must be distinct")
        for name in var_names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name {name!r}")
        if order not in _ORDER_TAGS:
            raise ValueError(f"unknown order {order!r}")
        if order == "block" and not (1 <= split < len(var_names)):
            raise ValueError("block order needs 1 <= split < n")
        self.p = p
        self.n = len(var_names)
        self.var_names = var_names
        self.order = order
        self.split = split if order == "block" else 0
        self._var_index = {name: i for i, name in enumerate(var_names)}

    @property
    def okind(self):
        return _ORDER_TAGS[self.order]

    def var_index(self, name):
        try:
            return self._var_index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def with_order(self, order, split=0):
        return RingCtx(self.p, self.var_names, order, split)

    def zero(self):
        return Polynomial(self, K.poly_zero(self.n))

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial.from_terms(self, [(c, (0,) * self.n)])

    def variable(self, i):
        e = [0] * self.n
        e[i] = 1
        return Polynomial.from_terms(self, [(1, tuple(e))])

    def gens(self):
        return tuple(self.variable(i) for i in range(self.n))

    def __eq__(self, other):
        return (isinstance(other, RingCtx)
                and (self.p, self.var_names, self.order, self.split)
                == (other.p, other.var_names, other.order, other.split))

    def __hash__(self):
        return hash((self.p, self.var_names, self.order, self.split))

    def __repr__(self):
        tail = f", split={self.split}" if self.order == "block" else ""
        return (f"RingCtx(p={self.p}, vars={','.join(self.var_names)}, "
                f"order={self.order}{tail})")


def ff_inv(a, ctx):
    """Inverse of a nonzero residue mod p (Fermat exponentiation)."""
    a %= ctx.p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {ctx.p}")
    return pow(a, ctx.p - 2, ctx.p)


class Monomial:
    """An exponent vector; total degree is cached at construction."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents):
        self.exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")
        self.degree = sum(self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial{self.exponents}"


def monomial_cmp(a, b, ctx):
    """Three-way comparison under ctx.order: 1 if a > b, -1 if a < b."""
    ea = a.exponents if isinstance(a, Monomial) else tuple(a)
    eb = b.exponents if isinstance(b, Monomial) else tuple(b)
    if len(ea) != len(eb) or len(ea) != ctx.n:
        raise DimensionMismatch(f"monomial lengths {len(ea)}, {len(eb)} "
                                f"in a ring with {ctx.n} variables")
    return K.mono_cmp(ea, eb, ctx.okind, ctx.split)


class Polynomial:
    """A sparse polynomial over F_p, terms strictly descending in ctx.order.

    ``data`` is an opaque kernel handle; use ``terms`` to inspect it.
    """

    __slots__ = ("ctx", "data")

    def __init__(self, ctx, data):
        self.ctx = ctx
        self.data = data

    @classmethod
    def from_terms(cls, ctx, pairs):
        """Build from (coeff, exps) pairs; merges, reduces mod p, sorts."""
        norm = []
        for c, e in pairs:
            if isinstance(e, Monomial):
                e = e.exponents
            norm.append((c, e))
        return cls(ctx, K.poly_from_terms(norm, ctx.p, ctx.n, ctx.okind, ctx.split))

    @property
    def terms(self):
        """Terms as (coeff, Monomial) pairs, descending."""
        return tuple((c, Monomial(e)) for c, e in K.poly_terms(self.data))

    def is_zero(self):
        return K.poly_is_zero(self.data)

    def __bool__(self):
        return not K.poly_is_zero(self.data)

    def lt(self):
        """Leading (coeff, Monomial), or None if zero."""
        t = K.poly_lt(self.data)
        return None if t is None else (t[0], Monomial(t[1]))

    def lm_exps(self):
        t = K.poly_lt(self.data)
        return None if t is None else t[1]

    @property
    def degree(self):
        """Max total degree over terms; -1 for the zero polynomial."""
        return K.poly_total_degree(self.data)

    def is_homogeneous(self):
        return K.poly_is_homogeneous(self.data)

    def is_monomial(self):
        return K.poly_nterms(self.data) == 1

    def monic(self):
        t = K.poly_lt(self.data)
        if t is None or t[0] == 1:
            return self
        return Polynomial(self.ctx, K.poly_scale(self.data, ff_inv(t[0], self.ctx), self.ctx.p))

    def _check_same_ring(self, other):
        if self.ctx != other.ctx:
            raise DimensionMismatch("polynomials from different rings")

    def __add__(self, other):
        self._check_same_ring(other)
        c = self.ctx
        return Polynomial(c, K.poly_add(self.data, other.data, c.p, c.okind, c.split))

    def __sub__(self, other):
        self._check_same_ring(other)
        c = self.ctx
        return Polynomial(c, K.poly_sub(self.data, other.data, c.p, c.okind, c.split))

    def __neg__(self):
        return Polynomial(self.ctx, K.poly_neg(self.data, self.ctx.p))

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ctx, K.poly_scale(self.data, other, self.ctx.p))
        self._check_same_ring(other)
        c = self.ctx
        return Polynomial(c, K.poly_mul(self.data, other.data, c.p, c.okind, c.split))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ctx == other.ctx
                and K.poly_eq(self.data, other.data))

    def __hash__(self):
        return hash((self.ctx, tuple(K.poly_terms(self.data))))

    def __repr__(self):
        return format_polynomial(self)


def poly_mul(f, g, ctx):
    """Product in ctx; kept as a free function to mirror the ring API."""
    return f * g


def poly_power_p(f, e, ctx):
    """f^(p^e), computed term-wise: Frobenius is a ring endomorphism, so
    each coefficient goes to its p^e-th power and each exponent scales."""
    if e < 0:
        raise ValueError("e must be >= 0")
    q = ctx.p ** e
    return Polynomial(ctx, K.poly_power_bracket(f.data, q, ctx.p))


# ---------------------------------------------------------------------------
# text grammar
#
# terms joined by +/-; a term is coeff*mono, mono, or coeff; a mono is name^k
# factors joined by *; whitespace ignored.  Examples:
#   x^3 + y^3 + z^3        2*x*y - z^2

_TOKEN_RE = re.compile(r"\s*([+-]|[A-Za-z_][A-Za-z0-9_]*|\d+|\^|\*)")


def parse_polynomial(text, ctx):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"bad character at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial")

    terms = []
    i = 0

    def parse_term(sign):
        nonlocal i
        coeff = sign
        exps = [0] * ctx.n
        saw_factor = False
        want_factor = False
        while True:
            if i >= len(tokens):
                break
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                if not saw_factor or want_factor:
                    raise ParseError("misplaced '*'")
                want_factor = True
                i += 1
                continue
            if tok.isdigit():
                coeff = coeff * int(tok)
                i += 1
            elif tok == "^":
                raise ParseError("misplaced '^'")
            else:
                vi = ctx.var_index(tok)
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise ParseError("'^' needs an integer exponent")
                    exps[vi] += int(tokens[i])
                    i += 1
                else:
                    exps[vi] += 1
            saw_factor = True
            want_factor = False
        if not saw_factor or want_factor:
            raise ParseError("empty term")
        terms.append((coeff, tuple(exps)))

    sign = 1
    if tokens[0] in "+-":
        sign = -1 if tokens[0] == "-" else 1
        i = 1
    parse_term(sign)
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        else:
            raise ParseError(f"expected '+' or '-', got {tok!r}")
        i += 1
        parse_term(sign)
    return Polynomial.from_terms(ctx, terms)


def _format_mono(exps, ctx):
    factors = []
    for name, e in zip(ctx.var_names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_polynomial(f):
    """Canonical text form; parse(format(f)) == f."""
    ctx = f.ctx
    parts = []
    for c, e in K.poly_terms(f.data):
        mono = _format_mono(e, ctx)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"
