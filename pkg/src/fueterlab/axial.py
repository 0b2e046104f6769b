"""Exact symbolic calculus on functions of (x0, r) from a closed term algebra.

A term is a rational multiple of

    x0^a * r^b * Q^-p * E^g * T(x0*r)

with Q = x0^2 + r^2, E = exp((x0^2 - r^2)/2), and T one of {1, cos, sin}
with argument fixed to x0*r.  Exponents: a >= 0, b any integer, p >= 0,
g in {0, 1}.  This family is closed under d/dx0, d/dr, division by r, and
products in which at most one factor carries a trig tag and at most one
carries the exp flag.  Trig phase shifts by multiples of pi/2 fold into
the tag and the sign of the coefficient, so keys stay canonical.

Equality of expressions is semantic: the six (exp flag, trig tag) classes
are linearly independent over rational functions in (x0, r), so an
expression vanishes identically on {r > 0} iff, for every class, the
polynomial obtained by expanding Q and clearing the denominators r^B Q^P
vanishes.  `AxialExpr.__eq__` implements exactly this decision.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

import mpmath

TRIG_NONE = ""
TRIG_COS = "cos"
TRIG_SIN = "sin"
_TRIGS = (TRIG_NONE, TRIG_COS, TRIG_SIN)


class AlgebraClosureError(ValueError):
    """An operation would leave the closed term algebra."""


class EvalDomainError(ValueError):
    """Evaluation requested outside the expression's domain."""


def _check_key(a: int, b: int, p: int, g: int, t: str) -> None:
    if a < 0:
        raise AlgebraClosureError("negative x0 exponent is outside the algebra")
    if p < 0:
        raise ValueError("Q exponent must be nonnegative")
    if g not in (0, 1):
        raise ValueError("exp flag must be 0 or 1")
    if t not in _TRIGS:
        raise ValueError(f"unknown trig tag {t!r}")


class AxialExpr:
    """Finite sum of terms keyed by (a, b, p, g, t) with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, q in (terms or {}).items():
            a, b, p, g, t = key
            _check_key(a, b, p, g, t)
            q = Fraction(q)
            if q:
                clean[(a, b, p, g, t)] = q
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AxialExpr is immutable")

    # --- constructors ---

    @classmethod
    def zero(cls) -> "AxialExpr":
        return cls()

    @classmethod
    def term(cls, q, a: int = 0, b: int = 0, p: int = 0, g: int = 0, t: str = TRIG_NONE) -> "AxialExpr":
        return cls({(a, b, p, g, t): Fraction(q)})

    @classmethod
    def const(cls, q) -> "AxialExpr":
        return cls.term(q)

    # --- bookkeeping ---

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_structurally_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    # --- linear structure ---

    def __add__(self, other):
        if not isinstance(other, AxialExpr):
            return NotImplemented
        out = dict(self.terms)
        for key, q in other.terms.items():
            out[key] = out.get(key, 0) + q
        return AxialExpr(out)

    def __sub__(self, other):
        if not isinstance(other, AxialExpr):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AxialExpr({key: -q for key, q in self.terms.items()})

    def scale(self, c) -> "AxialExpr":
        c = Fraction(c)
        return AxialExpr({key: c * q for key, q in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AxialExpr):
            return self._mul_expr(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def _mul_expr(self, other: "AxialExpr") -> "AxialExpr":
        out: dict = {}
        for (a1, b1, p1, g1, t1), q1 in self.terms.items():
            for (a2, b2, p2, g2, t2), q2 in other.terms.items():
                if t1 and t2:
                    raise AlgebraClosureError("product of two trig factors leaves the algebra")
                if g1 and g2:
                    raise AlgebraClosureError("product of two exp factors leaves the algebra")
                key = (a1 + a2, b1 + b2, p1 + p2, g1 + g2, t1 or t2)
                out[key] = out.get(key, 0) + q1 * q2
        return AxialExpr(out)

    def div_r(self, n: int = 1) -> "AxialExpr":
        """Divide by r^n (exact in the algebra)."""
        return AxialExpr({(a, b - n, p, g, t): q for (a, b, p, g, t), q in self.terms.items()})

    # --- calculus ---

    def diff(self, var: str) -> "AxialExpr":
        """Exact partial derivative with respect to 'x0' or 'r'."""
        if var not in ("x0", "r"):
            raise ValueError(f"unknown variable {var!r}")
        out: dict = {}

        def put(key, q):
            if q:
                out[key] = out.get(key, 0) + q

        for (a, b, p, g, t), q in self.terms.items():
            if var == "x0":
                if a:
                    put((a - 1, b, p, g, t), q * a)
                if p:
                    put((a + 1, b, p + 1, g, t), -2 * p * q)
                if g:
                    put((a + 1, b, p, g, t), q)
                if t == TRIG_COS:
                    put((a, b + 1, p, g, TRIG_SIN), -q)
                elif t == TRIG_SIN:
                    put((a, b + 1, p, g, TRIG_COS), q)
            else:
                if b:
                    put((a, b - 1, p, g, t), q * b)
                if p:
                    put((a, b + 1, p + 1, g, t), -2 * p * q)
                if g:
                    put((a, b + 1, p, g, t), -q)
                if t == TRIG_COS:
                    put((a + 1, b, p, g, TRIG_SIN), -q)
                elif t == TRIG_SIN:
                    put((a + 1, b, p, g, TRIG_COS), q)
        return AxialExpr(out)

    def restrict_x0(self) -> "AxialExpr":
        """Substitute x0 = 0.

        Terms with a positive x0 power or a sin factor vanish, cos becomes
        1, and Q collapses to r^2.  The surviving exp flag stands for
        exp(-r^2/2); evaluate the result at x0 = 0 only.
        """
        out: dict = {}
        for (a, b, p, g, t), q in self.terms.items():
            if a > 0 or t == TRIG_SIN:
                continue
            key = (0, b - 2 * p, 0, g, TRIG_NONE)
            out[key] = out.get(key, 0) + q
        return AxialExpr(out)

    # --- semantic equality -----------------------------------------------

    def _class_split(self):
        classes: dict = {}
        for (a, b, p, g, t), q in self.terms.items():
            classes.setdefault((g, t), []).append((a, b, p, q))
        return classes

    def is_zero(self) -> bool:
        """True iff the expression vanishes identically on {r > 0}."""
        for items in self._class_split().values():
            pmax = max(p for _, _, p, _ in items)
            bshift = max(0, -min(b for _, b, _, _ in items))
            acc: dict = {}
            for a, b, p, q in items:
                e = pmax - p
                for i in range(e + 1):
                    key = (a + 2 * i, b + bshift + 2 * (e - i))
                    acc[key] = acc.get(key, 0) + q * math.comb(e, i)
            if any(acc.values()):
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, AxialExpr):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # --- evaluation ---------------------------------------------------------

    def evaluate(self, x0: float, r: float) -> float:
        """Binary64 evaluation; factors computed as written (Q stays factored)."""
        if r < 0:
            raise EvalDomainError("radius r must be nonnegative")
        if r == 0 and any(b < 0 for (_, b, _, _, _) in self.terms):
            raise EvalDomainError("negative powers of r at r = 0")
        q_val = x0 * x0 + r * r
        if q_val == 0 and any(p > 0 for (_, _, p, _, _) in self.terms):
            raise EvalDomainError("negative powers of Q at the origin")
        total = 0.0
        for (a, b, p, g, t), q in self.terms.items():
            val = float(q)
            if a:
                val *= x0 ** a
            if b:
                val *= r ** b
            if p:
                val *= q_val ** (-p)
            if g:
                val *= math.exp((x0 * x0 - r * r) / 2.0)
            if t == TRIG_COS:
                val *= math.cos(x0 * r)
            elif t == TRIG_SIN:
                val *= math.sin(x0 * r)
            total += val
        return total

    def evaluate_mp(self, x0, r):
        """High-precision evaluation under the ambient mpmath precision."""
        x0 = mpmath.mpf(x0)
        r = mpmath.mpf(r)
        if r < 0:
            raise EvalDomainError("radius r must be nonnegative")
        q_val = x0 * x0 + r * r
        total = mpmath.mpf(0)
        for (a, b, p, g, t), q in self.terms.items():
            val = mpmath.mpf(q.numerator) / q.denominator
            if a:
                val *= x0 ** a
            if b:
                val *= r ** b
            if p:
                val *= q_val ** (-p)
            if g:
                val *= mpmath.exp((x0 * x0 - r * r) / 2)
            if t == TRIG_COS:
                val *= mpmath.cos(x0 * r)
            elif t == TRIG_SIN:
                val *= mpmath.sin(x0 * r)
            total += val
        return total

    def __str__(self) -> str:
        return format_axial(self)

    def __repr__(self) -> str:
        return f"AxialExpr({format_axial(self)!r})"


# --- module-level operator interface ----------------------------------------


def diff(expr: AxialExpr, var: str) -> AxialExpr:
    return expr.diff(var)


def d_lower(n: int, expr: AxialExpr) -> AxialExpr:
    """n-fold (1/r d/dr); order 0 is the identity."""
    if n < 0:
        raise ValueError("operator order must be nonnegative")
    out = expr
    for _ in range(n):
        out = out.diff("r").div_r()
    return out


def d_upper(n: int, expr: AxialExpr) -> AxialExpr:
    """n-fold d/dr(./r), innermost first; order 0 is the identity."""
    if n < 0:
        raise ValueError("operator order must be nonnegative")
    out = expr
    for _ in range(n):
        out = out.div_r().diff("r")
    return out


def equals(e1: AxialExpr, e2: AxialExpr) -> bool:
    return (e1 - e2).is_zero()


def eval_expr(expr: AxialExpr, x0: float, r: float) -> float:
    return expr.evaluate(x0, r)


def trig_shift(base: str, nu: int) -> tuple[int, str]:
    """Fold a phase shift of nu*pi/2 into a sign and a bare cos/sin tag."""
    if base not in (TRIG_COS, TRIG_SIN):
        raise ValueError(f"base must be cos or sin, got {base!r}")
    k = nu % 4
    if base == TRIG_COS:
        return ((1, TRIG_COS), (-1, TRIG_SIN), (-1, TRIG_COS), (1, TRIG_SIN))[k]
    return ((1, TRIG_SIN), (1, TRIG_COS), (-1, TRIG_SIN), (-1, TRIG_COS))[k]


# --- text form ---------------------------------------------------------------
#
# term := q [*x0[^a]] [*r^b | *r] [*Q^-p] [*E] [*cos|*sin]
# with Q = (x0^2+r^2), E = exp((x0^2-r^2)/2) and trig argument x0*r.
# Terms are joined by +/- in ascending key order (a, b, p, g, t).


def _term_sort_key(item):
    (a, b, p, g, t), _ = item
    return (a, b, p, g, _TRIGS.index(t))


def format_axial(expr: AxialExpr) -> str:
    if not expr.terms:
        return "0"
    parts = []
    for (a, b, p, g, t), q in sorted(expr.terms.items(), key=_term_sort_key):
        neg = q < 0
        mag = -q if neg else q
        factors = [str(mag)]
        if a == 1:
            factors.append("x0")
        elif a:
            factors.append(f"x0^{a}")
        if b == 1:
            factors.append("r")
        elif b:
            factors.append(f"r^{b}")
        if p:
            factors.append(f"Q^-{p}")
        if g:
            factors.append("E")
        if t:
            factors.append(t)
        body = "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_AXIAL_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<rat>\d+(?:/\d+)?)"
    r"|(?P<x0>x0(?:\^-?\d+)?)"
    r"|(?P<r>r(?:\^-?\d+)?)"
    r"|(?P<q>Q\^-\d+)"
    r"|(?P<exp>E\b|exp\(\(x0\^2-r\^2\)/2\))"
    r"|(?P<trig>cos|sin)"
    r"|(?P<op>[+\-*])"
    r")"
)


def parse_axial(text: str) -> AxialExpr:
    """Round-trip parser for the axial term grammar."""
    pos = 0
    tokens = []
    while pos < len(text):
        mo = _AXIAL_TOKEN_RE.match(text, pos)
        if mo is None or mo.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        pos = mo.end()
        tokens.append((mo.lastgroup, mo.group(mo.lastgroup)))

    terms: dict = {}
    sign = 1
    cur = None  # (q, a, b, p, g, t)

    def flush():
        nonlocal cur, sign
        if cur is not None:
            q, a, b, p, g, t = cur
            key = (a, b, p, g, t)
            terms[key] = terms.get(key, 0) + q
        cur = None
        sign = 1

    def ensure():
        nonlocal cur
        if cur is None:
            cur = [Fraction(sign), 0, 0, 0, 0, TRIG_NONE]

    for kind, tok in tokens:
        if kind == "op":
            if tok == "*":
                continue
            flush()
            if tok == "-":
                sign = -sign
        elif kind == "rat":
            ensure()
            cur[0] *= Fraction(tok)
        elif kind == "x0":
            ensure()
            cur[1] += int(tok[3:]) if "^" in tok else 1
        elif kind == "r":
            ensure()
            cur[2] += int(tok[2:]) if "^" in tok else 1
        elif kind == "q":
            ensure()
            cur[3] += int(tok[3:])
        elif kind == "exp":
            ensure()
            cur[4] += 1
        elif kind == "trig":
            ensure()
            if cur[5]:
                raise AlgebraClosureError("two trig factors in one term")
            cur[5] = tok
    flush()
    return AxialExpr(terms)


# Convenience atoms.
ONE = AxialExpr.const(1)
X0 = AxialExpr.term(1, a=1)
R = AxialExpr.term(1, b=1)
E = AxialExpr.term(1, g=1)
COS = AxialExpr.term(1, t=TRIG_COS)
SIN = AxialExpr.term(1, t=TRIG_SIN)


def q_inv(p: int = 1) -> AxialExpr:
    """Q^-p = (x0^2 + r^2)^-p."""
    return AxialExpr.term(1, p=p)
