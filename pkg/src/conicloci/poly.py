"""Sparse multivariate polynomials over Q with named variables.

A :class:`Ring` fixes an ordered tuple of variable names; a
:class:`Polynomial` is a map from exponent tuples to nonzero ``Fraction``
coefficients.  Text I/O follows a small grammar (integer and rational
literals, variable names, ``+ - * / ^`` and parentheses, no implicit
multiplication) and ``parse(str(p)) == p`` for every polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

# Chart ring: Λ-chart entries, fiber-chart entries, plane parameters.
BASE_VARS = ("a", "b", "c", "d")
FIBER_VARS = ("e", "f", "g", "h", "i", "j", "k", "l", "m")
PARAM_VARS = ("al", "be", "ga", "s", "t")
CHART_VARS = BASE_VARS + FIBER_VARS + PARAM_VARS

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


class Ring:
    """Polynomial ring Q[x_1, ..., x_n] with a fixed variable order."""

    __slots__ = ("names", "index", "nvars", "_zero")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not _IDENT.match(n):
                raise ValueError(f"invalid variable name {n!r}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)
        self._zero = (0,) * len(names)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def __reduce__(self):
        return (Ring, (self.names,))

    def extend(self, extra: Sequence[str]) -> "Ring":
        return Ring(self.names + tuple(n for n in extra if n not in self.index))

    @property
    def zero_exp(self) -> tuple:
        return self._zero

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(n) for n in self.names]

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {self._zero: Fraction(c)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, str):
            return parse(x, self)
        return self.coerce(x)

    def coerce(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x if x.ring == self else x.to_ring(self)
        return self.const(x)


CHART_RING = Ring(CHART_VARS)


# ---------------------------------------------------------------- orders

@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block``.

    A block order compares first by grevlex on the ``eliminate`` variables
    and then by grevlex on the rest, so any monomial containing an
    eliminated variable is larger than every monomial free of them.
    """

    kind: str = "grevlex"
    eliminate: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.eliminate:
            raise ValueError("block order needs a nonempty set of eliminated variables")

    def key(self, ring: Ring):
        return _order_key(self, ring)

    def __str__(self):
        if self.kind == "block":
            return f"block({','.join(self.eliminate)})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(eliminate: Sequence[str]) -> MonomialOrder:
    return MonomialOrder("block", tuple(eliminate))


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@lru_cache(maxsize=None)
def _order_key(order: MonomialOrder, ring: Ring):
    if order.kind == "lex":
        return lambda e: e
    if order.kind == "grevlex":
        return _grevlex_key
    missing = [n for n in order.eliminate if n not in ring.index]
    if missing:
        raise KeyError(f"block order variables {missing} not in {ring}")
    first = tuple(sorted(ring.index[n] for n in order.eliminate))
    rest = tuple(i for i in range(ring.nvars) if i not in set(first))

    def key(e):
        a = tuple(e[i] for i in first)
        b = tuple(e[i] for i in rest)
        return (sum(a), tuple(-x for x in reversed(a)), sum(b), tuple(-x for x in reversed(b)))

    return key


def compare(m1: Sequence[int], m2: Sequence[int], order: MonomialOrder, ring: Ring) -> int:
    """-1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    key = order.key(ring)
    k1, k2 = key(tuple(m1)), key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


# ------------------------------------------------------------ polynomials

def _mono_str(ring: Ring, e: tuple) -> str:
    parts = []
    for name, k in zip(ring.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple, Fraction] | None = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    # -- basic predicates
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.ring.zero_exp, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> list[str]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return [self.ring.names[i] for i in sorted(used)]

    def coefficients_in(self, name: str) -> dict[int, "Polynomial"]:
        """Split as sum_k coeff_k * name^k; coefficients free of ``name``."""
        i = self.ring.index[name]
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[rest] = c
        return {k: Polynomial(self.ring, t) for k, t in parts.items()}

    def leading(self, order: MonomialOrder = GREVLEX) -> tuple[tuple, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key(self.ring)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[tuple, Fraction]]:
        key = order.key(self.ring)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self * (1 / c)

    # -- ring conversion
    def to_ring(self, ring: Ring) -> "Polynomial":
        if ring == self.ring:
            return self
        src = self.ring.names
        targets = []
        for i, n in enumerate(src):
            targets.append(ring.index.get(n))
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    t = targets[i]
                    if t is None:
                        raise ValueError(f"variable {src[i]!r} of {self} is not in {ring}")
                    ne[t] = k
            out[tuple(ne)] = c
        return Polynomial(ring, out)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                return other.to_ring(self.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial(self.ring, {})
            f = Fraction(other)
            return Polynomial(self.ring, {e: c * f for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            other = other.constant_value()
        if not other:
            raise ZeroDivisionError("division by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                try:
                    other = other.to_ring(self.ring)
                except ValueError:
                    return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- evaluation
    def substitute(self, assignment: Mapping[str, object], ring: Ring | None = None) -> "Polynomial":
        """Replace variables by polynomials or rationals and expand.

        Values may live in another ring; the result lives in ``ring``
        (default: this polynomial's ring) and keeps every unassigned
        variable.
        """
        target = ring or self.ring
        idx = {}
        for name, val in assignment.items():
            if name not in self.ring.index:
                raise KeyError(f"{name!r} is not a variable of {self.ring}")
            idx[self.ring.index[name]] = target.coerce(val)
        power_cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = idx[i] ** k
            return power_cache[key]

        keep_names = [(i, n) for i, n in enumerate(self.ring.names) if i not in idx]
        result = target.zero()
        for e, c in self.terms.items():
            mono = [0] * target.nvars
            for i, n in keep_names:
                if e[i]:
                    t = target.index.get(n)
                    if t is None:
                        raise ValueError(f"variable {n!r} has no image in {target}")
                    mono[t] = e[i]
            term = Polynomial(target, {tuple(mono): c})
            for i in idx:
                if e[i]:
                    term = term * power(i, e[i])
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        """Value at a full rational point (every used variable assigned)."""
        total = Fraction(0)
        vals = [None] * self.ring.nvars
        for n, v in point.items():
            if n in self.ring.index:
                vals[self.ring.index[n]] = Fraction(v)
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise KeyError(f"no value for {self.ring.names[i]!r}")
                    t *= vals[i] ** k
            total += t
        return total

    # -- text
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial({to_text(self)!r})"


def to_text(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text: terms in descending ``order``, ``*`` and ``^`` explicit."""
    if not p.terms:
        return "0"
    out = []
    for n, (e, c) in enumerate(p.sorted_terms(order)):
        mono = _mono_str(p.ring, e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------- parsing

_NUM = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUM.match(text, pos)
        if m:
            tokens.append(("num", m.group(), pos))
            pos = m.end()
            continue
        m = _NAME.match(text, pos)
        if m:
            tokens.append(("name", m.group(), pos))
            pos = m.end()
            continue
        if ch not in "+-*/^()":
            raise ParseError(f"unexpected character {ch!r}", pos, text)
        tokens.append(("op", ch, pos))
        pos += 1
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                self.error("implicit multiplication is not allowed", tok)
            self.error(f"unexpected {tok[1]!r}", tok)
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division only by a nonzero constant", tok)
                p = p / q.constant_value()
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return self.ring.const(int(tok[1]))
        if tok[0] == "name":
            if tok[1] not in self.ring.index:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return self.ring.var(tok[1])
        if tok[1] == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                self.error("expected ')'", close)
            return p
        self.error(f"unexpected {tok[1] or 'end of input'!r}", tok)


def parse(text: str, ring: Ring = CHART_RING) -> Polynomial:
    return _Parser(text, ring).parse()


def parse_list(texts, ring: Ring = CHART_RING) -> list[Polynomial]:
    """Parse a list of strings or one comma-separated string."""
    if isinstance(texts, str):
        texts = [t for t in _split_top_level(texts) if t.strip()]
    return [parse(t, ring) for t in texts]


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def det(matrix: Sequence[Sequence]):
    """Determinant of a small square matrix of polynomials or rationals (Laplace)."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = 0
    for j in range(n):
        entry = matrix[0][j]
        if isinstance(entry, Polynomial) and entry.is_zero() or (not isinstance(entry, Polynomial) and entry == 0):
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
