"""Buchberger's algorithm and the ideal calculus built on it.

Internally polynomials are dicts ``{exponent: int}`` kept primitive
(integer coefficients, content 1, positive leading coefficient), which
keeps coefficient growth in check without any modular shortcuts.
Returned bases are reduced and monic, hence canonical for the ideal and
the order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm as int_lcm
from operator import le
from typing import Iterable, Sequence

from .poly import GREVLEX, MonomialOrder, Polynomial, Ring, block_order

_BIG = 1 << 64


# ------------------------------------------------------- integer internals

def _to_int(p: Polynomial) -> dict:
    den = 1
    for c in p.terms.values():
        den = int_lcm(den, c.denominator)
    return {e: int(c * den) for e, c in p.terms.items()}


def _content(*dicts) -> int:
    g = 0
    for d in dicts:
        for v in d.values():
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _primitive(p: dict, key) -> dict:
    if not p:
        return p
    g = _content(p)
    lm = max(p, key=key)
    if p[lm] < 0:
        g = -g
    if g != 1:
        p = {e: v // g for e, v in p.items()}
    return p


def _divides(a, b) -> bool:
    return all(map(le, a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


def _coprime(a, b) -> bool:
    return not any(map(min, a, b))


class _Keyed:
    """Memoized order key, shared by one GB computation."""

    __slots__ = ("key", "cache")

    def __init__(self, key):
        self.key = key
        self.cache = {}

    def __call__(self, e):
        k = self.cache.get(e)
        if k is None:
            k = self.cache[e] = self.key(e)
        return k


def _reduce(p: dict, basis: Sequence[tuple], key) -> dict:
    """Full reduction of ``p`` modulo ``basis`` = [(lm, lc, poly), ...]."""
    p = dict(p)
    rem: dict = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc, g in basis:
            if _divides(lm, m):
                break
        else:
            rem[m] = c
            del p[m]
            continue
        q = gcd(c, lc)
        a, b = lc // q, c // q
        if a != 1:
            p = {e: v * a for e, v in p.items()}
            rem = {e: v * a for e, v in rem.items()}
        shift = tuple(x - y for x, y in zip(m, lm))
        for e, v in g.items():
            ne = tuple(x + y for x, y in zip(e, shift))
            nv = p.get(ne, 0) - b * v
            if nv:
                p[ne] = nv
            else:
                p.pop(ne, None)
        if a != 1 and any(abs(v) > _BIG for v in p.values()):
            g2 = _content(p, rem)
            if g2 > 1:
                p = {e: v // g2 for e, v in p.items()}
                rem = {e: v // g2 for e, v in rem.items()}
    return _primitive(rem, key)


def _spoly(f: tuple, g: tuple) -> dict:
    (lf, cf, pf), (lg, cg, pg) = f, g
    L = _lcm(lf, lg)
    q = gcd(cf, cg)
    af, ag = cg // q, cf // q
    sf = tuple(x - y for x, y in zip(L, lf))
    sg = tuple(x - y for x, y in zip(L, lg))
    out: dict = {}
    for e, v in pf.items():
        ne = tuple(x + y for x, y in zip(e, sf))
        out[ne] = out.get(ne, 0) + af * v
    for e, v in pg.items():
        ne = tuple(x + y for x, y in zip(e, sg))
        nv = out.get(ne, 0) - ag * v
        if nv:
            out[ne] = nv
        else:
            out.pop(ne, None)
    return out


def _entry(p: dict, key) -> tuple:
    lm = max(p, key=key)
    return (lm, p[lm], p)


def _groebner_int(F: list[dict], key) -> list[tuple]:
    """Reduced basis as entries (lm, lc, primitive poly), ascending by lm."""
    entries: list[tuple] = []
    G: list[int] = []
    # pending pairs as (sort key, i, j, lcm of leading monomials)
    B: list[tuple] = []

    def active():
        return [entries[i] for i in G]

    def update(ih):
        nonlocal G, B
        h_lm = entries[ih][0]
        lcms = {ig: _lcm(h_lm, entries[ig][0]) for ig in G}
        C = list(G)
        D: list[int] = []
        while C:
            ig = C.pop(0)
            L = lcms[ig]
            if _coprime(h_lm, entries[ig][0]) or not any(
                    _divides(lcms[x], L) for x in C + D):
                D.append(ig)
        keep = []
        for pair in B:
            _, i, j, Lij = pair
            if (_divides(h_lm, Lij)
                    and _lcm(entries[i][0], h_lm) != Lij
                    and _lcm(entries[j][0], h_lm) != Lij):
                continue
            keep.append(pair)
        for ig in D:
            if not _coprime(h_lm, entries[ig][0]):
                L = lcms[ig]
                keep.append(((key(L), key(entries[ig][0]), key(h_lm), ig, ih), ig, ih, L))
        B = keep
        G = [ig for ig in G if not _divides(h_lm, entries[ig][0])] + [ih]

    for f in sorted((f for f in F if f), key=lambda f: key(max(f, key=key))):
        r = _reduce(f, active(), key)
        if r:
            if len(r) == 1 and not any(next(iter(r))):
                return [_entry({next(iter(r)): 1}, key)]
            entries.append(_entry(r, key))
            update(len(entries) - 1)

    while B:
        pair = min(B)
        B.remove(pair)
        h = _spoly(entries[pair[1]], entries[pair[2]])
        if not h:
            continue
        h = _reduce(h, active(), key)
        if h:
            if len(h) == 1 and not any(next(iter(h))):
                return [_entry({next(iter(h)): 1}, key)]
            entries.append(_entry(h, key))
            update(len(entries) - 1)

    basis = sorted(active(), key=lambda t: key(t[0]))
    # lms are already minimal; tail-reduce each element by the others
    reduced = []
    for n, (lm, lc, g) in enumerate(basis):
        others = basis[:n] + basis[n + 1:]
        r = _reduce(g, others, key)
        reduced.append(_entry(r, key))
    return sorted(reduced, key=lambda t: key(t[0]))


def _from_int(ring: Ring, entry: tuple) -> Polynomial:
    lm, lc, p = entry
    return Polynomial(ring, {e: Fraction(v, lc) for e, v in p.items()})


# ------------------------------------------------------------ public API

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic basis sorted ascending by leading monomial."""

    elements: tuple
    order: MonomialOrder
    ring: Ring

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list[tuple]:
        return [p.leading(self.order)[0] for p in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def texts(self) -> list[str]:
        return [str(p) for p in self.elements]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and self.ring == other.ring and self.elements == other.elements)

    def __hash__(self):
        return hash((self.order, self.ring, self.elements))


class Ideal:
    """Ideal of a polynomial ring given by generators (zeros dropped)."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, gens: Iterable[Polynomial], ring: Ring | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("ring required for an ideal without generators")
            ring = gens[0].ring
        self.ring = ring
        self.gens = tuple(ring.coerce(g) for g in gens if not ring.coerce(g).is_zero())
        self._gb: dict = {}

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = self._gb[order] = buchberger(self, order)
        return gb

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __contains__(self, p) -> bool:
        return ideal_member(self.ring.coerce(p), self)

    def __eq__(self, other):
        return isinstance(other, Ideal) and ideal_equal(self, other)

    def __hash__(self):
        return hash(self.groebner().elements)

    def is_unit(self) -> bool:
        return is_unit(self)

    def is_zero(self) -> bool:
        return not self.gens

    def texts(self) -> list[str]:
        return [str(g) for g in self.gens]

    def to_ring(self, ring: Ring) -> "Ideal":
        return Ideal([g.to_ring(ring) for g in self.gens], ring)

    def variables(self) -> list[str]:
        used = set()
        for g in self.gens:
            used.update(g.variables())
        return [n for n in self.ring.names if n in used]

    def __repr__(self):
        return f"Ideal<{', '.join(self.texts())}>"


def buchberger(I: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I`` (normal selection, Gebauer–Möller criteria)."""
    key = _Keyed(order.key(I.ring))
    ints = [_primitive(_to_int(g), key) for g in I.gens]
    entries = _groebner_int(ints, key) if ints else []
    return GroebnerBasis(tuple(_from_int(I.ring, t) for t in entries), order, I.ring)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on division by ``G`` (same ring), as a rational polynomial.

    The remainder is returned up to the scalar the integer division
    introduces, normalized to be monic; it is zero iff p lies in <G>.
    """
    p = G.ring.coerce(p)
    if p.is_zero():
        return p
    key = _Keyed(G.order.key(G.ring))
    basis = [_entry(_primitive(_to_int(g), key), key) for g in G.elements]
    r = _reduce(_to_int(p), basis, key)
    if not r:
        return G.ring.zero()
    return _from_int(G.ring, _entry(r, key))


def remainder(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Exact remainder of ``p`` modulo ``G`` (no rescaling)."""
    p = G.ring.coerce(p)
    key = G.order.key(G.ring)
    rest = dict(p.terms)
    rem: dict = {}
    lead = [(g.leading(G.order)[0], g) for g in G.elements]
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for lm, g in lead:
            if _divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                for e, v in g.terms.items():
                    ne = tuple(x + y for x, y in zip(e, shift))
                    nv = rest.get(ne, 0) - c * v
                    if nv:
                        rest[ne] = nv
                    else:
                        rest.pop(ne, None)
                break
        else:
            rem[m] = c
            del rest[m]
    return Polynomial(G.ring, rem)


def ideal_member(p: Polynomial, I: Ideal) -> bool:
    return normal_form(p, I.groebner()).is_zero()


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        J = J.to_ring(I.ring)
    return I.groebner().elements == J.groebner().elements


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        J = J.to_ring(I.ring)
    return Ideal(I.gens + J.gens, I.ring)


def is_unit(I: Ideal) -> bool:
    return I.groebner().is_unit()


def eliminate(I: Ideal, drop: Iterable[str]) -> Ideal:
    """I ∩ Q[remaining variables], via a block order with ``drop`` first.

    The result is returned in the same ring, generated by the reduced
    block-order basis elements free of the dropped variables.
    """
    drop = tuple(n for n in I.ring.names if n in set(drop))
    if not drop:
        return I
    gb = I.groebner(block_order(drop))
    idx = [I.ring.index[n] for n in drop]
    kept = [g for g in gb.elements if all(e[i] == 0 for e in g.terms for i in idx)]
    return Ideal(kept, I.ring)


def _fresh(ring: Ring, stem: str) -> str:
    name, n = stem, 0
    while name in ring.index:
        n += 1
        name = f"{stem}{n}"
    return name


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^∞, computed as (I + <z f - 1>) ∩ Q[x]."""
    f = I.ring.coerce(f)
    if f.is_constant():
        if f.is_zero():
            raise ZeroDivisionError("saturation by zero")
        return I
    z = _fresh(I.ring, "zsat")
    big = I.ring.extend([z])
    zf = big.var(z) * f.to_ring(big) - 1
    J = Ideal([g.to_ring(big) for g in I.gens] + [zf], big)
    return Ideal([g.to_ring(I.ring) for g in eliminate(J, [z]).gens], I.ring)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J, computed as (t I + (1 - t) J) ∩ Q[x]."""
    if I.ring != J.ring:
        J = J.to_ring(I.ring)
    t = _fresh(I.ring, "tint")
    big = I.ring.extend([t])
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.gens] + [(1 - tv) * g.to_ring(big) for g in J.gens]
    K = eliminate(Ideal(gens, big), [t])
    return Ideal([g.to_ring(I.ring) for g in K.gens], I.ring)


# ---------------------------------------------------- reducedness check

@dataclass
class ReducednessCertificate:
    """Outcome of :func:`certify_reduced`.

    ``ok`` means Q[x]/I was shown to be reduced by repeatedly solving for
    variables that occur linearly, on a finite cover of open patches.
    ``ok`` False means no such cover was found; it does *not* prove that
    I is not radical.
    """

    ok: bool
    patches: int = 0
    solved: list = field(default_factory=list)
    reason: str = ""


def _linear_solutions(g: Polynomial):
    for v in g.variables():
        parts = g.coefficients_in(v)
        if set(parts) <= {0, 1} and 1 in parts:
            yield v, parts[1], parts.get(0, g.ring.zero())


def certify_reduced(I: Ideal, max_depth: int = 6, _depth: int = 0) -> ReducednessCertificate:
    """Try to certify that ``I`` is a radical ideal.

    A generator ``k*v + h`` with ``k`` a nonzero rational and ``v`` absent
    from ``h`` lets us eliminate ``v`` outright (the quotient does not
    change).  If generators ``lam*v + h`` with nonconstant ``lam`` remain,
    the quotient is covered by the patches ``lam != 0``; on each patch
    ``v`` is solved for, and since reducedness is local it suffices that
    every patch, after saturating by ``lam``, is certified in turn.
    """
    cert = ReducednessCertificate(ok=False)
    gens = list(I.groebner().elements)
    while True:
        if not gens or (len(gens) == 1 and gens[0].is_constant()):
            cert.ok = True
            return cert
        solved = None
        for g in gens:
            for v, lam, h in _linear_solutions(g):
                if lam.is_constant():
                    solved = (g, v, -h / lam.constant_value())
                    break
            if solved:
                break
        if not solved:
            break
        g, v, value = solved
        cert.solved.append(v)
        subst = [q.substitute({v: value}) for q in gens if q is not g]
        gens = list(Ideal(subst, I.ring).groebner().elements) if any(subst) else []

    if _depth >= max_depth:
        cert.reason = "depth limit"
        return cert
    current = Ideal(gens, I.ring)
    candidates = []
    for g in gens:
        for v, lam, h in _linear_solutions(g):
            candidates.append((len(lam.terms), str(lam), v, lam, h))
    candidates.sort(key=lambda t: (t[0], t[1], t[2]))
    chosen = []
    cover = list(gens)
    for _, _, v, lam, h in candidates:
        if any(lam == c[1] for c in chosen):
            continue
        chosen.append((v, lam, h))
        cover.append(lam)
        if is_unit(Ideal(cover, I.ring)):
            break
    else:
        cert.reason = "no patch cover by linearly solvable variables"
        return cert

    for v, lam, h in chosen:
        patched = []
        for q in gens:
            parts = q.coefficients_in(v)
            k = max(parts)
            total = I.ring.zero()
            for i, coeff in parts.items():
                total = total + coeff * (-h) ** i * lam ** (k - i)
            patched.append(total)
        sub = saturate(Ideal(patched, I.ring), lam)
        inner = certify_reduced(sub, max_depth, _depth + 1)
        cert.patches += 1 + inner.patches
        if not inner.ok:
            cert.reason = f"patch {lam} != 0: {inner.reason}"
            return cert
    cert.ok = True
    return cert
