"""Gröbner bases, elimination, saturation and Hilbert invariants over Q.

The engine packs every monomial into one Python integer:

* the low bits hold one 16-bit field per variable (top bit of each field is
  a guard used for branch-free divisibility tests) plus a field with the
  weighted degree;
* the high bits hold the fields of the monomial order's weight matrix, so
  plain integer comparison *is* the monomial order.

Both parts are linear in the exponent vector, so multiplying monomials is
integer addition and dividing is subtraction.
"""

from __future__ import annotations

import heapq
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

from .poly import PolyRing, Polynomial, RingMismatch, UndeclaredVariable

log = logging.getLogger(__name__)

_F = 16            # bits per exponent field (incl. guard)
_OF = 24           # bits per order-key field
_MAXEXP = (1 << (_F - 1)) - 1

DEFAULT_TERM_BUDGET = 200_000
DEFAULT_STRATEGY = {"lex": "normal", "block": "sugar", "grevlex": "sugar"}


class ResourceLimit(Exception):
    """Raised when a computation exceeds the configured budget."""


class NonHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or a two-block elimination order.

    ``block`` eliminates variables ``[0, split)`` before the rest and uses
    grevlex inside each block.  ``weights`` (optional, positive integers)
    replace the plain degree in every degree comparison.
    """

    kind: str = "grevlex"
    split: int | None = None
    weights: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order {self.kind!r}")
        if self.kind == "block" and self.split is None:
            raise ValueError("block order needs a split position")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def matrix(self, n: int) -> list[list[int]]:
        w = list(self.weights) if self.weights else [1] * n
        if len(w) != n:
            raise ValueError("weight vector has wrong length")
        if self.kind == "lex":
            return [[int(i == j) for j in range(n)] for i in range(n)]
        if self.kind == "grevlex":
            return _grevlex_rows(w, 0, n, n)
        s = self.split
        if not 0 <= s <= n:
            raise ValueError("split out of range")
        return _grevlex_rows(w, 0, s, n) + _grevlex_rows(w, s, n, n)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _grevlex_rows(w, lo, hi, n):
    if hi <= lo:
        return []
    rows = [[w[j] if lo <= j < hi else 0 for j in range(n)]]
    # prefix sums e_lo + ... + e_j, longest first: smaller last exponents win ties
    for j in range(hi - 2, lo - 1, -1):
        rows.append([1 if lo <= c <= j else 0 for c in range(n)])
    return rows


class _Layout:
    """Packing of exponent vectors into order-preserving integers."""

    def __init__(self, n: int, order: MonomialOrder):
        self.n = n
        self.order = order
        rows = order.matrix(n)
        weights = list(order.weights) if order.weights else [1] * n
        self.weights = weights
        ebits = _F * (n + 1)
        self.ebits = ebits
        self.emask = (1 << ebits) - 1
        self.guard = sum(1 << (_F * i + _F - 1) for i in range(n + 1))
        self.fmask = (1 << (_F - 1)) - 1
        nrows = len(rows)
        units = []
        for i in range(n):
            u = 1 << (_F * i)
            u += weights[i] << (_F * n)
            for r, row in enumerate(rows):
                if row[i]:
                    u += row[i] << (ebits + _OF * (nrows - 1 - r))
            units.append(u)
        self.units = units
        self.wshift = _F * n

    def encode(self, exps: Sequence[int]) -> int:
        m = 0
        for e, u in zip(exps, self.units):
            if e:
                if e > _MAXEXP:
                    raise ResourceLimit("exponent overflow")
                m += e * u
        return m

    def decode(self, m: int) -> tuple:
        f = self.fmask
        return tuple((m >> (_F * i)) & f for i in range(self.n))

    def wdeg(self, m: int) -> int:
        return (m >> self.wshift) & self.fmask

    def support(self, m: int) -> int:
        bits = 0
        f = self.fmask
        for i in range(self.n):
            if (m >> (_F * i)) & f:
                bits |= 1 << i
        return bits

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        em = self.emask
        return (((b & em) + g) - (a & em)) & g == g


class _Elem:
    __slots__ = ("lm", "lmx", "supp", "tail", "sugar", "terms")

    def __init__(self, terms: dict, lm: int, layout: _Layout, sugar: int):
        self.terms = terms
        self.lm = lm
        self.lmx = lm & layout.emask
        self.supp = layout.support(lm)
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.sugar = sugar


def _to_engine(f: Polynomial, layout: _Layout) -> dict:
    return {layout.encode(e): _Q(c.numerator, c.denominator) for e, c in f.terms.items()}


def _from_engine(terms: dict, layout: _Layout, ring: PolyRing) -> Polynomial:
    out = {}
    for m, c in terms.items():
        out[layout.decode(m)] = Fraction(int(c.numerator), int(c.denominator))
    return Polynomial(ring, out, _clean=True)


def _monic(terms: dict) -> tuple[dict, int]:
    lm = max(terms)
    lc = terms[lm]
    if lc != 1:
        inv = 1 / lc
        terms = {m: c * inv for m, c in terms.items()}
    return terms, lm


class _Reducer:
    """Full multivariate division against a list of monic elements."""

    def __init__(self, layout: _Layout, budget: int):
        self.layout = layout
        self.budget = budget

    def reduce(self, f: dict, sugar: int, elems: list[_Elem]) -> tuple[dict, int]:
        layout = self.layout
        g_ = layout.guard
        em = layout.emask
        wdeg = layout.wdeg
        heap = [-m for m in f]
        heapq.heapify(heap)
        out = {}
        budget = self.budget
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            m = -pop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            me = (m & em) + g_
            for g in elems:
                if (me - g.lmx) & g_ == g_:
                    u = m - g.lm
                    for gm, gc in g.tail:
                        k = gm + u
                        v = f.get(k)
                        if v is None:
                            f[k] = -c * gc
                            push(heap, -k)
                        else:
                            v -= c * gc
                            if v:
                                f[k] = v
                            else:
                                del f[k]
                    s = g.sugar + wdeg(u)
                    if s > sugar:
                        sugar = s
                    if len(f) > budget:
                        raise ResourceLimit(f"intermediate polynomial exceeded {budget} terms")
                    break
            else:
                out[m] = c
        return out, sugar


def _buchberger(polys: list[dict], layout: _Layout, budget: int, strategy: str | None = None) -> list[_Elem]:
    """Reduced Gröbner basis of the engine-format inputs.

    ``strategy`` is ``sugar`` or ``normal`` (smallest lcm first).  Sugar is
    the default except for lex, where it lets coefficients explode.
    """
    if strategy is None:
        strategy = DEFAULT_STRATEGY.get(layout.order.kind, "sugar")
    if strategy not in ("sugar", "normal"):
        raise ValueError(f"unknown selection strategy {strategy!r}")
    normal = strategy == "normal"
    red = _Reducer(layout, budget)
    wdeg = layout.wdeg
    divides = layout.divides
    elems: list[_Elem] = []
    active: list[int] = []
    pairs: dict[tuple, tuple] = {}
    heap: list = []
    pending = []
    for f in polys:
        if f:
            lm = max(f)
            sugar = max(wdeg(m) for m in f)
            pending.append((sugar, lm, len(pending), f))
    heapq.heapify(pending)
    total_terms = 0
    steps = 0

    def update(h_idx: int):
        h = elems[h_idx]
        hl = h.lm
        cand = []
        for gi in active:
            g = elems[gi]
            cand.append((layout.lcm(hl, g.lm), gi, (h.supp & g.supp) == 0))
        kept = []
        for idx, (l, gi, coprime) in enumerate(cand):
            if coprime:
                kept.append((l, gi, True))
                continue
            dominated = False
            for l2, _, _ in cand[idx + 1:]:
                if divides(l2, l):
                    dominated = True
                    break
            if not dominated:
                for l2, _, _ in kept:
                    if divides(l2, l):
                        dominated = True
                        break
            if not dominated:
                kept.append((l, gi, False))
        # drop old pairs made redundant by h (chain criterion)
        dead = []
        for key, (s, l) in pairs.items():
            i, j = key
            if divides(hl, l):
                lih = layout.lcm(elems[i].lm, hl)
                ljh = layout.lcm(elems[j].lm, hl)
                if lih != l and ljh != l:
                    dead.append(key)
        for key in dead:
            del pairs[key]
        for l, gi, coprime in kept:
            if coprime:
                continue
            g = elems[gi]
            s = max(h.sugar + wdeg(l - hl), g.sugar + wdeg(l - g.lm))
            key = (gi, h_idx)
            pairs[key] = (s, l)
            heapq.heappush(heap, (0 if normal else s, l, gi, h_idx))
        active[:] = [gi for gi in active if not divides(hl, elems[gi].lm)]
        active.append(h_idx)

    while pairs or pending:
        # choose the lowest sugar among pending inputs and live pairs
        while heap and (heap[0][2], heap[0][3]) not in pairs:
            heapq.heappop(heap)
        use_input = False
        if pending and (normal or not heap or (pending[0][0], pending[0][1]) <= (heap[0][0], heap[0][1])):
            use_input = True
        if use_input:
            sugar, _, _, f = heapq.heappop(pending)
            f = dict(f)
        else:
            _, l, i, j = heapq.heappop(heap)
            s, _ = pairs.pop((i, j))
            fi, fj = elems[i], elems[j]
            ui, uj = l - fi.lm, l - fj.lm
            f = {}
            for m, c in fi.tail:
                f[m + ui] = c
            for m, c in fj.tail:
                k = m + uj
                v = f.get(k)
                if v is None:
                    f[k] = -c
                else:
                    v -= c
                    if v:
                        f[k] = v
                    else:
                        del f[k]
            sugar = s
        steps += 1
        # trying small leading monomials first keeps coefficients smaller
        divisors = sorted((elems[a] for a in active), key=lambda e: e.lm)
        f, sugar = red.reduce(f, sugar, divisors)
        if not f:
            continue
        f, lm = _monic(f)
        if not (lm >> layout.ebits):
            # nonzero constant: unit ideal
            one = {0: _Q(1)}
            return [_Elem(one, 0, layout, 0)]
        elems.append(_Elem(f, lm, layout, sugar))
        total_terms += len(f)
        if total_terms > budget:
            raise ResourceLimit(f"Gröbner basis exceeded {budget} terms")
        update(len(elems) - 1)
        if steps % 500 == 0:
            log.debug("buchberger: %d steps, %d pairs, %d active", steps, len(pairs), len(active))

    basis = sorted((elems[a] for a in active), key=lambda e: e.lm)
    # interreduce tails
    out = []
    for idx, g in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        tail = {m: c for m, c in g.tail}
        tail, _ = red.reduce(tail, g.sugar, others)
        terms = {g.lm: _Q(1)}
        terms.update(tail)
        out.append(_Elem(terms, g.lm, layout, g.sugar))
    # refresh tails so later elements use reduced versions (unique anyway)
    return out


# ---------------------------------------------------------------------------
# public API

class Ideal:
    """An ideal given by generators in a polynomial ring."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial], homogeneous: bool | None = None):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be Polynomials")
            if g.ring != ring:
                g = g.to_ring(ring)
            if g.is_zero():
                continue
            key = g.primitive()
            if key in seen:
                continue
            seen.add(key)
            gens.append(g)
        self.ring = ring
        self.generators = gens
        is_h = all(g.is_homogeneous() for g in gens)
        if homogeneous and not is_h:
            raise NonHomogeneous("ideal flagged homogeneous has inhomogeneous generators")
        self.homogeneous = is_h

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"

    def __add__(self, other: Ideal) -> Ideal:
        if other.ring != self.ring:
            raise RingMismatch("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def to_ring(self, ring: PolyRing) -> Ideal:
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def to_json(self) -> dict:
        return {
            "ring": list(self.ring.variables),
            "homogeneous": self.homogeneous,
            "generators": [str(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, doc: dict) -> Ideal:
        ring = PolyRing(doc["ring"])
        gens = [ring.parse(s) for s in doc.get("generators", [])]
        return cls(ring, gens, homogeneous=doc.get("homogeneous"))


class GroebnerBasis:
    """Reduced Gröbner basis of an ideal for a fixed monomial order."""

    def __init__(self, ideal: Ideal, order: MonomialOrder, layout: _Layout, elems: list[_Elem], budget: int):
        self.ideal = ideal
        self.order = order
        self._layout = layout
        self._elems = elems
        self._budget = budget
        ring = ideal.ring
        self.basis = [_from_engine(e.terms, layout, ring) for e in elems]

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def is_unit(self) -> bool:
        return len(self._elems) == 1 and self._elems[0].lm >> self._layout.ebits == 0

    def leading_exponents(self) -> list[tuple]:
        return [self._layout.decode(e.lm) for e in self._elems]

    def leading_monomials(self) -> list[Polynomial]:
        return [self.ring.monomial(e) for e in self.leading_exponents()]

    def reduce_terms(self, terms: dict) -> dict:
        out, _ = _Reducer(self._layout, self._budget).reduce(dict(terms), 0, self._elems)
        return out

    def as_ideal(self) -> Ideal:
        return Ideal(self.ring, self.basis)


_GB_CACHE: dict = {}
_GB_CACHE_MAX = 256
_RECORDERS: list[list] = []


@contextmanager
def recording_bases():
    """Collect every basis computed (not served from cache) inside the block."""
    rec: list = []
    _RECORDERS.append(rec)
    try:
        yield rec
    finally:
        _RECORDERS.remove(rec)


def clear_cache() -> None:
    _GB_CACHE.clear()


def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX, budget: int = DEFAULT_TERM_BUDGET) -> GroebnerBasis:
    """Reduced Gröbner basis (Buchberger, sugar strategy, Gebauer–Möller pruning)."""
    key = (ideal.ring, tuple(sorted(str(g) for g in ideal.generators)), order)
    hit = _GB_CACHE.get(key)
    if hit is not None and hit._budget >= budget:
        return hit
    layout = _Layout(ideal.ring.nvars, order)
    polys = [_to_engine(g, layout) for g in ideal.generators]
    elems = _buchberger(polys, layout, budget) if polys else []
    gb = GroebnerBasis(ideal, order, layout, elems, budget)
    for rec in _RECORDERS:
        rec.append(gb)
    if len(_GB_CACHE) >= _GB_CACHE_MAX:
        _GB_CACHE.pop(next(iter(_GB_CACHE)))
    _GB_CACHE[key] = gb
    return gb


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by the basis; zero iff f lies in the ideal."""
    if f.ring != gb.ring:
        raise RingMismatch("polynomial and basis live in different rings")
    layout = gb._layout
    out = gb.reduce_terms(_to_engine(f, layout))
    return _from_engine(out, layout, gb.ring)


def contains(ideal: Ideal | GroebnerBasis, f: Polynomial) -> bool:
    gb = ideal if isinstance(ideal, GroebnerBasis) else groebner_basis(ideal)
    return normal_form(f, gb).is_zero()


def _order_key(order: MonomialOrder, n: int):
    rows = order.matrix(n)
    return lambda e: tuple(sum(r[j] * e[j] for j in range(n)) for r in rows)


def _leading(f: Polynomial, key):
    return max(f.terms, key=key)


def _divide_plain(f: Polynomial, basis: list[Polynomial], key) -> Polynomial:
    """Full division in plain Polynomial arithmetic (slow, independent of the engine)."""
    ring = f.ring
    lead = [(_leading(g, key), g) for g in basis]
    rem = ring.zero()
    while f:
        e = _leading(f, key)
        c = f.terms[e]
        for le, g in lead:
            if all(a >= b for a, b in zip(e, le)):
                q = ring.monomial(tuple(a - b for a, b in zip(e, le)), c / g.terms[le])
                f = f - q * g
                break
        else:
            t = ring.monomial(e, c)
            rem = rem + t
            f = f - t
    return rem


def buchberger_certificate(gb: GroebnerBasis) -> bool:
    """Re-check a basis without the engine: every S-polynomial and input reduces to 0."""
    ring = gb.ring
    key = _order_key(gb.order, ring.nvars)
    basis = list(gb.basis)
    for g in gb.ideal.generators:
        if _divide_plain(g, basis, key):
            return False
    lead = [_leading(g, key) for g in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            a, b = lead[i], lead[j]
            if all(x == 0 or y == 0 for x, y in zip(a, b)):
                continue  # coprime leading monomials
            m = tuple(max(x, y) for x, y in zip(a, b))
            fi = ring.monomial(tuple(x - y for x, y in zip(m, a)), 1 / basis[i].terms[a]) * basis[i]
            fj = ring.monomial(tuple(x - y for x, y in zip(m, b)), 1 / basis[j].terms[b]) * basis[j]
            if _divide_plain(fi - fj, basis, key):
                return False
    return True


def is_unit_ideal(ideal: Ideal) -> bool:
    return groebner_basis(ideal).is_unit()


def _ideal_from_gb(gb: GroebnerBasis) -> Ideal:
    return Ideal(gb.ring, gb.basis)


def eliminate(ideal: Ideal, drop: Iterable[str], budget: int = DEFAULT_TERM_BUDGET,
              weights: Sequence[int] | None = None) -> Ideal:
    """Generators of the ideal intersected with the subring without ``drop``.

    The result lives in the ring of the remaining variables (in their
    original order).
    """
    ring = ideal.ring
    drop = list(dict.fromkeys(drop))
    for v in drop:
        if v not in ring.index:
            raise UndeclaredVariable(v)
    keep = [v for v in ring.variables if v not in set(drop)]
    work = PolyRing(drop + keep)
    w = None
    if weights is not None:
        wmap = dict(zip(ring.variables, weights))
        w = tuple(wmap[v] for v in work.variables)
    order = MonomialOrder("block", split=len(drop), weights=w)
    gb = groebner_basis(ideal.to_ring(work), order, budget)
    target = PolyRing(keep)
    nd = len(drop)
    out = []
    for e, g in zip(gb.leading_exponents(), gb.basis):
        if not any(e[:nd]):
            out.append(g.to_ring(target) if not any(x for t in g.terms for x in t[:nd]) else None)
    return Ideal(target, [g for g in out if g is not None])


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise RingMismatch("ideals live in different rings")
    ga, gbb = groebner_basis(a), groebner_basis(b)
    return sorted(str(g) for g in ga.basis) == sorted(str(g) for g in gbb.basis)


def is_subideal(a: Ideal, b: Ideal) -> bool:
    """True iff a ⊆ b."""
    gb = groebner_basis(b)
    return all(normal_form(g, gb).is_zero() for g in a.generators)


def _fresh(ring: PolyRing, stem: str) -> str:
    name = stem
    i = 0
    while name in ring.index:
        i += 1
        name = f"{stem}{i}"
    return name


def intersect(a: Ideal, b: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """a ∩ b via elimination of t from t·a + (1 − t)·b."""
    ring = a.ring
    if b.ring != ring:
        raise RingMismatch("ideals live in different rings")
    if is_unit_ideal(a):
        return b
    if is_unit_ideal(b):
        return a
    t = _fresh(ring, "_t")
    big = ring.extend([t], first=True)
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in a.generators]
    gens += [(1 - tv) * g.to_ring(big) for g in b.generators]
    # t gets weight 0 in the degree so homogeneous inputs stay homogeneous
    weights = [0] + [1] * ring.nvars
    res = _eliminate_weighted(Ideal(big, gens), [t], weights, budget)
    return res.to_ring(ring)


def _eliminate_weighted(ideal: Ideal, drop: list[str], weights, budget) -> Ideal:
    # block order with weight 0 on eliminated variables would not be a
    # well-order inside the block, so use lex on the single t then grevlex
    ring = ideal.ring
    keep = [v for v in ring.variables if v not in set(drop)]
    work = PolyRing(list(drop) + keep)
    order = MonomialOrder("block", split=len(drop))
    gb = groebner_basis(ideal.to_ring(work), order, budget)
    target = PolyRing(keep)
    nd = len(drop)
    out = [g.to_ring(target) for e, g in zip(gb.leading_exponents(), gb.basis) if not any(e[:nd])]
    return Ideal(target, out)


def quotient(a: Ideal, f: Polynomial, budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """a : (f) computed as (a ∩ (f)) / f."""
    ring = a.ring
    inter = intersect(a, Ideal(ring, [f]), budget)
    gens = []
    for g in inter.generators:
        q = exact_divide(g, f)
        gens.append(q)
    return Ideal(ring, gens)


def ideal_quotient(a: Ideal, b: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """a : b = ∩_g (a : g) over generators of b."""
    result = None
    for g in b.generators:
        q = quotient(a, g, budget)
        result = q if result is None else intersect(result, q, budget)
    if result is None:
        return Ideal(a.ring, [a.ring.one()])
    return result


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f / g when g divides f exactly (raises otherwise)."""
    ring = f.ring
    ideal = Ideal(ring, [g])
    gb = groebner_basis(ideal, LEX)
    layout = gb._layout
    # long division by a single polynomial under lex
    gl = _to_engine(g, layout)
    glm = max(gl)
    glc = gl[glm]
    rest = dict(_to_engine(f, layout))
    quo = {}
    while rest:
        m = max(rest)
        if not layout.divides(glm, m):
            raise ValueError("division is not exact")
        c = rest[m] / glc
        u = m - glm
        quo[u] = c
        for gm, gc in gl.items():
            k = gm + u
            v = rest.get(k, 0) - c * gc
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    return _from_engine(quo, layout, ring)


def saturate_by_poly(ideal: Ideal, g: Polynomial, budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """ideal : g^∞.

    Homogeneous ideals saturated by a single variable use Bayer's trick
    (grevlex with that variable last); everything else goes through
    t·g − 1 and elimination of t.
    """
    ring = ideal.ring
    if g.is_constant():
        return Ideal(ring, [ring.one()]) if not g.is_zero() else ideal
    used = g.variables()
    if ideal.homogeneous and len(g.terms) == 1 and len(used) == 1 and g.total_degree() == 1:
        return _saturate_variable(ideal, used[0], budget)
    t = _fresh(ring, "_t")
    big = ring.extend([t], first=True)
    gens = [h.to_ring(big) for h in ideal.generators]
    gens.append(big.var(t) * g.to_ring(big) - 1)
    res = eliminate(Ideal(big, gens), [t], budget)
    return res.to_ring(ring)


def _saturate_variable(ideal: Ideal, var: str, budget: int) -> Ideal:
    ring = ideal.ring
    order = [v for v in ring.variables if v != var] + [var]
    work = PolyRing(order)
    gb = groebner_basis(ideal.to_ring(work), GREVLEX, budget)
    idx = work.index[var]
    gens = []
    for g in gb.basis:
        k = min(e[idx] for e in g.terms)
        if k:
            g = Polynomial(work, {e[:idx] + (e[idx] - k,) + e[idx + 1:]: c for e, c in g.terms.items()}, _clean=True)
        gens.append(g.to_ring(ring))
    return Ideal(ring, gens)


def saturation(ideal: Ideal, by: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """ideal : by^∞ = ∩_g (ideal : g^∞) over the generators g of ``by``."""
    if by.ring != ideal.ring:
        raise RingMismatch("ideals live in different rings")
    parts = []
    for g in by.generators:
        s = saturate_by_poly(ideal, g, budget)
        if is_subideal(s, ideal):
            # ideal ⊆ sat ⊆ (ideal : g^∞) = ideal
            return ideal
        parts.append(s)
    if not parts:
        return Ideal(ideal.ring, [ideal.ring.one()])
    parts = [p for p in parts if not is_unit_ideal(p)]
    if not parts:
        return Ideal(ideal.ring, [ideal.ring.one()])
    result = parts[0]
    for p in parts[1:]:
        result = intersect(result, p, budget)
    return result


def irrelevant_ideal(ring: PolyRing, names: Iterable[str] | None = None) -> Ideal:
    names = ring.variables if names is None else names
    return Ideal(ring, [ring.var(v) for v in names])


def radical_membership(f: Polynomial, ideal: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> bool:
    """True iff f vanishes on V(ideal): 1 ∈ ideal + (t·f − 1)."""
    if f.ring != ideal.ring:
        raise RingMismatch("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    if contains(ideal, f):
        return True
    return is_unit_ideal(saturate_by_poly(ideal, f, budget))


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals

def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def hilbert_numerator(gens: list[tuple]) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1−t)^n of S/(monomials)."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    # base case: pairwise coprime generators
    used = [0] * len(gens[0])
    coprime = True
    for g in gens:
        for i, x in enumerate(g):
            if x:
                if used[i]:
                    coprime = False
                    break
                used[i] = 1
        if not coprime:
            break
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable occurring most often, median exponent
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    var = max(range(n), key=lambda i: counts[i])
    exps = sorted(g[var] for g in gens if g[var])
    e = exps[len(exps) // 2]
    # the pivot must stay outside the ideal, i.e. below any pure power of var
    pure = [g[var] for g in gens if g[var] and sum(g) == g[var]]
    if pure:
        e = min(e, min(pure) - 1)
    pivot = tuple(e if i == var else 0 for i in range(n))
    plus = gens + [pivot]
    colon = [tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens]
    left = hilbert_numerator(plus)
    right = hilbert_numerator(colon)
    return _poly_add(left, [0] * e + right)


def _dim_degree_from_numerator(num: list[int], n: int) -> tuple[int, int]:
    while len(num) > 1 and num[-1] == 0:
        num = num[:-1]
    if num == [0]:
        return -1, 0
    c = 0
    while sum(num) == 0:
        # divide by (1 - t): synthetic division
        q = []
        acc = 0
        for x in num[:-1]:
            acc += x
            q.append(acc)
        num = q
        c += 1
    return n - c, sum(num)


def hilbert_dim_degree(ideal: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> tuple[int, int]:
    """(Krull dimension of the affine cone, degree) of a homogeneous ideal.

    The unit ideal gives (-1, 0); an ideal supported at the irrelevant
    ideal gives (0, length).
    """
    if not ideal.homogeneous:
        raise NonHomogeneous("Hilbert invariants need a homogeneous ideal")
    gb = groebner_basis(ideal, GREVLEX, budget)
    n = ideal.ring.nvars
    if gb.is_unit():
        return -1, 0
    num = hilbert_numerator(gb.leading_exponents())
    return _dim_degree_from_numerator(num, n)


def projective_dimension(ideal: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Dimension of V(ideal) in projective space; -1 when empty."""
    d, _ = hilbert_dim_degree(ideal, budget)
    return max(d - 1, -1)
