"""Exact sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is a map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, attached to a :class:`PolyRing`
that fixes the variable names and their order.  Values are never mutated
after construction.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class PolyError(Exception):
    pass


class UndeclaredVariable(PolyError):
    def __init__(self, name):
        super().__init__(f"undeclared variable {name!r}")
        self.name = name


class PolySyntaxError(PolyError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MissingAssignment(PolyError):
    def __init__(self, name):
        super().__init__(f"no value assigned to {name!r}")
        self.name = name


class RingMismatch(PolyError):
    pass


class SizeTooLarge(PolyError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    # gmpy2.mpq and friends expose numerator/denominator
    return Fraction(int(c.numerator), int(c.denominator))


class PolyRing:
    """Polynomial ring over Q with an ordered list of named variables."""

    __slots__ = ("variables", "index", "_hash")

    def __init__(self, variables: Iterable[str]):
        variables = tuple(variables)
        seen = set()
        for v in variables:
            if not v:
                raise ValueError("variable names must be nonempty")
            if v in seen:
                raise ValueError(f"duplicate variable {v!r}")
            seen.add(v)
        self.variables = variables
        self.index = {v: i for i, v in enumerate(variables)}
        self._hash = hash(variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.variables == other.variables

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({list(self.variables)!r})"

    def __contains__(self, name):
        return name in self.index

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = _frac(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> Polynomial:
        try:
            i = self.index[name]
        except KeyError:
            raise UndeclaredVariable(name) from None
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exps): _frac(coeff)})

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def extend(self, names: Iterable[str], first: bool = False) -> PolyRing:
        names = [n for n in names if n not in self.index]
        if first:
            return PolyRing(list(names) + list(self.variables))
        return PolyRing(list(self.variables) + list(names))


class Polynomial:
    """Immutable polynomial in canonical form (no zero coefficients stored)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Fraction], _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            n = ring.nvars
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError("exponent length does not match ring")
                if any(x < 0 for x in e):
                    raise ValueError("negative exponent")
                c = _frac(c)
                if c:
                    clean[e] = c
            self.terms = clean
        self._hash = None

    # -- basic queries ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            degs = {sum(e) for e in self.terms}
        else:
            degs = {sum(w * x for w, x in zip(weights, e)) for e in self.terms}
        return len(degs) <= 1

    def variables(self) -> list[str]:
        """Names of the variables that actually occur, in ring order."""
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return [v for v, u in zip(self.ring.variables, used) if u]

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        # degree-then-lex in ring order, largest first
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> Polynomial:
        c = _frac(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        terms: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return Polynomial(self.ring, {e: c for e, c in terms.items() if c}, _clean=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise PolyError("division only by nonzero constants")
            other = other.constant_value()
        other = _frac(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution ---------------------------------------
    def derivative(self, name: str) -> Polynomial:
        try:
            i = self.ring.index[name]
        except KeyError:
            raise UndeclaredVariable(name) from None
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c * e[i]
        return Polynomial(self.ring, terms, _clean=True)

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        vals = []
        used = self.variables()
        for v in used:
            if v not in point:
                raise MissingAssignment(v)
        for v in self.ring.variables:
            vals.append(_frac(point[v]) if v in point else None)
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, val in zip(e, vals):
                if x:
                    t *= val ** x
            total += t
        return total

    def substitute(self, images: Mapping[str, Polynomial], ring: PolyRing | None = None) -> Polynomial:
        """Replace variables by polynomials.

        Variables without an image are kept (they must exist in the target
        ring).  The target ring defaults to the ring of the images.
        """
        if ring is None:
            for img in images.values():
                if isinstance(img, Polynomial):
                    ring = img.ring
                    break
            else:
                ring = self.ring
        imgs = []
        for v in self.ring.variables:
            if v in images:
                img = images[v]
                if not isinstance(img, Polynomial):
                    img = ring.constant(img)
                elif img.ring != ring:
                    raise RingMismatch("substitution images live in different rings")
                imgs.append(img)
            else:
                imgs.append(ring.var(v) if v in ring.index else None)
        powers: list[dict[int, Polynomial]] = [{} for _ in imgs]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                if imgs[i] is None:
                    raise UndeclaredVariable(self.ring.variables[i])
                cache[k] = imgs[i] ** k
            return cache[k]

        total: dict = {}
        for e, c in self.terms.items():
            t = ring.constant(c)
            for i, x in enumerate(e):
                if x:
                    t = t * power(i, x)
            for te, tc in t.terms.items():
                total[te] = total.get(te, 0) + tc
        return Polynomial(ring, {e: c for e, c in total.items() if c}, _clean=True)

    def to_ring(self, ring: PolyRing) -> Polynomial:
        """Re-embed into another ring containing every variable used."""
        if ring == self.ring:
            return self
        pos = []
        for v in self.ring.variables:
            pos.append(ring.index.get(v))
        terms = {}
        n = ring.nvars
        for e, c in self.terms.items():
            d = [0] * n
            for i, x in enumerate(e):
                if x:
                    j = pos[i]
                    if j is None:
                        raise UndeclaredVariable(self.ring.variables[i])
                    d[j] = x
            terms[tuple(d)] = c
        return Polynomial(ring, terms, _clean=True)

    def coefficients_in(self, names: Sequence[str]) -> dict[tuple, Polynomial]:
        """Split into coefficients of monomials in ``names``.

        Returns a map from exponent tuples (over ``names``) to polynomials in
        the remaining variables of the same ring.
        """
        idx = [self.ring.index[v] for v in names]
        idxset = set(idx)
        out: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = tuple(0 if i in idxset else x for i, x in enumerate(e))
            out.setdefault(key, {})[rest] = c
        return {k: Polynomial(self.ring, v, _clean=True) for k, v in out.items()}

    # -- normalisation ---------------------------------------------------
    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def primitive(self) -> Polynomial:
        """Integer coefficients with content 1; first printed term positive."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for x in nums:
            g = _gcd(g, x)
        f = self.scale(Fraction(den, g))
        if f.sorted_terms()[0][1] < 0:
            f = -f
        return f

    # -- printing --------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# text format

def _format_monomial(ring: PolyRing, e: tuple) -> str:
    parts = []
    for v, x in zip(ring.variables, e):
        if x == 1:
            parts.append(v)
        elif x:
            parts.append(f"{v}^{x}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    out = []
    for e, c in f.sorted_terms():
        mono = _format_monomial(f.ring, e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        tok = self.take()
        if tok[0] != "op" or tok[1] != ch:
            raise PolySyntaxError(f"expected {ch!r}", tok[2])

    def parse(self) -> Polynomial:
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError("unexpected token", tok[2])
        return f

    def expr(self):
        f = self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                g = self.term()
                f = f + g if tok[1] == "+" else f - g
            else:
                return f

    def term(self):
        f = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                f = f * self.unary()
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                g = self.unary()
                if not g.is_constant() or g.is_zero():
                    raise PolySyntaxError("division by a non-constant or zero", tok[2])
                f = f / g.constant_value()
            elif tok[0] in ("int", "id") or (tok[0] == "op" and tok[1] == "("):
                raise PolySyntaxError("implicit multiplication is not allowed", tok[2])
            else:
                return f

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            f = self.unary()
            return -f if tok[1] == "-" else f
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer literal", e[2])
            return base ** e[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.ring.constant(val)
        if kind == "id":
            if val not in self.ring.index:
                raise UndeclaredVariable(val)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise PolySyntaxError("unexpected token", pos)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` (integers, identifiers, ``+ - * ^ /``, parentheses)."""
    return _Parser(text, ring).parse()


def evaluate(f: Polynomial, point: Mapping[str, object]) -> Fraction:
    return f.evaluate(point)


# ---------------------------------------------------------------------------
# matrices

class RationalMatrix:
    """Dense matrix of Fractions with exact Gaussian elimination."""

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[_frac(x) for x in row] for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows]})"

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(list(zip(*self.rows)))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return RationalMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RationalMatrix:
        return RationalMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def stack(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(self.rows + other.rows)

    def _echelon(self):
        m = [list(r) for r in self.rows]
        pivots = []
        row = 0
        for col in range(self.ncols):
            piv = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            inv = 1 / m[row][col]
            m[row] = [x * inv for x in m[row]]
            for i in range(len(m)):
                if i != row and m[i][col] != 0:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == len(m):
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = len(m)
        d = Fraction(1)
        for col in range(n):
            piv = next((i for i in range(col, n) if m[i][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = -d
            d *= m[col][col]
            inv = 1 / m[col][col]
            for i in range(col + 1, n):
                if m[i][col]:
                    f = m[i][col] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[col])]
        return d

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of {v : self @ v = 0}, one list per basis vector."""
        m, pivots = self._echelon()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -m[r][f]
            basis.append(v)
        return basis

    def inverse(self) -> RationalMatrix:
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = RationalMatrix([r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)])
        m, pivots = aug._echelon()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return RationalMatrix([row[n:] for row in m[:n]])


class PolyMatrix:
    """Matrix of polynomials over one shared ring."""

    def __init__(self, entries: Sequence[Sequence[Polynomial]], ring: PolyRing | None = None):
        rows = [list(r) for r in entries]
        if ring is None:
            ring = next(x.ring for r in rows for x in r if isinstance(x, Polynomial))
        fixed = []
        for r in rows:
            out = []
            for x in r:
                if not isinstance(x, Polynomial):
                    x = ring.constant(x)
                elif x.ring != ring:
                    raise RingMismatch("matrix entries must share one ring")
                out.append(x)
            fixed.append(out)
        if any(len(r) != len(fixed[0]) for r in fixed):
            raise ValueError("ragged matrix")
        self.rows = fixed
        self.ring = ring

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        return "PolyMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def _maximal_minors_by_columns(rows: list[list], zero, one, size: int, cols: Sequence[int]):
    """All size x size minors of the given rows, keyed by column tuple.

    Expansion along the last row with memoisation over column subsets.
    """
    table = {(): one}
    for depth in range(size):
        row = rows[depth]
        nxt = {}
        for subset in itertools.combinations(cols, depth + 1):
            total = zero
            # Laplace along row `depth`: sign depends on position inside subset
            for pos, c in enumerate(subset):
                entry = row[c]
                if not entry:
                    continue
                rest = subset[:pos] + subset[pos + 1:]
                sub = table[rest]
                if not sub:
                    continue
                term = entry * sub
                if (depth - pos) % 2:
                    total = total - term
                else:
                    total = total + term
            nxt[subset] = total
        table = nxt
    return table


def matrix_minors(m: PolyMatrix | RationalMatrix, size: int) -> list:
    """All size x size minors, ordered lexicographically by (rows, cols)."""
    if size > min(m.nrows, m.ncols) or size < 1:
        raise SizeTooLarge(f"minor size {size} for a {m.nrows}x{m.ncols} matrix")
    if isinstance(m, PolyMatrix):
        zero, one = m.ring.zero(), m.ring.one()
    else:
        zero, one = Fraction(0), Fraction(1)
    out = []
    cols = list(range(m.ncols))
    for rowset in itertools.combinations(range(m.nrows), size):
        rows = [m.rows[i] for i in rowset]
        table = _maximal_minors_by_columns(rows, zero, one, size, cols)
        for colset in itertools.combinations(cols, size):
            out.append(table[colset])
    return out


def maximal_minors(rows: Sequence[Sequence], zero=Fraction(0), one=Fraction(1)) -> dict[tuple, object]:
    """Maximal minors of a wide matrix keyed by 1-based ascending column tuples."""
    k = len(rows)
    n = len(rows[0])
    table = _maximal_minors_by_columns([list(r) for r in rows], zero, one, k, range(n))
    return {tuple(c + 1 for c in key): v for key, v in table.items()}


def jacobian(fs: Sequence[Polynomial], names: Sequence[str]) -> PolyMatrix:
    if not fs:
        raise ValueError("empty polynomial list")
    ring = fs[0].ring
    for v in names:
        if v not in ring.index:
            raise UndeclaredVariable(v)
    return PolyMatrix([[f.derivative(v) for v in names] for f in fs], ring)
