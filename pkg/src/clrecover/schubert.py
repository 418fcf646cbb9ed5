"""Schubert varieties for the coordinate flag, Pieri products, and recovery predictions."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chowlam import VarietyIdeal
from .grassmann import (GrassmannContext, SubspaceMatrix, cauchy_binet_table, plucker_name,
                        plucker_relations, plucker_ring, subsets)
from .groebner import DEFAULT_TERM_BUDGET, Ideal, projective_dimension
from .poly import PolyRing, RationalMatrix

__all__ = [
    "OutOfRange", "BoxViolation", "Partition", "SchubertPrediction", "omega_dimension",
    "schubert_ideal", "schubert_index_allowed", "pieri_power", "recovered_components",
    "stratum_dimension", "stratum_ideal", "recovery_criterion", "plucker_degree",
    "complete_basis", "format_exponent", "parse_parts", "OUTSIDE_HYPOTHESIS",
]

OUTSIDE_HYPOTHESIS = "outside-theorem-hypothesis"


class OutOfRange(ValueError):
    pass


class BoxViolation(ValueError):
    pass


_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing parts inside a k x (n-k) box; trailing zeros are dropped."""
    parts: tuple
    k: int
    n: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise BoxViolation(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise BoxViolation(f"parts {parts} are not weakly decreasing")
        parts = tuple(p for p in parts if p)
        if len(parts) > self.k:
            raise BoxViolation(f"{parts} has more than k={self.k} parts")
        if parts and parts[0] > self.n - self.k:
            raise BoxViolation(f"{parts} does not fit in a {self.k}x{self.n - self.k} box")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def padded(self) -> tuple:
        return self.parts + (0,) * (self.k - len(self.parts))

    def exponent_form(self) -> str:
        return format_exponent(self.parts)

    def add_box(self) -> list[Partition]:
        """All partitions obtained by adding one box inside the box."""
        lam = list(self.padded())
        out = []
        for j in range(self.k):
            if lam[j] < self.n - self.k and (j == 0 or lam[j - 1] > lam[j]):
                mu = lam.copy()
                mu[j] += 1
                out.append(Partition(tuple(mu), self.k, self.n))
        return out

    @classmethod
    def parse(cls, text: str, k: int, n: int) -> Partition:
        return cls(parse_parts(text), k, n)

    def __str__(self):
        return self.exponent_form()


def format_exponent(parts: Sequence[int]) -> str:
    """Exponent notation, e.g. (3,3,2,2,2,2) -> '3^2 2^4'."""
    parts = [p for p in parts if p]
    if not parts:
        return "0"
    out = []
    for value, run in _runs(parts):
        out.append(str(value) if run == 1 else f"{value}^{run}")
    return " ".join(out)


def _runs(parts):
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        yield parts[i], j - i
        i = j


def parse_parts(text: str) -> tuple:
    """Accepts '(3,3,2)', '3,3,2', '3^2 2^4', '3²2⁴' or '0'."""
    s = text.strip()
    if s.startswith("(") or "," in s:
        body = s.strip("()")
        return tuple(int(x) for x in body.split(",") if x.strip())
    if any(ch in s for ch in "⁰¹²³⁴⁵⁶⁷⁸⁹"):
        # base digits are ordinary, exponents superscript
        tokens = re.findall(r"(\d+)([⁰¹²³⁴⁵⁶⁷⁸⁹]*)", s)
        parts = []
        for base, exp in tokens:
            parts.extend([int(base)] * (int(exp.translate(_SUPERSCRIPTS)) if exp else 1))
        return tuple(parts)
    parts = []
    for tok in s.split():
        if "^" in tok:
            base, exp = tok.split("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(tok))
    return tuple(parts)


def omega_dimension(l: int, m: int, n: int) -> int:
    """Dimension of the family of l-dim subspaces of C^n containing a fixed (m+1)-dim one.

    The family is a copy of Gr(l-m-1, n-m-1).
    """
    if not (m < l <= n):
        raise OutOfRange(f"need m < l <= n, got l={l}, m={m}, n={n}")
    return (l - m - 1) * (n - l)


def schubert_index_allowed(I: Sequence[int], lam: Partition) -> bool:
    """True iff the coordinate point e_I lies in the Schubert variety of lam."""
    bound = lam.n - lam.k
    parts = lam.padded()
    return all(i <= bound + j + 1 - parts[j] for j, i in enumerate(I))


def schubert_ideal(lam: Partition | Sequence[int], k: int, n: int, prefix: str = "q",
                   ring: PolyRing | None = None) -> Ideal:
    """Plücker relations plus the coordinates vanishing on the Schubert variety."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam), k, n)
    elif (lam.k, lam.n) != (k, n):
        raise BoxViolation(f"partition box is ({lam.k},{lam.n}), expected ({k},{n})")
    ring = ring or plucker_ring(prefix, k, n)
    gens = plucker_relations(k, n, prefix, ring)
    gens += [ring.var(plucker_name(prefix, I, n)) for I in subsets(n, k)
             if not schubert_index_allowed(I, lam)]
    return Ideal(ring, gens)


def pieri_power(lam: Partition | Sequence[int], m: int, k: int | None = None,
                n: int | None = None) -> Counter:
    """[Omega_lam] * [Omega_1]^m as a multiset of partitions (empty when zero)."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam), k, n)
    current = Counter({lam: 1})
    for _ in range(m):
        nxt = Counter()
        for mu, mult in current.items():
            for nu in mu.add_box():
                nxt[nu] += mult
        current = nxt
        if not current:
            break
    return current


def plucker_degree(k: int, n: int) -> int:
    """Degree of Gr(k,n) in its Plücker embedding, via the Pieri rule."""
    top = pieri_power(Partition((), k, n), k * (n - k))
    return sum(top.values())


@dataclass(frozen=True)
class SchubertPrediction:
    k: int
    i: int
    a: int
    parts: tuple
    min_n: int
    interpretation: str
    flags: tuple = field(default=())

    @property
    def exponent_form(self) -> str:
        return format_exponent(self.parts)

    def partition(self, n: int) -> Partition:
        return Partition(self.parts, self.k, n)

    def to_json(self) -> dict:
        return {"type": f"Omega_{{{self.exponent_form}}}", "parts": list(self.parts),
                "a": self.a, "min_n": self.min_n, "interpretation": self.interpretation,
                "flags": list(self.flags)}


def recovered_components(k: int, i: int) -> list[SchubertPrediction]:
    """Predicted Schubert-type components recovered from Omega_1^{ki+1} in Gr(k,n)."""
    if k < 1 or i < 0:
        raise OutOfRange(f"need k >= 1 and i >= 0, got k={k}, i={i}")
    flags = () if i > k else (OUTSIDE_HYPOTHESIS,)
    out = []
    # a row needs at least one H_j in the intersection, so a <= i
    for a in range(min(k, i + 1)):
        c = k * (i - a) + a + 1
        parts = (c,) * (a + 1)
        min_n = k * (i + 1) + 1 - a * (k - 1)
        m = i + 1 - a
        if a + 1 == k:
            text = f"{k}-space contained in the intersection of {m} of the H_j"
        else:
            text = (f"{k}-space meeting the intersection of {m} of the H_j "
                    f"(codimension {k * m}) in dimension >= {a + 1}")
        out.append(SchubertPrediction(k, i, a, parts, min_n, text, flags))
    return out


def complete_basis(P: SubspaceMatrix) -> RationalMatrix:
    """An invertible n x n matrix whose first rows span P."""
    rows = [list(r) for r in P.rowspan().rows]
    n = P.n
    for e in range(n):
        cand = rows + [[Fraction(int(j == e)) for j in range(n)]]
        if RationalMatrix(cand).rank() == len(cand):
            rows = cand
        if len(rows) == n:
            break
    return RationalMatrix(rows)


def stratum_ideal(V: VarietyIdeal, P: SubspaceMatrix, i: int) -> Ideal:
    """I(V) + Plücker + the conditions dim(L ∩ P) >= i+1 (vector dimensions)."""
    ctx = V.ctx
    k, n = ctx.k, ctx.n
    if P.dim != k or P.n != n:
        raise ValueError(f"P must be a {k}-dimensional subspace of C^{n}")
    if not 0 <= i <= k - 1:
        raise OutOfRange(f"need 0 <= i <= k-1, got {i}")
    ring = V.ring
    c = max(0, n - 2 * k + 1 + i)
    lam = Partition((c,) * (i + 1), k, n)
    # L -> L B^{-1} sends P to span(e_1..e_k); pull the coordinate conditions back
    Binv = complete_basis(P).inverse()
    table = cauchy_binet_table(Binv, k)
    lin = []
    for I in subsets(n, k):
        if schubert_index_allowed(I, lam):
            continue
        f = ring.zero()
        for J, d in table[I].items():
            f = f + ring.var(plucker_name("q", J, n)).scale(d)
        lin.append(f)
    return V.with_plucker() + Ideal(ring, lin)


def stratum_dimension(V: VarietyIdeal, P: SubspaceMatrix, i: int,
                      budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Projective dimension of {L in V : dim(L ∩ P) >= i+1}; -1 when empty."""
    return projective_dimension(stratum_ideal(V, P, i), budget)


def recovery_criterion(V: VarietyIdeal, P: SubspaceMatrix, budget: int = DEFAULT_TERM_BUDGET) -> bool:
    """Necessary condition for P to be recovered; False certifies P is not."""
    ctx: GrassmannContext = V.ctx
    k, r = ctx.k, ctx.r
    for i in range(k - 1, -1, -1):
        if stratum_dimension(V, P, i, budget) >= (k - i - 1) * (r - k):
            return True
    return False
