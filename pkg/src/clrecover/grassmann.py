"""Plücker coordinates, their relations, and the linear algebra around them.

Index sets are ascending tuples of 1-based column numbers.  Dual coordinates
``q_I`` of a subspace are the maximal minors of a row-span matrix; primal
coordinates ``p_J`` are indexed by complements and obey

    p_J = sign(J^c ++ J) * q_{J^c}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .poly import PolyRing, Polynomial, RationalMatrix, maximal_minors


class RankDeficient(ValueError):
    pass


class RankDeficientZ(ValueError):
    pass


class IndexSizeMismatch(ValueError):
    pass


class WrongCodimension(ValueError):
    pass


# ---------------------------------------------------------------------------
# index helpers

def subsets(n: int, m: int) -> list[tuple]:
    return list(itertools.combinations(range(1, n + 1), m))


def complement(index: Sequence[int], n: int) -> tuple:
    s = set(index)
    return tuple(i for i in range(1, n + 1) if i not in s)


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 if an entry repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def primal_sign(index: Sequence[int], n: int) -> int:
    """Sign relating p_J to q_{J^c}: parity of sorting J^c followed by J."""
    return permutation_sign(complement(index, n) + tuple(index))


def plucker_name(prefix: str, index: Sequence[int], n: int) -> str:
    if n <= 9:
        return prefix + "".join(str(i) for i in index)
    return prefix + "_" + "_".join(str(i) for i in index)


def plucker_names(prefix: str, m: int, n: int) -> list[str]:
    return [plucker_name(prefix, I, n) for I in subsets(n, m)]


def plucker_ring(prefix: str, m: int, n: int) -> PolyRing:
    return PolyRing(plucker_names(prefix, m, n))


def parse_plucker_name(name: str, prefix: str, n: int) -> tuple:
    body = name[len(prefix):]
    if n <= 9:
        return tuple(int(c) for c in body)
    return tuple(int(c) for c in body.strip("_").split("_"))


# ---------------------------------------------------------------------------
# contexts and subspaces

@dataclass(frozen=True)
class GrassmannContext:
    """The triple (k, n, r): V sits in Gr(k, n) with dim V = k(r-k) - 1."""

    k: int
    n: int
    r: int

    def __post_init__(self):
        if not (1 <= self.k < self.r <= self.n):
            raise ValueError(f"need 1 <= k < r <= n, got {(self.k, self.n, self.r)}")

    @property
    def expected_dim(self) -> int:
        return self.k * (self.r - self.k) - 1

    @property
    def target_rank(self) -> int:
        """Vector dimension of the spaces Q in the Chow–Lam ambient."""
        return self.n - self.r + self.k

    @property
    def primal_size(self) -> int:
        """Size of the primal index sets of Q."""
        return self.r - self.k

    @property
    def kernel_rank(self) -> int:
        return self.n - self.r

    def source_names(self, prefix: str = "q") -> list[str]:
        return plucker_names(prefix, self.k, self.n)

    def target_names(self, prefix: str = "p") -> list[str]:
        return plucker_names(prefix, self.primal_size, self.n)

    def source_ring(self, prefix: str = "q") -> PolyRing:
        return PolyRing(self.source_names(prefix))

    def target_ring(self, prefix: str = "p") -> PolyRing:
        return PolyRing(self.target_names(prefix))

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "r": self.r}


class SubspaceMatrix:
    """A linear subspace given as a row span or as a kernel."""

    def __init__(self, matrix, mode: str = "rowspan"):
        if mode not in ("rowspan", "kernel"):
            raise ValueError(f"unknown mode {mode!r}")
        if not isinstance(matrix, RationalMatrix):
            matrix = RationalMatrix(matrix)
        if matrix.rank() != matrix.nrows:
            raise RankDeficient("subspace matrix must have full row rank")
        self.mode = mode
        self.matrix = matrix

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @property
    def dim(self) -> int:
        """Vector-space dimension of the subspace."""
        if self.mode == "rowspan":
            return self.matrix.nrows
        return self.n - self.matrix.nrows

    def rowspan(self) -> RationalMatrix:
        if self.mode == "rowspan":
            return self.matrix
        basis = self.matrix.nullspace()
        return RationalMatrix(basis)

    def kernel(self) -> RationalMatrix:
        if self.mode == "kernel":
            return self.matrix
        return RationalMatrix(self.matrix.nullspace())

    def join(self, other: SubspaceMatrix) -> SubspaceMatrix:
        stacked = self.rowspan().stack(other.rowspan())
        return SubspaceMatrix(stacked)

    def contains(self, other: SubspaceMatrix) -> bool:
        a = self.rowspan()
        return a.stack(other.rowspan()).rank() == a.nrows

    def to_json(self) -> dict:
        return {"mode": self.mode, "matrix": [[str(x) for x in row] for row in self.matrix.rows]}

    @classmethod
    def from_json(cls, doc: Mapping) -> SubspaceMatrix:
        rows = [[Fraction(str(x)) for x in row] for row in doc["matrix"]]
        return cls(RationalMatrix(rows), doc.get("mode", "rowspan"))

    def __repr__(self):
        return f"SubspaceMatrix({self.mode}, {self.matrix!r})"


# ---------------------------------------------------------------------------
# coordinates

def dual_plucker_vector(S: SubspaceMatrix) -> dict[tuple, Fraction]:
    m = S.rowspan()
    coords = maximal_minors(m.rows)
    if not any(coords.values()):
        raise RankDeficient("matrix does not have full rank")
    return coords


def primal_plucker_vector(S: SubspaceMatrix) -> dict[tuple, Fraction]:
    """Maximal minors of a kernel matrix, indexed by the primal sets."""
    m = S.kernel()
    return maximal_minors(m.rows)


def primal_dual_convert(coords: Mapping[tuple, object], m: int, n: int, direction: str = "to_primal") -> dict:
    """Convert between dual coordinates (size m) and primal ones (size n-m).

    ``direction`` is ``to_primal`` (input indexed by m-sets) or ``to_dual``
    (input indexed by (n-m)-sets).
    """
    src_size = m if direction == "to_primal" else n - m
    if direction not in ("to_primal", "to_dual"):
        raise ValueError(f"unknown direction {direction!r}")
    out = {}
    for I, v in coords.items():
        I = tuple(I)
        if len(I) != src_size:
            raise IndexSizeMismatch(f"index {I} has size {len(I)}, expected {src_size}")
        J = complement(I, n)
        if direction == "to_primal":
            # p_J = sign(J^c ++ J) q_{J^c} with J^c = I
            out[J] = primal_sign(J, n) * v
        else:
            out[J] = primal_sign(I, n) * v
    return out


def primal_in_dual(ring: PolyRing, m: int, n: int, qprefix: str = "q") -> dict[tuple, Polynomial]:
    """Each primal coordinate p_J of an m-space, as a signed q-variable."""
    out = {}
    for J in subsets(n, n - m):
        I = complement(J, n)
        out[J] = primal_sign(J, n) * ring.var(plucker_name(qprefix, I, n))
    return out


# ---------------------------------------------------------------------------
# relations

def _sorted_with_sign(seq):
    s = permutation_sign(seq)
    return s, tuple(sorted(seq))


def plucker_relations(m: int, n: int, prefix: str = "q", ring: PolyRing | None = None) -> list[Polynomial]:
    """Quadratic exchange relations generating the Plücker ideal of Gr(m, n)."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    ring = ring or plucker_ring(prefix, m, n)
    var = {I: ring.var(plucker_name(prefix, I, n)) for I in subsets(n, m)}
    out = []
    seen = set()
    for I in itertools.combinations(range(1, n + 1), m - 1):
        for J in itertools.combinations(range(1, n + 1), m + 1):
            f = ring.zero()
            for pos, j in enumerate(J):
                s1, a = _sorted_with_sign(I + (j,))
                if not s1:
                    continue
                b = J[:pos] + J[pos + 1:]
                term = var[a] * var[b]
                f = f + term if (s1 * (-1) ** pos) > 0 else f - term
            if f.is_zero():
                continue
            key = f.primitive()
            if key in seen:
                continue
            seen.add(key)
            out.append(f)
    return out


def _eps(X: Sequence[int], t: int) -> int:
    return -1 if sum(1 for x in X if x > t) % 2 else 1


def containment_relations(k: int, l: int, n: int, qprefix: str = "q", pprefix: str = "p",
                          ring: PolyRing | None = None) -> list[Polynomial]:
    """Bilinear equations for P ⊂ Q with P in dual and Q in primal coordinates.

    P is a k-space (variables q_I, |I| = k) and Q an l-space (variables p_R,
    |R| = n - l).
    """
    if not 1 <= k <= l <= n:
        raise ValueError("need 1 <= k <= l <= n")
    if ring is None:
        ring = PolyRing(plucker_names(qprefix, k, n) + plucker_names(pprefix, n - l, n))
    out = []
    seen = set()
    q = lambda I: ring.var(plucker_name(qprefix, I, n))
    p = lambda R: ring.var(plucker_name(pprefix, R, n))
    for S in itertools.combinations(range(1, n + 1), k - 1):
        for R in itertools.combinations(range(1, n + 1), n - l - 1):
            f = ring.zero()
            for t in range(1, n + 1):
                if t in S or t in R:
                    continue
                sign = _eps(S, t) * _eps(R, t)
                term = q(tuple(sorted(S + (t,)))) * p(tuple(sorted(R + (t,))))
                f = f + term if sign > 0 else f - term
            if f.is_zero():
                continue
            key = f.primitive()
            if key not in seen:
                seen.add(key)
                out.append(f)
    return out


# ---------------------------------------------------------------------------
# projections and joins

def _check_z(Z: RationalMatrix) -> None:
    if Z.rank() != Z.ncols:
        raise RankDeficientZ("Z must have full column rank")


def cauchy_binet_table(Z: RationalMatrix, k: int) -> dict[tuple, dict[tuple, Fraction]]:
    """For each target k-set I of Z's columns: {J: det Z[J, I]} over row sets J."""
    n, r = Z.nrows, Z.ncols
    cols = {}
    for I in subsets(r, k):
        entry = {}
        for J in subsets(n, k):
            d = Z.submatrix([j - 1 for j in J], [i - 1 for i in I]).det()
            if d:
                entry[J] = d
        cols[I] = entry
    return cols


def project_plucker(Z: RationalMatrix, q: Mapping[tuple, object]) -> dict[tuple, object]:
    """Coordinates of [MZ] from those of [M] (Cauchy–Binet)."""
    _check_z(Z)
    k = len(next(iter(q)))
    table = cauchy_binet_table(Z, k)
    out = {}
    for I, entry in table.items():
        total = 0
        for J, d in entry.items():
            v = q.get(J, 0)
            if v:
                total = total + d * v
        out[I] = total
    return out


def project_polynomial_map(Z: RationalMatrix, k: int, src: PolyRing, dst_prefix: str = "u",
                           src_prefix: str = "q") -> dict[tuple, Polynomial]:
    """The linear forms u_I = Σ_J det Z[J, I] q_J as polynomials in ``src``."""
    _check_z(Z)
    n = Z.nrows
    table = cauchy_binet_table(Z, k)
    out = {}
    for I, entry in table.items():
        f = src.zero()
        for J, d in entry.items():
            f = f + src.var(plucker_name(src_prefix, J, n)).scale(d)
        out[I] = f
    return out


def shuffle_sign(J: Sequence[int], K: Sequence[int]) -> int:
    return permutation_sign(tuple(J) + tuple(K))


def join_expansion(a: int, k: int, n: int, aprefix: str = "a", pprefix: str = "q",
                   ring: PolyRing | None = None) -> tuple[PolyRing, dict[tuple, Polynomial]]:
    """q_I(A ∨ P) as a bilinear form in the coordinates of A (size a) and P (size k)."""
    if a + k > n:
        raise ValueError("need a + k <= n")
    if ring is None:
        names = (plucker_names(aprefix, a, n) if a else []) + plucker_names(pprefix, k, n)
        ring = PolyRing(names)
    table = {}
    for I in subsets(n, a + k):
        f = ring.zero()
        for J in itertools.combinations(I, a):
            K = tuple(x for x in I if x not in J)
            s = shuffle_sign(J, K)
            term = ring.var(plucker_name(pprefix, K, n))
            if a:
                term = ring.var(plucker_name(aprefix, J, n)) * term
            f = f + term if s > 0 else f - term
        table[I] = f
    return ring, table


def projection_kernel(Z: RationalMatrix) -> SubspaceMatrix:
    """Row-span matrix of ker(Z^T), the centre of the projection."""
    _check_z(Z)
    basis = Z.transpose().nullspace()
    return SubspaceMatrix(RationalMatrix(basis))


def schubert_hyperplane(H: SubspaceMatrix, k: int, ring: PolyRing | None = None,
                        prefix: str = "q") -> Polynomial:
    """Linear form in q(L) vanishing iff the (k-1)-plane L meets H.

    H must have vector dimension n - k.  The form is det([M_L; M_H])
    expanded along the rows of M_L.
    """
    n = H.n
    if H.dim != n - k:
        raise WrongCodimension(f"H has dimension {H.dim}, expected {n - k}")
    ring = ring or plucker_ring(prefix, k, n)
    h = maximal_minors(H.rowspan().rows)
    f = ring.zero()
    for I in subsets(n, k):
        Ic = complement(I, n)
        c = h[Ic]
        if c:
            f = f + ring.var(plucker_name(prefix, I, n)).scale(shuffle_sign(I, Ic) * c)
    return f
