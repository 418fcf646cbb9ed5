"""Chow–Lam loci and forms, recovered schemes, and the checks around them."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .groebner import (
    DEFAULT_TERM_BUDGET, GREVLEX, Ideal, MonomialOrder, ResourceLimit, eliminate,
    groebner_basis, hilbert_dim_degree, ideal_equal, irrelevant_ideal,
    is_unit_ideal, normal_form, projective_dimension, quotient, radical_membership, saturation,
)
from .grassmann import (
    GrassmannContext, SubspaceMatrix, complement, containment_relations, join_expansion,
    plucker_name, plucker_names, plucker_relations, primal_sign, project_polynomial_map, subsets,
)
from .poly import PolyMatrix, PolyRing, Polynomial, RationalMatrix, jacobian, maximal_minors, matrix_minors


class DimensionMismatch(UserWarning):
    pass


class DegenerateSample(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# data types

class VarietyIdeal:
    """A subvariety of Gr(k, n) given by an ideal in the dual q-coordinates.

    The Plücker relations need not be among the generators; every pipeline
    adds them.
    """

    def __init__(self, ctx: GrassmannContext, ideal: Ideal):
        ring = ctx.source_ring()
        if ideal.ring != ring:
            ideal = ideal.to_ring(ring)
        if not ideal.homogeneous:
            raise ValueError("variety ideal must be homogeneous")
        self.ctx = ctx
        self.ideal = ideal

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def with_plucker(self) -> Ideal:
        return self.ideal + Ideal(self.ring, plucker_relations(self.ctx.k, self.ctx.n, ring=self.ring))

    def dimension(self, budget: int = DEFAULT_TERM_BUDGET) -> int:
        return projective_dimension(self.with_plucker(), budget)

    @classmethod
    def from_strings(cls, ctx: GrassmannContext, gens: Sequence[str]) -> VarietyIdeal:
        ring = ctx.source_ring()
        return cls(ctx, Ideal(ring, [ring.parse(g) for g in gens]))


class Parametrization:
    """A k x n matrix of polynomials in the parameters; rows span P(params)."""

    def __init__(self, params: Sequence[str], rows: Sequence[Sequence]):
        self.ring = PolyRing(params)
        entries = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, str):
                    x = self.ring.parse(x)
                elif not isinstance(x, Polynomial):
                    x = self.ring.constant(x)
                out.append(x)
            entries.append(out)
        self.matrix = PolyMatrix(entries, self.ring)

    @property
    def params(self) -> list[str]:
        return list(self.ring.variables)

    @property
    def k(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols

    def minors(self) -> dict[tuple, Polynomial]:
        return maximal_minors(self.matrix.rows, self.ring.zero(), self.ring.one())

    def to_json(self) -> dict:
        return {"params": self.params, "matrix": [[str(x) for x in r] for r in self.matrix.rows]}

    @classmethod
    def from_json(cls, doc: Mapping) -> Parametrization:
        return cls(doc["params"], doc["matrix"])


@dataclass
class ChowLamResult:
    ctx: GrassmannContext
    locus_ideal: Ideal
    form: Polynomial
    is_hypersurface: bool
    relations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ctx": self.ctx.to_json(),
            "locus_ideal": self.locus_ideal.to_json(),
            "form": str(self.form),
            "is_hypersurface": self.is_hypersurface,
        }


# ---------------------------------------------------------------------------
# helpers

def normalize_form(f: Polynomial) -> Polynomial:
    """Integer content 1, leading printed term positive."""
    return f.primitive()


def forms_equivalent(f: Polynomial, g: Polynomial, relations: Sequence[Polynomial] = ()) -> bool:
    """True iff f and g agree up to a nonzero scalar modulo ``relations``."""
    if f.ring != g.ring:
        g = g.to_ring(f.ring)
    if relations:
        gb = groebner_basis(Ideal(f.ring, list(relations)))
        f, g = normal_form(f, gb), normal_form(g, gb)
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return f.monic() == g.monic()


def _is_affine_linear(f: Polynomial, allowed: set[int]) -> bool:
    for e in f.terms:
        s = sum(e)
        if s > 1:
            return False
        if s == 1 and not any(e[i] for i in allowed):
            return False
    return True


def linear_presolve(gens: list[Polynomial], elim: Sequence[str]) -> tuple[list[Polynomial], list[str]]:
    """Use affine-linear generators in the ``elim`` variables to substitute them away.

    Returns the new generators (same ring) and the variables that were
    removed.  Eliminating the remaining ``elim`` variables afterwards gives
    the same elimination ideal.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return gens, []
    ring = gens[0].ring
    allowed = {ring.index[v] for v in elim}
    removed = []
    while True:
        pick = None
        for g in gens:
            if not g.is_zero() and _is_affine_linear(g, allowed):
                used = [v for v in g.variables() if ring.index[v] in allowed]
                if used:
                    pick = (g, used[-1])
                    break
        if pick is None:
            break
        g, v = pick
        x = ring.var(v)
        c = g.coefficients_in([v]).get((1,))
        rest = g - c * x
        image = rest.scale(Fraction(-1) / c.constant_value())
        gens = [h.substitute({v: image}, ring) for h in gens if h is not g]
        gens = [h for h in gens if not h.is_zero()]
        allowed.discard(ring.index[v])
        removed.append(v)
    return gens, removed


def _drop_unused(ideal: Ideal, keep: Sequence[str]) -> Ideal:
    used = set()
    for g in ideal.generators:
        used.update(g.variables())
    names = [v for v in ideal.ring.variables if v in used or v in keep]
    ring = PolyRing(names)
    return ideal.to_ring(ring)


def _eliminate_to(gens: list[Polynomial], drop: Sequence[str], target: PolyRing, budget: int) -> Ideal:
    """Eliminate ``drop`` and return the result in ``target``."""
    ring = gens[0].ring
    gens, removed = linear_presolve(gens, drop)
    drop = [v for v in drop if v not in removed]
    if not gens:
        return Ideal(target, [])
    if any(g.is_constant() for g in gens):
        return Ideal(target, [target.one()])
    ideal = Ideal(ring, gens)
    ideal = _drop_unused(ideal, [v for v in target.variables])
    drop = [v for v in drop if v in ideal.ring.index]
    if drop:
        res = eliminate(ideal, drop, budget)
    else:
        res = ideal
    return res.to_ring(target)


def target_relations(ctx: GrassmannContext, ring: PolyRing | None = None) -> list[Polynomial]:
    """Plücker relations of the Chow–Lam ambient, in primal p-coordinates."""
    ring = ring or ctx.target_ring()
    return plucker_relations(ctx.primal_size, ctx.n, "p", ring)


def _extract_form(E: Ideal, ctx: GrassmannContext, budget: int) -> ChowLamResult:
    pring = E.ring
    rels = target_relations(ctx, pring)
    PL = Ideal(pring, rels)
    if E.is_zero() or is_unit_ideal(E):
        return ChowLamResult(ctx, E, pring.one(), False, rels)
    full = E + PL
    dim_e, _ = hilbert_dim_degree(full, budget)
    dim_g, _ = hilbert_dim_degree(PL, budget)
    if dim_e != dim_g - 1:
        return ChowLamResult(ctx, full, pring.one(), False, rels)
    gb = groebner_basis(full, GREVLEX, budget)
    plgb = groebner_basis(PL, GREVLEX, budget) if rels else None
    for f in sorted(gb.basis, key=lambda g: (g.total_degree(), len(g.terms))):
        nf = normal_form(f, plgb) if plgb else f
        if nf.is_zero():
            continue
        if ideal_equal(PL + Ideal(pring, [nf]), full):
            return ChowLamResult(ctx, full, normalize_form(nf), True, rels)
        break
    return ChowLamResult(ctx, full, pring.one(), False, rels)


def _saturate_target(E: Ideal, budget: int) -> Ideal:
    if E.is_zero() or is_unit_ideal(E):
        return E
    return saturation(E, irrelevant_ideal(E.ring), budget)


def _choose_chart(V: VarietyIdeal, budget: int) -> str | None:
    """A source coordinate that does not vanish identically on V."""
    full = V.with_plucker()
    gb = groebner_basis(full, GREVLEX, budget)
    if gb.is_unit():
        return None
    for name in V.ring.variables:
        x = V.ring.var(name)
        if normal_form(x, gb).is_zero():
            continue
        if not radical_membership(x, full, budget):
            return name
    return None


# ---------------------------------------------------------------------------
# Chow–Lam loci

def chow_lam_ideal(V: VarietyIdeal, budget: int = DEFAULT_TERM_BUDGET, chart: str | None = None) -> ChowLamResult:
    """Chow–Lam locus of V by elimination from the incidence correspondence.

    The source coordinates are dehomogenized on one chart q_J = 1 where q_J
    does not vanish on V; for irreducible V this loses nothing, and it
    removes the cone over the whole target that the bihomogeneous ideal
    would otherwise produce.
    """
    ctx = V.ctx
    k, n = ctx.k, ctx.n
    pring = ctx.target_ring()
    dim = V.dimension(budget)
    if dim != ctx.expected_dim:
        warnings.warn(f"variety has dimension {dim}, expected {ctx.expected_dim}", DimensionMismatch,
                      stacklevel=2)
    if chart is None:
        chart = _choose_chart(V, budget)
    if chart is None:
        return ChowLamResult(ctx, Ideal(pring, [pring.one()]), pring.one(), False, target_relations(ctx, pring))
    qn = ctx.source_names()
    ring = PolyRing(qn + ctx.target_names())
    gens = [g.to_ring(ring) for g in V.with_plucker().generators]
    gens += containment_relations(k, ctx.target_rank, n, ring=ring)
    gens += target_relations(ctx, ring)
    gens = [g.substitute({chart: ring.one()}, ring) for g in gens]
    E = _eliminate_to(gens, [v for v in qn if v != chart], pring, budget)
    E = _saturate_target(E, budget)
    return _extract_form(E, ctx, budget)


def _simplest_nonzero(polys: Mapping[tuple, Polynomial]) -> Polynomial | None:
    cands = [f for f in polys.values() if not f.is_zero()]
    if not cands:
        return None
    return min(cands, key=lambda f: (len(f.terms), f.total_degree(), str(f)))


def chow_lam_parametric(P: Parametrization, ctx: GrassmannContext, method: str = "incidence",
                        budget: int = DEFAULT_TERM_BUDGET) -> ChowLamResult:
    """Chow–Lam locus of the closure of the family of row spans of ``P``.

    ``incidence``: plug the parametrized minors into the containment
    relations and eliminate the parameters (plus one inverting variable).
    ``rows``: append generic rows to reach the rank of Q, take the
    maximal minors as coordinates of Q, and eliminate parameters and the
    generic entries from the graph of that map.
    """
    if P.k != ctx.k or P.n != ctx.n:
        raise ValueError("parametrization does not match the context")
    if method == "incidence":
        return _parametric_incidence(P, ctx, budget)
    if method == "rows":
        return _parametric_rows(P, ctx, budget)
    raise ValueError(f"unknown method {method!r}")


def _parametric_incidence(P: Parametrization, ctx: GrassmannContext, budget: int) -> ChowLamResult:
    n = ctx.n
    pnames = ctx.target_names()
    pring = PolyRing(pnames)
    params = P.params
    y = "_y"
    while y in params or y in pnames:
        y += "_"
    ring = PolyRing(params + [y] + pnames)
    minors = {I: m.to_ring(ring) for I, m in P.minors().items()}
    g = _simplest_nonzero(minors)
    if g is None:
        raise ValueError("parametrized matrix never has full rank")
    images = {plucker_name("q", I, n): m for I, m in minors.items()}
    crel = containment_relations(ctx.k, ctx.target_rank, n,
                                 ring=PolyRing(ctx.source_names() + pnames))
    gens = [f.substitute(images, ring) for f in crel]
    gens += target_relations(ctx, ring)
    drop = list(params)
    if not g.is_constant():
        gens.append(ring.one() - ring.var(y) * g)
        drop.append(y)
    gens = [f for f in gens if not f.is_zero()]
    E = _eliminate_to(gens, drop, pring, budget)
    E = _saturate_target(E, budget)
    return _extract_form(E, ctx, budget)


def _parametric_rows(P: Parametrization, ctx: GrassmannContext, budget: int) -> ChowLamResult:
    n = ctx.n
    extra = ctx.target_rank - ctx.k
    aux = [f"_g{i}_{j}" for i in range(extra) for j in range(n)]
    pnames = ctx.target_names()
    pring = PolyRing(pnames)
    ring = PolyRing(P.params + aux + pnames)
    rows = [[x.to_ring(ring) for x in row] for row in P.matrix.rows]
    for i in range(extra):
        rows.append([ring.var(f"_g{i}_{j}") for j in range(n)])
    qs = maximal_minors(rows, ring.zero(), ring.one())
    # graph of Q -> p(Q); homogeneous in p after eliminating, since the
    # ideal is generated by p_J - c*m_J with one free scale per point
    gens = []
    for J in subsets(n, ctx.primal_size):
        I = complement(J, n)
        gens.append(ring.var(plucker_name("p", J, n)) - qs[I].scale(primal_sign(J, n)))
    E = _eliminate_to(gens, P.params + aux, pring, budget)
    E = _homogeneous_part(E, budget)
    E = _saturate_target(E, budget)
    return _extract_form(E, ctx, budget)


def _homogeneous_part(E: Ideal, budget: int) -> Ideal:
    # the image of the coordinate map is a cone, so its ideal is homogeneous
    if not E.homogeneous:
        gb = groebner_basis(E, GREVLEX, budget)
        E = Ideal(E.ring, gb.basis)
    if not E.homogeneous:
        raise ValueError("eliminant is not homogeneous; the parametrized image is not a cone")
    return E


# ---------------------------------------------------------------------------
# recovery

def recovery_ideal(R: ChowLamResult, budget: int = DEFAULT_TERM_BUDGET, reduce_kernel: bool = False,
                   include_plucker: bool = False) -> Ideal:
    """The recovered scheme: coefficients of CL(A ∨ P) as a polynomial in A.

    By default the raw coefficients of the monomials in the a-variables
    are returned, as a scheme in the ambient projective space of P.
    ``reduce_kernel`` first reduces the expansion modulo the Plücker
    relations of A, so coefficients refer to independent monomials;
    ``include_plucker`` adds the Plücker relations of P.  Both change the
    scheme structure (e.g. fat point lengths) but not the support on
    the Grassmannian.
    """
    if not R.is_hypersurface:
        raise ValueError("recovery needs a Chow–Lam form (locus is not a hypersurface)")
    ctx = R.ctx
    n, k, a = ctx.n, ctx.k, ctx.kernel_rank
    sring = ctx.source_ring()
    jring, table = join_expansion(a, k, n, "a", "q")
    images = {}
    for J in subsets(n, ctx.primal_size):
        images[plucker_name("p", J, n)] = table[complement(J, n)].scale(primal_sign(J, n))
    F = R.form.substitute(images, jring)
    anames = plucker_names("a", a, n) if a else []
    arels = plucker_relations(a, n, "a", jring) if a >= 1 else []
    if reduce_kernel and arels:
        order = MonomialOrder("block", split=len(anames))
        gb = groebner_basis(Ideal(jring, arels), order, budget)
        F = normal_form(F, gb)
    gens = []
    if anames:
        for _, c in sorted(F.coefficients_in(anames).items()):
            gens.append(c.to_ring(sring))
    else:
        gens.append(F.to_ring(sring))
    if include_plucker:
        gens += plucker_relations(k, n, ring=sring)
    return Ideal(sring, gens)


@dataclass
class SupportVerdict:
    name: str
    candidate_in_radical: bool
    residual_in_candidate_radical: bool

    @property
    def equal(self) -> bool:
        return self.candidate_in_radical and self.residual_in_candidate_radical


@dataclass
class ResidualReport:
    saturation: Ideal
    saturation_dim_degree: tuple
    top: Ideal | None
    top_dim_degree: tuple | None
    embedded: Ideal | None
    embedded_dim_degree: tuple | None
    residual: Ideal
    supports: list
    same_set_as_v: bool

    def to_json(self) -> dict:
        def dd(x):
            return None if x is None else {"projective_dim": x[0], "degree": x[1]}
        return {
            "saturation": self.saturation.to_json(),
            "saturation_invariants": dd(self.saturation_dim_degree),
            "top_invariants": dd(self.top_dim_degree),
            "embedded_invariants": dd(self.embedded_dim_degree),
            "supports": [{"name": s.name, "equal": s.equal} for s in self.supports],
            "same_set_as_v": self.same_set_as_v,
        }


def _proj_dd(I: Ideal, budget: int) -> tuple:
    d, deg = hilbert_dim_degree(I, budget)
    return max(d - 1, -1), deg


def generic_element(I: Ideal, rng: random.Random, budget: int = DEFAULT_TERM_BUDGET) -> Polynomial:
    """A random homogeneous element of I of top generator degree."""
    ring = I.ring
    gens = groebner_basis(I, GREVLEX, budget).basis
    d = max(g.total_degree() for g in gens)
    lin = sum((ring.var(v).scale(rng.randint(1, 30)) for v in ring.variables), ring.zero())
    f = ring.zero()
    for g in gens:
        f = f + (lin ** (d - g.total_degree())) * g.scale(rng.randint(-30, 30) or 1)
    return f


def same_radical(a: Ideal, b: Ideal, budget: int = DEFAULT_TERM_BUDGET) -> tuple[bool, bool]:
    """(b ⊆ rad a, a ⊆ rad b) by generator-wise radical membership."""
    left = all(radical_membership(g, a, budget) for g in b.generators)
    right = all(radical_membership(g, b, budget) for g in a.generators)
    return left, right


def residual_analysis(W: Ideal, V: VarietyIdeal, candidates: Mapping[str, Ideal] | None = None,
                      singular: Ideal | None = None, seed: int = 0,
                      budget: int = DEFAULT_TERM_BUDGET) -> ResidualReport:
    """Separate the recovered scheme W from V without primary decomposition.

    * ``saturation``: W : I(V)^∞, the part of W away from V.
    * ``top``: W : S^∞ for a caller-supplied ideal S of special points on V
      (typically its singular locus); this is the component along V.
    * ``embedded``: W : f for a generic f in ``top``, supported exactly on
      the points where W has components embedded in V.

    The residual compared with ``candidates`` is the saturation when it is
    proper and the embedded part otherwise.
    """
    ring = W.ring
    if V.ring != ring:
        raise ValueError("W and V live in different rings")
    sat = saturation(W, V.ideal, budget)
    sat_dd = _proj_dd(sat, budget) if sat.homogeneous else None
    top = top_dd = emb = emb_dd = None
    if singular is not None:
        top = saturation(W, singular, budget)
        top_dd = _proj_dd(top, budget)
        f = generic_element(top, random.Random(seed), budget)
        emb = quotient(W, f, budget)
        emb_dd = _proj_dd(emb, budget)
    residual = sat
    if is_unit_ideal(sat) and emb is not None:
        residual = emb
    supports = []
    for name, C in (candidates or {}).items():
        left, right = same_radical(residual, C, budget)
        supports.append(SupportVerdict(name, left, right))
    vfull = V.with_plucker()
    l, r = same_radical(W, vfull, budget)
    return ResidualReport(sat, sat_dd, top, top_dd, emb, emb_dd, residual, supports, l and r)


def point_ideal(ring: PolyRing, point: Sequence) -> Ideal:
    """Homogeneous ideal of a single point, generated by 2x2 minors and zeros."""
    vs = ring.variables
    piv = next(i for i, x in enumerate(point) if x)
    gens = []
    for i, x in enumerate(point):
        if i == piv:
            continue
        gens.append(ring.var(vs[i]).scale(point[piv]) - ring.var(vs[piv]).scale(x))
    return Ideal(ring, gens)


def singular_locus(V: VarietyIdeal, budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """I(V) + Plücker + maximal relevant Jacobian minors (codim-sized)."""
    full = V.with_plucker()
    gb = groebner_basis(full, GREVLEX, budget)
    gens = gb.basis
    d, _ = hilbert_dim_degree(full, budget)
    c = full.ring.nvars - d
    J = jacobian(gens, list(full.ring.variables))
    minors = [m for m in matrix_minors(J, c) if not m.is_zero()]
    return Ideal(full.ring, gens + minors)


# ---------------------------------------------------------------------------
# sampling oracle

def _random_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> RationalMatrix:
    return RationalMatrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


def pullback_to(V: VarietyIdeal, Q: RationalMatrix, prefix: str = "x") -> Ideal:
    """I(V) restricted to Gr(k, rowspan Q), in coordinates of Gr(k, dim Q)."""
    ctx = V.ctx
    k, n = ctx.k, ctx.n
    m = Q.nrows
    xring = PolyRing(plucker_names(prefix, k, m))
    images = {}
    for I in subsets(n, k):
        f = xring.zero()
        for J in subsets(m, k):
            d = Q.submatrix([j - 1 for j in J], [i - 1 for i in I]).det()
            if d:
                f = f + xring.var(plucker_name(prefix, J, m)).scale(d)
        images[plucker_name("q", I, n)] = f
    gens = [g.substitute(images, xring) for g in V.ideal.generators]
    gens += plucker_relations(k, m, prefix, xring)
    return Ideal(xring, gens)


def projected_ideal(V: VarietyIdeal, Z: RationalMatrix, prefix: str = "u",
                    budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """Ideal of the closure of Z(V) in Gr(k, r), in coordinates u_I of [MZ]."""
    ctx = V.ctx
    k = ctx.k
    r = Z.ncols
    qn = ctx.source_names()
    unames = plucker_names(prefix, k, r)
    ring = PolyRing(qn + unames)
    lin = project_polynomial_map(Z, k, ring, prefix)
    gens = [g.to_ring(ring) for g in V.with_plucker().generators]
    gens += [ring.var(plucker_name(prefix, I, r)) - f for I, f in lin.items()]
    return eliminate(Ideal(ring, gens), qn, budget)


def in_chow_lam_locus(V: VarietyIdeal, Q: RationalMatrix, budget: int = DEFAULT_TERM_BUDGET) -> bool:
    """Does the span of Q contain a member of V?"""
    pulled = pullback_to(V, Q)
    d, _ = hilbert_dim_degree(pulled, budget)
    return d >= 1


def membership_oracle(P: SubspaceMatrix, V: VarietyIdeal, trials: int = 5, seed: int = 0,
                      bound: int = 50, budget: int = DEFAULT_TERM_BUDGET) -> str:
    """Randomized test of P ∈ W_V: ``out`` is exact, ``in`` is probabilistic."""
    ctx = V.ctx
    if trials < 1:
        raise ValueError("trials must be positive")
    if P.dim != ctx.k or P.n != ctx.n:
        raise ValueError("P has the wrong shape")
    rng = random.Random(seed)
    base = P.rowspan()
    try:
        for _ in range(trials):
            for attempt in range(20):
                A = _random_matrix(rng, ctx.kernel_rank, ctx.n, bound) if ctx.kernel_rank else None
                Q = base.stack(A) if A is not None else base
                if Q.rank() == ctx.target_rank:
                    break
            else:
                raise DegenerateSample("could not sample A disjoint from P")
            if not in_chow_lam_locus(V, Q, budget):
                return "out"
    except ResourceLimit:
        return "undetermined"
    return "in"


# ---------------------------------------------------------------------------
# swept variety and duals

def sweep_ideal(V: VarietyIdeal, budget: int = DEFAULT_TERM_BUDGET, prefix: str = "x") -> Ideal:
    """Ideal of the union X_V ⊂ P^{n-1} of the spaces in V."""
    ctx = V.ctx
    k, n = ctx.k, ctx.n
    xnames = [f"{prefix}{i}" for i in range(1, n + 1)]
    xring = PolyRing(xnames)
    chart = _choose_chart(V, budget)
    if chart is None:
        return Ideal(xring, [xring.one()])
    qn = ctx.source_names()
    ring = PolyRing(qn + xnames)
    # containment of the point x in P, with P in primal coordinates
    prim = PolyRing([plucker_name("x", (i,), n) for i in range(1, n + 1)] + plucker_names("p", n - k, n))
    rel = containment_relations(1, k, n, "x", "p", ring=prim) if n - k >= 1 else []
    images = {plucker_name("x", (i,), n): ring.var(xnames[i - 1]) for i in range(1, n + 1)}
    for J in subsets(n, n - k):
        images[plucker_name("p", J, n)] = ring.var(plucker_name("q", complement(J, n), n)).scale(primal_sign(J, n))
    gens = [f.substitute(images, ring) for f in rel]
    gens += [g.to_ring(ring) for g in V.with_plucker().generators]
    gens = [g.substitute({chart: ring.one()}, ring) for g in gens]
    E = _eliminate_to(gens, [v for v in qn if v != chart], xring, budget)
    return _saturate_target(E, budget)


def dual_variety(f: Polynomial, ambient: PolyRing | None = None, prefix: str = "y",
                 budget: int = DEFAULT_TERM_BUDGET) -> Ideal:
    """Ideal of the dual of the hypersurface V(f), in variables y0.. or y1..

    The dual variables copy the suffixes of the ambient variable names
    (x0 -> y0), falling back to y1..yn.
    """
    ring = ambient or f.ring
    f = f.to_ring(ring)
    if not f.is_homogeneous():
        raise ValueError("dual_variety needs a homogeneous polynomial")
    xs = list(ring.variables)
    suffixes = [v.lstrip("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ") for v in xs]
    if all(suffixes) and len(set(suffixes)) == len(xs):
        ynames = [prefix + s for s in suffixes]
    else:
        ynames = [f"{prefix}{i}" for i in range(1, len(xs) + 1)]
    yring = PolyRing(ynames)
    t, u = "_t", "_u"
    big = PolyRing(xs + [t, u] + ynames)
    F = f.to_ring(big)
    T = big.var(t)
    gens = [F]
    for x, y in zip(xs, ynames):
        gens.append(T * big.var(y) - F.derivative(x))
    gens.append(big.one() - T * big.var(u))
    chart = next(x for x in xs if f.degree_in(x) > 0)
    gens = [g.substitute({chart: big.one()}, big) for g in gens]
    E = _eliminate_to(gens, [x for x in xs if x != chart] + [t, u], yring, budget)
    return _saturate_target(E, budget)
