"""Finite-dimensional modules over an Algebra and their homological algebra.

A Rep stores one vector space per vertex and the matrix of every algebra
basis element, so a module structure is exactly an algebra homomorphism
into matrices and is available for algebras without a quiver presentation
(corners, quotients, endomorphism algebras, opposites).  Hom spaces come
from the intertwiner equations over a generating set; everything else --
radicals, socles, Ext groups, minimal resolutions, indecomposable
decompositions -- is exact linear algebra on top of that.
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from .exactla import Matrix, span_rref, vector_in_span


class RepError(ValueError):
    pass


DEFAULT_SEED = 0


def set_default_seed(seed):
    """Seed used by the randomized searches (decomposition splitting and
    isomorphism hunting) when no explicit seed is passed."""
    global DEFAULT_SEED
    DEFAULT_SEED = int(seed)


class NotSplit(RepError):
    """The ground field does not split the algebra (or an endomorphism
    algebra met along the way)."""


class ZeroClass(RepError):
    """extension_middle was handed the zero cohomology class."""


class Rep:
    """A left module: dims per vertex plus the action of each basis element.

    act[k] is the matrix of the k-th basis element, of shape
    (dims[tgt(k)], dims[src(k)]); absent keys act as zero.  Idempotents act
    as the identity on their vertex space and are not stored.
    """

    __slots__ = ("algebra", "dims", "act")

    def __init__(self, algebra, dims, act, check=False):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        idem = set(algebra.idempotent_index.values())
        self.act = {k: m for k, m in act.items() if k not in idem and not m.is_zero()}
        if check:
            self.check_valid()

    def action(self, k):
        alg = self.algebra
        b = alg.basis[k]
        if alg.idempotent_index.get(b.src) == k:
            return Matrix.identity(alg.field, self.dims[b.src])
        got = self.act.get(k)
        if got is not None:
            return got
        return Matrix.zero(alg.field, self.dims[b.tgt], self.dims[b.src])

    def act_element(self, x):
        """Action of an AlgElement, one matrix per (tgt, src) grading."""
        out = {}
        for k, c in x.coeffs.items():
            b = self.algebra.basis[k]
            m = self.action(k).scale(c)
            key = (b.tgt, b.src)
            out[key] = out[key] + m if key in out else m
        return out

    def total_dim(self):
        return sum(self.dims.values())

    def dim_vector(self):
        return dict(self.dims)

    def is_zero(self):
        return self.total_dim() == 0

    def check_valid(self):
        """Re-check that the matrices define a module over the structure
        constants, including zero products."""
        alg = self.algebra
        for k in range(alg.dim):
            for l in range(alg.dim):
                if alg.src(k) != alg.tgt(l):
                    continue
                if self.dims[alg.tgt(k)] == 0 or self.dims[alg.src(l)] == 0:
                    continue
                lhs = self.action(k) * self.action(l)
                rhs = Matrix.zero(alg.field, lhs.nrows, lhs.ncols)
                for m, c in alg.mult.get((k, l), ()):
                    rhs = rhs + self.action(m).scale(c)
                if lhs != rhs:
                    raise RepError(f"action violates structure constants at ({k},{l})")
        return True

    def __repr__(self):
        nz = {v: d for v, d in self.dims.items() if d}
        return f"Rep({nz}, total={self.total_dim()})"


def zero_rep(algebra):
    return Rep(algebra, {}, {})


def rep_to_json(rep, algebra_ref=None):
    """Serialize a module over a presented algebra: dims per vertex plus
    one row-major matrix per arrow."""
    alg = rep.algebra
    f = alg.field
    arrows = {}
    for k, b in enumerate(alg.basis):
        if b.word and len(b.word) == 1:
            m = rep.action(k)
            arrows[b.word[0]] = [[f.to_str(x) for x in row] for row in m.rows]
    return {
        "algebra": algebra_ref,
        "dims": {v: rep.dims[v] for v in alg.vertices},
        "arrows": arrows,
    }


def rep_from_json(algebra, data, check=True):
    """Load a module over a presented algebra from its arrow matrices; the
    action of longer basis words is composed from them."""
    if algebra.presentation is None:
        raise RepError("rep files need a presented algebra")
    f = algebra.field
    dims = {str(v): int(d) for v, d in data["dims"].items()}
    by_name = {}
    for name, rows in data.get("arrows", {}).items():
        by_name[name] = Matrix(f, [[f.of(x) for x in row] for row in rows]) if rows else None
    act = {}
    for k, b in enumerate(algebra.basis):
        if not b.word:
            continue
        m = None
        for name in reversed(b.word):
            arrow = next(a for a in algebra.presentation.arrows if a.name == name)
            step = by_name.get(name)
            if step is None:
                step = Matrix.zero(f, dims.get(arrow.tgt, 0), dims.get(arrow.src, 0))
            m = step if m is None else step * m
        if m is not None and not m.is_zero():
            act[k] = m
    rep = Rep(algebra, dims, act)
    if check:
        rep.check_valid()
    return rep


def simple_rep(algebra, vertex):
    """The one-dimensional module at a vertex (head of a pointed algebra's
    vertex projective)."""
    return Rep(algebra, {vertex: 1}, {})


def projective(algebra, vertex):
    """The left ideal A e_v as a Rep."""
    alg = algebra
    f = alg.field
    by_vertex = {}
    for k in range(alg.dim):
        if alg.src(k) == vertex:
            by_vertex.setdefault(alg.tgt(k), []).append(k)
    dims = {v: len(ks) for v, ks in by_vertex.items()}
    pos = {}
    for v, ks in by_vertex.items():
        for i, k in enumerate(ks):
            pos[k] = i
    act = {}
    for g in range(alg.dim):
        bg = alg.basis[g]
        src_list = by_vertex.get(bg.src, [])
        tgt_list = by_vertex.get(bg.tgt, [])
        if not src_list or not tgt_list:
            continue
        rows = [[f.zero] * len(src_list) for _ in tgt_list]
        nonzero = False
        for j, k in enumerate(src_list):
            for m, c in alg.mult.get((g, k), ()):
                rows[pos[m]][j] = c
                nonzero = True
        if nonzero:
            act[g] = Matrix(f, rows, len(src_list))
    return Rep(alg, dims, act)


def dual(rep):
    """The dual module over the opposite algebra (a contravariant
    involution: dual(dual(m)) is a module over the original algebra)."""
    opp = rep.algebra.opposite()
    act = {k: m.transpose() for k, m in rep.act.items()}
    return Rep(opp, dict(rep.dims), act)


def injective(algebra, vertex):
    """Injective hull of the simple at a vertex: dual of the opposite
    vertex projective."""
    return dual(projective(algebra.opposite(), vertex))


def regular_rep(algebra):
    return direct_sum([projective(algebra, v) for v in algebra.vertices])[0]


def direct_sum(parts):
    """Direct sum with inclusion and projection maps."""
    if not parts:
        raise RepError("direct_sum of no parts")
    alg = parts[0].algebra
    f = alg.field
    dims = {v: sum(p.dims[v] for p in parts) for v in alg.vertices}
    keys = set()
    for p in parts:
        keys |= set(p.act)
    act = {}
    for k in keys:
        b = alg.basis[k]
        strips = []
        for bi, p in enumerate(parts):
            blk = p.action(k)
            strip = None
            for bj, q in enumerate(parts):
                piece = blk if bj == bi else Matrix.zero(f, blk.nrows, q.dims[b.src])
                strip = piece if strip is None else strip.hstack(piece)
            strips.append(strip)
        m = strips[0]
        for s in strips[1:]:
            m = m.vstack(s)
        act[k] = m
    total = Rep(alg, dims, act)
    incls, projs = [], []
    for i, p in enumerate(parts):
        inc = {}
        for v in alg.vertices:
            before = sum(q.dims[v] for q in parts[:i])
            after = dims[v] - before - p.dims[v]
            eye = Matrix.identity(f, p.dims[v])
            inc[v] = Matrix.zero(f, before, p.dims[v]).vstack(eye).vstack(
                Matrix.zero(f, after, p.dims[v])
            )
        incls.append(RepMap(p, total, inc))
        projs.append(RepMap(total, p, {v: inc[v].transpose() for v in inc}))
    return total, incls, projs


class RepMap:
    """A homomorphism of Reps: one matrix per vertex."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source, target, mats):
        self.source = source
        self.target = target
        f = source.algebra.field
        self.mats = {}
        for v in source.algebra.vertices:
            m = mats.get(v)
            if m is None:
                m = Matrix.zero(f, target.dims[v], source.dims[v])
            self.mats[v] = m

    def check(self):
        """Intertwiner equations against every basis element."""
        alg = self.source.algebra
        for k in range(alg.dim):
            b = alg.basis[k]
            if self.mats[b.tgt] * self.source.action(k) != self.target.action(k) * self.mats[b.src]:
                raise RepError(f"not a homomorphism at basis element {k}")
        return True

    def compose(self, other):
        """self after other."""
        return RepMap(other.source, self.target, {v: self.mats[v] * other.mats[v] for v in self.mats})

    def __add__(self, other):
        return RepMap(self.source, self.target, {v: self.mats[v] + other.mats[v] for v in self.mats})

    def __sub__(self, other):
        return RepMap(self.source, self.target, {v: self.mats[v] - other.mats[v] for v in self.mats})

    def scale(self, c):
        return RepMap(self.source, self.target, {v: m.scale(c) for v, m in self.mats.items()})

    def is_zero(self):
        return all(m.is_zero() for m in self.mats.values())

    def __eq__(self, other):
        return isinstance(other, RepMap) and self.mats == other.mats

    def rank(self):
        return sum(m.rank() for m in self.mats.values())

    def is_injective(self):
        return self.rank() == self.source.total_dim()

    def is_surjective(self):
        return self.rank() == self.target.total_dim()

    def is_isomorphism(self):
        return all(m.nrows == m.ncols and m.is_invertible() for m in self.mats.values())

    def kernel_spans(self):
        return {v: m.kernel() for v, m in self.mats.items()}

    def image_spans(self):
        return {v: m.column_space_basis() for v, m in self.mats.items()}

    def __repr__(self):
        return f"RepMap({self.source!r} -> {self.target!r})"


def identity_map(rep):
    f = rep.algebra.field
    return RepMap(rep, rep, {v: Matrix.identity(f, rep.dims[v]) for v in rep.algebra.vertices})


def zero_map(source, target):
    return RepMap(source, target, {})


def hom_space(m, n):
    """Basis of Hom(m, n) as a list of RepMaps.

    Solves the intertwiner equations phi_tgt . a = a . phi_src over the
    algebra's generating set.
    """
    alg = m.algebra
    if alg is not n.algebra:
        raise RepError("modules over different algebras")
    f = alg.field
    verts = list(alg.vertices)
    offs = {}
    pos = 0
    for v in verts:
        offs[v] = pos
        pos += n.dims[v] * m.dims[v]
    nun = pos
    if nun == 0:
        return []
    gens = alg.generators
    rows = []
    for k in gens:
        b = alg.basis[k]
        dms, dmt = m.dims[b.src], m.dims[b.tgt]
        dns, dnt = n.dims[b.src], n.dims[b.tgt]
        if dnt == 0 or dms == 0:
            continue
        Ma = m.action(k)
        Na = n.action(k)
        for r in range(dnt):
            for c in range(dms):
                row = [f.zero] * nun
                for s in range(dmt):
                    a = Ma.rows[s][c]
                    if not f.is_zero(a):
                        idx = offs[b.tgt] + r * dmt + s
                        row[idx] = f.add(row[idx], a)
                for s in range(dns):
                    a = Na.rows[r][s]
                    if not f.is_zero(a):
                        idx = offs[b.src] + s * dms + c
                        row[idx] = f.sub(row[idx], a)
                if any(not f.is_zero(x) for x in row):
                    rows.append(row)
    if rows:
        ker = Matrix(f, rows, nun).kernel()
        cols = [ker.column(j) for j in range(ker.ncols)]
    else:
        cols = [[f.one if i == j else f.zero for i in range(nun)] for j in range(nun)]
    out = []
    for vec in cols:
        mats = {}
        for v in verts:
            dn, dm = n.dims[v], m.dims[v]
            block = [[vec[offs[v] + r * dm + c] for c in range(dm)] for r in range(dn)]
            mats[v] = Matrix(f, block, dm)
        out.append(RepMap(m, n, mats))
    return out


def hom_dim(m, n):
    return len(hom_space(m, n))


# -- sub/quotient structures ---------------------------------------------


def close_spans(rep, spans):
    """Close per-vertex column spans under the algebra action.

    spans maps vertices to Matrix objects whose columns span the subspace.
    """
    alg = rep.algebra
    f = alg.field
    cur = {}
    for v in alg.vertices:
        sp = spans.get(v)
        cur[v] = [sp.column(j) for j in range(sp.ncols)] if sp is not None else []
    changed = True
    while changed:
        changed = False
        for k, mat in rep.act.items():
            b = alg.basis[k]
            if not cur[b.src]:
                continue
            tgt_span = span_rref(f, cur[b.tgt], rep.dims[b.tgt])
            for col in list(cur[b.src]):
                img = mat.apply(col)
                if any(not f.is_zero(x) for x in img) and not vector_in_span(tgt_span, img):
                    cur[b.tgt].append(img)
                    tgt_span = span_rref(f, cur[b.tgt], rep.dims[b.tgt])
                    changed = True
    out = {}
    for v in alg.vertices:
        rows = span_rref(f, cur[v], rep.dims[v])
        cols = [list(r) for r in rows.rows if any(not f.is_zero(x) for x in r)]
        out[v] = Matrix.from_columns(f, cols, nrows=rep.dims[v])
    return out


def _free_and_pivots(field, span_matrix, ambient_dim):
    row_basis = span_rref(field, [span_matrix.column(j) for j in range(span_matrix.ncols)], ambient_dim)
    pivots = []
    for r in row_basis.rows:
        lead = next((j for j, a in enumerate(r) if not field.is_zero(a)), None)
        if lead is not None:
            pivots.append(lead)
    free = [j for j in range(ambient_dim) if j not in pivots]
    return row_basis, pivots, free


def sub_rep(rep, spans, assume_invariant=False):
    """The submodule spanned per-vertex by the given columns.

    Returns (sub, inclusion).  Spans are closed under the action first
    unless the caller promises invariance.
    """
    alg = rep.algebra
    f = alg.field
    if not assume_invariant:
        spans = close_spans(rep, spans)
    basis = {
        v: spans.get(v, Matrix.zero(f, rep.dims[v], 0)).column_space_basis()
        for v in alg.vertices
    }
    dims = {v: basis[v].ncols for v in alg.vertices}
    act = {}
    for k, mat in rep.act.items():
        b = alg.basis[k]
        if dims[b.src] == 0 or dims[b.tgt] == 0:
            continue
        coords = basis[b.tgt].solve(mat * basis[b.src])
        if coords is None:
            raise RepError("spans are not action-invariant")
        if not coords.is_zero():
            act[k] = coords
    sub = Rep(alg, dims, act)
    return sub, RepMap(sub, rep, basis)


def quotient_rep(rep, spans, assume_invariant=False):
    """The quotient by the submodule spanned by the given columns.

    Returns (quotient, projection)."""
    alg = rep.algebra
    f = alg.field
    if not assume_invariant:
        spans = close_spans(rep, spans)
    proj = {}
    frees = {}
    for v in alg.vertices:
        d = rep.dims[v]
        sp = spans.get(v, Matrix.zero(f, d, 0))
        row_basis, pivots, free = _free_and_pivots(f, sp, d)
        frees[v] = free
        # quotient coordinates: reduce a vector modulo the span, then read
        # off the free coordinates
        rows_out = []
        for j in range(d):
            vv = [f.one if i == j else f.zero for i in range(d)]
            for rrow in row_basis.rows:
                lead = next((jj for jj, a in enumerate(rrow) if not f.is_zero(a)), None)
                if lead is None:
                    continue
                c = vv[lead]
                if not f.is_zero(c):
                    for jj in range(d):
                        vv[jj] = f.sub(vv[jj], f.mul(c, rrow[jj]))
            rows_out.append([vv[fj] for fj in free])
        proj[v] = Matrix(f, rows_out, len(free)).transpose() if d else Matrix.zero(f, len(free), 0)
    dims = {v: len(frees[v]) for v in alg.vertices}
    act = {}
    for k, mat in rep.act.items():
        b = alg.basis[k]
        if dims[b.src] == 0 or dims[b.tgt] == 0:
            continue
        lift_cols = []
        for fj in frees[b.src]:
            lift_cols.append([f.one if i == fj else f.zero for i in range(rep.dims[b.src])])
        lifted = Matrix.from_columns(f, lift_cols, nrows=rep.dims[b.src])
        q = proj[b.tgt] * (mat * lifted)
        if not q.is_zero():
            act[k] = q
    quot = Rep(alg, dims, act)
    return quot, RepMap(rep, quot, proj)


def image_sub(phi):
    """Image of a RepMap as a submodule of its target."""
    return sub_rep(phi.target, phi.image_spans(), assume_invariant=True)


def kernel_sub(phi):
    return sub_rep(phi.source, phi.kernel_spans(), assume_invariant=True)


# -- radical / socle / simples ---------------------------------------------


def radical_sub(rep):
    """rad(A) . m as a submodule, with its inclusion."""
    alg = rep.algebra
    f = alg.field
    cols = {v: [] for v in alg.vertices}
    for r in alg.radical_basis():
        for (tv, _sv), mat in rep.act_element(r).items():
            for j in range(mat.ncols):
                col = mat.column(j)
                if any(not f.is_zero(x) for x in col):
                    cols[tv].append(col)
    spans = {v: Matrix.from_columns(f, cs, nrows=rep.dims[v]) for v, cs in cols.items()}
    return sub_rep(rep, spans, assume_invariant=True)


def radical(rep):
    return radical_sub(rep)[0]


def head(rep):
    """rep / rad(rep) with the projection map."""
    _, incl = radical_sub(rep)
    return quotient_rep(rep, {v: incl.mats[v] for v in rep.algebra.vertices}, assume_invariant=True)


def socle_sub(rep):
    """Joint kernel of the radical action, with its inclusion."""
    alg = rep.algebra
    f = alg.field
    spans = {}
    for v in alg.vertices:
        rows = []
        for r in alg.radical_basis():
            for (_tv, sv), mat in rep.act_element(r).items():
                if sv == v:
                    rows.extend(mat.rows)
        spans[v] = Matrix(f, rows, rep.dims[v]).kernel() if rows else Matrix.identity(f, rep.dims[v])
    return sub_rep(rep, spans, assume_invariant=True)


def socle(rep):
    return socle_sub(rep)[0]


def simples(algebra):
    """The simple modules of a pointed split algebra, one per vertex.

    Raises NotSplit when dim A/rad differs from the vertex count, which is
    exactly when some End(L) would exceed the ground field or some vertex
    idempotent is not primitive.
    """
    rad = algebra.radical_basis()
    if algebra.dim - len(rad) != len(algebra.vertices):
        raise NotSplit(
            "algebra is not pointed split over this field: "
            f"dim A/rad = {algebra.dim - len(rad)}, vertices = {len(algebra.vertices)}"
        )
    return {v: simple_rep(algebra, v) for v in algebra.vertices}


def comp_mults(rep):
    """Composition multiplicities [rep : L(v)].

    For a pointed split algebra each simple is one-dimensional at its
    vertex, so [V : L(v)] = dim Hom(A e_v, V) = dim e_v V: the dimension
    vector.
    """
    simples(rep.algebra)
    return dict(rep.dims)


def head_constituents(rep):
    h, _ = head(rep)
    return {v: d for v, d in h.dims.items() if d}


def socle_constituents(rep):
    s, _ = socle_sub(rep)
    return {v: d for v, d in s.dims.items() if d}


# -- covers, resolutions, Ext -------------------------------------------------


def projective_cover(rep):
    """Minimal projective cover.

    Returns (P, cover map, labels) where labels lists the vertex of each
    projective summand of P."""
    alg = rep.algebra
    f = alg.field
    h, proj = head(rep)
    labels = []
    lifts = []
    for v in alg.vertices:
        dq = h.dims[v]
        if dq == 0:
            continue
        sol = proj.mats[v].solve(Matrix.identity(f, dq))
        if sol is None:
            raise RepError("head projection not surjective")
        for j in range(dq):
            labels.append(v)
            lifts.append((v, sol.column(j)))
    if not labels:
        P = zero_rep(alg)
        return P, RepMap(P, rep, {}), []
    parts = [projective(alg, v) for v, _ in lifts]
    P, _, _ = direct_sum(parts)
    col_entries = {u: [] for u in alg.vertices}
    for v, lift in lifts:
        by_vertex = {}
        for k in range(alg.dim):
            if alg.src(k) == v:
                by_vertex.setdefault(alg.tgt(k), []).append(k)
        for u in alg.vertices:
            for k in by_vertex.get(u, []):
                col_entries[u].append(rep.action(k).apply(lift))
    mats = {u: Matrix.from_columns(f, col_entries[u], nrows=rep.dims[u]) for u in alg.vertices}
    return P, RepMap(P, rep, mats), labels


def syzygy(rep):
    """(K, incl, P, cover, labels) for the kernel of a minimal cover."""
    P, cover, labels = projective_cover(rep)
    K, incl = kernel_sub(cover)
    return K, incl, P, cover, labels


class Resolution:
    """A minimal projective resolution computed up to a length bound."""

    def __init__(self, rep, max_len):
        self.rep = rep
        self.terms = []
        self.term_labels = []
        self.maps = []      # maps[k] : P_k -> P_{k-1} (maps[0] : P_0 -> rep)
        self.syzygies = []
        self.terminated = False
        incls = []
        cur = rep
        for _ in range(max_len + 1):
            if cur.is_zero():
                self.terminated = True
                break
            K, incl, P, cover, labels = syzygy(cur)
            self.maps.append(cover if not incls else incls[-1].compose(cover))
            self.terms.append(P)
            self.term_labels.append(labels)
            self.syzygies.append(K)
            incls.append(incl)
            cur = K

    def syzygy_dim_vectors(self):
        verts = self.rep.algebra.vertices
        return [tuple(s.dims[v] for v in verts) for s in self.syzygies]

    def detect_period(self):
        """Period of the repeating tail of syzygy dimension vectors, if the
        tail repeats at least twice; else None."""
        vecs = self.syzygy_dim_vectors()
        n = len(vecs)
        for p in range(1, n // 2 + 1):
            if all(vecs[n - 1 - i] == vecs[n - 1 - i - p] for i in range(p)):
                return p
        return None


def proj_resolution(rep, max_len):
    return Resolution(rep, max_len)


def _flatten_map(phi):
    out = []
    for v in phi.source.algebra.vertices:
        for row in phi.mats[v].rows:
            out.extend(row)
    return out


def _coords_in_hom_basis(phi, basis):
    """Coordinates of a RepMap in a basis of the same Hom space."""
    f = phi.source.algebra.field
    target = _flatten_map(phi)
    if not basis:
        if all(f.is_zero(x) for x in target):
            return []
        raise RepError("nonzero map in zero Hom space")
    A = Matrix.from_columns(f, [_flatten_map(b) for b in basis], nrows=len(target))
    sol = A.solve(Matrix.from_columns(f, [target], nrows=len(target)))
    if sol is None:
        raise RepError("map not in span of Hom basis")
    return sol.column(0)


def ext_dims(m, n, nmax, resolution=None):
    """dim Ext^k(m, n) for k = 0..nmax via a minimal projective resolution."""
    res = resolution if resolution is not None else Resolution(m, nmax + 1)
    terms = res.terms
    f = m.algebra.field
    hom_bases = [hom_space(P, n) for P in terms]
    hom_dims = [len(b) for b in hom_bases]
    induced = []
    for k in range(1, len(terms)):
        d = res.maps[k]
        rows = [_coords_in_hom_basis(phi.compose(d), hom_bases[k]) for phi in hom_bases[k - 1]]
        if rows:
            induced.append(Matrix(f, rows, hom_dims[k]).transpose())
        else:
            induced.append(Matrix.zero(f, hom_dims[k], 0))
    out = []
    for k in range(nmax + 1):
        if k >= len(terms):
            out.append(0)
            continue
        img_rank = induced[k - 1].rank() if k >= 1 else 0
        if k < len(induced):
            ker_dim = hom_dims[k] - induced[k].rank()
        elif res.terminated:
            ker_dim = hom_dims[k]
        else:
            raise RepError("resolution too short for requested Ext degree")
        out.append(ker_dim - img_rank)
    return out


def ext1_with_cocycles(m, n):
    """dim Ext^1(m, n) plus explicit cocycle representatives.

    Returns (dim, cocycles, context): cocycles are RepMaps from the first
    syzygy K of m into n spanning Ext^1 modulo coboundaries; context is
    (K, incl, P0, cover) from the minimal presentation of m.
    """
    K, incl, P0, cover, _ = syzygy(m)
    f = m.algebra.field
    hom_K = hom_space(K, n)
    if not hom_K:
        return 0, [], (K, incl, P0, cover)
    hom_P = hom_space(P0, n)
    img_rows = [_coords_in_hom_basis(phi.compose(incl), hom_K) for phi in hom_P]
    img = span_rref(f, img_rows, len(hom_K))
    cur = [list(r) for r in img.rows if any(not f.is_zero(a) for a in r)]
    rank = len(cur)
    chosen = []
    for j, phi in enumerate(hom_K):
        vec = [f.one if i == j else f.zero for i in range(len(hom_K))]
        if not vector_in_span(span_rref(f, cur, len(hom_K)), vec):
            cur.append(vec)
            chosen.append(phi)
    return len(hom_K) - rank, chosen, (K, incl, P0, cover)


def ext1_dim(m, n):
    return ext1_with_cocycles(m, n)[0]


def extension_middle(m, n, cocycle, context):
    """Build 0 -> n -> E -> m -> 0 from a cocycle K -> n.

    E is the pushout (n + P0)/{(cocycle(k), -incl(k))}.  Returns
    (E, incl_n, proj_m, split); split is True exactly when the class of the
    cocycle is zero, detected by searching for a retraction.
    """
    K, incl, P0, cover = context
    if cocycle.is_zero():
        raise ZeroClass("extension_middle needs a nonzero cocycle")
    alg = m.algebra
    f = alg.field
    total, incls, projs = direct_sum([n, P0])
    inc_n, _ = incls
    _, pr_P = projs
    graph = {}
    for v in alg.vertices:
        cols = []
        for j in range(K.dims[v]):
            unit = [f.one if i == j else f.zero for i in range(K.dims[v])]
            top = cocycle.mats[v].apply(unit)
            bot = incl.mats[v].apply(unit)
            cols.append(list(top) + [f.neg(x) for x in bot])
        graph[v] = Matrix.from_columns(f, cols, nrows=total.dims[v])
    E, proj = quotient_rep(total, graph, assume_invariant=True)
    incl_n = proj.compose(inc_n)
    mats = {}
    for v in alg.vertices:
        dE = E.dims[v]
        if dE == 0:
            mats[v] = Matrix.zero(f, m.dims[v], 0)
            continue
        pre = proj.mats[v].solve(Matrix.identity(f, dE))
        if pre is None:
            raise RepError("quotient projection not surjective")
        mats[v] = cover.mats[v] * (pr_P.mats[v] * pre)
    proj_m = RepMap(E, m, mats)
    split = find_retraction(incl_n) is not None
    return E, incl_n, proj_m, split


def find_retraction(incl):
    """A map r with r . incl = id, or None."""
    f = incl.source.algebra.field
    if incl.source.is_zero():
        return zero_map(incl.target, incl.source)
    candidates = hom_space(incl.target, incl.source)
    if not candidates:
        return None
    hom_ss = hom_space(incl.source, incl.source)
    rows = [_coords_in_hom_basis(phi.compose(incl), hom_ss) for phi in candidates]
    A = Matrix(f, rows, len(hom_ss)).transpose()
    target = _coords_in_hom_basis(identity_map(incl.source), hom_ss)
    sol = A.solve(Matrix.from_columns(f, [target], nrows=len(hom_ss)))
    if sol is None:
        return None
    r = None
    for c, phi in zip(sol.column(0), candidates):
        term = phi.scale(c)
        r = term if r is None else r + term
    return r


def find_section(proj):
    """A map s with proj . s = id, or None."""
    f = proj.source.algebra.field
    if proj.target.is_zero():
        return zero_map(proj.target, proj.source)
    candidates = hom_space(proj.target, proj.source)
    if not candidates:
        return None
    hom_tt = hom_space(proj.target, proj.target)
    rows = [_coords_in_hom_basis(proj.compose(phi), hom_tt) for phi in candidates]
    A = Matrix(f, rows, len(hom_tt)).transpose()
    target = _coords_in_hom_basis(identity_map(proj.target), hom_tt)
    sol = A.solve(Matrix.from_columns(f, [target], nrows=len(hom_tt)))
    if sol is None:
        return None
    s = None
    for c, phi in zip(sol.column(0), candidates):
        term = phi.scale(c)
        s = term if s is None else s + term
    return s


# -- endomorphism algebras and decomposition ---------------------------------


def _ordered_hom_with_identity(rep):
    """A Hom(rep, rep) basis whose first element is the identity."""
    f = rep.algebra.field
    basis = hom_space(rep, rep)
    ident = identity_map(rep)
    ordered = [ident]
    cur = [_flatten_map(ident)]
    for b in basis:
        v = _flatten_map(b)
        if not vector_in_span(span_rref(f, cur, len(v)), v):
            cur.append(v)
            ordered.append(b)
    return ordered


def endomorphism_algebra(parts, names=None):
    """End(sum of parts)^op as a locally unital Algebra.

    Vertices are the parts; e_i A e_j is Hom(parts[i], parts[j]) and the
    product of x in e_i A e_j and y in e_j A e_l is the composite y after
    x, i.e. multiplication opposite to composition.  Returns
    (algebra, hom_bases) with hom_bases[(i, j)] the chosen basis of
    Hom(parts[i], parts[j]).
    """
    from .algebra import Algebra, BasisElement

    if names is None:
        names = [str(i) for i in range(len(parts))]
    f = parts[0].algebra.field
    hom_bases = {}
    for i, p in enumerate(parts):
        for j, q in enumerate(parts):
            hom_bases[(i, j)] = _ordered_hom_with_identity(p) if i == j else hom_space(p, q)
    basis_elems = []
    index = {}
    idempotents = {}
    for i, ni in enumerate(names):
        for j, nj in enumerate(names):
            for t in range(len(hom_bases[(i, j)])):
                idx = len(basis_elems)
                index[(i, j, t)] = idx
                basis_elems.append(BasisElement(f"h[{ni}->{nj}]{t}", nj, ni, None))
                if i == j and t == 0:
                    idempotents[ni] = idx
    mult = {}
    for i in range(len(parts)):
        for j in range(len(parts)):
            for t, x in enumerate(hom_bases[(i, j)]):
                for l in range(len(parts)):
                    for u, y in enumerate(hom_bases[(j, l)]):
                        comp = y.compose(x)
                        if comp.is_zero():
                            continue
                        coords = _coords_in_hom_basis(comp, hom_bases[(i, l)])
                        entries = tuple(
                            (index[(i, l, s)], c) for s, c in enumerate(coords) if not f.is_zero(c)
                        )
                        if entries:
                            mult[(index[(i, j, t)], index[(j, l, u)])] = entries
    alg = Algebra(f, names, basis_elems, idempotents, mult, generators=None)
    return alg, hom_bases


def end_algebra_plain(rep):
    """End(rep) with plain composition order, on a single vertex; used for
    decomposing modules.  Returns (algebra, list of RepMaps in basis order).
    """
    from .algebra import Algebra, BasisElement

    f = rep.algebra.field
    ordered = _ordered_hom_with_identity(rep)
    belems = [BasisElement(f"f{t}", "1", "1", None) for t in range(len(ordered))]
    mult = {}
    for a, x in enumerate(ordered):
        for b, y in enumerate(ordered):
            comp = x.compose(y)
            if comp.is_zero():
                continue
            coords = _coords_in_hom_basis(comp, ordered)
            entries = tuple((s, c) for s, c in enumerate(coords) if not f.is_zero(c))
            if entries:
                mult[(a, b)] = entries
    return Algebra(f, ["1"], belems, {"1": 0}, mult, generators=tuple(range(len(ordered)))), ordered


def _rational_eigenvalues(poly_coeffs, field):
    """Ground-field roots of a polynomial given by its coefficient list
    (leading coefficient first).  Raises NotSplit on an irreducible factor
    of degree > 1."""
    x = sympy.Symbol("x")
    deg = len(poly_coeffs) - 1
    if field.characteristic == 0:
        expr = sympy.Add(
            *[
                sympy.Rational(c.numerator, c.denominator) * x ** (deg - i)
                for i, c in enumerate(poly_coeffs)
            ]
        )
        factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))[1]
        roots = []
        for fac, _mult in factors:
            poly = sympy.Poly(fac, x)
            if poly.degree() > 1:
                raise NotSplit(f"irreducible factor of degree {poly.degree()} over Q")
            if poly.degree() == 1:
                a, b = poly.all_coeffs()
                r = sympy.Rational(-b, a)
                roots.append(Fraction(int(r.p), int(r.q)))
        return roots
    p = field.characteristic
    expr = sympy.Add(*[int(c) * x ** (deg - i) for i, c in enumerate(poly_coeffs)])
    import warnings

    with warnings.catch_warnings():
        # sympy's modular factor ordering trips its own deprecation warning
        warnings.simplefilter("ignore")
        factors = sympy.factor_list(sympy.Poly(expr, x, modulus=p))[1]
    roots = []
    for fac, _mult in factors:
        poly = sympy.Poly(fac, x, modulus=p)
        if poly.degree() > 1:
            raise NotSplit(f"irreducible factor of degree {poly.degree()} over F_{p}")
        if poly.degree() == 1:
            a, b = [int(c) for c in poly.all_coeffs()]
            roots.append((-b * pow(a, -1, p)) % p)
    return roots


def decompose(rep, seed=None, max_tries=64):
    """Indecomposable direct summands with multiplicities.

    Splits through idempotents lifted from End/rad by the Newton iteration
    e -> 3e^2 - 2e^3; a leaf is certified indecomposable by its
    endomorphism algebra being local.
    """
    if rep.is_zero():
        return []
    if seed is None:
        seed = DEFAULT_SEED
    pieces = _split_completely(rep, random.Random(seed), max_tries)
    out = []
    for p in pieces:
        for i, (q, mult) in enumerate(out):
            if isomorphism(p, q, seed=seed) is not None:
                out[i] = (q, mult + 1)
                break
        else:
            out.append((p, 1))
    return out


def _split_completely(rep, rng, max_tries):
    E, emaps = end_algebra_plain(rep)
    rad = E.radical_basis()
    if E.dim - len(rad) == 1:
        return [rep]
    e = _find_idempotent_map(rep, E, emaps, rad, rng, max_tries)
    if e is None:
        raise RepError("failed to split a decomposable module; raise max_tries")
    img, _ = image_sub(e)
    ker, _ = image_sub(identity_map(rep) - e)
    return _split_completely(img, rng, max_tries) + _split_completely(ker, rng, max_tries)


def _semisimple_min_poly(E, rad_rows, x):
    """Minimal polynomial of the image of x in E/rad, as a coefficient
    list with leading coefficient one."""
    f = E.field
    one = E.one()
    vecs = [one.dense()]
    cur = one
    rad_cols = [list(r) for r in rad_rows]
    while True:
        cur = cur * x
        v = cur.dense()
        A = Matrix.from_columns(f, vecs + rad_cols, nrows=E.dim)
        sol = A.solve(Matrix.from_columns(f, [v], nrows=E.dim))
        if sol is not None:
            k = len(vecs)
            col = sol.column(0)
            return [f.one] + [f.neg(col[k - 1 - i]) for i in range(k)]
        vecs.append(v)
        if len(vecs) > E.dim + 1:
            raise RepError("minimal polynomial computation runaway")


def _find_idempotent_map(rep, E, emaps, rad, rng, max_tries):
    f = E.field
    rad_rows = [r.dense() for r in rad]

    def to_endo(x):
        acc = None
        for k, c in x.coeffs.items():
            term = emaps[k].scale(c)
            acc = term if acc is None else acc + term
        return acc if acc is not None else zero_map(rep, rep)

    for attempt in range(max_tries):
        if attempt < E.dim:
            x = E.basis_element(attempt)
        else:
            x = E.element({k: f.of(rng.randint(-3, 3)) for k in range(E.dim)})
        poly = _semisimple_min_poly(E, rad_rows, x)
        roots = _rational_eigenvalues(poly, f)
        if len(roots) < 2:
            continue
        lam, others = roots[0], roots[1:]
        phi = to_endo(x)
        ident = identity_map(rep)
        num = ident
        denom = f.one
        for mu in others:
            num = num.compose(phi - ident.scale(f.of(mu)))
            denom = f.mul(denom, f.sub(f.of(lam), f.of(mu)))
        e = _newton_idempotent(num.scale(f.inv(denom)), rep)
        if e is None or e.is_zero() or (e - ident).is_zero():
            continue
        return e
    return None


def _newton_idempotent(e, rep, max_iter=40):
    """Iterate e -> 3e^2 - 2e^3 until exactly idempotent."""
    f = rep.algebra.field
    three, two = f.of(3), f.of(2)
    for _ in range(max_iter):
        e2 = e.compose(e)
        if e2 == e:
            return e
        e = e2.scale(three) - e2.compose(e).scale(two)
    return None


def is_indecomposable(rep):
    if rep.is_zero():
        return False
    E, _ = end_algebra_plain(rep)
    return E.dim - len(E.radical_basis()) == 1


def isomorphism(m, n, seed=None, tries=64):
    """An isomorphism m -> n, or None.

    Walks the Hom basis first, then seeded random combinations; an
    invertible combination exists iff the modules are isomorphic, and
    invertibility is an open condition on the Hom space.
    """
    if seed is None:
        seed = DEFAULT_SEED
    if m.dim_vector() != n.dim_vector():
        return None
    if m.total_dim() == 0:
        return RepMap(m, n, {})
    basis = hom_space(m, n)
    if not basis:
        return None
    for phi in basis:
        if phi.is_isomorphism():
            return phi
    rng = random.Random(seed)
    f = m.algebra.field
    for _ in range(tries):
        cand = None
        for phi in basis:
            term = phi.scale(f.of(rng.randint(-9, 9)))
            cand = term if cand is None else cand + term
        if cand is not None and cand.is_isomorphism():
            return cand
    return None
