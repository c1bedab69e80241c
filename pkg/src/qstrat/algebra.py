"""Finite-dimensional locally unital algebras presented by quivers with
relations.

An algebra is stored by its basis of normal-form paths together with the
full table of structure constants, so that quotients, corners, opposites
and endomorphism algebras can all be represented uniformly.  Normal forms
are computed by tip reduction in the deglex order (length first, then
left-to-right comparison in a fixed arrow order); overlaps are completed
up to twice the degree bound, which is enough to make reduction of any
product of two basis words confluent.

Conventions.  A path (a_1, ..., a_k) denotes the composite with a_k
applied first, so a product of paths u * v concatenates as u followed by
v on the right.  An element of e_i A e_j is a combination of paths with
source j and target i.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .exactla import Matrix, field_from_name, span_rref, vector_in_span


class AlgebraError(ValueError):
    pass


class NotFiniteDimensionalWithinBound(AlgebraError):
    """A normal word of length degree_bound survives reduction."""


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass
class QuiverPresentation:
    """A quiver with relations over an exact field.

    relations: list of linear combinations [(coeff, path)], each path a
    tuple of arrow names with the rightmost arrow applied first; all paths
    in one relation must share source and target.
    """

    field: object
    vertices: list
    arrows: list
    relations: list
    degree_bound: int = 12

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow names")
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex names")
        if set(names) & set(self.vertices):
            raise AlgebraError("arrow and vertex names must be disjoint")
        self._arrow = {a.name: a for a in self.arrows}
        for rel in self.relations:
            sig = None
            for _, path in rel:
                if not path:
                    continue  # length-0 paths take their signature from the rest
                s, t = self.path_signature(path)
                if sig is None:
                    sig = (s, t)
                elif sig != (s, t):
                    raise AlgebraError(f"mixed source/target in relation {rel}")
            if sig is None:
                raise AlgebraError("a relation needs at least one positive-length path")
            if any(not path for _, path in rel) and sig[0] != sig[1]:
                raise AlgebraError("a length-0 path needs matching source and target")

    def path_signature(self, path):
        """(source, target) of a composable path; raises if not composable."""
        if not path:
            raise AlgebraError("length-0 path has no intrinsic signature")
        arrows = [self._arrow[n] for n in path]
        for left, right in zip(arrows, arrows[1:]):
            if right.tgt != left.src:
                raise AlgebraError(f"path {path} is not composable")
        return arrows[-1].src, arrows[0].tgt

    def to_json(self):
        return {
            "field": self.field.name,
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "src": a.src, "tgt": a.tgt} for a in self.arrows],
            "relations": [
                [{"coeff": self.field.to_str(c), "path": list(p)} for c, p in rel]
                for rel in self.relations
            ],
            "degree_bound": self.degree_bound,
        }

    @staticmethod
    def from_json(data):
        fld = field_from_name(data["field"])
        arrows = [Arrow(a["name"], a["src"], a["tgt"]) for a in data["arrows"]]
        rels = [
            [(fld.of(term["coeff"]), tuple(term["path"])) for term in rel]
            for rel in data["relations"]
        ]
        return QuiverPresentation(
            field=fld,
            vertices=list(data["vertices"]),
            arrows=arrows,
            relations=rels,
            degree_bound=int(data.get("degree_bound", 12)),
        )


@dataclass(frozen=True)
class BasisElement:
    """One basis vector of the algebra: lives in e_tgt A e_src."""

    name: str
    src: str
    tgt: str
    word: tuple = None  # arrow-name tuple for path algebras, else None


class AlgElement:
    """An element of an Algebra: sparse coefficient vector over its basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        f = algebra.field
        self.algebra = algebra
        self.coeffs = {k: c for k, c in coeffs.items() if not f.is_zero(c)}

    def __add__(self, other):
        self._check(other)
        f = self.algebra.field
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = f.add(out.get(k, f.zero), c)
        return AlgElement(self.algebra, out)

    def __sub__(self, other):
        self._check(other)
        f = self.algebra.field
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = f.sub(out.get(k, f.zero), c)
        return AlgElement(self.algebra, out)

    def __neg__(self):
        f = self.algebra.field
        return AlgElement(self.algebra, {k: f.neg(c) for k, c in self.coeffs.items()})

    def scale(self, c):
        f = self.algebra.field
        c = f.of(c)
        return AlgElement(self.algebra, {k: f.mul(c, v) for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, AlgElement) and self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0])))

    def is_zero(self):
        return not self.coeffs

    def dense(self):
        f = self.algebra.field
        v = [f.zero] * self.algebra.dim
        for k, c in self.coeffs.items():
            v[k] = c
        return v

    def signature(self):
        """(src, tgt) if homogeneous, else None."""
        sigs = {(self.algebra.basis[k].src, self.algebra.basis[k].tgt) for k in self.coeffs}
        return sigs.pop() if len(sigs) == 1 else None

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraError("elements of different algebras")

    def __repr__(self):
        f = self.algebra.field
        terms = [
            f"{f.to_str(c)}*{self.algebra.basis[k].name}"
            for k, c in sorted(self.coeffs.items())
        ]
        return " + ".join(terms) if terms else "0"


class Algebra:
    """A finite-dimensional locally unital algebra with a fixed basis.

    basis[k] records the (src, tgt) grading of the k-th basis vector; the
    distinguished idempotents appear in the basis, one per vertex.  The
    multiplication table maps (k, l) to a sparse list of (m, coeff) with
    b_k * b_l = sum coeff * b_m; absent keys mean the product is zero.
    """

    def __init__(self, field, vertices, basis, idempotents, mult, generators=None, presentation=None):
        self.field = field
        self.vertices = tuple(vertices)
        self.basis = tuple(basis)
        self.dim = len(basis)
        self.idempotent_index = dict(idempotents)  # vertex -> basis index
        self.mult = mult
        self.presentation = presentation
        self._opposite = None
        self._radical = None
        if generators is None:
            generators = tuple(
                k for k in range(self.dim) if k not in set(self.idempotent_index.values())
            )
        self.generators = tuple(generators)
        self.by_grade = {}
        for k, b in enumerate(self.basis):
            self.by_grade.setdefault((b.tgt, b.src), []).append(k)

    # -- basic accessors --------------------------------------------------

    def graded_dims(self):
        """dict (i, j) -> dim e_i A e_j, zero pairs omitted."""
        return {g: len(ks) for g, ks in self.by_grade.items()}

    def idempotent(self, vertex):
        return self.element({self.idempotent_index[vertex]: self.field.one})

    def element(self, coeffs):
        return AlgElement(self, {k: self.field.of(c) for k, c in coeffs.items()})

    def basis_element(self, k):
        return self.element({k: self.field.one})

    def element_by_name(self, name):
        for k, b in enumerate(self.basis):
            if b.name == name:
                return self.basis_element(k)
        raise AlgebraError(f"no basis element named {name!r}")

    def one(self):
        return self.element({k: self.field.one for k in self.idempotent_index.values()})

    def src(self, k):
        return self.basis[k].src

    def tgt(self, k):
        return self.basis[k].tgt

    # -- multiplication ---------------------------------------------------

    def multiply(self, x, y):
        f = self.field
        out = {}
        for k, ck in x.coeffs.items():
            for l, cl in y.coeffs.items():
                prod = self.mult.get((k, l))
                if not prod:
                    continue
                c = f.mul(ck, cl)
                for m, cm in prod:
                    out[m] = f.add(out.get(m, f.zero), f.mul(c, cm))
        return AlgElement(self, out)

    def left_multiplication_matrix(self, x):
        """Matrix of a |-> x*a on the whole algebra in the basis order."""
        f = self.field
        cols = []
        for l in range(self.dim):
            col = [f.zero] * self.dim
            for k, ck in x.coeffs.items():
                prod = self.mult.get((k, l))
                if not prod:
                    continue
                for m, cm in prod:
                    col[m] = f.add(col[m], f.mul(ck, cm))
            cols.append(col)
        return Matrix.from_columns(f, cols, nrows=self.dim)

    def verify(self, max_dim_exhaustive=80):
        """Check unit and associativity axioms on the structure constants.

        Exhaustive over composable basis triples up to the given dimension,
        otherwise over a deterministic sample.
        """
        f = self.field
        one = self.one()
        for k in range(self.dim):
            b = self.basis_element(k)
            if one * b != b or b * one != b:
                raise AlgebraError(f"identity fails on basis element {k}")
        for (k, l), prod in self.mult.items():
            if self.src(k) != self.tgt(l):
                raise AlgebraError(f"grading violated by product ({k},{l})")
            for m, _ in prod:
                if self.tgt(m) != self.tgt(k) or self.src(m) != self.src(l):
                    raise AlgebraError(f"grading violated in product ({k},{l})")
        triples = [
            (k, l, m)
            for k in range(self.dim)
            for l in range(self.dim)
            if self.src(k) == self.tgt(l)
            for m in range(self.dim)
            if self.src(l) == self.tgt(m)
        ]
        if self.dim > max_dim_exhaustive:
            triples = triples[:: max(1, len(triples) // 5000)]
        for k, l, m in triples:
            bk, bl, bm = self.basis_element(k), self.basis_element(l), self.basis_element(m)
            if (bk * bl) * bm != bk * (bl * bm):
                raise AlgebraError(f"associativity fails at ({k},{l},{m})")
        return True

    # -- radical ----------------------------------------------------------

    def radical_basis(self):
        """Basis of the Jacobson radical, via the trace form of the left
        regular representation.

        Valid over Q, or over F_p with p > dim; otherwise raises.
        """
        if self._radical is not None:
            return self._radical
        p = self.field.characteristic
        if p and p <= self.dim:
            raise CharTooSmall(f"radical needs characteristic 0 or > dim = {self.dim}")
        f = self.field
        # trace of left multiplication by each basis element
        tr = []
        for k in range(self.dim):
            s = f.zero
            for l in range(self.dim):
                prod = self.mult.get((k, l))
                if prod:
                    for m, c in prod:
                        if m == l:
                            s = f.add(s, c)
            tr.append(s)
        # Gram matrix G[k][l] = trace(L_{b_k b_l})
        rows = []
        for k in range(self.dim):
            row = [f.zero] * self.dim
            for l in range(self.dim):
                prod = self.mult.get((k, l))
                if prod:
                    s = f.zero
                    for m, c in prod:
                        s = f.add(s, f.mul(c, tr[m]))
                    row[l] = s
            rows.append(row)
        ker = Matrix(f, rows, self.dim).kernel()
        rad = [AlgElement(self, {i: ker.rows[i][j] for i in range(self.dim)}) for j in range(ker.ncols)]
        self._radical = rad
        return rad

    def is_semisimple(self):
        return not self.radical_basis()

    # -- derived algebras ---------------------------------------------------

    def opposite(self):
        """The opposite algebra on the same basis, with grading swapped.

        Taking the opposite twice returns the original object.
        """
        if self._opposite is not None:
            return self._opposite
        basis = [BasisElement(b.name, b.tgt, b.src, None) for b in self.basis]
        mult = {(l, k): prod for (k, l), prod in self.mult.items()}
        opp = Algebra(
            self.field,
            self.vertices,
            basis,
            self.idempotent_index,
            mult,
            generators=self.generators,
        )
        opp._opposite = self
        self._opposite = opp
        return opp

    def _ideal_span(self, kill):
        """Row-space rref of the two-sided ideal generated by the given
        vertex idempotents, in basis coordinates."""
        f = self.field
        vecs = []
        for c in kill:
            ec = self.idempotent_index[c]
            left = [k for k in range(self.dim) if self.src(k) == c]   # basis of A e_c
            right = [l for l in range(self.dim) if self.tgt(l) == c]  # basis of e_c A
            vecs.append(self.basis_element(ec).dense())
            for k in left:
                for l in right:
                    prod = self.multiply(self.basis_element(k), self.basis_element(l))
                    if not prod.is_zero():
                        vecs.append(prod.dense())
            for k in left:
                vecs.append(self.basis_element(k).dense())
            for l in right:
                vecs.append(self.basis_element(l).dense())
        return span_rref(f, vecs, self.dim)

    def truncate_lower(self, kill):
        """Quotient by the two-sided ideal generated by the idempotents of
        the killed vertices.  Returns (quotient, TruncationMap)."""
        kill = set(kill)
        unknown = kill - set(self.vertices)
        if unknown:
            raise AlgebraError(f"unknown vertices {sorted(unknown)}")
        if not kill:
            return self, TruncationMap(self, self, {k: k for k in range(self.dim)}, None)
        ideal = self._ideal_span(kill)
        f = self.field
        pivot_cols = set()
        for row in ideal.rows:
            lead = next((j for j, a in enumerate(row) if not f.is_zero(a)), None)
            if lead is not None:
                pivot_cols.add(lead)
        keep = [k for k in range(self.dim) if k not in pivot_cols]
        # Quotient coordinates: reduce a dense vector modulo the ideal rref,
        # then read off the coefficients of the surviving basis elements.
        lead_of_row = []
        for row in ideal.rows:
            lead = next((j for j, a in enumerate(row) if not f.is_zero(a)), None)
            lead_of_row.append(lead)

        def reduce_vec(v):
            v = list(v)
            for row, lead in zip(ideal.rows, lead_of_row):
                if lead is None:
                    continue
                c = v[lead]
                if not f.is_zero(c):
                    for j in range(self.dim):
                        v[j] = f.sub(v[j], f.mul(c, row[j]))
            return v

        new_index = {k: i for i, k in enumerate(keep)}
        basis = []
        for k in keep:
            b = self.basis[k]
            if b.src in kill or b.tgt in kill:
                raise AlgebraError("ideal misses a graded piece it must contain")
            basis.append(BasisElement(b.name, b.src, b.tgt, b.word))
        idempotents = {
            v: new_index[self.idempotent_index[v]] for v in self.vertices if v not in kill
        }
        mult = {}
        for i, k in enumerate(keep):
            for j, l in enumerate(keep):
                if self.src(k) != self.tgt(l):
                    continue
                prod = self.multiply(self.basis_element(k), self.basis_element(l))
                red = reduce_vec(prod.dense())
                entries = [(new_index[m], red[m]) for m in keep if not f.is_zero(red[m])]
                if entries:
                    mult[(i, j)] = tuple(entries)
        # images of the generators still generate, but only images that are
        # themselves kept basis elements can be listed; if any generator
        # maps onto a combination, fall back to the full basis
        gens = []
        clean = True
        for g in self.generators:
            if g in new_index:
                gens.append(new_index[g])
            elif any(not f.is_zero(c) for c in reduce_vec(self.basis_element(g).dense())):
                clean = False
                break
        quotient = Algebra(
            f,
            [v for v in self.vertices if v not in kill],
            basis,
            idempotents,
            mult,
            generators=tuple(gens) if clean else None,
        )
        proj = {k: new_index.get(k) for k in range(self.dim)}
        return quotient, TruncationMap(self, quotient, proj, reduce_vec)

    def truncate_upper(self, keep):
        """Corner algebra e A e for e the sum of the kept idempotents."""
        keep = set(keep)
        unknown = keep - set(self.vertices)
        if unknown:
            raise AlgebraError(f"unknown vertices {sorted(unknown)}")
        sel = [k for k in range(self.dim) if self.src(k) in keep and self.tgt(k) in keep]
        new_index = {k: i for i, k in enumerate(sel)}
        basis = [self.basis[k] for k in sel]
        idempotents = {v: new_index[self.idempotent_index[v]] for v in keep}
        mult = {}
        for (k, l), prod in self.mult.items():
            if k in new_index and l in new_index:
                entries = tuple((new_index[m], c) for m, c in prod)
                # products of corner elements stay in the corner
                mult[(new_index[k], new_index[l])] = entries
        return Algebra(
            self.field,
            [v for v in self.vertices if v in keep],
            basis,
            idempotents,
            mult,
            generators=None,
        )

    # -- presentation extraction -------------------------------------------

    def arrow_space_elements(self):
        """Elements spanning rad/rad^2, split by grading (tgt, src).

        These serve as quiver generators of a pointed algebra.  Returns a
        list of ((tgt, src), AlgElement) pairs.
        """
        f = self.field
        rad = self.radical_basis()
        # the radical is graded; collect graded components of its basis
        by_sig = {}
        for r in rad:
            comp = {}
            for k, c in r.coeffs.items():
                comp.setdefault((self.tgt(k), self.src(k)), {})[k] = c
            for sig, coeffs in comp.items():
                by_sig.setdefault(sig, []).append(AlgElement(self, coeffs))
        sq_vecs = []
        for a in rad:
            for b in rad:
                p = a * b
                if not p.is_zero():
                    sq_vecs.append(p.dense())
        out = []
        for sig in sorted(by_sig, key=str):
            cur = [list(v) for v in sq_vecs]
            for x in by_sig[sig]:
                v = x.dense()
                if not vector_in_span(span_rref(f, cur, self.dim), v):
                    cur.append(v)
                    out.append((sig, x))
        return out

    def check_relations(self, generators, words):
        """Evaluate words in named generators; return {word: is_zero}."""
        def eval_word(w):
            acc = None
            for name in w:
                x = generators[name]
                acc = x if acc is None else acc * x
            return acc

        return {tuple(w): eval_word(w).is_zero() for w in words}

    def to_json(self):
        return {
            "field": self.field.name,
            "vertices": list(self.vertices),
            "basis": [
                {"name": b.name, "src": b.src, "tgt": b.tgt, "word": list(b.word) if b.word else None}
                for b in self.basis
            ],
            "idempotents": {str(v): k for v, k in self.idempotent_index.items()},
            "mult": [
                [k, l, [[m, self.field.to_str(c)] for m, c in prod]]
                for (k, l), prod in sorted(self.mult.items())
            ],
        }

    @staticmethod
    def from_json(data, check=True):
        """Rebuild an algebra from structure-constant JSON (the inverse of
        to_json); associativity is re-verified by default."""
        fld = field_from_name(data["field"])
        basis = [
            BasisElement(
                b["name"], b["src"], b["tgt"], tuple(b["word"]) if b.get("word") else None
            )
            for b in data["basis"]
        ]
        mult = {
            (int(k), int(l)): tuple((int(m), fld.of(c)) for m, c in prod)
            for k, l, prod in data["mult"]
        }
        alg = Algebra(
            fld,
            [str(v) for v in data["vertices"]],
            basis,
            {str(v): int(k) for v, k in data["idempotents"].items()},
            mult,
        )
        if check:
            alg.verify()
        return alg

    def __repr__(self):
        return f"Algebra(dim={self.dim}, vertices={list(self.vertices)})"


class CharTooSmall(AlgebraError):
    """F_p radical computation requested with p <= dim."""


@dataclass
class TruncationMap:
    """Surjection data A -> A/(ideal); lets modules be inflated back."""

    source: Algebra
    quotient: Algebra
    index_map: dict
    reduce_vec: object

    def push(self, x: AlgElement) -> AlgElement:
        if self.reduce_vec is None:
            return self.quotient.element(dict(x.coeffs))
        f = self.quotient.field
        red = self.reduce_vec(x.dense())
        out = {}
        for k, i in self.index_map.items():
            if i is not None and not f.is_zero(red[k]):
                out[i] = red[k]
        return AlgElement(self.quotient, out)


# -- construction from a presentation --------------------------------------


class _Rewriter:
    """Bounded tip-reduction engine for one presentation."""

    def __init__(self, pres: QuiverPresentation):
        self.pres = pres
        self.field = pres.field
        self.arrow_order = {a.name: i for i, a in enumerate(pres.arrows)}
        self.arrow = {a.name: a for a in pres.arrows}
        # rules: tip word -> dict of lower words (poly = tip - rhs)
        self.rules = {}

    def word_key(self, w):
        return (len(w), tuple(self.arrow_order[a] for a in w))

    def normalize_poly(self, poly):
        """Combine duplicate words, drop zeros."""
        f = self.field
        out = {}
        for c, w in poly:
            if f.is_zero(c):
                continue
            out[w] = f.add(out.get(w, f.zero), c)
        return {w: c for w, c in out.items() if not f.is_zero(c)}

    def reduce(self, poly, bound):
        """Fully reduce a polynomial {word: coeff} modulo the rules; words
        longer than the bound are discarded (they lie in the truncation
        ideal used only during completion)."""
        f = self.field
        work = dict(poly)
        done = {}
        while work:
            w = max(work, key=self.word_key)
            c = work.pop(w)
            if f.is_zero(c):
                continue
            if len(w) > bound:
                continue
            hit = self._find_rule(w)
            if hit is None:
                done[w] = f.add(done.get(w, f.zero), c)
                continue
            pre, tip, post, rhs = hit
            for w2, c2 in rhs.items():
                nw = pre + w2 + post
                nc = f.mul(c, c2)
                work[nw] = f.add(work.get(nw, f.zero), nc)
        return {w: c for w, c in done.items() if not f.is_zero(c)}

    def _find_rule(self, w):
        n = len(w)
        for tip, rhs in self.rules.items():
            t = len(tip)
            if t > n:
                continue
            for s in range(n - t + 1):
                if w[s : s + t] == tip:
                    return (w[:s], tip, w[s + t :], rhs)
        return None

    def add_rule(self, poly, bound):
        """Orient a reduced polynomial into a rewrite rule; returns tip."""
        f = self.field
        if not poly:
            return None
        tip = max(poly, key=self.word_key)
        if not tip:
            raise AlgebraError("a relation forces a vertex idempotent into the ideal")
        c = poly[tip]
        rhs = {w: f.neg(f.div(cw, c)) for w, cw in poly.items() if w != tip}
        self.rules[tip] = rhs
        return tip

    def complete(self, bound):
        """Overlap completion up to the given total degree."""
        f = self.field
        # seed rules from the input relations
        queue = []
        for rel in self.pres.relations:
            poly = self.normalize_poly(rel)
            queue.append(poly)
        while queue:
            poly = queue.pop()
            red = self.reduce(poly, bound)
            if not red:
                continue
            tip = self.add_rule(red, bound)
            # ambiguities of the new tip with all existing tips (both orders)
            new_pairs = [(tip, t2) for t2 in list(self.rules)] + [
                (t2, tip) for t2 in list(self.rules)
            ]
            for t1, t2 in new_pairs:
                for ov, pos2 in self._overlaps(t1, t2):
                    if len(ov) > bound:
                        continue
                    s1 = self._subst(ov, t1, self.rules[t1], 0)
                    s2 = self._subst(ov, t2, self.rules[t2], pos2)
                    diff = dict(s1)
                    for w, c in s2.items():
                        nc = f.sub(diff.get(w, f.zero), c)
                        if f.is_zero(nc):
                            diff.pop(w, None)
                        else:
                            diff[w] = nc
                    if diff:
                        queue.append(diff)

    def _subst(self, word, tip, rhs, pos):
        """One rewriting step at a fixed occurrence of a tip."""
        pre, post = word[:pos], word[pos + len(tip):]
        return {pre + w2 + post: c for w2, c in rhs.items()}

    def _overlaps(self, t1, t2):
        """Ambiguity words: t1 as a prefix overlapping a t2-suffix, and t2
        contained in t1.  Yields (word, position of the t2 occurrence)."""
        out = []
        n1, n2 = len(t1), len(t2)
        # t1 = u v, t2 = v w with v nonempty: ambiguity word u v w
        for k in range(1, min(n1, n2)):
            if t1[n1 - k:] == t2[:k]:
                w = t1 + t2[k:]
                if self._composable(w):
                    out.append((w, n1 - k))
        # containment: t2 strictly inside t1
        if n1 != n2:
            for s in range(0, n1 - n2 + 1):
                if t1[s: s + n2] == t2:
                    out.append((t1, s))
        return out

    def _composable(self, w):
        for left, right in zip(w, w[1:]):
            if self.arrow[right].tgt != self.arrow[left].src:
                return False
        return True

    def normal_words(self, max_len):
        """All composable rule-free words of length <= max_len, by length.

        Entries are (word, source vertex); length-0 entries stand for the
        vertex idempotents.
        """
        out = {0: [((), v) for v in self.pres.vertices]}
        frontier = []
        for a in self.pres.arrows:
            w = (a.name,)
            if not self._find_rule_fast(w):
                frontier.append((w, a.src))
        out[1] = frontier
        for length in range(2, max_len + 1):
            nxt = []
            for w, s in frontier:
                # extend on the right: the appended arrow is applied first,
                # so its target must match the source of the current word
                for a in self.pres.arrows:
                    if a.tgt != s:
                        continue
                    nw = w + (a.name,)
                    if self._find_rule_fast(nw):
                        continue
                    nxt.append((nw, a.src))
            out[length] = nxt
            frontier = nxt
            if not frontier:
                break
        return out

    def _find_rule_fast(self, w):
        # only need to test suffix-aligned occurrences when growing words on
        # the right one letter at a time
        n = len(w)
        for tip in self.rules:
            t = len(tip)
            if t <= n and w[n - t :] == tip:
                return True
        return False


def build_algebra(pres: QuiverPresentation, check=True):
    """Construct the quotient path algebra of a presentation.

    Raises NotFiniteDimensionalWithinBound if a normal word of length
    degree_bound survives.
    """
    d = pres.degree_bound
    rw = _Rewriter(pres)
    rw.complete(2 * d)
    words_by_len = rw.normal_words(d)
    if any(words_by_len.get(d, [])):
        raise NotFiniteDimensionalWithinBound(
            f"normal word of length {d} survives; raise degree_bound or check the relations"
        )
    basis = []
    idempotents = {}
    index_of_word = {}
    for v in sorted(pres.vertices, key=str):
        idempotents[v] = len(basis)
        basis.append(BasisElement(f"e_{v}", v, v, ()))
    for length in sorted(words_by_len):
        if length == 0:
            continue
        for w, s in sorted(words_by_len[length], key=lambda ws: rw.word_key(ws[0])):
            sig_src, sig_tgt = pres.path_signature(w)
            index_of_word[w] = len(basis)
            basis.append(BasisElement("*".join(w), sig_src, sig_tgt, w))
    f = pres.field
    mult = {}
    n = len(basis)
    gens = [k for k, b in enumerate(basis) if b.word and len(b.word) == 1]
    for k in range(n):
        bk = basis[k]
        for l in range(n):
            bl = basis[l]
            if bk.src != bl.tgt:
                continue
            concat = bk.word + bl.word
            if not concat:
                # both idempotents at the same vertex
                mult[(k, l)] = ((k, f.one),)
                continue
            red = rw.reduce({concat: f.one}, 2 * d)
            entries = []
            for w, c in red.items():
                if not w:
                    entries.append((idempotents[bk.tgt], c))
                else:
                    idx = index_of_word.get(w)
                    if idx is None:
                        raise AlgebraError(f"reduction produced a non-normal word {w}")
                    entries.append((idx, c))
            if entries:
                mult[(k, l)] = tuple(sorted(entries))
    alg = Algebra(f, pres.vertices, basis, idempotents, mult, generators=tuple(gens), presentation=pres)
    if check:
        alg.verify()
    return alg


def algebra_from_json(data):
    return build_algebra(QuiverPresentation.from_json(data))


def load_algebra(path):
    with open(path) as fh:
        return algebra_from_json(json.load(fh))


# -- parametric families -----------------------------------------------------

_TEMPLATE = re.compile(r"\{i([+-]\d+)?\}")


def _instantiate(template, i):
    """Substitute an integer into index templates like x{i} or {i+1}."""

    def repl(match):
        shift = match.group(1)
        return str(i + int(shift) if shift else i)

    return _TEMPLATE.sub(repl, template)


def family_presentation(fam, window):
    """Instantiate an index-shifted quiver template on an integer window.

    fam carries arrow templates ({"name", "src", "tgt"} with {i}-style
    indices), relation templates in the same coefficient/path format as
    plain presentations, a field tag and a degree bound.  Arrows and
    relations are instantiated for every shift whose referenced vertices
    all lie in the window.
    """
    lo, hi = int(window[0]), int(window[1])
    if hi < lo:
        raise AlgebraError("empty family window")
    fld = field_from_name(fam.get("field", "Q"))
    vertices = [str(i) for i in range(lo, hi + 1)]
    vset = set(vertices)
    arrows = []
    arrow_names = set()
    for tpl in fam["arrows"]:
        for i in range(lo - 1, hi + 2):
            name = _instantiate(tpl["name"], i)
            src = _instantiate(tpl["src"], i)
            tgt = _instantiate(tpl["tgt"], i)
            if src in vset and tgt in vset and name not in arrow_names:
                arrows.append(Arrow(name, src, tgt))
                arrow_names.add(name)
    relations = []
    for rel in fam.get("relations", []):
        for i in range(lo - 2, hi + 3):
            terms = []
            usable = True
            for term in rel:
                path = tuple(_instantiate(a, i) for a in term["path"])
                if not all(a in arrow_names for a in path):
                    usable = False
                    break
                terms.append((fld.of(term["coeff"]), path))
            if usable and terms:
                relations.append(terms)
    return QuiverPresentation(
        field=fld,
        vertices=vertices,
        arrows=arrows,
        relations=relations,
        degree_bound=int(fam.get("degree_bound", 8)),
    )


def expand_family(data):
    """Realize one window of a parametric family file.

    The file is {"family": {...templates..., "truncation": ...}, "window":
    [lo, hi]}.  Truncation semantics: "naive" builds the window sub-quiver
    directly (right for corner windows of monomial families); "lower"
    builds one step above the window and kills the top idempotent (for
    lower-set windows whose relations drag loops below the boundary);
    "interval" additionally takes the corner above the bottom edge.
    """
    fam = data["family"]
    window = data["window"]
    lo, hi = int(window[0]), int(window[1])
    mode = fam.get("truncation", "naive")
    if mode == "naive":
        return build_algebra(family_presentation(fam, (lo, hi)))
    if mode == "lower":
        big = build_algebra(family_presentation(fam, (lo, hi + 1)))
        out, _ = big.truncate_lower({str(hi + 1)})
        return out
    if mode == "interval":
        big = build_algebra(family_presentation(fam, (lo - 1, hi + 1)))
        cut, _ = big.truncate_lower({str(hi + 1)})
        return cut.truncate_upper({str(i) for i in range(lo, hi + 1)})
    raise AlgebraError(f"unknown truncation mode {mode!r}")
