import pytest

from oracles import ext1_oracle

from qstrat import rep as R
from qstrat.examples import dual_numbers, example_A, example_B, quantum_sl2, semisimple_pair


@pytest.fixture(scope="module")
def B():
    return example_B()[0]


@pytest.fixture(scope="module")
def A():
    return example_A()[0]


class TestProjectiveInjective:
    def test_projective_dims(self, B):
        assert R.projective(B, "1").dims == {"1": 2, "2": 2}
        assert R.projective(B, "2").dims == {"1": 0, "2": 2}

    def test_injective_dims(self, B):
        assert R.injective(B, "1").dims == {"1": 2, "2": 0}
        assert R.injective(B, "2").dims == {"1": 2, "2": 2}

    def test_modules_valid(self, B, A):
        for alg in (B, A):
            for v in alg.vertices:
                R.projective(alg, v).check_valid()
                R.injective(alg, v).check_valid()

    def test_semisimple_projectives_are_simple(self):
        K, _ = semisimple_pair()
        for v in K.vertices:
            assert R.projective(K, v).total_dim() == 1

    def test_regular_module_dimension(self, A):
        assert R.regular_rep(A).total_dim() == A.dim


class TestHom:
    def test_hom_between_projectives_is_corner(self, B):
        # Hom(A e_i, A e_j) has the dimension of e_i A e_j
        P1, P2 = R.projective(B, "1"), R.projective(B, "2")
        assert R.hom_dim(P1, P1) == 2
        assert R.hom_dim(P2, P1) == 2
        assert R.hom_dim(P1, P2) == 0
        assert R.hom_dim(P2, P2) == 2

    def test_schur(self, B):
        L = R.simples(B)
        assert R.hom_dim(L["1"], L["1"]) == 1
        assert R.hom_dim(L["1"], L["2"]) == 0

    def test_yoneda(self, B):
        # dim Hom(A e_i, m) = dim of m at the vertex i
        for m in (R.projective(B, "1"), R.injective(B, "2"), R.simples(B)["2"]):
            for v in B.vertices:
                assert R.hom_dim(R.projective(B, v), m) == m.dims[v]

    def test_maps_are_homomorphisms(self, B):
        P1 = R.projective(B, "1")
        I2 = R.injective(B, "2")
        for phi in R.hom_space(P1, I2):
            phi.check()


class TestDuality:
    def test_involution(self, B):
        P1 = R.projective(B, "1")
        dd = R.dual(R.dual(P1))
        assert dd.algebra is B
        assert R.isomorphism(dd, P1) is not None

    def test_hom_dims_match_opposite(self, B):
        P1 = R.projective(B, "1")
        I2 = R.injective(B, "2")
        assert R.hom_dim(P1, I2) == R.hom_dim(R.dual(I2), R.dual(P1))

    @pytest.mark.parametrize("n", [0, 1])
    def test_ext_transfer_to_opposite(self, B, n):
        L = R.simples(B)
        for a in ("1", "2"):
            for b in ("1", "2"):
                lhs = R.ext_dims(L[a], L[b], n)[n]
                rhs = R.ext_dims(R.dual(L[b]), R.dual(L[a]), n)[n]
                assert lhs == rhs


class TestRadicalSocle:
    def test_head_of_projective(self, B):
        h, _ = R.head(R.projective(B, "1"))
        assert {v: d for v, d in h.dims.items() if d} == {"1": 1}

    def test_socle_of_injective(self, B):
        s = R.socle(R.injective(B, "2"))
        assert {v: d for v, d in s.dims.items() if d} == {"2": 1}

    def test_radical_of_semisimple_module(self):
        K, _ = semisimple_pair()
        reg = R.regular_rep(K)
        assert R.radical(reg).total_dim() == 0

    def test_not_split_detection(self):
        # Q[x]/(x^2 + 1) is a field extension: builds fine, but the simples
        # are not absolutely simple over Q
        from qstrat.algebra import Arrow, QuiverPresentation, build_algebra
        from qstrat.exactla import QQ

        pres = QuiverPresentation(
            field=QQ,
            vertices=["1"],
            arrows=[Arrow("x", "1", "1")],
            relations=[[(QQ.one, ("x", "x")), (QQ.one, ())]],
            degree_bound=4,
        )
        alg = build_algebra(pres)
        assert alg.dim == 2
        with pytest.raises(R.NotSplit):
            R.simples(alg)

    def test_split_after_field_extension_analog(self):
        # the same relation over F_5 (where -1 is a square) splits
        from qstrat.algebra import Arrow, QuiverPresentation, build_algebra
        from qstrat.exactla import PrimeField

        f5 = PrimeField(5)
        pres = QuiverPresentation(
            field=f5,
            vertices=["1"],
            arrows=[Arrow("x", "1", "1")],
            relations=[[(f5.one, ("x", "x")), (f5.one, ())]],
            degree_bound=4,
        )
        alg = build_algebra(pres)
        assert alg.dim == 2
        # radical is computable only for p > dim; 5 > 2 holds
        assert alg.radical_basis() == []

    def test_comp_mults(self, B):
        assert R.comp_mults(R.projective(B, "1")) == {"1": 2, "2": 2}
        L = R.simples(B)
        assert R.comp_mults(L["1"]) == {"1": 1, "2": 0}


class TestSubQuotient:
    def test_sub_and_quotient_dims(self, B):
        P1 = R.projective(B, "1")
        rad, incl = R.radical_sub(P1)
        assert rad.total_dim() == 3
        quot, proj = R.quotient_rep(P1, {v: incl.mats[v] for v in B.vertices}, assume_invariant=True)
        assert quot.total_dim() == 1
        rad.check_valid()
        quot.check_valid()

    def test_kernel_image(self, B):
        P1 = R.projective(B, "1")
        I1 = R.injective(B, "1")
        homs = R.hom_space(P1, I1)
        phi = next(h for h in homs if not h.is_zero())
        K, _ = R.kernel_sub(phi)
        img, _ = R.image_sub(phi)
        assert K.total_dim() + img.total_dim() == P1.total_dim()


class TestDecompose:
    def test_double_projective(self, B):
        P1 = R.projective(B, "1")
        total, _, _ = R.direct_sum([P1, P1])
        parts = R.decompose(total)
        assert len(parts) == 1
        rep, mult = parts[0]
        assert mult == 2 and R.isomorphism(rep, P1) is not None

    def test_regular_module_of_A(self, A):
        reg = R.regular_rep(A)
        parts = R.decompose(reg)
        dims = sorted(p.total_dim() for p, _ in parts)
        assert dims == [4, 10]
        assert all(mult == 1 for _, mult in parts)
        assert all(R.is_indecomposable(p) for p, _ in parts)

    def test_semisimple_regular(self):
        K, _ = semisimple_pair()
        parts = R.decompose(R.regular_rep(K))
        assert sorted(p.total_dim() for p, _ in parts) == [1, 1]

    def test_exhaustive(self, B):
        P1 = R.projective(B, "1")
        I2 = R.injective(B, "2")
        total, _, _ = R.direct_sum([P1, I2, R.simples(B)["1"]])
        parts = R.decompose(total)
        assert sum(p.total_dim() * m for p, m in parts) == total.total_dim()
        for p, _ in parts:
            E, _ = R.end_algebra_plain(p)
            assert E.dim - len(E.radical_basis()) == 1


class TestExt:
    def test_semisimple_ext_vanishes(self):
        K, _ = semisimple_pair()
        L = R.simples(K)
        assert R.ext1_dim(L["1"], L["2"]) == 0
        assert R.ext1_dim(L["1"], L["1"]) == 0

    def test_standard_pair_vanishing(self, B):
        # no extensions of the lower standard by the higher one
        P2 = R.projective(B, "2")
        P1 = R.projective(B, "1")
        assert R.ext1_dim(P1, P2) == 0

    def test_qsl2_adjacent_simples(self):
        Q, _ = quantum_sl2(3)
        L = R.simples(Q)
        for i in range(3):
            assert R.ext1_dim(L[str(i)], L[str(i + 1)]) == 1
            assert R.ext1_dim(L[str(i + 1)], L[str(i)]) == 1
        assert R.ext1_dim(L["0"], L["2"]) == 0

    def test_against_oracle_on_simples(self, B, A):
        for alg in (B, A):
            L = R.simples(alg)
            for a in alg.vertices:
                for b in alg.vertices:
                    assert R.ext1_dim(L[a], L[b]) == ext1_oracle(L[a], L[b])

    def test_against_oracle_mixed(self, B):
        L = R.simples(B)
        P1 = R.projective(B, "1")
        I1 = R.injective(B, "1")
        pairs = [(P1, L["2"]), (I1, L["1"]), (L["1"], I1), (I1, P1)]
        for m, n in pairs:
            assert m.total_dim() * n.total_dim() <= 24
            assert R.ext1_dim(m, n) == ext1_oracle(m, n)

    def test_extension_middle_nonsplit(self, B):
        L = R.simples(B)
        d, cocycles, ctx = R.ext1_with_cocycles(L["1"], L["2"])
        assert d == 1
        E, incl, proj, split = R.extension_middle(L["1"], L["2"], cocycles[0], ctx)
        assert not split
        assert E.total_dim() == 2
        assert incl.is_injective() and proj.is_surjective()
        E.check_valid()

    def test_extension_middle_zero_class(self, B):
        L = R.simples(B)
        _, _, ctx = R.ext1_with_cocycles(L["1"], L["2"])
        with pytest.raises(R.ZeroClass):
            R.extension_middle(L["1"], L["2"], R.zero_map(ctx[0], L["2"]), ctx)

    def test_retraction_and_section_detect_splitting(self, B):
        L = R.simples(B)
        _, cocycles, ctx = R.ext1_with_cocycles(L["1"], L["2"])
        _, incl, proj, split = R.extension_middle(L["1"], L["2"], cocycles[0], ctx)
        assert not split
        assert R.find_retraction(incl) is None
        assert R.find_section(proj) is None
        total, incls, projs = R.direct_sum([L["1"], L["2"]])
        r = R.find_retraction(incls[0])
        s = R.find_section(projs[1])
        assert r is not None and r.compose(incls[0]) == R.identity_map(L["1"])
        assert s is not None and projs[1].compose(s) == R.identity_map(L["2"])


class TestResolutions:
    def test_projective_resolves_in_zero_steps(self, B):
        res = R.Resolution(R.projective(B, "1"), 4)
        assert res.terminated and len(res.terms) == 1

    def test_simple_two_periodic(self, B):
        # the simple at the loop vertex has a periodic resolution
        res = R.Resolution(R.simples(B)["2"], 6)
        assert not res.terminated
        assert res.detect_period() == 1

    def test_ext_higher_orthogonality(self, B):
        # Ext^n(standard, signed costandard) vanishing for B at (+,-):
        # here checked directly on the modules
        P2 = R.projective(B, "2")  # the standard at the lower weight
        I1 = R.injective(B, "1")
        dims = R.ext_dims(P2, I1, 4)
        assert dims == [0, 0, 0, 0, 0]

    def test_ext0_is_hom(self, B):
        P1 = R.projective(B, "1")
        I2 = R.injective(B, "2")
        assert R.ext_dims(P1, I2, 2)[0] == R.hom_dim(P1, I2)


class TestEndomorphismAlgebras:
    def test_end_of_simple(self, B):
        L = R.simples(B)
        alg, _ = R.endomorphism_algebra([L["1"]], names=["1"])
        assert alg.dim == 1

    def test_end_of_all_simples(self, B):
        L = R.simples(B)
        alg, _ = R.endomorphism_algebra([L["1"], L["2"]], names=["1", "2"])
        assert alg.dim == 2
        assert alg.is_semisimple()

    def test_end_opposite_composition_order(self, B):
        # e_i A e_j is Hom(T_i, T_j); multiplication composes left to right
        P1, P2 = R.projective(B, "1"), R.projective(B, "2")
        alg, hom_bases = R.endomorphism_algebra([P1, P2], names=["1", "2"])
        assert alg.dim == 6
        assert alg.graded_dims()[("2", "1")] == 2
        alg.verify()

    def test_dual_numbers_end(self):
        D, _ = dual_numbers()
        P = R.projective(D, "1")
        alg, _ = R.endomorphism_algebra([P], names=["1"])
        assert alg.dim == 2
        assert len(alg.radical_basis()) == 1
