import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rellaws import (
    DUAL,
    KIND_REQUIREMENTS,
    MINED_PROPERTIES,
    VECTOR_BITS,
    PropertyId,
    Relation,
    RelationKind,
    classify_kinds,
    holds,
    parse_property,
    property_vector,
    vector_properties,
)
from naive import naive_holds

relations = st.integers(1, 6).flatmap(
    lambda n: st.builds(Relation.from_code, st.just(n),
                        st.integers(0, (1 << n * n) - 1)))


class TestVectorLayout:
    def test_24_properties_carry_bits(self):
        assert VECTOR_BITS == 24
        assert len(MINED_PROPERTIES) == 24
        assert [p.value for p in MINED_PROPERTIES] == list(range(24))

    def test_quasi_refl_halves_have_no_bit(self):
        assert PropertyId.LfQuasiRefl.bit is None
        assert PropertyId.RgQuasiRefl.bit is None
        assert PropertyId.Sym.bit == PropertyId.Sym.value

    def test_bit_order_is_ascending_census_count(self):
        # spot anchors at both ends and the middle
        assert PropertyId.Empty.value == 0
        assert PropertyId.Univ.value == 1
        assert PropertyId.Trans.value == 11
        assert PropertyId.RgSerial.value == 23

    @given(relations)
    @settings(max_examples=100, deadline=None)
    def test_vector_matches_holds(self, r):
        vec = property_vector(r)
        for p in MINED_PROPERTIES:
            assert bool(vec >> p.value & 1) == holds(r, p)

    def test_vector_properties_inverse(self):
        r = Relation.identity(3)
        vec = property_vector(r)
        assert {p.value for p in vector_properties(vec)} == {
            b for b in range(24) if vec >> b & 1}


class TestOracleAgreement:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_exhaustive_small(self, n):
        for code in range(1 << n * n):
            r = Relation.from_code(n, code)
            for p in PropertyId:
                assert holds(r, p) == naive_holds(r, p), (n, code, p.name)

    @given(relations)
    @settings(max_examples=150, deadline=None)
    def test_random_larger(self, r):
        for p in PropertyId:
            assert holds(r, p) == naive_holds(r, p), p.name


class TestDuality:
    def test_pairing_is_involution(self):
        for p in PropertyId:
            assert DUAL[DUAL[p]] is p

    def test_lf_rg_pairs(self):
        P = PropertyId
        assert DUAL[P.LfEucl] is P.RgEucl
        assert DUAL[P.LfUnique] is P.RgUnique
        assert DUAL[P.LfSerial] is P.RgSerial
        assert DUAL[P.LfQuasiRefl] is P.RgQuasiRefl
        assert DUAL[P.Trans] is P.Trans

    @given(relations)
    @settings(max_examples=150, deadline=None)
    def test_converse_swaps_duals(self, r):
        conv = r.converse()
        for p in PropertyId:
            assert holds(r, p) == holds(conv, DUAL[p]), p.name


class TestExampleRelations:
    def test_two_cycle(self):
        r = Relation.from_pairs(2, [(0, 1), (1, 0)])
        assert holds(r, PropertyId.Sym)
        assert holds(r, PropertyId.SemiConnex)
        assert not holds(r, PropertyId.Dense)

    def test_loop_plus_edge(self):
        # {(a,a),(a,b)}: semi-connex and left Euclidean but not symmetric
        r = Relation.from_pairs(2, [(0, 0), (0, 1)])
        assert holds(r, PropertyId.SemiConnex)
        assert holds(r, PropertyId.LfEucl)
        assert not holds(r, PropertyId.Sym)

    def test_four_cycle(self):
        r = Relation.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        for name in ("LfUnique", "RgUnique", "IncTrans"):
            assert holds(r, parse_property(name))
        assert not holds(r, PropertyId.Empty)

    def test_rotational_tournament(self):
        r = Relation.from_pairs(
            7, [(x, (x + d) % 7) for x in range(7) for d in (1, 2, 4)])
        assert holds(r, PropertyId.ASym)
        assert holds(r, PropertyId.Dense)
        assert not holds(r, PropertyId.Empty)

    def test_empty_and_universal_extremes(self):
        assert len(vector_properties(property_vector(Relation.empty(5)))) == 18
        assert len(vector_properties(property_vector(Relation.universal(5)))) == 16


class TestSpotImplications:
    """Level-2 implication laws checked directly against the predicates,
    exhaustively for every relation with n <= 4."""

    IMPLICATIONS = [
        (["ASym"], ["Irrefl"]),
        (["ASym"], ["AntiSym"]),
        (["CoRefl"], ["Sym"]),
        (["CoRefl"], ["Trans"]),
        (["Trans", "Irrefl"], ["ASym"]),
        (["Connex"], ["Refl", "SemiConnex"]),
        (["SemiConnex"], ["IncTrans"]),
        (["IncTrans"], ["SemiOrd2"]),
        (["Refl"], ["QuasiRefl"]),
        (["LfEucl", "RgEucl"], ["Sym", "Trans"]),
    ]

    @pytest.mark.parametrize("ante,cons", IMPLICATIONS,
                             ids=lambda v: "+".join(v))
    def test_implications(self, ante, cons, all_relations_n4):
        ante_p = [parse_property(s) for s in ante]
        cons_p = [parse_property(s) for s in cons]
        for r in all_relations_n4:
            if all(holds(r, p) for p in ante_p):
                for p in cons_p:
                    assert holds(r, p), (r, p.name)

    def test_sym_or_trans_implies_quasi_trans(self, all_relations_n4):
        P = PropertyId
        for r in all_relations_n4:
            if holds(r, P.Sym) or holds(r, P.Trans):
                assert holds(r, P.QuasiTrans), r


@pytest.fixture(scope="module")
def all_relations_n4():
    out = []
    for n in range(1, 5):
        out.extend(Relation.from_code(n, c) for c in range(1 << n * n))
    return out


class TestKinds:
    def test_equivalence(self):
        r = Relation.from_pairs(4, [(x, y) for x in range(4) for y in range(4)
                                    if x // 2 == y // 2])
        kinds = classify_kinds(r)
        assert RelationKind.Equivalence in kinds
        assert RelationKind.Preorder in kinds
        assert RelationKind.Tolerance in kinds

    def test_strict_total_order(self):
        r = Relation.from_pairs(3, [(0, 1), (0, 2), (1, 2)])
        kinds = classify_kinds(r)
        assert RelationKind.StrictPartialOrder in kinds
        assert RelationKind.Trichotomous in kinds
        assert RelationKind.SemiOrder in kinds
        assert RelationKind.Equivalence not in kinds

    def test_bijective_function(self):
        r = Relation.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
        kinds = classify_kinds(r)
        assert RelationKind.BijectiveFunction in kinds
        assert RelationKind.TotalFunction in kinds

    def test_kind_requirements_cover_all_kinds(self):
        assert set(KIND_REQUIREMENTS) == set(RelationKind)
        for req in KIND_REQUIREMENTS.values():
            assert req  # no kind is vacuous


class TestParse:
    def test_canonical_names(self):
        assert parse_property("Trans") is PropertyId.Trans
        assert parse_property("trans") is PropertyId.Trans
        assert parse_property("LFEUCL") is PropertyId.LfEucl

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown property"):
            parse_property("Transistor")
