import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rellaws import (
    Relation,
    RowSignature,
    canonicalize,
    enumerate_all,
    enumerate_normal,
    is_normal_form,
    normal_form_count,
    property_vector,
    row_signature,
)
from rellaws.enumeration import (
    iter_all_codes,
    iter_code_chunks,
    iter_normal_codes,
    normal_form_mask,
    signature_tuples,
)

relations = st.integers(1, 6).flatmap(
    lambda n: st.builds(Relation.from_code, st.just(n),
                        st.integers(0, (1 << n * n) - 1)))

COUNTS_ALL = {1: 2, 2: 16, 3: 512, 4: 65536}
COUNTS_NORMAL = {1: 2, 2: 10, 3: 140, 4: 6170}


class TestSignatures:
    def test_counts_off_diagonal_and_loop(self):
        r = Relation.from_pairs(3, [(0, 0), (0, 1), (0, 2), (1, 0)])
        assert row_signature(r, 0) == RowSignature(2, True)
        assert row_signature(r, 1) == RowSignature(1, False)
        assert row_signature(r, 2) == RowSignature(0, False)

    def test_signature_order_is_by_group_index(self):
        # group index 2c + d: ties on the off-diagonal count break on the loop
        assert RowSignature(1, False) < RowSignature(1, True)
        assert RowSignature(1, True) < RowSignature(2, False)

    def test_signature_tuples_cover_normal_count(self):
        for n in range(1, 6):
            tuples = list(signature_tuples(n))
            assert len(tuples) == len(set(tuples))
            assert all(list(t) == sorted(t) for t in tuples)


class TestCanonicalize:
    def test_worked_example(self):
        # rows (a,b,c,d) with signatures <3,1>, <1,1>, <2,0>, <2,0>;
        # sorting is stable, so the result takes rows in order b, c, d, a
        src = Relation.from_text("1111\n0110\n1001\n1010")
        want = Relation.from_text("1100\n0011\n0101\n1111")
        assert canonicalize(src) == want

    @given(relations)
    @settings(max_examples=200, deadline=None)
    def test_result_is_normal_form(self, r):
        assert is_normal_form(canonicalize(r))

    @given(relations)
    @settings(max_examples=200, deadline=None)
    def test_idempotent(self, r):
        c = canonicalize(r)
        assert canonicalize(c) == c

    @given(relations)
    @settings(max_examples=100, deadline=None)
    def test_preserves_property_vector(self, r):
        assert property_vector(canonicalize(r)) == property_vector(r)

    def test_normal_form_means_nondecreasing_signatures(self):
        r = Relation.from_pairs(2, [(0, 1)])  # signatures <1,0>, <0,0>
        assert not is_normal_form(r)
        assert is_normal_form(r.permute([1, 0]))


class TestCounts:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_enumerate_all(self, n):
        assert enumerate_all(n) == COUNTS_ALL[n]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_enumerate_normal(self, n):
        assert enumerate_normal(n) == COUNTS_NORMAL[n]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_closed_form_matches(self, n):
        expected = {1: 2, 2: 10, 3: 140, 4: 6170, 5: 907452,
                    6: 460631444}[n]
        assert normal_form_count(n) == expected

    def test_bounds(self):
        with pytest.raises(ValueError):
            enumerate_all(0)
        with pytest.raises(ValueError):
            enumerate_normal(9)


class TestGeneration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_generation_equals_filtering(self, n):
        gen = np.concatenate(list(iter_normal_codes(n)))
        filt = np.concatenate(
            [c[normal_form_mask(c, n)] for c in iter_all_codes(n)])
        assert sorted(gen.tolist()) == sorted(filt.tolist())

    @pytest.mark.parametrize("n", [2, 3])
    def test_normal_form_mask_matches_predicate(self, n):
        codes = np.arange(1 << n * n, dtype=np.uint64)
        mask = normal_form_mask(codes, n)
        for code, keep in zip(codes.tolist(), mask.tolist()):
            assert keep == is_normal_form(Relation.from_code(n, code))

    def test_chunking_preserves_sequence(self):
        whole = np.concatenate(list(iter_normal_codes(4)))
        tiny = np.concatenate(list(iter_normal_codes(4, chunk_size=17)))
        assert np.array_equal(whole, tiny)

    def test_iter_code_chunks_dispatch(self):
        a = np.concatenate(list(iter_code_chunks(3, pruned=False)))
        b = np.concatenate(list(iter_code_chunks(3, pruned=True)))
        assert len(a) == COUNTS_ALL[3]
        assert len(b) == COUNTS_NORMAL[3]

    def test_all_generated_codes_are_normal(self):
        for chunk in iter_normal_codes(4):
            for code in chunk.tolist():
                assert is_normal_form(Relation.from_code(4, code))


class TestVisitor:
    def test_visitor_sees_every_relation_once(self):
        seen = []
        count = enumerate_all(2, visitor=seen.append)
        assert count == 16
        assert len(seen) == 16
        assert len({r.to_code() for r in seen}) == 16

    def test_normal_visitor_sees_normal_forms(self):
        seen = []
        count = enumerate_normal(3, visitor=seen.append)
        assert count == len(seen) == 140
        assert all(is_normal_form(r) for r in seen)

    def test_counts_agree_with_and_without_visitor(self):
        assert enumerate_normal(3) == enumerate_normal(3, visitor=lambda r: None)
