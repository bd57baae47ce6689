import pytest

from codes import (
    AbelianGroupDescriptor,
    CodeError,
    Pairing,
    best_cr_group,
    canonical_pairing,
    cr_code,
    group_elements,
    is_t_code,
    min_asym_distance,
    vt_code,
)
from codes.generator_tables import PUBLISHED_CR_SIZES


def test_group_parsing_and_arithmetic():
    G = AbelianGroupDescriptor.parse("3x3")
    assert G.factors == (3, 3)
    assert G.order == 9
    assert G.describe() == "Z3+Z3"
    assert G.add((1, 2), (2, 2)) == (0, 1)
    assert G.inverse((1, 2)) == (2, 1)
    assert G.element_order((0, 2)) == 3
    assert AbelianGroupDescriptor.cyclic(12).element_order((4,)) == 3


def test_bad_group_text():
    with pytest.raises(CodeError):
        AbelianGroupDescriptor.parse("3xa")
    with pytest.raises(CodeError):
        AbelianGroupDescriptor((3, 1))


def test_group_elements_skip_identity():
    G = AbelianGroupDescriptor.parse("3x3")
    elements = group_elements(G)
    assert len(elements) == 8
    assert elements[0] == (0, 1) and elements[-1] == (2, 2)


@pytest.mark.parametrize("n, factors", [(6, (7,)), (7, (2, 2, 2)), (8, (3, 3)), (11, (2, 2, 3)), (15, (2, 2, 2, 2))])
def test_best_cr_group(n, factors):
    assert best_cr_group(n).factors == factors


def test_vt_code_sizes():
    assert vt_code(4, 0).strings() == ["0000", "0110", "1001", "1111"]
    assert len(vt_code(6, 0)) == 10
    assert is_t_code(vt_code(7, 0), 1)


def test_vt_code_rejects_bad_residue():
    with pytest.raises(CodeError):
        vt_code(4, 7)


def test_cr_code_over_z3_z3():
    code = cr_code(AbelianGroupDescriptor.parse("3x3"), (0, 0))
    assert len(code) == 32
    assert min_asym_distance(code) == 2


@pytest.mark.parametrize("n", [6, 7, 8, 9, 10])
def test_best_cr_code_matches_published_size(n):
    G = best_cr_group(n)
    assert len(cr_code(G, G.identity)) == PUBLISHED_CR_SIZES[n]


def test_nonbinary_cr_needs_large_element_orders():
    with pytest.raises(CodeError):
        cr_code(AbelianGroupDescriptor.cyclic(6), (0,), q=3)
    assert len(cr_code(AbelianGroupDescriptor.cyclic(5), (0,), q=3)) > 0


def test_element_outside_group():
    with pytest.raises(CodeError):
        cr_code(AbelianGroupDescriptor.cyclic(5), (5,))


def test_inverse_pairing_of_z3_z3():
    pairing = canonical_pairing(AbelianGroupDescriptor.parse("3x3"))
    assert pairing.one_based() == {"pairs": [[1, 2], [3, 6], [4, 8], [5, 7]], "singleton": None}
    assert pairing.describe() == "(1,2) (3,6) (4,8) (5,7)"


def test_inverse_pairing_of_cyclic_group():
    assert canonical_pairing(6).pairs == ((0, 5), (1, 4), (2, 3))
    with pytest.raises(CodeError):
        canonical_pairing(7)


def test_vt_odd_pairing():
    pairing = canonical_pairing(7, mode="vt-odd")
    assert pairing.pairs == ((0, 6), (1, 5), (2, 4))
    assert pairing.singleton == 3
    with pytest.raises(CodeError):
        canonical_pairing(6, mode="vt-odd")


def test_pairing_validation():
    with pytest.raises(CodeError):
        Pairing(((0, 1), (1, 2)))
    with pytest.raises(CodeError):
        Pairing(((0, 1),), singleton=3)
    assert Pairing.identity(5).describe() == "(2,3) (4,5) [1]"
    assert Pairing.from_one_based([(1, 2), (3, 4)]) == Pairing.identity(4)


def _all_elements(G):
    return [G.identity] + group_elements(G)


@pytest.mark.parametrize("text, q", [("7", 2), ("2x2x2", 2), ("3x3", 2), ("11", 2), ("5", 3), ("7", 3)])
def test_cr_cosets_partition_the_space(text, q):
    G = AbelianGroupDescriptor.parse(text)
    n = G.order - 1
    seen = set()
    for g in _all_elements(G):
        rows = set(cr_code(G, g, q).rows)
        assert not rows & seen
        seen |= rows
    assert len(seen) == q ** n


@pytest.mark.parametrize("n", [6, 7, 8, 9, 10, 11])
def test_identity_coset_meets_the_counting_bound(n):
    G = best_cr_group(n)
    assert len(cr_code(G, G.identity)) * (n + 1) >= 2 ** n


@pytest.mark.parametrize("text, q", [("5", 3), ("7", 3), ("5", 4)])
def test_largest_nonbinary_coset_meets_the_counting_bound(text, q):
    G = AbelianGroupDescriptor.parse(text)
    n = G.order - 1
    assert max(len(cr_code(G, g, q)) for g in _all_elements(G)) * (n + 1) >= q ** n
