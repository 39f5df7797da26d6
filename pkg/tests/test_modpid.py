import pytest
from hypothesis import given
from hypothesis import strategies as st

from virtmod.arith import QQx, ZZ, Fpx
from virtmod.errors import (
    InvalidDescriptor,
    ParseError,
    RingMismatch,
    ShapeMismatch,
    UnitIdeal,
    UnsupportedRing,
)
from virtmod.modpid import (
    NoDimension,
    Presentation,
    StructureDescriptor,
    direct_sum,
    embeds,
    is_isomorphic,
    is_quasi_prime_ideal,
    krull_dimension,
    primary_decomposition,
    socle,
    structure,
    subisomorphic,
    torsion_free_split,
    uniform_dimension,
)
from virtmod.oracle import FiniteModule, embeds_bruteforce, quasi_prime_search


def D(r=0, *facs, ring=ZZ):
    return StructureDescriptor.from_cyclic(ring, facs, r)


def test_structure_examples():
    assert structure(Presentation.from_rows(ZZ, 2, [[2, 0]])) == D(1, 2)
    assert structure(Presentation.from_rows(ZZ, 1, [[4]])) == D(0, 4)
    assert structure(Presentation.from_rows(ZZ, 2, [[2, 4], [6, 8]])) == D(0, 2, 4)
    assert structure(Presentation.from_rows(ZZ, 3, [])) == D(3)
    assert structure(Presentation.from_rows(ZZ, 0, [])) == D()


def test_descriptor_validation():
    with pytest.raises(InvalidDescriptor):
        StructureDescriptor(ZZ, 0, (4, 2))
    with pytest.raises(InvalidDescriptor):
        StructureDescriptor(ZZ, 0, (1,))
    with pytest.raises(InvalidDescriptor):
        StructureDescriptor(ZZ, 0, (-2,))
    with pytest.raises(InvalidDescriptor):
        StructureDescriptor(ZZ, -1)
    with pytest.raises(ShapeMismatch):
        Presentation.from_rows(ZZ, 2, [[1, 2, 3]])
    with pytest.raises(ParseError):
        StructureDescriptor.from_json({"free_rank": -1})


def test_json_roundtrip():
    for s in (D(2, 4, 6), D(), D(0, [0, 1], [1, 0, 1], ring=Fpx(3)), D(1, ["1/2", 1], ring=QQx)):
        assert StructureDescriptor.from_json(s.to_json()) == s
    p = Presentation.from_rows(ZZ, 2, [[2, 4], [6, 8]])
    assert Presentation.from_json(p.to_json()) == p
    assert str(D(1, 2)) == "ZZ + ZZ/(2)"


def test_isomorphism_and_sums():
    assert is_isomorphic(D(0, 2, 4), D(0, 2, 4))
    assert not is_isomorphic(D(0, 8), D(0, 2, 4))
    assert is_isomorphic(D(0, 2, 6), structure(Presentation.from_rows(ZZ, 2, [[2, 0], [0, 6]])))
    assert direct_sum(D(0, 2), D(0, 4)) == D(0, 2, 4)
    assert direct_sum(D(0, 2), D(0, 3)) == D(0, 6)
    assert direct_sum(D(1), D(0, 2)) == D(1, 2)
    with pytest.raises(RingMismatch):
        direct_sum(D(0, 2), D(0, [0, 1], ring=Fpx(2)))


def test_split_socle_dimensions():
    assert torsion_free_split(D(2, 4)) == (D(0, 4), 2)
    assert torsion_free_split(D()) == (D(), 0)
    assert torsion_free_split(D(1, [1, 0, 1], ring=QQx)) == (D(0, [1, 0, 1], ring=QQx), 1)
    assert socle(D(0, 4)) == D(0, 2)
    assert socle(D(0, 2, 4)) == D(0, 2, 2)
    assert socle(D(3)).is_zero()
    assert uniform_dimension(D(2, 4)) == 3
    assert uniform_dimension(D(0, 6)) == 2
    assert uniform_dimension(D()) == 0
    assert krull_dimension(D(1)) == 1
    assert krull_dimension(D(0, 4)) == 0
    assert krull_dimension(D()) is NoDimension


def test_primary_decomposition():
    pd = primary_decomposition(D(0, 2, 4))
    assert pd.components == {ZZ(2): (1, 2)} and pd.free_rank == 0
    pd = primary_decomposition(D(0, 6, 12))
    assert pd.components == {ZZ(2): (1, 2), ZZ(3): (1, 1)}
    assert pd.reassemble() == D(0, 6, 12)
    assert primary_decomposition(D(2)).components == {}
    with pytest.raises(UnsupportedRing):
        primary_decomposition(D(0, [1, 0, 1], ring=QQx))


def test_embeds_examples():
    assert not embeds(D(0, 2, 2), D(0, 4))
    assert embeds(D(0, 4), D(0, 8))
    assert not embeds(D(1, 2), D(0, 2))
    assert subisomorphic(D(1, 6), D(1, 6))
    assert not subisomorphic(D(0, 4), D(0, 2, 2))
    assert not subisomorphic(D(2), D(3))
    # torsion never embeds in a free module
    assert not embeds(D(0, 2), D(3))
    assert embeds(D(0, 2), D(1, 2))


def test_quasi_prime_examples():
    assert is_quasi_prime_ideal(ZZ(3))
    assert not is_quasi_prime_ideal(ZZ(4))
    assert is_quasi_prime_ideal(ZZ(0))
    with pytest.raises(UnitIdeal):
        is_quasi_prime_ideal(ZZ(-1))
    with pytest.raises(UnsupportedRing):
        is_quasi_prime_ideal(QQx([0, 1]))
    for d in (2, 6, 9, 12, 30, 49):
        assert is_quasi_prime_ideal(ZZ(d)) == quasi_prime_search(ZZ(d))


descriptors = st.builds(
    lambda r, facs: D(r, *facs),
    st.integers(0, 3),
    st.lists(st.integers(2, 60), max_size=4),
)


@given(descriptors, descriptors)
def test_direct_sum_properties(a, b):
    s = direct_sum(a, b)
    assert s == direct_sum(b, a)
    assert s.free_rank == a.free_rank + b.free_rank
    assert uniform_dimension(s) == uniform_dimension(a) + uniform_dimension(b)
    assert embeds(a, s) and embeds(b, s)
    assert primary_decomposition(s).reassemble() == s


@given(descriptors)
def test_presentation_roundtrip(s):
    assert structure(s.to_presentation()) == s
    assert embeds(socle(s), s)
    assert subisomorphic(s, s)


small_groups = st.lists(st.sampled_from([2, 3, 4, 8, 9]), max_size=3).filter(
    lambda t: _order(t) <= 64)


def _order(t):
    n = 1
    for x in t:
        n *= x
    return n


@given(small_groups, small_groups)
def test_embeds_against_oracle(a, b):
    G, H = FiniteModule(a), FiniteModule(b)
    assert embeds(G.descriptor, H.descriptor) == embeds_bruteforce(G, H)
