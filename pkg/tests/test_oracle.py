import pytest

from virtmod.arith import ZZ, Fpx
from virtmod.errors import BoundExceeded, InvalidDescriptor, UnknownPredicate
from virtmod.modpid import StructureDescriptor
from virtmod.oracle import (
    FiniteModule,
    PREDICATE_NAMES,
    closed_subgroups,
    embeds_bruteforce,
    enumerate_submodules,
    essential_subgroups,
    extending_witness,
    groups_of_order,
    is_extending_bruteforce,
    is_quasi_injective_bruteforce,
    is_summand_complement,
    is_virtually_simple_bruteforce,
    is_vss_bruteforce,
    oracle_bound,
    quasi_injective_by_enumeration,
    quasi_prime_search,
    socle_bruteforce,
    summand_types,
    validate,
)


def subgroup_count(t):
    return len(enumerate_submodules(FiniteModule(t)))


def divisor_count(n):
    return sum(1 for k in range(1, n + 1) if n % k == 0)


def test_subgroup_counts_closed_forms():
    assert subgroup_count((4,)) == 3
    assert subgroup_count((2, 2)) == 5
    assert subgroup_count((6,)) == 4
    for p in (2, 3, 5, 7):
        assert subgroup_count((p, p)) == p + 3
    for n in range(2, 61):
        assert subgroup_count((n,)) == divisor_count(n)
    # Z/2^3 has 16 subgroups; Z/4 + Z/4 has 15
    assert subgroup_count((2, 2, 2)) == 16
    assert subgroup_count((4, 4)) == 15


def types(G, method="auto"):
    return {tuple(f.value for f in s.invariant_factors) for s in summand_types(G, method)}


def test_summand_types_examples():
    assert types(FiniteModule((4,))) == {(), (4,)}
    assert types(FiniteModule((2, 4))) == {(), (2,), (4,), (2, 4)}
    assert types(FiniteModule((2, 2))) == {(), (2,), (2, 2)}
    for t in ((2, 4), (2, 2, 4), (3, 9)):
        G = FiniteModule(t)
        assert types(G, "complement") == types(G, "purity")


def test_brute_force_examples():
    assert not is_vss_bruteforce(FiniteModule((4,)))
    assert not is_vss_bruteforce(FiniteModule((2, 4)))
    assert is_vss_bruteforce(FiniteModule((6,)))
    assert is_virtually_simple_bruteforce(FiniteModule((5,)))
    assert not is_virtually_simple_bruteforce(FiniteModule((4,)))
    assert not is_virtually_simple_bruteforce(FiniteModule((2, 2)))
    assert not embeds_bruteforce(FiniteModule((2, 2)), FiniteModule((4,)))
    assert embeds_bruteforce(FiniteModule((4,)), FiniteModule((8,)))
    assert embeds_bruteforce(FiniteModule((2,)), FiniteModule((2, 4)))
    assert is_quasi_injective_bruteforce(FiniteModule((2, 2)))
    assert not is_quasi_injective_bruteforce(FiniteModule((2, 4)))
    assert is_quasi_injective_bruteforce(FiniteModule((8,)))


def test_quasi_injective_count_matches_enumeration():
    # the literal version lists End(G); keep to groups where that is small
    for n in range(1, 28):
        for t in groups_of_order(n):
            if len(t) > 3 or (len(t) == 3 and n > 24):
                continue
            G = FiniteModule(t)
            assert is_quasi_injective_bruteforce(G) == quasi_injective_by_enumeration(G), t


def test_extending_examples():
    assert not is_extending_bruteforce(FiniteModule((2, 8)))
    w = extending_witness(FiniteModule((2, 8)))
    assert w is not None and w.order == 4
    assert not is_summand_complement(FiniteModule((2, 8)), w.mask)
    # Z/2 + Z/4: every closed subgroup is a summand (pinned from the scan)
    assert is_extending_bruteforce(FiniteModule((2, 4)))
    assert is_extending_bruteforce(FiniteModule((2, 2)))
    G = FiniteModule((2, 4))
    for A in closed_subgroups(G):
        assert is_summand_complement(G, A)


def test_socle_and_essentials():
    assert socle_bruteforce(FiniteModule((2, 4))) == (2, 2)
    assert socle_bruteforce(FiniteModule((4, 3))) == (6,)
    G = FiniteModule((8,))
    assert [s.order for s in essential_subgroups(G)] == [2, 4, 8]


def test_bounds_and_errors(monkeypatch):
    with pytest.raises(BoundExceeded):
        FiniteModule((16, 17), bound=256)
    monkeypatch.setenv("VIRTMOD_ORACLE_BOUND", "10")
    assert oracle_bound() == 10
    with pytest.raises(BoundExceeded):
        FiniteModule((12,))
    with pytest.raises(InvalidDescriptor):
        FiniteModule((1,))
    with pytest.raises(InvalidDescriptor):
        FiniteModule.from_descriptor(StructureDescriptor(ZZ, 1))
    with pytest.raises(UnknownPredicate):
        validate("nope", 4)


def test_groups_of_order():
    assert groups_of_order(8) == [(2, 2, 2), (2, 4), (8,)]
    assert groups_of_order(12) == [(2, 6), (12,)]
    assert len(groups_of_order(64)) == 11


def test_quasi_prime_search_examples():
    assert quasi_prime_search(ZZ(3))
    assert not quasi_prime_search(ZZ(4))
    assert quasi_prime_search(ZZ(0))
    F2 = Fpx(2)
    assert not quasi_prime_search(F2([1, 0, 1]))
    assert quasi_prime_search(F2([1, 1, 1]))


@pytest.mark.parametrize("name", PREDICATE_NAMES)
def test_validate_small(name):
    rep = validate(name, 32)
    assert rep.checked > 0
    assert rep.mismatches == []
    js = rep.to_json()
    assert set(js) == {"predicate", "bound", "checked", "mismatches"}


def test_validate_deterministic():
    assert validate("socle", 24).to_json() == validate("socle", 24).to_json()
