import pytest

from virtmod.arith import QQx, ZZ, Fpx
from virtmod.errors import IndexOutOfRange, ParseError, ShapeMismatch
from virtmod.modpid import StructureDescriptor, is_isomorphic, uniform_dimension
from virtmod.matring import (
    MatModPresentation,
    MatrixRingSpec,
    ProductRingSpec,
    column_module,
    componentwise,
    concatenated,
    decompose_regular,
    is_virtually_simple_matmod,
    regular_module,
    ring_analyze,
    scalar_block_presentation,
    transport_to_base,
)
from virtmod.modpid import structure
from virtmod.virtual import is_virtually_semisimple, is_virtually_simple

F5 = Fpx(5)
M2Z = MatrixRingSpec(2, ZZ)


def D(r=0, *facs, ring=ZZ):
    return StructureDescriptor.from_cyclic(ring, facs, r)


def block(*diag):
    n = len(diag)
    return [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]


def test_transport_examples():
    p = transport_to_base(MatModPresentation(M2Z, 1, ((block(2, 2),),)))
    assert p.generators == 2
    assert p.relations.raw_rows() == [[2, 0], [0, 2]]
    assert structure(p) == D(0, 2, 2)
    assert structure(transport_to_base(MatModPresentation(M2Z, 1, ()))) == D(2)
    assert structure(transport_to_base(MatModPresentation(M2Z, 1, ((block(2, 3),),)))) == D(0, 6)


def test_transport_mixes_blocks():
    # one relation row with two generators: [A | B] row by row
    mp = MatModPresentation(M2Z, 2, (([[1, 2], [3, 4]], [[5, 6], [7, 8]]),))
    assert transport_to_base(mp).relations.raw_rows() == [[1, 2, 5, 6], [3, 4, 7, 8]]


def test_column_modules():
    assert column_module(MatrixRingSpec(3, ZZ), 2) == D(1)
    assert column_module(MatrixRingSpec(1, ZZ), 1) == D(1)
    assert column_module(MatrixRingSpec(2, F5), 1) == D(1, ring=F5)
    with pytest.raises(IndexOutOfRange):
        column_module(M2Z, 3)
    with pytest.raises(IndexOutOfRange):
        column_module(M2Z, 0)


def test_virtually_simple_matmod():
    assert is_virtually_simple_matmod(MatModPresentation(M2Z, 1, ((block(1, 0),),)))
    assert not is_virtually_simple_matmod(MatModPresentation(M2Z, 1, ((block(4, 4),),)))
    assert not is_virtually_simple_matmod(MatModPresentation(M2Z, 1, ((block(5, 5),),)))


def test_decompose_regular():
    dec, cert = decompose_regular(MatrixRingSpec(3, ZZ))
    assert dec.summands == (D(1),) * 3
    assert cert.check(dec.summands, dec.summands)
    dec, _ = decompose_regular(MatrixRingSpec(1, QQx))
    assert dec.summands == (D(1, ring=QQx),)
    assert uniform_dimension(regular_module(MatrixRingSpec(4, F5))) == 4


def test_scalar_blocks_roundtrip():
    s = D(1, 2, 6)
    mp = scalar_block_presentation(M2Z, s)
    t = structure(transport_to_base(mp))
    assert is_isomorphic(t, StructureDescriptor.from_cyclic(ZZ, [2, 2, 6, 6], 2))
    assert MatModPresentation.from_json(mp.to_json()) == mp


def test_ring_report():
    rep = ring_analyze(ProductRingSpec((M2Z, MatrixRingSpec(1, ZZ))))
    assert rep.is_left_completely_vss is True
    assert rep.is_semisimple is False
    assert rep.v_domain_status == ["NotVDomain", "NotVDomain"]
    assert [c.spec.n for c in rep.components] == [1, 2]
    assert len(rep.regular_decomposition) == 3
    for c in rep.components:
        assert not is_virtually_semisimple(c.v_domain_witness)
    assert ring_analyze(ProductRingSpec((MatrixRingSpec(1, F5),))).is_left_completely_vss
    once = ProductRingSpec((M2Z,))
    twice = ProductRingSpec((M2Z, M2Z))
    assert once != twice
    assert ProductRingSpec((MatrixRingSpec(2, F5), M2Z)) == ProductRingSpec((M2Z, MatrixRingSpec(2, F5)))
    js = rep.to_json()
    assert js["v_domain_status"] == ["NotVDomain", "NotVDomain"]
    assert "Thm 2.7(3)" in js["citations"]


def test_product_modules():
    mods = [MatModPresentation(MatrixRingSpec(1, ZZ), 1, ()),
            MatModPresentation(M2Z, 1, ((block(1, 0),),))]
    assert componentwise(is_virtually_simple, mods)
    assert concatenated(mods) == D(2)
    mods.append(MatModPresentation(M2Z, 1, ((block(4, 1),),)))
    assert not componentwise(is_virtually_semisimple, mods)


def test_parse_errors():
    with pytest.raises(ShapeMismatch):
        MatrixRingSpec(0, ZZ)
    with pytest.raises(ShapeMismatch):
        MatModPresentation(M2Z, 1, (([[1, 2, 3]],),))
    with pytest.raises(ParseError):
        MatrixRingSpec.from_json({"n": "2", "base": "int"})
    with pytest.raises(ParseError):
        ProductRingSpec.from_json({"parts": []})
    with pytest.raises(ParseError):
        MatModPresentation.from_json({"spec": {"n": 2, "base": "int"}, "generators": 1,
                                      "relations": [[[[1]]]]})
