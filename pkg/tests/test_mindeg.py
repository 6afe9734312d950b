import pytest

from quotshrink import catalog as C
from quotshrink.errors import OrderCapExceeded
from quotshrink.group import GroupHom, PermGroup
from quotshrink.mindeg import SubgroupLattice, enumerate_subgroups, min_degree, min_faithful_rep, verify_faithful
from quotshrink.oracles import all_subgroups, conjugates, exhaustive_min_degree, group_elements


def _class_count_oracle(G):
    elems = group_elements(G)
    seen, classes = set(), 0
    for H in all_subgroups(elems):
        if H in seen:
            continue
        classes += 1
        seen |= conjugates(H, elems)
    return classes


# subgroup class counts and totals, frozen from oracles.all_subgroups
FROZEN_LATTICE = {
    "Sym(3)": (C.symmetric(3), 4, 6),
    "C2xC2": (C.klein_four(), 5, 5),
    "D8": (C.dihedral(4), 8, 10),
    "Q8": (C.quaternion(), 6, 6),
    "Sym(4)": (C.symmetric(4), 11, 30),
    "Alt(5)": (C.alternating(5), 9, 59),
    "Sym(5)": (C.symmetric(5), 19, 156),
}


@pytest.mark.parametrize("name", sorted(FROZEN_LATTICE))
def test_lattice_frozen(name):
    G, classes, total = FROZEN_LATTICE[name]
    lat = SubgroupLattice(G)
    assert len(lat.classes) == classes
    assert lat.total == total


@pytest.mark.parametrize("name", ["Sym(3)", "C2xC2", "D8", "Sym(4)"])
def test_lattice_against_oracle(name):
    G, classes, total = FROZEN_LATTICE[name]
    assert _class_count_oracle(G) == classes
    assert len(all_subgroups(group_elements(G))) == total


def test_enumerate_subgroups_examples():
    assert sorted(H.order for H in enumerate_subgroups(C.symmetric(3))) == [1, 2, 3, 6]
    assert [H.order for H in enumerate_subgroups(PermGroup.trivial(2))] == [1]
    assert sorted(H.order for H in enumerate_subgroups(C.klein_four())) == [1, 2, 2, 2, 4]


def test_order_cap(monkeypatch):
    with pytest.raises(OrderCapExceeded):
        enumerate_subgroups(C.symmetric(5), order_cap=100)
    monkeypatch.setenv("QUOTSHRINK_ORDER_CAP", "50")
    with pytest.raises(OrderCapExceeded):
        min_faithful_rep(C.alternating(5))
    monkeypatch.setenv("QUOTSHRINK_ORDER_CAP", "60")
    assert min_faithful_rep(C.alternating(5)).degree == 5


# P values frozen from oracles.exhaustive_min_degree
FROZEN_P = {
    "1": (PermGroup.trivial(1), 1),
    "C2": (C.cyclic(2), 2),
    "C2xC2": (C.klein_four(), 4),
    "D8": (C.dihedral(4), 4),
    "C6": (C.cyclic(6), 5),
    "Q8": (C.quaternion(), 8),
    "Sym(3)": (C.symmetric(3), 3),
    "Alt(5)": (C.alternating(5), 5),
    "Sym(5)": (C.symmetric(5), 5),
}


@pytest.mark.parametrize("name", sorted(FROZEN_P))
def test_min_degree_frozen(name):
    G, P = FROZEN_P[name]
    res = min_faithful_rep(G)
    assert res.degree == P
    assert res.witness.codomain_degree == P
    assert verify_faithful(res.witness)
    assert sum(G.order // H.order for H in res.subgroup_family) == P


def test_witness_invariants():
    G = C.direct_product(C.symmetric(3), C.cyclic(2), C.cyclic(2))
    res = min_faithful_rep(G)
    assert res.degree == exhaustive_min_degree(G) == 7
    assert res.witness.is_injective()


def test_verify_faithful():
    S4 = C.symmetric(4)
    assert verify_faithful(GroupHom(S4, 4, S4.generators))
    assert not verify_faithful(GroupHom(S4, 1, ["()"] * len(S4.generators)))


def test_feasibility_properties():
    groups = [C.cyclic(2), C.cyclic(3), C.symmetric(3), C.klein_four(), C.dihedral(4)]
    for G in groups:
        assert min_degree(G) <= G.order
    for A in groups[:3]:
        for B in groups[:3]:
            assert min_degree(C.direct_product(A, B)) <= min_degree(A) + min_degree(B)


def test_larger_groups():
    assert min_degree(C.pgl2(7)) == 8
    assert min_degree(C.symmetric(6)) == 6
