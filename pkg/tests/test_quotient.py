import pytest

from quotshrink import catalog as C
from quotshrink.errors import AbelianFactor, NotMinimalNormal, NotNormal, PreconditionFailed
from quotshrink.group import PermGroup, normal_closure
from quotshrink.mindeg import min_degree
from quotshrink.perm import parse_cycles
from quotshrink.quotient import (
    bound_ok,
    check_minprimdeg,
    check_minwpquot,
    embed_quotient,
    embed_quotient_radical,
    replay_trace,
)
from quotshrink.wreath import wreath_imprimitive, wreath_product_action


def _kernel_is(rep, N):
    K = rep.rho.kernel
    return K.order == N.order and all(x in K for x in N.generators) and all(x in N for x in K.generators)


def _check(rep, G, N):
    assert _kernel_is(rep, N)
    assert bound_ok(rep.m, G.degree, G.is_transitive())
    assert replay_trace(G, rep.stages) == list(rep.rho.gen_images)
    stages = rep.stages
    assert stages[0].degree_in == G.degree and stages[-1].degree_out == rep.m
    for a, b in zip(stages, stages[1:]):
        assert a.degree_out == b.degree_in


def test_sym5():
    G, N = C.symmetric(5), C.alternating(5)
    rep = embed_quotient(G, N)
    assert rep.m == 2
    assert rep.rho.image.order == 2
    assert rep.kernel_certificate.equals_N
    assert rep.bound_certificate.transitive
    _check(rep, G, N)


def test_trivial_quotient():
    A5 = C.alternating(5)
    rep = embed_quotient(A5, A5)
    assert rep.m == 1
    assert rep.rho.image.is_trivial()


def test_pgammal29():
    G, N = C.pgammal2(9), C.psl2(9)
    rep = embed_quotient(G, N)
    assert rep.m == 4
    Q = rep.rho.image
    assert Q.order == 4 and Q.is_abelian() and all(g.order() <= 2 for g in Q.generators)
    _check(rep, G, N)


def test_wreath_blocks_case():
    G = wreath_imprimitive(C.symmetric(5), C.symmetric(2)).group
    N = normal_closure(G, [parse_cycles("(1 2 3)", 10)])
    rep = embed_quotient(G, N)
    assert rep.m == 4
    assert rep.rho.image.order == 8
    assert [s.branch for s in rep.trace if s.images is None][-1] == "b"
    _check(rep, G, N)


def test_intransitive_case():
    G = C.direct_product(C.symmetric(5), C.symmetric(5))
    N = C.direct_product(C.alternating(5), PermGroup.trivial(5))
    rep = embed_quotient(G, N)
    assert rep.m < 10
    assert not rep.bound_certificate.transitive
    _check(rep, G, N)


def test_radical_two_iterations():
    G = C.direct_product(C.symmetric(5), C.symmetric(5))
    N = C.direct_product(C.alternating(5), C.alternating(5))
    rep = embed_quotient_radical(G, N)
    assert rep.m <= 4
    assert rep.rho.image.order == 4
    assert len(rep.stages) == 2
    _check(rep, G, N)
    AA = C.direct_product(C.alternating(5), C.alternating(5))
    assert embed_quotient_radical(AA, AA).m == 1


def test_radical_equals_single_step_for_minimal_N():
    G, N = C.symmetric(5), C.alternating(5)
    assert embed_quotient_radical(G, N).m == embed_quotient(G, N).m


def test_two_step_composition():
    # first step, then the radical version on the image with a further normal subgroup
    G = C.direct_product(C.symmetric(5), C.psl2(7))
    N1 = C.direct_product(C.alternating(5), PermGroup.trivial(8))
    N2 = C.direct_product(PermGroup.trivial(5), C.psl2(7))
    first = embed_quotient(G, N1)
    H = first.rho.image
    rest = embed_quotient_radical(H, first.rho.image_of_group(N2))
    comp = first.rho.compose(rest.rho)
    pre = normal_closure(G, list(N1.generators) + list(N2.generators))
    assert comp.kernel.order == pre.order


def test_wreath_route_when_mindeg_capped(monkeypatch):
    W = wreath_product_action(C.symmetric(5), C.symmetric(2))
    G = W.group
    x = W.base_element([parse_cycles("(1 2 3)", 5), C.symmetric(5).identity()])
    N = normal_closure(G, [x])
    assert N.order == 3600
    monkeypatch.setenv("QUOTSHRINK_ORDER_CAP", "1")
    rep = embed_quotient(G, N)
    step = [s for s in rep.trace if s.branch == "c"][0]
    assert step.detail["route"] == "wreath"
    assert rep.m == 4
    _check(rep, G, N)


@pytest.mark.parametrize("make, exc", [
    (lambda: (C.symmetric(5), PermGroup(5, ["(1 2)"])), NotNormal),
    (lambda: (C.symmetric(4), normal_closure(C.symmetric(4), [parse_cycles("(1 2)(3 4)", 4)])), AbelianFactor),
    (lambda: (C.direct_product(C.symmetric(5), C.symmetric(5)), C.direct_product(C.alternating(5), C.alternating(5))), NotMinimalNormal),
    (lambda: (C.symmetric(5), PermGroup.trivial(5)), NotMinimalNormal),
])
def test_embed_errors(make, exc):
    G, N = make()
    with pytest.raises(exc):
        embed_quotient(G, N)


def test_radical_rejects_abelian_pieces():
    S4 = C.symmetric(4)
    with pytest.raises(AbelianFactor):
        embed_quotient_radical(S4, C.alternating(4))
    with pytest.raises(PreconditionFailed):
        embed_quotient_radical(S4, PermGroup.trivial(4))


def test_degree_lemma_checks():
    P = wreath_product_action(C.alternating(5), C.symmetric(2)).group
    N = normal_closure(P, P.generators[:1])
    r = check_minprimdeg(P, N)
    assert r.values["n"] == 25 and r.values["P(T)^k"] == 25
    r = check_minprimdeg(C.symmetric(5), C.alternating(5))
    assert r.values["P(T)"] == 5
    r = check_minwpquot(C.symmetric(5), C.alternating(5))
    assert (r.values["P(G/N)"], r.values["k|T/S|"]) == (2, 2)
    r = check_minwpquot(C.alternating(5), C.alternating(5))
    assert r.values["P(G/N)"] == 1
    W = wreath_imprimitive(C.symmetric(5), C.symmetric(2)).group
    with pytest.raises(PreconditionFailed):
        check_minprimdeg(W, normal_closure(W, [parse_cycles("(1 2 3)", 10)]))


def test_mindeg_is_the_base_case_optimum():
    G, N = C.pgammal2(8), C.psl2(8)
    rep = embed_quotient(G, N)
    from quotshrink.group import coset_action

    assert rep.m == min_degree(coset_action(G, N).image) == 3
