"""Acceptance suite: one test per criterion, each with its time limit.

The terminal summary prints a PASS/FAIL line per criterion (see conftest).
"""

import random
import time

import pytest

from quotshrink import catalog as C
from quotshrink.certificate import emit_certificate, verify_certificate
from quotshrink.errors import BoundViolation, LemmaViolated, PreconditionError
from quotshrink.group import PermGroup, coset_action, normal_closure
from quotshrink.mindeg import min_degree, min_faithful_rep
from quotshrink.oracles import brute_normalizer, exhaustive_min_degree, group_elements
from quotshrink.perm import Permutation
from quotshrink.quotient import bound_ok, check_minprimdeg, check_minwpquot, embed_quotient, embed_quotient_radical
from quotshrink.socle import check_ntproj, decompose, simple_factors
from quotshrink.wreath import prodact_v_orbit, wreath_imprimitive, wreath_product_action

from pairs import bound_pairs


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _kernel_equals(rep, N):
    K = rep.rho.kernel
    return K.order == N.order and all(x in K for x in N.generators) and all(x in N for x in K.generators)


def _socle_of_wreath(U, k):
    return wreath_imprimitive(U, PermGroup.trivial(k)).group


def test_criterion_1_sym5_alt5():
    with Timer() as t:
        rep = embed_quotient(C.symmetric(5), C.alternating(5))
        verify_certificate(emit_certificate(rep))
    assert rep.m == 2 and 5 * rep.m == 2 * rep.n
    assert rep.kernel_certificate.equals_N
    assert t.elapsed < 1.0


def test_criterion_2_pgammal29():
    with Timer() as t:
        G, N = C.pgammal2(9), C.psl2(9)
        assert (G.order, N.order, G.order // N.order) == (1440, 360, 4)
        assert all(g in G for g in N.generators)
        rep = embed_quotient(G, N)
        Q = coset_action(G, N).image
        PQ = min_faithful_rep(Q).degree
    assert rep.m == 4 and 5 * rep.m == 2 * G.degree
    # C2 x C2: order 4, abelian, exponent 2, P = 4 (C4 would have P = 4 too, so check exponent)
    assert Q.order == 4 and Q.is_abelian() and all(x.order() <= 2 for x in Q.elements())
    assert PQ == 4 == exhaustive_min_degree(Q)
    assert rep.rho.image.order == 4
    assert t.elapsed < 10.0


@pytest.mark.parametrize("k, expected", [(2, 4), (3, 6)])
def test_criterion_3_wreath_tightness(k, expected):
    with Timer() as t:
        G = wreath_imprimitive(C.symmetric(5), C.symmetric(k)).group
        N = _socle_of_wreath(C.alternating(5), k)
        N = PermGroup(G.degree, N.generators)
        rep = embed_quotient(G, N)
        Q = coset_action(G, N).image
    assert _kernel_equals(rep, N)
    assert rep.m == expected and 5 * rep.m == 2 * G.degree
    # the quotient is C2 wr Sym(k); its P by brute force
    assert Q.order == 2**k * (2 if k == 2 else 6)
    assert exhaustive_min_degree(Q) == expected
    assert t.elapsed < 30.0


def test_criterion_4_bound_suite():
    with Timer() as t:
        pairs = bound_pairs()
        violations = []
        for name, G, N, radical in pairs:
            assert G.degree <= 30
            try:
                rep = (embed_quotient_radical if radical else embed_quotient)(G, N)
            except BoundViolation:
                violations.append(name)
                continue
            assert _kernel_equals(rep, N), name
            assert bound_ok(rep.m, G.degree, G.is_transitive()), name
    assert len(pairs) >= 20
    assert not violations
    assert t.elapsed < 300.0


def _diagonals():
    A5, S5 = C.alternating(5), C.symmetric(5)
    inner = [c for c in S5.elements() if c in A5]
    outer = [c for c in S5.elements() if c not in A5]
    return A5, inner, outer


def test_criterion_5_diagonal_self_normalizing():
    with Timer() as t:
        A5, inner, outer = _diagonals()
        assert len(inner) == 60 and len(outer) == 60
        N = C.direct_product(A5, A5)
        N_elems = list(group_elements(N))
        assert len(N_elems) == 3600
        seen = set()
        for c in inner + outer:
            H, _ = C.diagonal_subgroup(A5, c)
            Hset = group_elements(H)
            assert len(Hset) == 60
            seen.add(Hset)
            assert brute_normalizer(Hset, N_elems) == Hset
        # distinct automorphisms give distinct diagonals
        assert len(seen) == 120
    assert t.elapsed < 120.0


def _ntproj_configs():
    A5, L7, S3 = C.alternating(5), C.psl2(7), C.symmetric(3)
    triv = PermGroup.trivial
    W = wreath_imprimitive(A5, C.symmetric(2)).group
    base = PermGroup(10, _socle_of_wreath(A5, 2).generators)
    out = []
    # (G, N, K) with N, K normal in G and K n N = 1
    for k in (1, 2, 3):
        for Kgrp in (triv(1), C.cyclic(2), S3, A5):
            N0 = C.direct_product(*([A5] * k))
            G = C.direct_product(N0, Kgrp)
            N = C.direct_product(N0, triv(Kgrp.degree))
            K = C.direct_product(triv(N0.degree), Kgrp)
            out.append((G, N, K))
    G = C.direct_product(W, C.cyclic(2))
    out.append((G, C.direct_product(base, triv(2)), C.direct_product(triv(10), C.cyclic(2))))
    G = C.direct_product(L7, A5)
    out.append((G, C.direct_product(L7, triv(5)), C.direct_product(triv(8), A5)))
    out.append((G, C.direct_product(triv(8), A5), C.direct_product(L7, triv(5))))
    return out


def test_criterion_6_ntproj():
    rng = random.Random(6)
    configs = _ntproj_configs()
    triples = 0
    violations = 0
    nontrivial = 0
    with Timer() as t:
        i = 0
        while triples < 50:
            G, N, K = configs[i % len(configs)]
            i += 1
            KN = PermGroup(G.degree, list(K.generators) + list(N.generators))
            seeds = [KN.random_element(rng) for _ in range(rng.randint(1, 2))]
            L = normal_closure(G, seeds)
            try:
                hit = check_ntproj(K, N, L, G)
            except LemmaViolated:
                violations += 1
                continue
            finally:
                triples += 1
            for idx in hit:
                # the factor is inside L
                S = simple_factors(N)[idx - 1]
                assert all(s in L for s in S.generators)
            nontrivial += bool(hit)
    assert violations == 0
    assert nontrivial > 25
    assert t.elapsed < 120.0


@pytest.mark.parametrize("U, V", [
    (C.symmetric(2), C.symmetric(3)),
    (C.alternating(5), C.symmetric(2)),
    (C.symmetric(3), C.cyclic(3)),
], ids=["Sym2-Sym3", "Alt5-Sym2", "Sym3-C3"])
def test_criterion_7_v_orbit(U, V):
    W = wreath_product_action(U, V)
    pts = prodact_v_orbit(W, 1, 2)
    assert len(pts) == V.degree
    relabel = {p: gamma for gamma, p in enumerate(pts, 1)}
    for v in V.generators:
        t = W.top_element(v)
        image = {t(p) for p in pts}
        assert image == set(pts)
        induced = Permutation([relabel[t(p)] for p in pts])
        assert induced == v
    # every element of V, not only generators
    for v in V.elements():
        t = W.top_element(v)
        assert Permutation([relabel[t(p)] for p in pts]) == v


def test_criterion_8_degree_inequalities():
    assert min_degree(C.alternating(5)) == 5 == exhaustive_min_degree(C.alternating(5))
    assert min_degree(C.symmetric(5)) == 5 == exhaustive_min_degree(C.symmetric(5))
    prim = wprod = 0
    for name, G, N, radical in bound_pairs():
        if radical:
            continue
        try:
            check_minwpquot(G, N)
            wprod += 1
        except PreconditionError:
            pass
        try:
            check_minprimdeg(G, N)
            prim += 1
        except PreconditionError:
            pass
    # almost simple T with socle S: P(T)^2 < |S|, checked numerically only
    seen = set()
    for name, G, N, radical in bound_pairs():
        if radical:
            continue
        dec = decompose(G, N)
        key = (dec.T_rep.order, dec.factors[0].order)
        if key in seen:
            continue
        seen.add(key)
        assert min_degree(dec.T_rep) ** 2 < dec.factors[0].order, name
    assert len(seen) >= 6
    # product action case with equality n = P(T)^k
    P = wreath_product_action(C.alternating(5), C.symmetric(2)).group
    r = check_minprimdeg(P, normal_closure(P, P.generators[:1]))
    assert r.values["n"] == r.values["P(T)^k"] == 25
    assert prim >= 5 and wprod >= 10


def _small_catalog():
    cy, dp = C.cyclic, C.direct_product
    return {
        "1": PermGroup.trivial(1),
        "C2": cy(2),
        "C3": cy(3),
        "C4": cy(4),
        "C2xC2": C.klein_four(),
        "C5": cy(5),
        "C6": cy(6),
        "Sym(3)": C.symmetric(3),
        "C7": cy(7),
        "D8": C.dihedral(4),
        "Q8": C.quaternion(),
        "C4xC2": dp(cy(4), cy(2)),
        "C2^3": dp(cy(2), cy(2), cy(2)),
        "C3xC3": dp(cy(3), cy(3)),
        "D10": C.dihedral(5),
        "Alt(4)": C.alternating(4),
        "D12": C.dihedral(6),
        "C2xC6": dp(cy(2), cy(6)),
        "Sym(4)": C.symmetric(4),
        "Sym(3)xC2xC2": dp(C.symmetric(3), cy(2), cy(2)),
        "Alt(4)xC2": dp(C.alternating(4), cy(2)),
        "C2^4": dp(*[cy(2)] * 4),
        "D8xC2": dp(C.dihedral(4), cy(2)),
        "Q8xC2": dp(C.quaternion(), cy(2)),
        "Sym(3)xSym(3)": dp(C.symmetric(3), C.symmetric(3)),
        "Sym(4)xC2": dp(C.symmetric(4), cy(2)),
        "Q8xC3": dp(C.quaternion(), cy(3)),
    }


def test_criterion_9_mindeg_oracle():
    cat = _small_catalog()
    for name, G in cat.items():
        assert G.order <= 48
        assert min_degree(G) == exhaustive_min_degree(G), name
    assert exhaustive_min_degree(cat["C2"]) == 2
    assert exhaustive_min_degree(cat["C2xC2"]) == 4
    assert exhaustive_min_degree(cat["D8"]) == 4
    assert exhaustive_min_degree(cat["C6"]) == 5


def _formula(phi, f, v):
    """phi^(f, v)(gamma) = phi(gamma^(v^-1))^(f(gamma^(v^-1)))."""
    vinv = ~v
    return tuple(f[vinv(g) - 1](phi[vinv(g) - 1]) for g in range(1, len(phi) + 1))


def test_criterion_10_engine_sanity():
    W = wreath_imprimitive(C.symmetric(5), C.symmetric(2))
    assert W.group.order == 28800 == 120**2 * 2
    P = wreath_product_action(C.alternating(5), C.symmetric(2))
    assert P.group.degree == 25
    assert P.group.order == 7200 == 60**2 * 2
    rng = random.Random(10)
    lab = P.labeling
    for _ in range(1000):
        U, V = P.base, P.top
        f = [U.random_element(rng) for _ in range(V.degree)]
        v = V.random_element(rng)
        phi = tuple(rng.randint(1, U.degree) for _ in range(V.degree))
        g = P.element(f, v)
        assert lab.decode(g(lab.point(phi))) == _formula(phi, f, v)
