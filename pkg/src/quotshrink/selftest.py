"""Quick self-checks of the structural facts the construction relies on.

Each check returns (name, passed, detail); ``run_all`` runs them in order.
The full versions live in the test suite.
"""

from __future__ import annotations

from typing import Callable

from . import catalog
from .certificate import emit_certificate, verify_certificate
from .group import PermGroup, normal_closure
from .mindeg import min_degree
from .oracles import brute_normalizer, closure, exhaustive_min_degree, group_elements
from .perm import Permutation, parse_cycles
from .quotient import check_minprimdeg, check_minwpquot, embed_quotient
from .socle import check_ntproj
from .wreath import prodact_v_orbit, wreath_imprimitive, wreath_product_action

__all__ = ["CHECKS", "run_all"]


def _mindeg_oracle():
    groups = {
        "C2": catalog.cyclic(2),
        "V4": catalog.klein_four(),
        "D8": catalog.dihedral(4),
        "C6": catalog.cyclic(6),
        "Sym(3)": catalog.symmetric(3),
        "Q8": catalog.quaternion(),
    }
    bad = [k for k, G in groups.items() if min_degree(G) != exhaustive_min_degree(G)]
    return not bad, f"{len(groups)} groups, disagreements: {bad or 'none'}"


def _diagonals():
    A5 = catalog.alternating(5)
    outer = parse_cycles("(1 2)", 5)
    count = 0
    for c in (Permutation.identity(5), A5.generators[0], outer):
        H, N = catalog.diagonal_subgroup(A5, c)
        Hset = group_elements(H)
        if brute_normalizer(Hset, (x for x in N._raw_elements())) != Hset:
            return False, f"normalizer differs for c = {c}"
        count += 1
    return True, f"{count} diagonals self-normalizing in Alt(5)^2"


def _ntproj():
    A5 = catalog.alternating(5)
    N = catalog.direct_product(A5, A5, A5)
    K = PermGroup.trivial(15)
    g = N.generators
    L = normal_closure(N, [g[0] * g[2]])
    hit = check_ntproj(K, N, L)
    return hit == {1, 2}, f"nontrivially projected factors {sorted(hit)}"


def _v_orbits():
    cases = [
        (catalog.symmetric(2), catalog.symmetric(3)),
        (catalog.alternating(5), catalog.symmetric(2)),
        (catalog.symmetric(3), catalog.cyclic(3)),
    ]
    for U, V in cases:
        prodact_v_orbit(wreath_product_action(U, V), 1, 2)
    return True, f"{len(cases)} product-action wreath products"


def _degree_lemmas():
    S5, A5 = catalog.symmetric(5), catalog.alternating(5)
    r1 = check_minprimdeg(S5, A5)
    r2 = check_minwpquot(S5, A5)
    W = wreath_imprimitive(S5, catalog.symmetric(2)).group
    N = normal_closure(W, [parse_cycles("(1 2 3)", 10)])
    r3 = check_minwpquot(W, N)
    return r1.holds and r2.holds and r3.holds, f"P(T) = {r1.values['P(T)']}, P(G/N) = {r3.values['P(G/N)']}"


def _tight_example():
    rep = embed_quotient(catalog.symmetric(5), catalog.alternating(5))
    verify_certificate(emit_certificate(rep))
    return rep.m == 2, f"Sym(5)/Alt(5) embeds in Sym({rep.m})"


def _engine():
    W = wreath_imprimitive(catalog.symmetric(3), catalog.symmetric(2)).group
    brute = len(closure([g._p for g in W.generators], W.degree))
    return W.order == brute == 72, f"|Sym(3) wr Sym(2)| = {W.order}, by closure {brute}"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("engine order", _engine),
    ("mindeg oracle", _mindeg_oracle),
    ("diagonal normalizers", _diagonals),
    ("factor projections", _ntproj),
    ("product-action V-orbits", _v_orbits),
    ("degree inequalities", _degree_lemmas),
    ("tight example", _tight_example),
]


def run_all() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, do not abort the remaining checks
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
