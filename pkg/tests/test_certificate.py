import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quotshrink import catalog as C
from quotshrink.certificate import ProblemInput, emit_certificate, parse_input, verify_certificate
from quotshrink.errors import BoundMismatch, CertificateError, KernelMismatch, MalformedCycles, PreconditionError, TraceMismatch
from quotshrink.group import normal_closure
from quotshrink.perm import format_cycles, parse_cycles
from quotshrink.quotient import embed_quotient, embed_quotient_radical
from quotshrink.wreath import wreath_imprimitive

from conftest import perms


def _cert(G, N, radical=False):
    rep = (embed_quotient_radical if radical else embed_quotient)(G, N)
    return emit_certificate(rep)


@pytest.fixture(scope="module")
def certs():
    W = wreath_imprimitive(C.symmetric(5), C.symmetric(2)).group
    return [
        _cert(C.symmetric(5), C.alternating(5)),
        _cert(C.pgammal2(9), C.psl2(9)),
        _cert(W, normal_closure(W, [parse_cycles("(1 2 3)", 10)])),
        _cert(C.direct_product(C.symmetric(5), C.symmetric(5)), C.direct_product(C.alternating(5), C.alternating(5)), True),
    ]


def test_round_trip(certs):
    for doc in certs:
        again = json.loads(json.dumps(doc))
        v = verify_certificate(again)
        assert v.m == doc["m"]


def test_tampered_image(certs):
    doc = json.loads(json.dumps(certs[0]))
    doc["images"][0] = "(1 2)"
    with pytest.raises(KernelMismatch):
        verify_certificate(doc)


def test_tampered_m(certs):
    for m in (1, 3, 7):
        doc = json.loads(json.dumps(certs[1]))
        doc["m"] = m
        with pytest.raises(BoundMismatch):
            verify_certificate(doc)


def test_tampered_trace(certs):
    doc = json.loads(json.dumps(certs[3]))
    stage = next(s for s in doc["trace"] if "images" in s)
    stage["degree_out"] += 1
    with pytest.raises(TraceMismatch):
        verify_certificate(doc)


def test_every_single_image_mutation_rejected(certs):
    """Replace each image by every other element of the image group's degree sample."""
    for doc in certs:
        m = doc["m"]
        candidates = ["()"] + [format_cycles(parse_cycles(f"(1 {j})", m)) for j in range(2, m + 1)]
        for i, orig in enumerate(doc["images"]):
            for c in candidates:
                if c == orig:
                    continue
                bad = json.loads(json.dumps(doc))
                bad["images"][i] = c
                with pytest.raises(CertificateError):
                    verify_certificate(bad)


def test_garbage_rejected():
    with pytest.raises(CertificateError):
        verify_certificate({"schema": 2})
    with pytest.raises(CertificateError):
        verify_certificate({"schema": 1, "input": {}})


def test_problem_input_formats():
    p = ProblemInput(5, ["(5 1 2 3 4)", "(2 1)"], ["(1 2 3)"])
    assert p.generators == ["(1 2 3 4 5)", "(1 2)"]
    assert ProblemInput.from_dict(json.loads(json.dumps(p.to_dict()))) == p
    assert ProblemInput.from_text(p.to_text()) == p
    assert parse_input("# comment\n3\n(1 2 3)\n--\n", "txt").degree == 3
    with pytest.raises(PreconditionError):
        parse_input("{not json")
    with pytest.raises(PreconditionError):
        parse_input('{"schema": 1, "generators": []}')
    with pytest.raises(MalformedCycles):
        parse_input("3\n(1 2)\n--\n(1 2)\n--\n(2 3)", "txt")


@settings(max_examples=40, deadline=None)
@given(st.lists(perms(6), min_size=1, max_size=3), st.lists(perms(6), max_size=2))
def test_input_json_round_trip(gens, normal):
    p = ProblemInput(6, [format_cycles(g) for g in gens], [format_cycles(g) for g in normal])
    assert ProblemInput.from_dict(json.loads(json.dumps(p.to_dict()))) == p
    assert [parse_cycles(s, 6) for s in p.generators] == gens
