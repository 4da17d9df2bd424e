import pytest
from hypothesis import given, settings

from overlap_chain import Certificate, Instance, build_pseudodigraph, decide, extract_certificate, verify_certificate
from overlap_chain.decision import BALANCED, ONE_EXCESS_PAIR

from support import EXAMPLE_2, EXAMPLE_3, FIGURE_2_PATH, instances


def cert_from_perm(u, perm):
    return Certificate(tuple(perm), tuple(u.edge(j - 1) for j in perm))


def test_example_2_paper_permutation():
    u = Instance(EXAMPLE_2, 2, 1)
    assert verify_certificate(u, cert_from_perm(u, (1, 5, 2, 4, 3)))


def test_example_2_identity_breaks_at_position_1():
    u = Instance(EXAMPLE_2, 2, 1)
    check = verify_certificate(u, cert_from_perm(u, (1, 2, 3, 4, 5)))
    assert not check
    assert check.reason == "overlap_break" and check.position == 1
    assert "'b' != 'a'" in check.detail


@pytest.mark.parametrize("perm, reason", [
    ((1, 2, 3, 4), "wrong_length"),
    ((1, 1, 2, 3, 4), "duplicate_index"),
    ((0, 1, 2, 3, 4), "index_out_of_range"),
    ((1, 5, 2, 4, 6), "index_out_of_range"),
])
def test_bijection_violations(perm, reason):
    u = Instance(EXAMPLE_2, 2, 1)
    check = verify_certificate(u, Certificate(perm, ()))
    assert not check and check.reason == reason


def test_path_multiplicity_mismatch():
    u = Instance(EXAMPLE_2, 2, 1)
    good = cert_from_perm(u, (1, 5, 2, 4, 3))
    bad = Certificate(good.permutation, good.path[:-1] + (("a", "b"),))
    check = verify_certificate(u, bad)
    assert not check and check.reason == "multiplicity_mismatch"


def test_path_out_of_step_with_permutation():
    u = Instance(("ab", "ba", "ab", "ba"), 2, 1)
    good = cert_from_perm(u, (1, 2, 3, 4))
    swapped = Certificate(good.permutation, (good.path[1], good.path[0]) + good.path[2:])
    check = verify_certificate(u, swapped)
    assert not check and check.reason == "path_mismatch"


def test_example_3_figure_2_path_is_valid():
    u = Instance(EXAMPLE_3, 2, 1)
    # lowest-index-first assignment of the figure's component strings
    remaining = list(enumerate(EXAMPLE_3, 1))
    perm = []
    for x in FIGURE_2_PATH:
        k = next(i for i, (_, y) in enumerate(remaining) if y == x)
        perm.append(remaining.pop(k)[0])
    assert verify_certificate(u, cert_from_perm(u, perm))


def test_example_3_default_certificate():
    u = Instance(EXAMPLE_3, 2, 1)
    c = extract_certificate(u)
    assert verify_certificate(u, c)
    # smallest-target walk from the surplus vertex a
    assert c.chain(u, ",") == "ab,ba,ad,dc,ca,ab,bf,fe,eb"
    assert c.permutation == (7, 9, 3, 5, 1, 8, 4, 6, 2)


def test_example_3_fidelity_certificate_is_figure_2():
    u = Instance(EXAMPLE_3, 2, 1)
    c = extract_certificate(u, fidelity=True)
    assert verify_certificate(u, c)
    assert tuple(c.chain(u, ",").split(",")) == FIGURE_2_PATH


def test_example_2_certificate():
    u = Instance(EXAMPLE_2, 2, 1)
    c = extract_certificate(u)
    assert verify_certificate(u, c)
    assert c.permutation == (1, 5, 2, 4, 3)


def test_no_certificate_when_disconnected():
    assert extract_certificate(Instance(("ab", "cd"), 2, 1)) is None


def test_certificate_json():
    u = Instance(EXAMPLE_2, 2, 1)
    c = extract_certificate(u)
    data = c.to_json()
    assert data["permutation"] == [1, 5, 2, 4, 3]
    assert data["path"][0] == ["a", "b"]
    assert Certificate.from_json(data, u) == c
    assert Certificate.from_json({"permutation": data["permutation"]}, u) == c


def test_token_mode_certificate_round_trip():
    u = Instance((("x", "yy", "z"), ("z", "x", "yy"), ("yy", "z", "x")), 3, 2, "tokens")
    c = extract_certificate(u)
    assert verify_certificate(u, c)
    assert Certificate.from_json(c.to_json(), u) == c


@settings(max_examples=300)
@given(instances(max_n=8))
def test_sound_and_complete(u):
    v = decide(u)
    for fidelity in (False, True):
        c = extract_certificate(u, fidelity=fidelity)
        assert (c is not None) == v.answer
        if c is not None:
            assert verify_certificate(u, c)


@given(instances(max_n=8))
def test_endpoint_law(u):
    v = decide(u)
    c = extract_certificate(u)
    if c is None:
        return
    start, end = c.path[0][0], c.path[-1][1]
    if v.case == ONE_EXCESS_PAIR:
        assert (start, end) == (v.start, v.end)
    else:
        assert v.case == BALANCED and start == end
        assert start == min(build_pseudodigraph(u).vertices)
