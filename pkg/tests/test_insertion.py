import pytest
from hypothesis import given, settings, strategies as st

from conftest import load_fixture

from extdelta.core import Composition, Content, DomainError, enumerate_omps, parse, serialize, validate
from extdelta.insertion import MAPS, InsertionInput, enumerate_insertion_domain, phi_dinv, phi_inv, phi_maj
from extdelta.statistics import STATISTICS

FIX = load_fixture("insertion_examples.json")
INP = FIX["input"]


def example():
    return InsertionInput(parse(INP["pi"]), INP["U"], INP["B"]), INP["beta"], INP["k"]


def test_example_input_is_branch_b():
    inp, beta, k = example()
    assert inp.branch == "B"
    assert inp.full_B == (0, 3)
    assert inp.weight == 5
    assert inp.check(beta, k) == 4


def test_phi_inv_example():
    inp, beta, k = example()
    assert serialize(phi_inv(inp, beta, k)) == FIX["phi_inv"]["expected"]


def test_phi_inv_printed_value_has_wrong_content():
    # the printed result drops a 0 from the third block, so it is not in the target set
    printed = parse(FIX["phi_inv"]["printed"])
    assert not validate(printed, Content(Composition(tuple(INP["beta"])), INP["r"]), INP["k"])


def test_phi_maj_example_and_trace():
    inp, beta, k = example()
    trace = []
    out = phi_maj(inp, beta, k, trace=trace)
    assert serialize(out) == FIX["phi_maj"]["expected"]
    assert [t[2] for t in trace] == FIX["phi_maj"]["trace"]
    assert [(v, src) for v, src, _ in trace] == [(3, "B"), (3, "U"), (1, "U"), (0, "B")]


def test_phi_dinv_example():
    inp, beta, k = example()
    assert serialize(phi_dinv(inp, beta, k)) == FIX["phi_dinv"]["expected"]


@pytest.mark.parametrize("name", ["inv", "maj", "dinv"])
def test_example_increment(name):
    inp, beta, k = example()
    stat = STATISTICS[name]
    assert stat(MAPS[name](inp, beta, k)) - stat(inp.pi) == inp.weight


def test_domain_violations():
    pi = parse(INP["pi"])
    beta, k = INP["beta"], INP["k"]
    with pytest.raises(DomainError):
        phi_inv(InsertionInput(pi, [0], [3]), beta, k)  # |U| wrong
    with pytest.raises(DomainError):
        phi_inv(InsertionInput(pi, [0, 2], [3, 1]), beta, k)  # |B'| wrong in branch B
    with pytest.raises(DomainError):
        phi_inv(InsertionInput(pi, [0, 3], [3]), beta, k)  # U outside [0, ell-1]
    with pytest.raises(DomainError):
        phi_inv(InsertionInput(pi, [0, 2], [4]), beta, k)  # B outside [0, ell]
    with pytest.raises(DomainError):
        phi_inv(InsertionInput(parse("4/0,1"), [], [0]), beta, k)  # pi uses n
    with pytest.raises(DomainError):
        InsertionInput(pi, [1, 1], [])


@pytest.mark.parametrize("r,beta", [(0, (1, 2)), (1, (2, 1)), (2, (1, 2)), (1, (1, 1, 2)), (0, (2, 1, 2))])
@pytest.mark.parametrize("name", ["inv", "maj", "dinv"])
def test_bijective_onto_target(r, beta, name):
    phi, stat = MAPS[name], STATISTICS[name]
    content = Content(Composition(beta), r)
    for k in range(1, r + sum(beta) + 1):
        target = {o.blocks for o in enumerate_omps(content, k)}
        images = []
        for ell in range(0, k + 1):
            for inp in enumerate_insertion_domain(beta, r, k, ell):
                out = phi(inp, beta, k)
                assert stat(out) - stat(inp.pi) == inp.weight
                images.append(out.blocks)
        assert len(images) == len(set(images))
        assert set(images) == target


contents = st.tuples(
    st.integers(0, 2), st.lists(st.integers(1, 2), min_size=1, max_size=3).map(tuple)
).filter(lambda c: c[0] + sum(c[1]) <= 6)


@settings(max_examples=40, deadline=None)
@given(contents, st.data())
def test_random_inputs_obey_increment(content, data):
    r, beta = content
    k = data.draw(st.integers(1, r + sum(beta)))
    ell = data.draw(st.integers(0, k))
    domain = list(enumerate_insertion_domain(beta, r, k, ell))
    if not domain:
        return
    inp = data.draw(st.sampled_from(domain))
    for name, phi in MAPS.items():
        out = phi(inp, beta, k)
        assert validate(out, Content(Composition(beta), r), k)
        assert STATISTICS[name](out) - STATISTICS[name](inp.pi) == inp.weight
