from math import factorial

import pytest
from hypothesis import given, strategies as st

from extdelta.core import (
    Block,
    Composition,
    Content,
    DomainError,
    OrderedMultisetPartition,
    ParseError,
    compositions,
    enumerate_omps,
    parse,
    serialize,
    validate,
    weak_compositions,
)


def stirling2(n, k):
    if n == k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_parse_both_forms_agree():
    assert parse("134/268/57") == parse("1,3,4/2,6,8/5,7")
    assert parse("1,3,4/2,6,8/5,7").blocks == ((1, 3, 4), (2, 6, 8), (5, 7))


def test_parse_sorts_blocks_and_serializes_canonically():
    pi = parse("43/21")
    assert pi.blocks == ((3, 4), (1, 2))
    assert serialize(pi) == "3,4/1,2"


def test_multidigit_letters_round_trip():
    pi = OrderedMultisetPartition.of([10], [2], [11])
    text = serialize(pi)
    assert text == "10/2/11,"
    assert parse(text) == pi
    pi2 = OrderedMultisetPartition.of([1, 12], [3])
    assert parse(serialize(pi2)) == pi2


def test_empty_partition():
    assert parse("") == OrderedMultisetPartition(())
    assert parse("∅").k == 0
    assert serialize(OrderedMultisetPartition(())) == ""


@pytest.mark.parametrize(
    "text,pos",
    [("1,,2", 2), ("12//3", 3), ("1a/2", 1), ("11/2", 1), ("1,2,2/3", 4), ("/1", 0)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position == pos


def test_block_invariants():
    with pytest.raises(DomainError):
        Block(())
    with pytest.raises(DomainError):
        Block((2, 1))
    with pytest.raises(DomainError):
        Block((1, 1))
    assert Block((1, 4)).min == 1 and Block((1, 4)).max == 4


def test_composition_and_content():
    c = Composition.parse("2,0,1")
    assert c.size == 3 and c.length == 3 and not c.is_strong
    assert c.drop_last().parts == (2, 0)
    content = Content(Composition((2, 1)), 3)
    assert content.multiplicities == (3, 2, 1)
    assert content.size == 6
    assert Content.from_letters([0, 0, 2, 1, 2]).multiplicities == (2, 1, 2)
    with pytest.raises(DomainError):
        Composition((1, -1))


def test_shape_and_tail_positive():
    pi = parse("0,1/2/0,3")
    assert pi.shape.parts == (2, 1, 2)
    assert not pi.tail_positive
    assert parse("0,1/2,3").tail_positive


@pytest.mark.parametrize("n", range(0, 6))
def test_ordered_set_partitions_count(n):
    # content 1^n: k! S(n,k) ordered set partitions
    content = Content(Composition((1,) * n))
    for k in range(0, n + 1):
        got = sum(1 for _ in enumerate_omps(content, k))
        assert got == factorial(k) * stirling2(n, k)


def test_enumeration_is_sorted_unique_and_valid():
    content = Content(Composition((2, 1, 2)), 2)
    for k in range(1, 8):
        for tail in (True, False):
            objs = list(enumerate_omps(content, k, tail_positive=tail))
            texts = [serialize(o) for o in objs]
            assert texts == sorted(texts)
            assert len(set(texts)) == len(texts)
            assert all(validate(o, content, k, tail_positive=tail) for o in objs)


def test_tail_positive_is_a_filter_of_all():
    content = Content(Composition((1, 2)), 2)
    for k in range(1, 6):
        all_ = list(enumerate_omps(content, k, tail_positive=False))
        tp = list(enumerate_omps(content, k))
        assert tp == [o for o in all_ if o.tail_positive]


def test_enumeration_matches_naive_filter():
    # every sequence of k nonempty subsets with the right content, by brute force
    from itertools import combinations, product

    content = Content(Composition((2, 1)), 1)
    letters = range(3)
    subsets = [s for m in range(1, 4) for s in combinations(letters, m)]
    for k in range(1, 5):
        naive = set()
        for seq in product(subsets, repeat=k):
            pi = OrderedMultisetPartition._trusted(seq)
            if validate(pi, content, k, tail_positive=False):
                naive.add(seq)
        got = {o.blocks for o in enumerate_omps(content, k, tail_positive=False)}
        assert got == naive


def test_validate_rejects():
    content = Content(Composition((1, 1)), 1)
    assert validate(parse("0,2/1"), content, 2)
    assert not validate(parse("1/0,2"), content, 2)  # last block holds 0
    assert not validate(parse("1,2/0"), content, 2)
    assert validate(parse("1,2/0"), content, 2, tail_positive=False)
    assert not validate(parse("1/2"), content, 2)  # wrong content
    assert not validate(parse("0,2/1"), content, 3)  # wrong k


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions(6))) == 32
    assert list(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]


blocks_st = st.lists(
    st.sets(st.integers(0, 25), min_size=1, max_size=4).map(lambda s: tuple(sorted(s))),
    min_size=0,
    max_size=5,
)


@given(blocks_st)
def test_serialize_parse_round_trip(blocks):
    pi = OrderedMultisetPartition(tuple(blocks))
    assert parse(serialize(pi)) == pi
