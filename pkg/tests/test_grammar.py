import pytest
from hypothesis import given, strategies as st

from schubertlab.bundles import BundleError, Dual, Sum, Sym, Taut, Tensor, Trivial, Wedge, rank_of
from schubertlab.grammar import parse_bundle


def test_parse_examples():
    assert parse_bundle("wedge(3, dual(taut(0)))") == Wedge(3, Dual(Taut(0)))
    assert parse_bundle("tensor(dual(taut(0)),tensor(dual(taut(1)),dual(taut(2))))") == \
        Tensor(Dual(Taut(0)), Tensor(Dual(Taut(1)), Dual(Taut(2))))
    assert parse_bundle(" sum( triv(2) , sym(3,taut(1)) ) ") == Sum(Trivial(2), Sym(3, Taut(1)))


leaves = st.one_of(st.integers(0, 3).map(Taut), st.integers(0, 4).map(Trivial))
exprs = st.recursive(leaves, lambda inner: st.one_of(
    inner.map(Dual),
    st.tuples(inner, inner).map(lambda t: Tensor(*t)),
    st.tuples(inner, inner).map(lambda t: Sum(*t)),
    st.tuples(st.integers(0, 3), inner).map(lambda t: Wedge(*t)),
    st.tuples(st.integers(0, 3), inner).map(lambda t: Sym(*t)),
), max_leaves=6)


@given(exprs)
def test_print_parse_roundtrip(e):
    assert parse_bundle(str(e)) == e


@pytest.mark.parametrize("bad", ["", "taut", "taut(0", "taut(x)", "wedge(taut(0))", "foo(1)",
                                 "taut(0) taut(1)", "dual(taut(0)))", "taut(0)$"])
def test_parse_errors(bad):
    with pytest.raises(BundleError):
        parse_bundle(bad)


def test_rank_of():
    ranks = {0: (3, 7), 1: (2, 5)}
    assert rank_of(parse_bundle("wedge(2,dual(taut(0)))"), ranks) == 3
    assert rank_of(parse_bundle("sym(3,taut(1))"), ranks) == 4
    assert rank_of(parse_bundle("tensor(taut(0),taut(1))"), ranks) == 6
    assert rank_of(parse_bundle("sum(triv(2),taut(0))"), ranks) == 5
    with pytest.raises(BundleError):
        rank_of(parse_bundle("wedge(4,taut(0))"), ranks)
    with pytest.raises(BundleError):
        rank_of(parse_bundle("taut(2)"), ranks)
    with pytest.raises(BundleError):
        rank_of(Taut(0))
    assert rank_of(Taut(0, 3)) == 3
