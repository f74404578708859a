from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from substdyn.mcnaughton import (McNaughtonError, PLFunc, compile_term, compose, eval_pl,
                                 flip, from_points, identity, pl_equal, pl_from_json,
                                 pl_to_json)
from substdyn.terms import Conj, Neg, Var, eval_term, parse

from .conftest import rationals_upto
from .strategies import one_var_terms, rationals01

x0 = Var(0)


def test_compile_neg():
    f = compile_term(Neg(x0))
    assert f.breakpoints == (0, 1) and f.pieces == ((-1, 1),)


def test_compile_square():
    f = compile_term(Conj(x0, x0))
    assert f.breakpoints == (0, F(1, 2), 1)
    assert f.pieces == ((0, 0), (2, -1))


def test_compile_tent(tent):
    f = compile_term(parse("!( !x0 * !x0 ) /\\ !( x0 * x0 )"))
    assert f.breakpoints == (0, F(1, 2), 1)
    assert f.pieces == ((2, 0), (-2, 2))
    assert pl_equal(f, tent)


def test_compile_rejects_other_variables():
    with pytest.raises(ValueError):
        compile_term(parse("x0 * x1"))


def test_eval_examples(tent):
    assert eval_pl(tent, F(1, 4)) == F(1, 2)
    assert eval_pl(tent, F(1, 2)) == 1
    assert eval_pl(identity(), F(3, 7)) == F(3, 7)
    with pytest.raises(ValueError):
        eval_pl(tent, F(5, 4))


def test_compose_examples(tent):
    assert eval_pl(compose(tent, tent), F(1, 8)) == F(1, 2)
    assert pl_equal(compose(tent, identity()), tent)
    assert pl_equal(compose(flip(), flip()), identity())


def test_compose_breakpoints(tent):
    tt = compose(tent, tent)
    assert tt.breakpoints == (0, F(1, 4), F(1, 2), F(3, 4), 1)
    assert tt.slopes == (4, -4, 4, -4)


def test_pl_equal():
    assert not pl_equal(identity(), flip())
    assert pl_equal(compile_term(parse("x0 /\\ x0")), identity())


def test_invariants_enforced():
    with pytest.raises(McNaughtonError):
        PLFunc((F(0), F(1)), ((2, 0),))            # leaves [0, 1]
    with pytest.raises(McNaughtonError):
        PLFunc((F(0), F(1, 2), F(1)), ((1, 0), (1, 0)))  # redundant breakpoint
    with pytest.raises(McNaughtonError):
        PLFunc((F(0), F(1, 2), F(1)), ((0, 0), (0, 1)))  # jump
    with pytest.raises(McNaughtonError):
        from_points([(0, 0), (F(1, 3), F(1, 2)), (1, 1)])  # slope 3/2


GRID16 = rationals_upto(16)


@settings(max_examples=150, deadline=None)
@given(one_var_terms())
def test_compilation_soundness(t):
    f = compile_term(t)
    for x in GRID16:
        assert eval_pl(f, x) == eval_term(t, [x])
    assert all(isinstance(a, int) and isinstance(c, int) for a, c in f.pieces)


@settings(max_examples=60, deadline=None)
@given(one_var_terms(6), one_var_terms(6), one_var_terms(6))
def test_compose_associative(a, b, c):
    f, g, h = map(compile_term, (a, b, c))
    assert pl_equal(compose(compose(f, g), h), compose(f, compose(g, h)))


@settings(max_examples=60, deadline=None)
@given(one_var_terms(6), one_var_terms(6), rationals01())
def test_compose_pointwise(a, b, x):
    f, g = compile_term(a), compile_term(b)
    assert eval_pl(compose(f, g), x) == eval_pl(f, eval_pl(g, x))


@given(one_var_terms())
def test_json_round_trip(t):
    f = compile_term(t)
    assert pl_equal(pl_from_json(pl_to_json(f)), f)


def test_json_format(tent):
    assert pl_to_json(tent) == '{"breakpoints": ["0", "1/2", "1"], "pieces": [[2, 0], [-2, 2]]}'
