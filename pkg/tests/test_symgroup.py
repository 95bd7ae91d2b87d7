import pytest

from jm_expand.config import oracle_limits
from jm_expand.errors import IndexOutOfRange, NotCentral, ResourceGuard
from jm_expand.symfunc import e, h, m, p
from jm_expand.symgroup import (
    GroupAlgebraElement, class_expansion, class_sum, compose, cycle_type,
    evaluate_in_jm, from_cycles, inverse, jm_element, jucys_ek_check, transposition,
)


def test_product_applies_right_factor_first():
    s = from_cycles(3, (1, 2))
    t = from_cycles(3, (2, 3))
    assert compose(s, t) == (1, 2, 0)
    assert compose(s, inverse(s)) == (0, 1, 2)


def test_jm_elements_commute():
    n = 5
    js = [jm_element(i, n) for i in range(1, n + 1)]
    for a in js:
        for b in js:
            assert a * b == b * a
    assert not js[0]


def test_h2_in_s3():
    x = evaluate_in_jm(h(2), 3)
    assert class_expansion(x).coeffs == {(3,): 2, (2, 1): 0, (1, 1, 1): 3}


def test_symmetric_functions_in_jm_are_central():
    for F in (h(3), e(2), p(3), m((2, 1)), h(2) * p(1) + e(3) * 2):
        class_expansion(evaluate_in_jm(F, 4))


def test_non_central_element_rejected():
    x = GroupAlgebraElement(3, {transposition(0, 1, 3): 1})
    with pytest.raises(NotCentral):
        class_expansion(x)


def test_class_sum_reads_back():
    for lam in [(2, 1, 1), (3, 1), (4,)]:
        assert class_expansion(class_sum(lam))[lam] == 1


def test_jucys_formula_small():
    assert all(jucys_ek_check(k, n) for n in range(1, 5) for k in range(n + 1))


def test_cycle_type():
    assert cycle_type(from_cycles(5, (1, 3), (2, 4, 5))) == (3, 2)


def test_guards():
    with pytest.raises(IndexOutOfRange):
        jm_element(4, 3)
    with oracle_limits(max_n=3):
        with pytest.raises(ResourceGuard):
            evaluate_in_jm(h(1), 4)
