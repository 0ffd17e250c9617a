import itertools

import pytest

from orthodesign.core import Design
from orthodesign.equivalence import ColPerm, apply_ops
from orthodesign.errors import NotBcod, NotStandardForm, PreconditionViolated
from orthodesign.generate import construct_bcod
from orthodesign.patterns import (
    ConjClass,
    Pattern,
    all_patterns,
    census,
    conj_class,
    delta,
    find_complement,
    induce_step,
    left_pattern,
    max_rate_delay_bound,
    nu,
    verify_delay_bound,
    zero_pattern,
)
from conftest import two_copy_stack

NON, CONJ = ConjClass.NON, ConjClass.CONJ


def test_zero_and_left_patterns(d2, base):
    assert str(zero_pattern(d2, 1)) == "1001"
    assert str(zero_pattern(d2, 3)) == "0110"
    assert str(zero_pattern(base, 1)) == "10"
    assert (str(left_pattern(d2, 1)), left_pattern(d2, 1).weight) == ("10", 1)
    assert (str(left_pattern(d2, 3)), left_pattern(d2, 3).weight) == ("01", 1)
    assert (str(left_pattern(base, 2)), left_pattern(base, 2).weight) == ("0", 0)


def test_pattern_errors(d2):
    with pytest.raises(IndexError):
        zero_pattern(d2, 5)
    odd = Design.from_rows(["z1 z2 0", "-z2* z1* 0"])
    with pytest.raises(PreconditionViolated):
        left_pattern(odd, 1)


def test_pattern_helpers():
    p = Pattern.parse("0110")
    assert p.weight == 2 and str(p.flip(1, 2)) == "1010"
    assert str(p.complement()) == "1001"
    assert len(all_patterns(3)) == 8


def test_complement_examples(d2, base):
    assert find_complement(d2, 1) == 3
    assert find_complement(d2, 2) == 4
    assert find_complement(base, 1) == 2


def test_complement_requires_bcod(alamouti):
    with pytest.raises(NotBcod):
        find_complement(alamouti, 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_complement_involution_and_weight(m):
    d = construct_bcod(m)
    seen = set()
    for r in range(1, d.p + 1):
        c = find_complement(d, r)
        assert c != r and find_complement(d, c) == r
        assert left_pattern(d, c).weight == m - left_pattern(d, r).weight
        assert conj_class(d, c) != conj_class(d, r)
        seen.add(c)
    assert len(seen) == d.p


def test_complement_on_stack():
    d = two_copy_stack()
    assert all(find_complement(d, find_complement(d, r)) == r for r in range(1, d.p + 1))


def _row_with(d, pattern):
    return next(r for r in range(1, d.p + 1) if str(left_pattern(d, r)) == pattern)


def test_induce_step_examples():
    d = construct_bcod(3)
    r = _row_with(d, "000")
    got = induce_step(d, r, 1, 2)
    assert str(left_pattern(d, got)) == "110" and conj_class(d, got) == conj_class(d, r)
    r = _row_with(d, "100")
    got = induce_step(d, r, 2, 3)
    assert str(left_pattern(d, got)) == "111" and conj_class(d, got) == conj_class(d, r)


def test_induce_step_vacuous_on_d2(d2):
    for r in range(1, 5):
        with pytest.raises(PreconditionViolated):
            induce_step(d2, r, 1, 2)


def test_induce_step_rejects_bad_columns():
    d = construct_bcod(3)
    r = _row_with(d, "100")
    for i, j in [(1, 2), (2, 2), (2, 4)]:
        with pytest.raises(PreconditionViolated):
            induce_step(d, r, i, j)


def test_induce_step_needs_standard_form(d2):
    with pytest.raises(NotStandardForm):
        induce_step(apply_ops(d2, [ColPerm.swap(4, 1, 2)]), 1, 1, 2)


@pytest.mark.parametrize("m", [3, 4])
def test_induce_step_exhaustive(m):
    d = construct_bcod(m)
    calls = 0
    for r in range(1, d.p + 1):
        alpha = left_pattern(d, r)
        if alpha.weight > m - 2:
            continue
        for i, j in itertools.permutations(range(1, m + 1), 2):
            if alpha.bits[i - 1] or alpha.bits[j - 1]:
                continue
            got = induce_step(d, r, i, j)
            assert left_pattern(d, got) == alpha.flip(i, j)
            assert conj_class(d, got) == conj_class(d, r)
            calls += 1
    assert calls > 0


def test_census_examples(d2, base):
    c = census(d2)
    assert dict(c.counts) == {
        (Pattern.parse("10"), NON): 1,
        (Pattern.parse("01"), NON): 1,
        (Pattern.parse("01"), CONJ): 1,
        (Pattern.parse("10"), CONJ): 1,
    }
    assert dict(census(base).counts) == {(Pattern.parse("1"), NON): 1, (Pattern.parse("0"), CONJ): 1}
    c3 = census(construct_bcod(3))
    assert c3.total == 8 and c3.patterns() == set(all_patterns(3))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_census_cells_are_singletons(m):
    c = census(construct_bcod(m))
    assert c.total == 2**m
    if m % 2:
        # one row per left pattern, whatever its class
        assert c.patterns() == set(all_patterns(m))
        assert all(c[key] == 1 for key in c.counts)
    else:
        mandated = [(p, cls) for p in all_patterns(m) if p.weight % 2 for cls in ConjClass]
        assert all(c[key] == 1 for key in mandated)
        assert len(mandated) == c.total


def test_verify_delay_bound_examples(d2, base):
    for d, m in [(base, 1), (d2, 2), (construct_bcod(4), 4)]:
        rep = verify_delay_bound(d)
        assert rep.ok and rep.p == rep.target == 2**m


def test_verify_delay_bound_stack_and_non_bcod():
    rep = verify_delay_bound(two_copy_stack())
    assert rep.ok and rep.p == 8
    with pytest.raises(NotBcod):
        verify_delay_bound(Design.from_rows(["z1 z2", "-z2* z1*"]))


DELTA_TABLE = {1: 0, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 3, 8: 3,
               9: 4, 10: 5, 11: 6, 12: 6, 13: 7, 14: 7, 15: 7, 16: 7}


def test_delta_table():
    assert {n: delta(n) for n in range(1, 17)} == DELTA_TABLE
    assert [nu(n) for n in (2, 4, 8)] == [2, 4, 8]


def test_delta_envelope():
    vals = [delta(n) for n in range(1, 65)]
    assert vals == sorted(vals)
    assert all(delta(n + 8) == delta(n) + 4 for n in range(1, 57))
    # an n-column real design needs at least n rows
    assert all(2 ** delta(n) >= n for n in range(1, 65))


def test_max_rate_delay_bound():
    assert [max_rate_delay_bound(n) for n in (4, 5, 6)] == [4, 15, 30]
    with pytest.raises(ValueError):
        max_rate_delay_bound(1)
    with pytest.raises(ValueError):
        delta(0)
