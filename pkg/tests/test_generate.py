import itertools

import pytest

from oracles import is_cod_numeric
from orthodesign.atomic import is_atomic
from orthodesign.axioms import is_bcod
from orthodesign.core import Design, VarRef, serialize_design, token_key
from orthodesign.errors import ConfigError, SearchLimitExceeded
from orthodesign.generate import M_MAX, base_bcod, construct_bcod
from orthodesign.patterns import census, verify_delay_bound
from orthodesign.search import SearchConfig, search_min_delay
from orthodesign.standard import is_standard_form


def test_base_bcod(base):
    assert base_bcod() == base
    assert is_bcod(base_bcod()) and census(base_bcod()).total == 2


@pytest.mark.parametrize("m", range(1, 7))
def test_construct_parameters(m):
    d = construct_bcod(m)
    assert (d.p, d.n, d.k) == (2**m, 2 * m, 2 ** (m - 1))
    assert is_bcod(d) and is_atomic(d) and verify_delay_bound(d)
    assert is_standard_form(d) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_construct_agrees_with_numeric_gram(m):
    assert is_cod_numeric(construct_bcod(m))


def test_construct_small_cases(base, d2):
    assert construct_bcod(1) == base
    assert construct_bcod(2) == d2


def test_construct_is_deterministic():
    text = serialize_design(construct_bcod(4))
    construct_bcod.cache_clear()
    assert serialize_design(construct_bcod(4)) == text


@pytest.mark.parametrize("m", [0, M_MAX + 1])
def test_construct_range(m):
    with pytest.raises(ConfigError):
        construct_bcod(m)


def test_construct_largest():
    d = construct_bcod(M_MAX)
    assert d.p == 2**M_MAX and is_bcod(d)


def _search(n, p_max, **kw):
    return search_min_delay(SearchConfig(n=n, p_max=p_max, **kw))


def test_search_n2():
    res = _search(2, 2)
    assert serialize_design(res.design) == "2 2 1\n0 z1\nz1* 0"
    assert res.exhausted == []
    assert _search(2, 1).design is None


def test_search_n4():
    res = _search(4, 3)
    assert res.design is None and res.exhausted == [2]
    res = _search(4, 4)
    assert res.exhausted == [2]
    assert serialize_design(res.design).splitlines()[1:] == [
        "0 0 z1 z2",
        "0 0 z2* -z1*",
        "z1 z2 0 0",
        "z2* -z1* 0 0",
    ]
    assert is_bcod(res.design)


def test_search_without_symmetry_agrees():
    assert _search(4, 4, symmetry_pruning=False).design == _search(4, 4).design
    assert _search(4, 3, symmetry_pruning=False).design is None


def test_search_deterministic_across_workers():
    one = _search(4, 4, parallel_width=1)
    two = _search(4, 4, parallel_width=2)
    assert one.design == two.design and one.nodes == two.nodes


def test_search_matches_brute_force_n2():
    # every 2x2 grid over {0, +-z1, +-z1*}; keep the BCODs, take the smallest
    tokens = [None] + sorted(
        (VarRef(1, s, c) for s in (1, -1) for c in (False, True)), key=token_key
    )
    hits = []
    for cells in itertools.product(tokens, repeat=4):
        if all(e is None for e in cells):
            continue
        d = Design(2, 2, 1, (cells[:2], cells[2:]))
        if is_cod_numeric(d) and is_bcod(d):
            hits.append(tuple(token_key(e) for e in cells))
    assert hits
    found = _search(2, 2, symmetry_pruning=False).design
    assert min(hits) == tuple(token_key(e) for row in found.grid for e in row)


def test_search_limit():
    with pytest.raises(SearchLimitExceeded):
        _search(4, 4, node_limit=10)


@pytest.mark.parametrize(
    "kw",
    [dict(n=3, p_max=4), dict(n=0, p_max=2), dict(n=6, p_max=8), dict(n=4, p_max=-2),
     dict(n=4, p_max=4, parallel_width=0)],
)
def test_search_config_errors(kw):
    with pytest.raises(ConfigError):
        search_min_delay(SearchConfig(**kw))
