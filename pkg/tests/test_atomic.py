import itertools

import pytest

from orthodesign.atomic import (
    adjacency_graph,
    atomic_components,
    component_design,
    is_atomic,
    variable_graph,
)
from orthodesign.core import submatrix
from orthodesign.errors import NotBcod
from orthodesign.generate import construct_bcod
from orthodesign.gram import is_cod
from conftest import block_diagonal_stack, two_copy_stack


def union_find_components(d):
    parent = list(range(d.k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in range(1, d.p + 1):
        vs = sorted(d.row_vars(r))
        for v in vs[1:]:
            parent[find(v)] = find(vs[0])
    groups = {}
    for v in range(1, d.k + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def test_graph_examples(d2, base):
    assert adjacency_graph(d2).edges == {(1, 2)}
    g = adjacency_graph(base)
    assert g.k == 1 and not g.edges
    assert is_atomic(d2) and is_atomic(base)


def test_components_examples(d2, base):
    assert atomic_components(d2) == [([1, 2], [1, 2, 3, 4])]
    assert atomic_components(base) == [([1], [1, 2])]


def test_two_copy_stack():
    d = two_copy_stack()
    assert not is_atomic(d)
    comps = atomic_components(d)
    assert [vs for vs, _ in comps] == [[1, 2], [3, 4]]
    assert sorted(r for _, rows in comps for r in rows) == list(range(1, 9))
    for _, rows in comps:
        assert len(rows) == 4
        assert is_cod(component_design(d, rows))


def test_block_diagonal_stack_is_rejected():
    d = block_diagonal_stack()
    assert not is_cod(d)
    with pytest.raises(NotBcod):
        is_atomic(d)
    assert [sorted(c) for c in variable_graph(d).components()] == [[1, 2], [3, 4]]


def test_requires_bcod(alamouti):
    with pytest.raises(NotBcod):
        adjacency_graph(alamouti)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_constructed_designs_are_atomic(m):
    d = construct_bcod(m)
    assert is_atomic(d)
    assert union_find_components(d) == [list(range(1, d.k + 1))]


@pytest.mark.parametrize("d", [construct_bcod(2), construct_bcod(3)], ids=["m2", "m3"])
def test_no_proper_row_subset_is_a_cod(d):
    # no proper row subset may itself be orthogonal
    rows = range(1, d.p + 1)
    for size in range(1, d.p):
        for subset in itertools.combinations(rows, size):
            assert not is_cod(submatrix(d, subset))


def test_stack_has_a_proper_cod_subset():
    d = two_copy_stack()
    assert is_cod(submatrix(d, [1, 2, 3, 4]))
