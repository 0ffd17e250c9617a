from hypothesis import strategies as st

from orthodesign.equivalence import ColNeg, ColPerm, RowNeg, RowPerm, VarConj, VarNeg


def ops_for(p, n, k, conjugations=True):
    """Single equivalence ops valid on a p x n design with k variables."""
    choices = [
        st.permutations(range(1, p + 1)).map(lambda x: RowPerm(tuple(x))),
        st.permutations(range(1, n + 1)).map(lambda x: ColPerm(tuple(x))),
        st.integers(1, p).map(RowNeg),
        st.integers(1, n).map(ColNeg),
        st.integers(1, k).map(VarNeg),
    ]
    if conjugations:
        choices.append(st.integers(1, k).map(VarConj))
    return st.one_of(choices)
