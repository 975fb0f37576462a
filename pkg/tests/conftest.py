import numpy as np
from hypothesis import strategies as st

from tautilt.algebra import AlgebraSpec, Indec, make_linear_kupisch, make_uniform


@st.composite
def linear_kupisch(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    c = [1]
    for _ in range(n - 1):
        c.append(draw(st.integers(1, c[-1] + 1)))
    return tuple(reversed(c))


@st.composite
def algebras(draw, max_n=6, max_r=5):
    if draw(st.booleans()):
        return make_linear_kupisch(draw(linear_kupisch(max_n)))
    return make_uniform("cyclic", draw(st.integers(1, max_n)), draw(st.integers(1, max_r)))


def representation(A: AlgebraSpec, m: Indec):
    """Basis vectors e_0..e_{l-1} placed at vertices top, top+1, ...; each arrow shifts e_j to e_{j+1}."""
    vertices = []
    v = m.top
    for _ in range(m.len):
        vertices.append(v)
        v = A.succ(v) if A.is_linear else v % A.n + 1
    return vertices


def hom_dim_by_linear_algebra(A: AlgebraSpec, m: Indec, n: Indec) -> int:
    """dim Hom(m, n) as the solution space of the commuting-square equations."""
    vm, vn = representation(A, m), representation(A, n)
    # unknown f[i, j]: coefficient of basis vector j of n in the image of basis vector i of m,
    # allowed only when both sit at the same vertex
    unknowns = [(i, j) for i in range(len(vm)) for j in range(len(vn)) if vm[i] == vn[j]]
    if not unknowns:
        return 0
    index = {u: k for k, u in enumerate(unknowns)}
    rows = []
    # f(arrow * e_i) = arrow * f(e_i), compared coefficientwise on basis of n
    for i in range(len(vm)):
        for j2 in range(len(vn)):
            row = np.zeros(len(unknowns))
            if i + 1 < len(vm) and (i + 1, j2) in index:
                row[index[i + 1, j2]] += 1
            if j2 >= 1 and (i, j2 - 1) in index:
                row[index[i, j2 - 1]] -= 1
            if row.any():
                rows.append(row)
    if not rows:
        return len(unknowns)
    return len(unknowns) - np.linalg.matrix_rank(np.array(rows))
