import random

import pytest

from chipfire import (
    Divisor,
    FiringScript,
    JacElement,
    ResourceGuardError,
    abel_jacobi,
    apply_laplacian,
    divisor_class,
    enumerate_reduced,
    jacobian_structure,
    linearly_equivalent,
    pushforward,
    smith_normal_form,
    symmetric_power_map,
)
from chipfire.catalog import banana_graph, complete_graph, cycle_graph, path_graph
from chipfire.linalg import mat_mul
from oracles import det_cofactor, snf_diagonal_brute


def scaled(el, k):
    out = JacElement(tuple(0 for _ in el.coords), el.factors)
    for _ in range(k):
        out = out + el
    return out


def random_matrix(rng, rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


# -- smith normal form --------------------------------------------------------


def test_snf_identity():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    u, s, v = smith_normal_form(eye)
    assert s == eye
    assert mat_mul(mat_mul(u, eye), v) == s


def test_snf_sorts_diagonal_into_chain():
    _, s, _ = smith_normal_form([[4, 0], [0, 2]])
    assert [s[0][0], s[1][1]] == [2, 4]


def test_snf_complete_graph():
    g = complete_graph(4)
    _, s, _ = smith_normal_form(g.reduced_laplacian(0))
    assert [s[i][i] for i in range(3)] == [1, 4, 4]


def test_snf_random_matrices_match_minor_gcds():
    rng = random.Random(101)
    shapes = [(2, 2), (3, 3), (4, 4), (3, 5), (5, 3), (4, 2)]
    for rows, cols in shapes:
        for _ in range(6):
            m = random_matrix(rng, rows, cols)
            u, s, v = smith_normal_form(m)
            assert mat_mul(mat_mul(u, m), v) == s
            assert abs(det_cofactor(u)) == 1
            assert abs(det_cofactor(v)) == 1
            diag = [s[i][i] for i in range(min(rows, cols))]
            assert diag == snf_diagonal_brute(m)
            for i in range(len(diag) - 1):
                if diag[i + 1] != 0:
                    assert diag[i + 1] % diag[i] == 0
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        assert s[i][j] == 0


def test_snf_singular_matrix():
    m = [[2, 4], [1, 2]]
    _, s, _ = smith_normal_form(m)
    assert [s[0][0], s[1][1]] == [1, 0]


# -- group structure ----------------------------------------------------------


def test_jacobian_cycles_are_cyclic():
    for n in range(3, 7):
        js = jacobian_structure(cycle_graph(n))
        assert js.nontrivial_factors == (n,)
        assert js.order == n


def test_jacobian_complete_four(k4):
    js = jacobian_structure(k4)
    assert js.nontrivial_factors == (4, 4)
    assert js.order == 16
    assert "Z/4 x Z/4" in repr(js)


def test_jacobian_trees_trivial():
    js = jacobian_structure(path_graph(5))
    assert js.nontrivial_factors == ()
    assert js.order == 1
    assert "0" in repr(js)


def test_jacobian_pentagon(pentagon):
    js = jacobian_structure(pentagon)
    assert js.order == pentagon.spanning_tree_count() == 11
    assert js.genus == 2


def test_jacobian_base_independent(catalog_tiny):
    for g in catalog_tiny[:20]:
        shapes = {
            jacobian_structure(g, base).nontrivial_factors for base in g.vertices
        }
        assert len(shapes) == 1


def test_jacobian_order_counts_spanning_trees(catalog_tiny):
    for g in catalog_tiny:
        assert jacobian_structure(g).order == g.spanning_tree_count()


# -- divisor classes ----------------------------------------------------------


def test_divisor_class_needs_degree_zero(c3):
    js = jacobian_structure(c3)
    with pytest.raises(ValueError):
        divisor_class(js, Divisor((1, 0, 0)))


def test_divisor_class_kills_principal(catalog_tiny):
    rng = random.Random(7)
    for g in catalog_tiny[:25]:
        js = jacobian_structure(g)
        f = FiringScript([rng.randint(-3, 3) for _ in range(g.n)])
        assert divisor_class(js, apply_laplacian(g, f)).is_zero()


def test_divisor_class_is_additive(catalog_tiny):
    rng = random.Random(13)
    for g in catalog_tiny[:20]:
        js = jacobian_structure(g)
        a = [rng.randint(-2, 2) for _ in range(g.n)]
        b = [rng.randint(-2, 2) for _ in range(g.n)]
        a[0] -= sum(a)
        b[0] -= sum(b)
        d1, d2 = Divisor(a), Divisor(b)
        assert divisor_class(js, d1 + d2) == divisor_class(js, d1) + divisor_class(js, d2)
        assert divisor_class(js, -d1) == -divisor_class(js, d1)


def test_divisor_class_separates_exactly(catalog_tiny):
    # same coordinates iff linearly equivalent
    rng = random.Random(19)
    for g in catalog_tiny[:15]:
        js = jacobian_structure(g)
        for _ in range(4):
            a = [rng.randint(-2, 2) for _ in range(g.n)]
            b = [rng.randint(-2, 2) for _ in range(g.n)]
            a[0] -= sum(a)
            b[0] -= sum(b)
            d1, d2 = Divisor(a), Divisor(b)
            same = divisor_class(js, d1) == divisor_class(js, d2)
            assert same == (linearly_equivalent(g, d1, d2) is not None)


def test_jac_element_group_mismatch(b2, c3):
    with pytest.raises(ValueError):
        jacobian_structure(b2).zero() + jacobian_structure(c3).zero()


# -- the one-vertex embedding -------------------------------------------------


def test_abel_jacobi_banana(b2):
    js = jacobian_structure(b2)
    el = abel_jacobi(js, "q")
    assert not el.is_zero()
    assert (el + el).is_zero()
    assert abel_jacobi(js, "p").is_zero()


def test_abel_jacobi_harmonic(catalog_tiny):
    # the degree-weighted value at v equals the multiplicity-weighted sum
    # over neighbors, in the group
    for g in catalog_tiny[:20]:
        js = jacobian_structure(g)
        values = [abel_jacobi(js, name) for name in g.vertices]
        for v in range(g.n):
            lhs = scaled(values[v], g.degree(v))
            rhs = js.zero()
            for w in g.neighbors(v):
                rhs = rhs + scaled(values[w], g.adjacency[v][w])
            assert lhs == rhs


def test_abel_jacobi_injective_iff_two_connected(catalog_tiny):
    for g in catalog_tiny:
        if g.n < 2:
            continue
        js = jacobian_structure(g)
        seen = {abel_jacobi(js, name).coords for name in g.vertices}
        injective = len(seen) == g.n
        assert injective == (g.edge_connectivity() >= 2)


# -- symmetric powers ---------------------------------------------------------


def test_symmetric_power_banana():
    g = banana_graph(3)
    js = jacobian_structure(g)
    out = symmetric_power_map(js, 2)
    assert out["injective"]
    assert out["surjective"]
    assert out["domain_size"] == 3
    assert out["image_size"] == 3 == out["group_order"]


def test_symmetric_power_thresholds(catalog_tiny):
    for g in catalog_tiny[:30]:
        js = jacobian_structure(g)
        gen = g.genus()
        lam = g.edge_connectivity()
        for k in range(1, gen + 2):
            out = symmetric_power_map(js, k)
            assert out["surjective"] == (k >= gen)
            assert out["injective"] == (lam >= k + 1)


def test_symmetric_power_rejects_negative(b2):
    with pytest.raises(ValueError):
        symmetric_power_map(jacobian_structure(b2), -1)


def test_symmetric_power_guard(pentagon):
    with pytest.raises(ResourceGuardError) as info:
        symmetric_power_map(jacobian_structure(pentagon), 50, cap=100)
    assert info.value.guard == "symmetric_power_enumeration"


# -- pushforward --------------------------------------------------------------


def two_triangles_with_bridge():
    from chipfire import Multigraph

    return Multigraph(
        ("a", "b", "c", "x", "y", "z"),
        (
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("x", "y"),
            ("y", "z"),
            ("z", "x"),
            ("a", "x"),
        ),
    )


def test_pushforward_moves_coefficients():
    g = two_triangles_with_bridge()
    contracted, mapping = g.contract_bridges()
    d = Divisor((1, 0, -2, 3, 0, 0))
    pushed = pushforward(g, contracted, mapping, d)
    assert pushed.degree() == d.degree()
    merged = contracted.index(mapping["a"])
    assert pushed[merged] == 1 + 3  # a and x land together


def test_pushforward_class_bijection_over_bridge():
    g = two_triangles_with_bridge()
    contracted, mapping = g.contract_bridges()
    assert g.spanning_tree_count() == contracted.spanning_tree_count() == 9

    js = jacobian_structure(contracted)
    base = g.vertices[0]
    images = {
        divisor_class(js, pushforward(g, contracted, mapping, rep)).coords
        for rep in enumerate_reduced(g, base, 0)
    }
    assert len(images) == 9 == js.order


def test_pushforward_validates_map(c3, b2):
    with pytest.raises(ValueError):
        pushforward(c3, b2, {"a": "p", "b": "q"}, Divisor((0, 0, 0)))
    with pytest.raises(ValueError):
        pushforward(c3, b2, {"a": "p", "b": "q", "c": "nope"}, Divisor((0, 0, 0)))
