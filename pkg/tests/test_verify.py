import json
import math

import numpy as np
import pytest

from hyperspec import hypergraph as hg
from hyperspec.eigen import SolverConfig, largest_h_eigenvalue, sunflower_q_lambda
from hyperspec.verify import (
    check_adjacency_power_decreasing,
    check_components,
    check_odd_bipartite,
    check_power_adjacency,
    fmt,
    random_unions,
    remark_family,
    sandwich,
    scan_power,
    scan_power_q,
)

from conftest import graph_matrix


def test_scan_p3():
    table = scan_power_q(hg.path(3), 6)
    # k = 2 row is the largest signless Laplacian matrix eigenvalue
    A = graph_matrix(hg.path(3))
    assert abs(table.rows[0].lam - np.linalg.eigvalsh(np.diag(A.sum(1)) + A).max()) < 1e-9
    assert abs(table.rows[0].lam - 3.0) < 1e-9
    assert table.is_strictly_decreasing and table.above_limit
    assert [r.k for r in table.rows] == [2, 3, 4, 5, 6]
    assert table.final_gap == pytest.approx(table.rows[-1].lam - 2.0)


def test_scan_triangle_towards_two():
    table = scan_power_q(hg.cycle(3), 8)
    assert table.is_strictly_decreasing and table.above_limit
    assert all(0 < r < 1 for r in table.step_ratios)


def test_scan_star_matches_closed_form():
    table = scan_power_q(hg.star(3), 8)
    for row in table.rows:
        assert abs(row.lam - sunflower_q_lambda(3, row.k).lam) < 1e-8


def test_scan_preconditions():
    with pytest.raises(ValueError):
        scan_power_q(hg.complete_graph(2), 5)
    with pytest.raises(ValueError):
        scan_power_q(hg.path(3), 2)


def test_scan_adjacency_power():
    table = scan_power(hg.cycle(3), 6, "A")
    for row in table.rows:
        assert abs(row.lam - 2.0 ** (2 / row.k)) < 1e-9
    assert table.limit_target == 1.0


def test_scan_serialization():
    table = scan_power_q(hg.path(3), 4)
    lines = table.to_csv().splitlines()
    assert lines[0] == "k,lambda,lower,upper,iterations"
    assert lines[1].startswith("2,3.0,")
    data = json.loads(json.dumps(table.to_dict()))
    assert len(data["rows"]) == 3


def test_fmt():
    assert fmt(3.0) == "3.0"
    assert fmt(2.695620769559861) == "2.69562076956"
    assert fmt(1e-20) == "1e-20"


def test_scan_flags_nonconverged_rows():
    table = scan_power_q(hg.path(4), 4, SolverConfig(max_iter=2))
    assert any("max_iter" in r.flags for r in table.rows)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_sandwich_p3(k):
    low, mid, high = sandwich(hg.path(3), k)
    assert low <= mid + 1e-7 and mid <= high + 1e-7


def test_power_adjacency_examples():
    rep = check_power_adjacency(hg.cycle(3), 4, 1)
    assert rep.passed
    assert abs(rep.measured["lambda_tensor"] - 2 ** 0.5) < 1e-7
    rep = check_power_adjacency(hg.complete_graph(2), 5, 2)
    assert rep.passed and abs(rep.measured["lambda_tensor"] - 1.0) < 1e-7
    rep = check_power_adjacency(hg.star(2), 4, 2)
    assert rep.passed and abs(rep.measured["lambda_tensor"] - 2 ** 0.5) < 1e-7


def test_components_examples():
    U = hg.disjoint_union(hg.sunflower(1, 3), hg.sunflower(2, 3))
    rep = check_components(U, "Q")
    assert rep.passed
    assert abs(rep.measured["lambda_union"] - 2.6956) < 1e-3
    rep = check_components(hg.disjoint_union(hg.sunflower(1, 3), hg.sunflower(1, 3)), "Q")
    assert rep.passed and abs(rep.measured["lambda_union"] - 2.0) < 1e-10
    rep = check_components(hg.disjoint_union(hg.cycle(3), hg.complete_graph(2)), "A")
    assert rep.passed and abs(rep.measured["lambda_union"] - 2.0) < 1e-10


def test_components_laplacian():
    rep = check_components(hg.disjoint_union(hg.path(3), hg.cycle(4)), "L")
    assert rep.passed and abs(rep.measured["lambda_union"] - 4.0) < 1e-8
    rep = check_components(hg.disjoint_union(hg.sunflower(2, 4), hg.sunflower(3, 4)), "L")
    assert rep.passed


def test_components_unsupported_propagates():
    with pytest.raises(ValueError, match="unsupported"):
        check_components(hg.disjoint_union(hg.complete_kuniform(5, 4), hg.sunflower(2, 4)), "L")


def test_adjacency_power_decreasing_examples():
    rep = check_adjacency_power_decreasing(hg.cycle(3), 1, range(2, 9))
    assert rep.passed
    np.testing.assert_allclose(rep.measured["values"], [2 ** (2 / k) for k in range(2, 9)], rtol=1e-9)

    rep = check_adjacency_power_decreasing(hg.complete_graph(2), 1, range(2, 9))
    assert any("hypotheses unmet" in n for n in rep.notes)
    np.testing.assert_allclose(rep.measured["values"], 1.0)

    rep = check_adjacency_power_decreasing(hg.star(2), 2, range(4, 9), cross_check_k=4)
    assert rep.passed
    np.testing.assert_allclose(rep.measured["values"], [2 ** (0.5 * 4 / k) for k in range(4, 9)], rtol=1e-9)


def test_remark_family():
    q1 = largest_h_eigenvalue("Q", hg.complete_kuniform(5, 4)).lam
    rep = remark_family(math.ceil(q1) + 1)
    assert rep.passed
    assert rep.measured["g1_not_odd_bipartite"]
    with pytest.raises(ValueError, match="too small"):
        remark_family(1)


def test_odd_bipartite_report():
    assert check_odd_bipartite(hg.complete_kuniform(5, 4)).passed
    assert check_odd_bipartite(hg.sunflower(3, 4)).measured["odd_bipartite"]


def test_random_unions_deterministic():
    a = [name for name, _ in random_unions(10, seed=3)]
    b = [name for name, _ in random_unions(10, seed=3)]
    assert a == b and len(a) == 10
    for _, H in random_unions(10):
        assert len(hg.components(H)) == 2
