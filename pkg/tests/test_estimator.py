import numpy as np
import pytest
from sklearn.base import clone

from hyperspec import LargestHEigenvalue
from hyperspec import hypergraph as hg


def test_fit_attributes():
    est = LargestHEigenvalue().fit(hg.sunflower(2, 3))
    assert abs(est.eigenvalue_ - 2.695620769559861) < 1e-9
    lo, hi = est.bounds_
    assert lo <= est.eigenvalue_ <= hi
    assert est.eigenvector_.shape == (5,)
    assert est.n_iter_ > 0 and est.residual_ < 1e-8


def test_get_set_params_and_clone():
    est = LargestHEigenvalue(kind="A", tol=1e-9)
    assert est.get_params() == {"kind": "A", "tol": 1e-9, "max_iter": 1_000_000, "shift": 1.0}
    est.set_params(shift=2.0)
    twin = clone(est)
    assert twin.get_params()["shift"] == 2.0
    assert not hasattr(twin, "result_")


def test_accepts_mapping_input():
    est = LargestHEigenvalue(kind="L").fit({"k": 2, "n": 3, "edges": [[0, 1], [1, 2]]})
    assert abs(est.eigenvalue_ - 3.0) < 1e-9


def test_rejects_bad_input():
    with pytest.raises(TypeError):
        LargestHEigenvalue().fit(np.eye(3))
    with pytest.raises(ValueError):
        LargestHEigenvalue().fit({"k": 3, "n": 3})
    with pytest.raises(ValueError):
        LargestHEigenvalue(tol=-1).fit(hg.path(3))
