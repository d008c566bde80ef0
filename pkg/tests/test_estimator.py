import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from monogen import MonogenizationEnumerator
from monogen._validation import as_int, check_coefficients, check_triples
from monogen.forms import ReducibleGeneratorError

FAST = dict(cubic_height=1000, quartic_height=200)


def test_fit_finds_cyclotomic_classes():
    est = MonogenizationEnumerator(**FAST).fit([1, 1, 1, 1])
    found = {tuple(row) for row in est.classes_.tolist()}
    assert {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)} <= found
    assert est.n_classes_ == len(found) == len(est.report_.classes)


def test_predict_and_transform():
    est = MonogenizationEnumerator(**FAST).fit(np.array([[1, 1, 1, 1]]))
    assert est.predict([[1, 0, 0], [2, 0, 0], [0, 1, 0]]).tolist() == [True, False, True]
    assert est.transform([2, 0, 0]).tolist() == [64]
    assert all(est.predict(est.classes_))


def test_params_round_trip_through_clone():
    est = MonogenizationEnumerator(quartic_height=7, oracle_enabled=True)
    params = clone(est).get_params()
    assert params["quartic_height"] == 7 and params["oracle_enabled"] is True
    assert est.set_params(quartic_height=9).quartic_height == 9


def test_unfitted_transform_raises():
    with pytest.raises(NotFittedError):
        MonogenizationEnumerator().transform([[1, 0, 0]])


def test_fit_validates_inputs():
    with pytest.raises(ReducibleGeneratorError):
        MonogenizationEnumerator(**FAST).fit([0, 0, 0, 0])
    with pytest.raises(ValueError):
        MonogenizationEnumerator(**FAST).fit([1, 1, 1])
    with pytest.raises(ValueError):
        MonogenizationEnumerator(cubic_height=0).fit([1, 1, 1, 1])


def test_validation_helpers():
    assert check_coefficients(np.array([1, 2, 3, 4], dtype=np.int64)) == (1, 2, 3, 4)
    assert all(type(c) is int for c in check_coefficients(np.array([1, 2, 3, 4])))
    assert check_triples([1, 2, 3]) == [(1, 2, 3)]
    assert as_int(3.0) == 3
    with pytest.raises(TypeError):
        as_int(2.5)
    with pytest.raises(TypeError):
        as_int(True)
    with pytest.raises(ValueError):
        check_triples([[1, 2]])
