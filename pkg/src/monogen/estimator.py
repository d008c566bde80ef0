"""scikit-learn style wrapper around the enumeration pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_coefficients, check_positive_int, check_triples
from .forms import DEFAULT_CONIC_POINT_BOUND, QuarticGenerator, index_of
from .monogenize import PipelineConfig, enumerate_monogenizations
from .oracle import DEFAULT_TRIPLE_BOX
from .thue import DEFAULT_CUBIC_HEIGHT, DEFAULT_QUARTIC_HEIGHT


class MonogenizationEnumerator(BaseEstimator):
    """Fit on the four coefficients of a monic quartic; learn its monogenizations.

    After ``fit``, ``classes_`` is an (n, 3) object array of sign-normalized
    triples (x, y, z), ``report_`` the full pipeline report. ``predict`` tells
    whether given triples generate the order, ``transform`` returns their index.
    """

    def __init__(
        self,
        cubic_height=DEFAULT_CUBIC_HEIGHT,
        quartic_height=DEFAULT_QUARTIC_HEIGHT,
        conic_point_bound=DEFAULT_CONIC_POINT_BOUND,
        oracle_box=DEFAULT_TRIPLE_BOX,
        oracle_enabled=False,
    ):
        self.cubic_height = cubic_height
        self.quartic_height = quartic_height
        self.conic_point_bound = conic_point_bound
        self.oracle_box = oracle_box
        self.oracle_enabled = oracle_enabled

    def _config(self) -> PipelineConfig:
        return PipelineConfig(
            cubic_height=check_positive_int(self.cubic_height, "cubic_height"),
            quartic_height=check_positive_int(self.quartic_height, "quartic_height"),
            conic_point_bound=check_positive_int(self.conic_point_bound, "conic_point_bound"),
            oracle_box=check_positive_int(self.oracle_box, "oracle_box"),
            oracle_enabled=bool(self.oracle_enabled),
        )

    def fit(self, X, y=None):
        self.generator_ = QuarticGenerator(*check_coefficients(X))
        self.report_ = enumerate_monogenizations(self.generator_, self._config())
        classes = np.empty((len(self.report_.classes), 3), dtype=object)
        for i, t in enumerate(self.report_.classes):
            classes[i] = t
        self.classes_ = classes
        self.n_classes_ = len(classes)
        return self

    def transform(self, X):
        check_is_fitted(self, "report_")
        return np.array([index_of(self.generator_, *t) for t in check_triples(X)], dtype=object)

    def predict(self, X):
        return np.array([i == 1 for i in self.transform(X)], dtype=bool)

    def fit_predict(self, X, y=None):
        """Fit on the generator and return the discovered classes."""
        return self.fit(X).classes_
