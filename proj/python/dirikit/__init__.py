# Copyright 2026 The dirikit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Weighted Dirichlet-type integrals on the unit disc."""

import json as _json

from ._dirikit import (
    AnalyticFunction,
    AtomicDecomposition,
    CircleMeasure,
    DefectSequence,
    DirichletResult,
    DouglasCertificate,
    NotInSpace,
    QuadratureSpec,
    SingularIntegrand,
    atomic_decompose,
    defect_sequence,
    dilation_factor,
    dirichlet,
    dirichlet_sigma,
    douglas_decompose,
    gram_section,
    integrate_disc,
    kernel_bergman_nu,
    local_dirichlet,
    multiplier_seminorm_estimate,
    multiplier_seminorm_upper_bound,
    suite_names,
    szego_dirichlet_norm,
    t_map,
    tuple_norm_sq,
)
from ._dirikit import _verify_json


def verify(suite, trials=None, seed=0, n=None, tol=None, quadrature=None, workers=1):
    """Runs one verification suite and returns its report as a dict."""
    return _json.loads(
        _verify_json(suite, trials=trials, seed=seed, n=n, tol=tol,
                     quadrature=quadrature, workers=workers))


__all__ = [name for name in dir() if not name.startswith("_")]
