# Copyright 2026 The rankcode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gabidulin and interleaved Gabidulin codes.

Field elements are lists of m base-field coordinates, words are lists of
elements and q-polynomials are lists of coefficients (index i multiplies
X^{q^i}).
"""

from ._rankcode import (
    Field,
    GabidulinCode,
    InterleavedCode,
    RankcodeError,
    failure_predicate,
    fqm_rank,
    random_burst_error,
    random_code,
    random_error_vector,
    random_message,
    run_experiment,
)

__all__ = [
    "Field",
    "GabidulinCode",
    "InterleavedCode",
    "RankcodeError",
    "failure_predicate",
    "fqm_rank",
    "random_burst_error",
    "random_code",
    "random_error_vector",
    "random_message",
    "run_experiment",
]
