# Copyright 2026 The qamp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Amplitude amplification and state synthesis on a dense state vector."""

from ._qamp import (
    RNG_NAME,
    AdaptiveFailureError,
    DegenerateOverlapError,
    DegenerateSpecError,
    EmptySampleError,
    Plan,
    Program,
    ResourceError,
    SpecError,
    adaptive_synthesize,
    amplitudes_from_probabilities,
    apply_cond_rot,
    apply_m,
    apply_phase_flip,
    apply_q,
    apply_reflection,
    apply_wh,
    basis_state,
    compare,
    condition_on_ancilla,
    measure_shots,
    oracle_check,
    overlap_u,
    plan,
    rotation_success,
    run,
    subspace_analysis,
    synthesize,
)

__version__ = "0.1.0"
