# Copyright 2026 The cacti Authors.
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
"""Exact counts of long-cycle factorizations, partitioned cacti and thorn trees."""

from ._cacti import (
    InternalInconsistency,
    InvalidInput,
    Refusal,
    bicolored_tree_count,
    c2_brute,
    c2_closed,
    c3_closed,
    c3_direct,
    k2_brute,
    k2_closed,
    k3_brute,
    k3_closed,
    m_coeff,
    power_to_monomial,
    prop3_identity,
    reduce,
    theta,
    thorn_cactus_count,
    verify,
)

__all__ = [
    "InternalInconsistency",
    "InvalidInput",
    "Refusal",
    "bicolored_tree_count",
    "c2_brute",
    "c2_closed",
    "c3_closed",
    "c3_direct",
    "k2_brute",
    "k2_closed",
    "k3_brute",
    "k3_closed",
    "m_coeff",
    "power_to_monomial",
    "prop3_identity",
    "reduce",
    "theta",
    "thorn_cactus_count",
    "verify",
]
