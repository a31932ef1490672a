# Copyright 2026 The cuttree Authors
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
"""Cut trees, pendant pairs and contraction-based sparsification."""

from ._cuttree import (
    BlockTree,
    ContractViolation,
    InputError,
    InternalError,
    Multigraph,
    SizeRefusal,
    UnsupportedInput,
    build_kec_tree,
    build_ntmc_tree,
    build_pendant_tree,
    count_nontrivial_mincuts,
    count_pendant_pairs,
    cut_weight,
    format_mgraph,
    gen,
    global_edge_connectivity,
    gomory_hu,
    is_pendant,
    kec_components,
    local_edge_connectivity,
    min_degree,
    oracle,
    parse_mgraph,
    sparsify,
    validate_ntmc_tree,
    validate_pendant_tree,
    vertex_connectivity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
