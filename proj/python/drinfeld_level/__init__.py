# Copyright 2026 The drinfeld-level Authors
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

"""Drinfeld modules over finite local algebras l[Y]/(Y^k)."""

import json

from ._core import (
    Algebra,
    BoundExceeded,
    DrinfeldError,
    DrinfeldModule,
    Element,
    ParseError,
    TwistedPoly,
    default_config,
    deformation_classes,
    division_polynomial,
    equivalence,
    is_level_structure,
    level_structures,
    quotient_isogeny,
    run_command,
    torsion_points,
)

__all__ = [
    "Algebra",
    "BoundExceeded",
    "DrinfeldError",
    "DrinfeldModule",
    "Element",
    "ParseError",
    "TwistedPoly",
    "deformation_classes",
    "division_polynomial",
    "equivalence",
    "is_level_structure",
    "level_structures",
    "quotient_isogeny",
    "run",
    "torsion_points",
]


def run(command, config=None, jobs=1):
    """Runs a CLI command on a config dict (default: the built-in grid)."""
    text = "" if config is None else json.dumps(config)
    return json.loads(run_command(command, text, jobs))
