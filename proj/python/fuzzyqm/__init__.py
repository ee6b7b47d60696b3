# Copyright 2026 The fuzzyqm developers
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

"""Classical extensions and frame representations of finite-dimensional
quantum mechanics: states as probability measures over pure states,
informationally complete frames with negativity detection, and measurement
collapse decomposed into Bayesian updating plus disturbance."""

from fuzzyqm._core import *  # noqa: F401,F403
from fuzzyqm._core import __version__  # noqa: F401
