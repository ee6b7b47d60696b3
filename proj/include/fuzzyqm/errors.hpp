// Copyright 2026 The fuzzyqm developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUZZYQM_ERRORS_HPP
#define FUZZYQM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzyqm {

/// Base class for all fuzzyqm errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A construction-time invariant was violated.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Conditioning on an outcome whose probability is numerically zero.
class ZeroProbabilityOutcome : public Error {
public:
  using Error::Error;
};

/// Bayesian update against an effect with numerically zero evidence.
class ZeroEvidence : public Error {
public:
  using Error::Error;
};

/// The frame Gram matrix is too ill-conditioned to solve.
class GramSingular : public Error {
public:
  using Error::Error;
};

/// A reconstructed operator is not a density operator.
class NotAState : public Error {
public:
  using Error::Error;
};

/// Frame sampling failed to produce an acceptable frame within the retry cap.
class FrameDegenerate : public Error {
public:
  using Error::Error;
};

/// A tabulated classical effect was applied to a different atom set.
class AtomSetMismatch : public Error {
public:
  using Error::Error;
};

} // namespace fuzzyqm

#endif // FUZZYQM_ERRORS_HPP
