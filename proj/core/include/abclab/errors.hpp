// Copyright 2026 The abclab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace abclab {

/// Base class for every failure the library raises. The what() string always
/// starts with the error name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(const std::string& name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define ABCLAB_DEFINE_ERROR(NAME)                                      \
  class NAME : public Error {                                          \
   public:                                                             \
    explicit NAME(const std::string& detail) : Error(#NAME, detail) {} \
  }

ABCLAB_DEFINE_ERROR(InvalidArgument);
ABCLAB_DEFINE_ERROR(DimensionMismatch);
ABCLAB_DEFINE_ERROR(NotPositiveDefinite);
ABCLAB_DEFINE_ERROR(ZeroSlope);
ABCLAB_DEFINE_ERROR(UnknownModel);
ABCLAB_DEFINE_ERROR(QuantileModeRequiresDistances);
ABCLAB_DEFINE_ERROR(NoAcceptances);
ABCLAB_DEFINE_ERROR(DegenerateWeights);
ABCLAB_DEFINE_ERROR(InitOutsidePrior);
ABCLAB_DEFINE_ERROR(ChainStuck);
ABCLAB_DEFINE_ERROR(EmptyReport);
ABCLAB_DEFINE_ERROR(RankDeficientDesign);
ABCLAB_DEFINE_ERROR(TooFewDraws);
ABCLAB_DEFINE_ERROR(NonFiniteBinding);
ABCLAB_DEFINE_ERROR(NoClosedForm);
ABCLAB_DEFINE_ERROR(RankDeficient);
ABCLAB_DEFINE_ERROR(GridTooCoarse);
ABCLAB_DEFINE_ERROR(IoError);

#undef ABCLAB_DEFINE_ERROR

}  // namespace abclab
