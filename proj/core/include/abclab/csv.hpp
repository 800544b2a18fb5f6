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

#include <string>
#include <vector>

#include "abclab/samplers.hpp"

namespace abclab {

/// 17 significant digits: doubles round-trip exactly, so reruns diff clean.
std::string format_double(double v);

/// Draws table with header theta_1..p, s_1..d, weight, distance.
std::string draws_to_csv(const std::vector<AcceptedDraw>& draws);

/// Same table with adjusted parameters appended as theta_adj_1..p.
std::string adjusted_draws_to_csv(const std::vector<AcceptedDraw>& original,
                                  const std::vector<AcceptedDraw>& adjusted);

/// Parses a draws CSV produced by draws_to_csv. Throws IoError on malformed
/// input.
std::vector<AcceptedDraw> draws_from_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace abclab
