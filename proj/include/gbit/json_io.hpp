// Copyright 2026 gbit-toolbox authors
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

#include <json.hpp>
#include <string>

#include "gbit/lattice.hpp"
#include "gbit/sim.hpp"
#include "gbit/state.hpp"
#include "gbit/types.hpp"

namespace gbit {

using Json = nlohmann::ordered_json;

Json question_set_to_json(const QuestionSet& set);
Json state_to_json(const BlochState& state);
BlochState state_from_json(const SystemKind& sys, const Json& j);
Json graph_to_json(const QuestionGraph& graph);
Json transcript_entry_to_json(const Transcript& transcript, std::size_t step);
Json tomography_record_to_json(const TomographyResult& result, std::size_t i);

/// A simulation scenario file:
///   kind, n          -- system
///   preparation      -- "totally-mixed" | "bell" | "ghz"
///                       | {"assign": ["11","!22",...]}
///                       | {"bloch": {"p":1.0, "y":[...]}}
///   mode             -- "single-shot" | "tomography"
///   script           -- single-shot question list, e.g. ["33","33"]
///   questions        -- tomography questions (default: complete set)
///   shots            -- shot count
/// The bell/ghz presets answer yes to {11, 22} and {211, 121, 112}.
struct Scenario {
  SystemKind sys;
  DensityMatrix preparation;
  std::string mode = "single-shot";
  std::vector<QuestionIndex> script;
  std::vector<QuestionIndex> questions;
  std::int64_t shots = 1;
};

/// Parses and validates a scenario; throws Error with a field diagnostic on
/// malformed input.
Scenario parse_scenario(const std::string& text);

}  // namespace gbit
