// Copyright 2026 The nlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLGAMES_SERIALIZATION_H_
#define NLGAMES_SERIALIZATION_H_

#include <string_view>

#include <nlohmann/json.hpp>

#include "nlgames/advice_family.h"
#include "nlgames/repetition_sim.h"
#include "nlgames/sic.h"
#include "nlgames/toolbox.h"
#include "nlgames/values.h"

namespace nlgames {

using Json = nlohmann::json;

// Complex numbers are [re, im] pairs; matrices are row-major arrays of pairs.
Json complex_vector_to_json(const ComplexVector& v);
ComplexVector complex_vector_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, std::size_t dim);

Json measurement_to_json(const Measurement& meas);
Measurement measurement_from_json(const Json& j, std::size_t dim);

// {"dim", "state", "alice", "bob"}; "dimA"/"dimB" replace "dim" when the
// local dimensions differ.
Json strategy_to_json(const QuantumStrategy& s);
QuantumStrategy strategy_from_json(const Json& j);

// {"k", "dimA", "dimB", "p": [[...]], "states": [[[re, im], ...], ...]}
Json family_to_json(const AdviceFamily& f);
AdviceFamily family_from_json(const Json& j);
AdviceFamily parse_family(std::string_view text);

// Throws kParse on malformed text.
Json parse_json(std::string_view text, std::string_view what);

Json to_json(const ClassicalResult& r);
Json to_json(const SeesawResult& r);
Json to_json(const SicReport& r);
Json to_json(const BoundCheck& c);
Json to_json(const ChainReport& r);
Json to_json(const SingleGameReport& r);
Json to_json(const Estimate& e);
Json to_json(const ProtocolParams& p);
Json to_json(const SimResult& r);
Json to_json(const EfficiencyReport& r);
Json to_json(const InequalityResult& r);
Json to_json(const ToolboxReport& r);

}  // namespace nlgames

#endif  // NLGAMES_SERIALIZATION_H_
