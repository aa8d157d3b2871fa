// Copyright 2026 The qcodon Authors
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

// JSON views of the library types. Parsing functions report malformed input
// as Error(kInvalidArgument).

#ifndef QCODON_JSON_IO_H_
#define QCODON_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "qcodon/encoding.h"
#include "qcodon/exact.h"
#include "qcodon/hamiltonian.h"
#include "qcodon/pipeline.h"
#include "qcodon/polynomial.h"
#include "qcodon/vqe.h"

namespace qcodon {

using Json = nlohmann::ordered_json;

Json LayoutToJson(const EncodingLayout& layout);

/// Terms in ascending variable-set order, each as {"vars": [...], "coefficient": c}.
Json PolynomialToJson(const Polynomial& p);

/// "c_p" is a number or the string "auto".
Json WeightsToJson(const HamiltonianWeights& w);

/// Missing keys keep their defaults. "rho_gc" may be a number or
/// {"fraction": f}, converted with RhoFromGcFraction. The result is validated.
HamiltonianWeights WeightsFromJson(const Json& j);

/// "budget" is the per-restart evaluation limit; "max_evaluations" is
/// accepted as a synonym on input.
Json VqeConfigToJson(const VqeConfig& c);
VqeConfig VqeConfigFromJson(const Json& j);

Json ExactResultToJson(const ExactResult& r, const EncodingLayout& layout);
Json VqeResultToJson(const VqeResult& r);
Json ResourceReportToJson(const ResourceReport& r);
Json PipelineReportToJson(const PipelineReport& r);

}  // namespace qcodon

#endif  // QCODON_JSON_IO_H_
