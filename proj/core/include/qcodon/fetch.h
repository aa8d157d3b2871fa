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

#ifndef QCODON_FETCH_H_
#define QCODON_FETCH_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace qcodon {

inline constexpr std::string_view kDefaultFetchEndpoint =
    "https://rest.uniprot.org/uniprotkb/{accession}.fasta";
inline constexpr const char* kFetchEndpointEnv = "QCODON_FETCH_ENDPOINT";

/// The explicit endpoint if given, else $QCODON_FETCH_ENDPOINT, else the
/// UniProt REST default.
std::string ResolveFetchEndpoint(const std::optional<std::string>& explicit_endpoint);

/// Endpoint URL with "{accession}" substituted; without the placeholder the
/// accession and ".fasta" are appended as a path segment.
std::string ExpandEndpoint(std::string_view endpoint, std::string_view accession);

/// Blocking HTTP(S) GET of one FASTA record. Nothing is cached.
/// Errors: kInvalidArgument for an empty accession or unparsable URL,
/// kNotFound on HTTP 404, kNetworkError on transport failure or any other
/// non-2xx status, kNonFastaResponse when the body is not FASTA.
std::string FetchSequence(std::string_view accession, std::string_view endpoint,
                          std::chrono::seconds timeout = std::chrono::seconds(30));

}  // namespace qcodon

#endif  // QCODON_FETCH_H_
