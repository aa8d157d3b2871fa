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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "qcodon/fetch.h"

#include <httplib.h>

#include <cstdlib>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

constexpr std::string_view kPlaceholder = "{accession}";

struct SplitUrl {
  std::string base;  // scheme://host[:port]
  std::string path;
};

SplitUrl Split(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || scheme_end == 0) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint is not an absolute URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

std::string ResolveFetchEndpoint(const std::optional<std::string>& explicit_endpoint) {
  if (explicit_endpoint && !explicit_endpoint->empty()) return *explicit_endpoint;
  if (const char* env = std::getenv(kFetchEndpointEnv); env != nullptr && *env != '\0') return env;
  return std::string(kDefaultFetchEndpoint);
}

std::string ExpandEndpoint(std::string_view endpoint, std::string_view accession) {
  std::string url(endpoint);
  const auto at = url.find(kPlaceholder);
  if (at != std::string::npos) {
    url.replace(at, kPlaceholder.size(), accession);
    return url;
  }
  if (url.empty() || url.back() != '/') url += '/';
  url += accession;
  url += ".fasta";
  return url;
}

std::string FetchSequence(std::string_view accession, std::string_view endpoint,
                          std::chrono::seconds timeout) {
  if (accession.empty()) throw Error(ErrorCode::kInvalidArgument, "accession must not be empty");
  const std::string url = ExpandEndpoint(endpoint, accession);
  const SplitUrl parts = Split(url);

  httplib::Client client(parts.base);
  if (!client.is_valid()) throw Error(ErrorCode::kInvalidArgument, "unsupported endpoint: " + url);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_follow_location(true);

  const httplib::Result response = client.Get(parts.path);
  if (!response) {
    throw Error(ErrorCode::kNetworkError,
                "GET " + url + " failed: " + httplib::to_string(response.error()));
  }
  if (response->status == 404) {
    throw Error(ErrorCode::kNotFound, "accession " + std::string(accession) + " not found");
  }
  if (response->status < 200 || response->status >= 300) {
    throw Error(ErrorCode::kNetworkError,
                "GET " + url + " returned HTTP " + std::to_string(response->status));
  }
  const std::string& body = response->body;
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || body[first] != '>') {
    throw Error(ErrorCode::kNonFastaResponse, "response from " + url + " is not FASTA");
  }
  return body;
}

}  // namespace qcodon
