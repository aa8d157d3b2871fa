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

#include <gtest/gtest.h>
#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "qcodon/bio.h"
#include "testing/helpers.h"

namespace qcodon {
namespace {

constexpr const char* kFasta = ">sp|TEST1|DEMO Demo protein\nMGSK\nLLV\n";

class FetchServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Get("/uniprotkb/TEST1.fasta", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kFasta, "text/plain");
    });
    server_.Get("/uniprotkb/HTML1.fasta", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("<html>oops</html>", "text/html");
    });
    server_.Get("/uniprotkb/BUSY1.fasta", [](const httplib::Request&, httplib::Response& res) {
      res.status = 503;
    });
    server_.Get("/moved/TEST1.fasta", [](const httplib::Request&, httplib::Response& res) {
      res.set_redirect("/uniprotkb/TEST1.fasta");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  std::string Endpoint(const std::string& path = "/uniprotkb/{accession}.fasta") const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(FetchServerTest, ReturnsFastaThatParses) {
  const std::string body = FetchSequence("TEST1", Endpoint());
  const ProteinSequence seq = ParseFasta(body);
  EXPECT_EQ(ResidueLetters(seq.residues), "MGSKLLV");
}

TEST_F(FetchServerTest, FollowsRedirects) {
  EXPECT_EQ(FetchSequence("TEST1", Endpoint("/moved/{accession}.fasta")), kFasta);
}

TEST_F(FetchServerTest, EndpointWithoutPlaceholderGetsAccessionAppended) {
  EXPECT_EQ(FetchSequence("TEST1", Endpoint("/uniprotkb")), kFasta);
}

TEST_F(FetchServerTest, MissingAccessionIsNotFound) {
  EXPECT_QCODON_ERROR(FetchSequence("NOPE", Endpoint()), ErrorCode::kNotFound);
}

TEST_F(FetchServerTest, HtmlBodyIsRejected) {
  EXPECT_QCODON_ERROR(FetchSequence("HTML1", Endpoint()), ErrorCode::kNonFastaResponse);
}

TEST_F(FetchServerTest, ServerErrorIsANetworkError) {
  EXPECT_QCODON_ERROR(FetchSequence("BUSY1", Endpoint()), ErrorCode::kNetworkError);
}

TEST_F(FetchServerTest, EnvironmentOverridesDefaultEndpoint) {
  ASSERT_EQ(::setenv(kFetchEndpointEnv, Endpoint().c_str(), 1), 0);
  const std::string endpoint = ResolveFetchEndpoint(std::nullopt);
  ::unsetenv(kFetchEndpointEnv);
  EXPECT_EQ(endpoint, Endpoint());
  EXPECT_EQ(FetchSequence("TEST1", endpoint), kFasta);
}

TEST(FetchTest, EndpointResolutionOrder) {
  ::unsetenv(kFetchEndpointEnv);
  EXPECT_EQ(ResolveFetchEndpoint(std::nullopt), kDefaultFetchEndpoint);
  ::setenv(kFetchEndpointEnv, "http://env.invalid/{accession}", 1);
  EXPECT_EQ(ResolveFetchEndpoint(std::nullopt), "http://env.invalid/{accession}");
  EXPECT_EQ(ResolveFetchEndpoint("http://flag.invalid/{accession}"), "http://flag.invalid/{accession}");
  ::unsetenv(kFetchEndpointEnv);
}

TEST(FetchTest, ExpandEndpoint) {
  EXPECT_EQ(ExpandEndpoint(kDefaultFetchEndpoint, "P0DTC2"),
            "https://rest.uniprot.org/uniprotkb/P0DTC2.fasta");
  EXPECT_EQ(ExpandEndpoint("http://h/x/", "A1"), "http://h/x/A1.fasta");
}

TEST(FetchTest, InvalidArguments) {
  EXPECT_QCODON_ERROR(FetchSequence("", kDefaultFetchEndpoint), ErrorCode::kInvalidArgument);
  EXPECT_QCODON_ERROR(FetchSequence("P0DTC2", "not a url"), ErrorCode::kInvalidArgument);
}

TEST(FetchTest, UnreachableEndpointIsANetworkError) {
  EXPECT_QCODON_ERROR(
      FetchSequence("P0DTC2", "http://127.0.0.1:1/{accession}", std::chrono::seconds(2)),
      ErrorCode::kNetworkError);
}

}  // namespace
}  // namespace qcodon
