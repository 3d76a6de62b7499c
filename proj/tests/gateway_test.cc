/* Copyright 2026 The FashionTag Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <memory>
#include <string>

#include "fashiontag/errors.h"
#include "fashiontag/gateway.h"
#include "fashiontag/record.h"
#include "fashiontag/transport.h"
#include "fashiontag/vocabulary.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "test_util.h"

namespace fashiontag {
namespace {

using testing::ScriptedTransport;
using Step = ScriptedTransport::Step;

const char kImage[] = "\xff\xd8 fake jpeg bytes";

std::string ValidBody() {
  return SerializeCompact(AttributeRecord{"top", "navy", "cotton", {"classic"}, {"work"}});
}

struct Harness {
  explicit Harness(std::vector<Step> script)
      : transport(std::make_shared<ScriptedTransport>(std::move(script))),
        gateway(transport, Vocabulary::Default(), [this](Millis d) { sleeps.push_back(d); }) {}
  std::shared_ptr<ScriptedTransport> transport;
  std::vector<Millis> sleeps;
  Gateway gateway;
};

BackendConfig Config(std::string url = "http://primary") {
  BackendConfig c;
  c.endpoint_url = std::move(url);
  return c;
}

BackendError CatchBackendError(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const BackendError& e) {
    return e;
  }
  ADD_FAILURE() << "no BackendError thrown";
  return BackendError(BackendErrorKind::kHttpError, "", 0, "");
}

TEST(GatewayTest, RetriesThrough503) {
  Harness h({ScriptedTransport::Status(503), ScriptedTransport::Status(200, ValidBody())});
  const AnalyzeResult r = h.gateway.Analyze(kImage, Config());
  EXPECT_EQ(r.attempts, 2);
  EXPECT_EQ(h.transport->calls(), 2);
  EXPECT_EQ(r.backend_used, BackendUsed::kPrimary);
  EXPECT_EQ(r.raw_text, ValidBody());
  EXPECT_EQ(r.record.category, "top");
  EXPECT_EQ(h.sleeps, std::vector<Millis>{Millis{2000}});
  EXPECT_EQ(h.transport->timeouts(), (std::vector<Millis>{Millis{120000}, Millis{30000}}));
}

TEST(GatewayTest, GivesUpAfterTwoRetries) {
  Harness h({ScriptedTransport::Status(503)});
  const BackendError e = CatchBackendError([&] { h.gateway.Analyze(kImage, Config()); });
  EXPECT_EQ(e.kind(), BackendErrorKind::kUnavailable);
  EXPECT_EQ(ToString(e.kind()), "backend_unavailable");
  EXPECT_EQ(e.attempts(), 3);
  EXPECT_EQ(e.endpoint(), "http://primary");
  EXPECT_EQ(h.transport->calls(), 3);
  EXPECT_EQ(h.sleeps.size(), 2u);
}

TEST(GatewayTest, TimeoutsAndConnectionFailuresAreRetried) {
  Harness h({ScriptedTransport::Timeout(), ScriptedTransport::Refused(),
             ScriptedTransport::Status(200, ValidBody())});
  EXPECT_EQ(h.gateway.Analyze(kImage, Config()).attempts, 3);
}

TEST(GatewayTest, BackoffScheduleLastEntryRepeats) {
  Harness h({ScriptedTransport::Status(503)});
  BackendConfig c = Config();
  c.max_retries = 4;
  c.retry_backoff = {Millis{10}, Millis{20}};
  EXPECT_THROW(h.gateway.Analyze(kImage, c), BackendError);
  EXPECT_EQ(h.sleeps, (std::vector<Millis>{Millis{10}, Millis{20}, Millis{20}, Millis{20}}));
  EXPECT_EQ(h.transport->calls(), 5);
}

TEST(GatewayTest, OtherStatusFailsImmediately) {
  Harness h({ScriptedTransport::Status(500, "boom")});
  const BackendError e = CatchBackendError([&] { h.gateway.Analyze(kImage, Config()); });
  EXPECT_EQ(e.kind(), BackendErrorKind::kHttpError);
  EXPECT_EQ(e.attempts(), 1);
  EXPECT_EQ(h.transport->calls(), 1);
}

TEST(GatewayTest, CaptionIsMalformedOutput) {
  Harness h({ScriptedTransport::Status(200, "A navy cotton shirt.")});
  const BackendError e = CatchBackendError([&] { h.gateway.Analyze(kImage, Config()); });
  EXPECT_EQ(e.kind(), BackendErrorKind::kMalformedOutput);
  EXPECT_EQ(ToString(e.kind()), "malformed_output");
  EXPECT_EQ(e.raw_text(), "A navy cotton shirt.");
  EXPECT_EQ(h.transport->calls(), 1);
}

TEST(GatewayTest, VocabularyViolationIsMalformedOutput) {
  Harness h({ScriptedTransport::Status(
      200, R"({"category":"hat","primary_color":"navy","material":"cotton",)"
           R"("style_tags":[],"occasion_tags":["everyday"]})")});
  EXPECT_EQ(CatchBackendError([&] { h.gateway.Analyze(kImage, Config()); }).kind(),
            BackendErrorKind::kMalformedOutput);
}

TEST(GatewayTest, FallbackAfterPrimaryExhausted) {
  // Primary: three 503s; fallback: one good answer.
  Harness h({ScriptedTransport::Status(503), ScriptedTransport::Status(503),
             ScriptedTransport::Status(503), ScriptedTransport::Status(200, ValidBody())});
  const AnalyzeResult r =
      h.gateway.AnalyzeWithFallback(kImage, Config(), Config("http://fallback"));
  EXPECT_EQ(r.backend_used, BackendUsed::kFallback);
  EXPECT_EQ(r.attempts, 1);
  EXPECT_EQ(h.transport->calls(), 4);
  EXPECT_EQ(h.transport->endpoints().back(), "http://fallback");
}

TEST(GatewayTest, FallbackAfterMalformedPrimary) {
  Harness h({ScriptedTransport::Status(200, "caption"), ScriptedTransport::Status(200, ValidBody())});
  const AnalyzeResult r =
      h.gateway.AnalyzeWithFallback(kImage, Config(), Config("http://fallback"));
  EXPECT_EQ(r.backend_used, BackendUsed::kFallback);
  EXPECT_EQ(h.transport->calls(), 2);
}

TEST(GatewayTest, NoFallbackWhenPrimarySucceeds) {
  Harness h({ScriptedTransport::Status(200, ValidBody())});
  const AnalyzeResult r =
      h.gateway.AnalyzeWithFallback(kImage, Config(), Config("http://fallback"));
  EXPECT_EQ(r.backend_used, BackendUsed::kPrimary);
  EXPECT_EQ(h.transport->calls(), 1);
}

TEST(GatewayTest, BothBackendsFail) {
  Harness h({ScriptedTransport::Status(503), ScriptedTransport::Status(503),
             ScriptedTransport::Status(503), ScriptedTransport::Status(401, "bad key")});
  try {
    h.gateway.AnalyzeWithFallback(kImage, Config(), Config("http://fallback"));
    FAIL() << "expected FallbackExhaustedError";
  } catch (const FallbackExhaustedError& e) {
    EXPECT_EQ(e.primary().kind(), BackendErrorKind::kUnavailable);
    EXPECT_EQ(e.primary().attempts(), 3);
    EXPECT_EQ(e.fallback().kind(), BackendErrorKind::kHttpError);
    EXPECT_EQ(e.fallback().endpoint(), "http://fallback");
  }
  EXPECT_EQ(h.transport->calls(), 4);
}

TEST(GatewayTest, NoFallbackConfiguredRethrowsPrimary) {
  Harness h({ScriptedTransport::Status(503)});
  EXPECT_THROW(h.gateway.AnalyzeWithFallback(kImage, Config(), std::nullopt), BackendError);
}

TEST(BackendConfigTest, Validation) {
  BackendConfig c = Config();
  EXPECT_NO_THROW(c.Validate());
  c.endpoint_url = "";
  EXPECT_THROW(c.Validate(), DataError);
  c = Config();
  c.max_retries = -1;
  EXPECT_THROW(c.Validate(), DataError);
  c = Config();
  c.subsequent_timeout = Millis{0};
  EXPECT_THROW(c.Validate(), DataError);
  Harness h({ScriptedTransport::Status(200, ValidBody())});
  EXPECT_THROW(h.gateway.Analyze("", Config()), DataError);
}

TEST(SplitEndpointTest, Parts) {
  EXPECT_EQ(SplitEndpoint("http://localhost:8000").scheme_host_port, "http://localhost:8000");
  EXPECT_EQ(SplitEndpoint("http://localhost:8000").path_prefix, "");
  const EndpointParts p = SplitEndpoint("https://host.example/space/v1/");
  EXPECT_EQ(p.scheme_host_port, "https://host.example");
  EXPECT_EQ(p.path_prefix, "/space/v1");
  EXPECT_THROW(SplitEndpoint("ftp://x"), DataError);
  EXPECT_THROW(SplitEndpoint("http://"), DataError);
}

// The real transport against an in-process server speaking the wire
// contract.
TEST(HttpTransportTest, MultipartFileUpload) {
  testing::MockInferenceServer server;
  server.AddFixture(kImage, ValidBody());
  HttpTransport transport;
  const TransportResult r = transport.PostAnalyze(server.url(), kImage, Millis{5000}, "");
  EXPECT_EQ(r.failure, TransportFailure::kNone);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, ValidBody());
  EXPECT_EQ(server.last_authorization(), "");

  transport.PostAnalyze(server.url(), kImage, Millis{5000}, "secret");
  EXPECT_EQ(server.last_authorization(), "Bearer secret");
  EXPECT_EQ(transport.PostAnalyze(server.url(), "other", Millis{5000}, "").status, 404);
}

TEST(HttpTransportTest, ServerRejectsRequestWithoutFilePart) {
  testing::MockInferenceServer server;
  httplib::Client client(server.url());
  auto res = client.Post("/analyze", httplib::MultipartFormDataItems{{"image", "x", "a", ""}});
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
}

TEST(HttpTransportTest, TimeoutAndRefusedConnection) {
  testing::MockInferenceServer server;
  server.AddFixture(kImage, ValidBody());
  server.SetDelay(Millis{1500});
  HttpTransport transport;
  EXPECT_EQ(transport.PostAnalyze(server.url(), kImage, Millis{200}, "").failure,
            TransportFailure::kTimeout);

  EXPECT_EQ(transport.PostAnalyze("http://127.0.0.1:" + std::to_string(testing::UnusedPort()),
                                  kImage,
                                  Millis{2000}, "")
                .failure,
            TransportFailure::kConnection);
}

TEST(HttpTransportTest, GatewayRetriesAgainstRealServer) {
  testing::MockInferenceServer server;
  server.AddFixture(kImage, ValidBody());
  server.SetStatusScript({503});
  Gateway gateway(std::make_shared<HttpTransport>(), Vocabulary::Default(), [](Millis) {});
  const AnalyzeResult r = gateway.Analyze(kImage, Config(server.url()));
  EXPECT_EQ(r.attempts, 2);
  EXPECT_EQ(server.requests(), 2);
}

}  // namespace
}  // namespace fashiontag
