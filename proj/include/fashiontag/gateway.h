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

#ifndef FASHIONTAG_GATEWAY_H_
#define FASHIONTAG_GATEWAY_H_

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fashiontag/record.h"
#include "fashiontag/transport.h"
#include "fashiontag/vocabulary.h"

namespace fashiontag {

using Millis = std::chrono::milliseconds;

// Connection policy for one inference backend. The first attempt gets the
// long initial timeout to absorb a cold start; retries use the shorter
// subsequent timeout. retry_backoff[i] is the pause before retry i+1, the
// last entry repeating.
struct BackendConfig {
  std::string endpoint_url;
  Millis initial_timeout{120'000};
  Millis subsequent_timeout{30'000};
  int max_retries = 2;
  std::vector<Millis> retry_backoff{Millis{2'000}};
  std::string api_key;

  // Throws DataError on an empty URL, negative retries or non-positive
  // timeouts.
  void Validate() const;
  Millis BackoffBefore(int retry) const;
};

enum class BackendUsed { kPrimary, kFallback };
std::string_view ToString(BackendUsed backend);

struct AnalyzeResult {
  AttributeRecord record;
  std::string raw_text;
  BackendUsed backend_used = BackendUsed::kPrimary;
  int attempts = 0;
  std::chrono::duration<double, std::milli> latency{0};
};

enum class BackendErrorKind {
  kUnavailable,      // 503, timeout or connection failure on every attempt
  kMalformedOutput,  // HTTP 200 whose body is not a valid record
  kHttpError,        // any other non-200 status
};
std::string_view ToString(BackendErrorKind kind);

class BackendError : public std::runtime_error {
 public:
  BackendError(BackendErrorKind kind, std::string endpoint, int attempts,
               const std::string& message, std::string raw_text = "");

  BackendErrorKind kind() const { return kind_; }
  const std::string& endpoint() const { return endpoint_; }
  int attempts() const { return attempts_; }
  const std::string& raw_text() const { return raw_text_; }

 private:
  BackendErrorKind kind_;
  std::string endpoint_;
  int attempts_;
  std::string raw_text_;
};

// Both the primary and the fallback backend failed.
class FallbackExhaustedError : public std::runtime_error {
 public:
  FallbackExhaustedError(BackendError primary, BackendError fallback);

  const BackendError& primary() const { return primary_; }
  const BackendError& fallback() const { return fallback_; }

 private:
  BackendError primary_;
  BackendError fallback_;
};

using Sleeper = std::function<void(Millis)>;

// Client for the `POST /analyze` inference contract. Stateless apart from
// its collaborators; Analyze may be called concurrently.
class Gateway {
 public:
  Gateway(std::shared_ptr<Transport> transport, const Vocabulary& vocab,
          Sleeper sleeper = nullptr);

  // Sends `image` to `config.endpoint_url`, retrying on 503, timeouts and
  // connection failures up to config.max_retries times. The body of a 200
  // is parsed with vocabulary checking. Throws BackendError.
  AnalyzeResult Analyze(std::string_view image, const BackendConfig& config) const;

  // Analyze against `primary`; on any BackendError, against `fallback`
  // when given. Throws BackendError (no fallback) or
  // FallbackExhaustedError.
  AnalyzeResult AnalyzeWithFallback(std::string_view image, const BackendConfig& primary,
                                    const std::optional<BackendConfig>& fallback) const;

  const Vocabulary& vocab() const { return vocab_; }

 private:
  std::shared_ptr<Transport> transport_;
  const Vocabulary& vocab_;
  Sleeper sleeper_;
};

}  // namespace fashiontag

#endif  // FASHIONTAG_GATEWAY_H_
