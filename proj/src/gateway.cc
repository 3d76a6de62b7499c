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

#include "fashiontag/gateway.h"

#include <thread>

#include "fashiontag/errors.h"

namespace fashiontag {

void BackendConfig::Validate() const {
  if (endpoint_url.empty()) throw DataError("backend endpoint URL is empty");
  if (max_retries < 0) throw DataError("max_retries must be >= 0");
  if (initial_timeout.count() <= 0 || subsequent_timeout.count() <= 0) {
    throw DataError("backend timeouts must be positive");
  }
  for (const auto& pause : retry_backoff) {
    if (pause.count() < 0) throw DataError("retry backoff must be non-negative");
  }
}

Millis BackendConfig::BackoffBefore(int retry) const {
  if (retry_backoff.empty()) return Millis{0};
  const auto index = std::min<size_t>(static_cast<size_t>(retry - 1), retry_backoff.size() - 1);
  return retry_backoff[index];
}

std::string_view ToString(BackendUsed backend) {
  return backend == BackendUsed::kPrimary ? "primary" : "fallback";
}

std::string_view ToString(BackendErrorKind kind) {
  switch (kind) {
    case BackendErrorKind::kUnavailable:
      return "backend_unavailable";
    case BackendErrorKind::kMalformedOutput:
      return "malformed_output";
    case BackendErrorKind::kHttpError:
      return "http_error";
  }
  return "backend_error";
}

BackendError::BackendError(BackendErrorKind kind, std::string endpoint, int attempts,
                           const std::string& message, std::string raw_text)
    : std::runtime_error(std::string(ToString(kind)) + " from " + endpoint + " after " +
                         std::to_string(attempts) + " attempt(s): " + message),
      kind_(kind),
      endpoint_(std::move(endpoint)),
      attempts_(attempts),
      raw_text_(std::move(raw_text)) {}

FallbackExhaustedError::FallbackExhaustedError(BackendError primary, BackendError fallback)
    : std::runtime_error("primary failed (" + std::string(primary.what()) +
                         "); fallback failed (" + fallback.what() + ")"),
      primary_(std::move(primary)),
      fallback_(std::move(fallback)) {}

Gateway::Gateway(std::shared_ptr<Transport> transport, const Vocabulary& vocab,
                 Sleeper sleeper)
    : transport_(std::move(transport)), vocab_(vocab), sleeper_(std::move(sleeper)) {
  if (!sleeper_) sleeper_ = [](Millis d) { std::this_thread::sleep_for(d); };
}

AnalyzeResult Gateway::Analyze(std::string_view image, const BackendConfig& config) const {
  if (image.empty()) throw DataError("image is empty");
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  std::string last_error;
  int attempts = 0;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    if (attempt > 0) sleeper_(config.BackoffBefore(attempt));
    ++attempts;
    const Millis timeout = attempt == 0 ? config.initial_timeout : config.subsequent_timeout;
    TransportResult response =
        transport_->PostAnalyze(config.endpoint_url, image, timeout, config.api_key);

    if (response.failure == TransportFailure::kTimeout) {
      last_error = "timeout after " + std::to_string(timeout.count()) + " ms";
      continue;
    }
    if (response.failure == TransportFailure::kConnection) {
      last_error = "connection failed: " + response.error;
      continue;
    }
    if (response.status == 503) {
      last_error = "HTTP 503 (backend sleeping)";
      continue;
    }
    if (response.status != 200) {
      throw BackendError(BackendErrorKind::kHttpError, config.endpoint_url, attempts,
                         "HTTP " + std::to_string(response.status), response.body);
    }

    ParseReport parsed = ParseStrict(response.body, vocab_, ParseMode::kVocabularyChecked);
    if (!parsed.valid()) {
      throw BackendError(BackendErrorKind::kMalformedOutput, config.endpoint_url, attempts,
                         std::string(ToString(parsed.outcome)) + ": " + parsed.detail,
                         response.body);
    }
    AnalyzeResult result;
    result.record = std::move(*parsed.record);
    result.raw_text = std::move(response.body);
    result.attempts = attempts;
    result.latency = std::chrono::steady_clock::now() - start;
    return result;
  }
  throw BackendError(BackendErrorKind::kUnavailable, config.endpoint_url, attempts,
                     last_error);
}

AnalyzeResult Gateway::AnalyzeWithFallback(std::string_view image, const BackendConfig& primary,
                                           const std::optional<BackendConfig>& fallback) const {
  const auto start = std::chrono::steady_clock::now();
  try {
    return Analyze(image, primary);
  } catch (const BackendError& primary_error) {
    if (!fallback) throw;
    try {
      AnalyzeResult result = Analyze(image, *fallback);
      result.backend_used = BackendUsed::kFallback;
      result.latency = std::chrono::steady_clock::now() - start;
      return result;
    } catch (const BackendError& fallback_error) {
      throw FallbackExhaustedError(primary_error, fallback_error);
    }
  }
}

}  // namespace fashiontag
