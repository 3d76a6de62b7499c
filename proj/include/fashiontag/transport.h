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

#ifndef FASHIONTAG_TRANSPORT_H_
#define FASHIONTAG_TRANSPORT_H_

#include <chrono>
#include <string>
#include <string_view>

namespace fashiontag {

enum class TransportFailure {
  kNone,        // a response arrived; see status
  kTimeout,     // no response within the timeout
  kConnection,  // could not connect or the connection dropped
};

struct TransportResult {
  TransportFailure failure = TransportFailure::kNone;
  int status = 0;
  std::string body;
  std::string error;
};

// One outbound analyze request. Implementations must be safe to call from
// several threads at once.
class Transport {
 public:
  virtual ~Transport() = default;

  // POST {endpoint_url}/analyze as multipart/form-data with the image in a
  // single part named "file". A non-empty `api_key` is sent as a bearer
  // token.
  virtual TransportResult PostAnalyze(const std::string& endpoint_url,
                                      std::string_view image,
                                      std::chrono::milliseconds timeout,
                                      const std::string& api_key) = 0;
};

// cpp-httplib backed transport; http and https endpoints, optional path
// prefix (e.g. "https://host/space" posts to "/space/analyze").
class HttpTransport : public Transport {
 public:
  TransportResult PostAnalyze(const std::string& endpoint_url, std::string_view image,
                              std::chrono::milliseconds timeout,
                              const std::string& api_key) override;
};

struct EndpointParts {
  std::string scheme_host_port;
  std::string path_prefix;  // no trailing slash; empty for the root
};

// Splits "scheme://host[:port][/prefix]". Throws DataError on URLs without
// an http(s) scheme or host.
EndpointParts SplitEndpoint(const std::string& url);

// GET a URL and return the body; throws DataError on failure or non-200.
std::string HttpGet(const std::string& url, std::chrono::milliseconds timeout);

}  // namespace fashiontag

#endif  // FASHIONTAG_TRANSPORT_H_
