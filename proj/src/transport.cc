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

#include "fashiontag/transport.h"

#include "fashiontag/errors.h"
#include "httplib.h"

namespace fashiontag {
namespace {

void ApplyTimeouts(httplib::Client& client, std::chrono::milliseconds timeout) {
  const auto sec = static_cast<time_t>(timeout.count() / 1000);
  const auto usec = static_cast<time_t>((timeout.count() % 1000) * 1000);
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
}

}  // namespace

EndpointParts SplitEndpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw DataError("endpoint URL '" + url + "' has no scheme");
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw DataError("endpoint URL '" + url + "' must use http or https");
  }
  const auto host_start = scheme_end + 3;
  const auto path_start = url.find('/', host_start);
  EndpointParts parts;
  parts.scheme_host_port = url.substr(0, path_start);
  if (parts.scheme_host_port.size() <= host_start) {
    throw DataError("endpoint URL '" + url + "' has no host");
  }
  if (path_start != std::string::npos) {
    parts.path_prefix = url.substr(path_start);
    while (!parts.path_prefix.empty() && parts.path_prefix.back() == '/') {
      parts.path_prefix.pop_back();
    }
  }
  return parts;
}

TransportResult HttpTransport::PostAnalyze(const std::string& endpoint_url,
                                           std::string_view image,
                                           std::chrono::milliseconds timeout,
                                           const std::string& api_key) {
  TransportResult result;
  EndpointParts parts;
  try {
    parts = SplitEndpoint(endpoint_url);
  } catch (const DataError& e) {
    result.failure = TransportFailure::kConnection;
    result.error = e.what();
    return result;
  }
  httplib::Client client(parts.scheme_host_port);
  ApplyTimeouts(client, timeout);
  httplib::Headers headers;
  if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);
  httplib::MultipartFormDataItems items = {
      {"file", std::string(image), "image", "application/octet-stream"}};

  auto response = client.Post(parts.path_prefix + "/analyze", headers, items);
  if (!response) {
    const auto err = response.error();
    result.error = httplib::to_string(err);
    result.failure = (err == httplib::Error::Read || err == httplib::Error::Write ||
                      err == httplib::Error::ConnectionTimeout)
                         ? TransportFailure::kTimeout
                         : TransportFailure::kConnection;
    return result;
  }
  result.status = response->status;
  result.body = response->body;
  return result;
}

std::string HttpGet(const std::string& url, std::chrono::milliseconds timeout) {
  const EndpointParts parts = SplitEndpoint(url);
  httplib::Client client(parts.scheme_host_port);
  ApplyTimeouts(client, timeout);
  auto response = client.Get(parts.path_prefix.empty() ? "/" : parts.path_prefix);
  if (!response) {
    throw DataError("GET " + url + " failed: " + httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw DataError("GET " + url + " returned HTTP " + std::to_string(response->status));
  }
  return response->body;
}

}  // namespace fashiontag
