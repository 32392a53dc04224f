// Copyright 2026 The benchagg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "service/server.hpp"

#include "common/error.hpp"
#include "httplib.h"
#include "service/api.hpp"

namespace benchagg::service {

struct HttpServer::Impl {
  explicit Impl(Store& store) : router(store) {}
  ApiRouter router;
  httplib::Server server;
};

HttpServer::HttpServer(Store& store) : impl_(std::make_unique<Impl>(store)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = impl_->router.Handle(req.method, req.target, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    Require(bound > 0, ErrorCode::kIo, "serve: cannot bind " + host);
    return bound;
  }
  Require(impl_->server.bind_to_port(host, port), ErrorCode::kIo,
          "serve: cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::Run() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void serve_api(Store& store, const std::string& host, int port) {
  HttpServer server(store);
  server.Bind(host, port);
  server.Run();
}

}  // namespace benchagg::service
