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

#ifndef BENCHAGG_SERVICE_SERVER_HPP_
#define BENCHAGG_SERVICE_SERVER_HPP_

#include <memory>
#include <string>

#include "service/store.hpp"

namespace benchagg::service {

// HTTP front of ApiRouter.
class HttpServer {
 public:
  explicit HttpServer(Store& store);
  ~HttpServer();

  // Binds (port 0 picks a free port) and returns the bound port. Throws kIo.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); blocking.
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Bind + Run; prints nothing.
void serve_api(Store& store, const std::string& host, int port);

}  // namespace benchagg::service

#endif  // BENCHAGG_SERVICE_SERVER_HPP_
