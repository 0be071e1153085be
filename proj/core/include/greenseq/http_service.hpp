// Copyright 2026 The greenseq Authors.
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

#pragma once

#include <string>

#include "greenseq/session.hpp"

namespace httplib {
class Server;
}

namespace greenseq::service {

// Routes:
//   POST /sessions                {"catalog":NAME} | {"quiver":{...}}
//   POST /sessions/{id}/mutate    {"vertex":k}      409 {"error":"not_green","c_vector":[...]}
//   POST /sessions/{id}/undo
//   GET  /sessions/{id}
//   GET  /sessions/{id}/hints?depth=d
//   GET  /catalog
void register_routes(httplib::Server& server, SessionManager& manager);

// Blocks until the server stops.
bool serve(const std::string& host, int port, SessionManager& manager);

}  // namespace greenseq::service
