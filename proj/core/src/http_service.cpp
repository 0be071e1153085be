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

#include "greenseq/http_service.hpp"

#include <httplib.h>

#include "greenseq/catalog.hpp"
#include "greenseq/io.hpp"

namespace greenseq::service {
namespace {

using nlohmann::json;

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(body.dump(), "application/json");
}

// Maps engine errors onto HTTP statuses.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const NotGreenError& e) {
    reply(res, 409, {{"error", "not_green"}, {"vertex", e.vertex() + 1}, {"c_vector", e.c_vector()}});
  } catch (const UnknownSessionError& e) {
    reply(res, 404, {{"error", "unknown_session"}, {"message", e.what()}});
  } catch (const EmptyHistoryError& e) {
    reply(res, 409, {{"error", "empty_history"}, {"message", e.what()}});
  } catch (const InputError& e) {
    reply(res, 400, {{"error", "bad_request"}, {"message", e.what()}});
  } catch (const json::exception& e) {
    reply(res, 400, {{"error", "bad_request"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    reply(res, 500, {{"error", "internal"}, {"message", e.what()}});
  }
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& manager) {
  server.Post("/sessions", [&manager](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = json::parse(req.body);
      ExchangeMatrix base;
      std::string name;
      if (body.contains("catalog")) {
        name = body.at("catalog").get<std::string>();
        base = catalog::make(catalog::lookup(name).spec).matrix;
      } else if (body.contains("quiver")) {
        base = io::from_json(body.at("quiver"));
      } else {
        throw InputError("body needs \"catalog\" or \"quiver\"");
      }
      Snapshot s = manager.create(base, name);
      reply(res, 201, {{"id", s.id}, {"snapshot", to_json(s)}});
    });
  });

  server.Post(R"(/sessions/([0-9a-f]+)/mutate)", [&manager](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = json::parse(req.body);
      const int vertex = body.at("vertex").get<int>();
      reply(res, 200, {{"snapshot", to_json(manager.mutate(req.matches[1], vertex - 1))}});
    });
  });

  server.Post(R"(/sessions/([0-9a-f]+)/undo)", [&manager](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { reply(res, 200, {{"snapshot", to_json(manager.undo(req.matches[1]))}}); });
  });

  server.Get(R"(/sessions/([0-9a-f]+))", [&manager](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { reply(res, 200, {{"snapshot", to_json(manager.get(req.matches[1]))}}); });
  });

  server.Get(R"(/sessions/([0-9a-f]+)/hints)", [&manager](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::optional<int> depth;
      if (req.has_param("depth")) {
        try {
          depth = std::stoi(req.get_param_value("depth"));
        } catch (const std::exception&) {
          throw InputError("depth must be an integer");
        }
      }
      HintReport report = manager.hints(req.matches[1], depth);
      json hints = json::array();
      for (const auto& h : report.hints) hints.push_back({{"vertex", h.vertex + 1}, {"completes", h.completes}});
      reply(res, 200,
            {{"depth", report.depth},
             {"label", "completion within depth " + std::to_string(report.depth)},
             {"hints", hints}});
    });
  });

  server.Get("/catalog", [](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] {
      json list = json::array();
      for (const auto& e : catalog::entries())
        list.push_back({{"name", e.name},
                        {"description", e.description},
                        {"n", catalog::make(e.spec).matrix.mutable_count()}});
      reply(res, 200, list);
    });
  });
}

bool serve(const std::string& host, int port, SessionManager& manager) {
  httplib::Server server;
  register_routes(server, manager);
  return server.listen(host, port);
}

}  // namespace greenseq::service
