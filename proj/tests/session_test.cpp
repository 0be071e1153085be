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

#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>

#include "greenseq/catalog.hpp"
#include "greenseq/http_service.hpp"
#include "greenseq/session.hpp"

namespace {

using namespace greenseq;
using namespace greenseq::service;
using nlohmann::json;

ExchangeMatrix quiver(const std::string& name) { return catalog::make(catalog::lookup(name).spec).matrix; }

TEST(Sessions, A2ToCompletion) {
  SessionManager mgr;
  auto s = mgr.create(quiver("a2"), "a2");
  EXPECT_EQ(s.id.size(), 32u);
  EXPECT_EQ(s.moves, (std::vector<int>{0, 1}));
  EXPECT_EQ(s.status, SessionStatus::InProgress);
  s = mgr.mutate(s.id, 0);
  EXPECT_EQ(s.moves, (std::vector<int>{1}));
  s = mgr.mutate(s.id, 1);
  EXPECT_EQ(s.status, SessionStatus::MaximalGreenComplete);
  EXPECT_TRUE(s.moves.empty());
  EXPECT_EQ(s.sequence, (std::vector<int>{0, 1}));
  ASSERT_TRUE(s.terminal_perm.has_value());
  EXPECT_EQ(*s.terminal_perm, identity_permutation(2));
}

TEST(Sessions, CycleColorStates) {
  SessionManager mgr;
  auto s = mgr.create(quiver("cycle3"));
  const std::vector<std::vector<int>> greens = {{1, 2}, {0, 2}, {0}, {}};
  int step = 0;
  for (int v : {0, 1, 2, 0}) {
    s = mgr.mutate(s.id, v);
    EXPECT_EQ(s.moves, greens[step]) << "after step " << step + 1;
    ++step;
  }
  EXPECT_EQ(s.status, SessionStatus::MaximalGreenComplete);
}

TEST(Sessions, RedVertexIsRefusedWithoutChange) {
  SessionManager mgr;
  auto s = mgr.create(quiver("a2"));
  s = mgr.mutate(s.id, 0);
  const auto before = mgr.get(s.id);
  try {
    mgr.mutate(s.id, 0);
    FAIL() << "expected NotGreenError";
  } catch (const NotGreenError& e) {
    EXPECT_EQ(e.vertex(), 0);
    EXPECT_EQ(e.c_vector(), (std::vector<Entry>{-1, 0}));
  }
  const auto after = mgr.get(s.id);
  EXPECT_EQ(after.matrix, before.matrix);
  EXPECT_EQ(after.sequence, before.sequence);
  EXPECT_THROW(mgr.mutate(s.id, 5), InputError);
}

TEST(Sessions, UndoRestoresPriorSnapshot) {
  SessionManager mgr;
  auto s0 = mgr.create(quiver("a3-linear"));
  auto s1 = mgr.mutate(s0.id, 1);
  auto s2 = mgr.mutate(s0.id, 0);
  EXPECT_EQ(mgr.undo(s0.id).matrix, s1.matrix);
  EXPECT_EQ(mgr.undo(s0.id).matrix, s0.matrix);
  EXPECT_THROW(mgr.undo(s0.id), EmptyHistoryError);
  EXPECT_NE(s2.matrix, s0.matrix);
}

TEST(Sessions, UnknownAndExpired) {
  auto now = std::chrono::steady_clock::time_point{};
  ManagerOptions o;
  o.idle_ttl = std::chrono::seconds(10);
  o.clock = [&now] { return now; };
  SessionManager mgr(o);
  EXPECT_THROW(mgr.get("feed"), UnknownSessionError);
  auto a = mgr.create(quiver("a2"));
  now += std::chrono::seconds(5);
  auto b = mgr.create(quiver("a2"));
  EXPECT_EQ(mgr.size(), 2u);
  now += std::chrono::seconds(8);
  EXPECT_EQ(mgr.expire_idle(), 1u);
  EXPECT_THROW(mgr.get(a.id), UnknownSessionError);
  EXPECT_NO_THROW(mgr.get(b.id));
}

TEST(Sessions, Hints) {
  SessionManager mgr;
  auto s = mgr.create(quiver("a2"));
  auto h = mgr.hints(s.id, 1);
  ASSERT_EQ(h.hints.size(), 2u);
  EXPECT_TRUE(h.hints[0].completes);   // 1 then 2
  EXPECT_FALSE(h.hints[1].completes);  // 2 needs two more steps
  h = mgr.hints(s.id);
  EXPECT_EQ(h.depth, 4);
  EXPECT_TRUE(h.hints[1].completes);
  EXPECT_THROW(mgr.hints(s.id, -1), InputError);
  auto m = mgr.create(quiver("markov"));
  for (const auto& hint : mgr.hints(m.id, 4).hints) EXPECT_FALSE(hint.completes);
}

TEST(Sessions, JsonSnapshot) {
  SessionManager mgr;
  auto s = mgr.create(quiver("a2"), "a2");
  s = mgr.mutate(s.id, 1);
  const json j = to_json(s);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["colors"], json({"green", "red"}));
  EXPECT_EQ(j["moves"], json({1}));
  EXPECT_EQ(j["sequence"], json({2}));
  EXPECT_EQ(j["c_matrix"], json({{1, 1}, {0, -1}}));
  EXPECT_EQ(j["status"], "in-progress");
}

class HttpApi : public ::testing::Test {
 protected:
  void SetUp() override {
    register_routes(server_, mgr_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  httplib::Result post(const std::string& path, const json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }

  SessionManager mgr_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpApi, FullSession) {
  auto res = post("/sessions", {{"catalog", "a2"}});
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 201);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  const std::string id = json::parse(res->body)["id"];
  const std::string base = "/sessions/" + id;

  res = post(base + "/mutate", {{"vertex", 1}});
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["snapshot"]["moves"], json({2}));

  const auto before = client_->Get(base);
  res = post(base + "/mutate", {{"vertex", 1}});
  ASSERT_EQ(res->status, 409);
  const json refused = json::parse(res->body);
  EXPECT_EQ(refused["error"], "not_green");
  EXPECT_EQ(refused["vertex"], 1);
  EXPECT_EQ(refused["c_vector"], json({-1, 0}));
  EXPECT_EQ(client_->Get(base)->body, before->body);

  res = client_->Get(base + "/hints?depth=1");
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["hints"], json::parse(R"([{"vertex":2,"completes":true}])"));

  res = post(base + "/mutate", {{"vertex", 2}});
  ASSERT_EQ(res->status, 200);
  const json done = json::parse(res->body)["snapshot"];
  EXPECT_EQ(done["status"], "maximal-green-complete");
  EXPECT_EQ(done["terminal_perm"], json({1, 2}));

  res = post(base + "/undo", json::object());
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["snapshot"]["status"], "in-progress");
}

TEST_F(HttpApi, Errors) {
  auto res = client_->Get("/sessions/abc123");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(json::parse(res->body)["error"], "unknown_session");
  EXPECT_EQ(post("/sessions", {{"catalog", "nope"}})->status, 400);
  EXPECT_EQ(client_->Post("/sessions", "{not json", "application/json")->status, 400);
  EXPECT_EQ(post("/sessions", json::object())->status, 400);

  const std::string id = json::parse(post("/sessions", {{"catalog", "a2"}})->body)["id"];
  res = post("/sessions/" + id + "/undo", json::object());
  EXPECT_EQ(res->status, 409);
  EXPECT_EQ(json::parse(res->body)["error"], "empty_history");
  EXPECT_EQ(post("/sessions/" + id + "/mutate", {{"vertex", 9}})->status, 400);
  EXPECT_EQ(client_->Get("/sessions/" + id + "/hints?depth=x")->status, 400);
}

TEST_F(HttpApi, CustomQuiverAndCatalog) {
  const json body = {{"quiver", {{"n", 2}, {"m", 0}, {"matrix", {{0, 1}, {-2, 0}}}, {"symmetrizer", {2, 1}}}}};
  auto res = post("/sessions", body);
  ASSERT_EQ(res->status, 201);
  EXPECT_EQ(json::parse(res->body)["snapshot"]["symmetrizer"], json({2, 1}));
  res = client_->Get("/catalog");
  ASSERT_EQ(res->status, 200);
  const json list = json::parse(res->body);
  EXPECT_EQ(list.size(), catalog::entries().size());
  EXPECT_EQ(list[0]["name"], "a1");
}

}  // namespace
