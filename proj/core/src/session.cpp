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

#include "greenseq/session.hpp"

#include <random>

#include "greenseq/canonical.hpp"
#include "greenseq/io.hpp"
#include "greenseq/search.hpp"

namespace greenseq::service {
namespace {

std::string new_token() {
  static std::mutex mutex;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mutex);
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

}  // namespace

nlohmann::json to_json(const Snapshot& s) {
  nlohmann::json j;
  j["id"] = s.id;
  j["name"] = s.name;
  j["n"] = s.matrix.mutable_count();
  j["m"] = s.matrix.frozen_count();
  j["matrix"] = s.matrix.rows();
  if (s.matrix.has_symmetrizer()) j["symmetrizer"] = s.matrix.symmetrizer();
  nlohmann::json colors = nlohmann::json::array();
  for (VertexColor c : s.colors) colors.push_back(c == VertexColor::Green ? "green" : "red");
  j["colors"] = colors;
  const CMatrix c = c_matrix(s.matrix);
  nlohmann::json cm = nlohmann::json::array();
  for (int i = 0; i < c.size(); ++i) {
    auto r = c.row(i);
    cm.push_back(std::vector<Entry>(r.begin(), r.end()));
  }
  j["c_matrix"] = cm;
  j["moves"] = one_based(s.moves);
  j["sequence"] = one_based(s.sequence);
  j["status"] = s.status == SessionStatus::MaximalGreenComplete ? "maximal-green-complete" : "in-progress";
  if (s.terminal_perm) j["terminal_perm"] = one_based(*s.terminal_perm);
  return j;
}

SessionManager::SessionManager(ManagerOptions options) : options_(std::move(options)) {}

Snapshot SessionManager::snapshot(const Session& s) {
  Snapshot out;
  out.id = s.id;
  out.name = s.name;
  out.base = s.base;
  out.matrix = s.current;
  out.colors = vertex_colors(s.current);
  for (std::size_t i = 0; i < out.colors.size(); ++i)
    if (out.colors[i] == VertexColor::Green) out.moves.push_back(static_cast<int>(i));
  for (const auto& [v, hash] : s.history) out.sequence.push_back(v);
  if (out.moves.empty()) {
    out.status = SessionStatus::MaximalGreenComplete;
    out.terminal_perm = verify_sequence(s.base, out.sequence).terminal_perm;
  }
  return out;
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw UnknownSessionError("unknown session '" + id + "'");
  return it->second;
}

Snapshot SessionManager::create(const ExchangeMatrix& base, std::string name) {
  auto s = std::make_shared<Session>();
  s->id = new_token();
  s->name = std::move(name);
  s->base = base;
  s->current = framed(base);
  s->last_access = options_.clock();
  Snapshot snap = snapshot(*s);
  expire_idle();
  std::lock_guard lock(mutex_);
  sessions_.emplace(s->id, s);
  return snap;
}

Snapshot SessionManager::mutate(const std::string& id, int vertex) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = options_.clock();
  if (vertex < 0 || vertex >= s->current.mutable_count())
    throw InputError("vertex " + std::to_string(vertex + 1) + " out of range");
  if (vertex_color(s->current, vertex) != VertexColor::Green) {
    auto c = s->current.frozen_row(vertex);
    throw NotGreenError(vertex, std::vector<Entry>(c.begin(), c.end()));
  }
  ExchangeMatrix next = greenseq::mutate(s->current, vertex);
  s->history.emplace_back(vertex, short_hash_hex(canonical_key(s->current).bytes));
  s->prior_states.push_back(std::move(s->current));
  s->current = std::move(next);
  return snapshot(*s);
}

Snapshot SessionManager::undo(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = options_.clock();
  if (s->history.empty()) throw EmptyHistoryError("nothing to undo");
  s->current = std::move(s->prior_states.back());
  s->prior_states.pop_back();
  s->history.pop_back();
  return snapshot(*s);
}

Snapshot SessionManager::get(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = options_.clock();
  return snapshot(*s);
}

HintReport SessionManager::hints(const std::string& id, std::optional<int> depth) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = options_.clock();
  HintReport report;
  report.depth = depth.value_or(options_.default_hint_depth > 0 ? options_.default_hint_depth
                                                                 : 2 * s->base.mutable_count());
  if (report.depth < 0) throw InputError("hint depth must be non-negative");
  for (int v : green_vertices(s->current))
    report.hints.push_back({v, completes_within(greenseq::mutate(s->current, v), report.depth)});
  return report;
}

std::size_t SessionManager::expire_idle() {
  const auto now = options_.clock();
  std::lock_guard lock(mutex_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
    if (session_lock.owns_lock() && now - it->second->last_access > options_.idle_ttl) {
      session_lock.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace greenseq::service
