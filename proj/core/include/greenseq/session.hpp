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

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "greenseq/error.hpp"
#include "greenseq/exchange_matrix.hpp"

namespace greenseq::service {

class UnknownSessionError : public Error {
 public:
  using Error::Error;
};

// Mutation at a red vertex was refused; the state is unchanged.
class NotGreenError : public Error {
 public:
  NotGreenError(int vertex, std::vector<Entry> c_vector)
      : Error("vertex " + std::to_string(vertex + 1) + " is not green"), vertex_(vertex), c_vector_(std::move(c_vector)) {}
  int vertex() const { return vertex_; }
  const std::vector<Entry>& c_vector() const { return c_vector_; }

 private:
  int vertex_;
  std::vector<Entry> c_vector_;
};

class EmptyHistoryError : public Error {
 public:
  using Error::Error;
};

enum class SessionStatus { InProgress, MaximalGreenComplete };

// Immutable view of a session after an operation.
struct Snapshot {
  std::string id;
  std::string name;
  ExchangeMatrix base;
  ExchangeMatrix matrix;
  std::vector<VertexColor> colors;
  std::vector<int> moves;     // green vertices, zero-based
  std::vector<int> sequence;  // recorded mutations, zero-based
  SessionStatus status = SessionStatus::InProgress;
  std::optional<Permutation> terminal_perm;
};

// Wire form: one-based labels, {matrix, n, m, colors, c_matrix, moves,
// sequence, status, terminal_perm?}.
nlohmann::json to_json(const Snapshot& s);

struct Hint {
  int vertex;      // zero-based green vertex
  bool completes;  // an all-red state is reachable within `depth` green steps after it
};

struct HintReport {
  int depth;
  std::vector<Hint> hints;
};

struct ManagerOptions {
  std::chrono::seconds idle_ttl{3600};
  // Residual depth for hints; 0 means 2n.
  int default_hint_depth = 0;
  std::function<std::chrono::steady_clock::time_point()> clock = [] { return std::chrono::steady_clock::now(); };
};

// In-memory sessions. Sessions are independent; calls on one session are
// serialized by its own mutex.
class SessionManager {
 public:
  explicit SessionManager(ManagerOptions options = {});

  // base must have no frozen vertices; the session starts at framed(base).
  Snapshot create(const ExchangeMatrix& base, std::string name = {});
  Snapshot mutate(const std::string& id, int vertex);
  Snapshot undo(const std::string& id);
  Snapshot get(const std::string& id);
  HintReport hints(const std::string& id, std::optional<int> depth = std::nullopt);

  // Drops sessions idle for longer than the configured ttl; returns how many.
  std::size_t expire_idle();
  std::size_t size() const;

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    std::string name;
    ExchangeMatrix base;
    ExchangeMatrix current;
    // (vertex, canonical-key hash of the state before the step)
    std::vector<std::pair<int, std::string>> history;
    std::vector<ExchangeMatrix> prior_states;
    std::chrono::steady_clock::time_point last_access;
  };

  std::shared_ptr<Session> find(const std::string& id);
  static Snapshot snapshot(const Session& s);

  ManagerOptions options_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace greenseq::service
