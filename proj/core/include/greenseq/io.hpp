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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "greenseq/exchange_matrix.hpp"
#include "greenseq/search.hpp"

namespace greenseq::io {

// Text quiver format:
//   n m
//   n rows of n+m integers
//   [D: d_1 ... d_n]
ExchangeMatrix parse_text(std::string_view text);
std::string to_text(const ExchangeMatrix& b);

// {"n":..., "m":..., "matrix":[[...]], "symmetrizer":[...]}
ExchangeMatrix from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExchangeMatrix& b);

// Either format, chosen by the first non-blank character.
ExchangeMatrix parse_quiver(std::string_view text);
ExchangeMatrix read_quiver_file(const std::filesystem::path& path);

// Mutable vertices as circles (green/red when the matrix is framed-like and
// sign-coherent), frozen vertices as squares, multiplicity labels on
// multi-arrows.
std::string quiver_dot(const IceQuiver& q);

// Node id = short hash of the canonical key, annotated with its green count.
// Edge labels use the discovery labeling of the source node (one-based).
std::string dag_dot(const SearchDag& dag);
// One line per edge: "src_hash vertex dst_hash".
std::string dag_edge_list(const SearchDag& dag);
std::string exchange_graph_dot(const ExchangeGraph& g);

// Rows from l_min to the deepest explored length, zeros included.
std::string histogram_csv(const LengthHistogram& h);
std::string histogram_text(const LengthHistogram& h);
nlohmann::json histogram_json(const LengthHistogram& h);

// "1,2,3" (one-based).
std::string sequence_line(const std::vector<int>& vertices);
// Accepts commas and/or whitespace; returns zero-based labels.
std::vector<int> parse_sequence(std::string_view text);
std::string permutation_line(const Permutation& p);

}  // namespace greenseq::io
