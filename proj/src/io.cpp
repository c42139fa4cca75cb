// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ortholoc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ortholoc/caps.hpp"
#include "ortholoc/error.hpp"

namespace ortholoc {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Poset poset_from_json(const std::string& text) {
  json j = parse_json(text);
  try {
    int n = j.at("n").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    std::vector<std::pair<int, int>> cover_list;
    for (const auto& pair : j.at("covers")) {
      require(pair.is_array() && pair.size() == 2, Errc::parse_error,
              "cover entries must be [lower, upper] pairs");
      cover_list.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return poset_from_covers(n, cover_list, std::move(labels));
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad poset file: ") + e.what());
  }
}

std::string poset_to_json(const Poset& p) {
  json j;
  j["n"] = p.n;
  if (!p.labels.empty()) j["labels"] = p.labels;
  json cover_list = json::array();
  for (const auto& [lo, hi] : covers(p)) cover_list.push_back({lo, hi});
  j["covers"] = cover_list;
  return dump(j);
}

LocalityRelation relation_from_json(const std::string& text, LatticePtr host) {
  json j = parse_json(text);
  try {
    int n = j.at("n").get<int>();
    require(host != nullptr && host->size() == n, Errc::host_mismatch,
            "relation carrier size does not match the host lattice");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pair : j.at("pairs")) {
      require(pair.is_array() && pair.size() == 2, Errc::parse_error,
              "relation entries must be [i, j] pairs");
      pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return LocalityRelation::from_pairs(std::move(host), pairs);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad relation file: ") + e.what());
  }
}

std::string relation_to_json(const LocalityRelation& r) {
  json j;
  j["n"] = r.size();
  json pairs = json::array();
  for (int i = 0; i < r.size(); ++i) {
    for (int k = i; k < r.size(); ++k) {
      if (r.related(i, k)) pairs.push_back({i, k});
    }
  }
  j["pairs"] = pairs;
  return dump(j);
}

Orthocomplementation ortho_from_json(const std::string& text,
                                     LatticePtr host) {
  json j = parse_json(text);
  try {
    int n = j.at("n").get<int>();
    require(host != nullptr && host->size() == n, Errc::host_mismatch,
            "map carrier size does not match the host lattice");
    std::vector<int> psi = j.at("psi").get<std::vector<int>>();
    return validate_orthocomplementation(std::move(host), std::move(psi));
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad orthocomplementation file: ") +
                                e.what());
  }
}

std::string ortho_to_json(const Orthocomplementation& o) {
  json j;
  j["n"] = o.size();
  j["psi"] = o.map();
  return dump(j);
}

std::string poset_to_dot(const Poset& p) {
  // Height above the minimal elements, by fixpoint over covers.
  std::vector<std::pair<int, int>> edges = covers(p);
  std::vector<int> height(static_cast<std::size_t>(p.n), 0);
  for (int pass = 0; pass < p.n; ++pass) {
    bool changed = false;
    for (const auto& [lo, hi] : edges) {
      if (height[static_cast<std::size_t>(hi)] <
          height[static_cast<std::size_t>(lo)] + 1) {
        height[static_cast<std::size_t>(hi)] =
            height[static_cast<std::size_t>(lo)] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  int max_height = 0;
  for (int h : height) max_height = std::max(max_height, h);

  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int a = 0; a < p.n; ++a) {
    out << "  n" << a << " [label=\"" << p.label(a) << "\"];\n";
  }
  for (int h = 0; h <= max_height; ++h) {
    out << "  { rank=same;";
    for (int a = 0; a < p.n; ++a) {
      if (height[static_cast<std::size_t>(a)] == h) out << " n" << a << ";";
    }
    out << " }\n";
  }
  for (const auto& [lo, hi] : edges) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::io_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), Errc::io_error, "cannot write " + path);
  out << text;
  require(out.good(), Errc::io_error, "failed while writing " + path);
}

Poset read_poset_file(const std::string& path) {
  return poset_from_json(read_text_file(path));
}

LatticePtr read_lattice_file(const std::string& path) {
  return build_lattice(read_poset_file(path));
}

LocalityRelation read_relation_file(const std::string& path, LatticePtr host) {
  return relation_from_json(read_text_file(path), std::move(host));
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

PosetDigest poset_digest(const Poset& p) {
  if (p.n <= enumeration_cap()) {
    return {to_hex(canonical_form(p)), true};
  }
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(p.n));
  int bit = 0;
  std::uint8_t current = 0;
  for (std::uint8_t v : p.leq) {
    current = static_cast<std::uint8_t>((current << 1) | (v ? 1 : 0));
    if (++bit % 8 == 0) {
      bytes.push_back(current);
      current = 0;
    }
  }
  if (bit % 8 != 0) {
    current = static_cast<std::uint8_t>(current << (8 - bit % 8));
    bytes.push_back(current);
  }
  return {to_hex(bytes), false};
}

}  // namespace ortholoc
