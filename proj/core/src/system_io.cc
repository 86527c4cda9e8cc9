// Copyright 2026 The netctrl Authors. All Rights Reserved.
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

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netctrl/errors.h"
#include "netctrl/system_model.h"

namespace netctrl {
namespace {

// Whitespace and '=' both separate tokens, so "n=9" and "n 9" are equivalent.
bool IsSeparator(char c) {
  return c == '=' || std::isspace(static_cast<unsigned char>(c));
}

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSeparator(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsSeparator(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long ParseInt(std::string_view token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw SyntaxError(line, "expected an integer, got '" +
                                std::string(token) + "'");
  return value;
}

// 1-based label in the file -> 0-based index.
int ParseNode(std::string_view token, int n, int line) {
  long long v = ParseInt(token, line);
  if (v < 1 || v > n) {
    throw ValidationError("line " + std::to_string(line) + ": node index " +
                          std::string(token) + " out of range 1.." +
                          std::to_string(n));
  }
  return static_cast<int>(v - 1);
}

// Gathers "input k ..." / "output k ..." lines keyed by k and checks that the
// keys are exactly 1..m.
std::optional<StructuredSystem::NodeSets> Columns(
    const std::map<long long, std::vector<int>>& by_key, const char* what) {
  if (by_key.empty()) return std::nullopt;
  StructuredSystem::NodeSets out;
  long long expected = 1;
  for (const auto& [k, nodes] : by_key) {
    if (k != expected) {
      throw ValidationError(std::string(what) + " indices must be 1.." +
                            std::to_string(by_key.size()) + "; missing " +
                            std::to_string(expected));
    }
    out.push_back(nodes);
    ++expected;
  }
  return out;
}

StructuredSystem ParseText(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<int> available;
  std::vector<int> targets;
  std::map<long long, std::vector<int>> inputs;
  std::map<long long, std::vector<int>> outputs;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = Tokenize(line);
    if (tokens.empty()) continue;

    std::string_view key = tokens[0];
    if (!n) {
      if (key != "n" || tokens.size() != 2)
        throw SyntaxError(line_no, "first directive must be 'n <count>'");
      long long count = ParseInt(tokens[1], line_no);
      if (count <= 0 || count > 100'000'000)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": node count must be positive");
      n = static_cast<int>(count);
      continue;
    }
    if (key == "n") {
      throw SyntaxError(line_no, "duplicate 'n' directive");
    } else if (key == "edge") {
      if (tokens.size() != 3)
        throw SyntaxError(line_no, "expected 'edge <i> <j>'");
      edges.push_back({ParseNode(tokens[1], *n, line_no),
                       ParseNode(tokens[2], *n, line_no)});
    } else if (key == "available" || key == "targets") {
      auto& set = key == "available" ? available : targets;
      for (std::size_t i = 1; i < tokens.size(); ++i)
        set.push_back(ParseNode(tokens[i], *n, line_no));
    } else if (key == "input" || key == "output") {
      if (tokens.size() < 2)
        throw SyntaxError(line_no, "expected '" + std::string(key) +
                                       " <k> <node>...'");
      long long k = ParseInt(tokens[1], line_no);
      if (k < 1)
        throw ValidationError("line " + std::to_string(line_no) + ": " +
                              std::string(key) + " index must be >= 1");
      auto& columns = key == "input" ? inputs : outputs;
      if (columns.contains(k))
        throw ValidationError("line " + std::to_string(line_no) +
                              ": duplicate " + std::string(key) + " " +
                              std::to_string(k));
      auto& nodes = columns[k];
      for (std::size_t i = 2; i < tokens.size(); ++i)
        nodes.push_back(ParseNode(tokens[i], *n, line_no));
    } else {
      throw SyntaxError(line_no,
                        "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!n) throw SyntaxError(line_no, "missing 'n <count>' directive");
  return StructuredSystem(*n, std::move(edges), std::move(available),
                          std::move(targets), Columns(inputs, "input"),
                          Columns(outputs, "output"));
}

std::vector<int> JsonNodes(const nlohmann::json& j, int n, const char* what) {
  if (!j.is_array())
    throw SyntaxError(0, std::string(what) + ": expected an array");
  std::vector<int> nodes;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw SyntaxError(0, std::string(what) + ": expected integers");
    long long x = v.get<long long>();
    if (x < 1 || x > n)
      throw ValidationError(std::string(what) + ": node index " +
                            std::to_string(x) + " out of range 1.." +
                            std::to_string(n));
    nodes.push_back(static_cast<int>(x - 1));
  }
  return nodes;
}

std::optional<StructuredSystem::NodeSets> JsonColumns(const nlohmann::json& j,
                                                      int n,
                                                      const char* what) {
  if (!j.is_array())
    throw SyntaxError(0, std::string(what) + ": expected an array of arrays");
  StructuredSystem::NodeSets out;
  for (const auto& column : j) out.push_back(JsonNodes(column, n, what));
  return out;
}

StructuredSystem ParseJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError(0, "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "edge" && key != "available" && key != "targets" &&
        key != "input" && key != "output")
      throw SyntaxError(0, "unknown field '" + key + "'");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw SyntaxError(0, "missing integer field 'n'");
  long long count = doc["n"].get<long long>();
  if (count <= 0 || count > 100'000'000)
    throw ValidationError("node count must be positive");
  const int n = static_cast<int>(count);

  std::vector<Edge> edges;
  if (doc.contains("edge")) {
    if (!doc["edge"].is_array()) throw SyntaxError(0, "edge: expected array");
    for (const auto& e : doc["edge"]) {
      auto pair = JsonNodes(e, n, "edge");
      if (pair.size() != 2) throw SyntaxError(0, "edge: expected [i, j]");
      edges.push_back({pair[0], pair[1]});
    }
  }
  std::vector<int> available, targets;
  if (doc.contains("available"))
    available = JsonNodes(doc["available"], n, "available");
  if (doc.contains("targets")) targets = JsonNodes(doc["targets"], n, "targets");
  std::optional<StructuredSystem::NodeSets> inputs, outputs;
  if (doc.contains("input")) inputs = JsonColumns(doc["input"], n, "input");
  if (doc.contains("output")) outputs = JsonColumns(doc["output"], n, "output");
  return StructuredSystem(n, std::move(edges), std::move(available),
                          std::move(targets), std::move(inputs),
                          std::move(outputs));
}

void AppendNodes(std::ostringstream& out, const std::vector<int>& nodes) {
  for (int v : nodes) out << ' ' << v + 1;
}

nlohmann::ordered_json NodesJson(const std::vector<int>& nodes) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int v : nodes) arr.push_back(v + 1);
  return arr;
}

}  // namespace

StructuredSystem parse_system(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return ParseJson(text);
  return ParseText(text);
}

StructuredSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

std::string serialize_system(const StructuredSystem& sys) {
  std::ostringstream out;
  out << "n " << sys.num_states() << '\n';
  for (const Edge& e : sys.state_edges())
    out << "edge " << e.from + 1 << ' ' << e.to + 1 << '\n';
  out << "available";
  AppendNodes(out, sys.available());
  out << "\ntargets";
  AppendNodes(out, sys.targets());
  out << '\n';
  for (std::size_t k = 0; k < sys.explicit_inputs().size(); ++k) {
    out << "input " << k + 1;
    AppendNodes(out, sys.explicit_inputs()[k]);
    out << '\n';
  }
  for (std::size_t k = 0; k < sys.explicit_outputs().size(); ++k) {
    out << "output " << k + 1;
    AppendNodes(out, sys.explicit_outputs()[k]);
    out << '\n';
  }
  return out.str();
}

std::string serialize_system_json(const StructuredSystem& sys) {
  nlohmann::ordered_json doc;
  doc["n"] = sys.num_states();
  doc["edge"] = nlohmann::ordered_json::array();
  for (const Edge& e : sys.state_edges())
    doc["edge"].push_back({e.from + 1, e.to + 1});
  doc["available"] = NodesJson(sys.available());
  doc["targets"] = NodesJson(sys.targets());
  if (sys.has_explicit_inputs()) {
    doc["input"] = nlohmann::ordered_json::array();
    for (const auto& column : sys.explicit_inputs())
      doc["input"].push_back(NodesJson(column));
  }
  if (sys.has_explicit_outputs()) {
    doc["output"] = nlohmann::ordered_json::array();
    for (const auto& row : sys.explicit_outputs())
      doc["output"].push_back(NodesJson(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace netctrl
