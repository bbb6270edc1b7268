// Copyright 2026 The scp_anneal Authors
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

#include "scp_anneal/instance_io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scp_anneal/error.h"

namespace scp_anneal {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& pointer,
                              const std::string& what) {
  throw Error(ErrorCode::kParseError, "at " + pointer + ": " + what);
}

const json& Field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) SchemaError("/", std::string("missing key '") + key + "'");
  return *it;
}

int64_t AsInt(const json& v, const std::string& pointer) {
  if (!v.is_number_integer()) SchemaError(pointer, "expected an integer");
  return v.get<int64_t>();
}

}  // namespace

std::string SerializeInstance(const ScpInstance& inst) {
  // One set per line; every value is emitted by the JSON library.
  std::string out = "{\n \"m\": " + std::to_string(inst.num_sets()) +
                    ",\n \"n\": " + std::to_string(inst.num_elements()) +
                    ",\n \"sets\": [\n";
  for (int j = 0; j < inst.num_sets(); ++j) {
    json row = json::array();
    for (const int e : inst.set(j)) row.push_back(e + 1);
    out += "  " + row.dump() + (j + 1 < inst.num_sets() ? ",\n" : "\n");
  }
  out += " ],\n \"weights\": " + json(inst.weights()).dump() + "\n}\n";
  return out;
}

ScpInstance DeserializeInstance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) SchemaError("/", "expected an object");
  const int64_t m = AsInt(Field(doc, "m"), "/m");
  const int64_t n = AsInt(Field(doc, "n"), "/n");
  const json& sets_json = Field(doc, "sets");
  const json& weights_json = Field(doc, "weights");
  if (!sets_json.is_array()) SchemaError("/sets", "expected an array");
  if (!weights_json.is_array()) SchemaError("/weights", "expected an array");
  if (static_cast<int64_t>(sets_json.size()) != m) {
    SchemaError("/sets", "length differs from m");
  }
  if (static_cast<int64_t>(weights_json.size()) != m) {
    SchemaError("/weights", "length differs from m");
  }
  if (n > INT32_MAX || n < INT32_MIN) SchemaError("/n", "out of range");

  std::vector<std::vector<int>> sets;
  sets.reserve(sets_json.size());
  for (size_t j = 0; j < sets_json.size(); ++j) {
    const std::string ptr = "/sets/" + std::to_string(j);
    if (!sets_json[j].is_array()) SchemaError(ptr, "expected an array");
    std::vector<int> s;
    for (size_t k = 0; k < sets_json[j].size(); ++k) {
      const int64_t label = AsInt(sets_json[j][k], ptr + "/" + std::to_string(k));
      if (label < 1 || label > n) {
        throw Error(ErrorCode::kInvariantViolation,
                    "element label " + std::to_string(label) + " at " + ptr +
                        " outside 1.." + std::to_string(n));
      }
      s.push_back(static_cast<int>(label - 1));
    }
    sets.push_back(std::move(s));
  }
  std::vector<double> weights;
  for (size_t j = 0; j < weights_json.size(); ++j) {
    if (!weights_json[j].is_number()) {
      SchemaError("/weights/" + std::to_string(j), "expected a number");
    }
    weights.push_back(weights_json[j].get<double>());
  }
  return ScpInstance(static_cast<int>(n), std::move(sets), std::move(weights));
}

ScpInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return DeserializeInstance(buffer.str());
}

void WriteInstanceFile(const ScpInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << SerializeInstance(inst);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace scp_anneal
