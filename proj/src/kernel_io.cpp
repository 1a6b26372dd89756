// Copyright 2026 The inhomsat Authors
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

#include "inhomsat/kernel_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "inhomsat/rng.hpp"
#include "json.hpp"

namespace inhomsat {

namespace {

using nlohmann::json;

void RejectUnknownKeys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw std::invalid_argument("unknown field '" + it.key() + "' in " + where);
    }
  }
}

std::size_t ResolveType(const json& ref, const TypeSpace& space) {
  if (ref.is_number_integer()) {
    const auto idx = ref.get<long long>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= space.num_types()) {
      throw std::invalid_argument("type index " + std::to_string(idx) +
                                  " out of range");
    }
    return static_cast<std::size_t>(idx);
  }
  if (ref.is_string()) {
    const std::size_t idx = space.FindLabel(ref.get<std::string>());
    if (idx == space.num_types()) {
      throw std::invalid_argument("unknown type label '" +
                                  ref.get<std::string>() + "'");
    }
    return idx;
  }
  throw std::invalid_argument("type reference must be a label or an index");
}

std::size_t ResolveBlock(const json& ref, const TypeSpace& space) {
  if (!ref.is_array() || ref.size() != 2) {
    throw std::invalid_argument("block reference must be [type, sign]");
  }
  const std::size_t type = ResolveType(ref[0], space);
  if (!ref[1].is_string()) throw std::invalid_argument("sign must be \"+\" or \"-\"");
  const std::string s = ref[1].get<std::string>();
  Sign sign;
  if (s == "+") {
    sign = Sign::kPlus;
  } else if (s == "-") {
    sign = Sign::kMinus;
  } else {
    throw std::invalid_argument("sign must be \"+\" or \"-\", got '" + s + "'");
  }
  return SignedBlock{type, sign}.index();
}

}  // namespace

BlockKernel ParseKernelJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("kernel file is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("kernel file must be an object");
  RejectUnknownKeys(doc, {"name", "types", "entries"}, "kernel file");
  if (!doc.contains("types") || !doc["types"].is_array()) {
    throw std::invalid_argument("kernel file needs a 'types' array");
  }

  std::vector<std::string> labels;
  std::vector<double> weights;
  for (const auto& t : doc["types"]) {
    if (!t.is_object()) throw std::invalid_argument("type entry must be an object");
    RejectUnknownKeys(t, {"label", "weight"}, "type entry");
    if (!t.contains("label") || !t["label"].is_string() ||
        !t.contains("weight") || !t["weight"].is_number()) {
      throw std::invalid_argument("type entry needs string 'label' and numeric 'weight'");
    }
    labels.push_back(t["label"].get<std::string>());
    weights.push_back(t["weight"].get<double>());
  }
  TypeSpace space(std::move(labels), std::move(weights));
  const std::size_t dim = space.num_blocks();

  std::map<std::pair<std::size_t, std::size_t>, double> set_values;
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array()) throw std::invalid_argument("'entries' must be an array");
    for (const auto& e : doc["entries"]) {
      if (!e.is_object()) throw std::invalid_argument("entry must be an object");
      RejectUnknownKeys(e, {"from", "to", "value"}, "entry");
      if (!e.contains("from") || !e.contains("to") || !e.contains("value") ||
          !e["value"].is_number()) {
        throw std::invalid_argument("entry needs 'from', 'to' and numeric 'value'");
      }
      const std::size_t a = ResolveBlock(e["from"], space);
      const std::size_t b = ResolveBlock(e["to"], space);
      const double v = e["value"].get<double>();
      for (auto key : {std::make_pair(a, b), std::make_pair(b, a)}) {
        auto [it, inserted] = set_values.emplace(key, v);
        if (!inserted && it->second != v) {
          throw std::invalid_argument(
              "conflicting values for " + BlockName(space, key.first) + "x" +
              BlockName(space, key.second));
        }
      }
    }
  }

  SquareMatrix values(dim);
  for (const auto& [key, v] : set_values) values(key.first, key.second) = v;
  BlockKernel w{std::move(space), std::move(values)};
  RequireValid(w);
  return w;
}

BlockKernel LoadKernelFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open kernel file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseKernelJson(ss.str());
}

std::string KernelToJson(const BlockKernel& w, const std::string& name) {
  json doc;
  if (!name.empty()) doc["name"] = name;
  doc["types"] = json::array();
  for (std::size_t i = 0; i < w.space.num_types(); ++i) {
    doc["types"].push_back({{"label", w.space.labels()[i]},
                            {"weight", w.space.weight(i)}});
  }
  doc["entries"] = json::array();
  const std::size_t dim = w.values.dim();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a; b < dim; ++b) {
      const double v = w.values(a, b);
      if (v == 0) continue;
      const auto sa = SignedBlock::FromIndex(a);
      const auto sb = SignedBlock::FromIndex(b);
      doc["entries"].push_back(
          {{"from", {w.space.labels()[sa.type_index], std::string(1, SignChar(sa.sign))}},
           {"to", {w.space.labels()[sb.type_index], std::string(1, SignChar(sb.sign))}},
           {"value", v}});
    }
  }
  return doc.dump(2) + "\n";
}

std::string KernelDigest(const BlockKernel& w) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  auto absorb = [&h](std::uint64_t x) { h = Mix64(h ^ Mix64(x)); };
  absorb(w.space.num_types());
  for (double g : w.space.weights()) {
    std::uint64_t bits;
    std::memcpy(&bits, &g, sizeof bits);
    absorb(bits);
  }
  for (double v : w.values.data()) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    absorb(bits);
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace inhomsat
