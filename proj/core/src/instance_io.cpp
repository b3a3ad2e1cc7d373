// Copyright 2026 The dvt Authors
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

#include "dvt/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dvt/error.hpp"
#include "json.hpp"

namespace dvt {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kProfileKeys[] = {"continuous", "usc", "conn", "bdr_w", "bdr_s",
                                        "bdr_function"};

std::optional<bool>& profile_field(HypothesisProfile& p, std::string_view key) {
  if (key == "continuous") return p.continuous;
  if (key == "usc") return p.usc;
  if (key == "conn") return p.conn;
  if (key == "bdr_w") return p.bdr_w;
  if (key == "bdr_s") return p.bdr_s;
  return p.bdr_function;
}

// Maps referential problems back to a line of the source document.
class Locator {
 public:
  Locator(const std::string& text, std::string source)
      : text_(text), source_(std::move(source)) {}

  // Line of the first `"token"` after the key `"section"`.
  std::string at(std::string_view section, std::string_view token = {}) const {
    std::size_t pos = text_.find("\"" + std::string(section) + "\"");
    if (pos == std::string::npos) pos = 0;
    if (!token.empty()) {
      const std::size_t t = text_.find("\"" + std::string(token) + "\"", pos);
      if (t != std::string::npos) pos = t;
    }
    const auto line = 1 + std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n');
    return source_ + ":" + std::to_string(line) + ": ";
  }

  const std::string& source() const { return source_; }

 private:
  const std::string& text_;
  std::string source_;
};

// The message of `e` without its "<code>: " prefix.
std::string bare_message(const Error& e) {
  std::string m = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  return m.rfind(prefix, 0) == 0 ? m.substr(prefix.size()) : m;
}

[[noreturn]] void fail(ErrorCode code, const std::string& where, const std::string& msg) {
  throw Error(code, where + msg);
}

const Json& require(const Json& doc, const char* key, const Locator& loc) {
  if (!doc.contains(key)) fail(ErrorCode::kParseError, loc.source() + ": ", std::string("missing key '") + key + "'");
  return doc.at(key);
}

std::string as_string(const Json& j, const Locator& loc, std::string_view section) {
  if (!j.is_string()) fail(ErrorCode::kParseError, loc.at(section), "expected a string, got " + j.dump());
  return j.get<std::string>();
}

Cell lookup(const FiniteSpace& s, const std::string& name, const Locator& loc,
            std::string_view section) {
  auto c = s.find(name);
  if (!c) fail(ErrorCode::kUnknownCell, loc.at(section, name), "unknown cell '" + name + "'");
  return *c;
}

PointSet read_set(const FiniteSpace& s, const Json& j, const Locator& loc,
                  std::string_view section) {
  if (!j.is_array()) fail(ErrorCode::kParseError, loc.at(section), "expected a list of cells");
  PointSet out = s.empty_set();
  for (const Json& e : j) out.insert(lookup(s, as_string(e, loc, section), loc, section));
  return out;
}

CellMap read_stage(const FiniteSpace& s, const PointSet& c, const Json& j,
                   const Locator& loc, std::size_t stage) {
  if (!j.is_object()) fail(ErrorCode::kParseError, loc.at("certificate"), "stage " + std::to_string(stage) + " is not a table");
  std::vector<Cell> img(s.size(), 0);
  PointSet seen = s.empty_set();
  for (const auto& [key, value] : j.items()) {
    const Cell x = lookup(s, key, loc, "certificate");
    if (!c.contains(x)) fail(ErrorCode::kNotInDomain, loc.at("certificate", key), "stage " + std::to_string(stage) + " maps '" + key + "' outside C");
    img[x] = lookup(s, as_string(value, loc, "certificate"), loc, "certificate");
    seen.insert(x);
  }
  if (seen != c) {
    const Cell missing = *(c - seen).first();
    fail(ErrorCode::kPartialMap, loc.at("certificate"), "stage " + std::to_string(stage) + " misses '" + s.name(missing) + "'");
  }
  return CellMap(s, c, std::move(img));
}

Json set_json(const FiniteSpace& s, const PointSet& a) {
  Json out = Json::array();
  a.for_each([&](Cell x) { out.push_back(s.name(x)); });
  return out;
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& source) {
  const Locator loc(text, source);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line for the message.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw Error(ErrorCode::kParseError, source + ":" + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::kParseError, source + ":1: ", "top level must be an object");

  Instance inst;
  if (doc.contains("name")) inst.name = as_string(doc["name"], loc, "name");

  const Json& points = require(doc, "points", loc);
  if (!points.is_array()) fail(ErrorCode::kParseError, loc.at("points"), "points must be a list");
  std::vector<std::string> cells;
  for (const Json& p : points) cells.push_back(as_string(p, loc, "points"));
  std::vector<FiniteSpace::Pair> hasse;
  if (doc.contains("hasse")) {
    const Json& h = doc["hasse"];
    if (!h.is_array()) fail(ErrorCode::kParseError, loc.at("hasse"), "hasse must be a list of pairs");
    for (const Json& pair : h) {
      if (!pair.is_array() || pair.size() != 2) fail(ErrorCode::kParseError, loc.at("hasse"), "hasse entry " + pair.dump() + " is not a pair");
      hasse.emplace_back(as_string(pair[0], loc, "hasse"), as_string(pair[1], loc, "hasse"));
    }
  }
  for (const auto& [a, b] : hasse) {
    for (const std::string& n : {a, b}) {
      if (std::find(cells.begin(), cells.end(), n) == cells.end()) {
        fail(ErrorCode::kUnknownCell, loc.at("hasse", n), "unknown cell '" + n + "'");
      }
    }
  }
  try {
    inst.space = FiniteSpace::build(cells, hasse);
  } catch (const Error& e) {
    fail(e.code(), loc.at(e.code() == ErrorCode::kDuplicateCell ? "points" : "hasse"), bare_message(e));
  }
  const FiniteSpace& s = inst.space;

  const PointSet c = read_set(s, require(doc, "C", loc), loc, "C");
  if (c.empty()) fail(ErrorCode::kEmptyC, loc.at("C"), "C is empty");
  if (!s.is_closed(c)) inst.warnings.push_back("C is not closed");

  const std::string kind = as_string(require(doc, "map_kind", loc), loc, "map_kind");
  if (kind != "function" && kind != "setvalued") {
    fail(ErrorCode::kParseError, loc.at("map_kind"), "map_kind must be \"function\" or \"setvalued\"");
  }
  const Json& map = require(doc, "map", loc);
  if (!map.is_object()) fail(ErrorCode::kParseError, loc.at("map"), "map must be a table");
  std::vector<PointSet> images(s.size(), s.empty_set());
  PointSet defined = s.empty_set();
  for (const auto& [key, value] : map.items()) {
    const Cell x = lookup(s, key, loc, "map");
    if (!c.contains(x)) fail(ErrorCode::kNotInDomain, loc.at("map", key), "'" + key + "' is not in C");
    images[x] = read_set(s, value, loc, "map");
    if (images[x].empty()) fail(ErrorCode::kEmptyImage, loc.at("map", key), "empty image at '" + key + "'");
    if (kind == "function" && images[x].count() != 1) {
      fail(ErrorCode::kParseError, loc.at("map", key), "function image at '" + key + "' is not a singleton");
    }
    defined.insert(x);
  }
  if (defined != c) {
    const Cell missing = *(c - defined).first();
    fail(ErrorCode::kPartialMap, loc.at("map"), "no image for '" + s.name(missing) + "'");
  }
  if (kind == "function") {
    std::vector<Cell> img(s.size(), 0);
    c.for_each([&](Cell x) { img[x] = *images[x].first(); });
    inst.map = CellMap(s, c, std::move(img));
  } else {
    inst.map = SetValuedMap(s, c, std::move(images));
  }

  if (doc.contains("certificate")) {
    const Json& cert = doc["certificate"];
    if (!cert.is_array()) fail(ErrorCode::kParseError, loc.at("certificate"), "certificate must be a list of stages");
    HomotopyCertificate hc;
    for (std::size_t i = 0; i < cert.size(); ++i) hc.stages.push_back(read_stage(s, c, cert[i], loc, i));
    inst.certificate = std::move(hc);
  }

  if (doc.contains("expected")) {
    const Json& e = doc["expected"];
    if (!e.is_object()) fail(ErrorCode::kParseError, loc.at("expected"), "expected must be a table");
    Expectations ex;
    if (e.contains("iter")) {
      const Json& it = e["iter"];
      std::optional<Iter> v;
      if (it.is_number_unsigned()) v = Iter(it.get<std::size_t>());
      if (it.is_string()) v = Iter::parse(it.get<std::string>());
      if (!v) fail(ErrorCode::kParseError, loc.at("iter"), "iter must be a count or \"inf\"");
      ex.iter = v;
    }
    if (e.contains("hypotheses")) {
      for (const auto& [key, value] : e["hypotheses"].items()) {
        if (std::find(std::begin(kProfileKeys), std::end(kProfileKeys), key) == std::end(kProfileKeys)) {
          fail(ErrorCode::kParseError, loc.at("hypotheses", key), "unknown hypothesis '" + key + "'");
        }
        if (!value.is_boolean()) fail(ErrorCode::kParseError, loc.at("hypotheses", key), "hypothesis values must be booleans");
        profile_field(ex.hypotheses, key) = value.get<bool>();
      }
    }
    if (e.contains("levels")) {
      for (const auto& [key, value] : e["levels"].items()) {
        std::size_t n = 0;
        try {
          std::size_t used = 0;
          n = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          fail(ErrorCode::kParseError, loc.at("levels", key), "level key '" + key + "' is not a number");
        }
        const PointSet lvl = read_set(s, value, loc, "levels");
        ex.levels[n] = s.names_of(lvl);
      }
    }
    inst.expected = std::move(ex);
  }
  return inst;
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

std::string emit_instance(const Instance& inst) {
  const FiniteSpace& s = inst.space;
  const PointSet& c = domain_of(inst.map);
  Json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  doc["points"] = s.names();
  Json hasse = Json::array();
  for (const auto& [a, b] : s.hasse()) hasse.push_back({s.name(a), s.name(b)});
  doc["hasse"] = hasse;
  doc["C"] = set_json(s, c);
  doc["map_kind"] = inst.is_function() ? "function" : "setvalued";
  Json map = Json::object();
  c.for_each([&](Cell x) {
    if (const auto* f = std::get_if<CellMap>(&inst.map)) {
      map[s.name(x)] = Json::array({s.name((*f)(x))});
    } else {
      map[s.name(x)] = set_json(s, std::get<SetValuedMap>(inst.map)(x));
    }
  });
  doc["map"] = map;
  if (inst.certificate) {
    Json cert = Json::array();
    for (const CellMap& stage : inst.certificate->stages) {
      Json t = Json::object();
      c.for_each([&](Cell x) { t[s.name(x)] = s.name(stage(x)); });
      cert.push_back(t);
    }
    doc["certificate"] = cert;
  }
  if (inst.expected) {
    Json e = Json::object();
    if (inst.expected->iter) {
      const Iter it = *inst.expected->iter;
      if (it.is_infinite()) {
        e["iter"] = "inf";
      } else {
        e["iter"] = it.value();
      }
    }
    Json h = Json::object();
    HypothesisProfile p = inst.expected->hypotheses;
    for (const char* key : kProfileKeys) {
      if (auto v = profile_field(p, key)) h[key] = *v;
    }
    e["hypotheses"] = h;
    if (!inst.expected->levels.empty()) {
      Json l = Json::object();
      for (const auto& [n, names] : inst.expected->levels) {
        l[std::to_string(n)] = set_json(s, s.set_of(names));
      }
      e["levels"] = l;
    }
    doc["expected"] = e;
  }
  return doc.dump(1) + "\n";
}

void write_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, path + ": cannot write");
  out << emit_instance(instance);
}

Instance to_instance(const GalleryInstance& g) {
  Instance inst;
  inst.name = g.name;
  inst.space = g.space;
  inst.map = g.map;
  inst.certificate = g.certificate;
  Expectations e;
  e.iter = g.expected_iter;
  e.hypotheses = g.expected_hypotheses;
  e.levels = g.expected_levels;
  inst.expected = std::move(e);
  return inst;
}

}  // namespace dvt
