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

#include "dvt/report.hpp"

#include <sstream>

#include "dvt/error.hpp"
#include "json.hpp"

namespace dvt {

namespace {

using Json = nlohmann::ordered_json;

std::string join_names(const FiniteSpace& s, const std::vector<Cell>& cells,
                       const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += s.name(cells[i]);
  }
  return out;
}

std::string join_set(const FiniteSpace& s, const PointSet& a) {
  return join_names(s, a.members());
}

// "(3): a b c", or "(0):" without a trailing blank.
std::string counted(const FiniteSpace& s, const PointSet& a) {
  std::string out = "(" + std::to_string(a.count()) + "):";
  if (!a.empty()) out += " " + join_set(s, a);
  return out;
}

Json names_json(const FiniteSpace& s, const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (Cell c : cells) out.push_back(s.name(c));
  return out;
}

struct NamedCheck {
  const char* name;
  const Check* check;
};

std::vector<NamedCheck> hypothesis_rows(const HypothesisReport& h, bool is_function) {
  if (is_function) {
    return {{"c_closed", &h.c_closed},
            {"continuous", &h.continuous},
            {"bdr_function", &h.bdr_function}};
  }
  return {{"c_closed", &h.c_closed}, {"usc", &h.usc},     {"conn", &h.conn},
          {"bdr_w", &h.bdr_w},       {"bdr_s", &h.bdr_s}};
}

void compare_expectations(const Instance& inst, RunReport& r) {
  if (!inst.expected) return;
  const Expectations& e = *inst.expected;
  const FiniteSpace& s = inst.space;
  if (e.iter && *e.iter != r.viability.iter) {
    r.mismatches.push_back("iter: expected " + e.iter->to_string() + ", got " +
                           r.viability.iter.to_string());
  }
  const HypothesisProfile got = profile_of(r.viability.hypotheses, inst.is_function());
  const auto cmp = [&](const char* name, const std::optional<bool>& want,
                       const std::optional<bool>& have) {
    if (!want) return;
    if (want != have) {
      const auto show = [](const std::optional<bool>& b) {
        return b ? std::string(*b ? "holds" : "fails") : std::string("n/a");
      };
      r.mismatches.push_back(std::string(name) + ": expected " + show(want) + ", got " +
                             show(have));
    }
  };
  cmp("continuous", e.hypotheses.continuous, got.continuous);
  cmp("usc", e.hypotheses.usc, got.usc);
  cmp("conn", e.hypotheses.conn, got.conn);
  cmp("bdr_w", e.hypotheses.bdr_w, got.bdr_w);
  cmp("bdr_s", e.hypotheses.bdr_s, got.bdr_s);
  cmp("bdr_function", e.hypotheses.bdr_function, got.bdr_function);
  for (const auto& [n, names] : e.levels) {
    const PointSet want = s.set_of(names);
    const PointSet& have = r.viability.c(n);
    if (want != have) {
      r.mismatches.push_back("C" + std::to_string(n) + ": expected {" + join_set(s, want) +
                             "}, got {" + join_set(s, have) + "}");
    }
  }
}

}  // namespace

bool RunReport::falsified() const {
  for (const StatementCheck& c : propositions) {
    if (c.status == Status::kFails) return true;
  }
  return bounds && !bounds->all_satisfied();
}

int RunReport::exit_code() const {
  if (falsified()) return 3;
  if (!mismatches.empty()) return 2;
  return 0;
}

RunReport analyze(const Instance& inst, const AnalyzeOptions& opt) {
  const FiniteSpace& s = inst.space;
  RunReport r;
  r.name = inst.name;
  r.is_function = inst.is_function();
  r.c_size = domain_of(inst.map).count();
  r.warnings = inst.warnings;
  r.viability = viability_sequence(s, inst.map);
  if (opt.orbit) r.orbit = r.viability.witness;
  if (opt.propositions) r.propositions = verify_propositions(s, inst.map, r.viability);
  if (opt.betti) {
    const OrderComplex k(s);
    r.betti0 = k.betti0();
    r.betti1 = k.betti1();
  }
  if (opt.gate || opt.bounds) {
    if (s.size() <= opt.gate_cap) {
      r.gate = gate_boundary_connectedness(s, opt.gate_cap);
    } else {
      r.gate_note = "not enumerated: " + std::to_string(s.size()) + " cells exceed the cap of " +
                    std::to_string(opt.gate_cap);
    }
  }
  if (opt.bounds) {
    std::optional<bool> gate;
    if (r.gate) gate = r.gate->holds;
    r.bounds = check_theorem_bounds(s, inst.map, r.viability, gate);
  }
  if (inst.certificate && r.is_function) {
    const CellMap& f = std::get<CellMap>(inst.map);
    r.certificate = verify_certificate(s, *inst.certificate, f);
    if (r.certificate->ok()) r.homotopy = homotopy_bound_check(s, f, *inst.certificate, r.viability);
  }
  compare_expectations(inst, r);
  return r;
}

std::string render_text(const FiniteSpace& s, const RunReport& r) {
  std::ostringstream o;
  const ViabilityReport& v = r.viability;
  o << "instance: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  o << "cells: " << s.size() << "  |C|: " << r.c_size
    << "  map: " << (r.is_function ? "function" : "setvalued") << "\n";
  for (const std::string& w : r.warnings) o << "warning: " << w << "\n";
  o << "hypotheses:\n";
  for (const auto& [name, check] : hypothesis_rows(v.hypotheses, r.is_function)) {
    o << "  " << name << ": " << to_string(check->status);
    if (check->fails() && !check->witness.empty()) o << " at " << join_names(s, check->witness, ", ");
    o << "\n";
  }
  o << "iter: " << v.iter.to_string() << "\n";
  if (v.stabilized_at) o << "stabilized at: C" << *v.stabilized_at << "\n";
  o << "filtration:\n";
  for (std::size_t n = 0; n < v.filtration.size(); ++n) {
    o << "  C" << n << " " << counted(s, v.filtration[n]) << "\n";
  }
  o << "layers:\n";
  for (std::size_t n = 0; n < v.layers.size(); ++n) {
    o << "  A" << n << " " << counted(s, v.layers[n]) << "\n";
  }
  if (r.orbit) {
    o << "orbit: " << join_names(s, r.orbit->prefix, " -> ");
    if (!r.orbit->cycle.empty()) o << " | cycle " << join_names(s, r.orbit->cycle, " -> ");
    o << "\n";
  }
  if (!r.propositions.empty()) {
    o << "statements:\n";
    for (const StatementCheck& c : r.propositions) {
      o << "  " << c.id << ": " << to_string(c.status);
      if (!c.witness.empty()) o << " at " << join_names(s, c.witness, ", ");
      o << "\n";
    }
  }
  if (r.bounds) {
    const BoundReport& b = *r.bounds;
    o << "bounds: boundary nonempty " << (b.boundary_nonempty ? "yes" : "no")
      << ", X connected " << (b.x_connected ? "yes" : "no") << ", C connected "
      << (b.c_connected ? "yes" : "no") << ", gate "
      << (b.gate ? (*b.gate ? "holds" : "fails") : "unknown") << "\n";
    for (const BoundCheck& c : b.checks) {
      o << "  " << c.id << " (>= " << c.bound << "): ";
      if (!c.applicable) {
        o << "n/a";
      } else {
        o << (c.satisfied ? "satisfied" : "VIOLATED");
      }
      o << "  [" << c.hypotheses << "]\n";
    }
    o << "  asserted bound: " << b.asserted << "\n";
  }
  if (r.betti0) o << "betti: b0 = " << *r.betti0 << ", b1 = " << *r.betti1 << "\n";
  if (r.gate) {
    o << "gate: " << (r.gate->holds ? "holds" : "fails") << " (" << r.gate->open_sets_visited
      << " open sets)";
    if (r.gate->counterexample) o << ", counterexample {" << join_set(s, *r.gate->counterexample) << "}";
    o << "\n";
  } else if (!r.gate_note.empty()) {
    o << "gate: " << r.gate_note << "\n";
  }
  if (r.certificate) {
    o << "certificate: " << (r.certificate->ok() ? "verified" : "rejected, " + r.certificate->describe(s));
    if (r.homotopy) o << ", iter >= 5 " << (r.homotopy->bound_met ? "met" : "missed");
    o << "\n";
  }
  for (const std::string& m : r.mismatches) o << "mismatch: " << m << "\n";
  o << "result: "
    << (r.falsified() ? "falsified" : r.mismatches.empty() ? "ok" : "expectation mismatch")
    << "\n";
  return o.str();
}

std::string render_json(const FiniteSpace& s, const RunReport& r) {
  const ViabilityReport& v = r.viability;
  Json doc;
  doc["name"] = r.name;
  doc["cells"] = s.size();
  doc["c_size"] = r.c_size;
  doc["map_kind"] = r.is_function ? "function" : "setvalued";
  doc["warnings"] = r.warnings;
  Json hyp = Json::object();
  for (const auto& [name, check] : hypothesis_rows(v.hypotheses, r.is_function)) {
    hyp[name] = {{"status", to_string(check->status)}, {"witness", names_json(s, check->witness)}};
  }
  doc["hypotheses"] = hyp;
  doc["iter"] = v.iter.to_string();
  doc["stabilized_at"] = v.stabilized_at ? Json(*v.stabilized_at) : Json(nullptr);
  Json filt = Json::array();
  for (const PointSet& c : v.filtration) filt.push_back(names_json(s, c.members()));
  doc["filtration"] = filt;
  Json layers = Json::array();
  for (const PointSet& a : v.layers) layers.push_back(names_json(s, a.members()));
  doc["layers"] = layers;
  if (r.orbit) {
    doc["orbit"] = {{"prefix", names_json(s, r.orbit->prefix)},
                    {"cycle", names_json(s, r.orbit->cycle)}};
  }
  if (!r.propositions.empty()) {
    Json st = Json::array();
    for (const StatementCheck& c : r.propositions) {
      st.push_back({{"id", c.id},
                    {"status", to_string(c.status)},
                    {"witness", names_json(s, c.witness)}});
    }
    doc["statements"] = st;
  }
  if (r.bounds) {
    Json b;
    b["boundary_nonempty"] = r.bounds->boundary_nonempty;
    b["x_connected"] = r.bounds->x_connected;
    b["c_connected"] = r.bounds->c_connected;
    b["gate"] = r.bounds->gate ? Json(*r.bounds->gate) : Json(nullptr);
    Json checks = Json::array();
    for (const BoundCheck& c : r.bounds->checks) {
      checks.push_back({{"id", c.id},
                        {"bound", c.bound},
                        {"applicable", c.applicable},
                        {"satisfied", c.satisfied},
                        {"hypotheses", c.hypotheses}});
    }
    b["checks"] = checks;
    b["asserted"] = r.bounds->asserted;
    doc["bounds"] = b;
  }
  if (r.betti0) doc["betti"] = {{"b0", *r.betti0}, {"b1", *r.betti1}};
  if (r.gate) {
    doc["gate"] = {{"holds", r.gate->holds},
                   {"open_sets_visited", r.gate->open_sets_visited},
                   {"counterexample", r.gate->counterexample
                                          ? names_json(s, r.gate->counterexample->members())
                                          : Json(nullptr)}};
  } else if (!r.gate_note.empty()) {
    doc["gate"] = {{"note", r.gate_note}};
  }
  if (r.certificate) {
    Json c = {{"verified", r.certificate->ok()}};
    if (!r.certificate->ok()) c["violation"] = r.certificate->describe(s);
    if (r.homotopy) c["bound_met"] = r.homotopy->bound_met;
    doc["certificate"] = c;
  }
  doc["mismatches"] = r.mismatches;
  doc["falsified"] = r.falsified();
  doc["exit_code"] = r.exit_code();
  return doc.dump(2) + "\n";
}

std::string render_dot(const FiniteSpace& s, const ViabilityReport& v) {
  static const char* kPalette[] = {"#f4f4f4", "#fde0c5", "#facba6", "#f8b58b", "#f59e72",
                                   "#f2855d", "#ef6a4c", "#eb4a40", "#c8314a", "#9b2a4e"};
  constexpr std::size_t kColours = std::size(kPalette);
  const auto quote = [](const std::string& name) {
    std::string q = "\"";
    for (char ch : name) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream o;
  o << "digraph dvt {\n  rankdir=TB;\n  node [shape=box, style=filled, fontname=\"Helvetica\"];\n";
  for (std::size_t n = 0; n < v.layers.size(); ++n) {
    if (v.layers[n].empty()) continue;
    o << "  subgraph layer_" << n << " {\n    rank=same;\n";
    v.layers[n].for_each([&](Cell x) {
      o << "    " << quote(s.name(x)) << " [fillcolor=\"" << kPalette[std::min(n, kColours - 1)]
        << "\", tooltip=\"A" << n << "\"];\n";
    });
    o << "  }\n";
  }
  const PointSet core = v.core();
  if (!core.empty()) {
    o << "  subgraph layer_core {\n    rank=same;\n";
    core.for_each([&](Cell x) {
      o << "    " << quote(s.name(x)) << " [fillcolor=\"#5b8def\", tooltip=\"core\"];\n";
    });
    o << "  }\n";
  }
  for (const auto& [a, b] : s.hasse()) {
    o << "  " << quote(s.name(a)) << " -> " << quote(s.name(b)) << " [dir=none, constraint=false];\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace dvt
