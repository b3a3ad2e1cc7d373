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

#ifndef DVT_REPORT_HPP_
#define DVT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dvt/certificates.hpp"
#include "dvt/cohomology.hpp"
#include "dvt/instance_io.hpp"
#include "dvt/viability.hpp"

namespace dvt {

struct AnalyzeOptions {
  bool orbit = false;
  bool propositions = false;
  bool bounds = false;
  bool betti = false;
  bool gate = false;
  std::size_t gate_cap = kDefaultGateCap;
};

struct RunReport {
  std::string name;
  bool is_function = true;
  std::size_t c_size = 0;
  ViabilityReport viability;
  std::optional<Orbit> orbit;
  std::vector<StatementCheck> propositions;
  std::optional<BoundReport> bounds;
  std::optional<std::size_t> betti0;
  std::optional<std::size_t> betti1;
  std::optional<GateReport> gate;
  std::string gate_note;  // why the gate was not evaluated
  std::optional<CertificateVerdict> certificate;
  std::optional<HomotopyFinding> homotopy;
  // Expected-block mismatches, one line each.
  std::vector<std::string> mismatches;
  std::vector<std::string> warnings;

  // A proven statement failed although its hypotheses were verified.
  bool falsified() const;
  // 0 ok, 2 expectation mismatch, 3 falsification.
  int exit_code() const;
};

RunReport analyze(const Instance& instance, const AnalyzeOptions& options);

std::string render_text(const FiniteSpace& space, const RunReport& report);
std::string render_json(const FiniteSpace& space, const RunReport& report);

// Cells grouped by layer (one rank per layer, A_0 at the top), coloured by
// layer, with the Hasse diagram as edges.
std::string render_dot(const FiniteSpace& space, const ViabilityReport& report);

}  // namespace dvt

#endif  // DVT_REPORT_HPP_
