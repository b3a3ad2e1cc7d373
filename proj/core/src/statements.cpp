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

// Structural statements about the filtration and the lower bounds on Iter.

#include <algorithm>

#include "dvt/error.hpp"
#include "dvt/viability.hpp"

namespace dvt {

namespace {

// Collects the outcome of one statement: the first violation wins.
class Tally {
 public:
  Tally(std::string id, std::string text) {
    check_.id = std::move(id);
    check_.text = std::move(text);
    check_.status = Status::kHolds;
  }
  bool ok() const { return check_.status == Status::kHolds; }
  void fail(std::vector<Cell> w) {
    if (!ok()) return;
    check_.status = Status::kFails;
    check_.witness = std::move(w);
  }
  // Fails with the first member of `bad` if it is nonempty.
  void expect_empty(const PointSet& bad) {
    if (auto x = bad.first()) fail({*x});
  }
  StatementCheck done() && { return std::move(check_); }
  static StatementCheck skipped(std::string id, std::string text) {
    return {std::move(id), std::move(text), Status::kNotApplicable, {}};
  }

 private:
  StatementCheck check_;
};

// C_0, C_1, ... recomputed straight from the definition for a fixed number
// of steps, without stopping at stabilization.
std::vector<PointSet> raw_filtration(const FiniteSpace& space, const Dynamics& f,
                                     std::size_t steps) {
  const PointSet& c = domain_of(f);
  std::vector<PointSet> out{space.full_set()};
  for (std::size_t n = 0; n < steps; ++n) {
    PointSet next(space.size());
    c.for_each([&](Cell x) {
      const bool hit = std::holds_alternative<CellMap>(f)
                           ? out.back().contains(std::get<CellMap>(f)(x))
                           : std::get<SetValuedMap>(f)(x).intersects(out.back());
      if (hit) next.insert(x);
    });
    out.push_back(std::move(next));
  }
  return out;
}

PointSet not_closed_part(const FiniteSpace& space, const PointSet& a) {
  return space.closure(a) - a;
}

PointSet not_open_part(const FiniteSpace& space, const PointSet& a) {
  return a - space.interior(a);
}

}  // namespace

std::vector<StatementCheck> verify_propositions(const FiniteSpace& space,
                                                const Dynamics& f,
                                                const ViabilityReport& report) {
  const bool is_fn = std::holds_alternative<CellMap>(f);
  const std::size_t u = space.size();
  const std::size_t horizon = u + 3;
  const std::vector<PointSet> raw = raw_filtration(space, f, horizon + 2);
  const auto C = [&](std::size_t n) -> const PointSet& { return report.c(n); };
  const auto A = [&](std::size_t n) { return report.a(n); };
  const auto img = [&](Cell x) {
    if (is_fn) {
      PointSet s(u);
      s.insert(std::get<CellMap>(f)(x));
      return s;
    }
    return std::get<SetValuedMap>(f)(x);
  };
  std::vector<StatementCheck> out;

  // seq.1: Iter is the longest admissible sequence.
  {
    Tally t(is_fn ? "seq.1" : "seq.1'",
            "Iter equals the maximal length of a sequence x_i in f(x_{i-1})");
    const Iter oracle = max_orbit_bruteforce(space, f);
    const Orbit& w = report.witness;
    const bool shape = report.iter.is_infinite()
                           ? !w.cycle.empty()
                           : (w.cycle.empty() && w.steps() == report.iter.value());
    if (oracle != report.iter || !orbit_is_valid(f, w) || !shape) t.fail(w.prefix);
    out.push_back(std::move(t).done());
  }
  // The stored filtration must agree with the definition everywhere.
  {
    Tally t("seq.def", "stored C_n agree with the recursive definition");
    for (std::size_t n = 0; n < raw.size(); ++n) {
      t.expect_empty((raw[n] - C(n)) | (C(n) - raw[n]));
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t("seq.2", "C_{n+1} is contained in C_n");
    for (std::size_t n = 0; n + 1 < raw.size(); ++n) t.expect_empty(raw[n + 1] - raw[n]);
    out.push_back(std::move(t).done());
  }
  {
    Tally t("seq.3", "once C_{n+1} = C_n the sequence is constant");
    for (std::size_t n = 0; n + 1 < raw.size(); ++n) {
      if (raw[n + 1] != raw[n]) continue;
      for (std::size_t m = n + 1; m < raw.size(); ++m) {
        t.expect_empty((raw[m] - raw[n]) | (raw[n] - raw[m]));
      }
      break;
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t(is_fn ? "seq.4" : "seq.4'", "x in C_{n+1} implies f(x) meets C_n");
    for (std::size_t n = 0; n < horizon && t.ok(); ++n) {
      C(n + 1).for_each([&](Cell x) {
        if (!img(x).intersects(C(n))) t.fail({x});
      });
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t(is_fn ? "seq.5" : "seq.5'",
            is_fn ? "x in A_{n+1} implies f(x) in A_n"
                  : "x in A_{n+1} implies f(x) inside A_0 u ... u A_n and meeting A_n");
    PointSet below(u);  // A_0 u ... u A_n
    for (std::size_t n = 0; n < horizon && t.ok(); ++n) {
      below |= A(n);
      const PointSet an = A(n);
      A(n + 1).for_each([&](Cell x) {
        const PointSet y = img(x);
        if (!y.intersects(an) || !y.subset_of(below)) t.fail({x});
      });
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t("seq.6", "for finite Iter = k, A_i is nonempty iff i <= k");
    if (!report.iter.is_infinite()) {
      const std::size_t k = report.iter.value();
      for (std::size_t i = 0; i <= k + 2; ++i) {
        if (A(i).empty() == (i <= k)) t.fail({});
      }
    }
    out.push_back(std::move(t).done());
  }

  const HypothesisReport& h = report.hypotheses;
  if (is_fn) {
    const bool applies = h.c_closed.holds() && h.continuous.holds() && h.bdr_function.holds();
    const char* texts[] = {
        "C_n is closed",
        "f maps the boundary of C_{n+2} in C_{n+1} into the boundary of C_{n+1} in C_n",
        "the boundary of C_{n+1} in C_n lies in C_{n+2}",
        "A_n u C_{n+2} is closed",
    };
    if (!applies) {
      for (int i = 0; i < 4; ++i) {
        out.push_back(Tally::skipped("fn." + std::to_string(i + 1), texts[i]));
      }
      return out;
    }
    const CellMap& fn = std::get<CellMap>(f);
    Tally t1("fn.1", texts[0]), t2("fn.2", texts[1]), t3("fn.3", texts[2]), t4("fn.4", texts[3]);
    for (std::size_t n = 0; n < horizon; ++n) {
      t1.expect_empty(not_closed_part(space, C(n)));
      const PointSet bn = space.relative_boundary(C(n + 1), C(n));
      const PointSet bn1 = space.relative_boundary(C(n + 2), C(n + 1));
      bn1.for_each([&](Cell x) {
        if (!bn.contains(fn(x))) t2.fail({x});
      });
      t3.expect_empty(bn - C(n + 2));
      t4.expect_empty(not_closed_part(space, A(n) | C(n + 2)));
    }
    out.push_back(std::move(t1).done());
    out.push_back(std::move(t2).done());
    out.push_back(std::move(t3).done());
    out.push_back(std::move(t4).done());
    return out;
  }

  const bool applies =
      h.c_closed.holds() && h.usc.holds() && h.bdr_w.holds() && h.conn.holds();
  const char* texts[] = {
      "C_n is closed",
      "A_0 and A_1 are open",
      "the boundary of C_2 in C_1 lies in C_3",
      "A_1 u C_3 is closed and A_0 u A_2 is open",
      "the boundary of C_3 in C_2 lies in C_4",
      "A_2 u C_4 is closed and A_0 u A_1 u A_3 is open",
      "x in (boundary of C_4 in C_3) n A_4 implies f(x) meets A_2 and A_3",
  };
  if (!applies) {
    for (int i = 0; i < 7; ++i) {
      out.push_back(Tally::skipped("sv." + std::to_string(i + 1), texts[i]));
    }
    return out;
  }
  const auto& m = std::get<SetValuedMap>(f);
  {
    Tally t("sv.1", texts[0]);
    for (std::size_t n = 0; n < horizon; ++n) t.expect_empty(not_closed_part(space, C(n)));
    out.push_back(std::move(t).done());
  }
  {
    Tally t("sv.2", texts[1]);
    t.expect_empty(not_open_part(space, A(0)));
    t.expect_empty(not_open_part(space, A(1)));
    out.push_back(std::move(t).done());
  }
  {
    Tally t("sv.3", texts[2]);
    t.expect_empty(space.relative_boundary(C(2), C(1)) - C(3));
    out.push_back(std::move(t).done());
  }
  {
    Tally t("sv.4", texts[3]);
    t.expect_empty(not_closed_part(space, A(1) | C(3)));
    t.expect_empty(not_open_part(space, A(0) | A(2)));
    out.push_back(std::move(t).done());
  }
  {
    Tally t("sv.5", texts[4]);
    t.expect_empty(space.relative_boundary(C(3), C(2)) - C(4));
    out.push_back(std::move(t).done());
  }
  {
    Tally t("sv.6", texts[5]);
    t.expect_empty(not_closed_part(space, A(2) | C(4)));
    t.expect_empty(not_open_part(space, A(0) | A(1) | A(3)));
    out.push_back(std::move(t).done());
  }
  {
    Tally t("sv.7", texts[6]);
    const PointSet a2 = A(2), a3 = A(3);
    (space.relative_boundary(C(4), C(3)) & A(4)).for_each([&](Cell x) {
      if (!m(x).intersects(a2) || !m(x).intersects(a3)) t.fail({x});
    });
    out.push_back(std::move(t).done());
  }
  return out;
}

bool BoundReport::all_satisfied() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.satisfied; });
}

BoundReport check_theorem_bounds(const FiniteSpace& space, const Dynamics& f,
                                 const ViabilityReport& report,
                                 std::optional<bool> gate) {
  const PointSet& c = domain_of(f);
  const HypothesisReport& h = report.hypotheses;
  BoundReport b;
  b.boundary_nonempty = !space.boundary(c).empty();
  b.x_connected = space.is_connected(space.full_set());
  b.c_connected = space.is_connected(c);
  b.gate = gate;
  const bool gate_ok = gate.value_or(false);

  const auto add = [&](std::string id, std::string hyp, bool applicable, std::size_t bound) {
    BoundCheck bc{std::move(id), std::move(hyp), applicable, bound, true};
    if (applicable) {
      bc.satisfied = report.iter.at_least(bound);
      b.asserted = std::max(b.asserted, bound);
    }
    b.checks.push_back(std::move(bc));
  };

  if (std::holds_alternative<CellMap>(f)) {
    const bool base = h.c_closed.holds() && h.continuous.holds() && h.bdr_function.holds();
    add("bound.1", "continuous, f(bd C) in C, bd C nonempty", base && b.boundary_nonempty, 2);
    add("bound.2", "continuous, f(bd C) in C, X connected", base && b.x_connected, 3);
    add("bound.3", "continuous, f(bd C) in C, X and C connected",
        base && b.x_connected && b.c_connected, 4);
    add("bound.4", "continuous, f(bd C) in C, X and C connected, gate property",
        base && b.x_connected && b.c_connected && gate_ok, 5);
  } else {
    const bool closed = h.c_closed.holds();
    const bool sv = closed && h.usc.holds() && h.conn.holds();
    add("bound.1", "(Bdr-w), bd C nonempty", closed && h.bdr_w.holds() && b.boundary_nonempty, 2);
    add("bound.2", "(usc), (Bdr-w), (Conn), X connected", sv && h.bdr_w.holds() && b.x_connected,
        3);
    add("bound.3", "(usc), (Bdr-w), (Conn), X and C connected",
        sv && h.bdr_w.holds() && b.x_connected && b.c_connected, 4);
    add("bound.4", "(usc), (Bdr-s), (Conn), X and C connected, gate property",
        sv && h.bdr_s.holds() && b.x_connected && b.c_connected && gate_ok, 5);
  }
  return b;
}

}  // namespace dvt
