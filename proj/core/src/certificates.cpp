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

#include "dvt/certificates.hpp"

#include "dvt/error.hpp"

namespace dvt {

std::string_view to_string(CertificateClause c) {
  switch (c) {
    case CertificateClause::kOk: return "ok";
    case CertificateClause::kEmpty: return "empty";
    case CertificateClause::kDomain: return "domain";
    case CertificateClause::kStart: return "start";
    case CertificateClause::kEnd: return "end";
    case CertificateClause::kContinuity: return "continuity";
    case CertificateClause::kComparability: return "comparability";
    case CertificateClause::kBoundary: return "boundary";
  }
  return "?";
}

std::string CertificateVerdict::describe(const FiniteSpace& space) const {
  std::string s(to_string(clause));
  if (stage) s += " at stage " + std::to_string(*stage);
  if (cell) s += ", cell " + space.name(*cell);
  return s;
}

CertificateVerdict verify_certificate(const FiniteSpace& space,
                                      const HomotopyCertificate& cert,
                                      const CellMap& f) {
  using CC = CertificateClause;
  if (cert.stages.empty()) return {CC::kEmpty, {}, {}};
  const PointSet& c = f.domain();
  const PointSet bd = space.boundary(c);
  const std::size_t k = cert.stages.size() - 1;

  for (std::size_t i = 0; i <= k; ++i) {
    if (cert.stages[i].domain() != c) return {CC::kDomain, i, {}};
  }
  for (Cell x : c.members()) {
    if (cert.stages[0](x) != x) return {CC::kStart, 0, x};
  }
  for (Cell x : c.members()) {
    if (cert.stages[k](x) != f(x)) return {CC::kEnd, k, x};
  }
  for (std::size_t i = 0; i <= k; ++i) {
    const CellMap& g = cert.stages[i];
    if (Check m = check_continuous(space, g); m.fails()) return {CC::kContinuity, i, m.witness[0]};
    for (Cell x : bd.members()) {
      if (!c.contains(g(x))) return {CC::kBoundary, i, x};
    }
    if (i == k) break;
    const CellMap& h = cert.stages[i + 1];
    for (Cell x : c.members()) {
      if (!space.comparable(g(x), h(x))) return {CC::kComparability, i, x};
    }
  }
  return {};
}

HomotopyCertificate concatenate(const HomotopyCertificate& a,
                                const HomotopyCertificate& b) {
  if (a.stages.empty() || b.stages.empty() || !(a.stages.back() == b.stages.front())) {
    throw Error(ErrorCode::kCertificateInvalid, "fence endpoints do not match");
  }
  HomotopyCertificate out = a;
  out.stages.insert(out.stages.end(), b.stages.begin() + 1, b.stages.end());
  return out;
}

HomotopyFinding homotopy_bound_check(const FiniteSpace& space, const CellMap& f,
                                     const HomotopyCertificate& cert,
                                     const ViabilityReport& report) {
  const CertificateVerdict v = verify_certificate(space, cert, f);
  if (!v.ok()) throw Error(ErrorCode::kCertificateInvalid, v.describe(space));
  return {report.iter, report.iter.at_least(5), cert.stages.size()};
}

}  // namespace dvt
