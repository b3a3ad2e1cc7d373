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

// Fence homotopies: a chain id = f_0, f_1, ..., f_k = f of continuous maps
// on C in which consecutive maps are pointwise comparable and every stage
// sends the boundary of C into C.

#ifndef DVT_CERTIFICATES_HPP_
#define DVT_CERTIFICATES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dvt/maps.hpp"
#include "dvt/viability.hpp"

namespace dvt {

struct HomotopyCertificate {
  std::vector<CellMap> stages;
};

enum class CertificateClause {
  kOk,
  kEmpty,          // no stages
  kDomain,         // a stage is not defined exactly on C
  kStart,          // f_0 is not the identity
  kEnd,            // f_k is not f
  kContinuity,     // a stage is not monotone
  kComparability,  // f_i(x) and f_{i+1}(x) are incomparable
  kBoundary,       // f_i(x) leaves C for some boundary cell x
};

std::string_view to_string(CertificateClause c);

struct CertificateVerdict {
  CertificateClause clause = CertificateClause::kOk;
  std::optional<std::size_t> stage;  // the earlier stage for comparability
  std::optional<Cell> cell;

  bool ok() const { return clause == CertificateClause::kOk; }
  std::string describe(const FiniteSpace& space) const;
};

// Checks the certificate against C = domain(f); reports the first violated
// clause in stage order.
CertificateVerdict verify_certificate(const FiniteSpace& space,
                                      const HomotopyCertificate& cert,
                                      const CellMap& f);

// Joins two fences whose shared endpoint matches (the first stage of `b`
// is dropped). Throws kCertificateInvalid if the endpoints differ.
HomotopyCertificate concatenate(const HomotopyCertificate& a,
                                const HomotopyCertificate& b);

struct HomotopyFinding {
  Iter iter;
  bool bound_met = false;  // iter >= 5
  std::size_t stages = 0;
};

// Throws kCertificateInvalid (with the verdict) when the certificate does
// not verify. A missed bound is returned, not thrown.
HomotopyFinding homotopy_bound_check(const FiniteSpace& space, const CellMap& f,
                                     const HomotopyCertificate& cert,
                                     const ViabilityReport& report);

}  // namespace dvt

#endif  // DVT_CERTIFICATES_HPP_
