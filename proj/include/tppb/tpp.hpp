// Copyright 2026 The tppb Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tppb/element_set.hpp"
#include "tppb/group.hpp"

namespace tppb {

struct TppTriple {
  ElementSet s, t, u;

  std::uint64_t size() const noexcept {
    return std::uint64_t{s.size()} * t.size() * u.size();
  }
};

struct TppVerdict {
  bool holds = true;
  // (s, t, u) with s in Q(S), t in Q(T), u in Q(U), stu = 1, not all identity.
  std::optional<std::array<Element, 3>> witness;
};

/// Q(X) = { x y^-1 : x, y in X }. Sets flagged as subgroups are returned as is.
ElementSet right_quotient(const Group& g, const ElementSet& x);

/// Scans Q(S) x Q(T) row-major in ascending element order and reports the
/// first pair whose completing u = (st)^-1 lies in Q(U).
TppVerdict satisfies_tpp(const Group& g, const ElementSet& s, const ElementSet& t,
                         const ElementSet& u);

struct TppReport {
  TppVerdict verdict;
  std::string text;  // "holds" or "fails: s=<label> t=<label> u=<label>"
};

TppReport verify_triple_report(const Group& g, const ElementSet& s, const ElementSet& t,
                               const ElementSet& u);

}  // namespace tppb
