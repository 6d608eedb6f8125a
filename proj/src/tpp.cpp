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

#include "tppb/tpp.hpp"

#include "tppb/error.hpp"

namespace tppb {

ElementSet right_quotient(const Group& g, const ElementSet& x) {
  if (x.empty()) throw Error(ErrorKind::EmptySet, "right quotient of the empty set");
  if (x.subgroup_flag() && x.universe() == g.order()) return x;
  ElementSet q(g.order());
  const auto members = x.elements();
  for (Element a : members)
    for (Element b : members) q.insert(g.mul(a, g.inv(b)));
  return q;
}

TppVerdict satisfies_tpp(const Group& g, const ElementSet& s, const ElementSet& t,
                         const ElementSet& u) {
  if (s.empty() || t.empty() || u.empty())
    throw Error(ErrorKind::EmptySet, "TPP triple components must be non-empty");
  const ElementSet qs = right_quotient(g, s);
  const ElementSet qt = right_quotient(g, t);
  const ElementSet qu = right_quotient(g, u);
  const auto ts = qt.elements();

  TppVerdict verdict;
  qs.for_each([&](Element a) {
    if (!verdict.holds) return;
    for (Element b : ts) {
      if (a == Group::kIdentity && b == Group::kIdentity) continue;
      const Element c = g.inv(g.mul(a, b));
      if (qu.contains(c)) {
        verdict.holds = false;
        verdict.witness = {a, b, c};
        return;
      }
    }
  });
  return verdict;
}

TppReport verify_triple_report(const Group& g, const ElementSet& s, const ElementSet& t,
                               const ElementSet& u) {
  TppReport r;
  r.verdict = satisfies_tpp(g, s, t, u);
  if (r.verdict.holds) {
    r.text = "holds";
  } else {
    const auto& w = *r.verdict.witness;
    r.text = "fails: s=" + g.label(w[0]) + " t=" + g.label(w[1]) + " u=" + g.label(w[2]);
  }
  return r;
}

}  // namespace tppb
