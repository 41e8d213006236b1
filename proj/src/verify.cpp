// Copyright 2026 The ctxgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include "ctxgeo/analysis.hpp"

namespace ctxgeo {

Labeling parse_labeling(const std::map<int, std::string>& strings) {
  Labeling out;
  for (const auto& [pt, s] : strings) out.emplace(pt, parse_observable(s));
  return out;
}

std::vector<int> VerificationReport::negative_contexts() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(per_context_sign.size()); ++c)
    if (per_context_sign[c] < 0) out.push_back(c);
  return out;
}

VerificationReport verify_labeling(const TwoContextGeometry& g, const Labeling& lab, VerifyOptions opts) {
  for (const auto& [pt, op] : lab) {
    if (pt < 1 || pt > g.num_points()) throw LabelingMismatch("label for unknown point " + std::to_string(pt));
  }
  std::vector<const PauliObservable*> ops(static_cast<std::size_t>(g.num_points()) + 1, nullptr);
  for (int pt = 1; pt <= g.num_points(); ++pt) {
    auto it = lab.find(pt);
    if (it == lab.end()) throw LabelingMismatch("point " + std::to_string(pt) + " has no label");
    if (it->second.n_qubits() != lab.begin()->second.n_qubits()) {
      throw LabelingMismatch("labels mix " + std::to_string(lab.begin()->second.n_qubits()) + " and " +
                             std::to_string(it->second.n_qubits()) + " qubits");
    }
    ops[pt] = &it->second;
  }

  VerificationReport r;
  // Postulates 2 and 3' hold by construction of PauliObservable and TwoContextGeometry.
  r.postulates.observables = true;
  r.postulates.two_contexts = true;

  for (int c = 0; c < g.num_contexts(); ++c) {
    const auto& ctx = g.context(c);
    bool commuting = true;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      for (std::size_t j = i + 1; j < ctx.size(); ++j) {
        if (!commutes(*ops[ctx[i]], *ops[ctx[j]])) {
          commuting = false;
          r.failures.push_back("NonCommutingPair context " + std::to_string(c) + ": points " +
                               std::to_string(ctx[i]) + " and " + std::to_string(ctx[j]));
        }
      }
    }
    if (!commuting) {
      r.postulates.commuting_contexts = false;
      r.postulates.identity_products = false;
      r.per_context_sign.push_back(0);
      continue;
    }
    std::vector<PauliObservable> members;
    for (int pt : ctx) members.push_back(*ops[pt]);
    try {
      r.per_context_sign.push_back(context_product(members).sign);
    } catch (const NotProportionalToIdentity&) {
      r.postulates.identity_products = false;
      r.per_context_sign.push_back(0);
      r.failures.push_back("NotProportionalToIdentity context " + std::to_string(c));
    }
  }

  for (int a = 1; a <= g.num_points(); ++a) {
    for (int b = a + 1; b <= g.num_points(); ++b) {
      if (ops[a]->same_up_to_sign(*ops[b])) {
        r.distinct_labels = false;
        r.failures.push_back("DuplicateLabel points " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }

  for (int s : r.per_context_sign) r.negative_count += (s < 0);
  r.postulates.odd_negative = r.postulates.identity_products && (r.negative_count % 2 == 1);
  if (r.postulates.identity_products && !r.postulates.odd_negative) {
    r.failures.push_back("EvenNegativeCount " + std::to_string(r.negative_count));
  }
  r.is_contextual = r.postulates.first_four() && r.postulates.odd_negative &&
                    (r.distinct_labels || !opts.require_distinct);
  return r;
}

}  // namespace ctxgeo
