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

#include "ctxgeo/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ctxgeo {

namespace {

QubitWord width_mask(int n) { return n >= 32 ? ~QubitWord{0} : ((QubitWord{1} << n) - 1); }

int y_count(QubitWord x, QubitWord z) { return std::popcount(x & z); }

void require_same_width(const PauliElement& a, const PauliElement& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw QubitCountMismatch(a.n_qubits(), b.n_qubits());
  }
}

}  // namespace

PauliElement::PauliElement(int n_qubits, QubitWord x_bits, QubitWord z_bits, int phase_exp)
    : n_qubits_(n_qubits), x_(x_bits), z_(z_bits), phase_(((phase_exp % 4) + 4) % 4) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("n_qubits must be in 1.." + std::to_string(kMaxQubits));
  }
  if ((x_bits | z_bits) & ~width_mask(n_qubits)) {
    throw std::invalid_argument("bit-vector wider than n_qubits");
  }
}

bool PauliElement::is_hermitian() const { return (phase_ & 1) == (y_count(x_, z_) & 1); }

PauliObservable::PauliObservable(const PauliElement& element) : element_(element) {
  if (!element.is_hermitian()) {
    throw std::invalid_argument("observable must be Hermitian (phase_exp = x.z mod 2)");
  }
  if (element.is_identity_up_to_phase()) {
    throw std::invalid_argument("observable must not be the identity");
  }
}

PauliObservable PauliObservable::from_vector(int n_qubits, QubitWord x_bits, QubitWord z_bits) {
  return PauliObservable(PauliElement(n_qubits, x_bits, z_bits, y_count(x_bits, z_bits)));
}

int PauliObservable::sign() const {
  int rel = ((phase_exp() - y_count(x_bits(), z_bits())) % 4 + 4) % 4;
  return rel == 0 ? 1 : -1;
}

PauliObservable PauliObservable::negated() const {
  return PauliObservable(PauliElement(n_qubits(), x_bits(), z_bits(), phase_exp() + 2));
}

PauliObservable parse_observable(std::string_view text) {
  if (text.empty()) {
    throw PauliParseError(0, "empty observable string");
  }
  std::size_t pos = 0;
  int phase = 0;
  if (text[0] == '-') {
    phase = 2;
    pos = 1;
  }
  if (pos == text.size()) {
    throw PauliParseError(pos, "observable string has a sign but no letters");
  }
  int n = static_cast<int>(text.size() - pos);
  if (n > kMaxQubits) {
    throw PauliParseError(pos + kMaxQubits, "observable wider than " + std::to_string(kMaxQubits) + " qubits");
  }
  QubitWord x = 0;
  QubitWord z = 0;
  for (int q = 0; q < n; ++q) {
    char c = text[pos + q];
    QubitWord bit = QubitWord{1} << q;
    switch (c) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        phase += 1;
        break;
      default:
        throw PauliParseError(pos + q, std::string("illegal character '") + c + "' at position " +
                                           std::to_string(pos + q));
    }
  }
  PauliElement e(n, x, z, phase);
  if (e.is_identity_up_to_phase()) {
    throw PauliParseError(pos, "identity is not a valid observable");
  }
  return PauliObservable(e);
}

std::string format_element(const PauliElement& p) {
  int rel = ((p.phase_exp() - y_count(p.x_bits(), p.z_bits())) % 4 + 4) % 4;
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string out = kPrefix[rel];
  for (int q = 0; q < p.n_qubits(); ++q) {
    out += "IXZY"[int(p.x(q)) | (int(p.z(q)) << 1)];
  }
  return out;
}

std::string format_observable(const PauliObservable& p) { return format_element(p.element()); }

PauliElement multiply(const PauliElement& a, const PauliElement& b) {
  require_same_width(a, b);
  // Z^z X^x = (-1)^{z.x} X^x Z^z
  int swap = std::popcount(a.z_bits() & b.x_bits()) & 1;
  return PauliElement(a.n_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(),
                      a.phase_exp() + b.phase_exp() + 2 * swap);
}

bool commutes(const PauliElement& a, const PauliElement& b) {
  require_same_width(a, b);
  return symplectic(a.x_bits(), a.z_bits(), b.x_bits(), b.z_bits()) == 0;
}

SignedIdentity context_product(std::span<const PauliObservable> ops) {
  if (ops.empty()) {
    throw std::invalid_argument("context_product needs at least one operator");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    require_same_width(ops[0].element(), ops[i].element());
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(ops[j], ops[i])) {
        throw NonCommutingPair(j, i);
      }
    }
  }
  PauliElement acc = ops[0].element();
  for (std::size_t i = 1; i < ops.size(); ++i) {
    acc = multiply(acc, ops[i].element());
  }
  if (!acc.is_identity_up_to_phase()) {
    throw NotProportionalToIdentity();
  }
  if (acc.phase_exp() & 1) {
    throw std::logic_error("odd phase in a commuting product of observables");
  }
  return SignedIdentity{acc.phase_exp() == 0 ? 1 : -1};
}

}  // namespace ctxgeo
