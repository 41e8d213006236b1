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

#ifndef CTXGEO_PAULI_HPP
#define CTXGEO_PAULI_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxgeo {

/// Widest supported register. Qubit k (1-based) lives in bit k-1 of the x/z words.
inline constexpr int kMaxQubits = 32;

using QubitWord = std::uint32_t;

class PauliParseError : public std::invalid_argument {
 public:
  PauliParseError(std::size_t position, const std::string& message)
      : std::invalid_argument(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class QubitCountMismatch : public std::invalid_argument {
 public:
  QubitCountMismatch(int a, int b)
      : std::invalid_argument("qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A context whose members fail to commute. Indices refer to positions in the input list.
class NonCommutingPair : public std::runtime_error {
 public:
  NonCommutingPair(std::size_t i, std::size_t j)
      : std::runtime_error("operators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute"),
        first(i),
        second(j) {}
  std::size_t first;
  std::size_t second;
};

class NotProportionalToIdentity : public std::runtime_error {
 public:
  NotProportionalToIdentity() : std::runtime_error("context product is not proportional to the identity") {}
};

/// i^phase_exp * X^x * Z^z, tensored qubit by qubit.
class PauliElement {
 public:
  PauliElement() = default;
  PauliElement(int n_qubits, QubitWord x_bits, QubitWord z_bits, int phase_exp);

  static PauliElement identity(int n_qubits) { return PauliElement(n_qubits, 0, 0, 0); }

  int n_qubits() const { return n_qubits_; }
  QubitWord x_bits() const { return x_; }
  QubitWord z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  bool x(int qubit) const { return (x_ >> qubit) & 1U; }
  bool z(int qubit) const { return (z_ >> qubit) & 1U; }

  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const;

  friend bool operator==(const PauliElement&, const PauliElement&) = default;

 private:
  int n_qubits_ = 0;
  QubitWord x_ = 0;
  QubitWord z_ = 0;
  int phase_ = 0;
};

/// A Hermitian, non-identity Pauli operator. Construction enforces both.
class PauliObservable {
 public:
  explicit PauliObservable(const PauliElement& element);

  /// The + representative of a symplectic vector: phase chosen so the operator is
  /// the plain letter product (one factor of i per Y).
  static PauliObservable from_vector(int n_qubits, QubitWord x_bits, QubitWord z_bits);

  const PauliElement& element() const { return element_; }
  int n_qubits() const { return element_.n_qubits(); }
  QubitWord x_bits() const { return element_.x_bits(); }
  QubitWord z_bits() const { return element_.z_bits(); }
  int phase_exp() const { return element_.phase_exp(); }

  /// +1 or -1 relative to the letter product.
  int sign() const;
  PauliObservable negated() const;
  bool same_up_to_sign(const PauliObservable& other) const {
    return x_bits() == other.x_bits() && z_bits() == other.z_bits();
  }

  friend bool operator==(const PauliObservable&, const PauliObservable&) = default;

 private:
  PauliElement element_;
};

struct SignedIdentity {
  int sign = 1;
  friend bool operator==(const SignedIdentity&, const SignedIdentity&) = default;
};

PauliObservable parse_observable(std::string_view text);
std::string format_observable(const PauliObservable& p);
/// Renders any element, including non-Hermitian phases ("i", "-i" prefixes).
std::string format_element(const PauliElement& p);

PauliElement multiply(const PauliElement& a, const PauliElement& b);
bool commutes(const PauliElement& a, const PauliElement& b);
inline bool commutes(const PauliObservable& a, const PauliObservable& b) { return commutes(a.element(), b.element()); }

/// Symplectic form x_a.z_b + z_a.x_b mod 2 on the bit words.
inline int symplectic(QubitWord ax, QubitWord az, QubitWord bx, QubitWord bz) {
  return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

/// Product of a mutually commuting list whose letters cancel; the result is +-Id.
/// Throws NonCommutingPair or NotProportionalToIdentity.
SignedIdentity context_product(std::span<const PauliObservable> ops);

}  // namespace ctxgeo

#endif  // CTXGEO_PAULI_HPP
