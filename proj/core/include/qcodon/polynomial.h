// Copyright 2026 The qcodon Authors
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

#ifndef QCODON_POLYNOMIAL_H_
#define QCODON_POLYNOMIAL_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qcodon {

/// Strictly ascending qubit indices; the empty set is the constant monomial.
using VariableSet = std::vector<int>;

/// Real multilinear polynomial over binary variables (q*q = q).
///
/// Terms are kept sparse, keyed by variable set, and coefficients with
/// magnitude below kPruneThreshold are dropped after every operation.
class Polynomial {
 public:
  static constexpr double kPruneThreshold = 1e-15;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  static Polynomial Constant(double value, int num_vars = 0);
  /// q_index
  static Polynomial Variable(int index, int num_vars = 0);
  /// 1 - q_index
  static Polynomial Complement(int index, int num_vars = 0);

  /// Adds `coefficient` times the product of `vars`. Duplicate indices are
  /// collapsed, so AddTerm({2, 2}, c) adds c*q2.
  void AddTerm(VariableSet vars, double coefficient);

  int num_vars() const { return num_vars_; }
  void set_num_vars(int n);
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<VariableSet, double>& terms() const { return terms_; }
  double coefficient(const VariableSet& vars) const;
  double constant_term() const { return coefficient({}); }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double k);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int num_vars_ = 0;
  std::map<VariableSet, double> terms_;
};

Polynomial Add(const Polynomial& p, const Polynomial& q);
/// Distributive expansion with q^2 = q.
Polynomial Multiply(const Polynomial& p, const Polynomial& q);
/// Throws Error(kNonFiniteScalar) for NaN or infinite `k`.
Polynomial Scale(const Polynomial& p, double k);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return Add(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  return Multiply(p, q);
}
inline Polynomial operator*(double k, const Polynomial& p) { return Scale(p, k); }
Polynomial operator-(const Polynomial& p, const Polynomial& q);

/// bits[k] is the value of q_k. Throws kLengthMismatch if bits.size() < num_vars.
double Evaluate(const Polynomial& p, std::span<const std::uint8_t> bits);

inline constexpr int kMaxDiagonalVariables = 26;

/// Energy of every computational basis state. Entry b corresponds to the
/// bitstring with qubit 0 as the most significant bit of b. Entries are
/// accumulated in the same term order as Evaluate, so they agree exactly.
/// Throws kTooManyVariables for n > 26 and kLengthMismatch for n < num_vars.
std::vector<double> ToDiagonal(const Polynomial& p, int n);

}  // namespace qcodon

#endif  // QCODON_POLYNOMIAL_H_
