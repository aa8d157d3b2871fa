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

#include "qcodon/polynomial.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

VariableSet Union(const VariableSet& a, const VariableSet& b) {
  VariableSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void Accumulate(std::map<VariableSet, double>& terms, VariableSet vars, double c) {
  auto [it, inserted] = terms.try_emplace(std::move(vars), c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < Polynomial::kPruneThreshold) terms.erase(it);
}

}  // namespace

Polynomial Polynomial::Constant(double value, int num_vars) {
  Polynomial p(num_vars);
  p.AddTerm({}, value);
  return p;
}

Polynomial Polynomial::Variable(int index, int num_vars) {
  Polynomial p(std::max(num_vars, index + 1));
  p.AddTerm({index}, 1.0);
  return p;
}

Polynomial Polynomial::Complement(int index, int num_vars) {
  Polynomial p(std::max(num_vars, index + 1));
  p.AddTerm({}, 1.0);
  p.AddTerm({index}, -1.0);
  return p;
}

void Polynomial::AddTerm(VariableSet vars, double coefficient) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (!vars.empty()) {
    if (vars.front() < 0) {
      throw Error(ErrorCode::kIndexOutOfRange, "negative variable index");
    }
    num_vars_ = std::max(num_vars_, vars.back() + 1);
  }
  Accumulate(terms_, std::move(vars), coefficient);
}

void Polynomial::set_num_vars(int n) {
  if (!terms_.empty()) {
    int needed = 0;
    for (const auto& [vars, c] : terms_) {
      if (!vars.empty()) needed = std::max(needed, vars.back() + 1);
    }
    if (n < needed) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "num_vars " + std::to_string(n) + " below highest variable");
    }
  }
  num_vars_ = n;
}

int Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [vars, c] : terms_) d = std::max(d, vars.size());
  return static_cast<int>(d);
}

double Polynomial::coefficient(const VariableSet& vars) const {
  const auto it = terms_.find(vars);
  return it == terms_.end() ? 0.0 : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  num_vars_ = std::max(num_vars_, other.num_vars_);
  for (const auto& [vars, c] : other.terms_) Accumulate(terms_, vars, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  num_vars_ = std::max(num_vars_, other.num_vars_);
  for (const auto& [vars, c] : other.terms_) Accumulate(terms_, vars, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double k) {
  if (!std::isfinite(k)) {
    throw Error(ErrorCode::kNonFiniteScalar, "scale factor is not finite");
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= k;
    if (std::abs(it->second) < kPruneThreshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Polynomial Add(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  r += q;
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  r -= q;
  return r;
}

Polynomial Multiply(const Polynomial& p, const Polynomial& q) {
  Polynomial r(std::max(p.num_vars(), q.num_vars()));
  std::map<VariableSet, double> acc;
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      auto [it, inserted] = acc.try_emplace(Union(a, b), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  // Prune once at the end so intermediate cancellations cannot drop a term
  // that later terms would have revived.
  for (auto& [vars, c] : acc) {
    if (std::abs(c) >= Polynomial::kPruneThreshold) r.AddTerm(vars, c);
  }
  return r;
}

Polynomial Scale(const Polynomial& p, double k) {
  Polynomial r = p;
  r *= k;
  return r;
}

double Evaluate(const Polynomial& p, std::span<const std::uint8_t> bits) {
  if (bits.size() < static_cast<std::size_t>(p.num_vars())) {
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(bits.size()) + " bits for " +
                    std::to_string(p.num_vars()) + " variables");
  }
  double total = 0.0;
  for (const auto& [vars, c] : p.terms()) {
    bool on = true;
    for (int v : vars) {
      if (!bits[static_cast<std::size_t>(v)]) {
        on = false;
        break;
      }
    }
    if (on) total += c;
  }
  return total;
}

std::vector<double> ToDiagonal(const Polynomial& p, int n) {
  if (n > kMaxDiagonalVariables) {
    throw Error(ErrorCode::kTooManyVariables,
                std::to_string(n) + " variables exceeds the limit of " +
                    std::to_string(kMaxDiagonalVariables));
  }
  if (n < p.num_vars() || n < 0) {
    throw Error(ErrorCode::kLengthMismatch,
                "diagonal over " + std::to_string(n) + " qubits for " +
                    std::to_string(p.num_vars()) + " variables");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t all = dim - 1;
  std::vector<double> diagonal(dim, 0.0);
  for (const auto& [vars, c] : p.terms()) {
    std::uint64_t mask = 0;
    for (int v : vars) mask |= std::uint64_t{1} << (n - 1 - v);
    // Every index whose bits include `mask`: mask | s for each submask s of
    // the free bits.
    const std::uint64_t free = all & ~mask;
    std::uint64_t s = free;
    while (true) {
      diagonal[mask | s] += c;
      if (s == 0) break;
      s = (s - 1) & free;
    }
  }
  return diagonal;
}

}  // namespace qcodon
