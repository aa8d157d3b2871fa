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

#include "qcodon/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

using Point = std::vector<double>;

// Counts evaluations against the budget and records the best-so-far trace.
class BudgetedObjective {
 public:
  BudgetedObjective(const Objective& f, int budget, MinimizeResult& out)
      : f_(f), budget_(budget), out_(out) {}

  bool exhausted() const { return out_.evaluations >= budget_; }

  std::optional<double> operator()(const Point& x) {
    if (exhausted()) return std::nullopt;
    const double v = f_(x);
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteObjective, "objective returned " + std::to_string(v));
    ++out_.evaluations;
    if (out_.trace.empty() || v < out_.value) {
      out_.value = v;
      out_.theta = x;
    }
    out_.trace.push_back(out_.value);
    return v;
  }

 private:
  const Objective& f_;
  int budget_;
  MinimizeResult& out_;
};

struct Vertex {
  Point x;
  double f;
};

Point Affine(const Point& a, const Point& b, double t) {
  // a + t (b - a)
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

// Runs Nelder-Mead from `simplex` until convergence or budget exhaustion.
void Descend(std::vector<Vertex>& simplex, BudgetedObjective& f,
             const NelderMeadOptions& options) {
  const std::size_t n = simplex.size() - 1;
  const double dn = static_cast<double>(n);
  // Dimension-adaptive coefficients (Gao and Han); classic values in 1-D.
  const bool adaptive = n >= 2;
  const double reflect = 1.0;
  const double expand = adaptive ? 1.0 + 2.0 / dn : 2.0;
  const double contract = adaptive ? 0.75 - 1.0 / (2.0 * dn) : 0.5;
  const double shrink = adaptive ? 1.0 - 1.0 / dn : 0.5;
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  while (!f.exhausted()) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter, std::abs(simplex[i].x[k] - best.x[k]));
      }
    }
    if (worst.f - best.f <= options.value_tolerance && diameter <= options.size_tolerance) return;

    Point centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k] / dn;
    }
    const Point xr = Affine(centroid, worst.x, -reflect);
    const auto fr = f(xr);
    if (!fr) return;

    if (*fr < best.f) {
      const Point xe = Affine(centroid, worst.x, -reflect * expand);
      const auto fe = f(xe);
      if (!fe) return;
      simplex.back() = *fe < *fr ? Vertex{xe, *fe} : Vertex{xr, *fr};
      continue;
    }
    if (*fr < simplex[n - 1].f) {
      simplex.back() = {xr, *fr};
      continue;
    }
    bool accepted = false;
    if (*fr < worst.f) {
      const Point xc = Affine(centroid, worst.x, -reflect * contract);
      const auto fc = f(xc);
      if (!fc) return;
      if (*fc <= *fr) {
        simplex.back() = {xc, *fc};
        accepted = true;
      }
    } else {
      const Point xc = Affine(centroid, worst.x, contract);
      const auto fc = f(xc);
      if (!fc) return;
      if (*fc < worst.f) {
        simplex.back() = {xc, *fc};
        accepted = true;
      }
    }
    if (accepted) continue;
    for (std::size_t i = 1; i <= n; ++i) {
      Point xs = Affine(simplex[0].x, simplex[i].x, shrink);
      const auto fs = f(xs);
      if (!fs) return;
      simplex[i] = {std::move(xs), *fs};
    }
  }
}

}  // namespace

MinimizeResult Minimize(const Objective& objective, std::vector<double> theta0, int budget,
                        std::uint64_t seed, const NelderMeadOptions& options) {
  if (budget < 1) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 1");
  MinimizeResult result;
  result.trace.reserve(static_cast<std::size_t>(budget));
  BudgetedObjective f(objective, budget, result);
  const auto f0 = f(theta0);
  const std::size_t n = theta0.size();
  if (n == 0) return result;

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Vertex start{theta0, *f0};
  bool first = true;
  while (!f.exhausted()) {
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(start);
    for (std::size_t k = 0; k < n && !f.exhausted(); ++k) {
      Point x = start.x;
      if (first) {
        x[k] += options.initial_step;
      } else {
        x[k] += coin(rng) ? options.restart_step : -options.restart_step;
      }
      const auto fx = f(x);
      if (!fx) break;
      simplex.push_back({std::move(x), *fx});
    }
    first = false;
    if (simplex.size() < n + 1) break;
    Descend(simplex, f, options);
    start = {result.theta, result.value};
  }
  return result;
}

}  // namespace qcodon
