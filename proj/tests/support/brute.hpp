// Copyright 2026 The coexline Authors
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

// Brute-force enumeration helpers used only by the tests. They share no code
// with the library beyond the LatticePath type.

#ifndef COEXLINE_TESTS_BRUTE_HPP
#define COEXLINE_TESTS_BRUTE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace brute {

inline std::array<double, 3> nu(double a) {
  const double d = (a + 1) * (a + 1);
  return {1 / d, 2 * a / d, a * a / d};  // down, zero, up
}

/// Calls f(steps, probability) for every step sequence in {-1,0,1}^m.
inline void for_each_walk(double a, std::size_t m,
                          const std::function<void(const std::vector<int>&, double)>& f) {
  const auto p = nu(a);
  std::vector<int> steps(m, -1);
  for (;;) {
    double prob = 1;
    for (int s : steps) prob *= p[static_cast<std::size_t>(s + 1)];
    f(steps, prob);
    std::size_t j = 0;
    while (j < m && steps[j] == 1) steps[j++] = -1;
    if (j == m) return;
    ++steps[j];
  }
}

inline bool stays_nonnegative(const std::vector<int>& steps) {
  int h = 0;
  for (int s : steps) {
    h += s;
    if (h < 0) return false;
  }
  return true;
}

inline double survival(double a, std::size_t m) {
  double total = 0;
  for_each_walk(a, m, [&](const std::vector<int>& w, double p) {
    if (stays_nonnegative(w)) total += p;
  });
  return total;
}

/// Conditional law of the surviving walks, keyed by step sequence.
inline std::map<std::vector<int>, double> conditioned_law(double a, std::size_t m) {
  std::map<std::vector<int>, double> law;
  double total = 0;
  for_each_walk(a, m, [&](const std::vector<int>& w, double p) {
    if (!stays_nonnegative(w)) return;
    law[w] += p;
    total += p;
  });
  for (auto& [w, p] : law) p /= total;
  return law;
}

}  // namespace brute

#endif  // COEXLINE_TESTS_BRUTE_HPP
