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

// Draws a few stationary configurations on the coexistence line and prints
// where the shock sits and the density on either side of it.

#include <cstdio>

#include "coexline/coexline.hpp"

int main() {
  using namespace coexline;
  const double a = 3.0;
  const std::size_t n = 400;
  const StationarySampler sampler(a, a, n);
  for (std::uint64_t replica = 0; replica < 5; ++replica) {
    Stream rng = Stream::for_replica(2026, replica);
    const DenisovSample s = sampler(rng);
    const std::size_t k = s.tau_star;
    const double left = k ? static_cast<double>(s.S_primed[k]) / static_cast<double>(k) : 0.0;
    const double right = k < n ? static_cast<double>(s.S_primed[n] - s.S_primed[k]) /
                                     static_cast<double>(n - k)
                               : 0.0;
    std::printf("replica %llu: shock at %4zu/%zu  density left %.3f  right %.3f\n",
                static_cast<unsigned long long>(replica), k, n, left, right);
  }
  std::printf("expected densities: left %.3f, right %.3f\n", 1.0 / (1.0 + a), a / (1.0 + a));
}
