/*
   Copyright 2026 quatpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>

#include "quaternion.hpp"

namespace quatpol {

// splitmix64; self-contained so that seeded runs are byte-identical across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish over [0, bound); modulo bias is irrelevant at desk scale.
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Inclusive range.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline Rational random_rational(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t num = rng.range(-max_num, max_num);
  const std::int64_t den = rng.range(1, max_den);
  return Rational(num, den);
}

inline Quaternion random_quaternion(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  return Quaternion(random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den),
                    random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den));
}

}  // namespace quatpol
