// Copyright 2026 The Starlift Authors
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


#pragma once

#include <cstdint>
#include <random>

#include "starlift/numeric.hpp"

namespace starlift {

/// Seeded source for every sampled computation. Same seed, same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  Complex complex_normal();

  RMat real_gaussian(Eigen::Index rows, Eigen::Index cols);
  CMat complex_gaussian(Eigen::Index rows, Eigen::Index cols);
  /// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
  CMat unitary(Eigen::Index n);
  /// Haar-distributed real orthogonal matrix.
  RMat orthogonal(Eigen::Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace starlift
