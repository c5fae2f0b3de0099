// Copyright 2026 The relbell Authors
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

#include "relbell/common.hpp"

namespace relbell {

/// Seeded variates that are identical across standard libraries: the
/// mt19937_64 engine output is fixed by the standard, and uniforms are
/// built as (engine() >> 11) * 2^-53 instead of through a distribution.
class UniformSource
{
  public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

    //! Uniform on [0, 1)
    double next() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

    //! Uniform on the unit sphere (uniform cos theta, uniform phi)
    Vec3 sphere();

  private:
    std::mt19937_64 engine_;
};

}  // namespace relbell
