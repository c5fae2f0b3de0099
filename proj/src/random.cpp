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

#include "relbell/random.hpp"

#include <cmath>
#include <numbers>

namespace relbell {

Vec3 UniformSource::sphere()
{
    double const z = 1 - 2 * next();
    double const phi = 2 * std::numbers::pi * next();
    double const rho = std::sqrt((1 - z) * (1 + z));
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

}  // namespace relbell
