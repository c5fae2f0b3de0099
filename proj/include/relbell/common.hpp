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

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace relbell {

using Vec3 = Eigen::Vector3d;
using Complex = std::complex<double>;

/// Which member of the back-to-back pair: slot 1 carries +p, slot 2 carries -p.
enum class Sign { plus, minus };

constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

/// Parses "+", "plus", "-" or "minus".
Sign parse_sign(std::string_view text);

}  // namespace relbell
