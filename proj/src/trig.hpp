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

#include <cmath>

namespace relbell::detail {

// The double nearest pi/2 (or pi) leaves a ~1e-16 residue in cos/sin. Snap it
// so axis-aligned and collinear momenta produce exact zeros.
inline double snap_zero(double v)
{
    return std::abs(v) < 1e-15 ? 0.0 : v;
}

inline double snapped_cos(double x)
{
    return snap_zero(std::cos(x));
}

inline double snapped_sin(double x)
{
    return snap_zero(std::sin(x));
}

}  // namespace relbell::detail
