// Copyright 2026 The qsubctl Authors
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

#ifndef QSUBCTL_TOLERANCES_HPP
#define QSUBCTL_TOLERANCES_HPP

namespace qsubctl {

/// Absolute floor under every relative threshold.
inline constexpr double kAbsoluteFloor = 1e-12;

/// Numerical policy for a pipeline run. Every threshold is relative to the
/// norm of the quantity it is compared against.
struct Tolerances {
    /// Rank cut: singular/eigen values below rank * (largest) count as zero.
    double rank = 1e-9;
    /// Invariant-subspace leakage allowed, relative to max(1, |L|_F).
    double invariance = 1e-8;
    /// Minimum gap separating two eigenvalue clusters of a commutant element.
    double cluster_gap = 1e-7;
    /// Orthonormality of frames.
    double orthonormal = 1e-9;
    /// Group element identification, scaled by sqrt(dim) at use.
    double group = 1e-8;
    /// Fresh draws allowed before a genericity failure is reported.
    int retry_limit = 5;
};

}  // namespace qsubctl

#endif  // QSUBCTL_TOLERANCES_HPP
