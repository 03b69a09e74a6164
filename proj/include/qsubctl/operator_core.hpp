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

#ifndef QSUBCTL_OPERATOR_CORE_HPP
#define QSUBCTL_OPERATOR_CORE_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qsubctl {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense square complex matrix. Hamiltonians, unitaries and algebra elements
/// all travel as this type.
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Throws DimensionError unless `m` is square and nonempty, InvalidArgument
/// if any entry is NaN or infinite.
void require_square(const ComplexMatrix &m, const char *what = "matrix");
/// Throws DimensionError unless `a` and `b` have the same shape.
void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b);

/// |A - A^dagger|_F <= tol * max(1, |A|_F).
bool is_hermitian(const ComplexMatrix &a, double tol = 1e-10);
/// |A + A^dagger|_F <= tol * max(1, |A|_F).
bool is_anti_hermitian(const ComplexMatrix &a, double tol = 1e-10);
/// |U^dagger U - I|_F <= tol * sqrt(dim).
bool is_unitary(const ComplexMatrix &u, double tol = 1e-10);

/// Hilbert-Schmidt product tr(A^dagger B).
Complex frobenius_inner(const ComplexMatrix &a, const ComplexMatrix &b);
/// Re tr(A^dagger B); the inner product on real spans of matrices.
double real_inner(const ComplexMatrix &a, const ComplexMatrix &b);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigenDecomposition {
    RealVector values;     // ascending
    ComplexMatrix vectors; // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws ShapeError on non-Hermitian input and NumericalError if
/// the off-diagonal mass does not vanish within the sweep budget.
EigenDecomposition hermitian_eig(const ComplexMatrix &h);

/// e^A by scaling and squaring around a Taylor core summed to machine
/// precision.
ComplexMatrix matrix_exp(const ComplexMatrix &a);

/// One Gram-Schmidt step in the real span of `basis` under Re tr(A^dagger B).
/// Returns the normalized residual of `candidate`, or nothing when the
/// residual norm is at most tol * max(1, |candidate|_F).
std::optional<ComplexMatrix> orthonormal_extend(std::span<const ComplexMatrix> basis,
                                                const ComplexMatrix &candidate, double tol);

/// Same as orthonormal_extend but over complex scalars, tr(A^dagger B).
std::optional<ComplexMatrix> orthonormal_extend_complex(std::span<const ComplexMatrix> basis,
                                                        const ComplexMatrix &candidate, double tol);

struct Segment {
    ComplexMatrix hamiltonian;
    double duration = 0.0;
};

/// Piecewise-constant control schedule: each segment holds a Hermitian
/// Hamiltonian for a nonnegative duration (hbar = 1). All segments act on a
/// space of the dimension fixed at construction.
class PiecewiseSchedule {
   public:
    explicit PiecewiseSchedule(Index dim, std::vector<Segment> segments = {});

    void append(ComplexMatrix hamiltonian, double duration);

    Index dim() const noexcept { return dim_; }
    const std::vector<Segment> &segments() const noexcept { return segments_; }
    bool empty() const noexcept { return segments_.empty(); }

   private:
    void validate(const Segment &s) const;

    Index dim_;
    std::vector<Segment> segments_;
};

/// Time-ordered product exp(-i H_k t_k) ... exp(-i H_1 t_1).
ComplexMatrix evolve_piecewise(const PiecewiseSchedule &schedule);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Column-major vectorization helpers: vec(A X B) = (B^T (x) A) vec(X).
Eigen::VectorXcd vec(const ComplexMatrix &m);
ComplexMatrix unvec(const Eigen::VectorXcd &v, Index rows, Index cols);

}  // namespace qsubctl

#endif  // QSUBCTL_OPERATOR_CORE_HPP
