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

#include "qsubctl/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qsubctl/errors.hpp"
#include "qsubctl/tolerances.hpp"

namespace qsubctl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxJacobiSweeps = 100;

std::string shape_of(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw DimensionError(std::string(what) + " must be square and nonempty, got " + shape_of(m));
    }
    if (!m.allFinite()) {
        throw InvalidArgument(std::string(what) + " has non-finite entries");
    }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch: " + shape_of(a) + " vs " + shape_of(b));
    }
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).norm() <= tol * std::max(1.0, a.norm());
}

bool is_anti_hermitian(const ComplexMatrix &a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a + a.adjoint()).norm() <= tol * std::max(1.0, a.norm());
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (u.rows() != u.cols()) return false;
    const auto n = u.rows();
    return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm() <= tol * std::sqrt(double(n));
}

Complex frobenius_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    // sum conj(a_ij) b_ij == tr(a^dagger b)
    return a.conjugate().cwiseProduct(b).sum();
}

double real_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    return (a.conjugate().cwiseProduct(b)).sum().real();
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    return a * b - b * a;
}

EigenDecomposition hermitian_eig(const ComplexMatrix &h) {
    require_square(h, "hermitian_eig input");
    if (!is_hermitian(h, 1e-8)) {
        throw ShapeError("hermitian_eig: input is not Hermitian (|H - H^dagger|_F = " +
                         std::to_string((h - h.adjoint()).norm()) + ")");
    }
    const Index n = h.rows();
    ComplexMatrix a = (h + h.adjoint()) * 0.5;
    ComplexMatrix v = ComplexMatrix::Identity(n, n);
    const double scale = a.norm();

    auto off_norm = [&] {
        double s = 0;
        for (Index q = 0; q < n; ++q)
            for (Index p = 0; p < n; ++p)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    bool converged = scale == 0.0 || n == 1;
    for (int sweep = 0; !converged && sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_norm() <= kEps * scale) {
            converged = true;
            break;
        }
        for (Index p = 0; p + 1 < n; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Negligible against both diagonal entries: drop it.
                if (sweep > 3 && 100.0 * mag <= kEps * std::abs(app) && 100.0 * mag <= kEps * std::abs(aqq)) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const Complex ph = apq / mag;
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex cph = std::conj(ph);

                // A <- A U, V <- V U on columns p, q.
                for (Index k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * cph * akq;
                    a(k, q) = s * akp + c * cph * akq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * cph * vkq;
                    v(k, q) = s * vkp + c * cph * vkq;
                }
                // A <- U^dagger A on rows p, q.
                for (Index k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * apk + c * ph * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged && off_norm() > 1e2 * kEps * scale) {
        throw NumericalError("hermitian_eig: Jacobi sweeps did not converge for dim " + std::to_string(n));
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index x, Index y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
    for (Index k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]).real();
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

ComplexMatrix matrix_exp(const ComplexMatrix &a) {
    require_square(a, "matrix_exp input");
    const Index n = a.rows();
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const ComplexMatrix b = a / std::ldexp(1.0, squarings);

    ComplexMatrix result = ComplexMatrix::Identity(n, n);
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * b) / double(k);
        result += term;
        if (term.norm() <= kEps * result.norm()) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

namespace {

template <typename Project>
std::optional<ComplexMatrix> gram_schmidt_step(std::span<const ComplexMatrix> basis, const ComplexMatrix &candidate,
                                               double tol, Project project) {
    require_square(candidate, "candidate");
    for (const auto &b : basis) require_same_dim(b, candidate);
    ComplexMatrix r = candidate;
    // Two passes keep the basis orthonormal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &b : basis) r -= project(b, r) * b;
    }
    const double norm = r.norm();
    if (norm <= std::max(tol * std::max(1.0, candidate.norm()), kAbsoluteFloor)) return std::nullopt;
    return r / norm;
}

}  // namespace

std::optional<ComplexMatrix> orthonormal_extend(std::span<const ComplexMatrix> basis, const ComplexMatrix &candidate,
                                                double tol) {
    return gram_schmidt_step(basis, candidate, tol,
                             [](const ComplexMatrix &b, const ComplexMatrix &r) { return Complex(real_inner(b, r)); });
}

std::optional<ComplexMatrix> orthonormal_extend_complex(std::span<const ComplexMatrix> basis,
                                                        const ComplexMatrix &candidate, double tol) {
    return gram_schmidt_step(basis, candidate, tol,
                             [](const ComplexMatrix &b, const ComplexMatrix &r) { return frobenius_inner(b, r); });
}

PiecewiseSchedule::PiecewiseSchedule(Index dim, std::vector<Segment> segments)
    : dim_(dim), segments_(std::move(segments)) {
    if (dim_ < 1) throw DimensionError("schedule dimension must be >= 1");
    for (const auto &s : segments_) validate(s);
}

void PiecewiseSchedule::append(ComplexMatrix hamiltonian, double duration) {
    Segment s{std::move(hamiltonian), duration};
    validate(s);
    segments_.push_back(std::move(s));
}

void PiecewiseSchedule::validate(const Segment &s) const {
    require_square(s.hamiltonian, "segment Hamiltonian");
    if (s.hamiltonian.rows() != dim_) {
        throw DimensionError("segment Hamiltonian is " + shape_of(s.hamiltonian) + ", schedule dimension is " +
                             std::to_string(dim_));
    }
    if (!is_hermitian(s.hamiltonian, 1e-10)) throw ShapeError("segment Hamiltonian is not Hermitian");
    if (!(s.duration >= 0.0) || !std::isfinite(s.duration)) {
        throw InvalidArgument("segment duration must be finite and >= 0");
    }
}

ComplexMatrix evolve_piecewise(const PiecewiseSchedule &schedule) {
    ComplexMatrix u = ComplexMatrix::Identity(schedule.dim(), schedule.dim());
    for (const auto &s : schedule.segments()) {
        u = matrix_exp(-kI * s.duration * s.hamiltonian) * u;
    }
    return u;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::VectorXcd vec(const ComplexMatrix &m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

ComplexMatrix unvec(const Eigen::VectorXcd &v, Index rows, Index cols) {
    if (v.size() != rows * cols) throw DimensionError("unvec: size mismatch");
    return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

}  // namespace qsubctl
