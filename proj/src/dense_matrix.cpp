// Copyright 2026 The qctx Authors
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

#include "qctx/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qctx/error.hpp"

namespace qctx {

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::outer(std::span<const Complex> v) {
    DenseMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    }
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

Complex DenseMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0;
    for (const auto &e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool DenseMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        }
    }
    return true;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &o) {
    if (o.dim_ != dim_) throw Error(ErrorCode::ShapeMismatch, "matrix sum of different sizes");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &o) {
    if (o.dim_ != dim_) throw Error(ErrorCode::ShapeMismatch, "matrix difference of different sizes");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(Complex s) {
    for (auto &e : entries_) e *= s;
    return *this;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "matrix product of different sizes");
    const std::size_t n = a.dim();
    DenseMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
        }
    }
    return m;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) throw Error(ErrorCode::ShapeMismatch, "vector length does not match matrix");
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex s = 0;
        for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    DenseMatrix m(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            const Complex s = a(ra, ca);
            if (s == Complex{}) continue;
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) m(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
            }
        }
    }
    return m;
}

DenseMatrix matrix_power(const DenseMatrix &a, unsigned k) {
    DenseMatrix result = DenseMatrix::identity(a.dim());
    for (unsigned i = 0; i < k; ++i) result = result * a;
    return result;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "comparing matrices of different sizes");
    double m = 0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

Complex trace_of_product(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "trace of product of different sizes");
    Complex t = 0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(r, k) * b(k, r);
    }
    return t;
}

EigenSystem hermitian_eigen(const DenseMatrix &m) {
    if (!m.is_hermitian(1e-10)) throw Error(ErrorCode::NotHermitian, "hermitian_eigen on a non-Hermitian matrix");
    const std::size_t n = m.dim();
    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);

    double total = 0;
    for (const auto &e : a.entries()) total += std::norm(e);
    const double threshold = 1e-30 * std::max(total, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        }
        if (off <= threshold) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                const Complex phase = apq / r;  // e^{i phi}
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                const Complex conj_phase = std::conj(phase);

                // A <- A G, with G = diag(1, e^{-i phi}) * real rotation on (p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * conj_phase * akq;
                    a(k, q) = s * akp + c * conj_phase * akq;
                }
                // A <- G^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * conj_phase * vkq;
                    v(k, q) = s * vkp + c * conj_phase * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    EigenSystem out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

}  // namespace qctx
