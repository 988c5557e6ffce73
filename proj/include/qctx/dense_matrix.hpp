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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qctx {

using Complex = std::complex<double>;

/// Square complex matrix, row-major. Sized for the few-qudit operators used here
/// (at most a few hundred rows), so every operation is a plain dense loop.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static DenseMatrix identity(std::size_t dim);
    /// |v><v| for a column vector v.
    static DenseMatrix outer(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    DenseMatrix adjoint() const;
    Complex trace() const;
    /// max_ij |a_ij|
    double max_abs() const;
    bool is_hermitian(double tol) const;

    DenseMatrix &operator+=(const DenseMatrix &o);
    DenseMatrix &operator-=(const DenseMatrix &o);
    DenseMatrix &operator*=(Complex s);

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
    friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix matrix_power(const DenseMatrix &a, unsigned k);
/// max |(a-b)_ij|
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);
/// Tr(a b) without forming the product.
Complex trace_of_product(const DenseMatrix &a, const DenseMatrix &b);

struct EigenSystem {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // column k is the eigenvector for values[k]
};

/// Cyclic complex Jacobi diagonalisation. Throws NotHermitian when the input
/// deviates from Hermitian by more than 1e-10.
EigenSystem hermitian_eigen(const DenseMatrix &m);

}  // namespace qctx
