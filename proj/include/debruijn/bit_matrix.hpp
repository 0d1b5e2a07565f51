/*
 * Copyright 2026 The debruijn-lfsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace debruijn {

/// Square or rectangular matrix over GF(2) with at most 64 columns.
/// Row r is a packed word; bit c holds entry (r, c). Vectors are row vectors
/// and multiply from the left: v * M.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), 0) {}

    static BitMatrix identity(int n);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    std::uint64_t row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    void set_row(int r, std::uint64_t bits) { rows_[static_cast<std::size_t>(r)] = bits; }
    bool get(int r, int c) const { return (row(r) >> c) & 1U; }
    void set(int r, int c, bool value);

    /// v * M where bit r of v selects row r.
    std::uint64_t apply(std::uint64_t v) const;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    BitMatrix pow(std::uint64_t k) const;
    int rank() const;
    /// Inverse of a square matrix, or nullopt when singular.
    std::optional<BitMatrix> inverse() const;

private:
    int cols_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Solves x * M = b for square M (equivalently M^T x^T = b^T). Returns
/// nullopt when M is singular.
std::optional<std::uint64_t> solve_left(const BitMatrix& m, std::uint64_t b);

}  // namespace debruijn
