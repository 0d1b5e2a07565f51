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

#include "debruijn/bit_matrix.hpp"

#include <utility>

namespace debruijn {

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set_row(i, std::uint64_t{1} << i);
    return m;
}

void BitMatrix::set(int r, int c, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << c;
    auto& word = rows_[static_cast<std::size_t>(r)];
    word = value ? (word | mask) : (word & ~mask);
}

std::uint64_t BitMatrix::apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (std::size_t r = 0; v != 0; ++r, v >>= 1)
        if (v & 1U) out ^= rows_[r];
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) out.set_row(r, b.apply(a.row(r)));
    return out;
}

BitMatrix BitMatrix::pow(std::uint64_t k) const {
    BitMatrix result = identity(rows());
    BitMatrix base = *this;
    while (k != 0) {
        if (k & 1U) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

int BitMatrix::rank() const {
    std::vector<std::uint64_t> work = rows_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows(); ++c) {
        const std::uint64_t mask = std::uint64_t{1} << c;
        int pivot = -1;
        for (int r = rank; r < rows(); ++r)
            if (work[static_cast<std::size_t>(r)] & mask) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < rows(); ++r)
            if (r != rank && (work[static_cast<std::size_t>(r)] & mask))
                work[static_cast<std::size_t>(r)] ^= work[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    const int n = rows();
    if (n != cols_) return std::nullopt;
    std::vector<std::uint64_t> work = rows_;
    BitMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        const std::uint64_t mask = std::uint64_t{1} << c;
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (work[static_cast<std::size_t>(r)] & mask) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(c)]);
        std::swap(inv.rows_[static_cast<std::size_t>(pivot)], inv.rows_[static_cast<std::size_t>(c)]);
        for (int r = 0; r < n; ++r) {
            if (r == c || !(work[static_cast<std::size_t>(r)] & mask)) continue;
            work[static_cast<std::size_t>(r)] ^= work[static_cast<std::size_t>(c)];
            inv.rows_[static_cast<std::size_t>(r)] ^= inv.rows_[static_cast<std::size_t>(c)];
        }
    }
    return inv;
}

std::optional<std::uint64_t> solve_left(const BitMatrix& m, std::uint64_t b) {
    auto inv = m.inverse();
    if (!inv) return std::nullopt;
    return inv->apply(b);
}

}  // namespace debruijn
