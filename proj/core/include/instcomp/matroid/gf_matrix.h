// Copyright 2026 The Authors.
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

#ifndef INSTCOMP_MATROID_GF_MATRIX_H_
#define INSTCOMP_MATROID_GF_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace instcomp {

inline constexpr std::uint64_t kDefaultPrime = 1'000'003;
// Products of two residues must fit in 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool IsPrime(std::uint64_t p);

// Dense row-major matrix over GF(p), entries kept in [0, p).
class GfMatrix {
 public:
  GfMatrix() = default;
  // p must be prime and at most kMaxPrime.
  static absl::StatusOr<GfMatrix> Create(std::uint64_t p, std::size_t rows,
                                         std::size_t cols);
  // Entries are reduced mod p, negatives included.
  static absl::StatusOr<GfMatrix> FromRows(
      std::uint64_t p, std::size_t cols,
      const std::vector<std::vector<std::int64_t>>& rows);

  std::uint64_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t value) {
    data_[r * cols_ + c] = value % p_;
  }

  // Rank of the submatrix formed by the listed columns.
  std::size_t RankOfColumns(std::span<const std::size_t> columns) const;

  GfMatrix WithColumns(std::span<const std::size_t> keep) const;

  // Pivots on each listed column in turn (which must be linearly independent),
  // clears the column everywhere else, then drops the pivot rows and the
  // listed columns. The result represents the contraction of those columns.
  absl::StatusOr<GfMatrix> ContractColumns(
      std::span<const std::size_t> columns) const;

  std::uint64_t Inverse(std::uint64_t a) const;

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  std::uint64_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace instcomp

#endif  // INSTCOMP_MATROID_GF_MATRIX_H_
