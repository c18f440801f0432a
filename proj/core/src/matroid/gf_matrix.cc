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

#include "instcomp/matroid/gf_matrix.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"

namespace instcomp {

bool IsPrime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

absl::StatusOr<GfMatrix> GfMatrix::Create(std::uint64_t p, std::size_t rows,
                                          std::size_t cols) {
  if (p > kMaxPrime || !IsPrime(p)) {
    return absl::InvalidArgumentError(
        absl::StrCat("field order ", p, " is not a prime <= ", kMaxPrime));
  }
  GfMatrix m;
  m.p_ = p;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_.assign(rows * cols, 0);
  return m;
}

absl::StatusOr<GfMatrix> GfMatrix::FromRows(
    std::uint64_t p, std::size_t cols,
    const std::vector<std::vector<std::int64_t>>& rows) {
  auto m = Create(p, rows.size(), cols);
  if (!m.ok()) return m.status();
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      return absl::InvalidArgumentError(absl::StrCat(
          "matrix row ", r, " has ", rows[r].size(), " entries, expected ",
          cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const std::int64_t residue = ((rows[r][c] % sp) + sp) % sp;
      m->set(r, c, static_cast<std::uint64_t>(residue));
    }
  }
  return m;
}

std::uint64_t GfMatrix::Inverse(std::uint64_t a) const {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return result;
}

namespace {

// Row-reduces `work` (rows x cols, row-major) in place; returns the rank.
std::size_t Eliminate(std::vector<std::uint64_t>& work, std::size_t rows,
                      std::size_t cols, std::uint64_t p,
                      const GfMatrix& field) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && work[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) {
        std::swap(work[pivot * cols + k], work[rank * cols + k]);
      }
    }
    const std::uint64_t inv = field.Inverse(work[rank * cols + c]);
    for (std::size_t k = 0; k < cols; ++k) {
      work[rank * cols + k] = work[rank * cols + k] * inv % p;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = work[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        work[r * cols + k] =
            (work[r * cols + k] + (p - factor) * work[rank * cols + k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t GfMatrix::RankOfColumns(std::span<const std::size_t> columns) const {
  const std::size_t k = columns.size();
  std::vector<std::uint64_t> work(rows_ * k);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < k; ++j) work[r * k + j] = at(r, columns[j]);
  }
  return Eliminate(work, rows_, k, p_, *this);
}

GfMatrix GfMatrix::WithColumns(std::span<const std::size_t> keep) const {
  GfMatrix out;
  out.p_ = p_;
  out.rows_ = rows_;
  out.cols_ = keep.size();
  out.data_.assign(out.rows_ * out.cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out.data_[r * out.cols_ + j] = at(r, keep[j]);
    }
  }
  return out;
}

absl::StatusOr<GfMatrix> GfMatrix::ContractColumns(
    std::span<const std::size_t> columns) const {
  GfMatrix work = *this;
  std::vector<bool> pivot_row(rows_, false);
  for (std::size_t c : columns) {
    std::size_t pivot = 0;
    while (pivot < rows_ && (pivot_row[pivot] || work.at(pivot, c) == 0)) {
      ++pivot;
    }
    if (pivot == rows_) {
      return absl::InvalidArgumentError(
          "contracted columns are linearly dependent");
    }
    pivot_row[pivot] = true;
    const std::uint64_t inv = Inverse(work.at(pivot, c));
    for (std::size_t k = 0; k < cols_; ++k) {
      work.data_[pivot * cols_ + k] = work.at(pivot, k) * inv % p_;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot) continue;
      const std::uint64_t factor = work.at(r, c);
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols_; ++k) {
        work.data_[r * cols_ + k] =
            (work.at(r, k) + (p_ - factor) * work.at(pivot, k)) % p_;
      }
    }
  }
  std::vector<bool> drop_col(cols_, false);
  for (std::size_t c : columns) drop_col[c] = true;

  GfMatrix out;
  out.p_ = p_;
  out.rows_ = static_cast<std::size_t>(
      std::count(pivot_row.begin(), pivot_row.end(), false));
  out.cols_ = cols_ - static_cast<std::size_t>(
                          std::count(drop_col.begin(), drop_col.end(), true));
  out.data_.reserve(out.rows_ * out.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (pivot_row[r]) continue;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!drop_col[k]) out.data_.push_back(work.at(r, k));
    }
  }
  return out;
}

}  // namespace instcomp
