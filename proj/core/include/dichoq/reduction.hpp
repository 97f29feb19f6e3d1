// Copyright 2026 The dichoq Authors
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

#include <cstddef>
#include <span>
#include <vector>

#include "dichoq/matcore.hpp"

namespace dichoq {

/// N = n * m with n, m >= 2. Composite index i = j * m + p, j the n-dimensional factor.
class Factorization {
 public:
  /// Throws BadFactorization.
  Factorization(std::size_t total, std::size_t n, std::size_t m);

  std::size_t total() const noexcept { return n_ * m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  Factorization swapped() const { return Factorization(total(), m_, n_); }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
};

/// Every (n, m) with n, m >= 2 and n * m == total, ordered by n.
std::vector<Factorization> admissible_factorizations(std::size_t total);

/// rho as an n x n array of m x m blocks R_jk.
class BlockView {
 public:
  const Factorization& factorization() const noexcept { return f_; }
  /// R_jk, m x m.
  const ComplexMatrix& block(std::size_t j, std::size_t k) const noexcept {
    return blocks_[j * f_.n() + k];
  }
  ComplexMatrix reassemble() const;

 private:
  friend BlockView block_decompose(const ComplexMatrix& rho, const Factorization& f);
  BlockView(Factorization f, std::vector<ComplexMatrix> blocks)
      : f_(f), blocks_(std::move(blocks)) {}

  Factorization f_;
  std::vector<ComplexMatrix> blocks_;
};

/// Throws BadFactorization if rho.dim() != f.total().
BlockView block_decompose(const ComplexMatrix& rho, const Factorization& f);
BlockView block_decompose(const DensityMatrix& rho, const Factorization& f);

/// (rho1)_jk = Tr R_jk without validation; accepts any square matrix of dimension f.total().
ComplexMatrix trace_blocks(const ComplexMatrix& rho, const Factorization& f);
/// sum_j R_jj without validation.
ComplexMatrix sum_diagonal_blocks(const ComplexMatrix& rho, const Factorization& f);

/// Tr_2 rho, n x n. Throws BadFactorization; InternalInvariantViolation if the result is not a
/// state.
DensityMatrix reduce_rho1(const DensityMatrix& rho, const Factorization& f);
/// Tr_1 rho, m x m.
DensityMatrix reduce_rho2(const DensityMatrix& rho, const Factorization& f);

/// Reductions with the roles of the two bases exchanged: rho re-blocked into an m x m array of
/// n x n blocks R~_pq(j, k) = rho(p * n + j, q * n + k).
struct SwappedReductions {
  /// sum_p R~_pp, n x n.
  DensityMatrix rho1_tilde;
  /// (Tr R~_pq), m x m.
  DensityMatrix rho2_tilde;
};
SwappedReductions reduce_swapped(const DensityMatrix& rho, const Factorization& f);

enum class Keep { First, Second };

struct ReductionStep {
  Factorization factorization;
  Keep keep;
};

/// Applies reduce_rho1 (Keep::First) or reduce_rho2 (Keep::Second) per step. Throws
/// BadFactorization naming the offending step.
DensityMatrix iterate_reduction(const DensityMatrix& rho, std::span<const ReductionStep> chain);

}  // namespace dichoq
