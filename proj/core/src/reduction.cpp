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

#include "dichoq/reduction.hpp"

#include <sstream>

namespace dichoq {

Factorization::Factorization(std::size_t total, std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n < 2 || m < 2 || n * m != total) {
    std::ostringstream os;
    os << "cannot factor " << total << " as " << n << " x " << m << " with both factors >= 2";
    throw BadFactorization(os.str());
  }
}

std::vector<Factorization> admissible_factorizations(std::size_t total) {
  std::vector<Factorization> out;
  for (std::size_t n = 2; n * 2 <= total; ++n)
    if (total % n == 0) out.emplace_back(total, n, total / n);
  return out;
}

namespace {

void require_dim(const ComplexMatrix& rho, const Factorization& f) {
  if (rho.dim() != f.total()) {
    std::ostringstream os;
    os << "matrix dimension " << rho.dim() << " does not match factorization " << f.n() << " x "
       << f.m();
    throw BadFactorization(os.str());
  }
}

DensityMatrix as_state(ComplexMatrix m, const char* what) {
  try {
    return validate_density(make_hermitian(std::move(m)));
  } catch (const InternalInvariantViolation&) {
    throw;
  } catch (const Error& e) {
    std::ostringstream os;
    os << what << " of a valid state is not a state: " << e.what();
    throw InternalInvariantViolation(os.str());
  }
}

}  // namespace

BlockView block_decompose(const ComplexMatrix& rho, const Factorization& f) {
  require_dim(rho, f);
  const std::size_t n = f.n(), m = f.m();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      ComplexMatrix b(m);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) b(p, q) = rho(j * m + p, k * m + q);
      blocks.push_back(std::move(b));
    }
  return BlockView(f, std::move(blocks));
}

BlockView block_decompose(const DensityMatrix& rho, const Factorization& f) {
  return block_decompose(rho.matrix(), f);
}

ComplexMatrix BlockView::reassemble() const {
  const std::size_t n = f_.n(), m = f_.m();
  ComplexMatrix out(f_.total());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& b = block(j, k);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) out(j * m + p, k * m + q) = b(p, q);
    }
  return out;
}

ComplexMatrix trace_blocks(const ComplexMatrix& rho, const Factorization& f) {
  require_dim(rho, f);
  const std::size_t n = f.n(), m = f.m();
  ComplexMatrix out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Complex t = 0.0;
      for (std::size_t p = 0; p < m; ++p) t += rho(j * m + p, k * m + p);
      out(j, k) = t;
    }
  return out;
}

ComplexMatrix sum_diagonal_blocks(const ComplexMatrix& rho, const Factorization& f) {
  require_dim(rho, f);
  const std::size_t n = f.n(), m = f.m();
  ComplexMatrix out(m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) out(p, q) += rho(j * m + p, j * m + q);
  return out;
}

DensityMatrix reduce_rho1(const DensityMatrix& rho, const Factorization& f) {
  return as_state(trace_blocks(rho.matrix(), f), "rho1");
}

DensityMatrix reduce_rho2(const DensityMatrix& rho, const Factorization& f) {
  return as_state(sum_diagonal_blocks(rho.matrix(), f), "rho2");
}

SwappedReductions reduce_swapped(const DensityMatrix& rho, const Factorization& f) {
  require_dim(rho.matrix(), f);
  const auto reblocked = f.swapped();
  return {as_state(sum_diagonal_blocks(rho.matrix(), reblocked), "rho1~"),
          as_state(trace_blocks(rho.matrix(), reblocked), "rho2~")};
}

DensityMatrix iterate_reduction(const DensityMatrix& rho, std::span<const ReductionStep> chain) {
  DensityMatrix current = rho;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& step = chain[i];
    if (current.dim() != step.factorization.total()) {
      std::ostringstream os;
      os << "reduction step " << i << ": state has dimension " << current.dim()
         << " but factorization is " << step.factorization.n() << " x " << step.factorization.m();
      throw BadFactorization(os.str());
    }
    current = step.keep == Keep::First ? reduce_rho1(current, step.factorization)
                                       : reduce_rho2(current, step.factorization);
  }
  return current;
}

}  // namespace dichoq
