#pragma once

#include <optional>
#include <vector>

#include "ramsey/foundation.hpp"

namespace ramsey {

class RationalMatrix {
 public:
  RationalMatrix(uint32_t rows, uint32_t cols, std::vector<Rational> entries);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  const Rational& at(uint32_t i, uint32_t j) const { return entries_[i * cols_ + j]; }
  Rational& at(uint32_t i, uint32_t j) { return entries_[i * cols_ + j]; }

  std::vector<Rational> column(uint32_t j) const;
  // M * x for a natural vector x (size cols).
  std::vector<Rational> apply(const std::vector<uint64_t>& x) const;

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  uint32_t rows_, cols_;
  std::vector<Rational> entries_;  // row-major
};

// Ordered column partition I_1..I_r with block-1 sum zero and every later
// block sum expressed over the columns of all earlier blocks. combos[t-1]
// holds the coefficients for block t+1's sum, aligned with the concatenation
// blocks[0] + ... + blocks[t-1] of earlier column indices.
struct ColumnsConditionCertificate {
  std::vector<std::vector<uint32_t>> blocks;
  std::vector<std::vector<Rational>> combos;
};

// Exhaustive search over ordered column partitions (cols <= 8). Returns the
// first certificate in enumeration order, or nullopt.
std::optional<ColumnsConditionCertificate> columns_condition(const RationalMatrix& M);

// Re-checks a certificate by exact arithmetic: partition validity, zero
// block-1 sum, and every stated combination.
bool replay_columns_certificate(const RationalMatrix& M,
                                const ColumnsConditionCertificate& cert);

struct FirstEntriesResult {
  bool satisfied = false;
  // Topmost nonzero entry per column; 0 for all-zero columns.
  std::vector<Rational> first_entries;
};

// Every column's topmost nonzero entry must be positive. Throws ZeroRow if
// some row is entirely zero.
FirstEntriesResult first_entries_condition(const RationalMatrix& M);

// Least x in [1..x_max]^cols (lexicographic) with every entry of M*x a
// natural number lying in A.
std::optional<std::vector<uint64_t>> find_image_in_set(const RationalMatrix& M,
                                                       const SubsetMask& A, uint64_t x_max);

// Least x in [1..x_max]^cols (lexicographic) with M*x = 0 and every entry of
// x in A.
std::optional<std::vector<uint64_t>> find_kernel_in_set(const RationalMatrix& M,
                                                        const SubsetMask& A, uint64_t x_max);

// Entries of M*x as naturals; nullopt if some entry is non-integral or < 1.
std::optional<std::vector<uint64_t>> natural_image(const RationalMatrix& M,
                                                   const std::vector<uint64_t>& x);

}  // namespace ramsey
