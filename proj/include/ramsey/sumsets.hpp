#pragma once

#include <map>
#include <vector>

#include "ramsey/foundation.hpp"

namespace ramsey {

// Finite sequence <x_1..x_k> of naturals, k >= 1.
struct FiniteSeq {
  std::vector<uint64_t> terms;

  FiniteSeq() = default;
  explicit FiniteSeq(std::vector<uint64_t> t) : terms(std::move(t)) {
    if (terms.empty()) throw InputMalformed("FiniteSeq: must be nonempty");
    for (uint64_t x : terms)
      if (x < 1) throw InputMalformed("FiniteSeq: terms must be >= 1");
  }

  size_t length() const { return terms.size(); }
  bool operator==(const FiniteSeq& o) const { return terms == o.terms; }
};

// Computable stand-in for an idempotent ultrafilter: "B is large" means B
// contains FS(<2^m, ..., 2^{m+depth-1}>) for some block start m. Heuristic
// guidance only; every construction that consults it is re-verified exactly.
struct DyadicOracle {
  GroundWindow window;
  uint32_t depth = 4;

  DyadicOracle() = default;
  DyadicOracle(GroundWindow w, uint32_t d) : window(w), depth(d) {
    if (depth < 1) throw InputMalformed("DyadicOracle: depth must be >= 1");
    if (depth > window.log2_floor())
      throw InputMalformed("DyadicOracle: 2^depth must fit in the window");
  }

  // largest m with m + depth <= floor(log2(n_max))
  uint32_t max_block_start() const { return window.log2_floor() - depth; }
};

// All sums over nonempty subsets of the terms. Throws WindowOverflow if the
// total (= largest subset sum) exceeds the window.
SubsetMask finite_sums(const FiniteSeq& xs, GroundWindow w);

// All sums picking one point from Y_n for each n in F (commutative mode).
// F is a set of indices; every index must be present in Y with a nonempty
// list. Sorted, deduplicated. Throws WindowOverflow when a sum leaves [1..n_max].
std::vector<uint64_t> family_sum(const std::vector<int>& F,
                                 const std::map<int, std::vector<uint64_t>>& Y,
                                 GroundWindow w);

// True iff B contains a full dyadic FS block {k*2^m : 1 <= k <= 2^depth - 1}.
bool dyadic_member(const SubsetMask& B, const DyadicOracle& oracle);

// {s in A : dyadic_member(preimage_shift(A, s))} materialized.
SubsetMask star_set(const SubsetMask& A, const DyadicOracle& oracle);

// Pointwise star membership; agrees with star_set(A).contains(s).
bool star_contains(const SubsetMask& A, uint64_t s, const DyadicOracle& oracle);

}  // namespace ramsey
