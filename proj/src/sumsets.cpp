#include "ramsey/sumsets.hpp"

#include <algorithm>

namespace ramsey {

SubsetMask finite_sums(const FiniteSeq& xs, GroundWindow w) {
  uint64_t total = 0;
  for (uint64_t x : xs.terms) {
    total += x;
    if (total > w.n_max)
      throw WindowOverflow("finite_sums: subset sum " + std::to_string(total) +
                           " exceeds window [1.." + std::to_string(w.n_max) + "]");
  }
  SubsetMask sums(w);
  for (uint64_t x : xs.terms) {
    SubsetMask shifted = sums.shifted_image(x);
    sums |= shifted;
    sums.insert(x);
  }
  return sums;
}

std::vector<uint64_t> family_sum(const std::vector<int>& F,
                                 const std::map<int, std::vector<uint64_t>>& Y,
                                 GroundWindow w) {
  if (F.empty()) throw InputMalformed("family_sum: F must be nonempty");
  std::vector<int> idx = F;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  std::vector<uint64_t> sums{0};
  for (int n : idx) {
    auto it = Y.find(n);
    if (it == Y.end() || it->second.empty())
      throw InputMalformed("family_sum: no Y_" + std::to_string(n));
    std::vector<uint64_t> next;
    next.reserve(sums.size() * it->second.size());
    for (uint64_t s : sums)
      for (uint64_t y : it->second) {
        uint64_t v = s + y;
        if (v > w.n_max)
          throw WindowOverflow("family_sum: sum " + std::to_string(v) +
                               " exceeds window [1.." + std::to_string(w.n_max) + "]");
        next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return sums;
}

bool dyadic_member(const SubsetMask& B, const DyadicOracle& oracle) {
  if (!(B.window() == oracle.window))
    throw InputMalformed("dyadic_member: oracle window mismatch");
  const uint64_t kmax = (uint64_t(1) << oracle.depth) - 1;
  for (uint32_t m = 0; m <= oracle.max_block_start(); ++m) {
    bool all = true;
    for (uint64_t k = 1; k <= kmax; ++k) {
      if (!B.contains(k << m)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

SubsetMask star_set(const SubsetMask& A, const DyadicOracle& oracle) {
  if (!(A.window() == oracle.window))
    throw InputMalformed("star_set: oracle window mismatch");
  const uint64_t kmax = (uint64_t(1) << oracle.depth) - 1;
  SubsetMask survivors(A.window());  // s admitting a full block at some m
  for (uint32_t m = 0; m <= oracle.max_block_start(); ++m) {
    SubsetMask block = A.shifted_preimage(uint64_t(1) << m);
    for (uint64_t k = 2; k <= kmax && !block.empty(); ++k)
      block.and_with_shifted_preimage(A, k << m);
    survivors |= block;
  }
  survivors &= A;
  return survivors;
}

bool star_contains(const SubsetMask& A, uint64_t s, const DyadicOracle& oracle) {
  if (!A.contains(s)) return false;
  const uint64_t kmax = (uint64_t(1) << oracle.depth) - 1;
  for (uint32_t m = 0; m <= oracle.max_block_start(); ++m) {
    bool all = true;
    for (uint64_t k = 1; k <= kmax; ++k) {
      if (!A.contains(s + (k << m))) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace ramsey
