#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

// ---------------------------------------------------------------------------
// Errors shared across modules.
// ---------------------------------------------------------------------------

struct WindowOverflow : std::runtime_error {
  explicit WindowOverflow(const std::string& what) : std::runtime_error(what) {}
};

// A constructor ran out of room: the guidance oracle produced an empty target
// or no witness exists within the search bounds. Carries where it happened.
struct OracleExhausted : std::runtime_error {
  int index;               // 1-based stage that failed (chain index, subset id, ...)
  std::string constraint;  // which intersected constraint / search emptied out

  OracleExhausted(int index_, std::string constraint_)
      : std::runtime_error("oracle exhausted at stage " + std::to_string(index_) +
                           ": " + constraint_),
        index(index_),
        constraint(std::move(constraint_)) {}
};

struct BoundsExceeded : std::runtime_error {
  explicit BoundsExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroRow : std::runtime_error {
  explicit ZeroRow(const std::string& what) : std::runtime_error(what) {}
};

struct PrefixTooShort : std::runtime_error {
  explicit PrefixTooShort(const std::string& what) : std::runtime_error(what) {}
};

struct InputMalformed : std::runtime_error {
  explicit InputMalformed(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// GroundWindow: the finite window [1..n_max] standing in for the naturals.
// ---------------------------------------------------------------------------

struct GroundWindow {
  uint64_t n_max = 1;

  GroundWindow() = default;
  explicit GroundWindow(uint64_t n) : n_max(n) {
    if (n_max < 1) throw InputMalformed("GroundWindow: n_max must be >= 1");
  }

  // floor(log2(n_max))
  uint32_t log2_floor() const {
    uint32_t l = 0;
    for (uint64_t v = n_max; v > 1; v >>= 1) ++l;
    return l;
  }

  bool operator==(const GroundWindow& o) const { return n_max == o.n_max; }
};

// ---------------------------------------------------------------------------
// SubsetMask: a subset of [1..n_max], one bit per element.
// Bit index = element value; bit 0 and bits above n_max stay clear.
// ---------------------------------------------------------------------------

class SubsetMask {
 public:
  SubsetMask() : SubsetMask(GroundWindow(1)) {}
  explicit SubsetMask(GroundWindow w) : window_(w), bits_((w.n_max + 64) / 64, 0) {}

  static SubsetMask full(GroundWindow w);
  static SubsetMask multiples_of(GroundWindow w, uint64_t step);
  static SubsetMask range(GroundWindow w, uint64_t lo, uint64_t hi);  // [lo..hi]
  static SubsetMask from_members(GroundWindow w, const std::vector<uint64_t>& members);

  const GroundWindow& window() const { return window_; }
  uint64_t n_max() const { return window_.n_max; }

  bool contains(uint64_t v) const {
    if (v < 1 || v > window_.n_max) return false;
    return (bits_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(uint64_t v) {
    if (v < 1 || v > window_.n_max)
      throw InputMalformed("SubsetMask::insert: element " + std::to_string(v) +
                           " outside [1.." + std::to_string(window_.n_max) + "]");
    bits_[v >> 6] |= uint64_t(1) << (v & 63);
  }
  void erase(uint64_t v) {
    if (v >= 1 && v <= window_.n_max) bits_[v >> 6] &= ~(uint64_t(1) << (v & 63));
  }

  uint64_t count() const;
  bool empty() const;
  uint64_t first() const;                // least member, 0 if empty
  uint64_t next_after(uint64_t v) const; // least member > v, 0 if none
  std::vector<uint64_t> members() const;

  // Ascending visit; fn(uint64_t) -> void.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t i = 0; i < bits_.size(); ++i) {
      uint64_t w = bits_[i];
      while (w) {
        uint64_t b = w & (~w + 1);
        fn((uint64_t(i) << 6) + uint64_t(__builtin_ctzll(w)));
        w ^= b;
      }
    }
  }

  bool is_subset_of(const SubsetMask& o) const;

  SubsetMask& operator&=(const SubsetMask& o);
  SubsetMask& operator|=(const SubsetMask& o);
  SubsetMask& operator-=(const SubsetMask& o);  // set difference

  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  bool operator==(const SubsetMask& o) const {
    return window_ == o.window_ && bits_ == o.bits_;
  }

  // {y in [1..n_max] : x+y <= n_max and x+y in this} -- the additive x^{-1}A.
  SubsetMask shifted_preimage(uint64_t x) const;

  // {v+x : v in this, v+x <= n_max} -- the additive translate A+x.
  SubsetMask shifted_image(uint64_t x) const;

  // this &= other.shifted_preimage(x), without the temporary.
  void and_with_shifted_preimage(const SubsetMask& other, uint64_t x);

 private:
  void check_same_window(const SubsetMask& o) const {
    if (!(window_ == o.window_))
      throw InputMalformed("SubsetMask: mismatched windows (" +
                           std::to_string(window_.n_max) + " vs " +
                           std::to_string(o.window_.n_max) + ")");
  }

  GroundWindow window_;
  std::vector<uint64_t> bits_;
};

SubsetMask preimage_shift(const SubsetMask& A, uint64_t x);

struct Translate {
  uint64_t shift;
  const SubsetMask* set;
};

// base ∩ ⋂ preimage_shift(set, shift); empty list returns base.
SubsetMask intersect_translates(const SubsetMask& base, const std::vector<Translate>& shifts);

// ---------------------------------------------------------------------------
// Coloring: total map [1..n_max] -> [0..r-1].
// ---------------------------------------------------------------------------

class Coloring {
 public:
  Coloring(GroundWindow w, uint32_t colors, std::vector<uint32_t> assignment);

  const GroundWindow& window() const { return window_; }
  uint32_t colors() const { return colors_; }
  uint32_t color_of(uint64_t v) const {
    if (v < 1 || v > window_.n_max)
      throw InputMalformed("Coloring::color_of: element outside window");
    return assignment_[v - 1];
  }
  const std::vector<uint32_t>& assignment() const { return assignment_; }

  SubsetMask color_class(uint32_t c) const;

 private:
  GroundWindow window_;
  uint32_t colors_;
  std::vector<uint32_t> assignment_;  // assignment_[v-1] = color of v
};

// ---------------------------------------------------------------------------
// Rational: exact fraction, lowest terms, positive denominator.
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integers
  Rational(int64_t num, int64_t den);

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  // "p/q", or just "p" for integers.
  std::string str() const;
  static Rational parse(const std::string& s);

 private:
  int64_t num_;
  int64_t den_;
};

}  // namespace ramsey
