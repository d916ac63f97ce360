#include "ramsey/foundation.hpp"

#include <numeric>

namespace ramsey {

namespace {

// Overflow-checked int64 arithmetic; matrices are tiny but entries are user input.
int64_t checked(__int128 v, const char* op) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
    throw WindowOverflow(std::string("rational arithmetic overflow in ") + op);
  return int64_t(v);
}

}  // namespace

// --- SubsetMask -------------------------------------------------------------

SubsetMask SubsetMask::full(GroundWindow w) {
  SubsetMask m(w);
  for (uint64_t v = 1; v <= w.n_max; ++v) m.bits_[v >> 6] |= uint64_t(1) << (v & 63);
  return m;
}

SubsetMask SubsetMask::multiples_of(GroundWindow w, uint64_t step) {
  if (step < 1) throw InputMalformed("multiples_of: step must be >= 1");
  SubsetMask m(w);
  for (uint64_t v = step; v <= w.n_max; v += step) m.bits_[v >> 6] |= uint64_t(1) << (v & 63);
  return m;
}

SubsetMask SubsetMask::range(GroundWindow w, uint64_t lo, uint64_t hi) {
  SubsetMask m(w);
  if (lo < 1) lo = 1;
  if (hi > w.n_max) hi = w.n_max;
  for (uint64_t v = lo; v <= hi; ++v) m.bits_[v >> 6] |= uint64_t(1) << (v & 63);
  return m;
}

SubsetMask SubsetMask::from_members(GroundWindow w, const std::vector<uint64_t>& members) {
  SubsetMask m(w);
  for (uint64_t v : members) m.insert(v);
  return m;
}

uint64_t SubsetMask::count() const {
  uint64_t c = 0;
  for (uint64_t w : bits_) c += uint64_t(__builtin_popcountll(w));
  return c;
}

bool SubsetMask::empty() const {
  for (uint64_t w : bits_)
    if (w) return false;
  return true;
}

uint64_t SubsetMask::first() const {
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) return (uint64_t(i) << 6) + uint64_t(__builtin_ctzll(bits_[i]));
  return 0;
}

uint64_t SubsetMask::next_after(uint64_t v) const {
  if (v >= window_.n_max) return 0;
  uint64_t start = v + 1;
  size_t i = start >> 6;
  uint64_t w = bits_[i] & (~uint64_t(0) << (start & 63));
  while (true) {
    if (w) return (uint64_t(i) << 6) + uint64_t(__builtin_ctzll(w));
    if (++i >= bits_.size()) return 0;
    w = bits_[i];
  }
}

std::vector<uint64_t> SubsetMask::members() const {
  std::vector<uint64_t> out;
  out.reserve(count());
  for_each([&](uint64_t v) { out.push_back(v); });
  return out;
}

bool SubsetMask::is_subset_of(const SubsetMask& o) const {
  check_same_window(o);
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& o) {
  check_same_window(o);
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& o) {
  check_same_window(o);
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& o) {
  check_same_window(o);
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

SubsetMask SubsetMask::shifted_preimage(uint64_t x) const {
  if (x < 1) throw InputMalformed("preimage_shift: x must be >= 1");
  SubsetMask out(window_);
  if (x >= window_.n_max) return out;
  const uint64_t wordshift = x >> 6;
  const uint32_t bitshift = uint32_t(x & 63);
  const size_t n = bits_.size();
  if (bitshift == 0) {
    for (size_t i = 0; i + wordshift < n; ++i) out.bits_[i] = bits_[i + wordshift];
  } else {
    for (size_t i = 0; i + wordshift < n; ++i) {
      uint64_t lo = bits_[i + wordshift] >> bitshift;
      uint64_t hi = (i + wordshift + 1 < n) ? (bits_[i + wordshift + 1] << (64 - bitshift)) : 0;
      out.bits_[i] = lo | hi;
    }
  }
  out.bits_[0] &= ~uint64_t(1);  // element 0 does not exist
  return out;
}

SubsetMask SubsetMask::shifted_image(uint64_t x) const {
  SubsetMask out(window_);
  if (x >= window_.n_max) return out;
  const uint64_t wordshift = x >> 6;
  const uint32_t bitshift = uint32_t(x & 63);
  const size_t n = bits_.size();
  if (bitshift == 0) {
    for (size_t i = n; i-- > wordshift;) out.bits_[i] = bits_[i - wordshift];
  } else {
    for (size_t i = n; i-- > wordshift;) {
      uint64_t hi = bits_[i - wordshift] << bitshift;
      uint64_t lo = (i > wordshift) ? (bits_[i - wordshift - 1] >> (64 - bitshift)) : 0;
      out.bits_[i] = hi | lo;
    }
  }
  // clear anything pushed past n_max
  const uint64_t top = window_.n_max;
  const size_t top_word = size_t(top >> 6);
  if (top_word + 1 < n)
    for (size_t i = top_word + 1; i < n; ++i) out.bits_[i] = 0;
  const uint32_t top_bit = uint32_t(top & 63);
  if (top_bit != 63) out.bits_[top_word] &= (uint64_t(2) << top_bit) - 1;
  return out;
}

void SubsetMask::and_with_shifted_preimage(const SubsetMask& other, uint64_t x) {
  check_same_window(other);
  if (x < 1) throw InputMalformed("preimage_shift: x must be >= 1");
  const size_t n = bits_.size();
  if (x >= window_.n_max) {
    for (auto& w : bits_) w = 0;
    return;
  }
  const uint64_t wordshift = x >> 6;
  const uint32_t bitshift = uint32_t(x & 63);
  if (bitshift == 0) {
    for (size_t i = 0; i + wordshift < n; ++i) bits_[i] &= other.bits_[i + wordshift];
  } else {
    for (size_t i = 0; i + wordshift < n; ++i) {
      uint64_t lo = other.bits_[i + wordshift] >> bitshift;
      uint64_t hi =
          (i + wordshift + 1 < n) ? (other.bits_[i + wordshift + 1] << (64 - bitshift)) : 0;
      bits_[i] &= lo | hi;
    }
  }
  for (size_t i = (n >= wordshift ? n - wordshift : 0); i < n; ++i) bits_[i] = 0;
  bits_[0] &= ~uint64_t(1);
}

SubsetMask preimage_shift(const SubsetMask& A, uint64_t x) { return A.shifted_preimage(x); }

SubsetMask intersect_translates(const SubsetMask& base, const std::vector<Translate>& shifts) {
  SubsetMask out = base;
  for (const Translate& t : shifts) {
    if (out.empty()) break;
    out &= t.set->shifted_preimage(t.shift);
  }
  return out;
}

// --- Coloring ---------------------------------------------------------------

Coloring::Coloring(GroundWindow w, uint32_t colors, std::vector<uint32_t> assignment)
    : window_(w), colors_(colors), assignment_(std::move(assignment)) {
  if (colors_ < 1) throw InputMalformed("Coloring: need at least one color");
  if (assignment_.size() != window_.n_max)
    throw InputMalformed("Coloring: assignment must be total on [1..n_max]");
  for (uint32_t c : assignment_)
    if (c >= colors_) throw InputMalformed("Coloring: color value out of range");
}

SubsetMask Coloring::color_class(uint32_t c) const {
  if (c >= colors_) throw InputMalformed("Coloring::color_class: color out of range");
  SubsetMask m(window_);
  for (uint64_t v = 1; v <= window_.n_max; ++v)
    if (assignment_[v - 1] == c) m.insert(v);
  return m;
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(int64_t num, int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw InputMalformed("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
  __int128 d = __int128(a.den_) * b.den_;
  return Rational(checked(n, "+"), checked(d, "+"));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  __int128 n = __int128(a.num_) * b.num_;
  __int128 d = __int128(a.den_) * b.den_;
  return Rational(checked(n, "*"), checked(d, "*"));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputMalformed("Rational: division by zero");
  __int128 n = __int128(a.num_) * b.den_;
  __int128 d = __int128(a.den_) * b.num_;
  return Rational(checked(n, "/"), checked(d, "/"));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    int64_t n = std::stoll(s.substr(0, slash));
    int64_t d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw InputMalformed("Rational::parse: bad fraction '" + s + "'");
  }
}

}  // namespace ramsey
