#pragma once

// Polynomials over GF(2) stored as word-chunked bit vectors, bit i being the
// coefficient of x^i. Everything here is exact; degrees stay small in
// practice, so the algorithms are the schoolbook ones.

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2dav {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public PolyError {
 public:
  DivisionByZero() : PolyError("division by the zero polynomial") {}
};

class ConstantInput : public PolyError {
 public:
  explicit ConstantInput(const std::string& what)
      : PolyError(what + ": argument must be nonconstant") {}
};

class ParseError : public PolyError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : PolyError("parse error at position " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Carry-less 64x64 -> 128 multiplication, returned as (lo, hi).
inline std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t lo = 0, hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    b &= b - 1;
    lo ^= a << i;
    if (i != 0) hi ^= a >> (64 - i);
  }
  return {lo, hi};
}

}  // namespace detail

class Poly {
 public:
  using word_t = std::uint64_t;
  static constexpr int kWordBits = 64;
  /// Degree of the zero polynomial.
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(word_t mask) {
    if (mask != 0) words_.push_back(mask);
  }

  static Poly from_words(std::vector<word_t> words) {
    Poly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
  }
  static Poly one() { return Poly(1); }
  static Poly x() { return Poly(2); }
  static Poly monomial(int k) {
    Poly p;
    p.set_coeff(k, true);
    return p;
  }

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

  int degree() const noexcept {
    if (words_.empty()) return kMinusInfinity;
    return static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
  }

  bool coeff(int i) const noexcept {
    if (i < 0) return false;
    const auto w = static_cast<std::size_t>(i / kWordBits);
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U) != 0;
  }

  void set_coeff(int i, bool value) {
    if (i < 0) throw std::out_of_range("negative exponent");
    const auto w = static_cast<std::size_t>(i / kWordBits);
    if (w >= words_.size()) {
      if (!value) return;
      words_.resize(w + 1, 0);
    }
    const word_t bit = word_t{1} << (i % kWordBits);
    words_[w] = value ? (words_[w] | bit) : (words_[w] & ~bit);
    trim();
  }

  const std::vector<word_t>& words() const noexcept { return words_; }

  bool fits_u64() const noexcept { return words_.size() <= 1; }
  word_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("polynomial degree exceeds 63");
    return words_.empty() ? 0 : words_[0];
  }

  /// Number of terms.
  int weight() const noexcept {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending bit-vector order: compare as unbounded binary integers.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
  }

  Poly& operator+=(const Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  // Subtraction is addition in characteristic 2.
  friend Poly operator-(Poly a, const Poly& b) { return a += b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<word_t> out(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      for (std::size_t j = 0; j < b.words_.size(); ++j) {
        auto [lo, hi] = detail::clmul64(a.words_[i], b.words_[j]);
        out[i + j] ^= lo;
        out[i + j + 1] ^= hi;
      }
    }
    return from_words(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiplication by x^k.
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    const auto wshift = static_cast<std::size_t>(k / kWordBits);
    const int bshift = k % kWordBits;
    std::vector<word_t> out(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out[i + wshift] ^= words_[i] << bshift;
      if (bshift != 0) out[i + wshift + 1] ^= words_[i] >> (kWordBits - bshift);
    }
    return from_words(std::move(out));
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<word_t> words_;
};

namespace detail {

// Binary increment of the coefficient vector read as an integer.
inline void increment(Poly& p) {
  int bit = 0;
  while (p.coeff(bit)) {
    p.set_coeff(bit, false);
    ++bit;
  }
  p.set_coeff(bit, true);
}

}  // namespace detail

struct DivRem {
  Poly quotient;
  Poly remainder;
};

inline DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const int db = b.degree();
  Poly q;
  Poly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    q.set_coeff(shift, true);
    r += b.shifted(shift);
  }
  return {std::move(q), std::move(r)};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }
inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }

inline bool divides(const Poly& d, const Poly& g) { return (g % d).is_zero(); }

inline Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw PolyError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

struct ExtGcd {
  Poly g;  ///< gcd(a, b)
  Poly s;  ///< s*a + t*b == g
  Poly t;
};

inline ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw PolyError("gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(), s1;
  Poly t0, t1 = Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 + q * s1);
    t0 = std::exchange(t1, t0 + q * t1);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

inline Poly pow(Poly base, unsigned e) {
  Poly acc = Poly::one();
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

/// Trial division by every polynomial of degree 1..deg(p)/2.
inline bool is_irreducible(const Poly& p) {
  const int d = p.degree();
  if (d < 1) throw ConstantInput("is_irreducible");
  if (d == 1) return true;
  if (!p.coeff(0)) return false;  // x divides p
  const int half = d / 2;
  if (p.fits_u64()) {
    const std::uint64_t end = std::uint64_t{1} << (half + 1);
    for (std::uint64_t c = 3; c < end; c += 2) {  // odd candidates: x ∤ c
      if (divides(Poly(c), p)) return false;
    }
    return true;
  }
  for (Poly c(3); c.degree() <= half; detail::increment(c), detail::increment(c)) {
    if (divides(c, p)) return false;
  }
  return true;
}

struct FactorPower {
  Poly factor;
  int multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Irreducible factorization. Factors are listed in ascending bit-vector
/// order, which puts x first and x+1 second whenever they occur.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<FactorPower> parts) : parts_(std::move(parts)) {}

  const std::vector<FactorPower>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  const FactorPower& operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  Poly expand() const {
    Poly acc = Poly::one();
    for (const auto& [p, k] : parts_) acc *= pow(p, static_cast<unsigned>(k));
    return acc;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<FactorPower> parts_;
};

inline Factorization factor(const Poly& f) {
  if (f.degree() < 1) throw ConstantInput("factor");
  std::vector<FactorPower> parts;
  Poly rest = f;
  auto strip = [&](const Poly& c) {
    int k = 0;
    for (;;) {
      auto [q, r] = divrem(rest, c);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++k;
    }
    if (k > 0) parts.push_back({c, k});
  };
  // Ascending trial division: any candidate that divides what is left is
  // irreducible, since its own factors were stripped earlier.
  if (rest.fits_u64()) {
    for (std::uint64_t c = 2; rest.degree() >= 1; ++c) {
      const Poly cand(c);
      if (2 * cand.degree() > rest.degree()) {
        parts.push_back({rest, 1});
        break;
      }
      strip(cand);
    }
  } else {
    strip(Poly(2));
    Poly cand(3);
    while (rest.degree() >= 1) {
      if (2 * cand.degree() > rest.degree()) {
        parts.push_back({rest, 1});
        break;
      }
      strip(cand);
      detail::increment(cand);
    }
  }
  // The leftover cofactor is the largest factor; sorting just pins the order.
  std::sort(parts.begin(), parts.end(),
            [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
  return Factorization(std::move(parts));
}

class ReducibleArgument : public PolyError {
 public:
  ReducibleArgument() : PolyError("pot: h must be irreducible") {}
};

/// Largest k with h^k | g.
inline int pot(const Poly& h, const Poly& g) {
  if (g.is_zero()) throw PolyError("pot: g must be nonzero");
  if (h.degree() < 1 || !is_irreducible(h)) throw ReducibleArgument();
  int k = 0;
  Poly rest = g;
  for (;;) {
    auto [q, r] = divrem(rest, h);
    if (!r.is_zero()) return k;
    rest = std::move(q);
    ++k;
  }
}

/// p(x+1), the image under the ring automorphism x -> x+1.
inline Poly shift_argument(const Poly& p) {
  Poly acc;
  const Poly xp1(3);
  for (int i = p.degree(); i >= 0; --i) {
    acc *= xp1;
    if (p.coeff(i)) acc += Poly::one();
  }
  return acc;
}

inline std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

inline std::string format_hex(const Poly& p) {
  if (p.is_zero()) return "0x0";
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << p.words().back();
  for (std::size_t i = p.words().size() - 1; i-- > 0;) {
    os.width(16);
    os.fill('0');
    os << p.words()[i];
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << format(p); }

namespace detail {

inline Poly parse_hex(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("empty hex mask", offset);
  Poly p;
  int bit = 0;
  for (std::size_t i = text.size(); i-- > 0;) {
    const char c = text[i];
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw ParseError(std::string("invalid hex digit '") + c + "'", offset + i);
    }
    for (int b = 0; b < 4; ++b) {
      if ((v >> b) & 1) p.set_coeff(bit + b, true);
    }
    bit += 4;
  }
  return p;
}

}  // namespace detail

/// Accepts "x^3+x+1" style text (terms in any order, repeated terms cancel)
/// or a hex mask "0xB" whose least significant bit is the constant term.
inline Poly parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i + 1 < n && text[i] == '0' && (text[i + 1] == 'x' || text[i + 1] == 'X')) {
    std::size_t start = i + 2;
    std::size_t end = start;
    while (end < n && std::isxdigit(static_cast<unsigned char>(text[end]))) ++end;
    std::size_t j = end;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j != n) throw ParseError("unexpected character after hex mask", j);
    return detail::parse_hex(text.substr(start, end - start), start);
  }
  if (i == n) throw ParseError("empty polynomial", i);
  Poly p;
  for (;;) {
    skip_ws();
    if (i == n) throw ParseError("expected a term", i);
    const char c = text[i];
    if (c == 'x' || c == 'X') {
      ++i;
      skip_ws();
      int e = 1;
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        if (i == n || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("expected exponent", i);
        long long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          if (v > 1'000'000) throw ParseError("exponent too large", i);
          ++i;
        }
        e = static_cast<int>(v);
      }
      p.set_coeff(e, !p.coeff(e));
    } else if (c == '1' || c == '0') {
      ++i;
      if (i < n && std::isalnum(static_cast<unsigned char>(text[i])))
        throw ParseError("constant term must be 0 or 1", i);
      if (c == '1') p.set_coeff(0, !p.coeff(0));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    skip_ws();
    if (i == n) break;
    if (text[i] != '+') throw ParseError(std::string("expected '+' but found '") + text[i] + "'", i);
    ++i;
  }
  return p;
}

}  // namespace gf2dav
