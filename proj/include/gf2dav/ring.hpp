#pragma once

// The quotient ring R = GF(2)[x]/(f) viewed as a finite commutative
// multiplicative semigroup S_R.
//
// Notation: the semigroup is written multiplicatively throughout. Its
// identity is the residue 1, and "a <=_H b" means a = b or a = b*c.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2dav/elemset.hpp"
#include "gf2dav/poly.hpp"

namespace gf2dav {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MixedContext : public RingError {
 public:
  MixedContext() : RingError("elements belong to different rings") {}
};

class NonUnit : public RingError {
 public:
  NonUnit() : RingError("element is not a unit") {}
};

class CrtPreconditionViolated : public RingError {
 public:
  explicit CrtPreconditionViolated(std::size_t index)
      : RingError("crt_lift: factor " + std::to_string(index) +
                  " divides the residue but is not in the lift set"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A canonical residue theta with deg(theta) < deg(f). The residue bits double
/// as a dense index in [0, 2^deg f).
class Elem {
 public:
  Elem() = default;

  std::uint32_t index() const noexcept { return index_; }
  Poly theta() const { return Poly(index_); }
  /// Bit mask of the modulus this element was reduced by.
  std::uint64_t modulus_tag() const noexcept { return tag_; }

  friend auto operator<=>(const Elem&, const Elem&) = default;

 private:
  friend class RingCtx;
  Elem(std::uint64_t tag, std::uint32_t index) : tag_(tag), index_(index) {}

  std::uint64_t tag_ = 0;
  std::uint32_t index_ = 0;
};

inline std::string format(const Elem& e) { return format(e.theta()); }

/// Exponents of gcd(theta, f) against the factorization of f.
struct GcdProfile {
  std::vector<int> alphas;

  /// Componentwise <=.
  bool leq(const GcdProfile& o) const {
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (alphas[i] > o.alphas[i]) return false;
    return true;
  }
  bool all_zero() const {
    return std::all_of(alphas.begin(), alphas.end(), [](int a) { return a == 0; });
  }
  int total() const {
    int t = 0;
    for (int a : alphas) t += a;
    return t;
  }
  friend bool operator==(const GcdProfile&, const GcdProfile&) = default;
};

/// Indices into the factorization of f.
using IndexSet = std::vector<std::size_t>;

class RingCtx;

/// A set of units of one ring (unit group, stabilizer, subgroup).
class UnitSet {
 public:
  UnitSet() = default;
  UnitSet(std::uint64_t tag, ElemSet bits) : tag_(tag), bits_(std::move(bits)) {}

  std::uint64_t modulus_tag() const noexcept { return tag_; }
  const ElemSet& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.count(); }
  bool contains(const Elem& e) const noexcept {
    return e.modulus_tag() == tag_ && bits_.contains(e.index());
  }
  bool subset_of(const UnitSet& o) const { return tag_ == o.tag_ && bits_.subset_of(o.bits_); }
  bool strict_subset_of(const UnitSet& o) const { return subset_of(o) && !(bits_ == o.bits_); }

  inline std::vector<Elem> members(const RingCtx& ctx) const;
  /// Contains 1 and is closed under multiplication and inversion.
  inline bool is_subgroup(const RingCtx& ctx) const;

  friend bool operator==(const UnitSet&, const UnitSet&) = default;

 private:
  std::uint64_t tag_ = 0;
  ElemSet bits_;
};

class RingCtx {
 public:
  /// Largest supported deg f; element tables are dense over 2^deg f entries.
  static constexpr int kMaxDegree = 16;

  explicit RingCtx(Poly f) : f_(std::move(f)) {
    n_ = f_.degree();
    if (n_ < 1) throw ConstantInput("RingCtx");
    if (n_ > kMaxDegree)
      throw RingError("RingCtx: deg f = " + std::to_string(n_) + " exceeds the supported maximum " +
                      std::to_string(kMaxDegree));
    fmask_ = f_.to_u64();
    size_ = std::uint32_t{1} << n_;
    fact_ = factor(f_);
    for (const auto& [p, k] : fact_) {
      Poly pk = pow(p, static_cast<unsigned>(k));
      cofactors_.push_back(f_ / pk);
      prime_powers_.push_back(std::move(pk));
    }
    for (std::size_t i = 0; i < fact_.size(); ++i) {
      if (fact_[i].factor == Poly::x()) x_index_ = i;
      if (fact_[i].factor == Poly(3)) x1_index_ = i;
      // e_i = c_i * (c_i^{-1} mod p_i^{n_i}) is 1 at the i-th prime power, 0 elsewhere.
      const auto eg = ext_gcd(cofactors_[i], prime_powers_[i]);
      idempotents_.push_back(reduce_poly(cofactors_[i] * eg.s));
    }
    if (n_ <= kMulTableMaxDegree) {
      mul_table_.resize(std::size_t{size_} * size_);
      for (std::uint32_t a = 0; a < size_; ++a)
        for (std::uint32_t b = 0; b <= a; ++b)
          mul_table_[std::size_t{a} * size_ + b] = mul_table_[std::size_t{b} * size_ + a] = mul_slow(a, b);
    }
    const std::size_t r = fact_.size();
    profiles_.resize(std::size_t{size_} * r);
    unit_bits_ = ElemSet(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      const Poly g = gcd(Poly(a), f_);
      bool unit = true;
      for (std::size_t i = 0; i < r; ++i) {
        const int alpha = pot(fact_[i].factor, g);
        profiles_[std::size_t{a} * r + i] = static_cast<std::uint8_t>(alpha);
        if (alpha != 0) unit = false;
      }
      if (unit) unit_bits_.insert(a);
    }
  }

  const Poly& modulus() const noexcept { return f_; }
  std::uint64_t tag() const noexcept { return fmask_; }
  const Factorization& factorization() const noexcept { return fact_; }
  int degree() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return size_; }
  std::size_t factor_count() const noexcept { return fact_.size(); }
  int multiplicity(std::size_t i) const { return fact_[i].multiplicity; }
  const std::vector<Poly>& prime_powers() const noexcept { return prime_powers_; }
  const std::vector<Poly>& cofactors() const noexcept { return cofactors_; }

  std::optional<std::size_t> index_of_x() const noexcept { return x_index_; }
  std::optional<std::size_t> index_of_x_plus_1() const noexcept { return x1_index_; }
  /// pot_x(f); zero when x does not divide f.
  int n_x() const { return x_index_ ? fact_[*x_index_].multiplicity : 0; }
  /// pot_{x+1}(f); zero when x+1 does not divide f.
  int n_x_plus_1() const { return x1_index_ ? fact_[*x1_index_].multiplicity : 0; }

  Elem elem(const Poly& p) const {
    const Poly r = p.degree() >= n_ ? p % f_ : p;
    return Elem(fmask_, static_cast<std::uint32_t>(r.to_u64()));
  }
  Elem elem_at(std::uint32_t index) const {
    if (index >= size_) throw std::out_of_range("element index out of range");
    return Elem(fmask_, index);
  }
  Elem zero() const noexcept { return Elem(fmask_, 0); }
  Elem one() const noexcept { return Elem(fmask_, 1); }

  bool owns(const Elem& a) const noexcept { return a.modulus_tag() == fmask_; }

  Elem mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return Elem(fmask_, mul_index(a.index(), b.index()));
  }

  Elem product(std::span<const Elem> terms) const {
    std::uint32_t acc = 1;
    for (const auto& t : terms) {
      check(t);
      acc = mul_index(acc, t.index());
    }
    return Elem(fmask_, acc);
  }

  /// Raw multiplication on indices, no context check.
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * size_ + b];
    return mul_slow(a, b);
  }

  GcdProfile profile(const Elem& a) const {
    check(a);
    const std::size_t r = fact_.size();
    GcdProfile p;
    p.alphas.resize(r);
    for (std::size_t i = 0; i < r; ++i) p.alphas[i] = profiles_[std::size_t{a.index()} * r + i];
    return p;
  }

  /// alpha_i of the element with the given index.
  int alpha(std::uint32_t index, std::size_t i) const noexcept {
    return profiles_[std::size_t{index} * fact_.size() + i];
  }

  bool is_unit(const Elem& a) const {
    check(a);
    return unit_bits_.contains(a.index());
  }
  bool is_unit_index(std::uint32_t index) const noexcept { return unit_bits_.contains(index); }

  UnitSet unit_group() const { return UnitSet(fmask_, unit_bits_); }
  std::size_t unit_count() const noexcept { return unit_bits_.count(); }
  std::vector<Elem> units() const {
    std::vector<Elem> out;
    unit_bits_.for_each([&](std::uint32_t i) { out.push_back(Elem(fmask_, i)); });
    return out;
  }

  /// Via the extended Euclidean relation s*theta + t*f = 1.
  Elem inverse(const Elem& u) const {
    if (!is_unit(u)) throw NonUnit();
    const auto eg = ext_gcd(u.theta(), f_);
    return elem(eg.s);
  }

  /// a <=_H b, decided by profile dominance.
  bool leq_h(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    for (std::size_t i = 0; i < fact_.size(); ++i)
      if (alpha(b.index(), i) > alpha(a.index(), i)) return false;
    return true;
  }

  bool h_equiv(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    for (std::size_t i = 0; i < fact_.size(); ++i)
      if (alpha(a.index(), i) != alpha(b.index(), i)) return false;
    return true;
  }

  /// a <_H b.
  bool lt_h(const Elem& a, const Elem& b) const { return leq_h(a, b) && !h_equiv(a, b); }

  /// St(c) = { u unit : u*c = c }.
  UnitSet stabilizer(const Elem& c) const {
    check(c);
    ElemSet bits(size_);
    unit_bits_.for_each([&](std::uint32_t u) {
      if (mul_index(u, c.index()) == c.index()) bits.insert(u);
    });
    return UnitSet(fmask_, std::move(bits));
  }

  /// The unit congruent to theta_a modulo the prime powers outside J and to 1
  /// modulo those in J.
  Elem crt_lift(const Elem& a, const IndexSet& lift_to_one) const {
    check(a);
    std::vector<bool> in_j(fact_.size(), false);
    for (auto j : lift_to_one) {
      if (j >= fact_.size()) throw std::out_of_range("crt_lift: factor index out of range");
      in_j[j] = true;
    }
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < fact_.size(); ++i) {
      if (in_j[i]) {
        acc ^= idempotents_[i];
      } else {
        if (alpha(a.index(), i) != 0) throw CrtPreconditionViolated(i);
        acc ^= mul_index(idempotents_[i], a.index());
      }
    }
    return Elem(fmask_, acc);
  }

  /// A unit d with d*a = a and d*b != b, by exhaustive scan over the units.
  std::optional<Elem> find_separating_unit(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    std::optional<Elem> found;
    unit_bits_.for_each([&](std::uint32_t d) {
      if (found) return;
      if (mul_index(d, a.index()) == a.index() && mul_index(d, b.index()) != b.index())
        found = Elem(fmask_, d);
    });
    return found;
  }

  /// The strict-containment condition for St(b) inside St(a):
  ///   (a1-b1)(2n1-1-a1-b1) + (a2-b2)(2n2-1-a2-b2) + sum_{i>=3} (ai-bi)
  /// where index 1 is x and index 2 is x+1 (exponent 0 when absent).
  int separation_condition(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    int value = 0;
    for (std::size_t i = 0; i < fact_.size(); ++i) {
      const int da = alpha(a.index(), i);
      const int db = alpha(b.index(), i);
      if ((x_index_ && i == *x_index_) || (x1_index_ && i == *x1_index_)) {
        value += (da - db) * (2 * fact_[i].multiplicity - 1 - da - db);
      } else {
        value += da - db;
      }
    }
    return value;
  }

  /// Reduces an arbitrary polynomial to its residue bits.
  std::uint32_t reduce_poly(const Poly& p) const { return static_cast<std::uint32_t>((p % f_).to_u64()); }

 private:
  static constexpr int kMulTableMaxDegree = 8;

  void check(const Elem& a) const {
    if (a.modulus_tag() != fmask_) throw MixedContext();
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint64_t p = detail::clmul64(a, b).first;
    while (p != 0) {
      const int top = 63 - std::countl_zero(p);
      if (top < n_) break;
      p ^= fmask_ << (top - n_);
    }
    return static_cast<std::uint32_t>(p);
  }

  Poly f_;
  std::uint64_t fmask_ = 0;
  int n_ = 0;
  std::uint32_t size_ = 0;
  Factorization fact_;
  std::vector<Poly> prime_powers_;
  std::vector<Poly> cofactors_;
  std::vector<std::uint32_t> idempotents_;
  std::optional<std::size_t> x_index_;
  std::optional<std::size_t> x1_index_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint8_t> profiles_;
  ElemSet unit_bits_;
};

inline std::vector<Elem> UnitSet::members(const RingCtx& ctx) const {
  std::vector<Elem> out;
  bits_.for_each([&](std::uint32_t i) { out.push_back(ctx.elem_at(i)); });
  return out;
}

inline bool UnitSet::is_subgroup(const RingCtx& ctx) const {
  if (tag_ != ctx.tag() || !bits_.contains(1)) return false;
  const auto m = bits_.to_vector();
  for (auto u : m) {
    if (!ctx.is_unit_index(u)) return false;
    if (!bits_.contains(ctx.inverse(ctx.elem_at(u)).index())) return false;
    for (auto v : m)
      if (!bits_.contains(ctx.mul_index(u, v))) return false;
  }
  return true;
}

/// Definitional a <=_H b: a = b, or a = b*c for some c, found by scanning all c.
inline bool leq_h_by_scan(const RingCtx& ctx, const Elem& a, const Elem& b) {
  if (a == b) return true;
  for (std::uint32_t c = 0; c < ctx.size(); ++c)
    if (ctx.mul(b, ctx.elem_at(c)) == a) return true;
  return false;
}

/// Explicit separating units d in St(a) \ St(b), built from h = f / f_i^{alpha_i}
/// for a factor other than x, x+1 (case 1) or from h = f / x^{beta+1} (and the
/// x+1 analogue) (case 2).
struct SeparatingWitness {
  Elem unit;
  int proof_case = 0;        ///< 1 or 2
  std::size_t factor_index;  ///< factor of f the construction used
};

inline std::optional<SeparatingWitness> construct_separating_unit(const RingCtx& ctx, const Elem& a,
                                                                  const Elem& b) {
  if (!ctx.leq_h(a, b)) return std::nullopt;
  const Poly& f = ctx.modulus();
  const auto& fact = ctx.factorization();
  const auto xi = ctx.index_of_x();
  const auto x1i = ctx.index_of_x_plus_1();
  auto is_linear_factor = [&](std::size_t i) { return (xi && i == *xi) || (x1i && i == *x1i); };

  for (std::size_t i = 0; i < fact.size(); ++i) {
    if (is_linear_factor(i)) continue;
    const int ai = ctx.alpha(a.index(), i);
    const int bi = ctx.alpha(b.index(), i);
    if (ai <= bi) continue;
    const Poly h = f / pow(fact[i].factor, static_cast<unsigned>(ai));
    for (const Poly& cand : {h + Poly::one(), Poly::x() * h + Poly::one()}) {
      if (gcd(cand, f).is_one()) return SeparatingWitness{ctx.elem(cand), 1, i};
    }
    return std::nullopt;  // unreachable when the argument holds
  }

  for (auto idx : {xi, x1i}) {
    if (!idx) continue;
    const std::size_t i = *idx;
    const int n = fact[i].multiplicity;
    const int ai = ctx.alpha(a.index(), i);
    const int bi = ctx.alpha(b.index(), i);
    if ((ai - bi) * (2 * n - 1 - ai - bi) <= 0) continue;
    const Poly h = f / pow(fact[i].factor, static_cast<unsigned>(bi + 1));
    return SeparatingWitness{ctx.elem(h + Poly::one()), 2, i};
  }
  return std::nullopt;
}

}  // namespace gf2dav
