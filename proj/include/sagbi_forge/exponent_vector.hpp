#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "sagbi_forge/errors.hpp"

namespace sagbi_forge {

/// Exponents of a monomial over a fixed variable table, with the total
/// degree cached. Tables of up to 48 variables stay off the heap.
class ExponentVector {
 public:
  using value_type = std::uint16_t;
  using Storage = boost::container::small_vector<value_type, 48>;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<unsigned> exps) {
    e_.reserve(exps.size());
    for (unsigned x : exps) push(x);
  }
  template <class Int>
  explicit ExponentVector(std::span<const Int> exps) {
    e_.reserve(exps.size());
    for (auto x : exps) {
      if (x < 0) throw DomainError("negative exponent");
      push(static_cast<unsigned long long>(x));
    }
  }

  static ExponentVector unit(std::size_t n, std::size_t var, unsigned power = 1) {
    ExponentVector v(n);
    v.set(var, power);
    return v;
  }

  [[nodiscard]] std::size_t size() const { return e_.size(); }
  [[nodiscard]] std::uint32_t degree() const { return deg_; }
  value_type operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] const value_type* data() const { return e_.data(); }
  [[nodiscard]] auto begin() const { return e_.begin(); }
  [[nodiscard]] auto end() const { return e_.end(); }

  void set(std::size_t i, unsigned long long value) {
    if (value > std::numeric_limits<value_type>::max()) throw DomainError("exponent overflow");
    deg_ = deg_ - e_[i] + static_cast<std::uint32_t>(value);
    e_[i] = static_cast<value_type>(value);
  }

  [[nodiscard]] bool is_zero() const { return deg_ == 0; }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    check_len(a, b);
    ExponentVector r;
    r.e_.resize(a.size());
    if (std::uint64_t(a.deg_) + b.deg_ > std::numeric_limits<value_type>::max()) {
      for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::uint64_t(a.e_[i]) + b.e_[i]);
      return r;
    }
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = static_cast<value_type>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// Quotient a / b; requires b | a.
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    check_len(a, b);
    ExponentVector r;
    r.e_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b.e_[i] > a.e_[i]) throw DomainError("monomial quotient is not a monomial");
      r.e_[i] = static_cast<value_type>(a.e_[i] - b.e_[i]);
    }
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  /// Does this monomial divide `m`?
  [[nodiscard]] bool divides(const ExponentVector& m) const {
    if (deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  [[nodiscard]] ExponentVector lcm(const ExponentVector& o) const {
    check_len(*this, o);
    ExponentVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.set(i, std::max(e_[i], o.e_[i]));
    return r;
  }

  [[nodiscard]] bool coprime(const ExponentVector& o) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  /// Bit k%64 is set iff some variable with index = k mod 64 occurs.
  [[nodiscard]] std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < size(); ++i)
      if (e_[i]) m |= std::uint64_t(1) << (i & 63);
    return m;
  }

  [[nodiscard]] std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < size(); ++i)
      if (e_[i]) s.push_back(i);
    return s;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e_) h = (h ^ x) * 1099511628211ull;
    return h;
  }

 private:
  void push(unsigned long long x) {
    if (x > std::numeric_limits<value_type>::max()) throw DomainError("exponent overflow");
    e_.push_back(static_cast<value_type>(x));
    deg_ += static_cast<std::uint32_t>(x);
  }
  static void check_len(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
  }

  Storage e_;
  std::uint32_t deg_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const { return v.hash(); }
};

}  // namespace sagbi_forge
