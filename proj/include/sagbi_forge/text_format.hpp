#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/polynomial.hpp"

namespace sagbi_forge {

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }
  [[nodiscard]] bool done() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }
  std::string identifier() {
    std::string id;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') id += s_[pos_++];
    return id;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the signed-sum-of-terms text format: "3/2*x1^2*y2 - xp1 + 7".
/// Variables are separated by '*'; whitespace is ignored.
template <class K = Rational>
Polynomial<K> parse_polynomial(std::string_view text, const TablePtr& table, DomainOf<K> dom = {}) {
  using Traits = FieldTraits<K>;
  detail::PolyLexer lx(text);
  std::vector<Term<K>> terms;
  if (lx.done()) lx.fail("empty polynomial");
  bool first = true;
  while (!lx.done()) {
    bool neg = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      neg = true;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    ExponentVector e(table->count());
    bool have_factor = false, want_vars = true;
    std::string num = lx.digits();
    if (!num.empty()) {
      coeff = Rational(mpz_class(num));
      if (lx.accept('/')) {
        std::string den = lx.digits();
        if (den.empty() || mpz_class(den) == 0) lx.fail("bad denominator");
        coeff /= Rational(mpz_class(den));
      }
      have_factor = true;
      want_vars = lx.accept('*');
    }
    while (want_vars) {
      std::string id = lx.identifier();
      if (id.empty()) lx.fail("expected a variable");
      auto idx = table->find(id);
      if (!idx) lx.fail("unknown variable '" + id + "'");
      unsigned long power = 1;
      if (lx.accept('^')) {
        std::string p = lx.digits();
        if (p.empty()) lx.fail("expected an exponent");
        power = std::stoul(p);
      }
      e.set(*idx, e[*idx] + power);
      have_factor = true;
      want_vars = lx.accept('*');
    }
    if (!have_factor) lx.fail("empty term");
    if (neg) coeff = -coeff;
    terms.push_back({std::move(e), Traits::from_rational(coeff, dom)});
  }
  return Polynomial<K>::from_terms(table, std::move(terms), dom);
}

}  // namespace sagbi_forge
