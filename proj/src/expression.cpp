#include "linarr/expression.hpp"

#include <cctype>
#include <string>

namespace linarr {
namespace {

void add_into(SparsePolynomial& acc, const SparsePolynomial& p, bool negate) {
  for (const auto& [m, c] : p) {
    auto [it, inserted] = acc.try_emplace(m, negate ? -c : c);
    if (!inserted) {
      if (negate) it->second -= c; else it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto [it, inserted] = out.try_emplace(ma * mb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

SparsePolynomial constant(const FieldElement& c) {
  SparsePolynomial p;
  if (!c.is_zero()) p.emplace(Monomial{}, c);
  return p;
}

// ASCII-fies the few typographic symbols that show up in copied equations.
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {  // U+2212 minus
      out.push_back('-');
      i += 2;
    } else if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {  // U+00B7
      out.push_back('*');
      i += 1;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  SparsePolynomial run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    auto result = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  static bool starts_atom(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == 'e' ||
           c == '(';
  }

  SparsePolynomial sum() {
    SparsePolynomial acc;
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    add_into(acc, product(), negate);
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      add_into(acc, product(), c == '-');
    }
    return acc;
  }

  SparsePolynomial product() {
    auto acc = signed_power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, signed_power());
      } else if (starts_atom(c)) {
        acc = multiply(acc, signed_power());
      } else {
        break;
      }
    }
    return acc;
  }

  SparsePolynomial signed_power() {
    if (peek() == '-') {
      ++pos_;
      auto p = signed_power();
      SparsePolynomial out;
      add_into(out, p, true);
      return out;
    }
    auto base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long exponent = std::stoul(text_.substr(start, pos_ - start));
    if (exponent > 4096) fail("exponent too large");
    SparsePolynomial result = constant(1);
    for (unsigned long i = 0; i < exponent; ++i) result = multiply(result, base);
    return result;
  }

  SparsePolynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(FieldElement(number()));
    ++pos_;
    switch (c) {
      case 'e': return constant(FieldElement::sqrt3());
      case 'x': return {{Monomial(1, 0, 0), FieldElement(1)}};
      case 'y': return {{Monomial(0, 1, 0), FieldElement(1)}};
      case 'z': return {{Monomial(0, 0, 1), FieldElement(1)}};
      default: --pos_; fail("unexpected symbol");
    }
  }

  mpq_class number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string literal = text_.substr(start, pos_ - start);
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const std::size_t den_start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      literal += "/" + text_.substr(den_start, pos_ - den_start);
    }
    mpq_class q;
    if (q.set_str(literal, 10) != 0) fail("bad number");
    if (sgn(q.get_den()) == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_expression(std::string_view text) { return Parser(normalize(text)).run(); }

}  // namespace linarr
