#include "symknot/laurent.hpp"

#include <cctype>

#include "symknot/error.hpp"

namespace symknot {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::kInvalidArgument, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::kInvalidArgument, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::invert_variable() const { return scale_exponents(-1); }

LaurentPoly LaurentPoly::scale_exponents(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero polynomial");
  LaurentPoly rem = *this, quot;
  const int dlo = d.min_exponent(), dhi = d.max_exponent();
  const BigInt& lead = d.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    int rhi = rem.max_exponent();
    if (rhi - dhi < rem.min_exponent() - dlo)
      throw Error(ErrorKind::kInvalidArgument, "polynomial division is not exact");
    BigInt q, r;
    boost::multiprecision::divide_qr(rem.terms_.rbegin()->second, lead, q, r);
    if (r != 0) throw Error(ErrorKind::kInvalidArgument, "polynomial division is not exact");
    LaurentPoly m = LaurentPoly::monomial(q, rhi - dhi);
    quot += m;
    rem -= m * d;
  }
  return quot;
}

BigInt LaurentPoly::evaluate_unit(int t) const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += (t == -1 && (e % 2 != 0)) ? BigInt(-c) : c;
  return s;
}

namespace {

std::string exponent_text(int e, bool half_units) {
  if (!half_units) return std::to_string(e);
  if (e % 2 == 0) return std::to_string(e / 2);
  return "(" + std::to_string(e) + "/2)";
}

}  // namespace

std::string to_string(const LaurentPoly& p, std::string_view var, bool half_units) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (e != (half_units ? 2 : 1)) out += "^" + exponent_text(e, half_units);
  }
  return out;
}

namespace {

class PolyScanner {
 public:
  PolyScanner(std::string_view text, std::string_view var, bool half)
      : text_(text), var_(var), half_(half) {}

  LaurentPoly run() {
    LaurentPoly p;
    skip();
    if (at_end()) fail("term");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("'+' or '-'");
      }
      first = false;
      BigInt coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = read_uint();
        have_coeff = true;
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
          if (!starts_var()) fail(std::string(var_));
        }
      }
      int exponent = 0;
      if (starts_var()) {
        pos_ += var_.size();
        skip();
        exponent = half_ ? 2 : 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          exponent = read_exponent();
        }
      } else if (!have_coeff) {
        fail("coefficient or " + std::string(var_));
      }
      p.add_term(exponent, sign * coeff);
      skip();
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool starts_var() const { return text_.substr(pos_, var_.size()) == var_; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorKind::kSyntax, "polynomial '" + std::string(text_) + "': expected " +
                                        expected + " at position " + std::to_string(pos_));
  }

  BigInt read_uint() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("digit");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  long long read_int() {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip();
    }
    BigInt v = read_uint();
    if (v > 1000000) fail("exponent of reasonable size");
    return sign * v.convert_to<long long>();
  }

  int read_exponent() {
    bool paren = peek() == '(';
    if (paren) {
      ++pos_;
      skip();
    }
    long long num = read_int();
    long long den = 1;
    skip();
    if (paren && peek() == '/') {
      ++pos_;
      skip();
      den = read_int();
      skip();
    }
    if (paren) {
      if (peek() != ')') fail("')'");
      ++pos_;
    }
    if (den == 1) return static_cast<int>(half_ ? 2 * num : num);
    if (den == 2 && half_) return static_cast<int>(num);
    fail(half_ ? "exponent with denominator 1 or 2" : "integer exponent");
  }

  std::string_view text_;
  std::string_view var_;
  bool half_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::string_view var, bool half_units) {
  return PolyScanner(text, var, half_units).run();
}

}  // namespace symknot
