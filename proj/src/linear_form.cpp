#include "spectra/linear_form.hpp"

#include <cctype>

#include "spectra/errors.hpp"

namespace spectra {

LinearForm LinearForm::symbol(const std::string& name) {
  LinearForm f;
  f.coeffs_.emplace(name, Rational(1));
  return f;
}

Rational LinearForm::evaluate(const std::map<std::string, Rational>& values) const {
  Rational acc = constant_;
  for (const auto& [name, c] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end()) throw InvalidInput("unbound_symbol", "no value for symbol " + name);
    acc += c * it->second;
  }
  return acc;
}

std::optional<Rational> LinearForm::ratio_to(const LinearForm& other) const {
  if (other.is_zero()) return std::nullopt;
  Rational r = other.coeffs_.empty() ? constant_ / other.constant_
                                     : [&] {
                                         const auto& [name, c] = *other.coeffs_.begin();
                                         auto it = coeffs_.find(name);
                                         return it == coeffs_.end() ? Rational(0) : it->second / c;
                                       }();
  if (other * r != *this) return std::nullopt;
  return r;
}

std::string LinearForm::str() const {
  std::string out;
  auto append = [&](const Rational& c, const std::string& name) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (name.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += name;
    } else {
      out += mag.str() + "*" + name;
    }
  };
  for (const auto& [name, c] : coeffs_) append(c, name);
  if (!constant_.is_zero() || out.empty()) append(constant_, "");
  return out;
}

LinearForm LinearForm::operator-() const {
  LinearForm f = *this;
  f.constant_ = -f.constant_;
  for (auto& [name, c] : f.coeffs_) c = -c;
  return f;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [name, c] : o.coeffs_) {
    Rational& slot = coeffs_[name];
    slot += c;
    if (slot.is_zero()) coeffs_.erase(name);
  }
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm& LinearForm::operator*=(const Rational& r) {
  if (r.is_zero()) {
    coeffs_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= r;
  for (auto& [name, c] : coeffs_) c *= r;
  return *this;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  if (auto c = a.coeffs_ <=> b.coeffs_; c != 0) return c;
  return a.constant_ <=> b.constant_;
}

LinearForm parse_linear_form(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return InvalidInput("bad_expression", "cannot parse \"" + std::string(text) + "\": " + why);
  };
  std::string s;
  bool gap = false;
  for (char ch : text) {
    const auto uc = static_cast<unsigned char>(ch);
    if (std::isspace(uc)) {
      gap = !s.empty();
      continue;
    }
    if (gap && (std::isalnum(uc) || ch == '_' || ch == '/') &&
        (std::isalnum(static_cast<unsigned char>(s.back())) || s.back() == '_')) {
      throw bad("missing operator between terms");
    }
    gap = false;
    s += ch;
  }
  if (s.empty()) throw bad("empty");

  LinearForm out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Rational sign(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = Rational(-1);
      ++i;
    } else if (!first) {
      throw bad("expected + or -");
    }
    first = false;

    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    std::optional<Rational> coeff;
    if (j > i) coeff = parse_rational(s.substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '*') {
      if (!coeff) throw bad("dangling *");
      ++i;
    }
    std::string name;
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) name += s[i++];
    }
    if (!coeff && name.empty()) throw bad("expected a number or a symbol");
    if (i < s.size() && s[i] == '.') throw bad("decimals are not exact; use p/q");
    Rational c = sign * coeff.value_or(Rational(1));
    out += name.empty() ? LinearForm(c) : LinearForm::symbol(name) * c;
  }
  return out;
}

}  // namespace spectra
