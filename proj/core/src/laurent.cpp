#include "obstruct/laurent.hpp"

#include <sstream>

namespace obstruct {

LaurentPoly::LaurentPoly(const IntPoly& p, long shift) : low_(shift), coeffs_(p.coefficients()) { trim(); }

LaurentPoly LaurentPoly::from_terms(const std::map<long, Int>& terms) {
  LaurentPoly r;
  if (terms.empty()) return r;
  r.low_ = terms.begin()->first;
  r.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - r.low_ + 1), Int(0));
  for (const auto& [e, c] : terms) r.coeffs_[static_cast<std::size_t>(e - r.low_)] += c;
  r.trim();
  return r;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Int LaurentPoly::coeff(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<long, Int> LaurentPoly::terms() const {
  std::map<long, Int> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out[low_ + static_cast<long>(i)] = coeffs_[i];
  return out;
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Int LaurentPoly::at_minus_one() const {
  Int s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long e = low_ + static_cast<long>(i);
    if (e % 2 == 0)
      s += coeffs_[i];
    else
      s -= coeffs_[i];
  }
  return s;
}

LaurentPoly LaurentPoly::conjugate() const {
  std::map<long, Int> t;
  for (const auto& [e, c] : terms()) t[-e] = c;
  return from_terms(t);
}

LaurentPoly LaurentPoly::substitute_power(long n) const {
  std::map<long, Int> t;
  for (const auto& [e, c] : terms()) t[e * n] += c;
  return from_terms(t);
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

IntPoly LaurentPoly::to_polynomial() const { return IntPoly(coeffs_); }

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.low_ = -(span() / 2);
  const Int v = r.at_one();
  if (v < 0 || (v == 0 && r.coeffs_.back() < 0)) r = -r;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.to_polynomial() * b.to_polynomial(), a.low_ + b.low_);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  auto t = a.terms();
  for (const auto& [e, c] : b.terms()) t[e] += c;
  return LaurentPoly::from_terms(t);
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    const Int c = coeff(e);
    if (c == 0) continue;
    const Int mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e != 0) os << 't';
    if (e != 0 && e != 1) os << '^' << e;
  }
  return os.str();
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const LaurentPoly sa = a.shifted(-a.low());
  const LaurentPoly sb = b.shifted(-b.low());
  return sa == sb || sa == -sb;
}

}  // namespace obstruct
