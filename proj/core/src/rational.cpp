// Copyright 2026 The ncsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncsd/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ncsd::exact {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  if (v_.get_den() == 0) throw std::domain_error("rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  };

  std::string t;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  if (t.empty()) return fail();

  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash);
    std::string den = t.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den)) return fail();
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0) return fail();
    if (q.get_den() == 0) {
      throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return Rational(q);
  }

  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string head = t.substr(0, dot);
    std::string frac = t.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(0, 1);
    if (head.empty() && frac.empty()) return fail();
    for (char ch : head + frac) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return fail();
    }
    mpz_class digits((head + frac).empty() ? "0" : head + frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(digits, scale);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
  }

  if (!is_plain_integer(t)) return fail();
  mpq_class q;
  if (q.set_str(t, 10) != 0) return fail();
  return Rational(q);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rational: non-finite double");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ncsd::exact
