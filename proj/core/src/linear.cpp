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

#include "ncsd/linear.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncsd::exact {

Rational LinearConstraint::coeff(const std::string& var) const {
  auto it = coeffs.find(var);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool LinearConstraint::trivially_true() const {
  if (!trivial()) return false;
  if (rel == Relation::kEqual) return constant.is_zero();
  return constant.sign() >= 0;
}

Rational LinearConstraint::lhs_at(
    const std::map<std::string, Rational>& point) const {
  Rational acc(0);
  for (const auto& [var, c] : coeffs) {
    auto it = point.find(var);
    if (it != point.end()) acc += c * it->second;
  }
  return acc;
}

bool LinearConstraint::satisfied_by(
    const std::map<std::string, Rational>& point) const {
  Rational v = lhs_at(point);
  return rel == Relation::kEqual ? v == constant : v <= constant;
}

LinearConstraint make_le(std::map<std::string, Rational> coeffs,
                         Rational rhs) {
  return LinearConstraint{std::move(coeffs), std::move(rhs),
                          Relation::kLessEq};
}

LinearConstraint make_ge(std::map<std::string, Rational> coeffs,
                         Rational rhs) {
  for (auto& [var, c] : coeffs) c = -c;
  return LinearConstraint{std::move(coeffs), -rhs, Relation::kLessEq};
}

LinearConstraint make_eq(std::map<std::string, Rational> coeffs,
                         Rational rhs) {
  return LinearConstraint{std::move(coeffs), std::move(rhs), Relation::kEqual};
}

LinearConstraint canonicalize(const LinearConstraint& c) {
  LinearConstraint out;
  out.rel = c.rel;
  out.constant = c.constant;
  for (const auto& [var, coef] : c.coeffs) {
    if (!coef.is_zero()) out.coeffs.emplace(var, coef);
  }
  if (out.coeffs.empty()) {
    // Trivial residue: normalize the constant's scale to keep equality of
    // representatives simple (0 <= -3 and 0 <= -1 both mean "false" but stay
    // distinct values; only the sign matters to callers).
    return out;
  }

  // Clear denominators.
  mpz_class lcm_den = 1;
  for (const auto& [var, coef] : out.coeffs) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            coef.den().get_mpz_t());
  }
  mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
          out.constant.den().get_mpz_t());
  Rational scale{mpq_class(lcm_den)};

  // Reduce by the common content (constant included, so rows stay integral).
  mpz_class g = 0;
  auto fold = [&](const Rational& r) {
    mpz_class n = r.num() * (lcm_den / r.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  };
  for (const auto& [var, coef] : out.coeffs) fold(coef);
  fold(out.constant);
  if (g != 0) scale /= Rational{mpq_class(g)};

  int lead_sign = out.coeffs.begin()->second.sign();
  if (out.rel == Relation::kEqual && lead_sign < 0) scale = -scale;

  for (auto& [var, coef] : out.coeffs) coef *= scale;
  out.constant *= scale;
  return out;
}

bool canonical_less(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.rel != b.rel) return a.rel == Relation::kEqual && b.rel != Relation::kEqual;
  auto ai = a.coeffs.begin(), bi = b.coeffs.begin();
  for (; ai != a.coeffs.end() && bi != b.coeffs.end(); ++ai, ++bi) {
    if (ai->first != bi->first) return ai->first < bi->first;
    if (ai->second != bi->second) return ai->second < bi->second;
  }
  if (a.coeffs.size() != b.coeffs.size()) {
    return a.coeffs.size() < b.coeffs.size();
  }
  return a.constant < b.constant;
}

bool ConstraintSystem::has_var(const std::string& v) const {
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

void ConstraintSystem::add_var(const std::string& v) {
  if (!has_var(v)) vars.push_back(v);
}

void ConstraintSystem::add(LinearConstraint c) {
  for (const auto& [var, coef] : c.coeffs) {
    if (!coef.is_zero() && !has_var(var)) {
      throw std::invalid_argument("constraint references undeclared variable '" +
                                  var + "'");
    }
  }
  cons.push_back(std::move(c));
}

bool ConstraintSystem::trivially_infeasible() const {
  return std::any_of(cons.begin(), cons.end(), [](const LinearConstraint& c) {
    return c.trivially_false();
  });
}

ConstraintSystem canonicalize(const ConstraintSystem& sys) {
  ConstraintSystem out;
  out.vars = sys.vars;

  std::vector<LinearConstraint> rows;
  for (const auto& c : sys.cons) {
    LinearConstraint cc = canonicalize(c);
    if (cc.trivially_true()) continue;
    rows.push_back(std::move(cc));
  }

  // Merge complementary inequality pairs into equalities.
  std::vector<LinearConstraint> merged;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    if (rows[i].rel == Relation::kLessEq) {
      LinearConstraint neg = rows[i];
      for (auto& [var, coef] : neg.coeffs) coef = -coef;
      neg.constant = -neg.constant;
      neg = canonicalize(neg);
      bool found = false;
      for (std::size_t j = i + 1; j < rows.size() && !found; ++j) {
        if (!used[j] && rows[j].rel == Relation::kLessEq &&
            rows[j].coeffs == neg.coeffs && rows[j].constant == neg.constant) {
          LinearConstraint eq = rows[i];
          eq.rel = Relation::kEqual;
          merged.push_back(canonicalize(eq));
          used[i] = used[j] = true;
          found = true;
        }
      }
      if (found) continue;
    }
    merged.push_back(rows[i]);
    used[i] = true;
  }

  std::sort(merged.begin(), merged.end(), canonical_less);
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  out.cons = std::move(merged);
  return out;
}

ConstraintSystem substitute(const ConstraintSystem& sys,
                            const std::string& var, const Rational& value) {
  ConstraintSystem out;
  for (const auto& v : sys.vars) {
    if (v != var) out.vars.push_back(v);
  }
  for (const auto& c : sys.cons) {
    LinearConstraint nc = c;
    auto it = nc.coeffs.find(var);
    if (it != nc.coeffs.end()) {
      nc.constant -= it->second * value;
      nc.coeffs.erase(it);
    }
    out.cons.push_back(std::move(nc));
  }
  return out;
}

// --- Text serialization -----------------------------------------------------

namespace {

std::string term_str(const Rational& coef, const std::string& var,
                     bool leading) {
  Rational a = coef.abs();
  std::string mag = (a == Rational(1)) ? var : a.str() + "*" + var;
  if (leading) return coef.sign() < 0 ? "-" + mag : mag;
  return coef.sign() < 0 ? " - " + mag : " + " + mag;
}

}  // namespace

std::string to_text(const LinearConstraint& c,
                    const std::vector<std::string>& var_order) {
  std::string lhs;
  bool leading = true;
  for (const auto& var : var_order) {
    auto it = c.coeffs.find(var);
    if (it == c.coeffs.end() || it->second.is_zero()) continue;
    lhs += term_str(it->second, var, leading);
    leading = false;
  }
  // Variables not in var_order (shouldn't happen for well-formed systems).
  for (const auto& [var, coef] : c.coeffs) {
    if (std::find(var_order.begin(), var_order.end(), var) != var_order.end()) {
      continue;
    }
    if (coef.is_zero()) continue;
    lhs += term_str(coef, var, leading);
    leading = false;
  }
  if (leading) lhs = "0";
  const char* rel = c.rel == Relation::kEqual ? " = " : " <= ";
  return lhs + rel + c.constant.str();
}

std::string to_text(const ConstraintSystem& sys) {
  std::ostringstream os;
  for (const auto& c : sys.cons) os << to_text(c, sys.vars) << "\n";
  return os.str();
}

namespace {

struct Token {
  enum Kind { kNumber, kIdent, kPlus, kMinus, kStar, kLe, kGe, kEq } kind;
  std::string text;
};

std::vector<Token> lex(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto peek = [&]() -> char { return i < line.size() ? line[i] : '\0'; };
  while (i < line.size()) {
    char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
    if (ch == '+') { out.push_back({Token::kPlus, "+"}); ++i; continue; }
    if (ch == '-') { out.push_back({Token::kMinus, "-"}); ++i; continue; }
    if (ch == '*') { out.push_back({Token::kStar, "*"}); ++i; continue; }
    if (ch == '<' || ch == '>') {
      char first = ch;
      ++i;
      if (peek() != '=') {
        throw std::invalid_argument("constraint parse: expected '=' after '" +
                                    std::string(1, first) + "'");
      }
      ++i;
      out.push_back({first == '<' ? Token::kLe : Token::kGe,
                     std::string(1, first) + "="});
      continue;
    }
    if (ch == '=') {
      ++i;
      if (peek() == '=') ++i;
      out.push_back({Token::kEq, "="});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num;
      while (i < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[i])) ||
              line[i] == '.' || line[i] == '/')) {
        num.push_back(line[i]);
        ++i;
      }
      out.push_back({Token::kNumber, num});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) ||
              line[i] == '_')) {
        id.push_back(line[i]);
        ++i;
      }
      out.push_back({Token::kIdent, id});
      continue;
    }
    throw std::invalid_argument(std::string("constraint parse: bad character '") +
                                ch + "'");
  }
  return out;
}

// side: accumulates coeffs and constant of one side of the relation.
struct Side {
  std::map<std::string, Rational> coeffs;
  Rational constant;
};

Side parse_side(const std::vector<Token>& toks, std::size_t begin,
                std::size_t end) {
  Side side;
  std::size_t i = begin;
  bool expect_term = true;
  int sign = 1;
  while (i < end) {
    if (toks[i].kind == Token::kPlus) {
      if (expect_term && i != begin) {
        throw std::invalid_argument("constraint parse: dangling '+'");
      }
      expect_term = true;
      ++i;
      continue;
    }
    if (toks[i].kind == Token::kMinus) {
      sign = expect_term ? -sign : -1;
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term) {
      throw std::invalid_argument("constraint parse: missing operator");
    }
    Rational coef(1);
    bool have_number = false;
    if (toks[i].kind == Token::kNumber) {
      coef = Rational::from_string(toks[i].text);
      have_number = true;
      ++i;
      if (i < end && toks[i].kind == Token::kStar) ++i;
    }
    if (i < end && toks[i].kind == Token::kIdent) {
      side.coeffs[toks[i].text] += Rational(sign) * coef;
      ++i;
    } else if (have_number) {
      side.constant += Rational(sign) * coef;
    } else {
      throw std::invalid_argument("constraint parse: expected term");
    }
    sign = 1;
    expect_term = false;
  }
  if (expect_term && begin != end) {
    throw std::invalid_argument("constraint parse: trailing operator");
  }
  return side;
}

}  // namespace

LinearConstraint constraint_from_text(const std::string& line) {
  std::vector<Token> toks = lex(line);
  std::size_t rel_pos = toks.size();
  Relation rel = Relation::kLessEq;
  bool flip = false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Token::kLe || toks[i].kind == Token::kGe ||
        toks[i].kind == Token::kEq) {
      if (rel_pos != toks.size()) {
        throw std::invalid_argument("constraint parse: multiple relations");
      }
      rel_pos = i;
      if (toks[i].kind == Token::kEq) rel = Relation::kEqual;
      if (toks[i].kind == Token::kGe) flip = true;
    }
  }
  if (rel_pos == toks.size()) {
    throw std::invalid_argument("constraint parse: no relation in '" + line +
                                "'");
  }
  Side lhs = parse_side(toks, 0, rel_pos);
  Side rhs = parse_side(toks, rel_pos + 1, toks.size());

  LinearConstraint c;
  c.rel = rel;
  for (const auto& [var, coef] : lhs.coeffs) c.coeffs[var] += coef;
  for (const auto& [var, coef] : rhs.coeffs) c.coeffs[var] -= coef;
  c.constant = rhs.constant - lhs.constant;
  if (flip) {
    for (auto& [var, coef] : c.coeffs) coef = -coef;
    c.constant = -c.constant;
  }
  std::erase_if(c.coeffs,
                [](const auto& kv) { return kv.second.is_zero(); });
  return c;
}

ConstraintSystem system_from_text(const std::string& text) {
  ConstraintSystem sys;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    std::string stripped;
    for (char ch : line) {
      if (ch == '#') break;
      stripped.push_back(ch);
    }
    bool blank = std::all_of(stripped.begin(), stripped.end(), [](char ch) {
      return std::isspace(static_cast<unsigned char>(ch));
    });
    if (blank) continue;
    if (!have_header && stripped.rfind("vars:", 0) == 0) {
      std::istringstream vs(stripped.substr(5));
      std::string v;
      while (vs >> v) sys.add_var(v);
      have_header = true;
      continue;
    }
    LinearConstraint c = constraint_from_text(stripped);
    for (const auto& [var, coef] : c.coeffs) sys.add_var(var);
    sys.cons.push_back(std::move(c));
  }
  return sys;
}

// --- JSON serialization -----------------------------------------------------

std::string to_json(const ConstraintSystem& sys) {
  nlohmann::ordered_json j;
  j["vars"] = sys.vars;
  j["cons"] = nlohmann::ordered_json::array();
  for (const auto& c : sys.cons) {
    nlohmann::ordered_json jc;
    nlohmann::ordered_json jcoeffs = nlohmann::ordered_json::object();
    for (const auto& var : sys.vars) {
      auto it = c.coeffs.find(var);
      if (it != c.coeffs.end() && !it->second.is_zero()) {
        jcoeffs[var] = it->second.str();
      }
    }
    jc["coeffs"] = std::move(jcoeffs);
    jc["rel"] = c.rel == Relation::kEqual ? "=" : "<=";
    jc["const"] = c.constant.str();
    j["cons"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

ConstraintSystem system_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  ConstraintSystem sys;
  for (const auto& v : j.at("vars")) sys.add_var(v.get<std::string>());
  for (const auto& jc : j.at("cons")) {
    LinearConstraint c;
    for (const auto& [var, val] : jc.at("coeffs").items()) {
      c.coeffs[var] = Rational::from_string(val.get<std::string>());
    }
    std::string rel = jc.at("rel").get<std::string>();
    if (rel == "<=") {
      c.rel = Relation::kLessEq;
    } else if (rel == "=") {
      c.rel = Relation::kEqual;
    } else if (rel == ">=") {
      for (auto& [var, coef] : c.coeffs) coef = -coef;
      c.rel = Relation::kLessEq;
      c.constant = -Rational::from_string(jc.at("const").get<std::string>());
      std::erase_if(c.coeffs,
                    [](const auto& kv) { return kv.second.is_zero(); });
      sys.add(std::move(c));
      continue;
    } else {
      throw std::invalid_argument("constraint json: bad relation '" + rel +
                                  "'");
    }
    c.constant = Rational::from_string(jc.at("const").get<std::string>());
    std::erase_if(c.coeffs,
                  [](const auto& kv) { return kv.second.is_zero(); });
    sys.add(std::move(c));
  }
  return sys;
}

}  // namespace ncsd::exact
