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

#include "ncsd/scenario.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncsd::scenario {

namespace {

const Rational kOne(1);

bool in_unit_interval(const Rational& r) {
  return r.sign() >= 0 && r <= kOne;
}

void require_unit(const Rational& r, const char* name) {
  if (!in_unit_interval(r)) {
    throw std::invalid_argument(std::string(name) + " = " + r.str() +
                                " is outside [0,1]");
  }
}

std::string cell_name(const DataTable& t, int row, int col) {
  return "p(" + t.effects[row] + ", " + t.preparations[col] + ")";
}

}  // namespace

std::optional<std::string> validate(const DataTable& t, double tol) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (t.kind == TableKind::kExact) {
        if (!in_unit_interval(t.exact[r][c])) {
          return cell_name(t, r, c) + " = " + t.exact[r][c].str() +
                 " is outside [0,1]";
        }
      } else {
        double v = t.real[r][c];
        if (!(v >= 0.0 && v <= 1.0)) {
          std::ostringstream os;
          os << cell_name(t, r, c) << " = " << v << " is outside [0,1]";
          return os.str();
        }
      }
    }
  }
  if (t.equivalence_declared) {
    for (int r = 0; r < 3; ++r) {
      if (t.kind == TableKind::kExact) {
        Rational lhs = t.exact[r][0] + t.exact[r][2];
        Rational rhs = t.exact[r][1] + t.exact[r][3];
        if (lhs != rhs) {
          return "row " + t.effects[r] +
                 " violates the declared equivalence: " + lhs.str() +
                 " != " + rhs.str();
        }
      } else {
        double lhs = t.real[r][0] + t.real[r][2];
        double rhs = t.real[r][1] + t.real[r][3];
        if (std::abs(lhs - rhs) > tol) {
          std::ostringstream os;
          os << "row " << t.effects[r]
             << " violates the declared equivalence: residual "
             << std::abs(lhs - rhs) << " exceeds tolerance " << tol;
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

DataTable build_table_symmetric(const SymmetricSummary& y) {
  require_unit(y.s, "s");
  require_unit(y.c, "c");
  require_unit(y.eps, "eps");
  DataTable t;
  t.kind = TableKind::kExact;
  t.exact[0] = {kOne - y.eps, y.c, y.eps, kOne - y.c};
  t.exact[1] = {y.c, kOne - y.eps, kOne - y.c, y.eps};
  t.exact[2] = {y.s, kOne - y.s, kOne - y.s, y.s};
  return t;
}

DataTable build_table_symmetric_real(double s, double c, double eps) {
  for (auto [v, name] : {std::pair{s, "s"}, {c, "c"}, {eps, "eps"}}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << name << " = " << v << " is outside [0,1]";
      throw std::invalid_argument(os.str());
    }
  }
  DataTable t;
  t.kind = TableKind::kReal;
  t.real[0] = {1.0 - eps, c, eps, 1.0 - c};
  t.real[1] = {c, 1.0 - eps, 1.0 - c, eps};
  t.real[2] = {s, 1.0 - s, 1.0 - s, s};
  return t;
}

DataTable build_table_full(const FullParameters& p) {
  const std::array<const Rational*, 9> vals = {
      &p.s_phi, &p.s_phibar, &p.s_psi,   &p.c_phi,      &p.c_phibar,
      &p.c_psi, &p.eps_phi,  &p.eps_phibar, &p.eps_psi};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    require_unit(*vals[i], kFullParameterNames[i]);
  }
  DataTable t;
  t.kind = TableKind::kExact;
  t.exact[0] = {kOne - p.eps_phi, p.c_psi, p.eps_phibar,
                kOne - p.eps_phi + p.eps_phibar - p.c_psi};
  t.exact[1] = {p.c_phi, kOne - p.eps_psi, kOne - p.c_phibar,
                p.c_phi - p.c_phibar + p.eps_psi};
  t.exact[2] = {p.s_phi, kOne - p.s_psi, kOne - p.s_phibar,
                p.s_phi - p.s_phibar + p.s_psi};
  const std::array<const char*, 3> derived_names = {
      "1 - eps_phi + eps_phibar - c_psi", "c_phi - c_phibar + eps_psi",
      "s_phi - s_phibar + s_psi"};
  for (int r = 0; r < 3; ++r) {
    if (!in_unit_interval(t.exact[r][3])) {
      throw std::invalid_argument(
          std::string("derived entry ") + cell_name(t, r, 3) + " = " +
          derived_names[r] + " = " + t.exact[r][3].str() +
          " is outside [0,1]");
    }
  }
  return t;
}

namespace {

// One symmetry requirement: table cell (row, col) must equal
// low + sign * designated-value.
struct CellRule {
  int row;
  int col;
  int low;   // 0 or 1
  int sign;  // +1 or -1
  int which; // 0 = s, 1 = c, 2 = eps
  const char* expected;
};

constexpr CellRule kSymmetricRules[] = {
    {0, 0, 1, -1, 2, "1 - eps"}, {0, 2, 0, +1, 2, "eps"},
    {0, 3, 1, -1, 1, "1 - c"},   {1, 0, 0, +1, 1, "c"},
    {1, 2, 1, -1, 1, "1 - c"},   {1, 3, 0, +1, 2, "eps"},
    {2, 1, 1, -1, 0, "1 - s"},   {2, 2, 1, -1, 0, "1 - s"},
    {2, 3, 0, +1, 0, "s"},
};

}  // namespace

SymmetricSummary extract_symmetric(const DataTable& t, double tol) {
  if (!t.equivalence_declared) {
    throw std::runtime_error(
        "table does not declare the operational equivalence");
  }
  if (auto err = validate(t, tol)) {
    throw std::runtime_error(*err);
  }
  SymmetricSummary y;
  y.s = t.entry_exact(2, 0);
  y.c = t.entry_exact(0, 1);
  y.eps = kOne - t.entry_exact(1, 1);
  const std::array<const Rational*, 3> designated = {&y.s, &y.c, &y.eps};

  Rational worst(0);
  const CellRule* worst_rule = nullptr;
  for (const auto& rule : kSymmetricRules) {
    Rational expected =
        Rational(rule.low) + Rational(rule.sign) * (*designated[rule.which]);
    Rational residual = (t.entry_exact(rule.row, rule.col) - expected).abs();
    if (worst_rule == nullptr || residual > worst) {
      worst = residual;
      worst_rule = &rule;
    }
  }
  Rational allowed =
      t.kind == TableKind::kExact ? Rational(0) : Rational::from_double(tol);
  if (worst_rule != nullptr && worst > allowed) {
    std::ostringstream os;
    os << "symmetry violated: " << cell_name(t, worst_rule->row, worst_rule->col)
       << " = " << t.entry(worst_rule->row, worst_rule->col) << ", expected "
       << worst_rule->expected << " (residual " << worst.to_double() << ")";
    throw std::runtime_error(os.str());
  }
  return y;
}

FullParameters extract_full(const DataTable& t, double tol) {
  if (!t.equivalence_declared) {
    throw std::runtime_error(
        "table does not declare the operational equivalence");
  }
  if (auto err = validate(t, tol)) {
    throw std::runtime_error(*err);
  }
  FullParameters p;
  p.eps_phi = kOne - t.entry_exact(0, 0);
  p.c_psi = t.entry_exact(0, 1);
  p.eps_phibar = t.entry_exact(0, 2);
  p.c_phi = t.entry_exact(1, 0);
  p.eps_psi = kOne - t.entry_exact(1, 1);
  p.c_phibar = kOne - t.entry_exact(1, 2);
  p.s_phi = t.entry_exact(2, 0);
  p.s_psi = kOne - t.entry_exact(2, 1);
  p.s_phibar = kOne - t.entry_exact(2, 2);
  return p;
}

bool check_labeling(const SymmetricSummary& y) {
  return y.eps <= y.c && y.c <= kOne - y.eps;
}

std::string to_json(const DataTable& t) {
  nlohmann::ordered_json j;
  j["preparations"] = t.preparations;
  j["effects"] = t.effects;
  j["rows"] = nlohmann::ordered_json::array();
  for (int r = 0; r < 3; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < 4; ++c) {
      if (t.kind == TableKind::kExact) {
        row.push_back(t.exact[r][c].str());
      } else {
        row.push_back(t.real[r][c]);
      }
    }
    j["rows"].push_back(std::move(row));
  }
  j["equivalence"] = t.equivalence_declared;
  return j.dump(2) + "\n";
}

DataTable table_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  DataTable t;
  if (j.contains("preparations")) {
    const auto& names = j.at("preparations");
    if (names.size() != 4) {
      throw std::invalid_argument("table json: expected 4 preparations");
    }
    for (int i = 0; i < 4; ++i) t.preparations[i] = names[i].get<std::string>();
  }
  if (j.contains("effects")) {
    const auto& names = j.at("effects");
    if (names.size() != 3) {
      throw std::invalid_argument("table json: expected 3 effects");
    }
    for (int i = 0; i < 3; ++i) t.effects[i] = names[i].get<std::string>();
  }
  const auto& rows = j.at("rows");
  if (rows.size() != 3) {
    throw std::invalid_argument("table json: expected 3 rows");
  }
  int n_string = 0, n_number = 0;
  for (const auto& row : rows) {
    if (row.size() != 4) {
      throw std::invalid_argument("table json: expected 4 entries per row");
    }
    for (const auto& e : row) {
      if (e.is_string()) {
        ++n_string;
      } else if (e.is_number()) {
        ++n_number;
      } else {
        throw std::invalid_argument(
            "table json: entries must be numbers or \"p/q\" strings");
      }
    }
  }
  if (n_string > 0 && n_number > 0) {
    throw std::invalid_argument(
        "table json: mixing exact \"p/q\" entries with numeric entries is not "
        "supported; use one kind per table");
  }
  t.kind = n_string > 0 ? TableKind::kExact : TableKind::kReal;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto& e = rows[r][c];
      if (t.kind == TableKind::kExact) {
        t.exact[r][c] = Rational::from_string(e.get<std::string>());
      } else {
        t.real[r][c] = e.get<double>();
      }
    }
  }
  t.equivalence_declared = j.value("equivalence", true);
  return t;
}

}  // namespace ncsd::scenario
