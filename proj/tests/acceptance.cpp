// Acceptance gate: one PASS/FAIL line per criterion, with elapsed time
// against its budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gex2/admissible.hpp"
#include "gex2/clifford.hpp"
#include "gex2/gexgroup.hpp"
#include "gex2/random.hpp"

namespace {

using namespace gex2;

// An empty string means pass; otherwise the first failure.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 for no stated budget
  Check run;
};

std::uint64_t seed() {
  const char* raw = std::getenv("GEX2_SEED");
  return raw != nullptr && *raw != '\0' ? std::strtoull(raw, nullptr, 0) : 20240531;
}

std::string classification_complete() {
  long pairs = 0;
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t i = 0; i < form_count(n); ++i) {
      for (std::uint64_t j = 0; j < form_count(n); ++j) {
        const QuadraticForm q = form_from_index(n, i), r = form_from_index(n, j);
        const auto w = isometry_oracle(q, r);
        if ((classify(q) == classify(r)) != w.has_value()) return "disagreement at " + q.to_string() + " / " + r.to_string();
        if (w && change_basis(r, w->map()) != q) return "bad witness at " + q.to_string();
        ++pairs;
      }
    }
  }
  return pairs == 1 + 4 + 64 + 4096 ? "" : "wrong pair count";
}

std::string admissibility_agrees() {
  const auto agree = [](const QuadraticForm& q) { return is_admissible(q) == is_admissible_bruteforce(q).has_value(); };
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t i = 0; i < form_count(n); ++i) {
      if (!agree(form_from_index(n, i))) return "disagreement at " + form_from_index(n, i).to_string();
    }
  }
  std::mt19937_64 rng(seed());
  for (int n : {5, 6}) {
    for (int t = 0; t < 1000; ++t) {
      const QuadraticForm q = random_form(n, rng);
      if (!agree(q)) return "disagreement at " + q.to_string();
    }
  }
  const QuadraticForm hp = QuadraticForm::h_plus(), hm = QuadraticForm::h_minus(), q1 = QuadraticForm::q_one();
  if (is_admissible(hp) || is_admissible(direct_sum(hp, q1))) return "inadmissible anchor reported admissible";
  if (!is_admissible(direct_sum(hp, hp)) || !is_admissible(hm)) return "admissible anchor reported inadmissible";
  return "";
}

std::string witnesses_sound() {
  int admissible = 0;
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t i = 0; i < form_count(n); ++i) {
      const QuadraticForm q = form_from_index(n, i);
      if (!is_admissible(q)) continue;
      ++admissible;
      const auto w = admissible_witness(q);
      if (!w || !is_valid_admissible_basis(q, *w)) return "bad witness for " + q.to_string();
    }
  }
  return admissible > 0 ? "" : "no admissible forms found";
}

std::string dictionary_facts() {
  if (!is_isometric(q_from_table(TableGroup::quaternion()), QuadraticForm::h_minus())) return "Q8 form";
  if (!is_isometric(q_from_table(TableGroup::dihedral()), QuadraticForm::h_plus())) return "D8 form";
  if (!is_isometric(q_from_table(TableGroup::cyclic_four()), QuadraticForm::q_one())) return "Z4 form";
  std::mt19937_64 rng(seed());
  for (int t = 0; t < 2000; ++t) {
    const int d1 = 1 + static_cast<int>(rng() % 7);
    const int d2 = 1 + static_cast<int>(rng() % (8 - d1));
    const QuadraticForm a = random_form(d1, rng), b = random_form(d2, rng);
    const GexGroup ga(a), gb(b);
    if (frattini(ga).size() == 2 && frattini(gb).size() == 2) {
      if (q_from_group(central_product(ga, gb)) != direct_sum(q_from_group(ga), q_from_group(gb))) {
        return "central product form for " + a.to_string() + " * " + b.to_string();
      }
    }
    const int n = static_cast<int>(rng() % (9 - d1));
    if (q_from_group(direct_z2(ga, n)) != direct_sum(q_from_group(ga), QuadraticForm::zero(n))) {
      return "Z2 factor form for " + a.to_string();
    }
  }
  return "";
}

std::string classification_theorem() {
  for (int n = 0; n <= 4; ++n) {
    std::vector<TableGroup> tables;
    std::vector<FormClass> classes;
    for (std::uint64_t i = 0; i < form_count(n); ++i) {
      tables.push_back(TableGroup::from_model(GexGroup(form_from_index(n, i))));
      classes.push_back(classify(form_from_index(n, i)));
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      for (std::size_t j = 0; j < tables.size(); ++j) {
        if ((classes[i] == classes[j]) != iso_oracle(tables[i], tables[j])) {
          return "disagreement at " + form_from_index(n, i).to_string() + " / " + form_from_index(n, j).to_string();
        }
      }
    }
  }
  return "";
}

std::string splitting() {
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t i = 0; i < form_count(n); ++i) {
      const QuadraticForm q = form_from_index(n, i);
      for (int z = 0; z <= 3; ++z) {
        const QuadraticForm s = direct_sum(q, QuadraticForm::zero(z));
        if (is_admissible(s) != is_admissible(q)) return "lookup at " + s.to_string();
        if (is_admissible_bruteforce(s).has_value() != is_admissible_bruteforce(q).has_value()) {
          return "search at " + s.to_string();
        }
      }
    }
  }
  return "";
}

std::string psi_isomorphism() {
  for (int n = 2; n <= 8; ++n) {
    if (!verify_psi(n)) return "exhaustive n=" + std::to_string(n);
  }
  for (int n : {9, 10}) {
    if (!verify_psi_sampled(n, 1000, seed() + n)) return "sampled n=" + std::to_string(n);
  }
  return "";
}

std::string en_table() {
  const auto rows = verify_en_table(17);
  if (rows.size() != 16) return "expected 16 rows";
  for (const auto& row : rows) {
    if (!row.pass()) return row.to_string();
  }
  return "";
}

std::string group_laws() {
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t i = 0; i < form_count(n); ++i) {
      const QuadraticForm q = form_from_index(n, i);
      const GexGroup g(q);
      const BitMatrix b = q.polar();
      const auto elems = g.elements();
      for (const auto& x : elems) {
        if (g.mul(x, x) != GroupElement{BitVector(n), q.eval(x.vec)}) return "square law in " + g.to_string();
        for (const auto& y : elems) {
          const GroupElement c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
          if (c != GroupElement{BitVector(n), b.bilinear(x.vec, y.vec)}) return "commutator law in " + g.to_string();
        }
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "form classification is complete (l <= 3, isometry oracle)", 10, classification_complete},
      {2, "admissibility lookup equals exhaustive search", 60, admissibility_agrees},
      {3, "admissible witnesses are valid bases (l <= 4)", 0, witnesses_sound},
      {4, "forms of Q8, D8, Z4, central products and Z2 factors", 10, dictionary_facts},
      {5, "form class decides group isomorphism (l <= 4)", 300, classification_theorem},
      {6, "admissibility ignores zero summands", 0, splitting},
      {7, "psi is an isomorphism onto E(n) (n <= 10)", 60, psi_isomorphism},
      {8, "E(n) x Z2 table for 2 <= n <= 17", 10, en_table},
      {9, "commutator and squaring laws (l <= 4)", 0, group_laws},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && c.budget_s > 0 && secs > c.budget_s) detail = "over budget";
    const bool pass = detail.empty();
    failed += !pass;
    std::printf("criterion %d %s  %s  %.2fs", c.id, pass ? "PASS" : "FAIL", c.name, secs);
    if (c.budget_s > 0) std::printf(" (budget %.0fs)", c.budget_s);
    if (!pass) std::printf("  -- %s", detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
