#include "gex2/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gex2/admissible.hpp"
#include "gex2/clifford.hpp"
#include "gex2/gexgroup.hpp"
#include "gex2/random.hpp"

namespace gex2 {
namespace {

// A check returns an empty string on success and a failure description otherwise.
using Check = std::function<std::string(std::mt19937_64&)>;

std::string form_label(const QuadraticForm& q) { return q.to_string(); }

std::string check_form_basics(std::mt19937_64& rng) {
  for (int dim = 0; dim <= 4; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      const BitMatrix b = q.polar();
      if (!b.is_alternating()) return "polar form not alternating for " + form_label(q);
      for (std::uint64_t u = 0; u < (1u << dim); ++u) {
        for (std::uint64_t v = 0; v < (1u << dim); ++v) {
          const BitVector x(dim, u), y(dim, v);
          if (q.eval(x + y) != (q.eval(x) ^ q.eval(y) ^ b.bilinear(x, y))) {
            return "polarization fails for " + form_label(q);
          }
        }
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const QuadraticForm q = random_form(1 + rng() % 5, rng);
    const QuadraticForm r = random_form(rng() % 5, rng);
    const QuadraticForm s = direct_sum(q, r);
    const BitVector v = random_vector(q.dim(), rng), w = random_vector(r.dim(), rng);
    if (s.eval(v.concat(w)) != (q.eval(v) ^ r.eval(w))) return "orthogonal sum does not split";
    const BitMatrix t = random_invertible(q.dim(), rng);
    if (change_basis(q, t).eval(v) != q.eval(t.apply(v))) return "change of basis is not Q o T";
    if (classify(change_basis(q, t)) != classify(q)) return "classification not basis invariant";
  }
  return {};
}

std::string check_form_classification(std::mt19937_64&) {
  for (int dim = 0; dim <= 3; ++dim) {
    for (std::uint64_t i = 0; i < form_count(dim); ++i) {
      const QuadraticForm q = form_from_index(dim, i);
      const FormClass cq = classify(q);
      for (std::uint64_t j = 0; j < form_count(dim); ++j) {
        const QuadraticForm r = form_from_index(dim, j);
        if ((cq == classify(r)) != isometry_oracle(q, r).has_value()) {
          return "classification and oracle disagree on " + form_label(q) + " vs " + form_label(r);
        }
      }
    }
  }
  return {};
}

std::string check_form_isometries(std::mt19937_64&) {
  const QuadraticForm hp = QuadraticForm::h_plus(), hm = QuadraticForm::h_minus(), q1 = QuadraticForm::q_one();
  if (!isometry_oracle(direct_sum(hp, hp), direct_sum(hm, hm))) return "no witness for H+^2 = H-^2";
  if (!isometry_oracle(direct_sum(hp, q1), direct_sum(hm, q1))) return "no witness for H+ + Q1 = H- + Q1";
  if (isometry_oracle(hp, hm)) return "H+ and H- reported isometric";
  for (int dim = 0; dim <= 4; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      if (change_basis(q, normal_form_witness(q).map()) != standard_form(classify(q))) {
        return "normal-form witness unsound for " + form_label(q);
      }
    }
  }
  return {};
}

std::string check_generalized_extraspecial(std::mt19937_64&) {
  for (int dim = 0; dim <= 4; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const GexGroup g = from_form(form_from_index(dim, k));
      const TableGroup t = TableGroup::from_model(g);
      const auto phi = t.frattini();
      const auto comm = t.commutator_subgroup();
      const auto z = t.center();
      bool phi_central = true;
      for (int x : phi) phi_central = phi_central && std::binary_search(z.begin(), z.end(), x);
      const bool brute = phi_central && phi.size() == 2 && phi == comm;
      if (brute != is_generalized_extraspecial(g)) return "criterion disagrees for " + g.to_string();
      if (z.size() != center(g).size()) return "center size wrong for " + g.to_string();
      if (comm.size() != commutator_subgroup(g).size()) return "commutator subgroup wrong for " + g.to_string();
      if (t.squares_subgroup().size() != squares_subgroup(g).size()) return "squares wrong for " + g.to_string();
      if (phi.size() != frattini(g).size()) return "Frattini subgroup wrong for " + g.to_string();
    }
  }
  return {};
}

std::string check_central_product(std::mt19937_64& rng) {
  const GexGroup q8 = from_form(QuadraticForm::h_minus());
  const GexGroup d8 = from_form(QuadraticForm::h_plus());
  const GexGroup qq = central_product(q8, q8);
  const GexGroup dd = central_product(d8, d8);
  if (qq.order() != 32) return "Q8 * Q8 does not have order 32";
  if (!iso_oracle(qq, dd)) return "Q8 * Q8 and D8 * D8 not isomorphic";
  if (TableGroup::from_model(qq).frattini().size() != 2) return "Frattini subgroup of Q8 * Q8 is not Z2";
  for (int trial = 0; trial < 100; ++trial) {
    const QuadraticForm a = random_form(1 + rng() % 3, rng);
    const QuadraticForm b = random_form(1 + rng() % 3, rng);
    const QuadraticForm c = random_form(1 + rng() % 3, rng);
    if (direct_sum(direct_sum(a, b), c) != direct_sum(a, direct_sum(b, c))) return "orthogonal sum not associative";
    const GexGroup ga = from_form(a), gb = from_form(b);
    if (frattini(ga).size() < 2 || frattini(gb).size() < 2) continue;
    const GexGroup p = central_product(ga, gb);
    if (p.order() * 2 != ga.order() * gb.order()) return "central product has the wrong order";
    if (TableGroup::from_model(p).frattini().size() != 2) return "central product Frattini subgroup is not Z2";
  }
  return {};
}

std::string check_group_classification(std::mt19937_64&) {
  for (int dim = 0; dim <= 3; ++dim) {
    std::vector<QuadraticForm> forms;
    std::vector<TableGroup> tables;
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      forms.push_back(form_from_index(dim, k));
      tables.push_back(TableGroup::from_model(from_form(forms.back())));
    }
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const GroupClass gc = classify_group(from_form(forms[i]));
      if (gc.order() != from_form(forms[i]).order()) return "group class order mismatch for " + form_label(forms[i]);
      for (std::size_t j = i; j < forms.size(); ++j) {
        if ((classify(forms[i]) == classify(forms[j])) != iso_oracle(tables[i], tables[j])) {
          return "iso oracle disagrees on " + form_label(forms[i]) + " vs " + form_label(forms[j]);
        }
      }
    }
  }
  return {};
}

std::string check_group_laws(std::mt19937_64&) {
  for (int dim = 0; dim <= 4; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      const GexGroup g = from_form(q);
      const BitMatrix b = q.polar();
      const auto elems = g.elements();
      for (const auto& x : elems) {
        if (g.square(x) != GroupElement{BitVector(dim), q.eval(x.vec)}) return "squaring law fails for " + g.to_string();
        for (const auto& y : elems) {
          if (g.commutator(x, y) != GroupElement{BitVector(dim), b.bilinear(x.vec, y.vec)}) {
            return "commutator law fails for " + g.to_string();
          }
        }
      }
      if (q_from_group(g) != q) return "Q_G round trip fails for " + g.to_string();
    }
  }
  return {};
}

std::string check_dictionary(std::mt19937_64& rng) {
  if (!is_isometric(q_from_table(TableGroup::quaternion()), QuadraticForm::h_minus())) return "Q8 does not give H-";
  if (!is_isometric(q_from_table(TableGroup::dihedral()), QuadraticForm::h_plus())) return "D8 does not give H+";
  if (!is_isometric(q_from_table(TableGroup::cyclic_four()), QuadraticForm::q_one())) return "Z4 does not give Q1";
  for (int trial = 0; trial < 200; ++trial) {
    const int d1 = 1 + rng() % 4;
    const int d2 = 1 + rng() % (8 - d1);
    const QuadraticForm a = random_form(d1, rng), b = random_form(d2, rng);
    const GexGroup ga = from_form(a), gb = from_form(b);
    if (frattini(ga).size() == 2 && frattini(gb).size() == 2) {
      if (q_from_group(central_product(ga, gb)) != direct_sum(a, b)) return "Q of a central product is not the sum";
    }
    const int n = static_cast<int>(rng() % (9 - d1));
    if (q_from_group(direct_z2(ga, n)) != direct_sum(a, QuadraticForm::zero(n))) return "Q of G x Z2^n is not Q + 0^n";
  }
  return {};
}

std::string check_admissible_classification(std::mt19937_64& rng) {
  const QuadraticForm hp = QuadraticForm::h_plus(), hm = QuadraticForm::h_minus(), q1 = QuadraticForm::q_one();
  if (is_admissible(hp)) return "H+ reported admissible";
  if (is_admissible(direct_sum(hp, q1))) return "H+ + Q1 reported admissible";
  if (!is_admissible(direct_sum(hp, hp))) return "H+^2 reported inadmissible";
  if (!is_admissible(hm)) return "H- reported inadmissible";
  for (int dim = 0; dim <= 4; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      if (is_admissible(q) != is_admissible_bruteforce(q).has_value()) {
        return "theorem and oracle disagree on " + form_label(q);
      }
    }
  }
  for (int dim : {5, 6}) {
    for (int trial = 0; trial < 200; ++trial) {
      const QuadraticForm q = random_form(dim, rng);
      if (is_admissible(q) != is_admissible_bruteforce(q).has_value()) {
        return "theorem and oracle disagree on " + form_label(q);
      }
    }
  }
  return {};
}

std::string check_admissible_witnesses(std::mt19937_64& rng) {
  for (int dim = 0; dim <= 4; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      const auto w = admissible_witness(q);
      if (w.has_value() != is_admissible(q)) return "witness presence wrong for " + form_label(q);
      if (w && !is_valid_admissible_basis(q, *w)) return "invalid witness basis for " + form_label(q);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const QuadraticForm q = random_form(5 + rng() % 8, rng);
    const auto w = admissible_witness(q);
    if (w && !is_valid_admissible_basis(q, *w)) return "invalid witness basis for " + form_label(q);
  }
  return {};
}

std::string check_splitting(std::mt19937_64&) {
  for (int dim = 0; dim <= 3; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      for (int n = 0; n <= 3; ++n) {
        const QuadraticForm s = direct_sum(q, QuadraticForm::zero(n));
        if (is_admissible(s) != is_admissible(q)) return "splitting fails for " + form_label(q);
        if (is_admissible_bruteforce(s).has_value() != is_admissible_bruteforce(q).has_value()) {
          return "splitting fails (oracle) for " + form_label(q);
        }
      }
    }
  }
  return {};
}

std::string check_admissible_groups(std::mt19937_64&) {
  for (int dim = 0; dim <= 5; ++dim) {
    for (std::uint64_t k = 0; k < form_count(dim); ++k) {
      const QuadraticForm q = form_from_index(dim, k);
      const GroupClass gc = classify_group(from_form(q));
      const bool listed = (gc.base == GroupBase::Q8Power && gc.m >= 1) ||
                          (gc.base == GroupBase::Q8PowerD8 && gc.m >= 2) ||
                          (gc.base == GroupBase::Q8PowerZ4 && gc.m >= 2);
      if (listed != is_admissible(q)) return "admissible group list mismatch for " + form_label(q);
    }
  }
  return {};
}

std::string check_clifford_psi(std::mt19937_64& rng) {
  for (int n = 2; n <= 6; ++n) {
    const EGroup e(n);
    for (int i = 1; i <= n; ++i) {
      const CliffordElement ei{false, 1u << (i - 1)};
      if (clifford_mul(ei, ei, n) != CliffordElement{true, 0}) return "e_i^2 != -1";
      for (int j = i + 1; j <= n; ++j) {
        const CliffordElement ej{false, 1u << (j - 1)};
        CliffordElement ji = clifford_mul(ej, ei, n);
        ji.negative = !ji.negative;
        if (clifford_mul(ei, ej, n) != ji) return "e_i e_j != -e_j e_i";
      }
    }
    const auto elems = e.elements();
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        const auto ab = e.mul(a, b);
        if (!e.contains(ab)) return "E(n) not closed";
        for (const auto& c : elems) {
          if (e.mul(ab, c) != e.mul(a, e.mul(b, c))) return "Clifford product not associative";
        }
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    if (!verify_psi(n)) return "psi is not an isomorphism at n=" + std::to_string(n);
  }
  for (int n : {9, 10}) {
    if (!verify_psi_sampled(n, 1000, rng())) return "sampled psi check fails at n=" + std::to_string(n);
  }
  return {};
}

std::string check_clifford_table(std::mt19937_64&) {
  std::string failures;
  for (const auto& row : verify_en_table(kCliffordMaxN)) {
    if (!row.pass()) failures += (failures.empty() ? "" : "; ") + row.to_string();
  }
  return failures;
}

struct Entry {
  const char* name;
  const char* anchor;
  Check run;
};

}  // namespace

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& e : entries) n += e.pass;
  return n;
}

int VerificationReport::failed() const { return static_cast<int>(entries.size()) - passed(); }

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << (e.pass ? "PASS " : "FAIL ") << e.name << " [" << e.anchor << "]";
    if (with_timing) out << " " << static_cast<long long>(e.elapsed_ms + 0.5) << "ms";
    if (!e.detail.empty()) out << " -- " << e.detail;
    out << '\n';
  }
  out << "summary: " << passed() << " passed, " << failed() << " failed\n";
  return out.str();
}

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json rec;
    rec["name"] = e.name;
    rec["anchor"] = e.anchor;
    rec["status"] = e.pass ? "PASS" : "FAIL";
    if (with_timing) rec["elapsed_ms"] = e.elapsed_ms;
    if (!e.detail.empty()) rec["detail"] = e.detail;
    doc["checks"].push_back(std::move(rec));
  }
  doc["summary"] = {{"passed", passed()}, {"failed", failed()}};
  return doc.dump(2) + "\n";
}

VerificationReport verify_all(std::uint64_t seed) {
  static const std::vector<Entry> kEntries = {
      {"form-basics", "polar form, orthogonal sum and isometry of quadratic forms", check_form_basics},
      {"form-classification", "classification of possibly degenerate forms over F2", check_form_classification},
      {"form-isometries", "H+^2 = H-^2 and H+ + Q1 = H- + Q1", check_form_isometries},
      {"generalized-extraspecial", "generalized extraspecial criterion on the cocycle models", check_generalized_extraspecial},
      {"central-product", "central product, its Frattini subgroup and associativity", check_central_product},
      {"group-classification", "generalized extraspecial groups are G x Z2^n", check_group_classification},
      {"associated-form", "Q_G and the commutator identity", check_group_laws},
      {"form-dictionary", "forms of Q8, D8, Z4, central products and Z2 factors", check_dictionary},
      {"admissible-classification", "classification of admissible forms", check_admissible_classification},
      {"admissible-witnesses", "explicit admissible bases", check_admissible_witnesses},
      {"splitting", "admissibility ignores zero summands", check_splitting},
      {"admissible-groups", "groups with admissible forms", check_admissible_groups},
      {"clifford-psi", "E(n) is the group on -1, e_1..e_{n-1} with e_i^2 = -1", check_clifford_psi},
      {"clifford-table", "E(n) x Z2 by residue of n mod 8", check_clifford_table},
  };

  VerificationReport report;
  for (const auto& entry : kEntries) {
    std::mt19937_64 rng(seed);
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = entry.run(rng);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.entries.push_back({entry.name, entry.anchor, detail.empty(), ms, detail});
  }
  return report;
}

}  // namespace gex2
