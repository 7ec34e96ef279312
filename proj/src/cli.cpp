#include "gex2/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gex2/admissible.hpp"
#include "gex2/clifford.hpp"
#include "gex2/gexgroup.hpp"
#include "gex2/verify.hpp"

namespace gex2::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr const char* kCaps =
    "Limits: forms up to l=64; isometry oracle l<=4; admissibility oracle l<=6 (--oracle);\n"
    "group models l<=16 (order 2^17); isomorphism oracle order<=64; Clifford n in [2, 17].\n"
    "Set GEX2_SEED to change the seed of randomized checks.";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QuadraticForm parse_form(const std::string& spec) {
  try {
    if (spec.rfind("gex:", 0) == 0) return GexGroup::parse(spec).form();
    return QuadraticForm::parse(spec);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

GexGroup parse_group(const std::string& spec) {
  const QuadraticForm q = parse_form(spec);
  if (q.dim() > kGexMaxDim) throw UsageError("group model needs l <= " + std::to_string(kGexMaxDim));
  return GexGroup(q);
}

std::vector<std::string> matrix_rows(const BitMatrix& m) {
  std::vector<std::string> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).to_string());
  return rows;
}

std::string describe(const GroupClass& gc) {
  return gc.base == GroupBase::ElementaryAbelian ? "elementary abelian" : gc.to_string();
}

int cmd_classify(const std::string& spec, bool as_json, std::ostream& out) {
  const QuadraticForm q = parse_form(spec);
  const FormClass cls = classify(q);
  const QuadraticForm normal = standard_form(cls);
  const BitMatrix witness = normal_form_witness(q).map();
  if (as_json) {
    json rec;
    rec["form"] = q.to_string();
    rec["class"] = cls.name();
    rec["m1"] = cls.m1;
    rec["kind"] = to_string(cls.kind);
    rec["m2"] = cls.m2;
    rec["normal_form"] = normal.to_string();
    rec["witness"] = matrix_rows(witness);
    out << rec.dump(2) << '\n';
    return 0;
  }
  out << cls.name() << " (m1=" << cls.m1 << ", m2=" << cls.m2 << ")\n";
  out << "kind: " << to_string(cls.kind) << '\n';
  out << "normal form: " << normal.to_string() << '\n';
  out << "witness:\n";
  for (const auto& row : matrix_rows(witness)) out << row << '\n';
  return 0;
}

int cmd_admissible(const std::string& spec, bool witness, bool oracle, bool as_json, std::ostream& out) {
  const QuadraticForm q = parse_form(spec);
  if (oracle && q.dim() > kBruteforceGuaranteedDim) {
    throw UsageError("--oracle needs l <= " + std::to_string(kBruteforceGuaranteedDim));
  }
  const bool verdict = is_admissible(q);
  std::optional<bool> agrees;
  if (oracle) agrees = is_admissible_bruteforce(q).has_value() == verdict;
  const auto basis = witness ? admissible_witness(q) : std::nullopt;

  if (as_json) {
    json rec;
    rec["form"] = q.to_string();
    rec["admissible"] = verdict;
    if (agrees) rec["oracle_agrees"] = *agrees;
    if (witness) {
      rec["basis"] = json::array();
      if (basis) {
        for (const auto& v : basis->vectors) rec["basis"].push_back(v.to_string());
      }
    }
    out << rec.dump(2) << '\n';
  } else {
    out << (verdict ? "ADMISSIBLE" : "NOT ADMISSIBLE");
    if (agrees) out << (*agrees ? " (oracle agrees)" : " (oracle DISAGREES)");
    out << '\n';
    if (basis) {
      out << "basis:\n";
      for (const auto& v : basis->vectors) out << v.to_string() << '\n';
    }
  }
  return agrees.value_or(true) ? 0 : kExitFail;
}

json group_record(const GexGroup& g) {
  const GroupClass gc = classify_group(g);
  json rec;
  rec["group"] = g.to_string();
  rec["class"] = gc.to_string();
  rec["order"] = g.order();
  rec["center"] = center(g).size();
  rec["frattini"] = frattini(g).size();
  rec["generalized_extraspecial"] = is_generalized_extraspecial(g);
  return rec;
}

void print_group(const GexGroup& g, bool as_json, std::ostream& out) {
  if (as_json) {
    out << group_record(g).dump(2) << '\n';
    return;
  }
  out << describe(classify_group(g)) << ", order " << g.order() << ", center " << center(g).size() << ", Frattini "
      << frattini(g).size() << '\n';
  out << "generalized extraspecial: " << (is_generalized_extraspecial(g) ? "yes" : "no") << '\n';
  out << "spec: " << g.to_string() << '\n';
}

int cmd_group(const std::string& spec, bool as_json, std::ostream& out) {
  print_group(parse_group(spec), as_json, out);
  return 0;
}

int cmd_central_product(const std::string& left, const std::string& right, bool as_json, std::ostream& out) {
  const GexGroup a = parse_group(left);
  const GexGroup b = parse_group(right);
  GexGroup product = [&] {
    try {
      return central_product(a, b);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }();
  print_group(product, as_json, out);
  return 0;
}

int cmd_en(int n, bool as_json, std::ostream& out) {
  if (n < 2 || n > kCliffordMaxN) throw UsageError("n must lie in [2, " + std::to_string(kCliffordMaxN) + "]");
  const EnTableRow row = en_table_row(n);
  if (as_json) {
    json rec;
    rec["n"] = row.n;
    rec["residue"] = row.n % 8;
    rec["computed"] = row.computed.to_string();
    rec["expected"] = row.expected.to_string();
    rec["status"] = row.pass() ? "PASS" : "FAIL";
    out << rec.dump(2) << '\n';
  } else {
    out << row.to_string() << '\n';
  }
  return row.pass() ? 0 : kExitFail;
}

int cmd_verify(bool timing, bool as_json, std::ostream& out) {
  const VerificationReport report = verify_all(seed_from_env());
  out << (as_json ? report.to_json(timing) : report.to_text(timing));
  return report.all_pass() ? 0 : kExitFail;
}

}  // namespace

std::uint64_t seed_from_env() {
  const char* raw = std::getenv(kSeedEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 0);
  return (end != nullptr && *end == '\0') ? value : kDefaultSeed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quadratic forms over F2 and generalized extraspecial 2-groups", "gex2"};
  app.footer(kCaps);
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit structured JSON records");

  std::string spec, spec2;
  bool witness = false, oracle = false, no_timing = false;
  int n = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Isometry class, normal form and witness of a form");
  classify_cmd->add_option("form", spec, "Form spec l=<dim>;d=<bits>;u=<bits>")->required();

  auto* admissible_cmd = app.add_subcommand("admissible", "Decide admissibility of a form");
  admissible_cmd->add_option("form", spec, "Form spec")->required();
  admissible_cmd->add_flag("--witness", witness, "Print an admissible basis");
  admissible_cmd->add_flag("--oracle", oracle, "Cross-check with exhaustive search (l <= 6)");

  auto* group_cmd = app.add_subcommand("group", "Summarize the group of a form (l <= 16)");
  group_cmd->add_option("form", spec, "Form spec or gex: group spec")->required();

  auto* product_cmd = app.add_subcommand("central-product", "Central product of two groups");
  product_cmd->add_option("left", spec, "Form or group spec")->required();
  product_cmd->add_option("right", spec2, "Form or group spec")->required();

  auto* en_cmd = app.add_subcommand("en", "Check the decomposition of E(n) x Z2");
  en_cmd->add_option("n", n, "2 <= n <= 17")->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");
  verify_cmd->add_flag("--no-timing", no_timing, "Omit elapsed times for byte-stable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(spec, as_json, out);
    if (*admissible_cmd) return cmd_admissible(spec, witness, oracle, as_json, out);
    if (*group_cmd) return cmd_group(spec, as_json, out);
    if (*product_cmd) return cmd_central_product(spec, spec2, as_json, out);
    if (*en_cmd) return cmd_en(n, as_json, out);
    if (*verify_cmd) return cmd_verify(!no_timing, as_json, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gex2::cli
