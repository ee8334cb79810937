#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlab/catalog.hpp"
#include "qlab/closedforms.hpp"
#include "qlab/doubleseries.hpp"
#include "qlab/partitions.hpp"
#include "qlab/registry.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

std::string coeff_str(const qlab::LaurentSeries& s, long e) {
  if (s.is_zero() || e < s.offset()) return "0";
  return qlab::to_string(s.coeff_at(e));
}

json report_json(const qlab::VerificationReport& r) {
  json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["status"] = qlab::to_string(r.status);
  j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
  j["lhs_coeff"] = r.lhs_coeff ? json(qlab::to_string(*r.lhs_coeff)) : json(nullptr);
  j["rhs_coeff"] = r.rhs_coeff ? json(qlab::to_string(*r.rhs_coeff)) : json(nullptr);
  j["wall_ms"] = r.wall_ms;
  return j;
}

void print_report_text(const qlab::VerificationReport& r) {
  std::cout << qlab::to_string(r.status) << " " << r.id << " [" << qlab::to_string(r.severity)
            << "] (order " << r.order << ", " << r.wall_ms << " ms)";
  if (r.first_mismatch)
    std::cout << " first mismatch at q^" << *r.first_mismatch << ": lhs "
              << qlab::to_string(*r.lhs_coeff) << ", rhs " << qlab::to_string(*r.rhs_coeff);
  if (!r.message.empty()) std::cout << " -- " << r.message;
  std::cout << "\n";
}

int cmd_expand(const std::string& name, std::optional<long> m, long order, long order_cap,
               bool as_json) {
  if (order < 0) return usage_error("--order must be >= 0");
  if (order > order_cap)
    return usage_error("--order exceeds safety cap " + std::to_string(order_cap) +
                       " (raise with --order-cap)");
  qlab::LaurentSeries s = qlab::LaurentSeries::zero(0);
  try {
    s = qlab::expand_named(name, m, order);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  if (as_json) {
    json j;
    j["series"] = name;
    if (m) j["m"] = *m;
    j["order"] = order;
    json coeffs = json::array();
    for (long e = 0; e <= order; ++e) coeffs.push_back(coeff_str(s, e));
    j["coeffs"] = coeffs;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << name;
    if (m) std::cout << " (m = " << *m << ")";
    std::cout << ", coefficients of q^0 .. q^" << order << ":\n";
    for (long e = 0; e <= order; ++e) std::cout << e << "\t" << coeff_str(s, e) << "\n";
    if (!s.is_zero() && s.offset() < 0)
      std::cout << "note: series has terms below q^0 (valuation " << s.offset() << ")\n";
  }
  return kExitPass;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, std::optional<long> order,
               long order_cap, int jobs, bool as_json) {
  if (order && (*order < 0 || *order > order_cap))
    return usage_error("--order outside [0, " + std::to_string(order_cap) + "]");
  const qlab::Registry& reg = qlab::identity_registry();
  std::vector<qlab::VerificationReport> reports;
  if (all) {
    reports = reg.verify_all(order, jobs);
  } else {
    if (ids.empty()) return usage_error("pass --id at least once or use --all");
    // Each --id is an exact record id, or a prefix matching a parameterized
    // group (e.g. "lemma-a2m" selects every lemma-a2m[m=...]).
    std::vector<std::string> selected;
    for (const std::string& pattern : ids) {
      bool matched = false;
      for (const auto& rec : reg.records()) {
        if (rec.id == pattern || rec.id.rfind(pattern + "[", 0) == 0) {
          selected.push_back(rec.id);
          matched = true;
        }
      }
      if (!matched) return usage_error("unknown identity id: " + pattern);
    }
    for (const std::string& id : selected) reports.push_back(reg.verify(id, order));
  }
  long passed = 0, hard_failed = 0, info_failed = 0;
  for (const auto& r : reports) {
    if (r.status == qlab::Status::Pass)
      ++passed;
    else if (r.severity == qlab::Severity::Hard)
      ++hard_failed;
    else
      ++info_failed;
  }
  if (as_json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r);
    std::cout << passed << " passed, " << hard_failed << " hard-failed, " << info_failed
              << " info-failed\n";
  }
  return hard_failed > 0 ? kExitFail : kExitPass;
}

int cmd_oracle(const std::string& name, long max_n, long cap, std::optional<long> list_reps,
               bool as_json) {
  qlab::SeriesId id;
  if (name == "f1")
    id = qlab::SeriesId::F1;
  else if (name == "f2")
    id = qlab::SeriesId::F2;
  else if (name == "g")
    id = qlab::SeriesId::G;
  else
    return usage_error("--series must be one of f1, f2, g");
  if (max_n < 0) return usage_error("--max-n must be >= 0");
  if (max_n > cap)
    return usage_error("--max-n exceeds oracle feasibility cap " + std::to_string(cap));
  if (list_reps && (*list_reps < 1 || *list_reps > cap))
    return usage_error("--list-reps outside [1, " + std::to_string(cap) + "]");

  qlab::LaurentSeries s = qlab::double_series(id, max_n);
  bool all_match = true;
  json rows = json::array();
  for (long n = 1; n <= max_n; ++n) {
    long long count = qlab::representation_count(id, n);
    std::string coeff = coeff_str(s, n);
    bool match = (std::to_string(count) == coeff);
    all_match = all_match && match;
    if (as_json) {
      json row;
      row["n"] = n;
      row["oracle_count"] = std::to_string(count);
      row["series_coeff"] = coeff;
      row["match"] = match;
      rows.push_back(row);
    } else {
      std::cout << n << "\t" << count << "\t" << coeff << "\t" << (match ? "ok" : "MISMATCH")
                << "\n";
    }
  }

  json reps_json = json::array();
  if (list_reps) {
    auto reps = qlab::enumerate_representations(id, *list_reps);
    for (const auto& rep : reps) {
      if (as_json) {
        json r;
        r["k"] = rep.k;
        r["n"] = rep.n;
        r["evens"] = rep.evens;
        r["odds"] = rep.odds;
        r["sign"] = rep.sign;
        reps_json.push_back(r);
      } else {
        std::cout << "rep N=" << *list_reps << ": k=" << rep.k << " n=" << rep.n << " evens=[";
        for (std::size_t i = 0; i < rep.evens.size(); ++i)
          std::cout << (i ? "," : "") << rep.evens[i];
        std::cout << "] odds=[";
        for (std::size_t i = 0; i < rep.odds.size(); ++i) std::cout << (i ? "," : "") << rep.odds[i];
        std::cout << "] sign=" << (rep.sign > 0 ? "+1" : "-1") << "\n";
      }
    }
  }

  if (as_json) {
    json j;
    j["series"] = name;
    j["max_n"] = max_n;
    j["rows"] = rows;
    if (list_reps) {
      j["list_reps_n"] = *list_reps;
      j["representations"] = reps_json;
    }
    j["all_match"] = all_match;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (all_match ? "all rows match" : "MISMATCH detected") << "\n";
  }
  return all_match ? kExitPass : kExitFail;
}

int cmd_list(bool as_json) {
  const qlab::Registry& reg = qlab::identity_registry();
  if (as_json) {
    json j = json::array();
    for (const auto& rec : reg.records()) {
      json r;
      r["id"] = rec.id;
      r["anchor"] = rec.anchor;
      r["default_order"] = rec.default_order;
      r["severity"] = qlab::to_string(rec.severity);
      j.push_back(r);
    }
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& rec : reg.records())
      std::cout << rec.id << "\t[" << qlab::to_string(rec.severity) << "]\torder "
                << rec.default_order << "\t" << rec.anchor << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series identity laboratory"};
  app.require_subcommand(1);

  std::string format = "text";
  long order_cap = qlab::kOrderSafetyCap;

  auto* expand = app.add_subcommand("expand", "Expand a named series to a truncation order");
  std::string series_name;
  long expand_order = 20;
  std::optional<long> m;
  expand->add_option("--series", series_name, "Series name (see `list` or --help)")->required();
  expand->add_option("--order", expand_order, "Truncation order");
  expand->add_option("--m", m, "Family / closed-form parameter m");
  expand->add_option("--order-cap", order_cap, "Safety cap override");

  auto* verify = app.add_subcommand("verify", "Verify registered identities");
  std::vector<std::string> ids;
  bool all = false;
  std::optional<long> verify_order;
  int jobs = 1;
  verify->add_option("--id", ids, "Identity id (exact or parameterized-group prefix)");
  verify->add_flag("--all", all, "Verify the entire catalog");
  verify->add_option("--order", verify_order, "Override the default order");
  verify->add_option("--jobs", jobs, "Concurrent verification jobs")->check(CLI::PositiveNumber);
  verify->add_option("--order-cap", order_cap, "Safety cap override");

  auto* oracle = app.add_subcommand("oracle", "Compare series coefficients with the enumeration oracle");
  std::string oracle_series;
  long max_n = 10;
  long oracle_cap = 40;
  std::optional<long> list_reps;
  oracle->add_option("--series", oracle_series, "One of f1, f2, g")->required();
  oracle->add_option("--max-n", max_n, "Check coefficients 1..N");
  oracle->add_option("--cap", oracle_cap, "Oracle feasibility cap override");
  oracle->add_option("--list-reps", list_reps, "Also list all signed representations of this N");

  auto* list = app.add_subcommand("list", "Dump the identity catalog");

  for (CLI::App* sub : {expand, verify, oracle, list})
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  bool as_json = (format == "json");
  try {
    if (expand->parsed()) return cmd_expand(series_name, m, expand_order, order_cap, as_json);
    if (verify->parsed())
      return cmd_verify(ids, all, verify_order, order_cap, jobs, as_json);
    if (oracle->parsed()) return cmd_oracle(oracle_series, max_n, oracle_cap, list_reps, as_json);
    if (list->parsed()) return cmd_list(as_json);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
