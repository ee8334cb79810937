// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria group the registry records; a few checks (independent
// theta oracle, ring axioms) run in-process.

#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qlab/closedforms.hpp"
#include "qlab/hyperg.hpp"
#include "qlab/partitions.hpp"
#include "qlab/registry.hpp"

using namespace qlab;

namespace {

struct Task {
  std::string id;
  std::optional<long> order;
};

// Runs the tasks concurrently, returns reports in task order.
std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks) {
  const Registry& reg = identity_registry();
  std::vector<std::future<VerificationReport>> futures;
  for (const auto& t : tasks)
    futures.push_back(std::async(std::launch::async, [&reg, t] { return reg.verify(t.id, t.order); }));
  std::vector<VerificationReport> reports;
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

std::vector<Task> tasks_by_prefix(const std::vector<std::string>& prefixes,
                                  std::optional<long> order = std::nullopt) {
  std::vector<Task> tasks;
  for (const auto& rec : identity_registry().records())
    for (const auto& p : prefixes)
      if (rec.id == p || rec.id.rfind(p + "[", 0) == 0) {
        tasks.push_back({rec.id, order});
        break;
      }
  return tasks;
}

bool all_pass(const std::vector<VerificationReport>& reports, std::string& detail) {
  bool ok = true;
  long total_ms = 0;
  for (const auto& r : reports) {
    total_ms += r.wall_ms;
    if (r.status != Status::Pass) {
      ok = false;
      detail += " " + r.id + "=" + to_string(r.status);
      if (r.first_mismatch) detail += "@q^" + std::to_string(*r.first_mismatch);
    }
  }
  detail += " (" + std::to_string(reports.size()) + " checks, " + std::to_string(total_ms) +
            " ms total)";
  return ok;
}

int failures = 0;

void report(int n, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << n << " - " << title << detail << "\n"
            << std::flush;
  if (!ok) ++failures;
}

// Independent integer-only theta oracle: expands
// (q^2;q^2)^2_inf / (q;q^2)^2_inf by brute-force polynomial products, with
// each 1/(1-q^e) entered as a truncated geometric series. No LaurentSeries
// code is involved.
std::vector<long long> theta_brute_force(long order) {
  auto mul = [order](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(order + 1, 0);
    for (long i = 0; i <= order; ++i)
      if (a[i])
        for (long j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<long long> p(order + 1, 0);
  p[0] = 1;
  for (long e = 2; e <= order; e += 2) {  // (q^2;q^2)_inf twice
    std::vector<long long> f(order + 1, 0);
    f[0] = 1;
    f[e] = -1;
    p = mul(p, f);
    p = mul(p, f);
  }
  for (long e = 1; e <= order; e += 2) {  // 1/(q;q^2)_inf twice
    std::vector<long long> g(order + 1, 0);
    for (long k = 0; k <= order; k += e) g[k] = 1;
    p = mul(p, g);
    p = mul(p, g);
  }
  return p;
}

LaurentSeries random_series(std::mt19937& rng, long order) {
  std::uniform_int_distribution<long> off_dist(-5, 5);
  std::uniform_int_distribution<int> num_dist(-6, 6), den_dist(1, 4);
  long offset = off_dist(rng);
  LaurentSeries s = LaurentSeries::zero(order);
  for (long e = offset; e <= order; ++e) {
    int num = num_dist(rng);
    if (e == offset && num == 0) num = 1;
    if (num != 0) s = add(s, LaurentSeries::monomial(Rational(num, den_dist(rng)), e, order));
  }
  return s;
}

}  // namespace

int main() {
  // 1. Theorem reproduction at order 200, each check under 60 s.
  {
    auto reports = run_tasks({{"thm-f1", 200}, {"thm-f2", 200}, {"thm-g", 200}});
    std::string detail;
    bool ok = all_pass(reports, detail);
    for (const auto& r : reports)
      if (r.wall_ms >= 60000) {
        ok = false;
        detail += " " + r.id + " too slow (" + std::to_string(r.wall_ms) + " ms)";
      }
    report(1, "theorem series equal their closed forms (order 200, < 60 s each):", ok, detail);
  }

  // 2. Positivity at order 500 and the corollary-proof lower bounds at 300.
  {
    auto reports = run_tasks({{"positivity-f1", 500},
                              {"positivity-f2", 500},
                              {"positivity-g", 500},
                              {"bound-f1", 300},
                              {"bound-g", 300}});
    std::string detail;
    bool ok = all_pass(reports, detail);
    // The f2 bound is informational: its printed form is defective and is
    // expected to FAIL; report its status without affecting the criterion.
    auto f2bound = identity_registry().verify("bound-f2", 300);
    detail += " [informational: bound-f2=" + to_string(f2bound.status);
    if (f2bound.first_mismatch) detail += "@q^" + std::to_string(*f2bound.first_mismatch);
    detail += "]";
    report(2, "coefficient positivity (order 500) and termwise bounds (order 300):", ok, detail);
  }

  // 3. Lemma evaluations at order 100.
  {
    auto tasks = tasks_by_prefix({"lemma-a2", "lemma-a2m", "lemma-aprime1", "lemma-aprime2",
                                  "lemma-aprime-forms", "lemma-b2", "lemma-b2m", "lemma-bprime"});
    std::string detail;
    bool ok = all_pass(run_tasks(tasks), detail);
    report(3, "family evaluations match their closed forms (order 100):", ok, detail);
  }

  // 4. Telescoping, finite chains, and the two limit identities.
  {
    auto tasks = tasks_by_prefix({"telescope-a", "telescope-b", "chain-a", "chain-b"});
    tasks.push_back({"help-id-1", 150});
    tasks.push_back({"help-2-double-1", 150});
    std::string detail;
    bool ok = all_pass(run_tasks(tasks), detail);
    report(4, "telescoping relations, finite chains, and limit identities:", ok, detail);
  }

  // 5. Classical-identity instances and randomized product laws.
  {
    auto tasks = tasks_by_prefix(
        {"heine1", "heine2", "qbinom", "kratt21", "basic-splitting", "basic-tail"});
    std::string detail;
    bool ok = all_pass(run_tasks(tasks), detail);
    report(5, "Heine / q-binomial / contiguous instances and product laws:", ok, detail);
  }

  // 6. Lambert identity at order 300, openings frozen against the
  //    independent brute-force product oracle.
  {
    auto reports = run_tasks({{"lambert-theta", 300}});
    std::string detail;
    bool ok = all_pass(reports, detail);
    auto oracle = theta_brute_force(8);
    auto lam = lambert_theta(8);
    auto prod = closed_form(ClosedFormTag::Theta, 8);
    for (long e = 0; e <= 8; ++e) {
      if (lam.coeff_at(e) != Rational(static_cast<long>(oracle[e])) ||
          prod.coeff_at(e) != Rational(static_cast<long>(oracle[e]))) {
        ok = false;
        detail += " opening mismatch at q^" + std::to_string(e);
      }
    }
    const long long frozen[] = {1, 2, 1, 2, 2};
    for (long e = 0; e <= 4; ++e)
      if (oracle[e] != frozen[e]) {
        ok = false;
        detail += " frozen-value mismatch at q^" + std::to_string(e);
      }
    report(6, "Lambert sum equals the theta product (order 300, frozen opening 1,2,1,2,2):", ok,
           detail);
  }

  // 7. Oracle equivalence to N = 40 plus hand-checkable spot values.
  {
    auto reports =
        run_tasks({{"oracle-f1", 40}, {"oracle-f2", 40}, {"oracle-g", 40}, {"oracle-f1-scan", 40}});
    std::string detail;
    bool ok = all_pass(reports, detail);
    const long f1c[] = {1, 0, 1, 1, 0};
    for (long N = 1; N <= 5; ++N)
      if (representation_count(SeriesId::F1, N) != f1c[N - 1]) ok = false;
    const long f2c[] = {1, 1, 2};
    for (long N = 2; N <= 4; ++N)
      if (representation_count(SeriesId::F2, N) != f2c[N - 2]) ok = false;
    const long gc[] = {1, 0, 1, 1, 1};
    for (long N = 2; N <= 6; ++N)
      if (representation_count(SeriesId::G, N) != gc[N - 2]) ok = false;
    report(7, "enumeration oracles agree with the series (N <= 40) and spot values:", ok, detail);
  }

  // 8. Ring axioms and inverse laws on random series; integer coefficients
  //    across the catalog (already enforced inside every equality record).
  {
    std::mt19937 rng(0xACCE5508);
    bool ok = true;
    std::string detail;
    int cases = 0;
    for (int trial = 0; trial < 200 && ok; ++trial, ++cases) {
      auto a = random_series(rng, 60);
      auto b = random_series(rng, 60);
      auto c = random_series(rng, 60);
      auto d1 = mul(a, add(b, c));
      auto d2 = add(mul(a, b), mul(a, c));
      if (!equal_to_order(add(add(a, b), c), add(a, add(b, c)), 60) ||
          !equal_to_order(mul(a, b), mul(b, a), mul(a, b).order()) ||
          !equal_to_order(d1, d2, std::min(d1.order(), d2.order()))) {
        ok = false;
        detail += " ring axiom failed at trial " + std::to_string(trial);
      }
      auto p = mul(a, invert(a));
      if (!equal_to_order(p, LaurentSeries::one(p.order()), p.order())) {
        ok = false;
        detail += " inverse law failed at trial " + std::to_string(trial);
      }
    }
    detail += " (" + std::to_string(cases) + " random cases, order 60)";
    report(8, "series ring axioms and inverse laws:", ok, detail);
  }

  if (failures == 0) {
    std::cout << "all 8 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
