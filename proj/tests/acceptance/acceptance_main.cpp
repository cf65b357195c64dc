#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "mcluster/algebra/gentle.hpp"
#include "mcluster/algebra/isomorphism.hpp"
#include "mcluster/algebra/presentation.hpp"
#include "mcluster/algebra/presentation_io.hpp"
#include "mcluster/cli/enumerate.hpp"
#include "mcluster/cli/pipeline.hpp"
#include "mcluster/cluster/cluster_category.hpp"
#include "mcluster/derived/derived_io.hpp"
#include "mcluster/derived/rolling.hpp"
#include "mcluster/derived/tilting.hpp"
#include "mcluster/errors.hpp"
#include "support/algebra_ext_oracle.hpp"
#include "support/derived_fixtures.hpp"
#include "support/enumeration_oracle.hpp"
#include "support/hom_oracle.hpp"

using namespace mcluster;
using derived::category_for;
using derived::DerivedObject;
using derived::DerivedSum;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string data_path(const std::string& name) { return std::string(MCLUSTER_TEST_DATA) + "/" + name; }

algebra::Presentation load_presentation(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream s;
  s << in.rdbuf();
  return algebra::parse_presentation(s.str());
}

bool isomorphic(const algebra::Presentation& p, const algebra::Presentation& q) {
  return algebra::presentation_iso(p, q).verdict == algebra::IsoVerdict::isomorphic;
}

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// 1. transcription of the A_7 complex, its quiver, relations and gldim
Outcome a7_transcription() {
  DerivedSum t = testsupport::a7_example();
  const auto& cat = category_for(t.orientation);
  std::vector<std::string> issues;

  DerivedSum from_file = derived::parse_derived_sum([] {
                           std::ifstream in(data_path("a7_example.json"));
                           std::stringstream s;
                           s << in.rdbuf();
                           return s.str();
                         }()).sum;
  if (!(from_file == t)) issues.push_back("figure transcription differs from the data file");

  for (const auto& x : t.summands)
    if (cat.coordinates(cat.apply_F(x, 2, 1)).z - cat.coordinates(x).z != 9) issues.push_back("F_2 is not 9 tau-steps");
  auto f_inv_6 = cat.coordinates(cat.apply_F(t.summands[5], 2, -1));
  auto f_inv_7 = cat.coordinates(cat.apply_F(t.summands[6], 2, -1));
  auto f_1 = cat.coordinates(cat.apply_F(t.summands[0], 2, 1));
  if (!(f_inv_6 == testsupport::a7_figure_position(7, 0)) || !(f_inv_7 == testsupport::a7_figure_position(13, 6)) ||
      !(f_1 == testsupport::a7_figure_position(19, 0)))
    issues.push_back("F_2 marks are not at columns 7, 13, 19");

  if (!derived::is_tilting_complex(t).tilting) issues.push_back("not tilting");
  algebra::StructureAlgebra b = derived::endo_algebra(t);
  algebra::Presentation p = algebra::present(b);
  std::size_t length_two = 0;
  for (const auto& r : p.relations) length_two += r.is_monomial() && r.terms.front().path.size() == 2;
  if (p.relations.size() != 4 || length_two != 4) issues.push_back("expected exactly 4 length-2 monomial relations");
  algebra::Presentation linear{algebra::Quiver({1, 2, 3, 4, 5, 6, 7}, {{"a1", 1, 2, {}},
                                                                      {"a2", 2, 3, {}},
                                                                      {"a3", 3, 4, {}},
                                                                      {"a4", 4, 5, {}},
                                                                      {"a5", 5, 6, {}},
                                                                      {"a6", 6, 7, {}}}),
                               {}};
  if (!algebra::same_quiver(p.quiver, linear.quiver)) issues.push_back("quiver is not linear A_7");
  if (!isomorphic(p, load_presentation("a7_B.json"))) issues.push_back("relations differ from the drawing");
  auto gl = algebra::global_dimension(b, 8);
  if (!gl || *gl != 3) issues.push_back("gldim is not 3");

  Outcome o;
  o.pass = issues.empty();
  o.detail = format("gldim %zu, %zu relations", gl.value_or(99), p.relations.size());
  for (const auto& s : issues) o.detail += "; " + s;
  return o;
}

// 2. cluster-tilted algebra of the A_7 complex against the relation extension
Outcome a7_cluster_side() {
  DerivedSum t = testsupport::a7_example();
  std::vector<std::string> issues;
  algebra::Presentation c = algebra::present(cluster::cluster_endo(t, 2).algebra);
  algebra::Presentation r = algebra::present(cluster::relation_extension(t, 2).algebra);
  algebra::Presentation b = algebra::present(derived::endo_algebra(t));

  if (c.quiver.num_arrows() != b.quiver.num_arrows() + 2) issues.push_back("expected two added arrows");
  auto g = algebra::is_gentle_with_cycles(c, 2);
  if (g.cycles.size() != 2 || !g.cycles_of_expected_length) issues.push_back("expected two 4-cycles");
  if (!g.cycles_fully_related) issues.push_back("cycles not fully related");
  if (!isomorphic(c, load_presentation("a7_C2.json"))) issues.push_back("C_2(B) differs from the drawing");
  bool psz = cluster::positive_square_zero(t, 2);
  if (psz) issues.push_back("positive_square_zero should be false");
  auto verdict = algebra::presentation_iso(c, r).verdict;
  if (verdict != algebra::IsoVerdict::not_isomorphic) issues.push_back("C_2(B) and R_2(B) should not be isomorphic");
  auto qc = algebra::quiver_of(cluster::cluster_endo(t, 2).algebra).quiver;
  auto qr = algebra::quiver_of(cluster::relation_extension(t, 2).algebra).quiver;
  bool same = algebra::emit(algebra::Presentation{qc, {}}, "json") == algebra::emit(algebra::Presentation{qr, {}}, "json");
  if (!same) issues.push_back("quiver_of outputs differ");

  Outcome o;
  o.pass = issues.empty();
  o.detail = format("C_2(B): %zu arrows, %zu cycles; positive_square_zero=%s; iso(C_2(B), R_2(B))=%s; same quiver=%s",
                    c.quiver.num_arrows(), g.cycles.size(), psz ? "true" : "false",
                    algebra::to_string(verdict).c_str(), same ? "yes" : "no");
  for (const auto& s : issues) o.detail += "; " + s;
  return o;
}

// 3. rolling the A_7 complex and the full pipeline
Outcome a7_rolling() {
  DerivedSum t = testsupport::a7_example();
  const auto& cat = category_for(t.orientation);
  DerivedSum expected = t;
  expected.summands[5] = cat.apply_F(t.summands[5], 2, -1);
  expected.summands[6] = cat.apply_F(t.summands[6], 2, -1);
  std::vector<std::string> issues;

  DerivedSum rolled = derived::roll(t, 2);
  if (!(rolled == expected)) issues.push_back("roll differs from T*");
  if (!derived::in_fundamental_domain(rolled, 2)) issues.push_back("T* not in S_2");
  auto r = derived::roll_to_fundamental(t, 2);
  if (!(r.result == expected)) issues.push_back("roll_to_fundamental differs from T*");
  cli::PipelineReport report = cli::run_pipeline(t, {2, {}, {}});
  if (!report.isomorphic()) issues.push_back("pipeline verdict not isomorphic");

  std::string star = derived::emit(rolled);
  star.pop_back();
  Outcome o;
  o.pass = issues.empty();
  o.detail = format("h=%zu, pipeline %s, T*=", r.steps, algebra::to_string(report.verdict.verdict).c_str()) + star;
  for (const auto& s : issues) o.detail += "; " + s;
  return o;
}

// 4. Hom(F^i X, Y) = 0 for X, Y in S_m and i outside {-1, 0}
Outcome vanishing_suite() {
  std::mt19937 rng(4001);
  std::size_t pairs = 0, failures = 0, oracle_failures = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto o = testsupport::random_orientation(n, rng);
      const auto& cat = category_for(o);
      auto domain = testsupport::fundamental_domain_objects(o, m);
      std::uniform_int_distribution<std::size_t> pick(0, domain.size() - 1);
      for (int k = 0; k < 200; ++k) {
        const auto& x = domain[pick(rng)];
        const auto& y = domain[pick(rng)];
        ++pairs;
        for (int i = -4; i <= 4; ++i) {
          if (i == -1 || i == 0) continue;
          DerivedObject fx = cat.apply_F(x, m, i);
          if (cat.hom_dim(fx, y) != 0) ++failures;
          if (testsupport::derived_hom_oracle(o, fx.degree, fx.module, y.degree, y.module) != 0) ++oracle_failures;
        }
      }
    }
  return {failures == 0 && oracle_failures == 0,
          format("%zu pairs over 12 (n, m) cells, %zu failures (oracle: %zu)", pairs, failures, oracle_failures)};
}

// 5. complexes in S_m: grades {0, 1}, square-zero, Ext^{m+1}_B(DB, B) matches
Outcome trivial_extension_suite() {
  std::mt19937 rng(5001);
  std::size_t failures = 0;
  std::size_t grade_one_total = 0;
  std::string first;
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    int m = 1 + (k / 4) % 3;
    auto o = testsupport::random_orientation(n, rng);
    DerivedSum t = testsupport::random_tilting_in_domain(o, m, rng);
    auto c = cluster::cluster_endo(t, m);
    bool support_ok = true;
    std::size_t grade_one = 0;
    for (const auto& e : c.basis) {
      if (e.grade < 0 || e.grade > 1) support_ok = false;
      grade_one += e.grade == 1;
    }
    grade_one_total += grade_one;
    std::size_t ext = testsupport::ext_dual_to_regular(derived::endo_algebra(t), static_cast<std::size_t>(m) + 1);
    bool ok = support_ok && cluster::positive_square_zero(c) && grade_one == ext;
    if (!ok) {
      ++failures;
      if (first.empty()) {
        first = "; first failure " + derived::emit(t);
        first.pop_back();
        first += format(" m=%d", m);
      }
    }
  }
  return {failures == 0, format("100 complexes (n 2..5, m 1..3), %zu failures, total grade-1 dim %zu", failures,
                                grade_one_total) +
                             first};
}

// 6. single rolling steps and roll_to_fundamental on tilting complexes with gldim <= m+1
Outcome rolling_suite() {
  std::mt19937 rng(6001);
  struct Tally {
    std::size_t cases = 0, not_tilting = 0;
  };
  std::map<int, Tally> per_m;
  std::size_t gldim_fail = 0, order_fail = 0, domain_fail = 0, pipeline_fail = 0, drawn = 0;
  std::map<std::size_t, std::size_t> h_histogram;
  std::string example;

  auto check = [&](const DerivedSum& t, int m) {
    const auto& cat = category_for(t.orientation);
    Tally& tally = per_m[m];
    ++tally.cases;
    derived::SectionMap sigma = derived::section_of(t);
    try {
      DerivedSum rho = derived::roll(t, m);
      if (!testsupport::gldim_at_most(rho, static_cast<std::size_t>(m) + 1, 2 * m + 4)) ++gldim_fail;
      for (const auto& x : rho.summands) {
        auto c = cat.coordinates(x);
        if (c.z > sigma(c.vertex) - 1) {
          ++order_fail;
          break;
        }
      }
    } catch (const derived::RolledNotTiltingError& e) {
      ++tally.not_tilting;
      if (example.empty()) {
        example = derived::emit(t);
        example.pop_back();
        example += format(" with m=%d", m);
      }
    }
    try {
      auto r = derived::roll_to_fundamental(t, m);
      ++h_histogram[r.steps];
      if (!derived::in_fundamental_domain(r.result, m) || r.steps > derived::default_rolling_cap(t, m)) ++domain_fail;
      if (!cli::run_pipeline(t, {m, {}, {}}).isomorphic()) ++pipeline_fail;
    } catch (const std::exception&) {
      ++domain_fail;
    }
  };

  while (drawn < 100) {
    std::size_t n = 2 + drawn % 4;
    int m = 1 + static_cast<int>((drawn / 4) % 3);
    auto o = testsupport::random_orientation(n, rng);
    DerivedSum t = testsupport::random_tilting(o, -1, m + 2, rng);
    if (!testsupport::gldim_at_most(t, static_cast<std::size_t>(m) + 1, 2 * m + 4)) continue;
    ++drawn;
    check(t, m);
  }
  for (const auto& t : testsupport::rolling_fixtures_m1()) check(t, 1);

  std::size_t not_tilting = 0;
  std::string per;
  for (const auto& [m, tally] : per_m) {
    not_tilting += tally.not_tilting;
    per += format(" m=%d: %zu/%zu", m, tally.cases - tally.not_tilting, tally.cases);
  }
  std::string hist;
  for (const auto& [h, count] : h_histogram) hist += format(" h=%zu:%zu", h, count);

  Outcome o;
  o.pass = not_tilting == 0 && gldim_fail == 0 && order_fail == 0 && domain_fail == 0 && pipeline_fail == 0;
  o.detail = format("100 random + 3 fixed complexes; rho_m(T) tilting:%s; gldim/order/domain/pipeline failures %zu/%zu/%zu/%zu;",
                    per.c_str(), gldim_fail, order_fail, domain_fail, pipeline_fail) +
             " rolling steps" + hist;
  if (!example.empty()) o.detail += "; first non-tilting rho: " + example;
  return o;
}

// 7. Serre duality in D^b and the AR formula against module-level Ext
Outcome serre_suite() {
  std::size_t checks = 0, failures = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& o : testsupport::all_orientations(n)) {
      const auto& cat = category_for(o);
      auto objects = testsupport::objects_in_degrees(n, 0, 2);
      for (const auto& x : objects)
        for (const auto& y : objects) {
          ++checks;
          if (cat.hom_dim(x, cat.tau(y)) != cat.hom_dim(y, cat.shift(x, 1))) ++failures;
        }
      for (const auto& m : rep::all_intervals(n))
        for (const auto& nn : rep::all_intervals(n)) {
          ++checks;
          std::size_t ext = cat.modules().ext1_basis(m, nn).size();
          std::size_t dual = cat.hom_dim({0, nn}, cat.tau({0, m}));
          if (ext != dual || ext != testsupport::ext_dim_oracle(o, m, nn)) ++failures;
        }
    }
  return {failures == 0, format("%zu checks over all orientations n <= 4, %zu failures", checks, failures)};
}

// 8. enumeration counts against the brute-force oracle, gentleness and cycles
Outcome enumeration_suite() {
  const std::tuple<std::size_t, int, std::size_t> cases[] = {{2, 1, 5}, {3, 1, 14}, {2, 2, 12}};
  std::vector<std::string> issues;
  std::string counts;
  for (auto [n, m, expected] : cases) {
    auto o = rep::Orientation::linear(n);
    auto report = cli::enumerate_tilting(o, m);
    std::size_t oracle = testsupport::brute_force_cluster_tilting_count(o, m);
    counts += format(" (n=%zu,m=%d): %zu/oracle %zu", n, m, report.count(), oracle);
    if (report.count() != expected || oracle != expected) issues.push_back(format("count mismatch n=%zu m=%d", n, m));
    for (const auto& e : report.objects) {
      bool cycles_ok = e.gentle.cycles_fully_related;
      for (const auto& c : e.gentle.cycles) cycles_ok = cycles_ok && c.size() == static_cast<std::size_t>(m) + 2;
      if (!e.gentle.gentle || !cycles_ok) {
        issues.push_back(format("non-compliant algebra n=%zu m=%d", n, m));
        break;
      }
    }
  }
  Outcome o;
  o.pass = issues.empty();
  o.detail = "counts" + counts + "; all gentle with full (m+2)-cycles";
  if (!issues.empty()) o.detail = "counts" + counts;
  for (const auto& s : issues) o.detail += "; " + s;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "A_7 transcription, presentation and gldim", 5, a7_transcription},
      {2, "A_7 cluster side", 10, a7_cluster_side},
      {3, "A_7 rolling and pipeline", 20, a7_rolling},
      {4, "vanishing lemma suite", 60, vanishing_suite},
      {5, "trivial-extension suite", 300, trivial_extension_suite},
      {6, "rolling suite", 600, rolling_suite},
      {7, "Serre duality and Ext oracle", 60, serre_suite},
      {8, "enumeration", 300, enumeration_suite},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
              << format(" [%.2f s, limit %.0f s%s]", seconds, c.limit_seconds, in_time ? "" : ", over time") << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : format("%d criteria failed", failed)) << std::endl;
  return failed == 0 ? 0 : 1;
}
