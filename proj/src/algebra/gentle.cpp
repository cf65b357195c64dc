#include "mcluster/algebra/gentle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mcluster::algebra {

std::vector<PathWord> simple_cycles(const Quiver& q) {
  std::vector<PathWord> cycles;
  std::vector<int> verts = q.vertices();
  std::sort(verts.begin(), verts.end());
  for (int start : verts) {
    std::set<int> on_path{start};
    PathWord word;
    std::function<void(int)> walk = [&](int v) {
      for (std::size_t a : q.arrows_out(v)) {
        const Arrow& arrow = q.arrow(a);
        if (arrow.target == start) {
          word.push_back(arrow.id);
          cycles.push_back(word);
          word.pop_back();
        } else if (arrow.target > start && !on_path.count(arrow.target)) {
          on_path.insert(arrow.target);
          word.push_back(arrow.id);
          walk(arrow.target);
          word.pop_back();
          on_path.erase(arrow.target);
        }
      }
    };
    walk(start);
  }
  return cycles;
}

GentleReport is_gentle_with_cycles(const Presentation& p, std::size_t m) {
  const Quiver& q = p.quiver;
  GentleReport report;

  report.degree_bounded = std::all_of(q.vertices().begin(), q.vertices().end(), [&](int v) {
    return q.arrows_out(v).size() <= 2 && q.arrows_in(v).size() <= 2;
  });

  std::set<PathWord> quadratic;
  report.monomial_quadratic = true;
  for (const auto& r : p.relations) {
    if (!r.is_monomial() || r.terms.front().path.size() != 2) {
      report.monomial_quadratic = false;
      continue;
    }
    quadratic.insert(r.terms.front().path);
  }

  report.compatible = true;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    std::size_t after_related = 0, after_free = 0, before_related = 0, before_free = 0;
    for (std::size_t b : q.arrows_out(a.target)) {
      if (quadratic.count({a.id, q.arrow(b).id}))
        ++after_related;
      else
        ++after_free;
    }
    for (std::size_t c : q.arrows_in(a.source)) {
      if (quadratic.count({q.arrow(c).id, a.id}))
        ++before_related;
      else
        ++before_free;
    }
    if (after_related > 1 || after_free > 1 || before_related > 1 || before_free > 1) report.compatible = false;
  }
  report.gentle = report.degree_bounded && report.monomial_quadratic && report.compatible;

  report.cycles = simple_cycles(q);
  report.cycles_of_expected_length = std::all_of(report.cycles.begin(), report.cycles.end(),
                                                 [&](const PathWord& c) { return c.size() == m + 2; });
  report.cycles_fully_related = std::all_of(report.cycles.begin(), report.cycles.end(), [&](const PathWord& c) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!quadratic.count({c[k], c[(k + 1) % c.size()]})) return false;
    return true;
  });
  report.cycle_compliant = report.cycles_of_expected_length && report.cycles_fully_related;
  return report;
}

}  // namespace mcluster::algebra
