#include "mcluster/algebra/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mcluster/algebra/presentation.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::algebra {

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic:
      return "isomorphic";
    case IsoVerdict::not_isomorphic:
      return "not-isomorphic";
    case IsoVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

/// Calls visit(map) for each multiplicity-preserving vertex bijection until
/// visit returns true. Returns whether some call returned true.
bool for_each_vertex_bijection(const Quiver& p, const Quiver& q, const std::function<bool(const std::map<int, int>&)>& visit) {
  if (p.num_vertices() != q.num_vertices() || p.num_arrows() != q.num_arrows()) return false;
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  auto signature = [](const Quiver& g, int v) {
    return std::make_tuple(g.arrows_out(v).size(), g.arrows_in(v).size(), g.multiplicity(v, v));
  };
  std::map<int, int> assignment;
  std::set<int> used;
  std::function<bool(std::size_t)> step = [&](std::size_t k) -> bool {
    if (k == pv.size()) return visit(assignment);
    int v = pv[k];
    for (int w : qv) {
      if (used.count(w) || signature(p, v) != signature(q, w)) continue;
      bool ok = true;
      for (const auto& [x, y] : assignment)
        if (p.multiplicity(v, x) != q.multiplicity(w, y) || p.multiplicity(x, v) != q.multiplicity(y, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assignment[v] = w;
      used.insert(w);
      if (step(k + 1)) return true;
      assignment.erase(v);
      used.erase(w);
    }
    return false;
  };
  return step(0);
}

bool contains_subword(const PathWord& haystack, const PathWord& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

}  // namespace

std::optional<std::map<int, int>> find_quiver_isomorphism(const Quiver& p, const Quiver& q) {
  std::optional<std::map<int, int>> found;
  for_each_vertex_bijection(p, q, [&](const std::map<int, int>& m) {
    found = m;
    return true;
  });
  return found;
}

bool same_quiver(const Quiver& p, const Quiver& q) { return find_quiver_isomorphism(p, q).has_value(); }

std::vector<PathWord> minimal_monomials(const Presentation& p) {
  std::vector<PathWord> words;
  for (const auto& r : p.relations) {
    if (!r.is_monomial()) throw PreconditionError("minimal_monomials: relation is not monomial");
    words.push_back(r.terms.front().path);
  }
  std::sort(words.begin(), words.end(), [](const PathWord& a, const PathWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<PathWord> minimal;
  for (const auto& w : words)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const PathWord& m) { return contains_subword(w, m); }))
      minimal.push_back(w);
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

IsoResult presentation_iso(const Presentation& p, const Presentation& q) {
  validate_presentation(p);
  validate_presentation(q);
  IsoResult result;
  if (!find_quiver_isomorphism(p.quiver, q.quiver)) {
    result.verdict = IsoVerdict::not_isomorphic;
    result.reason = "quivers differ";
    return result;
  }
  auto monomial = [](const Presentation& x) {
    return std::all_of(x.relations.begin(), x.relations.end(), [](const Relation& r) { return r.is_monomial(); });
  };

  if (monomial(p) && monomial(q)) {
    const auto rel_p = minimal_monomials(p);
    std::set<PathWord> rel_q;
    for (auto& w : minimal_monomials(q)) rel_q.insert(w);
    if (rel_p.size() != rel_q.size()) {
      result.verdict = IsoVerdict::not_isomorphic;
      result.reason = "different numbers of minimal monomial relations";
      return result;
    }
    bool found = for_each_vertex_bijection(p.quiver, q.quiver, [&](const std::map<int, int>& vmap) {
      // parallel classes of p's arrows with their candidate images in q
      std::map<std::pair<int, int>, std::vector<std::size_t>> classes_p, classes_q;
      for (std::size_t i = 0; i < p.quiver.num_arrows(); ++i) {
        const Arrow& a = p.quiver.arrow(i);
        classes_p[{a.source, a.target}].push_back(i);
      }
      for (std::size_t i = 0; i < q.quiver.num_arrows(); ++i) {
        const Arrow& a = q.quiver.arrow(i);
        classes_q[{a.source, a.target}].push_back(i);
      }
      std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
      for (const auto& [key, arrows] : classes_p) blocks.push_back({arrows, classes_q[{vmap.at(key.first), vmap.at(key.second)}]});

      std::map<std::string, std::string> amap;
      std::function<bool(std::size_t)> assign = [&](std::size_t b) -> bool {
        if (b == blocks.size()) {
          for (const auto& w : rel_p) {
            PathWord image;
            for (const auto& id : w) image.push_back(amap.at(id));
            if (!rel_q.count(image)) return false;
          }
          result.vertex_map = vmap;
          result.arrow_map = amap;
          return true;
        }
        std::vector<std::size_t> perm = blocks[b].second;
        std::sort(perm.begin(), perm.end());
        do {
          for (std::size_t k = 0; k < perm.size(); ++k)
            amap[p.quiver.arrow(blocks[b].first[k]).id] = q.quiver.arrow(perm[k]).id;
          if (assign(b + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
      };
      return assign(0);
    });
    result.verdict = found ? IsoVerdict::isomorphic : IsoVerdict::not_isomorphic;
    result.reason = found ? "relation sets correspond under an explicit bijection"
                          : "no quiver isomorphism carries the relations onto each other";
    return result;
  }

  StructureAlgebra ap = algebra_from_presentation(p);
  StructureAlgebra aq = algebra_from_presentation(q);
  if (ap.dim() != aq.dim()) {
    result.verdict = IsoVerdict::not_isomorphic;
    result.reason = "dimensions differ";
    return result;
  }
  if (radical_layer_dims(ap) != radical_layer_dims(aq)) {
    result.verdict = IsoVerdict::not_isomorphic;
    result.reason = "radical layers differ";
    return result;
  }
  Matrix cp = cartan_matrix(ap);
  Matrix cq = cartan_matrix(aq);
  auto position = [](const Quiver& g, int v) {
    return static_cast<std::size_t>(std::find(g.vertices().begin(), g.vertices().end(), v) - g.vertices().begin());
  };
  bool cartan_match = for_each_vertex_bijection(p.quiver, q.quiver, [&](const std::map<int, int>& vmap) {
    for (const auto& [x, xi] : vmap)
      for (const auto& [y, yi] : vmap)
        if (cp(position(p.quiver, x), position(p.quiver, y)) != cq(position(q.quiver, xi), position(q.quiver, yi)))
          return false;
    return true;
  });
  if (!cartan_match) {
    result.verdict = IsoVerdict::not_isomorphic;
    result.reason = "Cartan matrices differ under every quiver isomorphism";
    return result;
  }
  result.verdict = IsoVerdict::inconclusive;
  result.reason = "invariants agree but relations are not monomial";
  return result;
}

}  // namespace mcluster::algebra
