#include "mcluster/algebra/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mcluster/errors.hpp"

namespace mcluster::algebra {
namespace {

Vector sandwich(const StructureAlgebra& a, std::size_t target, const Vector& x, std::size_t source) {
  return a.multiply(a.multiply(a.idempotent(target), x), a.idempotent(source));
}

std::size_t span_dim(const std::vector<Vector>& vs, std::size_t length) {
  Span s(length);
  for (const auto& v : vs) s.add(v);
  return s.dimension();
}

std::vector<std::size_t> sorted_label_order(const StructureAlgebra& a) {
  std::vector<std::size_t> order(a.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a.label(x) < a.label(y); });
  return order;
}

std::optional<int> homogeneous_grade(const StructureAlgebra& a, const Vector& v) {
  std::optional<int> g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (g && *g != a.grade(i)) return std::nullopt;
    g = a.grade(i);
  }
  return g;
}

struct EvaluatedPath {
  Path path;
  Vector value;
};

}  // namespace

std::size_t nilpotency_index(const StructureAlgebra& a) { return radical_powers(a).size() + 1; }

QuiverWithLifts quiver_of(const StructureAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.num_idempotents();
  std::vector<Vector> rad = radical_basis(a);
  std::vector<Vector> rad2 = product_span(a, rad, rad);
  Span rad_span(d);
  for (const auto& r : rad) rad_span.add(r);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> local_rad;
    for (const auto& r : rad) local_rad.push_back(sandwich(a, i, r, i));
    if (a.peirce_component(i, i).size() != span_dim(local_rad, d) + 1)
      throw PreconditionError("not basic-local: e_" + std::to_string(i + 1) + " A e_" + std::to_string(i + 1) +
                              " is not local");
  }

  const auto order = sorted_label_order(a);
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 1);
  std::vector<Arrow> arrows;
  std::vector<Vector> lifts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Span base(d);
      for (const auto& r : rad2) base.add(sandwich(a, j, r, i));
      std::vector<Vector> candidates;
      for (std::size_t b : order) candidates.push_back(sandwich(a, j, a.basis_vector(b), i));
      for (const auto& r : rad) candidates.push_back(sandwich(a, j, r, i));
      for (auto& c : candidates) {
        if (is_zero(c) || !rad_span.contains(c)) continue;
        if (!base.add(c)) continue;
        Arrow arrow;
        arrow.id = "a" + std::to_string(arrows.size() + 1);
        arrow.source = static_cast<int>(i + 1);
        arrow.target = static_cast<int>(j + 1);
        if (a.graded()) arrow.grade = homogeneous_grade(a, c);
        arrows.push_back(std::move(arrow));
        lifts.push_back(std::move(c));
      }
    }
  return {Quiver(std::move(vertices), std::move(arrows)), std::move(lifts)};
}

Presentation minimal_relations(const StructureAlgebra& a, const QuiverWithLifts& q) {
  const std::size_t d = a.dim();
  const std::size_t nil = nilpotency_index(a);
  const Quiver& quiver = q.quiver;

  std::vector<std::vector<EvaluatedPath>> levels(nil + 1);
  for (int v : quiver.vertices())
    levels[0].push_back({Path{v, {}}, a.idempotent(static_cast<std::size_t>(v - 1))});
  for (std::size_t len = 1; len <= nil; ++len) {
    for (const auto& ep : levels[len - 1])
      for (std::size_t arrow : quiver.arrows_out(ep.path.end(quiver))) {
        Path p = ep.path;
        p.arrows.push_back(arrow);
        levels[len].push_back({std::move(p), a.multiply(q.lifts[arrow], ep.value)});
      }
    std::sort(levels[len].begin(), levels[len].end(),
              [](const EvaluatedPath& x, const EvaluatedPath& y) { return x.path < y.path; });
  }

  Span image(d);
  for (std::size_t len = 0; len < nil; ++len)
    for (const auto& ep : levels[len]) image.add(ep.value);
  if (image.dimension() != d) throw InternalError("minimal_relations: path evaluation is not surjective");

  // W: paths of length 2..nil, ordered by length then path.
  std::vector<const EvaluatedPath*> words;
  for (std::size_t len = 2; len <= nil; ++len)
    for (const auto& ep : levels[len]) words.push_back(&ep);
  std::map<Path, std::size_t> word_index;
  for (std::size_t k = 0; k < words.size(); ++k) word_index[words[k]->path] = k;

  std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair;
  for (std::size_t k = 0; k < words.size(); ++k)
    by_pair[{words[k]->path.start, words[k]->path.end(quiver)}].push_back(k);

  std::vector<Vector> kernel;
  for (const auto& [pair, idx] : by_pair) {
    std::vector<Vector> cols;
    for (std::size_t k : idx) cols.push_back(words[k]->value);
    for (const Vector& kv : kernel_basis(Matrix::from_columns(d, cols))) {
      Vector full = zero_vector(words.size());
      for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = kv[c];
      kernel.push_back(std::move(full));
    }
  }

  // J*K + K*J, truncated at length nil (longer paths are in it anyway).
  Span decomposable(words.size());
  auto extend = [&](const Vector& k, std::size_t arrow, bool after) {
    Vector out = zero_vector(words.size());
    bool any = false;
    for (std::size_t c = 0; c < k.size(); ++c) {
      if (k[c] == 0) continue;
      const Path& p = words[c]->path;
      Path ext;
      if (after) {
        if (quiver.arrow(arrow).source != p.end(quiver)) continue;
        ext = p;
        ext.arrows.push_back(arrow);
      } else {
        if (quiver.arrow(arrow).target != p.start) continue;
        ext.start = quiver.arrow(arrow).source;
        ext.arrows.push_back(arrow);
        ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
      }
      auto it = word_index.find(ext);
      if (it == word_index.end()) continue;
      out[it->second] += k[c];
      any = true;
    }
    if (any) decomposable.add(out);
  };
  for (const auto& k : kernel)
    for (std::size_t arrow = 0; arrow < quiver.num_arrows(); ++arrow) {
      extend(k, arrow, true);
      extend(k, arrow, false);
    }

  auto min_length = [&](const Vector& k) {
    for (std::size_t c = 0; c < k.size(); ++c)
      if (k[c] != 0) return words[c]->path.length();
    return std::size_t{0};
  };
  std::vector<std::size_t> order(kernel.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return min_length(kernel[x]) < min_length(kernel[y]); });

  Presentation out;
  out.quiver = quiver;
  std::vector<std::pair<std::size_t, Relation>> chosen;
  for (std::size_t k : order) {
    if (!decomposable.add(kernel[k])) continue;
    Relation rel;
    Rational lead = 0;
    std::size_t first = words.size();
    for (std::size_t c = 0; c < words.size(); ++c) {
      if (kernel[k][c] == 0) continue;
      if (lead == 0) {
        lead = kernel[k][c];
        first = c;
      }
      rel.terms.push_back({kernel[k][c] / lead, word_of(quiver, words[c]->path)});
    }
    chosen.emplace_back(first, std::move(rel));
  }
  std::stable_sort(chosen.begin(), chosen.end(), [&](const auto& x, const auto& y) {
    const Path& px = words[x.first]->path;
    const Path& py = words[y.first]->path;
    auto kx = std::make_tuple(px.start, px.end(quiver), px.length(), x.first);
    auto ky = std::make_tuple(py.start, py.end(quiver), py.length(), y.first);
    return kx < ky;
  });
  for (auto& [_, rel] : chosen) out.relations.push_back(std::move(rel));
  return out;
}

Presentation present(const StructureAlgebra& a) { return minimal_relations(a, quiver_of(a)); }

StructureAlgebra algebra_from_presentation(const Presentation& p, std::size_t max_length) {
  validate_presentation(p);
  const Quiver& q = p.quiver;
  std::vector<Path> rel_paths;
  std::vector<std::vector<std::pair<Rational, Path>>> rels;
  for (const auto& r : p.relations) {
    std::vector<std::pair<Rational, Path>> terms;
    for (const auto& t : r.terms) terms.emplace_back(t.coef, resolve(q, t.path));
    rels.push_back(std::move(terms));
  }

  for (std::size_t limit = 1; limit <= max_length; ++limit) {
    // paths of length 0..limit, long first so that normal forms use short paths
    std::vector<std::vector<Path>> by_length;
    for (std::size_t len = 0; len <= limit; ++len) by_length.push_back(paths_of_length(q, len));
    std::vector<Path> paths;
    for (std::size_t len = limit + 1; len-- > 0;) paths.insert(paths.end(), by_length[len].begin(), by_length[len].end());
    std::map<Path, std::size_t> index;
    for (std::size_t k = 0; k < paths.size(); ++k) index[paths[k]] = k;

    Span ideal(paths.size());
    for (const auto& terms : rels) {
      std::size_t shortest = terms.front().second.length();
      for (const auto& t : terms) shortest = std::min(shortest, t.second.length());
      if (shortest > limit) continue;
      int rs = terms.front().second.start;
      int rt = terms.front().second.end(q);
      for (std::size_t lu = 0; lu + shortest <= limit; ++lu)
        for (const Path& u : by_length[lu]) {
          if (u.start != rt) continue;
          for (std::size_t lv = 0; lu + lv + shortest <= limit; ++lv)
            for (const Path& v : by_length[lv]) {
              if (v.end(q) != rs) continue;
              Vector vec = zero_vector(paths.size());
              for (const auto& [coef, t] : terms) {
                Path full{v.start, v.arrows};
                full.arrows.insert(full.arrows.end(), t.arrows.begin(), t.arrows.end());
                full.arrows.insert(full.arrows.end(), u.arrows.begin(), u.arrows.end());
                auto it = index.find(full);
                if (it != index.end()) vec[it->second] += coef;
              }
              ideal.add(vec);
            }
        }
    }

    bool stable = true;
    for (std::size_t k = 0; k < paths.size() && paths[k].length() == limit; ++k)
      if (!ideal.contains(unit_vector(paths.size(), k))) {
        stable = false;
        break;
      }
    if (!stable) continue;

    std::vector<bool> is_pivot(paths.size(), false);
    std::vector<std::size_t> pivot_row(paths.size(), 0);
    for (std::size_t r = 0; r < ideal.pivots().size(); ++r) {
      is_pivot[ideal.pivots()[r]] = true;
      pivot_row[ideal.pivots()[r]] = r;
    }
    // basis: free paths, listed short first
    std::vector<std::size_t> basis_paths;
    for (std::size_t k = paths.size(); k-- > 0;)
      if (!is_pivot[k]) basis_paths.push_back(k);
    std::vector<std::size_t> position(paths.size(), 0);
    for (std::size_t b = 0; b < basis_paths.size(); ++b) position[basis_paths[b]] = b;
    const std::size_t dim = basis_paths.size();

    auto normal_form = [&](const Path& path) {
      SparseVector out;
      auto it = index.find(path);
      if (it == index.end()) return out;  // longer than limit, hence zero
      std::size_t k = it->second;
      if (!is_pivot[k]) {
        out.emplace_back(position[k], Rational(1));
        return out;
      }
      const Vector& row = ideal.rows()[pivot_row[k]];
      Vector dense = zero_vector(dim);
      for (std::size_t c = 0; c < row.size(); ++c)
        if (c != k && row[c] != 0) dense[position[c]] -= row[c];
      return to_sparse(dense);
    };

    std::vector<std::string> labels;
    for (std::size_t k : basis_paths) {
      const Path& path = paths[k];
      if (path.arrows.empty()) {
        labels.push_back("e" + std::to_string(path.start));
      } else {
        std::string s;
        for (std::size_t arrow : path.arrows) s += (s.empty() ? "" : ".") + q.arrow(arrow).id;
        labels.push_back(s);
      }
    }
    std::vector<std::vector<SparseVector>> products(dim, std::vector<SparseVector>(dim));
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y) {
        const Path& px = paths[basis_paths[x]];
        const Path& py = paths[basis_paths[y]];
        if (py.end(q) != px.start) continue;
        Path composite{py.start, py.arrows};
        composite.arrows.insert(composite.arrows.end(), px.arrows.begin(), px.arrows.end());
        products[x][y] = normal_form(composite);
      }
    std::vector<Vector> idempotents;
    for (int v : q.vertices()) idempotents.push_back(unit_vector(dim, position[index.at(Path{v, {}})]));
    return StructureAlgebra(std::move(labels), std::move(products), std::move(idempotents));
  }
  throw PreconditionError("algebra_from_presentation: quotient is not finite-dimensional within the length limit");
}

Matrix cartan_matrix(const StructureAlgebra& a) {
  const std::size_t n = a.num_idempotents();
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<long>(a.peirce_component(i, j).size());
  return c;
}

std::vector<std::size_t> radical_layer_dims(const StructureAlgebra& a) {
  std::vector<std::size_t> sizes{a.dim()};
  for (const auto& p : radical_powers(a)) sizes.push_back(p.size());
  sizes.push_back(0);
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) dims.push_back(sizes[k] - sizes[k + 1]);
  return dims;
}

}  // namespace mcluster::algebra
