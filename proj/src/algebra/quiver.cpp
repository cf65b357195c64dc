#include "mcluster/algebra/quiver.hpp"

#include <algorithm>
#include <set>

#include "mcluster/errors.hpp"

namespace mcluster::algebra {

Quiver::Quiver(std::vector<int> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<int> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw PreconditionError("quiver: duplicate vertex");
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!seen.count(a.source) || !seen.count(a.target))
      throw PreconditionError("quiver: arrow '" + a.id + "' has an unknown endpoint");
    if (!index_.emplace(a.id, i).second) throw PreconditionError("quiver: duplicate arrow id '" + a.id + "'");
  }
}

bool Quiver::has_vertex(int v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }

std::optional<std::size_t> Quiver::arrow_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::multiplicity(int source, int target) const {
  return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
    return a.source == source && a.target == target;
  }));
}

std::vector<std::size_t> Quiver::arrows_out(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::arrows_in(int v) const {
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) in.push_back(i);
  return in;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length) {
  std::vector<Path> current;
  for (int v : q.vertices()) current.push_back(Path{v, {}});
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const Path& p : current)
      for (std::size_t a : q.arrows_out(p.end(q))) {
        Path longer = p;
        longer.arrows.push_back(a);
        next.push_back(std::move(longer));
      }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

Path resolve(const Quiver& q, const PathWord& word) {
  if (word.empty()) throw PreconditionError("empty path word");
  Path p;
  for (std::size_t k = 0; k < word.size(); ++k) {
    auto idx = q.arrow_index(word[k]);
    if (!idx) throw PreconditionError("unknown arrow '" + word[k] + "'");
    if (k == 0) {
      p.start = q.arrow(*idx).source;
    } else if (q.arrow(p.arrows.back()).target != q.arrow(*idx).source) {
      throw PreconditionError("arrows '" + word[k - 1] + "' and '" + word[k] + "' are not composable");
    }
    p.arrows.push_back(*idx);
  }
  return p;
}

PathWord word_of(const Quiver& q, const Path& p) {
  PathWord w;
  for (std::size_t a : p.arrows) w.push_back(q.arrow(a).id);
  return w;
}

void validate_presentation(const Presentation& p) {
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const Relation& rel = p.relations[r];
    const std::string where = "relation " + std::to_string(r) + ": ";
    if (rel.terms.empty()) throw PreconditionError(where + "no terms");
    std::set<Path> seen;
    int source = 0, target = 0;
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      const Term& term = rel.terms[t];
      if (term.coef == 0) throw PreconditionError(where + "zero coefficient");
      if (term.path.size() < 2) throw PreconditionError(where + "term shorter than 2 arrows");
      Path path = resolve(p.quiver, term.path);
      if (t == 0) {
        source = path.start;
        target = path.end(p.quiver);
      } else if (path.start != source || path.end(p.quiver) != target) {
        throw PreconditionError(where + "terms are not parallel");
      }
      if (!seen.insert(path).second) throw PreconditionError(where + "repeated path");
    }
  }
}

}  // namespace mcluster::algebra
