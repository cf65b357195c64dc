#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcluster/algebra/rational.hpp"

namespace mcluster::algebra {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
  std::optional<int> grade;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws PreconditionError on unknown endpoints or duplicate ids.
  Quiver(std::vector<int> vertices, std::vector<Arrow> arrows);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  bool has_vertex(int v) const;
  std::optional<std::size_t> arrow_index(const std::string& id) const;
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  /// Number of arrows source -> target.
  std::size_t multiplicity(int source, int target) const;
  std::vector<std::size_t> arrows_out(int v) const;
  std::vector<std::size_t> arrows_in(int v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> index_;
};

/// Arrow ids in traversal order; the empty word is not used in relations.
using PathWord = std::vector<std::string>;

struct Term {
  Rational coef;
  PathWord path;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Relation {
  std::vector<Term> terms;

  bool is_monomial() const { return terms.size() == 1; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Path as a start vertex plus arrow indices in traversal order.
struct Path {
  int start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  int end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// All paths of the given length, ordered by (start, arrow indices).
std::vector<Path> paths_of_length(const Quiver& q, std::size_t length);

/// Resolves a word to a path; throws PreconditionError if the word is empty,
/// mentions unknown arrows, or is not composable.
Path resolve(const Quiver& q, const PathWord& word);
PathWord word_of(const Quiver& q, const Path& p);

/// Checks relation invariants: nonzero coefficients, parallel terms, each of
/// length at least 2, no repeated paths. Throws PreconditionError.
void validate_presentation(const Presentation& p);

}  // namespace mcluster::algebra
