#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mcluster::rep {

/// Orientation of an A_n quiver: letter k (0-based) describes the arrow
/// between vertices k+1 and k+2; 'R' is k+1 -> k+2, 'L' is k+1 <- k+2.
class Orientation {
 public:
  Orientation() = default;
  /// Throws PreconditionError unless n >= 1 and the word has length n-1 over {R, L}.
  Orientation(std::size_t n, std::string word);
  static Orientation linear(std::size_t n);

  std::size_t n() const { return n_; }
  const std::string& word() const { return word_; }

  /// Arrow k joins vertices k+1 and k+2 (k is 0-based).
  int arrow_source(std::size_t k) const { return word_[k] == 'R' ? static_cast<int>(k) + 1 : static_cast<int>(k) + 2; }
  int arrow_target(std::size_t k) const { return word_[k] == 'R' ? static_cast<int>(k) + 2 : static_cast<int>(k) + 1; }
  std::size_t num_arrows() const { return word_.size(); }

  /// True if there is a (possibly trivial) path from i to j.
  bool reaches(int i, int j) const;
  /// Opposite quiver (every arrow reversed).
  Orientation opposite() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::size_t n_ = 0;
  std::string word_;
};

/// Thin indecomposable supported on [a, b].
struct Interval {
  int a = 1;
  int b = 1;

  bool contains(int v) const { return a <= v && v <= b; }
  int length() const { return b - a + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& x);

/// Throws PreconditionError if the interval does not fit the orientation.
void check_interval(const Orientation& o, const Interval& x);

/// All intervals [a,b], ordered by (a, b).
std::vector<Interval> all_intervals(std::size_t n);

Interval indecomposable_projective(const Orientation& o, int i);
Interval indecomposable_injective(const Orientation& o, int i);
bool is_projective(const Orientation& o, const Interval& x);
bool is_injective(const Orientation& o, const Interval& x);
/// The vertex i with P_i = x (resp. I_i = x); requires is_projective (resp. is_injective).
int projective_vertex(const Orientation& o, const Interval& x);
int injective_vertex(const Orientation& o, const Interval& x);

}  // namespace mcluster::rep
