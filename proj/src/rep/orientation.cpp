#include "mcluster/rep/orientation.hpp"

#include "mcluster/errors.hpp"

namespace mcluster::rep {

Orientation::Orientation(std::size_t n, std::string word) : n_(n), word_(std::move(word)) {
  if (n_ < 1) throw PreconditionError("orientation: n must be at least 1");
  if (word_.size() != n_ - 1)
    throw PreconditionError("orientation: word '" + word_ + "' must have length " + std::to_string(n_ - 1));
  for (char c : word_)
    if (c != 'R' && c != 'L') throw PreconditionError("orientation: word letters must be R or L");
}

Orientation Orientation::linear(std::size_t n) { return Orientation(n, std::string(n > 0 ? n - 1 : 0, 'R')); }

bool Orientation::reaches(int i, int j) const {
  if (i == j) return true;
  if (i < j) {
    for (int k = i; k < j; ++k)
      if (word_[static_cast<std::size_t>(k - 1)] != 'R') return false;
    return true;
  }
  for (int k = j; k < i; ++k)
    if (word_[static_cast<std::size_t>(k - 1)] != 'L') return false;
  return true;
}

Orientation Orientation::opposite() const {
  std::string w = word_;
  for (char& c : w) c = c == 'R' ? 'L' : 'R';
  return Orientation(n_, w);
}

std::string to_string(const Interval& x) { return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]"; }

void check_interval(const Orientation& o, const Interval& x) {
  if (x.a < 1 || x.b < x.a || x.b > static_cast<int>(o.n()))
    throw PreconditionError("interval " + to_string(x) + " is not valid for n = " + std::to_string(o.n()));
}

std::vector<Interval> all_intervals(std::size_t n) {
  std::vector<Interval> out;
  for (int a = 1; a <= static_cast<int>(n); ++a)
    for (int b = a; b <= static_cast<int>(n); ++b) out.push_back({a, b});
  return out;
}

namespace {
void check_vertex(const Orientation& o, int i) {
  if (i < 1 || i > static_cast<int>(o.n())) throw PreconditionError("vertex " + std::to_string(i) + " out of range");
}
}  // namespace

Interval indecomposable_projective(const Orientation& o, int i) {
  check_vertex(o, i);
  Interval x{i, i};
  while (x.a > 1 && o.reaches(i, x.a - 1)) --x.a;
  while (x.b < static_cast<int>(o.n()) && o.reaches(i, x.b + 1)) ++x.b;
  return x;
}

Interval indecomposable_injective(const Orientation& o, int i) {
  check_vertex(o, i);
  Interval x{i, i};
  while (x.a > 1 && o.reaches(x.a - 1, i)) --x.a;
  while (x.b < static_cast<int>(o.n()) && o.reaches(x.b + 1, i)) ++x.b;
  return x;
}

bool is_projective(const Orientation& o, const Interval& x) {
  for (int i = x.a; i <= x.b; ++i)
    if (indecomposable_projective(o, i) == x) return true;
  return false;
}

bool is_injective(const Orientation& o, const Interval& x) {
  for (int i = x.a; i <= x.b; ++i)
    if (indecomposable_injective(o, i) == x) return true;
  return false;
}

int projective_vertex(const Orientation& o, const Interval& x) {
  for (int i = x.a; i <= x.b; ++i)
    if (indecomposable_projective(o, i) == x) return i;
  throw PreconditionError(to_string(x) + " is not projective");
}

int injective_vertex(const Orientation& o, const Interval& x) {
  for (int i = x.a; i <= x.b; ++i)
    if (indecomposable_injective(o, i) == x) return i;
  throw PreconditionError(to_string(x) + " is not injective");
}

}  // namespace mcluster::rep
