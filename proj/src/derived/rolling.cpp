#include "mcluster/derived/rolling.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "mcluster/derived/tilting.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::derived {

bool is_valid_section(const Orientation& o, const SectionMap& s) {
  if (s.sigma.size() != o.n()) return false;
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    const int d = s(o.arrow_target(k)) - s(o.arrow_source(k));
    if (d != 0 && d != 1) return false;
  }
  return true;
}

std::vector<int> section_sinks(const Orientation& o, const SectionMap& s) {
  std::vector<bool> has_out(o.n() + 1, false);
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    const int i = o.arrow_source(k), j = o.arrow_target(k);
    // (z, j) -> (z, i) and (z, i) -> (z + 1, j) in ZQ
    if (s(i) == s(j))
      has_out[j] = true;
    else
      has_out[i] = true;
  }
  std::vector<int> sinks;
  for (int v = 1; v <= static_cast<int>(o.n()); ++v)
    if (!has_out[v]) sinks.push_back(v);
  return sinks;
}

bool below_section(const OrbitCoordinates& c, const SectionMap& s) { return c.z <= s(c.vertex); }

SectionMap section_of(const DerivedSum& t) {
  if (t.summands.empty()) throw PreconditionError("section_of: empty complex");
  const DerivedCategory& cat = category_for(t.orientation);
  const Orientation& o = t.orientation;
  const int n = static_cast<int>(o.n());
  constexpr int unset = INT_MIN / 2;

  std::vector<int> floor(n, unset);
  std::set<OrbitCoordinates> summands;
  for (const auto& x : t.summands) {
    auto c = cat.coordinates(x);
    summands.insert(c);
    floor[c.vertex - 1] = std::max(floor[c.vertex - 1], c.z);
  }

  // least valid section above every summand
  SectionMap s{floor};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < o.num_arrows(); ++k) {
      int& si = s.sigma[o.arrow_source(k) - 1];
      int& sj = s.sigma[o.arrow_target(k) - 1];
      if (sj < si) sj = si, changed = true;
      if (si < sj - 1) si = sj - 1, changed = true;
    }
  }

  for (;;) {
    auto sinks = section_sinks(o, s);
    auto it = std::find_if(sinks.begin(), sinks.end(), [&](int v) { return !summands.count({s(v), v}); });
    if (it == sinks.end()) break;
    --s.sigma[*it - 1];
  }
  if (!is_valid_section(o, s)) throw InternalError("section_of produced an invalid section");
  return s;
}

RollingSplit rolling_split(const DerivedSum& t) {
  const DerivedCategory& cat = category_for(t.orientation);
  RollingSplit split;
  split.section = section_of(t);
  split.complement.orientation = t.orientation;
  split.on_section.orientation = t.orientation;
  for (std::size_t k = 0; k < t.summands.size(); ++k) {
    auto c = cat.coordinates(t.summands[k]);
    if (c.z == split.section(c.vertex)) {
      split.section_summands.push_back(k);
      split.on_section.summands.push_back(t.summands[k]);
    } else {
      split.complement.summands.push_back(t.summands[k]);
    }
  }
  for (const auto& x : split.on_section.summands)
    for (const auto& y : split.complement.summands)
      if (cat.hom_dim(x, y) != 0) throw InternalError("rolling_split: Hom(" + to_string(x) + ", " + to_string(y) + ") != 0");
  return split;
}

DerivedSum roll(const DerivedSum& t, int m, std::optional<std::size_t> bound) {
  if (m < 1) throw PreconditionError("roll: m must be at least 1");
  require_tilting(t);
  require_gldim_at_most_m_plus_1(t, m, bound);
  const DerivedCategory& cat = category_for(t.orientation);

  RollingSplit split = rolling_split(t);
  DerivedSum rolled = t;
  for (std::size_t k : split.section_summands) rolled.summands[k] = cat.apply_F(t.summands[k], m, -1);

  TiltingCertificate cert = is_tilting_complex(rolled);
  if (!cert.tilting) throw RolledNotTiltingError("roll: result is not tilting: " + describe(cert, rolled), t, rolled);
  for (const auto& x : rolled.summands) {
    auto c = cat.coordinates(x);
    if (c.z > split.section(c.vertex) - 1) throw InternalError("roll: " + to_string(x) + " is not below tau of the section");
  }
  return rolled;
}

bool in_fundamental_domain(const DerivedSum& t, int m) {
  const DerivedCategory& cat = category_for(t.orientation);
  return std::all_of(t.summands.begin(), t.summands.end(), [&](const DerivedObject& x) { return cat.in_fundamental_domain(x, m); });
}

std::vector<SectionMap> sections_through(const Orientation& o, int first) {
  const std::size_t n = o.n();
  std::vector<SectionMap> out;
  SectionMap s{std::vector<int>(n)};
  s.sigma[0] = first;
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) {
      out.push_back(s);
      return;
    }
    // arrow v-1 joins vertices v and v+1 (1-based)
    const bool forward = o.arrow_source(v - 1) == static_cast<int>(v);
    for (int d : {0, 1}) {
      s.sigma[v] = forward ? s.sigma[v - 1] + d : s.sigma[v - 1] - d;
      extend(v + 1);
    }
  };
  extend(1);
  return out;
}

std::optional<SectionMap> fundamental_slice(const DerivedSum& t, int m) {
  if (m < 1) throw PreconditionError("fundamental_slice: m must be at least 1");
  const DerivedCategory& cat = category_for(t.orientation);
  const int n = static_cast<int>(t.n());
  std::vector<OrbitCoordinates> coords;
  for (const auto& x : t.summands) coords.push_back(cat.coordinates(x));

  auto fits = [&](const SectionMap& s) {
    for (const auto& c : coords)
      if (c.z < s(c.vertex)) return false;
    std::vector<int> top(n);
    for (int i = 1; i <= n; ++i) {
      auto c = cat.coordinates(cat.shift(cat.from_coordinates({s(i), i}), m));
      top[c.vertex - 1] = c.z;
    }
    for (const auto& c : coords)
      if (c.z > top[c.vertex - 1]) return false;
    return true;
  };

  SectionMap projective{std::vector<int>(n, 0)};
  if (fits(projective)) return projective;
  if (coords.empty()) return std::nullopt;
  auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                      [](const OrbitCoordinates& a, const OrbitCoordinates& b) { return a.z < b.z; });
  // |s(i) - s(1)| < n, and S0[m] lies at most (m + 1)(n + 1) tau-steps above S0
  for (int first = hi->z - (m + 1) * (n + 1) - n; first <= lo->z + n; ++first)
    for (const auto& s : sections_through(t.orientation, first))
      if (fits(s)) return s;
  return std::nullopt;
}

Orientation slice_orientation(const Orientation& o, const SectionMap& s) {
  std::string word = o.word();
  for (std::size_t k = 0; k < o.num_arrows(); ++k)
    if (s(o.arrow_source(k)) != s(o.arrow_target(k))) word[k] = word[k] == 'R' ? 'L' : 'R';
  return Orientation(o.n(), word);
}

DerivedSum transport_to_slice(const DerivedSum& t, const SectionMap& s) {
  if (!is_valid_section(t.orientation, s)) throw PreconditionError("transport_to_slice: invalid section");
  const DerivedCategory& from = category_for(t.orientation);
  DerivedSum out{slice_orientation(t.orientation, s), {}};
  const DerivedCategory& to = category_for(out.orientation);
  for (const auto& x : t.summands) {
    auto c = from.coordinates(x);
    out.summands.push_back(to.from_coordinates({c.z - s(c.vertex), c.vertex}));
  }
  return out;
}

std::size_t default_rolling_cap(const DerivedSum& t, int m) {
  if (t.summands.empty()) return 0;
  auto [lo, hi] = std::minmax_element(t.summands.begin(), t.summands.end(),
                                      [](const DerivedObject& x, const DerivedObject& y) { return x.degree < y.degree; });
  return t.n() * static_cast<std::size_t>(hi->degree - lo->degree + m + 2);
}

RollingResult roll_to_fundamental(const DerivedSum& t, int m, std::optional<std::size_t> cap,
                                  std::optional<std::size_t> bound) {
  if (m < 1) throw PreconditionError("roll_to_fundamental: m must be at least 1");
  require_tilting(t);
  const std::size_t limit = cap.value_or(default_rolling_cap(t, m));
  RollingResult out;
  out.rolled = t;
  out.trajectory.push_back(t);
  for (;;) {
    if (auto slice = fundamental_slice(out.rolled, m)) {
      out.domain_slice = *slice;
      out.result = transport_to_slice(out.rolled, *slice);
      if (!in_fundamental_domain(out.result, m)) throw InternalError("transported complex is outside S_m");
      return out;
    }
    if (out.steps == limit)
      throw RollingError("rolling cap of " + std::to_string(limit) + " steps exhausted", out.trajectory);
    out.rolled = roll(out.rolled, m, bound);
    ++out.steps;
    out.trajectory.push_back(out.rolled);
  }
}

}  // namespace mcluster::derived
