#pragma once

#include <optional>
#include <vector>

#include "mcluster/derived/derived_category.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::derived {

/// sigma[i-1] is the z-coordinate of the section in the tau-orbit of P_i.
/// Valid when sigma(j) - sigma(i) is 0 or 1 for every arrow i -> j.
struct SectionMap {
  std::vector<int> sigma;

  int operator()(int vertex) const { return sigma.at(vertex - 1); }
  friend bool operator==(const SectionMap&, const SectionMap&) = default;
};

bool is_valid_section(const Orientation& o, const SectionMap& s);
/// Vertices with no outgoing arrow in the section quiver.
std::vector<int> section_sinks(const Orientation& o, const SectionMap& s);
/// Coordinatewise past: z <= sigma(vertex).
bool below_section(const OrbitCoordinates& c, const SectionMap& s);

SectionMap section_of(const DerivedSum& t);

struct RollingSplit {
  SectionMap section;
  std::vector<std::size_t> section_summands;  // indices into T lying on the section
  DerivedSum complement;                      // T'
  DerivedSum on_section;                      // X
};

/// Throws InternalError if Hom(X, T') != 0.
RollingSplit rolling_split(const DerivedSum& t);

/// roll produced a complex that is not tilting.
class RolledNotTiltingError : public InternalError {
 public:
  RolledNotTiltingError(const std::string& what, DerivedSum input, DerivedSum rolled)
      : InternalError(what), input_(std::move(input)), rolled_(std::move(rolled)) {}
  const DerivedSum& input() const { return input_; }
  const DerivedSum& rolled() const { return rolled_; }

 private:
  DerivedSum input_;
  DerivedSum rolled_;
};

/// T' + F_m^{-1} X with the X summands replaced in place. Requires T tilting
/// with gldim End(T) <= m+1 (checked up to `bound`).
DerivedSum roll(const DerivedSum& t, int m, std::optional<std::size_t> bound = std::nullopt);

bool in_fundamental_domain(const DerivedSum& t, int m);

/// All valid sections with sigma(1) = first, in a fixed order.
std::vector<SectionMap> sections_through(const Orientation& o, int first);

/// A slice S0 such that every summand lies between S0 and S0[m] (the
/// fundamental domain taken relative to End(S0) in place of kQ). The
/// projective slice is preferred; otherwise the first candidate in order of
/// increasing sigma(1).
std::optional<SectionMap> fundamental_slice(const DerivedSum& t, int m);

/// Orientation Q0 of the hereditary algebra whose projectives form the slice.
Orientation slice_orientation(const Orientation& o, const SectionMap& s);

/// Image of T under the equivalence D^b(kQ) -> D^b(kQ0) that sends the slice
/// to the degree-0 projectives: coordinates (z, i) become (z - s(i), i).
DerivedSum transport_to_slice(const DerivedSum& t, const SectionMap& s);

/// Default iteration cap n * (degree span + m + 2).
std::size_t default_rolling_cap(const DerivedSum& t, int m);

struct RollingResult {
  DerivedSum rolled;                   // rho^h(T) in D^b(kQ)
  SectionMap domain_slice;             // S0 with rolled inside S_m(S0)
  DerivedSum result;                   // rolled transported to D^b(kQ0), inside S_m
  std::size_t steps = 0;
  std::vector<DerivedSum> trajectory;  // T, rho(T), ..., rolled
};

/// Raised when the rolling cap is exhausted.
class RollingError : public PreconditionError {
 public:
  RollingError(const std::string& what, std::vector<DerivedSum> trajectory)
      : PreconditionError(what), trajectory_(std::move(trajectory)) {}
  const std::vector<DerivedSum>& trajectory() const { return trajectory_; }

 private:
  std::vector<DerivedSum> trajectory_;
};

/// Rolls until T fits a fundamental domain S_m(S0), then transports along S0.
/// When S0 is the projective slice, result == rolled.
RollingResult roll_to_fundamental(const DerivedSum& t, int m, std::optional<std::size_t> cap = std::nullopt,
                                  std::optional<std::size_t> bound = std::nullopt);

}  // namespace mcluster::derived
