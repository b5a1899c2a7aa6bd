#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "skewring/action.hpp"
#include "skewring/scalar.hpp"
#include "skewring/skew.hpp"

namespace skewring {

using ArrowSet = boost::dynamic_bitset<>;

/// A finite groupoid with the discrete topology.
///
/// Units are the arrows that occur as a source or range. Compositions
/// involving a unit may be left out of the input; every other composable pair
/// must be listed.
class Groupoid {
 public:
  struct Composition {
    std::string c, d, cd;
  };

  static Groupoid create(std::vector<std::string> arrows, std::vector<std::string> const& src,
                         std::vector<std::string> const& rng, std::vector<std::string> const& inv,
                         std::vector<Composition> const& compose);

  std::size_t size() const { return labels_.size(); }
  std::string const& label(std::size_t a) const { return labels_[a]; }
  std::size_t index(std::string const& label) const;
  std::size_t src(std::size_t a) const { return src_[a]; }
  std::size_t rng(std::size_t a) const { return rng_[a]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  /// cd when src(c) == rng(d).
  std::optional<std::size_t> compose(std::size_t c, std::size_t d) const;

  std::vector<std::size_t> const& units() const { return units_; }
  bool is_unit(std::size_t a) const { return unit_position_[a] >= 0; }
  /// Position of a unit among units(), i.e. its point in the unit space.
  std::size_t unit_position(std::size_t u) const;
  std::vector<std::size_t> isotropy() const;
  /// Orbits of the unit space as sets of unit positions.
  std::vector<PointSet> orbits() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> src_, rng_, inv_;
  std::vector<std::vector<long>> compose_;
  std::vector<std::size_t> units_;
  std::vector<long> unit_position_;
};

/// Pair groupoid on n points: arrows (i,j) with src (j,j) and rng (i,i).
Groupoid pair_groupoid(std::size_t n);
/// Only units.
Groupoid unit_groupoid(std::size_t n);
/// A group as a groupoid with one unit; arrows "1" and "g" for Z/2.
Groupoid cyclic_group_groupoid(std::size_t n);

struct SteinbergFun {
  Carrier carrier;
  std::vector<Scalar> values;  // one per arrow
};

SteinbergFun zero_fun(Groupoid const& g, Carrier c);
SteinbergFun arrow_indicator(Groupoid const& g, Carrier c, ArrowSet const& set);
SteinbergFun convolve(Groupoid const& g, SteinbergFun const& f, SteinbergFun const& h);
bool operator==(SteinbergFun const& a, SteinbergFun const& b);

bool is_bisection(Groupoid const& g, ArrowSet const& b);
ArrowSet bisection_product(Groupoid const& g, ArrowSet const& b, ArrowSet const& c);
ArrowSet bisection_inverse(Groupoid const& g, ArrowSet const& b);
std::string format_arrows(Groupoid const& g, ArrowSet const& b);

/// G^a together with the bisection behind each element.
struct BisectionSemigroup {
  InverseSemigroup semigroup;
  std::vector<ArrowSet> bisections;
  bool restricted;  // generated from a family rather than all bisections
};

/// All bisections including the empty one. Throws CapExceeded above `cap` arrows.
BisectionSemigroup compact_bisections(Groupoid const& g, std::size_t cap = 16);
/// The inverse semigroup generated by a family of bisections (plus the unit space).
BisectionSemigroup generated_bisections(Groupoid const& g, std::vector<ArrowSet> const& family);

/// theta_B : s(B) -> r(B) on the unit space.
PartialAction theta_of_bisections(Groupoid const& g, BisectionSemigroup const& ga);

/// Greedy split of supp f into disjoint bisections carrying constant values.
std::vector<std::pair<ArrowSet, Scalar>> bisection_decomposition(Groupoid const& g, SteinbergFun const& f);

/// The maps between L_c(G0) x| G^a and A_R(G).
class SteinbergIso {
 public:
  SteinbergIso(Groupoid const& g, BisectionSemigroup const& ga, SkewRing const& ring);

  /// psi(f delta_B)(x) = f(r(x)) for x in B.
  SteinbergFun psi_L(Vector const& v) const;
  SteinbergFun psi(SkewElement const& x) const;
  /// phi(sum b_j 1_{B_j}) = sum b_j 1_{r(B_j)} delta_{B_j}.
  SkewElement phi(SteinbergFun const& f) const;

 private:
  Groupoid const* g_;
  BisectionSemigroup const* ga_;
  SkewRing const* ring_;
  std::vector<std::optional<std::size_t>> slice_arrow_;  // arrow carried by each slice
};

struct GroupoidProperties {
  bool effective;
  std::optional<std::size_t> non_effective_witness;  // arrow in Iso \ G0
  bool minimal;
  std::optional<PointSet> non_minimal_witness;  // proper orbit (unit positions)
};

GroupoidProperties groupoid_properties(Groupoid const& g);

/// p * A_R(G) for the smallest prime p dividing the modulus of a non-field Z/n:
/// a nonzero proper two-sided ideal.
struct ScalarIdealWitness {
  std::int64_t p;
  bool nonzero;
  bool proper;
  bool two_sided;
};

std::optional<ScalarIdealWitness> scalar_ideal_witness(Groupoid const& g, Carrier c);

}  // namespace skewring
