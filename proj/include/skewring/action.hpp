#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewring/semigroup.hpp"
#include "skewring/space.hpp"

namespace skewring {

/// Raw description of a partial action, before validation.
/// maps[s][x] is theta_s(x) for x in X_{s*}, and -1 elsewhere.
struct ActionData {
  std::vector<PointSet> domains;
  std::vector<std::vector<long>> maps;
};

/// A validated topological partial action theta of S on X.
///
/// Construction checks the three axioms (cover, domain compatibility,
/// composition) and then the derived consequences (X_s inside X_{ss*},
/// idempotents act trivially, theta_{s*} inverts theta_s, monotonicity and
/// restriction along the natural order, unit acts as identity). Any failure
/// throws ValidationError with the axiom name and a witness.
class PartialAction {
 public:
  PartialAction(InverseSemigroup s, Space x, ActionData data);

  InverseSemigroup const& semigroup() const { return s_; }
  Space const& space() const { return x_; }
  PointSet const& domain(std::size_t s) const { return domains_[s]; }
  /// theta_s(p); p must lie in X_{s*}.
  std::size_t theta(std::size_t s, std::size_t p) const;
  bool defined(std::size_t s, std::size_t p) const { return maps_[s][p] >= 0; }
  PointSet image(std::size_t s, PointSet const& u) const;  // theta_s(u n X_{s*})
  std::vector<std::vector<long>> const& maps() const { return maps_; }

  /// alpha_s(f) = f o theta_{s*} on X_s, zero elsewhere; f must lie in D_{s*}.
  LcFun alpha(std::size_t s, LcFun const& f) const;
  /// f in D_s, i.e. supp f inside X_s.
  bool in_ideal(std::size_t s, LcFun const& f) const { return f.support().is_subset_of(domains_[s]); }

  /// For each atom, the first idempotent e with the atom inside X_e.
  std::vector<std::size_t> const& atom_cover() const { return atom_cover_; }
  /// f = sum r_i 1_{K_i} with K_i inside X_{e_i}: the (e_i, r_i 1_{K_i}) terms.
  std::vector<std::pair<std::size_t, LcFun>> nondegenerate_decomposition(LcFun const& f) const;

 private:
  void validate();

  InverseSemigroup s_;
  Space x_;
  std::vector<PointSet> domains_;
  std::vector<std::vector<long>> maps_;
  std::vector<std::size_t> atom_cover_;
};

/// Munn representation: X = E(S) discrete, X_s = {e <= ss*}, theta_s(e) = ses*.
PartialAction munn_action(InverseSemigroup const& s);

/// The two-headed snake on omega_plus(W): S = {1..W, >W, inf, z},
/// X_n = {1..n}, X_{>W} = all naturals, X_inf = X_z = everything, all maps identities.
PartialAction snake_action(std::size_t window);

/// Every element acts as the identity on its domain.
PartialAction identity_action(InverseSemigroup s, Space x, std::vector<PointSet> domains);

// ---- dynamics ----------------------------------------------------------------

struct MinimalityResult {
  bool minimal;
  std::optional<PointSet> witness;  // nonempty proper open invariant set
  bool enumerated;                  // exhaustive scan over opens was run
  bool agrees;                      // orbit-closure and enumeration agree
};

struct PrincipalCertificate {
  std::size_t s;
  PointSet lambda;  // Lambda_s(theta)
  bool dense;       // in X_{s*}
};

struct PrincipalityResult {
  bool principal;
  std::vector<PrincipalCertificate> certificates;
  PointSet global_lambda;  // Lambda(theta)
  bool global_dense;
};

struct FreenessResult {
  bool free;
  std::optional<std::size_t> witness_s;
  std::optional<std::size_t> witness_point;
};

bool is_invariant(PartialAction const& a, PointSet const& u);
/// Smallest open invariant set containing u.
PointSet invariant_open_hull(PartialAction const& a, PointSet const& u);
std::vector<PointSet> orbits(PartialAction const& a);

MinimalityResult is_minimal(PartialAction const& a, std::size_t enumeration_cap = 16);
PrincipalityResult is_topologically_principal(PartialAction const& a);
FreenessResult is_topologically_free(PartialAction const& a);

/// Fixed points of theta_s inside X_{s*}.
PointSet fixed_set(PartialAction const& a, std::size_t s);
/// Points of X_{s*} lying in X_e for some idempotent e <= s.
PointSet idempotent_witnessed(PartialAction const& a, std::size_t s);

/// Group-case sets for t != 1: points of X_{t^-1} moved (resp. fixed) by theta_t.
PointSet group_lambda(PartialAction const& a, std::size_t t);
PointSet group_fixed(PartialAction const& a, std::size_t t);
/// Group notion: every fixed set F_t (t != 1) has empty interior. S must be a group.
bool is_group_topologically_free(PartialAction const& a);

}  // namespace skewring
