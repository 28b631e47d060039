// The parametrization of the Frobenius partition of a partial flag manifold
// by chains (J_n, w_n): construction from a minimal coset representative,
// exhaustive enumeration, shifts, and piece dimensions by root counting.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parflag/weyl.hpp"

namespace parflag {

struct ParaType {
  Subset J;
  // entries (J_0,w_0) .. (J_N,w_N); (J_N,w_N) equals the would-be next pair
  std::vector<std::pair<Subset, WeylElt>> chain;

  const Subset& j_inf() const { return chain.back().first; }
  const WeylElt& w_inf() const { return chain.back().second; }
  int stabilization() const { return static_cast<int>(chain.size()) - 1; }
};

// Throws when any defining condition fails.
void validate_paratype(const RootDatum& d, const ParaType& t);

// The unique chain with w_inf = z, built by w_n = min(W_J z W_{sigma(J_n)}).
ParaType tt_from_z(const RootDatum& d, const Subset& J, const WeylElt& z);

// Depth-first enumeration over all admissible chains.
std::vector<ParaType> enumerate_tt(const RootDatum& d, const Subset& J,
                                   std::size_t cap = 100000);

// Finite shift (chain re-rooted at J_m) or the constant chain at infinity.
ParaType shift_tt(const RootDatum& d, const ParaType& t, std::optional<int> m);

// |{alpha in R+ \ R+_{J_inf} : w_inf(sigma(alpha)) in R- or R+_{J_inf}}|.
// This counts dim U_P - dim(U_P cap F^{-1}(w^{-1} U_P w)) for P of type
// J_inf: U_P is the product of the root subgroups U_alpha with alpha in
// R+ \ R+_{J_inf}, Frobenius sends U_alpha into U_{sigma(alpha)}, and
// conjugation by a representative of w permutes root subgroups by w.
int piece_dim(const RootDatum& d, const ParaType& t);

}  // namespace parflag
