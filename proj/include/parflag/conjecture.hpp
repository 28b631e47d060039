// Desk-scale harness for the basis-bijection conjecture: the connected
// centre hypothesis, invariance of omega across all stable sequences, the
// triviality of the F-set, and the object/basis map Phi.

#pragma once

#include <optional>
#include <vector>

#include "parflag/intertwine.hpp"

namespace parflag {

struct CentreReport {
  bool hypothesis = false;  // W'_L contained in W_L
  std::optional<bool> datum_flag;
  bool torsion_free = false;
};
CentreReport centre_hypothesis(const RootDatum& d, const KummerClass& L);

struct XellFamily {
  KummerClass L;
  int max_len = 0;
  std::vector<SeqS> members;  // all stable sequences of length <= max_len
};
XellFamily build_family(const RootDatum& d, const KummerClass& L, int max_len);

struct OmegaInvariance {
  WeylElt omega;
  XellFamily family;
};
// Requires the hypothesis and a nonempty family; throws on disagreement,
// reporting the two witnesses.
OmegaInvariance omega_invariance(const RootDatum& d, const KummerClass& L, int max_len);

struct PhiReport {
  SeqS ss, tss;
  std::vector<WeylElt> SS, tSS;  // object map on both inputs
  WeylElt omega;
  std::vector<WeylElt> fset;
  int lhs_card = 0;
  int rhs_card = 0;
  bool fset_trivial = false;
  bool roundtrip_ok = false;
  bool cardinalities_agree() const { return lhs_card == rhs_card; }
};
PhiReport phi_check(const RootDatum& d, const KummerClass& L, const SeqS& ss, const SeqS& tss,
                    bool verify_roundtrip = true);

}  // namespace parflag
