// Sequences in the simple reflections (with a neutral marker), the index
// set I_s of palindromes landing in W_L, and the factorization of the
// product into reflections from II_L times a remainder with ltilde = 0.

#pragma once

#include <string>
#include <vector>

#include "parflag/kummer.hpp"

namespace parflag {

// entries: 1..n are simple indices, 0 is the neutral marker.
struct SeqS {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool has_marker() const {
    for (int e : entries)
      if (e == 0) return true;
    return false;
  }
};

WeylElt seq_product(const RootDatum& d, const SeqS& ss);  // [s]

// I_s = { i : s_i != 1 and s_1..s_i..s_1 in W_L }, via the reflection
// criterion: the palindrome is the reflection in s_1..s_{i-1}(alpha_{s_i}).
std::vector<int> compute_iss(const RootDatum& d, const SubSystem& sub, const SeqS& ss);

struct SeqDecomposition {
  std::vector<int> iss;       // ascending positions, 1-based
  std::vector<WeylElt> SS;    // S_1..S_b, each in II_L
  WeylElt omega;
  int b() const { return static_cast<int>(iss.size()); }
};

// Nested-palindrome construction; all postconditions re-verified per call.
SeqDecomposition decompose_sequence(const RootDatum& d, const KummerCtx& ctx, const SeqS& ss);

// Replace entry j (which must lie in I_s) by the neutral marker.
SeqS drop_index(const RootDatum& d, const KummerCtx& ctx, const SeqS& ss, int j);

struct TwistReport {
  Twist omega_sigma;  // omega . c, the composite twist
  WeylElt omega;
  bool ok = false;
  std::vector<std::string> notes;
};

// Requires lambda stable under [s]F; verifies that omega.c permutes R_L,
// its coroots and R+_L, and that the class is fixed under q.(omega.c).
TwistReport check_twist(const RootDatum& d, const KummerCtx& ctx, const SeqS& ss);

}  // namespace parflag
