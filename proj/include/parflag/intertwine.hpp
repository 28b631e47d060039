// Index sets for bases of intertwiner spaces: chains (a_0..a_rho) subject
// to step constraints read off two sequences, the canonical bijection Psi
// onto the subsystem-level chains, the grading statistic N, hom-space
// dimension tables, and the top-degree multiplicity check.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "parflag/kummer.hpp"
#include "parflag/seqdecomp.hpp"

namespace parflag {

struct IntertwinerProblem {
  const RootDatum* d = nullptr;
  Twist c;         // the ambient twist (sigma, or a composite)
  KummerCtx L;     // class governing the s side
  KummerCtx Lt;    // class governing the s~ side (equals L in the 5.9 setting)
  SeqS ss, tss;
  std::vector<int> iss, itss;  // ascending, 1-based

  int r() const { return ss.size(); }
  int y() const { return tss.size(); }
  int rho() const { return r() + y(); }
};

// Sequences must be over the simple indices only (no neutral markers).
// When Ltss is not given it defaults to L (the 5.9 convention).
IntertwinerProblem make_problem(const RootDatum& d, const Twist& c, const KummerClass& L,
                                const SeqS& ss, const SeqS& tss,
                                std::optional<KummerClass> Ltss = std::nullopt);

struct IntertwinerIndex {
  std::vector<WeylElt> a;  // a_0 .. a_rho
};

enum class Variant {
  Strict59,     // forced steps off the I-sets, a_0 fixes L
  General61,    // conditional-minimality steps, no class condition on a_0
  Graded614,    // 6.9(a) chains with a_0^*L = w^*L
  Parabolic615  // General61 chains with a_0 in W_J
};

struct EnumOptions {
  Variant variant = Variant::Strict59;
  std::optional<WeylElt> w;   // Graded614
  std::optional<Subset> J;    // Parabolic615
  bool check_stability = true;
};

std::vector<IntertwinerIndex> enumerate_A(const IntertwinerProblem& p, const EnumOptions& opt);

struct GradingInfo {
  int n = 0;
  bool satisfies_69a = false;
};
GradingInfo n_aa(const IntertwinerProblem& p, const IntertwinerIndex& x);

// F = { f in W'0_L : f^{-1}.(omega c).f = omega~ c }
std::vector<WeylElt> f_set(const IntertwinerProblem& p);

// (f S~_1 f^{-1}, ...), each verified to stay inside II_L.
std::vector<WeylElt> conj_SS(const RootDatum& d, const SubSystem& sub, const WeylElt& f,
                             const std::vector<WeylElt>& tSS);

struct PsiImage {
  WeylElt f;
  std::vector<WeylElt> A;  // A_0 .. A_{b+b~}
};

// The canonical bijection on a strict-5.9 chain, with all derived
// constraints re-verified; and its inverse.
PsiImage psi_forward(const IntertwinerProblem& p, const IntertwinerIndex& x);
IntertwinerIndex psi_inverse(const IntertwinerProblem& p, const WeylElt& f,
                             const std::vector<WeylElt>& A);

// Chains (A_0..A_{b+b~}) in W_L with letters fS~f^{-1} then S and twist
// omega.c; the subsystem-level instance of the same enumeration.
std::vector<std::vector<WeylElt>> enumerate_A_sub(const IntertwinerProblem& p, const WeylElt& f);

struct HomDimTable {
  std::map<int, int> counts;  // degree n -> |{a in A_w : N_a = n}|
  int total() const;
};

// Graded counts for the pair (w, L~); identically zero unless L~ = w^*(dual L).
HomDimTable hom_dim_table(const IntertwinerProblem& p, const WeylElt& w, const KummerClass& Ltilde);

struct FrakAResult {
  int count_top = 0;
  int n_L = 0;
  std::optional<WeylElt> witness;  // a_0 of the top chain, when present
  bool ok = false;                 // count_top == n_L and witness = w_I when n_L = 1
};

// Top-degree multiplicity: requires L~ = dual L and every simple index to
// meet the sigma-orbit of some letter of ss.
FrakAResult frakA_check(const RootDatum& d, const KummerClass& L, const SeqS& ss, const SeqS& tss);

}  // namespace parflag
