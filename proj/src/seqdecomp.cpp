#include "parflag/seqdecomp.hpp"

#include <algorithm>

namespace parflag {

WeylElt seq_product(const RootDatum& d, const SeqS& ss) {
  std::vector<int> word;
  for (int e : ss.entries) {
    if (e == 0) continue;
    if (e < 1 || e > d.nsimple()) fail("sequence entry out of range");
    word.push_back(e);
  }
  return from_word(d, word);
}

std::vector<int> compute_iss(const RootDatum& d, const SubSystem& sub, const SeqS& ss) {
  std::vector<int> iss;
  WeylElt prefix = identity_elt(d);  // s_1 ... s_{i-1}
  for (int i = 1; i <= ss.size(); ++i) {
    int e = ss.entries[i - 1];
    if (e == 0) continue;
    int beta = act_on_root_index(d, prefix, d.simple_root_index(e));
    if (sub.contains(beta)) iss.push_back(i);
    prefix = mul(d, prefix, simple_reflection(d, e));
  }
  return iss;
}

SeqDecomposition decompose_sequence(const RootDatum& d, const KummerCtx& ctx, const SeqS& ss) {
  SeqDecomposition out;
  out.iss = compute_iss(d, ctx.sub, ss);
  // Q_e = product of the letters before i_e at positions not in {i_1..i_{e-1}};
  // S_e = Q_e s_{i_e} Q_e^{-1}.  omega = product of the letters off I_s.
  for (std::size_t e = 0; e < out.iss.size(); ++e) {
    std::vector<int> qword;
    for (int k = 1; k < out.iss[e]; ++k) {
      int ent = ss.entries[k - 1];
      if (ent == 0) continue;
      bool used = false;
      for (std::size_t f = 0; f < e; ++f)
        if (out.iss[f] == k) used = true;
      if (!used) qword.push_back(ent);
    }
    WeylElt q = from_word(d, qword);
    WeylElt s = simple_reflection(d, ss.entries[out.iss[e] - 1]);
    out.SS.push_back(mul(d, mul(d, q, s), inverse(q)));
  }
  std::vector<int> oword;
  for (int k = 1; k <= ss.size(); ++k) {
    int ent = ss.entries[k - 1];
    if (ent == 0) continue;
    if (std::binary_search(out.iss.begin(), out.iss.end(), k)) continue;
    oword.push_back(ent);
  }
  out.omega = from_word(d, oword);

  // postconditions, re-checked on every call
  for (const auto& s : out.SS) {
    bool in_iil = false;
    for (const auto& r : ctx.sub.simple_refl)
      if (r == s) in_iil = true;
    if (!in_iil) fail("decompose_sequence: an S_e is not a simple reflection of R_L");
  }
  if (ltilde(d, ctx.sub, inverse(out.omega)) != 0)
    fail("decompose_sequence: ltilde(omega^{-1}) != 0");
  WeylElt prod = identity_elt(d);
  for (const auto& s : out.SS) prod = mul(d, prod, s);
  prod = mul(d, prod, out.omega);
  if (prod != seq_product(d, ss)) fail("decompose_sequence: product identity fails");
  return out;
}

SeqS drop_index(const RootDatum& d, const KummerCtx& ctx, const SeqS& ss, int j) {
  std::vector<int> iss = compute_iss(d, ctx.sub, ss);
  if (!std::binary_search(iss.begin(), iss.end(), j))
    fail("drop_index: position is not in I_s");
  SeqS out = ss;
  out.entries[j - 1] = 0;
  // postcondition: I_{s(j)} = I_s - {j}
  std::vector<int> expect;
  for (int i : iss)
    if (i != j) expect.push_back(i);
  if (compute_iss(d, ctx.sub, out) != expect)
    fail("drop_index: I_{s(j)} != I_s - {j}");
  return out;
}

TwistReport check_twist(const RootDatum& d, const KummerCtx& ctx, const SeqS& ss) {
  TwistReport rep;
  WeylElt prod = seq_product(d, ss);
  if (!is_wF_fixed(d, prod, ctx.lam))
    fail("check_twist: the class is not stable under [s]F");
  SeqDecomposition dec = decompose_sequence(d, ctx, ss);
  rep.omega = dec.omega;
  rep.omega_sigma = twist_compose(twist_of_elt(dec.omega), d.sigma());
  rep.ok = true;
  for (int i : ctx.sub.roots) {
    int img = d.root_index(rep.omega_sigma.apply_x(d.root(i)));
    if (img < 0 || !ctx.sub.contains(img)) {
      rep.ok = false;
      rep.notes.push_back("omega.sigma does not preserve R_L");
      break;
    }
    if (rep.omega_sigma.apply_y(d.coroot(i)) != d.coroot(img)) {
      rep.ok = false;
      rep.notes.push_back("omega.sigma does not preserve the coroots of R_L");
      break;
    }
  }
  if (rep.ok) {
    for (int i : ctx.sub.positive) {
      int img = d.root_index(rep.omega_sigma.apply_x(d.root(i)));
      if (!d.is_positive(img)) {
        rep.ok = false;
        rep.notes.push_back("omega.sigma does not preserve R+_L");
        break;
      }
    }
  }
  if (rep.ok && !is_fixed_twisted(d, identity_elt(d), rep.omega_sigma, ctx.lam)) {
    rep.ok = false;
    rep.notes.push_back("class not fixed under q.(omega.sigma)");
  }
  if (rep.ok) rep.notes.push_back("ok");
  return rep;
}

}  // namespace parflag
