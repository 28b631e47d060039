#include "parflag/pieces.hpp"

#include <algorithm>
#include <set>

namespace parflag {

namespace {

// J cap w sigma(J) w^{-1} for the chain recurrence.
Subset next_subset(const RootDatum& d, const Subset& J, const WeylElt& w) {
  return cross_type(d, J, apply_perm(d.sigma_perm(), J), w);
}

bool in_wjw(const RootDatum& d, const Subset& J, const WeylElt& a, const WeylElt& w,
            const Subset& K) {
  // membership of a in W_J w W_K, tested via the double-coset minimum
  return double_coset_min(d, J, a, K) == double_coset_min(d, J, w, K);
}

}  // namespace

void validate_paratype(const RootDatum& d, const ParaType& t) {
  if (t.chain.empty()) fail("paratype: empty chain");
  if (t.chain.front().first != t.J) fail("paratype: J_0 != J");
  if (t.stabilization() > d.nsimple() + 1) fail("paratype: stabilization too late");
  for (std::size_t n = 0; n < t.chain.size(); ++n) {
    const auto& [Jn, wn] = t.chain[n];
    Subset sJn = apply_perm(d.sigma_perm(), Jn);
    if (!in_jw(d, Jn, wn) || !in_wj(d, wn, sJn))
      fail("paratype: w_n not a minimal double coset representative");
    if (n > 0) {
      const auto& [Jp, wp] = t.chain[n - 1];
      if (Jn != next_subset(d, Jp, wp)) fail("paratype: subset recurrence fails");
      if (!in_wjw(d, Jn, wn, wp, apply_perm(d.sigma_perm(), Jp)))
        fail("paratype: w_n outside W_{J_n} w_{n-1} W_{sigma(J_{n-1})}");
    }
  }
  // stabilized: the next pair equals the last pair
  const auto& [Jn, wn] = t.chain.back();
  if (next_subset(d, Jn, wn) != Jn) fail("paratype: chain not stabilized");
  if (!in_jw(d, t.J, t.w_inf())) fail("paratype: w_inf not in {}^J W");
}

ParaType tt_from_z(const RootDatum& d, const Subset& J, const WeylElt& z) {
  if (!in_jw(d, J, z)) fail("tt_from_z: z is not a minimal coset representative for J");
  ParaType t;
  t.J = J;
  Subset Jn = J;
  for (int n = 0;; ++n) {
    if (n > d.nsimple() + 1) fail("tt_from_z: no stabilization (internal error)");
    WeylElt wn = double_coset_min(d, J, z, apply_perm(d.sigma_perm(), Jn));
    if (!t.chain.empty() && t.chain.back().first == Jn && t.chain.back().second == wn) break;
    t.chain.emplace_back(Jn, wn);
    Jn = next_subset(d, Jn, wn);
  }
  validate_paratype(d, t);
  if (t.w_inf() != z) fail("tt_from_z: w_inf differs from z");
  return t;
}

std::vector<ParaType> enumerate_tt(const RootDatum& d, const Subset& J, std::size_t cap) {
  std::vector<ParaType> out;
  CosetMinima start = coset_minima(d, J, apply_perm(d.sigma_perm(), J), cap);
  // stack of partial chains
  std::vector<ParaType> work;
  for (const auto& w0 : start.jwj) {
    ParaType t;
    t.J = J;
    t.chain.emplace_back(J, w0);
    work.push_back(std::move(t));
  }
  while (!work.empty()) {
    ParaType t = std::move(work.back());
    work.pop_back();
    const auto& [Jn, wn] = t.chain.back();
    Subset Jnext = next_subset(d, Jn, wn);
    if (Jnext == Jn) {
      // forced constant tail
      validate_paratype(d, t);
      out.push_back(std::move(t));
      continue;
    }
    Subset sJn = apply_perm(d.sigma_perm(), Jn);
    CosetMinima cm = coset_minima(d, Jnext, apply_perm(d.sigma_perm(), Jnext), cap);
    for (const auto& w : cm.jwj) {
      if (!in_wjw(d, Jnext, w, wn, sJn)) continue;
      ParaType ext = t;
      ext.chain.emplace_back(Jnext, w);
      work.push_back(std::move(ext));
    }
  }
  std::sort(out.begin(), out.end(), [](const ParaType& a, const ParaType& b) {
    if (a.w_inf().length() != b.w_inf().length())
      return a.w_inf().length() < b.w_inf().length();
    return a.w_inf().mat_y() < b.w_inf().mat_y();
  });
  return out;
}

ParaType shift_tt(const RootDatum& d, const ParaType& t, std::optional<int> m) {
  ParaType out;
  if (!m) {
    out.J = t.j_inf();
    out.chain.emplace_back(t.j_inf(), t.w_inf());
  } else {
    if (*m < 0) fail("shift_tt: negative shift");
    int start = std::min<int>(*m, t.stabilization());
    out.J = t.chain[start].first;
    for (std::size_t n = start; n < t.chain.size(); ++n) out.chain.push_back(t.chain[n]);
  }
  validate_paratype(d, out);
  return out;
}

// R_K as root indices: the W_K-orbit of the simple roots in K.
static std::set<int> parabolic_roots(const RootDatum& d, const Subset& K) {
  std::set<int> rk;
  std::vector<int> queue;
  std::vector<WeylElt> refl;
  for (int i : K) {
    rk.insert(d.simple_root_index(i));
    queue.push_back(d.simple_root_index(i));
    refl.push_back(simple_reflection(d, i));
  }
  while (!queue.empty()) {
    int r = queue.back();
    queue.pop_back();
    rk.insert(d.negative_of(r));
    for (const auto& s : refl) {
      int img = act_on_root_index(d, s, r);
      if (rk.insert(img).second) queue.push_back(img);
    }
  }
  return rk;
}

int piece_dim(const RootDatum& d, const ParaType& t) {
  std::set<int> rk = parabolic_roots(d, t.j_inf());
  const WeylElt& w = t.w_inf();
  int dim = 0;
  for (int i = 0; i < d.num_positive(); ++i) {
    if (rk.count(i)) continue;
    int img = act_on_root_index(d, w, d.sigma_on_root(i));
    if (!d.is_positive(img) || rk.count(img)) ++dim;
  }
  return dim;
}

}  // namespace parflag
