#include "parflag/kummer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parflag {

KummerClass::KummerClass(const RootDatum& d, std::vector<Rat> lambda) {
  if (static_cast<int>(lambda.size()) != d.rank()) fail("lambda has wrong rank");
  for (auto& x : lambda) {
    x = mod1(x);
    if (std::gcd(x.denominator(), d.p()) != 1)
      fail("lambda denominator " + std::to_string(x.denominator()) +
           " is not coprime to p=" + std::to_string(d.p()));
  }
  lam_ = std::move(lambda);
}

KummerClass KummerClass::zero(const RootDatum& d) {
  return KummerClass(d, std::vector<Rat>(d.rank(), Rat(0)));
}

Rat KummerClass::eval(const Vec& y) const {
  Rat s(0);
  if (y.size() != lam_.size()) fail("eval: rank mismatch");
  for (std::size_t k = 0; k < y.size(); ++k) s += lam_[k] * Rat(y[k]);
  return mod1(s);
}

bool KummerClass::is_zero() const {
  for (const auto& x : lam_)
    if (x != Rat(0)) return false;
  return true;
}

KummerClass pullback(const RootDatum& d, const WeylElt& w, const KummerClass& L) {
  std::vector<Rat> out(d.rank());
  for (int k = 0; k < d.rank(); ++k) {
    Vec col(d.rank());
    for (int r = 0; r < d.rank(); ++r) col[r] = w.mat_y()[r][k];
    out[k] = L.eval(col);
  }
  return KummerClass(d, std::move(out));
}

KummerClass pullback_twist(const RootDatum& d, const Twist& t, const KummerClass& L) {
  std::vector<Rat> out(d.rank());
  for (int k = 0; k < d.rank(); ++k) {
    Vec col(d.rank());
    for (int r = 0; r < d.rank(); ++r) col[r] = t.on_y[r][k];
    out[k] = L.eval(col);
  }
  return KummerClass(d, std::move(out));
}

KummerClass dual_class(const RootDatum& d, const KummerClass& L) {
  std::vector<Rat> out;
  for (const auto& x : L.coords()) out.push_back(mod1(-x));
  return KummerClass(d, std::move(out));
}

bool SubSystem::contains(int root_idx) const {
  return std::binary_search(roots.begin(), roots.end(), root_idx);
}

bool SubSystem::full(const RootDatum& d) const {
  return static_cast<int>(roots.size()) == d.num_roots();
}

SubSystem subsystem(const RootDatum& d, const KummerClass& L) {
  SubSystem s;
  for (int i = 0; i < d.num_roots(); ++i)
    if (L.eval(d.coroot(i)) == Rat(0)) s.roots.push_back(i);
  for (int i : s.roots)
    if (d.is_positive(i)) s.positive.push_back(i);
  // simple = indecomposable elements of R+_L
  for (int i : s.positive) {
    bool decomposable = false;
    for (int j : s.positive) {
      if (j == i) continue;
      Vec diff = d.root(i);
      for (int k = 0; k < d.rank(); ++k) diff[k] -= d.root(j)[k];
      int r = d.root_index(diff);
      if (r >= 0 && d.is_positive(r) && s.contains(r)) { decomposable = true; break; }
    }
    if (!decomposable) s.simple.push_back(i);
  }
  for (int i : s.simple) s.simple_refl.push_back(reflection_in_root(d, i));
  return s;
}

KummerCtx make_ctx(const RootDatum& d, KummerClass L) {
  SubSystem s = subsystem(d, L);
  return KummerCtx{std::move(L), std::move(s)};
}

bool is_fixed_twisted(const RootDatum& d, const WeylElt& w, const Twist& c, const KummerClass& L) {
  Mat wc = mat_mul(w.mat_y(), c.on_y);
  for (int k = 0; k < d.rank(); ++k) {
    Vec col(d.rank());
    for (int r = 0; r < d.rank(); ++r) col[r] = wc[r][k];
    if (mod1(Rat(d.q()) * L.eval(col)) != L.coords()[k]) return false;
  }
  return true;
}

bool is_wF_fixed(const RootDatum& d, const WeylElt& w, const KummerClass& L) {
  return is_fixed_twisted(d, w, d.sigma(), L);
}

int ltilde(const RootDatum& d, const SubSystem& sub, const WeylElt& w) {
  int n = 0;
  for (int i : sub.positive)
    if (!d.is_positive(act_on_root_index(d, w, i))) ++n;
  return n;
}

bool in_wl(const RootDatum& d, const SubSystem& sub, const WeylElt& w) {
  WeylElt u = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k < sub.simple.size(); ++k) {
      if (!d.is_positive(act_on_root_index(d, u, sub.simple[k]))) {
        u = mul(d, u, sub.simple_refl[k]);
        moved = true;
      }
    }
  }
  return u.is_identity();
}

std::vector<WeylElt> wl_enumerate(const RootDatum& d, const SubSystem& sub, std::size_t cap) {
  std::map<Mat, WeylElt> seen;
  WeylElt id = identity_elt(d);
  seen.emplace(id.mat_y(), id);
  std::vector<WeylElt> frontier{id}, out{id};
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier)
      for (const auto& s : sub.simple_refl) {
        WeylElt v = mul(d, s, w);
        if (seen.count(v.mat_y())) continue;
        seen.emplace(v.mat_y(), v);
        if (seen.size() > cap) fail("W_L enumeration cap exceeded");
        next.push_back(v);
        out.push_back(v);
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.mat_y() < b.mat_y();
  });
  return out;
}

WprimeFactorization wprime_decompose(const RootDatum& d, const KummerCtx& ctx, const WeylElt& w) {
  WprimeFactorization out;
  if (pullback(d, w, ctx.lam) != ctx.lam) return out;
  out.in_wprime = true;
  // strip II_L left descents: w = s_{pi_1} ... s_{pi_t} . f
  WeylElt u = w;
  WeylElt a = identity_elt(d);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k < ctx.sub.simple.size(); ++k) {
      // u^{-1}(pi) negative?
      int img = act_on_root_index(d, inverse(u), ctx.sub.simple[k]);
      if (!d.is_positive(img)) {
        a = mul(d, a, ctx.sub.simple_refl[k]);
        u = mul(d, ctx.sub.simple_refl[k], u);
        moved = true;
        break;
      }
    }
  }
  // u now preserves R+_L
  for (int i : ctx.sub.positive)
    if (!d.is_positive(act_on_root_index(d, u, i)))
      fail("wprime_decompose: residual factor does not preserve R+_L");
  out.a = a;
  out.f = u;
  if (mul(d, a, u) != w) fail("wprime_decompose: factorization does not multiply back");
  return out;
}

std::vector<WeylElt> wprime_enumerate(const RootDatum& d, const KummerClass& L, std::size_t cap) {
  std::vector<WeylElt> out;
  for (const auto& w : group_enumerate(d, cap))
    if (pullback(d, w, L) == L) out.push_back(w);
  return out;
}

std::vector<WeylElt> wprime0_enumerate(const RootDatum& d, const KummerCtx& ctx, std::size_t cap) {
  std::vector<WeylElt> out;
  for (const auto& w : wprime_enumerate(d, ctx.lam, cap)) {
    bool pres = true;
    for (int i : ctx.sub.positive)
      if (!d.is_positive(act_on_root_index(d, w, i))) { pres = false; break; }
    if (pres) out.push_back(w);
  }
  return out;
}

Int torus_fixed_order(const RootDatum& d, const WeylElt& w) {
  Mat m = mat_mul(w.mat_y(), d.sigma().on_y);
  for (auto& row : m)
    for (auto& x : row) x *= d.q();
  for (int i = 0; i < d.rank(); ++i) m[i][i] -= 1;
  Int det = mat_det(m);
  return det < 0 ? -det : det;
}

}  // namespace parflag
