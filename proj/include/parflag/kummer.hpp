// Kummer classes L on the torus, modeled up to isomorphism as characters
// lambda : Y -> Q/Z, and the root subsystem they cut out: R_L, its positive
// system, simple roots, reflections, the statistic ltilde, the groups
// W'_L = W'0_L . W_L, Frobenius stability and finite-torus orders.

#pragma once

#include <vector>

#include "parflag/rational.hpp"
#include "parflag/weyl.hpp"

namespace parflag {

class KummerClass {
 public:
  KummerClass() = default;
  KummerClass(const RootDatum& d, std::vector<Rat> lambda);
  static KummerClass zero(const RootDatum& d);

  const std::vector<Rat>& coords() const { return lam_; }
  Rat eval(const Vec& y) const;  // lambda(y) mod 1
  bool is_zero() const;
  bool operator==(const KummerClass& o) const { return lam_ == o.lam_; }
  bool operator!=(const KummerClass& o) const { return !(*this == o); }

 private:
  std::vector<Rat> lam_;
};

// lambda . w  (precompose with the Y-action of w)
KummerClass pullback(const RootDatum& d, const WeylElt& w, const KummerClass& L);
KummerClass pullback_twist(const RootDatum& d, const Twist& t, const KummerClass& L);
// the dual class, -lambda
KummerClass dual_class(const RootDatum& d, const KummerClass& L);

struct SubSystem {
  std::vector<int> roots;             // R_L as root indices
  std::vector<int> positive;          // R+_L
  std::vector<int> simple;            // Pi_L, subset of positive
  std::vector<WeylElt> simple_refl;   // II_L, parallel to simple
  bool contains(int root_idx) const;
  bool full(const RootDatum& d) const;
  bool empty() const { return roots.empty(); }
};

SubSystem subsystem(const RootDatum& d, const KummerClass& L);

// Bundle used by everything downstream of a fixed class.
struct KummerCtx {
  KummerClass lam;
  SubSystem sub;
};
KummerCtx make_ctx(const RootDatum& d, KummerClass L);

// stability of L under w . F, F acting on cocharacters as q . sigma
bool is_wF_fixed(const RootDatum& d, const WeylElt& w, const KummerClass& L);
// same with an arbitrary twist c in place of sigma
bool is_fixed_twisted(const RootDatum& d, const WeylElt& w, const Twist& c, const KummerClass& L);

// |{alpha in R+_L : w(alpha) in R-}|
int ltilde(const RootDatum& d, const SubSystem& sub, const WeylElt& w);

// membership in W_L by ltilde-descent walking
bool in_wl(const RootDatum& d, const SubSystem& sub, const WeylElt& w);
// W_L by closure over II_L (independent route, used as cross-check)
std::vector<WeylElt> wl_enumerate(const RootDatum& d, const SubSystem& sub,
                                  std::size_t cap = 100000);

struct WprimeFactorization {
  bool in_wprime = false;
  WeylElt a;  // in W_L
  WeylElt f;  // preserves R+_L
};
// w in W'_L iff lambda.w == lambda; then w = a . f uniquely.
WprimeFactorization wprime_decompose(const RootDatum& d, const KummerCtx& ctx, const WeylElt& w);

std::vector<WeylElt> wprime_enumerate(const RootDatum& d, const KummerClass& L,
                                      std::size_t cap = 100000);
std::vector<WeylElt> wprime0_enumerate(const RootDatum& d, const KummerCtx& ctx,
                                       std::size_t cap = 100000);

// |T^{F'}| for F' = w . F, computed as |det(q . M_{w sigma} - 1)| on Y
Int torus_fixed_order(const RootDatum& d, const WeylElt& w);

}  // namespace parflag
