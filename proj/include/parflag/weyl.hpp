// Weyl group elements and combinatorics: words, lengths, Bruhat order,
// coset and double-coset minima.  Elements are identified by their matrix
// action on the cocharacter lattice; words are certificates only.

#pragma once

#include <cstddef>
#include <vector>

#include "parflag/rootdatum.hpp"

namespace parflag {

// Subsets of the simple indices, sorted ascending, 1-based.
using Subset = std::vector<int>;

class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(Mat my, Mat myinv, std::vector<int> word, int len)
      : my_(std::move(my)), myinv_(std::move(myinv)), word_(std::move(word)), len_(len) {}

  const Mat& mat_y() const { return my_; }
  const Mat& mat_y_inv() const { return myinv_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  bool operator==(const WeylElt& o) const { return my_ == o.my_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  bool operator<(const WeylElt& o) const { return my_ < o.my_; }

 private:
  Mat my_, myinv_;
  std::vector<int> word_;
  int len_ = 0;
};

WeylElt identity_elt(const RootDatum& d);
WeylElt simple_reflection(const RootDatum& d, int i);          // 1-based
WeylElt reflection_in_root(const RootDatum& d, int root_idx);  // s_beta
WeylElt from_word(const RootDatum& d, const std::vector<int>& word);
// Validates that the matrix permutes the coroot set; derives a word.
WeylElt elt_from_mat_y(const RootDatum& d, const Mat& my);

WeylElt mul(const RootDatum& d, const WeylElt& a, const WeylElt& b);
WeylElt inverse(const WeylElt& w);

// X-action on root vectors / indexed roots.
Vec act_on_root(const WeylElt& w, const Vec& alpha);
int act_on_root_index(const RootDatum& d, const WeylElt& w, int idx);

// Canonical reduced word by repeatedly stripping the smallest left descent.
std::vector<int> reduced_word(const RootDatum& d, const WeylElt& w);
// All reduced words (exponential; used on tiny groups only).
std::vector<std::vector<int>> all_reduced_words(const RootDatum& d, const WeylElt& w);

bool left_descent(const RootDatum& d, int i, const WeylElt& w);   // l(s_i w) < l(w)
bool right_descent(const RootDatum& d, const WeylElt& w, int i);  // l(w s_i) < l(w)

std::vector<WeylElt> group_enumerate(const RootDatum& d, std::size_t cap = 100000);
WeylElt longest_element(const RootDatum& d);

struct CosetMinima {
  std::vector<WeylElt> jw;   // {}^J W
  std::vector<WeylElt> wj;   // W^{J'}
  std::vector<WeylElt> jwj;  // {}^J W^{J'}
};
CosetMinima coset_minima(const RootDatum& d, const Subset& J, const Subset& Jp,
                         std::size_t cap = 100000);

// Unique minimal-length element of W_J w W_K.
WeylElt double_coset_min(const RootDatum& d, const Subset& J, const WeylElt& w, const Subset& K);

bool bruhat_leq(const RootDatum& d, const WeylElt& x, const WeylElt& y);

// J cap u J' u^{-1}, as simple indices; requires u in {}^J W^{J'}.
Subset cross_type(const RootDatum& d, const Subset& J, const Subset& Jp, const WeylElt& u);

bool in_jw(const RootDatum& d, const Subset& J, const WeylElt& w);
bool in_wj(const RootDatum& d, const WeylElt& w, const Subset& Jp);

WeylElt twist_elt(const RootDatum& d, const Twist& t, const WeylElt& w);
Twist twist_of_elt(const WeylElt& w);

Subset apply_perm(const std::vector<int>& perm, const Subset& J);
bool subset_contains(const Subset& J, int i);
Subset subset_intersect(const Subset& a, const Subset& b);

}  // namespace parflag
