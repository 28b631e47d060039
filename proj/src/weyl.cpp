#include "parflag/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parflag {

namespace {

Mat simple_mat_y(const RootDatum& d, int i) {
  // y -> y - <alpha_i, y> coroot_i
  int m = d.rank();
  Mat s = identity_mat(m);
  const Vec& alpha = d.simple_root(i);
  const Vec& cor = d.simple_coroot(i);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) s[r][c] -= cor[r] * alpha[c];
  return s;
}

int count_inversions(const RootDatum& d, const Mat& mx) {
  int inv = 0;
  for (int i = 0; i < d.num_positive(); ++i) {
    int j = d.root_index(mat_apply(mx, d.root(i)));
    if (j < 0) fail("matrix does not permute the roots");
    if (!d.is_positive(j)) ++inv;
  }
  return inv;
}

}  // namespace

WeylElt identity_elt(const RootDatum& d) {
  return WeylElt(identity_mat(d.rank()), identity_mat(d.rank()), {}, 0);
}

WeylElt simple_reflection(const RootDatum& d, int i) {
  if (i < 1 || i > d.nsimple()) fail("simple index out of range: " + std::to_string(i));
  Mat s = simple_mat_y(d, i);
  return WeylElt(s, s, {i}, 1);
}

WeylElt reflection_in_root(const RootDatum& d, int root_idx) {
  int m = d.rank();
  Mat s = identity_mat(m);
  const Vec& alpha = d.root(root_idx);
  const Vec& cor = d.coroot(root_idx);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) s[r][c] -= cor[r] * alpha[c];
  return elt_from_mat_y(d, s);
}

Vec act_on_root(const WeylElt& w, const Vec& alpha) {
  // X-action is the contragredient of the Y-action.
  return mat_apply(mat_transpose(w.mat_y_inv()), alpha);
}

int act_on_root_index(const RootDatum& d, const WeylElt& w, int idx) {
  int j = d.root_index(act_on_root(w, d.root(idx)));
  if (j < 0) fail("Weyl element does not permute the roots");
  return j;
}

WeylElt from_word(const RootDatum& d, const std::vector<int>& word) {
  Mat my = identity_mat(d.rank());
  Mat myinv = my;
  for (int i : word) {
    if (i < 1 || i > d.nsimple()) fail("word index out of range: " + std::to_string(i));
    Mat s = simple_mat_y(d, i);
    my = mat_mul(my, s);
    myinv = mat_mul(s, myinv);
  }
  int len = count_inversions(d, mat_transpose(myinv));
  return WeylElt(std::move(my), std::move(myinv), word, len);
}

WeylElt elt_from_mat_y(const RootDatum& d, const Mat& my) {
  Mat myinv;
  if (!mat_inverse_int(my, myinv)) fail("element matrix not invertible over Z");
  Mat mx = mat_transpose(myinv);
  // check the coroot set is permuted
  std::set<Vec> corset;
  for (int i = 0; i < d.num_roots(); ++i) corset.insert(d.coroot(i));
  for (int i = 0; i < d.num_roots(); ++i)
    if (!corset.count(mat_apply(my, d.coroot(i)))) fail("matrix does not permute the coroots");
  int len = count_inversions(d, mx);
  WeylElt w(my, myinv, {}, len);
  std::vector<int> word = reduced_word(d, w);
  return WeylElt(my, myinv, std::move(word), len);
}

WeylElt mul(const RootDatum& d, const WeylElt& a, const WeylElt& b) {
  Mat my = mat_mul(a.mat_y(), b.mat_y());
  Mat myinv = mat_mul(b.mat_y_inv(), a.mat_y_inv());
  std::vector<int> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  int len = count_inversions(d, mat_transpose(myinv));
  return WeylElt(std::move(my), std::move(myinv), std::move(word), len);
}

WeylElt inverse(const WeylElt& w) {
  std::vector<int> word(w.word().rbegin(), w.word().rend());
  return WeylElt(w.mat_y_inv(), w.mat_y(), std::move(word), w.length());
}

bool left_descent(const RootDatum& d, int i, const WeylElt& w) {
  // l(s_i w) < l(w)  iff  w^{-1}(alpha_i) < 0
  Vec v = mat_apply(mat_transpose(w.mat_y()), d.simple_root(i));
  int j = d.root_index(v);
  if (j < 0) fail("element does not permute roots");
  return !d.is_positive(j);
}

bool right_descent(const RootDatum& d, const WeylElt& w, int i) {
  int j = act_on_root_index(d, w, d.simple_root_index(i));
  return !d.is_positive(j);
}

std::vector<int> reduced_word(const RootDatum& d, const WeylElt& w) {
  std::vector<int> out;
  WeylElt u = w;
  while (u.length() > 0) {
    int pick = -1;
    for (int i = 1; i <= d.nsimple(); ++i)
      if (left_descent(d, i, u)) { pick = i; break; }
    if (pick < 0) fail("no left descent on a non-identity element");
    out.push_back(pick);
    u = mul(d, simple_reflection(d, pick), u);
  }
  return out;
}

std::vector<std::vector<int>> all_reduced_words(const RootDatum& d, const WeylElt& w) {
  if (w.length() == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= d.nsimple(); ++i) {
    if (!left_descent(d, i, w)) continue;
    for (auto rest : all_reduced_words(d, mul(d, simple_reflection(d, i), w))) {
      rest.insert(rest.begin(), i);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::vector<WeylElt> group_enumerate(const RootDatum& d, std::size_t cap) {
  std::map<Mat, WeylElt> seen;
  WeylElt id = identity_elt(d);
  seen.emplace(id.mat_y(), id);
  std::vector<WeylElt> frontier{id}, out{id};
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= d.nsimple(); ++i) {
        WeylElt v = mul(d, simple_reflection(d, i), w);
        if (v.length() != w.length() + 1) continue;
        if (seen.count(v.mat_y())) continue;
        seen.emplace(v.mat_y(), v);
        if (seen.size() > cap) fail("group enumeration cap exceeded");
        next.push_back(v);
        out.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.mat_y() < b.mat_y();
  });
  return out;
}

WeylElt longest_element(const RootDatum& d) {
  WeylElt w = identity_elt(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= d.nsimple(); ++i) {
      if (!right_descent(d, w, i)) {
        w = mul(d, w, simple_reflection(d, i));
        grew = true;
        break;
      }
    }
  }
  return w;
}

bool in_jw(const RootDatum& d, const Subset& J, const WeylElt& w) {
  for (int i : J)
    if (left_descent(d, i, w)) return false;
  return true;
}

bool in_wj(const RootDatum& d, const WeylElt& w, const Subset& Jp) {
  for (int i : Jp)
    if (right_descent(d, w, i)) return false;
  return true;
}

CosetMinima coset_minima(const RootDatum& d, const Subset& J, const Subset& Jp, std::size_t cap) {
  CosetMinima out;
  for (const auto& w : group_enumerate(d, cap)) {
    bool l = in_jw(d, J, w);
    bool r = in_wj(d, w, Jp);
    if (l) out.jw.push_back(w);
    if (r) out.wj.push_back(w);
    if (l && r) out.jwj.push_back(w);
  }
  return out;
}

WeylElt double_coset_min(const RootDatum& d, const Subset& J, const WeylElt& w, const Subset& K) {
  WeylElt u = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      if (left_descent(d, i, u)) {
        u = mul(d, simple_reflection(d, i), u);
        moved = true;
      }
    }
    for (int i : K) {
      if (right_descent(d, u, i)) {
        u = mul(d, u, simple_reflection(d, i));
        moved = true;
      }
    }
  }
  return u;
}

bool bruhat_leq(const RootDatum& d, const WeylElt& x, const WeylElt& y) {
  if (x.length() > y.length()) return false;
  if (x.length() == 0) return true;
  if (y.length() == 0) return false;
  int s = -1;
  for (int i = 1; i <= d.nsimple(); ++i)
    if (left_descent(d, i, y)) { s = i; break; }
  WeylElt sy = mul(d, simple_reflection(d, s), y);
  if (left_descent(d, s, x)) return bruhat_leq(d, mul(d, simple_reflection(d, s), x), sy);
  return bruhat_leq(d, x, sy);
}

Subset cross_type(const RootDatum& d, const Subset& J, const Subset& Jp, const WeylElt& u) {
  if (!in_jw(d, J, u) || !in_wj(d, u, Jp))
    fail("cross_type: u is not a minimal double-coset representative");
  Subset out;
  for (int j : Jp) {
    int img = act_on_root_index(d, u, d.simple_root_index(j));
    for (int i : J)
      if (img == d.simple_root_index(i)) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElt twist_elt(const RootDatum& d, const Twist& t, const WeylElt& w) {
  Mat my = mat_mul(t.on_y, mat_mul(w.mat_y(), t.on_y_inv));
  Mat myinv = mat_mul(t.on_y, mat_mul(w.mat_y_inv(), t.on_y_inv));
  int len = count_inversions(d, mat_transpose(myinv));
  return WeylElt(std::move(my), std::move(myinv), {}, len);
}

Twist twist_of_elt(const WeylElt& w) { return Twist{w.mat_y(), w.mat_y_inv()}; }

Subset apply_perm(const std::vector<int>& perm, const Subset& J) {
  Subset out;
  for (int i : J) out.push_back(perm[i - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_contains(const Subset& J, int i) {
  return std::binary_search(J.begin(), J.end(), i);
}

Subset subset_intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace parflag
