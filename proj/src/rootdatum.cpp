#include "parflag/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "parflag/rational.hpp"

namespace parflag {

namespace {

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Solve M * alpha_i = alpha_{perm(i)} on the span of the simple roots,
// identity on standard vectors completing that span to a basis of Q^m.
Mat default_sigma_matrix(const std::vector<Vec>& roots, const std::vector<int>& perm, int m) {
  int n = static_cast<int>(roots.size());
  // Columns of B: the simple roots, then greedily chosen standard vectors
  // keeping the set independent.
  std::vector<Vec> basis = roots;
  std::vector<Vec> images;
  for (int i = 0; i < n; ++i) images.push_back(roots[perm[i] - 1]);
  auto rank_of = [&](const std::vector<Vec>& cols) {
    std::vector<std::vector<Rat>> a;
    for (const auto& c : cols) {
      std::vector<Rat> r(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) r[k] = Rat(c[k]);
      a.push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < m && rank < static_cast<int>(a.size()); ++col) {
      int piv = -1;
      for (int i = rank; i < static_cast<int>(a.size()); ++i)
        if (a[i][col] != Rat(0)) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(a[rank], a[piv]);
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (i == rank || a[i][col] == Rat(0)) continue;
        Rat f = a[i][col] / a[rank][col];
        for (int j = 0; j < m; ++j) a[i][j] -= f * a[rank][j];
      }
      ++rank;
    }
    return rank;
  };
  for (int k = 0; k < m && static_cast<int>(basis.size()) < m; ++k) {
    Vec e(m, 0);
    e[k] = 1;
    basis.push_back(e);
    if (rank_of(basis) < static_cast<int>(basis.size()))
      basis.pop_back();
    else
      images.push_back(e);
  }
  if (static_cast<int>(basis.size()) != m) fail("sigma default: simple roots do not extend to a basis");
  // M = Img * B^{-1} with columns as stated.
  Mat B(m, Vec(m)), Img(m, Vec(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      B[i][j] = basis[j][i];
      Img[i][j] = images[j][i];
    }
  std::vector<std::vector<Rat>> binv;
  if (!mat_inverse_rat(B, binv)) fail("sigma default: basis not invertible");
  Mat M(m, Vec(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rat s(0);
      for (int k = 0; k < m; ++k) s += Rat(Img[i][k]) * binv[k][j];
      if (s.denominator() != 1)
        fail("sigma default: permutation matrix is not integral; supply sigma_matrix");
      M[i][j] = s.numerator();
    }
  return M;
}

}  // namespace

Twist twist_from_y(const Mat& on_y) {
  Mat inv;
  if (!mat_inverse_int(on_y, inv)) fail("twist: matrix not invertible over Z");
  return Twist{on_y, inv};
}

Twist twist_from_x(const Mat& on_x) {
  Mat xinv;
  if (!mat_inverse_int(on_x, xinv)) fail("twist: matrix not invertible over Z");
  // on_y = contragredient of on_x
  return Twist{mat_transpose(xinv), mat_transpose(on_x)};
}

Twist twist_identity(int m) { return Twist{identity_mat(m), identity_mat(m)}; }

Twist twist_compose(const Twist& a, const Twist& b) {
  return Twist{mat_mul(a.on_y, b.on_y), mat_mul(b.on_y_inv, a.on_y_inv)};
}

Twist twist_inverse(const Twist& t) { return Twist{t.on_y_inv, t.on_y}; }

RootDatum::RootDatum(const DatumSpec& spec) {
  name_ = spec.name;
  m_ = spec.rank_torus;
  n_ = static_cast<int>(spec.simple_roots.size());
  p_ = spec.p;
  q_ = spec.q;
  connected_centre_ = spec.connected_centre;
  if (m_ <= 0) fail("rank_torus must be positive");
  if (n_ == 0) fail("no simple roots given");
  if (spec.simple_coroots.size() != static_cast<std::size_t>(n_))
    fail("simple_roots and simple_coroots differ in number");
  for (const auto& v : spec.simple_roots)
    if (static_cast<int>(v.size()) != m_) fail("simple root of wrong rank: " + vec_str(v));
  for (const auto& v : spec.simple_coroots)
    if (static_cast<int>(v.size()) != m_) fail("simple coroot of wrong rank: " + vec_str(v));
  simple_roots_ = spec.simple_roots;
  simple_coroots_ = spec.simple_coroots;

  if (p_ < 2) fail("p must be a prime >= 2");
  for (Int f = 2; f * f <= p_; ++f)
    if (p_ % f == 0) fail("p is not prime");
  Int qq = q_;
  if (qq < 2) fail("q must be a positive power of p");
  while (qq % p_ == 0) qq /= p_;
  if (qq != 1) fail("q is not a power of p");

  // cartan[i][j] = <alpha_j, coroot_i>
  cartan_.assign(n_, Vec(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) cartan_[i][j] = dot(simple_roots_[j], simple_coroots_[i]);
  for (int i = 0; i < n_; ++i) {
    if (cartan_[i][i] != 2) fail("non-crystallographic pairing: <alpha_i, coroot_i> != 2 at i=" + std::to_string(i + 1));
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) fail("non-crystallographic pairing: positive off-diagonal cartan entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        fail("non-crystallographic pairing: zero pattern not symmetric");
    }
  }

  // Reflection closure of the simple roots, coroots carried along.
  constexpr int kMaxRoots = 400;
  std::map<Vec, Vec> closure;  // root -> coroot
  std::vector<Vec> queue;
  for (int i = 0; i < n_; ++i) {
    closure[simple_roots_[i]] = simple_coroots_[i];
    queue.push_back(simple_roots_[i]);
  }
  while (!queue.empty()) {
    Vec alpha = queue.back();
    queue.pop_back();
    Vec cor = closure.at(alpha);
    for (int i = 0; i < n_; ++i) {
      Vec beta = alpha, cbeta = cor;
      Int a = dot(alpha, simple_coroots_[i]);
      Int b = dot(simple_roots_[i], cor);
      for (int k = 0; k < m_; ++k) {
        beta[k] -= a * simple_roots_[i][k];
        cbeta[k] -= b * simple_coroots_[i][k];
      }
      auto it = closure.find(beta);
      if (it == closure.end()) {
        closure[beta] = cbeta;
        queue.push_back(beta);
        if (static_cast<int>(closure.size()) > kMaxRoots)
          fail("reflection closure did not terminate (non-finite root system?)");
      } else if (it->second != cbeta) {
        fail("coroot mismatch during closure at root " + vec_str(beta));
      }
    }
  }
  for (const auto& [alpha, cor] : closure) {
    Vec neg = alpha;
    for (auto& x : neg) x = -x;
    if (!closure.count(neg)) fail("root set not closed under negation at " + vec_str(alpha));
    if (dot(alpha, cor) != 2) fail("root/coroot pairing != 2 at " + vec_str(alpha));
  }

  // Split into positive and negative roots: coordinates in the simple-root
  // basis must be all >= 0 or all <= 0, and integral.
  for (const auto& [alpha, cor] : closure) {
    (void)cor;
    // Solve via least squares on the independent simple roots: use exact
    // elimination on the m x n system.
    std::vector<std::vector<Rat>> a(m_, std::vector<Rat>(n_ + 1));
    for (int r = 0; r < m_; ++r) {
      for (int c = 0; c < n_; ++c) a[r][c] = Rat(simple_roots_[c][r]);
      a[r][n_] = Rat(alpha[r]);
    }
    int rank = 0;
    for (int col = 0; col < n_ && rank < m_; ++col) {
      int piv = -1;
      for (int r = rank; r < m_; ++r)
        if (a[r][col] != Rat(0)) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(a[rank], a[piv]);
      for (int r = 0; r < m_; ++r) {
        if (r == rank || a[r][col] == Rat(0)) continue;
        Rat f = a[r][col] / a[rank][col];
        for (int c = col; c <= n_; ++c) a[r][c] -= f * a[rank][c];
      }
      ++rank;
    }
    std::vector<Rat> coeff(n_, Rat(0));
    {
      int r = 0;
      for (int col = 0; col < n_; ++col) {
        if (r < m_ && a[r][col] != Rat(0)) {
          coeff[col] = a[r][n_] / a[r][col];
          ++r;
        }
      }
      for (; r < m_; ++r)
        if (a[r][n_] != Rat(0)) fail("root outside the span of simple roots: " + vec_str(alpha));
    }
    bool nonneg = true, nonpos = true, integral = true;
    for (const auto& c : coeff) {
      if (c.denominator() != 1) integral = false;
      if (c < Rat(0)) nonneg = false;
      if (c > Rat(0)) nonpos = false;
    }
    if (!integral || (!nonneg && !nonpos))
      fail("root is not an integral one-signed combination of simple roots: " + vec_str(alpha));
    if (nonneg) roots_.push_back(alpha);
  }
  std::sort(roots_.begin(), roots_.end());
  npos_ = static_cast<int>(roots_.size());
  for (int i = 0; i < npos_; ++i) {
    Vec neg = roots_[i];
    for (auto& x : neg) x = -x;
    roots_.push_back(neg);
  }
  coroots_.clear();
  for (const auto& r : roots_) coroots_.push_back(closure.at(r));
  for (int i = 0; i < num_roots(); ++i) root_lookup_[roots_[i]] = i;
  simple_idx_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    simple_idx_[i] = root_index(simple_roots_[i]);
    if (simple_idx_[i] < 0 || simple_idx_[i] >= npos_) fail("simple root not positive");
  }

  // Diagram automorphism.
  sigma_perm_ = spec.sigma_perm;
  if (sigma_perm_.empty()) {
    sigma_perm_.resize(n_);
    std::iota(sigma_perm_.begin(), sigma_perm_.end(), 1);
  }
  if (static_cast<int>(sigma_perm_.size()) != n_) fail("sigma_perm has wrong length");
  {
    std::set<int> seen(sigma_perm_.begin(), sigma_perm_.end());
    if (static_cast<int>(seen.size()) != n_ || *seen.begin() != 1 || *seen.rbegin() != n_)
      fail("sigma_perm is not a permutation of 1..n");
  }
  Mat sx = spec.sigma_matrix ? *spec.sigma_matrix
                             : default_sigma_matrix(simple_roots_, sigma_perm_, m_);
  if (static_cast<int>(sx.size()) != m_) fail("sigma_matrix has wrong size");
  sigma_ = twist_from_x(sx);
  for (int i = 1; i <= n_; ++i) {
    if (sigma_.apply_x(simple_root(i)) != simple_root(sigma_perm_[i - 1]))
      fail("sigma matrix does not send alpha_" + std::to_string(i) + " to alpha_" +
           std::to_string(sigma_perm_[i - 1]));
    if (sigma_.apply_y(simple_coroot(i)) != simple_coroot(sigma_perm_[i - 1]))
      fail("sigma contragredient does not permute the simple coroots");
  }
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (cartan_[sigma_perm_[i - 1] - 1][sigma_perm_[j - 1] - 1] != cartan_[i - 1][j - 1])
        fail("sigma is not a diagram symmetry (cartan not invariant)");
  {
    Mat acc = sigma_.on_y;
    int order = 1;
    while (acc != identity_mat(m_)) {
      acc = mat_mul(acc, sigma_.on_y);
      if (++order > 24) fail("sigma does not have small finite order");
    }
  }

  if (connected_centre_ && *connected_centre_ && !centre_torsion_free())
    fail("datum flagged connected_centre but X/ZR has torsion");
}

int RootDatum::root_index(const Vec& v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootDatum::sigma_on_root(int idx) const {
  int r = root_index(sigma_.apply_x(roots_[idx]));
  if (r < 0) fail("sigma image of a root is not a root");
  return r;
}

bool RootDatum::centre_torsion_free() const {
  // gcd of all n x n minors of the n x m matrix of simple roots equals 1
  // iff every invariant factor is 1.
  Int g = 0;
  // enumerate n-subsets of columns
  std::vector<int> idx(n_);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mat sub(n_, Vec(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) sub[i][j] = simple_roots_[i][idx[j]];
    g = std::gcd(g, std::abs(mat_det(sub)));
    if (g == 1) return true;
    int k = n_ - 1;
    while (k >= 0 && idx[k] == m_ - n_ + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < n_; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g == 1;
}

AutomorphismReport validate_automorphism(const RootDatum& d) {
  AutomorphismReport rep;
  rep.ok = true;
  for (int i = 0; i < d.num_roots(); ++i) {
    Vec img = d.sigma().apply_x(d.root(i));
    int j = d.root_index(img);
    if (j < 0) {
      rep.ok = false;
      rep.messages.push_back("sigma image of root " + vec_str(d.root(i)) + " is not a root");
      continue;
    }
    if (d.sigma().apply_y(d.coroot(i)) != d.coroot(j)) {
      rep.ok = false;
      rep.messages.push_back("sigma does not map the coroot of " + vec_str(d.root(i)) +
                             " to the coroot of its image");
    }
    if (d.is_positive(i) && !d.is_positive(j)) {
      rep.ok = false;
      rep.messages.push_back("sigma sends positive root " + vec_str(d.root(i)) + " to a negative root");
    }
  }
  Mat acc = d.sigma().on_y;
  int order = 1;
  while (acc != identity_mat(d.rank()) && order <= 24) {
    acc = mat_mul(acc, d.sigma().on_y);
    ++order;
  }
  rep.order = order;
  if (acc != identity_mat(d.rank())) {
    rep.ok = false;
    rep.messages.push_back("sigma order exceeds bound");
  }
  return rep;
}

}  // namespace parflag
