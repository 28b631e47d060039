// Based root data over a pair of dual lattices X = Y = Z^m with the dot
// product pairing, together with a diagram automorphism and a prime power.
// The full root system is recovered from the simple roots by reflection
// closure and kept indexed: positive roots first, then their negatives.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parflag/intmat.hpp"

namespace parflag {

// A finite-order automorphism of the torus that permutes roots and coroots.
// Stored through its action on Y (cocharacters); the X action is the
// contragredient transpose(on_y_inv).
struct Twist {
  Mat on_y;
  Mat on_y_inv;

  Mat on_x() const { return mat_transpose(on_y_inv); }
  Vec apply_y(const Vec& v) const { return mat_apply(on_y, v); }
  Vec apply_x(const Vec& v) const { return mat_apply(on_x(), v); }
  bool operator==(const Twist& o) const { return on_y == o.on_y; }
  bool operator!=(const Twist& o) const { return !(*this == o); }
};

Twist twist_from_y(const Mat& on_y);
Twist twist_from_x(const Mat& on_x);
Twist twist_identity(int m);
// (a*b)(t) = a(b(t))
Twist twist_compose(const Twist& a, const Twist& b);
Twist twist_inverse(const Twist& t);

struct DatumSpec {
  std::string name;
  int rank_torus = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<int> sigma_perm;  // 1-based images of simple indices
  std::optional<Mat> sigma_matrix;  // action on X; defaults from the perm
  Int p = 0;
  Int q = 0;
  std::optional<bool> connected_centre;
};

class RootDatum {
 public:
  explicit RootDatum(const DatumSpec& spec);

  const std::string& name() const { return name_; }
  int rank() const { return m_; }
  int nsimple() const { return n_; }
  Int p() const { return p_; }
  Int q() const { return q_; }

  const Vec& simple_root(int i) const { return simple_roots_[i - 1]; }
  const Vec& simple_coroot(int i) const { return simple_coroots_[i - 1]; }
  const Mat& cartan() const { return cartan_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return npos_; }
  const Vec& root(int idx) const { return roots_[idx]; }
  const Vec& coroot(int idx) const { return coroots_[idx]; }
  bool is_positive(int idx) const { return idx < npos_; }
  int negative_of(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  // -1 when the vector is not a root.
  int root_index(const Vec& v) const;
  int simple_root_index(int i) const { return simple_idx_[i - 1]; }

  const std::vector<int>& sigma_perm() const { return sigma_perm_; }
  const Twist& sigma() const { return sigma_; }
  int sigma_on_root(int idx) const;  // index of sigma(root idx)

  std::optional<bool> connected_centre_flag() const { return connected_centre_; }
  // X / ZR torsion-free, decided by the gcd of maximal minors of the
  // simple-root matrix.
  bool centre_torsion_free() const;

 private:
  std::string name_;
  int m_ = 0, n_ = 0;
  Int p_ = 0, q_ = 0;
  std::vector<Vec> simple_roots_, simple_coroots_;
  Mat cartan_;
  std::vector<Vec> roots_, coroots_;
  std::map<Vec, int> root_lookup_;
  int npos_ = 0;
  std::vector<int> simple_idx_;
  std::vector<int> sigma_perm_;
  Twist sigma_;
  std::optional<bool> connected_centre_;
};

inline RootDatum build_root_datum(const DatumSpec& spec) { return RootDatum(spec); }

struct AutomorphismReport {
  bool ok = false;
  int order = 0;
  std::vector<std::string> messages;
};

// Confirms sigma permutes R and its coroots, preserves R+, and has finite
// order; failures name the offending root.
AutomorphismReport validate_automorphism(const RootDatum& d);

}  // namespace parflag
