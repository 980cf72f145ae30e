#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "heisverma/param_scalar.hpp"
#include "heisverma/rational.hpp"

namespace heisverma {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix zero_matrix(std::size_t dim);

enum class LieKind { f, g, c, d, e, a, h1, h2, hmat };

/// Named basis vector of sl(n+2). In (n+2)x(n+2) matrices with rows and
/// columns indexed 0..n+1: f_i = E_{i,0}, g_i = E_{n+1,i}, c = E_{n+1,0},
/// d_i = E_{0,i}, e_i = E_{i,n+1}, a = E_{0,n+1}, h_1 = diag(1,0,..,0,-1),
/// h_2 = diag(1,-2/n,..,-2/n,1) and h_M = 0 + M + 0 for traceless n x n M.
struct LieBasisElement {
  LieKind kind = LieKind::c;
  unsigned i = 0;  // 1-based index for f, g, d, e
  RatMatrix m;     // n x n traceless block for hmat

  static LieBasisElement F(unsigned i) { return {LieKind::f, i, {}}; }
  static LieBasisElement G(unsigned i) { return {LieKind::g, i, {}}; }
  static LieBasisElement C() { return {LieKind::c, 0, {}}; }
  static LieBasisElement D(unsigned i) { return {LieKind::d, i, {}}; }
  static LieBasisElement E(unsigned i) { return {LieKind::e, i, {}}; }
  static LieBasisElement A() { return {LieKind::a, 0, {}}; }
  static LieBasisElement H1() { return {LieKind::h1, 0, {}}; }
  static LieBasisElement H2() { return {LieKind::h2, 0, {}}; }
  /// Throws std::invalid_argument unless m is square with zero trace.
  static LieBasisElement HMat(RatMatrix m);
  /// h of the elementary matrix E_{ij} (i != j), 1-based.
  static LieBasisElement HElem(unsigned n, unsigned i, unsigned j);
  /// h of E_{jj} - E_{j+1,j+1}, 1-based.
  static LieBasisElement HDiff(unsigned n, unsigned j);

  /// Short name: "f1", "c", "h1", "hE12", "hD1" or "hM" for a general block.
  std::string name() const;
  /// Grade in the |2|-grading: -2 (c), -1 (f, g), 0 (h), 1 (d, e), 2 (a).
  int grade() const;

  friend bool operator==(const LieBasisElement&, const LieBasisElement&) = default;
};

/// Element of sl(n+2) held as its matrix.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(unsigned n) : n_(n), mat_(zero_matrix(n + 2)) {}
  LieElement(unsigned n, const LieBasisElement& b);
  /// Throws std::invalid_argument if the matrix is not traceless of size n+2.
  LieElement(unsigned n, RatMatrix mat);

  unsigned n() const { return n_; }
  const RatMatrix& matrix() const { return mat_; }
  bool is_zero() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.n_ == b.n_ && a.mat_ == b.mat_; }

  /// Coordinates in canonical_basis(n): one entry per basis vector, same order.
  std::vector<Rational> coordinates() const;
  /// Non-zero (basis element, coefficient) pairs in canonical order.
  std::vector<std::pair<LieBasisElement, Rational>> decompose() const;

  /// Projections onto ū (grades -2, -1), l (grade 0) and u (grades 1, 2).
  LieElement part_nbar() const;
  LieElement part_levi() const;
  LieElement part_nil() const;
  /// Projection onto p = l + u.
  LieElement part_parabolic() const;

  std::string str() const;

 private:
  unsigned n_ = 0;
  RatMatrix mat_;
};

std::ostream& operator<<(std::ostream& os, const LieElement& x);

/// Block index of a matrix row/column: 0 for the first, 1 for the middle, 2 for the last.
int block_of(unsigned n, unsigned idx);

/// Canonical basis of sl(n+2): f_1..f_n, g_1..g_n, c, d_1..d_n, e_1..e_n, a,
/// h_1, h_2, hE_ij (i != j, row-major), hD_j (j = 1..n-1).
const std::vector<LieBasisElement>& canonical_basis(unsigned n);
/// Position of a non-hmat basis element or of hE/hD elements in canonical_basis(n).
std::size_t canonical_index(unsigned n, const LieBasisElement& b);
/// The ū letters f_1..f_n, g_1..g_n, c.
std::vector<LieBasisElement> nbar_basis(unsigned n);

LieElement bracket(const LieElement& x, const LieElement& y);

/// Image of an element of sl(n-r+2) under the block embedding into sl(n+2):
/// indices 0..n-r are kept, the last index goes to n+1, the remaining r
/// middle rows and columns are zero.
LieElement embed_sub(unsigned n, unsigned r, const LieElement& x);

/// The two central elements (h'_1, h'_2) of the Levi factor of the subalgebra.
std::pair<LieElement, LieElement> center_basis(unsigned n, unsigned r);

/// {d_i, e_i : i <= n-r} together with a.
std::vector<LieBasisElement> nilradical_basis(unsigned n, unsigned r);

/// Scalar character lambda1*w1 + lambda2*w_{n+1} of the Levi factor, where
/// w1(X) = X_{00} and w_{n+1}(X) = -X_{n+1,n+1}.
struct Character {
  unsigned n = 1;
  ParamScalar l1;
  ParamScalar l2;

  static Character generic(unsigned n) { return {n, ParamScalar::lambda1(), ParamScalar::lambda2()}; }
  static Character rho(unsigned n);
  bool is_numeric() const { return l1.is_constant() && l2.is_constant(); }

  /// Value on the diagonal (Cartan) part of X; off-diagonal entries are ignored.
  ParamScalar pairing(const LieElement& x) const;

  friend Character operator+(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;
};

}  // namespace heisverma
