#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "heisverma/lie.hpp"
#include "heisverma/param_scalar.hpp"
#include "heisverma/weyl.hpp"

namespace heisverma {

/// Element of U(ū) ⊗ v, written in the PBW basis f^alpha g^beta c^gamma v
/// (all f's, then all g's, then c). Words use the slot layout of VarSet:
/// f_i -> i-1, g_i -> n+i-1, c -> 2n.
class PbwVector {
 public:
  using Word = Exponent;
  using TermMap = std::map<Word, ParamScalar, GrlexLess>;

  PbwVector() = default;
  explicit PbwVector(unsigned n) : n_(n) {}

  /// The highest-weight vector v itself.
  static PbwVector vacuum(unsigned n);
  static PbwVector word(unsigned n, const Word& w, const ParamScalar& c);
  /// A single letter of ū (f_i, g_i or c) applied to v.
  static PbwVector letter(unsigned n, const LieBasisElement& x);

  unsigned n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const ParamScalar& c);
  ParamScalar coeff(const Word& w) const;
  /// Largest word length.
  int degree() const;

  PbwVector& operator+=(const PbwVector& o);
  PbwVector& operator-=(const PbwVector& o);
  PbwVector& operator*=(const ParamScalar& c);
  friend PbwVector operator+(PbwVector a, const PbwVector& b) { return a += b; }
  friend PbwVector operator-(PbwVector a, const PbwVector& b) { return a -= b; }
  friend PbwVector operator*(PbwVector a, const ParamScalar& c) { return a *= c; }
  friend PbwVector operator*(const ParamScalar& c, PbwVector a) { return a *= c; }
  friend bool operator==(const PbwVector& a, const PbwVector& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// x * this for a letter x of ū, re-straightened into PBW order.
  PbwVector left_mul(const LieBasisElement& x) const;
  /// The product a * b in U(ū), reading b as an element of U(ū).
  friend PbwVector operator*(const PbwVector& a, const PbwVector& b);

  PbwVector evaluate(const Rational& l1, const Rational& l2) const;

  /// Rendering such as "f1^2 g3 c^2 . v - 1/2 c . v".
  std::string str() const;

 private:
  unsigned n_ = 0;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const PbwVector& v);

/// Symmetrization of the multiset f^alpha g^beta c^gamma: the average over all
/// orderings, straightened into PBW order.
PbwVector symmetrize(unsigned n, const PbwVector::Word& multiset);

/// Literal average over all distinct orderings of the multiset. Exponential
/// cost; intended as a cross-check of symmetrize.
PbwVector symmetrize_by_permutations(unsigned n, const PbwVector::Word& multiset);

}  // namespace heisverma
