#include "heisverma/branching.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "heisverma/linalg.hpp"
#include "heisverma/realize.hpp"
#include "heisverma/verma.hpp"

namespace heisverma {

unsigned long multiplicity(unsigned a, unsigned b, unsigned r) {
  if (r == 0) throw std::invalid_argument("multiplicity: needs r >= 1");
  return static_cast<unsigned long>((binomial(a + r - 1, a) * binomial(b + r - 1, b)).to_long());
}

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::case1: return "Case1";
    case CaseTag::case2: return "Case2";
    case CaseTag::case3: return "Case3";
    case CaseTag::case4: return "Case4";
  }
  return "?";
}

long ComponentDescriptor::t() const {
  const long nr = long(n) - long(r);
  return (nr + 2) * (long(a0) - long(b0)) + nr * (long(c0) - long(d0));
}

std::string ComponentDescriptor::label() const {
  return "V(" + std::to_string(a0) + "," + std::to_string(b0) + "," + std::to_string(c0) + "," + std::to_string(d0) +
         ")";
}

std::optional<CaseTag> classify_case(unsigned a0, unsigned b0, unsigned c0, unsigned d0, const Rational& l1,
                                     const Rational& l2) {
  const bool first = Rational(long(a0 + c0)) == l1 + Rational(1);
  const bool second = Rational(long(b0 + d0)) == l2 + Rational(1);
  if (a0 != 0 && b0 != 0) {
    if (first && second) return CaseTag::case1;
    return std::nullopt;
  }
  if (a0 != 0) return first ? std::optional(CaseTag::case2) : std::nullopt;
  if (b0 != 0) return second ? std::optional(CaseTag::case3) : std::nullopt;
  return CaseTag::case4;
}

namespace {

void check_split(unsigned n, unsigned r) {
  if (r >= n || n - r <= 2)
    throw std::invalid_argument("n - r must exceed 2 (got n = " + std::to_string(n) + ", r = " + std::to_string(r) +
                                ")");
}

ComponentDescriptor make_component(unsigned a0, unsigned b0, unsigned c0, unsigned d0, const Rational& l1,
                                   const Rational& l2, unsigned n, unsigned r) {
  const auto tag = classify_case(a0, b0, c0, d0, l1, l2);
  if (!tag) throw std::logic_error("make_component: no case constraint holds");
  return {a0, b0, c0, d0, *tag, l1, l2, n, r};
}

void sort_components(std::vector<ComponentDescriptor>& v) {
  std::sort(v.begin(), v.end(), [](const ComponentDescriptor& x, const ComponentDescriptor& y) {
    return std::make_tuple(x.m(), x.a0, x.b0, x.c0, x.d0) < std::make_tuple(y.m(), y.a0, y.b0, y.c0, y.d0);
  });
}

}  // namespace

std::vector<ComponentDescriptor> enumerate_components(const Rational& l1, const Rational& l2, unsigned n, unsigned r,
                                                      unsigned m_max) {
  check_split(n, r);
  std::vector<ComponentDescriptor> out;
  const bool nat1 = l1.is_natural(), nat2 = l2.is_natural();
  const long L1 = nat1 ? l1.to_long() : -1, L2 = nat2 ? l2.to_long() : -1;
  const long mm = long(m_max);
  auto push = [&](long a0, long b0, long c0, long d0) {
    if (a0 + b0 + c0 + d0 <= mm) out.push_back(make_component(a0, b0, c0, d0, l1, l2, n, r));
  };

  if (r > 0) {
    for (long c0 = 0; c0 <= mm; ++c0)
      for (long d0 = 0; c0 + d0 <= mm; ++d0) push(0, 0, c0, d0);
    if (nat1)
      for (long c0 = 0; c0 <= L1; ++c0)
        for (long d0 = 0; L1 + 1 + d0 <= mm; ++d0) push(L1 + 1 - c0, 0, c0, d0);
    if (nat2)
      for (long d0 = 0; d0 <= L2; ++d0)
        for (long c0 = 0; L2 + 1 + c0 <= mm; ++c0) push(0, L2 + 1 - d0, c0, d0);
    if (nat1 && nat2)
      for (long c0 = 0; c0 <= L1; ++c0)
        for (long d0 = 0; d0 <= L2; ++d0) push(L1 + 1 - c0, L2 + 1 - d0, c0, d0);
  } else {
    push(0, 0, 0, 0);
    if (nat1) push(L1 + 1, 0, 0, 0);
    if (nat2) push(0, L2 + 1, 0, 0);
    if (nat1 && nat2) push(L1 + 1, L2 + 1, 0, 0);
    const Rational shifted = l1 + l2 + Rational(long(n));
    if (shifted.is_natural()) {
      const long big = shifted.to_long() + 1;
      push(0, 0, big, big);
      const Rational p1 = -l2 - Rational(long(n));
      const Rational p2 = -l1 - Rational(long(n));
      if (nat1 && !nat2 && p1.is_natural() && p1.sign() > 0) push(p1.to_long(), 0, big, big);
      if (nat2 && !nat1 && p2.is_natural() && p2.sign() > 0) push(0, p2.to_long(), big, big);
    }
  }
  sort_components(out);
  return out;
}

std::vector<ComponentDescriptor> enumerate_by_cases(const Rational& l1, const Rational& l2, unsigned n, unsigned r,
                                                    unsigned m_max) {
  check_split(n, r);
  std::vector<ComponentDescriptor> out;
  for (unsigned a0 = 0; a0 <= m_max; ++a0)
    for (unsigned b0 = 0; a0 + b0 <= m_max; ++b0)
      for (unsigned c0 = 0; a0 + b0 + c0 <= m_max; ++c0)
        for (unsigned d0 = 0; a0 + b0 + c0 + d0 <= m_max; ++d0) {
          const auto tag = classify_case(a0, b0, c0, d0, l1, l2);
          if (!tag) continue;
          const ComponentDescriptor comp{a0, b0, c0, d0, *tag, l1, l2, n, r};
          if (component_dimension(comp) > 0) out.push_back(comp);
        }
  sort_components(out);
  return out;
}

std::size_t component_dimension(const ComponentDescriptor& comp) {
  const unsigned nr = comp.n - comp.r;
  const long hp = harmonic_dimension(comp.a0, comp.b0, nr).to_long();
  std::size_t total = 0;
  for (unsigned l = 0; l <= std::min(comp.c0, comp.d0); ++l) {
    long hpp;
    if (comp.r == 0) hpp = (comp.c0 == l && comp.d0 == l) ? 1 : 0;
    else hpp = harmonic_dimension(comp.c0 - l, comp.d0 - l, comp.r).to_long();
    if (hpp == 0) continue;
    const auto s = solve_S(l, comp.c0 + comp.d0, comp.l1, comp.l2, comp.n, comp.r).size();
    total += s * static_cast<std::size_t>(hp * hpp);
  }
  return total;
}

// ------------------------------------------------------------------ build_R

namespace {

// Checks that p is bihomogeneous of bidegree (a, b) in the block [lo, hi] and
// free of every other variable.
bool in_block(const PolyVector& p, unsigned lo, unsigned hi, unsigned a, unsigned b) {
  const VarSet& vs = p.varset();
  for (const auto& [e, c] : p.terms()) {
    unsigned da = 0, db = 0;
    for (unsigned i = 1; i <= vs.n; ++i) {
      const bool inside = i >= lo && i <= hi;
      if (!inside && (e[vs.x(i)] || e[vs.y(i)])) return false;
      da += e[vs.x(i)];
      db += e[vs.y(i)];
    }
    if (e[vs.z()] || da != a || db != b) return false;
  }
  return true;
}

}  // namespace

SingularVector build_R(const ComponentDescriptor& comp, const PolyVector& h1, const PolyVector& h2,
                       const RadialPoly& u, bool with_pbw) {
  const unsigned n = comp.n, r = comp.r;
  check_split(n, r);
  const auto tag = classify_case(comp.a0, comp.b0, comp.c0, comp.d0, comp.l1, comp.l2);
  if (!tag || *tag != comp.case_tag) throw std::invalid_argument("build_R: case constraints violated");
  if (u.is_zero() || h1.is_zero() || h2.is_zero()) throw std::invalid_argument("build_R: zero input");
  const VarSet vs{n, Side::dual};
  if (!(h1.varset() == vs) || !(h2.varset() == vs)) throw std::invalid_argument("build_R: wrong variable set");

  unsigned l = 0;
  {
    const auto& first = u.terms().begin()->first;
    l = first[0] + first[1];
    for (const auto& [k, c] : u.terms())
      if (k[2] != 0 || k[0] + k[1] != l || (r == 0 && k[1] != 0))
        throw std::invalid_argument("build_R: u is not a homogeneous polynomial in q', q''");
  }
  if (l > comp.c0 || l > comp.d0) throw std::invalid_argument("build_R: q-degree exceeds min(c0, d0)");
  const unsigned s = comp.c0 + comp.d0;
  const QOperator q{ParamScalar(Rational(-long(s)) + comp.l1 + comp.l2 + Rational(2)), ParamScalar(long(s) - 2 * long(l)),
                    n, r};
  if (!q.apply(u).is_zero()) throw std::invalid_argument("build_R: u is not in S");

  const unsigned split = n - r;
  if (!in_block(h1, 1, split, comp.a0, comp.b0) || !apply(box(vs, 1, split), h1).is_zero())
    throw std::invalid_argument("build_R: h' is not in H'");
  if (r == 0) {
    if (!in_block(h2, 1, n, 0, 0) || l != comp.c0 || l != comp.d0)
      throw std::invalid_argument("build_R: r = 0 needs h'' constant and c0 = d0 = l");
  } else if (!in_block(h2, split + 1, n, comp.c0 - l, comp.d0 - l) || !apply(box(vs, split + 1, n), h2).is_zero()) {
    throw std::invalid_argument("build_R: h'' is not in H''");
  }

  const TOperator T =
      TOperator::make(comp.a0 + comp.c0, comp.b0 + comp.d0, ParamScalar(comp.l1), ParamScalar(comp.l2));
  SingularVector out;
  out.polynomial = T.apply(u).materialize(vs, r) * h1 * h2;
  if (with_pbw) out.pbw = poly_to_pbw(out.polynomial);
  out.component = comp;
  out.m = comp.m();
  out.t = comp.t();
  return out;
}

std::vector<SingularVector> component_vectors(const ComponentDescriptor& comp, bool with_pbw) {
  const unsigned n = comp.n, r = comp.r, split = n - r;
  const VarSet vs{n, Side::dual};
  std::vector<SingularVector> out;
  const auto hp = harmonic_basis(vs, 1, split, comp.a0, comp.b0);
  for (unsigned l = 0; l <= std::min(comp.c0, comp.d0); ++l) {
    std::vector<PolyVector> hpp;
    if (r == 0) {
      if (comp.c0 != l || comp.d0 != l) continue;
      hpp.push_back(PolyVector::constant(vs, ParamScalar(1)));
    } else {
      hpp = harmonic_basis(vs, split + 1, n, comp.c0 - l, comp.d0 - l).basis;
    }
    if (hpp.empty()) continue;
    for (const auto& u : solve_S(l, comp.c0 + comp.d0, comp.l1, comp.l2, n, r))
      for (const auto& h1 : hp.basis)
        for (const auto& h2 : hpp) out.push_back(build_R(comp, h1, h2, u, with_pbw));
  }
  return out;
}

// ------------------------------------------------------------ recurrences

bool recurrence_check(const PolyVector& R, const Character& lambda, unsigned r) {
  if (R.is_zero()) return true;
  const VarSet vs = R.varset();
  const unsigned n = vs.n;
  if (r >= n) throw std::invalid_argument("recurrence_check: need r < n");
  const Character mu = lambda + Character::rho(n);
  const auto F = R.z_expansion();
  const long K = long(F.size());
  auto part = [&](long k) { return (k < 0 || k >= K) ? PolyVector(vs) : F[k]; };
  const WeylElement bx = box(vs);
  const WeylElement ex = euler_x(vs), ey = euler_y(vs);
  const Rational half_nm1(long(n) - 1, 2);

  for (unsigned i = 1; i <= n - r; ++i) {
    const PolyVector xi = PolyVector::variable(vs, vs.x(i));
    const PolyVector yi = PolyVector::variable(vs, vs.y(i));
    const auto dxi = [&](const PolyVector& f) { return f.derivative(vs.x(i)); };
    const auto dyi = [&](const PolyVector& f) { return f.derivative(vs.y(i)); };
    for (long k = 0; k <= K; ++k) {
      const PolyVector fk = part(k), fnext = part(k + 1), fprev = part(k - 1);
      const PolyVector box_k = apply(bx, fk), box_prev = apply(bx, fprev);
      const ParamScalar shift1 = ParamScalar(Rational(k, 2) + half_nm1) - mu.l1;
      const ParamScalar shift2 = ParamScalar(Rational(k, 2) + half_nm1) - mu.l2;
      // -(k+1) y_i R_{m-2k-2} + D_{x_i}(E_x + k/2 - mu1 + (n-1)/2) R_{m-2k}
      //   - 1/2 y_i box R_{m-2k} - 1/4 D_{x_i} box R_{m-2k+2}
      PolyVector p = yi * fnext * ParamScalar(-(k + 1)) + dxi(apply(ex, fk) + fk * shift1) -
                     yi * box_k * ParamScalar(Rational(1, 2)) - dxi(box_prev) * ParamScalar(Rational(1, 4));
      if (!p.is_zero()) return false;
      PolyVector q = xi * fnext * ParamScalar(k + 1) + dyi(apply(ey, fk) + fk * shift2) -
                     xi * box_k * ParamScalar(Rational(1, 2)) + dyi(box_prev) * ParamScalar(Rational(1, 4));
      if (!q.is_zero()) return false;
    }
  }
  return true;
}

bool is_annihilated(const PolyVector& R, const Character& lambda, unsigned r) {
  const unsigned n = lambda.n;
  if (r >= n) throw std::invalid_argument("is_annihilated: need r < n");
  if (R.is_zero()) return true;
  const Realization real = Realization::for_verma(lambda);
  for (unsigned i = 1; i <= n - r; ++i) {
    if (!apply(real.pi_hat(LieBasisElement::D(i)), R).is_zero()) return false;
    if (!apply(real.pi_hat(LieBasisElement::E(i)), R).is_zero()) return false;
  }
  return true;
}

// ------------------------------------------------------------ the oracle

namespace {

void monomials_of_degree(unsigned slots, unsigned degree, unsigned pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == slots) {
    cur[pos] = static_cast<std::uint8_t>(degree);
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (unsigned d = degree + 1; d-- > 0;) {
    cur[pos] = static_cast<std::uint8_t>(d);
    monomials_of_degree(slots, degree - d, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Exponent> weighted_monomials(const VarSet& vs, unsigned m) {
  std::vector<Exponent> out;
  for (unsigned g = 0; 2 * g <= m; ++g) {
    std::vector<Exponent> xy;
    Exponent cur(2 * vs.n, 0);
    monomials_of_degree(2 * vs.n, m - 2 * g, 0, cur, xy);
    for (auto& e : xy) {
      e.push_back(static_cast<std::uint8_t>(g));
      out.push_back(std::move(e));
    }
  }
  return out;
}

// Exact kernel of the stacked operators on the given columns.
std::vector<PolyVector> kernel_on(const VarSet& vs, const std::vector<WeylElement>& ops,
                                  const std::vector<PolyVector>& cols) {
  std::map<std::pair<std::size_t, Exponent>, std::uint32_t> row_of;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    for (std::size_t o = 0; o < ops.size(); ++o) {
      const PolyVector img = apply(ops[o], cols[c]);
      for (const auto& [e, v] : img.terms()) {
        auto [it, ins] = row_of.try_emplace({o, e}, std::uint32_t(rows.size()));
        if (ins) rows.emplace_back();
        rows[it->second].emplace_back(c, v.as_rational());
      }
    }
  std::vector<SparseVec> mat;
  mat.reserve(rows.size());
  for (auto& row : rows) mat.push_back(make_sparse(std::move(row)));
  std::vector<PolyVector> out;
  for (const auto& vec : nullspace(mat, cols.size())) {
    PolyVector p(vs);
    for (const auto& [c, v] : vec) p += cols[c] * ParamScalar(v);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PolyVector> solve_slice(const Realization& real, unsigned r, unsigned m, long t) {
  const VarSet vs = real.dual();
  std::vector<WeylElement> ops;
  for (unsigned i = 1; i <= real.n() - r; ++i) {
    ops.push_back(real.pi_hat(LieBasisElement::D(i)));
    ops.push_back(real.pi_hat(LieBasisElement::E(i)));
  }
  std::vector<PolyVector> cols;
  for (const auto& e : slice_monomials(real.n(), r, m, t)) cols.push_back(PolyVector::monomial(vs, e, ParamScalar(1)));
  return kernel_on(vs, ops, cols);
}

}  // namespace

std::vector<Exponent> slice_monomials(unsigned n, unsigned r, unsigned m, long t) {
  const VarSet vs{n, Side::dual};
  std::vector<Exponent> out;
  for (auto& e : weighted_monomials(vs, m))
    if (monomial_bidegree(vs, r, e).second == t) out.push_back(std::move(e));
  return out;
}

std::vector<long> admissible_t(unsigned n, unsigned r, unsigned m) {
  const VarSet vs{n, Side::dual};
  std::set<long> ts;
  for (const auto& e : weighted_monomials(vs, m)) ts.insert(monomial_bidegree(vs, r, e).second);
  return {ts.begin(), ts.end()};
}

std::vector<PolyVector> brute_force_solve(const Rational& l1, const Rational& l2, unsigned n, unsigned r, unsigned m,
                                          long t) {
  if (r >= n) throw std::invalid_argument("brute_force_solve: need r < n");
  const Realization real = Realization::for_verma(Character{n, ParamScalar(l1), ParamScalar(l2)});
  return solve_slice(real, r, m, t);
}

std::vector<PolyVector> highest_weight_filter(const std::vector<PolyVector>& basis, unsigned n, unsigned r) {
  if (basis.empty()) return {};
  if (r >= n) throw std::invalid_argument("highest_weight_filter: need r < n");
  // the raising operators do not depend on the character
  const Realization real(n, ParamScalar(0), ParamScalar(0));
  std::vector<WeylElement> ops;
  for (unsigned i = 1; i <= n - r; ++i)
    for (unsigned j = i + 1; j <= n - r; ++j) ops.push_back(real.pi_hat(LieBasisElement::HElem(n, i, j)));
  if (ops.empty()) return basis;
  return kernel_on(basis.front().varset(), ops, basis);
}

std::vector<long> block_weight(const VarSet& vs, unsigned r, const Exponent& e) {
  std::vector<long> w;
  for (unsigned i = 1; i + r <= vs.n; ++i) w.push_back(long(e[vs.x(i)]) - long(e[vs.y(i)]));
  return w;
}

std::size_t span_rank(const std::vector<PolyVector>& vs) {
  std::map<Exponent, std::uint32_t, GrlexLess> col_of;
  std::vector<SparseVec> rows;
  for (const auto& p : vs) {
    std::vector<std::pair<std::uint32_t, Rational>> row;
    for (const auto& [e, c] : p.terms()) {
      auto [it, ins] = col_of.try_emplace(e, std::uint32_t(col_of.size()));
      row.emplace_back(it->second, c.as_rational());
    }
    rows.push_back(make_sparse(std::move(row)));
  }
  return rank_of(rows, col_of.size());
}

std::map<std::vector<long>, std::size_t> highest_weight_counts(const std::vector<PolyVector>& basis, unsigned n,
                                                               unsigned r) {
  std::map<std::vector<long>, std::vector<PolyVector>> parts;
  for (const auto& v : highest_weight_filter(basis, n, r)) {
    std::map<std::vector<long>, PolyVector> split;
    for (const auto& [e, c] : v.terms()) {
      auto [it, ins] = split.try_emplace(block_weight(v.varset(), r, e), v.varset());
      it->second.add_term(e, c);
    }
    for (auto& [w, p] : split) parts[w].push_back(std::move(p));
  }
  std::map<std::vector<long>, std::size_t> out;
  for (const auto& [w, ps] : parts) out[w] = span_rank(ps);
  return out;
}

// ------------------------------------------------------- cross validation

std::vector<SliceReport> cross_validate(const Rational& l1, const Rational& l2, unsigned n, unsigned r,
                                        unsigned m_max) {
  const auto comps = enumerate_components(l1, l2, n, r, m_max);
  const Character lambda{n, ParamScalar(l1), ParamScalar(l2)};
  const Realization real = Realization::for_verma(lambda);

  std::vector<SliceReport> reports;
  for (unsigned m = 0; m <= m_max; ++m)
    for (long t : admissible_t(n, r, m)) {
      SliceReport rep;
      rep.m = m;
      rep.t = t;
      for (const auto& c : comps)
        if (long(c.m()) == rep.m && c.t() == t) rep.components.push_back(c);
      reports.push_back(std::move(rep));
    }

  parallel_for(reports.size(), [&](std::size_t idx) {
    SliceReport& rep = reports[idx];
    rep.basis = solve_slice(real, r, unsigned(rep.m), rep.t);
    rep.oracle_dim = rep.basis.size();
    std::vector<PolyVector> predicted;
    rep.recurrences_ok = true;
    for (const auto& c : rep.components) {
      rep.formula_dim += component_dimension(c);
      for (auto& sv : component_vectors(c)) {
        if (!recurrence_check(sv)) rep.recurrences_ok = false;
        predicted.push_back(std::move(sv.polynomial));
      }
    }
    rep.predicted_dim = span_rank(predicted);
    std::vector<PolyVector> both = rep.basis;
    both.insert(both.end(), predicted.begin(), predicted.end());
    const std::size_t joint = span_rank(both);
    rep.span_match = joint == rep.oracle_dim && joint == rep.predicted_dim;
  });
  return reports;
}

// ------------------------------------------------------------ conjecture

ConjectureVerdict factorization_check(const Rational& l1, const Rational& l2, unsigned a, unsigned n) {
  if (a == 0) throw std::invalid_argument("factorization_check: a must be positive");
  if (l1 + l2 + Rational(long(n)) != Rational(long(a) - 1))
    throw std::invalid_argument("factorization_check: needs l1 + l2 + n = a - 1");
  const Character lambda{n, ParamScalar(l1), ParamScalar(l2)};
  ConjectureVerdict out;
  out.vector = conjecture_vector(lambda, a);
  const VermaModule M(lambda);
  out.polynomial = M.to_polynomial(out.vector);
  out.verdict = is_annihilated(out.polynomial, lambda, 0);
  out.pbw_verdict = M.is_singular(out.vector, 0);
  return out;
}

// ------------------------------------------------------------ threading

unsigned thread_count() {
  if (const char* env = std::getenv("HEISVERMA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace heisverma
