#include "heisverma/serialize.hpp"

#include <stdexcept>
#include <string>

namespace heisverma {

namespace {

Json exponent_json(const Exponent& e, std::size_t from, std::size_t to) {
  Json out = Json::array();
  for (std::size_t i = from; i < to; ++i) out.push_back(int(e[i]));
  return out;
}

void read_exponent(const Json& j, Exponent& e, std::size_t from, std::size_t count) {
  if (!j.is_array() || j.size() != count) throw std::invalid_argument("json: exponent of wrong length");
  for (std::size_t i = 0; i < count; ++i) {
    if (!j[i].is_number_integer() || j[i].get<long>() < 0 || j[i].get<long>() > long(kMaxExponent))
      throw std::invalid_argument("json: bad exponent entry");
    e[from + i] = static_cast<std::uint8_t>(j[i].get<unsigned>());
  }
}

VarSet varset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("side") || !j.contains("terms"))
    throw std::invalid_argument("json: expected {n, side, terms}");
  const unsigned n = j.at("n").get<unsigned>();
  const std::string side = j.at("side").get<std::string>();
  if (n == 0 || (side != "dual" && side != "hatted")) throw std::invalid_argument("json: bad variable set");
  return {n, side == "dual" ? Side::dual : Side::hatted};
}

const char* side_name(Side s) { return s == Side::dual ? "dual" : "hatted"; }

const char* kind_name(LieKind k) {
  switch (k) {
    case LieKind::f: return "f";
    case LieKind::g: return "g";
    case LieKind::c: return "c";
    case LieKind::d: return "d";
    case LieKind::e: return "e";
    case LieKind::a: return "a";
    case LieKind::h1: return "h1";
    case LieKind::h2: return "h2";
    case LieKind::hmat: return "hmat";
  }
  return "?";
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }
Json to_json(const ParamScalar& x) { return x.str(); }

Json to_json(const PolyVector& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json::array({exponent_json(it->first, 0, it->first.size()), to_json(it->second)}));
  return {{"n", p.varset().n}, {"side", side_name(p.varset().side)}, {"terms", terms}};
}

Json to_json(const WeylElement& w) {
  Json terms = Json::array();
  const std::size_t s = w.varset().slots();
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it)
    terms.push_back(Json::array({exponent_json(it->first, 0, s), exponent_json(it->first, s, 2 * s), to_json(it->second)}));
  return {{"n", w.varset().n}, {"side", side_name(w.varset().side)}, {"terms", terms}};
}

Json to_json(const PbwVector& v) {
  const unsigned n = v.n();
  Json terms = Json::array();
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
    terms.push_back(Json::array(
        {exponent_json(it->first, 0, n), exponent_json(it->first, n, 2 * n), int(it->first[2 * n]), to_json(it->second)}));
  return {{"n", n}, {"terms", terms}};
}

Json to_json(const LieBasisElement& x) {
  Json out = {{"kind", kind_name(x.kind)}};
  switch (x.kind) {
    case LieKind::f:
    case LieKind::g:
    case LieKind::d:
    case LieKind::e: out["i"] = x.i; break;
    case LieKind::hmat: {
      Json rows = Json::array();
      for (const auto& row : x.m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(r);
      }
      out["matrix"] = rows;
      break;
    }
    default: break;
  }
  return out;
}

Json to_json(const ComponentDescriptor& c) {
  return {{"a0", c.a0},
          {"b0", c.b0},
          {"c0", c.c0},
          {"d0", c.d0},
          {"case", to_string(c.case_tag)},
          {"lambda", Json::array({c.l1.str(), c.l2.str()})},
          {"n", c.n},
          {"r", c.r},
          {"m", c.m()},
          {"t", c.t()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("json: expected a rational");
}

ParamScalar param_from_json(const Json& j) {
  if (j.is_string()) return ParamScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return ParamScalar(j.get<long>());
  throw std::invalid_argument("json: expected a scalar");
}

PolyVector poly_from_json(const Json& j) {
  const VarSet vs = varset_from_json(j);
  PolyVector p(vs);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("json: polynomial term must be [exponent, coeff]");
    Exponent e(vs.slots(), 0);
    read_exponent(t[0], e, 0, vs.slots());
    p.add_term(e, param_from_json(t[1]));
  }
  return p;
}

WeylElement weyl_from_json(const Json& j) {
  const VarSet vs = varset_from_json(j);
  WeylElement w(vs);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("json: operator term must be [alpha, beta, coeff]");
    Exponent a(vs.slots(), 0), b(vs.slots(), 0);
    read_exponent(t[0], a, 0, vs.slots());
    read_exponent(t[1], b, 0, vs.slots());
    w.add_term(a, b, param_from_json(t[2]));
  }
  return w;
}

PbwVector pbw_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw std::invalid_argument("json: expected {n, terms}");
  const unsigned n = j.at("n").get<unsigned>();
  if (n == 0) throw std::invalid_argument("json: n must be positive");
  PbwVector v(n);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("json: PBW term must be [f, g, c, coeff]");
    PbwVector::Word w(2 * n + 1, 0);
    read_exponent(t[0], w, 0, n);
    read_exponent(t[1], w, n, n);
    read_exponent(Json::array({t[2]}), w, 2 * n, 1);
    v.add_term(w, param_from_json(t[3]));
  }
  return v;
}

LieBasisElement lie_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("json: expected {kind, ...}");
  const std::string k = j.at("kind").get<std::string>();
  auto index = [&] {
    const unsigned i = j.at("i").get<unsigned>();
    if (i == 0) throw std::invalid_argument("json: indices are 1-based");
    return i;
  };
  if (k == "f") return LieBasisElement::F(index());
  if (k == "g") return LieBasisElement::G(index());
  if (k == "d") return LieBasisElement::D(index());
  if (k == "e") return LieBasisElement::E(index());
  if (k == "c") return LieBasisElement::C();
  if (k == "a") return LieBasisElement::A();
  if (k == "h1") return LieBasisElement::H1();
  if (k == "h2") return LieBasisElement::H2();
  if (k == "hmat") {
    RatMatrix m;
    for (const auto& row : j.at("matrix")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      m.push_back(std::move(r));
    }
    return LieBasisElement::HMat(std::move(m));
  }
  throw std::invalid_argument("json: unknown kind '" + k + "'");
}

}  // namespace heisverma
