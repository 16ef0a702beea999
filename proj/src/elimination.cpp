#include "qpascal/elimination.hpp"

#include <functional>

#include "qpascal/field_elem.hpp"

namespace qpascal {

void trim(APoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const APoly& p) { return static_cast<long>(p.size()) - 1; }

CycPoly remove_factors(CycPoly m, const CycPoly& e) {
  if (m.is_zero()) return m;
  for (;;) {
    CycPoly g = gcd(m, e);
    if (g.degree() <= 0) break;
    m = exact_quotient(m, g);
  }
  return m.monic();
}

namespace {

CycPoly reduce(const CycPoly& p, const CycPoly& m) { return p % m; }

APoly reduce(const APoly& p, const CycPoly& m) {
  APoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(reduce(c, m));
  trim(r);
  return r;
}

CycPoly inverse_mod(const CycPoly& c, const CycPoly& m) {
  auto [g, s, t] = xgcd(c, m);
  (void)t;
  if (g.degree() != 0) throw Error(ErrorCode::Internal, "inverse_mod called on a zero divisor");
  return reduce(s, m);
}

// a mod b in (K[L]/m)[a] for monic b.
APoly rem_monic(APoly a, const APoly& b, const CycPoly& m) {
  const long db = degree(b);
  while (degree(a) >= db) {
    const CycPoly c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = reduce(a[shift + i] - c * b[i], m);
    a.back() = CycPoly();
    trim(a);
  }
  return a;
}

APoly make_monic(const APoly& a, const CycPoly& m) {
  const CycPoly inv = inverse_mod(a.back(), m);
  APoly r;
  for (const auto& c : a) r.push_back(reduce(c * inv, m));
  return r;
}

// gcd(a, b) over K[L]/m with a monic or zero; appends (modulus, gcd) leaves.
void gcd_split(CycPoly m, APoly a, APoly b, std::vector<SplitLeaf>& out) {
  a = reduce(a, m);
  b = reduce(b, m);
  for (;;) {
    while (!b.empty()) {
      const CycPoly h = gcd(b.back(), m);
      if (h.degree() <= 0) break;
      gcd_split(h, a, b, out);
      m = exact_quotient(m, h).monic();
      a = reduce(a, m);
      b = reduce(b, m);
    }
    if (b.empty()) {
      out.push_back({m, a});
      return;
    }
    b = make_monic(b, m);
    APoly r = a.empty() ? APoly{} : rem_monic(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace

std::vector<SplitLeaf> dynamic_gcd(const std::vector<APoly>& polys, const CycPoly& modulus) {
  if (modulus.degree() < 1) throw Error(ErrorCode::InvalidArgument, "dynamic_gcd needs a nonconstant modulus");
  std::vector<SplitLeaf> leaves{{modulus.monic(), APoly{}}};
  for (const auto& p : polys) {
    std::vector<SplitLeaf> next;
    for (const auto& leaf : leaves) {
      if (leaf.gcd.size() == 1) {
        next.push_back(leaf);
        continue;
      }
      gcd_split(leaf.modulus, leaf.gcd, p, next);
    }
    leaves = std::move(next);
  }
  return leaves;
}

namespace {

using FPoly = std::vector<FieldElem>;

void trim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly lift(const APoly& p) {
  FPoly r;
  for (const auto& c : p) r.emplace_back(RatFunc(c));
  trim(r);
  return r;
}

// Euclid over K(L), recording every polynomial in L whose vanishing could make
// the specialised computation differ from the generic one.
struct GenericEuclid {
  std::vector<CycPoly> obstructions;

  void note(const FieldElem& x) {
    const RatFunc f = x.as_ratfunc();
    if (f.numerator().degree() > 0) obstructions.push_back(f.numerator());
    if (f.denominator().degree() > 0) obstructions.push_back(f.denominator());
  }

  FPoly rem(FPoly a, const FPoly& b) {
    const FieldElem inv = b.back().inverse();
    while (a.size() >= b.size()) {
      const FieldElem c = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      a.back() = FieldElem();
      trim(a);
    }
    return a;
  }

  FPoly gcd(FPoly a, FPoly b) {
    while (!b.empty()) {
      note(b.back());
      FPoly r = rem(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }
};

}  // namespace

SolveResult solve_parameter_system(const std::vector<APoly>& input, const CycPoly& excluded) {
  std::vector<APoly> polys;
  std::vector<APoly> free_polys;
  for (APoly p : input) {
    trim(p);
    if (p.empty()) continue;
    (p.size() == 1 ? free_polys : polys).push_back(p);
  }
  SolveResult out;
  CycPoly modulus;
  if (!free_polys.empty()) {
    CycPoly g;
    for (const auto& p : free_polys) g = gcd(g, p[0]);
    modulus = g;
  } else if (polys.empty()) {
    out.generic = true;
    return out;
  } else {
    GenericEuclid euclid;
    FPoly g;
    for (const auto& p : polys) g = euclid.gcd(std::move(g), lift(p));
    if (g.size() > 1) {
      out.generic = true;
      return out;
    }
    euclid.note(g.back());
    modulus = CycPoly::constant(CycElem(1), kIndeterminate);
    for (const auto& o : euclid.obstructions) modulus = lcm(modulus, squarefree_part(o));
  }
  if (modulus.degree() < 1) return out;
  modulus = remove_factors(squarefree_part(modulus), excluded);
  if (modulus.degree() < 1) return out;

  std::vector<APoly> all = free_polys;
  all.insert(all.end(), polys.begin(), polys.end());
  for (const auto& leaf : dynamic_gcd(all, modulus))
    if (leaf.solvable()) out.leaves.push_back(leaf.modulus.monic());
  return out;
}

}  // namespace qpascal
