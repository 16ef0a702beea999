#include "qpascal/invariance.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace qpascal {

namespace {

std::string coord_label(std::size_t i) { return "e" + std::to_string(i); }

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Runs fn(i) for i in [0, n), possibly on several threads; results land in
// index order either way.
template <class R>
std::vector<R> run_indexed(std::size_t n, const std::function<R(std::size_t)>& fn, bool parallel) {
  std::vector<std::optional<R>> slots(n);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = parallel ? std::min<std::size_t>(hw, n) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) slots[i] = fn(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            slots[i] = fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

CycPoly one_poly() { return CycPoly::constant(CycElem(1), kIndeterminate); }

}  // namespace

std::vector<std::size_t> EigenStructure::simple_coords() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups)
    if (g.coords.size() == 1) out.push_back(g.coords[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> EigenStructure::planes() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& g : groups)
    if (g.coords.size() == 2) out.emplace_back(g.coords[0], g.coords[1]);
  return out;
}

EigenStructure eigen_structure(const ExactMatrix& x) {
  if (!x.is_square() || !x.is_diagonal())
    throw Error(ErrorCode::InvalidArgument, "eigen structure needs a diagonal matrix");
  EigenStructure es;
  es.dim = x.rows();
  for (std::size_t i = 0; i < es.dim; ++i) {
    auto it = std::find_if(es.groups.begin(), es.groups.end(),
                           [&](const EigenGroup& g) { return g.value == x(i, i); });
    if (it == es.groups.end()) es.groups.push_back({x(i, i), {i}});
    else it->coords.push_back(i);
  }
  for (const auto& g : es.groups)
    if (g.coords.size() > 2)
      throw Error(ErrorCode::UnsupportedMultiplicity,
                  "eigenvalue " + g.value.to_string() + " has multiplicity " + std::to_string(g.coords.size()));
  return es;
}

std::size_t SubspacePattern::dimension() const {
  std::size_t d = fixed.size();
  for (const auto& p : planes) d += p.part == PlanePart::Full ? 2 : p.part == PlanePart::Line ? 1 : 0;
  return d;
}

std::size_t SubspacePattern::line_count() const {
  return static_cast<std::size_t>(
      std::count_if(planes.begin(), planes.end(), [](const PlaneChoice& p) { return p.part == PlanePart::Line; }));
}

std::vector<std::size_t> SubspacePattern::coordinates() const {
  std::vector<std::size_t> out = fixed;
  for (const auto& p : planes)
    if (p.part == PlanePart::Full) {
      out.push_back(p.a);
      out.push_back(p.b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

const PlaneChoice& SubspacePattern::line() const {
  if (line_count() != 1) throw Error(ErrorCode::UnsupportedPattern, "pattern " + label() + " needs exactly one line");
  for (const auto& p : planes)
    if (p.part == PlanePart::Line) return p;
  throw Error(ErrorCode::Internal, "unreachable");
}

std::string SubspacePattern::label() const {
  std::vector<std::string> parts;
  for (auto c : coordinates()) parts.push_back(coord_label(c));
  for (const auto& p : planes)
    if (p.part == PlanePart::Line) parts.push_back("a*" + coord_label(p.a) + " + b*" + coord_label(p.b));
  std::string out = "<";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + ">";
}

std::vector<SubspacePattern> enumerate_patterns(const EigenStructure& es, std::size_t d) {
  if (d < 1 || d >= es.dim)
    throw Error(ErrorCode::InvalidArgument, "pattern dimension must lie in 1.." + std::to_string(es.dim - 1));
  const auto simple = es.simple_coords();
  const auto planes = es.planes();
  std::vector<SubspacePattern> out;
  // Plane part assignments, None < Full < Line per plane, first plane slowest.
  std::vector<std::vector<PlaneChoice>> plane_options{{}};
  for (const auto& [a, b] : planes) {
    std::vector<std::vector<PlaneChoice>> next;
    for (const auto& prefix : plane_options)
      for (auto part : {PlanePart::None, PlanePart::Full, PlanePart::Line}) {
        auto v = prefix;
        v.push_back({a, b, part});
        next.push_back(std::move(v));
      }
    plane_options = std::move(next);
  }
  for (std::size_t k = 0; k <= std::min(d, simple.size()); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::size_t> fixed;
      for (auto i : idx) fixed.push_back(simple[i]);
      for (const auto& opt : plane_options) {
        SubspacePattern p{fixed, opt};
        if (p.dimension() == d) out.push_back(std::move(p));
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == simple.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<ExactVector> pattern_basis(const SubspacePattern& p, std::size_t dim, const std::optional<Direction>& dir) {
  std::vector<ExactVector> basis;
  for (auto c : p.coordinates()) basis.push_back(ExactVector::unit(dim, c));
  if (p.line_count() > 0) {
    if (!dir) throw Error(ErrorCode::InvalidArgument, "line pattern needs a direction");
    const auto& l = p.line();
    ExactVector v(dim);
    v[l.a] = dir->alpha;
    v[l.b] = dir->beta;
    if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "direction (0:0) is not projective");
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_invariant(const ExactMatrix& m, std::span<const ExactVector> basis) {
  for (const auto& v : basis)
    if (!in_span(m * v, basis)) return false;
  return true;
}

std::string to_string(PatternStatus s) {
  switch (s) {
    case PatternStatus::NotInvariant: return "not_invariant";
    case PatternStatus::Invariant: return "invariant";
    case PatternStatus::UnresolvedOutsideField: return "unresolved_outside_field";
  }
  return "unknown";
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Irreducible: return "irreducible";
    case VerdictStatus::Reducible: return "reducible";
    case VerdictStatus::PatternUndecidable: return "pattern_undecidable";
  }
  return "unknown";
}

namespace {

struct Condition {
  std::string what;
  std::vector<FieldElem> poly;  // in a, lowest degree first
};

// Y e_c must stay inside span{e_k : k in coords}.
std::vector<Condition> coordinate_conditions(const ExactMatrix& y, const std::vector<std::size_t>& coords) {
  std::vector<Condition> out;
  for (auto c : coords)
    for (std::size_t k = 0; k < y.rows(); ++k)
      if (!contains(coords, k))
        out.push_back({"component " + std::to_string(k) + " of Y " + coord_label(c), {y(k, c)}});
  return out;
}

// Conditions for span{e_c : c in coords} + <a*e_la + e_lb>.
std::vector<Condition> line_conditions(const ExactMatrix& y, const std::vector<std::size_t>& coords, std::size_t la,
                                       std::size_t lb) {
  std::vector<std::size_t> inside = coords;
  inside.push_back(la);
  inside.push_back(lb);
  std::vector<Condition> out;
  for (auto c : coords) {
    for (std::size_t k = 0; k < y.rows(); ++k)
      if (!contains(inside, k))
        out.push_back({"component " + std::to_string(k) + " of Y " + coord_label(c), {y(k, c)}});
    out.push_back({"Y " + coord_label(c) + " off the line", {y(la, c), -y(lb, c)}});
  }
  const std::string v = "Y(a*" + coord_label(la) + " + " + coord_label(lb) + ")";
  for (std::size_t k = 0; k < y.rows(); ++k)
    if (!contains(inside, k)) out.push_back({"component " + std::to_string(k) + " of " + v, {y(k, lb), y(k, la)}});
  out.push_back({v + " off the line", {y(la, lb), y(la, la) - y(lb, lb), -y(lb, la)}});
  return out;
}

std::optional<std::string> first_escape(const ExactMatrix& y, const std::vector<std::size_t>& coords) {
  for (const auto& c : coordinate_conditions(y, coords))
    if (!c.poly[0].is_zero()) return c.what + " is nonzero";
  return std::nullopt;
}

CycPoly to_cyc_poly(const std::vector<FieldElem>& p) {
  std::vector<CycElem> c;
  for (const auto& x : p) c.push_back(x.cyc());
  return CycPoly(std::move(c), "a");
}

std::vector<std::size_t> with(std::vector<std::size_t> v, std::size_t x) {
  v.push_back(x);
  std::sort(v.begin(), v.end());
  return v;
}

// Square root inside the field, when it is visibly there: rationals that are
// squares of rationals, and squares of roots of unity times such rationals.
std::optional<CycElem> try_sqrt(const CycElem& d) {
  if (d.is_zero()) return CycElem();
  const unsigned long n = d.conductor();
  const unsigned long m = n % 2 ? 2 * n : n;
  for (unsigned long k = 0; k < m; ++k) {
    const CycElem z = CycElem::zeta(m, static_cast<long>(k));
    const CycElem r = d / (z * z);
    if (!r.is_rational()) continue;
    const BigRational v = r.rational_value();
    if (sgn(v) < 0) continue;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return z * CycElem(BigRational(sn, sd));
  }
  return std::nullopt;
}

}  // namespace

PatternDecision decide_pattern_fixed(const ExactMatrix& y, const SubspacePattern& p) {
  if (p.line_count() > 1)
    throw Error(ErrorCode::UnsupportedPattern, p.label() + " has more than one unknown line parameter");
  if (y.is_symbolic()) throw Error(ErrorCode::InvalidArgument, "fixed-mode decision needs a concrete matrix");
  PatternDecision out;
  out.pattern = p;
  const auto coords = p.coordinates();
  if (p.line_count() == 0) {
    auto esc = first_escape(y, coords);
    out.status = esc ? PatternStatus::NotInvariant : PatternStatus::Invariant;
    out.reason = esc ? *esc : "all images stay in the span";
    return out;
  }
  const auto& line = p.line();
  std::vector<std::string> reasons;

  // b = 0: the coordinate line e_a.
  if (auto esc = first_escape(y, with(coords, line.a))) reasons.push_back("b=0: " + *esc);
  else out.directions.push_back({FieldElem(1), FieldElem(0)});

  // b = 1: a is unknown.
  CycPoly g = CycPoly({}, "a");
  std::optional<std::string> blocked;
  for (const auto& c : line_conditions(y, coords, line.a, line.b)) {
    CycPoly f = to_cyc_poly(c.poly);
    if (f.is_zero()) continue;
    if (f.degree() == 0) {
      blocked = c.what + " is nonzero";
      break;
    }
    g = gcd(g, f);
    if (g.degree() == 0) {
      blocked = "conditions on a have no common root (after " + c.what + ")";
      break;
    }
  }
  if (blocked) {
    reasons.push_back("b=1: " + *blocked);
  } else if (g.is_zero()) {
    out.every_direction = true;
    out.directions.push_back({FieldElem(0), FieldElem(1)});
  } else if (g.degree() == 1) {
    out.directions.push_back({FieldElem(-g.coeff(0) / g.coeff(1)), FieldElem(1)});
  } else {
    bool resolved = false;
    if (g.degree() == 2) {
      const CycElem a2 = g.coeff(2), a1 = g.coeff(1), a0 = g.coeff(0);
      if (auto s = try_sqrt(a1 * a1 - CycElem(4) * a2 * a0)) {
        const CycElem two_a = CycElem(2) * a2;
        out.directions.push_back({FieldElem((-a1 - *s) / two_a), FieldElem(1)});
        if (!s->is_zero()) out.directions.push_back({FieldElem((-a1 + *s) / two_a), FieldElem(1)});
        resolved = true;
      }
    }
    if (!resolved) {
      out.minimal_polynomial = g;
      reasons.push_back("b=1: invariant lines are roots of " + g.to_string() + " outside the working field");
    }
  }
  if (!out.directions.empty()) {
    out.status = PatternStatus::Invariant;
    out.reason = "invariant line(s) found";
  } else if (out.minimal_polynomial) {
    out.status = PatternStatus::UnresolvedOutsideField;
  } else {
    out.status = PatternStatus::NotInvariant;
  }
  if (out.reason.empty()) {
    for (std::size_t i = 0; i < reasons.size(); ++i) out.reason += (i ? "; " : "") + reasons[i];
  }
  return out;
}

CycPoly SymbolicPatternResult::combined() const {
  CycPoly out = one_poly();
  for (const auto& c : constraints) out = lcm(out, c);
  return out;
}

namespace {

APoly clear_denominators(const std::vector<FieldElem>& p) {
  CycPoly den = one_poly();
  for (const auto& x : p) den = lcm(den, x.as_ratfunc().denominator());
  APoly out;
  for (const auto& x : p) {
    const RatFunc f = x.as_ratfunc();
    out.push_back(f.numerator() * exact_quotient(den, f.denominator()));
  }
  trim(out);
  return out;
}

std::vector<APoly> to_system(const std::vector<Condition>& conds) {
  std::vector<APoly> out;
  for (const auto& c : conds) out.push_back(clear_denominators(c.poly));
  return out;
}

}  // namespace

SymbolicPatternResult decide_pattern_symbolic(const ExactMatrix& y, const SubspacePattern& p, const CycPoly& excluded) {
  if (p.line_count() > 1)
    throw Error(ErrorCode::UnsupportedPattern, p.label() + " has more than one unknown line parameter");
  SymbolicPatternResult out;
  out.pattern = p;
  const auto coords = p.coordinates();
  auto absorb = [&](const SolveResult& r) {
    out.generic = out.generic || r.generic;
    for (const auto& l : r.leaves) out.constraints.push_back(l);
  };
  if (p.line_count() == 0) {
    absorb(solve_parameter_system(to_system(coordinate_conditions(y, coords)), excluded));
  } else {
    const auto& line = p.line();
    absorb(solve_parameter_system(to_system(coordinate_conditions(y, with(coords, line.a))), excluded));
    absorb(solve_parameter_system(to_system(line_conditions(y, coords, line.a, line.b)), excluded));
  }
  return out;
}

namespace {

void verify_witness(const Witness& w, const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix* rho1,
                    const ExactMatrix* rho2) {
  if (!is_invariant(x, w.basis) || !is_invariant(y, w.basis))
    throw Error(ErrorCode::Internal, "witness " + w.pattern.label() + " failed direct verification");
  if (!w.original_basis.empty() && rho1 && rho2 &&
      (!is_invariant(*rho1, w.original_basis) || !is_invariant(*rho2, w.original_basis)))
    throw Error(ErrorCode::Internal, "witness " + w.pattern.label() + " failed verification in original coordinates");
}

}  // namespace

Verdict decide_pair(const ExactMatrix& x, const ExactMatrix& y, const EngineOptions& opts, const ExactMatrix* p,
                    const ExactMatrix* rho1, const ExactMatrix* rho2) {
  const EigenStructure es = eigen_structure(x);
  if (y.rows() != es.dim || y.cols() != es.dim) throw Error(ErrorCode::ShapeMismatch, "X and Y sizes differ");
  const std::size_t max_dim = opts.max_dim ? std::min(opts.max_dim, es.dim - 1) : es.dim - 1;
  std::vector<SubspacePattern> patterns;
  for (std::size_t d = std::max<std::size_t>(opts.min_dim, 1); d <= max_dim; ++d)
    for (auto& pat : enumerate_patterns(es, d)) patterns.push_back(std::move(pat));

  const auto decisions = run_indexed<PatternDecision>(
      patterns.size(), [&](std::size_t i) { return decide_pattern_fixed(y, patterns[i]); }, opts.parallel);

  Verdict v;
  for (const auto& d : decisions) {
    v.trace.push_back({d.pattern.dimension(), d.pattern.label(), d.status, d.reason});
    if (d.status == PatternStatus::UnresolvedOutsideField) v.unresolved.push_back(d);
    if (d.status != PatternStatus::Invariant) continue;
    std::vector<std::optional<Direction>> dirs;
    if (d.pattern.line_count() == 0) dirs.push_back(std::nullopt);
    for (const auto& dir : d.directions) dirs.push_back(dir);
    for (const auto& dir : dirs) {
      Witness w{d.pattern, dir, pattern_basis(d.pattern, es.dim, dir), {}};
      if (p)
        for (const auto& b : w.basis) w.original_basis.push_back(*p * b);
      verify_witness(w, x, y, rho1, rho2);
      v.witnesses.push_back(std::move(w));
    }
  }
  if (!v.witnesses.empty()) v.status = VerdictStatus::Reducible;
  else if (!v.unresolved.empty()) v.status = VerdictStatus::PatternUndecidable;
  else v.status = VerdictStatus::Irreducible;
  return v;
}

Verdict decide_irreducible(const FieldElem& lambda1, const EngineOptions& opts) {
  if (lambda1.is_symbolic()) throw Error(ErrorCode::InvalidArgument, "decide_irreducible needs a concrete lambda1");
  if (!dim6_admissible(lambda1))
    throw Error(ErrorCode::InadmissibleLambda, "lambda1 = " + lambda1.to_string() + " lies in {0, -1, 1, q, q^2}");
  const Dim6Rep rep = build_dim6(lambda1);
  const DiagonalizedPair pair = diagonalize(rep);
  return decide_pair(pair.X, pair.Y, opts, &pair.P, &rep.rho1, &rep.rho2);
}

namespace {

CycPoly poly_from_text(std::initializer_list<CycElem> coeffs) {
  return CycPoly(std::vector<CycElem>(coeffs), kIndeterminate);
}

}  // namespace

CycPoly dim6_exclusions() {
  const CycPoly l = poly_from_text({CycElem(0), CycElem(1)});
  const CycPoly l2m1 = poly_from_text({CycElem(-1), CycElem(0), CycElem(1)});
  const CycPoly phi3 = poly_from_text({CycElem(1), CycElem(1), CycElem(1)});
  return l * l2m1 * phi3;
}

CycPoly theorem36_expected() {
  const CycElem q = CycElem::zeta(3), q2 = q * q;
  const CycPoly a = poly_from_text({q, CycElem(0), CycElem(1)});
  const CycPoly b = poly_from_text({q2, CycElem(0), CycElem(1)});
  const CycPoly c = poly_from_text({-q, CycElem(0), CycElem(0), CycElem(1)});
  const CycPoly d = poly_from_text({-q2, CycElem(0), CycElem(0), CycElem(1)});
  return a * b * c * d;
}

Theorem36Result theorem36_conditions(bool parallel) {
  const Dim6Rep rep = build_dim6(FieldElem::indeterminate());
  const DiagonalizedPair pair = diagonalize(rep);
  CycPoly excluded = dim6_exclusions();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) excluded = lcm(excluded, pair.Y(i, j).as_ratfunc().denominator());

  const EigenStructure es = eigen_structure(pair.X);
  std::vector<SubspacePattern> patterns;
  for (std::size_t d = 1; d < 6; ++d)
    for (auto& p : enumerate_patterns(es, d)) patterns.push_back(std::move(p));
  auto results = run_indexed<SymbolicPatternResult>(
      patterns.size(), [&](std::size_t i) { return decide_pattern_symbolic(pair.Y, patterns[i], excluded); },
      parallel);

  Theorem36Result out;
  out.per_dimension.assign(5, one_poly());
  out.combined = one_poly();
  for (auto& r : results) {
    const std::size_t d = r.pattern.dimension();
    out.any_generic = out.any_generic || r.generic;
    const CycPoly c = r.combined();
    out.per_dimension[d - 1] = lcm(out.per_dimension[d - 1], c);
    out.combined = lcm(out.combined, c);
    out.patterns.emplace_back(d, std::move(r));
  }
  return out;
}

ExactMatrix restriction_basis(const FieldElem& l) {
  std::vector<ExactVector> cols;
  ExactVector v(6);
  v[2] = -l;
  v[3] = FieldElem(1);
  cols.push_back(v);
  for (std::size_t i : {0u, 4u, 5u, 3u, 1u}) cols.push_back(ExactVector::unit(6, i));
  return ExactMatrix::from_columns(cols);
}

RestrictedRep restrict_to_V(const FieldElem& l) {
  if (l.is_symbolic()) throw Error(ErrorCode::InvalidArgument, "restriction needs a concrete lambda1");
  const FieldElem q = dim6_q();
  if (l.is_zero() || l.pow(3) != q * q)
    throw Error(ErrorCode::ConstraintViolated, "lambda1 = " + l.to_string() + " does not satisfy lambda1^3 = q^2");
  if (!dim6_admissible(l))
    throw Error(ErrorCode::InadmissibleLambda, "lambda1 = " + l.to_string() + " lies in {0, -1, 1, q, q^2}");
  const DiagonalizedPair pair = diagonalize(build_dim6(l));
  const ExactMatrix a = restriction_basis(l);
  const ExactMatrix ainv = inverse(a);
  ExactMatrix cx = ainv * pair.X * a;
  ExactMatrix cy = ainv * pair.Y * a;
  if (!cx.block(4, 0, 2, 4).is_zero() || !cy.block(4, 0, 2, 4).is_zero())
    throw Error(ErrorCode::Internal, "the restriction subspace is not invariant");
  ExactMatrix x = cx.block(0, 0, 4, 4);
  ExactMatrix y = cy.block(0, 0, 4, 4);
  const bool braid = braid_relation_holds(x, y);
  return {l, a, std::move(cx), std::move(cy), std::move(x), std::move(y), braid};
}

Theorem41Result verify_theorem41(const FieldElem& l, const EngineOptions& opts) {
  RestrictedRep rep = restrict_to_V(l);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (rep.x(i, i) == rep.x(j, j))
        throw Error(ErrorCode::EigenvalueCollision, "restricted eigenvalues " + std::to_string(i) + " and " +
                                                        std::to_string(j) + " coincide");
  Verdict verdict = decide_pair(rep.x, rep.y, opts);
  std::vector<std::vector<bool>> nz(4, std::vector<bool>(4));
  bool matches = true;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      nz[j][i] = !rep.y(i, j).is_zero();
      if (nz[j][i] != !(i == 2 && j == 2)) matches = false;
    }
  return {std::move(rep), std::move(verdict), std::move(nz), matches};
}

std::pair<ExactMatrix, ExactMatrix> transpose_inverse_pair(const ExactMatrix& x, const ExactMatrix& y) {
  return {inverse(x).transpose(), inverse(y).transpose()};
}

namespace {

// A common eigenvector of a (triangular) and b, over C.
std::optional<std::string> common_eigenvector(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t n = a.rows();
  std::vector<FieldElem> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElem mu = a(i, i);
    if (std::find(seen.begin(), seen.end(), mu) != seen.end()) continue;
    seen.push_back(mu);
    const auto k = kernel_basis(a - mu * ExactMatrix::identity(n));
    const std::string tag = "eigenvalue " + mu.to_string();
    if (k.size() == 1) {
      const std::vector<ExactVector> span{k[0]};
      if (in_span(b * k[0], span)) return tag + ": its eigenvector is shared";
    } else if (k.size() == 2) {
      if (in_span(b * k[0], std::vector<ExactVector>{k[0]})) return tag + ": first kernel vector is shared";
      // v(x) = x k0 + k1 spans a b-invariant line iff all 2x2 minors of [v | b v] vanish.
      const ExactVector b0 = b * k[0], b1 = b * k[1];
      CycPoly g = CycPoly({}, "x");
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
          const CycPoly vr({k[1][r].cyc(), k[0][r].cyc()}, "x"), vs({k[1][s].cyc(), k[0][s].cyc()}, "x");
          const CycPoly wr({b1[r].cyc(), b0[r].cyc()}, "x"), ws({b1[s].cyc(), b0[s].cyc()}, "x");
          g = gcd(g, vr * ws - vs * wr);
        }
      if (g.is_zero() || g.degree() >= 1) return tag + ": a line in its 2-dimensional eigenspace is shared";
    } else if (k.size() >= 2 && n >= 2) {
      return tag + ": the first matrix is scalar, any eigenvector of the second is shared";
    }
  }
  return std::nullopt;
}

}  // namespace

SmallDimVerdict small_dim_irreducibility(const ExactMatrix& s1, const ExactMatrix& s2) {
  const std::size_t n = s1.rows();
  if (!s1.is_square() || s2.rows() != n || s2.cols() != n) throw Error(ErrorCode::ShapeMismatch, "pair sizes differ");
  if (n > 3) throw Error(ErrorCode::InvalidArgument, "small-dimension route handles sizes up to 3");
  if (!s1.is_upper_triangular() && !s1.is_lower_triangular())
    throw Error(ErrorCode::InvalidArgument, "small-dimension route needs a triangular first generator");
  if (s1.is_symbolic() || s2.is_symbolic()) throw Error(ErrorCode::InvalidArgument, "concrete matrices required");
  SmallDimVerdict out;
  if (n == 1) {
    out.reason = "dimension 1 has no proper nonzero subspace";
    return out;
  }
  if (auto r = common_eigenvector(s1, s2)) {
    out.reducible = true;
    out.reason = *r;
    return out;
  }
  if (n == 3) {
    if (auto r = common_eigenvector(s1.transpose(), s2.transpose())) {
      out.reducible = true;
      out.via_transpose = true;
      out.reason = "transposed pair, " + *r;
      return out;
    }
  }
  out.reason = "no shared eigenvector" + std::string(n == 3 ? " for the pair or its transpose" : "");
  return out;
}

}  // namespace qpascal
