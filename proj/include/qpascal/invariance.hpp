#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpascal/dim6.hpp"
#include "qpascal/elimination.hpp"

namespace qpascal {

struct EigenGroup {
  FieldElem value;
  std::vector<std::size_t> coords;
};

// Eigenvalues of a diagonal matrix grouped by equality, in order of first
// appearance.
struct EigenStructure {
  std::size_t dim = 0;
  std::vector<EigenGroup> groups;

  std::vector<std::size_t> simple_coords() const;
  std::vector<std::pair<std::size_t, std::size_t>> planes() const;
};

// Throws InvalidArgument for a non-diagonal matrix and UnsupportedMultiplicity
// when an eigenvalue occurs more than twice.
EigenStructure eigen_structure(const ExactMatrix& x);

enum class PlanePart { None, Full, Line };

struct PlaneChoice {
  std::size_t a = 0;
  std::size_t b = 0;
  PlanePart part = PlanePart::None;
};

// An X-invariant subspace shape: the span of the chosen simple coordinates,
// the full planes, and for each Line plane the projective line a*e_a + b*e_b.
struct SubspacePattern {
  std::vector<std::size_t> fixed;
  std::vector<PlaneChoice> planes;

  std::size_t dimension() const;
  std::size_t line_count() const;
  // Fixed coordinates together with those of full planes, sorted.
  std::vector<std::size_t> coordinates() const;
  // The single Line plane. Throws UnsupportedPattern unless there is exactly one.
  const PlaneChoice& line() const;
  // e.g. "<e0, e4, a*e2 + b*e3>"; coordinates are 0-based.
  std::string label() const;
};

// All shapes of dimension d, ordered by fixed set (lexicographic by size then
// content) and then by plane parts (None < Full < Line).
std::vector<SubspacePattern> enumerate_patterns(const EigenStructure& es, std::size_t d);

// The projective direction alpha*e_a + beta*e_b of a line.
struct Direction {
  FieldElem alpha;
  FieldElem beta;
};

// Basis of the pattern's subspace; `dir` is required for line patterns.
std::vector<ExactVector> pattern_basis(const SubspacePattern& p, std::size_t dim,
                                       const std::optional<Direction>& dir);

// True iff m maps span(basis) into itself.
bool is_invariant(const ExactMatrix& m, std::span<const ExactVector> basis);

enum class PatternStatus { NotInvariant, Invariant, UnresolvedOutsideField };

std::string to_string(PatternStatus s);

struct PatternDecision {
  SubspacePattern pattern;
  PatternStatus status = PatternStatus::NotInvariant;
  // Invariant lines of a line pattern (beta = 0 first, then beta = 1 roots).
  std::vector<Direction> directions;
  // Every line of the plane works.
  bool every_direction = false;
  // Unresolved: the polynomial in a whose roots give invariant lines.
  std::optional<CycPoly> minimal_polynomial;
  std::string reason;
};

// Decides a pattern for a concrete Y given in coordinates where X is
// diagonal. Throws UnsupportedPattern for two or more line parameters.
PatternDecision decide_pattern_fixed(const ExactMatrix& y, const SubspacePattern& p);

struct SymbolicPatternResult {
  SubspacePattern pattern;
  // Invariant for all L outside a finite set.
  bool generic = false;
  // Monic squarefree polynomials in L; the pattern is invariant exactly at
  // their roots (outside the excluded set).
  std::vector<CycPoly> constraints;

  CycPoly combined() const;
};

// Y has entries in Q(z(N))(L). `excluded` lists the L values outside the
// domain (roots are ignored).
SymbolicPatternResult decide_pattern_symbolic(const ExactMatrix& y, const SubspacePattern& p,
                                              const CycPoly& excluded);

struct Witness {
  SubspacePattern pattern;
  std::optional<Direction> direction;
  std::vector<ExactVector> basis;           // coordinates where X is diagonal
  std::vector<ExactVector> original_basis;  // P * basis, when P is known
};

struct TraceEntry {
  std::size_t dimension = 0;
  std::string pattern;
  PatternStatus status = PatternStatus::NotInvariant;
  std::string reason;
};

enum class VerdictStatus { Irreducible, Reducible, PatternUndecidable };

std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Irreducible;
  std::vector<Witness> witnesses;
  std::vector<TraceEntry> trace;
  std::vector<PatternDecision> unresolved;
};

struct EngineOptions {
  bool parallel = true;
  std::size_t min_dim = 1;
  std::size_t max_dim = 0;  // 0 means dim - 1
};

// Exhaustive invariant-subspace search for the pair (X, Y) with X diagonal.
// When `p` (and the original generator images) are given, each witness is
// also checked after mapping back by p.
Verdict decide_pair(const ExactMatrix& x, const ExactMatrix& y, const EngineOptions& opts = {},
                    const ExactMatrix* p = nullptr, const ExactMatrix* rho1 = nullptr,
                    const ExactMatrix* rho2 = nullptr);

// The six-dimensional family at a concrete lambda1. Throws InadmissibleLambda.
Verdict decide_irreducible(const FieldElem& lambda1, const EngineOptions& opts = {});

// L (L^2 - 1)(L^2 + L + 1).
CycPoly dim6_exclusions();
// (L^2 + q)(L^2 + q^2)(L^3 - q)(L^3 - q^2).
CycPoly theorem36_expected();

struct Theorem36Result {
  std::vector<std::pair<std::size_t, SymbolicPatternResult>> patterns;  // (dimension, result)
  std::vector<CycPoly> per_dimension;  // index d - 1 for d = 1..5; lcm of constraints
  CycPoly combined;                    // lcm over everything
  bool any_generic = false;
};

// Symbolic sweep over every pattern of dimensions 1..5.
Theorem36Result theorem36_conditions(bool parallel = true);

// (-l e2 + e3, e0, e4, e5, e3, e1) as columns.
ExactMatrix restriction_basis(const FieldElem& lambda1);

struct RestrictedRep {
  FieldElem lambda1;
  ExactMatrix A;
  ExactMatrix conj_x;  // A^-1 X A
  ExactMatrix conj_y;  // A^-1 Y A
  ExactMatrix x;       // leading 4x4 block of conj_x
  ExactMatrix y;       // leading 4x4 block of conj_y
  bool braid_relation = false;
};

// Throws ConstraintViolated unless lambda1^3 = q^2, InadmissibleLambda for
// excluded values.
RestrictedRep restrict_to_V(const FieldElem& lambda1);

struct Theorem41Result {
  RestrictedRep rep;
  Verdict verdict;
  // nonzero[j][i]: component i of column j of the restricted Y is nonzero.
  std::vector<std::vector<bool>> nonzero;
  // Everything nonzero except component 2 of column 2.
  bool profile_matches = false;
};

// Throws EigenvalueCollision when the restricted X has a repeated eigenvalue.
Theorem41Result verify_theorem41(const FieldElem& lambda1, const EngineOptions& opts = {});

// (X^-T, Y^-T); a d-dimensional invariant subspace of (X, Y) corresponds to a
// (dim - d)-dimensional one of this pair.
std::pair<ExactMatrix, ExactMatrix> transpose_inverse_pair(const ExactMatrix& x, const ExactMatrix& y);

struct SmallDimVerdict {
  bool reducible = false;
  bool via_transpose = false;
  std::string reason;
};

// Subspace irreducibility of a triangular pair of size at most 3, without
// diagonalising: reducible iff (s1, s2) or their transposes share an
// eigenvector. Eigenvalues of s1 are read off its diagonal.
SmallDimVerdict small_dim_irreducibility(const ExactMatrix& s1, const ExactMatrix& s2);

}  // namespace qpascal
