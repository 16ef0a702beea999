#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qpascal/dim6.hpp"
#include "qpascal/invariance.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

namespace qpascal::probe {

struct ProbeStats {
  int probes = 0;
  int invariant = 0;
  int disagreements = 0;
  int witnesses_confirmed = 0;
  std::string first_disagreement;
};

struct Probe {
  std::vector<std::size_t> fixed;
  int plane = 0;  // 0 none, 1 full, 2 line
  FieldElem alpha, beta;
  std::vector<ExactVector> basis;
};

inline std::string describe(const Probe& p) {
  std::string s = "fixed={";
  for (auto c : p.fixed) s += " e" + std::to_string(c);
  s += " } plane=" + std::to_string(p.plane);
  if (p.plane == 2) s += " (" + p.alpha.to_string() + " : " + p.beta.to_string() + ")";
  return s;
}

// Random X-invariant subspaces of the diagonalised pair at lambda1, checked
// for Y-invariance by direct span membership and compared with the engine.
// Half the probes start from an engine witness so both outcomes occur.
inline ProbeStats run_probes(const FieldElem& lambda1, int count, std::uint64_t seed) {
  testgen::Gen g(seed);
  const DiagonalizedPair d = diagonalize(build_dim6(lambda1));
  EngineOptions opts;
  const Verdict v = decide_pair(d.X, d.Y, opts);

  // Eigenvalue groups read straight off the diagonal.
  std::vector<std::size_t> simple;
  std::vector<std::size_t> plane;
  for (std::size_t i = 0; i < 6; ++i) {
    int same = 0;
    for (std::size_t j = 0; j < 6; ++j) same += d.X(i, i) == d.X(j, j);
    (same == 1 ? simple : plane).push_back(i);
  }
  const unsigned long conductor = std::lcm(lambda1.conductor(), 3ul);

  std::vector<FieldElem> witness_alphas;
  for (const auto& w : v.witnesses)
    if (w.direction && !w.direction->beta.is_zero()) witness_alphas.push_back(w.direction->alpha / w.direction->beta);

  ProbeStats st;
  // Every engine witness must pass the direct check.
  for (const auto& w : v.witnesses) {
    bool ok = true;
    for (const auto& b : w.basis) ok = ok && oracle::in_span(d.Y * b, w.basis) && oracle::in_span(d.X * b, w.basis);
    if (ok) ++st.witnesses_confirmed;
    else if (st.first_disagreement.empty()) st.first_disagreement = "witness " + w.pattern.label() + " fails";
  }
  st.disagreements += static_cast<int>(v.witnesses.size()) - st.witnesses_confirmed;

  while (st.probes < count) {
    Probe p;
    if (!v.witnesses.empty() && g.coin()) {
      const Witness& w = v.witnesses[static_cast<std::size_t>(g.integer(0, static_cast<long>(v.witnesses.size()) - 1))];
      const auto coords = w.pattern.coordinates();
      for (auto c : coords)
        if (std::find(plane.begin(), plane.end(), c) == plane.end()) p.fixed.push_back(c);
      const std::size_t in_plane = coords.size() - p.fixed.size();
      p.plane = w.direction ? 2 : (in_plane == 2 ? 1 : 0);
      if (w.direction) {
        p.alpha = w.direction->alpha;
        p.beta = w.direction->beta;
      }
      // Perturb the membership of one simple coordinate now and then.
      if (g.coin(0.3)) {
        const std::size_t c = simple[static_cast<std::size_t>(g.integer(0, static_cast<long>(simple.size()) - 1))];
        auto it = std::find(p.fixed.begin(), p.fixed.end(), c);
        if (it == p.fixed.end()) p.fixed.push_back(c);
        else p.fixed.erase(it);
        std::sort(p.fixed.begin(), p.fixed.end());
      }
    } else {
      for (auto c : simple)
        if (g.coin()) p.fixed.push_back(c);
      p.plane = static_cast<int>(g.integer(0, 2));
      if (p.plane == 2) {
        if (g.coin(0.1)) {
          p.alpha = FieldElem(1);
          p.beta = FieldElem(0);
        } else {
          p.beta = FieldElem(1);
          p.alpha = !witness_alphas.empty() && g.coin(0.3)
                        ? witness_alphas[static_cast<std::size_t>(g.integer(0, static_cast<long>(witness_alphas.size()) - 1))]
                        : FieldElem(g.cyc(conductor, 6));
        }
      }
    }
    for (auto c : p.fixed) p.basis.push_back(ExactVector::unit(6, c));
    if (p.plane == 1) {
      p.basis.push_back(ExactVector::unit(6, plane[0]));
      p.basis.push_back(ExactVector::unit(6, plane[1]));
    } else if (p.plane == 2) {
      p.basis.push_back(p.alpha * ExactVector::unit(6, plane[0]) + p.beta * ExactVector::unit(6, plane[1]));
    }
    if (p.basis.empty() || p.basis.size() >= 6) continue;
    ++st.probes;

    bool truth = true;
    for (const auto& b : p.basis) truth = truth && oracle::in_span(d.Y * b, p.basis);

    bool claimed = false;
    for (const auto& w : v.witnesses) {
      if (w.basis.size() != p.basis.size()) continue;
      bool inside = true;
      for (const auto& b : w.basis) inside = inside && oracle::in_span(b, p.basis);
      if (inside) {
        claimed = true;
        break;
      }
    }
    if (!claimed && p.plane == 2) {
      SubspacePattern sp;
      sp.fixed = p.fixed;
      sp.planes = {PlaneChoice{plane[0], plane[1], PlanePart::Line}};
      claimed = decide_pattern_fixed(d.Y, sp).every_direction;
    }
    if (truth) ++st.invariant;
    if (truth != claimed) {
      ++st.disagreements;
      if (st.first_disagreement.empty())
        st.first_disagreement = describe(p) + (truth ? " invariant but not reported" : " reported but not invariant");
    }
  }
  return st;
}

}  // namespace qpascal::probe
