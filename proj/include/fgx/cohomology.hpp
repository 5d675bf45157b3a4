// Second cohomology with finite trivial coefficients and the Schur
// multiplier computed from it.
//
// A normalized 2-cocycle is determined by its values f(x, t) on edges
// (x in G, t in a generating set T): the cocycle law with third argument
// t expresses every other value recursively, and the coboundary identity
// d(df) = 0 propagates the cocycle law from third arguments in T to all
// of G. The solver works in these edge coordinates throughout: kernel of
// the edge-constraint system modulo the span of coboundaries (and, for
// the multiplier, of connecting-map images of Hom(G, Z_m)).
#pragma once

#include <memory>
#include <vector>

#include "group_table.hpp"
#include "structure.hpp"
#include "zm.hpp"

namespace fgx {

struct AbelianStructure {
  std::vector<long long> invariant_factors;  // ascending divisibility, all > 1

  bool trivial() const { return invariant_factors.empty(); }
  long long order() const {
    long long o = 1;
    for (long long d : invariant_factors) o *= d;
    return o;
  }
  bool operator==(const AbelianStructure& o) const {
    return invariant_factors == o.invariant_factors;
  }
};

struct CocycleTable {
  int n = 0;
  uint32_t m = 0;
  std::vector<uint32_t> v;  // row-major n*n values in [0, m)

  uint32_t at(int x, int y) const { return v[size_t(x) * n + y]; }
  uint32_t& at(int x, int y) { return v[size_t(x) * n + y]; }
};

// Normalization f(1,.) = f(.,1) = 0 plus the cocycle identity
// f(x,y) + f(xy,z) == f(y,z) + f(x,yz) over all triples.
inline bool is_normalized_cocycle(const GroupTable& g, const CocycleTable& f) {
  int n = g.order;
  if (f.n != n || f.m < 2 || f.v.size() != size_t(n) * n) return false;
  for (uint32_t x : f.v)
    if (x >= f.m) return false;
  for (int x = 0; x < n; ++x)
    if (f.at(g.identity, x) != 0 || f.at(x, g.identity) != 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = g.mul(x, y);
      for (int z = 0; z < n; ++z) {
        uint64_t lhs = f.at(x, y) + f.at(xy, z);
        uint64_t rhs = f.at(y, z) + f.at(x, g.mul(y, z));
        if (lhs % f.m != rhs % f.m) return false;
      }
    }
  return true;
}

struct H2Options {
  int size_cap = 100;
  bool force = false;
};

struct H2Result {
  AbelianStructure structure;
  std::vector<CocycleTable> generators;  // one representative per invariant factor
  long long hom_count = 0;               // |Hom(G, Z_m)|
};

// All homomorphisms G -> Z_m as value vectors, enumerated through a basis
// of the abelianization.
inline std::vector<std::vector<uint32_t>> homs_to_zm(const GroupTable& g, uint32_t m) {
  Subgroup der = derived_subgroup(g);
  QuotientResult q = quotient(g, der);
  const GroupTable& a = *q.group;
  auto basis = abelian_basis(a);
  int r = int(basis.size());
  // coordinates of every element of the abelianization in the basis
  std::vector<std::vector<int>> coords(a.order);
  {
    std::vector<char> seen(a.order, 0);
    std::vector<int> t(r, 0);
    bool done = false;
    while (!done) {
      int e = a.identity;
      for (int i = 0; i < r; ++i) e = a.mul(e, a.pow(basis[i].first, t[i]));
      if (seen[e]) fail("abelian basis is not a direct sum; internal error");
      seen[e] = 1;
      coords[e] = t;
      done = true;
      for (int i = r - 1; i >= 0; --i) {
        if (++t[i] < basis[i].second) { done = false; break; }
        t[i] = 0;
      }
    }
    for (int e = 0; e < a.order; ++e)
      if (!seen[e]) fail("abelian basis does not span; internal error");
  }
  std::vector<uint32_t> step(r), count(r);
  for (int i = 0; i < r; ++i) {
    uint32_t gi = uint32_t(gcd_ll(basis[i].second, m));
    step[i] = m / gi;
    count[i] = gi;
  }
  std::vector<std::vector<uint32_t>> homs;
  std::vector<uint32_t> choice(r, 0);
  bool done = false;
  while (!done) {
    std::vector<uint32_t> chi(g.order);
    for (int x = 0; x < g.order; ++x) {
      uint64_t v = 0;
      const std::vector<int>& c = coords[q.projection.apply(x)];
      for (int i = 0; i < r; ++i) v += uint64_t(c[i]) * choice[i] * step[i];
      chi[x] = uint32_t(v % m);
    }
    homs.push_back(std::move(chi));
    done = true;
    for (int i = r - 1; i >= 0; --i) {
      if (++choice[i] < count[i]) { done = false; break; }
      choice[i] = 0;
    }
    if (r == 0) break;
  }
  return homs;
}

class CocycleSolver {
 public:
  CocycleSolver(const GroupTable& g, uint32_t m, H2Options opt = {})
      : g_(g), m_(m), constraints_(std::max<uint32_t>(m, 2), 1) {
    if (m < 2) fail("coefficient modulus must be at least 2");
    if (g.order > opt.size_cap && !opt.force)
      throw size_cap_error("group order " + std::to_string(g.order) + " exceeds the cohomology size cap " +
                           std::to_string(opt.size_cap) + " (pass force to override)");
    if (g.order == 1) {
      nvars_ = 0;
      constraints_ = ZmBasis(m_, 0);
      kernel_ = ZmBasis(m_, 0);
      return;
    }
    gens_ = generating_set(g_);
    int t = int(gens_.size());
    vx_.assign(g_.order, -1);
    int k = 0;
    for (int x = 0; x < g_.order; ++x)
      if (x != g_.identity) vx_[x] = k++;
    nvars_ = (g_.order - 1) * t;

    build_expressions();
    constraints_ = ZmBasis(m_, nvars_);
    ZmVec row(nvars_);
    for (int x = 0; x < g_.order; ++x) {
      if (x == g_.identity) continue;
      for (int y = 0; y < g_.order; ++y) {
        if (y == g_.identity) continue;
        for (int ti = 0; ti < t; ++ti) {
          // f(x,y) + f(xy,t) - f(y,t) - f(x,yt) == 0
          std::fill(row.begin(), row.end(), 0);
          accumulate(row, x, y, 1);
          add_edge(row, g_.mul(x, y), ti, 1);
          add_edge(row, y, ti, m_ - 1);
          accumulate(row, x, g_.mul(y, gens_[ti]), m_ - 1);
          if (zm::lead(row) >= 0) constraints_.insert(row);
        }
      }
    }
    kernel_ = ZmBasis(m_, nvars_);
    for (ZmVec& kr : zm_kernel(constraints_)) kernel_.insert(std::move(kr));
  }

  uint32_t modulus() const { return m_; }
  int edge_vars() const { return nvars_; }
  const std::vector<int>& generators() const { return gens_; }

  // Edge vectors of the basis coboundaries (one per non-identity element).
  std::vector<ZmVec> coboundary_edges() const {
    std::vector<ZmVec> out;
    for (int e = 0; e < g_.order; ++e) {
      if (e == g_.identity) continue;
      ZmVec v(nvars_, 0);
      for (int x = 0; x < g_.order; ++x) {
        if (x == g_.identity) continue;
        for (int ti = 0; ti < int(gens_.size()); ++ti) {
          uint32_t val = 0;
          if (x == e) val += 1;
          if (gens_[ti] == e) val += 1;
          if (g_.mul(x, gens_[ti]) == e) val += m_ - 1;
          v[var(x, ti)] = uint32_t((v[var(x, ti)] + val) % m_);
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  // Connecting-map image of a homomorphism: lift values to [0, m) and
  // record the carry of chi(x) + chi(t) - chi(xt) divided by m.
  ZmVec bockstein_edge(const std::vector<uint32_t>& chi) const {
    ZmVec v(nvars_, 0);
    for (int x = 0; x < g_.order; ++x) {
      if (x == g_.identity) continue;
      for (int ti = 0; ti < int(gens_.size()); ++ti) {
        long long w = (long long)chi[x] + chi[gens_[ti]] - chi[g_.mul(x, gens_[ti])];
        if (w % m_ != 0) fail("bockstein input is not a homomorphism");
        v[var(x, ti)] = uint32_t(mod_floor(w / (long long)m_, m_));
      }
    }
    return v;
  }

  CocycleTable expand(const ZmVec& edge) const {
    CocycleTable f;
    f.n = g_.order;
    f.m = m_;
    f.v.assign(size_t(g_.order) * g_.order, 0);
    for (int x = 0; x < g_.order; ++x)
      for (int y = 0; y < g_.order; ++y) {
        const ZmVec& ex = expr_[size_t(x) * g_.order + y];
        uint64_t acc = 0;
        for (int i = 0; i < nvars_; ++i) acc += uint64_t(ex[i]) * edge[i];
        f.at(x, y) = uint32_t(acc % m_);
      }
    return f;
  }

  // Invariant factors and generator edge vectors of kernel / <subgens>.
  // The cocycle module is presented on the Howell basis rows k_i: the
  // relation module is generated by the annihilator syzygies
  // (m/p_i) e_i - lambda^(i) together with the reduction coefficients of
  // each subgroup generator, and it contains m Z^r, so the whole quotient
  // is computed in Z/m arithmetic.
  std::pair<std::vector<long long>, std::vector<ZmVec>> quotient_by(
      const std::vector<ZmVec>& subgens) const {
    if (nvars_ == 0) return {{}, {}};
    int r = kernel_.rank();
    std::vector<ZmVec> rel;
    for (int i = 0; i < r; ++i) {
      uint32_t p = kernel_.pivot_value(i);
      ZmVec ann(nvars_, 0);
      zm::add_mul(ann, kernel_.rows()[i], uint32_t((m_ / p) % m_), m_);
      ZmVec lambda;
      ZmVec residual = kernel_.reduce(std::move(ann), &lambda);
      if (zm::lead(residual) >= 0) fail("annihilator escapes the kernel span; internal error");
      ZmVec row(r, 0);
      for (int j = 0; j < r; ++j) row[j] = zm::norm(-(long long)lambda[j], m_);
      row[i] = uint32_t((row[i] + m_ / p) % m_);
      if (zm::lead(row) >= 0) rel.push_back(std::move(row));
    }
    for (const ZmVec& s : subgens) {
      ZmVec mu;
      ZmVec residual = kernel_.reduce(s, &mu);
      if (zm::lead(residual) >= 0) fail("subgroup generator is not a cocycle; internal error");
      if (zm::lead(mu) >= 0) rel.push_back(std::move(mu));
    }
    ZmDiagonal d = zm_diagonalize(rel, m_, r);
    std::vector<long long> inv;
    std::vector<ZmVec> gens;
    for (int c = 0; c < r; ++c) {
      if (d.invariants[c] <= 1) continue;
      inv.push_back(d.invariants[c]);
      // coordinate row over the kernel basis -> ambient edge vector
      ZmVec amb(nvars_, 0);
      for (int j = 0; j < r; ++j)
        if (d.coordinate_rows[c][j]) zm::add_mul(amb, kernel_.rows()[j], d.coordinate_rows[c][j], m_);
      gens.push_back(std::move(amb));
    }
    // the diagonalization enforces a divisor chain, so numeric order is
    // divisibility order
    std::sort(inv.begin(), inv.end());
    return {inv, gens};
  }

  H2Result h2() const {
    auto [inv, gens] = quotient_by(coboundary_edges());
    H2Result r;
    r.structure.invariant_factors = inv;
    for (const ZmVec& e : gens) {
      CocycleTable f = expand(e);
      if (!is_normalized_cocycle(g_, f))
        fail("generated cocycle fails the full cocycle identity; internal error");
      r.generators.push_back(std::move(f));
    }
    r.hom_count = (long long)homs_to_zm(g_, m_).size();
    return r;
  }

  AbelianStructure multiplier() const {
    std::vector<ZmVec> sub = coboundary_edges();
    for (const auto& chi : homs_to_zm(g_, m_)) sub.push_back(bockstein_edge(chi));
    auto [inv, gens] = quotient_by(sub);
    (void)gens;
    return {inv};
  }

  // Edge vectors of one representative per cohomology class (all of H2).
  std::vector<ZmVec> class_edge_vectors() const {
    auto [inv, gens] = quotient_by(coboundary_edges());
    std::vector<ZmVec> reps{ZmVec(size_t(nvars_), 0)};
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<ZmVec> next;
      for (long long c = 0; c < inv[i]; ++c)
        for (const ZmVec& r : reps) {
          ZmVec s = r;
          zm::add_mul(s, gens[i], uint32_t(c % m_), m_);
          next.push_back(std::move(s));
        }
      reps = std::move(next);
    }
    return reps;
  }

 private:
  int var(int x, int ti) const { return vx_[x] * int(gens_.size()) + ti; }

  void add_edge(ZmVec& row, int x, int ti, uint32_t coef) const {
    if (x == g_.identity) return;  // f(1, t) is pinned to zero
    row[var(x, ti)] = uint32_t((row[var(x, ti)] + coef) % m_);
  }

  void accumulate(ZmVec& row, int x, int y, uint32_t coef) const {
    const ZmVec& e = expr_[size_t(x) * g_.order + y];
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) row[i] = uint32_t((row[i] + uint64_t(coef) * e[i]) % m_);
  }

  // expr_[x][w] expresses f(x, w) as a combination of edge variables,
  // built along a breadth-first decomposition w = v * t.
  void build_expressions() {
    int n = g_.order;
    int t = int(gens_.size());
    expr_.assign(size_t(n) * n, ZmVec());
    for (int x = 0; x < n; ++x) {
      expr_[size_t(x) * n + g_.identity].assign(nvars_, 0);
      for (int ti = 0; ti < t; ++ti) {
        ZmVec& e = expr_[size_t(x) * n + gens_[ti]];
        if (e.empty()) {
          e.assign(nvars_, 0);
          if (x != g_.identity) e[var(x, ti)] = 1;
        }
      }
    }
    // BFS over second arguments
    std::vector<int> parent(n, -1), via(n, -1), order{g_.identity};
    std::vector<char> seen(n, 0);
    seen[g_.identity] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
      int v = order[h];
      for (int ti = 0; ti < t; ++ti) {
        int w = g_.mul(v, gens_[ti]);
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          via[w] = ti;
          order.push_back(w);
        }
      }
    }
    if (order.size() != size_t(n)) fail("generating set does not generate; internal error");
    for (int w : order) {
      if (w == g_.identity) continue;
      int v = parent[w], ti = via[w];
      if (v == g_.identity) continue;  // w is a generator; expression already set
      for (int x = 0; x < n; ++x) {
        ZmVec& e = expr_[size_t(x) * n + w];
        if (!e.empty()) continue;
        // f(x, v t) = f(x, v) + f(xv, t) - f(v, t)
        e = expr_[size_t(x) * n + v];
        add_edge(e, g_.mul(x, v), ti, 1);
        add_edge(e, v, ti, m_ - 1);
      }
    }
  }

  const GroupTable& g_;
  uint32_t m_;
  std::vector<int> gens_;
  int nvars_ = 0;
  std::vector<int> vx_;
  std::vector<ZmVec> expr_;
  ZmBasis constraints_;
  ZmBasis kernel_{2, 0};
};

inline H2Result h2_trivial_coefficients(const GroupTable& g, long long m, H2Options opt = {}) {
  if (m < 2) fail("coefficient modulus must be at least 2");
  CocycleSolver s(g, uint32_t(m), opt);
  return s.h2();
}

// Schur multiplier via H^2(G, Z_m) modulo connecting-map images. The
// default m = |G| is always a valid choice; overrides must satisfy
// exp(G^ab) | m and exp(M(G)) | m.
inline AbelianStructure schur_multiplier(const GroupTable& g, long long m = 0, H2Options opt = {}) {
  if (g.order == 1) return {};
  if (m == 0) m = g.order;
  if (m < 2) fail("coefficient modulus must be at least 2");
  Subgroup der = derived_subgroup(g);
  QuotientResult q = quotient(g, der);
  long long eab = exponent(*q.group);
  if (m % eab != 0)
    fail("coefficient override " + std::to_string(m) + " is not divisible by the abelianization exponent " +
         std::to_string(eab));
  CocycleSolver s(g, uint32_t(m), opt);
  return s.multiplier();
}

struct CentralExtensionResult {
  std::shared_ptr<const GroupTable> ext;
  Homomorphism projection;  // *ext -> base group
  Subgroup central_kernel;  // the embedded Z_m inside *ext
};

// Group on Z_m x G with (a1,g1)(a2,g2) = (a1+a2+f(g1,g2), g1 g2).
// The cocycle is fully validated before construction.
inline CentralExtensionResult extension_from_cocycle(const GroupTable& g, uint32_t m,
                                                     const CocycleTable& f) {
  if (!is_normalized_cocycle(g, f)) fail("cocycle condition violated; extension refused");
  int n = g.order;
  std::vector<std::string> labels(size_t(m) * n);
  for (uint32_t a = 0; a < m; ++a)
    for (int x = 0; x < n; ++x) labels[size_t(a) * n + x] = std::to_string(a) + "|" + g.label(x);
  GroupTable ext = make_group(int(m) * n,
                              [&](int u, int v) {
                                int a1 = u / n, x1 = u % n, a2 = v / n, x2 = v % n;
                                int a = int((uint32_t(a1) + a2 + f.at(x1, x2)) % m);
                                return a * n + g.mul(x1, x2);
                              },
                              std::move(labels));
  CentralExtensionResult r;
  r.ext = std::make_shared<GroupTable>(std::move(ext));
  r.projection.source = r.ext.get();
  r.projection.target = &g;
  r.projection.images.resize(r.ext->order);
  for (int u = 0; u < r.ext->order; ++u) r.projection.images[u] = u % n;
  std::vector<int> kern;
  for (uint32_t a = 0; a < m; ++a) kern.push_back(int(a) * n + g.identity);
  r.central_kernel = make_subgroup(*r.ext, std::move(kern));
  return r;
}

}  // namespace fgx
