#include "kdet/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "kdet/counting.hpp"
#include "kdet/error.hpp"

namespace kdet {
namespace {

using Vec = std::vector<CheckedInt>;
using Mask = std::uint64_t;

CheckedInt det(Matrix<CheckedInt> m) { return bareiss_determinant(std::move(m)); }

// Pivot columns of the row space, by fraction-free elimination; every entry
// stays a minor of the input so the divisions are exact.
std::vector<std::size_t> pivot_columns(Matrix<CheckedInt> rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  CheckedInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

// Calls f on every k-subset of items, in lexicographic order.
template <class F>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t k, F&& f) {
  if (k > items.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[pick[i]];
    f(chosen);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

class PullingTriangulator {
 public:
  explicit PullingTriangulator(std::vector<Vec> points) : pts_(std::move(points)) {}

  std::vector<Mask> triangulate(Mask face) {
    if (const auto it = memo_.find(face); it != memo_.end()) return it->second;
    const auto idx = members(face);
    const auto local = affine_pivots(idx);
    std::vector<Mask> out;
    if (idx.size() == local.size() + 1) {
      out.push_back(face);
    } else {
      const Mask apex = Mask{1} << idx.front();
      for (Mask facet : facets(idx, local)) {
        if (facet & apex) continue;
        for (Mask s : triangulate(facet)) out.push_back(s | apex);
      }
    }
    memo_.emplace(face, out);
    return out;
  }

 private:
  std::vector<std::size_t> affine_pivots(const std::vector<std::size_t>& idx) const {
    Matrix<CheckedInt> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      Vec row(pts_[0].size());
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts_[idx[i]][j] - pts_[idx[0]][j];
      diffs.push_back(std::move(row));
    }
    return pivot_columns(std::move(diffs));
  }

  // Facets of conv(idx) inside its k-dimensional affine hull, as vertex masks.
  std::set<Mask> facets(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& local) const {
    const std::size_t k = local.size();
    auto coords = [&](std::size_t q) {
      Vec y(k);
      for (std::size_t j = 0; j < k; ++j) y[j] = pts_[q][local[j]];
      return y;
    };
    std::vector<Vec> y;
    for (auto q : idx) y.push_back(coords(q));

    std::set<Mask> found;
    std::vector<std::size_t> positions(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) positions[i] = i;
    for_each_subset(positions, k, [&](const std::vector<std::size_t>& t) {
      // Normal of the hyperplane through the chosen points: cofactors of the
      // last row of [y(t_j) - y(t_0); w].
      Matrix<CheckedInt> spans;
      for (std::size_t j = 1; j < k; ++j) {
        Vec row(k);
        for (std::size_t c = 0; c < k; ++c) row[c] = y[t[j]][c] - y[t[0]][c];
        spans.push_back(std::move(row));
      }
      Vec normal(k);
      bool nonzero = false;
      for (std::size_t c = 0; c < k; ++c) {
        Matrix<CheckedInt> minor;
        for (const auto& row : spans) {
          Vec r;
          for (std::size_t cc = 0; cc < k; ++cc) {
            if (cc != c) r.push_back(row[cc]);
          }
          minor.push_back(std::move(r));
        }
        const CheckedInt m = det(std::move(minor));
        normal[c] = ((k - 1 + c) % 2 == 0) ? m : -m;
        nonzero = nonzero || m != 0;
      }
      if (!nonzero) return;
      bool pos = false, neg = false;
      Mask on = 0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        CheckedInt s = 0;
        for (std::size_t c = 0; c < k; ++c) s += normal[c] * (y[i][c] - y[t[0]][c]);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (s == 0) on |= Mask{1} << idx[i];
      }
      if (!(pos && neg)) found.insert(on);
    });
    return found;
  }

  std::vector<Vec> pts_;
  std::map<Mask, std::vector<Mask>> memo_;
};

Vec chart_point(const RootPolytope& p, const LatticePoint& x) {
  if (x.size() != p.ambient_dimension()) throw std::invalid_argument("point has the wrong ambient dimension");
  return p.chart.project(x);
}

CheckedInt simplex_det(const std::vector<Vec>& q) {
  Matrix<CheckedInt> m;
  for (std::size_t i = 1; i < q.size(); ++i) {
    Vec row(q[i].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = q[i][j] - q[0][j];
    m.push_back(std::move(row));
  }
  return det(std::move(m));
}

// Rows h_i with h_i · (x, 1) = det(L) * lambda_i(x) * sign(det L), where
// lambda are barycentric coordinates; nonnegative exactly on the simplex.
Matrix<CheckedInt> barycentric_rows(const std::vector<Vec>& q) {
  const std::size_t n = q.size();  // d + 1
  Matrix<CheckedInt> lifted(n, Vec(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 0; r + 1 < n; ++r) lifted[r][col] = q[col][r];
    lifted[n - 1][col] = 1;
  }
  const CheckedInt total = det(lifted);
  if (total == 0) throw Error(ErrorCode::DegenerateSimplex, "simplex is not full-dimensional");
  Matrix<CheckedInt> rows(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      Matrix<CheckedInt> minor;
      for (std::size_t rr = 0; rr < n; ++rr) {
        if (rr == r) continue;
        Vec row;
        for (std::size_t cc = 0; cc < n; ++cc) {
          if (cc != i) row.push_back(lifted[rr][cc]);
        }
        minor.push_back(std::move(row));
      }
      CheckedInt cof = det(std::move(minor));
      if ((i + r) % 2 == 1) cof = -cof;
      rows[i][r] = total > 0 ? cof : -cof;
    }
  }
  return rows;
}

}  // namespace

std::vector<CheckedInt> LatticeChart::project(const LatticePoint& x) const {
  Vec out;
  out.reserve(pivots.size());
  for (auto j : pivots) out.emplace_back(x[j] - origin[j]);
  return out;
}

RootPolytope root_polytope(const BipartiteGraph& g) {
  if (g.edges.empty()) throw std::invalid_argument("root polytope of a graph without edges");
  RootPolytope p;
  p.graph = g;
  for (const auto& [e, v] : g.edges) {
    LatticePoint x(g.vertex_count(), 0);
    x[e] = 1;
    x[g.e_count + v] = 1;
    p.vertices.push_back(std::move(x));
  }
  Matrix<Rational> diffs;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    std::vector<Rational> row(g.vertex_count());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = p.vertices[i][j] - p.vertices[0][j];
    diffs.push_back(std::move(row));
  }
  p.chart.pivots = reduce_row_echelon(diffs);
  for (const auto& row : diffs) {
    for (const auto& x : row) {
      if (denominator(x) != 1) {
        throw Error(ErrorCode::NonUnimodularChart, "vertex differences have no integral echelon basis");
      }
    }
  }
  p.chart.origin = p.vertices.front();
  p.dim = p.chart.pivots.size();
  return p;
}

Simplex tree_simplex(const RootPolytope& p, std::span<const std::size_t> tree_edges) {
  Simplex s;
  s.edges.assign(tree_edges.begin(), tree_edges.end());
  std::sort(s.edges.begin(), s.edges.end());
  if (s.edges.size() != p.dim + 1) {
    throw Error(ErrorCode::DegenerateSimplex, std::to_string(s.edges.size()) + " points cannot span a " +
                                                  std::to_string(p.dim) + "-simplex");
  }
  std::vector<Vec> q;
  for (auto e : s.edges) {
    if (e >= p.vertices.size()) throw std::out_of_range("edge index out of range");
    s.vertices.push_back(p.vertices[e]);
    q.push_back(chart_point(p, p.vertices[e]));
  }
  const CheckedInt d = simplex_det(q);
  if (d == 0) throw Error(ErrorCode::DegenerateSimplex, "edge points are affinely dependent");
  s.normalized_volume = abs(d).value();
  return s;
}

Triangulation arborescence_triangulation(const RootPolytope& p, const Universe& u, const TaitGraph& g,
                                         const DirectedUniverse& du, VertexId root, const GuardLimits& guard) {
  const DualEdgeMap dual = dual_edge_map(u, g, du);
  Triangulation tri;
  for (const auto& arb : arborescence_enumerate(du.digraph(), root, guard)) {
    std::vector<bool> in_arb(du.arcs.size(), false);
    for (auto a : arb.arcs) in_arb[a] = true;
    std::vector<std::size_t> tree;
    for (ArcId a = 0; a < du.arcs.size(); ++a) {
      if (!in_arb[a]) tree.push_back(dual.arc_to_tait[a]);
    }
    tri.simplices.push_back(tree_simplex(p, tree));
  }
  return tri;
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const RootPolytope& p, const GuardLimits& guard) {
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const bool repeat = std::any_of(distinct.begin(), distinct.end(),
                                    [&](std::size_t j) { return p.vertices[j] == p.vertices[i]; });
    if (!repeat) distinct.push_back(i);
  }
  if (distinct.size() > guard.max_polytope_points || p.dim > guard.max_polytope_dim || distinct.size() > 64) {
    throw Error(ErrorCode::TooLarge, std::to_string(distinct.size()) + " points in dimension " +
                                         std::to_string(p.dim) + " exceed the polytope guard");
  }
  std::vector<Vec> pts;
  for (auto i : distinct) pts.push_back(chart_point(p, p.vertices[i]));
  PullingTriangulator tr(std::move(pts));
  const Mask all = distinct.size() == 64 ? ~Mask{0} : (Mask{1} << distinct.size()) - 1;
  std::vector<std::vector<std::size_t>> out;
  for (Mask s : tr.triangulate(all)) {
    std::vector<std::size_t> simplex;
    for (auto k : members(s)) simplex.push_back(distinct[k]);
    out.push_back(std::move(simplex));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt normalized_volume(const RootPolytope& p, const GuardLimits& guard) {
  BigInt total = 0;
  for (const auto& simplex : pulling_triangulation(p, guard)) {
    std::vector<Vec> q;
    for (auto i : simplex) q.push_back(chart_point(p, p.vertices[i]));
    total += abs(simplex_det(q)).value();
  }
  return total;
}

bool intersect_properly(const RootPolytope& p, std::span<const LatticePoint> a, std::span<const LatticePoint> b) {
  const std::size_t d = p.dim;
  if (a.size() != d + 1 || b.size() != d + 1) {
    throw Error(ErrorCode::DegenerateSimplex, "face check needs two full-dimensional simplices");
  }
  if (d == 0) return true;
  std::vector<Vec> qa, qb;
  for (const auto& x : a) qa.push_back(chart_point(p, x));
  for (const auto& x : b) qb.push_back(chart_point(p, x));
  const auto ha = barycentric_rows(qa);
  const auto hb = barycentric_rows(qb);

  std::vector<std::size_t> a_only;  // barycentric rows of a that must vanish on the intersection
  for (std::size_t i = 0; i < qa.size(); ++i) {
    if (std::find(qb.begin(), qb.end(), qa[i]) == qb.end()) a_only.push_back(i);
  }

  // conv(a) ∩ conv(b) = {x : ha·(x,1) >= 0, hb·(x,1) >= 0} is a bounded
  // polytope; it lies in conv(a ∩ b) iff each of its vertices does. Vertices
  // are the feasible solutions of d independent tight constraints.
  Matrix<CheckedInt> all = ha;
  all.insert(all.end(), hb.begin(), hb.end());
  std::vector<std::size_t> ids(all.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  bool proper = true;
  for_each_subset(ids, d, [&](const std::vector<std::size_t>& tight) {
    if (!proper) return;
    Matrix<CheckedInt> c(d, Vec(d));
    Vec rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t j = 0; j < d; ++j) c[r][j] = all[tight[r]][j];
      rhs[r] = -all[tight[r]][d];
    }
    const CheckedInt den = det(c);
    if (den == 0) return;
    Vec num(d);
    for (std::size_t j = 0; j < d; ++j) {
      auto cj = c;
      for (std::size_t r = 0; r < d; ++r) cj[r][j] = rhs[r];
      num[j] = det(std::move(cj));
    }
    // Evaluate h·(x,1) scaled by den.
    auto eval = [&](const Vec& h) {
      CheckedInt s = h[d] * den;
      for (std::size_t j = 0; j < d; ++j) s += h[j] * num[j];
      return s;
    };
    for (const auto& h : all) {
      const CheckedInt v = eval(h);
      if ((den > 0 && v < 0) || (den < 0 && v > 0)) return;  // infeasible vertex
    }
    for (auto i : a_only) {
      if (eval(ha[i]) != 0) proper = false;
    }
  });
  return proper;
}

TriangulationReport verify_triangulation(const Triangulation& tri, const RootPolytope& p, const GuardLimits& guard) {
  TriangulationReport rep;
  rep.unimodular = true;
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
    const auto& s = tri.simplices[i];
    for (const auto& x : s.vertices) {
      if (std::find(p.vertices.begin(), p.vertices.end(), x) == p.vertices.end()) {
        rep.violations.push_back("simplex " + std::to_string(i) + " has a vertex outside the polytope");
        break;
      }
    }
    BigInt vol = 0;
    if (s.vertices.size() == p.dim + 1) {
      std::vector<Vec> q;
      for (const auto& x : s.vertices) q.push_back(chart_point(p, x));
      vol = abs(simplex_det(q)).value();
    }
    rep.volume_sum += vol;
    if (vol != 1) {
      rep.unimodular = false;
      rep.violations.push_back("simplex " + std::to_string(i) + " has normalized volume " + vol.str());
    }
  }
  try {
    rep.polytope_volume = normalized_volume(p, guard);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  if (rep.polytope_volume && *rep.polytope_volume != rep.volume_sum) {
    rep.violations.push_back("simplex volumes sum to " + rep.volume_sum.str() + " but the polytope has volume " +
                             rep.polytope_volume->str());
  }
  if (rep.polytope_volume && rep.unimodular) {
    bool proper = true;
    for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
      for (std::size_t j = i + 1; j < tri.simplices.size(); ++j) {
        if (!intersect_properly(p, tri.simplices[i].vertices, tri.simplices[j].vertices)) {
          proper = false;
          rep.violations.push_back("simplices " + std::to_string(i) + " and " + std::to_string(j) +
                                   " meet outside a common face");
        }
      }
    }
    rep.proper_intersections = proper;
  }
  return rep;
}

}  // namespace kdet
