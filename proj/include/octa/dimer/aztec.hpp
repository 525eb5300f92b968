#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "octa/exactmath/mpoly.hpp"
#include "octa/exactmath/rational.hpp"

namespace octa {

using Vertex = std::array<int, 2>;
using FaceCoord = std::pair<int, int>;

enum class FaceClass { inner, corner, end };

inline const char* to_string(FaceClass c) {
  switch (c) {
    case FaceClass::inner: return "inner";
    case FaceClass::corner: return "corner";
    case FaceClass::end: return "end";
  }
  return "?";
}

struct Edge {
  Vertex a;  // lexicographically smaller endpoint
  Vertex b;
  std::vector<std::size_t> faces;  // indices of graph faces bounded by this edge
};

struct Face {
  FaceCoord coord;  // lower-left corner
  FaceClass cls;
  std::vector<std::size_t> edges;
};

/// The Aztec diamond graph A_{i,j,k}. Faces are the unit squares (a,b) with
/// |a-i| + |b-j| <= k-1; edges are the unit edges bounding a face at
/// distance <= k-2.
struct AztecGraph {
  int i = 0, j = 0, k = 0;
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted by endpoints
  std::vector<Face> faces;       // sorted by coordinate

  std::size_t vertex_index(const Vertex& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw std::out_of_range("vertex not in graph");
    return static_cast<std::size_t>(it - vertices.begin());
  }

  std::optional<std::size_t> face_index(FaceCoord f) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), f, [](const Face& a, const FaceCoord& c) { return a.coord < c; });
    if (it == faces.end() || it->coord != f) return std::nullopt;
    return static_cast<std::size_t>(it - faces.begin());
  }
};

inline AztecGraph build_aztec(int i, int j, int k) {
  if (k < 2) throw std::invalid_argument("build_aztec needs k >= 2 (Z_{i,j,1} is t_{i,j} by convention)");
  AztecGraph g{i, j, k, {}, {}, {}};
  auto dist = [&](int a, int b) { return std::abs(a - i) + std::abs(b - j); };
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_ids;
  std::vector<std::pair<Vertex, Vertex>> edge_list;
  for (int a = i - k; a <= i + k; ++a) {
    for (int b = j - k; b <= j + k; ++b) {
      if (dist(a, b) > k - 1) continue;
      g.faces.push_back({{a, b}, FaceClass::inner, {}});
      if (dist(a, b) > k - 2) continue;
      const Vertex ll{a, b}, lr{a + 1, b}, ul{a, b + 1}, ur{a + 1, b + 1};
      for (auto e : {std::pair{ll, lr}, std::pair{ul, ur}, std::pair{ll, ul}, std::pair{lr, ur}}) {
        if (edge_ids.emplace(e, 0).second) edge_list.push_back(e);
      }
    }
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (std::size_t n = 0; n < edge_list.size(); ++n) {
    g.edges.push_back({edge_list[n].first, edge_list[n].second, {}});
    g.vertices.push_back(edge_list[n].first);
    g.vertices.push_back(edge_list[n].second);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  for (std::size_t n = 0; n < g.edges.size(); ++n) {
    const auto& e = g.edges[n];
    // faces on either side of the edge
    std::array<FaceCoord, 2> sides = e.a[1] == e.b[1] ? std::array<FaceCoord, 2>{FaceCoord{e.a[0], e.a[1]}, FaceCoord{e.a[0], e.a[1] - 1}}
                                                      : std::array<FaceCoord, 2>{FaceCoord{e.a[0], e.a[1]}, FaceCoord{e.a[0] - 1, e.a[1]}};
    for (const auto& f : sides) {
      if (auto fi = g.face_index(f)) {
        g.edges[n].faces.push_back(*fi);
        g.faces[*fi].edges.push_back(n);
      }
    }
  }
  for (auto& f : g.faces) {
    switch (f.edges.size()) {
      case 4: f.cls = FaceClass::inner; break;
      case 2: f.cls = FaceClass::corner; break;
      case 1: f.cls = FaceClass::end; break;
      default: throw std::logic_error("unexpected face adjacency in Aztec graph");
    }
  }
  return g;
}

/// Edge ids of a perfect matching, ascending.
using Matching = std::vector<std::size_t>;

inline constexpr int kEnumerationMaxK = 6;

/// Calls visit(m) once per perfect matching, in depth-first order: the lowest
/// uncovered vertex is matched along its incident edges in increasing id
/// order.
inline void enumerate_matchings(const AztecGraph& g, const std::function<void(const Matching&)>& visit) {
  if (g.k > kEnumerationMaxK) throw std::length_error("matching enumeration is limited to k <= 6");
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(nv);  // (edge, other vertex)
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t a = g.vertex_index(g.edges[e].a), b = g.vertex_index(g.edges[e].b);
    incident[a].push_back({e, b});
    incident[b].push_back({e, a});
  }
  for (auto& inc : incident) std::sort(inc.begin(), inc.end());
  std::vector<char> covered(nv, 0);
  Matching current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    while (from < nv && covered[from]) ++from;
    if (from == nv) {
      Matching sorted = current;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    covered[from] = 1;
    for (const auto& [e, other] : incident[from]) {
      if (covered[other]) continue;
      covered[other] = 1;
      current.push_back(e);
      rec(from + 1);
      current.pop_back();
      covered[other] = 0;
    }
    covered[from] = 0;
  };
  rec(0);
}

/// All perfect matchings, sorted lexicographically by their ascending edge ids.
inline std::vector<Matching> all_matchings(const AztecGraph& g) {
  std::vector<Matching> out;
  enumerate_matchings(g, [&](const Matching& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

/// D_f for every face: number of matched edges on its boundary.
inline std::vector<int> dimer_counts(const AztecGraph& g, const Matching& m) {
  std::vector<int> d(g.faces.size(), 0);
  for (auto e : m) {
    for (auto f : g.edges[e].faces) ++d[f];
  }
  return d;
}

using FaceWeights = std::function<Rational(int, int)>;

struct PartitionResult {
  Rational Z;
  std::size_t matchings = 0;
};

/// Z = sum over matchings of prod_faces t_f^{1 - D_f}.
inline PartitionResult partition_function(const AztecGraph& g, const FaceWeights& t) {
  std::vector<std::array<Rational, 3>> pw(g.faces.size());  // t^{1-D} for D = 0, 1, 2
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    Rational v = t(g.faces[f].coord.first, g.faces[f].coord.second);
    if (v <= 0) throw std::domain_error("face weights must be positive");
    pw[f] = {v, Rational(1), Rational(1) / v};
  }
  PartitionResult r{0, 0};
  enumerate_matchings(g, [&](const Matching& m) {
    auto d = dimer_counts(g, m);
    Rational w = 1;
    for (std::size_t f = 0; f < d.size(); ++f) {
      if (d[f] != 1) w *= pw[f][static_cast<std::size_t>(d[f])];
    }
    r.Z += w;
    ++r.matchings;
  });
  return r;
}

/// Z_{i,j,k} including the k = 1 convention Z = t_{i,j}.
inline Rational partition_function_at(int i, int j, int k, const FaceWeights& t) {
  if (k == 1) return t(i, j);
  return partition_function(build_aztec(i, j, k), t).Z;
}

/// <1 - D_f> as the matching average.
inline Rational density_oracle(const AztecGraph& g, const FaceWeights& t, FaceCoord face) {
  auto target = g.face_index(face);
  if (!target) throw std::out_of_range("face outside the Aztec graph");
  std::vector<std::array<Rational, 3>> pw(g.faces.size());
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    Rational v = t(g.faces[f].coord.first, g.faces[f].coord.second);
    pw[f] = {v, Rational(1), Rational(1) / v};
  }
  Rational Z = 0, acc = 0;
  enumerate_matchings(g, [&](const Matching& m) {
    auto d = dimer_counts(g, m);
    Rational w = 1;
    for (std::size_t f = 0; f < d.size(); ++f) {
      if (d[f] != 1) w *= pw[f][static_cast<std::size_t>(d[f])];
    }
    Z += w;
    acc += w * (1 - d[*target]);
  });
  return acc / Z;
}

/// t d/dt log Z at the face, with Z built as a polynomial in the face weight:
/// t Z = P(t) with deg P <= 2, so t d/dt log Z = (t P'(t) - P(t)) / P(t).
inline Rational density_by_log_derivative(const AztecGraph& g, const FaceWeights& t, FaceCoord face) {
  auto target = g.face_index(face);
  if (!target) throw std::out_of_range("face outside the Aztec graph");
  const std::vector<std::string> tv{"t"};
  std::array<Rational, 3> by_d{0, 0, 0};  // other-face weight sums grouped by D_target
  std::vector<Rational> val(g.faces.size());
  for (std::size_t f = 0; f < g.faces.size(); ++f) val[f] = t(g.faces[f].coord.first, g.faces[f].coord.second);
  enumerate_matchings(g, [&](const Matching& m) {
    auto d = dimer_counts(g, m);
    Rational w = 1;
    for (std::size_t f = 0; f < d.size(); ++f) {
      if (f != *target) w *= rational_pow(val[f], 1 - d[f]);
    }
    by_d[static_cast<std::size_t>(d[*target])] += w;
  });
  // t * t^{1-D} = t^{2-D}
  MPoly P(tv);
  for (int D = 0; D <= 2; ++D) P.add_term({2 - D}, by_d[static_cast<std::size_t>(D)]);
  MPoly num = MPoly::variable(tv, "t") * P.derivative("t") - P;
  const std::vector<Rational> at{val[*target]};
  return num.evaluate(at) / P.evaluate(at);
}

inline nlohmann::ordered_json matching_to_json(const AztecGraph& g, const Matching& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto e : m) out.push_back({{g.edges[e].a[0], g.edges[e].a[1]}, {g.edges[e].b[0], g.edges[e].b[1]}});
  return out;
}

inline nlohmann::ordered_json partition_report(const AztecGraph& g, const PartitionResult& r) {
  nlohmann::ordered_json out;
  out["Z"] = to_fraction_string(r.Z);
  out["i"] = g.i;
  out["j"] = g.j;
  out["k"] = g.k;
  out["matchings"] = r.matchings;
  return out;
}

}  // namespace octa
