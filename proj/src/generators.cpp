#include "wallcross/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace wallcross {

RatVector ProjectionMatrix::column(std::size_t k) const {
  RatVector c;
  c.reserve(rows.size());
  for (const auto& r : rows) c.push_back(r.at(k));
  return c;
}

ProjectionMatrix ProjectionMatrix::parse(const std::string& text) {
  ProjectionMatrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    RatVector r;
    std::stringstream entries(row);
    std::string e;
    while (std::getline(entries, e, ',')) {
      const auto b = e.find_first_not_of(" \t");
      const auto t = e.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty matrix entry");
      r.push_back(parse_rational(e.substr(b, t - b + 1)));
    }
    if (r.empty()) throw std::invalid_argument("empty matrix row");
    if (!m.rows.empty() && r.size() != m.rows.front().size()) {
      throw std::invalid_argument("matrix rows have different lengths");
    }
    m.rows.push_back(std::move(r));
  }
  if (m.rows.empty()) throw std::invalid_argument("empty matrix");
  return m;
}

// ---------------------------------------------------------------- CP^n

WeightedXray cpn_xray(int n, const ProjectionMatrix& pi, const std::vector<std::string>& labels) {
  if (n < 1) throw XrayError("n must be at least 1");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  const std::size_t d = pi.num_rows();
  if (d == 0 || pi.num_cols() != m) {
    throw XrayError("projection matrix must have n+1 = " + std::to_string(m) + " columns");
  }
  if (m > 16) throw XrayError("cpn_xray supports n <= 15");
  if (!labels.empty() && labels.size() != m) throw XrayError("need one label per column");

  std::vector<RatVector> cols;
  for (std::size_t k = 0; k < m; ++k) cols.push_back(pi.column(k));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (cols[a] == cols[b]) throw XrayError("fixed points not isolated: unsupported");
    }
  }

  auto lin_rank = [&](std::uint32_t mask) {
    std::vector<RatVector> diffs;
    std::size_t first = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(mask & (1u << k))) continue;
      if (first == m) {
        first = k;
      } else {
        diffs.push_back(sub(cols[k], cols[first]));
      }
    }
    return rank(diffs, d);
  };
  const std::uint32_t full = (1u << m) - 1;
  if (lin_rank(full) != d) throw XrayError("projected simplex is not full-dimensional");

  std::vector<std::uint32_t> strata;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (mask == full) {
      strata.push_back(mask);
      continue;
    }
    const std::size_t r = lin_rank(mask);
    if (r >= d) continue;
    bool closed = true;
    for (std::size_t j = 0; j < m && closed; ++j) {
      if (mask & (1u << j)) continue;
      if (lin_rank(mask | (1u << j)) == r) closed = false;
    }
    if (closed) strata.push_back(mask);
  }

  auto label = [&](std::size_t k) { return labels.empty() ? std::to_string(k) : labels[k]; };
  auto id_of = [&](std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(mask & (1u << k))) continue;
      s += (first ? "" : ",") + label(k);
      first = false;
    }
    return s + "}";
  };
  auto is_subset = [](std::uint32_t a, std::uint32_t b) { return (a & b) == a && a != b; };

  std::vector<StratumSpec> specs;
  for (auto mask : strata) {
    StratumSpec spec;
    spec.id = id_of(mask);
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1u << k)) spec.points.push_back(cols[k]);
    }
    for (auto other : strata) {
      if (!is_subset(mask, other)) continue;
      const bool covers = std::none_of(strata.begin(), strata.end(), [&](std::uint32_t mid) {
        return is_subset(mask, mid) && is_subset(mid, other);
      });
      if (covers) spec.parents.push_back(id_of(other));
    }
    if (std::popcount(mask) == 1) {
      const auto k = static_cast<std::size_t>(std::countr_zero(mask));
      VertexData vd;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) vd.weights.push_back(sub(cols[j], cols[k]));
      }
      spec.vertex_data = std::move(vd);
    }
    specs.push_back(std::move(spec));
  }
  return WeightedXray(static_cast<int>(d), n, std::move(specs));
}

// ---------------------------------------------------------------- toric

VertexWeights edge_direction_weights(const Polytope& p) {
  VertexWeights out;
  for (const auto& v : p.vertices()) out[v];
  if (p.dim() == 0) return out;
  for (const auto& e : faces(p, 1)) {
    const auto& a = e.vertices()[0];
    const auto& b = e.vertices()[1];
    out[a].push_back(sub(b, a));
    out[b].push_back(sub(a, b));
  }
  for (auto& [v, ws] : out) std::sort(ws.begin(), ws.end(), LexLess{});
  return out;
}

WeightedXray delzant_xray(const Polytope& p, const VertexWeights& weights) {
  const std::size_t d = p.ambient_dim();
  if (p.dim() != d || d == 0) throw XrayError("Delzant X-ray needs a full-dimensional polytope");
  const auto edges = faces(p, 1);
  for (const auto& v : p.vertices()) {
    const auto degree = std::count_if(edges.begin(), edges.end(), [&](const Polytope& e) {
      return e.vertices()[0] == v || e.vertices()[1] == v;
    });
    if (static_cast<std::size_t>(degree) != d) {
      throw XrayError("polytope is not simple at vertex " + to_string(v));
    }
  }

  std::vector<std::vector<Polytope>> by_dim(d + 1);
  for (std::size_t k = 0; k <= d; ++k) by_dim[k] = faces(p, k);
  auto id_of = [](std::size_t k, std::size_t i) { return "d" + std::to_string(k) + "_" + std::to_string(i); };

  std::vector<StratumSpec> specs;
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) {
      const Polytope& face = by_dim[k][i];
      StratumSpec spec;
      spec.id = id_of(k, i);
      spec.points = face.vertices();
      if (k < d) {
        for (std::size_t j = 0; j < by_dim[k + 1].size(); ++j) {
          if (by_dim[k + 1][j].contains(face)) spec.parents.push_back(id_of(k + 1, j));
        }
      }
      if (k == 0) {
        auto it = weights.find(face.vertices().front());
        if (it == weights.end()) throw XrayError("no weights given for vertex " + to_string(face.vertices().front()));
        VertexData vd;
        vd.weights = it->second;
        spec.vertex_data = std::move(vd);
      }
      specs.push_back(std::move(spec));
    }
  }
  return WeightedXray(static_cast<int>(d), static_cast<int>(d), std::move(specs));
}

Polytope standard_simplex(std::size_t d) {
  std::vector<RatVector> pts{zero_vector(d)};
  for (std::size_t i = 0; i < d; ++i) {
    RatVector e = zero_vector(d);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return Polytope::hull(pts);
}

Polytope unit_cube(std::size_t d) {
  if (d > 16) throw XrayError("cube dimension too large");
  std::vector<RatVector> pts;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    RatVector v = zero_vector(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1u;
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

namespace presets {

WeightedXray cp3() { return cpn_xray(3, ProjectionMatrix::parse(kCp3Matrix)); }

WeightedXray generic_cp4() { return cpn_xray(4, ProjectionMatrix::parse(kGenericCp4Matrix)); }

WeightedXray nongeneric_cp4() {
  return cpn_xray(4, ProjectionMatrix::parse(kNongenericCp4Matrix), {"p", "t", "q", "r", "s"});
}

}  // namespace presets

}  // namespace wallcross
