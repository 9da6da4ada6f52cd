#include "wallcross/xray.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

namespace wallcross {

bool VertexData::isolated() const {
  return std::none_of(weights.begin(), weights.end(), [](const RatVector& w) { return is_zero(w); });
}

WeightedXray::WeightedXray(int torus_rank, int half_dim, std::vector<StratumSpec> specs)
    : torus_rank_(torus_rank), half_dim_(half_dim) {
  if (torus_rank < 1) throw XrayError("torus rank must be at least 1");
  if (half_dim < 1) throw XrayError("half dimension must be at least 1");
  if (specs.empty()) throw XrayError("X-ray has no strata");
  std::sort(specs.begin(), specs.end(),
            [](const StratumSpec& a, const StratumSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].id.empty()) throw XrayError("stratum with empty id");
    if (!index_.emplace(specs[i].id, i).second) {
      throw XrayError("duplicate stratum id '" + specs[i].id + "'");
    }
  }

  const auto d = static_cast<std::size_t>(torus_rank);
  strata_.resize(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& spec = specs[i];
    auto& s = strata_[i];
    s.id = spec.id;
    if (spec.points.empty()) throw XrayError("stratum '" + s.id + "' has no wall points");
    for (const auto& p : spec.points) {
      if (p.size() != d) {
        throw XrayError("stratum '" + s.id + "': point of length " + std::to_string(p.size()) +
                        " in a rank-" + std::to_string(d) + " X-ray");
      }
    }
    s.wall = Polytope::hull(spec.points);
    if (s.wall.dim() == 0 && !spec.vertex_data) {
      throw XrayError("vertex '" + s.id + "' has no vertex data");
    }
    if (s.wall.dim() > 0 && spec.vertex_data) {
      throw XrayError("stratum '" + s.id + "' has a positive-dimensional wall but carries vertex data");
    }
    if (spec.vertex_data) {
      const auto& w = spec.vertex_data->weights;
      if (w.size() != static_cast<std::size_t>(half_dim)) {
        throw XrayError("vertex '" + s.id + "' carries " + std::to_string(w.size()) +
                        " weights, expected " + std::to_string(half_dim));
      }
      for (const auto& v : w) {
        if (v.size() != d) throw XrayError("vertex '" + s.id + "': weight of wrong length");
      }
    }
    s.vertex_data = std::move(spec.vertex_data);
    for (const auto& pid : spec.parents) {
      auto it = index_.find(pid);
      if (it == index_.end()) {
        throw XrayError("stratum '" + s.id + "' names unknown parent '" + pid + "'");
      }
      if (it->second == i) throw XrayError("stratum '" + s.id + "' is its own parent");
      s.parents.push_back(it->second);
    }
    std::sort(s.parents.begin(), s.parents.end());
    s.parents.erase(std::unique(s.parents.begin(), s.parents.end()), s.parents.end());
  }
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    for (auto p : strata_[i].parents) strata_[p].children.push_back(i);
  }

  const std::size_t n = strata_.size();
  less_.assign(n, std::vector<bool>(n, false));
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<std::size_t> stack(strata_[g].parents.begin(), strata_[g].parents.end());
    while (!stack.empty()) {
      const auto f = stack.back();
      stack.pop_back();
      if (less_[g][f]) continue;
      less_[g][f] = true;
      for (auto p : strata_[f].parents) stack.push_back(p);
    }
    if (less_[g][g]) throw XrayError("cycle in the stratum order through '" + strata_[g].id + "'");
  }
}

std::size_t WeightedXray::index_of(const StratumId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw XrayError("unknown stratum '" + id + "'");
  return it->second;
}

std::vector<std::size_t> WeightedXray::below(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < size(); ++g) {
    if (less_[g][f]) out.push_back(g);
  }
  return out;
}

std::vector<std::size_t> WeightedXray::above(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < size(); ++f) {
    if (less_[g][f]) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> WeightedXray::vertices_below(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (strata_[v].is_vertex() && less_equal(v, f)) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    const auto c = lex_compare(strata_[a].wall.vertices()[0], strata_[b].wall.vertices()[0]);
    return c != 0 ? c < 0 : strata_[a].id < strata_[b].id;
  });
  return out;
}

std::vector<std::size_t> WeightedXray::principal_subwalls(std::size_t f) const {
  std::vector<std::size_t> out;
  const auto k = strata_[f].wall.dim();
  if (k == 0) return out;
  for (auto g : below(f)) {
    if (strata_[g].wall.dim() + 1 == k) out.push_back(g);
  }
  return out;
}

std::vector<std::size_t> WeightedXray::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (strata_[i].parents.empty()) out.push_back(i);
  }
  return out;
}

std::size_t WeightedXray::top() const {
  const auto m = maximal();
  if (m.size() != 1) {
    throw XrayError("X-ray has " + std::to_string(m.size()) + " maximal strata, expected exactly one");
  }
  return m.front();
}

std::vector<std::size_t> WeightedXray::by_dimension() const {
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = i;
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return strata_[a].wall.dim() < strata_[b].wall.dim();
  });
  return out;
}

std::string WeightedXray::fingerprint() const {
  std::ostringstream text;
  text << torus_rank_ << ';' << half_dim_ << ';';
  for (const auto& s : strata_) {
    text << s.id << '[' << s.wall.to_string() << "]<";
    for (auto p : s.parents) text << strata_[p].id << ',';
    text << '>';
    if (s.vertex_data) {
      for (const auto& w : s.vertex_data->weights) text << to_string(w);
      text << s.vertex_data->seed_signature << '|' << s.vertex_data->seed_poincare.to_string() << '|'
           << s.vertex_data->seed_euler;
    }
    text << ';';
  }
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

bool WeightedXray::operator==(const WeightedXray& other) const {
  if (torus_rank_ != other.torus_rank_ || half_dim_ != other.half_dim_ || size() != other.size()) {
    return false;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& a = strata_[i];
    const auto& b = other.strata_[i];
    if (a.id != b.id || !(a.wall == b.wall) || a.vertex_data != b.vertex_data) return false;
  }
  return less_ == other.less_;
}

// ---------------------------------------------------------------- weights

std::vector<RatVector> weights_at_vertex_in(const WeightedXray& x, std::size_t v, std::size_t f) {
  const auto& data = x.stratum(v).vertex_data;
  if (!data) throw XrayError("stratum '" + x.stratum(v).id + "' is not a vertex");
  const auto& span = x.wall(f).span();
  std::vector<RatVector> out;
  for (const auto& w : data->weights) {
    if (span.contains_direction(w)) out.push_back(w);
  }
  return out;
}

std::vector<RatVector> stratum_weights_in(const WeightedXray& x, std::size_t g, std::size_t f) {
  if (!x.less_equal(g, f)) {
    throw XrayError("stratum '" + x.stratum(g).id + "' is not below '" + x.stratum(f).id + "'");
  }
  const auto verts = x.vertices_below(g);
  if (verts.empty()) {
    throw XrayError("malformed X-ray: stratum '" + x.stratum(g).id + "' has no vertex below it");
  }
  return weights_at_vertex_in(x, verts.front(), f);
}

std::vector<RatVector> stratum_weights_in(const WeightedXray& x, const StratumId& g,
                                          const StratumId& f) {
  return stratum_weights_in(x, x.index_of(g), x.index_of(f));
}

int complex_dim_of_stratum(const WeightedXray& x, std::size_t f) {
  return static_cast<int>(stratum_weights_in(x, f, f).size());
}

int complex_dim_of_stratum(const WeightedXray& x, const StratumId& f) {
  return complex_dim_of_stratum(x, x.index_of(f));
}

bool is_toric_structure_free(const WeightedXray& x, std::size_t f) {
  const Polytope& wall = x.wall(f);
  std::map<std::size_t, std::vector<Polytope>> faces_by_dim;
  for (auto g : x.below(f)) {
    const Polytope& sub = x.wall(g);
    if (sub.dim() >= wall.dim()) return false;
    auto it = faces_by_dim.find(sub.dim());
    if (it == faces_by_dim.end()) it = faces_by_dim.emplace(sub.dim(), faces(wall, sub.dim())).first;
    if (std::find(it->second.begin(), it->second.end(), sub) == it->second.end()) return false;
  }
  if (x.vertices_below(f).empty()) return false;
  return complex_dim_of_stratum(x, f) == static_cast<int>(wall.dim());
}

bool is_toric_structure_free(const WeightedXray& x, const StratumId& f) {
  return is_toric_structure_free(x, x.index_of(f));
}

}  // namespace wallcross
