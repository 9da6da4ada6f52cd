#include "testing.hpp"

#include <algorithm>

namespace wallcross::testing {

RatVector rv(const std::string& csv) {
  RatVector out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto end = std::min(csv.find(',', start), csv.size());
    std::string item = csv.substr(start, end - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(parse_rational(item));
    start = end + 1;
  }
  return out;
}

std::vector<RatVector> rvs(const std::vector<std::string>& csvs) {
  std::vector<RatVector> out;
  for (const auto& c : csvs) out.push_back(rv(c));
  return out;
}

Rational random_rational(Rng& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo * den, hi * den);
  Rational q(dist(rng), den);
  q.canonicalize();
  return q;
}

std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<RatVector> random_unimodular(Rng& rng, std::size_t d) {
  std::vector<RatVector> a(d, zero_vector(d));
  for (std::size_t i = 0; i < d; ++i) a[i][i] = 1;
  if (d < 2) {
    if (random_int(rng, 0, 1)) a[0][0] = -1;
    return a;
  }
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(random_int(rng, 0, static_cast<std::int64_t>(d) - 1));
    auto j = static_cast<std::size_t>(random_int(rng, 0, static_cast<std::int64_t>(d) - 2));
    if (j >= i) ++j;
    const Rational k = random_int(rng, -2, 2);
    for (std::size_t c = 0; c < d; ++c) a[i][c] += k * a[j][c];
    if (random_int(rng, 0, 3) == 0) std::swap(a[i], a[j]);
  }
  return a;
}

RatVector apply_map(const std::vector<RatVector>& a, const RatVector& v) {
  RatVector out;
  for (const auto& row : a) out.push_back(dot(row, v));
  return out;
}

std::vector<StratumSpec> specs_of(const WeightedXray& x) {
  std::vector<StratumSpec> specs;
  for (const auto& s : x.strata()) {
    StratumSpec spec{s.id, s.wall.vertices(), {}, s.vertex_data};
    for (auto p : s.parents) spec.parents.push_back(x.stratum(p).id);
    specs.push_back(std::move(spec));
  }
  return specs;
}

WeightedXray transform(const WeightedXray& x, const std::vector<RatVector>& a, const RatVector& t) {
  std::vector<StratumSpec> specs;
  for (const auto& s : x.strata()) {
    StratumSpec spec;
    spec.id = s.id;
    for (const auto& v : s.wall.vertices()) spec.points.push_back(add(apply_map(a, v), t));
    for (auto p : s.parents) spec.parents.push_back(x.stratum(p).id);
    if (s.vertex_data) {
      VertexData vd = *s.vertex_data;
      for (auto& w : vd.weights) w = apply_map(a, w);
      spec.vertex_data = std::move(vd);
    }
    specs.push_back(std::move(spec));
  }
  return WeightedXray(x.torus_rank(), x.half_dim(), std::move(specs));
}

WeightedXray random_circle_xray(Rng& rng) {
  const int n = static_cast<int>(random_int(rng, 2, 5));
  const int pairs = static_cast<int>(random_int(rng, 1, 3));
  const Rational lo = random_rational(rng, -5, 0);
  const Rational hi = lo + random_rational(rng, 1, 6);
  const Rational mid = (lo + hi) / 2;

  // Lower half; each component is mirrored below.
  std::vector<std::pair<Rational, VertexData>> lower;
  for (int i = 0; i < pairs; ++i) {
    const bool minimum = i == 0;
    Rational level = lo;
    if (!minimum) {
      do {
        level = lo + (mid - lo) * random_rational(rng, 0, 1, 4);
      } while (level == lo);
      if (i > 1 && random_int(rng, 0, 3) == 0) level = lower.back().first;
    }
    const int zeros = static_cast<int>(random_int(rng, 0, minimum ? n - 1 : n - 2));
    VertexData vd;
    for (int k = 0; k < zeros; ++k) vd.weights.push_back({Rational(0)});
    const int nonzero = n - zeros;
    // Interior components need both signs.
    const int positives = minimum ? nonzero : static_cast<int>(random_int(rng, 1, nonzero - 1));
    for (int k = 0; k < nonzero; ++k) {
      Rational mag = random_rational(rng, 1, 4, 3);
      vd.weights.push_back({k < positives ? mag : Rational(-mag)});
    }
    std::shuffle(vd.weights.begin(), vd.weights.end(), rng);
    if (zeros > 0) {
      vd.seed_signature = random_int(rng, -5, 5);
      vd.seed_euler = random_int(rng, -5, 5);
      std::vector<std::int64_t> c(static_cast<std::size_t>(random_int(rng, 1, 3)));
      for (auto& v : c) v = random_int(rng, -5, 5);
      vd.seed_poincare = IntPolynomial(std::move(c));
    }
    lower.emplace_back(level, std::move(vd));
  }

  std::vector<StratumSpec> specs;
  StratumSpec top{"top", {}, {}, std::nullopt};
  auto add_vertex = [&](const Rational& level, VertexData vd) {
    top.points.push_back({level});
    specs.push_back({"v" + std::to_string(specs.size()), {{level}}, {"top"}, std::move(vd)});
  };
  for (const auto& [level, vd] : lower) {
    add_vertex(level, vd);
    // The mirror swaps forward and backward, so the contributions of the
    // pair cancel and the crossing into the top chamber closes up.
    VertexData mirrored = vd;
    for (auto& w : mirrored.weights) w = scale(w, Rational(-1));
    add_vertex(lo + hi - level, std::move(mirrored));
  }
  specs.push_back(std::move(top));
  return WeightedXray(1, n, std::move(specs));
}

}  // namespace wallcross::testing
