#include "wallcross/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallcross {

int CircleComponent::forward() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](auto w) { return w > 0; }));
}

int CircleComponent::backward() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](auto w) { return w < 0; }));
}

int CircleComponent::normal_rank() const { return forward() + backward(); }

std::vector<Rational> CircleFixedData::levels() const {
  std::vector<Rational> out;
  for (const auto& c : components) out.push_back(c.level);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CircleFixedData::is_level(const Rational& a) const {
  return std::any_of(components.begin(), components.end(), [&](const auto& c) { return c.level == a; });
}

void check_circle_data(const CircleFixedData& data) {
  for (const auto& c : data.components) {
    if (std::find(c.weights.begin(), c.weights.end(), 0) != c.weights.end()) {
      throw XrayError("circle component at level " + to_string(c.level) + " has a zero weight");
    }
  }
}

namespace {

void require_regular(const CircleFixedData& data, const Rational& a) {
  if (data.is_level(a)) throw XrayError("singular level; use signature_singular");
}

std::int64_t sum_signature(const CircleFixedData& data, const Rational& a, bool inclusive) {
  std::int64_t s = 0;
  for (const auto& c : data.components) {
    if (c.level < a || (inclusive && c.level == a)) s += w_signature(c.forward(), c.backward()) * c.seed_signature;
  }
  return s;
}

}  // namespace

std::int64_t signature_regular(const CircleFixedData& data, const Rational& a) {
  check_circle_data(data);
  require_regular(data, a);
  std::int64_t s = 0;
  for (const auto& c : data.components) {
    if (c.level < a && c.normal_rank() % 2 == 1) s += (c.backward() % 2 == 0 ? 1 : -1) * c.seed_signature;
  }
  return s;
}

IntPolynomial poincare_regular(const CircleFixedData& data, const Rational& a) {
  check_circle_data(data);
  require_regular(data, a);
  IntPolynomial p;
  for (const auto& c : data.components) {
    if (c.level < a) p += c.seed_poincare * w_poincare(c.forward(), c.backward());
  }
  return p;
}

IntPolynomial wall_cross_delta(const CircleFixedData& data, const Rational& c, Ring ring) {
  check_circle_data(data);
  if (!data.is_level(c)) throw XrayError("level " + to_string(c) + " is not a wall");
  IntPolynomial sum;
  for (const auto& comp : data.components) {
    if (comp.level != c) continue;
    if (ring == Ring::Integer) {
      sum += IntPolynomial(w_signature(comp.forward(), comp.backward()) * comp.seed_signature);
    } else {
      sum += w_poincare(comp.forward(), comp.backward()) * comp.seed_poincare;
    }
  }
  return sum;
}

SingularSignature signature_singular_sides(const CircleFixedData& data, const Rational& c) {
  check_circle_data(data);
  if (!data.is_level(c)) throw XrayError("level " + to_string(c) + " is not a wall");
  SingularSignature out;
  out.from_below = sum_signature(data, c, false);
  out.from_above = sum_signature(data, c, true);
  for (const auto& comp : data.components) {
    if (comp.level != c) continue;
    const std::int64_t w = w_signature(comp.forward(), comp.backward()) * comp.seed_signature;
    if (comp.backward() >= comp.forward()) {
      out.from_below += w;
    } else {
      out.from_above -= w;
    }
  }
  return out;
}

std::int64_t signature_singular(const CircleFixedData& data, const Rational& c) {
  const SingularSignature s = signature_singular_sides(data, c);
  for (const auto& comp : data.components) {
    if (comp.level == c && comp.forward() == comp.backward() &&
        w_signature(comp.forward(), comp.backward()) != 0) {
      throw std::logic_error("tie component contributes to the singular signature");
    }
  }
  if (s.from_below != s.from_above) {
    throw std::logic_error("singular signature at " + to_string(c) + ": from below " +
                           std::to_string(s.from_below) + ", from above " + std::to_string(s.from_above));
  }
  return s.value();
}

CircleFixedData circle_data_from_xray(const WeightedXray& x) {
  if (x.torus_rank() != 1) throw XrayError("circle data needs a rank-1 X-ray");
  CircleFixedData data;
  for (const auto& s : x.strata()) {
    if (!s.vertex_data) continue;
    CircleComponent c;
    c.level = s.wall.vertices().front()[0];
    for (const auto& w : s.vertex_data->weights) {
      if (w[0] != 0) c.weights.push_back(w[0] > 0 ? 1 : -1);
    }
    c.seed_signature = s.vertex_data->seed_signature;
    c.seed_poincare = s.vertex_data->seed_poincare;
    data.components.push_back(std::move(c));
  }
  return data;
}

LineRestriction restrict_to_line(const ChamberComplex& complex, const StratumId& f, std::size_t p1,
                                 std::size_t p2, const InvariantTable& sig, const InvariantTable& poin) {
  const std::size_t fi = complex.xray().index_of(f);
  const CrossingEdge* edge = nullptr;
  bool flip = false;
  for (const auto& e : complex.crossing_graph(fi).edges) {
    if (e.from == p1 && e.to == p2) {
      edge = &e;
      break;
    }
    if (e.from == p2 && e.to == p1) {
      edge = &e;
      flip = true;
      break;
    }
  }
  if (!edge) {
    throw XrayError("subchambers " + node_name(p1) + " and " + node_name(p2) + " of '" + f + "' are not adjacent");
  }
  LineRestriction out;
  for (const auto& sep : edge->separators) {
    const int fw = flip ? sep.backward : sep.forward;
    const int bw = flip ? sep.forward : sep.backward;
    CircleComponent c;
    c.level = 0;
    c.weights.assign(static_cast<std::size_t>(fw), 1);
    c.weights.insert(c.weights.end(), static_cast<std::size_t>(bw), -1);
    c.seed_signature = sig.integer_value(sep.stratum, sep.subchamber);
    c.seed_poincare = poin.value(sep.stratum, sep.subchamber);
    out.data.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace wallcross
