#include "wallcross/engine.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace wallcross {

std::int64_t w_signature(int forward, int backward) {
  if ((forward + backward) % 2 == 0) return 0;
  return backward % 2 == 0 ? 1 : -1;
}

IntPolynomial w_poincare(int forward, int backward) {
  if (forward == backward) return {};
  const int lo = std::min(forward, backward);
  const int hi = std::max(forward, backward);
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * hi - 1), 0);
  for (int k = lo; k < hi; ++k) c[static_cast<std::size_t>(2 * k)] = 1;
  IntPolynomial p(std::move(c));
  return forward > backward ? p : -p;
}

std::int64_t w_euler(int forward, int backward) { return forward - backward; }

RecursiveInvariantSpec signature_invariant() {
  return {"signature", Ring::Integer, [](int f, int b) { return IntPolynomial(w_signature(f, b)); },
          [](const VertexData& d) { return IntPolynomial(d.seed_signature); }};
}

RecursiveInvariantSpec poincare_invariant() {
  return {"poincare", Ring::IntPolynomial, [](int f, int b) { return w_poincare(f, b); },
          [](const VertexData& d) { return d.seed_poincare; }};
}

RecursiveInvariantSpec euler_invariant() {
  return {"euler", Ring::Integer, [](int f, int b) { return IntPolynomial(w_euler(f, b)); },
          [](const VertexData& d) { return IntPolynomial(d.seed_euler); }};
}

// ---------------------------------------------------------------- table

InvariantTable::InvariantTable(std::string name, Ring ring, std::string fingerprint,
                               std::vector<InvariantRow> rows)
    : name_(std::move(name)), ring_(ring), fingerprint_(std::move(fingerprint)), rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(), [](const InvariantRow& a, const InvariantRow& b) {
    return a.stratum != b.stratum ? a.stratum < b.stratum : a.subchamber < b.subchamber;
  });
  for (std::size_t i = 0; i < rows_.size(); ++i) first_row_.emplace(rows_[i].stratum, i);
}

const IntPolynomial& InvariantTable::value(const StratumId& stratum, std::size_t subchamber) const {
  auto it = first_row_.find(stratum);
  if (it == first_row_.end()) throw std::out_of_range("no values for stratum '" + stratum + "'");
  const std::size_t i = it->second + subchamber;
  if (i >= rows_.size() || rows_[i].stratum != stratum) {
    throw std::out_of_range("stratum '" + stratum + "' has no subchamber " + std::to_string(subchamber));
  }
  return rows_[i].value;
}

std::int64_t InvariantTable::integer_value(const StratumId& stratum, std::size_t subchamber) const {
  return value(stratum, subchamber).as_integer();
}

std::vector<IntPolynomial> InvariantTable::values(const StratumId& stratum) const {
  std::vector<IntPolynomial> out;
  for (const auto& r : rows_) {
    if (r.stratum == stratum) out.push_back(r.value);
  }
  return out;
}

std::string format_value(const IntPolynomial& v, Ring ring) {
  if (ring == Ring::Integer && v.is_constant()) return std::to_string(v.as_integer());
  return v.to_string();
}

std::string node_name(std::size_t subchamber) {
  return subchamber == kExterior ? "EXTERIOR" : "#" + std::to_string(subchamber);
}

// ---------------------------------------------------------------- propagation

IntPolynomial edge_delta(const InvariantTable& table, const RecursiveInvariantSpec& spec,
                         const CrossingEdge& edge) {
  IntPolynomial sum;
  for (const auto& s : edge.separators) {
    sum += spec.wall_cross(s.forward, s.backward) * table.value(s.stratum, s.subchamber);
  }
  return sum;
}

namespace {

IntPolynomial delta_with(const std::map<StratumId, std::vector<IntPolynomial>>& known,
                         const RecursiveInvariantSpec& spec, const CrossingEdge& edge) {
  IntPolynomial sum;
  for (const auto& s : edge.separators) {
    auto it = known.find(s.stratum);
    if (it == known.end() || s.subchamber >= it->second.size()) {
      throw std::logic_error("internal: missing lower value for '" + s.stratum + "'");
    }
    sum += spec.wall_cross(s.forward, s.backward) * it->second[s.subchamber];
  }
  return sum;
}

}  // namespace

InvariantTable propagate(const ChamberComplex& complex, const RecursiveInvariantSpec& spec) {
  const WeightedXray& x = complex.xray();
  std::map<StratumId, std::vector<IntPolynomial>> known;
  std::vector<InvariantRow> rows;

  for (auto f : x.by_dimension()) {
    const Stratum& s = x.stratum(f);
    const auto& subs = complex.subchambers(f);
    std::vector<IntPolynomial> vals(subs.size());
    if (s.is_vertex()) {
      vals[0] = spec.seed(*s.vertex_data);
    } else {
      const CrossingGraph& graph = complex.crossing_graph(f);
      std::vector<std::optional<IntPolynomial>> at(subs.size());
      auto value_of = [&](std::size_t node) -> const IntPolynomial* {
        static const IntPolynomial zero;
        if (node == kExterior) return &zero;
        return at[node] ? &*at[node] : nullptr;
      };
      std::deque<std::size_t> queue{kExterior};
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& e : graph.edges) {
          if (e.from != u && e.to != u) continue;
          const std::size_t w = e.from == u ? e.to : e.from;
          if (w == kExterior || at[w]) continue;
          const IntPolynomial d = delta_with(known, spec, e);
          at[w] = e.from == u ? *value_of(u) + d : *value_of(u) - d;
          queue.push_back(w);
        }
      }
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!at[i]) {
          throw XrayError("subchamber " + std::to_string(i) + " of '" + s.id +
                          "' is not reachable from EXTERIOR");
        }
      }
      for (const auto& e : graph.edges) {
        const IntPolynomial expected = delta_with(known, spec, e);
        const IntPolynomial actual = *value_of(e.to) - *value_of(e.from);
        if (expected != actual) {
          throw PathDependenceError(spec.name + " on '" + s.id + "': crossing " + node_name(e.from) + " -> " +
                                    node_name(e.to) + " requires a jump of " +
                                    format_value(expected, spec.ring) + " but the values differ by " +
                                    format_value(actual, spec.ring));
        }
      }
      for (std::size_t i = 0; i < subs.size(); ++i) vals[i] = *at[i];
    }
    for (std::size_t i = 0; i < subs.size(); ++i) rows.push_back({s.id, i, subs[i].rep, vals[i]});
    known.emplace(s.id, std::move(vals));
  }
  return InvariantTable(spec.name, spec.ring, x.fingerprint(), std::move(rows));
}

InvariantTable propagate(const WeightedXray& x, const RecursiveInvariantSpec& spec) {
  const ChamberComplex complex(x);
  return propagate(complex, spec);
}

std::vector<EdgeMismatch> cycle_mismatches(const ChamberComplex& complex, const InvariantTable& table,
                                           const RecursiveInvariantSpec& spec) {
  std::vector<EdgeMismatch> out;
  const WeightedXray& x = complex.xray();
  for (std::size_t f = 0; f < x.size(); ++f) {
    const auto& id = x.stratum(f).id;
    for (const auto& e : complex.crossing_graph(f).edges) {
      const IntPolynomial expected = edge_delta(table, spec, e);
      const IntPolynomial from = e.from == kExterior ? IntPolynomial{} : table.value(id, e.from);
      const IntPolynomial actual = table.value(id, e.to) - from;
      if (expected != actual) out.push_back({id, e.from, e.to, expected, actual});
    }
  }
  return out;
}

}  // namespace wallcross
