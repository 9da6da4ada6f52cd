#include "wallcross/checks.hpp"

#include <algorithm>

namespace wallcross {

bool CheckReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t CheckReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [s](const CheckLine& l) { return l.status == s; }));
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

std::string subject(const InvariantRow& r) { return r.stratum + " #" + std::to_string(r.subchamber); }

bool all_seeds(const WeightedXray& x, bool (*pred)(const VertexData&)) {
  return std::all_of(x.strata().begin(), x.strata().end(),
                     [&](const Stratum& s) { return !s.vertex_data || pred(*s.vertex_data); });
}

bool seed_sig_is_p_at_i(const VertexData& d) {
  const GaussianInt v = d.seed_poincare.evaluate(GaussianInt{0, 1});
  return v.im == 0 && v.re == d.seed_signature;
}

bool seeds_trivial(const VertexData& d) {
  return d.seed_signature == 1 && d.seed_poincare == IntPolynomial{1} && d.seed_euler == 1;
}

bool seed_parity(const VertexData& d) { return (d.seed_signature - d.seed_euler) % 2 == 0; }

}  // namespace

CheckReport delzant_shortcut(const WeightedXray& x, const InvariantTable& sig, const InvariantTable* poin,
                             const InvariantTable* euler) {
  CheckReport rep{"delzant-shortcut", {}, true};
  for (std::size_t f = 0; f < x.size(); ++f) {
    const auto& id = x.stratum(f).id;
    if (!is_toric_structure_free(x, f)) {
      rep.lines.push_back({id, CheckStatus::Skip, "not structure-free toric"});
      continue;
    }
    const auto sv = sig.values(id);
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < sv.size(); ++i) {
      auto expect_one = [&](const InvariantTable* t, const char* label) {
        if (!t) return;
        const IntPolynomial& v = t->value(id, i);
        if (v != IntPolynomial{1}) {
          ok = false;
          detail += std::string(label) + "(#" + std::to_string(i) + ") = " + format_value(v, t->ring()) + "; ";
        }
      };
      expect_one(&sig, "sig");
      expect_one(poin, "poincare");
      expect_one(euler, "euler");
    }
    rep.lines.push_back({id, ok ? CheckStatus::Pass : CheckStatus::Fail,
                         ok ? std::to_string(sv.size()) + " subchamber(s) with value 1" : detail});
  }
  return rep;
}

CheckReport check_sig_equals_poincare_at_i(const WeightedXray& x, const InvariantTable& sig,
                                           const InvariantTable& poin) {
  CheckReport rep{"sig=P(i)", {}, all_seeds(x, seed_sig_is_p_at_i)};
  if (!rep.hypothesis_met) {
    rep.lines.push_back({"seeds", CheckStatus::Skip, "hypothesis not met"});
    return rep;
  }
  for (const auto& row : sig.rows()) {
    const GaussianInt p = poin.value(row.stratum, row.subchamber).evaluate(GaussianInt{0, 1});
    const std::int64_t s = row.value.as_integer();
    const bool ok = p.im == 0 && p.re == s;
    rep.lines.push_back({subject(row), ok ? CheckStatus::Pass : CheckStatus::Fail,
                         "sig " + std::to_string(s) + ", P(i) " + std::to_string(p.re) + " + " +
                             std::to_string(p.im) + "i"});
  }
  return rep;
}

CheckReport check_dim4_positivity(const WeightedXray& x, const InvariantTable& poin, const InvariantTable& sig) {
  CheckReport rep{"dim4-positivity", {}, all_seeds(x, seeds_trivial)};
  if (!rep.hypothesis_met) {
    rep.lines.push_back({"seeds", CheckStatus::Skip, "hypothesis not met"});
    return rep;
  }
  for (std::size_t f = 0; f < x.size(); ++f) {
    const Stratum& s = x.stratum(f);
    if (s.is_vertex()) continue;
    if (complex_dim_of_stratum(x, f) - static_cast<int>(s.wall.dim()) != 2) continue;
    const auto pv = poin.values(s.id);
    for (std::size_t i = 0; i < pv.size(); ++i) {
      const IntPolynomial& p = pv[i];
      const std::int64_t b1 = p.coefficient(1);
      const std::int64_t b2 = p.coefficient(2);
      const std::int64_t sv = sig.integer_value(s.id, i);
      const bool shape = p.degree() == 4 && p.coefficient(0) == 1 && p.coefficient(4) == 1 &&
                         p.coefficient(3) == b1;
      const bool sig_ok = sv == 2 - b2;
      const bool has_p = (sv + b2) % 2 == 0;
      const std::int64_t positive = has_p ? (sv + b2) / 2 : -1;
      const bool ok = shape && sig_ok && positive == 1;
      std::string detail = "P = " + p.to_string() + ", b1 = " + std::to_string(b1) + ", b2 = " +
                           std::to_string(b2) + ", sig = " + std::to_string(sv) + ", p = " +
                           (has_p ? std::to_string(positive) : std::string("non-integral"));
      rep.lines.push_back({s.id + " #" + std::to_string(i), ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
    }
  }
  return rep;
}

CheckReport check_parity(const WeightedXray& x, const InvariantTable& sig, const InvariantTable& euler) {
  CheckReport rep{"parity", {}, all_seeds(x, seed_parity)};
  if (!rep.hypothesis_met) {
    rep.lines.push_back({"seeds", CheckStatus::Skip, "hypothesis not met"});
    return rep;
  }
  for (const auto& row : sig.rows()) {
    const std::int64_t s = row.value.as_integer();
    const std::int64_t e = euler.integer_value(row.stratum, row.subchamber);
    rep.lines.push_back({subject(row), (s - e) % 2 == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                         "sig " + std::to_string(s) + ", euler " + std::to_string(e)});
  }
  return rep;
}

CheckReport check_path_independence(const ChamberComplex& complex, const InvariantTable& table,
                                    const RecursiveInvariantSpec& spec) {
  CheckReport rep{"path-independence(" + spec.name + ")", {}, true};
  const auto bad = cycle_mismatches(complex, table, spec);
  const WeightedXray& x = complex.xray();
  for (std::size_t f = 0; f < x.size(); ++f) {
    const auto& id = x.stratum(f).id;
    const auto& edges = complex.crossing_graph(f).edges;
    if (edges.empty()) continue;
    std::string detail;
    for (const auto& m : bad) {
      if (m.stratum != id) continue;
      detail += node_name(m.from) + "->" + node_name(m.to) + " expected " +
                format_value(m.expected_delta, spec.ring) + " got " + format_value(m.actual_delta, spec.ring) +
                "; ";
    }
    rep.lines.push_back({id, detail.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                         detail.empty() ? std::to_string(edges.size()) + " edge(s) consistent" : detail});
  }
  return rep;
}

CheckReport check_vertex_independence(const ChamberComplex& complex) {
  CheckReport rep{"vertex-independence", {}, true};
  const WeightedXray& x = complex.xray();
  for (std::size_t f = 0; f < x.size(); ++f) {
    const auto& graph = complex.crossing_graph(f);
    if (graph.edges.empty()) continue;
    std::size_t checked = 0;
    std::string detail;
    for (const auto& e : graph.edges) {
      for (const auto& sep : e.separators) {
        const std::size_t g = x.index_of(sep.stratum);
        for (auto v : x.vertices_below(g)) {
          int fw = 0, bw = 0;
          for (const auto& w : weights_at_vertex_in(x, v, f)) {
            const int s = e.crossing.side_of_direction(w);
            fw += s > 0;
            bw += s < 0;
          }
          ++checked;
          if (fw != sep.forward || bw != sep.backward) {
            detail += sep.stratum + " from " + x.stratum(v).id + ": (" + std::to_string(fw) + "," +
                      std::to_string(bw) + ") vs (" + std::to_string(sep.forward) + "," +
                      std::to_string(sep.backward) + "); ";
          }
        }
      }
    }
    rep.lines.push_back({graph.host, detail.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                         detail.empty() ? std::to_string(checked) + " recomputation(s) agree" : detail});
  }
  return rep;
}

}  // namespace wallcross
