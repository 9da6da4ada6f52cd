#include "wallcross/oracle.hpp"

#include "wallcross/circle.hpp"
#include "wallcross/validate.hpp"

#include <optional>

namespace wallcross {

namespace {

CheckLine compare(const std::string& subject, const IntPolynomial& engine, const IntPolynomial& oracle,
                  Ring ring) {
  const bool ok = engine == oracle;
  return {subject, ok ? CheckStatus::Pass : CheckStatus::Fail,
          "engine " + format_value(engine, ring) + ", oracle " + format_value(oracle, ring)};
}

}  // namespace

std::vector<CheckReport> run_oracle(const ChamberComplex& complex) {
  const WeightedXray& x = complex.xray();
  std::vector<CheckReport> out;

  CheckReport seeds{"isolated-seeds", {}, true};
  for (const auto& v : validate_vertex_data(x)) seeds.lines.push_back({v.strata.front(), CheckStatus::Fail, v.message});
  if (seeds.lines.empty()) seeds.lines.push_back({"all vertices", CheckStatus::Pass, "seeds consistent"});
  out.push_back(std::move(seeds));

  std::optional<InvariantTable> sig, poin;
  CheckReport prop{"propagation", {}, true};
  try {
    sig = propagate(complex, signature_invariant());
    poin = propagate(complex, poincare_invariant());
    prop.lines.push_back({"signature, poincare", CheckStatus::Pass, "all edges consistent"});
  } catch (const PathDependenceError& e) {
    prop.lines.push_back({"cycle", CheckStatus::Fail, e.what()});
  }
  out.push_back(prop);
  if (!sig || !poin) return out;

  if (x.torus_rank() == 1) {
    const CircleFixedData data = circle_data_from_xray(x);
    const std::size_t top = x.top();
    const auto& top_id = x.stratum(top).id;
    CheckReport regular{"circle-regular", {}, true};
    const auto& subs = complex.subchambers(top);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const Rational& a = subs[i].rep[0];
      const std::string subject = top_id + " #" + std::to_string(i) + " at " + to_string(a);
      regular.lines.push_back(compare(subject + " sig", sig->value(top_id, i),
                                      IntPolynomial(signature_regular(data, a)), Ring::Integer));
      regular.lines.push_back(
          compare(subject + " poincare", poin->value(top_id, i), poincare_regular(data, a), Ring::IntPolynomial));
    }
    out.push_back(std::move(regular));

    CheckReport singular{"circle-singular", {}, true};
    for (const auto& c : data.levels()) {
      const auto s = signature_singular_sides(data, c);
      singular.lines.push_back({"level " + to_string(c), s.from_below == s.from_above ? CheckStatus::Pass : CheckStatus::Fail,
                                "below " + std::to_string(s.from_below) + ", above " + std::to_string(s.from_above)});
    }
    out.push_back(std::move(singular));
  }

  CheckReport lines{"line-restriction", {}, true};
  for (std::size_t f = 0; f < x.size(); ++f) {
    const auto& id = x.stratum(f).id;
    for (const auto& e : complex.crossing_graph(f).edges) {
      const LineRestriction lr = restrict_to_line(complex, id, e.from, e.to, *sig, *poin);
      const std::string subject = id + " " + node_name(e.from) + "->" + node_name(e.to);
      const IntPolynomial base_s = e.from == kExterior ? IntPolynomial{} : sig->value(id, e.from);
      const IntPolynomial base_p = e.from == kExterior ? IntPolynomial{} : poin->value(id, e.from);
      lines.lines.push_back(compare(subject + " sig", sig->value(id, e.to) - base_s,
                                    wall_cross_delta(lr.data, Rational(0), Ring::Integer), Ring::Integer));
      lines.lines.push_back(compare(subject + " poincare", poin->value(id, e.to) - base_p,
                                    wall_cross_delta(lr.data, Rational(0), Ring::IntPolynomial),
                                    Ring::IntPolynomial));
    }
  }
  out.push_back(std::move(lines));

  const InvariantTable euler = propagate(complex, euler_invariant());
  out.push_back(delzant_shortcut(x, *sig, &*poin, &euler));
  out.push_back(check_sig_equals_poincare_at_i(x, *sig, *poin));
  return out;
}

}  // namespace wallcross
