#include "shiftfam/envelope.hpp"

#include <sstream>

namespace shiftfam {

using nlohmann::json;

json to_json(const OutputEnvelope& env) {
    return json{{"command", env.command},
                {"inputs", env.inputs},
                {"results", env.results},
                {"warnings", env.warnings}};
}

std::string serialize(const OutputEnvelope& env) { return to_json(env).dump(2) + "\n"; }

json to_json(const NumericalSemigroup& h) {
    return json{{"generators", h.generators().values()},
                {"minimal_generators", h.minimal_generators().values()},
                {"multiplicity", h.multiplicity()},
                {"embedding_dimension", h.embedding_dimension()},
                {"frobenius", h.frobenius()},
                {"pseudo_frobenius", h.pseudo_frobenius()},
                {"type", h.type()}};
}

json to_json(const TraceData& t) { return json{{"holes", t.holes}, {"residue", t.residue}}; }

json to_json(const NGCertificate& c) {
    return json{{"candidates", c.candidates},
                {"nearly_gorenstein", c.nearly_gorenstein()},
                {"vector", c.vector ? json(*c.vector) : json(nullptr)}};
}

json to_json(const ShiftSpec& spec) {
    return json{{"shifts", spec.r.values()}, {"d", spec.d},     {"frobenius_s", spec.fs},
                {"n0", spec.n0},             {"r_k", spec.rk()}, {"r_k4", spec.rk4()}};
}

namespace {

json entries(const std::vector<PEntry>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back({{"i", e.i}, {"m", e.m}});
    return out;
}

}  // namespace

json to_json(const PProfile& p) {
    json pf = json::array();
    for (const auto& e : p.pf)
        pf.push_back({{"f", e.f}, {"class", std::string(to_string(e.cls))}, {"i", e.i}, {"m", e.m}});
    return json{{"n", p.n}, {"p_prime", entries(p.p_prime)}, {"p_double", entries(p.p_double)}, {"pf", pf}};
}

json to_json(const ClosedForm& c) {
    return json{{"base_n", c.base_n},     {"base_f", c.base_f}, {"class", std::string(to_string(c.cls))},
                {"i", c.i},               {"m", c.m},           {"constant", c.constant},
                {"linear", c.linear},     {"quadratic", c.quadratic}};
}

json to_json(const BoundN& b) {
    return json{{"n_star", b.n_star}, {"N1", b.n1}, {"N2", b.n2}, {"N3", b.n3}, {"N", b.n}, {"below_r_k4", b.below_rk4}};
}

json to_json(const Flag& f) {
    return json{{"value", f.value}, {"status", f.theorem_backed ? "theorem" : "observed"}};
}

json to_json(const FamilyFlags& f) {
    return json{{"nearly_gorenstein", to_json(f.nearly_gorenstein)},
                {"almost_symmetric", to_json(f.almost_symmetric)},
                {"canonical_reduction", to_json(f.canonical_reduction)},
                {"even_type_excluded", to_json(f.even_type_excluded)},
                {"order_preserved", to_json(f.order_preserved)}};
}

json to_json(const ResidueScan& s) {
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back({{"lambda", r.lambda}, {"n", r.n}, {"residue", r.residue}});
    return json{{"rows", rows},
                {"empirical_linear_fit",
                 {{"slope", s.fit.slope}, {"intercept", s.fit.intercept}, {"max_deviation", s.fit.max_deviation}}}};
}

json to_json(const oracle::DiffReport& r) {
    return json{{"subject", r.subject},
                {"instance", r.instance},
                {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                {"actual", r.actual ? json(*r.actual) : json(nullptr)},
                {"match", r.match}};
}

json analyze_json(const NumericalSemigroup& h) {
    json out = to_json(h);
    out["trace"] = to_json(trace(h));
    out["ng"] = to_json(ng_certificate(h));
    out["symmetric"] = is_symmetric(h);
    out["almost_symmetric"] = is_almost_symmetric(h);
    out["canonical_reduction"] = has_canonical_reduction(h);
    out["reduced_type"] = reduced_type(h);
    return out;
}

std::string residue_csv(const ResidueScan& scan) {
    std::ostringstream os;
    os << "lambda,n,residue\n";
    for (const auto& r : scan.rows) os << r.lambda << ',' << r.n << ',' << r.residue << '\n';
    return os.str();
}

}  // namespace shiftfam
