#include "kato/json_io.hpp"

namespace kato {

json to_json(const CycNumber &x) {
    json c = json::array();
    for (const auto &q : x.coeffs()) c.push_back(q_str(q));
    return {{"conductor", x.conductor()}, {"coeffs", c}};
}

json to_json(const QExpansion &f) {
    json terms = json::array();
    for (const auto &[k, c] : f.terms()) terms.push_back({{"exp", q_str(f.exponent_of(k))}, {"coeff", to_json(c)}});
    json j = {{"exp_denom", f.exp_denom()}, {"terms", terms}};
    j["precision"] = f.precision() ? json(q_str(*f.precision())) : json(nullptr);
    return j;
}

json to_json(const UnitQExp &u) {
    return {{"q_exponent", q_str(u.q_exponent)}, {"unit_root", to_json(u.unit_root)}, {"tail", to_json(u.tail)}};
}

namespace {
json val(const std::optional<Q> &v) { return v ? json(q_str(*v)) : json("inf"); }
}  // namespace

json to_json(const ConvergenceReport &r) {
    const auto &in = r.inst;
    json rows = json::array();
    for (const auto &row : r.rows) {
        json v = json::array();
        for (const auto &x : row.valuation) v.push_back(val(x));
        rows.push_back({{"exp", q_str(row.exponent)}, {"valuations", v}, {"exact", row.exact},
                        {"nondecreasing", row.nondecreasing}, {"improves", row.improves}});
    }
    return {{"instance",
             {{"p", in.p}, {"M", in.M}, {"A", {in.alpha, in.beta, in.gamma, in.delta}}, {"k", in.k}, {"j", in.j},
              {"c", in.c}, {"d", in.d}, {"depth", in.n_max}, {"prec", q_str(in.prec)}}},
            {"rows", rows},
            {"all_nondecreasing", r.all_nondecreasing},
            {"some_improves", r.some_improves},
            {"has_nonexact", r.has_nonexact}};
}

json to_json(const SuiteResult &s) {
    json j = {{"suite", s.name}, {"ok", s.ok}, {"checks", s.checks}, {"failures", s.failures}, {"seconds", s.seconds},
              {"notes", s.notes}};
    if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
    return j;
}

CycNumber cyc_from_json(const json &j) {
    std::vector<Q> c;
    for (const auto &x : j.at("coeffs")) c.push_back(parse_q(x.get<std::string>()));
    return CycNumber::from_coeffs(j.at("conductor").get<long>(), c);
}

QExpansion qexp_from_json(const json &j) {
    std::optional<Q> prec;
    if (j.contains("precision") && !j.at("precision").is_null()) prec = parse_q(j.at("precision").get<std::string>());
    QExpansion f(j.at("exp_denom").get<long>(), prec);
    for (const auto &t : j.at("terms")) f.add_term(parse_q(t.at("exp").get<std::string>()), cyc_from_json(t.at("coeff")));
    return f;
}

}  // namespace kato
