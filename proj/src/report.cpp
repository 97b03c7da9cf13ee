#include "algdef/report.hpp"

#include "algdef/identities.hpp"

namespace algdef {

Json report_header(const std::string& command, std::optional<std::uint64_t> seed)
{
    Json j;
    j["tool"] = "algdef";
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    return j;
}

Json input_descriptor(const NamedAlgebra& algebra, const std::string& source)
{
    return Json{{"name", algebra.name}, {"dim", algebra.table.dim()}, {"source", source}};
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const std::vector<Vector>& basis)
{
    Json out = Json::array();
    for (const auto& v : basis) {
        Json row = Json::array();
        for (const auto& e : v) row.push_back(to_string(e));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const ResidualReport& r)
{
    Json j{{"kind", std::string(name(r.kind))}, {"member", r.is_member}, {"nonzero_coordinates", r.max_abs_violations}};
    j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
    return j;
}

Json membership_json(const MulTable& x)
{
    Json j;
    j["associative"] = is_associative(x);
    j["commutative"] = is_commutative(x);
    j["leibniz"] = is_leibniz(x);
    j["lie"] = is_lie(x);
    j["symmetric"] = is_symmetric(x);
    j["skew"] = is_skew(x);
    return j;
}

Json to_json(const CohomologySummary& s)
{
    Json j;
    j["theory"] = std::string(name(s.theory));
    j["z1"] = s.z1;
    j["b1"] = s.b1;
    j["h1"] = s.h1;
    j["z2"] = s.z2;
    j["b2"] = s.b2;
    j["h2"] = s.h2;
    j["derivations_dim"] = s.derivations_dim;
    j["inner_dim"] = s.inner_dim;
    j["center_dim"] = s.center_dim;
    j["rank_d2"] = s.rank_d2;
    j["field"] = s.field == RankField::rational ? "rational" : "prime";
    j["exact"] = s.exact;
    return j;
}

Json to_json(const GramForm& g)
{
    Json j;
    j["kind"] = g.kind == FormKind::trace ? "trace" : "killing";
    j["gram"] = to_json(g.gram);
    j["discriminant"] = to_string(g.discriminant);
    j["nondegenerate"] = !is_zero(g.discriminant);
    if (g.kind == FormKind::trace) j["semantics_apply"] = g.semantics_apply;
    return j;
}

Json to_json(const CharacterPair& c)
{
    Json l = Json::array(), r = Json::array();
    for (const auto& v : c.sigma_L) l.push_back(to_string(v));
    for (const auto& v : c.sigma_R) r.push_back(to_string(v));
    return Json{{"sigma_L", l},
                {"sigma_R", r},
                {"left_unimodular", is_left_unimodular(c)},
                {"right_unimodular", is_right_unimodular(c)}};
}

Json to_json(const RigidityVerdict& v)
{
    Json j;
    j["theory"] = std::string(name(v.theory));
    j["variety_tangent_dim"] = v.variety_tangent_dim;
    j["orbit_tangent_dim"] = v.orbit_tangent_dim;
    j["stack_tangent_dim"] = v.stack_tangent_dim;
    j["orbit_open"] = v.orbit_open;
    j["rigid"] = v.rigid_in_moduli;
    j["predicted_dim"] = v.predicted_dim ? Json(*v.predicted_dim) : Json(nullptr);
    return j;
}

Json to_json(const StratumInvariant& s)
{
    return Json{{"theory", std::string(name(s.theory))}, {"rank_d2", s.rank_d2}};
}

Json to_json(const CountResult& c)
{
    Json j;
    j["n"] = c.n;
    j["value"] = c.value.fits_ulong_p() ? Json(c.value.get_ui()) : Json(c.value.get_str());
    if (c.witnesses) {
        Json ws = Json::array();
        for (const auto& w : *c.witnesses) {
            Json parts = Json::array();
            for (const auto& p : w) parts.push_back(p.label);
            ws.push_back(std::move(parts));
        }
        j["witnesses"] = std::move(ws);
    }
    return j;
}

Json to_json(const BatteryReport& b)
{
    Json laws = Json::array();
    for (const auto& l : b.laws) {
        Json j{{"law", l.law}, {"checks", l.checks}, {"failures", l.failures}, {"passed", l.passed()}};
        if (l.first_failure) j["first_failure"] = *l.first_failure;
        laws.push_back(std::move(j));
    }
    return Json{{"n", b.n}, {"transforms", b.transforms}, {"passed", b.passed()}, {"laws", std::move(laws)}};
}

}  // namespace algdef
