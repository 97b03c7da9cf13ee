// algdef: command-line front end. JSON report on stdout, short summary on stderr.
//
// Exit codes: 0 ok, 1 usage or other error, 2 input parse error,
// 3 off-variety request, 4 internal inconsistency.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "algdef/algebra_io.hpp"
#include "algdef/cohomology.hpp"
#include "algdef/counting.hpp"
#include "algdef/errors.hpp"
#include "algdef/forms.hpp"
#include "algdef/identities.hpp"
#include "algdef/moduli.hpp"
#include "algdef/properties.hpp"
#include "algdef/report.hpp"

using namespace algdef;

namespace {

struct InputOptions {
    std::string file;
    std::string builder;
    std::optional<std::size_t> arg;
};

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    cmd->add_option("file", in.file, "Algebra file (JSON)");
    cmd->add_option("--builder", in.builder, "Named builder, e.g. sl2, m2, split_etale, sl2+abelian:1");
    cmd->add_option("--arg", in.arg, "Parameter of a parameterized builder");
}

struct LoadedInput {
    NamedAlgebra algebra;
    std::string source;
};

LoadedInput load(const InputOptions& in)
{
    if (!in.file.empty() && !in.builder.empty())
        throw CLI::ValidationError("give either a file or --builder, not both");
    if (!in.builder.empty()) {
        try {
            return {build_named(in.builder, in.arg), "builder"};
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError(e.what());
        }
    }
    if (in.file.empty()) throw CLI::ValidationError("an input file or --builder is required");
    return {read_algebra_file(in.file), in.file};
}

RankField parse_field(const std::string& s)
{
    if (s == "rational") return RankField::rational;
    if (s == "prime") return RankField::prime;
    throw CLI::ValidationError("--field must be rational or prime");
}

void emit(const Json& report) { std::cout << report.dump(2) << '\n'; }

Json cmd_check(const LoadedInput& in)
{
    const auto& x = in.algebra.table;
    Json r = report_header("check", std::nullopt);
    r["input"] = input_descriptor(in.algebra, in.source);
    r["membership"] = membership_json(x);
    Json residuals = Json::array();
    for (auto kind : {ResidualKind::associative, ResidualKind::commutative, ResidualKind::leibniz, ResidualKind::skew,
                      ResidualKind::jacobi})
        residuals.push_back(to_json(residual_report(x, kind)));
    r["residuals"] = std::move(residuals);

    std::cerr << in.algebra.name << " (dim " << x.dim() << "):";
    for (auto v : {Variety::alg, Variety::comm, Variety::leib, Variety::lie})
        std::cerr << ' ' << name(v) << '=' << (is_member(x, v) ? "yes" : "no");
    std::cerr << '\n';
    return r;
}

Json cmd_cohomology(const LoadedInput& in, Theory theory, RankField field)
{
    const auto& x = in.algebra.table;
    Json r = report_header("cohomology", std::nullopt);
    r["input"] = input_descriptor(in.algebra, in.source);
    r["membership"] = membership_json(x);
    const auto s = summarize(make_slice(x, theory), field);
    r["cohomology"] = to_json(s);
    std::cerr << name(theory) << " cohomology of " << in.algebra.name << ": z1=" << s.z1 << " b1=" << s.b1
              << " h1=" << s.h1 << " z2=" << s.z2 << " b2=" << s.b2 << " h2=" << s.h2
              << (s.exact ? "" : " (mod p, lower bounds for ranks)") << '\n';
    return r;
}

Json cmd_forms(const LoadedInput& in)
{
    const auto& x = in.algebra.table;
    const std::size_t n = x.dim();
    Json r = report_header("forms", std::nullopt);
    r["input"] = input_descriptor(in.algebra, in.source);
    r["membership"] = membership_json(x);

    const auto trace = trace_gram(x);
    r["trace_form"] = to_json(trace);
    r["separable"] = trace.semantics_apply ? Json(!is_zero(trace.discriminant)) : Json(nullptr);
    const auto killing = killing_gram(x);
    r["killing_form"] = to_json(killing);
    r["characters"] = to_json(modular_characters(x));
    r["center"] = to_json(center(x));
    r["right_annihilator"] = to_json(right_annihilator(x));
    r["leibniz_kernel"] = to_json(leibniz_kernel(x));

    if (is_leibniz(x)) {
        const auto ops = operator_identities_check(x);
        Json j{{"holds", ops.ok}};
        if (ops.violating_pair) {
            j["violating_pair"] = {ops.violating_pair->first, ops.violating_pair->second};
            j["identity"] = ops.failed_identity;
        }
        r["operator_identities"] = std::move(j);
        r["semisimple_lie"] = is_semisimple_lie_point(x);
    } else {
        r["operator_identities"] = nullptr;
        r["semisimple_lie"] = nullptr;
    }

    std::cerr << in.algebra.name << " (dim " << n << "): trace discriminant " << to_string(trace.discriminant)
              << ", Killing discriminant " << to_string(killing.discriminant) << '\n';
    return r;
}

Json cmd_rigidity(const LoadedInput& in, Theory theory, RankField field, std::uint64_t seed)
{
    const auto& x = in.algebra.table;
    const Variety v = variety_for(theory);
    Json r = report_header("rigidity", seed);
    r["input"] = input_descriptor(in.algebra, in.source);
    const auto verdict = rigidity_verdict(x, v, field);
    r["verdict"] = to_json(verdict);
    r["stratum"] = to_json(StratumInvariant{theory, summarize(make_slice(x, theory), field).rank_d2});
    if (!check_transport_derivative(x, seed))
        throw InternalInconsistency("first-order transport does not match -d1 f");
    r["transport_derivative_check"] = true;
    std::cerr << in.algebra.name << " (" << name(v) << "): tangent " << verdict.variety_tangent_dim << ", orbit "
              << verdict.orbit_tangent_dim << ", stack " << verdict.stack_tangent_dim
              << (verdict.rigid_in_moduli ? ", rigid" : ", not rigid") << '\n';
    return r;
}

Json cmd_count(const std::string& kind, std::size_t n, bool witnesses)
{
    Json r = report_header("count", std::nullopt);
    CountResult c;
    if (kind == "assoc")
        c = n_assoc(n, witnesses);
    else if (kind == "lie")
        c = n_lie(n, witnesses);
    else
        throw CLI::ValidationError("count kind must be assoc or lie");
    r["kind"] = kind;
    r["count"] = to_json(c);
    std::cerr << "N_" << kind << "(" << n << ") = " << c.value.get_str() << '\n';
    return r;
}

Json cmd_equivariance(std::uint64_t seed, std::size_t dim)
{
    Json r = report_header("equivariance", seed);
    const auto b = equivariance_battery(dim, seed);
    r["battery"] = to_json(b);
    for (const auto& l : b.laws)
        std::cerr << (l.passed() ? "pass " : "FAIL ") << l.law << " (" << l.checks << " checks)\n";
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Structure constants, deformation cohomology, invariant forms and orbit counts"};
    app.require_subcommand(1);

    InputOptions input;
    std::string theory_text;
    std::string field_text = "rational";
    std::uint64_t seed = kDefaultSeed;
    std::string count_kind;
    std::size_t count_n = 0;
    bool witnesses = false;
    std::size_t dim = 2;

    auto* check = app.add_subcommand("check", "Variety membership and identity residuals");
    add_input_options(check, input);

    auto* coh = app.add_subcommand("cohomology", "Low-degree cohomology in the chosen theory");
    add_input_options(coh, input);
    coh->add_option("--theory", theory_text, "alg|comm|leib|lie|hochschild|harrison|leibniz|ce")->required();
    coh->add_option("--field", field_text, "rational (exact) or prime (mod-p ranks only)");

    auto* forms = app.add_subcommand("forms", "Trace and Killing forms, characters, canonical subspaces");
    add_input_options(forms, input);

    auto* rig = app.add_subcommand("rigidity", "Tangent dimensions and rigidity verdict");
    add_input_options(rig, input);
    rig->add_option("--theory", theory_text, "alg|comm|leib|lie|hochschild|harrison|leibniz|ce")->required();
    rig->add_option("--field", field_text, "rational (exact) or prime (mod-p ranks only)");
    rig->add_option("--seed", seed, "Seed for the transport-derivative check")->capture_default_str();

    auto* count = app.add_subcommand("count", "Orbit counts on the separable / semisimple loci");
    count->add_option("kind", count_kind, "assoc or lie")->required();
    count->add_option("n", count_n, "Dimension")->required()->check(CLI::PositiveNumber);
    count->add_flag("--witnesses", witnesses, "List the decompositions");

    auto* eq = app.add_subcommand("equivariance", "Randomized transport and covariance laws");
    eq->add_option("--seed", seed, "Seed")->capture_default_str();
    eq->add_option("--dim", dim, "Dimension (2 or 3)")->check(CLI::IsMember({2, 3}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Json report;
        if (*check) {
            report = cmd_check(load(input));
        } else if (*coh) {
            report = cmd_cohomology(load(input), parse_theory(theory_text), parse_field(field_text));
        } else if (*forms) {
            report = cmd_forms(load(input));
        } else if (*rig) {
            report = cmd_rigidity(load(input), parse_theory(theory_text), parse_field(field_text), seed);
        } else if (*count) {
            report = cmd_count(count_kind, count_n, witnesses);
        } else if (*eq) {
            report = cmd_equivariance(seed, dim);
            emit(report);
            return report["battery"]["passed"].get<bool>() ? 0 : 4;
        }
        emit(report);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const OffVariety& e) {
        std::cerr << "off variety: " << e.what() << '\n';
        return 3;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 4;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
