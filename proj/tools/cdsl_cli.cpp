// cdsl: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 invalid flags, malformed input, or a resource cap was hit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cdsl/cdsl.hpp"

using namespace cdsl;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_invalid = 2;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json header(const std::string& command)
{
    json j;
    j["schema"] = json_schema_version;
    j["command"] = command;
    return j;
}

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

DmrVariant parse_algebra(const std::string& a)
{
    if (a == "dmr0-muN") return DmrVariant::DmrMuN;
    if (a == "dmr0-N") return DmrVariant::DmrBracketN;
    if (a == "dmrd0-muN") return DmrVariant::DmrdMuN;
    if (a == "dmrd0-N") return DmrVariant::DmrdBracketN;
    throw DomainError("unknown algebra '" + a + "'");
}

StarTildeScale parse_scale(const std::string& s)
{
    return s == "literal" ? StarTildeScale::literal : StarTildeScale::transported;
}

DistCorrection parse_correction(const std::string& s)
{
    if (s == "tilde-letter") return DistCorrection::tilde_letter;
    if (s == "transported") return DistCorrection::transported;
    return DistCorrection::class_zero_letter;
}

json coeff_list(const std::vector<CycNum>& v)
{
    json a = json::array();
    for (const auto& c : v) a.push_back(cycnum_to_json(c));
    return a;
}

json primitivity_json(const PrimitivityResult& p)
{
    json j;
    j["primitive"] = p.primitive;
    j["violations"] = p.violations;
    if (p.witness)
        j["witness"] = {{"left", word_to_json(p.witness->left)},
                        {"right", word_to_json(p.witness->right)},
                        {"value", cycnum_to_json(p.witness->value)}};
    return j;
}

json report_json(const DmrReport& r)
{
    json j;
    j["form"] = r.form == DmrForm::MuN ? "mu_N" : "[N]";
    j["max_degree"] = r.max_degree;
    j["member"] = r.member();
    j["first_failure"] = r.first_failure();
    j["constant_term"] = cycnum_to_json(r.constant_term);
    j["cond_i"] = coeff_list(r.cond_i);
    j["cond_ii"] = primitivity_json(r.cond_ii);
    j["cond_iii"] = coeff_list(r.cond_iii);
    j["cond_iv"] = primitivity_json(r.cond_iv);
    j["rational"] = r.rational;
    j["warnings"] = r.warnings;
    return j;
}

json residual_json(const DmrdReport& r)
{
    json a = json::array();
    for (const auto& [d, s] : r.residuals) a.push_back({{"d", d}, {"terms", s.size()}, {"zero", s.is_zero()}});
    return a;
}

Series basis_series(const CycContext& ctx, const LinearSystem& sys, const std::vector<CycNum>& v, int D)
{
    Series s(ctx, sys.alphabet, D);
    for (std::size_t j = 0; j < sys.words.size(); ++j)
        if (!v[j].is_zero()) s.add_term(sys.words[j], v[j]);
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact arithmetic for cyclotomic double shuffle Lie algebras"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::vector<int> levels{3};
    SuiteParams sp;
    bool list = false;
    verify->add_option("--suite", suite, "suite id or 'all'");
    verify->add_option("--n", levels, "levels N")->check(CLI::Range(3, max_level));
    verify->add_option("--degree", sp.degree, "truncation degree")->check(CLI::Range(1, 8));
    verify->add_option("--trials", sp.trials, "random cases per identity")->check(CLI::Range(1, 100000));
    verify->add_option("--seed", sp.seed, "random seed");
    verify->add_flag("--list", list, "list suites");

    // dim
    auto* dim = app.add_subcommand("dim", "dimension of a graded piece");
    std::string algebra = "dmr0-muN", field = "Q", scale = "transported", correction = "class-zero-letter";
    int n = 3, degree = 1;
    bool with_basis = false;
    dim->add_option("--algebra", algebra)->check(CLI::IsMember({"dmr0-muN", "dmr0-N", "dmrd0-muN", "dmrd0-N"}));
    dim->add_option("--n", n)->check(CLI::Range(3, max_level));
    dim->add_option("--degree", degree)->check(CLI::Range(1, 12));
    dim->add_option("--field", field)->check(CLI::IsMember({"Q", "QmuN"}));
    dim->add_option("--star-scale", scale)->check(CLI::IsMember({"transported", "literal"}));
    dim->add_option("--correction", correction)
        ->check(CLI::IsMember({"class-zero-letter", "tilde-letter", "transported"}));
    dim->add_flag("--basis", with_basis, "print the basis as series");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Galois-fixed part of Q(mu_N) x dmr0^[N]_d");
    std::string inv_form = "N";
    inv->add_option("--n", n)->check(CLI::Range(3, max_level));
    inv->add_option("--degree", degree)->check(CLI::Range(1, 12));
    inv->add_option("--form", inv_form, "N: act on dmr0^[N]; muN: act on dmr0^mu_N")
        ->check(CLI::IsMember({"N", "muN"}));

    // numeric
    auto* numeric = app.add_subcommand("numeric", "numerical checks of the value identities");
    std::string check_kind = "bridge";
    std::vector<int> ks{2}, alphas{1}, ms{1, 1};
    int dv = 1;
    std::int64_t terms = 100000;
    double tol = 1e-6;
    numeric->add_option("--check", check_kind)->check(CLI::IsMember({"bridge", "distribution", "stuffle", "mpv", "cmzv"}));
    numeric->add_option("--n", n)->check(CLI::Range(3, max_level));
    numeric->add_option("--k", ks);
    numeric->add_option("--alpha", alphas);
    numeric->add_option("--m", ms, "root exponents (mpv, stuffle)");
    numeric->add_option("--d", dv);
    numeric->add_option("--terms", terms)->check(CLI::Range(std::int64_t{1}, std::int64_t{20000000}));
    numeric->add_option("--tol", tol);

    // eval
    auto* eval = app.add_subcommand("eval", "apply a structure map to a series on stdin");
    std::string map_name;
    int param = 0;
    std::vector<std::string> names;
    for (const auto& [s, id] : map_names()) names.push_back(s);
    eval->add_option("--map", map_name)->required()->check(CLI::IsMember(names));
    eval->add_option("--param", param);

    // check
    auto* check = app.add_subcommand("check", "membership report for a series");
    std::string input;
    check->add_option("--algebra", algebra)->check(CLI::IsMember({"dmr0-muN", "dmr0-N", "dmrd0-muN", "dmrd0-N"}));
    check->add_option("--input", input, "series JSON file, '-' for stdin");
    check->add_option("--field", field)->check(CLI::IsMember({"Q", "QmuN"}));
    check->add_option("--star-scale", scale)->check(CLI::IsMember({"transported", "literal"}));
    check->add_option("--correction", correction)
        ->check(CLI::IsMember({"class-zero-letter", "tilde-letter", "transported"}));

    // dist-check
    auto* dist = app.add_subcommand("dist-check", "per-divisor distribution residuals");
    dist->add_option("--n", n)->check(CLI::Range(3, max_level));
    dist->add_option("--input", input, "series JSON file, '-' for stdin");
    dist->add_option("--correction", correction)
        ->check(CLI::IsMember({"class-zero-letter", "tilde-letter", "transported"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_invalid;
    }

    try {
        if (*verify) {
            if (list) {
                json j = header("verify");
                json a = json::array();
                for (const auto& s : suites()) a.push_back({{"id", s.id}, {"description", s.description}});
                j["suites"] = a;
                emit(j);
                return exit_pass;
            }
            json j = header("verify");
            j["suite"] = suite;
            j["params"] = {{"n", levels}, {"degree", sp.degree}, {"trials", sp.trials}, {"seed", sp.seed}};
            json checks = json::array();
            bool pass = true;
            for (int level : levels) {
                sp.N = level;
                for (const auto& c : run_suite(suite, sp)) {
                    pass = pass && c.pass;
                    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.suite << " N=" << c.N << " " << c.name
                              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
                    checks.push_back(to_json(c));
                }
            }
            j["checks"] = checks;
            j["pass"] = pass;
            emit(j);
            return pass ? exit_pass : exit_fail;
        }

        if (*dim) {
            GradedOptions opt;
            opt.star_scale = parse_scale(scale);
            opt.correction = parse_correction(correction);
            const DmrVariant v = parse_algebra(algebra);
            const CycContext& ctx = cyclotomic_context(n);
            json j = header("dim");
            j["algebra"] = algebra;
            j["n"] = n;
            j["degree"] = degree;
            j["field"] = field;
            if (field == "Q") {
                GradedPiece g = dmr_graded_basis(n, degree, v, opt);
                j["dimension"] = g.dimension();
                if (with_basis) {
                    json b = json::array();
                    for (std::size_t i = 0; i < g.dimension(); ++i) b.push_back(to_json(g.element(ctx, i, degree)));
                    j["basis"] = b;
                }
            } else {
                const LinearSystem sys = dmr_linear_system(n, degree, v, opt);
                auto k = kernel(extend_scalars(sys.matrix(), ctx));
                j["dimension"] = k.basis.size();
                if (with_basis) {
                    json b = json::array();
                    for (const auto& vec : k.basis) b.push_back(to_json(basis_series(ctx, sys, vec, degree)));
                    j["basis"] = b;
                }
            }
            emit(j);
            return exit_pass;
        }

        if (*inv) {
            const DmrVariant v = inv_form == "N" ? DmrVariant::DmrBracketN : DmrVariant::DmrMuN;
            const DmrVariant other = inv_form == "N" ? DmrVariant::DmrMuN : DmrVariant::DmrBracketN;
            const std::size_t dim_other = dmr_graded_basis(n, degree, other).dimension();
            const InvariantPiece ip = invariant_basis(n, degree, v);
            const auto& fixed = ip.fixed;
            json j = header("invariants");
            j["form"] = inv_form;
            j["n"] = n;
            j["degree"] = degree;
            j["dimension"] = fixed.size();
            j["expected"] = dim_other;
            json b = json::array();
            for (std::size_t i = 0; i < fixed.size(); ++i) b.push_back(to_json(invariant_element(ip, i)));
            j["basis"] = b;
            j["pass"] = fixed.size() == dim_other;
            emit(j);
            return fixed.size() == dim_other ? exit_pass : exit_fail;
        }

        if (*numeric) {
            int weight = 0;
            for (int k : ks) weight += k;
            if (ks.size() > static_cast<std::size_t>(num::max_depth) || weight > 5)
                throw DomainError("numeric: depth must be at most 3 and weight at most 5");
            json j = header("numeric");
            j["check"] = check_kind;
            j["n"] = n;
            j["terms"] = terms;
            auto put = [&](const num::CheckResult& c) {
                j["value"] = {c.lhs.real(), c.lhs.imag()};
                j["rhs"] = {c.rhs.real(), c.rhs.imag()};
                j["bound"] = c.bound;
                j["residual"] = c.residual;
                j["tol"] = tol;
                j["pass"] = c.pass;
                return c.pass;
            };
            bool pass = true;
            if (check_kind == "bridge") {
                pass = put(num::check_bridge(ks, alphas, n, terms, tol));
            } else if (check_kind == "distribution") {
                j["d"] = dv;
                pass = put(num::check_distribution(n, dv, ks, alphas, terms, tol));
            } else if (check_kind == "stuffle") {
                if (ms.size() != 2) throw DomainError("stuffle: give two root exponents with --m");
                pass = put(num::check_stuffle_numeric(n, ms[0], ms[1], terms, tol));
            } else {
                const num::Value v = check_kind == "mpv" ? num::mpv(ks, ms, n, terms) : num::cmzv(ks, alphas, n, terms);
                j["value"] = {v.value.real(), v.value.imag()};
                j["bound"] = v.bound;
            }
            emit(j);
            return pass ? exit_pass : exit_fail;
        }

        if (*eval) {
            MapDescriptor d;
            for (const auto& [s, id] : map_names())
                if (s == map_name) d.id = id;
            d.param = param;
            emit(to_json(apply_map(d, deserialize_series(read_input("-")))));
            return exit_pass;
        }

        if (*check) {
            const Series psi = deserialize_series(read_input(input));
            const DmrVariant v = parse_algebra(algebra);
            DmrdOptions opt;
            opt.dmr.field = field == "QmuN" ? DmrField::QmuN : DmrField::Q;
            opt.dmr.star_scale = parse_scale(scale);
            opt.correction = parse_correction(correction);
            json j = header("check");
            j["algebra"] = algebra;
            bool member;
            if (variant_has_dist(v)) {
                DmrdReport r = dmrd_check(psi, variant_form(v), opt);
                j["report"] = report_json(r.base);
                j["distribution"] = residual_json(r);
                member = r.member();
            } else {
                DmrReport r = dmr_check(psi, variant_form(v), opt.dmr);
                j["report"] = report_json(r);
                member = r.member();
            }
            j["member"] = member;
            emit(j);
            return member ? exit_pass : exit_fail;
        }

        if (*dist) {
            const Series psi = deserialize_series(read_input(input));
            if (psi.level() != n) throw DomainError("--n does not match the level of the input series");
            DmrdReport r{DmrReport{}, {}};
            for (int d : divisors(n))
                r.residuals.emplace_back(d, dist_residual(psi, DivisorContext(n, d), parse_correction(correction)));
            json j = header("dist-check");
            j["n"] = n;
            j["residuals"] = residual_json(r);
            j["pass"] = r.dist_ok();
            emit(j);
            return r.dist_ok() ? exit_pass : exit_fail;
        }
    } catch (const cdsl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_pass;
}
