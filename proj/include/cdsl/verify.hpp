#pragma once

// Verification suites: each check compares two computations exactly and, on
// failure, records the smallest monomial input that exhibits the difference.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cdsl/graded.hpp"
#include "cdsl/io.hpp"

namespace cdsl {

struct CheckResult {
    std::string suite;
    std::string name;
    int N = 0;
    bool pass = true;
    std::size_t cases = 0;
    std::string detail;
    std::optional<json> witness;
};

struct SuiteParams {
    int N = 3;
    int degree = 3;
    int trials = 25;
    std::uint64_t seed = 0;
};

inline json to_json(const CheckResult& c)
{
    json j;
    j["suite"] = c.suite;
    j["check"] = c.name;
    j["N"] = c.N;
    j["pass"] = c.pass;
    j["cases"] = c.cases;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

namespace detail {

// Smallest word (in word order) on which two series differ.
inline std::optional<json> first_difference(const Series& a, const Series& b)
{
    std::optional<Word> best;
    auto scan = [&](const Series& x, const Series& y) {
        for (const auto& [w, c] : x.terms())
            if ((!best || w < *best) && y.coefficient(w) != c) best = w;
    };
    scan(a, b);
    scan(b, a);
    if (!best) return std::nullopt;
    return json{{"word", word_to_json(*best)},
                {"lhs", cycnum_to_json(a.coefficient(*best))},
                {"rhs", cycnum_to_json(b.coefficient(*best))}};
}

inline std::optional<json> first_difference(const TensorSeries& a, const TensorSeries& b)
{
    std::optional<TensorSeries::Key> best;
    auto scan = [&](const TensorSeries& x, const TensorSeries& y) {
        for (const auto& [k, c] : x.terms())
            if ((!best || k < *best) && y.coefficient(k.first, k.second) != c) best = k;
    };
    scan(a, b);
    scan(b, a);
    if (!best) return std::nullopt;
    return json{{"left", word_to_json(best->first)},
                {"right", word_to_json(best->second)},
                {"lhs", cycnum_to_json(a.coefficient(best->first, best->second))},
                {"rhs", cycnum_to_json(b.coefficient(best->first, best->second))}};
}

// Compares lhs(f) and rhs(f) on every input; a failing input is reduced to its
// first failing monomial, which for linear maps always exists.
template <class Out>
CheckResult compare_maps(std::string suite, std::string name, int N, const std::vector<Series>& inputs,
                         const std::function<Out(const Series&)>& lhs, const std::function<Out(const Series&)>& rhs)
{
    CheckResult r{std::move(suite), std::move(name), N, true, 0, {}, {}};
    for (const Series& f : inputs) {
        ++r.cases;
        if (lhs(f) == rhs(f)) continue;
        r.pass = false;
        Series culprit = f;
        for (const auto& [w, c] : f.sorted_terms()) {
            Series m = Series::monomial(f.context(), f.alphabet(), f.max_degree(), w, c);
            if (!(lhs(m) == rhs(m))) {
                culprit = m;
                break;
            }
        }
        json wit;
        wit["input"] = to_json(culprit);
        if (auto d = first_difference(lhs(culprit), rhs(culprit))) wit["difference"] = *d;
        r.witness = wit;
        break;
    }
    return r;
}

inline std::vector<Series> random_inputs(int N, Alphabet a, int D, int trials, std::uint64_t seed,
                                         RandomSeriesOptions opt = {})
{
    const CycContext& ctx = cyclotomic_context(N);
    std::vector<Series> v;
    for (int i = 0; i < trials; ++i) v.push_back(random_series(ctx, a, D, seed * 1000003u + i, opt));
    return v;
}

inline std::vector<Series> basis_monomials(int N, Alphabet a, int D)
{
    const CycContext& ctx = cyclotomic_context(N);
    std::vector<Series> v;
    for (const Word& w : enumerate_words_up_to(a, N, D)) v.push_back(Series::monomial(ctx, a, D, w));
    return v;
}

inline TensorSeries tensor_map(const TensorSeries& t, const std::function<Series(const Series&)>& f, Alphabet target)
{
    const CycContext& ctx = t.context();
    const int D = t.max_degree();
    TensorSeries out(ctx, target, D);
    for (const auto& [k, c] : t.terms()) {
        Series l = f(Series::monomial(ctx, t.alphabet(), D, k.first));
        Series r = f(Series::monomial(ctx, t.alphabet(), D, k.second));
        for (const auto& [u, a] : l.terms())
            for (const auto& [v, b] : r.terms()) out.add_term(u, v, c * a * b);
    }
    return out;
}

inline CheckResult bool_check(std::string suite, std::string name, int N, std::size_t cases, bool pass,
                              std::string detail = {}, std::optional<json> witness = {})
{
    return CheckResult{std::move(suite), std::move(name), N, pass, cases, std::move(detail), std::move(witness)};
}

} // namespace detail

using Checks = std::vector<CheckResult>;
using SeriesFn = std::function<Series(const Series&)>;

// ---------------------------------------------------------------- iso

inline Checks suite_iso(const SuiteParams& p)
{
    const int N = p.N;
    SeriesFn id = [](const Series& f) { return f; };
    SeriesFn FinvF = [](const Series& f) { return map_F_inv(map_F(f)); };
    SeriesFn FFinv = [](const Series& f) { return map_F(map_F_inv(f)); };
    return {detail::compare_maps<Series>("iso", "F^-1 F = id on basis words", N,
                                         detail::basis_monomials(N, Alphabet::Xt, p.degree), FinvF, id),
            detail::compare_maps<Series>("iso", "F F^-1 = id on basis words", N,
                                         detail::basis_monomials(N, Alphabet::X, p.degree), FFinv, id)};
}

// ---------------------------------------------------------------- diagrams

inline Checks suite_diagrams(const SuiteParams& p)
{
    const int N = p.N;
    const int D = p.degree;
    auto in = detail::random_inputs(N, Alphabet::Xt, D, p.trials, p.seed);
    Checks out;
    out.push_back(detail::compare_maps<Series>(
        "diagrams", "proj_Y F = F_Y proj_Y", N, in, [](const Series& f) { return proj_Y(map_F(f)); },
        [](const Series& f) { return map_F_Y(proj_Y(f)); }));
    out.push_back(detail::compare_maps<Series>(
        "diagrams", "F qt = p F", N, in, [](const Series& f) { return map_F(map_q(f)); },
        [](const Series& f) { return map_p(map_F(f)); }));
    out.push_back(detail::compare_maps<Series>(
        "diagrams", "F qt^-1 = p^-1 F", N, in, [](const Series& f) { return map_F(map_q(f, true)); },
        [](const Series& f) { return map_p(map_F(f), true); }));
    out.push_back(detail::compare_maps<Series>(
        "diagrams", "F_Y psi_*t = (F psi)_*", N, in,
        [](const Series& f) { return map_F_Y(psi_star_tilde(f)); },
        [](const Series& f) { return psi_star(map_F(f)); }));
    return out;
}

// ---------------------------------------------------------------- t-compat

inline Checks suite_t_compat(const SuiteParams& p)
{
    const int N = p.N;
    auto in = detail::random_inputs(N, Alphabet::Xt, p.degree, p.trials, p.seed + 1);
    Checks out;
    for (int a = 1; a <= N; ++a)
        out.push_back(detail::compare_maps<Series>(
            "t-compat", "F tt_" + std::to_string(a) + " = t_zeta^" + std::to_string(a) + " F", N, in,
            [a](const Series& f) { return map_F(map_t_tilde(f, a)); },
            [a](const Series& f) { return map_t_zeta(map_F(f), a); }));
    return out;
}

// ---------------------------------------------------------------- T-projector

// Independent description of T_a: keep the words of class weight a.
inline Series weight_projection(const Series& f, int a)
{
    Series out(f.context(), f.alphabet(), f.max_degree());
    for (const auto& [w, c] : f.terms())
        if (word_weight(w, f.level()) == mod_residue(a, f.level())) out.add_unchecked(w, c);
    return out;
}

inline Checks suite_T_projector(const SuiteParams& p)
{
    const int N = p.N;
    auto in = detail::random_inputs(N, Alphabet::Xt, p.degree, p.trials, p.seed + 2);
    std::size_t rational_cases = 0;
    bool rational_ok = true, sum_ok = true, idem_ok = true;
    std::optional<json> rational_wit, sum_wit, idem_wit;
    for (const Series& f : in) {
        std::vector<Series> T;
        Series sum(f.context(), Alphabet::Xt, f.max_degree());
        for (int a = 1; a <= N; ++a) {
            T.push_back(map_T(f, a));
            sum += T.back();
            ++rational_cases;
            if (rational_ok && !T.back().is_rational()) {
                rational_ok = false;
                rational_wit = json{{"a", a}, {"input", to_json(f)}};
            }
        }
        if (sum_ok && !(sum == f)) {
            sum_ok = false;
            sum_wit = detail::first_difference(sum, f);
        }
        for (int a = 1; a <= N && idem_ok; ++a)
            for (int b = 1; b <= N && idem_ok; ++b) {
                Series lhs = map_T(T[a - 1], b);
                Series rhs = a == b ? T[a - 1] : Series(f.context(), Alphabet::Xt, f.max_degree());
                if (!(lhs == rhs)) {
                    idem_ok = false;
                    idem_wit = json{{"a", a}, {"b", b}, {"difference", *detail::first_difference(lhs, rhs)}};
                }
            }
    }
    Checks out;
    out.push_back(detail::bool_check("T-projector", "T_a preserves rational series", N, rational_cases, rational_ok,
                                     {}, rational_wit));
    out.push_back(detail::bool_check("T-projector", "sum_a T_a = id", N, in.size(), sum_ok, {}, sum_wit));
    out.push_back(detail::bool_check("T-projector", "T_a T_b = delta_ab T_a", N, in.size(), idem_ok, {}, idem_wit));
    for (int a = 1; a <= N; ++a)
        out.push_back(detail::compare_maps<Series>(
            "T-projector", "T_" + std::to_string(a) + " = projection onto class weight " + std::to_string(a), N, in,
            [a](const Series& f) { return map_T(f, a); }, [a](const Series& f) { return weight_projection(f, a); }));
    return out;
}

// ---------------------------------------------------------------- d-compat

inline Checks suite_d_compat(const SuiteParams& p)
{
    const int N = p.N;
    RandomSeriesOptions opt;
    auto psis = detail::random_inputs(N, Alphabet::Xt, p.degree, p.trials, p.seed + 3, opt);
    auto targets = detail::random_inputs(N, Alphabet::Xt, p.degree, p.trials, p.seed + 4, opt);
    CheckResult r{"d-compat", "F dt_psi = d_F(psi) F", N, true, 0, {}, {}};
    for (std::size_t i = 0; i < psis.size() && r.pass; ++i) {
        const Series Fpsi = map_F(psis[i]);
        auto sub = detail::compare_maps<Series>(
            "d-compat", r.name, N, {targets[i]}, [&](const Series& g) { return map_F(derivation(psis[i], g)); },
            [&](const Series& g) { return derivation(Fpsi, map_F(g)); });
        ++r.cases;
        if (!sub.pass) {
            r.pass = false;
            json w = *sub.witness;
            w["psi"] = to_json(psis[i]);
            r.witness = w;
        }
    }
    return {r};
}

// ---------------------------------------------------------------- hopf

inline Checks suite_hopf(const SuiteParams& p)
{
    const int N = p.N;
    const int D = p.degree;
    Checks out;
    auto in = detail::random_inputs(N, Alphabet::Xt, D, p.trials, p.seed + 5);
    RandomSeriesOptions yopt;
    yopt.y_supported = true;
    auto yin = detail::random_inputs(N, Alphabet::Xt, D, p.trials, p.seed + 6, yopt);
    const SeriesFn F = [](const Series& f) { return map_F(f); };
    out.push_back(detail::compare_maps<TensorSeries>(
        "hopf", "shuffle coproduct: Delta F = (F x F) Delta~", N, in,
        [](const Series& f) { return coproduct(map_F(f), ProductKind::ShuffleX); },
        [&](const Series& f) { return detail::tensor_map(coproduct(f, ProductKind::ShuffleXt), F, Alphabet::X); }));
    out.push_back(detail::compare_maps<TensorSeries>(
        "hopf", "harmonic coproduct: Delta F_Y = (F_Y x F_Y) Delta~", N, yin,
        [](const Series& f) { return coproduct(map_F_Y(f), ProductKind::HarmonicY); },
        [&](const Series& f) { return detail::tensor_map(coproduct(f, ProductKind::HarmonicYt), F, Alphabet::X); }));

    // Coassociativity of a coproduct defined by pairing is associativity of the
    // product on every triple of legs.
    const int Dc = std::min(D, 3);
    for (ProductKind k : {ProductKind::ShuffleX, ProductKind::ShuffleXt, ProductKind::HarmonicY, ProductKind::HarmonicYt}) {
        auto legs = detail::leg_words(k, N, Dc);
        std::size_t cases = 0;
        bool ok = true;
        std::optional<json> wit;
        auto times = [&](const WordPoly& a, const Word& w, bool left) {
            WordPoly r;
            for (const auto& [u, c] : a)
                for (const auto& [v, e] : left ? word_product(u, w, k, N) : word_product(w, u, k, N)) r[v] += c * e;
            for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
            return r;
        };
        for (int a = 0; a <= Dc && ok; ++a)
            for (int b = 0; a + b <= Dc && ok; ++b)
                for (int c = 0; a + b + c <= Dc && ok; ++c)
                    for (const Word& u : legs[a])
                        for (const Word& v : legs[b])
                            for (const Word& w : legs[c]) {
                                ++cases;
                                if (times(word_product(u, v, k, N), w, true) == times(word_product(v, w, k, N), u, false))
                                    continue;
                                ok = false;
                                wit = json{{"u", word_to_json(u)}, {"v", word_to_json(v)}, {"w", word_to_json(w)}};
                                goto done;
                            }
    done:
        static const char* names[] = {"shuffle X", "shuffle Xt", "harmonic Y", "harmonic Yt"};
        out.push_back(detail::bool_check("hopf", std::string("coassociativity (") + names[static_cast<int>(k)] + ")",
                                         N, cases, ok, {}, wit));
    }
    return out;
}

// ---------------------------------------------------------------- bracket

inline Checks suite_bracket(const SuiteParams& p)
{
    const int N = p.N;
    const CycContext& ctx = cyclotomic_context(N);
    Checks out;
    for (DmrVariant v : {DmrVariant::DmrMuN, DmrVariant::DmrBracketN}) {
        const DmrForm form = variant_form(v);
        const std::string tag = form == DmrForm::MuN ? "mu_N" : "[N]";
        GradedPiece g = dmr_graded_basis(N, 1, v);
        std::size_t cases = 0;
        bool ok = true;
        std::optional<json> wit;
        for (std::size_t i = 0; i < g.dimension(); ++i)
            for (std::size_t j = i + 1; j < g.dimension(); ++j) {
                ++cases;
                Series b = bracket(g.element(ctx, i, 2), g.element(ctx, j, 2));
                DmrReport rep = dmr_check(b, form);
                if (ok && !rep.member()) {
                    ok = false;
                    wit = json{{"bracket", to_json(b)}, {"failed", rep.first_failure()}};
                }
            }
        out.push_back(detail::bool_check("bracket", "degree-1 brackets lie in dmr0^" + tag, N, cases, ok,
                                         "basis size " + std::to_string(g.dimension()), wit));

        const Alphabet A = form_alphabet(form);
        auto f = detail::random_inputs(N, A, std::min(p.degree, 3), p.trials, p.seed + 7);
        auto g2 = detail::random_inputs(N, A, std::min(p.degree, 3), p.trials, p.seed + 8);
        auto h = detail::random_inputs(N, A, std::min(p.degree, 3), p.trials, p.seed + 9);
        CheckResult jr{"bracket", "Jacobi identity (" + tag + ")", N, true, 0, {}, {}};
        for (int t = 0; t < p.trials && jr.pass; ++t) {
            ++jr.cases;
            Series s = bracket(f[t], bracket(g2[t], h[t])) + bracket(g2[t], bracket(h[t], f[t])) +
                       bracket(h[t], bracket(f[t], g2[t]));
            if (!s.is_zero()) {
                jr.pass = false;
                jr.witness = json{{"f", to_json(f[t])}, {"g", to_json(g2[t])}, {"h", to_json(h[t])},
                                  {"residual", to_json(s)}};
            }
        }
        out.push_back(jr);
    }
    return out;
}

// ---------------------------------------------------------------- dmr-transport

// Random elements of dmr0^[N] up to degree D: sums of random combinations of
// graded basis elements, every other one perturbed by a random series.
inline std::vector<Series> dmr_samples(int N, int D, int trials, std::uint64_t seed, DmrVariant v)
{
    const CycContext& ctx = cyclotomic_context(N);
    const Alphabet A = form_alphabet(variant_form(v));
    std::vector<GradedPiece> pieces;
    for (int d = 1; d <= D; ++d) pieces.push_back(dmr_graded_basis(N, d, v));
    std::mt19937_64 rng(seed);
    std::vector<Series> out;
    for (int t = 0; t < trials; ++t) {
        Series s(ctx, A, D);
        for (const auto& g : pieces)
            for (std::size_t i = 0; i < g.dimension(); ++i) {
                const int c = static_cast<int>(rng() % 7) - 3;
                if (c != 0) s += g.element(ctx, i, D) * mpq_class(c);
            }
        if (t % 2 == 1) {
            RandomSeriesOptions opt;
            opt.density = 0.02;
            opt.min_degree = 1 + static_cast<int>(rng() % D);
            s += random_series(ctx, A, D, rng(), opt);
        }
        out.push_back(s);
    }
    return out;
}

inline Checks suite_dmr_transport(const SuiteParams& p)
{
    const int N = p.N;
    const int D = p.degree;
    Checks out;
    auto samples = dmr_samples(N, D, p.trials, p.seed + 10, DmrVariant::DmrBracketN);
    DmrOptions cyc;
    cyc.field = DmrField::QmuN;
    CheckResult r{"dmr-transport", "psi in dmr0^[N] iff F(psi) in Q(mu_N) x dmr0^mu_N", N, true, 0, {}, {}};
    std::size_t members = 0;
    for (const Series& s : samples) {
        ++r.cases;
        const DmrReport a = dmr_check(s, DmrForm::BracketN, cyc);
        const DmrReport b = dmr_check(map_F(s), DmrForm::MuN, cyc);
        members += a.member();
        const bool same = a.member() == b.member() && a.cond_ii.primitive == b.cond_ii.primitive &&
                          a.cond_iv.primitive == b.cond_iv.primitive;
        if (!same && r.pass) {
            r.pass = false;
            r.witness = json{{"input", to_json(s)},
                             {"tilde_failure", a.first_failure()},
                             {"mu_failure", b.first_failure()}};
        }
    }
    r.detail = std::to_string(members) + " of " + std::to_string(samples.size()) + " samples are members";
    out.push_back(r);

    const int Db = D + 1;
    auto f = detail::random_inputs(N, Alphabet::Xt, Db, p.trials, p.seed + 11);
    auto g = detail::random_inputs(N, Alphabet::Xt, Db, p.trials, p.seed + 12);
    CheckResult br{"dmr-transport", "F<f,g>~ = <F f, F g>", N, true, 0, {}, {}};
    for (int t = 0; t < p.trials && br.pass; ++t) {
        ++br.cases;
        Series lhs = map_F(bracket(f[t], g[t]));
        Series rhs = bracket(map_F(f[t]), map_F(g[t]));
        if (!(lhs == rhs)) {
            br.pass = false;
            br.witness = json{{"f", to_json(f[t])}, {"g", to_json(g[t])},
                              {"difference", *detail::first_difference(lhs, rhs)}};
        }
    }
    out.push_back(br);
    return out;
}

// ---------------------------------------------------------------- galois

inline Checks suite_galois(const SuiteParams& p)
{
    const int N = p.N;
    const CycContext& ctx = cyclotomic_context(N);
    RandomSeriesOptions opt;
    opt.rational = false;
    auto in = detail::random_inputs(N, Alphabet::Xt, p.degree, p.trials, p.seed + 13, opt);
    Checks out;
    for (GaloisElement s : galois_group(ctx)) {
        const std::string k = std::to_string(s.k);
        out.push_back(detail::compare_maps<Series>(
            "galois", "F sigma_" + k + " = Delta_sigma F", N, in,
            [s](const Series& f) { return map_F(galois_act(f, s, GaloisVariant::CoeffOnly)); },
            [s](const Series& f) { return galois_act(map_F(f), s, GaloisVariant::Delta); }));
        out.push_back(detail::compare_maps<Series>(
            "galois", "F Deltat_sigma_" + k + " = sigma F", N, in,
            [s](const Series& f) { return map_F(galois_act(f, s, GaloisVariant::DeltaTilde)); },
            [s](const Series& f) { return galois_act(map_F(f), s, GaloisVariant::CoeffOnly); }));
    }
    // Stability of both Q-forms under the letter automorphisms.
    for (DmrVariant v : {DmrVariant::DmrMuN, DmrVariant::DmrBracketN}) {
        const DmrForm form = variant_form(v);
        std::size_t cases = 0;
        bool ok = true;
        std::optional<json> wit;
        for (int d = 1; d <= std::min(p.degree, 2); ++d) {
            GradedPiece g = dmr_graded_basis(N, d, v);
            for (GaloisElement s : galois_group(ctx))
                for (std::size_t i = 0; i < g.dimension(); ++i) {
                    ++cases;
                    Series e = g.element(ctx, i, d);
                    Series img = form == DmrForm::MuN ? map_delta(e, s.k) : map_delta_tilde(e, s.k);
                    if (ok && !dmr_check(img, form).member()) {
                        ok = false;
                        wit = json{{"k", s.k}, {"element", to_json(e)}};
                    }
                }
        }
        out.push_back(detail::bool_check("galois",
                                         std::string("dmr0^") + (form == DmrForm::MuN ? "mu_N" : "[N]") +
                                             " stable under letter automorphisms",
                                         N, cases, ok, {}, wit));
    }
    return out;
}

// ---------------------------------------------------------------- descent

// Coordinates of a homogeneous series in the echelon-complement kernel basis,
// or nullopt when it is not in the span.
inline std::optional<std::vector<mpq_class>> kernel_coordinates(const GradedPiece& g, const Series& s)
{
    std::vector<mpq_class> c;
    for (std::size_t col : g.kernel.free_columns) {
        const CycNum v = s.coefficient(g.system.words[col]);
        if (!v.is_rational()) return std::nullopt;
        c.push_back(v.rational_part());
    }
    Series back(s.context(), s.alphabet(), s.max_degree());
    for (std::size_t l = 0; l < c.size(); ++l)
        if (c[l] != 0) back += g.element(s.context(), l, s.max_degree()) * c[l];
    if (!(back == s)) return std::nullopt;
    return c;
}

struct InvariantPiece {
    GradedPiece piece;
    // Vectors in Q^{phi * dim}, index j * phi + i standing for zeta^i times basis element j.
    std::vector<std::vector<mpq_class>> fixed;
};

// G_N-fixed part of Q(mu_N) x (graded piece), with sigma acting on scalars and
// by delta_k (or delta~_k) on words.
inline InvariantPiece invariant_basis(int N, int d, DmrVariant v, const GradedOptions& opt = {})
{
    const CycContext& ctx = cyclotomic_context(N);
    const DmrForm form = variant_form(v);
    InvariantPiece out{dmr_graded_basis(N, d, v, opt), {}};
    const GradedPiece& g = out.piece;
    const std::size_t n = g.dimension();
    std::vector<Matrix<RationalField>> ops;
    for (GaloisElement s : galois_group(ctx)) {
        Matrix<CyclotomicField> M(CyclotomicField{&ctx}, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Series e = g.element(ctx, j, d);
            Series img = form == DmrForm::MuN ? map_delta(e, s.k) : map_delta_tilde(e, s.k);
            auto c = kernel_coordinates(g, img);
            if (!c) throw DomainError("graded piece not stable under the letter automorphism " + std::to_string(s.k));
            for (std::size_t l = 0; l < n; ++l) M(l, j) = CycNum(ctx, (*c)[l]);
        }
        ops.push_back(restrict_scalars(M, s));
    }
    out.fixed = invariant_subspace(ops, n * static_cast<std::size_t>(ctx.phi));
    return out;
}

inline std::size_t invariant_dimension(int N, int d, DmrVariant v, const GradedOptions& opt = {})
{
    return invariant_basis(N, d, v, opt).fixed.size();
}

// Series over Q(mu_N) represented by a fixed vector.
inline Series invariant_element(const InvariantPiece& p, std::size_t i)
{
    const LinearSystem& sys = p.piece.system;
    const CycContext& ctx = cyclotomic_context(sys.N);
    const std::size_t phi = static_cast<std::size_t>(ctx.phi);
    Series s(ctx, sys.alphabet, sys.degree);
    for (std::size_t j = 0; j < p.piece.dimension(); ++j) {
        std::vector<mpq_class> c(p.fixed[i].begin() + j * phi, p.fixed[i].begin() + (j + 1) * phi);
        s += p.piece.element(ctx, j, sys.degree) * CycNum(ctx, c);
    }
    return s;
}

inline Checks suite_descent(const SuiteParams& p)
{
    const int N = p.N;
    Checks out;
    for (int d = 1; d <= std::min(p.degree, 2); ++d) {
        const std::size_t mu = dmr_graded_basis(N, d, DmrVariant::DmrMuN).dimension();
        const std::size_t br = dmr_graded_basis(N, d, DmrVariant::DmrBracketN).dimension();
        const std::size_t inv_br = invariant_dimension(N, d, DmrVariant::DmrBracketN);
        const std::size_t inv_mu = invariant_dimension(N, d, DmrVariant::DmrMuN);
        const std::string ds = std::to_string(d);
        out.push_back(detail::bool_check("descent", "dim (Q(mu_N) x dmr0^[N]_" + ds + ")^G = dim dmr0^mu_N_" + ds, N,
                                         1, inv_br == mu,
                                         "invariants " + std::to_string(inv_br) + ", dmr0^mu_N " + std::to_string(mu)));
        out.push_back(detail::bool_check("descent", "dim (Q(mu_N) x dmr0^mu_N_" + ds + ")^G = dim dmr0^[N]_" + ds, N,
                                         1, inv_mu == br,
                                         "invariants " + std::to_string(inv_mu) + ", dmr0^[N] " + std::to_string(br)));
    }
    return out;
}

// ---------------------------------------------------------------- dims

inline Checks suite_dims(const SuiteParams& p)
{
    Checks out;
    for (int d = 1; d <= p.degree; ++d) {
        const std::size_t mu = dmr_graded_basis(p.N, d, DmrVariant::DmrMuN).dimension();
        const std::size_t br = dmr_graded_basis(p.N, d, DmrVariant::DmrBracketN).dimension();
        out.push_back(detail::bool_check("dims", "dim dmr0^mu_N_" + std::to_string(d) + " = dim dmr0^[N]_" +
                                                     std::to_string(d),
                                         p.N, 1, mu == br,
                                         "mu_N " + std::to_string(mu) + ", [N] " + std::to_string(br)));
    }
    return out;
}

// ---------------------------------------------------------------- dist

inline Checks suite_dist(const SuiteParams& p)
{
    const int N = p.N;
    const int D = std::min(p.degree, 3);
    const CycContext& ctx = cyclotomic_context(N);
    Checks out;
    auto words = detail::basis_monomials(N, Alphabet::Xt, D);
    for (int d : divisors(N)) {
        const DivisorContext dc(N, d);
        const std::string ds = std::to_string(d);
        out.push_back(detail::compare_maps<Series>(
            "dist", "F_" + ds + " pt^" + ds + " = p^" + ds + " F", N, words,
            [dc](const Series& f) { return map_F_d(map_pd_star_tilde(f, dc), dc); },
            [dc](const Series& f) { return map_pd_star(map_F(f), dc); }));
        out.push_back(detail::compare_maps<Series>(
            "dist", "F_" + ds + " it*_" + ds + " = i*_" + ds + " F", N, words,
            [dc](const Series& f) { return map_F_d(map_id_star_tilde(f, dc), dc); },
            [dc](const Series& f) { return map_id_star(map_F(f), dc); }));
    }
    const int Dd = std::min(D, 2);
    for (int d = 1; d <= Dd; ++d) {
        const std::size_t mu = dmr_graded_basis(N, d, DmrVariant::DmrdMuN).dimension();
        GradedPiece br = dmr_graded_basis(N, d, DmrVariant::DmrdBracketN);
        const std::string ds = std::to_string(d);
        out.push_back(detail::bool_check("dist", "dim dmrd0^mu_N_" + ds + " = dim dmrd0^[N]_" + ds, N, 1,
                                         mu == br.dimension(),
                                         "mu_N " + std::to_string(mu) + ", [N] " + std::to_string(br.dimension())));
        DmrdOptions cyc;
        cyc.dmr.field = DmrField::QmuN;
        bool ok = true;
        std::optional<json> wit;
        for (std::size_t i = 0; i < br.dimension() && ok; ++i) {
            Series e = br.element(ctx, i, d);
            if (!dmrd_check(map_F(e), DmrForm::MuN, cyc).member()) {
                ok = false;
                wit = json{{"element", to_json(e)}};
            }
        }
        out.push_back(detail::bool_check("dist", "F maps dmrd0^[N]_" + ds + " into Q(mu_N) x dmrd0^mu_N", N,
                                         br.dimension(), ok, {}, wit));
    }
    return out;
}

// ---------------------------------------------------------------- registry

struct SuiteInfo {
    std::string id;
    std::string description;
    std::function<Checks(const SuiteParams&)> run;
};

inline const std::vector<SuiteInfo>& suites()
{
    static const std::vector<SuiteInfo> s = {
        {"iso", "F and F^-1 are mutually inverse on all basis words", suite_iso},
        {"diagrams", "F intertwines proj_Y, qt/p and their inverses, and the psi_* corrections", suite_diagrams},
        {"hopf", "F and F_Y respect both coproducts; coassociativity of all four coproducts", suite_hopf},
        {"t-compat", "F tt_a = t_zeta^a F for every a", suite_t_compat},
        {"T-projector", "T_a preserves the Q-form and is the class-weight projector", suite_T_projector},
        {"d-compat", "F dt_psi = d_F(psi) F", suite_d_compat},
        {"bracket", "closure of degree-1 brackets and the Jacobi identity, both forms", suite_bracket},
        {"dmr-transport", "membership and brackets are transported by F", suite_dmr_transport},
        {"galois", "Galois equivariance of F and stability of both Q-forms", suite_galois},
        {"descent", "each Q-form is the Galois-fixed part of the other", suite_descent},
        {"dims", "graded dimensions of both forms agree", suite_dims},
        {"dist", "divisor maps commute with F; distribution algebras correspond", suite_dist},
    };
    return s;
}

inline Checks run_suite(const std::string& id, const SuiteParams& p)
{
    if (id == "all") {
        Checks all;
        for (const auto& s : suites()) {
            Checks c = s.run(p);
            all.insert(all.end(), c.begin(), c.end());
        }
        return all;
    }
    for (const auto& s : suites())
        if (s.id == id) return s.run(p);
    throw DomainError("unknown suite '" + id + "'");
}

} // namespace cdsl
