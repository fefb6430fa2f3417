#pragma once

// Exact arithmetic in Q(mu_N) = Q[t]/Phi_N(t).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cdsl/error.hpp"

namespace cdsl {

inline constexpr int max_level = 60;

inline int mod_residue(long long a, int n)
{
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline int euler_phi(int n)
{
    int count = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

namespace detail {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
inline ZPoly exact_divide(ZPoly num, const ZPoly& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw DomainError("exact_divide: degree too small");
    ZPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const mpz_class c = num[i];
        quot[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw DomainError("exact_divide: nonzero remainder");
    return quot;
}

inline void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division over Q: a = q*b + r.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - db, 0);
    const mpq_class lead = b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) continue;
        mpq_class c = a[i] / lead;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline QPoly poly_sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace detail

// Monic integer coefficient vector of Phi_n, low degree first.
inline std::vector<mpz_class> cyclotomic_polynomial(int n)
{
    if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
    std::map<int, detail::ZPoly> done;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        detail::ZPoly num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (auto& [e, phi_e] : done)
            if (d % e == 0) num = detail::exact_divide(num, phi_e);
        done.emplace(d, std::move(num));
    }
    return done.at(n);
}

struct CycContext {
    int N = 0;
    int phi = 0;
    std::vector<mpz_class> cyclo_poly;
    // zeta_pow[e] = coefficients of zeta^e in the power basis, 0 <= e < N.
    std::vector<std::vector<mpz_class>> zeta_pow;
};

namespace detail {

inline std::unique_ptr<CycContext> build_context(int N)
{
    auto ctx = std::make_unique<CycContext>();
    ctx->N = N;
    ctx->cyclo_poly = cyclotomic_polynomial(N);
    ctx->phi = static_cast<int>(ctx->cyclo_poly.size()) - 1;
    const int phi = ctx->phi;
    ctx->zeta_pow.assign(N, std::vector<mpz_class>(phi, 0));
    // Multiply by t repeatedly, reducing t^phi = -sum c_i t^i.
    std::vector<mpz_class> cur(phi, 0);
    cur[0] = 1;
    for (int e = 0; e < N; ++e) {
        ctx->zeta_pow[e] = cur;
        mpz_class top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i) cur[i] -= top * ctx->cyclo_poly[i];
    }
    return ctx;
}

} // namespace detail

// Contexts are interned per level and live for the whole process.
inline const CycContext& cyclotomic_context(int N)
{
    if (N < 3 || N > max_level)
        throw DomainError("level N must satisfy 3 <= N <= " + std::to_string(max_level));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, detail::build_context(N)).first;
    return *it->second;
}

class CycNum {
public:
    CycNum() = default;
    explicit CycNum(const CycContext& ctx) : ctx_(&ctx), c_(ctx.phi, 0) {}
    CycNum(const CycContext& ctx, const mpq_class& q) : CycNum(ctx) { c_[0] = q; }
    CycNum(const CycContext& ctx, std::vector<mpq_class> coeffs) : ctx_(&ctx), c_(std::move(coeffs))
    {
        if (static_cast<int>(c_.size()) != ctx.phi) throw DomainError("CycNum: wrong coefficient length");
        for (auto& x : c_) x.canonicalize();
    }

    static CycNum zeta_power(const CycContext& ctx, long long e)
    {
        CycNum r(ctx);
        const auto& z = ctx.zeta_pow[mod_residue(e, ctx.N)];
        for (int i = 0; i < ctx.phi; ++i) r.c_[i] = z[i];
        return r;
    }

    const CycContext& context() const { return *ctx_; }
    const CycContext* context_ptr() const { return ctx_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    int level() const { return ctx_->N; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const mpq_class& rational_part() const { return c_[0]; }

    CycNum& operator+=(const CycNum& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (o.c_[i] != 0) c_[i] += o.c_[i];
        return *this;
    }
    CycNum& operator-=(const CycNum& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (o.c_[i] != 0) c_[i] -= o.c_[i];
        return *this;
    }
    CycNum& operator*=(const mpq_class& q)
    {
        for (auto& x : c_)
            if (x != 0) x *= q;
        return *this;
    }
    CycNum& operator*=(const CycNum& o)
    {
        *this = *this * o;
        return *this;
    }

    // this += q * zeta^e * o
    void add_scaled_zeta(const CycNum& o, const mpq_class& q, long long e)
    {
        check(o);
        const int phi = ctx_->phi;
        const int N = ctx_->N;
        const bool unit = q == 1;
        mpq_class scaled;
        for (int i = 0; i < phi; ++i) {
            if (o.c_[i] == 0) continue;
            if (!unit) scaled = o.c_[i] * q;
            const mpq_class& t = unit ? o.c_[i] : scaled;
            const auto& z = ctx_->zeta_pow[mod_residue(e + i, N)];
            for (int j = 0; j < phi; ++j) {
                if (z[j] == 0) continue;
                if (z[j] == 1) c_[j] += t;
                else if (z[j] == -1) c_[j] -= t;
                else c_[j] += t * z[j];
            }
        }
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const mpq_class& q) { return a *= q; }
    friend CycNum operator*(const mpq_class& q, CycNum a) { return a *= q; }
    CycNum operator-() const
    {
        CycNum r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b)
    {
        a.check(b);
        const CycContext& ctx = *a.ctx_;
        const int phi = ctx.phi;
        std::vector<mpq_class> raw(2 * phi - 1, 0);
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j)
                if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
        }
        CycNum r(ctx);
        for (int i = 0; i < phi; ++i) r.c_[i] = raw[i];
        for (int e = phi; e < 2 * phi - 1; ++e) {
            if (raw[e] == 0) continue;
            const auto& z = ctx.zeta_pow[e % ctx.N];
            for (int j = 0; j < phi; ++j)
                if (z[j] != 0) r.c_[j] += raw[e] * z[j];
        }
        return r;
    }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Extended Euclid in Q[t] against Phi_N.
    CycNum inverse() const
    {
        if (is_zero()) throw DomainError("CycNum: inverse of zero");
        using detail::QPoly;
        QPoly a(c_.begin(), c_.end());
        detail::trim(a);
        QPoly m(ctx_->cyclo_poly.begin(), ctx_->cyclo_poly.end());
        // Invariant: s0*a == r0, s1*a == r1 (mod m).
        QPoly r0 = m, r1 = a, s0{}, s1{mpq_class(1)};
        while (!r1.empty()) {
            auto [q, r] = detail::divmod(r0, r1);
            QPoly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 is a nonzero constant since Phi_N is irreducible.
        if (r0.size() != 1) throw DomainError("CycNum: non-invertible element");
        const mpq_class scale = 1 / r0[0];
        auto [q, rem] = detail::divmod(s0, m);
        (void)q;
        CycNum r(*ctx_);
        for (std::size_t i = 0; i < rem.size(); ++i) r.c_[i] = rem[i] * scale;
        return r;
    }

    std::string to_string() const
    {
        std::string s;
        for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
            if (c_[i] == 0) continue;
            std::string term = c_[i].get_str();
            if (i > 0) term += (i == 1 ? "*z" : "*z^" + std::to_string(i));
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s.empty() ? "0" : s;
    }

private:
    void check(const CycNum& o) const
    {
        if (ctx_ != o.ctx_) throw ContextMismatch("CycNum: operands at different levels");
    }

    const CycContext* ctx_ = nullptr;
    std::vector<mpq_class> c_;
};

inline CycNum zeta_power(const CycContext& ctx, long long e) { return CycNum::zeta_power(ctx, e); }

struct GaloisElement {
    int k = 1;
};

inline GaloisElement galois_element(const CycContext& ctx, long long k)
{
    const int r = mod_residue(k, ctx.N);
    if (std::gcd(r, ctx.N) != 1) throw DomainError("galois element must be a unit mod N");
    return GaloisElement{r};
}

inline std::vector<GaloisElement> galois_group(const CycContext& ctx)
{
    std::vector<GaloisElement> g;
    for (int k = 1; k < ctx.N; ++k)
        if (std::gcd(k, ctx.N) == 1) g.push_back(GaloisElement{k});
    return g;
}

inline GaloisElement compose(const CycContext& ctx, GaloisElement a, GaloisElement b)
{
    return GaloisElement{mod_residue(static_cast<long long>(a.k) * b.k, ctx.N)};
}

inline GaloisElement inverse(const CycContext& ctx, GaloisElement a)
{
    for (int k = 1; k < ctx.N; ++k)
        if (mod_residue(static_cast<long long>(a.k) * k, ctx.N) == 1) return GaloisElement{k};
    throw DomainError("galois element not invertible");
}

// Ring homomorphism t -> t^k.
inline CycNum galois_apply(const CycContext& ctx, GaloisElement s, const CycNum& a)
{
    CycNum r(ctx);
    const auto& c = a.coeffs();
    for (int i = 0; i < ctx.phi; ++i)
        if (c[i] != 0) r.add_scaled_zeta(CycNum(ctx, mpq_class(1)), c[i], static_cast<long long>(i) * s.k);
    return r;
}

// sum_{j=1}^{N} zeta^{M j}, by summation.
inline CycNum root_power_sum(const CycContext& ctx, long long M)
{
    CycNum r(ctx);
    for (int j = 1; j <= ctx.N; ++j) r += zeta_power(ctx, M * j);
    return r;
}

} // namespace cdsl
