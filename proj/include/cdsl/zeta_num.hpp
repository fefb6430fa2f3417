#pragma once

// Double-precision nested sums for N-MPVs and N-CMZVs, with a-priori tail bounds.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "cdsl/error.hpp"

namespace cdsl::num {

using cplx = std::complex<double>;

struct Value {
    cplx value;
    double bound = 0; // bound on |exact - value|
};

struct CheckResult {
    cplx lhs;
    cplx rhs;
    double residual = 0;
    double bound = 0;
    bool pass = false;
};

inline constexpr int max_depth = 3;

// Table of zeta_N^j, j in [0, N), from exact angles.
inline std::vector<cplx> root_table(int N)
{
    std::vector<cplx> t(N);
    for (int j = 0; j < N; ++j) {
        const double a = 2 * std::numbers::pi * j / N;
        t[j] = {std::cos(a), std::sin(a)};
    }
    return t;
}

// int_M^inf (1 + ln x)^j x^{-k} dx for k >= 2.
inline double log_power_tail(double M, int k, int j)
{
    const double L = 1 + std::log(M);
    double sum = 0, fact = 1;
    for (int i = 0; i <= j; ++i) {
        if (i > 0) fact *= (j - i + 1);
        sum += fact * std::pow(L, j - i) / std::pow(k - 1, i + 1);
    }
    return sum * std::pow(M, 1 - k);
}

namespace detail {

inline void check_depth(std::size_t r)
{
    if (r == 0 || r > max_depth) throw DomainError("numeric: depth must be 1.." + std::to_string(max_depth));
}

// Innermost-first accumulation: S_i(n) = sum_{j <= n} c_i(j) S_{i+1}(j - 1).
template <class Coef>
cplx nested_sum(std::size_t r, std::int64_t n_max, Coef coef)
{
    std::vector<cplx> prev(n_max + 1, cplx(1, 0)); // S_{r+1} == 1
    std::vector<cplx> cur(n_max + 1);
    for (std::size_t i = r; i-- > 0;) {
        cur[0] = 0;
        for (std::int64_t n = 1; n <= n_max; ++n) cur[n] = cur[n - 1] + coef(i, n) * prev[n - 1];
        std::swap(prev, cur);
    }
    return prev[n_max];
}

inline double ipow(double x, int k)
{
    double r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace detail

// Tail bound for sum_{n1 > M} of a depth-r sum with leading exponent k1 and
// leading root zeta^{m1}.
inline double mpv_tail_bound(int N, int k1, int m1, std::size_t r, std::int64_t M)
{
    const int j = static_cast<int>(r) - 1;
    if (k1 >= 2) return log_power_tail(static_cast<double>(M), k1, j);
    const int m = ((m1 % N) + N) % N;
    if (m == 0) throw DomainError("mpv: divergent index (k1, zeta1) = (1, 1)");
    // Summation by parts against the bounded partial sums of zeta^n.
    const double B = 1.0 / std::abs(std::sin(std::numbers::pi * m / N));
    const double L = 1 + std::log(static_cast<double>(M));
    return B * (std::pow(L, j) / (M + 1) + 2 * log_power_tail(static_cast<double>(M), 2, j));
}

// Li_{ks}(zeta^{ms}) = sum_{n1 > ... > nr > 0} prod zeta^{m_i n_i} / n_i^{k_i}.
inline Value mpv(const std::vector<int>& ks, const std::vector<int>& ms, int N, std::int64_t n_max)
{
    detail::check_depth(ks.size());
    if (ks.size() != ms.size()) throw DomainError("mpv: ks and ms differ in length");
    for (int k : ks)
        if (k < 1) throw DomainError("mpv: exponents must be positive");
    const auto roots = root_table(N);
    Value v;
    v.bound = mpv_tail_bound(N, ks[0], ms[0], ks.size(), n_max);
    v.value = detail::nested_sum(ks.size(), n_max, [&](std::size_t i, std::int64_t n) {
        const auto idx = static_cast<std::size_t>(((static_cast<std::int64_t>(ms[i]) * n) % N + N) % N);
        return roots[idx] / detail::ipow(static_cast<double>(n), ks[i]);
    });
    return v;
}

// zeta^{mod N}_{alphas}(ks): n_i restricted to the class alpha_i mod N.
inline Value cmzv(const std::vector<int>& ks, const std::vector<int>& alphas, int N, std::int64_t n_max)
{
    detail::check_depth(ks.size());
    if (ks.size() != alphas.size()) throw DomainError("cmzv: ks and alphas differ in length");
    if (ks[0] < 2) throw DomainError("cmzv: k1 must be at least 2");
    Value v;
    v.bound = log_power_tail(static_cast<double>(n_max), ks[0], static_cast<int>(ks.size()) - 1);
    v.value = detail::nested_sum(ks.size(), n_max, [&](std::size_t i, std::int64_t n) {
        if ((n - alphas[i]) % N != 0) return cplx(0, 0);
        return cplx(1.0 / detail::ipow(static_cast<double>(n), ks[i]), 0);
    });
    return v;
}

// Right-hand side of the CMZV/MPV relation: N^{-r} sum_m zeta^{-sum m_i a_i} Li(zeta^m).
inline CheckResult check_bridge(const std::vector<int>& ks, const std::vector<int>& alphas, int N,
                                std::int64_t n_max, double tol)
{
    const Value lhs = cmzv(ks, alphas, N, n_max);
    const std::size_t r = ks.size();
    const auto roots = root_table(N);
    std::vector<int> ms(r, 1);
    cplx rhs = 0;
    double bound = lhs.bound;
    while (true) {
        long long e = 0;
        for (std::size_t i = 0; i < r; ++i) e -= static_cast<long long>(ms[i]) * (((alphas[i] - 1) % N + N) % N + 1);
        const Value li = mpv(ks, ms, N, n_max);
        rhs += roots[static_cast<std::size_t>((e % N + N) % N)] * li.value;
        bound += li.bound / std::pow(N, static_cast<double>(r));
        std::size_t i = r;
        while (i > 0 && ms[i - 1] == N) ms[--i] = 1;
        if (i == 0) break;
        ++ms[i - 1];
    }
    rhs /= std::pow(N, static_cast<double>(r));
    CheckResult c{lhs.value, rhs, std::abs(lhs.value - rhs), bound, false};
    c.pass = c.residual <= tol;
    return c;
}

// d^{sum k} zeta^{mod N}_{alpha}(k) against the sum over the d-th division classes.
// The left side is cut at d * n_max so that both sides cover the same range of
// the rescaled summation variable.
inline CheckResult check_distribution(int N, int d, const std::vector<int>& ks, const std::vector<int>& alphas,
                                      std::int64_t n_max, double tol)
{
    if (d < 1 || N % d != 0) throw DomainError("distribution: d must divide N");
    for (int a : alphas)
        if (((a % N) + N) % N % d != 0) throw DomainError("distribution: alpha must lie in dZ/NZ");
    const std::size_t r = ks.size();
    int weight = 0;
    for (int k : ks) weight += k;
    const Value lhs = cmzv(ks, alphas, N, d * n_max);
    const double scale = std::pow(d, weight);
    // Preimages alpha' with d alpha' = alpha.
    std::vector<std::vector<int>> pre(r);
    for (std::size_t i = 0; i < r; ++i)
        for (int b = 0; b < N; ++b)
            if ((static_cast<long long>(d) * b - alphas[i]) % N == 0) pre[i].push_back(b);
    cplx rhs = 0;
    double bound = scale * lhs.bound;
    std::vector<std::size_t> pick(r, 0);
    while (true) {
        std::vector<int> a(r);
        for (std::size_t i = 0; i < r; ++i) a[i] = pre[i][pick[i]];
        const Value v = cmzv(ks, a, N, n_max);
        rhs += v.value;
        bound += v.bound;
        std::size_t i = r;
        while (i > 0 && pick[i - 1] + 1 == pre[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
        ++pick[i - 1];
    }
    CheckResult c{scale * lhs.value, rhs, std::abs(scale * lhs.value - rhs), bound, false};
    c.pass = c.residual <= tol;
    return c;
}

// Li_1(zeta^a) Li_1(zeta^b) = Li_{1,1}(zeta^a, zeta^b) + Li_{1,1}(zeta^b, zeta^a) + Li_2(zeta^{a+b}).
inline CheckResult check_stuffle_numeric(int N, int a, int b, std::int64_t n_max, double tol)
{
    if (((a % N) + N) % N == 0 || ((b % N) + N) % N == 0) throw DomainError("stuffle: roots must differ from 1");
    const Value la = mpv({1}, {a}, N, n_max);
    const Value lb = mpv({1}, {b}, N, n_max);
    const Value lab = mpv({1, 1}, {a, b}, N, n_max);
    const Value lba = mpv({1, 1}, {b, a}, N, n_max);
    const Value l2 = mpv({2}, {a + b}, N, n_max);
    const cplx lhs = la.value * lb.value;
    const cplx rhs = lab.value + lba.value + l2.value;
    const double bound = la.bound * (std::abs(lb.value) + lb.bound) + lb.bound * std::abs(la.value) + lab.bound +
                         lba.bound + l2.bound;
    CheckResult c{lhs, rhs, std::abs(lhs - rhs), bound, false};
    c.pass = c.residual <= tol;
    return c;
}

} // namespace cdsl::num
