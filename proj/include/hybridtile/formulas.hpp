#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace hybridtile {

/// A value of the form 2^exponent * rest, when a formula has that shape.
struct FormulaResult {
    Integer value;
    std::optional<long> exponent;
    Integer rest = 1;
};

namespace detail {

inline Integer exact_quotient(const Integer& num, const Integer& den) {
    if (den == 0 || num % den != 0) throw std::logic_error("product formula is not integral");
    return num / den;
}

/// 2^e * x, asserting the result is a nonnegative integer.
inline Integer scaled(long e, const Integer& x) {
    Rational r = pow2(e) * Rational(x);
    r.canonicalize();
    if (!is_integer(r) || r < 0) throw std::logic_error("formula produced a non-integer");
    return r.get_num();
}

}  // namespace detail

inline Integer macmahon(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw InvalidParams("macmahon: sides must be nonnegative");
    Integer num = 1, den = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
    return detail::exact_quotient(num, den);
}

inline Integer kasteleyn_rectangle(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParams("kasteleyn_rectangle: m, n must be positive");
    long double prod = 1.0L;
    const long double pi = std::numbers::pi_v<long double>;
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= n; ++k) {
            long double cj = std::cos(j * pi / (2 * m + 1)), ck = std::cos(k * pi / (2 * n + 1));
            prod *= 4.0L * (cj * cj + ck * ck);
        }
    long double rounded = std::round(prod);
    if (rounded <= 0 || std::fabs(prod - rounded) >= 1e-6L * rounded)
        throw PrecisionLoss("kasteleyn_rectangle: rounding guard failed");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0Lf", rounded);
    return Integer(buf);
}

inline Integer aztec_diamond(int n) {
    if (n < 0) throw InvalidParams("aztec_diamond: order must be nonnegative");
    return pow2_int(static_cast<unsigned long>(n) * static_cast<unsigned long>(n + 1) / 2);
}

inline FormulaResult count_symmetric(const RegionStats& st, int a) {
    int q = a + st.m - st.n;
    if (st.h != st.h_prime || st.bottom_row_color == Color::white || q < st.h) return {0, std::nullopt, 0};
    long e = st.C + st.C_prime - static_cast<long>(st.h) * (2L * q - st.h + 1);
    Integer rest = macmahon(st.h, q - st.h, st.h);
    return {detail::scaled(e, rest), e, rest};
}

namespace detail {

inline long count_cells(const Region& r, Color color, bool above, int diag) {
    long n = 0;
    for (auto& c : r.cells)
        if (c.color == color && (above ? cell_above(c, diag) : cell_below(c, diag))) ++n;
    return n;
}

inline void require_odd(const std::vector<int>& xs) {
    for (int x : xs)
        if (x % 2 == 0) throw InvalidParams("all distances must be odd");
}

}  // namespace detail

/// Specialization for odd distances; C and C' count all black cells above ell and all
/// white cells below it, with heights taken from the closed forms.
inline FormulaResult count_odd_symmetric(int a, const std::vector<int>& d, const std::vector<int>& dp) {
    detail::require_odd(d);
    detail::require_odd(dp);
    int k = static_cast<int>(d.size()), l = static_cast<int>(dp.size());
    int sd = 0, sdp = 0;
    for (int x : d) sd += x;
    for (int x : dp) sdp += x;
    if (k + sd != l + sdp) return {0, std::nullopt, 0};
    int h = (k + sd) / 2;
    if (a + k < h) return {0, std::nullopt, 0};
    Region r = build_region({RegionKind::symmetric, a, d, {}, dp});
    long C = detail::count_cells(r, Color::black, true, r.ell);
    long Cp = detail::count_cells(r, Color::white, false, r.ell);
    long e = C + Cp - static_cast<long>(h) * (2L * a + 2L * k - h + 1);
    Integer rest = macmahon(h, a + k - h, h);
    return {detail::scaled(e, rest), e, rest};
}

inline FormulaResult count_douglas(const RegionStats& st, int a) {
    int q = a + st.m - st.n;
    if (st.bottom_row_color == Color::black || st.h != q) return {0, std::nullopt, 0};
    long e = st.C - static_cast<long>(st.h) * (st.h + 1) / 2;
    return {detail::scaled(e, 1), e, 1};
}

namespace detail {

inline void check_labels(const std::vector<int>& r, int hi) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 1 || r[i] > hi) throw InvalidLabels("label out of range");
        if (i && r[i] <= r[i - 1]) throw InvalidLabels("labels must be strictly increasing");
    }
}

inline Rational vandermonde_ratio(const std::vector<int>& r) {
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            num *= r[j] - r[i];
            den *= static_cast<long>(j - i);
        }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// V_{a,b}(r) = prod_{i<j} (r_j - r_i)/(j - i) for a labels in 1..a+b.
inline Rational v_product(int a, int b, const std::vector<int>& r) {
    if (a < 0 || b < 0 || static_cast<int>(r.size()) != a) throw InvalidLabels("v_product needs exactly a labels");
    detail::check_labels(r, a + b);
    Rational v = detail::vandermonde_ratio(r);
    if (!is_integer(v)) throw std::logic_error("v_product is not integral");
    return v;
}

/// Dented baseless Aztec rectangle: 2^{C(m,2)} prod_{i<j} (t_j - t_i)/(j - i).
inline Integer aztec_dent(int m, int n, const std::vector<int>& t) {
    if (m < 1 || static_cast<int>(t.size()) != m) throw InvalidLabels("aztec_dent needs exactly m labels");
    detail::check_labels(t, n + 1);
    Rational v = detail::vandermonde_ratio(t);
    v *= pow2(static_cast<long>(m) * (m - 1) / 2);
    if (!is_integer(v)) throw std::logic_error("aztec_dent is not integral");
    return v.get_num();
}

namespace detail {

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int x = next; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

inline std::vector<int> complement(int n, const std::vector<int>& a) {
    std::vector<int> out;
    std::size_t j = 0;
    for (int x = 1; x <= n; ++x) {
        if (j < a.size() && a[j] == x)
            ++j;
        else
            out.push_back(x);
    }
    return out;
}

inline std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

/// Sum over the shared labels split into an upward part A and a downward part B; every
/// shared label is on the Aztec side. Valid when d <= a.
inline Integer gamma_sum_full(int a, int b, int c, int d) {
    Rational total = 0;
    detail::for_each_subset(c + d, c, [&](const std::vector<int>& A) {
        auto B = detail::complement(c + d, A);
        total += v_product(b, a, detail::concat(A, detail::range(a + c + 1, a + b))) * v_product(d, c, B);
    });
    Rational out = total * pow2(static_cast<long>(d) * (d - 1) / 2);
    return out.get_num();
}

/// Same sum when the Aztec part is truncated to a+c shared labels. Valid when d >= a.
inline Integer gamma_sum_truncated(int a, int b, int c, int d) {
    Rational total = 0;
    detail::for_each_subset(c + a, c, [&](const std::vector<int>& A) {
        auto B = detail::complement(c + a, A);
        total += v_product(b, a, detail::concat(A, detail::range(a + c + 1, a + b))) *
                 v_product(d, c, detail::concat(B, detail::range(c + a + 1, c + d)));
    });
    Rational out = total * pow2(static_cast<long>(d) * (d - 1) / 2);
    return out.get_num();
}

inline Integer gamma_count(int a, int b, int c, int d, int e) {
    if (a < 1 || b < 1 || c < 1 || d < 1 || e < 1) throw InvalidParams("gamma_count: parameters must be positive");
    if (b < c) throw InvalidParams("gamma_count requires b >= c");
    if (e != c + d - 1) return 0;
    if (d < a) return gamma_sum_full(a, b, c, d);
    if (d > a) return gamma_sum_truncated(a, b, c, d);
    Integer x = gamma_sum_full(a, b, c, d), y = gamma_sum_truncated(a, b, c, d);
    if (x != y) throw std::logic_error("gamma_count: overlapping sum formulas disagree");
    return x;
}

/// All-odd asymmetric quasi-hexagon.
inline FormulaResult count_asym_odd(int a, const std::vector<int>& d, const std::vector<int>& c,
                                    const std::vector<int>& dp) {
    detail::require_odd(d);
    detail::require_odd(c);
    detail::require_odd(dp);
    if (c.empty()) throw InvalidParams("asymmetric regions need middle distances");
    int k = static_cast<int>(d.size()), t = static_cast<int>(c.size());
    int h = 0, hp = 0, h0 = 0;
    for (int x : d) h += (x + 1) / 2;
    for (int x : dp) hp += (x + 1) / 2;
    for (int x : c) h0 += (x - 1) / 2;
    if (h != hp || a + k < h) return {0, std::nullopt, 0};
    Region r = build_region({RegionKind::asymmetric, a, d, c, dp});
    long C = detail::count_cells(r, Color::black, true, r.ell);
    long Cp = detail::count_cells(r, Color::white, false, r.ell_prime);
    long e = C + Cp - static_cast<long>(h) * (2L * a + 2L * k - h + 1);
    if (a + k == h) return {detail::scaled(e, 1), e, 1};
    if (h0 == 0) {
        Integer rest = macmahon(h, a + k - h, h + t);
        return {detail::scaled(e, rest), e, rest};
    }
    Integer rest = gamma_count(a + k - h, h0 + 2 * h + t, h, h0, h0 + h - 1);
    long e2 = e - static_cast<long>(h0) * (h0 - 1) / 2;
    return {detail::scaled(e2, rest), e2, rest};
}

/// General asymmetric quasi-hexagon, from region statistics.
inline FormulaResult count_asym_general(const RegionStats& st, int a, int t) {
    if (st.h != st.h_prime || st.bottom_row_color == Color::white) return {0, std::nullopt, 0};
    int h = st.h, q = a + st.m - st.n;
    if (q < h) return {0, std::nullopt, 0};
    long e = st.C + st.C_prime - static_cast<long>(h) * (2L * q - h + 1);
    if (q == h) return {detail::scaled(e, 1), e, 1};
    if (st.h0 == 0) {
        Integer rest = macmahon(h, q - h, h + t);
        return {detail::scaled(e, rest), e, rest};
    }
    Integer rest = gamma_count(q - h, st.h0 + st.Phi + 2 * h, h, st.h0, h + st.h0 - 1);
    long e2 = e - static_cast<long>(st.h0) * (st.h0 - 1) / 2;
    return {detail::scaled(e2, rest), e2, rest};
}

}  // namespace hybridtile
