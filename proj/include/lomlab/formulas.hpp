#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lomlab/chessboard.hpp"
#include "lomlab/combinatorics.hpp"
#include "lomlab/engine.hpp"
#include "lomlab/sign_matrix.hpp"

namespace lomlab {

/// Raised when a closed form is evaluated outside the range where it holds.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Rational = boost::multiprecision::cpp_rational;

namespace detail {
inline std::string rnk(int r, int n, int k) {
    return "(r,n,k)=(" + std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}
inline std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0) return 0;
    return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}
}  // namespace detail

/// c_r(n,k) = 2 * sum_{i=0}^{r-1-2k} C(n-1, i), valid for r >= 2k+1 >= 3 and n >= 2(r-k)+1.
inline std::uint64_t c_closed_form(int r, int n, int k) {
    if (k < 1 || r < 2 * k + 1) throw precondition_error("closed form needs r >= 2k+1 >= 3, got " + detail::rnk(r, n, k));
    if (n < 2 * (r - k) + 1) {
        throw precondition_error("closed form needs n >= 2(r-k)+1, got " + detail::rnk(r, n, k) +
                                 "; c is unknown in closed form there");
    }
    std::uint64_t sum = 0;
    for (int i = 0; i <= r - 1 - 2 * k; ++i) sum = checked_add(sum, detail::binom(n - 1, i));
    return checked_mul(2, sum);
}

struct CValue {
    enum class Source { closed_form, odd_rank_special, computed, unknown };
    std::uint64_t value = 0;
    Source source = Source::unknown;
};

inline std::string_view to_string(CValue::Source s) noexcept {
    switch (s) {
        case CValue::Source::closed_form: return "closed_form";
        case CValue::Source::odd_rank_special: return "odd_rank_special";
        case CValue::Source::computed: return "computed";
        case CValue::Source::unknown: break;
    }
    return "unknown";
}

/// c_r(n,k) from the closed form, the odd-rank special values, or by counting on the
/// alternating matrix, in that order of preference.
inline CValue c_value(int r, int n, int k, Engine engine = Engine::circuits) {
    if (k < 0 || r < 2 * k + 1) throw precondition_error("c_value needs r >= 2k+1, got " + detail::rnk(r, n, k));
    if (n < r + 1) throw precondition_error("c_value needs n >= r+1, got " + detail::rnk(r, n, k));
    if (k >= 1 && n >= 2 * (r - k) + 1) return {c_closed_form(r, n, k), CValue::Source::closed_form};
    if (k >= 1 && r == 2 * k + 1) {
        if (n >= r + 2) return {2, CValue::Source::odd_rank_special};
        return {detail::binom(r + 1, k + 1), CValue::Source::odd_rank_special};
    }
    return {f_count(alternating_matrix(r, n), k, engine), CValue::Source::computed};
}

/// Number of plain travels of any r x n matrix: sum_{i=0}^{r-1} C(n-1, i).
inline std::uint64_t total_plain_travels(int r, int n) {
    if (r < 2 || n < r) throw precondition_error("plain travels need 2 <= r <= n");
    std::uint64_t sum = 0;
    for (int i = 0; i <= r - 1; ++i) sum = checked_add(sum, detail::binom(n - 1, i));
    return sum;
}

/// Upper bound on f for rank r >= 2k+1 >= 3 LOMs on n >= 2r-1 elements:
/// c_r(n,k) + 2 * (sum_{i=r-2k}^{r-1} C(n-1,i) - sum_{i=4}^{2k+3} C(n - 3 floor((i-1)/2) + 1 + (i mod 2), r+3-i)).
inline std::uint64_t lom_upper_bound(int r, int n, int k) {
    if (k < 1 || r < 2 * k + 1) throw precondition_error("LOM bound needs r >= 2k+1 >= 3, got " + detail::rnk(r, n, k));
    if (n < 2 * r - 1) throw precondition_error("LOM bound needs n >= 2r-1, got " + detail::rnk(r, n, k));
    std::uint64_t travels = 0;
    for (int i = r - 2 * k; i <= r - 1; ++i) travels = checked_add(travels, detail::binom(n - 1, i));
    std::uint64_t excluded = 0;
    for (int i = 4; i <= 2 * k + 3; ++i) {
        excluded = checked_add(excluded, detail::binom(n - 3 * ((i - 1) / 2) + 1 + (i % 2), r + 3 - i));
    }
    if (excluded > travels) throw std::logic_error("excluded travels exceed total in LOM bound");
    return checked_add(c_closed_form(r, n, k), checked_mul(2, travels - excluded));
}

/// F(r,n,k) = 2 ((n-r) + C(r,k+1) + 2^(r-1))^(r-1-2k) / (r-1-2k)!, for n >= r >= 2k+2 >= 4.
inline Rational asymptotic_F(int r, int n, int k) {
    if (k < 1 || r < 2 * k + 2 || n < r) {
        throw precondition_error("F needs n >= r >= 2k+2 >= 4, got " + detail::rnk(r, n, k));
    }
    using boost::multiprecision::cpp_int;
    const cpp_int base = cpp_int(n - r) + cpp_int(detail::binom(r, k + 1)) + (cpp_int(1) << (r - 1));
    const int d = r - 1 - 2 * k;
    cpp_int num = 2;
    cpp_int den = 1;
    for (int i = 1; i <= d; ++i) {
        num *= base;
        den *= i;
    }
    return Rational(num, den);
}

}  // namespace lomlab
