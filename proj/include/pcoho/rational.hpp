#ifndef PCOHO_RATIONAL_HPP
#define PCOHO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace pcoho
{

// Exact scalars. mpq_class keeps results of arithmetic canonical (lowest
// terms, positive denominator), so equality is structural.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v = zero_vec(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(const Vec &v)
{
    for (const auto &x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

inline void axpy(Vec &y, const Scalar &a, const Vec &x)
{
    if (sgn(a) == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += a * x[i];
}

inline Vec operator+(Vec a, const Vec &b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec &b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline Vec operator*(const Scalar &s, Vec a)
{
    for (auto &x : a)
        x *= s;
    return a;
}

inline Vec concat(const Vec &a, const Vec &b)
{
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline std::string to_string(const Scalar &q) { return q.get_str(); }

namespace detail
{
inline bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}
} // namespace detail

// Accepts "p" or "p/q" with an optional leading '-' on p only. The
// denominator must be a positive integer; the value is normalized.
inline Scalar parse_scalar(std::string_view text)
{
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (!detail::all_digits(digits) || !detail::all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar out(mpz_class(std::string(num), 10), q);
    out.canonicalize();
    return out;
}

} // namespace pcoho

#endif
