#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rigidwitt {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in one variable with exact rational coefficients, ascending degree.
class BoundPoly {
public:
    BoundPoly() = default;
    explicit BoundPoly(std::vector<Rational> coeffs);
    static BoundPoly constant(const Rational& c) { return BoundPoly({c}); }
    static BoundPoly monomial(int degree, const Rational& c = 1);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;

    Rational operator()(const Rational& x) const;
    /// p(c X)
    BoundPoly rescale(const Rational& c) const;

    BoundPoly& operator+=(const BoundPoly& other);
    BoundPoly& operator*=(const Rational& c);
    friend BoundPoly operator+(BoundPoly a, const BoundPoly& b) { return a += b; }
    friend BoundPoly operator*(const Rational& c, BoundPoly p) { return p *= c; }
    friend bool operator==(const BoundPoly&, const BoundPoly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Bernoulli numbers B_0..B_m with B_1 = +1/2.
std::vector<Rational> bernoulli_numbers(int m);

/// p with p(n) = q(1) + ... + q(n) for all n >= 0.
BoundPoly faulhaber_sum(const BoundPoly& q);

/// d/2 - 1 (0 for d < 4). Throws on odd d.
std::int64_t two_pfister_bound(std::int64_t d);

/// Exact small values below 16, the refined quadratic bound from 16 on. Throws on odd d.
std::int64_t three_pfister_bound(std::int64_t d);

/// p_3 = X^2/16, p_n = 1 + 2 p_{n-1}(X/2).
BoundPoly poly_bound(int n);

/// p_3 = X^2/16, p_n = 1 + 2 S(p_{n-1})(X/2) with S the Faulhaber sum; degree n - 1.
BoundPoly summed_poly_bound(int n);

/// Largest integer not above the value.
std::int64_t floor_value(const Rational& r);

/// Applicable upper bound on GP_n(F, d) for any n >= 1.
std::int64_t pfister_number_bound(int n, std::int64_t d);

}  // namespace rigidwitt
