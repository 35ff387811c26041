#include "rigidwitt/bounds.hpp"

#include <sstream>

#include "rigidwitt/errors.hpp"

namespace rigidwitt {

BoundPoly::BoundPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BoundPoly BoundPoly::monomial(int degree, const Rational& c) {
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = c;
    return BoundPoly(std::move(coeffs));
}

void BoundPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational BoundPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

Rational BoundPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BoundPoly BoundPoly::rescale(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    Rational power = 1;
    for (auto& a : out) {
        a *= power;
        power *= c;
    }
    return BoundPoly(std::move(out));
}

BoundPoly& BoundPoly::operator+=(const BoundPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

BoundPoly& BoundPoly::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

std::string BoundPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        if (first && c < 0) out << "-";
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (i == 0 || mag != 1) out << mag;
        if (i > 0) out << (i == 0 || mag != 1 ? "*" : "") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return out.str();
}

std::vector<Rational> bernoulli_numbers(int m) {
    std::vector<Rational> b(m + 1, Rational(0));
    // binomial row C(k+1, j), rebuilt per k
    for (int k = 0; k <= m; ++k) {
        if (k == 0) {
            b[0] = 1;
            continue;
        }
        Rational sum = 0;
        Rational binom = 1;  // C(k+1, 0)
        for (int j = 0; j < k; ++j) {
            sum += binom * b[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        b[k] = -sum / (k + 1);
    }
    if (m >= 1) b[1] = Rational(1, 2);
    return b;
}

BoundPoly faulhaber_sum(const BoundPoly& q) {
    const int deg = q.degree();
    if (deg < 0) return BoundPoly{};
    const auto b = bernoulli_numbers(deg);
    BoundPoly out;
    for (int m = 0; m <= deg; ++m) {
        if (q.coeff(m) == 0) continue;
        // 1^m + ... + n^m = 1/(m+1) sum_j C(m+1, j) B_j n^(m+1-j)
        std::vector<Rational> coeffs(m + 2, Rational(0));
        Rational binom = 1;
        for (int j = 0; j <= m; ++j) {
            coeffs[m + 1 - j] = binom * b[j] / (m + 1);
            binom = binom * (m + 1 - j) / (j + 1);
        }
        out += q.coeff(m) * BoundPoly(std::move(coeffs));
    }
    return out;
}

namespace {

void require_even(std::int64_t d, const char* op) {
    if (d < 0 || d % 2 != 0) throw PreconditionError(std::string(op) + ": dimension must be even and nonnegative");
}

}  // namespace

std::int64_t two_pfister_bound(std::int64_t d) {
    require_even(d, "two_pfister_bound");
    return d < 4 ? 0 : d / 2 - 1;
}

std::int64_t three_pfister_bound(std::int64_t d) {
    require_even(d, "three_pfister_bound");
    if (d < 8) return 0;
    if (d < 12) return 1;
    if (d < 16) return 2;
    const std::int64_t sign = (d / 2) % 2 == 0 ? 1 : -1;
    return (d * d - 8 * d - 82 + 2 * sign) / 16;
}

BoundPoly poly_bound(int n) {
    if (n < 3) throw PreconditionError("poly_bound: n must be at least 3");
    BoundPoly p = BoundPoly::monomial(2, Rational(1, 16));
    for (int k = 4; k <= n; ++k) p = BoundPoly::constant(1) + Rational(2) * p.rescale(Rational(1, 2));
    return p;
}

BoundPoly summed_poly_bound(int n) {
    if (n < 3) throw PreconditionError("summed_poly_bound: n must be at least 3");
    BoundPoly p = BoundPoly::monomial(2, Rational(1, 16));
    for (int k = 4; k <= n; ++k) {
        p = BoundPoly::constant(1) + Rational(2) * faulhaber_sum(p).rescale(Rational(1, 2));
    }
    return p;
}

std::int64_t floor_value(const Rational& r) {
    using boost::multiprecision::cpp_int;
    const cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    cpp_int q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q.convert_to<std::int64_t>();
}

std::int64_t pfister_number_bound(int n, std::int64_t d) {
    if (n < 1) throw PreconditionError("pfister_number_bound: n must be positive");
    require_even(d, "pfister_number_bound");
    switch (n) {
        case 1: return d / 2;
        case 2: return two_pfister_bound(d);
        case 3: return three_pfister_bound(d);
        default:
            if (n >= 62 || d < (std::int64_t{1} << n)) return 0;
            return floor_value(summed_poly_bound(n)(Rational(d)));
    }
}

}  // namespace rigidwitt
