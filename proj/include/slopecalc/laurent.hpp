// Integer Laurent polynomials in one variable t.
//
// Stored sparsely as exponent -> coefficient with no zero entries. The
// normalized form shifts the lowest exponent to 0 and makes the leading
// (highest-degree) coefficient positive; it is the canonical representative
// of a polynomial up to units +-t^k.

#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slopecalc/errors.hpp"

namespace slopecalc {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long long constant) {  // NOLINT: implicit by design
        if (constant != 0) coeffs_[0] = constant;
    }

    static LaurentPolynomial monomial(long long coeff, int exponent) {
        LaurentPolynomial p;
        if (coeff != 0) p.coeffs_[exponent] = coeff;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    long long coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<int, long long>& terms() const { return coeffs_; }

    int min_exponent() const {
        if (is_zero()) throw internal_error("min_exponent of zero polynomial");
        return coeffs_.begin()->first;
    }

    int max_exponent() const {
        if (is_zero()) throw internal_error("max_exponent of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
        return r;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const LaurentPolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Evaluation at t = 1 or t = -1; well defined despite negative exponents.
    long long evaluate_at_unit(int t) const {
        if (t != 1 && t != -1) throw internal_error("evaluate_at_unit expects t = +-1");
        long long sum = 0;
        for (const auto& [e, c] : coeffs_) {
            const bool odd = (e % 2) != 0;
            sum += (t == -1 && odd) ? -c : c;
        }
        return sum;
    }

    /// Exact division; throws internal_error when the quotient does not exist
    /// over the integer Laurent ring.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const {
        if (divisor.is_zero()) throw internal_error("division by zero polynomial");
        if (is_zero()) return {};
        const int shift = min_exponent() - divisor.min_exponent();
        std::vector<long long> num = dense(*this);
        const std::vector<long long> den = dense(divisor);
        if (num.size() < den.size()) throw internal_error("inexact Laurent division");
        std::vector<long long> quot(num.size() - den.size() + 1, 0);
        for (int qi = static_cast<int>(quot.size()) - 1; qi >= 0; --qi) {
            const long long lead = num[qi + den.size() - 1];
            if (lead % den.back() != 0) throw internal_error("inexact Laurent division");
            const long long q = lead / den.back();
            quot[qi] = q;
            for (std::size_t k = 0; k < den.size(); ++k) num[qi + k] -= q * den[k];
        }
        for (long long rem : num)
            if (rem != 0) throw internal_error("inexact Laurent division");
        LaurentPolynomial result;
        for (std::size_t i = 0; i < quot.size(); ++i)
            if (quot[i] != 0) result.coeffs_[static_cast<int>(i) + shift] = quot[i];
        return result;
    }

    /// Multiplies by +-t^k so the lowest exponent is 0 and the leading
    /// coefficient is positive. Zero stays zero.
    LaurentPolynomial normalized() const {
        if (is_zero()) return {};
        LaurentPolynomial r;
        const int low = min_exponent();
        const long long lead = coeffs_.rbegin()->second;
        const long long sign = lead > 0 ? 1 : -1;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e - low] = sign * c;
        return r;
    }

    /// Ascending-exponent text form, e.g. "1-3t+t^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? "-" : "+";
            }
            const long long a = std::llabs(c);
            if (e == 0) {
                out += std::to_string(a);
            } else {
                if (a != 1) out += std::to_string(a);
                out += "t";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void add_term(int exponent, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = coeffs_.emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    static std::vector<long long> dense(const LaurentPolynomial& p) {
        const int lo = p.min_exponent();
        const int hi = p.max_exponent();
        std::vector<long long> v(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& [e, c] : p.coeffs_) v[static_cast<std::size_t>(e - lo)] = c;
        return v;
    }

    std::map<int, long long> coeffs_;
};

}  // namespace slopecalc
