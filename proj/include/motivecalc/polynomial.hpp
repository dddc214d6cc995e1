#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "motivecalc/rational.hpp"

namespace motivecalc {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// stored in ascending order. The zero polynomial has an empty coefficient
// vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> cs) {
        for (long c : cs) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { trim(); }

    static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
    // t^k
    static IntPoly monomial(std::size_t k, const BigInt& c = 1) {
        std::vector<BigInt> cs(k + 1, BigInt(0));
        cs[k] = c;
        return IntPoly(std::move(cs));
    }
    // 1 + t^step + t^{2*step} + ...  (n_terms summands)
    static IntPoly geometric(std::size_t n_terms, std::size_t step) {
        std::vector<BigInt> cs(n_terms == 0 ? 0 : (n_terms - 1) * step + 1, BigInt(0));
        for (std::size_t j = 0; j < n_terms; ++j) cs[j * step] = 1;
        return IntPoly(std::move(cs));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
        return IntPoly(std::move(cs));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] -= b.coeffs_[i];
        return IntPoly(std::move(cs));
    }
    IntPoly operator-() const {
        std::vector<BigInt> cs(coeffs_);
        for (auto& c : cs) c = -c;
        return IntPoly(std::move(cs));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(cs));
    }
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = constant(1);
        IntPoly base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // Quotient of an exact division; returns false if a remainder survives.
    bool divide_exact(const IntPoly& divisor, IntPoly& quotient) const {
        if (divisor.is_zero()) return false;
        std::vector<BigInt> rem(coeffs_);
        std::vector<BigInt> q(
            coeffs_.size() >= divisor.coeffs_.size()
                ? coeffs_.size() - divisor.coeffs_.size() + 1
                : 0,
            BigInt(0));
        const BigInt& lead = divisor.coeffs_.back();
        const std::size_t dsize = divisor.coeffs_.size();
        for (std::size_t i = rem.size(); i-- > 0;) {
            if (i + 1 < dsize) break;
            if (rem[i] == 0) continue;
            BigInt f = rem[i] / lead;
            if (f * lead != rem[i]) return false;
            std::size_t shift = i - (dsize - 1);
            q[shift] = f;
            for (std::size_t j = 0; j < dsize; ++j)
                rem[shift + j] -= f * divisor.coeffs_[j];
        }
        for (const auto& c : rem)
            if (c != 0) return false;
        quotient = IntPoly(std::move(q));
        return true;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            BigInt c = coeffs_[i];
            if (!s.empty()) {
                s += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            } else if (c < 0) {
                s += "-";
                c = -c;
            }
            if (i == 0 || c != 1) s += c.get_str();
            if (i > 0) {
                if (c != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

// Truncated power series in x whose coefficients are polynomials in t.
// Only what the symmetric-power generating function needs.
class PolySeries {
public:
    explicit PolySeries(std::size_t truncation) : coeffs_(truncation) {}

    static PolySeries one(std::size_t truncation) {
        PolySeries s(truncation);
        if (truncation > 0) s.coeffs_[0] = IntPoly::constant(1);
        return s;
    }

    std::size_t truncation() const { return coeffs_.size(); }
    const IntPoly& operator[](std::size_t k) const { return coeffs_[k]; }
    IntPoly& operator[](std::size_t k) { return coeffs_[k]; }

    PolySeries mul(const PolySeries& o) const {
        PolySeries r(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < coeffs_.size() && j < o.coeffs_.size(); ++j)
                r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return r;
    }

private:
    std::vector<IntPoly> coeffs_;
};

}  // namespace motivecalc
