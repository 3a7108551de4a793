#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tbfloer {

// Integer Laurent polynomial, stored sparsely as exponent -> coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;

    void set(long long exponent, long long coefficient) {
        if (coefficient == 0)
            coeffs_.erase(exponent);
        else
            coeffs_[exponent] = coefficient;
    }

    long long coeff(long long exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<long long, long long>& coefficients() const { return coeffs_; }

    long long min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    long long max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    bool is_symmetric() const {
        for (const auto& [k, a] : coeffs_)
            if (coeff(-k) != a) return false;
        return true;
    }

    long long evaluate_at_one() const {
        long long s = 0;
        for (const auto& [k, a] : coeffs_) s += a;
        return s;
    }

    long long evaluate_at_minus_one() const {
        long long s = 0;
        for (const auto& [k, a] : coeffs_) s += (k % 2 == 0) ? a : -a;
        return s;
    }

    // Coefficients listed from min_degree to max_degree inclusive.
    std::vector<long long> dense_coefficients(long long lo, long long hi) const {
        std::vector<long long> out;
        for (long long k = lo; k <= hi; ++k) out.push_back(coeff(k));
        return out;
    }

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            long long k = it->first, a = it->second;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            long long m = std::llabs(a);
            if (m != 1 || k == 0) os << m;
            if (k != 0) {
                if (m != 1) os << "*";
                os << "t";
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    std::map<long long, long long> coeffs_;
};

}  // namespace tbfloer
