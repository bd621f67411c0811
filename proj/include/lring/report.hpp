#pragma once

#include "lring/truncated_series.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace lring {

// One verification outcome. A failing report always carries the first
// differing monomial (canonical order) and both coefficients.
struct VerificationReport {
    std::string identity;
    std::string params;
    bool pass = false;
    std::string witness_monomial;
    std::string lhs_coeff;
    std::string rhs_coeff;
    double millis = 0.0;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Exact comparison with witness extraction.
VerificationReport compare_series(const std::string& identity, const std::string& params,
                                  const TruncatedSeries& lhs, const TruncatedSeries& rhs);
VerificationReport compare_polys(const std::string& identity, const std::string& params,
                                 const SparsePoly& lhs, const SparsePoly& rhs);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace lring
