#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medina/errors.hpp"
#include "medina/rational.hpp"

namespace medina::verify {

/// Where a check failed, or for L1 where the equality case was observed.
/// For coefficient-level checks (L2, L8) `x` carries the coefficient index.
struct Witness {
    Rational x;
    unsigned long m = 0;
    Rational lhs;
    Rational rhs;
};

struct LemmaCheck {
    std::string id;
    std::string description;
    bool passed = true;
    std::optional<Witness> witness;
};

struct VerificationReport {
    std::vector<LemmaCheck> checks;
    unsigned long grid_size = 0;
    unsigned long m_max = 0;
    /// False when the work limit cut the run short.
    bool complete = true;

    [[nodiscard]] bool all_passed() const;
};

struct SuiteOptions {
    /// Upper bound on (grid_n + 1) * m_max; 0 disables the limit.
    std::uint64_t work_limit = 0;
    /// Flip the sign of the x^6 coefficient of p_1 before checking.
    bool inject_fault = false;
};

/// Thrown when the work limit is exceeded; carries the lemmas that did run.
class WorkLimitExceeded : public ResourceError {
public:
    WorkLimitExceeded(const std::string &what, VerificationReport partial)
        : ResourceError(what), partial_(std::move(partial)) {}
    [[nodiscard]] const VerificationReport &partial() const { return partial_; }

private:
    VerificationReport partial_;
};

/// Checks L1..L9 at x = k/grid_n, k = 0..grid_n, for m = 1..m_max.
/// Throws DomainError for grid_n < 2 or m_max < 1.
VerificationReport run_suite(unsigned long grid_n, unsigned long m_max, SuiteOptions options = {});

} // namespace medina::verify
