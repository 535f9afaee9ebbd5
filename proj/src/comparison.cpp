#include "medina/comparison.hpp"

#include <sstream>

#include "medina/errors.hpp"
#include "medina/medina.hpp"
#include "medina/oracle.hpp"

namespace medina {

namespace {

MedinaIndex min_m_observed(const Rational &x, const Rational &eps) {
    oracle::ErrorJudge judge(x, eps);
    // The guaranteed index always qualifies, so the scan is bounded by it.
    const MedinaIndex ceiling = min_m_for(eps);
    for (long m = 1; m < static_cast<long>(ceiling.value()); ++m) {
        if (judge.below(eval_horner(pair(MedinaIndex(m))->h, x))) {
            return MedinaIndex(m);
        }
    }
    return ceiling;
}

} // namespace

ComparisonRow compare(const Rational &x, const Rational &eps, taylor::DegreeMode mode) {
    const long taylor_degree = taylor::min_degree(x, eps, mode);
    const MedinaIndex m =
        mode == taylor::DegreeMode::Oracle ? min_m_observed(x, eps) : min_m_for(eps);
    return {x,
            eps,
            taylor_degree,
            m.value(),
            static_cast<long>(8 * m.value()) - 1,
            (taylor_degree + 1) / 2};
}

std::string comparison_csv_header() {
    return "x,eps,taylor_min_degree,medina_min_m,medina_degree,taylor_terms_evaluated";
}

std::string to_csv(const ComparisonRow &row) {
    std::ostringstream out;
    out << row.x << ',' << row.eps << ',' << row.taylor_min_degree << ',' << row.medina_min_m << ','
        << row.medina_degree << ',' << row.taylor_terms_evaluated;
    return out.str();
}

} // namespace medina
