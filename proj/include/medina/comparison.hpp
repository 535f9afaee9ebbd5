#pragma once

#include <iosfwd>
#include <string>

#include "medina/rational.hpp"
#include "medina/taylor.hpp"

namespace medina {

/// One row of the Taylor-vs-Medina degree comparison on [0, 1].
struct ComparisonRow {
    Rational x;
    Rational eps;
    long taylor_min_degree;
    unsigned long medina_min_m;
    long medina_degree;          // 8m - 1
    long taylor_terms_evaluated; // (taylor_min_degree + 1) / 2
};

/// Both columns use the same criterion. Oracle mode: smallest Taylor degree and
/// smallest m whose true error at x is below eps. Bound mode: alternating
/// remainder bound for Taylor, guaranteed 4^(-5m) for Medina.
/// Throws DomainError for x outside [0, 1] or eps <= 0.
ComparisonRow compare(const Rational &x, const Rational &eps, taylor::DegreeMode mode);

/// "x,eps,taylor_min_degree,medina_min_m,medina_degree,taylor_terms_evaluated"
std::string comparison_csv_header();
std::string to_csv(const ComparisonRow &row);

} // namespace medina
