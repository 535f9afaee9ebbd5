#include "medina/json_io.hpp"

#include <string>
#include <vector>

#include "medina/errors.hpp"

namespace medina {

nlohmann::ordered_json to_json(const Polynomial &p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &c : p.coeffs()) {
        arr.push_back(c.to_string());
    }
    return arr;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json &j) {
    if (!j.is_array()) {
        throw ParseError("polynomial JSON must be an array of rational strings");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto &item : j) {
        if (!item.is_string()) {
            throw ParseError("polynomial coefficient must be a string");
        }
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

nlohmann::ordered_json to_json(const MedinaPair &pair) {
    return {
        {"m", pair.m.value()},
        {"p", to_json(pair.p)},
        {"h", to_json(pair.h)},
        {"bound", pair.bound.to_string()},
    };
}

nlohmann::ordered_json to_json(const ApproxResult &result, unsigned full_digits) {
    const unsigned guaranteed = guaranteed_decimal_digits(result.error_bound);
    auto steps = nlohmann::ordered_json::array();
    for (auto step : result.trace.steps) {
        steps.push_back(std::string(to_string(step)));
    }
    return {
        {"value", result.value.to_string()},
        {"error_bound", result.error_bound.to_string()},
        {"m", result.m.value()},
        {"steps", steps},
        {"decimal", result.value.to_decimal(full_digits != 0 ? full_digits : guaranteed)},
        {"decimal_digits_guaranteed", guaranteed},
    };
}

nlohmann::ordered_json to_json(const oracle::Enclosure &e) {
    return {{"lo", e.lo.to_string()}, {"hi", e.hi.to_string()}};
}

nlohmann::ordered_json to_json(const verify::VerificationReport &report) {
    auto checks = nlohmann::ordered_json::array();
    for (const auto &c : report.checks) {
        nlohmann::ordered_json entry{
            {"id", c.id},
            {"description", c.description},
            {"passed", c.passed},
            {"witness", nullptr},
        };
        if (c.witness) {
            entry["witness"] = {
                {"x", c.witness->x.to_string()},
                {"m", c.witness->m},
                {"lhs", c.witness->lhs.to_string()},
                {"rhs", c.witness->rhs.to_string()},
            };
        }
        checks.push_back(std::move(entry));
    }
    return {
        {"grid_size", report.grid_size},
        {"m_max", report.m_max},
        {"complete", report.complete},
        {"passed", report.all_passed()},
        {"checks", checks},
    };
}

} // namespace medina
