// medina: command-line front end for the arctangent approximation library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
// Machine output goes to stdout, diagnostics to stderr.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "medina/arctan_eval.hpp"
#include "medina/bench.hpp"
#include "medina/comparison.hpp"
#include "medina/errors.hpp"
#include "medina/json_io.hpp"
#include "medina/medina.hpp"
#include "medina/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kFullDigits = 50;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

medina::Rational parse_rational(const std::string &flag, const std::string &text) {
    try {
        return medina::Rational::parse(text);
    } catch (const medina::ParseError &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

long parse_integer(const std::string &flag, const std::string &text, long minimum) {
    medina::Rational r = parse_rational(flag, text);
    if (!r.is_integer() || r < medina::Rational(minimum) || r.bit_length() > 62) {
        throw UsageError(flag + " must be an integer >= " + std::to_string(minimum) + ", got " + text);
    }
    return r.numerator().get_si();
}

std::uint64_t work_limit_from_env() {
    const char *raw = std::getenv("MEDINA_WORK_LIMIT");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    return static_cast<std::uint64_t>(parse_integer("MEDINA_WORK_LIMIT", raw, 1));
}

void print(const nlohmann::ordered_json &j) {
    std::cout << j.dump() << '\n';
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact polynomial approximation of arctangent with guaranteed error bounds"};
    app.require_subcommand(1);

    std::string m_text;
    std::string x_text;
    std::string eps_text;
    std::string form = "recurrence";
    std::string mode = "oracle";
    std::string grid_text = "64";
    std::string m_max_text = "3";
    std::string points_text = "1000";
    bool full = false;
    bool inject_fault = false;

    auto *gen = app.add_subcommand("gen", "Print p_m, h_m and the error bound as JSON");
    gen->add_option("--m", m_text, "Index m >= 1")->required();
    gen->add_option("--form", form, "Construction of p_m")
        ->check(CLI::IsMember({"recurrence", "closed", "both"}));

    auto *eval = app.add_subcommand("eval", "Approximate arctan(x) with a fixed m");
    eval->add_option("--m", m_text, "Index m >= 1")->required();
    eval->add_option("--x", x_text, "Argument (rational text)")->required();
    eval->add_flag("--full", full, "Print 50 decimal digits regardless of the error bound");

    auto *arctan = app.add_subcommand("arctan", "Approximate arctan(x) to within eps");
    arctan->add_option("--x", x_text, "Argument (rational text)")->required();
    arctan->add_option("--eps", eps_text, "Target absolute error > 0")->required();
    arctan->add_flag("--full", full, "Print 50 decimal digits regardless of the error bound");

    auto *compare = app.add_subcommand("compare", "Taylor vs Medina degree needed for eps, CSV");
    compare->add_option("--x", x_text, "Point in [0, 1]")->required();
    compare->add_option("--eps", eps_text, "Target absolute error > 0")->required();
    compare->add_option("--mode", mode, "Taylor error criterion")
        ->check(CLI::IsMember({"oracle", "bound"}));

    auto *verify = app.add_subcommand("verify", "Check the error-bound lemma chain on a rational grid");
    verify->add_option("--grid", grid_text, "Grid denominator n >= 2 (points k/n)");
    verify->add_option("--m-max", m_max_text, "Largest m to check");
    verify->add_flag("--inject-fault", inject_fault, "Corrupt p_1 to exercise failure reporting");

    auto *bench = app.add_subcommand("bench", "Time evaluation of h_m, CSV");
    bench->add_option("--m-max", m_max_text, "Largest m")->required();
    bench->add_option("--points", points_text, "Evaluation points per m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const medina::MedinaIndex m(parse_integer("--m", m_text, 1));
            auto entry = medina::pair(m);
            nlohmann::ordered_json out = medina::to_json(*entry);
            if (form == "closed") {
                out["p"] = medina::to_json(medina::p_closed(m));
            } else if (form == "both") {
                out["p_closed"] = medina::to_json(medina::p_closed(m));
                out["equal"] = medina::p_closed(m) == entry->p;
            }
            print(out);
        } else if (eval->parsed()) {
            const medina::MedinaIndex m(parse_integer("--m", m_text, 1));
            auto result = medina::medina_arctan(parse_rational("--x", x_text), m);
            print(medina::to_json(result, full ? kFullDigits : 0));
        } else if (arctan->parsed()) {
            auto eps = parse_rational("--eps", eps_text);
            if (eps.sign() <= 0) {
                throw UsageError("--eps must be positive");
            }
            auto result = medina::arctan_auto(parse_rational("--x", x_text), eps);
            print(medina::to_json(result, full ? kFullDigits : 0));
        } else if (compare->parsed()) {
            auto x = parse_rational("--x", x_text);
            auto eps = parse_rational("--eps", eps_text);
            if (x.sign() < 0 || x > medina::Rational(1)) {
                throw UsageError("--x must lie in [0, 1]");
            }
            if (eps.sign() <= 0) {
                throw UsageError("--eps must be positive");
            }
            auto row = medina::compare(
                x, eps, mode == "bound" ? medina::taylor::DegreeMode::Bound : medina::taylor::DegreeMode::Oracle);
            std::cout << medina::comparison_csv_header() << '\n' << medina::to_csv(row) << '\n';
        } else if (verify->parsed()) {
            const auto grid = parse_integer("--grid", grid_text, 2);
            const auto m_max = parse_integer("--m-max", m_max_text, 1);
            medina::verify::SuiteOptions options{work_limit_from_env(), inject_fault};
            try {
                auto report = medina::verify::run_suite(static_cast<unsigned long>(grid),
                                                        static_cast<unsigned long>(m_max), options);
                print(medina::to_json(report));
                if (!report.all_passed()) {
                    std::cerr << "verification failed\n";
                    return kExitVerifyFailed;
                }
            } catch (const medina::verify::WorkLimitExceeded &e) {
                print(medina::to_json(e.partial()));
                std::cerr << e.what() << '\n';
                return kExitVerifyFailed;
            }
        } else if (bench->parsed()) {
            const auto m_max = parse_integer("--m-max", m_max_text, 1);
            const auto points = parse_integer("--points", points_text, 1);
            std::cout << medina::bench_csv_header() << '\n';
            for (const auto &row : medina::run_bench(static_cast<unsigned long>(m_max),
                                                     static_cast<unsigned long>(points))) {
                std::cout << medina::to_csv(row) << '\n';
            }
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const medina::DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const medina::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
