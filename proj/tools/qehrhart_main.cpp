#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "qehrhart/algebra.hpp"
#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/json_io.hpp"
#include "qehrhart/poset.hpp"
#include "qehrhart/render.hpp"
#include "qehrhart/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct OutputFormat {
    bool json = false;
};

void print_series(const qe::SeriesTQ& series, const OutputFormat& format) {
    if (format.json) {
        std::cout << qe::to_json(series).dump(2) << "\n";
        return;
    }
    std::cout << "numerator: " << qe::render_series_numerator(series) << "\n";
    std::cout << "denominator_exponents: [";
    const auto& exps = series.denominator_exponents();
    for (size_t i = 0; i < exps.size(); ++i) std::cout << (i ? ", " : "") << exps[i];
    std::cout << "]\n";
}

void print_poly(const qe::XPoly& poly, const OutputFormat& format) {
    if (format.json)
        std::cout << qe::to_json(poly).dump(2) << "\n";
    else
        std::cout << qe::render(poly) << "\n";
}

void print_qrat(const qe::QRat& value, const OutputFormat& format) {
    if (format.json)
        std::cout << qe::to_json(value).dump(2) << "\n";
    else
        std::cout << qe::render(value) << "\n";
}

int run_polytope(const std::string& action, const std::string& input, int n, int period,
                 const std::vector<int>& ks, const OutputFormat& format) {
    auto [polytope, lambda] = qe::load_polytope_file(input);
    for (const auto& p : polytope.stripped_points())
        std::cerr << "warning: dropped non-extreme point " << qe::render_point(p) << "\n";
    auto violations = qe::validate_pair(polytope, lambda);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << v.message << "\n";
        return kExitValidation;
    }
    if (action == "series") {
        print_series(qe::qehrhart_series(polytope, lambda), format);
    } else if (action == "poly") {
        print_poly(qe::qehrhart_polynomial(polytope, lambda), format);
    } else if (action == "special-value") {
        print_qrat(qe::special_value(polytope, lambda), format);
    } else if (action == "points") {
        if (n < 0) throw qe::PreconditionError("points requires --n K with K >= 0");
        auto points = qe::lattice_points(polytope, n, qe::Region::Closed);
        qe::QRat sum = qe::weighted_sum(points, lambda);
        if (format.json) {
            nlohmann::json doc;
            doc["points"] = nlohmann::json::array();
            for (const auto& p : points) doc["points"].push_back(p);
            doc["weighted_sum"] = qe::to_json(sum);
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& p : points) std::cout << qe::render_point(p) << "\n";
            std::cout << "weighted_sum: " << qe::render(sum) << "\n";
        }
    } else if (action == "certify") {
        if (n < 0 || period < 0) throw qe::PreconditionError("certify requires --n K and --N P");
        bool ok = qe::periodicity_certificate(polytope, lambda, n, period, ks);
        std::cout << (ok ? "true" : "false") << "\n";
    } else {
        throw qe::PreconditionError("unknown polytope action '" + action + "'");
    }
    return kExitOk;
}

int run_poset(const std::string& action, const std::string& input, bool cross_check,
              const OutputFormat& format) {
    qe::Poset poset = qe::load_poset_file(input);
    if (action == "series") {
        qe::SeriesTQ series = qe::descent_numerator(poset);
        if (cross_check) {
            if (poset.size() > 7)
                throw qe::PreconditionError("cross-check is limited to posets with at most 7 elements");
            auto [q, lambda] = qe::order_polytope(poset);
            if (!(qe::qehrhart_series(q, lambda) == series))
                throw qe::InternalError("descent numerator disagrees with the geometric series");
            std::cerr << "cross-check: descent numerator matches the geometric series\n";
        }
        print_series(series, format);
    } else if (action == "poly") {
        print_poly(qe::poset_polynomial(poset), format);
    } else if (action == "volume") {
        print_qrat(qe::q_volume(poset), format);
    } else if (action == "special-value") {
        print_qrat(qe::special_value_of(qe::poset_polynomial(poset)), format);
    } else if (action == "infinity") {
        print_qrat(qe::value_at_infinity(qe::poset_polynomial(poset)), format);
    } else {
        throw qe::PreconditionError("unknown poset action '" + action + "'");
    }
    return kExitOk;
}

int run_bernoulli(int count, const OutputFormat& format) {
    if (count < 0) throw qe::PreconditionError("bernoulli index must be nonnegative");
    if (format.json) {
        nlohmann::json doc = nlohmann::json::array();
        for (int n = 0; n <= count; ++n) {
            qe::QRat beta = qe::carlitz_bernoulli(n);
            nlohmann::json row = qe::to_json(beta);
            row["n"] = n;
            row["q1"] = beta.eval(1).get_str();
            doc.push_back(row);
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    for (int n = 0; n <= count; ++n) {
        qe::QRat beta = qe::carlitz_bernoulli(n);
        std::cout << "beta_" << n << " = " << qe::render(beta) << "   (q=1: " << beta.eval(1) << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-analogue Ehrhart computations for lattice polytopes and posets"};
    app.require_subcommand(1);

    std::string input;
    std::string action;
    std::string format_name = "text";
    int n = -1;
    int period = -1;
    std::vector<int> ks = {1, 2};
    bool cross_check = false;

    auto* polytope_cmd = app.add_subcommand("polytope", "Evaluate a polytope document");
    polytope_cmd->add_option("action", action, "series | poly | special-value | points | certify")
        ->required();
    polytope_cmd->add_option("--input", input, "polytope JSON file")->required();
    polytope_cmd->add_option("--n", n, "dilation factor (points, certify)");
    polytope_cmd->add_option("--N", period, "cyclotomic order (certify)");
    polytope_cmd->add_option("--k", ks, "sampled periods for certify");
    polytope_cmd->add_option("--format", format_name, "text | json");

    auto* poset_cmd = app.add_subcommand("poset", "Evaluate a poset document");
    poset_cmd->add_option("action", action, "series | poly | volume | special-value | infinity")
        ->required();
    poset_cmd->add_option("--input", input, "poset JSON file")->required();
    poset_cmd->add_flag("--cross-check", cross_check, "check the series against the geometric route");
    poset_cmd->add_option("--format", format_name, "text | json");

    int bernoulli_count = 0;
    auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Print Carlitz q-Bernoulli numbers 0..N");
    bernoulli_cmd->add_option("N", bernoulli_count, "largest index")->required();
    bernoulli_cmd->add_option("--format", format_name, "text | json");

    std::string scope_name = "all";
    unsigned seed = 7;
    int random_count = 20;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity suites on the built-in corpus");
    verify_cmd->add_option("--scope", scope_name, "all | polytopes | posets | umbral");
    verify_cmd->add_option("--seed", seed, "seed for the random polytopes");
    verify_cmd->add_option("--count", random_count, "number of random polytopes");

    CLI11_PARSE(app, argc, argv);

    OutputFormat format;
    if (format_name == "json")
        format.json = true;
    else if (format_name != "text") {
        std::cerr << "unknown format '" << format_name << "'\n";
        return kExitPrecondition;
    }

    try {
        if (polytope_cmd->parsed()) return run_polytope(action, input, n, period, ks, format);
        if (poset_cmd->parsed()) return run_poset(action, input, cross_check, format);
        if (bernoulli_cmd->parsed()) return run_bernoulli(bernoulli_count, format);
        if (verify_cmd->parsed()) {
            qe::verify::Options options;
            options.scope = qe::verify::scope_from_string(scope_name);
            options.seed = seed;
            options.random_count = random_count;
            return qe::verify::run(options, std::cout) ? kExitOk : 1;
        }
    } catch (const qe::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qe::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qe::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const qe::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
