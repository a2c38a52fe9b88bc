#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bimahonian/bimahonian.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;

// Thrown out of a subcommand with the exit status to report.
struct Failure {
    int code;
    std::string message;
};

int exit_code_for(bm_status s) {
    switch (s) {
        case BM_OK: return exit_ok;
        case BM_ERR_BUDGET_EXCEEDED: return exit_budget;
        case BM_ERR_INVALID_ARGUMENT:
        case BM_ERR_CONDUCTOR_MISMATCH:
        case BM_ERR_DIVISION_BY_ZERO: return exit_invalid;
        case BM_ERR_VERIFICATION:
        case BM_ERR_INTERNAL: return exit_mismatch;
    }
    return exit_mismatch;
}

void check(bm_status s) {
    if (s != BM_OK) throw Failure{exit_code_for(s), std::string(bm_status_name(s)) + ": " + bm_last_error()};
}

struct PolyDeleter {
    void operator()(bm_poly* p) const { bm_poly_free(p); }
};
using Poly = std::unique_ptr<bm_poly, PolyDeleter>;

std::string take(char* s) {
    std::string out(s);
    bm_string_free(s);
    return out;
}

struct Options {
    std::string format = "json";
    std::string out;
    bm_budget budget = bm_budget_default();
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw Failure{exit_invalid, "cannot open " + opt.out};
    f << text;
}

std::string poly_document(const Options& opt, const bm_poly* p) {
    char* s = nullptr;
    if (opt.format == "csv") {
        check(bm_poly_to_csv(p, &s));
        return take(s);
    }
    if (opt.format == "pretty") {
        check(bm_poly_to_text(p, &s));
        return take(s) + "\n";
    }
    check(bm_poly_to_json(p, &s));
    return Json::parse(take(s)).dump(2) + "\n";
}

Json poly_json(const bm_poly* p) {
    char* s = nullptr;
    check(bm_poly_to_json(p, &s));
    return Json::parse(take(s));
}

std::string json_document(const Options& opt, const Json& doc) {
    if (opt.format == "csv") throw Failure{exit_invalid, "CSV output is only available for polynomials"};
    return doc.dump(2) + "\n";
}

Poly distribution(int d, int n, long long s, const std::string& method, const Options& opt) {
    bm_poly* p = nullptr;
    check(bm_distribution(d, n, s, method.c_str(), &opt.budget, &p));
    return Poly(p);
}

int cmd_distribution(const Options& opt, int d, int n, long long s, const std::string& method) {
    if (method != "all") {
        emit(opt, poly_document(opt, distribution(d, n, s, method, opt).get()));
        return exit_ok;
    }
    std::vector<std::string> methods{"fake", "fmaj", "molien"};
    if (d == 1) methods.push_back("wright");
    std::vector<Poly> polys;
    Json by_method = Json::object();
    for (const auto& m : methods) {
        polys.push_back(distribution(d, n, s, m, opt));
        by_method[m] = poly_json(polys.back().get());
    }
    bool equal = true;
    for (std::size_t i = 1; i < polys.size(); ++i) {
        int same = 0;
        check(bm_poly_equal(polys[0].get(), polys[i].get(), &same));
        equal = equal && same;
    }
    const Json doc{{"d", d}, {"n", n}, {"sigma", s}, {"methods", by_method}, {"verdict", equal ? "equal" : "different"}};
    emit(opt, json_document(opt, doc));
    return equal ? exit_ok : exit_mismatch;
}

int cmd_mahonian(const Options& opt, int d, int n) {
    bm_poly* p = nullptr;
    check(bm_mahonian(d, n, &p));
    emit(opt, poly_document(opt, Poly(p).get()));
    return exit_ok;
}

int cmd_fake_degree(const Options& opt, const std::string& shape) {
    bm_poly* p = nullptr;
    check(bm_fake_degree(shape.c_str(), &opt.budget, &p));
    emit(opt, poly_document(opt, Poly(p).get()));
    return exit_ok;
}

int cmd_rsk(const Options& opt, int d, const std::string& window) {
    char* s = nullptr;
    check(bm_rsk_json(d, window.c_str(), &s));
    emit(opt, json_document(opt, Json::parse(take(s))));
    return exit_ok;
}

int cmd_regular(const Options& opt, int d, int n) {
    char* s = nullptr;
    check(bm_regular_json(d, n, &opt.budget, &s));
    emit(opt, json_document(opt, Json::parse(take(s))));
    return exit_ok;
}

int cmd_bicsp(const Options& opt, int d, const std::string& c, const std::string& cp, long long s) {
    char* out = nullptr;
    int passed = 0;
    check(bm_bicsp_json(d, c.c_str(), cp.c_str(), s, &opt.budget, &out, &passed));
    emit(opt, json_document(opt, Json::parse(take(out))));
    return passed ? exit_ok : exit_mismatch;
}

int cmd_character(const Options& opt, const std::string& lambda) {
    char* s = nullptr;
    check(bm_character_json(lambda.c_str(), &opt.budget, &s));
    emit(opt, json_document(opt, Json::parse(take(s))));
    return exit_ok;
}

int cmd_verify(const Options& opt, const std::string& suite, int d, int n, int degree) {
    char* out = nullptr;
    int passed = 0;
    check(bm_verify_json(suite.c_str(), d, n, degree, &opt.budget, &out, &passed));
    const Json doc = Json::parse(take(out));
    if (opt.format == "pretty") {
        std::string text;
        for (const auto& c : doc["checks"]) {
            text += std::string(c["passed"].get<bool>() ? "PASS  " : "FAIL  ") + c["name"].get<std::string>();
            const auto detail = c["detail"].get<std::string>();
            if (!detail.empty()) text += "  (" + detail + ")";
            text += "\n";
        }
        text += std::string(passed ? "suite passed" : "suite FAILED") + "\n";
        emit(opt, text);
    } else {
        emit(opt, json_document(opt, doc));
    }
    return passed ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mahonian and bimahonian distributions of the groups G(d,1,n)"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "Write the document to this file instead of stdout");
    app.add_option("--max-group-order", opt.budget.max_group_order, "Largest group to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-cells", opt.budget.max_cells, "Largest tableau size to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-character-n", opt.budget.max_character_n, "Largest symmetric group for characters")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int d = 1, n = 1, degree = 0;
    long long sigma = 1;
    std::string method = "molien", shape, window, c, cp, lambda, suite = "all";
    std::optional<int> vd, vn;

    auto* dist = app.add_subcommand("distribution", "Bimahonian distribution W^sigma(t,q)");
    dist->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    dist->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    dist->add_option("--sigma", sigma, "Galois exponent s, a unit mod d")->capture_default_str();
    dist->add_option("--method", method)
        ->check(CLI::IsMember({"fake", "fmaj", "molien", "wright", "all"}))
        ->capture_default_str();

    auto* mah = app.add_subcommand("mahonian", "Mahonian distribution W(q)");
    mah->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    mah->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* fake = app.add_subcommand("fake-degree", "Fake degree polynomial of a d-tuple of partitions");
    fake->add_option("--shape", shape, "JSON list [lambda^{d-1}, ..., lambda^0]")->required();

    auto* rsk = app.add_subcommand("rsk", "Colored Robinson-Schensted tableaux of a window word");
    rsk->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    rsk->add_option("--w", window, "Window word such as 0:2,1:1 (or 2,-1 when d <= 2)")->required();

    auto* reg = app.add_subcommand("regular", "Regular elements with eigenvalue certificates");
    reg->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    reg->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* bicsp = app.add_subcommand("bicsp", "Bicyclic sieving check for two regular elements");
    bicsp->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    bicsp->add_option("--c", c, "Window word of c")->required();
    bicsp->add_option("--cp", cp, "Window word of c'")->required();
    bicsp->add_option("--sigma", sigma, "Galois exponent s")->capture_default_str();

    auto* chr = app.add_subcommand("character", "Irreducible character of S_n by cycle type");
    chr->add_option("--lambda", lambda, "Partition as JSON, e.g. [2,1]")->required();

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"methods", "bicsp", "bss", "gordon", "springer", "regular", "genfun", "symmetry",
                               "palindrome", "cyclic", "all"}))
        ->capture_default_str();
    ver->add_option("--d", vd)->check(CLI::PositiveNumber);
    ver->add_option("--n", vn)->check(CLI::PositiveNumber);
    ver->add_option("--degree", degree, "Degree bound for the generating-function suite")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*dist) return cmd_distribution(opt, d, n, sigma, method);
        if (*mah) return cmd_mahonian(opt, d, n);
        if (*fake) return cmd_fake_degree(opt, shape);
        if (*rsk) return cmd_rsk(opt, d, window);
        if (*reg) return cmd_regular(opt, d, n);
        if (*bicsp) return cmd_bicsp(opt, d, c, cp, sigma);
        if (*chr) return cmd_character(opt, lambda);
        if (*ver) return cmd_verify(opt, suite, vd.value_or(0), vn.value_or(0), degree);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_mismatch;
    }
    return exit_invalid;
}
