#include "bimahonian/bimahonian.h"

#include <cstring>
#include <sstream>
#include <string>

#include "bimahonian/characters.hpp"
#include "bimahonian/distributions.hpp"
#include "bimahonian/json_io.hpp"
#include "bimahonian/sieving.hpp"
#include "bimahonian/verify.hpp"

struct bm_poly {
    bimahonian::BiPoly value;
};

namespace {

using namespace bimahonian;

thread_local std::string last_error;

bm_status fail(bm_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <typename F>
bm_status guarded(F&& body) {
    try {
        body();
        return BM_OK;
    } catch (const InvalidArgument& e) {
        return fail(BM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const BudgetExceeded& e) {
        return fail(BM_ERR_BUDGET_EXCEEDED, e.what());
    } catch (const VerificationFailure& e) {
        return fail(BM_ERR_VERIFICATION, e.what());
    } catch (const InexactDivision& e) {
        return fail(BM_ERR_VERIFICATION, e.what());
    } catch (const DivisionByZero& e) {
        return fail(BM_ERR_DIVISION_BY_ZERO, e.what());
    } catch (const ConductorMismatch& e) {
        return fail(BM_ERR_CONDUCTOR_MISMATCH, e.what());
    } catch (const Json::exception& e) {
        return fail(BM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(BM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BM_ERR_INTERNAL, "unknown error");
    }
}

Budget budget_of(const bm_budget* b) {
    if (!b) return Budget{};
    if (b->max_group_order == 0 || b->max_cells <= 0 || b->max_character_n <= 0) {
        throw InvalidArgument("budgets must be positive");
    }
    return Budget{b->max_group_order, b->max_cells, b->max_character_n};
}

void require(const void* p, const char* what) {
    if (!p) throw InvalidArgument(std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_poly(BiPoly p, bm_poly** out) { *out = new bm_poly{std::move(p)}; }

GaloisAut sigma_for(int d, long long s) {
    if (d < 1) throw InvalidArgument("d must be positive");
    if (gcd_ll(mod_ll(s, d), d) != 1) throw InvalidArgument("sigma exponent must be coprime to d");
    return GaloisAut(d, s);
}

RegularCertificate first_certificate(const WreathElem& w) {
    auto certs = is_regular(w);
    if (certs.empty()) throw InvalidArgument(format_window(w) + " is not a regular element");
    return certs.front();
}

}  // namespace

extern "C" {

bm_budget bm_budget_default(void) {
    const Budget b;
    return bm_budget{b.max_group_order, b.max_cells, b.max_character_n};
}

const char* bm_status_name(bm_status status) {
    switch (status) {
        case BM_OK: return "ok";
        case BM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BM_ERR_BUDGET_EXCEEDED: return "budget exceeded";
        case BM_ERR_VERIFICATION: return "verification failure";
        case BM_ERR_DIVISION_BY_ZERO: return "division by zero";
        case BM_ERR_CONDUCTOR_MISMATCH: return "conductor mismatch";
        case BM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* bm_last_error(void) { return last_error.c_str(); }

void bm_string_free(char* s) { delete[] s; }

bm_status bm_distribution(int d, int n, long long sigma, const char* method, const bm_budget* budget, bm_poly** out) {
    return guarded([&] {
        require(method, "method");
        require(out, "out");
        DistributionRequest req;
        req.d = d;
        req.n = n;
        req.sigma = sigma_for(d, sigma);
        req.method = parse_method(method);
        if (req.method == Method::wright_recurrence && mod_ll(sigma, d) != mod_ll(1, d)) {
            throw InvalidArgument("the recurrence method needs the identity sigma");
        }
        put_poly(bimahonian::bimahonian(req, budget_of(budget)), out);
    });
}

bm_status bm_mahonian(int d, int n, bm_poly** out) {
    return guarded([&] {
        require(out, "out");
        put_poly(mahonian(d, n), out);
    });
}

bm_status bm_fake_degree(const char* shape_json, const bm_budget* budget, bm_poly** out) {
    return guarded([&] {
        require(shape_json, "shape_json");
        require(out, "out");
        put_poly(fake_degree(shape_from_json(Json::parse(shape_json)), budget_of(budget)), out);
    });
}

bm_status bm_poly_from_json(const char* json, bm_poly** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        put_poly(poly_from_json(Json::parse(json)), out);
    });
}

bm_status bm_poly_to_json(const bm_poly* p, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = copy_string(poly_to_json(p->value).dump());
    });
}

bm_status bm_poly_to_csv(const bm_poly* p, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        std::ostringstream os;
        os << "i,j,coeff\n";
        for (const auto& [e, c] : p->value.terms()) {
            if (!c.is_rational()) throw InvalidArgument("CSV output needs rational coefficients");
            os << e.first << "," << e.second << "," << c.rational_value().get_str() << "\n";
        }
        *out = copy_string(os.str());
    });
}

bm_status bm_poly_to_text(const bm_poly* p, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = copy_string(p->value.to_string());
    });
}

bm_status bm_poly_equal(const bm_poly* a, const bm_poly* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = a->value == b->value ? 1 : 0;
    });
}

bm_status bm_poly_coefficient(const bm_poly* p, int i, int j, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = copy_string(p->value.coeff(i, j).rational_value().get_str());
    });
}

bm_status bm_poly_specialize_one(const bm_poly* p, char var, bm_poly** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        if (var != 't' && var != 'q') throw InvalidArgument("var must be 't' or 'q'");
        put_poly(p->value.specialize_to_one(var == 't' ? Var::t : Var::q), out);
    });
}

void bm_poly_free(bm_poly* p) { delete p; }

bm_status bm_rsk_json(int d, const char* window, char** out) {
    return guarded([&] {
        require(window, "window");
        require(out, "out");
        *out = copy_string(rsk_to_json(parse_window(d, window)).dump());
    });
}

bm_status bm_regular_json(int d, int n, const bm_budget* budget, char** out) {
    return guarded([&] {
        require(out, "out");
        Json elems = Json::array();
        for_each_element(d, n, budget_of(budget), [&](const WreathElem& w) {
            const auto certs = is_regular(w);
            if (certs.empty()) return;
            Json cj = Json::array();
            for (const auto& c : certs) cj.push_back(certificate_to_json(c));
            elems.push_back(Json{{"element", format_window(w)}, {"order", w.order()}, {"certificates", cj}});
        });
        *out = copy_string(Json{{"d", d}, {"n", n}, {"count", elems.size()}, {"regular", elems}}.dump());
    });
}

bm_status bm_bicsp_json(int d, const char* c_window, const char* c_prime_window, long long sigma,
                        const bm_budget* budget, char** out, int* passed) {
    return guarded([&] {
        require(c_window, "c_window");
        require(c_prime_window, "c_prime_window");
        require(out, "out");
        require(passed, "passed");
        const RegularCertificate c = first_certificate(parse_window(d, c_window));
        const RegularCertificate cp = first_certificate(parse_window(d, c_prime_window));
        if (c.c.n() != cp.c.n()) throw InvalidArgument("c and c' have different n");
        const long long m = lcm_ll(lcm_ll(d, c.order), cp.order);
        if (gcd_ll(mod_ll(sigma, m), m) != 1) {
            throw InvalidArgument("sigma exponent must be coprime to " + std::to_string(m));
        }
        const BiCSPInstance inst = make_bicsp_instance(c, cp, GaloisAut(static_cast<int>(m), sigma), budget_of(budget));
        const BiCSPReport rep = check_bicsp(inst);
        Json doc = bicsp_report_to_json(rep);
        doc["c"] = certificate_to_json(c);
        doc["c_prime"] = certificate_to_json(cp);
        doc["s"] = inst.s;
        doc["x"] = poly_to_json(inst.x);
        *passed = rep.passed() ? 1 : 0;
        *out = copy_string(doc.dump());
    });
}

bm_status bm_character_json(const char* partition_json, const bm_budget* budget, char** out) {
    return guarded([&] {
        require(partition_json, "partition_json");
        require(out, "out");
        const Partition lambda = Json::parse(partition_json).get<Partition>();
        if (!is_partition(lambda)) throw InvalidArgument("not a partition");
        *out = copy_string(class_function_to_json(mn_character(lambda, budget_of(budget))).dump());
    });
}

bm_status bm_verify_json(const char* suite, int d, int n, int degree, const bm_budget* budget, char** out,
                         int* passed) {
    return guarded([&] {
        require(suite, "suite");
        require(out, "out");
        require(passed, "passed");
        VerifyConfig cfg;
        if (d > 0) cfg.d = d;
        if (n > 0) cfg.n = n;
        if (degree > 0) cfg.degree = degree;
        cfg.budget = budget_of(budget);
        const SuiteReport rep = run_suite(suite, cfg);
        *passed = rep.passed() ? 1 : 0;
        *out = copy_string(suite_report_to_json(rep).dump());
    });
}

}  // extern "C"
