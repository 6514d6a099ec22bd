#include "ffgroup/ffgroup.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report_io.hpp"
#include "textio.hpp"
#include "version.hpp"

using namespace ffgroup;

struct ffg_context {
    RunConfig cfg;
    std::string last_error;
};

struct ffg_report {
    Report rep;
};

namespace {

ffg_status status_of(const Error& e) {
    switch (e.code()) {
        case Errc::BudgetExceeded:
        case Errc::ScanTooLarge:
            return FFG_ERR_BUDGET;
        case Errc::ParseError:
            return FFG_ERR_PARSE;
        case Errc::NonPrimeCharacteristic:
        case Errc::NotPrimePower:
        case Errc::InvalidArgument:
        case Errc::ConstantPolynomial:
        case Errc::NotMonic:
        case Errc::ZeroConstantTerm:
        case Errc::ZeroPolynomial:
        case Errc::DegreeZero:
            return FFG_ERR_INVALID_ARGUMENT;
        default:
            return FFG_ERR_DOMAIN;
    }
}

template <typename Fn>
ffg_status guarded(ffg_context* ctx, Fn&& fn) {
    if (ctx == nullptr) return FFG_ERR_INVALID_ARGUMENT;
    try {
        fn();
        ctx->last_error.clear();
        return FFG_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return FFG_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown error";
        return FFG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ffg_status emit_report(ffg_context* ctx, Report (*run)(std::uint64_t, unsigned, const RunConfig&),
                       std::uint64_t q, std::uint32_t n, ffg_report** out) {
    return guarded(ctx, [&] {
        if (out == nullptr) fail(Errc::InvalidArgument, "null report output");
        *out = new ffg_report{run(q, n, ctx->cfg)};
    });
}

}  // namespace

extern "C" {

const char* ffg_version(void) { return kToolVersion; }

ffg_context* ffg_context_new(void) { return new ffg_context(); }

void ffg_context_free(ffg_context* ctx) { delete ctx; }

ffg_status ffg_context_set_point_budget(ffg_context* ctx, uint64_t budget) {
    return guarded(ctx, [&] {
        if (budget < 1) fail(Errc::InvalidArgument, "point budget must be >= 1");
        ctx->cfg.point_budget = budget;
    });
}

ffg_status ffg_context_set_scan_budget(ffg_context* ctx, uint64_t budget) {
    return guarded(ctx, [&] {
        if (budget < 1) fail(Errc::InvalidArgument, "scan budget must be >= 1");
        ctx->cfg.scan_budget = budget;
    });
}

ffg_status ffg_context_set_workers(ffg_context* ctx, uint32_t workers) {
    return guarded(ctx, [&] { ctx->cfg.workers = workers; });
}

const char* ffg_context_last_error(const ffg_context* ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

ffg_status ffg_parse_prime_power(ffg_context* ctx, const char* text, uint64_t* q_out,
                                 uint64_t* p_out, uint32_t* k_out) {
    return guarded(ctx, [&] {
        if (text == nullptr) fail(Errc::ParseError, "null field descriptor");
        const auto [p, k] = parse_field_descriptor(text);
        Bigint q = bigint_pow(p, k);
        if (q > (1ull << 62)) fail(Errc::InvalidArgument, "field order out of range");
        if (!(p >= 2)) fail(Errc::NotPrimePower, "bad characteristic");
        // validate primality early so CLI usage errors stay usage errors
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) fail(Errc::NotPrimePower, std::to_string(p) + " is not prime");
        if (q_out != nullptr) *q_out = q.convert_to<std::uint64_t>();
        if (p_out != nullptr) *p_out = p;
        if (k_out != nullptr) *k_out = k;
    });
}

ffg_status ffg_verify_main(ffg_context* ctx, uint64_t q, uint32_t n, ffg_report** out) {
    return emit_report(ctx, &verify_main_theorem, q, n, out);
}

ffg_status ffg_verify_degos(ffg_context* ctx, uint64_t p, uint32_t n, ffg_report** out) {
    return emit_report(ctx, &verify_degos, p, n, out);
}

ffg_status ffg_verify_singer_lemma(ffg_context* ctx, uint64_t q, uint32_t n, ffg_report** out) {
    return emit_report(ctx, &verify_singer_lemma, q, n, out);
}

ffg_status ffg_verify_fixed_points(ffg_context* ctx, uint64_t q, uint32_t a, uint32_t d,
                                   ffg_report** out) {
    return guarded(ctx, [&] {
        if (out == nullptr) fail(Errc::InvalidArgument, "null report output");
        *out = new ffg_report{verify_fixed_point_lemma(q, a, d, ctx->cfg)};
    });
}

ffg_status ffg_verify_two_companion(ffg_context* ctx, uint64_t q, uint32_t n, ffg_report** out) {
    return emit_report(ctx, &verify_two_companion, q, n, out);
}

ffg_status ffg_verify_unique_ext(ffg_context* ctx, uint64_t q, uint32_t n, uint32_t d,
                                 ffg_report** out) {
    return guarded(ctx, [&] {
        if (out == nullptr) fail(Errc::InvalidArgument, "null report output");
        *out = new ffg_report{verify_unique_extension(q, n, d, ctx->cfg)};
    });
}

ffg_status ffg_verify_kantor(ffg_context* ctx, uint64_t q, uint32_t n, ffg_report** out) {
    return emit_report(ctx, &kantor_scan, q, n, out);
}

int ffg_report_passed(const ffg_report* rep) { return rep != nullptr && rep->rep.passed() ? 1 : 0; }

int ffg_report_budget_hit(const ffg_report* rep) {
    return rep != nullptr && rep->rep.budget_hit ? 1 : 0;
}

uint64_t ffg_report_failure_count(const ffg_report* rep) {
    return rep == nullptr ? 0 : rep->rep.failures.size();
}

ffg_status ffg_report_json(const ffg_report* rep, char** out) {
    if (rep == nullptr || out == nullptr) return FFG_ERR_INVALID_ARGUMENT;
    *out = dup_string(report_json(rep->rep));
    return FFG_OK;
}

ffg_status ffg_report_csv_row(const ffg_report* rep, char** out) {
    if (rep == nullptr || out == nullptr) return FFG_ERR_INVALID_ARGUMENT;
    *out = dup_string(report_csv_row(rep->rep));
    return FFG_OK;
}

ffg_status ffg_report_text(const ffg_report* rep, char** out) {
    if (rep == nullptr || out == nullptr) return FFG_ERR_INVALID_ARGUMENT;
    *out = dup_string(report_text(rep->rep));
    return FFG_OK;
}

const char* ffg_report_csv_header(void) {
    static const std::string header = report_csv_header();
    return header.c_str();
}

void ffg_report_free(ffg_report* rep) { delete rep; }

ffg_status ffg_list_primitive(ffg_context* ctx, uint64_t q, uint32_t n, char** out) {
    return guarded(ctx, [&] {
        if (out == nullptr) fail(Errc::InvalidArgument, "null output");
        const auto fs = enumerate_primitive(make_field_q(q, std::max(ctx->cfg.point_budget, q)), n,
                                            ctx->cfg.point_budget);
        std::string text;
        for (const auto& f : fs) {
            text += poly_text(f);
            text += '\n';
        }
        *out = dup_string(text);
    });
}

ffg_status ffg_list_nonzero_const(ffg_context* ctx, uint64_t q, uint32_t n, char** out) {
    return guarded(ctx, [&] {
        if (out == nullptr) fail(Errc::InvalidArgument, "null output");
        const auto fs = enumerate_nonzero_const(
            make_field_q(q, std::max(ctx->cfg.point_budget, q)), n, ctx->cfg.point_budget);
        std::string text;
        for (const auto& f : fs) {
            text += poly_text(f);
            text += '\n';
        }
        *out = dup_string(text);
    });
}

ffg_status ffg_order_from_generators(ffg_context* ctx, uint64_t q, uint32_t n,
                                     const char* file_text, char** out) {
    return guarded(ctx, [&] {
        if (out == nullptr || file_text == nullptr)
            fail(Errc::InvalidArgument, "null input or output");
        const FieldPtr fld = make_field_q(q, std::max(ctx->cfg.point_budget, q));
        const auto mats = parse_generator_file(fld, n, file_text);
        std::vector<Perm> perms;
        perms.reserve(mats.size());
        for (const auto& m : mats) perms.push_back(matrix_to_perm(m, ctx->cfg.point_budget));
        const Bigint o = group_order_bounded(perms, gl_order(n, q));
        *out = dup_string(to_decimal(o));
    });
}

ffg_status ffg_gl_order(ffg_context* ctx, uint64_t q, uint32_t n, char** out) {
    return guarded(ctx, [&] {
        if (out == nullptr) fail(Errc::InvalidArgument, "null output");
        split_prime_power(q);  // validates
        *out = dup_string(to_decimal(gl_order(n, q)));
    });
}

void ffg_string_free(char* s) { std::free(s); }

}  // extern "C"
