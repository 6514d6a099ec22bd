// ffgroup command-line front end. Talks to the core exclusively through the
// C API in ffgroup/ffgroup.h.

#include <ffgroup/ffgroup.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kGrammar =
    "usage:\n"
    "  ffgroup verify main --q Q --n N\n"
    "  ffgroup verify degos --p P --n N\n"
    "  ffgroup verify singer-lemma --q Q --n N\n"
    "  ffgroup verify fixed-points --q Q --a A --d D\n"
    "  ffgroup verify two-companion --q Q --n N\n"
    "  ffgroup verify unique-ext --q Q --n N --d D\n"
    "  ffgroup verify kantor --q Q --n N\n"
    "  ffgroup list primitive --q Q --n N\n"
    "  ffgroup list nonzero-const --q Q --n N\n"
    "  ffgroup order --q Q --n N --gens PATH\n"
    "  ffgroup report --qmax QM --nmax NM [--budget-points B] --out PATH\n"
    "global flags: --format json|csv|text, --workers W, --budget-points B, --budget-scan S\n"
    "Q accepts prime powers as \"p^k\" or plain integers.\n";

constexpr int kExitPass = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct ContextDeleter {
    void operator()(ffg_context* c) const { ffg_context_free(c); }
};
struct ReportDeleter {
    void operator()(ffg_report* r) const { ffg_report_free(r); }
};
using ContextPtr = std::unique_ptr<ffg_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<ffg_report, ReportDeleter>;

std::string take_string(char* s) {
    std::string out = s == nullptr ? "" : s;
    ffg_string_free(s);
    return out;
}

int exit_code_for(ffg_status st) {
    switch (st) {
        case FFG_OK:
            return kExitPass;
        case FFG_ERR_BUDGET:
            return kExitBudget;
        default:
            return kExitUsage;
    }
}

int report_exit_code(const std::vector<ReportPtr>& reports) {
    bool budget = false;
    for (const auto& r : reports) {
        if (ffg_report_failure_count(r.get()) > 0) return kExitFailures;
        if (ffg_report_budget_hit(r.get())) budget = true;
    }
    return budget ? kExitBudget : kExitPass;
}

std::string render_reports(const std::vector<ReportPtr>& reports, const std::string& format) {
    if (format == "csv") {
        std::string out = ffg_report_csv_header();
        out += '\n';
        for (const auto& r : reports) {
            char* row = nullptr;
            ffg_report_csv_row(r.get(), &row);
            out += take_string(row);
            out += '\n';
        }
        return out;
    }
    if (format == "text") {
        std::string out;
        for (const auto& r : reports) {
            char* t = nullptr;
            ffg_report_text(r.get(), &t);
            out += take_string(t);
            out += '\n';
        }
        return out;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        char* j = nullptr;
        ffg_report_json(r.get(), &j);
        arr.push_back(nlohmann::ordered_json::parse(take_string(j)));
    }
    if (arr.size() == 1) return arr.front().dump(2) + "\n";
    return arr.dump(2) + "\n";
}

struct SweepEntry {
    std::string label;
    ReportPtr report;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field matrix-group toolkit and verification harness"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    unsigned workers = 0;
    std::uint64_t budget_points = 4096;
    std::uint64_t budget_scan = 25000;
    if (const char* env = std::getenv("FFGROUP_BUDGET_POINTS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v >= 1) budget_points = v;
    }
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--workers", workers);
    app.add_option("--budget-points", budget_points)->check(CLI::PositiveNumber);
    app.add_option("--budget-scan", budget_scan)->check(CLI::PositiveNumber);

    std::string q_text, gens_path, out_path;
    std::uint64_t p_value = 0;
    unsigned n_value = 0, a_value = 0, d_value = 0, qmax = 0, nmax = 0;

    CLI::App* verify = app.add_subcommand("verify", "run one verification harness");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto add_qn = [&](CLI::App* cmd) {
        cmd->add_option("--q", q_text)->required();
        cmd->add_option("--n", n_value)->required();
        cmd->fallthrough();
    };
    CLI::App* v_main = verify->add_subcommand("main", "main-theorem grid");
    add_qn(v_main);
    CLI::App* v_degos = verify->add_subcommand("degos", "X^n - 1 conjecture slice");
    v_degos->add_option("--p", p_value)->required();
    v_degos->add_option("--n", n_value)->required();
    v_degos->fallthrough();
    CLI::App* v_singer = verify->add_subcommand("singer-lemma", "companion order iff primitive");
    add_qn(v_singer);
    CLI::App* v_fixed = verify->add_subcommand("fixed-points", "semilinear fixed-point bound");
    v_fixed->add_option("--q", q_text)->required();
    v_fixed->add_option("--a", a_value)->required();
    v_fixed->add_option("--d", d_value)->required();
    v_fixed->fallthrough();
    CLI::App* v_two = verify->add_subcommand("two-companion", "two-companion corollary");
    add_qn(v_two);
    CLI::App* v_unique = verify->add_subcommand("unique-ext", "unique extension subgroup");
    add_qn(v_unique);
    v_unique->add_option("--d", d_value)->required();
    CLI::App* v_kantor = verify->add_subcommand("kantor", "singer-overgroup scan");
    add_qn(v_kantor);

    CLI::App* list = app.add_subcommand("list", "enumerate polynomial families");
    list->require_subcommand(1);
    list->fallthrough();
    CLI::App* l_prim = list->add_subcommand("primitive", "monic primitive polynomials");
    add_qn(l_prim);
    CLI::App* l_nzc = list->add_subcommand("nonzero-const", "monic nonzero-constant polynomials");
    add_qn(l_nzc);

    CLI::App* order_cmd = app.add_subcommand("order", "group order from a generator file");
    order_cmd->add_option("--q", q_text)->required();
    order_cmd->add_option("--n", n_value)->required();
    order_cmd->add_option("--gens", gens_path)->required();
    order_cmd->fallthrough();

    CLI::App* report_cmd = app.add_subcommand("report", "sweep a (q, n) grid and persist reports");
    report_cmd->add_option("--qmax", qmax)->required();
    report_cmd->add_option("--nmax", nmax)->required();
    report_cmd->add_option("--out", out_path)->required();
    report_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help() << "\n" << kGrammar;
            return kExitPass;
        }
        std::cerr << e.what() << "\n" << kGrammar;
        return kExitUsage;
    }

    ContextPtr ctx(ffg_context_new());
    ffg_context_set_point_budget(ctx.get(), budget_points);
    ffg_context_set_scan_budget(ctx.get(), budget_scan);
    ffg_context_set_workers(ctx.get(), workers);

    auto complain = [&](ffg_status st) {
        std::cerr << "error: " << ffg_context_last_error(ctx.get()) << "\n";
        const int code = exit_code_for(st);
        if (code == kExitUsage) std::cerr << kGrammar;
        return code;
    };

    auto parse_q = [&](std::uint64_t& q_out) -> std::optional<int> {
        const ffg_status st = ffg_parse_prime_power(ctx.get(), q_text.c_str(), &q_out, nullptr, nullptr);
        if (st != FFG_OK) return complain(st);
        return std::nullopt;
    };

    // ---- single harness runs ----
    auto run_single = [&](ffg_status st, ffg_report* raw) -> int {
        if (st != FFG_OK) return complain(st);
        std::vector<ReportPtr> reports;
        reports.emplace_back(raw);
        std::cout << render_reports(reports, format);
        return report_exit_code(reports);
    };

    if (v_main->parsed() || v_singer->parsed() || v_two->parsed() || v_kantor->parsed() ||
        v_unique->parsed() || v_fixed->parsed()) {
        std::uint64_t q = 0;
        if (auto code = parse_q(q)) return *code;
        ffg_report* raw = nullptr;
        ffg_status st = FFG_OK;
        if (v_main->parsed())
            st = ffg_verify_main(ctx.get(), q, n_value, &raw);
        else if (v_singer->parsed())
            st = ffg_verify_singer_lemma(ctx.get(), q, n_value, &raw);
        else if (v_two->parsed())
            st = ffg_verify_two_companion(ctx.get(), q, n_value, &raw);
        else if (v_kantor->parsed())
            st = ffg_verify_kantor(ctx.get(), q, n_value, &raw);
        else if (v_unique->parsed())
            st = ffg_verify_unique_ext(ctx.get(), q, n_value, d_value, &raw);
        else
            st = ffg_verify_fixed_points(ctx.get(), q, a_value, d_value, &raw);
        return run_single(st, raw);
    }
    if (v_degos->parsed()) {
        ffg_report* raw = nullptr;
        return run_single(ffg_verify_degos(ctx.get(), p_value, n_value, &raw), raw);
    }

    if (l_prim->parsed() || l_nzc->parsed()) {
        std::uint64_t q = 0;
        if (auto code = parse_q(q)) return *code;
        char* text = nullptr;
        const ffg_status st = l_prim->parsed()
                                  ? ffg_list_primitive(ctx.get(), q, n_value, &text)
                                  : ffg_list_nonzero_const(ctx.get(), q, n_value, &text);
        if (st != FFG_OK) return complain(st);
        std::cout << take_string(text);
        return kExitPass;
    }

    if (order_cmd->parsed()) {
        std::uint64_t q = 0;
        if (auto code = parse_q(q)) return *code;
        std::ifstream in(gens_path);
        if (!in) {
            std::cerr << "error: cannot open generator file '" << gens_path << "'\n" << kGrammar;
            return kExitUsage;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        char* text = nullptr;
        const ffg_status st =
            ffg_order_from_generators(ctx.get(), q, n_value, buf.str().c_str(), &text);
        if (st != FFG_OK) return complain(st);
        std::cout << take_string(text) << "\n";
        return kExitPass;
    }

    // ---- report sweep ----
    std::vector<ReportPtr> reports;
    auto run_into = [&](const std::string& label, auto&& call) -> bool {
        ffg_report* raw = nullptr;
        const ffg_status st = call(&raw);
        if (st != FFG_OK) {
            std::cerr << "error (" << label << "): " << ffg_context_last_error(ctx.get()) << "\n";
            return false;
        }
        reports.emplace_back(raw);
        std::cout << label << (ffg_report_passed(raw) ? ": PASS" : ": FAIL") << "\n";
        return true;
    };
    auto scan_fits = [&](std::uint64_t q, unsigned n) {
        char* text = nullptr;
        if (ffg_gl_order(ctx.get(), q, n, &text) != FFG_OK) return false;
        const std::string dec = take_string(text);
        if (dec.size() > 19) return false;
        return std::stoull(dec) <= budget_scan;
    };

    for (std::uint64_t q = 2; q <= qmax; ++q) {
        std::uint64_t p = 0;
        std::uint32_t k = 0;
        if (ffg_parse_prime_power(ctx.get(), std::to_string(q).c_str(), nullptr, &p, &k) != FFG_OK)
            continue;
        for (unsigned n = 1; n <= nmax; ++n) {
            // q^n within the point budget
            bool fits = true;
            std::uint64_t pts = 1;
            for (unsigned i = 0; i < n && fits; ++i) {
                if (pts > budget_points / q) fits = false;
                pts *= q;
            }
            if (!fits || pts > budget_points) continue;
            const std::string tag = " q=" + std::to_string(q) + " n=" + std::to_string(n);
            if (!run_into("main" + tag,
                          [&](ffg_report** r) { return ffg_verify_main(ctx.get(), q, n, r); }))
                return kExitUsage;
            if (k == 1 &&
                !run_into("degos" + tag,
                          [&](ffg_report** r) { return ffg_verify_degos(ctx.get(), q, n, r); }))
                return kExitUsage;
            if (!run_into("singer-lemma" + tag, [&](ffg_report** r) {
                    return ffg_verify_singer_lemma(ctx.get(), q, n, r);
                }))
                return kExitUsage;
            if (!run_into("two-companion" + tag, [&](ffg_report** r) {
                    return ffg_verify_two_companion(ctx.get(), q, n, r);
                }))
                return kExitUsage;
            for (unsigned a = 1; a <= 2; ++a) {
                if (n % a != 0) continue;
                const unsigned d = n / a;
                if (d < 2) continue;
                const std::string label = "fixed-points q=" + std::to_string(q) +
                                          " a=" + std::to_string(a) + " d=" + std::to_string(d);
                if (!run_into(label, [&](ffg_report** r) {
                        return ffg_verify_fixed_points(ctx.get(), q, a, d, r);
                    }))
                    return kExitUsage;
            }
            if (scan_fits(q, n)) {
                for (unsigned d = 2; d <= n; ++d) {
                    if (n % d != 0) continue;
                    if (!run_into("unique-ext" + tag + " d=" + std::to_string(d),
                                  [&](ffg_report** r) {
                                      return ffg_verify_unique_ext(ctx.get(), q, n, d, r);
                                  }))
                        return kExitUsage;
                }
                if (!run_into("kantor" + tag, [&](ffg_report** r) {
                        return ffg_verify_kantor(ctx.get(), q, n, r);
                    }))
                    return kExitUsage;
            }
        }
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            char* j = nullptr;
            ffg_report_json(r.get(), &j);
            arr.push_back(nlohmann::ordered_json::parse(take_string(j)));
        }
        out << arr.dump(2) << "\n";
    } else {
        out << render_reports(reports, format);
    }
    return report_exit_code(reports);
}
