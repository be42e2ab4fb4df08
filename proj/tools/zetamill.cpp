// zetamill: verification runs, zero-cache management, spectral sums,
// constants, and the Gram series from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zetamill/constants.hpp"
#include "zetamill/identities.hpp"
#include "zetamill/secondary.hpp"
#include "zetamill/zeros.hpp"

namespace {

using namespace zetamill;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

std::string default_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ZETAMILL_CACHE")) return env;
    return "zetamill.zc";
}

ZeroCache load_cache_or_hint(const std::string& path) {
    if (!std::filesystem::exists(path))
        throw Error("cache file '" + path + "' not found; run `zetamill zeros` first");
    return cache_load(path);
}

void print_report_text(const IdentityReport& r) {
    std::cout << "id=" << r.id.str() << " verdict=" << (r.verdict ? "pass" : "fail")
              << " digits_matched="
              << (r.digits_matched.all_at_precision ? std::string("all-at-precision")
                                                    : std::to_string(r.digits_matched.digits))
              << " threshold=" << r.threshold_digits << " achievable=" << r.achievable_digits
              << " zeros_used=" << r.zeros_used << "\n";
    long show = std::min<long>(r.precision.internal_digits(), 50);
    std::cout << "  lhs       = " << to_decimal_string(r.lhs, show) << "\n";
    std::cout << "  rhs       = " << to_decimal_string(r.rhs, show) << "\n";
    std::cout << "  |lhs-rhs| = " << to_decimal_string(r.abs_diff, 3) << "\n";
    std::cout << "  tail_err  = " << to_decimal_string(r.tail_error, 3) << "\n";
}

int run_verify(const std::string& id_text, long digits, long even_digits, long zeros,
               const std::string& cache_flag, const std::string& format) {
    WorkingPrecision p(std::max(digits, even_digits) + 20);
    std::optional<ZeroCache> cache;
    auto cache_for = [&](const IdentityId& id) -> const ZeroCache* {
        if (!id.is_even()) return nullptr;
        if (!cache) cache = load_cache_or_hint(default_cache_path(cache_flag));
        return &*cache;
    };

    std::vector<IdentityReport> reports;
    if (id_text == "all") {
        IdentityId probe = IdentityId::display(2);
        reports = verify_all(digits, even_digits, zeros, cache_for(probe), p);
    } else {
        IdentityId id = IdentityId::parse(id_text);
        long threshold = id.is_even() ? even_digits : digits;
        reports.push_back(verify_identity(id, threshold, zeros, cache_for(id), p));
    }

    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.verdict;
        if (format == "json")
            std::cout << report_to_json(r) << "\n";
        else
            print_report_text(r);
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

int run_zeros(double upto, long count, long digits, const std::string& cache_flag,
              const std::string& format) {
    WorkingPrecision p(digits);
    ZeroCache cache = count > 0 ? compute_zeros_count(count, p)
                                : compute_zeros_upto(Real(upto), p);
    std::string path = default_cache_path(cache_flag);
    cache_store(cache, path);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["count"] = cache.records.size();
        j["digits"] = cache.digits;
        j["cache"] = path;
        if (!cache.records.empty())
            j["top_height"] = to_decimal_string(cache.records.back().ordinate, 12);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "stored " << cache.records.size() << " zeros at " << cache.digits
                  << " digits in " << path << "\n";
        if (!cache.records.empty())
            std::cout << "top height " << to_decimal_string(cache.records.back().ordinate, 12)
                      << "\n";
    }
    return kExitPass;
}

int run_sum(long k, const std::string& target_text, const std::string& cache_flag,
            const std::string& format) {
    ZeroCache cache = load_cache_or_hint(default_cache_path(cache_flag));
    Real target = real_from_string(target_text, 25);
    SecondaryZetaValue v = secondary_zeta(k, target, cache);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["k"] = v.k;
        j["zeros_used"] = v.zeros_used;
        j["cutoff"] = to_decimal_string(v.cutoff, 20);
        j["partial"] = to_decimal_string(v.partial, cache.digits);
        j["tail"] = to_decimal_string(v.tail, 20);
        j["error_bound"] = to_decimal_string(v.error_bound, 10);
        j["value"] = to_decimal_string(v.value, cache.digits);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Z(" << v.k << ") = " << to_decimal_string(v.value, cache.digits) << "\n"
                  << "  zeros_used  = " << v.zeros_used << "\n"
                  << "  cutoff      = " << to_decimal_string(v.cutoff, 20) << "\n"
                  << "  partial     = " << to_decimal_string(v.partial, cache.digits) << "\n"
                  << "  tail        = " << to_decimal_string(v.tail, 20) << "\n"
                  << "  error_bound = " << to_decimal_string(v.error_bound, 10) << "\n";
    }
    return kExitPass;
}

int run_constants(long digits, const std::string& format) {
    WorkingPrecision p(digits);
    auto val = [&](NamedConstant c) { return to_decimal_string(constant_value(c, p), digits); };
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["digits"] = digits;
        j["euler_gamma"] = val(NamedConstant::euler_gamma);
        j["catalan"] = val(NamedConstant::catalan);
        j["pi"] = val(NamedConstant::pi);
        j["log2"] = val(NamedConstant::log2);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "euler_gamma = " << val(NamedConstant::euler_gamma) << "\n"
                  << "catalan     = " << val(NamedConstant::catalan) << "\n"
                  << "pi          = " << val(NamedConstant::pi) << "\n"
                  << "log2        = " << val(NamedConstant::log2) << "\n";
    }
    return kExitPass;
}

int run_gram(const std::string& x_text, long digits, const std::string& format) {
    WorkingPrecision p(digits);
    Real x = real_from_string(x_text, p.internal_digits());
    Real r = gram_series(x, p);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["x"] = x_text;
        j["digits"] = digits;
        j["value"] = to_decimal_string(r, digits);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "R(" << x_text << ") = " << to_decimal_string(r, digits) << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetamill: logarithmic derivatives of zeta at 1/2, two ways"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "verify identities against closed forms");
    std::string id_text = "all";
    long digits = 40, even_digits = -1, zeros = 1000;
    std::string cache_flag;
    verify->add_option("--id", id_text, "identity: 1..5, all, or general:N");
    verify->add_option("--digits", digits, "digit threshold (odd identities)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--even-digits", even_digits,
                       "digit threshold for even identities (default: same as --digits)");
    verify->add_option("--zeros", zeros, "zero-cache depth for even identities")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--cache", cache_flag, "zero cache path (default $ZETAMILL_CACHE)");

    auto* zeros_cmd = app.add_subcommand("zeros", "compute and store zero ordinates");
    double upto = 0;
    long count = 0, zdigits = 40;
    std::string zcache_flag;
    auto* upto_opt = zeros_cmd->add_option("--upto", upto, "isolate zeros up to this height");
    auto* count_opt = zeros_cmd->add_option("--count", count, "isolate this many zeros");
    zeros_cmd->add_option("--digits", zdigits, "certified digits")->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--cache", zcache_flag, "cache destination");
    upto_opt->excludes(count_opt);

    auto* sum = app.add_subcommand("sum", "spectral sum over zero ordinates");
    long k = 2;
    std::string target_text = "1e-6", scache_flag;
    sum->add_option("--k", k, "even power k >= 2")->required();
    sum->add_option("--target-error", target_text, "required error bound")->required();
    sum->add_option("--cache", scache_flag, "zero cache path");

    auto* constants = app.add_subcommand("constants", "print the named constants");
    long cdigits = 40;
    constants->add_option("--digits", cdigits, "digits")->check(CLI::PositiveNumber);

    auto* gram = app.add_subcommand("gram", "Gram series R(x)");
    std::string x_text;
    long gdigits = 40;
    gram->add_option("--x", x_text, "argument x > 1")->required();
    gram->add_option("--digits", gdigits, "digits")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (even_digits < 0) even_digits = digits;
            return run_verify(id_text, digits, even_digits, zeros, cache_flag, format);
        }
        if (zeros_cmd->parsed()) {
            if ((upto_opt->count() == 0) == (count_opt->count() == 0))
                throw CLI::ValidationError("zeros", "exactly one of --upto/--count is required");
            return run_zeros(upto, count, zdigits, zcache_flag, format);
        }
        if (sum->parsed()) return run_sum(k, target_text, scache_flag, format);
        if (constants->parsed()) return run_constants(cdigits, format);
        if (gram->parsed()) return run_gram(x_text, gdigits, format);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const zetamill::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
