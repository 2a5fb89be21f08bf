// Command-line front end: series I/O, convolutions, transforms, and the
// identity-verification suite.  Exit codes: 0 success, 1 verification
// failure, 2 input error.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncprob/boxed.hpp"
#include "ncprob/dualconv.hpp"
#include "ncprob/flowlog.hpp"
#include "ncprob/json_io.hpp"
#include "ncprob/ncpart.hpp"
#include "ncprob/verify.hpp"

using namespace ncprob;

namespace {

ProductKind parse_kind(const std::string& name) {
    if (name == "tensor") return ProductKind::Tensor;
    if (name == "free") return ProductKind::Free;
    if (name == "boolean") return ProductKind::Boolean;
    if (name == "monotone") return ProductKind::Monotone;
    if (name == "antimonotone") return ProductKind::AntiMonotone;
    throw value_error("unknown product '" + name + "'");
}

void print_series(const Series<Rational>& f, const std::string& format) {
    if (format == "json") std::printf("%s\n", series_to_json(f).dump(2).c_str());
    else std::printf("%s\n", series_to_string(f).c_str());
}

int run_nc_list(int n, const std::string& format) {
    nlohmann::json rows = nlohmann::json::array();
    for (const NCPartition& p : enumerate_nc(n)) {
        NCPartition k = kreweras(p);
        if (format == "json")
            rows.push_back({{"partition", partition_to_string(p)},
                            {"kreweras", partition_to_string(k)},
                            {"blocks", p.block_count()},
                            {"kreweras_blocks", k.block_count()}});
        else
            std::printf("%s  K=%s  blocks %d+%d\n", partition_to_string(p).c_str(),
                        partition_to_string(k).c_str(), p.block_count(), k.block_count());
    }
    if (format == "json") {
        nlohmann::json out{{"n", n},
                           {"count", static_cast<std::int64_t>(enumerate_nc(n).size())},
                           {"rows", rows}};
        std::printf("%s\n", out.dump(2).c_str());
    }
    return 0;
}

int run_verify(const VerifyOptions& opts, const std::string& format) {
    bool all = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckResult& c : run_all_checks(opts)) {
        all = all && c.pass;
        if (format == "json")
            rows.push_back({{"check", c.check},
                            {"status", c.pass ? "pass" : "fail"},
                            {"detail", c.detail}});
        else
            std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.check.c_str(),
                        c.detail.c_str());
    }
    if (format == "json") std::printf("%s\n", rows.dump(2).c_str());
    else std::printf("verify: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}

Series<Rational> cumulants_as_series(const CumulantVector<Rational>& k) {
    Series<Rational> out(k.alphabet, k.max_deg, false);
    for (const auto& [w, v] : k.kappa) out.set(w, v);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel for moment series, universal products and convolution groups"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* nc = app.add_subcommand("nc", "Non-crossing partition tables");
    nc->require_subcommand(1);
    auto* nc_list = nc->add_subcommand("list", "List NC(n) with Kreweras complements");
    int nc_n = 3;
    nc_list->add_option("--n", nc_n, "Number of points")->required()->check(CLI::Range(1, 12));

    auto* conv = app.add_subcommand("conv", "Convolve two series with a labelled product");
    std::string conv_flavor, conv_product, conv_f, conv_g;
    conv->add_option("--flavor", conv_flavor)->required()->check(CLI::IsMember({"add", "mul"}));
    conv->add_option("--product", conv_product)
        ->required()
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone", "antimonotone"}));
    conv->add_option("f", conv_f, "First series (JSON file)")->required();
    conv->add_option("g", conv_g, "Second series (JSON file)")->required();

    auto* boxed = app.add_subcommand("boxed", "Boxed product of two series");
    std::string boxed_f, boxed_g;
    boxed->add_option("f", boxed_f)->required();
    boxed->add_option("g", boxed_g)->required();

    auto* moeb = app.add_subcommand("moeb", "Moebius series of the boxed product");
    int moeb_s = 1, moeb_deg = 4;
    moeb->add_option("--s", moeb_s)->required()->check(CLI::Range(1, 8));
    moeb->add_option("--max-deg", moeb_deg)->required()->check(CLI::Range(1, 12));

    auto* rt = app.add_subcommand("rtransform", "Boxed cumulants of a moment series");
    std::string rt_f;
    rt->add_option("f", rt_f)->required();

    auto* inv = app.add_subcommand("inverse", "Inverse for a convolution group");
    std::string inv_op, inv_f;
    inv->add_option("--op", inv_op)->required()->check(CLI::IsMember({"boxtimesV"}));
    inv->add_option("f", inv_f)->required();

    auto* cum = app.add_subcommand("cumulants", "Flow-logarithm cumulants of a series");
    std::string cum_product, cum_flavor, cum_f;
    cum->add_option("--product", cum_product)
        ->required()
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone", "antimonotone"}));
    cum->add_option("--flavor", cum_flavor)->required()->check(CLI::IsMember({"add", "mul"}));
    cum->add_option("f", cum_f)->required();

    auto* law = app.add_subcommand("grouplaw", "Symbolic group law at one word");
    std::string law_product, law_flavor, law_word;
    law->add_option("--product", law_product)
        ->required()
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone", "antimonotone"}));
    law->add_option("--flavor", law_flavor)->required()->check(CLI::IsMember({"add", "mul"}));
    law->add_option("--word", law_word)->required();

    auto* verify = app.add_subcommand("verify", "Run identity suites");
    verify->require_subcommand(1);
    auto* verify_all = verify->add_subcommand("all", "Every suite");
    VerifyOptions vopts;
    verify_all->add_option("--s", vopts.s)->check(CLI::Range(1, 3))->capture_default_str();
    verify_all->add_option("--max-deg", vopts.max_deg)
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    verify_all->add_option("--seed", vopts.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nc_list) return run_nc_list(nc_n, format);
        if (*conv) {
            DualGroupSpec spec = conv_flavor == "mul" ? DualGroupSpec::multiplicative()
                                                      : DualGroupSpec::additive();
            Series<Rational> out = convolve(parse_kind(conv_product), spec,
                                            series_from_file(conv_f), series_from_file(conv_g));
            print_series(out, format);
            return 0;
        }
        if (*boxed) {
            print_series(boxed_mul(series_from_file(boxed_f), series_from_file(boxed_g)), format);
            return 0;
        }
        if (*moeb) {
            print_series(moeb_series(Alphabet::ones(moeb_s), moeb_deg), format);
            return 0;
        }
        if (*rt) {
            print_series(r_transform(series_from_file(rt_f)), format);
            return 0;
        }
        if (*inv) {
            print_series(boxtimesV_inverse(series_from_file(inv_f)), format);
            return 0;
        }
        if (*cum) {
            Series<Rational> f = series_from_file(cum_f);
            DualGroupSpec spec = cum_flavor == "mul" ? DualGroupSpec::multiplicative()
                                                     : DualGroupSpec::additive();
            GroupHandle<Rational> G = make_convolution_group<Rational>(
                parse_kind(cum_product), spec, f.alphabet, f.max_deg);
            print_series(cumulants_as_series(log_map(G, f)), format);
            return 0;
        }
        if (*law) {
            Word w = parse_word(law_word);
            if (w.empty()) throw value_error("grouplaw: empty word");
            int s = 1;
            for (int x : w.letters) s = x > s ? x : s;
            DualGroupSpec spec = law_flavor == "mul" ? DualGroupSpec::multiplicative()
                                                     : DualGroupSpec::additive();
            Poly p = group_law(parse_kind(law_product), spec, Alphabet::ones(s), w);
            if (format == "json") {
                nlohmann::json out{{"word", law_word}, {"law", p.to_string()}};
                std::printf("%s\n", out.dump(2).c_str());
            } else {
                std::printf("F[%s] = %s\n", law_word.c_str(), p.to_string().c_str());
            }
            return 0;
        }
        if (*verify_all) return run_verify(vopts, format);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
