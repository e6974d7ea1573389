#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace kc = kummer::cli;

namespace {

struct InputFlags {
    std::optional<std::string> f, g, h, m;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    cmd->add_option("--f", in.f, "square-free part f (e.g. 2+i, -3, 4i)");
    cmd->add_option("--g", in.g, "square-free part g (default 1)");
    cmd->add_option("--h", in.h, "square-free part h (default 1)");
    cmd->add_option("--m", in.m, "radicand m, decomposed as t^4 f g^2 h^3");
}

kc::Input resolve(InputFlags const& in) {
    if (in.m) {
        if (in.f || in.g || in.h) throw kummer::Error(kummer::ErrorCode::Parse, "--m excludes --f/--g/--h");
        return kc::input_from_m(*in.m);
    }
    if (!in.f) throw kummer::Error(kummer::ErrorCode::Parse, "need --f (with optional --g, --h) or --m");
    return kc::input_from_fgh(*in.f, in.g.value_or("1"), in.h.value_or("1"));
}

int emit(kc::Report const& rep, bool as_json) {
    if (as_json)
        std::cout << rep.doc.dump(2) << '\n';
    else
        std::cout << kc::render_text(rep.doc);
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral bases of quartic Kummer extensions of Q(i)"};
    app.set_help_flag("--help", "print help");  // -h would clash with --h
    app.require_subcommand(1);

    bool as_json = false;
    std::string verify = "fast";
    std::uint64_t budget = kummer::SearchOptions{}.budget;
    InputFlags in;
    std::optional<std::string> fh;

    auto* basis = app.add_subcommand("basis", "table-driven normalized integral basis");
    add_input_flags(basis, in);
    basis->add_option("--verify", verify, "none | fast | full")->check(CLI::IsMember({"none", "fast", "full"}));
    basis->add_option("--budget", budget, "integrality tests per degree for the oracle");

    auto* oracle = app.add_subcommand("oracle", "basis by exhaustive denominator search, compared with the table");
    add_input_flags(oracle, in);
    oracle->add_option("--budget", budget, "integrality tests per degree");

    auto* ramify = app.add_subcommand("ramify", "break numbers and discriminant valuation at 1+i");
    add_input_flags(ramify, in);

    auto* quad = app.add_subcommand("quadratic", "integral basis of K(sqrt(fh))");
    quad->add_option("--fh", fh, "square-free fh");
    quad->add_option("--f", in.f, "f (multiplied by --h)");
    quad->add_option("--h", in.h, "h (default 1)");

    auto* selftest = app.add_subcommand("selftest", "build and fully verify every sample of every case row");
    selftest->add_option("--budget", budget, "integrality tests per degree for the oracle");

    for (auto* cmd : {basis, oracle, ramify, quad, selftest}) cmd->add_flag("--json", as_json, "emit one JSON object");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? 0 : kc::kExitParse;
    }

    kummer::SearchOptions const options{budget};
    try {
        if (*basis) return emit(kc::basis_report(resolve(in), kc::parse_verify_level(verify), options), as_json);
        if (*oracle) return emit(kc::oracle_report(resolve(in), options), as_json);
        if (*ramify) return emit(kc::ramify_report(resolve(in)), as_json);
        if (*quad) {
            kummer::GaussianInt value;
            if (fh)
                value = kummer::GaussianInt::parse(*fh);
            else if (in.f)
                value = kummer::GaussianInt::parse(*in.f) * kummer::GaussianInt::parse(in.h.value_or("1"));
            else
                throw kummer::Error(kummer::ErrorCode::Parse, "need --fh or --f");
            return emit(kc::quadratic_report(value), as_json);
        }
        if (*selftest) return emit(kc::selftest_report(options), as_json);
    } catch (kummer::BudgetExceeded const& e) {
        std::cerr << e.what() << '\n';
        if (as_json)
            std::cout << kc::json{{"error", "BUDGET"}, {"partial_bound", kc::to_json(e.partial())}}.dump(2) << '\n';
        return kc::kExitBudget;
    } catch (kummer::Error const& e) {
        std::cerr << e.what() << '\n';
        if (as_json) std::cout << kc::json{{"error", std::string(kummer::to_string(e.code()))}, {"message", e.what()}}.dump(2) << '\n';
        return kc::exit_code_for(e.code());
    }
    return kc::kExitInternal;
}
