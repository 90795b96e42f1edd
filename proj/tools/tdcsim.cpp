// tdcsim: run scenario configs, the verification suite and figure tables.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdcoupling/runner.hpp"

namespace cli = tdc::cli;

int main(int argc, char** argv) {
    CLI::App app{"Closed-form dynamics of quantum systems under time-dependent bath coupling"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run a JSON scenario configuration");
    run->add_option("config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);

    std::string suite = "default";
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "Compare closed forms against the numerical oracle");
    verify->add_option("--suite", suite, "Parameter suite")->check(CLI::IsMember({"default", "fast"}));
    verify->add_option("--report", report_path, "Write the JSON report here instead of stdout");

    std::vector<std::string> figures;
    std::string out_dir = "figures";
    auto* figure = app.add_subcommand("figure", "Write figure data as <out>/<id>.csv");
    figure->add_option("ids", figures, "Figure ids (fig2 fig3 fig4 fig5 fig8) or 'all'")->required();
    figure->add_option("--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kConfigError;
    }

    if (*run) {
        return cli::guarded([&] { return cli::execute(cli::load_config(config_path), std::cerr); }, std::cerr);
    }
    if (*verify) {
        return cli::guarded(
            [&] {
                const auto report = tdc::verify::run(tdc::verify::parse_suite(suite));
                const std::string text = cli::report_text(report);
                if (report_path.empty())
                    std::cout << text;
                else
                    tdc::series::write_atomic(report_path, text);
                std::cerr << "verify (" << suite << "): " << report.records.size() << " comparisons, "
                          << report.failures() << " failed\n";
                return report.passed() ? cli::kSuccess : cli::kVerificationFailed;
            },
            std::cerr);
    }
    return cli::guarded(
        [&] {
            std::vector<std::string> ids;
            for (const auto& id : figures) {
                if (id == "all")
                    ids.insert(ids.end(), cli::figure_ids().begin(), cli::figure_ids().end());
                else
                    ids.push_back(id);
            }
            for (const auto& id : ids) {
                const auto path = std::filesystem::path(out_dir) / (id + ".csv");
                tdc::series::write_csv(path, cli::figure_table(id));
                std::cerr << id << " -> " << path.string() << "\n";
            }
            return cli::kSuccess;
        },
        std::cerr);
}
