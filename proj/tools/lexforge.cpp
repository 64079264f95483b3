#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexforge/pipeline.hpp"

namespace {

struct Options {
    std::string config;
    std::string out;
    std::vector<std::string> overrides;
};

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config, "Configuration file")->required();
    cmd->add_option("--out", opt.out,
                    "Output directory (overrides paths.output_dir)");
    cmd->add_option("--set", opt.overrides,
                    "Config override as section.key=value (repeatable)");
}

lexforge::PipelineConfig make_config(const Options& opt) {
    lexforge::PipelineConfig cfg = lexforge::load_config(opt.config);
    for (const std::string& assignment : opt.overrides) {
        lexforge::apply_override(cfg, assignment);
    }
    if (!opt.out.empty()) {
        cfg.paths.output_dir = opt.out;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic sentiment-lexicon induction pipeline"};
    app.set_version_flag("--version", std::string("lexforge ") + LEXFORGE_VERSION);
    app.require_subcommand(1);

    Options opt;
    CLI::App* seeds = app.add_subcommand(
        "seeds", "Score and select sentiment seeds from rated comments");
    CLI::App* expand = app.add_subcommand(
        "expand", "Grow the seeds into a general lexicon over the synonymy graph");
    CLI::App* extract = app.add_subcommand(
        "extract", "Mine patterns and extract domain sentiment words");
    CLI::App* eval = app.add_subcommand(
        "eval", "Score pipeline outputs against labeled data");
    for (CLI::App* cmd : {seeds, expand, extract, eval}) {
        add_common_options(cmd, opt);
    }

    CLI11_PARSE(app, argc, argv);

    using Runner = void (*)(const lexforge::PipelineConfig&, std::ostream&);
    Runner runner = nullptr;
    if (seeds->parsed()) {
        runner = lexforge::run_seeds;
    } else if (expand->parsed()) {
        runner = lexforge::run_expand;
    } else if (extract->parsed()) {
        runner = lexforge::run_extract;
    } else {
        runner = lexforge::run_eval;
    }

    try {
        runner(make_config(opt), std::cerr);
    } catch (const lexforge::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const lexforge::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 3;
    } catch (const lexforge::stage_error& e) {
        std::cerr << "stage error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
