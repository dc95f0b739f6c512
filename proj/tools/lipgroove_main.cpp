// lipgroove command-line frontend: extract groove maps, enroll templates,
// and match/identify lip prints against a file-based store.

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "lipgroove/features.hpp"
#include "lipgroove/pipeline.hpp"
#include "lipgroove/pnm.hpp"
#include "lipgroove/store.hpp"

namespace fs = std::filesystem;
using namespace lipgroove;

namespace {

// Exit codes are a stable contract: 0 success/accept, 1 no-match,
// 2 environment, 3 degenerate input, 4 duplicate id.
constexpr int kExitNoMatch = 1;
constexpr int kExitEnvironment = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitDuplicate = 4;

void kv(const char* key, double value) { std::printf("%s=%.6f\n", key, value); }
void kv(const char* key, bool value) { std::printf("%s=%s\n", key, value ? "true" : "false"); }
void kv(const char* key, const std::string& value) { std::printf("%s=%s\n", key, value.c_str()); }

void print_trace(const ThresholdTrace& trace) {
    kv("threshold_final", trace.final);
    std::printf("threshold_steps=%zu\n", trace.iterations.size());
    std::string joined;
    for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", trace.iterations[i]);
        if (i) joined += ',';
        joined += buf;
    }
    kv("threshold_trace", joined);
}

void print_report(const MatchReport& report) {
    kv("ratio_gate_passed", report.ratio_gate_passed);
    kv("ratio_distance", report.ratio_distance);
    kv("groove_score", report.groove_score);
    kv("accepted", report.accepted);
}

GrooveResult run_pipeline(const std::string& input, const PipelineConfig& cfg) {
    PnmImage img = load_pnm_file(input);
    return std::visit([&](const auto& im) { return extract_grooves(im, cfg); }, img);
}

void add_pipeline_flags(CLI::App* cmd, PipelineConfig& cfg) {
    cmd->add_option("--epsilon", cfg.epsilon, "threshold convergence bound");
    cmd->add_option("--sigma", cfg.smooth_sigma, "smoothing kernel sigma");
    cmd->add_option("--kernel-size", cfg.smooth_size, "smoothing kernel size (odd)");
    cmd->add_option("--pre-passes", cfg.pre_passes, "smoothing passes before the first Sobel");
    cmd->add_option("--mid-passes", cfg.mid_passes, "smoothing passes between Sobel stages");
    cmd->add_option("--border", cfg.border, "border policy")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, BorderPolicy>{{"replicate", BorderPolicy::Replicate},
                                                {"zero", BorderPolicy::Zero}},
            CLI::ignore_case));
    cmd->add_option("--canny-low", cfg.canny.low, "Canny low threshold");
    cmd->add_option("--canny-high", cfg.canny.high, "Canny high threshold");
    cmd->add_option("--canny-sigma", cfg.canny.sigma, "Canny smoothing sigma");
    cmd->add_flag("--swap-sobel-naming", cfg.swap_sobel_naming,
                  "swap which mask the horizontal/vertical tracks apply");
}

void add_match_flags(CLI::App* cmd, MatchConfig& cfg) {
    cmd->add_option("--ratio-tol", cfg.ratio_tol, "ratio gate tolerance");
    cmd->add_option("--accept", cfg.accept, "groove score acceptance floor");
}

int cmd_extract(const std::string& input, const std::string& out_dir,
                PipelineConfig cfg) {
    GrooveResult result = run_pipeline(input, cfg);
    LipRatios ratios = compute_ratios(result.mask);

    fs::create_directories(out_dir);
    save_pgm_file(to_gray(result.horizontal), fs::path(out_dir) / "horizontal.pgm");
    save_pgm_file(to_gray(result.vertical), fs::path(out_dir) / "vertical.pgm");
    save_pgm_file(to_gray(result.mask), fs::path(out_dir) / "mask.pgm");
    if (cfg.dump_stages) write_stage_dumps(result, out_dir);

    print_trace(result.trace);
    kv("ratio_upper_lower", ratios.upper_lower_height_ratio);
    kv("ratio_upper_width", ratios.upper_height_width_ratio);
    return 0;
}

int cmd_enroll(const std::string& input, const std::string& id, const std::string& db,
               const PipelineConfig& cfg, bool overwrite) {
    Template t = build_template(id, run_pipeline(input, cfg));
    enroll(db, t, overwrite);
    kv("enrolled", t.id);
    return 0;
}

int cmd_match(const std::string& path_a, const std::string& path_b,
              const PipelineConfig& cfg, const MatchConfig& mcfg) {
    Template a = build_template("left", run_pipeline(path_a, cfg));
    Template b = build_template("right", run_pipeline(path_b, cfg));
    MatchReport report = match_score(a, b, mcfg);
    print_report(report);
    return report.accepted ? 0 : kExitNoMatch;
}

int cmd_identify(const std::string& probe_path, const std::string& db,
                 const PipelineConfig& cfg, const MatchConfig& mcfg) {
    Template probe = build_template("probe", run_pipeline(probe_path, cfg));
    std::vector<Template> gallery = load_all(db);
    auto best = identify(probe, gallery, mcfg);
    if (!best) {
        kv("match_id", std::string("NONE"));
        return kExitNoMatch;
    }
    kv("match_id", best->first);
    kv("groove_score", best->second.groove_score);
    kv("ratio_distance", best->second.ratio_distance);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lip-print groove extraction, enrollment, and identification"};
    app.require_subcommand(1);

    PipelineConfig pipeline;
    MatchConfig match_cfg;
    std::string input, second_input, id, db, out_dir = ".";
    bool overwrite = false;

    CLI::App* extract = app.add_subcommand("extract", "run the groove pipeline on one image");
    extract->add_option("input", input, "input PNM image")->required();
    extract->add_option("--out-dir", out_dir, "directory for output maps");
    extract->add_flag("--dump-stages", pipeline.dump_stages,
                      "also write every intermediate stage as stage_<letter>.pgm");
    add_pipeline_flags(extract, pipeline);

    CLI::App* enroll_cmd = app.add_subcommand("enroll", "extract and store a template");
    enroll_cmd->add_option("input", input, "input PNM image")->required();
    enroll_cmd->add_option("id", id, "identity to enroll as")->required();
    enroll_cmd->add_option("--db", db, "template store directory")
        ->envname("LIPGROOVE_DB")
        ->required();
    enroll_cmd->add_flag("--overwrite", overwrite, "replace an existing template");
    add_pipeline_flags(enroll_cmd, pipeline);

    CLI::App* match_cmd = app.add_subcommand("match", "compare two images directly");
    match_cmd->add_option("image_a", input, "first PNM image")->required();
    match_cmd->add_option("image_b", second_input, "second PNM image")->required();
    add_pipeline_flags(match_cmd, pipeline);
    add_match_flags(match_cmd, match_cfg);

    CLI::App* identify_cmd = app.add_subcommand("identify", "search the store for a probe");
    identify_cmd->add_option("probe", input, "probe PNM image")->required();
    identify_cmd->add_option("--db", db, "template store directory")
        ->envname("LIPGROOVE_DB")
        ->required();
    add_pipeline_flags(identify_cmd, pipeline);
    add_match_flags(identify_cmd, match_cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitEnvironment;
    }

    try {
        if (app.got_subcommand(extract)) return cmd_extract(input, out_dir, pipeline);
        if (app.got_subcommand(enroll_cmd))
            return cmd_enroll(input, id, db, pipeline, overwrite);
        if (app.got_subcommand(match_cmd))
            return cmd_match(input, second_input, pipeline, match_cfg);
        if (app.got_subcommand(identify_cmd))
            return cmd_identify(input, db, pipeline, match_cfg);
    } catch (const DuplicateIdError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitDuplicate;
    } catch (const NoObjectError& ex) {
        std::fprintf(stderr, "error: degenerate input: %s\n", ex.what());
        return kExitDegenerate;
    } catch (const DegenerateLipError& ex) {
        std::fprintf(stderr, "error: degenerate input: %s\n", ex.what());
        return kExitDegenerate;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitEnvironment;
    }
    return kExitEnvironment;
}
