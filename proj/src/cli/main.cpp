#include <phycv/cli/bench.hpp>
#include <phycv/cli/config.hpp>
#include <phycv/cli/io.hpp>
#include <phycv/cli/main.hpp>
#include <phycv/cli/runner.hpp>
#include <phycv/error.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <limits>

namespace phycv::cli {
namespace {

constexpr double kHuge = std::numeric_limits<double>::max();

void add_lowpass_options(CLI::App& cmd, LowpassSpec& lowpass) {
    cmd.add_option("--sigma-lp", lowpass.sigma, "Gaussian low-pass radial cutoff (cycles/sample)")
        ->check(CLI::PositiveNumber);
    cmd.add_flag("!--no-lowpass", lowpass.enabled, "Disable the Gaussian low-pass");
}

void add_postprocess_options(CLI::App& cmd, PostprocessParams& post) {
    cmd.add_option("--thresh-min", post.thresh_min, "Lower threshold in [-1, 0]")->check(CLI::Range(-1.0, 0.0));
    cmd.add_option("--thresh-max", post.thresh_max, "Upper threshold in [0, 1]")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--morph-min", post.min_component, "Remove edge components smaller than this (pixels)");
    cmd.add_flag("--thin,!--no-thin", post.thin, "Thin edges to one pixel");
}

void add_io_options(CLI::App& cmd, RunConfig& config) {
    cmd.add_option("-i,--input", config.input, "Input image, or frame directory with --frames")->required();
    cmd.add_option("-o,--output", config.output, "Output PNG, or output directory with --frames")->required();
    cmd.add_flag("--frames", config.frames_mode, "Treat input/output as numbered-frame directories");
    cmd.add_option("--config", "Flat key = value file; keys are flag names, flags override it")->type_name("FILE");
}

// Moves `--config <file>` out of the arguments and splices the file's
// entries in right after the subcommand, so explicit flags (parsed later,
// last one wins) take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::optional<std::string> config_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config" && i + 1 < args.size()) {
            config_path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            config_path = a.substr(9);
        } else {
            rest.push_back(a);
        }
    }
    std::vector<std::string> out{args.empty() ? std::string("phycv") : args.front()};
    if (!config_path) {
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    const auto from_file = config_to_args(read_config_file(*config_path));
    auto it = rest.begin();
    if (it != rest.end() && !it->empty() && it->front() != '-') {
        out.push_back(*it++);
    }
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), it, rest.end());
    return out;
}

} // namespace

int cli_main(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Physics-inspired image processing: PST, PAGE and VEViD", "phycv"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    RunConfig config;

    auto* pst = app.add_subcommand("pst", "Phase-Stretch Transform edge detection");
    add_io_options(*pst, config);
    pst->add_option("--strength", config.pst.strength, "Kernel phase at the corner frequency (rad)")
        ->check(CLI::PositiveNumber);
    pst->add_option("--warp", config.pst.warp, "Frequency warp")->check(CLI::PositiveNumber);
    add_lowpass_options(*pst, config.pst.lowpass);
    add_postprocess_options(*pst, config.pst.post);
    pst->add_flag("--digital", config.pst.digital_output, "Write the thresholded binary edge map");

    auto* page = app.add_subcommand("page", "Directional edge detection with a phase filter bank");
    add_io_options(*page, config);
    page->add_option("--mu1", config.page.mu1, "Center of the k'_m Gaussian")->check(CLI::Range(0.0, kHuge));
    page->add_option("--sigma1", config.page.sigma1, "Width of the k'_m Gaussian")->check(CLI::PositiveNumber);
    page->add_option("--s1", config.page.s1, "Strength of the k'_m Gaussian")->check(CLI::PositiveNumber);
    page->add_option("--mu2", config.page.mu2, "Log-domain center of the k'_n log-normal");
    page->add_option("--sigma2", config.page.sigma2, "Width of the k'_n log-normal")->check(CLI::PositiveNumber);
    page->add_option("--s2", config.page.s2, "Strength of the k'_n log-normal")->check(CLI::PositiveNumber);
    page->add_option("--directions", config.page.directions, "Number of directions over [0, pi)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
    add_lowpass_options(*page, config.page.lowpass);
    add_postprocess_options(*page, config.page.post);
    page->add_flag("--layers", config.page_layers, "Write one image per direction into the output directory");

    auto* vevid = app.add_subcommand("vevid", "Low-light and color enhancement");
    add_io_options(*vevid, config);
    vevid->add_option("--strength", config.vevid.strength, "Kernel phase at DC (rad)")->check(CLI::PositiveNumber);
    vevid->add_option("--variance", config.vevid.variance, "Kernel spectral variance T")->check(CLI::PositiveNumber);
    vevid->add_option("--bias", config.vevid.bias, "Regularization offset b")->check(CLI::PositiveNumber);
    vevid->add_option("--gain", config.vevid.gain, "Phase activation gain G")->check(CLI::PositiveNumber);
    vevid
        ->add_option("--channel", config.vevid.channel, "HSV channel to enhance")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, VevidChannel>{{"value", VevidChannel::value},
                                                {"saturation", VevidChannel::saturation}}))
        ->option_text("value|saturation");
    vevid->add_flag("--lite", config.vevid.lite, "Closed-form fast path");

    BenchConfig bench_config;
    std::vector<std::string> resolutions{"480p", "1080p", "4K"};
    std::string csv_path;
    std::string source_path;
    auto* bench_cmd = app.add_subcommand("bench", "Per-frame runtime benchmark, CSV output");
    bench_cmd->add_option("--repetitions", bench_config.repetitions, "Timed runs per configuration (>= 3)")
        ->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()));
    bench_cmd->add_option("--warmup", bench_config.warmup, "Untimed warm-up runs");
    bench_cmd->add_option("--resolutions", resolutions, "480p, 720p, 1080p, 2K, 4K or WxH")->delimiter(',');
    bench_cmd->add_option("--algorithms", bench_config.algorithms, "Subset of pst,page,vevid,vevid-lite")
        ->delimiter(',');
    bench_cmd->add_option("--directions", bench_config.page.directions, "PAGE directions")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
    bench_cmd->add_option("--input", source_path, "Frame to resize to each resolution (default: synthetic)");
    bench_cmd->add_option("-o,--output", csv_path, "CSV file (default: stdout)");
    bench_cmd->add_option("--config", "Flat key = value file; keys are flag names, flags override it")
        ->type_name("FILE");

    try {
        std::vector<std::string> args = expand_config(raw_args);
        // CLI11 wants the arguments in reverse order, without the program name.
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    } catch (const NotFound& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (pst->parsed() || page->parsed() || vevid->parsed()) {
            config.algorithm = pst->parsed() ? Algorithm::pst : page->parsed() ? Algorithm::page : Algorithm::vevid;
            run(config);
        } else {
            for (const auto& r : resolutions) {
                bench_config.resolutions.push_back(parse_resolution(r));
            }
            if (!source_path.empty()) {
                bench_config.source = load_image(source_path);
            }
            const auto records = bench(bench_config);
            if (csv_path.empty()) {
                write_bench_csv(out, records);
            } else {
                std::ofstream file(csv_path);
                if (!file) {
                    throw IoError("cannot write " + csv_path);
                }
                write_bench_csv(file, records);
            }
        }
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidDimension& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotFound& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kSuccess;
}

} // namespace phycv::cli
