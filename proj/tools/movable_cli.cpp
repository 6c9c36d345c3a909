// movable: validate, replay, render and fuzz layout documents.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "movable/demo.hpp"
#include "movable/error.hpp"
#include "movable/fuzz.hpp"
#include "movable/layout.hpp"
#include "movable/svg.hpp"
#include "movable/trace.hpp"

namespace {

using namespace movable;

constexpr int kInvalid = 1;
constexpr int kIoError = 2;

struct Failure {
    int code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        throw Failure{kIoError};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "cannot write " << path << "\n";
        throw Failure{kIoError};
    }
}

/// Loads a layout and rejects it unless every invariant holds.
Scene load_valid(const std::string& path) {
    Scene scene;
    try {
        scene = deserialize(read_file(path));
    } catch (const Error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        throw Failure{kInvalid};
    }
    const auto issues = scene.validate();
    for (const auto& issue : issues) std::cerr << path << ": " << issue << "\n";
    if (!issues.empty()) throw Failure{kInvalid};
    return scene;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Movable objects: layout validation, trace replay, rendering and fuzzing"};
    app.require_subcommand(1);

    std::string layout_path;
    std::string trace_path;
    std::string out_path;
    bool covers = false;
    std::size_t events = 1000;
    std::uint64_t seed = 1;
    std::string focus;
    std::string trace_out;
    bool want_labyrinth = false;

    auto* validate = app.add_subcommand("validate", "Exit 0 iff the layout is well formed and valid");
    validate->add_option("layout", layout_path)->required();

    auto* replay_cmd = app.add_subcommand("replay", "Apply a trace and write the final layout");
    replay_cmd->add_option("layout", layout_path)->required();
    replay_cmd->add_option("trace", trace_path)->required();
    replay_cmd->add_option("-o,--output", out_path, "Output layout (default: stdout)");

    auto* render = app.add_subcommand("render", "Write an SVG snapshot");
    render->add_option("layout", layout_path)->required();
    render->add_flag("--covers", covers, "Outline every cover node");
    render->add_option("-o,--output", out_path, "Output SVG (default: stdout)");

    auto* fuzz = app.add_subcommand("fuzz", "Replay a seeded random trace and check invariants");
    fuzz->add_option("layout", layout_path)->required();
    fuzz->add_option("--events", events, "Number of events")->default_val(1000);
    fuzz->add_option("--seed", seed, "Random seed")->default_val(1);
    fuzz->add_option("--focus", focus, "Aim presses at one object");
    fuzz->add_option("--trace-out", trace_out, "Write the generated trace");
    fuzz->add_option("-o,--output", out_path, "Write the final layout");

    auto* demo = app.add_subcommand("demo", "Write a built-in layout");
    demo->add_flag("--labyrinth", want_labyrinth, "The ball-in-labyrinth scene instead of the showcase");
    demo->add_option("-o,--output", out_path, "Output layout (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            load_valid(layout_path);
            std::cerr << layout_path << ": ok\n";
        } else if (*replay_cmd) {
            Scene scene = load_valid(layout_path);
            std::vector<TraceEvent> trace;
            try {
                trace = parse_trace(read_file(trace_path));
            } catch (const Error& e) {
                std::cerr << trace_path << ": " << e.what() << "\n";
                return kInvalid;
            }
            const ReplayReport report = replay(std::move(scene), trace);
            write_output(out_path, serialize(report.final_scene));
        } else if (*render) {
            write_output(out_path, render_svg(load_valid(layout_path), covers));
        } else if (*fuzz) {
            const Scene scene = load_valid(layout_path);
            FuzzOptions options;
            options.events = events;
            options.seed = seed;
            if (!focus.empty()) options.focus = focus;
            const FuzzResult result = run_fuzz(scene, options);
            if (!trace_out.empty()) write_output(trace_out, format_trace(result.trace));
            if (!out_path.empty()) write_output(out_path, serialize(result.final_scene));
            for (const auto& v : result.violations) std::cerr << v << "\n";
            std::cerr << result.trace.size() << " events, seed " << seed << ", " << result.violations.size()
                      << " violation(s)\n";
            if (!result.violations.empty()) return kInvalid;
        } else if (*demo) {
            write_output(out_path, serialize(want_labyrinth ? labyrinth().scene : demo_scene()));
        }
    } catch (const Failure& f) {
        return f.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return 0;
}
