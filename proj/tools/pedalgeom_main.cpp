// pedalgeom: command-line front end for the pedal/antipedal constructions.
//
//   pedalgeom pedal     [--input FILE] [--output FILE]
//   pedalgeom verify    --seed N --trials N [--output FILE]
//   pedalgeom svg       [--input FILE] [--output FILE]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 geometric precondition failure.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "pedalgeom/commands.hpp"
#include "pedalgeom/verify.hpp"

namespace {

using namespace pedalgeom;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw text::ParseError("cannot open input file '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw text::ParseError("cannot open output file '" + path + "'");
    }
    out << body;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pedal and antipedal triangle constructions"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 0;
    long long trials = 0;

    app.add_option("--tolerance", tolerance, "Relative tolerance for geometric predicates")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    using DocCommand = std::function<text::Document(const text::Document&, double)>;
    const std::map<std::string, std::pair<DocCommand, std::string>> doc_commands{
        {"pedal", {commands::pedal, "Pedal triangle, directed distances and area ratio of a point"}},
        {"antipedal", {commands::antipedal, "Antipedal triangle and its area ratio"}},
        {"isogonal", {commands::isogonal, "Isogonal conjugate of a point"}},
        {"inscribe", {commands::inscribe, "Doubly inscribed triangles and the geometric-mean identity"}},
        {"locus", {commands::locus, "Circles of points with a given pedal area ratio"}},
        {"simson", {commands::simson, "Collinearity of the pedal feet"}},
    };

    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : doc_commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        sub->add_option("--input", input, "Input document (default: standard input)");
        sub->add_option("--output", output, "Output document (default: standard output)");
        subs[name] = sub;
    }
    CLI::App* svg = app.add_subcommand("svg", "Render a scene document as SVG");
    svg->add_option("--input", input, "Scene document (default: standard input)");
    svg->add_option("--output", output, "SVG file (default: standard output)");

    CLI::App* verify = app.add_subcommand("verify", "Run the randomized property suite");
    verify->add_option("--seed", seed, "Sampler seed")->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1} << 53));
    verify->add_option("--trials", trials, "Trials per property")->required();
    verify->add_option("--output", output, "Report document (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? commands::kSuccess : commands::kUsageError;
    }

    try {
        if (verify->parsed()) {
            if (trials < 1) {
                std::cerr << "error: --trials must be at least 1\n";
                return commands::kUsageError;
            }
            const verify::Report report = verify::run(seed, static_cast<std::size_t>(trials), tolerance);
            write_output(output, text::emit(verify::to_document(report)));
            return report.all_pass() ? commands::kSuccess : commands::kVerificationFailure;
        }
        if (svg->parsed()) {
            write_output(output, commands::svg(text::parse(read_input(input)), tolerance));
            return commands::kSuccess;
        }
        for (const auto& [name, sub] : subs) {
            if (sub->parsed()) {
                const text::Document doc = text::parse(read_input(input));
                write_output(output, text::emit(doc_commands.at(name).first(doc, tolerance)));
                return commands::kSuccess;
            }
        }
    } catch (const text::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return commands::kUsageError;
    } catch (const GeometryError& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return commands::kGeometryError;
    }
    return commands::kUsageError;
}
