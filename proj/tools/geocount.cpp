// geocount: geodesic counting and classification for compact symmetric
// spaces given by exact infinitesimal data.
//
// Exit codes: 0 success, 1 internal error, 2 command line parse error,
// 3 invalid input or validation failure, 4 unsupported operation,
// 5 resource cap exceeded.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geocount/catalog.hpp"
#include "geocount/errors.hpp"
#include "geocount/geodesics.hpp"
#include "geocount/lattice.hpp"
#include "geocount/report_json.hpp"
#include "geocount/svg.hpp"

namespace {

using namespace geocount;

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Points on the command line are written as "[1/2,-1/3]"; the brackets are
// optional and whitespace around entries is ignored.
RationalVector parse_vector(const std::string& text) {
    std::string body = trimmed(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw InvalidInput("unbalanced brackets in '" + text + "'");
        body = trimmed(body.substr(1, body.size() - 2));
    }
    RationalVector v;
    if (body.empty()) return v;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        const std::string piece = trimmed(body.substr(start, comma - start));
        if (piece.empty()) throw InvalidInput("empty coordinate in '" + text + "'");
        v.push_back(Rational::from_string(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

RationalVector parse_point(const std::string& text, std::size_t rank, const char* what) {
    RationalVector v = parse_vector(text);
    if (v.size() != rank)
        throw InvalidInput(std::string(what) + " must have " + std::to_string(rank) +
                           " coordinates, got " + std::to_string(v.size()));
    return v;
}

constexpr double kPi = 3.14159265358979323846264338327950288;

// With --units absolute-approx the machine output stays exact; a float
// companion (lengths scaled back by pi) goes to stderr for reading.
void print_lengths_approx(const std::vector<FocalOrbitDescriptor>& families) {
    for (std::size_t i = 0; i < families.size(); ++i)
        std::fprintf(stderr, "family %zu: length approx %.6f, dimension %zu, components %zu\n",
                     i, kPi * std::sqrt(families[i].norm_squared.to_double()),
                     families[i].dimension, families[i].component_count);
}

struct Options {
    std::string preset_name;
    std::string space_path;
    std::uint64_t weyl_cap = 1000000;
    std::string units = "pi";
};

Space load_space(const Options& opt) {
    if (opt.preset_name.empty() == opt.space_path.empty())
        throw InvalidInput("select a space with exactly one of --preset or --space");
    const SpaceDescription description =
        opt.preset_name.empty() ? space_from_file(opt.space_path) : preset(opt.preset_name);
    return build_space(description, opt.weyl_cap);
}

void emit(const ReportJson& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    std::string preset_help = "named example space, one of:";
    for (const std::string& name : geocount::preset_names()) preset_help += " " + name;
    preset_help += " Gr2Rn:<n> (5..64)";

    CLI::App app{"geodesic enumeration on compact symmetric spaces from exact root data"};
    app.require_subcommand(1);
    app.add_option("--preset", opt.preset_name, preset_help);
    app.add_option("--space", opt.space_path, "path to a space description JSON file");
    app.add_option("--weyl-cap", opt.weyl_cap, "abort if the reflection group exceeds this order");
    app.add_option("--units", opt.units, "numeric display on stderr: pi (default) or absolute-approx")
        ->check(CLI::IsMember({"pi", "absolute-approx"}));

    app.add_subcommand("describe", "print the space: roots, lattices, reflection group, pi1")
        ->fallthrough();
    app.add_subcommand("pi1", "print the fundamental group as invariant factors and free rank")
        ->fallthrough();

    std::string target_text;
    std::string max_norm2_text;
    CLI::App* geodesics_cmd =
        app.add_subcommand("geodesics", "enumerate geodesic families to a target up to a length bound");
    geodesics_cmd->fallthrough();
    geodesics_cmd->add_option("--target", target_text, "target flat vector, e.g. \"[1/2,1/2]\"")
        ->required();
    geodesics_cmd->add_option("--max-norm2", max_norm2_text, "largest squared length to report")
        ->required();

    std::string minimal_target_text;
    CLI::App* minimal_cmd = app.add_subcommand("minimal", "enumerate the shortest geodesic families");
    minimal_cmd->fallthrough();
    minimal_cmd->add_option("--target", minimal_target_text, "target flat vector")->required();

    std::string classify_point_text;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "cut and conjugate status of the geodesic through a point");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--point", classify_point_text, "flat vector")->required();

    std::string equivalents_point_text;
    CLI::App* equivalents_cmd =
        app.add_subcommand("equivalents", "lattice translates with the same length as the point");
    equivalents_cmd->fallthrough();
    equivalents_cmd->add_option("--point", equivalents_point_text, "flat vector")->required();

    std::string diagram_out;
    std::string diagram_window_text = "2";
    std::vector<std::string> diagram_mark_texts;
    CLI::App* diagram_cmd = app.add_subcommand("diagram", "rank 2 diagram as SVG");
    diagram_cmd->fallthrough();
    diagram_cmd->add_option("--out", diagram_out, "output file (default: stdout)");
    diagram_cmd->add_option("--window", diagram_window_text, "half width of the drawn square (rational)");
    diagram_cmd->add_option("--mark", diagram_mark_texts, "point to cross-mark, repeatable")
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        const Space space = load_space(opt);
        const bool approx = opt.units == "absolute-approx";

        if (app.got_subcommand("describe")) {
            emit(describe_space(space));
        } else if (app.got_subcommand("pi1")) {
            // Compact single line: the canonical machine form of the group.
            std::cout << smith_to_json(space.fundamental_group()).dump() << "\n";
        } else if (app.got_subcommand(geodesics_cmd)) {
            const RationalVector target = parse_point(target_text, space.datum().rank, "--target");
            const Rational bound = Rational::from_string(trimmed(max_norm2_text));
            const auto families = space.enumerate_preimages(target, bound);
            if (approx) print_lengths_approx(families);
            emit(descriptors_to_json(families));
        } else if (app.got_subcommand(minimal_cmd)) {
            const RationalVector target =
                parse_point(minimal_target_text, space.datum().rank, "--target");
            const auto families = space.minimal_geodesics(target);
            if (approx) print_lengths_approx(families);
            emit(descriptors_to_json(families));
        } else if (app.got_subcommand(classify_cmd)) {
            const RationalVector point =
                parse_point(classify_point_text, space.datum().rank, "--point");
            if (approx)
                std::fprintf(stderr, "point length approx %.6f\n",
                             kPi * std::sqrt(gram_norm_squared(space.datum().gram, point).to_double()));
            emit(classification_to_json(space.classify_point(point)));
        } else if (app.got_subcommand(equivalents_cmd)) {
            const RationalVector point =
                parse_point(equivalents_point_text, space.datum().rank, "--point");
            emit(equivalents_to_json(
                focal_equivalents(space.gamma(), space.datum().gram, point)));
        } else if (app.got_subcommand(diagram_cmd)) {
            const Rational window = Rational::from_string(trimmed(diagram_window_text));
            if (window.sign() <= 0) throw InvalidInput("--window must be positive");
            std::vector<RationalVector> marks;
            for (const std::string& text : diagram_mark_texts)
                marks.push_back(parse_point(text, space.datum().rank, "--mark"));
            const std::string svg =
                diagram_svg(space.datum(), space.gamma(), space.gamma0(), window, marks);
            if (diagram_out.empty() || diagram_out == "-") {
                std::cout << svg;
            } else {
                std::ofstream out(diagram_out, std::ios::binary);
                if (!out) throw InvalidInput("cannot open output file '" + diagram_out + "'");
                out << svg;
            }
        }
        return 0;
    } catch (const GroupTooLarge& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    } catch (const NotSupported& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const NotFound& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const InvalidRootSystem& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const InvalidInput& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
