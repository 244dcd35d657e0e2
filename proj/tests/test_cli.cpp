#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"

using geocount::testing::CommandResult;
using geocount::testing::count_occurrences;
using geocount::testing::run_command;

namespace {

const std::string kCli = GEOCOUNT_CLI_PATH;

CommandResult run_cli(const std::string& args) { return run_command(kCli + " " + args); }

}  // namespace

TEST_CASE("fundamental group output is exact and stable") {
    const CommandResult r = run_cli("pi1 --preset Gr2R4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"invariant_factors\":[2],\"free_rank\":0}\n");

    CHECK(run_cli("pi1 --preset S2").output == "{\"invariant_factors\":[],\"free_rank\":0}\n");
    CHECK(run_cli("pi1 --preset T4").output == "{\"invariant_factors\":[],\"free_rank\":4}\n");
}

TEST_CASE("help and parse failures") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("pi1 --help").exit_code == 0);

    CHECK(run_cli("").exit_code == 2);                       // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
    CHECK(run_cli("pi1 --preset").exit_code == 2);           // missing value
    CHECK(run_cli("minimal --preset S2").exit_code == 2);    // missing required --target
    CHECK(run_cli("pi1 --preset S2 --bogus 1").exit_code == 2);
}

TEST_CASE("validation failures exit with 3") {
    CHECK(run_cli("pi1 --preset NoSuchSpace").exit_code == 3);
    CHECK(run_cli("pi1").exit_code == 3);   // neither --preset nor --space
    CHECK(run_cli("pi1 --preset S2 --space x.json").exit_code == 3);
    CHECK(run_cli("pi1 --space does_not_exist.json").exit_code == 3);
    CHECK(run_cli("minimal --preset S2 --target [1/2,1/2]").exit_code == 3);   // wrong arity
    CHECK(run_cli("minimal --preset S2 --target abc").exit_code == 3);
    CHECK(run_cli("classify --preset Gr2R4 --point [1/0,0]").exit_code == 3);
    CHECK(run_cli("diagram --preset Gr2R4 --window 0").exit_code == 3);
    CHECK(run_cli("diagram --preset Gr2R4 --window -1/2").exit_code == 3);
    CHECK(run_cli("diagram --preset Gr2R4 --window x").exit_code == 3);
}

TEST_CASE("unsupported operations exit with 4") {
    CHECK(run_cli("diagram --preset S2").exit_code == 4);    // rank one has no plane diagram
    CHECK(run_cli("diagram --preset T3").exit_code == 4);
}

TEST_CASE("group size cap exits with 5") {
    CHECK(run_cli("pi1 --preset Gr2R4 --weyl-cap 2").exit_code == 5);
    CHECK(run_cli("pi1 --preset Gr2R4 --weyl-cap 4").exit_code == 0);
}

TEST_CASE("subcommands emit parseable reports") {
    const CommandResult describe = run_cli("describe --preset Gr2R4");
    CHECK(describe.exit_code == 0);
    CHECK(describe.output.find("\"weyl_order\": 4") != std::string::npos);
    CHECK(describe.output.find("\"fundamental_group\"") != std::string::npos);

    const CommandResult minimal = run_cli("minimal --preset Gr2R4 --target [1/2,1/2]");
    CHECK(minimal.exit_code == 0);
    CHECK(minimal.output.find("\"norm_squared\": \"1/2\"") != std::string::npos);

    const CommandResult classify = run_cli("classify --preset RP2 --point [1/2]");
    CHECK(classify.exit_code == 0);
    CHECK(classify.output.find("\"cut\": \"cut_point\"") != std::string::npos);
    CHECK(classify.output.find("\"conjugate\": \"before_first_conjugate\"") != std::string::npos);

    const CommandResult equivalents = run_cli("equivalents --preset S2 --point [1]");
    CHECK(equivalents.exit_code == 0);
    CHECK(count_occurrences(equivalents.output, "\"") >= 2);

    const CommandResult geodesics = run_cli("geodesics --preset S2 --target [1] --max-norm2 30");
    CHECK(geodesics.exit_code == 0);
    CHECK(count_occurrences(geodesics.output, "\"representative\"") == 3);

    // The float companion goes to stderr, never stdout.
    const CommandResult approx =
        run_cli("minimal --preset Gr2R4 --target [1/2,1/2] --units absolute-approx");
    CHECK(approx.exit_code == 0);
    CHECK(approx.output.find("approx") == std::string::npos);
}

TEST_CASE("diagram output is deterministic with the advertised shape") {
    const std::string cmd = "diagram --preset Gr2R4 --window 2 --mark [1/2,1/2]";
    const CommandResult first = run_cli(cmd);
    const CommandResult second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("<svg") != std::string::npos);

    CHECK(count_occurrences(first.output, "<line ") == 10);
    CHECK(count_occurrences(first.output, "r=\"2\"") == 25);
    CHECK(count_occurrences(first.output, "r=\"4\"") == 13);
    CHECK(count_occurrences(first.output, "class=\"mark\"") == 1);

    // Fractional window: integer level lines with |k| <= 3/2, dots within
    // the box.  Gr2R4: 2 roots x 3 levels, 9 integer points, 5 even-sum.
    const CommandResult frac = run_cli("diagram --preset Gr2R4 --window 3/2");
    CHECK(frac.exit_code == 0);
    CHECK(count_occurrences(frac.output, "<line ") == 6);
    CHECK(count_occurrences(frac.output, "r=\"2\"") == 9);
    CHECK(count_occurrences(frac.output, "r=\"4\"") == 5);
}
