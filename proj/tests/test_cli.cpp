#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "render.hpp"
#include "run_config.hpp"

using namespace qmom;
using namespace qmom::cli;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, const fs::path& stdout_to = {}) {
    std::string cmd = std::string(QMOM_CLI_BINARY) + " " + args;
    if (!stdout_to.empty()) cmd += " > " + stdout_to.string();
    cmd += " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("qmom_test_" + name);
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("run config round-trip is exact and idempotent") {
    RunConfig cfg;
    cfg.mode = "compare";
    cfg.stats = "boson";
    cfg.N1 = 4;
    cfg.m1 = 3;
    cfg.N2 = 4;
    cfg.m2 = 3;
    cfg.k = 2;
    cfg.scheme = "rscheme";
    cfg.v2 = 0.2;
    cfg.R = 5.0;
    cfg.y_policy = "drop";
    cfg.members = 500;
    cfg.seed = 123456789012345ULL;
    cfg.seed_set = true;
    cfg.threads = 2;
    cfg.q = 0.3;
    cfg.json_out = "out.json";
    cfg.histogram_out = "hist.csv";
    std::string text = emit_config(cfg);
    RunConfig parsed = parse_config_text(text);
    CHECK(parsed == cfg);
    CHECK(emit_config(parsed) == text);

    RunConfig with_table = cfg;
    with_table.scheme = "table";
    with_table.table = "0:2:1,1:1:0.5,2:0:1";
    RunConfig parsed2 = parse_config_text(emit_config(with_table));
    CHECK(parsed2 == with_table);
}

TEST_CASE("config parser rejects unknown keys, sections and duplicates") {
    CHECK_THROWS_AS(parse_config_text("[system]\nbogus = 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_text("[warp]\nspeed = 9\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_text("[system]\nN1 = 4\nN1 = 5\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_text("[system]\nN1 = soon\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_text("no equals sign here\n"), ValidationError);
    // comments and blank lines are fine
    RunConfig ok = parse_config_text("# header\nmode = sweep\n\n[system]\nN1 = 6 # inline\n");
    CHECK(ok.mode == "sweep");
    CHECK(ok.N1 == 6);
}

TEST_CASE("table scheme must cover every split of k") {
    RunConfig cfg;
    cfg.stats = "fermion";
    cfg.N1 = 6; cfg.m1 = 3; cfg.N2 = 6; cfg.m2 = 3;
    cfg.k = 2;
    cfg.scheme = "table";
    cfg.table = "2:0:1,0:2:1"; // (1,1) missing
    CHECK_THROWS_AS(validate(to_system(cfg), to_interaction(cfg)), ValidationError);
}

TEST_CASE("dim cap resolution order") {
    RunConfig cfg;
    unsetenv("QMOM_DIM_CAP");
    CHECK(resolve_dim_cap(cfg) == kDefaultDimensionCap);
    setenv("QMOM_DIM_CAP", "123", 1);
    CHECK(resolve_dim_cap(cfg) == 123);
    cfg.dim_cap = 77;
    CHECK(resolve_dim_cap(cfg) == 77); // explicit value beats the environment
    setenv("QMOM_DIM_CAP", "not-a-number", 1);
    cfg.dim_cap = 0;
    CHECK_THROWS_AS(resolve_dim_cap(cfg), ValidationError);
    unsetenv("QMOM_DIM_CAP");
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 204.0, 2.5e-17, -0.0, 12345.6789}) {
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("moments command: frozen report values") {
    auto out = temp_file("moments.json");
    int rc = run_cli("moments --stats fermion --N1 6 --m1 3 --N2 6 --m2 3 --k 2 "
                     "--format json",
                     out);
    CHECK(rc == 0);
    std::string json = slurp(out);
    CHECK(json.find("\"mu2\": 204.0") != std::string::npos);
    CHECK(json.find("\"mode\": \"finite\"") != std::string::npos);

    rc = run_cli("moments --N1 6 --m1 3 --m2 0 --k 3 --format json", out);
    CHECK(rc == 0);
    json = slurp(out);
    CHECK(json.find("\"q\": 0.0025") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("moments --N1 6 --m1 3 --N2 6 --m2 3 --k 9") == kExitNumerical);
    CHECK(run_cli("moments --N1 6 --m1 7 --N2 6 --m2 3 --k 2") == kExitValidation);
    CHECK(run_cli("moments --no-such-flag") == kExitValidation);
    CHECK(run_cli("simulate --N1 6 --m1 3 --N2 6 --m2 3 --k 2 --members 4") ==
          kExitValidation); // missing seed
    CHECK(run_cli("simulate --N1 24 --m1 12 --N2 1 --m2 0 --k 2 --members 4 --seed 1") ==
          kExitResourceCap);
    CHECK(run_cli("moments --stats boson --N1 4 --m1 3 --N2 4 --m2 3 --k 2 "
                  "--mode asymptotic") == kExitValidation);
}

TEST_CASE("sweep csv matches the golden file") {
    auto out = temp_file("sweep.csv");
    int rc = run_cli("sweep --stats fermion --N1 6 --m1 3 --N2 6 --m2 3", out);
    CHECK(rc == 0);
    std::string expected = slurp(fs::path(QMOM_GOLDEN_DIR) / "sweep_f6363_finite.csv");
    CHECK(slurp(out) == expected);
}

TEST_CASE("sweep csv header is stable") {
    CHECK(std::string(kSweepCsvHeader) ==
          "stats,N1,m1,N2,m2,k,mode,scheme,R,mu2,q,mu4,mu6_formula,mu6_qnormal,rel_diff");
}

TEST_CASE("qnormal table is support-clipped with the documented columns") {
    auto out = temp_file("qtable.csv");
    int rc = run_cli("qnormal-table --q 0 --x-min -3 --x-max 3 --x-step 1.5", out);
    CHECK(rc == 0);
    std::string csv = slurp(out);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,pdf,He1,He2,He3,He4");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 3); // -1.5, 0, 1.5; +-3 clipped outside S(0) = (-2, 2)
    CHECK(csv.find("0,0.318309886184,0,-1,-0,1") != std::string::npos);
    CHECK(run_cli("qnormal-table --q 1.2") == kExitValidation);
}

TEST_CASE("simulate json is byte-identical across runs and thread counts") {
    auto out1 = temp_file("sim1.json");
    auto out2 = temp_file("sim2.json");
    std::string base = "simulate --stats fermion --N1 5 --m1 2 --N2 5 --m2 2 --k 1 "
                       "--members 6 --seed 777";
    CHECK(run_cli(base + " --threads 1", out1) == 0);
    CHECK(run_cli(base + " --threads 3", out2) == 0);
    std::string first = slurp(out1);
    CHECK(first == slurp(out2));
    CHECK(first.find("\"q_hat\"") != std::string::npos);
}

TEST_CASE("config file drives a run and flags override it") {
    auto cfg_path = temp_file("run.ini");
    {
        std::ofstream cfg(cfg_path);
        cfg << "mode = finite\n[system]\nstats = fermion\nN1 = 6\nm1 = 3\nN2 = 6\nm2 = 3\n"
            << "[interaction]\nk = 1\n[output]\nformat = json\n";
    }
    auto out = temp_file("cfgrun.json");
    CHECK(run_cli("--config " + cfg_path.string(), out) == 0);
    CHECK(slurp(out).find("\"mu2\": 24.0") != std::string::npos);
    // flag overrides the file's k
    CHECK(run_cli("moments --config " + cfg_path.string() + " --k 2", out) == 0);
    CHECK(slurp(out).find("\"mu2\": 204.0") != std::string::npos);
}

TEST_SUITE_END();
