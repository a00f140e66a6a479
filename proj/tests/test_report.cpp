#include <doctest.h>

#include "dkg/report.hpp"

#include <json.hpp>

#include <sstream>
#include <unistd.h>

using namespace dkg;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("dkg_report_" + std::to_string(::getpid())) / name;
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::map<std::string, std::string> defaults{{"s", "0"}, {"r", "1/2"}, {"lambdas", "4,8"}, {"dealias", "true"}};

}  // namespace

TEST_CASE("numbers and fractions") {
    CHECK(parse_number("3/4") == 0.75);
    CHECK(parse_number(" -1.5 ") == -1.5);
    CHECK(parse_number("1e-3") == 0.001);
    for (const char* bad : {"", "abc", "1/0", "1/", "2x", "3/4/5"}) CHECK_THROWS_AS(parse_number(bad), ContractError);
    CHECK(parse_number_list("1/8, 1/4,0.5") == std::vector<double>{0.125, 0.25, 0.5});
    CHECK_THROWS_AS(parse_number_list(""), ContractError);
    CHECK(fmt(0.1) == "0.1");
    CHECK(fmt(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("parameters: defaults, config file, overrides") {
    const fs::path dir = scratch_dir("params");
    const fs::path cfg = dir / "run.cfg";
    {
        std::ofstream os(cfg);
        os << "# comment\n  s = -0.3  \n\nlambdas = 2,4 # trailing\n";
    }
    const Params p = Params::load(defaults, cfg.string(), {"s=1/4", "dealias=off"});
    CHECK(p.num("s") == 0.25);
    CHECK(p.num("r") == 0.5);
    CHECK(p.list("lambdas") == std::vector<double>{2.0, 4.0});
    CHECK_FALSE(p.flag("dealias"));
    CHECK_THROWS_AS(p.str("missing"), ContractError);
    CHECK_THROWS_AS(p.integer("s"), ContractError);

    CHECK_THROWS_AS(Params::load(defaults, "", {"q=3"}), ContractError);
    CHECK_THROWS_AS(Params::load(defaults, "", {"s"}), ContractError);
    CHECK_THROWS_AS(Params::load(defaults, (dir / "none.cfg").string(), {}), ContractError);
    {
        std::ofstream os(dir / "bad.cfg");
        os << "s 1\n";
    }
    CHECK_THROWS_AS(Params::load(defaults, (dir / "bad.cfg").string(), {}), ContractError);
    const Params q = Params::load(defaults, "", {"dealias=maybe"});
    CHECK_THROWS_AS(q.flag("dealias"), ContractError);
    fs::remove_all(dir.parent_path());
}

TEST_CASE("csv writer") {
    const fs::path dir = scratch_dir("csv");
    {
        CsvWriter w(dir / "a.csv", {"x", "y"});
        w.row({fmt(1.0), fmt(0.25)});
        CHECK_THROWS_AS(w.row({"1"}), ContractError);
    }
    CHECK(slurp(dir / "a.csv") == "x,y\n1,0.25\n");
    CHECK_THROWS_AS(CsvWriter(dir / "no" / "such" / "b.csv", {"x"}), ContractError);
    fs::remove_all(dir.parent_path());
}

TEST_CASE("run directory and manifest") {
    const fs::path root = scratch_dir("runs");
    const fs::path dir = make_run_dir(root.string(), "picard", "trial");
    CHECK(dir == root / "picard" / "trial");
    CHECK(fs::is_directory(dir));
    const Params p = Params::load(defaults, "", {"s=-0.3"});
    write_manifest(dir, "picard", p, 11, "n=32 box=6.28318530718");
    const auto j = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(j["command"] == "picard");
    CHECK(j["params"]["s"] == "-0.3");
    CHECK(j["seed"] == 11);
    CHECK(j["grid"] == "n=32 box=6.28318530718");
    CHECK(j.contains("code_version"));
    CHECK(j["started_at"].get<std::string>().size() == 16);

    const fs::path stamped = make_run_dir(root.string(), "first-iterate", "");
    CHECK(stamped.filename().string().back() == 'Z');
    fs::remove_all(root.parent_path());
}
