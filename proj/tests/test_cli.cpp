#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "z2cob/polytopes.hpp"

using namespace z2cob;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "z2cob");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "z2cob_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify-tables") {
    auto r = run({"verify-tables"});
    CHECK(r.status == cli::kPass);
    CHECK(has(r.out, "Table I: 7/7 rows match"));
    CHECK(has(r.out, "lambda4: "));
    CHECK(has(r.out, "bounding: yes (every sigma)"));
    CHECK(has(r.out, "sigma1 N(lambda1) = N(lambda2): yes"));
    CHECK(has(r.out, "Phi0_u table: 6/6"));
    CHECK(has(r.out, "Table II: 21/21 rows in orbit, 1 suspected typo(s)"));
    CHECK(has(r.out, "Phi6: repaired+selected"));
    CHECK(run({"verify-tables"}).out == r.out);

    auto j = nlohmann::json::parse(run({"--format", "json", "verify-tables"}).out);
    CHECK(j["schema_version"] == cli::kSchemaVersion);
    CHECK(j["command"] == "verify-tables");
    CHECK(j["table1"]["matched"] == 7);
    CHECK(j["table2"]["rows"].size() == 21);
    CHECK(j["stabilizer"]["order"] == 4);

    auto c = run({"--format", "csv", "verify-tables"}).out;
    CHECK(c.rfind("section,item,result,detail\n", 0) == 0);
}

TEST_CASE("group") {
    auto r = run({"group"});
    CHECK(r.status == cli::kPass);
    CHECK(has(r.out, "catalog: rp=7 prism=42 selected=21"));
    CHECK(has(r.out, "rank: 13"));
    CHECK(has(r.out, "classes: 8192"));
    CHECK(has(r.out, "min nonzero card: 4 max card: 28"));
    CHECK(has(r.out, "essentials: 49"));
    auto j = nlohmann::json::parse(run({"--format", "json", "group", "--matrix"}).out);
    CHECK(j["rank"] == 13);
    CHECK(j["basis13"].size() == 13);
    CHECK(j["matrix"].size() == 28);
    CHECK(j["spectrum"]["6"] == 42);
}

TEST_CASE("enumerate") {
    auto p = run({"enumerate", "prism3"});
    CHECK(p.status == cli::kPass);
    CHECK(has(p.out, "colorings: 840"));
    CHECK(has(p.out, "orbits: 5"));
    CHECK(has(p.out, "distinct nonbounding prime sets: 42"));
    auto s = run({"enumerate", "simplex3"});
    CHECK(has(s.out, "colorings: 168"));
    CHECK(has(s.out, "orbits: 1"));
    auto c = run({"enumerate", "cube3"});
    CHECK(c.status == cli::kPass);
    CHECK(has(c.out, "colorings with pairwise distinct facet values: 0"));

    auto file = scratch("prism.poly");
    std::ofstream(file) << serialize_polytope(builtin(Builtin::Prism3));
    auto f = run({"enumerate", file.string()});
    CHECK(f.status == cli::kPass);
    CHECK(has(f.out, "colorings: 840"));

    auto broken = scratch("broken.poly");
    std::ofstream(broken) << "polytope dim=3 facets=2\nfacet F1\nfacet F2\nvertex F1 F2\n";
    CHECK(run({"enumerate", broken.string()}).status == cli::kInputError);
    CHECK(run({"enumerate", scratch("missing.poly").string()}).status == cli::kInputError);
}

TEST_CASE("represent") {
    auto prefix = scratch("rep").string();
    auto z = run({"represent", "zero", "--prefix", prefix});
    CHECK(z.status == cli::kPass);
    CHECK(has(z.out, "verified: yes"));
    SmallCover cover = parse_small_cover(slurp(prefix + ".cover"));
    CHECK(cover.polytope().vertex_count() == 18);
    CHECK(is_bounding(cover));
    CHECK(has(slurp(prefix + ".plan"), "start bridge"));

    auto t = run({"represent", "T0", "--prefix", prefix});
    CHECK(t.status == cli::kPass);
    CHECK(parse_small_cover(slurp(prefix + ".cover")).polytope().vertex_count() == 4);

    auto s = run({"represent", "{r1r2r3, r1(r1+r2)(r1+r3), r2(r1+r2)(r2+r3), r3(r1+r3)(r2+r3)}", "--no-files"});
    CHECK(s.status == cli::kPass);
    CHECK(has(s.out, "start T0"));

    auto h = run({"represent", "0x0000011", "--no-files"});
    CHECK(h.status == cli::kInputError);  // two monomials: not a class

    auto sample = run({"--seed", "5", "represent", "--sample", "3"});
    CHECK(sample.status == cli::kPass);
    CHECK(has(sample.out, "verified 3/3"));
    CHECK(run({"--seed", "5", "represent", "--sample", "3"}).out == sample.out);

    CHECK(run({"represent", "nonsense", "--no-files"}).status == cli::kInputError);
    CHECK(run({"represent", "{r1r2r3}", "--no-files"}).status == cli::kInputError);
    CHECK(run({"represent"}).status == cli::kInputError);
}

TEST_CASE("moment-graph") {
    auto s = run({"moment-graph", "simplex3"});
    CHECK(s.status == cli::kPass);
    CHECK(has(s.out, "axiom 1 (span): pass"));
    CHECK(has(s.out, "axiom 2 (congruence): pass"));
    CHECK(has(s.out, "chi: 2"));
    auto dot = scratch("prism.dot").string();
    auto p = run({"moment-graph", "prism3", "--lambda", "1", "--dot", dot});
    CHECK(p.status == cli::kPass);
    CHECK(has(p.out, "2-nests: 5"));
    CHECK(has(p.out, "chi: 2"));
    CHECK(slurp(dot).rfind("graph moment {", 0) == 0);

    auto good = scratch("l2.cover");
    std::ofstream(good) << serialize_small_cover(SmallCover(builtin(Builtin::Prism3), prism_lambda(2)));
    CHECK(run({"moment-graph", good.string()}).status == cli::kPass);

    std::string text = serialize_polytope(builtin(Builtin::Prism3));
    for (int f = 1; f <= 5; ++f) text += "color F" + std::to_string(f) + " 100\n";
    auto bad = scratch("bad.cover");
    std::ofstream(bad) << text;
    auto b = run({"moment-graph", bad.string()});
    CHECK(b.status == cli::kInputError);
    CHECK(has(b.err, "error:"));
}

TEST_CASE("global flags") {
    auto out = scratch("report.json");
    auto r = run({"--format", "json", "--out", out.string(), "--jobs", "2", "enumerate", "simplex3"});
    CHECK(r.status == cli::kPass);
    CHECK(r.out.empty());
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["colorings"] == 168);
    CHECK(run({"--format", "yaml", "group"}).status == cli::kInputError);
    CHECK(run({}).status == cli::kInputError);
    CHECK(run({"--help"}).status == cli::kPass);
}
