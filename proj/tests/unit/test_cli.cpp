#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = padicop::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content)
{
    const fs::path dir = fs::temp_directory_path() / "padicop_cli_tests";
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

json rows(const std::vector<std::vector<long>>& r)
{
    json out = json::array();
    for (const auto& row : r) {
        json j = json::array();
        for (long x : row)
            j.push_back(std::to_string(x));
        out.push_back(j);
    }
    return out;
}

std::string matrix_json(const std::vector<std::vector<long>>& r, int prec = 32, int p = 5)
{
    return json{{"p", p}, {"prec", prec}, {"n", r.size()}, {"entries", rows(r)}}.dump();
}

} // namespace

TEST_CASE("certify")
{
    const Result ok = run({"certify", write_file("a.json", matrix_json({{0, 1}, {2, 1}}))});
    REQUIRE(ok.code == 0);
    const json cert = ok.doc().at("certificate");
    CHECK(cert.at("eigenvalues")[0].at("val") == "2");
    CHECK(cert.at("eigenvalues")[1].at("val") == "23283064365386962890624");  // 5^32 - 1

    const Result refused = run({"certify", write_file("id.json", matrix_json({{1, 0}, {0, 1}}))});
    CHECK(refused.code == 2);
    CHECK(refused.doc().at("refusal") == "DegenerateReduction");

    const Result bad = run({"certify", write_file("bad.json", "{\"p\": 5, \"prec\": ")});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    CHECK(run({"certify", write_file("wrong.json", "{\"p\": 4, \"prec\": 3, \"n\": 1, \"entries\": [[\"1\"]]}")})
              .code == 1);
    CHECK(run({"certify", "/nonexistent/matrix.json"}).code == 1);
    CHECK(run({"--p", "7", "certify", write_file("a.json", matrix_json({{0, 1}, {2, 1}}))}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("dimension cap")
{
    const std::string path = write_file("a.json", matrix_json({{0, 1}, {2, 1}}));
    setenv("PADIC_MAX_DIM", "1", 1);
    CHECK(run({"certify", path}).code == 1);
    setenv("PADIC_MAX_DIM", "zero", 1);
    CHECK(run({"certify", path}).code == 1);
    unsetenv("PADIC_MAX_DIM");
    CHECK(run({"certify", path}).code == 0);
}

TEST_CASE("group-eval and additive")
{
    const std::string gen = write_file("gen.json", matrix_json({{0, 0}, {0, 1}}));
    const Result r = run({"group-eval", gen, "--s", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.doc().at("matrix").at("entries") == rows({{1, 0}, {0, 6}}));
    CHECK(run({"group-eval", gen, "--s", "7"}).code == 2);
    CHECK(run({"group-eval", gen, "--s", "abc"}).code == 1);

    const Result w = run({"additive", gen, "--z", "0"});
    REQUIRE(w.code == 0);
    CHECK(w.doc().at("matrix").at("entries") == rows({{1, 0}, {0, 1}}));
}

TEST_CASE("sampled checks report config and are reproducible")
{
    const std::string gen = write_file("gen2.json", matrix_json({{0, 1}, {2, 1}}));
    const Result law = run({"--seed", "7", "check-law", gen, "--samples", "100"});
    REQUIRE(law.code == 0);
    const json doc = law.doc();
    CHECK(doc.at("check") == "group-law");
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("samples") == 100);
    CHECK(doc.at("seed") == 7);
    CHECK(doc.at("config").at("p") == 5);
    CHECK(doc.at("config").at("prec") == 32);
    CHECK(doc.at("config").contains("guard"));
    CHECK(doc.at("config").contains("version"));
    CHECK(doc.at("min_margin_valuation").get<int>() >= 0);
    CHECK(run({"--seed", "7", "check-law", gen, "--samples", "100"}).out == law.out);

    const Result lip = run({"lipschitz", gen, "--samples", "50"});
    REQUIRE(lip.code == 0);
    CHECK(lip.doc().at("pass") == true);
    CHECK(run({"check-law", gen, "--samples", "0"}).code == 1);
}

TEST_CASE("stone")
{
    const Result r = run({"stone", write_file("u.json", matrix_json({{1, 0}, {0, 6}}))});
    REQUIRE(r.code == 0);
    CHECK(r.doc().at("generator").at("entries") == rows({{0, 0}, {0, 1}}));
    CHECK(r.doc().at("generator").at("prec") == 31);

    const Result refused = run({"stone", write_file("u2.json", matrix_json({{1, 0}, {0, 2}}))});
    CHECK(refused.code == 2);
    CHECK(refused.doc().at("refusal") == "SpectrumNotInPZp");

    // One digit cannot survive the division by log(1+p).
    const Result starved = run({"--prec", "1", "stone", write_file("u3.json", matrix_json({{1, 0}, {0, 6}}, 1))});
    CHECK(starved.code == 3);

    // The recovered group feeds back into group-eval.
    const std::string group = write_file("group.json", r.out);
    const Result back = run({"group-eval", group, "--s", "6"});
    REQUIRE(back.code == 0);
    CHECK(back.doc().at("matrix").at("entries") == rows({{1, 0}, {0, 6}}));
}

TEST_CASE("converge")
{
    const std::string gen = write_file("gen3.json", matrix_json({{0, 1}, {2, 1}}));
    const Result r = run({"converge", gen, "--s", "31", "--max-n", "20"});
    REQUIRE(r.code == 0);
    const json doc = r.doc();
    CHECK(doc.at("pass") == true);
    REQUIRE(doc.at("rows").size() == 21);
    for (const auto& row : doc.at("rows")) {
        const int n = row.at("n");
        CHECK(row.at("bound") == n + 2);
        const json& e = row.at("error_valuation");
        const int v = e.is_object() ? e.at("at_least").get<int>() : e.get<int>();
        CHECK(v >= n + 2);
    }
    CHECK(run({"converge", gen, "--s", "31", "--max-n", "-1"}).code == 1);
}

TEST_CASE("budget flags")
{
    const std::string gen = write_file("gen4.json", matrix_json({{0, 1}, {2, 1}}));
    const Result r = run({"--guard", "9", "group-eval", gen, "--s", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.doc().at("config").at("guard") == 9);
    CHECK(run({"--guard", "1", "group-eval", gen, "--s", "6"}).code == 1);
    const Result low = run({"--prec", "10", "group-eval", gen, "--s", "6"});
    REQUIRE(low.code == 0);
    CHECK(low.doc().at("matrix").at("prec") == 10);
}
