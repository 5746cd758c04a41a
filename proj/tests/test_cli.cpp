#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(VINBERGKIT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string corpus(const std::string& rel) { return std::string(VINBERGKIT_CORPUS_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("invariants") {
    Run r = run("invariants " + corpus("pyramids/g1.cox") + " --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["vinberg_field"]["name"] == "Q(sqrt(2))");
    r = run("invariants " + corpus("cube/g1.cox"));
    CHECK(r.code == 0);
    CHECK(r.out.find("Z[1/3]") != std::string::npos);
    CHECK(run("invariants " + corpus("nothing.cox")).code == 2);
    CHECK(run("invariants").code == 2);
    CHECK(run("invariants " + corpus("cube/g1.cox") + " --format xml").code == 2);
    CHECK(run("invariants " + corpus("cube/g1.cox") + " --base-vertex 9").code == 2);
    CHECK(run("invariants " + corpus("cube/g1.cox") + " --orders 1,2,3").code == 2);
}

TEST_CASE("single-invariant verbs") {
    for (const char* verb : {"classify", "field", "form", "ring", "coxfield"}) {
        CAPTURE(verb);
        Run r = run(std::string(verb) + " " + corpus("cube/g2.cox") + " --format json");
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out).is_object());
    }
    Run r = run("coxfield " + corpus("cube/g2.cox") + " --orders '1,2,3,4,5,6;6,5,4,3,2,1' --format json");
    CHECK(nlohmann::json::parse(r.out)["coxeter_fields"].size() == 2);
    CHECK(run("classify " + corpus("simplices/435.cox")).out.find("arithmetic") != std::string::npos);
}

TEST_CASE("compare") {
    Run r = run("compare " + corpus("pyramids/g1.cox") + " " + corpus("pyramids/g2.cox"));
    CHECK(r.code == 0);
    CHECK(r.out.find("incommensurable") != std::string::npos);
    r = run("compare " + corpus("cube/g2.cox") + " " + corpus("cube/g3.cox") + " --format json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["status"] == "not-distinguished");
    CHECK(run("compare " + corpus("cube/g2.cox") + " " + corpus("napier/g1.cox")).code == 2);
}

TEST_CASE("corpus") {
    namespace fs = std::filesystem;
    Run a = run("corpus " + std::string(VINBERGKIT_CORPUS_DIR) + " --format json");
    Run b = run("corpus " + std::string(VINBERGKIT_CORPUS_DIR) + " --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["entries"].size() >= 8);

    fs::path dir = fs::temp_directory_path() / "vinbergkit-cli-test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    CHECK(run("corpus " + dir.string()).code == 0);
    fs::copy_file(corpus("simplices/336.cox"), dir / "ok.cox");
    std::ofstream(dir / "bad.cox") << "dim 3\nrank 4\nedge 1 2 angle 3 3\n";
    Run c = run("corpus " + dir.string() + " --format json");
    CHECK(c.code == 1);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["entries"].size() == 2);
    fs::remove_all(dir);
}
