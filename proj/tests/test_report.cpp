#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "properties.hpp"

using namespace testkit;

namespace {

InvariantRecord record(const std::string& f) {
    RecordOptions o;
    o.coxeter = false;
    return compute_record(load_graph(corpus(f)), o);
}

using S = ComparisonVerdict::Status;
using R = ComparisonVerdict::Reason;

}  // namespace

TEST_CASE("verdicts on the worked examples") {
    auto p1 = record("pyramids/g1.cox"), p2 = record("pyramids/g2.cox");
    auto v = compare(p1, p2);
    CHECK(v.status == S::Incommensurable);
    CHECK(v.reason == R::VinbergFieldDiffers);

    auto c1 = record("cube/g1.cox"), c2 = record("cube/g2.cox"), c3 = record("cube/g3.cox");
    v = compare(c1, c2);
    CHECK(v.status == S::Incommensurable);
    CHECK(v.reason == R::VinbergRingDiffers);
    CHECK(v.evidence["vinberg_ring"][0] == "Z[1/3]");
    CHECK(v.evidence["vinberg_ring"][1] == "Z[1/2]");
    CHECK(compare(c2, c3).status == S::NotDistinguished);
    REQUIRE(compare(c2, c3).evidence["hasse"].is_array());
    CHECK(compare(c2, c3).evidence["hasse"][0] == Json::array({"2", "3"}));
    CHECK(compare(c3, c2).status == S::NotDistinguished);

    auto n1 = record("napier/g1.cox"), n2 = record("napier/g2.cox");
    v = compare(n1, n2);
    CHECK(v.status == S::Incommensurable);
    CHECK(std::find(v.reasons.begin(), v.reasons.end(), R::FormsNotSimilar) != v.reasons.end());

    CHECK_THROWS_AS(compare(c1, p1), ValidationError);
}

TEST_CASE("compare is symmetric") {
    std::vector<InvariantRecord> recs;
    for (const auto& f : corpus_files()) recs.push_back(record(f));
    for (size_t i = 0; i < recs.size(); ++i)
        for (size_t j = i + 1; j < recs.size(); ++j) {
            if (recs[i].n != recs[j].n) continue;
            auto a = compare(recs[i], recs[j]), b = compare(recs[j], recs[i]);
            CAPTURE(recs[i].name);
            CAPTURE(recs[j].name);
            CHECK(a.status == b.status);
            CHECK(a.reason == b.reason);
        }
}

TEST_CASE("a record compared with itself is never incommensurable") {
    for (const auto& f : corpus_files()) {
        auto r = record(f);
        CHECK(compare(r, r).status != S::Incommensurable);
    }
}

TEST_CASE("JSON round trip and determinism") {
    RecordOptions o;
    o.orders = {{0, 1, 2, 3, 4, 5}, {5, 4, 3, 2, 1, 0}};
    auto r = compute_record(load_graph(corpus("pyramids/g1.cox")), o);
    Json j = to_json(r);
    std::string text = j.dump(2);
    CHECK(Json::parse(text) == j);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["vinberg_field"]["name"] == "Q(sqrt(2))");
    CHECK(j["vinberg_field"]["degree"] == 2);
    CHECK(j["vinberg_field"]["minpoly"].size() == 3);
    CHECK(j["coxeter_fields"].size() == 2);
    auto r2 = compute_record(load_graph(corpus("pyramids/g1.cox")), o);
    CHECK(to_json(r2).dump(2) == text);
    CHECK(render_text(r2) == render_text(r));
    CHECK(render_text(r).find("Q(sqrt(2))") != std::string::npos);
}

TEST_CASE("graph hash ignores the name and sees edges") {
    CoxeterGraph g = load_graph(corpus("cube/g2.cox"));
    CoxeterGraph h = g;
    h.name = "other";
    CHECK(graph_hash(g) == graph_hash(h));
    h.edges.begin()->second = EdgeLabel::angle(7);
    CHECK(graph_hash(g) != graph_hash(h));
}

TEST_CASE("corpus runner") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "vinbergkit-report-test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto empty = run_corpus(dir.string());
    CHECK(empty.entries.empty());
    CHECK_FALSE(empty.partial());
    fs::copy_file(corpus("cube/g2.cox"), dir / "a.cox");
    fs::copy_file(corpus("cube/g3.cox"), dir / "b.cox");
    std::ofstream(dir / "c.cox") << "dim 3\nrank 4\nedge 1 2 angle x\n";
    RecordOptions o;
    o.coxeter = false;
    auto rep = run_corpus(dir.string(), o);
    REQUIRE(rep.entries.size() == 3);
    CHECK(rep.partial());
    CHECK(rep.entries[2].path == "c.cox");
    CHECK_FALSE(rep.entries[2].error.empty());
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].verdict.status == S::NotDistinguished);
    CHECK(to_json(rep).dump() == to_json(run_corpus(dir.string(), o)).dump());
    fs::remove_all(dir);
}

TEST_CASE("invariants survive relabeling") {
    std::vector<Loaded> all;
    for (const auto& f : corpus_files()) all.push_back(load(f));
    auto r = relabeling_invariance(all, 2);
    INFO(r.summary());
    CHECK(r.passed());
}
