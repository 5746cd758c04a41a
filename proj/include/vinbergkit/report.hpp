#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vinbergkit/brauer.hpp"
#include "vinbergkit/charfields.hpp"
#include "vinbergkit/classify.hpp"

namespace vinbergkit {

inline constexpr const char* kSchemaVersion = "vinbergkit.report/1";

using Json = nlohmann::ordered_json;

struct RecordOptions {
    int base_vertex = 0;
    /// Empty: the identity order only.
    std::vector<CoxeterOrder> orders;
    std::size_t cycle_cap = kDefaultCycleCap;
    int walk_length = 6;
    bool coxeter = true;
};

struct InvariantRecord {
    std::string name;
    /// FNV-1a of the graph text without its name.
    std::uint64_t hash = 0;
    int n = 0;
    int N = 0;
    CoxeterGraph graph;
    GramMatrix gram;
    VinbergField field;
    ArithClass arithmeticity;
    VinbergRing ring;
    WalkCheck walk;
    VinbergForm form;
    /// Only for Vinberg fields of degree <= 2.
    std::optional<BrauerClass> hasse;
    std::optional<BrauerClass> witt;
    CharPolyRecord gram_poly;
    std::vector<CoxeterCharPoly> coxeter;
    std::vector<Advisory> advisories;
};

std::uint64_t graph_hash(const CoxeterGraph& g);

InvariantRecord compute_record(const CoxeterGraph& g, const RecordOptions& options = {});

struct ComparisonVerdict {
    enum class Status { Incommensurable, NotDistinguished, Inconclusive, Unsupported };
    enum class Reason { None, VinbergFieldDiffers, VinbergRingDiffers, FormsNotSimilar, DetClassDiffers };
    Status status = Status::Inconclusive;
    /// First differing invariant in check order.
    Reason reason = Reason::None;
    /// Every differing invariant that could be decided.
    std::vector<Reason> reasons;
    std::string details;
    /// Values of the invariants that were compared.
    Json evidence = Json::object();
};

std::string to_string(ComparisonVerdict::Status s);
std::string to_string(ComparisonVerdict::Reason r);

/// Field, then ring, then form; the form is still checked after a ring
/// difference so that `reasons` is complete. Throws ValidationError for different dimensions.
ComparisonVerdict compare(const InvariantRecord& a, const InvariantRecord& b);

struct CorpusEntry {
    std::string path;
    std::optional<InvariantRecord> record;
    std::string error;
};

struct CorpusPair {
    std::size_t i = 0, j = 0;
    ComparisonVerdict verdict;
};

struct CorpusReport {
    std::string directory;
    std::vector<CorpusEntry> entries;
    /// Pairs of successfully computed entries of equal dimension.
    std::vector<CorpusPair> pairs;
    bool partial() const;
};

/// Every *.cox file below `dir`, sorted by path.
CorpusReport run_corpus(const std::string& dir, const RecordOptions& options = {});

std::string field_name(const FieldPtr& f);
Json field_json(const FieldPtr& f);
Json poly_json(const APoly& p);

Json to_json(const InvariantRecord& r);
Json to_json(const ComparisonVerdict& v);
Json to_json(const CorpusReport& c);

std::string render_text(const InvariantRecord& r);
std::string render_text(const ComparisonVerdict& v, const std::string& a, const std::string& b);
std::string render_text(const CorpusReport& c);

}  // namespace vinbergkit
