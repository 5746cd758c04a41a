#include "vinbergkit/report.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <sstream>

namespace vinbergkit {

std::uint64_t graph_hash(const CoxeterGraph& g) {
    CoxeterGraph h = g;
    h.name.clear();
    std::uint64_t x = 1469598103934665603ULL;
    for (unsigned char c : format_graph(h)) {
        x ^= c;
        x *= 1099511628211ULL;
    }
    return x;
}

InvariantRecord compute_record(const CoxeterGraph& g, const RecordOptions& options) {
    InvariantRecord r;
    r.name = g.name;
    r.hash = graph_hash(g);
    r.n = g.dim;
    r.N = g.rank;
    r.graph = g;
    r.gram = gram_matrix(g);
    if (options.base_vertex < 0 || options.base_vertex >= r.N)
        throw ValidationError("base vertex " + std::to_string(options.base_vertex + 1) + " out of range 1.." +
                              std::to_string(r.N));
    r.field = vinberg_field(r.gram, options.cycle_cap);
    r.arithmeticity = classify(r.gram, r.field);
    r.ring = vinberg_ring(r.field);
    r.walk = closed_walk_check(r.gram, r.field, r.ring, options.walk_length);
    r.form = vinberg_form(r.gram, r.field, options.base_vertex);
    if (r.field.field->degree() <= 2) {
        QuadraticField f = QuadraticField::of(r.field.field);
        auto diag = to_quadratic(f, r.form.diagonal());
        r.hasse = hasse_invariant(f, diag);
        r.witt = witt_invariant(f, diag);
    }
    r.gram_poly = char_poly_gram(r.gram);
    if (options.coxeter) {
        std::vector<CoxeterOrder> orders = options.orders;
        if (orders.empty()) {
            CoxeterOrder id(static_cast<size_t>(r.N));
            for (int i = 0; i < r.N; ++i) id[static_cast<size_t>(i)] = i;
            orders.push_back(id);
        }
        for (const auto& o : orders) r.coxeter.push_back(coxeter_char_poly(r.gram, o));
    }
    r.advisories = field_watchlist(g, r.gram, r.field, r.arithmeticity);
    return r;
}

std::string to_string(ComparisonVerdict::Status s) {
    switch (s) {
        case ComparisonVerdict::Status::Incommensurable: return "incommensurable";
        case ComparisonVerdict::Status::NotDistinguished: return "not-distinguished";
        case ComparisonVerdict::Status::Inconclusive: return "inconclusive";
        case ComparisonVerdict::Status::Unsupported: return "unsupported";
    }
    return "";
}

std::string to_string(ComparisonVerdict::Reason r) {
    switch (r) {
        case ComparisonVerdict::Reason::None: return "none";
        case ComparisonVerdict::Reason::VinbergFieldDiffers: return "vinberg-field-differs";
        case ComparisonVerdict::Reason::VinbergRingDiffers: return "vinberg-ring-differs";
        case ComparisonVerdict::Reason::FormsNotSimilar: return "forms-not-similar";
        case ComparisonVerdict::Reason::DetClassDiffers: return "det-class-differs";
    }
    return "";
}

std::string field_name(const FieldPtr& f) { return f->str(); }

Json field_json(const FieldPtr& f) {
    Json j;
    j["name"] = field_name(f);
    j["degree"] = f->degree();
    Json mp = Json::array();
    for (const auto& c : f->minpoly().coeffs()) mp.push_back(c.str());
    j["minpoly"] = mp;
    if (!f->is_rationals()) {
        Interval e = f->root_enclosure(Rational(1, 1000000));
        j["root_interval"] = {e.lo.str(), e.hi.str()};
    }
    return j;
}

Json poly_json(const APoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

namespace {

using Status = ComparisonVerdict::Status;
using Reason = ComparisonVerdict::Reason;

std::string hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Json cycle_json(const Cycle& c) {
    Json j = Json::array();
    for (int v : c) j.push_back(v + 1);
    return j;
}

Json brauer_json(const BrauerClass& b) {
    Json j = Json::array();
    for (const auto& l : b.labels()) j.push_back(l);
    return j;
}

Json form_json(const VinbergForm& q) {
    Json j;
    j["base_vertex"] = q.base + 1;
    Json basis = Json::array();
    for (const auto& p : q.basis) basis.push_back(cycle_json(p));
    j["basis"] = basis;
    Json diag = Json::array();
    for (const auto& d : q.diagonal()) diag.push_back(d.str());
    j["diagonal"] = diag;
    j["det"] = q.det.str();
    j["det_class"] = q.det_class.str();
    j["signature"] = {q.signature.positive, q.signature.negative, q.signature.zero};
    return j;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string order_str(const CoxeterOrder& o) {
    std::vector<std::string> xs;
    for (int v : o) xs.push_back(std::to_string(v + 1));
    return join(xs, ",");
}

}  // namespace

ComparisonVerdict compare(const InvariantRecord& a, const InvariantRecord& b) {
    if (a.n != b.n)
        throw ValidationError("cannot compare groups of dimensions " + std::to_string(a.n) + " and " +
                              std::to_string(b.n));
    ComparisonVerdict v;
    const FieldPtr& K1 = a.field.field;
    const FieldPtr& K2 = b.field.field;
    v.evidence["vinberg_field"] = Json::array({field_name(K1), field_name(K2)});
    if (K1->degree() != K2->degree() || !same_field(K1, K2)) {
        v.status = Status::Incommensurable;
        v.reason = Reason::VinbergFieldDiffers;
        v.reasons = {v.reason};
        v.details = "Vinberg fields " + field_name(K1) + " and " + field_name(K2) + " differ";
        return v;
    }

    v.evidence["vinberg_ring"] = Json::array({a.ring.str(), b.ring.str()});
    const RingComparison rc = compare_rings(a.ring, b.ring);
    if (rc == RingComparison::Different) {
        v.status = Status::Incommensurable;
        v.reason = Reason::VinbergRingDiffers;
        v.reasons.push_back(v.reason);
        v.details = "Vinberg rings " + a.ring.str() + " and " + b.ring.str() + " differ";
    }

    SimilarityVerdict s =
        similarity_decision(a.form, b.form, a.arithmeticity.quasi_arithmetic() && b.arithmeticity.quasi_arithmetic());
    v.evidence["det_class"] = Json::array({a.form.det_class.str(), b.form.det_class.str()});
    if (a.hasse && b.hasse) v.evidence["hasse"] = Json::array({brauer_json(*a.hasse), brauer_json(*b.hasse)});
    v.evidence["similarity"] = {{"status", s.status_name()}, {"reason", s.reason}, {"details", s.details}};
    if (s.status == SimilarityVerdict::Status::NotSimilar) {
        Reason r = s.det_class_differs ? Reason::DetClassDiffers : Reason::FormsNotSimilar;
        v.reasons.push_back(r);
        if (v.status != Status::Incommensurable) {
            v.status = Status::Incommensurable;
            v.reason = r;
            v.details = "Vinberg forms are not similar: " + s.reason;
        }
    }
    if (v.status == Status::Incommensurable) return v;

    switch (s.status) {
        case SimilarityVerdict::Status::Unsupported:
            v.status = Status::Unsupported;
            v.details = "form similarity: " + s.reason;
            return v;
        case SimilarityVerdict::Status::Inconclusive:
            v.status = Status::Inconclusive;
            v.details = "form similarity: " + s.reason;
            return v;
        default: break;
    }
    if (rc == RingComparison::Unknown) {
        v.status = Status::Inconclusive;
        v.details = "fields agree and forms are similar; rings could not be compared";
        return v;
    }
    v.status = Status::NotDistinguished;
    v.details = "Vinberg fields, rings and form similarity classes agree; commensurability is not implied";
    return v;
}

bool CorpusReport::partial() const {
    return std::any_of(entries.begin(), entries.end(), [](const CorpusEntry& e) { return !e.record; });
}

CorpusReport run_corpus(const std::string& dir, const RecordOptions& options) {
    namespace fs = std::filesystem;
    CorpusReport c;
    c.directory = dir;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw ValidationError("not a directory: " + dir);
    std::vector<std::string> files;
    for (const auto& p : fs::recursive_directory_iterator(dir))
        if (p.is_regular_file() && p.path().extension() == ".cox") files.push_back(p.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        CorpusEntry e;
        e.path = fs::relative(f, dir).generic_string();
        try {
            e.record = compute_record(load_graph(f), options);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        c.entries.push_back(std::move(e));
    }
    for (size_t i = 0; i < c.entries.size(); ++i)
        for (size_t j = i + 1; j < c.entries.size(); ++j) {
            const auto& a = c.entries[i].record;
            const auto& b = c.entries[j].record;
            if (!a || !b || a->n != b->n) continue;
            c.pairs.push_back({i, j, compare(*a, *b)});
        }
    return c;
}

Json to_json(const InvariantRecord& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["name"] = r.name;
    j["graph_hash"] = hex(r.hash);
    j["n"] = r.n;
    j["N"] = r.N;
    j["flags"] = {{"cocompact", r.graph.cocompact}, {"cofinite", r.graph.cofinite}};
    j["entry_field"] = field_json(r.gram.field);

    Json vf = field_json(r.field.field);
    vf["generator"] = r.field.generator.str();
    Json cycles = Json::array();
    for (const auto& c : r.field.cycles)
        cycles.push_back({{"cycle", cycle_json(c.indices)}, {"value", c.in_field.str()}});
    vf["cycles"] = cycles;
    j["vinberg_field"] = vf;

    Json ar;
    ar["class"] = to_string(r.arithmeticity.value);
    Json ws = Json::array();
    for (const auto& w : r.arithmeticity.witnesses) {
        Json x{{"code", w.code}, {"message", w.message}};
        if (w.embedding >= 0) x["embedding"] = w.embedding;
        if (w.coefficient >= 0) x["coefficient"] = w.coefficient;
        if (!w.cycle.empty()) x["cycle"] = cycle_json(w.cycle);
        ws.push_back(x);
    }
    ar["witnesses"] = ws;
    j["arithmeticity"] = ar;

    Json ring;
    ring["ring"] = r.ring.str();
    ring["canonical"] = r.ring.canonical();
    ring["closed_walk_check"] = {
        {"max_length", r.walk.max_length}, {"walk_classes", r.walk.walk_classes}, {"consistent", r.walk.consistent}};
    j["vinberg_ring"] = ring;

    Json form = form_json(r.form);
    if (r.hasse) form["hasse"] = brauer_json(*r.hasse);
    if (r.witt) form["witt"] = brauer_json(*r.witt);
    j["vinberg_form"] = form;

    Json gf = field_json(r.gram_poly.field.field);
    gf["char_poly"] = poly_json(r.gram_poly.poly);
    gf["equals_vinberg_field"] = same_field(r.gram_poly.field.field, r.field.field);
    j["gram_field"] = gf;

    Json cox = Json::array();
    for (const auto& c : r.coxeter) {
        Json x;
        x["order"] = Json::array();
        for (int v : c.order) x["order"].push_back(v + 1);
        x["field"] = field_json(c.field.field);
        x["equals_vinberg_field"] = same_field(c.field.field, r.field.field);
        x["char_poly"] = poly_json(c.chi_C);
        x["radical"] = c.radical;
        x["palindromic"] = c.palindromic;
        x["roots_above_one"] = c.roots_above_one;
        if (c.lambda) x["lambda_interval"] = {c.lambda->lo.str(), c.lambda->hi.str()};
        cox.push_back(x);
    }
    j["coxeter_fields"] = cox;

    Json adv = Json::array();
    for (const auto& a : r.advisories) adv.push_back({{"code", a.code}, {"message", a.message}});
    j["advisories"] = adv;
    return j;
}

Json to_json(const ComparisonVerdict& v) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["status"] = to_string(v.status);
    j["reason"] = to_string(v.reason);
    j["reasons"] = Json::array();
    for (auto r : v.reasons) j["reasons"].push_back(to_string(r));
    j["details"] = v.details;
    j["evidence"] = v.evidence;
    return j;
}

Json to_json(const CorpusReport& c) {
    Json j;
    j["schema"] = kSchemaVersion;
    Json entries = Json::array();
    for (const auto& e : c.entries) {
        Json x{{"path", e.path}};
        if (e.record) {
            x["record"] = to_json(*e.record);
            x["record"].erase("schema");
        } else {
            x["error"] = e.error;
        }
        entries.push_back(x);
    }
    j["entries"] = entries;
    Json pairs = Json::array();
    for (const auto& p : c.pairs) {
        Json v = to_json(p.verdict);
        v.erase("schema");
        pairs.push_back({{"a", c.entries[p.i].path}, {"b", c.entries[p.j].path}, {"verdict", v}});
    }
    j["pairs"] = pairs;
    return j;
}

std::string render_text(const InvariantRecord& r) {
    std::ostringstream os;
    os << r.name << "  (hash " << hex(r.hash) << ")\n";
    os << "  dimension n = " << r.n << ", facets N = " << r.N << "\n";
    os << "  entry field:      " << field_name(r.gram.field) << "    [entries of G]\n";
    os << "  Vinberg field:    " << field_name(r.field.field) << "    [" << r.field.cycles.size()
       << " simple cycles of 2G]\n";
    if (!r.field.field->is_rationals()) os << "    generator:      " << r.field.generator << "\n";
    os << "  arithmeticity:    " << to_string(r.arithmeticity.value) << "    [Vinberg criterion]\n";
    for (const auto& w : r.arithmeticity.witnesses) os << "    " << w.code << ": " << w.message << "\n";
    os << "  Vinberg ring:     " << r.ring.str() << "    [cycle values; closed walks <= " << r.walk.max_length
       << (r.walk.consistent ? " agree" : " DISAGREE") << "]\n";
    std::vector<std::string> diag;
    for (const auto& d : r.form.diagonal()) diag.push_back(d.str());
    os << "  Vinberg form:     <" << join(diag, ", ") << ">    [base vertex " << r.form.base + 1 << "]\n";
    os << "    det class:      " << r.form.det_class << "\n";
    os << "    signature:      (" << r.form.signature.positive << ", " << r.form.signature.negative << ")\n";
    if (r.hasse) os << "    Hasse s(q):     " << r.hasse->str() << "\n";
    if (r.witt) os << "    Witt c(q):      " << r.witt->str() << "\n";
    if (!r.hasse) os << "    Hasse s(q):     not computed (Vinberg field of degree > 2)\n";
    os << "  Gram field:       " << field_name(r.gram_poly.field.field) << "    [char. poly of G]\n";
    for (const auto& c : r.coxeter) {
        os << "  Coxeter field:    " << field_name(c.field.field) << "    [order " << order_str(c.order)
           << (c.palindromic ? ", palindromic" : ", NOT palindromic");
        if (c.lambda) os << ", lambda ~ " << std::setprecision(10) << c.lambda->mid().to_double();
        os << "]\n";
    }
    for (const auto& a : r.advisories) os << "  advisory " << a.code << ": " << a.message << "\n";
    return os.str();
}

std::string render_text(const ComparisonVerdict& v, const std::string& a, const std::string& b) {
    std::ostringstream os;
    os << a << " vs " << b << ": " << to_string(v.status);
    if (v.reason != Reason::None) os << " (" << to_string(v.reason) << ")";
    if (v.reasons.size() > 1) {
        std::vector<std::string> rs;
        for (auto r : v.reasons) rs.push_back(to_string(r));
        os << " [all: " << join(rs, ", ") << "]";
    }
    os << "\n  " << v.details << "\n";
    for (const auto& [key, val] : v.evidence.items()) os << "  " << key << ": " << val.dump() << "\n";
    return os.str();
}

std::string render_text(const CorpusReport& c) {
    std::ostringstream os;
    for (const auto& e : c.entries) {
        os << "== " << e.path << "\n";
        if (e.record)
            os << render_text(*e.record);
        else
            os << "  error: " << e.error << "\n";
    }
    if (!c.pairs.empty()) os << "== pairwise verdicts\n";
    for (const auto& p : c.pairs) {
        os << "  " << c.entries[p.i].path << " vs " << c.entries[p.j].path << ": " << to_string(p.verdict.status);
        if (p.verdict.reason != Reason::None) os << " (" << to_string(p.verdict.reason) << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace vinbergkit
