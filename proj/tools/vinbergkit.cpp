#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vinbergkit/report.hpp"

using namespace vinbergkit;

namespace {

struct Config {
    std::string format = "text";
    int base_vertex = 1;
    std::vector<std::string> orders;
    bool no_signature_check = false;
    bool strict = false;
    std::size_t cycle_cap = kDefaultCycleCap;
    std::vector<std::string> paths;
};

std::vector<CoxeterOrder> parse_orders(const std::vector<std::string>& specs) {
    std::vector<CoxeterOrder> out;
    for (const auto& spec : specs) {
        std::stringstream groups(spec);
        std::string group;
        while (std::getline(groups, group, ';')) {
            CoxeterOrder o;
            std::stringstream items(group);
            std::string item;
            while (std::getline(items, item, ',')) {
                try {
                    size_t used = 0;
                    int v = std::stoi(item, &used);
                    if (used != item.size()) throw std::invalid_argument(item);
                    o.push_back(v - 1);
                } catch (const std::exception&) {
                    throw ValidationError("bad vertex '" + item + "' in --orders");
                }
            }
            if (!o.empty()) out.push_back(o);
        }
    }
    return out;
}

RecordOptions record_options(const Config& c, bool coxeter) {
    RecordOptions o;
    o.base_vertex = c.base_vertex - 1;
    o.orders = parse_orders(c.orders);
    o.cycle_cap = c.cycle_cap;
    o.coxeter = coxeter;
    return o;
}

CoxeterGraph load(const Config& c, const std::string& path) {
    ParseOptions p;
    p.check_signature = !c.no_signature_check;
    return load_graph(path, p);
}

Json pick(const Json& full, std::initializer_list<const char*> keys) {
    Json j;
    j["schema"] = full["schema"];
    j["name"] = full["name"];
    j["graph_hash"] = full["graph_hash"];
    for (const char* k : keys) j[k] = full[k];
    return j;
}

void emit(const Config& c, const Json& j, const std::string& text) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int advisory_exit(const Config& c, const InvariantRecord& r) { return c.strict && !r.advisories.empty() ? 1 : 0; }

int cmd_single(const Config& c, const std::string& verb) {
    const bool cox = verb == "invariants" || verb == "coxfield";
    InvariantRecord r = compute_record(load(c, c.paths.at(0)), record_options(c, cox));
    Json full = to_json(r);
    std::ostringstream os;
    if (verb == "invariants") {
        emit(c, full, render_text(r));
        return advisory_exit(c, r);
    }
    os << r.name << "\n";
    if (verb == "classify") {
        os << "  " << to_string(r.arithmeticity.value) << "\n";
        for (const auto& w : r.arithmeticity.witnesses) os << "  " << w.code << ": " << w.message << "\n";
        for (const auto& a : r.advisories) os << "  advisory " << a.code << ": " << a.message << "\n";
        emit(c, pick(full, {"arithmeticity", "advisories"}), os.str());
        return advisory_exit(c, r);
    }
    if (verb == "field") {
        os << "  entry field:   " << field_name(r.gram.field) << "\n";
        os << "  Vinberg field: " << field_name(r.field.field) << "\n";
        for (const auto& cv : r.field.cycles) {
            os << "    cycle";
            for (int v : cv.indices) os << " " << v + 1;
            os << ": " << cv.in_field << "\n";
        }
        emit(c, pick(full, {"entry_field", "vinberg_field"}), os.str());
        return 0;
    }
    if (verb == "form") {
        os << "  field: " << field_name(r.form.field) << "\n  diagonal:";
        for (const auto& d : r.form.diagonal()) os << " [" << d << "]";
        os << "\n  det class: " << r.form.det_class << "\n";
        os << "  signature: (" << r.form.signature.positive << ", " << r.form.signature.negative << ")\n";
        if (r.hasse) os << "  Hasse s(q): " << r.hasse->str() << "\n  Witt c(q): " << r.witt->str() << "\n";
        emit(c, pick(full, {"vinberg_form"}), os.str());
        return 0;
    }
    if (verb == "ring") {
        os << "  " << r.ring.str() << "\n";
        os << "  closed walks up to length " << r.walk.max_length << ": "
           << (r.walk.consistent ? "consistent" : "inconsistent") << "\n";
        emit(c, pick(full, {"vinberg_field", "vinberg_ring"}), os.str());
        return r.walk.consistent ? 0 : 1;
    }
    os << "  Vinberg field: " << field_name(r.field.field) << "\n";
    os << "  Gram field:    " << field_name(r.gram_poly.field.field) << "\n";
    for (const auto& cp : r.coxeter) {
        os << "  Coxeter field: " << field_name(cp.field.field) << "  order";
        for (int v : cp.order) os << " " << v + 1;
        os << "\n    chi_C = " << cp.chi_C.str() << "\n";
    }
    emit(c, pick(full, {"vinberg_field", "gram_field", "coxeter_fields"}), os.str());
    return 0;
}

int cmd_compare(const Config& c) {
    auto opts = record_options(c, false);
    InvariantRecord a = compute_record(load(c, c.paths.at(0)), opts);
    InvariantRecord b = compute_record(load(c, c.paths.at(1)), opts);
    ComparisonVerdict v = compare(a, b);
    Json j = to_json(v);
    j["a"] = a.name;
    j["b"] = b.name;
    emit(c, j, render_text(v, a.name, b.name));
    return 0;
}

int cmd_corpus(const Config& c) {
    RecordOptions opts = record_options(c, true);
    CorpusReport rep = run_corpus(c.paths.at(0), opts);
    emit(c, to_json(rep), render_text(rep));
    if (rep.partial()) return 1;
    if (c.strict)
        for (const auto& e : rep.entries)
            if (!e.record->advisories.empty()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Commensurability invariants of hyperbolic Coxeter groups"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--no-signature-check", cfg.no_signature_check, "Skip the (n,1) signature check");
        sub->add_option("--cycle-cap", cfg.cycle_cap, "Maximum number of simple cycles")->check(CLI::PositiveNumber);
        sub->add_option("--base-vertex", cfg.base_vertex, "Base vertex of the Vinberg vectors (1-based)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--orders", cfg.orders,
                        "Coxeter element orders, vertices comma separated, orders ';' separated")
            ->take_all();
        sub->add_flag("--strict", cfg.strict, "Exit 1 when advisories are raised");
    };

    struct Verb {
        const char* name;
        const char* help;
        int arity;
    };
    const Verb verbs[] = {
        {"invariants", "All invariants of one graph", 1},
        {"classify", "Arithmeticity class and field advisories", 1},
        {"field", "Vinberg field with its cycles", 1},
        {"form", "Vinberg form and its Hasse and Witt invariants", 1},
        {"ring", "Vinberg ring", 1},
        {"coxfield", "Gram and Coxeter fields", 1},
        {"compare", "Commensurability verdict for two graphs", 2},
        {"corpus", "Records and pairwise verdicts for every .cox file in a directory", 1},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        common(sub);
        sub->add_option(v.arity == 2 ? "paths" : "path", cfg.paths, v.arity == 2 ? "Two graph files" : "Input")
            ->required()
            ->expected(v.arity);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        if (verb == "compare") return cmd_compare(cfg);
        if (verb == "corpus") return cmd_corpus(cfg);
        return cmd_single(cfg, verb);
    } catch (const ParseError& e) {
        std::cerr << "vinbergkit: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "vinbergkit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "vinbergkit: " << e.what() << "\n";
        return 1;
    }
}
