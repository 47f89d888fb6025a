// gfo: exact computations in the generalized factor order on words over the
// positive integers. Subcommands cover generating functions, cluster charts,
// pattern-statistics recovery, equivalence classification, and a verification
// suite of published reference values.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfo/automaton.hpp"
#include "gfo/clusters.hpp"
#include "gfo/equiv.hpp"
#include "gfo/genfun.hpp"
#include "gfo/oracle.hpp"
#include "gfo/recovery.hpp"
#include "gfo/verify.hpp"
#include "gfo/word.hpp"

namespace {

using gfo::Series;
using gfo::TruncationSpec;
using gfo::Word;
using json = nlohmann::ordered_json;

void warn_if_undersized(const Word& u, int max_weight) {
    if (max_weight < u.weight())
        std::cerr << "warning: --max-weight " << max_weight
                  << " is below the pattern weight " << u.weight()
                  << "; no occurrence fits within the horizon\n";
}

json series_to_json(const Series& s) {
    json terms = json::array();
    for (const auto& [m, coeff] : s.terms()) {
        json t;
        t["monomial"] = {m.a, m.b, m.c};
        t["coefficient"] = coeff.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

void emit_series(const Series& s, const std::string& format, json header) {
    if (format == "text") {
        std::cout << gfo::canonical_serialize(s) << "\n";
        return;
    }
    header["max_weight"] = s.trunc().max_weight;
    header["terms"] = series_to_json(s);
    std::cout << header.dump(2) << "\n";
}

json words_to_json(const std::vector<Word>& words) {
    json arr = json::array();
    for (const Word& w : words) arr.push_back(w.str());
    return arr;
}

int cmd_gf(const std::string& pattern, int max_weight, const std::string& method,
           bool z0, const std::string& format, int jobs) {
    Word u = Word::parse(pattern);
    TruncationSpec trunc{max_weight};
    warn_if_undersized(u, max_weight);

    Series s = [&] {
        if (method == "cluster")
            return z0 ? gfo::avoidance_gf(u, trunc) : gfo::full_gf(u, trunc);
        if (method == "automaton") return gfo::automaton_gf(u, trunc, !z0);
        Series full = gfo::brute_force_gf(u, trunc, jobs);
        return z0 ? gfo::eval_z(full, 0) : full;
    }();

    json header;
    header["pattern"] = u.str();
    header["method"] = method;
    header["z0"] = z0;
    emit_series(s, format, std::move(header));
    return 0;
}

int cmd_mu(const std::string& pattern, int max_weight, const std::string& format) {
    Word u = Word::parse(pattern);
    TruncationSpec trunc{max_weight};
    warn_if_undersized(u, max_weight);

    json header;
    header["pattern"] = u.str();
    header["series"] = "minimal-cluster";
    emit_series(gfo::minimal_cluster_gf(u, trunc), format, std::move(header));
    return 0;
}

int cmd_chart(int k, int m, const std::string& format) {
    gfo::Chart c = gfo::chart(k, m);
    if (format == "text") {
        std::cout << gfo::chart_text(c);
        return 0;
    }
    json out;
    out["k"] = c.k;
    out["m"] = c.m;
    json rows = json::array();
    for (const auto& [length, cells] : c.rows) {
        json row;
        row["length"] = length;
        json cell_obj = json::object();
        // Chart column order: by (subset size, lexicographic indices).
        std::vector<gfo::IndexSet> subsets;
        for (const auto& [subset, count] : cells) {
            (void)count;
            subsets.push_back(subset);
        }
        std::sort(subsets.begin(), subsets.end());
        for (const gfo::IndexSet& subset : subsets)
            cell_obj[subset.str()] = cells.at(subset);
        row["cells"] = std::move(cell_obj);
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_recover(const std::string& pattern) {
    Word u = Word::parse(pattern);
    gfo::RecoveryRun run = gfo::recover_details(gfo::mu_oracle_from_word(u));

    json out;
    out["pattern"] = u.str();
    out["k"] = u.length();
    out["lambda"] = run.lambda.parts;
    json dd = json::array();
    for (const auto& v : run.ddagger) dd.push_back(v.str());
    out["ddagger"] = std::move(dd);
    out["matrix"] = run.matrix.rows;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classify(int max_factor_weight, int max_word_weight, int jobs) {
    gfo::EquivalenceReport report =
        gfo::classify(max_factor_weight, max_word_weight, jobs);

    json out;
    out["max_factor_weight"] = report.max_factor_weight;
    out["max_word_weight"] = report.max_word_weight;
    out["population"] = report.population;
    out["class_count"] = report.classes.size();

    json classes = json::array();
    for (const auto& cls : report.classes) {
        json c;
        c["members"] = words_to_json(cls.members);
        c["wilf_hash"] = cls.wilf_hash;
        c["strong_hash"] = cls.strong_hash;
        c["partition"] = cls.partition.parts;
        c["length"] = cls.members.front().length();
        classes.push_back(std::move(c));
    }
    out["classes"] = std::move(classes);

    json mismatches = json::array();
    for (const auto& mm : report.wilf_strong_mismatches) {
        json m;
        m["wilf_class"] = words_to_json(mm.wilf_class);
        json groups = json::array();
        for (const auto& g : mm.strong_classes) groups.push_back(words_to_json(g));
        m["strong_classes"] = std::move(groups);
        mismatches.push_back(std::move(m));
    }
    out["wilf_strong_mismatches"] = std::move(mismatches);

    json violations = json::array();
    for (const auto& rv : report.rearrangement_violations) {
        json v;
        v["members"] = words_to_json(rv.members);
        json parts = json::array();
        for (const auto& p : rv.partitions) parts.push_back(p.parts);
        v["partitions"] = std::move(parts);
        violations.push_back(std::move(v));
    }
    out["rearrangement_violations"] = std::move(violations);

    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<gfo::CheckResult> results = gfo::run_verify_suite(suite);
    std::cout << gfo::format_check_table(results);
    return gfo::all_passed(results) ? 0 : 1;
}

int cmd_automaton_dump(const std::string& pattern) {
    Word u = Word::parse(pattern);
    gfo::DominanceAutomaton aut = gfo::DominanceAutomaton::build(u);

    json out;
    out["pattern"] = u.str();
    out["k"] = aut.k;

    json classes = json::array();
    for (const auto& cls : aut.classes) {
        json c;
        c["lo"] = cls.lo;
        if (cls.unbounded())
            c["hi"] = nullptr;
        else
            c["hi"] = cls.hi;
        json profile = json::array();
        for (int j = 1; j <= aut.k; ++j)
            if (cls.profile_at(j)) profile.push_back(j);
        c["dominates_prefix_index"] = std::move(profile);
        classes.push_back(std::move(c));
    }
    out["letter_classes"] = std::move(classes);

    json states = json::array();
    for (uint32_t mask : aut.states) {
        json lengths = json::array();
        for (int j = 0; j < aut.k; ++j)
            if ((mask >> j) & 1u) lengths.push_back(j);
        states.push_back(std::move(lengths));
    }
    out["states"] = std::move(states);

    json transitions = json::array();
    for (size_t from = 0; from < aut.transitions.size(); ++from) {
        for (size_t ci = 0; ci < aut.transitions[from].size(); ++ci) {
            const auto& tr = aut.transitions[from][ci];
            json t;
            t["from"] = from;
            t["class"] = ci;
            t["to"] = tr.target;
            t["emit"] = tr.emit;
            transitions.push_back(std::move(t));
        }
    }
    out["transitions"] = std::move(transitions);

    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact generalized-factor-order computations: generating functions, "
        "cluster charts, pattern recovery, Wilf classification."};
    app.require_subcommand(1);

    std::string pattern, method = "cluster", format = "text", suite;
    int max_weight = 0, k = 0, m = 0;
    int max_factor_weight = 0, max_word_weight = 0;
    int jobs = 1;
    bool z0 = false;

    CLI::App* gf = app.add_subcommand(
        "gf", "Occurrence-counting generating function of a pattern");
    gf->add_option("--pattern", pattern, "Pattern word, e.g. 122 or 10,1,2")
        ->required();
    gf->add_option("--max-weight", max_weight, "Truncation horizon (y-degree)")
        ->required()
        ->check(CLI::PositiveNumber);
    gf->add_option("--method", method, "cluster | automaton | oracle")
        ->check(CLI::IsMember({"cluster", "automaton", "oracle"}));
    gf->add_flag("--z0", z0, "Avoidance specialization z = 0");
    gf->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    gf->add_option("--jobs", jobs, "Worker threads (oracle method only)")
        ->check(CLI::PositiveNumber);

    CLI::App* mu = app.add_subcommand(
        "mu", "Minimal-cluster generating function of a pattern");
    mu->add_option("--pattern", pattern, "Pattern word")->required();
    mu->add_option("--max-weight", max_weight, "Truncation horizon")
        ->required()
        ->check(CLI::PositiveNumber);
    mu->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* chart = app.add_subcommand(
        "chart", "Symbolic m-cluster column chart for patterns of length k");
    chart->add_option("--k", k, "Pattern length")
        ->required()
        ->check(CLI::Range(2, 20));
    chart->add_option("--m", m, "Rows per cluster")
        ->required()
        ->check(CLI::PositiveNumber);
    chart->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* recover = app.add_subcommand(
        "recover", "Recover the letter multiset of a pattern from its "
                   "minimal-cluster series");
    recover->add_option("--pattern", pattern, "Pattern word")->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "Wilf / strong-Wilf classification at a truncation horizon");
    classify
        ->add_option("--max-factor-weight", max_factor_weight,
                     "Classify all patterns of weight up to this")
        ->required()
        ->check(CLI::PositiveNumber);
    classify
        ->add_option("--max-word-weight", max_word_weight,
                     "Truncation horizon for the keys")
        ->required()
        ->check(CLI::PositiveNumber);
    classify->add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::PositiveNumber);

    CLI::App* verify =
        app.add_subcommand("verify", "Re-derive published reference values");
    verify->add_option("--suite", suite, "Suite name (paper)")->required();

    CLI::App* dump = app.add_subcommand(
        "automaton-dump", "Letter classes, states, and transitions of the "
                          "dominance-matching automaton");
    dump->add_option("--pattern", pattern, "Pattern word")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gf->parsed())
            return cmd_gf(pattern, max_weight, method, z0, format, jobs);
        if (mu->parsed()) return cmd_mu(pattern, max_weight, format);
        if (chart->parsed()) return cmd_chart(k, m, format);
        if (recover->parsed()) return cmd_recover(pattern);
        if (classify->parsed())
            return cmd_classify(max_factor_weight, max_word_weight, jobs);
        if (verify->parsed()) return cmd_verify(suite);
        if (dump->parsed()) return cmd_automaton_dump(pattern);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
