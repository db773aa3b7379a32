// CLI command wiring: CLI11 flag parsing, dispatch into the library, output
// formatting, and the exit-code mapping documented in cli.hpp.

#include "zsp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsp/codec.hpp"
#include "zsp/engine.hpp"
#include "zsp/errors.hpp"
#include "zsp/graphs.hpp"
#include "zsp/group.hpp"
#include "zsp/partition.hpp"
#include "zsp/search.hpp"
#include "zsp/tables.hpp"

namespace zsp {

namespace {

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::NoZeroSumPartition:
        case ErrorKind::UniqueInvolution:
            return 1;  // verified negative
        case ErrorKind::BudgetExceeded:
            return 3;
        case ErrorKind::ConstructionBug:
            return 4;
        default:
            return 2;  // usage / precondition
    }
}

// Options shared by several commands; each subcommand binds the ones it uses.
struct Options {
    std::string group;
    std::string sizes;
    std::string triple;
    std::string target;
    std::string classes;
    std::string ground;
    std::string format = "text";
    std::string in_path;
    std::string out_path;
    std::string cache_dir;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_ms = 0;
    int workers = 1;

    bool json() const { return format == "json"; }
    SearchBudget budget() const { return SearchBudget{budget_nodes, budget_ms}; }
    void apply_cache_dir() const {
        if (!cache_dir.empty()) ::setenv("ZSP_CACHE_DIR", cache_dir.c_str(), 1);
    }
};

std::vector<std::uint64_t> parse_uint_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        // tolerate surrounding spaces
        std::istringstream term(cur);
        std::string tok;
        if (!(term >> tok) || tok.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::BadInput, std::string(what) + ": expected a comma-separated list "
                                                          "of numbers, got '" +
                                          text + "'");
        out.push_back(std::stoull(tok));
        if (term >> tok) fail(ErrorKind::BadInput, std::string(what) + ": malformed list");
    }
    if (out.empty()) fail(ErrorKind::BadInput, std::string(what) + ": empty list");
    return out;
}

SizeMultiset sizes_from(const Options& o) {
    if (!o.sizes.empty() && !o.triple.empty())
        fail(ErrorKind::BadInput, "--sizes and --triple are mutually exclusive");
    if (!o.sizes.empty()) return SizeMultiset(parse_uint_list(o.sizes, "--sizes"));
    if (!o.triple.empty()) {
        std::vector<std::uint64_t> abc = parse_uint_list(o.triple, "--triple");
        if (abc.size() != 3) fail(ErrorKind::BadInput, "--triple wants exactly a,b,c");
        return SizeMultiset::from_triple(SizeTriple{abc[0], abc[1], abc[2]});
    }
    fail(ErrorKind::BadInput, "one of --sizes or --triple is required");
}

code_t target_code(const GroupSpec& g, const std::string& text) {
    if (text.empty() || text == "0") return 0;
    return parse_element(g, text).code;
}

std::string read_input(const std::string& path, std::istream& fallback) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << fallback.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) fail(ErrorKind::BadInput, "cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) fail(ErrorKind::BadInput, "cannot open output file: " + out_path);
    f << text;
}

std::string set_lines(const GroupSpec& g, const std::vector<std::vector<code_t>>& sets) {
    std::ostringstream out;
    for (const auto& set : sets) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (j) out << ", ";
            out << g.format_element(set[j]);
        }
        out << '\n';
    }
    return out.str();
}

std::string family_text(const SubsetFamily& fam, const SizeMultiset& sizes) {
    if (sizes.only_345())
        return format_partition_block(TextBlock{sizes.as_triple(), fam});
    return set_lines(fam.group, fam.sets);
}

nlohmann::json tuple_json(const GroupSpec& g, code_t c) {
    nlohmann::json t = nlohmann::json::array();
    for (auto r : g.residues_of(c)) t.push_back(r);
    return t;
}

int run_partition(const Options& o, std::ostream& out) {
    o.apply_cache_dir();
    GroupSpec g = parse_group_spec(o.group);
    SizeMultiset sizes = sizes_from(o);
    SubsetFamily fam = zero_sum_partition(g, sizes);
    if (o.json())
        emit(o.out_path, family_to_json(fam, GroundDescriptor::star(g).key()), out);
    else
        emit(o.out_path, family_text(fam, sizes), out);
    return 0;
}

int run_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    GroupSpec g = parse_group_spec(o.group);
    const code_t target = target_code(g, o.target);
    std::optional<SizeMultiset> forced;
    if (!o.sizes.empty() || !o.triple.empty()) forced = sizes_from(o);

    const std::string text = read_input(o.in_path, in);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(ErrorKind::BadInput, "empty input");

    bool all_ok = true;
    if (text[first] == '{') {
        auto [fam, ground_key] = family_from_json(text);
        if (fam.group != g)
            fail(ErrorKind::BadInput, "JSON family lives in " + fam.group.to_string() +
                                          ", not in --group " + g.to_string());
        GroundSet ground = ground_key.empty() ? ground_star(g)
                                              : GroundDescriptor::parse(ground_key).materialize();
        std::uint64_t total = 0;
        for (const auto& s : fam.sets) total += s.size();
        VerifyReport r = verify_family(ground, fam, forced, target, total == ground.size());
        out << (r.ok ? "ok\n" : "FAIL: " + r.summary() + "\n");
        all_ok = r.ok;
    } else {
        std::vector<TextBlock> blocks = parse_partition_text(g, text);
        if (blocks.empty()) fail(ErrorKind::BadInput, "no partition blocks in input");
        GroundSet star = ground_star(g);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            SizeMultiset expect = forced ? *forced : SizeMultiset::from_triple(blocks[i].header);
            VerifyReport r = verify_family(star, blocks[i].family, expect, target,
                                           expect.total() == star.size());
            out << "block " << (i + 1) << ": " << (r.ok ? "ok" : "FAIL: " + r.summary())
                << '\n';
            all_ok = all_ok && r.ok;
        }
    }
    if (!all_ok && g.is_two_group() && g.involution_count() == 1 && target == 0)
        err << "note: " << g.to_string()
            << " has a unique involution; the non-zero elements sum to it, so no "
               "zero-sum partition of the full star exists\n";
    return all_ok ? 0 : 1;
}

int run_search(const Options& o, std::ostream& out, std::ostream& err) {
    SearchProblem p;
    p.group = parse_group_spec(o.group);
    p.ground = ground_star(p.group);
    p.sizes = sizes_from(o);
    p.target = target_code(p.group, o.target);
    p.budget = o.budget();
    p.seed = o.seed;
    p.workers = o.workers;
    SearchOutcome res = search_partition(p);
    err << "search: " << search_status_name(res.status) << " nodes=" << res.stats.nodes
        << " millis=" << res.stats.millis << '\n';
    switch (res.status) {
        case SearchStatus::Found:
            if (o.json())
                emit(o.out_path, family_to_json(*res.family, GroundDescriptor::star(p.group).key()),
                     out);
            else
                emit(o.out_path, family_text(*res.family, p.sizes), out);
            return 0;
        case SearchStatus::Exhausted:
            err << "exhausted: no such partition exists\n";
            return 1;
        case SearchStatus::BudgetExceeded:
            err << "budget exceeded before an answer\n";
            return 3;
    }
    return 4;
}

int run_tables_check(const Options& o, std::ostream& out) {
    o.apply_cache_dir();
    std::vector<TableCheck> checks = TableStore::global().check_all();
    std::size_t bad = 0;
    for (const TableCheck& c : checks) {
        out << (c.ok ? "ok   " : "FAIL ") << c.key << "  " << c.triple.to_string() << "  ["
            << c.provenance << "]";
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
        if (!c.ok) ++bad;
    }
    out << checks.size() << " entries checked, " << bad << " failures\n";
    return bad == 0 ? 0 : 1;
}

int run_tables_gen(const Options& o, std::ostream& out) {
    o.apply_cache_dir();
    if (o.group.empty() == o.ground.empty())
        fail(ErrorKind::BadInput, "exactly one of --group or --ground is required");
    GroundDescriptor gd = o.ground.empty() ? GroundDescriptor::star(parse_group_spec(o.group))
                                           : GroundDescriptor::parse(o.ground);
    RealizationTable table = TableStore::global().full_table(gd, o.budget());
    for (const auto& [t, entry] : table.entries)
        out << t.to_string() << "  ["
            << (entry.provenance == TableProvenance::Embedded ? "embedded" : "generated")
            << "]\n";
    out << "table " << gd.key() << " complete: " << table.entries.size() << " triples\n";
    return 0;
}

int run_label_dmagic(const Options& o, std::istream& in, std::ostream& out) {
    o.apply_cache_dir();
    GroupSpec g = parse_group_spec(o.group);
    MultipartiteSpec spec = [&] {
        if (!o.classes.empty())
            return MultipartiteSpec::of(parse_uint_list(o.classes, "--classes"));
        std::istringstream ss(read_input(o.in_path, in));
        return parse_classes_file(ss);
    }();
    VertexLabeling lab = distance_magic_labeling(g, spec);
    GraphCheck check = verify_distance_magic(g, spec, lab);
    if (!check.ok) fail(ErrorKind::ConstructionBug, "labeling failed its check: " + check.detail);

    // weight of any vertex = (sum of all labels) - (its own class sum)
    code_t total = 0, first_class = 0;
    for (code_t c : lab.labels) total = g.add(total, c);
    for (std::uint64_t i = 0; i < spec.sizes[0]; ++i)
        first_class = g.add(first_class, lab.labels[i]);
    const code_t magic = g.sub(total, first_class);

    std::ostringstream text;
    if (o.json()) {
        nlohmann::json doc;
        doc["group"] = g.to_string();
        doc["magic"] = tuple_json(g, magic);
        nlohmann::json classes = nlohmann::json::array();
        std::size_t at = 0;
        for (std::uint64_t s : spec.sizes) {
            nlohmann::json cls = nlohmann::json::array();
            for (std::uint64_t i = 0; i < s; ++i) cls.push_back(tuple_json(g, lab.labels[at++]));
            classes.push_back(std::move(cls));
        }
        doc["classes"] = std::move(classes);
        text << doc.dump(2) << '\n';
    } else {
        std::size_t at = 0;
        for (std::size_t j = 0; j < spec.sizes.size(); ++j) {
            text << "class " << (j + 1) << " (" << spec.sizes[j] << " vertices): ";
            for (std::uint64_t i = 0; i < spec.sizes[j]; ++i) {
                if (i) text << ", ";
                text << g.format_element(lab.labels[at++]);
            }
            text << '\n';
        }
        text << "magic constant: " << g.format_element(magic) << '\n';
    }
    emit(o.out_path, text.str(), out);
    return 0;
}

int run_label_tree(const Options& o, std::istream& in, std::ostream& out) {
    o.apply_cache_dir();
    GroupSpec g = parse_group_spec(o.group);
    std::istringstream ss(read_input(o.in_path, in));
    RootedTree tree = parse_tree_file(ss);
    EdgeLabeling lab = antimagic_tree_labeling(g, tree);
    GraphCheck check = verify_antimagic_tree(g, tree, lab);
    if (!check.ok) fail(ErrorKind::ConstructionBug, "labeling failed its check: " + check.detail);

    const auto edges = tree.edges();
    std::ostringstream text;
    if (o.json()) {
        nlohmann::json doc;
        doc["group"] = g.to_string();
        doc["root"] = tree.root;
        nlohmann::json jedges = nlohmann::json::array();
        for (std::size_t i = 0; i < edges.size(); ++i)
            jedges.push_back({{"child", edges[i].first},
                              {"parent", edges[i].second},
                              {"label", tuple_json(g, lab.labels[i])}});
        doc["edges"] = std::move(jedges);
        text << doc.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < edges.size(); ++i)
            text << "edge " << edges[i].first << " -> " << edges[i].second << ": "
                 << g.format_element(lab.labels[i]) << '\n';
        text << "root " << tree.root << "; " << check.detail << '\n';
    }
    emit(o.out_path, text.str(), out);
    return 0;
}

int run_label_digraph(const Options& o, std::istream& in, std::ostream& out) {
    o.apply_cache_dir();
    GroupSpec g = parse_group_spec(o.group);
    std::istringstream ss(read_input(o.in_path, in));
    Digraph d = parse_digraph_file(ss);
    EdgeLabeling lab = digraph_irregular_labeling(g, d);
    GraphCheck check = verify_digraph_irregular(g, d, lab);
    if (!check.ok) fail(ErrorKind::ConstructionBug, "labeling failed its check: " + check.detail);

    std::vector<code_t> weight(d.n, 0);
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        weight[d.arcs[i].second] = g.add(weight[d.arcs[i].second], lab.labels[i]);
        weight[d.arcs[i].first] = g.sub(weight[d.arcs[i].first], lab.labels[i]);
    }
    std::ostringstream text;
    if (o.json()) {
        nlohmann::json doc;
        doc["group"] = g.to_string();
        nlohmann::json arcs = nlohmann::json::array();
        for (std::size_t i = 0; i < d.arcs.size(); ++i)
            arcs.push_back({{"from", d.arcs[i].first},
                            {"to", d.arcs[i].second},
                            {"label", tuple_json(g, lab.labels[i])}});
        doc["arcs"] = std::move(arcs);
        nlohmann::json weights = nlohmann::json::array();
        for (std::size_t v = 0; v < d.n; ++v) weights.push_back(tuple_json(g, weight[v]));
        doc["weights"] = std::move(weights);
        text << doc.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < d.arcs.size(); ++i)
            text << "arc " << d.arcs[i].first << " -> " << d.arcs[i].second << ": "
                 << g.format_element(lab.labels[i]) << '\n';
        for (std::size_t v = 0; v < d.n; ++v)
            text << "vertex " << v << " weight: " << g.format_element(weight[v]) << '\n';
    }
    emit(o.out_path, text.str(), out);
    return 0;
}

int run_explore(const Options& o, std::ostream& out, std::ostream& err) {
    GroupSpec g = parse_group_spec(o.group);
    SizeMultiset sizes = sizes_from(o);
    ConstantSumResult res = explore_constant_sum(g, sizes, o.budget());
    err << "explore: " << search_status_name(res.outcome.status)
        << " nodes=" << res.outcome.stats.nodes << '\n';
    switch (res.outcome.status) {
        case SearchStatus::Found: {
            std::ostringstream text;
            if (o.json()) {
                nlohmann::json doc;
                doc["group"] = g.to_string();
                doc["mu"] = tuple_json(g, *res.mu);
                nlohmann::json sets = nlohmann::json::array();
                for (const auto& set : res.outcome.family->sets) {
                    nlohmann::json jset = nlohmann::json::array();
                    for (code_t c : set) jset.push_back(tuple_json(g, c));
                    sets.push_back(std::move(jset));
                }
                doc["sets"] = std::move(sets);
                text << doc.dump(2) << '\n';
            } else {
                text << "common sum: " << g.format_element(*res.mu) << '\n'
                     << set_lines(g, res.outcome.family->sets);
            }
            emit(o.out_path, text.str(), out);
            return 0;
        }
        case SearchStatus::Exhausted:
            err << "exhausted: no partition with a common sum exists for these sizes\n";
            return 1;
        case SearchStatus::BudgetExceeded:
            err << "budget exceeded before an answer\n";
            return 3;
    }
    return 4;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"zero-sum partitions of finite Abelian 2-groups"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--cache-dir", o.cache_dir, "realization-table cache directory");

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "annex", "json"}));
    };
    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", o.group, "group, e.g. Z4xZ2^2")->required();
    };
    auto add_sizes = [&](CLI::App* cmd) {
        auto* s = cmd->add_option("--sizes", o.sizes, "part sizes, e.g. 3,3,4,5");
        auto* t = cmd->add_option("--triple", o.triple, "counts a,b,c of 3-/4-/5-sets");
        s->excludes(t);
        t->excludes(s);
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", o.budget_nodes, "node budget (0 = unlimited)");
        cmd->add_option("--budget-ms", o.budget_ms, "time budget in ms (0 = unlimited)");
    };

    int rc = 0;

    CLI::App* partition = app.add_subcommand("partition", "construct a zero-sum partition");
    add_group(partition);
    add_sizes(partition);
    add_format(partition);
    partition->add_option("--out", o.out_path, "write to file instead of stdout");
    partition->callback([&] { rc = run_partition(o, out); });

    CLI::App* verify = app.add_subcommand("verify", "verify partition text or JSON from stdin");
    add_group(verify);
    add_sizes(verify);
    verify->add_option("--target", o.target, "expected per-set sum, e.g. (2,0,1)");
    verify->add_option("--in", o.in_path, "read from file instead of stdin");
    verify->callback([&] { rc = run_verify(o, in, out, err); });

    CLI::App* search = app.add_subcommand("search", "exact backtracking search");
    add_group(search);
    add_sizes(search);
    add_format(search);
    add_budget(search);
    search->add_option("--target", o.target, "per-set sum, e.g. (2,0,1)");
    search->add_option("--seed", o.seed, "seed (single-worker runs are deterministic)");
    search->add_option("--workers", o.workers, "parallel workers")->check(CLI::Range(1, 256));
    search->add_option("--out", o.out_path, "write to file instead of stdout");
    search->callback([&] { rc = run_search(o, out, err); });

    CLI::App* tables = app.add_subcommand("tables", "realization-table maintenance");
    tables->require_subcommand(1);
    CLI::App* tcheck = tables->add_subcommand("check", "re-verify embedded and cached tables");
    tcheck->callback([&] { rc = run_tables_check(o, out); });
    CLI::App* tgen = tables->add_subcommand("gen", "generate the full table for a ground");
    tgen->add_option("--group", o.group, "group whose star to tabulate");
    tgen->add_option("--ground", o.ground, "ground key, e.g. star:Z4xZ2^2");
    add_budget(tgen);
    tgen->callback([&] { rc = run_tables_gen(o, out); });

    CLI::App* label = app.add_subcommand("label", "graph labelings");
    label->require_subcommand(1);
    CLI::App* dmagic = label->add_subcommand("dmagic", "distance-magic multipartite labeling");
    add_group(dmagic);
    add_format(dmagic);
    dmagic->add_option("--classes", o.classes, "class sizes, e.g. 3,5");
    dmagic->add_option("--in", o.in_path, "classes file (default stdin)");
    dmagic->add_option("--out", o.out_path, "write to file instead of stdout");
    dmagic->callback([&] { rc = run_label_dmagic(o, in, out); });
    CLI::App* tree = label->add_subcommand("tree", "antimagic tree edge labeling");
    add_group(tree);
    add_format(tree);
    tree->add_option("--in", o.in_path, "tree file (default stdin)");
    tree->add_option("--out", o.out_path, "write to file instead of stdout");
    tree->callback([&] { rc = run_label_tree(o, in, out); });
    CLI::App* digraph = label->add_subcommand("digraph", "irregular digraph arc labeling");
    add_group(digraph);
    add_format(digraph);
    digraph->add_option("--in", o.in_path, "digraph file (default stdin)");
    digraph->add_option("--out", o.out_path, "write to file instead of stdout");
    digraph->callback([&] { rc = run_label_digraph(o, in, out); });

    CLI::App* explore = app.add_subcommand("explore", "conjecture exploration");
    explore->require_subcommand(1);
    CLI::App* csum = explore->add_subcommand("constant-sum", "search for a common per-set sum");
    add_group(csum);
    add_sizes(csum);
    add_format(csum);
    add_budget(csum);
    csum->add_option("--out", o.out_path, "write to file instead of stdout");
    csum->callback([&] { rc = run_explore(o, out, err); });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const Error& e) {
        err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
    return rc;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args, std::cin, std::cout, std::cerr);
}

}  // namespace zsp
