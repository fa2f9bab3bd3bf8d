#include "cyclone/cli.hpp"

#include "cyclone/enumeration.hpp"
#include "cyclone/errors.hpp"
#include "cyclone/gkz.hpp"
#include "cyclone/parallel.hpp"
#include "cyclone/poset.hpp"
#include "cyclone/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cyclone::cli {

namespace {

struct Instance {
    int n = 0;
    int d = 0;
};

void add_instance(CLI::App& cmd, Instance& inst) {
    cmd.add_option("-n", inst.n, "number of points")->required();
    cmd.add_option("-d", inst.d, "dimension")->required();
}

std::string stats_line(const EnumerationStats& s) {
    std::ostringstream out;
    out << "triangulations=" << s.triangulation_count.str() << " tree_edges=" << s.tree_edge_count
        << " max_depth=" << s.max_tree_depth << " flip_edges=" << s.flip_edge_count << " time=" << std::fixed
        << std::setprecision(3) << s.wall_time.count() << "s";
    return out.str();
}

std::string cells_json(const Triangulation& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.cells().size(); ++i) {
        if (i != 0) out += ',';
        out += '[';
        const auto labels = t.cells()[i].labels();
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (j != 0) out += ',';
            out += std::to_string(labels[j]);
        }
        out += ']';
    }
    return out + "]";
}

std::string gkz_json(const GkzVector& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
        if (i != 0) out += ',';
        out += g.entries[i].str();
    }
    return out + "]";
}

struct CountArgs {
    Instance inst;
    unsigned parallel = 0;
    std::uint64_t budget = kDefaultBudget;
    std::string checkpoint;
    std::string ledger;
    std::uint64_t pause_after = 0;
};

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
    const PointConfig cfg = make_config(a.inst.n, a.inst.d);
    const FlipTable table(cfg);
    const bool budgeted = a.parallel > 0 || !a.checkpoint.empty() || a.pause_after > 0;

    EnumerationStats stats;
    LedgerRow row;
    row.c = cfg.c();
    row.d = cfg.d();
    if (!budgeted) {
        stats = enumerate_serial(table, [&](const Triangulation&, std::uint64_t) {
            if (stop != nullptr && stop->load()) throw InterruptedError("interrupted; no checkpoint for serial runs");
        });
        row.mode = "serial";
        row.workers = 1;
        row.budget = 0;
    } else {
        ParallelOptions options;
        options.workers = std::max(1U, a.parallel);
        options.budget = a.budget;
        options.stop = stop;
        options.pause_after_nodes = a.pause_after;

        Checkpoint start = initial_checkpoint(table, a.budget);
        if (!a.checkpoint.empty() && std::filesystem::exists(a.checkpoint)) {
            start = checkpoint_load(a.checkpoint, &cfg);
            err << "resuming from " << a.checkpoint << " with " << start.pending.size() << " pending units and "
                << start.partial.triangulation_count.str() << " triangulations counted\n";
        }
        ParallelRun run = run_budgeted(table, std::move(start), options);
        if (!run.complete) {
            if (!a.checkpoint.empty()) {
                checkpoint_save(run.remaining, a.checkpoint);
                err << "paused with " << run.remaining.pending.size() << " pending units; checkpoint written to "
                    << a.checkpoint << '\n';
            } else {
                err << "paused with " << run.remaining.pending.size() << " pending units; no checkpoint configured\n";
            }
            err << "partial " << stats_line(run.stats) << '\n';
            return kCapacity;
        }
        if (!a.checkpoint.empty()) std::filesystem::remove(a.checkpoint);
        stats = run.stats;
        row.mode = a.parallel > 0 ? "parallel" : "serial";
        row.workers = options.workers;
        row.budget = a.budget;
    }

    out << stats.triangulation_count.str() << '\n';
    err << "C(" << cfg.n() << "," << cfg.d() << ") c=" << cfg.c() << ' ' << stats_line(stats) << " mode=" << row.mode
        << " workers=" << row.workers << '\n';
    if (!a.ledger.empty()) {
        CountLedger ledger = CountLedger::load(a.ledger);
        row.count = stats.triangulation_count;
        row.wall_seconds = stats.wall_time.count();
        ledger.upsert(row);
        ledger.save(a.ledger);
    }
    return kOk;
}

int cmd_enumerate(const Instance& inst, const std::string& format, bool with_gkz, std::ostream& out,
                  const std::atomic<bool>* stop) {
    const PointConfig cfg = make_config(inst.n, inst.d);
    SerialOptions options;
    options.track_gkz = with_gkz;
    const bool jsonl = format == "jsonl";
    enumerate_serial(
        cfg,
        [&](const Triangulation& t, std::uint64_t) {
            if (stop != nullptr && stop->load()) throw InterruptedError("interrupted");
            if (jsonl) {
                out << "{\"cells\":" << cells_json(t);
                if (with_gkz) out << ",\"gkz\":" << gkz_json(*t.cached_gkz());
                out << "}\n";
            } else {
                out << t.to_text();
                if (with_gkz) out << ' ' << t.cached_gkz()->to_text();
                out << '\n';
            }
        },
        options);
    return kOk;
}

int cmd_poset(const Instance& inst, const std::string& dot, bool reduce, std::ostream& out, std::ostream& err) {
    const PointConfig cfg = make_config(inst.n, inst.d);
    const FlipPoset poset = build_hst1(cfg);
    const auto [lo, hi] = minimal_and_maximal(poset);
    out << "nodes=" << poset.nodes.size() << " edges=" << poset.edges.size() << " tree=" << poset.tree_edges.size()
        << " min=" << poset.nodes[lo].to_text() << " max=" << poset.nodes[hi].to_text();
    if (reduce) out << " reduced=" << transitive_reduction(poset).size();
    out << '\n';

    const Prop1Audit audit = audit_prop1(poset, cfg);
    err << "gkz orientation audit: " << audit.edges_checked << " edges, " << audit.violations.size()
        << " violations\n";
    for (const auto& v : audit.violations) err << "  " << v << '\n';

    if (!dot.empty()) {
        std::ofstream file(dot, std::ios::trunc);
        if (!file) throw Error("cannot write " + dot);
        file << export_dot(poset);
    }
    return audit.ok() ? kOk : kFailure;
}

int cmd_check(const Instance& inst, const std::string& path, std::ostream& out, std::ostream& err) {
    const PointConfig cfg = make_config(inst.n, inst.d);
    std::ifstream in(path);
    if (!in) {
        err << "cannot read " << path << '\n';
        return kUsage;
    }
    // Parse everything first so a malformed file produces no verdicts.
    std::vector<std::pair<std::size_t, Triangulation>> items;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            items.emplace_back(line_no, parse_triangulation(line));
        } catch (const ParseError& e) {
            err << path << ":" << line_no << ": parse error: " << e.what() << '\n';
            return kUsage;
        }
    }
    bool all_ok = true;
    for (const auto& [number, t] : items) {
        const ValidityReport report = check_triangulation(cfg, t.cells());
        if (report.ok()) {
            out << number << ": ok\n";
            continue;
        }
        all_ok = false;
        for (const auto& v : report.violations) out << number << ": violation: " << v.message << '\n';
    }
    return all_ok ? kOk : kFailure;
}

int cmd_root(const Instance& inst, std::ostream& out) {
    const PointConfig cfg = make_config(inst.n, inst.d);
    const Triangulation t = root(cfg);
    out << t.to_text() << ' ' << gkz(cfg, t).to_text() << '\n';
    return kOk;
}

int cmd_gkz(const Instance& inst, const std::vector<std::string>& inputs, std::ostream& out) {
    const PointConfig cfg = make_config(inst.n, inst.d);
    for (const auto& text : inputs) {
        const Triangulation t = parse_triangulation(text);
        for (Simplex cell : t.cells()) require_simplex(cfg, cell);
        out << gkz(cfg, t).to_text() << '\n';
    }
    return kOk;
}

int cmd_ratios(int max_n, std::ostream& out) {
    out << compute_ratios(max_n, node_limit_from_env()).to_text();
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
    CLI::App app{"Triangulations of cyclic polytopes: counting, enumeration and the first higher Stasheff-Tamari order",
                 "cyclone"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count all triangulations of C(n,d)");
    add_instance(*count, count_args.inst);
    count->add_option("--parallel", count_args.parallel, "worker threads for budgeted reverse search")
        ->check(CLI::PositiveNumber);
    count->add_option("--budget", count_args.budget, "nodes per work unit")->check(CLI::PositiveNumber);
    count->add_option("--checkpoint", count_args.checkpoint, "resume from / save to this file when interrupted");
    count->add_option("--ledger", count_args.ledger, "record the count in this ledger file");
    count->add_option("--pause-after", count_args.pause_after, "pause (as if interrupted) after this many nodes")
        ->group("");

    Instance enum_inst;
    std::string format = "topcom";
    bool with_gkz = false;
    auto* enumerate = app.add_subcommand("enumerate", "stream every triangulation, one per line");
    add_instance(*enumerate, enum_inst);
    enumerate->add_option("--format", format, "topcom or jsonl")->check(CLI::IsMember({"topcom", "jsonl"}));
    enumerate->add_flag("--with-gkz", with_gkz, "include GKZ vectors");

    Instance poset_inst;
    std::string dot;
    bool reduce = false;
    auto* poset = app.add_subcommand("poset", "build HST1 and print a summary");
    add_instance(*poset, poset_inst);
    poset->add_option("--dot", dot, "write the flip DAG as DOT");
    poset->add_flag("--reduce", reduce, "also report the transitive reduction size");

    int max_n = 11;
    auto* ratios = app.add_subcommand("ratios", "#C(n,n-5) / #C(n,2) for n = 7..max-n");
    ratios->add_option("--max-n", max_n, "largest n")->check(CLI::Range(7, kMaxLabel));

    Instance check_inst;
    std::string check_file;
    auto* check = app.add_subcommand("check", "validate triangulations, one per line");
    add_instance(*check, check_inst);
    check->add_option("--file", check_file, "input file")->required();

    Instance root_inst;
    auto* root_cmd = app.add_subcommand("root", "print the reverse-search root and its GKZ vector");
    add_instance(*root_cmd, root_inst);

    Instance gkz_inst;
    std::vector<std::string> gkz_inputs;
    std::string gkz_file;
    auto* gkz_cmd = app.add_subcommand("gkz", "print GKZ vectors of triangulations");
    add_instance(*gkz_cmd, gkz_inst);
    gkz_cmd->add_option("triangulations", gkz_inputs, "canonical triangulation texts");
    gkz_cmd->add_option("--file", gkz_file, "read triangulations from a file, one per line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_args, out, err, stop);
        if (enumerate->parsed()) return cmd_enumerate(enum_inst, format, with_gkz, out, stop);
        if (poset->parsed()) return cmd_poset(poset_inst, dot, reduce, out, err);
        if (ratios->parsed()) return cmd_ratios(max_n, out);
        if (check->parsed()) return cmd_check(check_inst, check_file, out, err);
        if (root_cmd->parsed()) return cmd_root(root_inst, out);
        if (gkz_cmd->parsed()) {
            if (!gkz_file.empty()) {
                std::ifstream in(gkz_file);
                if (!in) throw std::invalid_argument("cannot read " + gkz_file);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t\r") != std::string::npos) gkz_inputs.push_back(line);
                }
            }
            return cmd_gkz(gkz_inst, gkz_inputs, out);
        }
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const InterruptedError& e) {
        err << e.what() << '\n';
        return kCapacity;
    } catch (const DimensionError& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidSimplexError& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const CheckpointFormatError& e) {
        err << "checkpoint: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

} // namespace cyclone::cli
