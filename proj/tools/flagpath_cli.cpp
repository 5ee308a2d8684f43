#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagpath/counting.hpp"
#include "flagpath/diagram3.hpp"
#include "flagpath/flag.hpp"
#include "flagpath/lattice.hpp"
#include "flagpath/matroid.hpp"
#include "flagpath/selfcheck.hpp"

namespace {

using flagpath::BigCount;
using flagpath::BinSpec;
using flagpath::OrderedPartition;

int effective_limit(int cli_limit, int fallback) {
    if (cli_limit > 0) return cli_limit;
    if (const char* env = std::getenv("FLAGPATH_LIMIT")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

void write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw flagpath::OutOfRange("cannot open output file " + path);
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw flagpath::OutOfRange("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string int_list(const std::vector<int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string partition_json(const OrderedPartition& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += int_list(p[i]);
    }
    return out + "]";
}

OrderedPartition parse_partition(std::string text) {
    if (!text.empty() && text.front() == '@') text = read_text(text.substr(1));
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw flagpath::NotAPartition(std::string("bad partition JSON: ") + e.what());
    }
    if (!j.is_array()) throw flagpath::NotAPartition("partition must be an array of arrays");
    OrderedPartition out;
    for (const auto& block : j) {
        if (!block.is_array())
            throw flagpath::NotAPartition("each block must be an array of integers");
        out.emplace_back();
        for (const auto& e : block) out.back().push_back(e.get<int>());
    }
    return out;
}

std::string diagram_ascii(const flagpath::DiagramMatrix& d) {
    size_t width = 1;
    for (const auto& row : d.entries)
        for (int v : row)
            width = std::max(width, (v == flagpath::kStar
                                         ? std::string("*")
                                         : std::to_string(v)).size());
    std::string out;
    for (const auto& row : d.entries) {
        for (size_t y = 0; y < row.size(); ++y) {
            const std::string cell = row[y] == flagpath::kStar
                                         ? "*"
                                         : std::to_string(row[y]);
            if (y) out += " ";
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += "\n";
    }
    return out;
}

std::string bounds_fields(const flagpath::BoundsReport& report) {
    std::string out = "\"upper\": " + report.upper_multinomial.str();
    out += ", \"lower_hook\": ";
    out += report.lower_hook ? report.lower_hook->str() : "null";
    out += ", \"lower_product\": " + report.lower_product.str();
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Tennis-ball flag matroids: counting, diagrams, verification"};
    app.require_subcommand(1);

    std::vector<int> l;
    int n = 1;
    std::string format = "json";
    std::string method = "dp";
    std::string input, output, path_text, target_text;
    int limit = 0;
    bool with_bounds = false, count_only = false, with_exact = false;

    auto add_spec = [&](CLI::App* cmd, bool required = true) {
        auto* lopt = cmd->add_option("--l", l, "comma-separated bin sizes l_1,...,l_k")
                         ->delimiter(',');
        if (required) lopt->required();
        cmd->add_option("--n", n, "number of turns")->check(CLI::PositiveNumber);
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "write the payload to a file");
        cmd->add_option("--limit", limit,
                        "override desk-scale ceilings (also: env FLAGPATH_LIMIT)");
    };

    CLI::App* count = app.add_subcommand("count", "exact number of n-configurations");
    add_spec(count);
    add_common(count);
    count->add_option("--method", method, "counting route")
        ->check(CLI::IsMember({"dp", "filter", "bfs"}));
    count->add_flag("--bounds", with_bounds, "append the bounds report");

    CLI::App* diagram = app.add_subcommand("diagram", "3-dimensional n-diagram matrix");
    add_spec(diagram);
    add_common(diagram);
    diagram->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "ascii"}));

    CLI::App* verify = app.add_subcommand("verify", "check the flag-matroid axioms");
    verify->add_option("--input", input, "FlagBasisFamily JSON file")->required();
    add_common(verify);

    CLI::App* realize = app.add_subcommand("realize", "move schedule for a target partition");
    add_spec(realize);
    add_common(realize);
    realize->add_option("target", target_text,
                        "ordered partition as JSON (or @file)")
        ->required();

    CLI::App* bases = app.add_subcommand("bases", "bases of the nested matroid M[P]");
    bases->add_option("--path", path_text, "bounding path over N/E (or axis digits)")
        ->required();
    bases->add_flag("--count", count_only, "print the basis count only");
    add_common(bases);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "bounds report for the count");
    add_spec(bounds_cmd);
    add_common(bounds_cmd);
    bounds_cmd->add_flag("--exact", with_exact, "include the exact count");

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "cross-oracle invariant suite");
    (void)selfcheck;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (count->parsed()) {
        const BinSpec spec(l, n);
        BigCount value;
        if (method == "dp") {
            value = flagpath::count_configurations(spec);
        } else if (method == "filter") {
            value = flagpath::count_by_filter(spec, effective_limit(limit, 12));
        } else {
            value = flagpath::reachable_configurations(
                        spec, effective_limit(limit, flagpath::kDefaultProcessLimit))
                        .flags.size();
        }
        std::string payload = "{\"count\": " + value.str();
        if (with_bounds)
            payload += ", " + bounds_fields(flagpath::bounds(spec, false));
        payload += "}";
        write_output(payload, output);
    } else if (diagram->parsed()) {
        if (l.size() != 3)
            throw flagpath::DimensionMismatch("diagram requires exactly k = 3 bins");
        const flagpath::DiagramMatrix d =
            flagpath::diagram_matrix({l[0], l[1], l[2]}, n);
        if (format == "json")
            write_output(flagpath::diagram_to_json(d), output);
        else if (format == "csv")
            write_output(flagpath::diagram_to_csv(d), output);
        else
            write_output(diagram_ascii(d), output);
    } else if (verify->parsed()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_text(input));
        } catch (const nlohmann::json::exception& e) {
            throw flagpath::NotAPartition(std::string("bad family JSON: ") + e.what());
        }
        flagpath::FlagBasisFamily family;
        family.ground_size = j.at("ground_size").get<int>();
        family.flag_rank = j.at("flag_rank").get<std::vector<int>>();
        for (const auto& flag : j.at("flags"))
            family.flags.push_back(flagpath::normalized_partition(
                flag.get<OrderedPartition>()));
        std::sort(family.flags.begin(), family.flags.end());
        const flagpath::FlagVerdict verdict = flagpath::is_flag_matroid(
            family, effective_limit(limit, flagpath::kDefaultBruteForceLimit));
        std::string payload;
        if (verdict.ok) {
            std::vector<int> ranks;
            for (const auto& m : verdict.constituents) ranks.push_back(m.rank());
            payload = "{\"ok\": true, \"constituent_ranks\": " + int_list(ranks) + "}";
        } else {
            payload = "{\"ok\": false, \"axiom\": " + std::to_string(verdict.axiom) +
                      ", \"index\": " + std::to_string(verdict.index) +
                      ", \"detail\": " + nlohmann::json(verdict.detail).dump() + "}";
        }
        write_output(payload, output);
    } else if (realize->parsed()) {
        const BinSpec spec(l, n);
        const flagpath::MoveSchedule schedule =
            flagpath::realize(spec, parse_partition(target_text));
        std::string payload = "{\"turns\": [";
        for (size_t t = 0; t < schedule.turns.size(); ++t) {
            if (t) payload += ", ";
            payload += "{\"moves\": [";
            for (size_t i = 0; i < schedule.turns[t].size(); ++i) {
                if (i) payload += ", ";
                payload += int_list(schedule.turns[t][i]);
            }
            payload += "]}";
        }
        payload += "]}";
        write_output(payload, output);
    } else if (bases->parsed()) {
        const flagpath::StepSequence p = flagpath::path_from_text(path_text, 2);
        const flagpath::NestedMatroid m = flagpath::nested_from_path(p);
        std::string payload = "{\"ground_size\": " + std::to_string(m.ground_size()) +
                              ", \"caps\": " +
                              int_list(std::vector<int>(m.caps().begin() + 1,
                                                        m.caps().end()));
        if (count_only) {
            payload += ", \"count\": " + flagpath::count_paths_below(p).str() + "}";
        } else {
            payload += ", \"bases\": [";
            const auto masks = m.basis_masks(
                effective_limit(limit, flagpath::kDefaultBruteForceLimit));
            for (size_t i = 0; i < masks.size(); ++i) {
                if (i) payload += ", ";
                payload += int_list(flagpath::set_from_mask(masks[i]));
            }
            payload += "]}";
        }
        write_output(payload, output);
    } else if (bounds_cmd->parsed()) {
        const BinSpec spec(l, n);
        const flagpath::BoundsReport report = flagpath::bounds(spec, with_exact);
        std::string payload = "{" + bounds_fields(report);
        if (report.exact) payload += ", \"exact\": " + report.exact->str();
        payload += "}";
        write_output(payload, output);
    } else if (selfcheck->parsed()) {
        return flagpath::run_selfcheck(std::cout) == 0 ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const flagpath::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
