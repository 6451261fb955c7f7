// Command-line front end. Talks to the library only through k4census.h.

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k4census.h"

namespace {

enum Exit : int { kOk = 0, kFalsified = 1, kUsage = 2, kCapability = 3, kInternal = 4 };

struct CliError {
    int code;
    std::string message;
};

int exit_for(k4c_status s) {
    switch (s) {
        case K4C_OK: return kOk;
        case K4C_ERR_PARSE:
        case K4C_ERR_DOMAIN:
        case K4C_ERR_INVALID_ARGUMENT: return kUsage;
        case K4C_ERR_CAPABILITY:
        case K4C_ERR_OVERFLOW: return kCapability;
        case K4C_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

void check(k4c_status s, const std::string& context = {}) {
    if (s == K4C_OK) return;
    std::string msg = k4c_status_name(s);
    msg += ": ";
    if (!context.empty()) msg += context + ": ";
    msg += k4c_last_error();
    throw CliError{exit_for(s), msg};
}

struct StringDeleter {
    void operator()(char* s) const { k4c_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(k4c_graph* g) const { k4c_graph_free(g); }
};
using GraphHandle = std::unique_ptr<k4c_graph, GraphDeleter>;

template <typename F>
std::string take(F&& call, const std::string& context = {}) {
    char* raw = nullptr;
    check(call(&raw), context);
    CString owned(raw);
    return owned.get();
}

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> read_lines(const std::string& path) {
    std::unique_ptr<std::ifstream> file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file = std::make_unique<std::ifstream>(path, std::ios::binary);
        if (!*file) throw CliError{kUsage, "cannot open input '" + path + "'"};
        in = file.get();
    }
    std::vector<Line> lines;
    std::string text;
    for (std::size_t number = 1; std::getline(*in, text); ++number) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        lines.push_back({number, text});
    }
    return lines;
}

std::vector<Line> graph_lines(const std::string& path, const std::vector<std::string>& inline_graphs) {
    if (inline_graphs.empty()) return read_lines(path);
    std::vector<Line> lines;
    for (std::size_t i = 0; i < inline_graphs.size(); ++i) lines.push_back({i + 1, inline_graphs[i]});
    return lines;
}

GraphHandle parse_graph(const Line& line) {
    k4c_graph* g = nullptr;
    check(k4c_graph_from_graph6(line.text.data(), line.text.size(), &g), "line " + std::to_string(line.number));
    return GraphHandle(g);
}

std::vector<std::uint32_t> parse_parts(const std::string& text) {
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (true) {
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos)
            throw CliError{kUsage, "--parts: expected a nonnegative integer at offset " + std::to_string(pos)};
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos == text.size()) break;
        if (text[pos] != ',') throw CliError{kUsage, "--parts: expected ',' at offset " + std::to_string(pos)};
        ++pos;
    }
    if (parts.size() != 5) throw CliError{kUsage, "--parts needs exactly five comma-separated sizes"};
    return parts;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw CliError{kUsage, "cannot open output '" + path + "'"};
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_search(std::ostream& out, const std::string& json_text, const std::string& format) {
    if (format == "g6") {
        const auto parsed = nlohmann::json::parse(json_text);
        for (const auto& w : parsed.at("witnesses")) out << w.get<std::string>() << '\n';
    } else {
        out << json_text << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 4-clique census, identity verification and extremal search for graphs with independence number 2"};
    app.require_subcommand(1);

    unsigned threads = 1;
    std::string output;
    app.add_option("--threads,-j", threads, "Worker threads (output never depends on it)")->check(CLI::Range(1U, 256U));
    app.add_option("--output,-o", output, "Write to this file instead of standard output");

    std::string input = "-";
    std::vector<std::string> inline_graphs;
    auto* census_cmd = app.add_subcommand("census", "Census of every graph6 line in a file ('-' = stdin)");
    census_cmd->add_option("input", input, "graph6 file or '-'");
    census_cmd->add_option("--graph", inline_graphs, "Inline graph6 string instead of a file (repeatable)");

    std::string identity = "all";
    std::string verify_input = "-";
    auto* verify_cmd = app.add_subcommand("verify", "Identity certificates for every graph6 line");
    verify_cmd->add_option("--identity", identity, "all, or one of le00 le0 eq1 eq2 le3 le4 le5 eq3 final_exact edge_nonedge");
    verify_cmd->add_option("input", verify_input, "graph6 file or '-'");
    verify_cmd->add_option("--graph", inline_graphs, "Inline graph6 string instead of a file (repeatable)");

    std::string parts_text;
    std::string construct_format = "both";
    auto* construct_cmd = app.add_subcommand("construct", "Pentagon blow-up: graph6 line, then closed-form JSON");
    construct_cmd->add_option("--parts", parts_text, "p1,p2,p3,p4,p5")->required();
    construct_cmd->add_option("--format", construct_format, "both, g6 or json")
        ->check(CLI::IsMember({"both", "g6", "json"}));

    std::size_t opt_n = 0;
    auto* opt_cmd = app.add_subcommand("blowup-opt", "Best pentagon blow-up part sizes for n vertices");
    opt_cmd->add_option("--n", opt_n, "Order")->required();

    std::size_t exact_n = 0;
    bool timing = false;
    std::string search_format = "json";
    auto* exact_cmd = app.add_subcommand("search-exact", "Exhaustive minimum K4 count (n <= 11)");
    exact_cmd->add_option("--n", exact_n, "Order")->required();
    exact_cmd->add_flag("--timing", timing, "Report real elapsed_ms (output is then not reproducible)");
    exact_cmd->add_option("--format", search_format, "json or g6 (witnesses only)")->check(CLI::IsMember({"json", "g6"}));

    std::size_t local_n = 0;
    std::uint64_t seed = 0;
    std::uint64_t steps = 10000;
    std::uint32_t restarts = 4;
    auto* local_cmd = app.add_subcommand("search-local", "Seeded local search upper bound on the minimum K4 count");
    local_cmd->add_option("--n", local_n, "Order")->required();
    local_cmd->add_option("--seed", seed, "Seed (default 0)");
    local_cmd->add_option("--steps", steps, "Steps per start");
    local_cmd->add_option("--restarts", restarts, "Random starts in addition to the blow-up start");
    local_cmd->add_flag("--timing", timing, "Report real elapsed_ms");
    local_cmd->add_option("--format", search_format, "json or g6")->check(CLI::IsMember({"json", "g6"}));

    std::size_t bound_n = 0;
    std::string bound_g6;
    std::string bound_format = "json";
    auto* bound_cmd = app.add_subcommand("bound", "Exact bound report for order n");
    bound_cmd->add_option("--n", bound_n, "Order")->required();
    bound_cmd->add_option("--g6", bound_g6, "graph6 file; adds a per-graph block for each line");
    bound_cmd->add_option("--format", bound_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::uint64_t pmax = 0;
    auto* ratio_cmd = app.add_subcommand("ratio", "CSV of 200 t4 / n^4 for balanced blow-ups, p = 1..pmax");
    ratio_cmd->add_option("--pmax", pmax, "Largest clique factor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        Output out_file(output);
        std::ostream& out = out_file.stream();
        int status = kOk;

        if (*census_cmd) {
            for (const auto& line : graph_lines(input, inline_graphs)) {
                auto g = parse_graph(line);
                out << take([&](char** s) { return k4c_census_json(g.get(), threads, s); }) << '\n';
            }
        } else if (*verify_cmd) {
            for (const auto& line : graph_lines(verify_input, inline_graphs)) {
                auto g = parse_graph(line);
                int falsified = 0;
                const std::string certs = take(
                    [&](char** s) { return k4c_verify_json(g.get(), identity.c_str(), threads, s, &falsified); });
                const auto parsed = nlohmann::json::parse(certs);
                for (const auto& c : parsed) out << c.dump() << '\n';
                if (falsified) {
                    status = kFalsified;
                    std::cerr << "falsified on line " << line.number << ": " << line.text << '\n';
                }
            }
        } else if (*construct_cmd) {
            const auto parts = parse_parts(parts_text);
            if (construct_format != "json") {
                k4c_graph* raw = nullptr;
                check(k4c_graph_blowup(parts.data(), &raw));
                GraphHandle g(raw);
                out << take([&](char** s) { return k4c_graph_to_graph6(g.get(), s); }) << '\n';
            }
            if (construct_format != "g6")
                out << take([&](char** s) { return k4c_construct_json(parts.data(), s); }) << '\n';
        } else if (*opt_cmd) {
            out << take([&](char** s) { return k4c_blowup_optimize_json(opt_n, s); }) << '\n';
        } else if (*exact_cmd) {
            write_search(out, take([&](char** s) { return k4c_search_exact_json(exact_n, threads, timing, s); }),
                         search_format);
        } else if (*local_cmd) {
            write_search(out,
                         take([&](char** s) {
                             return k4c_search_local_json(local_n, seed, steps, restarts, timing, s);
                         }),
                         search_format);
        } else if (*bound_cmd) {
            if (bound_format == "csv") {
                out << take([&](char** s) { return k4c_bound_csv(bound_n, s); });
            } else if (bound_g6.empty()) {
                out << take([&](char** s) { return k4c_bound_json(bound_n, nullptr, threads, s); }) << '\n';
            } else {
                for (const auto& line : read_lines(bound_g6)) {
                    auto g = parse_graph(line);
                    out << take([&](char** s) { return k4c_bound_json(bound_n, g.get(), threads, s); }) << '\n';
                }
            }
        } else if (*ratio_cmd) {
            out << take([&](char** s) { return k4c_ratio_csv(pmax, s); });
        }
        out.flush();
        return status;
    } catch (const CliError& e) {
        std::cerr << "k4census: " << e.message << '\n';
        return e.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "k4census: malformed library output: " << e.what() << '\n';
        return kInternal;
    }
}
