#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdg/formats.hpp"
#include "zdg/oracle.hpp"
#include "zdg/theorems.hpp"
#include "zdg/verify.hpp"
#include "zdg/zdgraph.hpp"

namespace {

using nlohmann::ordered_json;

enum class Method { Auto, Theorem, Oracle, Both };
enum class OutFormat { Text, Json };

// Refuse to materialize theorem-side sets beyond this many elements; the
// pointwise predicates handle huge moduli instead.
constexpr std::uint64_t kMaxSetMaterialize = 10'000'000;

struct CommonOpts {
    std::string method = "auto";
    std::string format = "text";
    std::uint64_t oracle_cap = zdg::ZdGraph::kDefaultOracleCap;

    Method method_kind() const {
        if (method == "theorem") return Method::Theorem;
        if (method == "oracle") return Method::Oracle;
        if (method == "both") return Method::Both;
        return Method::Auto;
    }
    OutFormat format_kind() const {
        return format == "json" ? OutFormat::Json : OutFormat::Text;
    }
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--method", opts.method, "Engine to consult")
        ->check(CLI::IsMember({"auto", "theorem", "oracle", "both"}))
        ->capture_default_str();
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--oracle-cap", opts.oracle_cap,
                    "Largest n the brute-force engine will materialize")
        ->envname("ZDG_ORACLE_MAX_N")
        ->capture_default_str();
}

// auto = both engines when the oracle can reach n, theorem alone otherwise.
Method resolve_method(const CommonOpts& opts, std::uint64_t n) {
    const Method m = opts.method_kind();
    if (m != Method::Auto) return m;
    return n <= opts.oracle_cap ? Method::Both : Method::Theorem;
}

bool wants_theorem(Method m) { return m == Method::Theorem || m == Method::Both; }
bool wants_oracle(Method m) { return m == Method::Oracle || m == Method::Both; }

// Shared emitter for one-value-per-engine query results. Values arrive
// preformatted (text) and as JSON fragments; the verdict is present only
// when both engines produced comparable answers. Returns the exit code.
struct DualResult {
    std::optional<std::string> theorem_text;
    std::optional<std::string> oracle_text;
    ordered_json theorem_json;
    ordered_json oracle_json;
    bool comparable = false;
    bool agree = false;
};

int emit_dual(const DualResult& r, OutFormat format, ordered_json header) {
    if (format == OutFormat::Json) {
        ordered_json j = std::move(header);
        if (r.theorem_text) j["theorem"] = r.theorem_json;
        if (r.oracle_text) j["oracle"] = r.oracle_json;
        if (r.comparable) j["verdict"] = r.agree ? "agree" : "disagree";
        std::cout << j.dump() << "\n";
    } else if (r.theorem_text && r.oracle_text) {
        std::cout << "theorem: " << *r.theorem_text << "\n";
        std::cout << "oracle: " << *r.oracle_text << "\n";
        if (r.comparable) std::cout << (r.agree ? "AGREE" : "DISAGREE") << "\n";
    } else {
        std::cout << (r.theorem_text ? *r.theorem_text : *r.oracle_text) << "\n";
    }
    return r.comparable && !r.agree ? 2 : 0;
}

ordered_json vertices_json(const std::vector<std::uint64_t>& vs) { return ordered_json(vs); }

ordered_json edges_json(const std::vector<zdg::Edge>& es) {
    auto arr = ordered_json::array();
    for (const zdg::Edge& e : es) arr.push_back({e.lo, e.hi});
    return arr;
}

void require_materializable(std::uint64_t size, const std::string& what) {
    if (size > kMaxSetMaterialize) {
        throw zdg::resource_limit_error(what + " has " + std::to_string(size) +
                                        " elements, beyond the materialization limit of " +
                                        std::to_string(kMaxSetMaterialize) +
                                        "; use a pointwise query instead");
    }
}

int cmd_info(std::uint64_t n, const CommonOpts& opts) {
    const zdg::Modulus m(n);
    const zdg::ZdGraph g(m, opts.oracle_cap);
    const bool in_range = g.within_oracle_cap();

    std::optional<std::uint64_t> edge_count;
    if (in_range) {
        std::uint64_t degree_sum = 0;
        for (std::uint64_t v : g.vertices()) degree_sum += g.degree(v);
        edge_count = degree_sum / 2;
    }

    const auto theorem_diam = zdg::theorems::diameter(m);
    std::optional<int> diam;
    std::string diam_source;
    if (theorem_diam.kind == zdg::theorems::Diameter::Kind::Value) {
        diam = theorem_diam.value;
        diam_source = "theorem";
    } else if (theorem_diam.kind == zdg::theorems::Diameter::Kind::EmptyGraph) {
        diam_source = "theorem";  // diameter stays undefined
    } else if (in_range) {
        diam = zdg::oracle::diameter(g);
        diam_source = "oracle";
    }

    const std::uint64_t center_theorem = zdg::theorems::center_size(m);
    std::optional<std::uint64_t> center_oracle;
    if (in_range) center_oracle = zdg::oracle::center(g).size();

    if (opts.format_kind() == OutFormat::Json) {
        ordered_json j;
        j["n"] = n;
        j["factorization"] = zdg::io::format_factorization(m.factors());
        j["vertices"] = g.vertex_count();
        j["edges"] = edge_count ? ordered_json(*edge_count) : ordered_json(nullptr);
        j["diameter"] = diam ? ordered_json(*diam) : ordered_json(nullptr);
        j["diameter_source"] =
            diam_source.empty() ? ordered_json(nullptr) : ordered_json(diam_source);
        j["center_size_theorem"] = center_theorem;
        j["center_size_oracle"] =
            center_oracle ? ordered_json(*center_oracle) : ordered_json(nullptr);
        std::cout << j.dump() << "\n";
        return 0;
    }

    std::cout << "n: " << n << " = " << zdg::io::format_factorization(m.factors()) << "\n";
    std::cout << "vertices: " << g.vertex_count() << (m.is_prime() ? " (empty graph)" : "")
              << "\n";
    std::cout << "edges: " << (edge_count ? std::to_string(*edge_count) : "n/a (above oracle cap)")
              << "\n";
    if (diam) {
        std::cout << "diameter: " << *diam << " (" << diam_source << ")\n";
    } else if (m.is_prime()) {
        std::cout << "diameter: none\n";
    } else {
        std::cout << "diameter: n/a\n";
    }
    std::cout << "center size (theorem): " << center_theorem << "\n";
    std::cout << "center size (oracle): "
              << (center_oracle ? std::to_string(*center_oracle) : "n/a (above oracle cap)")
              << "\n";
    return 0;
}

int cmd_neighbors(std::uint64_t n, std::uint64_t a, const CommonOpts& opts) {
    const zdg::Modulus m(n);
    const zdg::ZdGraph g(m, opts.oracle_cap);
    g.require_vertex(a);
    const Method method = resolve_method(opts, n);
    DualResult r;
    if (wants_theorem(method)) {
        require_materializable(std::gcd(a, n) - 1, "the neighbor set");
        const auto vs = g.neighbors(a);
        r.theorem_text = zdg::io::format_vertex_set(vs);
        r.theorem_json = vertices_json(vs);
    }
    if (wants_oracle(method)) {
        const auto vs = zdg::oracle::neighbors_by_scan(g, a);
        r.oracle_text = zdg::io::format_vertex_set(vs);
        r.oracle_json = vertices_json(vs);
    }
    if (r.theorem_text && r.oracle_text) {
        r.comparable = true;
        r.agree = *r.theorem_text == *r.oracle_text;
    }
    return emit_dual(r, opts.format_kind(), {{"n", n}, {"a", a}});
}

int cmd_degree(std::uint64_t n, std::uint64_t a, const CommonOpts& opts) {
    const zdg::Modulus m(n);
    const zdg::ZdGraph g(m, opts.oracle_cap);
    const Method method = resolve_method(opts, n);
    DualResult r;
    if (wants_theorem(method)) {
        const std::uint64_t d = zdg::theorems::degree(m, a);
        r.theorem_text = std::to_string(d);
        r.theorem_json = d;
    }
    if (wants_oracle(method)) {
        const std::uint64_t d = zdg::oracle::neighbors_by_scan(g, a).size();
        r.oracle_text = std::to_string(d);
        r.oracle_json = d;
    }
    if (r.theorem_text && r.oracle_text) {
        r.comparable = true;
        r.agree = *r.theorem_text == *r.oracle_text;
    }
    return emit_dual(r, opts.format_kind(), {{"n", n}, {"a", a}});
}

int cmd_distance(std::uint64_t n, std::uint64_t a, std::uint64_t b, const CommonOpts& opts) {
    const zdg::Modulus m(n);
    const zdg::ZdGraph g(m, opts.oracle_cap);
    g.require_vertex(a);
    g.require_vertex(b);
    const Method method = resolve_method(opts, n);
    DualResult r;
    bool theorem_covered = false;
    if (wants_theorem(method)) {
        // The closed form covers exactly: distinct primes dividing n with
        // product below n. Everything else is reported as not covered.
        theorem_covered = a != b && zdg::is_prime(a) && zdg::is_prime(b) && n % a == 0 &&
                          n % b == 0 && n / b > a;
        if (theorem_covered) {
            const int d = zdg::theorems::prime_distance(m, a, b);
            r.theorem_text = std::to_string(d);
            r.theorem_json = d;
        } else {
            r.theorem_text = "not-covered";
            r.theorem_json = nullptr;
        }
    }
    if (wants_oracle(method)) {
        const auto dist = zdg::oracle::distances_from(g, a);
        const auto it = dist.find(b);
        if (it != dist.end()) {
            r.oracle_text = std::to_string(it->second);
            r.oracle_json = it->second;
        } else {
            r.oracle_text = "unreachable";
            r.oracle_json = nullptr;
        }
    }
    if (theorem_covered && r.oracle_text) {
        r.comparable = true;
        r.agree = *r.theorem_text == *r.oracle_text;
    }
    return emit_dual(r, opts.format_kind(), {{"n", n}, {"a", a}, {"b", b}});
}

int cmd_cut_edges(std::uint64_t n, const CommonOpts& opts) {
    const zdg::Modulus m(n);
    const zdg::ZdGraph g(m, opts.oracle_cap);
    const Method method = resolve_method(opts, n);
    DualResult r;
    if (wants_theorem(method)) {
        if (n % 2 == 0 && std::gcd(n / 2, n) >= 3) {
            // The bridge set is {(a, n/2) : gcd(a, n) = 2}, one per residue
            // 2t with t coprime to n/2, so its size is totient(n/2).
            const zdg::Modulus half(n / 2);
            require_materializable(half.totient(), "the cut-edge set");
        }
        const auto es = zdg::theorems::cut_edges(m);
        r.theorem_text = zdg::io::format_edge_set(es);
        r.theorem_json = edges_json(es);
    }
    if (wants_oracle(method)) {
        const auto es = zdg::oracle::bridges(g);
        r.oracle_text = zdg::io::format_edge_set(es);
        r.oracle_json = edges_json(es);
    }
    if (r.theorem_text && r.oracle_text) {
        r.comparable = true;
        r.agree = *r.theorem_text == *r.oracle_text;
    }
    return emit_dual(r, opts.format_kind(), {{"n", n}});
}

int cmd_center(std::uint64_t n, const CommonOpts& opts) {
    const zdg::Modulus m(n);
    const zdg::ZdGraph g(m, opts.oracle_cap);
    const Method method = resolve_method(opts, n);
    DualResult r;
    if (wants_theorem(method)) {
        require_materializable(zdg::theorems::center_size(m), "the center");
        const auto vs = zdg::theorems::center(m);
        r.theorem_text = zdg::io::format_vertex_set(vs);
        r.theorem_json = vertices_json(vs);
    }
    if (wants_oracle(method)) {
        const auto vs = zdg::oracle::center(g);
        r.oracle_text = zdg::io::format_vertex_set(vs);
        r.oracle_json = vertices_json(vs);
    }
    if (r.theorem_text && r.oracle_text) {
        r.comparable = true;
        r.agree = *r.theorem_text == *r.oracle_text;
    }
    return emit_dual(r, opts.format_kind(), {{"n", n}});
}

int cmd_export(std::uint64_t n, const std::string& format, const std::string& out_path,
               const CommonOpts& opts) {
    const zdg::ZdGraph g(n, opts.oracle_cap);
    std::string payload;
    if (format == "dot") {
        payload = zdg::io::to_dot(g);
    } else if (format == "json") {
        payload = zdg::io::to_json(g) + "\n";
    } else {
        payload = zdg::io::to_csv(g);
    }
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << payload) || !out.flush()) {
        throw zdg::domain_error("cannot write to " + out_path);
    }
    return 0;
}

int cmd_verify(std::uint64_t n_min, std::uint64_t n_max, const std::string& checks_arg,
               unsigned jobs, const std::string& report_path, const CommonOpts& opts) {
    std::vector<zdg::verify::CheckKind> checks;
    if (checks_arg.empty()) {
        checks.assign(zdg::verify::kAllChecks.begin(), zdg::verify::kAllChecks.end());
    } else {
        std::size_t start = 0;
        while (start <= checks_arg.size()) {
            const std::size_t comma = checks_arg.find(',', start);
            const std::string name =
                checks_arg.substr(start, comma == std::string::npos ? comma : comma - start);
            const auto kind = zdg::verify::parse_check(name);
            if (!kind) throw zdg::domain_error("unknown check: " + name);
            checks.push_back(*kind);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    const auto reports =
        zdg::verify::run_suite(n_min, n_max, checks, std::max(1u, jobs), opts.oracle_cap);
    const std::string json = zdg::io::report_json(n_min, n_max, reports) + "\n";

    if (report_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out || !(out << json) || !out.flush()) {
            throw zdg::domain_error("cannot write to " + report_path);
        }
        for (const auto& report : reports) {
            std::cout << zdg::verify::to_string(report.check) << ": " << report.agree
                      << " agree, " << report.disagree << " disagree, " << report.skipped
                      << " skipped\n";
        }
    }

    for (const auto& report : reports) {
        if (report.disagree > 0) return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural queries about the zero-divisor graph of Z_n, answered "
                 "independently by closed forms and by brute force"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::uint64_t n = 0, a = 0, b = 0, n_min = 0, n_max = 0;
    unsigned jobs = 1;
    std::string export_format, out_path, checks_arg, report_path;
    std::vector<CommonOpts> opt_slots(8);

    auto* info = app.add_subcommand("info", "Summary of the graph for one modulus");
    info->add_option("n", n, "Modulus")->required();
    add_common(info, opt_slots[0]);
    info->callback([&] { exit_code = cmd_info(n, opt_slots[0]); });

    auto* neighbors = app.add_subcommand("neighbors", "Neighbor set of a vertex");
    neighbors->add_option("n", n, "Modulus")->required();
    neighbors->add_option("a", a, "Vertex")->required();
    add_common(neighbors, opt_slots[1]);
    neighbors->callback([&] { exit_code = cmd_neighbors(n, a, opt_slots[1]); });

    auto* degree = app.add_subcommand("degree", "Degree of a vertex");
    degree->add_option("n", n, "Modulus")->required();
    degree->add_option("a", a, "Vertex")->required();
    add_common(degree, opt_slots[2]);
    degree->callback([&] { exit_code = cmd_degree(n, a, opt_slots[2]); });

    auto* distance = app.add_subcommand("distance", "Distance between two vertices");
    distance->add_option("n", n, "Modulus")->required();
    distance->add_option("a", a, "First vertex")->required();
    distance->add_option("b", b, "Second vertex")->required();
    add_common(distance, opt_slots[3]);
    distance->callback([&] { exit_code = cmd_distance(n, a, b, opt_slots[3]); });

    auto* cut_edges = app.add_subcommand("cut-edges", "All bridges of the graph");
    cut_edges->add_option("n", n, "Modulus")->required();
    add_common(cut_edges, opt_slots[4]);
    cut_edges->callback([&] { exit_code = cmd_cut_edges(n, opt_slots[4]); });

    auto* center = app.add_subcommand("center", "Vertices of minimum eccentricity");
    center->add_option("n", n, "Modulus")->required();
    add_common(center, opt_slots[5]);
    center->callback([&] { exit_code = cmd_center(n, opt_slots[5]); });

    auto* exp = app.add_subcommand("export", "Write the whole graph as dot, json, or csv");
    exp->add_option("n", n, "Modulus")->required();
    exp->add_option("--format", export_format, "Export format")
        ->required()
        ->check(CLI::IsMember({"dot", "json", "csv"}));
    exp->add_option("--out", out_path, "Output path (stdout when omitted)");
    exp->add_option("--oracle-cap", opt_slots[6].oracle_cap,
                    "Largest n the brute-force engine will materialize")
        ->envname("ZDG_ORACLE_MAX_N")
        ->capture_default_str();
    exp->callback([&] { exit_code = cmd_export(n, export_format, out_path, opt_slots[6]); });

    auto* verify = app.add_subcommand("verify", "Cross-validate the engines over a range");
    verify->add_option("--min", n_min, "First modulus")->required();
    verify->add_option("--max", n_max, "Last modulus")->required();
    verify->add_option("--check", checks_arg, "Comma-separated check names (default: all)");
    verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    verify->add_option("--report", report_path, "Write the JSON report to this path");
    verify->add_option("--oracle-cap", opt_slots[7].oracle_cap,
                       "Largest n the brute-force engine will materialize")
        ->envname("ZDG_ORACLE_MAX_N")
        ->capture_default_str();
    verify->callback([&] {
        exit_code = cmd_verify(n_min, n_max, checks_arg, jobs, report_path, opt_slots[7]);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const zdg::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const zdg::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
