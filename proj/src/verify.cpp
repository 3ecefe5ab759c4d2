#include "zdg/verify.hpp"

#include <exception>
#include <numeric>
#include <thread>
#include <utility>

#include "zdg/formats.hpp"
#include "zdg/oracle.hpp"
#include "zdg/theorems.hpp"

namespace zdg::verify {

std::string_view to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::CutEdges: return "cut-edges";
        case CheckKind::Center: return "center";
        case CheckKind::Degree: return "degree";
        case CheckKind::Diameter: return "diameter";
        case CheckKind::Connectivity: return "connectivity";
        case CheckKind::PrimeDistance: return "prime-distance";
    }
    return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
    for (CheckKind kind : kAllChecks) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

namespace {

struct Outcome {
    Status status = Status::Agree;
    std::string detail;
    std::string theorem_answer;  // populated only on disagreement
    std::string oracle_answer;
};

Outcome agree() { return {}; }

Outcome skipped(std::string reason) {
    return {Status::Skipped, std::move(reason), {}, {}};
}

Outcome disagree(std::string theorem_answer, std::string oracle_answer) {
    Outcome out;
    out.status = Status::Disagree;
    out.detail = "theorem=" + theorem_answer + " oracle=" + oracle_answer;
    out.theorem_answer = std::move(theorem_answer);
    out.oracle_answer = std::move(oracle_answer);
    return out;
}

std::string describe_diameter(const theorems::Diameter& d) {
    return d.kind == theorems::Diameter::Kind::EmptyGraph ? "none" : std::to_string(d.value);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> eligible_prime_pairs(const Modulus& m) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    const auto& factors = m.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            const std::uint64_t p = factors[i].prime;
            const std::uint64_t q = factors[j].prime;
            if (m.value() / q > p) pairs.emplace_back(p, q);  // p*q < n
        }
    }
    return pairs;
}

Outcome run_one(const Modulus& m, const ZdGraph& g, CheckKind kind) {
    switch (kind) {
        case CheckKind::CutEdges: {
            const auto expected = theorems::cut_edges(m);
            const auto actual = oracle::bridges(g);
            if (expected == actual) return agree();
            return disagree(io::format_edge_set(expected), io::format_edge_set(actual));
        }
        case CheckKind::Center: {
            const auto expected = theorems::center(m);
            const auto actual = oracle::center(g);
            if (expected == actual) return agree();
            return disagree(io::format_vertex_set(expected), io::format_vertex_set(actual));
        }
        case CheckKind::Degree: {
            for (std::uint64_t a = 2; a < m.value(); ++a) {
                if (std::gcd(a, m.value()) == 1) continue;
                const std::uint64_t expected = theorems::degree(m, a);
                const std::uint64_t actual = g.neighbors(a).size();
                if (expected != actual) {
                    const std::string at = "deg(" + std::to_string(a) + ")=";
                    return disagree(at + std::to_string(expected), at + std::to_string(actual));
                }
            }
            return agree();
        }
        case CheckKind::Diameter: {
            const auto expected = theorems::diameter(m);
            if (expected.kind == theorems::Diameter::Kind::NotCovered) {
                return skipped("diameter formula does not cover this n");
            }
            const auto actual = oracle::diameter(g);
            const bool match = expected.kind == theorems::Diameter::Kind::EmptyGraph
                                   ? !actual.has_value()
                                   : actual.has_value() && *actual == expected.value;
            if (match) return agree();
            return disagree(describe_diameter(expected),
                            actual ? std::to_string(*actual) : "none");
        }
        case CheckKind::Connectivity: {
            const bool connected = oracle::is_connected(g);
            const auto diam = oracle::diameter(g);
            if (connected && (!diam || *diam <= 3)) return agree();
            std::string found = connected ? "connected" : "disconnected";
            if (diam) found += ", diameter " + std::to_string(*diam);
            return disagree("connected, diameter <= 3", found);
        }
        case CheckKind::PrimeDistance: {
            const auto pairs = eligible_prime_pairs(m);
            if (pairs.empty()) return skipped("no prime pair p, q with p*q < n");
            for (const auto& [p, q] : pairs) {
                const int expected = theorems::prime_distance(m, p, q);
                const auto dist = oracle::distances_from(g, p);
                const auto it = dist.find(q);
                const std::string at =
                    "d(" + std::to_string(p) + "," + std::to_string(q) + ")=";
                if (it == dist.end()) {
                    return disagree(at + std::to_string(expected), at + "unreachable");
                }
                if (it->second != expected) {
                    return disagree(at + std::to_string(expected),
                                    at + std::to_string(it->second));
                }
            }
            return agree();
        }
    }
    throw domain_error("unknown check kind");
}

} // namespace

Report run_check(std::uint64_t n_min, std::uint64_t n_max, CheckKind check,
                 std::uint64_t oracle_cap) {
    const std::array<CheckKind, 1> one = {check};
    return run_suite(n_min, n_max, one, 1, oracle_cap).front();
}

std::vector<Report> run_suite(std::uint64_t n_min, std::uint64_t n_max,
                              std::span<const CheckKind> checks, unsigned parallelism,
                              std::uint64_t oracle_cap) {
    if (n_min < 2) throw domain_error("verification range must start at n >= 2");
    if (n_min > n_max) throw domain_error("verification range is empty");
    if (n_max > oracle_cap) {
        throw resource_limit_error("verification range ends at " + std::to_string(n_max) +
                                   ", beyond the oracle cap of " + std::to_string(oracle_cap));
    }
    const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<std::vector<Outcome>> outcomes(checks.size(), std::vector<Outcome>(count));

    const unsigned jobs = std::max(1u, parallelism);
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < count; i += jobs) {
            const Modulus m(n_min + i);
            const ZdGraph g(m, oracle_cap);
            for (std::size_t c = 0; c < checks.size(); ++c) {
                outcomes[c][i] = run_one(m, g, checks[c]);
            }
        }
    };
    if (jobs == 1 || count <= 1) {
        work(0);
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            threads.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& err : errors) {
            if (err) std::rethrow_exception(err);
        }
    }

    std::vector<Report> reports;
    reports.reserve(checks.size());
    for (std::size_t c = 0; c < checks.size(); ++c) {
        Report report;
        report.check = checks[c];
        report.n_min = n_min;
        report.n_max = n_max;
        report.per_n.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            Outcome& o = outcomes[c][i];
            const std::uint64_t n = n_min + i;
            switch (o.status) {
                case Status::Agree: ++report.agree; break;
                case Status::Disagree:
                    ++report.disagree;
                    report.discrepancies.push_back(
                        {n, std::move(o.theorem_answer), std::move(o.oracle_answer)});
                    break;
                case Status::Skipped: ++report.skipped; break;
            }
            report.per_n.push_back({n, o.status, std::move(o.detail)});
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace zdg::verify
