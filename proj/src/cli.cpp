#include "ssg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ssg/counting.hpp"
#include "ssg/graph.hpp"
#include "ssg/richelot.hpp"

namespace ssg::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_number(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a number: " + std::string(s));
    return v;
}

PrimeModulus prime_arg(std::optional<std::uint64_t> p) {
    if (!p) throw UsageError("a prime is required (--prime)");
    try {
        return PrimeModulus(*p);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    std::uint64_t lo = 0, hi = 0;
    if (dots == std::string::npos) {
        lo = hi = parse_number(text);
    } else {
        lo = parse_number(std::string_view(text).substr(0, dots));
        hi = parse_number(std::string_view(text).substr(dots + 2));
    }
    if (lo > hi) throw UsageError("empty range " + text);
    if (lo <= 5 || hi >= 1000000) throw UsageError("range endpoints must lie in 6..999999");
    return {lo, hi};
}

IsogenyGraph graph_for(const PrimeModulus& p, const std::string& cache_dir) {
    if (cache_dir.empty()) return build_graph(p);
    return load_or_build(p, cache_dir);
}

std::string join(const std::array<std::int64_t, 7>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

int cmd_count(const PrimeModulus& p, std::ostream& out) {
    const CountReport r = count_report(p);
    out << Field::of(p).context_line() << "\n";
    out << "n = " << join(r.n) << "\n";
    out << "n_total = " << r.n_total << "\n";
    out << "h = " << r.classes.h << ", h1 = " << r.classes.h1 << ", h2 = " << r.classes.h2
        << ", h3 = " << r.classes.h3 << "\n";
    out << "products = " << r.products() << "\n";
    out << "isogeny classes from Jacobians: total = " << r.jacobian_total << ", decomposed = " << r.jacobian_decomposed
        << "\n";
    out << "isogeny classes from products: non-decomposed = " << r.product_nondecomposed
        << ", decomposed = " << r.product_decomposed << "\n";
    return kExitOk;
}

int cmd_enumerate(const PrimeModulus& p, std::ostream& out) {
    const VertexSet vs = enumerate_vertices(p);
    out << Field::of(p).context_line() << "\n";
    out << "products: " << vs.products.size() << "\n";
    for (const auto& e : vs.products) {
        auto shape = product_shape(e.first.aut_order(), e.second.aut_order(), e.self_product());
        out << "  " << name(shape) << "  " << VertexKey::of(e).to_string() << "  lambda = ["
            << e.first.lambda().to_string() << ", " << e.second.lambda().to_string() << "]\n";
    }
    out << "jacobians: " << vs.jacobians.size() << "\n";
    for (const auto& [k, c] : vs.jacobians)
        out << "  " << name(ra_type(c)) << "  " << k.to_string() << "  f = " << c.serialize() << "\n";
    return kExitOk;
}

int cmd_classify(const PrimeModulus& p, const std::string& curve, std::ostream& out) {
    if (curve.empty()) throw UsageError("--curve is required");
    const Field& f = Field::of(p);
    Genus2Curve c = [&] {
        try {
            return Genus2Curve::parse(f, curve);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("unreadable curve: ") + e.what());
        }
    }();
    int decomposed = 0;
    for (const auto& s : splittings(c))
        if (delta(s).is_zero()) ++decomposed;
    out << f.context_line() << "\n";
    out << "RA = " << name(ra_type(c)) << ", long involutions = " << long_involutions(c).size()
        << ", superspecial = " << (is_superspecial(c) ? "true" : "false") << ", decomposed splittings = " << decomposed
        << "\n";
    return kExitOk;
}

int cmd_graph(const PrimeModulus& p, const std::string& format, const std::string& output,
              const std::string& cache_dir, std::ostream& out) {
    const IsogenyGraph g = graph_for(p, cache_dir);
    const std::string text = format == "json" ? export_json(g) : export_dot(g);
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream file(output);
        if (!file) throw UsageError("cannot write " + output);
        file << text;
    }
    return kExitOk;
}

int cmd_verify(const std::string& range, const std::string& cache_dir, std::ostream& out, std::ostream& err) {
    auto [lo, hi] = parse_range(range);
    if (lo == hi && !is_prime(lo)) throw UsageError(std::to_string(lo) + " is not prime");
    bool ok = true;
    int primes = 0, skipped = 0;
    for (std::uint64_t q = lo; q <= hi; ++q) {
        if (!is_prime(q)) {
            ++skipped;
            continue;
        }
        ++primes;
        const PrimeModulus p(q);
        out << Field::of(p).context_line() << "\n";
        VerifyReport r;
        try {
            r = verify_counts(graph_for(p, cache_dir));
        } catch (const std::exception& e) {
            r.p = q;
            r.lines.push_back({"graph construction", "success", e.what(), false});
        }
        for (const auto& l : r.lines)
            out << "  " << (l.pass ? "PASS" : "FAIL") << "  " << l.name << ": expected " << l.expected << ", got "
                << l.actual << "\n";
        ok = ok && r.all_pass();
    }
    if (skipped > 0) err << "notice: skipped " << skipped << " non-prime" << (skipped == 1 ? "" : "s") << " in " << range << "\n";
    out << "verified " << primes << " prime" << (primes == 1 ? "" : "s") << ": " << (ok ? "all checks pass" : "FAILURES")
        << "\n";
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Superspecial genus-2 Richelot isogeny graphs", "ssgraph"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> prime;
    std::string format = "dot", output, curve, range, cache_dir;

    auto add_prime = [&](CLI::App* sub) {
        sub->add_option("-p,--prime,prime", prime, "prime p > 5");
    };
    auto* graph = app.add_subcommand("graph", "export the isogeny graph");
    add_prime(graph);
    graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("-o,--output", output, "output file (default stdout)");
    graph->add_option("--cache-dir", cache_dir, "directory for cached graphs");

    auto* verify = app.add_subcommand("verify", "check the graph against the closed-form counts");
    verify->add_option("range", range, "prime or range lo..hi")->required();
    verify->add_option("--cache-dir", cache_dir, "directory for cached graphs");

    auto* count = app.add_subcommand("count", "closed-form counts");
    add_prime(count);
    auto* enumerate = app.add_subcommand("enumerate", "list the superspecial vertices");
    add_prime(enumerate);
    auto* classify = app.add_subcommand("classify", "classify y^2 = f(x)");
    add_prime(classify);
    classify->add_option("--curve", curve, "coefficients of f, low degree first, comma-separated");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(range, cache_dir, out, err);
        const PrimeModulus p = prime_arg(prime);
        if (*graph) return cmd_graph(p, format, output, cache_dir, out);
        if (*count) return cmd_count(p, out);
        if (*enumerate) return cmd_enumerate(p, out);
        return cmd_classify(p, curve, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace ssg::cli
