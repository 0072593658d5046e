#include "ordext/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

#include <CLI11.hpp>

#include "ordext/constructions.hpp"
#include "ordext/errors.hpp"
#include "ordext/extension.hpp"
#include "ordext/io.hpp"
#include "ordext/poset.hpp"

namespace ordext::cli {

namespace {

/// Usage problems discovered after CLI11 has parsed the arguments.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FileParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_count(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

class Context {
public:
    Context(std::istream& in, std::ostream& out, std::ostream& err, bool machine)
        : in_(in), out_(out), err_(err), machine_(machine) {}

    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }
    bool machine() const { return machine_; }

    template <typename Parser>
    auto read(const std::string& path, Parser parser) {
        try {
            if (path == "-") return parser(in_);
            std::ifstream file(path);
            if (!file) throw UsageError("cannot open '" + path + "'");
            return parser(file);
        } catch (const ParseError& e) {
            throw FileParseError(path + ": " + e.what());
        }
    }

    RelationFile relation(const std::string& path) { return read(path, [](std::istream& s) { return parse_relation(s); }); }
    std::vector<ElementId> subset(const std::string& path) { return read(path, [](std::istream& s) { return parse_subset(s); }); }

    Poset poset(const std::string& path, bool auto_close = true) {
        auto file = relation(path);
        return validate(std::move(file.ground), file.pairs, auto_close);
    }

    void print_order(const LinearOrder& order) {
        const auto& seq = order.sequence();
        if (machine_) {
            for (std::size_t i = 0; i < seq.size(); ++i) out_ << (i ? "\t" : "") << seq[i];
            out_ << '\n';
        } else {
            for (const auto& e : seq) out_ << e << '\n';
        }
    }

    void print_pairs(const std::vector<Pair>& pairs, std::string_view human_sep) {
        for (const auto& [x, y] : pairs) out_ << x << (machine_ ? "\t" : human_sep) << y << '\n';
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    bool machine_;
};

ElementId token(const std::string& text) {
    if (!ElementId::is_valid_token(text)) throw UsageError("invalid element token '" + text + "'");
    return ElementId(text);
}

} // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* v = std::getenv("ORDEXT_ENUM_LIMIT")) env.enum_limit = v;
    return env;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
    CLI::App app{"Partial orders, linear extensions and structured total orders", "ordext"};
    app.require_subcommand(1);
    app.fallthrough();

    bool machine = false;
    app.add_flag("--machine", machine, "Tab-separated output, one line per order");

    std::string policy_spec = "input";
    auto add_policy = [&](CLI::App* cmd) {
        cmd->add_option("--tie-break", policy_spec, "input | lex | seed:<u64>")->capture_default_str();
    };

    std::function<void(Context&)> action;

    // validate
    std::string relation_path;
    bool no_close = false;
    std::string restrict_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check a relation file and print the resulting poset");
    validate_cmd->add_option("file", relation_path, "Relation file")->required();
    validate_cmd->add_flag("--no-close", no_close, "Reject relations that are not transitively closed");
    validate_cmd->add_option("--restrict", restrict_path, "Restrict to the elements listed in this file");
    validate_cmd->callback([&] {
        action = [&](Context& ctx) {
            Poset p = ctx.poset(relation_path, !no_close);
            if (!restrict_path.empty()) {
                auto subset = ctx.subset(restrict_path);
                p = restrict(p, subset);
            }
            if (ctx.machine()) {
                const auto& g = p.ground().elements();
                for (std::size_t i = 0; i < g.size(); ++i) ctx.out() << (i ? "\t" : "") << g[i];
                ctx.out() << '\n';
                ctx.print_pairs(p.pairs(), "\t");
            } else {
                write_relation(ctx.out(), p.ground().elements(), p.pairs());
            }
        };
    });

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "Print the transitive closure of the pairs in a relation file");
    closure_cmd->add_option("file", relation_path, "Relation file")->required();
    closure_cmd->callback([&] {
        action = [&](Context& ctx) {
            auto file = ctx.relation(relation_path);
            StrictRelation closed = transitive_closure(StrictRelation(file.pairs.begin(), file.pairs.end()));
            // Report in file order rather than token order.
            Ground g(file.ground);
            std::vector<Pair> pairs(closed.begin(), closed.end());
            std::sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
                return std::pair(g.index_of(a.first), g.index_of(a.second)) <
                       std::pair(g.index_of(b.first), g.index_of(b.second));
            });
            ctx.print_pairs(pairs, " < ");
        };
    });

    // linearize
    auto* linearize_cmd = app.add_subcommand("linearize", "Print one linear extension");
    linearize_cmd->add_option("file", relation_path, "Relation file")->required();
    add_policy(linearize_cmd);
    linearize_cmd->callback([&] {
        action = [&](Context& ctx) {
            auto policy = TieBreakPolicy::parse(policy_spec);
            ctx.print_order(linear_extension(ctx.poset(relation_path), policy));
        };
    });

    // szpilrajn
    std::vector<std::string> force;
    auto* szpilrajn_cmd = app.add_subcommand("szpilrajn", "Linear extension, optionally forcing a < b for incomparable a, b");
    szpilrajn_cmd->add_option("file", relation_path, "Relation file")->required();
    szpilrajn_cmd->add_option("--force", force, "Force the first element before the second")->expected(2);
    add_policy(szpilrajn_cmd);
    szpilrajn_cmd->callback([&] {
        action = [&](Context& ctx) {
            auto policy = TieBreakPolicy::parse(policy_spec);
            std::optional<ForcedPair> forced;
            if (!force.empty()) forced = ForcedPair{token(force[0]), token(force[1])};
            auto cert = szpilrajn(ctx.poset(relation_path), forced, policy);
            ctx.print_order(cert.output_order);
        };
    });

    // enumerate
    std::string limit_text;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Print every linear extension in canonical order");
    enumerate_cmd->add_option("file", relation_path, "Relation file")->required();
    enumerate_cmd->add_option("--limit", limit_text, "Maximum number of extensions (overrides ORDEXT_ENUM_LIMIT)");
    enumerate_cmd->callback([&] {
        action = [&](Context& ctx) {
            std::size_t limit = kDefaultEnumerationLimit;
            if (!limit_text.empty()) {
                limit = parse_count(limit_text, "--limit");
            } else if (env.enum_limit) {
                limit = parse_count(*env.enum_limit, "ORDEXT_ENUM_LIMIT");
            }
            auto result = enumerate_linear_extensions(ctx.poset(relation_path), limit);
            for (std::size_t i = 0; i < result.orders.size(); ++i) {
                if (i && !ctx.machine()) ctx.out() << '\n';
                ctx.print_order(result.orders[i]);
            }
            if (result.truncated) ctx.err() << "note: output truncated at " << limit << " extensions\n";
        };
    });

    // count
    std::string cap_text;
    auto* count_cmd = app.add_subcommand("count", "Print the number of linear extensions");
    count_cmd->add_option("file", relation_path, "Relation file")->required();
    count_cmd->add_option("--cap", cap_text, "Largest ground size accepted (at most 64)");
    count_cmd->callback([&] {
        action = [&](Context& ctx) {
            std::size_t cap = cap_text.empty() ? kDefaultCountCap : parse_count(cap_text, "--cap");
            ctx.out() << count_linear_extensions(ctx.poset(relation_path), cap) << '\n';
        };
    });

    // incomparable
    std::vector<std::string> pair;
    auto* incomparable_cmd = app.add_subcommand("incomparable", "List incomparable pairs, or test one pair");
    incomparable_cmd->add_option("file", relation_path, "Relation file")->required();
    incomparable_cmd->add_option("--pair", pair, "Only report whether these two elements are comparable")->expected(2);
    incomparable_cmd->callback([&] {
        action = [&](Context& ctx) {
            Poset p = ctx.poset(relation_path);
            if (pair.empty()) {
                ctx.print_pairs(incomparable_pairs(p), " || ");
                return;
            }
            bool comparable = is_comparable(p, token(pair[0]), token(pair[1]));
            if (ctx.machine()) {
                ctx.out() << (comparable ? 1 : 0) << '\n';
            } else {
                ctx.out() << pair[0] << " and " << pair[1] << " are " << (comparable ? "comparable" : "incomparable")
                          << '\n';
            }
        };
    });

    // bipartition
    std::string ground_path, a_path, b_path;
    auto* bipartition_cmd = app.add_subcommand("bipartition", "Total order placing all of A before all of B");
    bipartition_cmd->add_option("ground", ground_path, "Ground elements, one per line")->required();
    bipartition_cmd->add_option("a", a_path, "Subset A")->required();
    bipartition_cmd->add_option("b", b_path, "Subset B")->required();
    add_policy(bipartition_cmd);
    bipartition_cmd->callback([&] {
        action = [&](Context& ctx) {
            auto policy = TieBreakPolicy::parse(policy_spec);
            ctx.print_order(bipartition_order(ctx.subset(ground_path), ctx.subset(a_path), ctx.subset(b_path), policy));
        };
    });

    // blocks
    std::string partition_path;
    auto* blocks_cmd = app.add_subcommand("blocks", "Total order in which partition blocks are ordered intervals");
    blocks_cmd->add_option("ground", ground_path, "Ground elements, one per line")->required();
    blocks_cmd->add_option("partition", partition_path, "Blocks separated by '---' lines")->required();
    add_policy(blocks_cmd);
    blocks_cmd->callback([&] {
        action = [&](Context& ctx) {
            auto policy = TieBreakPolicy::parse(policy_spec);
            auto partition = ctx.read(partition_path, [](std::istream& s) { return parse_partition(s); });
            ctx.print_order(partition_block_order(ctx.subset(ground_path), partition, policy));
        };
    });

    // interleave
    std::string bijection_path, domain_path, codomain_path;
    auto* interleave_cmd = app.add_subcommand("interleave", "Interleave Y with its image so that X is strictly dense in Y");
    interleave_cmd->add_option("bijection", bijection_path, "Lines 'y -> x'")->required();
    interleave_cmd->add_option("--domain", domain_path, "Y, one per line (default: left sides in file order)");
    interleave_cmd->add_option("--codomain", codomain_path, "X, one per line (default: right sides in file order)");
    add_policy(interleave_cmd);
    interleave_cmd->callback([&] {
        action = [&](Context& ctx) {
            auto policy = TieBreakPolicy::parse(policy_spec);
            Bijection phi(ctx.read(bijection_path, [](std::istream& s) { return parse_bijection(s); }));
            auto y = domain_path.empty() ? phi.domain() : ctx.subset(domain_path);
            auto x = codomain_path.empty() ? phi.codomain() : ctx.subset(codomain_path);
            ctx.print_order(dense_interleave(y, x, phi, policy));
        };
    });

    // dense-check
    std::string order_path, t1_path, t2_path;
    bool non_strict = false;
    auto* dense_cmd = app.add_subcommand("dense-check", "Test whether T1 is dense in T2 under a total order");
    dense_cmd->add_option("order", order_path, "The total order, one element per line")->required();
    dense_cmd->add_option("t1", t1_path, "Subset T1")->required();
    dense_cmd->add_option("t2", t2_path, "Subset T2")->required();
    dense_cmd->add_flag("--non-strict", non_strict, "Allow the witness to coincide with an endpoint");
    dense_cmd->callback([&] {
        action = [&](Context& ctx) {
            LinearOrder order = order_from_enumeration(ctx.subset(order_path));
            auto gap = density_gap(ctx.subset(t1_path), ctx.subset(t2_path), order, !non_strict);
            if (ctx.machine()) {
                ctx.out() << (gap ? 0 : 1) << '\n';
            } else if (!gap) {
                ctx.out() << "dense\n";
            } else {
                ctx.out() << "not dense: no element of T1 " << (non_strict ? "weakly " : "") << "between " << gap->first
                          << " and " << gap->second << '\n';
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return kUsageError;
    }

    Context ctx(in, out, err, machine);
    try {
        action(ctx);
    } catch (const OrderError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const FileParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

} // namespace ordext::cli
