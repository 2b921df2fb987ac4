#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process. Exit status: 0 success, 1 domain error or
// brute/closed discrepancy, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "whitney/whitney.hpp"

namespace whitney::cli {

enum exit_code : int { ok = 0, domain_failure = 1, usage_failure = 2 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a brute-force route and its closed form disagree.
class discrepancy : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<std::string> scalar;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, bool>> checks;

    void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
    void param(std::string key, std::int64_t value) { param(std::move(key), std::to_string(value)); }
};

inline std::string format_text(const OutputRecord& r) {
    if (r.scalar) return *r.scalar + "\n";
    std::vector<std::size_t> width(r.columns.size(), 0);
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
    for (const auto& row : r.rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << "  ";
            out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        out << '\n';
    };
    emit(r.columns);
    for (const auto& row : r.rows) emit(row);
    return out.str();
}

inline std::string format_csv(const OutputRecord& r) {
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c > 0 ? "," : "") << cells[c];
        out << '\n';
    };
    if (r.scalar) {
        out << "value\n" << *r.scalar << '\n';
        return out.str();
    }
    emit(r.columns);
    for (const auto& row : r.rows) emit(row);
    return out.str();
}

inline std::string format_json(const OutputRecord& r) {
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    doc["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) doc["params"][k] = v;
    if (r.scalar) {
        doc["result"] = *r.scalar;
    } else {
        doc["result"]["columns"] = r.columns;
        doc["result"]["rows"] = r.rows;
    }
    if (!r.checks.empty()) {
        doc["checks"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.checks) doc["checks"][k] = v;
    }
    return doc.dump(2) + "\n";
}

inline std::string render(const OutputRecord& r, const std::string& format) {
    if (format == "csv") return format_csv(r);
    if (format == "json") return format_json(r);
    return format_text(r);
}

namespace detail {

inline const std::vector<std::string> builtin_sequences{"naturals", "odd", "even1", "div31", "fibonacci"};

inline FSequence sequence_from_flag(const std::string& name) {
    const bool known = std::find(builtin_sequences.begin(), builtin_sequences.end(), name) !=
                       builtin_sequences.end();
    if (!known && name.rfind("file:", 0) != 0)
        throw usage_error("--seq: unknown sequence '" + name +
                          "' (expected naturals|odd|even1|div31|fibonacci|file:<path>)");
    return FSequence::by_name(name);
}

template <class T>
const T& need(const std::optional<T>& value, const std::string& flag, const std::string& context) {
    if (!value) throw usage_error(flag + " is required for " + context);
    return *value;
}

inline GridMode parse_mode(const std::string& mode) {
    return mode == "weak" ? GridMode::weak : GridMode::strict;
}

// Computes the requested route; for brute also computes the closed form and
// raises a discrepancy if they differ.
inline std::string twin_count(OutputRecord& rec, const std::string& method,
                              const std::function<BigInt()>& closed, const std::function<BigInt()>& brute) {
    if (method == "closed") return to_string(closed());
    const BigInt b = brute();
    const BigInt c = closed();
    rec.checks.emplace_back("brute_equals_closed", b == c);
    if (b != c)
        throw discrepancy("brute=" + to_string(b) + " closed=" + to_string(c));
    return to_string(b);
}

inline std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Whitney, Bell, ballot and F-nomial numbers of layer and cobweb posets", "whitney"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    std::string seq_name = "naturals";
    std::string method = "closed";
    std::string mode = "strict";
    std::string family;
    std::string kind = "second";
    std::string show = "size";
    std::string diff = "none";
    std::string output_path;
    std::optional<std::int64_t> opt_n, opt_k, opt_l, opt_m, opt_levels, gcd_check;
    std::int64_t count = 10;
    std::int64_t max_m = 8;
    bool table = false;

    auto seq_option = [&](CLI::App* sub) {
        sub->add_option("--seq", seq_name, "naturals|odd|even1|div31|fibonacci|file:<path>");
    };
    auto method_option = [&](CLI::App* sub) {
        sub->add_option("--method", method, "closed form, or brute force cross-checked against it")
            ->check(CLI::IsMember({"closed", "brute"}));
    };
    auto mode_option = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "Grid element set")->check(CLI::IsMember({"strict", "weak"}));
    };

    CLI::App* seq_cmd = app.add_subcommand("seq", "List sequence values or check the GCD-morphic property");
    seq_option(seq_cmd);
    seq_cmd->add_option("--count", count, "Number of terms to list")->check(CLI::Range(1, 100000));
    seq_cmd->add_option("--gcd-check", gcd_check, "Check GCD[F_n,F_m] = F_GCD[n,m] for n,m up to this bound");
    add_format(seq_cmd);

    CLI::App* fnomial_cmd = app.add_subcommand("fnomial", "F-nomial coefficient or triangle");
    seq_option(fnomial_cmd);
    fnomial_cmd->add_option("--n", opt_n)->required();
    fnomial_cmd->add_option("--k", opt_k);
    fnomial_cmd->add_flag("--table", table, "Emit the triangle for all rows 0..n");
    add_format(fnomial_cmd);

    CLI::App* catalan_cmd = app.add_subcommand("catalan", "Catalan number");
    catalan_cmd->add_option("--n", opt_n)->required();
    method_option(catalan_cmd);
    add_format(catalan_cmd);

    CLI::App* ballot_cmd = app.add_subcommand("ballot", "0-dominated strings with n zeros and k ones");
    ballot_cmd->add_option("--k", opt_k)->required();
    ballot_cmd->add_option("--n", opt_n)->required();
    method_option(ballot_cmd);
    add_format(ballot_cmd);

    CLI::App* grid_cmd = app.add_subcommand("grid", "Layer grid P_{k,n}: size, ranks or elements");
    grid_cmd->add_option("--k", opt_k)->required();
    grid_cmd->add_option("--n", opt_n)->required();
    mode_option(grid_cmd);
    grid_cmd->add_option("--show", show)->check(CLI::IsMember({"size", "ranks", "elements"}));
    add_format(grid_cmd);

    CLI::App* whitney_cmd = app.add_subcommand("whitney", "Whitney numbers by rank");
    whitney_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"grid", "prefab"}));
    whitney_cmd->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
    whitney_cmd->add_option("--l", opt_l);
    whitney_cmd->add_option("--m", opt_m);
    whitney_cmd->add_option("--n", opt_n);
    mode_option(whitney_cmd);
    seq_option(whitney_cmd);
    add_format(whitney_cmd);

    CLI::App* bell_cmd = app.add_subcommand("bell", "Bell-like numbers");
    bell_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"grid", "prefab"}));
    bell_cmd->add_option("--l", opt_l);
    bell_cmd->add_option("--m", opt_m);
    bell_cmd->add_option("--n", opt_n);
    bell_cmd->add_flag("--table", table, "Prefab only: emit B_0 .. B_n");
    seq_option(bell_cmd);
    add_format(bell_cmd);

    CLI::App* chains_cmd = app.add_subcommand("chains", "Maximal chain counts");
    chains_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"grid", "cobweb"}));
    chains_cmd->add_option("--k", opt_k)->required();
    chains_cmd->add_option("--n", opt_n)->required();
    chains_cmd->add_option("--levels", opt_levels, "Cobweb only: number of levels built (default n)");
    mode_option(chains_cmd);
    method_option(chains_cmd);
    seq_option(chains_cmd);
    add_format(chains_cmd);

    CLI::App* mobius_cmd = app.add_subcommand("mobius", "Möbius values mu(bottom, p) on a grid");
    mobius_cmd->add_option("--l", opt_l)->required();
    mobius_cmd->add_option("--m", opt_m)->required();
    mode_option(mobius_cmd);
    add_format(mobius_cmd);

    CLI::App* dot_cmd = app.add_subcommand("dot", "Hasse diagram in Graphviz DOT");
    dot_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"grid", "cobweb"}));
    dot_cmd->add_option("--levels", opt_levels, "Cobweb only: number of levels");
    dot_cmd->add_option("--k", opt_k);
    dot_cmd->add_option("--n", opt_n);
    mode_option(dot_cmd);
    seq_option(dot_cmd);
    dot_cmd->add_option("--output", output_path, "Write to this file instead of standard output");

    CLI::App* problems_cmd =
        app.add_subcommand("problems", "Whitney tables of all strict grids and their backward differences");
    problems_cmd->add_option("--max-m", max_m)->check(CLI::Range(1, 40));
    problems_cmd->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
    problems_cmd->add_option("--diff", diff, "none, or difference in l or in m")
        ->check(CLI::IsMember({"none", "l", "m"}));
    add_format(problems_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_failure;
    }

    using detail::need;
    using detail::str;
    OutputRecord rec;
    try {
        if (seq_cmd->parsed()) {
            rec.command = "seq";
            const FSequence seq = detail::sequence_from_flag(seq_name);
            rec.param("seq", seq_name);
            if (gcd_check) {
                rec.param("gcd_check", *gcd_check);
                const GcdMorphicReport report = is_gcd_morphic(seq, *gcd_check);
                if (report.holds) {
                    rec.columns = {"holds"};
                    rec.rows.push_back({"1"});
                } else {
                    const auto& w = *report.witness;
                    rec.columns = {"holds", "n", "m", "gcd_of_values", "value_at_gcd"};
                    rec.rows.push_back({"0", str(w.n), str(w.m), to_string(w.gcd_of_values),
                                        to_string(w.value_at_gcd)});
                }
            } else {
                rec.param("count", count);
                rec.columns = {"s", "F_s"};
                for (std::int64_t s = 1; s <= count; ++s) rec.rows.push_back({str(s), to_string(seq.value(s))});
            }
        } else if (fnomial_cmd->parsed()) {
            rec.command = "fnomial";
            const FNomialTable fn(detail::sequence_from_flag(seq_name));
            rec.param("seq", seq_name);
            rec.param("n", *opt_n);
            if (table) {
                rec.param("table", "true");
                rec.columns = {"n", "k", "value"};
                for (std::int64_t n = 0; n <= *opt_n; ++n)
                    for (std::int64_t k = 0; k <= n; ++k) rec.rows.push_back({str(n), str(k), to_string(fn.fnomial(n, k))});
            } else {
                const std::int64_t k = need(opt_k, "--k", "a single fnomial value");
                rec.param("k", k);
                rec.scalar = to_string(fn.fnomial(*opt_n, k));
            }
        } else if (catalan_cmd->parsed()) {
            rec.command = "catalan";
            rec.param("n", *opt_n);
            rec.param("method", method);
            const std::int64_t n = *opt_n;
            rec.scalar = detail::twin_count(rec, method, [&] { return catalan(n); },
                                            [&] { return dominated_strings_brute(n, n); });
        } else if (ballot_cmd->parsed()) {
            rec.command = "ballot";
            rec.param("k", *opt_k);
            rec.param("n", *opt_n);
            rec.param("method", method);
            const std::int64_t k = *opt_k, n = *opt_n;
            rec.scalar = detail::twin_count(rec, method, [&] { return ballot(k, n).count; },
                                            [&] { return dominated_strings_brute(k, n); });
        } else if (grid_cmd->parsed()) {
            rec.command = "grid";
            rec.param("k", *opt_k);
            rec.param("n", *opt_n);
            rec.param("mode", mode);
            rec.param("show", show);
            const GridPoset g = build_grid(*opt_k, *opt_n, detail::parse_mode(mode));
            if (show == "size") {
                const auto size = static_cast<std::int64_t>(g.poset.size());
                if (g.mode == GridMode::strict) {
                    const std::int64_t formula = size_formula(g.k, g.n);
                    rec.checks.emplace_back("size_formula", size == formula);
                    if (size != formula)
                        throw discrepancy("enumerated=" + str(size) + " formula=" + str(formula));
                }
                rec.scalar = str(size);
            } else if (show == "ranks") {
                const RankLabels ranks = rank_function(g.poset);
                bool agrees = true;
                rec.columns = {"l", "m", "rank"};
                for (std::size_t i = 0; i < g.poset.size(); ++i) {
                    const GridElement& e = g.poset.label(i);
                    if (g.mode == GridMode::strict && grid_rank(e) != ranks[i]) agrees = false;
                    rec.rows.push_back({str(e.l), str(e.m), str(ranks[i])});
                }
                if (g.mode == GridMode::strict) {
                    rec.checks.emplace_back("rank_is_l_plus_m_minus_1", agrees);
                    if (!agrees) throw discrepancy("computed ranks differ from l+m-1");
                }
            } else {
                rec.columns = {"l", "m"};
                for (const GridElement& e : g.poset.elements()) rec.rows.push_back({str(e.l), str(e.m)});
            }
        } else if (whitney_cmd->parsed()) {
            rec.command = "whitney";
            rec.param("family", family);
            rec.param("kind", kind);
            if (family == "grid") {
                const std::int64_t l = need(opt_l, "--l", "--family grid");
                const std::int64_t m = need(opt_m, "--m", "--family grid");
                rec.param("l", l);
                rec.param("m", m);
                rec.param("mode", mode);
                const GridPoset g = build_grid(l, m, detail::parse_mode(mode));
                const WhitneyVector w =
                    whitney(g.poset, kind == "first" ? WhitneyKind::first : WhitneyKind::second);
                rec.columns = {"rank", "value"};
                bool agrees = true;
                for (std::size_t r = 0; r < w.values.size(); ++r) {
                    const auto rank = static_cast<std::int64_t>(r);
                    if (kind == "second" && g.mode == GridMode::strict &&
                        (stirling2_grid(rank, l, m) != w.values[r] || stirling2_closed(rank, l, m) != w.values[r]))
                        agrees = false;
                    rec.rows.push_back({str(rank), str(w.values[r])});
                }
                if (kind == "second" && g.mode == GridMode::strict) {
                    rec.checks.emplace_back("slant_count_and_closed_form", agrees);
                    if (!agrees) throw discrepancy("poset Whitney numbers differ from the slant counts");
                }
            } else {
                if (kind == "first")
                    throw usage_error("--kind first is not available for --family prefab");
                const std::int64_t n = need(opt_n, "--n", "--family prefab");
                rec.param("seq", seq_name);
                rec.param("n", n);
                const FNomialTable fn(detail::sequence_from_flag(seq_name));
                const PrefabWhitneyRow row = whitney_prefab_row(fn, n);
                rec.columns = {"k", "value"};
                for (std::size_t k = 0; k < row.values.size(); ++k)
                    rec.rows.push_back({str(static_cast<std::int64_t>(k)), to_string(row.values[k])});
            }
        } else if (bell_cmd->parsed()) {
            rec.command = "bell";
            rec.param("family", family);
            if (family == "grid") {
                const std::int64_t l = need(opt_l, "--l", "--family grid");
                const std::int64_t m = need(opt_m, "--m", "--family grid");
                rec.param("l", l);
                rec.param("m", m);
                const std::int64_t b = bell_grid(l, m);
                const std::int64_t size = size_formula(l, m);
                rec.checks.emplace_back("equals_size", b == size);
                if (b != size) throw discrepancy("bell=" + str(b) + " size=" + str(size));
                rec.scalar = str(b);
            } else {
                const std::int64_t n = need(opt_n, "--n", "--family prefab");
                rec.param("seq", seq_name);
                rec.param("n", n);
                const FNomialTable fn(detail::sequence_from_flag(seq_name));
                if (table) {
                    rec.param("table", "true");
                    const BellSequence bells = bell_f_table(fn, n);
                    rec.columns = {"n", "value"};
                    for (std::size_t i = 0; i < bells.values.size(); ++i)
                        rec.rows.push_back({str(static_cast<std::int64_t>(i)), to_string(bells.values[i])});
                } else {
                    rec.scalar = to_string(bell_f(fn, n));
                }
            }
        } else if (chains_cmd->parsed()) {
            rec.command = "chains";
            rec.param("family", family);
            rec.param("k", *opt_k);
            rec.param("n", *opt_n);
            const std::int64_t k = *opt_k, n = *opt_n;
            if (family == "grid") {
                rec.param("mode", mode);
                rec.param("method", method);
                const GridMode gm = detail::parse_mode(mode);
                rec.scalar = detail::twin_count(
                    rec, method, [&] { return grid_chain_count(k, n, gm, CountMethod::closed); },
                    [&] { return grid_chain_count(k, n, gm, CountMethod::brute); });
            } else {
                const std::int64_t levels = opt_levels.value_or(n);
                rec.param("seq", seq_name);
                rec.param("levels", levels);
                rec.param("method", method);
                const CobwebPoset c = build_cobweb(detail::sequence_from_flag(seq_name), levels);
                rec.scalar = detail::twin_count(
                    rec, method, [&] { return layer_chain_count(c, k, n, CountMethod::closed); },
                    [&] { return layer_chain_count(c, k, n, CountMethod::brute); });
            }
        } else if (mobius_cmd->parsed()) {
            rec.command = "mobius";
            rec.param("l", *opt_l);
            rec.param("m", *opt_m);
            rec.param("mode", mode);
            const GridPoset g = build_grid(*opt_l, *opt_m, detail::parse_mode(mode));
            const RankLabels ranks = rank_function(g.poset);
            const std::vector<std::int64_t> mu = mobius_row(g.poset, bottom_element(g.poset));
            rec.columns = {"l", "m", "rank", "mu"};
            for (std::size_t i = 0; i < g.poset.size(); ++i) {
                const GridElement& e = g.poset.label(i);
                rec.rows.push_back({str(e.l), str(e.m), str(ranks[i]), str(mu[i])});
            }
        } else if (dot_cmd->parsed()) {
            std::string text;
            if (family == "grid") {
                const std::int64_t k = need(opt_k, "--k", "--family grid");
                const std::int64_t n = need(opt_n, "--n", "--family grid");
                const GridPoset g = build_grid(k, n, detail::parse_mode(mode));
                text = to_dot(g.poset, std::nullopt, "grid_" + mode + "_" + str(k) + "_" + str(n));
            } else {
                const std::int64_t levels = need(opt_levels, "--levels", "--family cobweb");
                const FSequence seq = detail::sequence_from_flag(seq_name);
                const CobwebPoset c = build_cobweb(seq, levels);
                if (opt_k.has_value() != opt_n.has_value())
                    throw usage_error("--k and --n must be given together to select a layer");
                if (opt_k) {
                    const auto layer = layer_subposet(c, *opt_k, *opt_n);
                    std::vector<std::int64_t> lv;
                    for (const auto& v : layer.elements()) lv.push_back(v.s);
                    text = to_dot(layer, lv, "cobweb_" + seq.id() + "_" + str(*opt_k) + "_" + str(*opt_n));
                } else {
                    text = to_dot(c.poset, c.levels(), "cobweb_" + seq.id() + "_" + str(levels));
                }
            }
            if (output_path.empty()) {
                out << text;
            } else {
                std::ofstream file(output_path, std::ios::binary);
                if (!file) throw whitney::error("OutputFile", "cannot write '" + output_path + "'");
                file << text;
            }
            return ok;
        } else if (problems_cmd->parsed()) {
            rec.command = "problems";
            rec.param("max_m", max_m);
            rec.param("kind", kind);
            rec.param("diff", diff);
            auto row_of = [&](std::int64_t l, std::int64_t m) {
                if (kind == "first") return stirling1_grid_row(l, m);
                std::vector<std::int64_t> v;
                for (std::int64_t r = 0; r <= l + m - 1; ++r) v.push_back(stirling2_grid(r, l, m));
                return v;
            };
            auto at = [](const std::vector<std::int64_t>& v, std::int64_t r) {
                return r < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(r)] : 0;
            };
            rec.columns = {"l", "m", "rank", "value"};
            for (std::int64_t m = 1; m <= max_m; ++m) {
                for (std::int64_t l = 0; l < m; ++l) {
                    if (diff == "l" && l == 0) continue;
                    if (diff == "m" && m - 1 <= l) continue;
                    const auto here = row_of(l, m);
                    std::vector<std::int64_t> prev;
                    if (diff == "l") prev = row_of(l - 1, m);
                    if (diff == "m") prev = row_of(l, m - 1);
                    for (std::int64_t r = 0; r < static_cast<std::int64_t>(here.size()); ++r)
                        rec.rows.push_back({str(l), str(m), str(r), str(at(here, r) - at(prev, r))});
                }
            }
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_failure;
    } catch (const discrepancy& e) {
        err << "discrepancy in " << rec.command << ": " << e.what() << '\n';
        return domain_failure;
    } catch (const whitney::error& e) {
        err << "error: " << e.what() << '\n';
        return domain_failure;
    } catch (const std::overflow_error& e) {
        err << "error: Overflow: " << e.what() << '\n';
        return domain_failure;
    }

    out << render(rec, format);
    return ok;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace whitney::cli
