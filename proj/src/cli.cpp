#include "perank/cli.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "perank/errors.hpp"
#include "perank/json_io.hpp"
#include "perank/linalg.hpp"
#include "perank/numtheory.hpp"
#include "perank/regular.hpp"

namespace perank {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "json";
    std::int64_t seed = 12345;
    std::int64_t budget = kDefaultTupleBudget;
    bool strict = false;
};

PeriodicSequence sequence_from(const std::string& text, bool strict) {
    PeriodicSequence s{parse_period(text)};
    if (strict && s.was_reduced())
        throw std::domain_error("period is not minimal; it reduces to " + format_period(s.period()));
    return s;
}

std::int64_t parse_int(const std::string& text) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::domain_error("not an integer: '" + text + "'");
    }
    if (used != text.size()) throw std::domain_error("not an integer: '" + text + "'");
    return v;
}

// "N" or "A..B", inclusive.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = parse_int(text);
        return {v, v};
    }
    const std::int64_t lo = parse_int(text.substr(0, dots));
    const std::int64_t hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::domain_error("empty range: " + text);
    return {lo, hi};
}

Framework required_framework(const std::string& name) {
    const auto fw = parse_framework(name);
    if (!fw) throw std::domain_error("unknown framework '" + name + "' (expected automatic, cr, or regular)");
    return *fw;
}

std::string rank_anchor(Framework fw) {
    switch (fw) {
        case Framework::automatic: return "kernel-cardinality";
        case Framework::cr: return "minimal-recurrence-order";
        case Framework::regular: return "kernel-span-dimension";
    }
    throw std::logic_error("unreachable framework");
}

// Positions of Z_ell grouped by witness value; the orbit partition the
// witness was built from.
std::vector<std::vector<std::int64_t>> orbits_of(const PeriodicSequence& w) {
    std::vector<std::vector<std::int64_t>> orbits;
    for (std::int64_t n = 0; n < w.ell(); ++n) {
        const std::size_t label = static_cast<std::size_t>(w.term(n));
        if (orbits.size() <= label) orbits.resize(label + 1);
        orbits[label].push_back(n);
    }
    return orbits;
}

std::string orbits_text(const std::vector<std::vector<std::int64_t>>& orbits) {
    std::string out;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (i) out += ",";
        out += "{" + format_period(orbits[i]) + "}";
    }
    return out;
}

// Regular rank recomputed with the kernel rows in a random order; rank
// must not depend on BFS discovery order.
std::int64_t shuffled_regular_rank(const PeriodicSequence& s, std::int64_t k, std::mt19937_64& rng) {
    const Kernel ker = kernel(s, k);
    std::vector<std::size_t> order(ker.elements.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    IntMatrix m(order.size(), static_cast<std::size_t>(s.ell()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < ker.elements[order[i]].values.size(); ++j)
            m.at(i, j) = Int128(ker.elements[order[i]].values[j]);
    return static_cast<std::int64_t>(rank(std::move(m)));
}

// Largest alphabet in [2, 4] whose tuple space fits the per-point cap;
// the default verify grid stays exhaustive but small. An explicit
// --alphabet bypasses this.
std::int64_t choose_alphabet(std::int64_t ell, std::int64_t budget) {
    const std::int64_t cap = std::min<std::int64_t>(budget, 100000);
    for (std::int64_t a = 4; a >= 2; --a) {
        std::int64_t total = 1;
        bool fits = true;
        for (std::int64_t i = 0; i < ell && fits; ++i) {
            if (total > cap / a) fits = false;
            total *= a;
        }
        if (fits && total <= cap) return a;
    }
    throw resource_error("no alphabet of size >= 2 fits the enumeration cap at ell = " + std::to_string(ell));
}

void emit(std::ostream& out, const Common& common, const json& j, const std::function<void()>& text) {
    if (common.format == "dot") throw std::domain_error("--format dot applies only to dfao");
    if (common.format == "text")
        text();
    else
        out << dump_json(j);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ranks, magic numbers, and witnesses for periodic integer sequences"};
    app.name("perank");
    app.require_subcommand(1);

    Common common;
    app.add_option("--format", common.format, "output format: json, text, or dot (dfao only)")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--seed", common.seed, "seed for the randomized re-checks in verify");
    app.add_option("--budget", common.budget, "enumeration budget, in tuples");
    app.add_flag("--strict", common.strict, "reject period inputs that are not minimal");

    std::function<int()> action;

    // rank
    std::string rank_period, rank_framework;
    std::int64_t rank_k = 0;
    auto* rank_cmd = app.add_subcommand("rank", "rank of one sequence under one framework");
    rank_cmd->fallthrough();
    rank_cmd->add_option("--period", rank_period, "comma-separated period, e.g. 0,1,2,3,4,5")->required();
    rank_cmd->add_option("--framework", rank_framework, "automatic, cr, or regular")->required();
    auto* rank_k_opt = rank_cmd->add_option("--k", rank_k, "base (automatic and regular only)");
    rank_cmd->callback([&] {
        action = [&]() -> int {
            const Framework fw = required_framework(rank_framework);
            if (fw == Framework::cr && rank_k_opt->count() > 0)
                throw std::domain_error("--k applies only to the automatic and regular frameworks");
            if (fw != Framework::cr && rank_k_opt->count() == 0)
                throw std::domain_error("--k is required for the " + framework_name(fw) + " framework");
            const PeriodicSequence s = sequence_from(rank_period, common.strict);
            std::int64_t value = 0;
            switch (fw) {
                case Framework::automatic: value = rank_automatic(s, rank_k); break;
                case Framework::cr: value = rank_cr(s); break;
                case Framework::regular: value = rank_regular(s, rank_k); break;
            }
            json j{{"paper_anchor", rank_anchor(fw)}, {"framework", framework_name(fw)},
                   {"period", s.period()},           {"ell", s.ell()},
                   {"input_reduced", s.was_reduced()}, {"rank", value}};
            if (fw == Framework::cr)
                j["k"] = nullptr;
            else
                j["k"] = rank_k;
            emit(out, common, j, [&] {
                out << framework_name(fw) << " rank of (" << format_period(s.period()) << ")";
                if (fw != Framework::cr) out << " in base " << rank_k;
                out << ": " << value << "\n";
            });
            return 0;
        };
    });

    // kernel
    std::string kernel_period;
    std::int64_t kernel_k = 0;
    auto* kernel_cmd = app.add_subcommand("kernel", "k-kernel of a sequence");
    kernel_cmd->fallthrough();
    kernel_cmd->add_option("--period", kernel_period, "comma-separated period")->required();
    kernel_cmd->add_option("--k", kernel_k, "base")->required();
    kernel_cmd->callback([&] {
        action = [&]() -> int {
            const PeriodicSequence s = sequence_from(kernel_period, common.strict);
            const Kernel ker = kernel(s, kernel_k);
            emit(out, common, kernel_json(ker), [&] {
                out << "kernel of (" << format_period(s.period()) << ") in base " << kernel_k << ": "
                    << ker.elements.size() << " elements\n";
                for (const KernelElement& e : ker.elements)
                    out << "  s(" << e.c << "n+" << e.r << "): " << format_period(e.values) << "\n";
            });
            return 0;
        };
    });

    // dfao
    std::string dfao_period;
    std::int64_t dfao_k = 0;
    auto* dfao_cmd = app.add_subcommand("dfao", "minimal automaton with output");
    dfao_cmd->fallthrough();
    dfao_cmd->add_option("--period", dfao_period, "comma-separated period")->required();
    dfao_cmd->add_option("--k", dfao_k, "base")->required();
    dfao_cmd->callback([&] {
        action = [&]() -> int {
            const PeriodicSequence s = sequence_from(dfao_period, common.strict);
            const Dfao d = build_dfao(s, dfao_k);
            if (common.format == "dot")
                out << dfao_to_dot(d);
            else if (common.format == "json")
                out << dump_json(dfao_json(d));
            else
                throw std::domain_error("dfao supports --format dot or json");
            return 0;
        };
    });

    // magic
    std::string magic_framework;
    std::int64_t magic_ell = 0, magic_k = 0, magic_alphabet = 4;
    bool magic_witnesses = false, magic_empirical = false;
    auto* magic_cmd = app.add_subcommand("magic", "muggle/magic values for one framework");
    magic_cmd->fallthrough();
    magic_cmd->add_option("--framework", magic_framework, "automatic, cr, or regular")->required();
    magic_cmd->add_option("--ell", magic_ell, "period length")->required();
    auto* magic_k_opt = magic_cmd->add_option("--k", magic_k, "base (automatic and regular only)");
    magic_cmd->add_flag("--witnesses", magic_witnesses, "attach a witness period per muggle value");
    magic_cmd->add_flag("--empirical", magic_empirical, "enumerate observed ranks instead of the closed form");
    magic_cmd->add_option("--alphabet", magic_alphabet, "alphabet size for --empirical (default 4)");
    magic_cmd->callback([&] {
        action = [&]() -> int {
            const Framework fw = required_framework(magic_framework);
            if (fw == Framework::cr) {
                if (magic_k_opt->count() > 0) throw std::domain_error("--k applies only to the automatic and regular frameworks");
                if (magic_empirical)
                    throw std::domain_error("the constant-recursive characterization is closed-form for every ell; "
                                            "--empirical applies to automatic and regular");
                const CrMuggleReport r = muggle_report_cr(magic_ell);
                emit(out, common, cr_report_json(r, magic_witnesses), [&] {
                    out << "cr ell=" << r.ell << " muggles=" << format_period(r.muggles)
                        << " magics=" << (r.magics.empty() ? "-" : format_period(r.magics)) << "\n";
                });
                return 0;
            }
            if (magic_k_opt->count() == 0)
                throw std::domain_error("--k is required for the " + framework_name(fw) + " framework");
            if (magic_empirical) {
                const AutomaticMuggleReport r = empirical_report(fw, magic_k, magic_ell, magic_alphabet, common.budget);
                emit(out, common, automatic_report_json(r, framework_name(fw), magic_witnesses), [&] {
                    out << framework_name(fw) << " k=" << r.k << " ell=" << r.ell
                        << " observed=" << format_period(r.muggles) << " (empirical, alphabet " << magic_alphabet
                        << ")\n";
                });
                return 0;
            }
            if (fw == Framework::automatic) {
                const AutomaticMuggleReport r = muggle_report_automatic(magic_k, magic_ell);
                emit(out, common, automatic_report_json(r, "automatic", magic_witnesses), [&] {
                    out << "automatic k=" << r.k << " ell=" << r.ell << " muggles=" << format_period(r.muggles)
                        << " magics=" << (r.magics.empty() ? "-" : format_period(r.magics)) << "\n";
                });
            } else {
                const CrMuggleReport r = muggle_report_regular(magic_k, magic_ell);
                emit(out, common, regular_report_json(r, magic_k, magic_witnesses), [&] {
                    out << "regular k=" << magic_k << " ell=" << r.ell << " muggles=" << format_period(r.muggles)
                        << " magics=" << (r.magics.empty() ? "-" : format_period(r.magics)) << "\n";
                });
            }
            return 0;
        };
    });

    // witness
    std::string witness_framework, witness_divisors;
    std::int64_t witness_k = 0, witness_ell = 0, witness_d = 0;
    auto* witness_cmd = app.add_subcommand("witness", "construct a witness for one muggle value");
    witness_cmd->fallthrough();
    witness_cmd->add_option("--framework", witness_framework, "automatic, cr, or regular")->required();
    auto* witness_k_opt = witness_cmd->add_option("--k", witness_k, "base");
    auto* witness_ell_opt = witness_cmd->add_option("--ell", witness_ell, "period length (automatic)");
    auto* witness_d_opt = witness_cmd->add_option("--d", witness_d, "divisor of ord_ell(k) (automatic)");
    auto* witness_div_opt = witness_cmd->add_option("--divisors", witness_divisors, "divisor set, e.g. 3,5 (cr and regular)");
    witness_cmd->callback([&] {
        action = [&]() -> int {
            const Framework fw = required_framework(witness_framework);
            if (fw == Framework::automatic) {
                if (!witness_k_opt->count() || !witness_ell_opt->count() || !witness_d_opt->count())
                    throw std::domain_error("automatic witnesses need --k, --ell, and --d");
                if (witness_div_opt->count()) throw std::domain_error("--divisors applies to cr and regular witnesses");
                const PeriodicSequence w = witness_automatic(witness_k, witness_ell, witness_d);
                const auto orbits = orbits_of(w);
                json jorbits = json::array();
                for (const auto& orbit : orbits) jorbits.push_back(orbit);
                const json j{{"paper_anchor", "orbit-partition-witness"},
                             {"framework", "automatic"},
                             {"k", witness_k},
                             {"ell", witness_ell},
                             {"d", witness_d},
                             {"rank", witness_d * witness_ell},
                             {"orbits", jorbits},
                             {"period", w.period()}};
                emit(out, common, j, [&] {
                    out << "automatic witness k=" << witness_k << " ell=" << witness_ell << " d=" << witness_d
                        << ": period (" << format_period(w.period()) << "), rank " << witness_d * witness_ell
                        << ", orbits " << orbits_text(orbits) << "\n";
                });
                return 0;
            }
            if (!witness_div_opt->count())
                throw std::domain_error(framework_name(fw) + " witnesses need --divisors");
            if (witness_ell_opt->count() || witness_d_opt->count())
                throw std::domain_error("--ell/--d apply to automatic witnesses");
            if (fw == Framework::cr && witness_k_opt->count())
                throw std::domain_error("--k applies only to the automatic and regular frameworks");
            if (fw == Framework::regular && !witness_k_opt->count())
                throw std::domain_error("regular witnesses need --k");
            const std::vector<std::int64_t> ds = parse_period(witness_divisors);
            const PeriodicSequence w = witness_cr(ds);
            IntPolynomial chi = IntPolynomial::one();
            for (std::int64_t dv : ds) chi = chi * cyclotomic(dv);
            std::vector<std::int64_t> coeffs;
            for (const Int128& c : chi.coeffs()) coeffs.push_back(c.to_int64());
            json j{{"paper_anchor", "cyclotomic-impulse-witness"},
                   {"framework", framework_name(fw)},
                   {"divisors", ds},
                   {"ell", w.ell()},
                   {"rank", chi.degree()},
                   {"char_poly", chi.str()},
                   {"char_poly_coeffs", coeffs},
                   {"period", w.period()}};
            if (fw == Framework::regular) {
                if (rank_regular(w, witness_k) != chi.degree())
                    throw std::logic_error("witness failed its regular-rank verification");
                j["k"] = witness_k;
            }
            emit(out, common, j, [&] {
                out << framework_name(fw) << " witness divisors {" << format_period(ds) << "}: period ("
                    << format_period(w.period()) << "), rank " << chi.degree() << ", char poly " << chi.str()
                    << "\n";
            });
            return 0;
        };
    });

    // verify
    std::string verify_framework, verify_k = "2..5", verify_ell = "2..10";
    std::int64_t verify_alphabet = 0;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem-vs-observation diffs over a grid");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--framework", verify_framework, "restrict to one framework");
    verify_cmd->add_option("--k", verify_k, "base or base range, e.g. 3 or 2..5");
    verify_cmd->add_option("--ell", verify_ell, "period length or range, e.g. 7 or 2..15");
    verify_cmd->add_option("--alphabet", verify_alphabet, "fixed alphabet size (default: adaptive per ell)");
    verify_cmd->callback([&] {
        action = [&]() -> int {
            if (common.format == "dot") throw std::domain_error("--format dot applies only to dfao");
            std::vector<Framework> frameworks;
            if (verify_framework.empty())
                frameworks = {Framework::automatic, Framework::cr, Framework::regular};
            else
                frameworks = {required_framework(verify_framework)};
            const auto [k_lo, k_hi] = parse_range(verify_k);
            const auto [ell_lo, ell_hi] = parse_range(verify_ell);

            std::mt19937_64 rng(static_cast<std::uint64_t>(common.seed));
            json points = json::array();
            std::int64_t violations = 0, shuffle_checks = 0;
            bool witnesses_ok = true;

            auto run_point = [&](Framework fw, std::int64_t k, std::int64_t ell) {
                const std::int64_t alphabet =
                    verify_alphabet > 0 ? verify_alphabet : choose_alphabet(ell, common.budget);
                const DiffReport rep = diff_report(fw, k, ell, alphabet, common.budget);
                violations += static_cast<std::int64_t>(rep.soundness_violations.size());
                points.push_back(diff_report_json(rep));
                if (common.format == "text")
                    out << framework_name(fw) << (fw == Framework::cr ? "" : " k=" + std::to_string(k))
                        << " ell=" << ell << " alphabet=" << alphabet
                        << (rep.has_prediction ? "" : " (empirical)")
                        << (rep.soundness_violations.empty() ? " ok" : " VIOLATION") << "\n";
                if (fw == Framework::regular && rep.has_prediction) {
                    // Randomized re-check: regular rank must not depend on
                    // the kernel row order.
                    for (const auto& [value, entry] : muggle_report_cr(ell).witnesses) {
                        if (shuffled_regular_rank(entry.second, k, rng) != value) witnesses_ok = false;
                        ++shuffle_checks;
                    }
                }
            };

            for (Framework fw : frameworks) {
                if (fw == Framework::cr) {
                    for (std::int64_t ell = ell_lo; ell <= ell_hi; ++ell) run_point(fw, 0, ell);
                } else {
                    for (std::int64_t k = k_lo; k <= k_hi; ++k)
                        for (std::int64_t ell = ell_lo; ell <= ell_hi; ++ell) run_point(fw, k, ell);
                }
            }

            const bool pass = violations == 0 && witnesses_ok;
            json j{{"paper_anchor", "soundness-and-witness-verification"},
                   {"budget", common.budget},
                   {"seed", common.seed},
                   {"alphabet_mode", verify_alphabet > 0 ? json(verify_alphabet) : json("adaptive")},
                   {"points", points},
                   {"points_total", points.size()},
                   {"shuffle_checks", shuffle_checks},
                   {"violations_total", violations},
                   {"pass", pass}};
            emit(out, common, j, [&] {
                out << "points=" << points.size() << " violations=" << violations
                    << " shuffle_checks=" << shuffle_checks << (pass ? " pass" : " FAIL") << "\n";
            });
            return pass ? 0 : 1;
        };
    });

    // table
    std::string table_framework, table_ell;
    std::int64_t table_k = 3;
    auto* table_cmd = app.add_subcommand("table", "summary tables for documentation");
    table_cmd->fallthrough();
    table_cmd->add_option("--framework", table_framework, "automatic or cr")->required();
    table_cmd->add_option("--k", table_k, "base (automatic; default 3)");
    auto* table_ell_opt = table_cmd->add_option("--ell", table_ell, "ell (automatic, default 7) or range (cr, default 2..15)");
    table_cmd->callback([&] {
        action = [&]() -> int {
            if (common.format == "dot") throw std::domain_error("--format dot applies only to dfao");
            const Framework fw = required_framework(table_framework);
            if (fw == Framework::automatic) {
                const std::int64_t ell = table_ell_opt->count() ? parse_range(table_ell).first : 7;
                const AutomaticMuggleReport rep = muggle_report_automatic(table_k, ell);
                json rows = json::array();
                if (common.format == "text") out << "d | rank | orbits | period\n";
                for (const std::int64_t muggle : rep.muggles) {
                    const PeriodicSequence& w = rep.witnesses.at(muggle);
                    const auto orbits = orbits_of(w);
                    json jorbits = json::array();
                    for (const auto& orbit : orbits) jorbits.push_back(orbit);
                    rows.push_back(json{{"d", muggle / ell}, {"rank", muggle}, {"orbits", jorbits}, {"period", w.period()}});
                    if (common.format == "text")
                        out << muggle / ell << " | " << muggle << " | " << orbits_text(orbits) << " | ("
                            << format_period(w.period()) << ")\n";
                }
                if (common.format != "text")
                    out << dump_json(json{{"paper_anchor", "automatic-witness-table"},
                                          {"framework", "automatic"},
                                          {"k", table_k},
                                          {"ell", ell},
                                          {"rows", rows}});
                return 0;
            }
            if (fw != Framework::cr) throw std::domain_error("table supports the automatic and cr frameworks");
            const auto [lo, hi] = table_ell_opt->count() ? parse_range(table_ell) : std::pair<std::int64_t, std::int64_t>{2, 15};
            json rows = json::array();
            if (common.format == "text") out << "ell | muggles | magics\n";
            for (std::int64_t ell = lo; ell <= hi; ++ell) {
                const CrMuggleReport rep = muggle_report_cr(ell);
                rows.push_back(json{{"ell", ell}, {"muggles", rep.muggles}, {"magics", rep.magics}});
                if (common.format == "text")
                    out << ell << " | " << format_period(rep.muggles) << " | "
                        << (rep.magics.empty() ? "-" : format_period(rep.magics)) << "\n";
            }
            if (common.format != "text")
                out << dump_json(json{{"paper_anchor", "constant-recursive-muggle-table"},
                                      {"framework", "cr"},
                                      {"rows", rows}});
            return 0;
        };
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!action) return 2;
        return action();
    } catch (const unsupported_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::overflow_error& e) {
        err << "arithmetic range: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace perank
