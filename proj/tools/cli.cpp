#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json_io.hpp"
#include "mixsym/barquot.hpp"
#include "mixsym/fock.hpp"
#include "mixsym/mixed.hpp"
#include "mixsym/partition.hpp"
#include "mixsym/schur.hpp"

namespace mixsym::cli {

namespace {

struct CaseSelection {
    ExpansionCase expansion_case;
    int m;
};

// --case/--m, or the signed --core shorthand (negative selects case zero;
// core 0 is case one unless --case zero is given).
CaseSelection resolve_case(const std::string& case_text, std::optional<int> m, std::optional<int> core) {
    const std::optional<ExpansionCase> explicit_case = parse_case(case_text);
    if (!case_text.empty() && !explicit_case) throw std::invalid_argument("--case must be 'one' or 'zero'");
    const bool want_one = explicit_case.has_value() && *explicit_case == ExpansionCase::one;
    const bool want_zero = explicit_case.has_value() && *explicit_case == ExpansionCase::zero;
    if (m && core) throw std::invalid_argument("give either --m or --core, not both");
    if (core) {
        if (*core < 0) {
            if (want_one) throw std::invalid_argument("--case one needs --core >= 0");
            return {ExpansionCase::zero, -*core};
        }
        if (*core > 0 && want_zero) {
            throw std::invalid_argument("--case zero needs --core <= 0");
        }
        return {want_zero ? ExpansionCase::zero : ExpansionCase::one, *core};
    }
    if (!explicit_case) throw std::invalid_argument("--case is required unless --core is given");
    if (!m) throw std::invalid_argument("--m (or --core) is required");
    if (*m < 0) throw std::invalid_argument("--m must be non-negative");
    return {*explicit_case, *m};
}

std::string shape_label(char symbol, const std::vector<int>& parts, bool doubled) {
    std::string s(1, symbol);
    s += "_{" + join_parts(parts) + "}";
    if (doubled) s += "(t^(2))";
    return s;
}

std::string factor_label(const ExpansionTerm& term) {
    std::string label;
    if (!term.q_index.empty()) label = shape_label('Q', term.q_index.parts(), false);
    if (!term.s_index.empty()) {
        if (!label.empty()) label += "*";
        label += shape_label('S', term.s_index.parts(), true);
    }
    return label.empty() ? "1" : label;
}

std::string rectangle_label(ExpansionCase c, int m, int n) {
    const auto [rows, cols] = rhs_rectangle(c, m, n);
    return "S_rect(" + std::to_string(rows) + "x" + std::to_string(cols) + ")(t)";
}

void print_header(std::ostream& out, ExpansionCase c, int m, int n) {
    const int core = core_index(c, m);
    out << "case: " << to_string(c) << "\n"
        << "m: " << m << "\n"
        << "n: " << n << "\n"
        << "core: c_" << core << " = (" << bar_core(core).to_string() << ")\n";
}

void print_terms(std::ostream& out, const std::vector<ExpansionTerm>& terms) {
    out << "terms: " << terms.size() << "\n";
    for (const auto& t : terms) {
        out << "  " << (t.sign > 0 ? '+' : '-') << " " << factor_label(t) << "    mu = (" << t.mu.to_string()
            << ")\n";
    }
}

struct SweepResult {
    ExpansionCase expansion_case;
    int m;
    int n;
    std::size_t terms;
    bool equal;
};

std::vector<SweepResult> sweep(int max_m) {
    std::vector<SweepResult> jobs;
    for (ExpansionCase c : {ExpansionCase::one, ExpansionCase::zero}) {
        for (int m = 0; m <= max_m; ++m) {
            for (int n = 0; n <= 2 * m + 3; ++n) jobs.push_back({c, m, n, 0, false});
        }
    }
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const auto report = verify(jobs[k].expansion_case, jobs[k].m, jobs[k].n);
            jobs[k].terms = report.terms.size();
            jobs[k].equal = report.equal;
        }
    };
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return jobs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bar-core combinatorics and mixed S/Q expansion verifier", "mixsym"};
    app.require_subcommand(1);

    // core
    int core_m = 0;
    auto* core_cmd = app.add_subcommand("core", "Print the 4-bar core c_M");
    core_cmd->add_option("M", core_m, "Core index (any integer)")->required();

    // quotient
    std::string parts_text;
    auto* quotient_cmd = app.add_subcommand("quotient", "Charge and 4-bar quotient of a strict partition");
    quotient_cmd->add_option("parts", parts_text, "Strict partition, e.g. \"11,9,6,2,1\"")->required();

    // inverse
    int inv_charge = 0;
    std::string inv_q0, inv_q1;
    auto* inverse_cmd = app.add_subcommand("inverse", "Strict partition with the given charge and quotient");
    inverse_cmd->add_option("--charge", inv_charge)->required();
    inverse_cmd->add_option("--q0", inv_q0, "Strict partition")->required();
    inverse_cmd->add_option("--q1", inv_q1, "Partition")->required();

    // enumerate
    std::string case_text;
    int core_value = 0;
    int ell = 0;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List I_i^ell(c_core)");
    enumerate_cmd->add_option("--case", case_text, "Node color: one or zero")
        ->required()
        ->check(CLI::IsMember({"one", "zero"}));
    enumerate_cmd->add_option("--core", core_value, "Signed core index")->required();
    enumerate_cmd->add_option("--ell", ell, "Number of nodes to add")->required()->check(CLI::NonNegativeNumber);

    // sign / abacus
    auto* sign_cmd = app.add_subcommand("sign", "delta sign of a strict partition over c_core");
    sign_cmd->add_option("parts", parts_text)->required();
    sign_cmd->add_option("--core", core_value, "Signed core index")->required();
    auto* abacus_cmd = app.add_subcommand("abacus", "Draw the 4-bar abacus");
    abacus_cmd->add_option("parts", parts_text)->required();
    abacus_cmd->add_option("--core", core_value, "Signed core index")->required();

    // schur-s / schur-q
    bool t2 = false;
    bool json = false;
    auto* schur_s_cmd = app.add_subcommand("schur-s", "Schur S-function S_lambda(t)");
    schur_s_cmd->add_option("parts", parts_text, "Partition")->required();
    schur_s_cmd->add_flag("--t2", t2, "Substitute t_j -> t_{2j}");
    schur_s_cmd->add_flag("--json", json);
    auto* schur_q_cmd = app.add_subcommand("schur-q", "Schur Q-function Q_lambda(t)");
    schur_q_cmd->add_option("parts", parts_text, "Strict partition")->required();
    schur_q_cmd->add_flag("--json", json);

    // expand / verify
    std::optional<int> opt_m, opt_core;
    int n_value = 0;
    auto add_identity_options = [&](CLI::App* cmd) {
        cmd->add_option("--case", case_text, "one or zero")->check(CLI::IsMember({"one", "zero"}));
        cmd->add_option("--m", opt_m, "Non-negative core size");
        cmd->add_option("--core", opt_core, "Signed core index (shorthand for --case/--m)");
        cmd->add_option("--n", n_value, "Number of added nodes")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--json", json);
    };
    auto* expand_cmd = app.add_subcommand("expand", "Terms of the mixed expansion");
    add_identity_options(expand_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "Check one mixed expansion identity");
    add_identity_options(verify_cmd);

    // verify-all
    int max_m = 0;
    auto* verify_all_cmd = app.add_subcommand("verify-all", "Check both identities for 0<=m<=M, 0<=n<=2m+3");
    verify_all_cmd->add_option("--max-m", max_m)->required()->check(CLI::NonNegativeNumber);

    // fock-check
    std::string fock_case;
    auto* fock_cmd = app.add_subcommand("fock-check", "Compare f_i^ell/ell! |c_core> with the I-set expansion");
    fock_cmd->add_option("--case", fock_case, "one (f_1) or zero (f_0)")
        ->required()
        ->check(CLI::IsMember({"one", "zero"}));
    fock_cmd->add_option("--core", core_value, "Signed core index")->required();
    fock_cmd->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
    fock_cmd->add_flag("--json", json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (*core_cmd) {
            out << bar_core(core_m).to_string() << "\n";
            return kOk;
        }
        if (*quotient_cmd) {
            const auto q = quotient(StrictPartition::parse(parts_text));
            out << "charge: " << q.charge << "\n"
                << "q0: " << q.q0.to_string() << "\n"
                << "q1: " << q.q1.to_string() << "\n";
            return kOk;
        }
        if (*inverse_cmd) {
            out << inverse_quotient(inv_charge, StrictPartition::parse(inv_q0), Partition::parse(inv_q1)).to_string()
                << "\n";
            return kOk;
        }
        if (*enumerate_cmd) {
            const Color c = *parse_case(case_text) == ExpansionCase::one ? Color::one : Color::zero;
            for (const auto& mu : add_set(bar_core(core_value), c, ell)) out << mu.to_string() << "\n";
            return kOk;
        }
        if (*sign_cmd) {
            out << delta_sign(StrictPartition::parse(parts_text), core_value) << "\n";
            return kOk;
        }
        if (*abacus_cmd) {
            const auto ab = abacus(StrictPartition::parse(parts_text), core_value);
            out << render_abacus(ab);
            out << "g: " << abacus_pair_count(ab) << "\n";
            return kOk;
        }
        if (*schur_s_cmd) {
            Polynomial p = schur_s(Partition::parse(parts_text));
            if (t2) p = shift2(p);
            out << (json ? io::polynomial_to_json(p).dump() : p.to_string()) << "\n";
            return kOk;
        }
        if (*schur_q_cmd) {
            const Polynomial p = schur_q(StrictPartition::parse(parts_text));
            out << (json ? io::polynomial_to_json(p).dump() : p.to_string()) << "\n";
            return kOk;
        }
        if (*expand_cmd) {
            const auto sel = resolve_case(case_text, opt_m, opt_core);
            const auto sum = lhs(sel.expansion_case, sel.m, n_value);
            if (json) {
                io::Json terms = io::Json::array();
                for (const auto& t : sum.terms) terms.push_back(io::term_to_json(t));
                out << io::Json{{"case", std::string(to_string(sel.expansion_case))},
                                {"m", sel.m},
                                {"n", n_value},
                                {"core_index", core_index(sel.expansion_case, sel.m)},
                                {"terms", std::move(terms)},
                                {"sum", io::polynomial_to_json(sum.sum)}}
                           .dump()
                    << "\n";
                return kOk;
            }
            print_header(out, sel.expansion_case, sel.m, n_value);
            print_terms(out, sum.terms);
            out << "rhs: " << rectangle_label(sel.expansion_case, sel.m, n_value) << "\n";
            return kOk;
        }
        if (*verify_cmd) {
            const auto sel = resolve_case(case_text, opt_m, opt_core);
            const auto report = verify(sel.expansion_case, sel.m, n_value);
            if (json) {
                out << io::report_to_json(report).dump() << "\n";
            } else {
                print_header(out, sel.expansion_case, sel.m, n_value);
                out << "terms: " << report.terms.size() << "\n"
                    << "rhs: " << rectangle_label(sel.expansion_case, sel.m, n_value) << "\n"
                    << "lhs_size: " << report.lhs.size() << "\n"
                    << "rhs_size: " << report.rhs.size() << "\n";
                if (!report.equal) out << "difference: " << report.difference.to_string() << "\n";
                out << "equal: " << (report.equal ? "true" : "false") << "\n";
            }
            return report.equal ? kOk : kIdentityFails;
        }
        if (*verify_all_cmd) {
            const auto results = sweep(max_m);
            std::size_t failures = 0;
            for (const auto& r : results) {
                out << to_string(r.expansion_case) << " m=" << r.m << " n=" << r.n << " terms=" << r.terms
                    << " equal=" << (r.equal ? "true" : "false") << "\n";
                if (!r.equal) ++failures;
            }
            out << (failures == 0 ? "all " + std::to_string(results.size()) + " identities hold"
                                  : std::to_string(failures) + " of " + std::to_string(results.size()) +
                                        " identities FAIL")
                << "\n";
            return failures == 0 ? kOk : kIdentityFails;
        }
        if (*fock_cmd) {
            const Color c = *parse_case(fock_case) == ExpansionCase::one ? Color::one : Color::zero;
            const auto cmp = lemma_co_compare(c, core_value, ell);
            if (json) {
                out << io::Json{{"case", fock_case},
                                {"core_index", core_value},
                                {"ell", ell},
                                {"action", io::fock_to_json(cmp.action)},
                                {"expected", io::fock_to_json(cmp.expected)},
                                {"equal", cmp.equal}}
                           .dump()
                    << "\n";
            } else {
                const int i = c == Color::one ? 1 : 0;
                out << "f_" << i << "^" << ell << "/" << ell << "! |c_" << core_value << ">:\n"
                    << cmp.action.to_string() << "I-set expansion:\n"
                    << cmp.expected.to_string() << "equal: " << (cmp.equal ? "true" : "false") << "\n";
            }
            return cmp.equal ? kOk : kIdentityFails;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    err << "error: no subcommand\n";
    return kInvalidInput;
}

}  // namespace mixsym::cli
