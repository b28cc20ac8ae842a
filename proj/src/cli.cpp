#include "glmn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "glmn/filtration.hpp"
#include "glmn/parser.hpp"
#include "glmn/repro.hpp"

namespace glmn {

namespace {

using nlohmann::json;

struct Options {
    int m = 1, n = 1;
    unsigned characteristic = 0;
    std::string format = "text";

    bool json_out() const { return format == "json"; }
    RingSpec ring() const { return RingSpec(m, n, characteristic); }
};

SuperWeight parse_lambda(const std::string& text, int m, int n) {
    json j = json::parse(text);
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array())
        throw Error("lambda must look like [[2,0],[1]]");
    std::vector<int> plus = j[0].get<std::vector<int>>();
    std::vector<int> minus = j[1].get<std::vector<int>>();
    if (static_cast<int>(plus.size()) != m || static_cast<int>(minus.size()) != n)
        throw Error("lambda halves must have lengths m and n");
    return SuperWeight{GLWeight(std::move(plus)), GLWeight(std::move(minus))};
}

json weight_json(const SuperWeight& w) { return json::array({w.plus.entries(), w.minus.entries()}); }

json table_json(const TableReport& rep) {
    json cells = json::array();
    for (auto& c : rep.cells) {
        json e = {{"cell", c.cell}, {"pass", c.pass}};
        if (!c.pass) {
            e["expected"] = c.expected_str;
            e["computed"] = c.computed_str;
        }
        cells.push_back(std::move(e));
    }
    return json{{"title", rep.title}, {"pass", rep.all_pass()}, {"cells", std::move(cells)}};
}

int report_table(const TableReport& rep, const Options& opt, std::ostream& out) {
    if (opt.json_out())
        out << table_json(rep).dump(2) << "\n";
    else
        out << rep.text();
    return rep.all_pass() ? 0 : 1;
}

json closure_json(const ClosureReport& rep) {
    json checks = json::array();
    for (auto& c : rep.checks) {
        json e = {{"vector", c.vector},
                  {"derivation", c.derivation},
                  {"status", c.pass && c.even_same_level ? "pass" : "fail"}};
        if (!c.residual.empty()) e["residual"] = c.residual;
        checks.push_back(std::move(e));
    }
    return json{{"lambda", weight_json(rep.lambda)},
                {"lmax", rep.lmax},
                {"checks", std::move(checks)}};
}

int cmd_partitions(const Options& opt, int size, bool diagrams, std::ostream& out) {
    auto parts = list_partitions(opt.m, size);
    if (opt.json_out()) {
        json arr = json::array();
        for (auto& p : parts) arr.push_back(p.padded(opt.m));
        out << arr.dump(2) << "\n";
        return 0;
    }
    for (auto& p : parts) {
        out << p.str(opt.m) << "\n";
        if (diagrams) out << p.diagram();
    }
    return 0;
}

int cmd_weights(const Options& opt, bool super, int r, int rminus, int count,
                std::ostream& out) {
    if (super) {
        auto ws = dk_order_super(opt.m, opt.n, r, rminus, count);
        if (opt.json_out()) {
            json arr = json::array();
            for (auto& w : ws) arr.push_back(weight_json(w));
            out << arr.dump(2) << "\n";
        } else {
            for (auto& w : ws) out << w.str() << "\n";
        }
        return 0;
    }
    auto ws = dk_order_glm(opt.m, r, count);
    if (opt.json_out()) {
        json arr = json::array();
        for (auto& w : ws) arr.push_back(w.entries());
        out << arr.dump(2) << "\n";
    } else {
        for (auto& w : ws) out << w.str() << "\n";
    }
    return 0;
}

int cmd_phistar(const Options& opt, const std::string& expr, std::ostream& out) {
    GenericMatrix gm(opt.ring());
    SuperElem result = gm.phistar(parse_expr(expr, gm));
    if (opt.json_out())
        out << json{{"input", expr}, {"result", result.str()}}.dump(2) << "\n";
    else
        out << result.str() << "\n";
    return 0;
}

int cmd_derive(const Options& opt, const std::string& side, const std::string& pos,
               const std::string& expr, std::ostream& out) {
    auto comma = pos.find(',');
    if (comma == std::string::npos) throw Error("--pos expects k,l");
    Derivation d{side == "left" ? Side::Left : Side::Right,
                 std::stoi(pos.substr(0, comma)), std::stoi(pos.substr(comma + 1))};
    GenericMatrix gm(opt.ring());
    SuperElem result = derive(d, parse_expr(expr, gm));
    if (opt.json_out())
        out << json{{"input", expr}, {"derivation", d.str()}, {"result", result.str()}}.dump(2)
            << "\n";
    else
        out << result.str() << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& what, const std::string& lambda_text,
               int lmax, std::ostream& out) {
    if (what == "tables") {
        GenericMatrix gm(opt.ring());
        TableReport right = verify_right_table(gm), left = verify_left_table(gm);
        if (opt.json_out()) {
            out << json::array({table_json(right), table_json(left)}).dump(2) << "\n";
        } else {
            std::size_t total = right.cells.size() + left.cells.size();
            std::size_t good = total - right.fail_count() - left.fail_count();
            out << good << "/" << total << " cells pass\n";
            if (!right.all_pass()) out << right.text();
            if (!left.all_pass()) out << left.text();
        }
        return right.all_pass() && left.all_pass() ? 0 : 1;
    }
    if (what == "jacobi" || what == "laplace") {
        GenericMatrix gm(opt.ring());
        const int m = opt.m;
        int total = 0, good = 0;
        if (what == "jacobi") {
            for (int u = 1; u <= m; ++u)
                for (int k = 1; k <= m; ++k)
                    for (int v = 1; v <= m; ++v)
                        for (int j = 1; j <= m; ++j) {
                            if (u == k || v == j) continue;
                            ++total;
                            if (gm.jacobi_check(u, j, k, v)) ++good;
                        }
        } else {
            for (int u = 1; u <= m; ++u)
                for (int j = 1; j <= m; ++j)
                    for (int k = 1; k <= m; ++k) {
                        if (k == u || k == j) continue;
                        ++total;
                        if (gm.laplace_check(u, j, k)) ++good;
                    }
        }
        if (opt.json_out())
            out << json{{"identity", what}, {"checked", total}, {"pass", good == total}}.dump(2)
                << "\n";
        else
            out << good << "/" << total << " identities hold\n";
        return good == total ? 0 : 1;
    }
    if (what == "divpow") return report_table(verify_divided_powers(GenericMatrix(opt.ring())), opt, out);
    if (what == "detderiv")
        return report_table(verify_det_derivative(GenericMatrix(opt.ring())), opt, out);
    if (what == "gl11") {
        TableReport l1 = verify_gl11_generator_actions(opt.characteristic);
        std::vector<std::pair<std::pair<int, int>, unsigned>> samples;
        for (auto mu : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}, {3, -1}, {5, -2}})
            samples.emplace_back(mu, opt.characteristic);
        TableReport l2 = verify_gl11_monomial_actions(samples);
        if (opt.json_out()) {
            out << json::array({table_json(l1), table_json(l2)}).dump(2) << "\n";
        } else {
            out << l1.text() << l2.text();
        }
        return l1.all_pass() && l2.all_pass() ? 0 : 1;
    }
    if (what == "closure" || what == "quotient") {
        if (lambda_text.empty()) throw Error("--lambda is required");
        GenericMatrix gm(opt.ring());
        SuperWeight lambda = parse_lambda(lambda_text, opt.m, opt.n);
        if (what == "closure") {
            ClosureReport rep = verify_closure(gm, lambda, lmax);
            if (opt.json_out())
                out << closure_json(rep).dump(2) << "\n";
            else
                out << rep.text();
            return rep.all_pass() ? 0 : 1;
        }
        QuotientReport rep = verify_quotient_iso_dims(gm, lambda, lmax);
        if (opt.json_out())
            out << json{{"lambda", weight_json(lambda)},
                        {"dims", {{"quotient", rep.count}, {"expected", rep.expected}}},
                        {"independent", rep.independent_mod_lower}}
                           .dump(2)
                << "\n";
        else
            out << rep.text() << "\n";
        return rep.pass() ? 0 : 1;
    }
    throw Error("unknown verify target: " + what);
}

json genbidet_json(const GenBidet& g) {
    auto rows = [](const Tableau& t) { return json(t.rows()); };  // row-lists
    return json{{"shape", g.bidet.shape.parts()},
                {"left", rows(g.bidet.left)},
                {"right", rows(g.bidet.right)},
                {"block", g.bidet.block == Block::I11 ? "plus" : "minus"},
                {"det_exp", g.det_exp}};
}

json ev_json(const EvBasisVector& v) {
    return json{{"mu", weight_json(v.mu)},
                {"plus", genbidet_json(v.plus)},
                {"minus", genbidet_json(v.minus)},
                {"expansion", v.expansion.str()}};
}

json cvec_json(const CBasisVector& v) {
    return json{{"mask12", v.mask12},
                {"mask21", v.mask21},
                {"even", ev_json(v.ev)},
                {"level", v.level},
                {"expansion", v.expansion.str()}};
}

int cmd_basis(const Options& opt, const std::string& which, const std::string& lambda_text,
              int lmax, std::ostream& out) {
    if (lambda_text.empty()) throw Error("--lambda is required");
    GenericMatrix gm(opt.ring());
    SuperWeight lambda = parse_lambda(lambda_text, opt.m, opt.n);
    json arr = json::array();
    std::size_t count = 0;
    auto emit_text = [&](const std::string& name, const SuperElem& e) {
        ++count;
        out << name << " = " << e.str() << "\n";
    };
    if (which == "m") {
        for (auto& v : m_leq_basis(gm, lambda))
            opt.json_out() ? (void)(++count, arr.push_back(ev_json(v)))
                           : emit_text(v.str(), v.expansion);
    } else if (which == "c-quotient") {
        for (auto& v : c_quotient_basis(gm, lambda))
            opt.json_out() ? (void)(++count, arr.push_back(cvec_json(v)))
                           : emit_text(v.str(), v.expansion);
    } else if (which == "c-trunc") {
        for (auto& v : c_leq_basis_truncated(gm, lambda, lmax))
            opt.json_out() ? (void)(++count, arr.push_back(cvec_json(v)))
                           : emit_text(v.str(), v.expansion);
    } else {
        throw Error("unknown basis: " + which);
    }
    if (opt.json_out())
        out << json{{"lambda", weight_json(lambda)}, {"count", count}, {"vectors", arr}}.dump(2)
            << "\n";
    return 0;
}

int cmd_repro(const Options& opt, const std::string& only, std::uint64_t seed,
              std::ostream& out) {
    ReproOptions ro;
    ro.only = only;
    ro.extra_char = opt.characteristic;
    ro.seed = seed;
    auto results = run_acceptance(ro);
    if (opt.json_out()) {
        json arr = json::array();
        for (auto& r : results)
            arr.push_back(json{{"id", r.id},
                               {"title", r.title},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
        out << json{{"pass", all_pass(results)}, {"criteria", arr}}.dump(2) << "\n";
    } else {
        for (auto& r : results)
            out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " ("
                << r.detail << ")\n";
        out << (all_pass(results) ? "all criteria pass" : "FAILURES present") << "\n";
    }
    return all_pass(results) ? 0 : 1;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symbolic computation for GL(m|n) filtrations"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto add_ring = [&opt](CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--m", opt.m, "rows of the even block");
        if (with_n) cmd->add_option("--n", opt.n, "rows of the odd block");
        cmd->add_option("--char", opt.characteristic, "coefficient characteristic (0 or prime)");
    };

    // partitions list
    auto* partitions = app.add_subcommand("partitions", "partition listings");
    auto* plist = partitions->add_subcommand("list", "partitions of a size, listing order");
    int size = 0;
    bool diagrams = false;
    plist->add_option("--m", opt.m, "maximum number of parts")->required();
    plist->add_option("--size", size, "size of the partitions")->required();
    plist->add_flag("--diagrams", diagrams, "draw Young diagrams");

    // weights dk-order
    auto* weights = app.add_subcommand("weights", "dominant weight orders");
    auto* dkorder = weights->add_subcommand("dk-order", "explicit order of fixed length");
    int r = 0, rminus = 0, count = 10;
    bool super = false;
    dkorder->add_option("--m", opt.m)->required();
    dkorder->add_option("--r", r, "weight length (plus half for --super)")->required();
    dkorder->add_option("--count", count, "how many to list");
    dkorder->add_option("--n", opt.n, "odd block size (with --super)");
    dkorder->add_option("--rminus", rminus, "minus half length (with --super)");
    dkorder->add_flag("--super", super, "list GL(m|n) weights of bidegree (r|rminus)");

    // phistar
    auto* phistar = app.add_subcommand("phistar", "apply the factorization map");
    std::string expr;
    add_ring(phistar);
    phistar->add_option("--expr", expr, "expression over the even subring")->required();

    // derive
    auto* deriv = app.add_subcommand("derive", "apply a superderivation");
    std::string side = "right", pos;
    add_ring(deriv);
    deriv->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    deriv->add_option("--pos", pos, "position k,l")->required();
    deriv->add_option("--expr", expr, "expression to derive")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification");
    std::string what, lambda_text;
    int lmax = 2;
    verify->add_option("what", what,
                       "tables|jacobi|laplace|divpow|detderiv|gl11|closure|quotient")
        ->required();
    add_ring(verify);
    verify->add_option("--lambda", lambda_text, "weight as [[plus],[minus]]");
    verify->add_option("--lmax", lmax, "truncation level");

    // basis
    auto* basis = app.add_subcommand("basis", "print a basis");
    std::string which;
    basis->add_option("which", which, "m|c-quotient|c-trunc")->required();
    add_ring(basis);
    basis->add_option("--lambda", lambda_text, "weight as [[plus],[minus]]");
    basis->add_option("--lmax", lmax, "truncation level");

    // repro
    auto* repro = app.add_subcommand("repro", "run the verification suite");
    std::string only;
    std::uint64_t seed = 0x5eedULL;
    repro->add_option("--only", only, "filter criteria by substring");
    repro->add_option("--char", opt.characteristic, "also re-run mod p");
    repro->add_option("--seed", seed, "seed for randomized round-trips");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (plist->parsed()) return cmd_partitions(opt, size, diagrams, out);
        if (dkorder->parsed()) return cmd_weights(opt, super, r, rminus, count, out);
        if (phistar->parsed()) return cmd_phistar(opt, expr, out);
        if (deriv->parsed()) return cmd_derive(opt, side, pos, expr, out);
        if (verify->parsed()) return cmd_verify(opt, what, lambda_text, lmax, out);
        if (basis->parsed()) return cmd_basis(opt, which, lambda_text, lmax, out);
        if (repro->parsed()) return cmd_repro(opt, only, seed, out);
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace glmn
