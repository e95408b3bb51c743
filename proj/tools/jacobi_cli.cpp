// jacobi: exact q-expansions, identity suites and genus computations.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jacobi/jacobi.hpp"

using namespace jacobi;

namespace {

struct Options {
    std::string form, suite, in, z = "1/2";
    std::string qcap;
    long pmax = 2;
    long bound = 13;
    bool json_out = false;
    bool list = false;
};

// --qcap Q keeps the exponents below Q.
long exclusive_cap(const std::string &q, const char *fallback)
{
    const Rat r = parse_rat(q.empty() ? fallback : q);
    if (r < 1)
        throw schema_error("qcap must be at least 1");
    if (!is_integral(r * 24))
        throw schema_error("qcap must lie in the 1/24 lattice");
    return q_units(r) - 1;
}

// Large enough for the elliptic check and the generator decomposition.
long eval_cap(int d) { return 24L * (d + 4); }

int emit_checks(const std::string &title, const std::vector<NamedCheck> &rs, bool as_json)
{
    bool ok = true;
    json arr = json::array();
    for (const auto &[n, c] : rs) {
        ok = ok && c.pass;
        arr.push_back({{"check", n}, {"pass", c.pass}, {"detail", c.detail}});
    }
    if (as_json) {
        std::cout << json{{"suite", title}, {"pass", ok}, {"checks", arr}}.dump(2) << "\n";
    } else {
        for (const auto &[n, c] : rs)
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << n << "  [" << c.detail << "]\n";
        std::cout << title << ": " << (ok ? "all passed" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_expand(const Options &o)
{
    const auto f = named_form(o.form, exclusive_cap(o.qcap, "2"));
    if (o.json_out)
        std::cout << form_to_json(f).dump(2) << "\n";
    else
        std::cout << series_text(f.series);
    return 0;
}

int cmd_check(const Options &o)
{
    if (o.list) {
        for (const auto &s : suites())
            std::cout << s.name << "  " << s.description << "\n";
        return 0;
    }
    std::vector<const Suite *> chosen;
    if (o.suite == "all") {
        for (const auto &s : suites())
            chosen.push_back(&s);
    } else if (const auto *s = find_suite(o.suite)) {
        chosen.push_back(s);
    } else {
        throw schema_error("unknown suite '" + o.suite + "' (try check --list)");
    }
    std::vector<NamedCheck> all;
    for (const auto *s : chosen)
        for (auto &r : run_suite(*s))
            all.push_back({s->name + ": " + r.first, r.second});
    return emit_checks(o.suite, all, o.json_out);
}

int cmd_decompose(const Options &o)
{
    const auto f = form_from_json(read_json_file(o.in));
    const auto p = detail::decompose_any(f);
    if (!p)
        throw math_error("only weight-0 forms (after splitting off phi_0_3half) are decomposed");
    if (o.json_out)
        std::cout << json{{"decomposition", p->to_string()}}.dump(2) << "\n";
    else
        std::cout << p->to_string() << "\n";
    return 0;
}

int print_genus(const GenusResult &r, const Options &o, const json &extra)
{
    const auto e = restrict(r.core, 0, 0).rational();
    const Rat euler = e.coeff(0);
    if (o.json_out) {
        json j = form_to_json(r.core);
        j["decomposition"] = r.decomposition ? r.decomposition->to_string() : "";
        j["euler_at_z0"] = rat_string(euler);
        j["elliptic_check"] = {{"pass", r.elliptic.pass}, {"detail", r.elliptic.detail}};
        j["notes"] = r.notes;
        j.update(extra);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "decomposition: " << (r.decomposition ? r.decomposition->to_string() : "(none)") << "\n";
        std::cout << "value at z=0: " << euler.get_str() << "\n";
        for (const auto &[k, v] : extra.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        std::cout << "elliptic check: " << (r.elliptic.pass ? "pass" : "FAIL") << " (" << r.elliptic.detail << ")\n";
        for (const auto &n : r.notes)
            std::cout << "note: " << n << "\n";
        std::cout << series_text(r.core.series);
    }
    return r.elliptic.pass ? 0 : 1;
}

int cmd_eg(const Options &o)
{
    const auto m = manifold_from_json(read_json_file(o.in));
    const long cap = exclusive_cap(o.qcap, "4");
    auto r = elliptic_genus(m, std::max(cap, eval_cap(m.d)));
    r.core.series = r.core.series.truncated(cap);
    return print_genus(r, o, {{"euler_number", m.euler().get_str()}});
}

int cmd_mwg(const Options &o)
{
    const auto c = chardata_from_json(read_json_file(o.in));
    const long cap = exclusive_cap(o.qcap, "4");
    auto r = mwg(c, std::max(cap, eval_cap(c.d)));
    r.core.series = r.core.series.truncated(cap);
    return print_genus(r, o, {{"theta_over_eta_exponent", r.prefactor_exponent}});
}

int cmd_special(const Options &o)
{
    const long cap = exclusive_cap(o.qcap, "4");
    const auto f = named_form(o.form, cap + 48);
    RestrictedSeries v;
    std::string label;
    if (o.z == "(t+1)/2" || o.z == "(tau+1)/2") {
        v = restrict(f, make_rat(1, 2), make_rat(1, 2), false).value();
        label = "q^(t/4) f(tau, (tau+1)/2) up to the constant e(t/4)";
    } else {
        const Rat z = parse_rat(o.z);
        const auto r = restrict(f, 0, z);
        v = r.value();
        label = "f(tau, " + z.get_str() + ")";
    }
    v = v.truncated(std::min(v.cap(), cap * (kRestrictDen / 24)));
    bool rational = true;
    for (const auto &[e, c] : v.terms())
        rational = rational && c.is_rational();
    if (o.json_out) {
        json arr = json::array();
        for (const auto &[e, c] : v.terms())
            arr.push_back({rat_string(q_rat<kRestrictDen>(e)), rational ? rat_string(c.to_rat()) : c.to_string()});
        std::cout << json{{"value", label}, {"series", arr}}.dump(2) << "\n";
    } else {
        std::cout << label << ":\n";
        if (rational)
            std::cout << series_text(to_rational(v));
        else
            std::cout << series_text(v);
    }
    return 0;
}

int cmd_congruence(const Options &o)
{
    const auto m = manifold_from_json(read_json_file(o.in));
    const auto rs = congruence_report(m, exclusive_cap(o.qcap, "11"));
    bool ok = true;
    json arr = json::array();
    for (const auto &r : rs) {
        ok = ok && r.pass;
        json res = json::array();
        for (const auto &[e, v] : r.residues)
            res.push_back({rat_string(e), v.get_str()});
        arr.push_back({{"claim", r.claim},
                       {"modulus", r.modulus.get_str()},
                       {"constant_modulus", r.constant_modulus.get_str()},
                       {"pass", r.pass},
                       {"residues", res}});
    }
    if (o.json_out) {
        std::cout << json{{"euler_number", m.euler().get_str()}, {"reports", arr}}.dump(2) << "\n";
    } else {
        std::cout << "e(M) = " << m.euler().get_str() << "\n";
        for (const auto &r : rs) {
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.claim;
            for (const auto &[e, v] : r.residues)
                if (v != 0) {
                    std::cout << "  [residue " << v.get_str() << " at q^" << e.get_str() << "]";
                    break;
                }
            std::cout << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_sqeg(const Options &o)
{
    if (o.pmax < 0)
        throw schema_error("pmax must be nonnegative");
    const long cap = exclusive_cap(o.qcap, "2");
    const json j = read_json_file(o.in);
    const long need = sqeg_required_cap(o.pmax, cap);
    LaurentSeries f;
    if (kind_of(j) == "chi")
        f = elliptic_genus(manifold_from_json(j), std::max(need, 24L)).core.series;
    else
        f = form_from_json(j).series;
    const auto z = sqeg_expand(f, o.pmax, cap);
    if (o.json_out) {
        json slices = json::array();
        for (const auto &s : z.slices)
            slices.push_back(series_to_json(s));
        std::cout << json{{"convention", z.convention}, {"slices", slices}}.dump(2) << "\n";
    } else {
        std::cout << "product over " << z.convention << "\n";
        for (long n = 0; n <= z.pmax(); ++n) {
            std::cout << "p^" << n << ":\n";
            std::istringstream lines(series_text(z.slices[static_cast<std::size_t>(n)]));
            for (std::string line; std::getline(lines, line);)
                std::cout << "  " << line << "\n";
        }
    }
    return 0;
}

int cmd_delta2(const Options &o)
{
    const auto s = delta2_expand(o.bound);
    const std::vector<NamedCheck> checks = {{"antisymmetry in l", delta2_antisymmetry(s)},
                                            {"first Fourier-Jacobi coefficient = eta^3 theta", delta2_first_slice(s)}};
    if (o.json_out) {
        json arr = json::array();
        for (const auto &[k, v] : s.coeffs)
            arr.push_back({rat_string(make_rat(k[0], 4)), rat_string(make_rat(k[1], 2)), rat_string(make_rat(k[2], 2)),
                           v.get_str()});
        std::cout << json{{"bound", s.bound}, {"coefficients", arr}}.dump(2) << "\n";
    } else {
        for (const auto &[k, v] : s.coeffs)
            std::cout << "(" << make_rat(k[0], 4).get_str() << ", " << make_rat(k[1], 2).get_str() << ", "
                      << make_rat(k[2], 2).get_str() << "): " << v.get_str() << "\n";
    }
    bool ok = true;
    for (const auto &[n, c] : checks) {
        ok = ok && c.pass;
        std::cerr << (c.pass ? "PASS  " : "FAIL  ") << n << "  [" << c.detail << "]\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Fourier expansions of Jacobi forms, elliptic genera and their identities"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_out, "JSON output");

    auto *expand = app.add_subcommand("expand", "Fourier expansion of a named form");
    expand->add_option("form", o.form, "form name")->required();
    expand->add_option("--qcap", o.qcap, "keep q-exponents below this bound (default 2)");

    auto *check = app.add_subcommand("check", "run an identity suite");
    check->add_option("--suite", o.suite, "suite name, or 'all'");
    check->add_flag("--list", o.list, "list suites");

    auto *decompose = app.add_subcommand("decompose", "express a weight-0 series in the generators");
    decompose->add_option("--in", o.in, "series file")->required();

    auto *eg = app.add_subcommand("eg", "elliptic genus from chi_p data");
    eg->add_option("--in", o.in, "manifold file")->required();
    eg->add_option("--qcap", o.qcap, "q-exponent bound (default 4)");

    auto *mw = app.add_subcommand("mwg", "modified Witten genus from characteristic numbers");
    mw->add_option("--in", o.in, "char file")->required();
    mw->add_option("--qcap", o.qcap, "q-exponent bound (default 4)");

    auto *special = app.add_subcommand("special", "value of a named form at a torsion point");
    special->add_option("--form", o.form, "form name")->required();
    special->add_option("--z", o.z, "0, 1/2, 1/3, 1/4, 1/6 or (t+1)/2");
    special->add_option("--qcap", o.qcap, "q-exponent bound (default 4)");

    auto *cong = app.add_subcommand("congruence", "congruences of the elliptic genus");
    cong->add_option("--in", o.in, "manifold file")->required();
    cong->add_option("--qcap", o.qcap, "q-exponent bound (default 11)");

    auto *sq = app.add_subcommand("sqeg", "second-quantized elliptic genus");
    sq->add_option("--in", o.in, "manifold or series file")->required();
    sq->add_option("--pmax", o.pmax, "highest power of p");
    sq->add_option("--qcap", o.qcap, "q-exponent bound (default 2)");

    auto *d2 = app.add_subcommand("delta2", "Fourier coefficients of Delta_2");
    d2->add_option("--bound", o.bound, "largest n + m");

    for (auto *sub : {expand, check, decompose, eg, mw, special, cong, sq, d2})
        sub->add_flag("--json", o.json_out, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*expand)
            return cmd_expand(o);
        if (*check) {
            if (!o.list && o.suite.empty())
                throw schema_error("check needs --suite or --list");
            return cmd_check(o);
        }
        if (*decompose)
            return cmd_decompose(o);
        if (*eg)
            return cmd_eg(o);
        if (*mw)
            return cmd_mwg(o);
        if (*special)
            return cmd_special(o);
        if (*cong)
            return cmd_congruence(o);
        if (*sq)
            return cmd_sqeg(o);
        if (*d2)
            return cmd_delta2(o);
    } catch (const schema_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
