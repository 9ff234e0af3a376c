// Command-line front end: parse polynomial arguments, dispatch to the math
// layers, and emit text or JSON reports. Exit codes: 0 = checks satisfied,
// 1 = mathematical refutation (e.g. a residue of -1 under `certify`),
// 2 = usage or input error.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tamesym/certificate.hpp"
#include "tamesym/report.hpp"

using namespace tamesym;

namespace {

struct FieldChoice {
    enum class Kind { q, real_model, fp } kind = Kind::q;
    std::uint64_t p = 0;
};

FieldChoice parse_field(const std::string& s) {
    if (s == "q") return {FieldChoice::Kind::q, 0};
    if (s == "r") return {FieldChoice::Kind::real_model, 0};
    if (s.rfind("fp:", 0) == 0) {
        std::uint64_t p = std::stoull(s.substr(3));
        if (!is_prime_u64(p)) throw CLI::ValidationError("--field", "fp:<p> needs a prime p");
        return {FieldChoice::Kind::fp, p};
    }
    throw CLI::ValidationError("--field", "expected q, r, or fp:<p>");
}

SeriesRing parse_ring(const std::string& s) {
    if (s == "k[[x,y]]" || s == "total" || s == "xy") return SeriesRing::total_degree;
    if (s == "k[x][[y]]" || s == "y-adic") return SeriesRing::poly_x_adic_y;
    if (s == "k[y][[x]]" || s == "x-adic") return SeriesRing::poly_y_adic_x;
    throw CLI::ValidationError("--ring", "expected k[[x,y]] (total), k[x][[y]] (y-adic), or k[y][[x]] (x-adic)");
}

struct PlaceArg {
    enum class Kind { finite, infinite, rational_prime, real } kind = Kind::infinite;
    std::string poly;
    Integer p;
};

PlaceArg parse_place(const std::string& s) {
    PlaceArg a;
    if (s == "inf") {
        a.kind = PlaceArg::Kind::infinite;
    } else if (s == "real") {
        a.kind = PlaceArg::Kind::real;
    } else if (s.rfind("prime:", 0) == 0) {
        a.kind = PlaceArg::Kind::finite;
        a.poly = s.substr(6);
    } else if (s.rfind("p:", 0) == 0) {
        a.kind = PlaceArg::Kind::rational_prime;
        a.p = Integer(s.substr(2));
    } else {
        throw CLI::ValidationError("--at", "expected prime:<poly>, inf, p:<n>, or real");
    }
    return a;
}

Rational parse_rational(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

int emit(const Report& rep, bool json, std::chrono::steady_clock::time_point start) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
                  .count();
    if (json) std::cout << render_json(rep);
    else std::cout << render_text(rep, us);
    return rep.satisfied ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tamesym: exact tame symbols, reciprocity checks, and power-series certificates"};
    app.require_subcommand(1);

    std::string field_str = "q";
    unsigned q = 2;
    int order = 16;
    std::uint64_t seed = 1;
    bool json = false;
    app.add_option("--field", field_str, "coefficient field: q, r, or fp:<p>")->capture_default_str();
    app.add_option("--q", q, "symbol degree (prime)")->capture_default_str();
    app.add_option("--order,-N", order, "series truncation order")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized factorization")->capture_default_str();
    app.add_flag("--json", json, "emit the JSON report");

    std::string arg_f, arg_g, arg_at, arg_ring = "k[[x,y]]", arg_kind, arg_sel, arg_orient = "f";
    std::vector<std::string> arg_base;

    CLI::App* c_residue = app.add_subcommand("residue", "q-th power residue symbol (f/g)_q");
    c_residue->add_option("f", arg_f)->required();
    c_residue->add_option("g", arg_g)->required();

    CLI::App* c_symbol = app.add_subcommand("symbol", "tame symbol of (alpha, beta) at a place");
    c_symbol->add_option("alpha", arg_f)->required();
    c_symbol->add_option("beta", arg_g)->required();
    c_symbol->add_option("--at", arg_at, "place: prime:<poly>, inf, p:<n>, real")->required();

    CLI::App* c_ramify = app.add_subcommand("ramify", "ramification divisor of the symbol algebra (alpha, beta)_q");
    c_ramify->add_option("alpha", arg_f)->required();
    c_ramify->add_option("beta", arg_g)->required();

    CLI::App* c_rec = app.add_subcommand("reciprocity", "reciprocity checks: qr | real | weil");
    c_rec->add_option("kind", arg_kind, "qr, real, or weil")->required();
    c_rec->add_option("a", arg_f)->required();
    c_rec->add_option("b", arg_g)->required();

    CLI::App* c_hensel = app.add_subcommand("hensel", "lift the mod-ideal factorization of g in a mixed ring");
    c_hensel->add_option("g", arg_g)->required();
    c_hensel->add_option("--ring", arg_ring, "k[x][[y]] (y-adic) or k[y][[x]] (x-adic)");
    c_hensel->add_option("--base", arg_base, "explicit coprime base factors (default: factor g mod the ideal)");

    CLI::App* c_certify = app.add_subcommand("certify", "residue certificate f - s^q = g*t in a series ring");
    c_certify->add_option("f", arg_f)->required();
    c_certify->add_option("g", arg_g)->required();
    c_certify->add_option("--ring", arg_ring, "k[[x,y]], k[x][[y]], or k[y][[x]]");
    c_certify->add_option("--orient", arg_orient, "which argument is the power side: f (default) or g");

    CLI::App* c_examples = app.add_subcommand("examples", "run the built-in worked examples");
    CLI::App* c_ex_run = c_examples->add_subcommand("run", "run one example or all");
    c_ex_run->add_option("selector", arg_sel, "ex0..ex10 or all")->required();

    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        FieldChoice field = parse_field(field_str);
        if (!is_prime_u64(q)) throw std::domain_error("--q must be prime");
        if (order < 1 || order > 4096) throw std::domain_error("--order must be in [1, 4096]");
        if (field.kind == FieldChoice::Kind::fp && q == field.p)
            throw std::domain_error("q must be invertible in the coefficient field (q != p)");
        // symbol algebras of degree q > 2 need a primitive q-th root of unity
        if ((c_symbol->parsed() || c_ramify->parsed()) && field.kind == FieldChoice::Kind::fp && q > 2 &&
            (field.p - 1) % q != 0)
            throw std::domain_error("no primitive q-th root of unity in F_p (need q | p - 1)");
        Report rep;

        if (c_residue->parsed()) {
            rep.command = "residue";
            rep.inputs = {{"f", arg_f}, {"g", arg_g}, {"q", std::to_string(q)}, {"field", field_str}};
            int verdict = 0;
            if (field.kind == FieldChoice::Kind::fp)
                verdict = qth_power_residue_fp(parse_poly_fp(arg_f, field.p), parse_poly_fp(arg_g, field.p), q, seed);
            else if (field.kind == FieldChoice::Kind::real_model)
                verdict = qth_power_residue_real(parse_poly_q(arg_f), parse_poly_q(arg_g), q);
            else
                verdict = qth_power_residue_q(parse_poly_q(arg_f), parse_poly_q(arg_g), q);
            rep.constraint = verdict > 0 ? "+1" : "-1";
            rep.satisfied = verdict > 0;
            return emit(rep, json, start);
        }

        if (c_symbol->parsed()) {
            rep.command = "symbol";
            rep.inputs = {{"alpha", arg_f}, {"beta", arg_g}, {"at", arg_at}, {"field", field_str}};
            PlaceArg pl = parse_place(arg_at);
            std::string value;
            bool trivial = true;
            if (field.kind == FieldChoice::Kind::fp) {
                Place<Fp> place = pl.kind == PlaceArg::Kind::infinite
                                      ? Place<Fp>::infinite()
                                      : Place<Fp>::finite(parse_poly_fp(pl.poly, field.p).make_monic(
                                            Place<Fp>::main_var(parse_poly_fp(pl.poly, field.p))));
                if (pl.kind == PlaceArg::Kind::finite && !is_irreducible_fp(place.prime))
                    throw std::domain_error("place polynomial is not irreducible over F_p");
                Fq v = tame_symbol(parse_poly_fp(arg_f, field.p), parse_poly_fp(arg_g, field.p), place);
                value = fq_value_text(v, place_variable(place));
                trivial = is_qth_power_fq(v, q);
                rep.places.push_back({place_text(place), value, trivial});
            } else if (pl.kind == PlaceArg::Kind::rational_prime) {
                if (pl.p == 2 && q == 2)
                    throw std::domain_error("the place 2 is wild for q = 2; use `reciprocity qr` "
                                            "(Hilbert symbol) instead of the tame symbol");
                Fp v = tame_symbol_mod_p(parse_rational(arg_f), parse_rational(arg_g), pl.p);
                value = value_text(v);
                trivial = is_qth_power_fp(v, q);
                rep.places.push_back({"p:" + value_text(pl.p), value, trivial});
            } else if (pl.kind == PlaceArg::Kind::real) {
                throw std::domain_error("the real place carries no tame symbol; use `reciprocity qr`");
            } else {
                Place<Rational> place = pl.kind == PlaceArg::Kind::infinite
                                            ? Place<Rational>::infinite()
                                            : Place<Rational>::finite(parse_poly_q(pl.poly));
                QResidue v = tame_symbol_q(parse_poly_q(arg_f), parse_poly_q(arg_g), place);
                value = value_text(v);
                trivial = qresidue_is_qth_power(v, q);
                rep.places.push_back({place_text(place), value, trivial});
            }
            rep.constraint = value;
            rep.satisfied = true;
            return emit(rep, json, start);
        }

        if (c_ramify->parsed()) {
            rep.command = "ramify";
            rep.inputs = {{"alpha", arg_f}, {"beta", arg_g}, {"q", std::to_string(q)}, {"field", field_str}};
            std::size_t count = 0;
            if (field.kind == FieldChoice::Kind::fp) {
                for (const auto& d : ramification_divisor(parse_poly_fp(arg_f, field.p),
                                                          parse_poly_fp(arg_g, field.p), q, seed)) {
                    rep.places.push_back({place_text(d.place), fq_value_text(d.value, place_variable(d.place)),
                                          d.trivial});
                    ++count;
                }
            } else if (field.kind == FieldChoice::Kind::real_model) {
                for (const auto& d : ramification_divisor_real(parse_poly_q(arg_f), parse_poly_q(arg_g))) {
                    rep.places.push_back({place_text(d.place), example_detail::signch(d.symbol_sign), d.trivial});
                    ++count;
                }
            } else {
                for (const auto& d : ramification_divisor_q(parse_poly_q(arg_f), parse_poly_q(arg_g), q)) {
                    rep.places.push_back({place_text(d.place), value_text(d.value), d.trivial});
                    ++count;
                }
            }
            rep.constraint = std::to_string(count) + " nontrivial place(s)";
            rep.satisfied = true;
            return emit(rep, json, start);
        }

        if (c_rec->parsed()) {
            rep.command = "reciprocity " + arg_kind;
            rep.inputs = {{"a", arg_f}, {"b", arg_g}, {"field", field_str}, {"q", std::to_string(q)}};
            if (arg_kind == "qr") {
                QReciprocityReport qr = reciprocity_check_Q(parse_rational(arg_f), parse_rational(arg_g));
                for (const auto& d : qr.data)
                    rep.places.push_back({place_text(d.place), example_detail::signch(d.symbol), d.symbol == 1});
                rep.constraint = example_detail::signch(qr.product);
                rep.satisfied = qr.satisfied;
                if (qr.identity) {
                    std::ostringstream os;
                    os << "(" << qr.identity->p << "/" << qr.identity->q << ")(" << qr.identity->q << "/"
                       << qr.identity->p << ") = " << example_detail::signch(qr.identity->legendre_pq * qr.identity->legendre_qp)
                       << " = (-1)^((p-1)/2 (q-1)/2) = " << example_detail::signch(qr.identity->expected)
                       << (qr.identity->ok ? "  [holds]" : "  [VIOLATED]");
                    rep.derived_identities.push_back(os.str());
                    rep.satisfied = rep.satisfied && qr.identity->ok;
                }
            } else if (arg_kind == "real") {
                RealReciprocityReport rr = reciprocity_check_real(parse_poly_q(arg_f), parse_poly_q(arg_g));
                for (const auto& d : rr.data)
                    rep.places.push_back({place_text(d.place), example_detail::signch(d.symbol_sign), d.trivial});
                rep.constraint = "parity " + std::to_string(rr.parity);
                std::ostringstream os;
                os << "(a/b)(b/a) = " << example_detail::signch(rr.legendre_ab * rr.legendre_ba)
                   << " = (-1)^(deg a deg b) = " << example_detail::signch(rr.expected_product)
                   << (rr.identity_ok ? "  [holds]" : "  [VIOLATED]");
                rep.derived_identities.push_back(os.str());
                rep.satisfied = rr.parity_ok && rr.identity_ok;
            } else if (arg_kind == "weil") {
                if (field.kind != FieldChoice::Kind::fp)
                    throw std::domain_error("reciprocity weil needs --field fp:<p>");
                WeilReciprocityReport wr = weil_reciprocity_check(parse_poly_fp(arg_f, field.p),
                                                                  parse_poly_fp(arg_g, field.p), q, seed);
                for (const auto& d : wr.data)
                    rep.places.push_back({place_text(d.place), fq_value_text(d.value, place_variable(d.place)),
                                          d.trivial});
                rep.constraint = "norm product " + value_text(wr.constraint);
                rep.satisfied = wr.satisfied;
            } else {
                throw std::domain_error("reciprocity kind must be qr, real, or weil");
            }
            return emit(rep, json, start);
        }

        if (c_hensel->parsed()) {
            rep.command = "hensel";
            SeriesRing ring = parse_ring(arg_ring);
            if (field.kind != FieldChoice::Kind::fp)
                throw std::domain_error("hensel needs --field fp:<p>");
            rep.inputs = {{"g", arg_g}, {"ring", ring_name(ring)}, {"order", std::to_string(order)}};
            PolyFp g = parse_poly_fp(arg_g, field.p);
            Var main = ring == SeriesRing::poly_x_adic_y ? Var::x : Var::y;
            std::vector<PolyFp> base;
            if (!arg_base.empty()) {
                for (const auto& b : arg_base) base.push_back(parse_poly_fp(b, field.p));
            } else {
                PolyFp b0 = g.substitute(other(main), PolyFp());
                if (b0.is_constant()) throw std::domain_error("g is a unit modulo the ideal; nothing to lift");
                for (const auto& [pi, m] : factor_fp(b0, seed).factors)
                    base.push_back(pi.pow(static_cast<unsigned long>(m)));
            }
            auto lift = hensel_factor_lift(g, ring, base, order);
            rep.constraint = "unit " + value_text(lift.unit) + ", " + std::to_string(lift.factors.size()) +
                             " factor(s)";
            for (const auto& fct : lift.factors)
                rep.places.push_back({"factor", series_text(fct.to_biseries(ring, order)), true});
            rep.satisfied = true;
            return emit(rep, json, start);
        }

        if (c_certify->parsed()) {
            SeriesRing ring = parse_ring(arg_ring);
            if (field.kind != FieldChoice::Kind::fp)
                throw std::domain_error("certify needs --field fp:<p>");
            rep.command = "certify";
            bool swap = arg_orient == "g";
            PolyFp f = parse_poly_fp(swap ? arg_g : arg_f, field.p);
            PolyFp g = parse_poly_fp(swap ? arg_f : arg_g, field.p);
            rep.inputs = {{"f", arg_f},
                          {"g", arg_g},
                          {"q", std::to_string(q)},
                          {"ring", ring_name(ring)},
                          {"order", std::to_string(order)},
                          {"orientation", swap ? "g - s^q = f*t" : "f - s^q = g*t"}};
            try {
                SeriesCertificate<Fp> cert = residue_certificate(f, g, ring, q, order, seed);
                cert.orientation = swap ? "g - s^q = f*t" : "f - s^q = g*t";
                rep.places.push_back({"s", series_text(cert.s), true});
                rep.places.push_back({"t", series_text(cert.t), true});
                bool ok = verify_certificate(cert);
                rep.constraint = std::string(cert.orientation) + (ok ? " verified" : " FAILED");
                rep.satisfied = ok;
            } catch (const CertificateRefusal& e) {
                rep.constraint = "refused: " + e.witness;
                rep.satisfied = false;
            }
            return emit(rep, json, start);
        }

        if (c_ex_run->parsed()) {
            rep.command = "examples run";
            rep.inputs = {{"selector", arg_sel}, {"order", std::to_string(order)}, {"seed", std::to_string(seed)}};
            std::vector<ExampleResult> results;
            if (arg_sel == "all") results = run_all_examples(seed, order);
            else results.push_back(run_example(arg_sel, seed, order));
            std::size_t pass = 0;
            for (const auto& ex : results) {
                for (const auto& c : ex.checks)
                    rep.places.push_back({ex.id + ": " + c.label, c.value, c.ok});
                if (ex.ok()) ++pass;
                else rep.derived_identities.push_back("FAILED: " + ex.id + " (" + ex.title + ")");
            }
            rep.constraint = std::to_string(pass) + "/" + std::to_string(results.size()) + " examples pass";
            rep.satisfied = pass == results.size();
            return emit(rep, json, start);
        }

        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
