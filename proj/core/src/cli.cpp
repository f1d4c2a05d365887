#include "zarchow/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zarchow/chamber.hpp"
#include "zarchow/errors.hpp"
#include "zarchow/io.hpp"
#include "zarchow/series.hpp"
#include "zarchow/toric.hpp"
#include "zarchow/zariski.hpp"

namespace zarchow {

namespace {

ToricDivisor toric_divisor_from_arg(const Fan& fan, const std::string& expr) {
    const Divisor v = parse_divisor(expr, fan.ray_names);
    ToricDivisor d;
    d.coeffs.assign(fan.rays.size(), Rational(0));
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        d.coeffs[i] = v[i];
    return d;
}

std::string expansion_table(const std::map<ExpVec, Integer>& table) {
    std::vector<const std::pair<const ExpVec, Integer>*> order;
    for (const auto& t : table)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return graded_lex_less(a->first, b->first); });
    std::ostringstream os;
    for (const auto* t : order) {
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (i)
                os << " ";
            os << t->first[i];
        }
        os << " : " << t->second.str() << "\n";
    }
    return os.str();
}

void print_series(std::ostream& os, const RationalSeries& r) {
    os << r.str() << "\n";
    if (r.certified_window())
        os << "certified-window: " << *r.certified_window() << "\n";
}

// Sequence oracle for single-variable Poincare series of a toric divisor.
SeqOracle toric_sequence(const Fan& fan, const ToricDivisor& d) {
    return [fan, d](int n) {
        ToricDivisor nd;
        nd.coeffs.assign(d.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < d.coeffs.size(); ++i)
            nd.coeffs[i] = Rational(n) * d.coeffs[i];
        return h0_toric(fan, nd);
    };
}

int auto_period_hint(const SeqOracle& h, bool effective, int max_period) {
    std::vector<Integer> values;
    const int len = 4 * max_period + 12;
    for (int n = 0; n < len; ++n)
        values.push_back(h(n));
    const QuasiPolynomial q = quasi_poly_fit(values, max_period);
    // Enough numerator room for the onset under both denominator shapes.
    int k = 1;
    if (effective)
        while (k * q.period + 2 < q.onset + q.period + 2)
            ++k;
    else
        while (3 * k * q.period < q.onset + 3 * q.period)
            ++k;
    return k * q.period;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Zariski decompositions, Zariski chambers and divisor "
                 "generating series on surfaces and toric varieties"};
    app.require_subcommand(1);

    // zariski-decompose
    std::string zd_surface, zd_divisor;
    auto* zd = app.add_subcommand("zariski-decompose",
                                  "Zariski decomposition D = P + N on a surface");
    zd->add_option("--surface", zd_surface, "surface JSON file")->required();
    zd->add_option("--divisor", zd_divisor, "divisor expression")->required();

    // chambers
    std::string ch_surface;
    std::vector<std::string> ch_bigs;
    auto* ch = app.add_subcommand("chambers", "Zariski chamber decomposition of a big cone");
    ch->add_option("--surface", ch_surface, "surface JSON file")->required();
    ch->add_option("--big", ch_bigs, "big divisor generating the cone (repeatable)")
        ->required();

    // poincare
    std::string po_fan, po_divisor, po_table;
    bool po_effective = false;
    int po_rhint = 0;
    auto* po = app.add_subcommand("poincare",
                                  "single-variable section series of a divisor");
    po->add_option("--fan", po_fan, "fan JSON file (toric section counts)");
    po->add_option("--divisor", po_divisor, "toric divisor over the ray names");
    po->add_option("--table", po_table, "JSON array of h(0), h(1), ... instead of a fan");
    po->add_flag("--effective", po_effective, "use the effective denominator shape");
    po->add_option("--r-hint", po_rhint, "period hint (default: fitted automatically)");

    // multi-series
    std::string ms_fan, ms_divisor, ms_table;
    std::vector<std::string> ms_bigs;
    int ms_phint = 1;
    auto* ms = app.add_subcommand(
        "multi-series", "multi-variable section series over big divisor steps");
    ms->add_option("--fan", ms_fan, "fan JSON file");
    ms->add_option("--divisor", ms_divisor, "base toric divisor (default 0)");
    ms->add_option("--big", ms_bigs, "big toric divisor step (repeatable)");
    ms->add_option("--table", ms_table,
                   "table oracle JSON {arity, values: [[m..., h], ...]} "
                   "(window-certified mode)");
    ms->add_option("--period-hint", ms_phint, "period hint for the table mode");

    // toric-h0
    std::string th_fan, th_divisor;
    auto* th = app.add_subcommand("toric-h0", "section count of a toric divisor");
    th->add_option("--fan", th_fan, "fan JSON file")->required();
    th->add_option("--divisor", th_divisor, "toric divisor over the ray names")->required();

    // euler-chow
    std::string ec_fan;
    int ec_codim = 1;
    bool ec_rank_one = false;
    auto* ec = app.add_subcommand("euler-chow", "Euler-Chow series of a toric variety");
    ec->add_option("--fan", ec_fan, "fan JSON file")->required();
    ec->add_option("--codim", ec_codim, "cycle codimension")->required();
    ec->add_flag("--rank-one", ec_rank_one,
                 "assert that all cycle classes in this codimension coincide");

    // expand
    std::string ex_series, ex_grading;
    long ex_bound = 0;
    auto* ex = app.add_subcommand("expand", "exact coefficient table of a series file");
    ex->add_option("--series", ex_series, "series JSON file")->required();
    ex->add_option("--bound", ex_bound, "graded degree bound")->required();
    ex->add_option("--grading", ex_grading,
                   "comma-separated positive grading (shift certificate)");

    // fit-quasipoly
    std::string fq_values;
    int fq_max_period = 6;
    auto* fq = app.add_subcommand("fit-quasipoly",
                                  "fit a degree-2 quasi-polynomial to a value table");
    fq->add_option("--values", fq_values, "JSON array file or inline \"1,3,6,...\"")
        ->required();
    fq->add_option("--max-period", fq_max_period, "largest period tried");

    std::vector<std::string> forward = args;
    std::reverse(forward.begin(), forward.end());
    try {
        app.parse(forward);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (zd->parsed()) {
        const SurfaceFile sf = parse_surface_file(zd_surface);
        const Divisor d = parse_divisor(zd_divisor, sf.lattice.basis_labels());
        const ZariskiPair z = zariski_decompose(sf.lattice, d);
        out << "P = " << divisor_str(z.p, sf.lattice.basis_labels()) << " ; N = "
            << divisor_str(z.n, sf.lattice.basis_labels()) << "\n";
        return 0;
    }
    if (ch->parsed()) {
        const SurfaceFile sf = parse_surface_file(ch_surface);
        std::vector<Vec> gens;
        for (const auto& b : ch_bigs)
            gens.push_back(parse_divisor(b, sf.lattice.basis_labels()));
        const RationalCone w = RationalCone::from_generators(sf.lattice.rank(), gens);
        const std::vector<Chamber> chambers = zariski_chambers(sf.lattice, w);
        for (std::size_t i = 0; i < chambers.size(); ++i) {
            out << "chamber " << i << ": Gamma = {";
            for (std::size_t k = 0; k < chambers[i].gamma.size(); ++k) {
                if (k)
                    out << ", ";
                out << sf.lattice.curve_labels()[chambers[i].gamma[k]];
            }
            out << "} ; rays: ";
            const auto& cg = chambers[i].cone.generators();
            for (std::size_t k = 0; k < cg.size(); ++k) {
                if (k)
                    out << ", ";
                out << divisor_str(cg[k], sf.lattice.basis_labels());
            }
            out << "\n";
        }
        return 0;
    }
    if (po->parsed()) {
        SeqOracle h;
        if (!po_table.empty()) {
            const nlohmann::json j = nlohmann::json::parse(read_file(po_table));
            std::vector<Integer> values;
            for (const auto& v : j)
                values.push_back(Integer(v.get<long long>()));
            h = [values](int n) {
                if (n < 0 || static_cast<std::size_t>(n) >= values.size())
                    throw DomainError("table-incomplete",
                                      "table has no entry for n = " + std::to_string(n));
                return values[n];
            };
        } else if (!po_fan.empty() && !po_divisor.empty()) {
            const Fan fan = parse_fan_file(po_fan);
            h = toric_sequence(fan, toric_divisor_from_arg(fan, po_divisor));
        } else {
            err << "usage error: poincare needs --table or --fan with --divisor\n";
            return 1;
        }
        const int hint = po_rhint > 0 ? po_rhint : auto_period_hint(h, po_effective, 8);
        print_series(out, poincare_series(h, po_effective, hint));
        return 0;
    }
    if (ms->parsed()) {
        if (!ms_table.empty()) {
            const nlohmann::json j = nlohmann::json::parse(read_file(ms_table));
            const std::size_t arity = j.at("arity").get<std::size_t>();
            std::map<ExpVec, Integer> table;
            for (const auto& row : j.at("values")) {
                ExpVec e(arity);
                for (std::size_t i = 0; i < arity; ++i)
                    e[i] = row[i].get<int>();
                table[e] = Integer(row[arity].get<long long>());
            }
            H0Oracle h = [table](const ExpVec& e) {
                auto it = table.find(e);
                if (it == table.end())
                    throw DomainError("table-incomplete", "table misses an entry");
                return it->second;
            };
            RationalSeries r = direct_rationalize(arity, h, ms_phint);
            out << "window-certified\n";
            print_series(out, r);
            return 0;
        }
        if (ms_fan.empty() || ms_bigs.empty()) {
            err << "usage error: multi-series needs --fan with --big, or --table\n";
            return 1;
        }
        const Fan fan = parse_fan_file(ms_fan);
        const ToricSurface ts = toric_surface(fan);
        Divisor d(ts.lattice.rank());
        if (!ms_divisor.empty())
            d = ts.cl.class_of(toric_divisor_from_arg(fan, ms_divisor));
        std::vector<Divisor> bigs;
        for (const auto& b : ms_bigs)
            bigs.push_back(ts.cl.class_of(toric_divisor_from_arg(fan, b)));
        print_series(out, chamber_reduced_series(ts.lattice, d, bigs, ts.h0_oracle()));
        return 0;
    }
    if (th->parsed()) {
        const Fan fan = parse_fan_file(th_fan);
        out << "h0 = " << h0_toric(fan, toric_divisor_from_arg(fan, th_divisor)).str()
            << "\n";
        return 0;
    }
    if (ec->parsed()) {
        const Fan fan = parse_fan_file(ec_fan);
        if (ec_codim < 0 || static_cast<std::size_t>(ec_codim) > fan.dim)
            throw DomainError("bad-argument", "codimension out of range");
        if (ec_codim == 1) {
            print_series(out, euler_chow_divisors(fan));
        } else if (static_cast<std::size_t>(ec_codim) == fan.dim) {
            print_series(out, euler_chow_points(fan));
        } else if (ec_codim == 0) {
            print_series(out, euler_chow_top(fan));
        } else {
            print_series(out, euler_chow_rank_one(
                                  fan, static_cast<int>(fan.dim) - ec_codim, ec_rank_one));
        }
        return 0;
    }
    if (ex->parsed()) {
        const RationalSeries r = parse_series_file(ex_series);
        std::vector<long> grading;
        if (!ex_grading.empty()) {
            std::stringstream ss(ex_grading);
            std::string item;
            while (std::getline(ss, item, ','))
                grading.push_back(std::stol(item));
        }
        out << expansion_table(expand(r, ex_bound, grading));
        return 0;
    }
    if (fq->parsed()) {
        std::vector<Integer> values;
        if (!fq_values.empty() && fq_values.find(',') != std::string::npos) {
            std::stringstream ss(fq_values);
            std::string item;
            while (std::getline(ss, item, ','))
                values.push_back(Integer(item));
        } else {
            const nlohmann::json j = nlohmann::json::parse(read_file(fq_values));
            for (const auto& v : j)
                values.push_back(Integer(v.get<long long>()));
        }
        const QuasiPolynomial q = quasi_poly_fit(values, fq_max_period);
        out << "period = " << q.period << "\n";
        out << "onset = " << q.onset << "\n";
        for (int res = 0; res < q.period; ++res)
            out << "residue " << res << ": a = " << q.coeffs[res][0] << " ; b = "
                << q.coeffs[res][1] << " ; c = " << q.coeffs[res][2] << "\n";
        return 0;
    }
    err << "usage error: no subcommand\n";
    return 1;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    std::ostringstream out, err;
    try {
        res.exit_code = dispatch(args, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        res.exit_code = 2;
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

} // namespace zarchow
