#include "minkowski/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string_view>

#include "minkowski/errors.hpp"
#include "minkowski/fourier.hpp"
#include "minkowski/measure.hpp"
#include "minkowski/qmark.hpp"

namespace minkowski::cli {

namespace {

std::string real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool looks_decimal(std::string_view s) {
    return s.find_first_of(".eE") != std::string_view::npos || s == "inf" || s == "nan";
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed real: '" + s + "'");
    }
    if (used != s.size()) throw DomainError("malformed real: '" + s + "'");
    return v;
}

void coefficient_csv_header(std::ostream& out) { out << "n,re,im,abs,err_bound\n"; }

void coefficient_record(std::ostream& out, const FourierCoefficient& c, bool json) {
    if (json) {
        out << "{\"n\":" << c.n << ",\"re\":" << real(c.re) << ",\"im\":" << real(c.im) << ",\"abs\":" << real(c.abs())
            << ",\"err_bound\":" << real(c.err_bound) << "}\n";
    } else {
        out << c.n << ',' << real(c.re) << ',' << real(c.im) << ',' << real(c.abs()) << ',' << real(c.err_bound) << '\n';
    }
}

struct Settings {
    std::string x, y, a, b;
    double tol = 1e-6;
    std::uint64_t budget = kDefaultCellBudget;
    std::int64_t from = 0, to = 0;
    int j_from = 0, j_to = 0;
    bool json = false;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    double mass_tol = 1e-9;
};

int cmd_qmark(const Settings& s, std::ostream& out) {
    if (looks_decimal(s.x)) {
        out << real(qmark_approx(parse_real(s.x), s.tol).value) << '\n';
    } else {
        out << qmark_exact(Rational::parse(s.x)).to_string() << '\n';
    }
    return kOk;
}

int cmd_unqmark(const Settings& s, std::ostream& out) {
    if (looks_decimal(s.y)) {
        out << real(box_approx(parse_real(s.y), s.tol).value) << '\n';
    } else {
        out << box_exact(Dyadic::parse(s.y)).to_string() << '\n';
    }
    return kOk;
}

int cmd_measure(const Settings& s, std::ostream& out) {
    const Rational a = Rational::parse(s.a), b = Rational::parse(s.b);
    out << mu_interval(a, b).to_string() << '\n';
    return kOk;
}

int cmd_dim(const Settings& s, std::ostream& out, std::ostream& err) {
    out << "dim,err_bound,integral,integral_err\n";
    try {
        const auto d = kinney_dimension(s.tol, s.budget);
        out << real(d.dim) << ',' << real(d.err_bound) << ',' << real(d.integral.value) << ','
            << real(d.integral.err_bound) << '\n';
        return kOk;
    } catch (const BudgetExhausted<QuadratureResult>& e) {
        const auto& p = e.partial();
        const double dim = 1.0 / (2.0 * p.value);
        const double bound = p.value > p.err_bound ? p.err_bound / (2.0 * p.value * (p.value - p.err_bound))
                                                   : std::numeric_limits<double>::infinity();
        out << real(dim) << ',' << real(bound) << ',' << real(p.value) << ',' << real(p.err_bound) << '\n';
        err << "warning: " << e.what() << '\n';
        return kBudgetExhausted;
    }
}

int emit_rows(const std::vector<CoefficientRow>& rows, bool json, std::ostream& out, std::ostream& err) {
    if (!json) coefficient_csv_header(out);
    std::size_t short_rows = 0;
    for (const auto& r : rows) {
        coefficient_record(out, r.coeff, json);
        short_rows += r.budget_exhausted ? 1 : 0;
    }
    if (short_rows == 0) return kOk;
    err << "warning: cell budget exhausted; " << short_rows << " row(s) exceed the requested tolerance\n";
    return kBudgetExhausted;
}

int cmd_fourier(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto rows = coeff_range(s.from, s.to, FourierOptions{s.tol, s.budget, nullptr});
    return emit_rows(rows, s.json, out, err);
}

int cmd_decay(const Settings& s, std::ostream& out, std::ostream& err) {
    if (s.j_from < 0 || s.j_to > 40 || s.j_to <= s.j_from) throw DomainError("decay: need 0 <= from < to <= 40");
    const auto rows = coeff_table(std::int64_t{1} << s.j_from, (std::int64_t{1} << (s.j_to + 1)) - 1, s.tol, s.budget);
    std::vector<FourierCoefficient> table;
    std::size_t short_rows = 0;
    for (const auto& r : rows) {
        table.push_back(r.coeff);
        short_rows += r.budget_exhausted ? 1 : 0;
    }
    const auto est = fit_decay(table, s.j_from, s.j_to);
    out << "j,block_max\n";
    for (const auto& m : est.block_maxima) out << m.j << ',' << real(m.value) << '\n';
    out << "eta,intercept,residual\n" << real(est.eta) << ',' << real(est.intercept) << ',' << real(est.residual) << '\n';
    if (short_rows == 0) return kOk;
    err << "warning: cell budget exhausted; " << short_rows << " coefficient(s) exceed the requested tolerance\n";
    return kBudgetExhausted;
}

int cmd_sample(const Settings& s, std::ostream& out) {
    MuSampler sampler(s.seed);
    for (std::size_t i = 0; i < s.count; ++i) out << real(sampler.next(s.mass_tol)) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minkowski question mark function, its measure, and Fourier-Stieltjes coefficients", "minkowski"};
    app.require_subcommand(1);
    Settings s;

    auto* qmark = app.add_subcommand("qmark", "?(x): exact for p/q, approximate for decimals");
    qmark->add_option("x", s.x, "point in [0,1]")->required();
    qmark->add_option("--tol", s.tol, "absolute tolerance for decimal input");

    auto* unqmark = app.add_subcommand("unqmark", "inverse of ?: exact for k/2^m, approximate for decimals");
    unqmark->add_option("y", s.y, "value in [0,1]")->required();
    unqmark->add_option("--tol", s.tol, "absolute tolerance for decimal input");

    auto* measure = app.add_subcommand("measure", "mu((a, b]) as an exact dyadic");
    measure->add_option("a", s.a, "left endpoint p/q")->required();
    measure->add_option("b", s.b, "right endpoint p/q")->required();

    auto* dim = app.add_subcommand("dim", "Hausdorff dimension of mu via Kinney's integral");
    dim->add_option("--tol", s.tol, "error tolerance on the integral");
    dim->add_option("--budget", s.budget, "maximum number of cells");

    auto* fourier = app.add_subcommand("fourier", "Fourier-Stieltjes coefficients mu^(n) for n in [from, to]");
    fourier->add_option("--from", s.from, "first frequency")->required();
    fourier->add_option("--to", s.to, "last frequency")->required();
    fourier->add_option("--tol", s.tol, "error tolerance per coefficient");
    fourier->add_option("--budget", s.budget, "maximum number of cells per partition");
    fourier->add_flag("--json", s.json, "one JSON object per line instead of CSV");

    auto* decay = app.add_subcommand("decay", "block-maxima fit of |mu^(n)| ~ n^-eta over blocks [from, to]");
    decay->add_option("--from", s.j_from, "first block exponent j")->required();
    decay->add_option("--to", s.j_to, "last block exponent j")->required();
    decay->add_option("--tol", s.tol, "error tolerance per coefficient");
    decay->add_option("--budget", s.budget, "maximum number of cells per partition");

    auto* sample = app.add_subcommand("sample", "draw points from mu");
    sample->add_option("--count", s.count, "number of samples")->required();
    sample->add_option("--seed", s.seed, "random seed")->required();
    sample->add_option("--mass-tol", s.mass_tol, "stop once the cylinder mass is below this");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*qmark) return cmd_qmark(s, out);
        if (*unqmark) return cmd_unqmark(s, out);
        if (*measure) return cmd_measure(s, out);
        if (*dim) return cmd_dim(s, out, err);
        if (*fourier) return cmd_fourier(s, out, err);
        if (*decay) return cmd_decay(s, out, err);
        if (*sample) return cmd_sample(s, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const IllConditionedFit& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExhausted;
    }
    err << "usage error: no subcommand\n";
    return kUsageError;
}

}  // namespace minkowski::cli
