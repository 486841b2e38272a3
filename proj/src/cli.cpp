#include "newtonforge/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "newtonforge/acceptance.hpp"
#include "newtonforge/differences.hpp"
#include "newtonforge/errors.hpp"
#include "newtonforge/euler.hpp"
#include "newtonforge/function_handle.hpp"
#include "newtonforge/newton_series.hpp"
#include "newtonforge/transforms.hpp"

namespace newtonforge {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// numeric flag values: signed integers, p/q rationals, decimals with optional
// exponent, and complex combinations ending in i. All parsed exactly.

constexpr long kMaxExponent = 4096;

mpq_class parse_rational_text(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw ParseError("empty numeric value", 0);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
    }

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        static const std::regex digits(R"(^\d+$)");
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!std::regex_match(num, digits) || !std::regex_match(den, digits))
            throw ParseError("cannot parse rational '" + raw + "'", 0);
        mpz_class d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + raw + "'", 0);
        mpq_class q(mpz_class(num, 10), d);
        q.canonicalize();
        return negative ? mpq_class(-q) : q;
    }

    static const std::regex decimal(R"(^(\d+)(?:\.(\d+))?(?:[eE]([+-]?\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, decimal))
        throw ParseError("cannot parse numeric value '" + raw + "'", 0);
    mpz_class mantissa(m[1].str() + m[2].str(), 10);
    long shift = -static_cast<long>(m[2].str().size());
    if (m[3].matched) {
        long e = std::strtol(m[3].str().c_str(), nullptr, 10);
        if (e > kMaxExponent || e < -kMaxExponent)
            throw ParseError("exponent out of range in '" + raw + "'", 0);
        shift += e;
    }
    mpq_class q(mantissa);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift > 0)
        q *= mpq_class(p);
    else if (shift < 0)
        q /= mpq_class(p);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

Scalar parse_scalar_text(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw ParseError("empty numeric value", 0);

    if (s.back() != 'i' && s.back() != 'I') return Scalar(parse_rational_text(s));

    std::string body = s.substr(0, s.size() - 1);
    if (body.empty() || body == "+") return Scalar(RationalComplex(mpq_class(0), mpq_class(1)));
    if (body == "-") return Scalar(RationalComplex(mpq_class(0), mpq_class(-1)));

    // split real and imaginary parts at the last top-level sign, skipping
    // exponent signs like the one in 2.5e-3
    std::size_t split = std::string::npos;
    for (std::size_t j = body.size(); j-- > 1;) {
        char c = body[j];
        if ((c == '+' || c == '-') && body[j - 1] != 'e' && body[j - 1] != 'E') {
            split = j;
            break;
        }
    }
    if (split == std::string::npos)
        return Scalar(RationalComplex(mpq_class(0), parse_rational_text(body)));
    std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return Scalar(RationalComplex(parse_rational_text(re), parse_rational_text(im)));
}

// ---------------------------------------------------------------------------
// precision selection: explicit flag > NEWTONFORGE_PRECISION > automatic

PrecisionPolicy select_policy(unsigned flag_bits) {
    if (flag_bits != 0) return PrecisionPolicy::fixed(flag_bits);
    if (const char* env = std::getenv("NEWTONFORGE_PRECISION")) {
        char* end = nullptr;
        unsigned long bits = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || bits < 16 || bits > 1048576)
            throw UsageError("NEWTONFORGE_PRECISION must be an integer in [16, 1048576], got '" +
                             std::string(env) + "'");
        return PrecisionPolicy::fixed(static_cast<unsigned>(bits));
    }
    return PrecisionPolicy::automatic(64);
}

// ---------------------------------------------------------------------------
// output helpers

ordered_json scalar_json(const Scalar& v) {
    ordered_json j;
    j["value"] = v.format();
    j["exact"] = v.is_exact();
    if (!v.is_exact()) j["precision_bits"] = static_cast<std::int64_t>(v.precision_bits());
    return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

std::string normalized_str(const Scalar& v, unsigned n) {
    return v.magnitude(96).mul_2si(-static_cast<long>(n)).str(17);
}

void emit_sequence(std::ostream& out, const std::string& format,
                   const std::vector<Scalar>& values,
                   const std::vector<std::string>& normalized) {
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (std::size_t n = 0; n < values.size(); ++n) {
            ordered_json row;
            row["n"] = static_cast<std::int64_t>(n);
            row["value"] = values[n].format();
            row["normalized"] = normalized[n];
            rows.push_back(std::move(row));
        }
        ordered_json j;
        j["rows"] = std::move(rows);
        emit(out, j);
        return;
    }
    out << "n,value,normalized\n";
    for (std::size_t n = 0; n < values.size(); ++n)
        out << n << ',' << values[n].format() << ',' << normalized[n] << '\n';
}

DifferenceKind kind_from(const std::string& name) {
    if (name == "forward") return DifferenceKind::Forward;
    if (name == "backward") return DifferenceKind::Backward;
    return DifferenceKind::Central;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-difference calculus workbench: high-order differences, binomial "
                 "sums, Newton series, Euler acceleration, and integral oracles"};
    app.name("newtonforge");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    // --h is a step flag on several subcommands, so help is long-form only
    app.set_help_flag("--help", "print this help message and exit");

    int exit_code = 0;

    static const std::vector<std::string> kinds{"forward", "backward", "central"};
    static const std::vector<std::string> formats{"csv", "json"};

    // diff: one signed difference value
    {
        struct DiffOpts {
            std::string f, kind = "forward", z, h;
            unsigned n = 0, precision = 0;
        };
        auto opts = std::make_shared<DiffOpts>();
        auto* cmd = app.add_subcommand("diff", "n-th finite difference of f at z with step h");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--kind", opts->kind, "difference operator")
            ->check(CLI::IsMember(kinds));
        cmd->add_option("--z", opts->z, "evaluation point")->required();
        cmd->add_option("--h", opts->h, "step")->required();
        cmd->add_option("--n", opts->n, "order")->required();
        cmd->add_option("--precision", opts->precision, "working precision in bits")
            ->check(CLI::Range(16u, 1048576u));
        cmd->callback([opts, &out]() {
            auto f = catalog(opts->f);
            Scalar z = parse_scalar_text(opts->z);
            Scalar h = parse_scalar_text(opts->h);
            PrecisionPolicy policy = select_policy(opts->precision);
            Scalar v;
            switch (kind_from(opts->kind)) {
                case DifferenceKind::Forward: v = forward_difference(f, z, h, opts->n, policy); break;
                case DifferenceKind::Backward: v = backward_difference(f, z, h, opts->n, policy); break;
                case DifferenceKind::Central: v = central_difference(f, z, h, opts->n, policy); break;
            }
            emit(out, scalar_json(v));
        });
    }

    // sum: plus-sign binomial sum
    {
        struct SumOpts {
            std::string f, kind = "forward", y, h;
            unsigned n = 0, precision = 0;
        };
        auto opts = std::make_shared<SumOpts>();
        auto* cmd = app.add_subcommand("sum", "plus-sign binomial sum of f at y with step h");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--kind", opts->kind, "node pattern variant")->check(CLI::IsMember(kinds));
        cmd->add_option("--y", opts->y, "evaluation point")->required();
        cmd->add_option("--h", opts->h, "step")->required();
        cmd->add_option("--n", opts->n, "order")->required();
        cmd->add_option("--precision", opts->precision, "working precision in bits")
            ->check(CLI::Range(16u, 1048576u));
        cmd->callback([opts, &out]() {
            auto f = catalog(opts->f);
            Scalar y = parse_scalar_text(opts->y);
            Scalar h = parse_scalar_text(opts->h);
            Scalar v = binomial_sum(f, y, h, opts->n, kind_from(opts->kind),
                                    select_policy(opts->precision));
            emit(out, scalar_json(v));
        });
    }

    // table: forward difference sequence with 2^n-normalized magnitudes
    {
        struct TableOpts {
            std::string f, z, h, format = "csv";
            unsigned n = 0, precision = 0;
        };
        auto opts = std::make_shared<TableOpts>();
        auto* cmd = app.add_subcommand(
            "table", "forward differences of orders 0..n as a sequence with |value|/2^n");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--z", opts->z, "evaluation point")->required();
        cmd->add_option("--h", opts->h, "step")->required();
        cmd->add_option("--n", opts->n, "highest order")->required();
        cmd->add_option("--precision", opts->precision, "working precision in bits")
            ->check(CLI::Range(16u, 1048576u));
        cmd->add_option("--format", opts->format, "output format")->check(CLI::IsMember(formats));
        cmd->callback([opts, &out]() {
            auto f = catalog(opts->f);
            Scalar z = parse_scalar_text(opts->z);
            Scalar h = parse_scalar_text(opts->h);
            auto seq = forward_difference_sequence(f, z, h, opts->n, select_policy(opts->precision));
            std::vector<std::string> norm;
            norm.reserve(seq.size());
            for (unsigned n = 0; n < seq.size(); ++n) norm.push_back(normalized_str(seq[n], n));
            emit_sequence(out, opts->format, seq, norm);
        });
    }

    // newton: build a series and evaluate it at one point
    {
        struct NewtonOpts {
            std::string f, z0, eval, tol = "1e-10";
            unsigned max_terms = 500;
        };
        auto opts = std::make_shared<NewtonOpts>();
        auto* cmd = app.add_subcommand(
            "newton", "Newton series of f centered at z0, evaluated at a point");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--z0", opts->z0, "series center")->required();
        cmd->add_option("--eval", opts->eval, "evaluation point")->required();
        cmd->add_option("--tol", opts->tol, "relative stopping tolerance (default 1e-10)");
        cmd->add_option("--max-terms", opts->max_terms, "coefficient budget")
            ->check(CLI::Range(1u, 100000u));
        cmd->callback([opts, &out]() {
            auto f = catalog(opts->f);
            Scalar z0 = parse_scalar_text(opts->z0);
            Scalar z = parse_scalar_text(opts->eval);
            Scalar tol = parse_scalar_text(opts->tol);
            NewtonSeries series = build_newton_series(f, z0, opts->max_terms);
            NewtonEval ev = eval_newton_series(series, z, tol);
            ordered_json j = scalar_json(ev.value);
            ordered_json diag;
            diag["terms_used"] = ev.diagnostics.terms_used;
            diag["converged"] = ev.diagnostics.converged;
            diag["last_term_mag"] = ev.diagnostics.last_term_mag.str(12);
            if (ev.diagnostics.majorant_tail)
                diag["majorant_tail"] = ev.diagnostics.majorant_tail->str(12);
            j["diagnostics"] = std::move(diag);
            emit(out, j);
        });
    }

    // euler: transformed partial sums, optionally with errors against a reference
    {
        struct EulerOpts {
            std::string f, reference, format = "csv";
            unsigned n = 0;
        };
        auto opts = std::make_shared<EulerOpts>();
        auto* cmd = app.add_subcommand(
            "euler", "Euler-transformed partial sums of the alternating series of f");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--n", opts->n, "highest partial-sum index")->required();
        cmd->add_option("--reference", opts->reference,
                        "known limit; adds error columns and a rate estimate");
        cmd->add_option("--format", opts->format, "output format")->check(CLI::IsMember(formats));
        cmd->callback([opts, &out]() {
            auto f = catalog(opts->f);
            AccelerationReport rep;
            if (opts->reference.empty()) {
                rep = euler_transform(f, opts->n);
            } else {
                rep = acceleration_report(f, parse_scalar_text(opts->reference), opts->n);
            }
            std::vector<std::string> norm;
            norm.reserve(rep.accel_partials.size());
            for (std::size_t n = 0; n < rep.accel_partials.size(); ++n)
                norm.push_back(rep.reference ? rep.accel_errors[n].str(17) : std::string());
            if (opts->format == "json") {
                ordered_json rows = ordered_json::array();
                for (std::size_t n = 0; n < rep.accel_partials.size(); ++n) {
                    ordered_json row;
                    row["n"] = static_cast<std::int64_t>(n);
                    row["value"] = rep.accel_partials[n].format();
                    row["normalized"] = norm[n];
                    rows.push_back(std::move(row));
                }
                ordered_json j;
                j["rows"] = std::move(rows);
                if (rep.reference) j["rate_ratio"] = rep.rate_ratio.str(12);
                emit(out, j);
            } else {
                emit_sequence(out, "csv", rep.accel_partials, norm);
            }
        });
    }

    // oracle: independent integral route to one difference value
    {
        struct OracleOpts2 {
            std::string f, kind, z, y, h;
            unsigned n = 0;
            unsigned prec = 192;
            double tol = 1e-12;
        };
        auto opts = std::make_shared<OracleOpts2>();
        auto* cmd = app.add_subcommand(
            "oracle", "integral-transform oracle for one difference value");
        cmd->set_help_flag("--help", "print this help message and exit");
        static const std::vector<std::string> oracle_kinds{
            "laplace", "fourier-forward", "fourier-central", "fourier-central-product"};
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--kind", opts->kind, "which integral route")
            ->required()
            ->check(CLI::IsMember(oracle_kinds));
        cmd->add_option("--z", opts->z, "evaluation point (alias of --y)");
        cmd->add_option("--y", opts->y, "evaluation point (alias of --z)");
        cmd->add_option("--h", opts->h, "step")->required();
        cmd->add_option("--n", opts->n, "order")->required();
        cmd->add_option("--prec", opts->prec, "quadrature precision in bits")
            ->check(CLI::Range(64u, 16384u));
        cmd->add_option("--tol", opts->tol, "quadrature target accuracy");
        cmd->callback([opts, &out]() {
            if (opts->z.empty() == opts->y.empty())
                throw UsageError("oracle needs exactly one of --z or --y");
            auto f = catalog(opts->f);
            Scalar point = parse_scalar_text(opts->z.empty() ? opts->y : opts->z);
            Scalar h = parse_scalar_text(opts->h);
            OracleOptions oo;
            oo.prec = static_cast<mpfr_prec_t>(opts->prec);
            oo.tol = opts->tol;
            QuadratureResult res;
            if (opts->kind == "laplace") {
                if (!f.laplace)
                    throw DomainError("function '" + opts->f + "' carries no Laplace-side signal");
                res = laplace_difference_oracle(f.laplace->signal, f.laplace->deltas, point, h,
                                                opts->n, oo);
            } else {
                if (!f.fourier)
                    throw DomainError("function '" + opts->f + "' carries no Fourier-side data");
                if (opts->kind == "fourier-forward")
                    res = fourier_forward_oracle(*f.fourier, point, h, opts->n, oo);
                else if (opts->kind == "fourier-central")
                    res = fourier_central_oracle(*f.fourier, point, h, opts->n, oo);
                else
                    res = fourier_central_product_oracle(*f.fourier, point, h, opts->n, oo);
            }
            ordered_json j = scalar_json(res.value);
            ordered_json diag;
            diag["est_error"] = res.est_error.str(8);
            diag["evaluations"] = static_cast<std::int64_t>(res.evaluations);
            j["diagnostics"] = std::move(diag);
            emit(out, j);
        });
    }

    // region: absolute-convergence membership for a point
    {
        struct RegionOpts {
            std::string f, z;
        };
        auto opts = std::make_shared<RegionOpts>();
        auto* cmd = app.add_subcommand(
            "region", "membership of z against the absolute-convergence boundary of f");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--f", opts->f, "function: rational expression in z, or a catalog name")
            ->required();
        cmd->add_option("--z", opts->z, "point to classify")->required();
        cmd->callback([opts, &out]() {
            auto f = catalog(opts->f);
            RegionVerdict v = region_membership(f, parse_scalar_text(opts->z));
            ordered_json j;
            j["value"] = to_string(v.membership);
            j["exact"] = true;
            ordered_json diag;
            diag["abscissa"] = v.abscissa_used.format();
            j["diagnostics"] = std::move(diag);
            emit(out, j);
        });
    }

    // bessel: the bounded-away-from-zero counterexample sequence
    {
        struct BesselOpts {
            std::string format = "csv";
            unsigned n = 400, precision = 0;
        };
        auto opts = std::make_shared<BesselOpts>();
        auto* cmd = app.add_subcommand(
            "bessel", "alternating binomial sums of 1/sqrt(k^2+1) for orders 0..n");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--n", opts->n, "highest order (default 400)")
            ->check(CLI::Range(0u, 20000u));
        cmd->add_option("--precision", opts->precision, "working precision in bits")
            ->check(CLI::Range(16u, 1048576u));
        cmd->add_option("--format", opts->format, "output format")->check(CLI::IsMember(formats));
        cmd->callback([opts, &out]() {
            auto f = catalog("bessel_recip_sqrt");
            auto seq = forward_difference_sequence(f, Scalar(0), Scalar(1), opts->n,
                                                   select_policy(opts->precision));
            std::vector<std::string> norm;
            norm.reserve(seq.size());
            for (unsigned n = 0; n < seq.size(); ++n) norm.push_back(normalized_str(seq[n], n));
            emit_sequence(out, opts->format, seq, norm);
        });
    }

    // verify: the end-to-end acceptance suite
    {
        struct VerifyOpts {
            int criterion = 0;
        };
        auto opts = std::make_shared<VerifyOpts>();
        auto* cmd = app.add_subcommand("verify", "run the verification suite");
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--criterion", opts->criterion, "run a single criterion (1..10)")
            ->check(CLI::Range(1, 10));
        cmd->callback([opts, &out, &exit_code]() {
            std::vector<CriterionResult> results;
            if (opts->criterion != 0)
                results.push_back(run_criterion(opts->criterion));
            else
                results = run_acceptance();
            unsigned passed = 0;
            for (const auto& r : results) {
                print_criterion(r, out);
                if (r.passed) ++passed;
            }
            out << "acceptance: " << passed << "/" << results.size() << " criteria passed\n";
            if (passed != results.size()) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

int cli_run(int argc, const char* const* argv) {
    return cli_run(argc, argv, std::cout, std::cerr);
}

}  // namespace newtonforge
