#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "stieltjeskit/bounds.hpp"
#include "stieltjeskit/characters.hpp"
#include "stieltjeskit/lfunc.hpp"
#include "stieltjeskit/stieltjes.hpp"
#include "stieltjeskit/version.hpp"
#include "stieltjeskit/zerofree.hpp"

namespace py = pybind11;
using namespace sk;

namespace {

// High-precision values cross the boundary as decimal strings; parse them
// with decimal/mpmath on the python side.
std::string str_of(const BigReal& x, int digits) { return x.str(digits); }

Rational parse_rational(const std::string& text) {
    auto pos = text.find('/');
    if (pos == std::string::npos) return Rational(std::stol(text));
    return Rational(std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 1)));
}

PrecisionContext ctx_of(int precision, int guard) { return {precision, guard}; }

py::dict cert_dict(const DiskCertificate& cert, int precision) {
    py::dict d;
    d["t0"] = str_of(cert.t0, precision);
    d["head"] = str_of(cert.head, precision);
    d["tail"] = str_of(cert.tail, precision);
    d["margin"] = str_of(cert.margin, precision);
    d["valid"] = cert.valid();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Laurent-Stieltjes constants, explicit bounds on |gamma_n(chi)|/n!, Taylor "
              "remainder certificates near s = 1, and the zero-free disk for zeta.  "
              "High-precision reals are returned as decimal strings.";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "StieltjesError");

    m.def(
        "gamma_zeta",
        [](int n, int precision, int guard) {
            return str_of(gamma_zeta(n, ctx_of(precision, guard)), precision);
        },
        py::arg("n"), py::arg("precision") = 50, py::arg("guard") = 10,
        "gamma_n of the Riemann zeta Laurent expansion");

    m.def(
        "gamma_hurwitz",
        [](int n, const std::string& a, int precision, int guard) {
            return str_of(gamma_hurwitz(n, parse_rational(a), ctx_of(precision, guard)),
                          precision);
        },
        py::arg("n"), py::arg("a"), py::arg("precision") = 50, py::arg("guard") = 10,
        "gamma_n(a) of the Hurwitz zeta expansion; a is a rational string like '1/3'");

    m.def(
        "gamma_chi",
        [](int n, long q, long index, int precision, int guard) {
            auto v = gamma_chi(n, character_by_index(q, index), ctx_of(precision, guard));
            return py::make_tuple(str_of(v.re, precision), str_of(v.im, precision));
        },
        py::arg("n"), py::arg("q"), py::arg("index"), py::arg("precision") = 50,
        py::arg("guard") = 10, "gamma_n(chi) for the character (q, index); returns (re, im)");

    m.def(
        "gamma_over_factorial",
        [](int n, long q, long index, int precision, int guard) {
            return str_of(
                gamma_over_factorial(n, character_by_index(q, index), ctx_of(precision, guard)),
                precision);
        },
        py::arg("n"), py::arg("q"), py::arg("index"), py::arg("precision") = 50,
        py::arg("guard") = 10);

    m.def(
        "characters",
        [](long q) {
            py::list rows;
            for (const auto& chi : enumerate_characters(q)) {
                py::dict d;
                d["index"] = chi.index();
                d["conductor"] = chi.conductor();
                d["parity"] = chi.is_even() ? "even" : "odd";
                d["primitive"] = chi.is_primitive();
                d["principal"] = chi.is_principal();
                d["order"] = chi.order();
                d["real"] = chi.is_real();
                rows.append(d);
            }
            return rows;
        },
        py::arg("q"), "the character table mod q");

    m.def(
        "hurwitz_zeta",
        [](const std::string& s_re, const std::string& s_im, const std::string& a, int precision,
           int guard) {
            auto ctx = ctx_of(precision, guard);
            PrecisionScope scope(ctx.total_digits());
            BigComplex s{BigReal(s_re), BigReal(s_im)};
            auto v = hurwitz_zeta(s, parse_rational(a), ctx);
            return py::make_tuple(str_of(v.re, precision), str_of(v.im, precision));
        },
        py::arg("s_re"), py::arg("s_im") = "0", py::arg("a") = "1", py::arg("precision") = 50,
        py::arg("guard") = 10);

    m.def(
        "l_eval",
        [](const std::string& s_re, const std::string& s_im, long q, long index, int precision,
           int guard) {
            auto ctx = ctx_of(precision, guard);
            PrecisionScope scope(ctx.total_digits());
            BigComplex s{BigReal(s_re), BigReal(s_im)};
            auto v = l_eval(s, character_by_index(q, index), ctx);
            return py::make_tuple(str_of(v.re, precision), str_of(v.im, precision));
        },
        py::arg("s_re"), py::arg("s_im"), py::arg("q"), py::arg("index"),
        py::arg("precision") = 50, py::arg("guard") = 10);

    m.def(
        "zeta_laurent",
        [](const std::string& s_re, const std::string& s_im, int order, int precision,
           int guard) {
            auto ctx = ctx_of(precision, guard);
            auto table = StieltjesTable::zeta(order, ctx);
            PrecisionScope scope(ctx.total_digits());
            BigComplex s{BigReal(s_re), BigReal(s_im)};
            auto v = zeta_laurent_eval(s, order, table, ctx);
            return py::make_tuple(str_of(v.re, precision), str_of(v.im, precision));
        },
        py::arg("s_re"), py::arg("s_im") = "0", py::arg("order") = 30, py::arg("precision") = 50,
        py::arg("guard") = 10);

    m.def(
        "theorem1_bound",
        [](long n, long q, int precision) {
            auto b = theorem1_bound(n, q, ctx_of(precision, 10));
            py::dict d;
            d["n"] = b.n;
            d["q"] = b.q;
            d["theta"] = str_of(b.theta, precision);
            d["c_term"] = str_of(b.c_term, precision);
            d["d_term"] = str_of(b.d_term, precision);
            d["h_value"] = str_of(b.h_value, precision);
            d["combined"] = str_of(b.combined, precision);
            return d;
        },
        py::arg("n"), py::arg("q") = 1, py::arg("precision") = 50);

    m.def(
        "matsuoka_bound",
        [](long n, int precision) {
            return str_of(matsuoka_bound(n, ctx_of(precision, 10)), precision);
        },
        py::arg("n"), py::arg("precision") = 50);

    m.def(
        "crossover",
        [](long q, long n_max, int precision) { return crossover(q, n_max, ctx_of(precision, 10)); },
        py::arg("q") = 1, py::arg("n_max") = 100, py::arg("precision") = 50);

    m.def(
        "application_a_bound",
        [](long q, int precision) {
            return str_of(application_a_bound(q, ctx_of(precision, 10)), precision);
        },
        py::arg("q"), py::arg("precision") = 50);

    m.def(
        "taylor_certificate",
        [](long q, long index, int samples, int precision) {
            auto ctx = ctx_of(precision, 10);
            auto reports = verify_application_a(character_by_index(q, index), samples, ctx);
            py::list rows;
            for (const auto& r : reports) {
                py::dict d;
                d["s_re"] = str_of(r.s.re, precision);
                d["s_im"] = str_of(r.s.im, precision);
                d["measured_remainder"] = str_of(r.measured_remainder, 12);
                d["certified_bound"] = str_of(r.certified_bound, 12);
                d["pass"] = r.within_bound();
                rows.append(d);
            }
            return rows;
        },
        py::arg("q"), py::arg("index"), py::arg("samples") = 8, py::arg("precision") = 40);

    m.def(
        "zerofree",
        [](const std::string& tolerance, int precision) {
            auto ctx = ctx_of(precision, 10);
            auto table = StieltjesTable::zeta(11, ctx);
            PrecisionScope scope(ctx.total_digits());
            auto cert = find_t0(table, BigReal(tolerance), ctx);
            auto d = cert_dict(cert, precision);
            BigReal sqrt_two = sqrt(BigReal(2));
            d["sqrt_two"] = str_of(round_to(sqrt_two, precision), precision);
            d["exceeds_sqrt_two"] = cert.t0 > sqrt_two;
            d["area_ratio"] = str_of(round_to(cert.t0 * cert.t0 / 2, precision), precision);
            return d;
        },
        py::arg("tolerance") = "1e-6", py::arg("precision") = 50,
        "largest certified zero-free radius by bisection");

    m.def(
        "minorant_at",
        [](const std::string& radius, int precision) {
            auto ctx = ctx_of(precision, 10);
            auto table = StieltjesTable::zeta(11, ctx);
            PrecisionScope scope(ctx.total_digits());
            return cert_dict(minorant(BigReal(radius), table, ctx), precision);
        },
        py::arg("radius"), py::arg("precision") = 50);

    m.def(
        "verify_proof_constants",
        [](long n_min, long n_max, int precision) {
            auto rep = verify_proof_constants(n_min, n_max, ctx_of(precision, 10));
            py::list rows;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["check"] = c.name;
                d["pass"] = c.pass;
                d["worst_margin"] = str_of(c.worst_margin, 12);
                d["at"] = c.worst_at;
                rows.append(d);
            }
            return rows;
        },
        py::arg("n_min") = 12, py::arg("n_max") = 100, py::arg("precision") = 50);
}
