#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "padicop/unitary_group.hpp"
#include "padicop/version.hpp"

namespace py = pybind11;
using namespace padicop;

namespace {

// Python ints are unbounded; go through the decimal string.
mpz_class to_mpz(const py::int_& n)
{
    return mpz_class(py::str(n).cast<std::string>());
}

py::int_ to_py(const mpz_class& n)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10)));
}

PadicMatrix matrix_from_rows(const std::vector<std::vector<py::int_>>& rows, unsigned long p, int prec)
{
    const std::size_t n = rows.size();
    std::vector<mpz_class> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "matrix rows must form a square");
        for (const auto& x : row)
            flat.push_back(to_mpz(x));
    }
    return PadicMatrix(Prime(p), prec, n, flat);
}

py::list matrix_rows(const PadicMatrix& a)
{
    py::list out;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < a.dimension(); ++j)
            row.append(to_py(a.residue(i, j)));
        out.append(row);
    }
    return out;
}

SeriesBudget make_budget(unsigned long p, int target, std::optional<int> guard)
{
    return guard ? SeriesBudget::with_guard(Prime(p), target, *guard) : SeriesBudget::automatic(Prime(p), target);
}

py::object valuation_to_py(const Valuation& v)
{
    if (v.is_at_least())
        return py::dict(py::arg("at_least") = v.value());
    return py::int_(v.value());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "p-adic spectral calculus and one-parameter unitary groups";
    m.attr("__version__") = kVersion;

    static py::exception<Error> padic_error(m, "PadicError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr)
                std::rethrow_exception(ptr);
        } catch (const Error& e) {
            py::object inst = py::handle(padic_error.ptr())(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            inst.attr("is_refusal") = is_refusal(e.kind());
            PyErr_SetObject(padic_error.ptr(), inst.ptr());
        }
    });

    py::class_<SeriesBudget>(m, "SeriesBudget")
        .def(py::init(&make_budget), py::arg("p"), py::arg("target") = 32, py::arg("guard") = py::none())
        .def_readonly("target", &SeriesBudget::target)
        .def_readonly("guard", &SeriesBudget::guard)
        .def_property_readonly("working", &SeriesBudget::working)
        .def("__repr__", [](const SeriesBudget& b) {
            return "SeriesBudget(target=" + std::to_string(b.target) + ", guard=" + std::to_string(b.guard) + ")";
        });

    py::class_<PadicInt>(m, "PadicInt")
        .def(py::init([](const py::int_& n, unsigned long p, int prec) {
                 return PadicInt::from_integer(to_mpz(n), Prime(p), prec);
             }),
             py::arg("value"), py::arg("p"), py::arg("prec") = 32)
        .def_property_readonly("p", [](const PadicInt& x) { return x.prime().value(); })
        .def_property_readonly("prec", &PadicInt::precision)
        .def_property_readonly("residue", [](const PadicInt& x) { return to_py(x.residue()); })
        .def_property_readonly("valuation", [](const PadicInt& x) { return valuation_to_py(x.valuation()); })
        .def("truncated", &PadicInt::truncated)
        .def("reduce_mod_p", &PadicInt::reduce_mod_p)
        .def("inverse", &PadicInt::inverse)
        .def("__add__", [](const PadicInt& a, const PadicInt& b) { return a + b; })
        .def("__sub__", [](const PadicInt& a, const PadicInt& b) { return a - b; })
        .def("__mul__", [](const PadicInt& a, const PadicInt& b) { return a * b; })
        .def("__neg__", [](const PadicInt& a) { return -a; })
        .def("__eq__", [](const PadicInt& a, const PadicInt& b) { return a == b; })
        .def("__int__", [](const PadicInt& x) { return to_py(x.residue()); })
        .def("__repr__", [](const PadicInt& x) {
            return x.to_string() + " + O(" + std::to_string(x.prime().value()) + "^" +
                   std::to_string(x.precision()) + ")";
        });

    m.def("divide_exact", &divide_exact, py::arg("a"), py::arg("b"));
    m.def("congruent", py::overload_cast<const PadicInt&, const PadicInt&, int>(&congruent), py::arg("a"),
          py::arg("b"), py::arg("digits"));

    m.def(
        "principal_power",
        [](const PadicInt& z, const PadicInt& lambda, std::optional<SeriesBudget> budget) {
            const SeriesBudget b = budget ? *budget : SeriesBudget::automatic(z.prime(), 32);
            return principal_power(z, lambda, b).value();
        },
        py::arg("z"), py::arg("exponent"), py::arg("budget") = py::none(),
        "(1 + z)^exponent for v(z) >= 1 via the Mahler series.");
    m.def(
        "mahler_coeff", [](unsigned long n, const PadicInt& lambda) { return mahler_coeff(n, lambda); },
        py::arg("n"), py::arg("lam"));
    m.def(
        "plog", [](const PadicInt& u, const SeriesBudget& b) { return plog(PrincipalUnit(u), b); }, py::arg("u"),
        py::arg("budget"));
    m.def(
        "pexp", [](const PadicInt& x, const SeriesBudget& b) { return pexp(x, b).value(); }, py::arg("x"),
        py::arg("budget"));
    m.def(
        "zeta_of", [](const PadicInt& s, const SeriesBudget& b) { return zeta_of(PrincipalUnit(s), b); },
        py::arg("s"), py::arg("budget"));

    py::class_<PadicMatrix>(m, "PadicMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"), py::arg("p"), py::arg("prec") = 32)
        .def_static("identity", [](unsigned long p, int prec, std::size_t n) {
            return PadicMatrix::identity(Prime(p), prec, n);
        })
        .def_property_readonly("p", [](const PadicMatrix& a) { return a.prime().value(); })
        .def_property_readonly("prec", &PadicMatrix::precision)
        .def_property_readonly("n", &PadicMatrix::dimension)
        .def("rows", &matrix_rows)
        .def("norm_valuation", [](const PadicMatrix& a) { return valuation_to_py(op_norm(a)); })
        .def("__add__", [](const PadicMatrix& a, const PadicMatrix& b) { return a + b; })
        .def("__sub__", [](const PadicMatrix& a, const PadicMatrix& b) { return a - b; })
        .def("__matmul__", [](const PadicMatrix& a, const PadicMatrix& b) { return a * b; })
        .def("__eq__", [](const PadicMatrix& a, const PadicMatrix& b) { return a == b; })
        .def("__repr__", [](const PadicMatrix& a) {
            return "PadicMatrix(" + py::repr(matrix_rows(a)).cast<std::string>() + ", p=" +
                   std::to_string(a.prime().value()) + ", prec=" + std::to_string(a.precision()) + ")";
        });

    py::class_<StrongNormalCertificate>(m, "Certificate")
        .def_property_readonly("matrix", &StrongNormalCertificate::matrix)
        .def_property_readonly("eigenvalues", &StrongNormalCertificate::eigenvalues)
        .def_property_readonly("projectors", &StrongNormalCertificate::projectors)
        .def_property_readonly("prec", &StrongNormalCertificate::precision)
        .def("__len__", &StrongNormalCertificate::size)
        .def("verify", [](const StrongNormalCertificate& c) { return verify_certificate(c).ok(); })
        .def("spectral_measure", &spectral_measure, py::arg("subset"))
        .def("apply", &functional_calculus, py::arg("phi"), "phi(A) for a callable PadicInt -> PadicInt.");

    m.def("certify", &certify_strongly_normal, py::arg("a"));

    py::class_<UnitaryOperator>(m, "UnitaryOperator")
        .def_property_readonly("matrix", &UnitaryOperator::matrix)
        .def_property_readonly("perturbation", &UnitaryOperator::perturbation)
        .def_property_readonly("spectrum", [](const UnitaryOperator& u) {
            std::vector<PadicInt> out;
            for (const auto& s : u.spectrum())
                out.push_back(s.value());
            return out;
        });

    m.def("make_unitary", &make_unitary, py::arg("v"));

    py::class_<GroupCheck>(m, "GroupCheck")
        .def_readonly("passed", &GroupCheck::pass)
        .def_readonly("required", &GroupCheck::required)
        .def_property_readonly("observed", [](const GroupCheck& c) { return valuation_to_py(c.observed); });

    py::class_<OneParamGroup>(m, "OneParamGroup")
        .def(py::init([](const PadicMatrix& a, std::optional<SeriesBudget> budget) {
                 const SeriesBudget b = budget ? *budget : SeriesBudget::automatic(a.prime(), a.precision());
                 return OneParamGroup::from_generator(a, b);
             }),
             py::arg("generator"), py::arg("budget") = py::none())
        .def_property_readonly("generator", &OneParamGroup::generator)
        .def_property_readonly("budget", &OneParamGroup::budget)
        .def("__call__",
             [](const OneParamGroup& g, const PadicInt& s) { return evaluate(g, PrincipalUnit(s)).matrix(); },
             py::arg("s"))
        .def("evaluate",
             [](const OneParamGroup& g, const PadicInt& s) { return evaluate(g, PrincipalUnit(s)); }, py::arg("s"))
        .def(
            "mahler_series",
            [](const OneParamGroup& g, const PadicInt& s) { return evaluate_mahler_series(g, PrincipalUnit(s)); },
            py::arg("s"))
        .def("additive", &additive_evaluate, py::arg("z"))
        .def(
            "check_law",
            [](const OneParamGroup& g, const PadicInt& s1, const PadicInt& s2) {
                return verify_group_law(g, PrincipalUnit(s1), PrincipalUnit(s2));
            },
            py::arg("s1"), py::arg("s2"))
        .def(
            "lipschitz",
            [](const OneParamGroup& g, const PadicInt& s1, const PadicInt& s2) {
                return lipschitz_check(g, PrincipalUnit(s1), PrincipalUnit(s2));
            },
            py::arg("s1"), py::arg("s2"))
        .def(
            "digit_limit",
            [](const OneParamGroup& g, const PadicInt& s, int n) {
                return digit_limit_approx(g, PrincipalUnit(s), n);
            },
            py::arg("s"), py::arg("n"));

    m.def(
        "stone_recover",
        [](const PadicMatrix& u, std::optional<SeriesBudget> budget) {
            const SeriesBudget b = budget ? *budget : SeriesBudget::automatic(u.prime(), u.precision());
            return stone_recover(u, b);
        },
        py::arg("u"), py::arg("budget") = py::none(), "Generator A with U(1 + p) = u.");
}
