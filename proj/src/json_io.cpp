#include "padicop/json_io.hpp"

#include <string>

namespace padicop::io {

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorKind::InvalidArgument, "malformed document: " + what);
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

long integer_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer())
        malformed(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

// Decimal strings are canonical; small JSON integers are tolerated on input.
std::string integer_text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    malformed("expected a decimal integer string");
}

Prime prime_field(const json& j)
{
    const long p = integer_field(j, "p");
    if (p < 3)
        malformed("p must be an odd prime");
    return Prime(static_cast<unsigned long>(p));
}

int precision_field(const json& j)
{
    const long prec = integer_field(j, "prec");
    if (prec < 1 || prec > 1 << 16)
        malformed("prec out of range");
    return static_cast<int>(prec);
}

} // namespace

json to_json(const PadicInt& x)
{
    return {{"p", x.prime().value()}, {"prec", x.precision()}, {"val", x.to_string()}};
}

PadicInt padic_int_from_json(const json& j)
{
    return PadicInt::from_string(integer_text(field(j, "val")), prime_field(j), precision_field(j));
}

json to_json(const PadicMatrix& a)
{
    json rows = json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dimension(); ++j)
            row.push_back(a.residue(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return {{"p", a.prime().value()}, {"prec", a.precision()}, {"n", a.dimension()}, {"entries", rows}};
}

PadicMatrix matrix_from_json(const json& j)
{
    if (j.is_object() && !j.contains("entries") && j.contains("matrix"))
        return matrix_from_json(j.at("matrix"));
    const Prime p = prime_field(j);
    const int prec = precision_field(j);
    const long n = integer_field(j, "n");
    if (n < 1)
        malformed("n must be positive");
    const json& rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        malformed("entries must have n rows");
    std::vector<mpz_class> flat;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            malformed("every row must have n entries");
        for (const auto& e : row) {
            mpz_class v;
            const std::string text = integer_text(e);
            if (text.empty() || v.set_str(text, 10) != 0)
                malformed("entry '" + text + "' is not a decimal integer");
            flat.push_back(v);
        }
    }
    return PadicMatrix(p, prec, static_cast<std::size_t>(n), flat);
}

json to_json(const StrongNormalCertificate& cert)
{
    json eig = json::array();
    for (const auto& l : cert.eigenvalues())
        eig.push_back(to_json(l));
    json proj = json::array();
    for (const auto& e : cert.projectors())
        proj.push_back(to_json(e));
    return {{"p", cert.prime().value()},
            {"prec", cert.precision()},
            {"matrix", to_json(cert.matrix())},
            {"eigenvalues", eig},
            {"projectors", proj}};
}

StrongNormalCertificate certificate_from_json(const json& j)
{
    const PadicMatrix a = matrix_from_json(field(j, "matrix"));
    const json& eig = field(j, "eigenvalues");
    const json& proj = field(j, "projectors");
    if (!eig.is_array() || !proj.is_array() || eig.size() != proj.size() || eig.empty())
        malformed("eigenvalues and projectors must be equally long, nonempty arrays");
    std::vector<PadicInt> values;
    std::vector<PadicMatrix> projectors;
    for (const auto& e : eig)
        values.push_back(padic_int_from_json(e));
    for (const auto& e : proj)
        projectors.push_back(matrix_from_json(e));
    StrongNormalCertificate cert(a, std::move(values), std::move(projectors));
    if (!verify_certificate(cert).ok())
        throw Error(ErrorKind::InvalidArgument, "certificate identities do not hold");
    return cert;
}

json to_json(const SeriesBudget& budget)
{
    return {{"target", budget.target}, {"guard", budget.guard}};
}

SeriesBudget budget_from_json(const json& j)
{
    const long target = integer_field(j, "target");
    const long guard = integer_field(j, "guard");
    if (target < 1 || guard < 0)
        malformed("budget needs target >= 1 and guard >= 0");
    return SeriesBudget{static_cast<int>(target), static_cast<int>(guard)};
}

json to_json(const OneParamGroup& group)
{
    return {{"generator", to_json(group.generator().matrix())},
            {"certificate", to_json(group.generator())},
            {"budget", to_json(group.budget())}};
}

OneParamGroup group_from_json(const json& j, std::optional<SeriesBudget> fallback)
{
    const PadicMatrix a = matrix_from_json(field(j, "generator"));
    SeriesBudget budget = j.contains("budget") ? budget_from_json(j.at("budget"))
                          : fallback           ? *fallback
                                               : SeriesBudget::automatic(a.prime(), a.precision());
    if (j.contains("certificate")) {
        StrongNormalCertificate cert = certificate_from_json(j.at("certificate"));
        if (!(cert.matrix() == a))
            malformed("certificate does not belong to the generator");
        return OneParamGroup(std::move(cert), budget);
    }
    return OneParamGroup::from_generator(a, budget);
}

json to_json(const Valuation& v)
{
    if (v.is_at_least())
        return {{"at_least", v.value()}};
    return v.value();
}

} // namespace padicop::io
