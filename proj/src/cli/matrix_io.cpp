#include "sector_radius/cli/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>

namespace sector_radius::cli {
namespace {

double real_at(const Json& v, const char* where) {
    if (!v.is_number()) throw InputError(std::string(where) + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw InputError(std::string(where) + ": value is not finite");
    return x;
}

void dump_to(const Json& v, std::string& out) {
    switch (v.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ", ";
                first = false;
                out += Json(key).dump();
                out += ": ";
                dump_to(item, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ", ";
                dump_to(v[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: out += format_real(v.get<double>()); break;
        default: out += v.dump();
    }
}

}  // namespace

std::string format_real(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ComplexMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("matrix document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw InputError("matrix document needs an integer \"n\"");
    const auto n_signed = doc["n"].get<long long>();
    if (n_signed < 1) throw InputError("\"n\" must be at least 1");
    const auto n = static_cast<std::size_t>(n_signed);
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw InputError("matrix document needs an \"entries\" array");
    const auto& rows = doc["entries"];
    if (rows.size() != n) throw InputError("\"entries\" must have exactly n rows");

    std::vector<Complex> values;
    values.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n) throw InputError("row " + std::to_string(i) + " must hold exactly n entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& pair = row[j];
            const std::string where = "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (!pair.is_array() || pair.size() != 2) throw InputError(where + ": expected [re, im]");
            values.emplace_back(real_at(pair[0], where.c_str()), real_at(pair[1], where.c_str()));
        }
    }
    return ComplexMatrix(n, std::move(values));
}

ComplexMatrix parse_matrix_document(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    return matrix_from_json(doc);
}

ComplexMatrix read_matrix_document(std::istream& in) {
    const std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_matrix_document(text);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    Json doc = Json::object();
    doc["n"] = m.size();
    doc["entries"] = std::move(rows);
    return doc;
}

std::string dump(const Json& value) {
    std::string out;
    dump_to(value, out);
    return out;
}

}  // namespace sector_radius::cli
