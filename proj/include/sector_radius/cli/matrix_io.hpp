#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sector_radius/complex_matrix.hpp"

namespace sector_radius::cli {

/// Malformed input: bad JSON, wrong document shape, unreadable file.
/// Kept apart from sector_radius::Error because the CLI reports it as a usage error.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// MatrixDocument: {"n": n, "entries": [[[re, im], ...], ...]}. Extra keys are ignored.
ComplexMatrix matrix_from_json(const Json& doc);
ComplexMatrix parse_matrix_document(std::string_view text);
ComplexMatrix read_matrix_document(std::istream& in);

Json matrix_to_json(const ComplexMatrix& m);
Json complex_to_json(Complex z);

/// Compact JSON with reals as %.17g (round-trips every double) and
/// non-finite reals as null.
std::string dump(const Json& value);

std::string format_real(double x);

}  // namespace sector_radius::cli
