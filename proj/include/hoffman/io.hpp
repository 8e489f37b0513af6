#ifndef HOFFMAN_IO_HPP
#define HOFFMAN_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hoffman/analyzer.hpp"

namespace hoffman::io {

using json = nlohmann::json;

/// Thrown for malformed input files; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"A": [["1","1"], ...], "b": ["1", ...]}. Entries are scalar strings;
/// plain JSON integers are accepted too.
InequalitySystem system_from_json(const json& j);
json system_to_json(const InequalitySystem& sys);

InequalitySystem load_system(const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

/// Writes via a temporary file and rename so readers never see a partial file.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// {"point": [...], "active": [1-based indices], "hull_multipliers": [...]}
json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

/// {"exact": "1/2", "approx": 0.5}
json exact_value(const Scalar& s);
json exact_value_sq(const Scalar& sq);  ///< approx is the square root

json index_set_json(const IndexSet& set);
json vec_json(const Vec& v);
Vec vec_from_json(const json& j);

/// "0,1/2,-3" -> (0, 1/2, -3)
Vec parse_csv_vec(std::string_view text);

/// Stable hex digest (FNV-1a 64) of the canonical system encoding.
std::string system_digest(const InequalitySystem& sys);

}  // namespace hoffman::io

#endif  // HOFFMAN_IO_HPP
