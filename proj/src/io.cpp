#include "hoffman/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hoffman::io {

namespace {

Scalar scalar_from_json(const json& j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(j.dump());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a scalar string such as \"-2/7\" or an integer, got " + j.dump());
}

}  // namespace

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return Vec(std::move(out));
}

json vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& e : v) arr.push_back(e.str());
  return arr;
}

InequalitySystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b")) {
    throw InputError("system file must be an object with keys \"A\" and \"b\"");
  }
  const json& ja = j.at("A");
  if (!ja.is_array() || ja.empty()) throw InputError("\"A\" must be a non-empty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : ja) rows.push_back(vec_from_json(r));
  const std::size_t n = rows.front().dim();
  if (n == 0) throw InputError("rows of \"A\" must be non-empty");
  for (const auto& r : rows) {
    if (r.dim() != n) throw InputError("\"A\" is not rectangular");
  }
  Vec b = vec_from_json(j.at("b"));
  if (b.dim() != rows.size()) throw InputError("\"b\" must have one entry per row of \"A\"");
  return InequalitySystem(Mat(std::move(rows)), std::move(b));
}

json system_to_json(const InequalitySystem& sys) {
  json a = json::array();
  for (std::size_t i = 0; i < sys.m(); ++i) a.push_back(vec_json(sys.row(i)));
  return json{{"A", a}, {"b", vec_json(sys.b())}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

InequalitySystem load_system(const std::filesystem::path& path) { return system_from_json(load_json(path)); }

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

json index_set_json(const IndexSet& set) { return set.one_based(); }

json certificate_to_json(const Certificate& cert) {
  return json{{"point", vec_json(cert.point)},
              {"active", index_set_json(cert.active)},
              {"hull_multipliers", vec_json(cert.hull_multipliers)}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("point") || !j.contains("active") || !j.contains("hull_multipliers")) {
    throw InputError("certificate must have \"point\", \"active\" and \"hull_multipliers\"");
  }
  const json& ja = j.at("active");
  if (!ja.is_array() || ja.empty()) throw InputError("\"active\" must be a non-empty array");
  std::vector<std::size_t> members;
  for (const auto& e : ja) {
    if (!e.is_number_integer() || e.get<long long>() < 1) {
      throw InputError("\"active\" entries must be 1-based positive integers");
    }
    members.push_back(static_cast<std::size_t>(e.get<long long>() - 1));
  }
  return Certificate{vec_from_json(j.at("point")), IndexSet(std::move(members)),
                     vec_from_json(j.at("hull_multipliers"))};
}

json exact_value(const Scalar& s) { return json{{"exact", s.str()}, {"approx", s.to_double()}}; }

json exact_value_sq(const Scalar& sq) {
  return json{{"exact", sq.str()}, {"approx", std::sqrt(sq.to_double())}};
}

Vec parse_csv_vec(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    try {
      out.push_back(Scalar::parse(item));
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vec(std::move(out));
}

std::string system_digest(const InequalitySystem& sys) {
  const std::string canon = system_to_json(sys).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hoffman::io
