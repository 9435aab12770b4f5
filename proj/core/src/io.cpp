#include "strmod/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace strmod {

namespace {

using nlohmann::json;

json field_to_json(const FieldSpec& f) {
  if (f.is_rationals())
    return json("Q");
  return json{{"Fp", f.characteristic()}};
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q")
      return FieldSpec::rationals();
    throw DomainError("unknown field name \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer())
    return FieldSpec::prime(j["Fp"].get<std::int64_t>());
  throw DomainError("field must be \"Q\" or {\"Fp\": p}");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  const FieldSpec& f = m.field();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Scalar v = m.at(i, j);
      if (f.is_rationals())
        row.push_back(scalar_to_text(f, v));
      else
        row.push_back(v.residue());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
  if (j.is_number_integer())
    return f.from_int(j.get<std::int64_t>());
  if (j.is_string())
    return scalar_from_text(f, j.get<std::string>());
  throw DomainError("matrix entries must be integers or \"num/den\" strings");
}

Matrix matrix_from_json(const FieldSpec& f, const json& j, int dim,
                        const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw DomainError(std::string("matrix \"") + name + "\" must have " +
                      std::to_string(dim) + " rows");
  Matrix m(f, dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw DomainError(std::string("matrix \"") + name + "\" row " +
                        std::to_string(i) + " must have " +
                        std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      m.set(i, k, scalar_from_json(f, row[static_cast<std::size_t>(k)]));
  }
  return m;
}

} // namespace

Scalar scalar_from_text(const FieldSpec& f, std::string_view text) {
  const std::string s(text);
  try {
    mpq_class q(s);
    if (q.get_den() == 0)
      throw DomainError("zero denominator in scalar \"" + s + "\"");
    q.canonicalize();
    if (f.is_rationals())
      return Scalar(q);
    // reduce the fraction into GF(p); % through mpz handles any size
    mpz_class np = q.get_num() % f.characteristic();
    mpz_class dp = q.get_den() % f.characteristic();
    return f.div(f.from_int(np.get_si()), f.from_int(dp.get_si()));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed scalar \"" + s + "\"");
  }
}

std::string scalar_to_text(const FieldSpec& f, const Scalar& v) {
  if (f.is_rationals())
    return v.rational().get_num().get_str() + "/" +
           v.rational().get_den().get_str();
  return std::to_string(v.residue());
}

std::string module_to_json(const ModuleRep& m) {
  json doc;
  doc["dim"] = m.dim();
  doc["field"] = field_to_json(m.field());
  doc["x"] = matrix_to_json(m.act_x());
  doc["y"] = matrix_to_json(m.act_y());
  return doc.dump();
}

ModuleRep module_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed module document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("field") ||
      !doc.contains("x") || !doc.contains("y"))
    throw DomainError("module document needs dim, field, x and y");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 0)
    throw DomainError("dim must be a nonnegative integer");
  const int dim = doc["dim"].get<int>();
  const FieldSpec f = field_from_json(doc["field"]);
  Matrix x = matrix_from_json(f, doc["x"], dim, "x");
  Matrix y = matrix_from_json(f, doc["y"], dim, "y");
  return ModuleRep::make(std::move(x), std::move(y));
}

ModuleRep load_module(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DomainError("cannot open module file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return module_from_json(buf.str());
}

void save_module(const ModuleRep& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw DomainError("cannot write module file: " + path);
  out << module_to_json(m) << '\n';
}

} // namespace strmod
