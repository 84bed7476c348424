#include "hypdiv/json_io.hpp"

#include <regex>

namespace hypdiv {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t integer(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    static const std::regex re("-?[0-9]{1,18}");
    const std::string s = j.get<std::string>();
    if (std::regex_match(s, re)) return std::stoll(s);
  }
  bad("expected an integer, got " + j.dump());
}

mpq_class rational(const Json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) bad("expected a rational string, got " + j.dump());
  static const std::regex re("(-?[0-9]+)(/([0-9]+))?");
  const std::string s = j.get<std::string>();
  std::smatch m;
  if (!std::regex_match(s, m, re)) bad("malformed rational '" + s + "'");
  mpz_class num(m[1].str()), den(m[3].matched ? m[3].str() : "1");
  if (den == 0) bad("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Json field_to_json(Field f) {
  Json j;
  switch (f.kind()) {
    case Field::Kind::rationals:
      j["p"] = nullptr;
      j["m"] = 1;
      break;
    case Field::Kind::prime_field:
      j["p"] = f.characteristic();
      j["m"] = 1;
      break;
    case Field::Kind::extension_field:
      j["p"] = f.characteristic();
      j["m"] = f.degree();
      j["modulus"] = f.fp_modulus();
      break;
    case Field::Kind::number_field: {
      j["p"] = nullptr;
      j["m"] = 2;
      Json mod = Json::array();
      for (const auto& c : f.q_modulus()) mod.push_back(c.get_str());
      j["modulus"] = mod;
      break;
    }
  }
  return j;
}

Field field_from_json(const Json& j) {
  if (!j.is_object()) bad("field must be an object");
  const Json& p = member(j, "p");
  const int m = j.contains("m") ? static_cast<int>(integer(j["m"])) : 1;
  if (p.is_null()) {
    if (!j.contains("modulus")) {
      if (m != 1) bad("field over Q with m > 1 needs a modulus");
      return Field::rationals();
    }
    std::vector<mpq_class> mod;
    for (const auto& c : j["modulus"]) mod.push_back(rational(c));
    if (static_cast<int>(mod.size()) != m + 1) bad("modulus length does not match m");
    return Field::number_field(std::move(mod));
  }
  const std::int64_t prime = integer(p);
  if (!j.contains("modulus")) return Field::finite(prime, m);
  const Json& mj = j["modulus"];
  if (!mj.is_array()) bad("modulus must be an array");
  std::vector<std::int64_t> mod;
  for (const auto& c : mj) mod.push_back(integer(c));
  if (static_cast<int>(mod.size()) != m + 1) bad("modulus length does not match m");
  return Field::finite(prime, std::move(mod));
}

Json scalar_to_json(const FieldElement& x) {
  const Field f = x.field();
  if (!f) return std::to_string(x.coeff(0));
  if (f.is_finite()) {
    Json a = Json::array();
    for (int i = 0; i < f.degree(); ++i) a.push_back(x.coeff(i));
    return a;
  }
  if (f.kind() == Field::Kind::rationals) return x.rational().get_str();
  Json a = Json::array();
  for (int i = 0; i < f.degree(); ++i)
    a.push_back(i < static_cast<int>(x.q_coeffs().size()) ? x.q_coeffs()[i].get_str() : std::string("0"));
  return a;
}

FieldElement scalar_from_json(const Json& j, Field f) {
  if (f.is_finite()) {
    if (!j.is_array()) return FieldElement::from_int(f, integer(j));
    if (j.empty() || static_cast<int>(j.size()) > f.degree())
      bad("coefficient array " + j.dump() + " does not fit " + f.name());
    std::vector<std::int64_t> c;
    for (const auto& x : j) c.push_back(integer(x));
    return FieldElement::from_coeffs(f, c);
  }
  if (f.kind() == Field::Kind::rationals) {
    if (j.is_array()) {
      if (j.size() != 1) bad("rational scalar " + j.dump() + " has too many coefficients");
      return FieldElement::from_rational(f, rational(j[0]));
    }
    return FieldElement::from_rational(f, rational(j));
  }
  if (!j.is_array()) return FieldElement::from_rational(f, rational(j));
  if (j.empty() || static_cast<int>(j.size()) > f.degree())
    bad("coefficient array " + j.dump() + " does not fit " + f.name());
  std::vector<mpq_class> c;
  for (const auto& x : j) c.push_back(rational(x));
  return FieldElement::from_q_coeffs(f, std::move(c));
}

Json poly_to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(scalar_to_json(c));
  return a;
}

Polynomial poly_from_json(const Json& j, Field f) {
  if (!j.is_array()) bad("polynomial must be an array of scalars");
  std::vector<FieldElement> c;
  for (const auto& x : j) c.push_back(scalar_from_json(x, f));
  return Polynomial(f, std::move(c));
}

Json curve_to_json(const Curve& c) {
  Json j;
  j["field"] = field_to_json(c.field());
  j["coeffs"] = poly_to_json(c.F());
  return j;
}

Curve curve_from_json(const Json& j) {
  const Field f = field_from_json(member(j, "field"));
  const Json& cj = member(j, "coeffs");
  if (!cj.is_array()) bad("coeffs must be an array");
  std::vector<FieldElement> c;
  for (const auto& x : cj) c.push_back(scalar_from_json(x, f));
  return make_curve(std::move(c), f);
}

Json triple_to_json(const Triple& t) {
  Json j;
  j["field"] = field_to_json(t.field());
  const char* names[] = {"u", "v", "w"};
  for (int r = 0; r < 3; ++r) {
    Json a = Json::array();
    for (Index i = 0; i < t.matrix().cols(); ++i) a.push_back(scalar_to_json(t.matrix()(r, i)));
    j[names[r]] = a;
  }
  return j;
}

Triple triple_from_json(const Json& j, const Curve& curve) {
  const Field f = j.is_object() && j.contains("field") ? field_from_json(j["field"]) : curve.field();
  if (!embeds_into(curve.field(), f)) bad("triple field " + f.name() + " does not contain " + curve.field().name());
  const char* names[] = {"u", "v", "w"};
  const Json& first = member(j, "u");
  if (!first.is_array()) bad("u must be an array");
  const Index n = static_cast<Index>(first.size());
  TripleMatrix rows(3, n);
  for (int r = 0; r < 3; ++r) {
    const Json& a = member(j, names[r]);
    if (!a.is_array() || static_cast<Index>(a.size()) != n)
      throw Error(Errc::length_mismatch, std::string("form ") + names[r] + " has the wrong length");
    for (Index i = 0; i < n; ++i) rows(r, i) = scalar_from_json(a[i], f);
  }
  return make_triple(curve, rows);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Field matrix_field(const Json& j, Field f) {
  if (j.is_object() && j.contains("field")) return field_from_json(j["field"]);
  return f;
}

Matrix matrix_from_json(const Json& j, Field f) {
  const Json& rows = j.is_object() ? member(j, "entries") : j;
  f = matrix_field(j, f);
  if (!rows.is_array() || rows.empty()) bad("matrix must be a non-empty array of rows");
  const Index n = static_cast<Index>(rows.size());
  const Index cols = rows[0].is_array() ? static_cast<Index>(rows[0].size()) : 0;
  if (cols == 0) bad("matrix rows must be non-empty arrays");
  Matrix m(n, cols);
  for (Index i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) bad("matrix rows have unequal lengths");
    for (Index k = 0; k < cols; ++k) m(i, k) = scalar_from_json(row[k], f);
  }
  return m;
}

OrthMatrix orth_from_json(const Json& j, Field f) {
  const Matrix m = matrix_from_json(j, f);
  if (m.rows() != 3 || m.cols() != 3) throw Error(Errc::length_mismatch, "orthogonal matrices are 3 x 3");
  return make_orth(Matrix3(m));
}

GramForm gram_from_json(const Json& j, Field f) {
  const Field g = matrix_field(j, f);
  return make_gram(matrix_from_json(j, f), g);
}

Json errc_json(const Error& e) {
  Json j;
  j["error"] = std::string(errc_name(e.code()));
  j["message"] = e.what();
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace hypdiv
