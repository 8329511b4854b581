#include "hooleyff/serialize.hpp"

#include <cstdio>

#include "hooleyff/error.hpp"

namespace hooleyff {

nlohmann::json field_to_json(const Field& f) {
  return {{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

Field field_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto e = j.contains("e") ? j.at("e").get<std::uint32_t>() : 1u;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return Field::create(p, e, modulus);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ConfigParse, std::string("field description: ") + ex.what());
  }
}

namespace {

FieldElem elem_from_json(const Field& f, const nlohmann::json& j) {
  if (j.is_number_integer()) return f.from_integer(j.get<std::int64_t>());
  if (j.is_array()) return f.from_coeffs(j.get<std::vector<std::uint32_t>>());
  throw Error(ErrorCode::ConfigParse, "field element must be an integer or a coefficient array");
}

}  // namespace

nlohmann::json poly_to_json(const Field& f, const Poly& x) {
  auto out = nlohmann::json::array();
  for (const auto& c : x.coeffs()) {
    auto digits = f.coeffs(c);
    while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
    out.push_back(digits);
  }
  return out;
}

Poly poly_from_json(const Field& f, const nlohmann::json& j) {
  if (j.is_number_integer()) return Poly::constant(elem_from_json(f, j));
  if (!j.is_array()) throw Error(ErrorCode::ConfigParse, "polynomial must be an array of coefficients");
  std::vector<FieldElem> c;
  for (const auto& x : j) c.push_back(elem_from_json(f, x));
  return Poly(std::move(c));
}

nlohmann::json tpoly_to_json(const Field& f, const TPoly& x) {
  auto out = nlohmann::json::array();
  for (const auto& c : x.coeffs) out.push_back(poly_to_json(f, c));
  return out;
}

TPoly tpoly_from_json(const Field& f, const nlohmann::json& j) {
  if (j.is_number_integer()) return TPoly::constant(poly_from_json(f, j));
  if (!j.is_array()) throw Error(ErrorCode::ConfigParse, "T-polynomial must be an array of polynomials");
  TPoly out;
  for (const auto& c : j) out.coeffs.push_back(poly_from_json(f, c));
  return out;
}

std::string poly_to_string(const Field& f, const Poly& x) { return poly_to_json(f, x).dump(); }

std::string poly_to_text(const Field& f, const Poly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (int i = x.degree(); i >= 0; --i) {
    const FieldElem c = x.coeff(i);
    if (c.index == 0) continue;
    if (!out.empty()) out += '+';
    const bool unit = c.index == 1;
    std::string coeff = f.e() == 1 || unit ? std::to_string(c.index) : "{" + std::to_string(c.index) + "}";
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (!unit) out += coeff + "*";
    out += i == 1 ? "u" : "u^" + std::to_string(i);
  }
  return out;
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace hooleyff
