#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hooleyff/field.hpp"
#include "hooleyff/poly.hpp"
#include "hooleyff/tpoly.hpp"

namespace hooleyff {

/// {"p":3,"e":2,"modulus":[1,0,1]}, modulus constant term first.
nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

/// A polynomial is an array of coefficient arrays, constant term first:
/// u^2+1 over F_3 is [[1],[0],[1]]. A bare integer stands for an element of
/// the prime subfield, so [1,0,1] is accepted as well.
nlohmann::json poly_to_json(const Field& f, const Poly& x);
Poly poly_from_json(const Field& f, const nlohmann::json& j);

/// Array of polynomials (coefficients of T^0, T^1, ...). A bare integer
/// coefficient is a constant polynomial.
nlohmann::json tpoly_to_json(const Field& f, const TPoly& x);
TPoly tpoly_from_json(const Field& f, const nlohmann::json& j);

/// Compact JSON text of poly_to_json.
std::string poly_to_string(const Field& f, const Poly& x);

/// Human-readable form such as "u^2+2*u+1". Over extension fields a
/// coefficient other than 0/1 is written {index}.
std::string poly_to_text(const Field& f, const Poly& x);

/// %.12g with negative zero folded to zero.
std::string format_real(double x);

}  // namespace hooleyff
