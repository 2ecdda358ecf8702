#pragma once

#include <string>

#include "skewcodes/codes.hpp"
#include "skewcodes/semilinear.hpp"

namespace skewcodes {

// Text formats used by descriptor files and the command line.
//
//   field spec   p=2,s=2,mod=x^2+x+1,gen=a     (mod/gen optional, s=1 omits them)
//   element      F_p-polynomial in the generator: "0", "1", "a+1", "2*a^2+1"
//   polynomial   "x^3 + a*x + 1"; multi-term coefficients parenthesized,
//                any term order and whitespace accepted on input
//   matrix       rows split by ';', entries by ',': "0,1,0; 0,0,1; 1,a,0"
//
// Grammar violations raise ParseError; values that parse but name impossible
// objects (reducible modulus, entry out of range) surface as DomainError.

FieldPtr parse_field_spec(const std::string& text);
std::string field_spec_text(const FieldPtr& F);

Field::Rep parse_element(const FieldPtr& F, const std::string& text);
std::string element_text(const FieldPtr& F, Field::Rep a);

SkewPoly parse_poly(const Automorphism& theta, const std::string& text);
std::string poly_text(const SkewPoly& p);

Matrix parse_matrix(const FieldPtr& F, const std::string& text);
std::string matrix_text(const Matrix& M);

RowVec parse_row(const FieldPtr& F, const std::string& text);
std::string row_text(const FieldPtr& F, const RowVec& v);

// Line-oriented code descriptor ('#' starts a comment anywhere):
//   p=2,s=2,mod=x^2+x+1,gen=a
//   t=1
//   f=x^3 + a*x + 1; g=x + a
//   f=...; g=...          (one line per component)
//   C=1,0,0; 0,1,0; 0,0,1 (optional; identity when absent)
ProductTCode parse_code_descriptor(const std::string& text);
std::string code_descriptor_text(const ProductTCode& code);

// Same head, then a single "M=<matrix>" line.
SemiLinearMap parse_map_descriptor(const std::string& text);
std::string map_descriptor_text(const SemiLinearMap& T);

}  // namespace skewcodes
