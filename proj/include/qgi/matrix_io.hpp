#pragma once

#include "qgi/qmatrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace qgi {

// Quaternion literal grammar shared by every interface:
//   a + b*i + c*j + d*k
// where each coefficient is an integer or p/q fraction, terms may appear in
// any order, omitted terms mean zero ("-2+3*j", "k", "0"). The '*' between
// a coefficient and its unit is optional on input, always printed on output.
Quaternion parse_quaternion(std::string_view text);
std::string format_quaternion(const Quaternion& q);

// Text format: first line "m n", then m lines of n literals separated by
// ';'. Lines starting with '#' are comments. The JSON alternative
// {"rows":m,"cols":n,"data":[[...]]} holds literals as strings and is
// detected by a leading '{'.
QMatrix parse_matrix(const std::string& content);
QMatrix read_matrix_file(const std::string& path);

std::string format_matrix(const QMatrix& m);      // text form
std::string format_matrix_json(const QMatrix& m); // JSON form

} // namespace qgi
