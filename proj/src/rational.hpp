/*
   Copyright 2026 quatpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace quatpol {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, canonical form (lowest terms, positive denominator) is
// maintained by the backend. This is the center of the scalar ring.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

}  // namespace quatpol
