#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nczar {

using Rational = boost::multiprecision::cpp_rational;

}  // namespace nczar
