#pragma once

#include <gmpxx.h>

#include <string>

namespace nb {

using Scalar = mpq_class;

// "p/q" or "p"; accepts a leading '-' and surrounding blanks
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& x);

// q^e for integer e (q != 0 when e < 0)
Scalar power(const Scalar& q, long e);

// [k] = q^{k-1} + q^{k-3} + ... + q^{-k+1}; throws ZeroQ at q = 0
Scalar gaussian_int(long k, const Scalar& q);

}  // namespace nb
