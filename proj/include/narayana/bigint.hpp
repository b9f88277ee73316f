#pragma once

#include <gmpxx.h>

namespace narayana {

using BigInt = mpz_class;
using Rational = mpq_class;

}  // namespace narayana
