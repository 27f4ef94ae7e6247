#pragma once

#include <vector>

#include "oiv/rat.hpp"

namespace oiv {

using VecQ = std::vector<Rat>;
using MatQ = std::vector<std::vector<Rat>>;

namespace matq {

MatQ zero(long r, long c);
MatQ identity(long n);
long rows(const MatQ& a);
long cols(const MatQ& a);
MatQ mul(const MatQ& a, const MatQ& b);
VecQ mul_vec(const MatQ& a, const VecQ& v);
MatQ transpose(const MatQ& a);
MatQ add(const MatQ& a, const MatQ& b);
MatQ sub(const MatQ& a, const MatQ& b);
MatQ scaled(const MatQ& a, const Rat& s);
Rat det(MatQ a);
MatQ inverse(const MatQ& a);  // precondition: invertible
long rank(MatQ a);
bool is_symmetric(const MatQ& a);
MatQ congruence(const MatQ& p, const MatQ& a);  // transpose(p) * a * p
VecQ solve(MatQ a, VecQ b);                     // unique solution required

}  // namespace matq
}  // namespace oiv
