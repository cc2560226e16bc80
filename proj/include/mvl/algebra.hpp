#ifndef MVL_ALGEBRA_HPP
#define MVL_ALGEBRA_HPP

#include <stdexcept>
#include <string>

#include "mvl/truth_value.hpp"

namespace mvl {

// The three fundamental continuous t-norm families. Each family fixes the
// t-norm, its residuum, the dual t-conorm and its residuum in closed form.
enum class Algebra { Lukasiewicz, Godel, Product };

std::string algebra_name(Algebra a);
Algebra algebra_from_name(const std::string& name);

// T_L = max{0, x+y-1}; T_G = min{x,y}; T_pi = x*y.
TruthValue tnorm(Algebra a, const TruthValue& x, const TruthValue& y);

// x => y: 1 when x <= y; otherwise 1-x+y (L), y (G), y/x (pi).
// At x = 0 the product closed form y/x is undefined but unreachable:
// 0 <= y always takes the first branch, which is what the sup-definition gives.
TruthValue residuum(Algebra a, const TruthValue& x, const TruthValue& y);

// S_L = min{x+y, 1}; S_G = max{x,y}; S_pi = x+y-xy.
TruthValue tconorm(Algebra a, const TruthValue& x, const TruthValue& y);

// x -o y (residuum of the t-conorm): 0 when x >= y; otherwise y-x (L), y (G),
// (y-x)/(1-x) (pi). At x = 1 the product form is undefined but unreachable:
// x = 1 >= y takes the 0 branch. Equals min{z : S(z,x) >= y}.
TruthValue coresiduum(Algebra a, const TruthValue& x, const TruthValue& y);

enum class OracleMode { TnormSup, TconormMin };

// Brute-force extremum over z in {0, 1/n, ..., 1}. TnormSup returns the
// largest grid z with T(z,x) <= y (within 1/n below the true sup); TconormMin
// returns the smallest grid z with S(z,x) >= y (within 1/n above the true min).
TruthValue residuum_oracle(Algebra a, OracleMode mode, const TruthValue& x, const TruthValue& y, long n);

// Gödel/product only: 1 when x > 0, else 0. Equals residuum(residuum(x,0),0).
// Rejected for Lukasiewicz, where ~~x = x and the two-valued bridge is unsound.
TruthValue double_negation(Algebra a, const TruthValue& x);

}  // namespace mvl

#endif
