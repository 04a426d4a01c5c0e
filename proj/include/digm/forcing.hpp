// Forcing term signatures.  Both are sampled nodally with the reference
// coordinate and the time of the step's linearization point, so manufactured
// right-hand sides can depend on (rho, t) while the physical models only use
// the state arguments.
#pragma once

#include <functional>

namespace digm {

// f(w, rho, t): normal driving force of the curve.
using ForcingF = std::function<double(double, double, double)>;

// g(v, w, rho, t): solute source, fed the element-local normal velocity v.
using ForcingG = std::function<double(double, double, double, double)>;

}  // namespace digm
