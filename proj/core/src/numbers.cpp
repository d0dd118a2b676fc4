#include "forestlab/numbers.hpp"

#include <stdexcept>

namespace forestlab {

RationalInterval exp_neg_enclosure(const Rational& x) {
    if (x < 0) throw std::invalid_argument("exp_neg_enclosure: x must be >= 0");
    const Real v = exp(-Real(x));
    // cpp_bin_float -> cpp_rational is exact; pad by 10^-80 relative.
    const Rational mid(v);
    Rational pad = mid;
    pad /= pow(BigInt(10), 80);
    return RationalInterval{mid - pad, mid + pad};
}

bool certified_greater_than_exp_neg(const Rational& p, const Rational& x) {
    const RationalInterval box = exp_neg_enclosure(x);
    if (p > box.hi) return true;
    if (p < box.lo) return false;
    throw std::runtime_error("exp enclosure too wide to decide comparison");
}

}  // namespace forestlab
