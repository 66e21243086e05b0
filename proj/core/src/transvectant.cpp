#include "wrcomb/transvectant.hpp"

#include "wrcomb/errors.hpp"

#include <algorithm>

namespace wrcomb {

BinaryForm transvectant(const BinaryForm& e, const BinaryForm& f, int k) {
    if (k < 0)
        throw PreconditionError("negative transvectant index");
    int eo = e.order(), fo = f.order();
    if (k > std::min(eo, fo))
        return BinaryForm(0);

    BinaryForm acc(eo + fo - 2 * k);
    for (int i = 0; i <= k; ++i) {
        Rational c = Rational::binomial(static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(i));
        if (i % 2 != 0)
            c = -c;
        acc += c * (e.derivative(k - i, i) * f.derivative(i, k - i));
    }
    Rational pre =
        (Rational::factorial(static_cast<unsigned long>(eo - k))
         * Rational::factorial(static_cast<unsigned long>(fo - k)))
        / (Rational::factorial(static_cast<unsigned long>(eo))
           * Rational::factorial(static_cast<unsigned long>(fo)));
    return pre * acc;
}

} // namespace wrcomb
