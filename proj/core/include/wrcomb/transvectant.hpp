#pragma once

#include "wrcomb/binary_form.hpp"

namespace wrcomb {

// k-th transvectant of E (order e) and F (order f):
//
//   (E, F)_k = ((e-k)! (f-k)!)/(e! f!)
//              * sum_{i=0..k} (-1)^i C(k, i)
//                * d^k E / dx1^(k-i) dx2^i
//                * d^k F / dx1^i dx2^(k-i)
//
// The result has order e + f - 2k. For k > min(e, f) the transvectant is
// identically zero and is returned as the zero form of order 0. Negative k
// is a caller error.
BinaryForm transvectant(const BinaryForm& e, const BinaryForm& f, int k);

} // namespace wrcomb
