#pragma once

// Multiplicative sequences of even characteristic series and the Newton
// conversions between Pontryagin classes and Pontryagin characters. With
// formal roots +-x_j, p_i is the i-th elementary symmetric function of the
// x_j^2 and (2k)! ph_k = sum_j x_j^{2k}.

#include "supersdet/graded_polynomial.hpp"
#include "supersdet/series.hpp"

#include <vector>

namespace supersdet {

/// prod_j Q(x_j) in the p_i, truncated at degree 4K. Q must be even with
/// constant term 1.
GradedPolynomial multiplicative_class(const TruncatedSeries& Q, int K,
                                      ClassKind kind = ClassKind::Pontryagin);
/// Degree-4k parts L_1..L_K of multiplicative_class.
std::vector<GradedPolynomial> multiplicative_sequence(const TruncatedSeries& Q, int K);

/// Hirzebruch L-polynomials: multiplicative sequence of x / tanh x.
std::vector<GradedPolynomial> l_polynomials(int K);
/// prod_j (x_j/2)/tanh(x_j/2), the class matched by the superdeterminant.
GradedPolynomial l_class(int K, ClassKind kind);

/// sum_j x_j^{2k} as a polynomial in p_1..p_K.
GradedPolynomial power_sum(int k, int K);
/// Rewrites a polynomial in ph_k as one in p_i.
GradedPolynomial powersums_to_pontryagin(const GradedPolynomial& in_ph);
/// Rewrites a polynomial in p_i as one in ph_k.
GradedPolynomial pontryagin_to_powersums(const GradedPolynomial& in_p);

}  // namespace supersdet
