#ifndef SUPERCONG_POLYNOMIALS_HPP
#define SUPERCONG_POLYNOMIALS_HPP

#include <cstdint>

#include "supercong/rational.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

/// B_n(x) = sum_{k=0..n} C(n,k) B_k x^{n-k}, evaluated term by term on
/// exact rationals. `bern` must hold B_0..B_n.
Rational bernoulli_poly(const SequenceTable& bern, std::uint32_t n, const Rational& x);

/// B_n(x) - B_n = sum_{k=0..n-1} C(n,k) B_k x^{n-k}; the k = n term is
/// never materialized, so the result stays p-integral wherever the
/// difference is, even when B_n itself is not.
Rational bernoulli_poly_diff(const SequenceTable& bern, std::uint32_t n, const Rational& x);

/// E_n(x) = 2^{-n} sum_{r=0..n} C(n,r) (2x-1)^{n-r} E_r. `euler` must hold E_0..E_n.
Rational euler_poly(const SequenceTable& euler, std::uint32_t n, const Rational& x);

enum class EulerForm { A, B };

/// Euler polynomial through Bernoulli polynomials:
///   form A: (2/(n+1)) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
///   form B: (2^{n+1}/(n+1)) (B_{n+1}((x+1)/2) - B_{n+1}(x/2))
/// `bern` must hold B_0..B_{n+1}. Both forms equal euler_poly(n, x).
Rational euler_via_bernoulli(const SequenceTable& bern, std::uint32_t n, const Rational& x,
                             EulerForm form);

// Convenience overloads pulling tables from global_tables().
Rational bernoulli_poly(std::uint32_t n, const Rational& x);
Rational bernoulli_poly_diff(std::uint32_t n, const Rational& x);
Rational euler_poly(std::uint32_t n, const Rational& x);
Rational euler_via_bernoulli(std::uint32_t n, const Rational& x, EulerForm form);

}  // namespace supercong

#endif
