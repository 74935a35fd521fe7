#pragma once

namespace lfc {

// Largest argument accepted by gamma(). Gamma(171.62...) overflows double;
// the cap is set below that, and every internal use stays under 1 + 33*alpha.
inline constexpr double kGammaMaxArg = 170.0;

// Gamma function on (0, 170], accurate to 1e-13 relative or better.
// Throws DomainError outside the domain.
double gamma(double x);

// log(Gamma(x)) on the same domain.
double log_gamma(double x);

}  // namespace lfc
