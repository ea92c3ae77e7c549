#pragma once

#include <optional>

#include "quintic/series.hpp"

namespace quintic {

inline constexpr std::size_t kDefaultExpansionOrder = 24;

enum class ResidueClassKind { Infinity, WeierstrassClass, SquareRootClass };

struct ResidueClass {
    ResidueClassKind kind;
    std::optional<Padic> b;  // the root with a = b^5 (Weierstrass) or a = b^2 (square)
};

/// Which derivation produced a lambda expansion: the closed displayed
/// formulas (binomial series assembled term by term) or an independent
/// derivation from the curve equation (fixed points and Newton solvers).
/// The two must agree; the CLI shows them side by side.
enum class Route { ClosedForm, CurveEquation };

/// Normalized logarithm expansion on one residue class.  The series is the
/// display-normalized one in the Z_p-parameter t:
///
///     multiplier * lambda_omega = sign * pi^{prefactor_tenths} * series(t)
///
/// with T = pi^{uniformizer_scale_tenths} * t relating t to the chart
/// uniformizer T.  Coefficients are (alpha, beta)-linear forms.  When
/// alpha_prime is set, the alpha slot carries alpha' with alpha = p*alpha'.
struct ExpansionResult {
    ResidueClass class_id;
    int p = 0;
    int nu = 0;
    Padic a;
    std::optional<Padic> b;
    int n = 0, mu = 0, rho = 0;  // square-class shape data
    int sign = 1;
    Padic multiplier;
    long prefactor_tenths = 0;
    long uniformizer_scale_tenths = 0;
    bool alpha_prime = false;
    LinearSeries series;
};

/// Class of infinity, uniformizer T = X^2/Y, T = pi^nu t.  Normalized
/// series: beta t + (alpha/3) t^3 + (5 a beta / 11) p^nu t^11 + ...
/// (sign = -1: lambda itself is the negative of the displayed series).
ExpansionResult expand_at_infinity(int p, int nu, const Padic& a,
                                   std::size_t order = kDefaultExpansionOrder,
                                   Route route = Route::ClosedForm,
                                   bool alpha_prime = false);

/// Class of (-b, 0) for nu = 5, a = b^5, uniformizer T = Y = pi^5 t.
/// Normalized series: (alpha - b beta p) t + ((4 alpha - 3 b beta p) p / 15a) t^3 + ...
ExpansionResult expand_at_weierstrass(int p, const Padic& b,
                                      std::size_t order = kDefaultExpansionOrder,
                                      Route route = Route::ClosedForm,
                                      bool alpha_prime = false);

/// Class of (0, b) for even nu, a = b^2, uniformizer T = X = pi^{2 rho} t.
/// Normalized series: alpha t + (beta/2) p^mu t^2 - (alpha/12a) p^rho t^6 - ...
ExpansionResult expand_at_square_class(int p, int nu, const Padic& b,
                                       std::size_t order = kDefaultExpansionOrder,
                                       Route route = Route::ClosedForm,
                                       bool alpha_prime = false);

/// p = 3, v_3(A) = 0, A = a^2 with A = 1 mod 3: expansion at (0, a) on the
/// curve itself with t = x and omega = (3 alpha + beta x) dx / 2y, so that
/// 2a lambda = 3 alpha t + (beta/2) t^2 - (alpha/4A) t^6 - ...
ExpansionResult expand_v3_zero_class(const BigInt& A,
                                     std::size_t order = kDefaultExpansionOrder,
                                     Route route = Route::ClosedForm,
                                     std::optional<Padic> chosen_root = std::nullopt);

/// Residue-class types hit by rational points for A = p^nu a, 1 <= nu <= 9:
/// infinity always, the Weierstrass class when nu = 5 and a is a fifth
/// power, the square-root class when nu is even and a is a square.
std::vector<ResidueClass> residue_classes_for(int p, int nu, const Padic& a);

}  // namespace quintic
