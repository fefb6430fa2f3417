#pragma once

// Sign constants that mutation-test builds override on the command line.
// Regular builds never define these macros.

#ifndef CDSL_FAULT_QT_SIGN
#define CDSL_FAULT_QT_SIGN (-1)
#endif
#ifndef CDSL_FAULT_TA_SIGN
#define CDSL_FAULT_TA_SIGN (-1)
#endif
#ifndef CDSL_FAULT_STAR_TILDE_SIGN
#define CDSL_FAULT_STAR_TILDE_SIGN (1)
#endif

namespace cdsl::detail {

// alpha_i + qt_sign * alpha_{i+1} in the forward qt map.
inline constexpr int qt_sign = CDSL_FAULT_QT_SIGN;
// zeta^{ta_sign * m a} in the averaging operator T_a.
inline constexpr int ta_sign = CDSL_FAULT_TA_SIGN;
// Overall sign of the logarithmic correction in psi_star_tilde.
inline constexpr int star_tilde_sign = CDSL_FAULT_STAR_TILDE_SIGN;

} // namespace cdsl::detail
