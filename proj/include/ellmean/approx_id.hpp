#pragma once

namespace ellmean {

/// The eight approximations of (2/pi) E(r) catalogued in the comparison
/// tables, evaluated at x = r'.
enum class ApproxId { A1, A2, A3, A4, A5, A6, A7, A8 };

inline constexpr ApproxId all_approx_ids[] = {
    ApproxId::A1, ApproxId::A2, ApproxId::A3, ApproxId::A4,
    ApproxId::A5, ApproxId::A6, ApproxId::A7, ApproxId::A8};

const char* to_string(ApproxId id);

}  // namespace ellmean
