#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "balgf/bigpoly.hpp"

namespace balgf::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Families accepted by `coeffs` and `gf`: f g F G Fbar Gbar H Hbar R bad good.
const std::vector<std::string>& family_names();

/// Throws std::invalid_argument / std::out_of_range for an unknown family or a bad k.
RatFunc family_function(std::string_view family, int k);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace balgf::cli
