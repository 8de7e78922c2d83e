#pragma once

#include <array>
#include <string>
#include <string_view>

#include "accred/codes.hpp"
#include "accred/feasible_pair.hpp"

namespace accred {

enum class Family { HamAmal, HamExp, HalfSpace, NonlinAmal, PiecewiseAmal };

inline constexpr std::array<Family, 5> kAllFamilies{Family::HamAmal, Family::HamExp,
                                                    Family::HalfSpace, Family::NonlinAmal,
                                                    Family::PiecewiseAmal};

std::string_view family_name(Family f);

// Throws DomainError for unknown names.
Family parse_family(std::string_view name);

// Smallest valid index (1 for HalfSpace, 0 otherwise).
int family_min_index(Family f);

// Throws DomainError for an index below family_min_index.
BinaryCode family_code(Family f, int i);

// Closed-form radius and ĉ of the i'th member.
int family_radius(Family f, int i);
long family_hat_size(Family f, int i);
int family_length(Family f, int i);

// Closed-form (n/k, l/k) of the i'th member's systematic protocol.
FeasiblePair family_pair(Family f, int i);

// The uncoded k+1 storage with the all-ones node: (1, 1/2).
FeasiblePair trivial_pair();

}  // namespace accred
