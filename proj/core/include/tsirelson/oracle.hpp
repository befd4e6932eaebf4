#pragma once

#include "tsirelson/norm_def.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson::oracle {

/// Largest support brute_norm accepts.
inline constexpr std::size_t kMaxSupport = 10;

/// Norm by exhaustive search over admissible trees whose node sets are
/// arbitrary subsets of supp(x). Throws SupportTooLarge above kMaxSupport.
Scalar brute_norm(const FinVec& x, const NormDef& def);

/// |x|_m by enumerating every subset of supp(x) (support <= 16).
Scalar brute_schreier_norm(const FinVec& x, int m);

/// S_n membership by trying every decomposition. |F| <= 12 and n <= 3,
/// otherwise BoundExceeded.
bool brute_member(const FinSet& set, int n);

}  // namespace tsirelson::oracle
