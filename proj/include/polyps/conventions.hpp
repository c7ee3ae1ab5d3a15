#ifndef POLYPS_CONVENTIONS_HPP
#define POLYPS_CONVENTIONS_HPP

#include <string>

#include "polyps/matrix.hpp"
#include "polyps/scalar.hpp"

namespace polyps {

/// Sign bookkeeping carried in every report. flat and coadjoint state the
/// pairing conventions in force; sigma is the single global constant relating
/// the fibrewise-linear sharp formula to the flat-inverse constructions,
/// measured once on a dual-of-so(3) comparison rather than hardcoded.
struct ConventionLedger {
  std::string flat;       // value convention of the flat map
  std::string coadjoint;  // value convention of the coadjoint action
  int sigma;
};

const ConventionLedger& conventions();

int recorded_sigma();

/// Ratio of two matrices expected to differ by a single global sign; throws
/// when shapes, supports, or entry ratios disagree.
int sign_ratio(const Mat<Q>& a, const Mat<Q>& b);

}  // namespace polyps

#endif
