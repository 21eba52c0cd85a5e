#ifndef A4CB_LP_HPP
#define A4CB_LP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "a4cb/linform.hpp"

namespace a4cb {

using Rat = boost::multiprecision::cpp_rational;

// Exact feasibility of { v in R^k : forms[i] . v >= rhs[i] }, v unrestricted.
bool exists_ge(const std::vector<LinForm>& forms, const std::vector<long long>& rhs);

// Does { v : f . v >= 0 for all f } have nonempty interior?  Zero forms are
// vacuous and ignored.
bool cone_has_interior(const std::vector<LinForm>& forms);

// Is g . v >= 0 implied by { f . v >= 0 : f in cone }?
bool valid_on_cone(const LinForm& g, const std::vector<LinForm>& cone);

// Is constraint cone[idx] implied by the remaining ones?
bool redundant_in_cone(const std::vector<LinForm>& cone, size_t idx);

// An integer point v with forms[i] . v >= 1 for all i, if one exists.
std::optional<IntVec> interior_point(const std::vector<LinForm>& forms);

}  // namespace a4cb

#endif
